"""
SEA MTT - Maximum Torque Transmissibility of Series Elastic Actuators.

This package provides a library and a CLI tool that compute the torque- and
velocity-based MTT of an SEA, derive the maximum torque bandwidth, sweep design
parameters and cross-check the predictions against a time-domain simulation.
"""

__version__ = "0.1.0"
__author__ = "SEA MTT Contributors"
