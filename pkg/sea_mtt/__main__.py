"""
Entry point for running sea_mtt as a module.

Usage: python -m sea_mtt
"""

from sea_mtt.cli import main

if __name__ == "__main__":
    main()
