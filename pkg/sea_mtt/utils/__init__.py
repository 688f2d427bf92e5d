"""Utility modules."""

from sea_mtt.utils.output import (
    success,
    error,
    warning,
    info,
    print_table,
    print_fields,
    print_json,
    Spinner,
)

__all__ = [
    "success",
    "error",
    "warning",
    "info",
    "print_table",
    "print_fields",
    "print_json",
    "Spinner",
]
