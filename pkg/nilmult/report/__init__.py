"""
Text and JSON presentation of results.
"""
from nilmult.report.dashboard import (
    make_console, create_witt_table, create_hall_table, create_multiplier_panel,
    create_classification_table, create_exponent_table, create_summary_table,
    render_report, display_error,
)
from nilmult.report.export import dumps, loads, order_payload, structure_payload, partition_payload

__all__ = [
    "make_console", "create_witt_table", "create_hall_table", "create_multiplier_panel",
    "create_classification_table", "create_exponent_table", "create_summary_table",
    "render_report", "display_error",
    "dumps", "loads", "order_payload", "structure_payload", "partition_payload",
]
