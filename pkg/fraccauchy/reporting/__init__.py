"""CSV and text output of solver fields and validation reports."""

from .csv_writer import field_header, format_value, render_csv, write_field_csv, write_values_csv
from .text_reporter import TextReporter

__all__ = [
    'TextReporter',
    'field_header',
    'format_value',
    'render_csv',
    'write_field_csv',
    'write_values_csv',
]
