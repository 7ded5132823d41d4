from .table_generator import (table_to_frame, compare_tables, moments_to_frame,
                              series_to_frame, atoms_to_frame, write_table)
from .json_generator import series_to_dict, build_json, write_json, SCHEMA_VERSION


__all__ = ['table_to_frame', 'compare_tables', 'moments_to_frame', 'series_to_frame',
           'atoms_to_frame', 'write_table', 'series_to_dict', 'build_json', 'write_json',
           'SCHEMA_VERSION']
