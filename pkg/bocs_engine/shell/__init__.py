from bocs_engine.shell.exporters import emit_dot, emit_log_json, emit_log_table
from bocs_engine.shell.fixtures import (
    Fixture,
    FixtureRegistry,
    load_algebra,
    load_bocs,
    load_script,
    read_settings,
)
from bocs_engine.shell.parsers import (
    emit_algebra,
    emit_bocs,
    emit_script,
    parse_algebra,
    parse_bocs,
    parse_element,
    parse_script,
)

__all__ = [
    "Fixture",
    "FixtureRegistry",
    "emit_algebra",
    "emit_bocs",
    "emit_dot",
    "emit_log_json",
    "emit_log_table",
    "emit_script",
    "load_algebra",
    "load_bocs",
    "load_script",
    "parse_algebra",
    "parse_bocs",
    "parse_element",
    "parse_script",
    "read_settings",
]
