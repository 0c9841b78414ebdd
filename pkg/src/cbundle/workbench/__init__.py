"""Configuration, presets and command dispatch."""

from .config import COMMANDS, RunConfig, emit_config, parse_config
from .presets import PRESETS, load_preset, preset_names
from .runner import Report, report_csv, run

__all__ = ["COMMANDS", "PRESETS", "Report", "RunConfig", "emit_config", "load_preset",
           "parse_config", "preset_names", "report_csv", "run"]
