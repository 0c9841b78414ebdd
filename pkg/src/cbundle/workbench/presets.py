"""Shipped example configurations."""

from __future__ import annotations

from .config import COMMANDS, RunConfig, config_from_dict

_FLAG_COMMANDS = list(COMMANDS)
_MATRIX_COMMANDS = ["check-standard", "check-hyperbolic", "spectrum", "solve-eq9", "simulate-orbits"]

PRESETS: dict[str, dict] = {
    # P^1 x P^1, scalar lambda: S^3 x S^3
    "calabi-eckmann-p1p1": {
        "factor1": {"series": "A", "rank": 1, "omega": [1]},
        "factor2": {"series": "A", "rank": 1, "omega": [1]},
        "lambda": {"semisimple": ["1", "1", "i", "i"]},
        "experiment": {"seed": 0, "samples": 200},
        "commands": _FLAG_COMMANDS,
    },
    # G_2(C^4) x P^3
    "grassmannian-24-p3": {
        "factor1": {"series": "A", "rank": 3, "omega": [0, 1, 0]},
        "factor2": {"series": "A", "rank": 3, "omega": [1, 0, 0]},
        "lambda": {"semisimple": ["1", "1", "1", "1", "i", "i", "i", "i"]},
        "experiment": {"seed": 0, "samples": 50},
        "commands": _FLAG_COMMANDS,
    },
    # G_2(C^4) x P^1
    "grassmannian-24-p1": {
        "factor1": {"series": "A", "rank": 3, "omega": [0, 1, 0]},
        "factor2": {"series": "A", "rank": 1, "omega": [1]},
        "lambda": {"semisimple": ["1", "1", "1", "1", "i", "i"]},
        "experiment": {"seed": 0, "samples": 50},
        "commands": _FLAG_COMMANDS,
    },
    # full flags of C^3 (non-maximal parabolic) x P^1
    "flag-a2": {
        "factor1": {"series": "A", "rank": 2, "omega": [1, 1]},
        "factor2": {"series": "A", "rank": 1, "omega": [1]},
        "lambda": {"semisimple": ["1", "2", "1", "1+i", "i"]},
        "experiment": {"seed": 0, "samples": 30},
        "commands": _FLAG_COMMANDS,
    },
    # (C^2 - 0) x C*, both with coordinate torus actions: S^3 x S^1
    "hopf": {
        "factor1": {"exponent_matrix": [[1, 0], [0, 1]]},
        "factor2": {"exponent_matrix": [[1]]},
        "lambda": {"semisimple": ["1", "1", "i"]},
        "experiment": {"seed": 0, "samples": 50},
        "commands": _MATRIX_COMMANDS,
    },
}


def preset_names() -> list[str]:
    return sorted(PRESETS)


def load_preset(name: str) -> RunConfig:
    try:
        data = PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; available: {', '.join(preset_names())}") from None
    return config_from_dict(data)
