"""Exact phase-space quantization toolkit.

Thin wrapper over the C++ core: star products, deformed brackets, quantum
flows and intertwining operators, all in exact rational arithmetic. Series
cross the boundary as canonical text; reports as JSON.
"""

import json as _json

from ._phasestar import (
    PhasestarError,
    evolve,
    flow,
    moyal_bracket,
    normalize,
    poisson_bracket,
    run_scenario_file,
    run_scenario_text,
    solve_intertwiner,
    star,
)

__version__ = "1.0.0"

__all__ = [
    "PhasestarError",
    "evolve",
    "flow",
    "moyal_bracket",
    "normalize",
    "poisson_bracket",
    "run_scenario",
    "run_scenario_file",
    "run_scenario_text",
    "solve_intertwiner",
    "star",
]


def run_scenario(scenario):
    """Run a scenario given as a dict, text, or path; returns the report dict.

    Dicts use the scenario file keys (integers may be native ints, lists may
    be native lists of strings).
    """
    if isinstance(scenario, dict):
        return _json.loads(run_scenario_text(_json.dumps(scenario)))
    text = str(scenario)
    if "=" in text or text.lstrip().startswith("{"):
        return _json.loads(run_scenario_text(text))
    return _json.loads(run_scenario_file(text))
