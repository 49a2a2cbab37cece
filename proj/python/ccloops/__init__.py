"""Chein loops of Coxeter groups, their automorphisms, edge-complex
cohomology and amalgams."""

import json as _json

from ._core import (
    DEFAULT_BUDGET,
    DEFAULT_CAP,
    INFINITY,
    CclError,
    CoxeterDiagram,
    DiagramError,
    Group,
    Loop,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    alternating4,
    automorphism_group_order,
    automorphisms,
    chein_consequences,
    chein_loop,
    classify_amalgams,
    classify_trichotomy,
    coefficient_groups,
    cohomology,
    cyclic,
    dihedral,
    enumerate_group,
    group_from_table,
    is_associative,
    is_moufang,
    quaternion8,
)
from ._core import run as _run


def run(command, text, **options):
    """Run a CLI command on input text. Returns (exit_code, report dict)."""
    code, out = _run(command, text, json=True, **options)
    return code, _json.loads(out)


__all__ = [name for name in dir() if not name.startswith("_")]
