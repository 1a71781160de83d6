"""Python bindings for the cobord C++ core."""
import json

from ._cobord import (
    CapacityError,
    ConfigError,
    IntegralityError,
    WindowError,
    __version__,
    claim_ids,
    euler_identity,
    extraspecial_dimensions,
    formal_sum_consistent,
    lemma64,
    obstruction,
    resolution_exact,
    skeleton_presentation,
    sq,
    sq3_w4_bso4,
    tensor_unit_skeleton,
    tor1_random_vs_skeleton,
    tor_constraints,
    torsion_shift_passes,
    two_series,
    two_series_text,
)
from ._cobord import run as _run


def run(command="verify", config=None, n=None, oracle=False, check=""):
    """Run a report command; config values may be given as numbers or strings."""
    cfg = {key: str(value) for key, value in (config or {}).items()}
    return json.loads(_run(command, cfg, n, oracle, check))


__all__ = [
    "CapacityError",
    "ConfigError",
    "IntegralityError",
    "WindowError",
    "__version__",
    "claim_ids",
    "euler_identity",
    "extraspecial_dimensions",
    "formal_sum_consistent",
    "lemma64",
    "obstruction",
    "resolution_exact",
    "run",
    "skeleton_presentation",
    "sq",
    "sq3_w4_bso4",
    "tensor_unit_skeleton",
    "tor1_random_vs_skeleton",
    "tor_constraints",
    "torsion_shift_passes",
    "two_series",
    "two_series_text",
]
