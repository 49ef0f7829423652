"""Deformations of Stanley-Reisner schemes."""

import json

from ._srdef import (
    Complex,
    SrdefError,
    b_set,
    degree_zero_totals,
    krull_dimension,
    load,
    oracle_dim,
    p_series,
    run_cli,
    surface_t1_projective,
    t_dim,
    versal_variables,
)


def cli_json(*args):
    """Run a command with --format json and return (exit code, parsed output)."""
    code, out, _ = run_cli([*map(str, args), "--format", "json"])
    return code, json.loads(out)


__all__ = [
    "Complex",
    "SrdefError",
    "b_set",
    "cli_json",
    "degree_zero_totals",
    "krull_dimension",
    "load",
    "oracle_dim",
    "p_series",
    "run_cli",
    "surface_t1_projective",
    "t_dim",
    "versal_variables",
]
