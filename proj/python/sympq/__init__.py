"""Exact symplectic P- and Q-functions (Python front end to the C++ core)."""

import json
from fractions import Fraction

from . import _core
from ._core import DomainError, ParseError, laurent_Q, pieri_coefficient, tableau_count, usymp_P, usymp_Q

__all__ = [
    "DomainError",
    "ParseError",
    "cli",
    "expand",
    "laurent_Q",
    "pieri_coefficient",
    "structure_constants",
    "tableau_count",
    "to_basis",
    "usymp_P",
    "usymp_Q",
    "verify",
]


def _as_dict(rows):
    return {tuple(parts): Fraction(int(num), int(den)) for parts, num, den in rows}


def cli(*args):
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""
    return _core.cli([str(a) for a in args])


def structure_constants(mu, nu):
    """P^C_mu * P^C_nu in the P^C basis, as {partition: Fraction}."""
    return _as_dict(_core.structure_constants(list(mu), list(nu)))


def to_basis(lam, source, target):
    return _as_dict(_core.to_basis(list(lam), source, target))


def expand(product, basis="sympP"):
    code, out, err = cli("expand", product, "--basis", basis, "--format", "json")
    if code != 0:
        raise ValueError(err.strip())
    data = json.loads(out)
    return {tuple(c["partition"]): Fraction(int(c["num"]), int(c["den"])) for c in data["coeffs"]}


def verify(theorem, **bounds):
    """Run a verify suite; keyword arguments become --flag value pairs."""
    args = ["verify", theorem, "--format", "json"]
    for key, value in bounds.items():
        args += ["--" + key.replace("_", "-"), str(value)]
    code, out, err = cli(*args)
    if code not in (0, 1):
        raise ValueError(err.strip())
    return json.loads(out)
