"""Integral parabolic subgroups of orthogonal groups of even lattices.

Lattices are given either as a fixture name ("FIX-G3", ...) or as a Gram
matrix (list of integer rows). Sublattices and complements are n×k lists of
rows whose columns span the lattice. Rational entries may be ``int``,
``fractions.Fraction`` or strings such as ``"1/2"``; every rational in a
result comes back as a ``Fraction``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Sequence

from . import _parablat
from ._parablat import (
    Error,
    InputError,
    InvariantError,
    NotInParabolic,
    NotIntegral,
    PreconditionError,
)

__all__ = [
    "Error", "InputError", "InvariantError", "NotInParabolic", "NotIntegral", "PreconditionError",
    "fixture_names", "fixture", "analyze", "frame", "decompose_vector", "decompose_element",
    "assemble", "member", "complete_to_element", "heis", "cocycle", "boundary", "selfcheck",
    "parse_rational",
]

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def _encode(x: Any) -> Any:
    if isinstance(x, bool):
        raise InputError("booleans are not rationals")
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_encode(v) for v in x]
    if isinstance(x, dict):
        return {k: _encode(v) for k, v in x.items()}
    return x


def _decode(x: Any) -> Any:
    if isinstance(x, str) and _RATIONAL.match(x):
        return Fraction(x)
    if isinstance(x, list):
        return [_decode(v) for v in x]
    if isinstance(x, dict):
        return {k: (v if k == "name" else _decode(v)) for k, v in x.items()}
    return x


def _dumps(x: Any) -> str:
    return json.dumps(_encode(x))


def _lattice(lattice: str | Sequence[Sequence[int]]) -> str:
    if isinstance(lattice, str):
        return json.dumps({"fixture": lattice})
    gram = [[int(v) for v in row] for row in lattice]
    return json.dumps({"name": "L", "gram": gram})


def _frame(sublattice, complement) -> str:
    return _dumps({
        "sublattice": None if sublattice is None else {"basis": sublattice},
        "complement": None if complement is None else {"basis": complement},
    })


def _coords(coords: dict) -> str:
    return _dumps({k: coords[k] for k in ("M", "gamma", "psi", "eta")})


def parse_rational(text: str) -> Fraction:
    return Fraction(_parablat.parse_rational(text))


def fixture_names() -> list[str]:
    return list(_parablat.fixture_names())


def fixture(name: str) -> dict:
    return _decode(json.loads(_parablat.fixture(name)))


def analyze(lattice, sublattice=None) -> dict:
    sub = "" if sublattice is None else _dumps({"basis": sublattice})
    return _decode(json.loads(_parablat.analyze(_lattice(lattice), sub)))


def frame(lattice, sublattice=None, complement=None) -> dict:
    return _decode(json.loads(_parablat.frame(_lattice(lattice), _frame(sublattice, complement))))


def decompose_vector(lattice, vector, sublattice=None, complement=None) -> dict:
    out = _parablat.decompose_vector(_lattice(lattice), _frame(sublattice, complement), _dumps(list(vector)))
    return _decode(json.loads(out))


def decompose_element(lattice, element, sublattice=None, complement=None) -> dict:
    out = _parablat.decompose_element(_lattice(lattice), _frame(sublattice, complement), _dumps(element))
    return _decode(json.loads(out))


def assemble(lattice, coords: dict, sublattice=None, complement=None) -> list[list[Fraction]]:
    out = _parablat.assemble(_lattice(lattice), _frame(sublattice, complement), _coords(coords))
    return _decode(json.loads(out))


def member(lattice, coords: dict, sublattice=None, complement=None) -> dict:
    out = _parablat.member(_lattice(lattice), _frame(sublattice, complement), _coords(coords))
    return _decode(json.loads(out))


def complete_to_element(lattice, M, gamma, sublattice=None, complement=None) -> dict:
    out = _parablat.complete_to_element(_lattice(lattice), _frame(sublattice, complement), _dumps(M), _dumps(gamma))
    return _decode(json.loads(out))


def heis(lattice, psi, eta, sublattice=None, complement=None) -> dict:
    out = _parablat.heis(_lattice(lattice), _frame(sublattice, complement), _dumps(psi), _dumps(eta))
    return _decode(json.loads(out))


def cocycle(lattice, matrices, sublattice=None, complement=None) -> dict:
    out = _parablat.cocycle(_lattice(lattice), _frame(sublattice, complement), _dumps(list(matrices)))
    return _decode(json.loads(out))


def boundary(lattice, sublattice=None, complement=None) -> dict:
    return _decode(json.loads(_parablat.boundary(_lattice(lattice), _frame(sublattice, complement))))


def selfcheck(seed: int | None = None, scale: float = 1.0, acceptance_only: bool = False) -> list[dict]:
    kwargs = {"scale": scale, "acceptance_only": acceptance_only}
    if seed is not None:
        kwargs["seed"] = seed
    return json.loads(_parablat.selfcheck(**kwargs))
