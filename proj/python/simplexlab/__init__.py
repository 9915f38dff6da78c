"""Exact-arithmetic simplex workbench.

Instances, traces and reports are plain dicts following the JSON file
formats of the command-line tool. Rationals appear as "p/q" strings; use
:func:`fraction` to convert them.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Any, Iterable, Mapping

from . import _core
from ._core import Error

__all__ = [
    "Error",
    "analyze",
    "dmdp",
    "dmdp_bound",
    "experiment",
    "fraction",
    "klee_minty",
    "load",
    "random_lp",
    "solve",
    "verify",
]

Instance = Mapping[str, Any]


def _text(doc: Instance | str | os.PathLike) -> str:
    if isinstance(doc, Mapping):
        return json.dumps(doc)
    with open(doc, encoding="utf-8") as fh:
        return fh.read()


def fraction(value: str | int) -> Fraction:
    return Fraction(value)


def load(path: str | os.PathLike) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def klee_minty(m: int) -> dict:
    return json.loads(_core.klee_minty(m))


def random_lp(m: int, n: int, seed: int, lo: int = -9, hi: int = 9) -> dict:
    return json.loads(_core.random_lp(m, n, seed, lo, hi))


def dmdp(m: int, k: int, theta: str | Fraction, seed: int) -> dict:
    return json.loads(_core.dmdp(m, k, str(theta), seed))


def dmdp_bound(m: int, n: int, theta: str | Fraction, p: int | str) -> int:
    return int(_core.dmdp_bound(m, n, str(theta), str(p)))


def solve(instance, rule: str = "dantzig", initial: Iterable[int] | None = None,
          max_iters: int | None = None) -> dict:
    """Run the simplex method; `initial` is a 1-based basis."""
    init = list(initial) if initial is not None else None
    return json.loads(_core.solve(_text(instance), rule, init, max_iters))


def analyze(instance, p: int | str = 2, initial: Iterable[int] | None = None,
            budget: int = 2_000_000) -> dict:
    init = list(initial) if initial is not None else None
    return json.loads(_core.analyze(_text(instance), str(p), init, budget))


def verify(instance, trace: Mapping[str, Any], budget: int = 2_000_000) -> dict:
    return json.loads(_core.verify(_text(instance), json.dumps(trace), budget))


def experiment(config, base_dir: str | os.PathLike = "", as_csv: bool = True):
    """Returns (table, all_checks_pass). The table is CSV text or a list of row dicts."""
    if not isinstance(config, Mapping):
        base_dir = base_dir or os.path.dirname(os.fspath(config))
    table, ok = _core.experiment(_text(config), os.fspath(base_dir), as_csv)
    return (table if as_csv else json.loads(table)), ok
