"""The four small reference systems used throughout the tests and docs.

F1: one atom v and one letter a with theta_a(v) = v (a single loop).
F2: one atom v and two letters a, b both fixing v (two loops).
F3: atoms 1, 2 and one letter a swapping them.
F4: atoms 1, 2 and one letter a with theta_a(1) = 2, theta_a(2) = 0.
"""
from __future__ import annotations

from .dynamics import Gbds
from .lattice import Algebra


def f1() -> Gbds:
    alg = Algebra(("v",))
    return Gbds(alg, ("a",), {"a": [alg.from_names("v")]}, {"a": alg.top})


def f2() -> Gbds:
    alg = Algebra(("v",))
    v = alg.from_names("v")
    return Gbds(alg, ("a", "b"), {"a": [v], "b": [v]}, {"a": alg.top, "b": alg.top})


def f3() -> Gbds:
    alg = Algebra(("1", "2"))
    return Gbds(alg, ("a",), {"a": [alg.from_names("2"), alg.from_names("1")]}, {"a": alg.top})


def f4() -> Gbds:
    alg = Algebra(("1", "2"))
    return Gbds(alg, ("a",), {"a": [alg.from_names("2"), alg.bottom]}, {"a": alg.top})


FIXTURES = {"F1": f1, "F2": f2, "F3": f3, "F4": f4}
