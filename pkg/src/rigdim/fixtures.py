"""Small algebras used throughout the tests and demos."""
from __future__ import annotations

from .exactla import QQ, FieldSpec
from .quiveralg import Algebra, Quiver, build_algebra, direct_product, parse_relation


def _make(field, vertices, arrows, relations, name) -> Algebra:
    quiver = Quiver.from_names(vertices, arrows)
    return build_algebra(field, quiver, [parse_relation(r) for r in relations], name=name)


def a2(field: FieldSpec = QQ) -> Algebra:
    """Path algebra of ``1 -> 2``: upper triangular 2x2 matrices."""
    return _make(field, ["1", "2"], [("alpha", "1", "2")], [], "A2")


def cyc2(field: FieldSpec = QQ) -> Algebra:
    """Two-cycle ``1 <-> 2`` with both length-two paths zero."""
    return _make(field, ["1", "2"], [("alpha", "1", "2"), ("beta", "2", "1")], ["alpha*beta", "beta*alpha"], "CYC2")


def dual_numbers(field: FieldSpec = QQ) -> Algebra:
    """``k[x]/(x^2)``."""
    return _make(field, ["1"], [("x", "1", "1")], ["x*x"], "DUAL")


def truncated(n: int, field: FieldSpec = QQ) -> Algebra:
    """``k[x]/(x^n)``."""
    return _make(field, ["1"], [("x", "1", "1")], ["*".join(["x"] * n)], f"X{n}")


def x3(field: FieldSpec = QQ) -> Algebra:
    return truncated(3, field)


def a3(field: FieldSpec = QQ) -> Algebra:
    """Path algebra of ``1 -> 2 -> 3``."""
    return _make(field, ["1", "2", "3"], [("alpha", "1", "2"), ("beta", "2", "3")], [], "A3")


def a3r(field: FieldSpec = QQ) -> Algebra:
    """``1 -> 2 -> 3`` with the composite path zero."""
    return _make(field, ["1", "2", "3"], [("alpha", "1", "2"), ("beta", "2", "3")], ["alpha*beta"], "A3R")


def nakayama_cycle(e: int, field: FieldSpec = QQ) -> Algebra:
    """Cyclic quiver on ``e`` vertices with radical square zero."""
    vertices = [str(i) for i in range(1, e + 1)]
    arrows = [(f"a{i}", str(i), str(i % e + 1)) for i in range(1, e + 1)]
    relations = [f"a{i}*a{i % e + 1}" for i in range(1, e + 1)]
    return _make(field, vertices, arrows, relations, f"NAK{e}")


def t2_squared(field: FieldSpec = QQ) -> Algebra:
    return direct_product(a2(field), a2(field), name="A2xA2")


def dual_squared(field: FieldSpec = QQ) -> Algebra:
    return direct_product(dual_numbers(field), dual_numbers(field), name="DUALxDUAL")


FIXTURES = {
    "A2": a2,
    "CYC2": cyc2,
    "DUAL": dual_numbers,
    "A3": a3,
    "A3R": a3r,
    "X3": x3,
}
