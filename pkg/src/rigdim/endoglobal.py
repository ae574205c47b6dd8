"""Endomorphism algebras ``E = End(M)`` and their homological invariants.

``gldim E`` is computed twice: by resolving the simple functors with right
``add(M)``-approximations inside the module category of ``A``, and directly
over the structure-constant algebra ``E``.  ``domdim E`` is computed over
``E``; comparing it with ``evd(M) + 2`` gives the Mueller cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .exactla import Coordinates, rank_of_columns
from .homological import (
    DEFAULT_CUTOFF,
    ValueWithStatus,
    dominant_dimension,
    global_dimension,
    rigidity_degree,
    vws_max,
)
from .quiveralg import Algebra, Arrow, BasisElement
from .repmod import (
    InconclusiveError,
    ModuleError,
    ModuleMap,
    Representation,
    UnsupportedCharacteristic,
    endomorphism_radical,
    hom_basis,
    injective,
    is_isomorphic,
    kernel_of,
    map_from_summands,
    projective,
)


class SplitnessError(ModuleError):
    """Some ``End(X)/rad`` is bigger than the ground field."""


class NonBasicInput(ModuleError):
    pass


class NotGenerator(ModuleError):
    pass


class NotGeneratorCogenerator(ModuleError):
    pass


class EndoAlgebra(Algebra):
    """``End(X_1 + ... + X_r)`` with ``e_i E e_j = Hom(X_i, X_j)``.

    The product is ``u * v = v o u``.  Every radical basis element is a
    generator, so modules over ``E`` carry one matrix per radical basis element.
    """

    summands: Tuple[Representation, ...]
    maps: Tuple[ModuleMap, ...]
    radical: Tuple[int, ...]

    def map_of(self, k: int) -> ModuleMap:
        return self.maps[k]


def _hom_cache(summands: Sequence[Representation]) -> Dict[Tuple[int, int], list]:
    return {(i, j): hom_basis(X, Y).basis for i, X in enumerate(summands) for j, Y in enumerate(summands)}


def endo_algebra(summands: Sequence[Representation], seed: int = 0) -> EndoAlgebra:
    summands = list(summands)
    if not summands:
        raise ModuleError("at least one summand required")
    base = summands[0].algebra
    if any(X.algebra is not base for X in summands):
        raise ModuleError("summands over different algebras")
    if any(X.is_zero() for X in summands):
        raise ModuleError("zero summand")
    field = base.field
    for a in range(len(summands)):
        for b in range(a + 1, len(summands)):
            r = is_isomorphic(summands[a], summands[b], seed=seed)
            if r.status == "inconclusive":
                raise InconclusiveError(f"cannot decide whether {summands[a].label} ~ {summands[b].label}")
            if r:
                raise NonBasicInput(f"{summands[a].label} and {summands[b].label} are isomorphic")
    homs = _hom_cache(summands)
    total = sum(len(v) for v in homs.values())
    if field.p and field.p <= total:
        raise UnsupportedCharacteristic(f"characteristic {field.p} <= dim E = {total}")

    n = len(summands)
    blocks: Dict[Tuple[int, int], List[int]] = {}
    basis: List[BasisElement] = []
    maps: List[ModuleMap] = []
    for i, X in enumerate(summands):
        basis.append(BasisElement((), i, i))
        maps.append(ModuleMap.identity(X))
        blocks[(i, i)] = [i]
    gens: List[Arrow] = []
    radical: List[int] = []

    def add_generator(i, j, f):
        g = len(gens)
        gens.append(Arrow(f"r{g}", i, j))
        blocks.setdefault((i, j), []).append(len(basis))
        radical.append(len(basis))
        basis.append(BasisElement((g,), i, j))
        maps.append(f)

    for i, X in enumerate(summands):
        H, rad = endomorphism_radical(X)
        if H.dim - len(rad) != 1:
            raise SplitnessError(f"End({X.label}) modulo its radical has dimension {H.dim - len(rad)}")
        for f in rad:
            add_generator(i, i, f)
    for i in range(n):
        for j in range(n):
            if i != j:
                for f in homs[(i, j)]:
                    add_generator(i, j, f)

    coords = {}
    for (i, j), idx in blocks.items():
        length = sum(a * b for a, b in zip(summands[i].dims, summands[j].dims))
        coords[(i, j)] = Coordinates(field, [maps[k].vector() for k in idx], length)
    mult = {}
    for u, bu in enumerate(basis):
        for v, bv in enumerate(basis):
            if bu.target != bv.source:
                continue
            comp = maps[u].then(maps[v])
            key = (bu.source, bv.target)
            if key not in coords:
                if not comp.is_zero():
                    raise ModuleError("composition outside the computed hom spaces")
                continue
            c = coords[key](comp.vector())
            terms = tuple((blocks[key][k], x) for k, x in enumerate(c) if x != 0)
            if terms:
                mult[(u, v)] = terms
    labels = [X.label or f"X{i + 1}" for i, X in enumerate(summands)]
    E = EndoAlgebra(field, labels, gens, basis, mult, name="End(" + "+".join(labels) + ")")
    E.summands = tuple(summands)
    E.maps = tuple(maps)
    E.radical = tuple(radical)
    return E


def basic_summands(summands: Sequence[Representation], seed: int = 0) -> List[Representation]:
    """Drop repeated summands (up to certified isomorphism)."""
    out: List[Representation] = []
    for X in summands:
        dup = False
        for Y in out:
            r = is_isomorphic(X, Y, seed=seed)
            if r.status == "inconclusive":
                raise InconclusiveError(f"cannot decide whether {X.label} ~ {Y.label}")
            if r:
                dup = True
                break
        if not dup:
            out.append(X)
    return out


def _contains(summands: Sequence[Representation], X: Representation, seed: int) -> bool:
    for Y in summands:
        r = is_isomorphic(X, Y, seed=seed)
        if r.status == "inconclusive":
            raise InconclusiveError(f"cannot decide whether {X.label} ~ {Y.label}")
        if r:
            return True
    return False


def check_generator(summands: Sequence[Representation], seed: int = 0) -> None:
    alg = summands[0].algebra
    for i in range(alg.n_vertices):
        if not _contains(summands, projective(alg, i), seed):
            raise NotGenerator(f"P{alg.vertices[i]} is not a summand")


def check_generator_cogenerator(summands: Sequence[Representation], seed: int = 0) -> None:
    alg = summands[0].algebra
    for i in range(alg.n_vertices):
        if not _contains(summands, projective(alg, i), seed):
            raise NotGeneratorCogenerator(f"P{alg.vertices[i]} is not a summand")
        if not _contains(summands, injective(alg, i), seed):
            raise NotGeneratorCogenerator(f"I{alg.vertices[i]} is not a summand")


# -- approximation route ------------------------------------------------------

class _Approximations:
    """Minimal right ``add(M)``-approximations by greedy pruning of hom bases."""

    def __init__(self, summands: Sequence[Representation]):
        self.summands = list(summands)
        self.homs = _hom_cache(self.summands)

    def minimize(self, maps: List[Tuple[int, ModuleMap]]) -> List[Tuple[int, ModuleMap]]:
        keep = list(maps)
        k = 0
        while k < len(keep):
            j, f = keep[k]
            others = []
            for l, (jl, fl) in enumerate(keep):
                if l == k:
                    continue
                for h in self.homs[(j, jl)]:
                    others.append(h.then(fl).vector())
            length = len(f.vector())
            field = f.field
            if others and rank_of_columns(field, others + [f.vector()], length) == rank_of_columns(field, others, length):
                del keep[k]
            else:
                k += 1
        return keep

    def all_maps(self, Y: Representation) -> List[Tuple[int, ModuleMap]]:
        return [(j, f) for j, X in enumerate(self.summands) for f in hom_basis(X, Y).basis]

    def kernel(self, maps: List[Tuple[int, ModuleMap]], target: Representation) -> Representation:
        X, g = map_from_summands([self.summands[j] for j, _ in maps], [f for _, f in maps], target)
        return kernel_of(g)[0]


def simple_functor_pd(summands: Sequence[Representation], i: int, cutoff: int = DEFAULT_CUTOFF, seed: int = 0, approx=None) -> ValueWithStatus:
    """Projective dimension of the simple ``E``-module at summand ``i``.

    Step one approximates the radical maps into ``X_i``; every later step
    approximates the previous kernel ``K_t``.  ``K_t = 0`` ends the resolution
    at length ``t``; ``K_a ~ K_b`` certifies that it never ends.
    """
    ap = approx or _Approximations(summands)
    X = ap.summands[i]
    radical_maps = [(j, f) for j in range(len(ap.summands)) if j != i for f in ap.homs[(j, i)]]
    radical_maps += [(i, f) for f in endomorphism_radical(X)[1]]
    if not radical_maps:
        return ValueWithStatus.exact(0)
    K = ap.kernel(ap.minimize(radical_maps), X)
    seen: List[Representation] = []
    t = 1
    while True:
        if K.is_zero():
            return ValueWithStatus.exact(t)
        if t > cutoff:
            return ValueWithStatus.at_least(cutoff)
        for earlier in seen:
            if is_isomorphic(earlier, K, seed=seed):
                return ValueWithStatus.infinite()
        seen.append(K)
        K = ap.kernel(ap.minimize(ap.all_maps(K)), K)
        t += 1


def endo_gldim(summands: Sequence[Representation], cutoff: int = DEFAULT_CUTOFF, seed: int = 0) -> ValueWithStatus:
    """``gldim End(M)`` for a generator ``M``, resolving inside ``A``-mod."""
    summands = basic_summands(summands, seed)
    check_generator(summands, seed)
    ap = _Approximations(summands)
    return vws_max(simple_functor_pd(summands, i, cutoff, seed, ap) for i in range(len(summands)))


# -- structure-constant route -------------------------------------------------

def endo_gldim_direct(summands: Sequence[Representation], cutoff: int = DEFAULT_CUTOFF, seed: int = 0) -> ValueWithStatus:
    """``gldim End(M)`` from minimal resolutions over ``E`` itself."""
    E = endo_algebra(basic_summands(summands, seed), seed)
    return global_dimension(E, cutoff, seed)


def endo_domdim(summands: Sequence[Representation], cutoff: int = DEFAULT_CUTOFF, seed: int = 0) -> ValueWithStatus:
    E = endo_algebra(basic_summands(summands, seed), seed)
    return dominant_dimension(E, cutoff, seed)


@dataclass
class MuellerCheck:
    evd_plus_2: ValueWithStatus
    domdim_direct: ValueWithStatus
    agree: bool

    def to_json(self) -> dict:
        return {
            "evd_plus_2": self.evd_plus_2.to_json(),
            "domdim_direct": self.domdim_direct.to_json(),
            "agree": self.agree,
        }


def mueller_check(summands: Sequence[Representation], cutoff: int = DEFAULT_CUTOFF, seed: int = 0) -> MuellerCheck:
    """Compare ``evd(M) + 2`` with ``domdim End(M)``, both computed independently.

    Only matching exact values or two certified infinities count as agreement.
    """
    summands = basic_summands(summands, seed)
    check_generator_cogenerator(summands, seed)
    lhs = rigidity_degree(summands, cutoff, seed).shift(2)
    rhs = endo_domdim(summands, cutoff, seed)
    agree = (lhs.is_exact and rhs.is_exact and lhs.value == rhs.value) or (lhs.is_infinite and rhs.is_infinite)
    return MuellerCheck(lhs, rhs, agree)
