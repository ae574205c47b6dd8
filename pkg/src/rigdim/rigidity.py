"""The rigidity dimension ``cf(A)`` with provenance and upper bounds.

Only basic generator-cogenerators are searched: ``M`` and its basic version
have Morita equivalent endomorphism rings, and both ``domdim`` and ``gldim``
are Morita invariant.  The search uses Mueller's formula
``domdim End(M) = evd(M) + 2``, so each candidate costs one ``gldim`` test.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .endoglobal import basic_summands, endo_gldim
from .homological import (
    DEFAULT_CUTOFF,
    ValueWithStatus,
    ext_vanishing_run,
    injective_dimension,
    is_selfinjective,
    vws_min,
    _regular,
)
from .quiveralg import Algebra
from .repmod import (
    InconclusiveError,
    Representation,
    UnsupportedCharacteristic,
    free_module,
    injective,
    is_injective,
    is_isomorphic,
    is_projective,
    projective,
    quotient,
    simple,
    socle_dims,
)


class SelfInjectiveInput(ValueError):
    pass


class ConsistencyError(AssertionError):
    """A computed value contradicts a proven bound."""


@dataclass
class IndecList:
    modules: List[Representation]
    complete: bool


def serial_quotient(alg: Algebra, i: int, j: int) -> Representation:
    """``P(i) / rad^j P(i)``; ``rad^j`` is spanned by paths of length at least ``j``."""
    P = free_module(alg, (i,))
    bases = []
    for v in range(alg.n_vertices):
        cols = []
        for pos, b in enumerate(alg.between(i, v)):
            if len(alg.basis[b].word) >= j:
                vec = [alg.field.zero] * P.dims[v]
                vec[pos] = alg.field.one
                cols.append(vec)
        bases.append(cols)
    Q, _ = quotient(P, bases)
    return Q


def _label(alg: Algebra, M: Representation, i: int, j: int, length: int) -> str:
    if j == length:
        return f"P{alg.vertices[i]}"
    if j == 1:
        return f"S{alg.vertices[i]}"
    if is_injective(M):
        soc = socle_dims(M)
        return f"I{alg.vertices[soc.index(1)]}"
    return f"P{alg.vertices[i]}/rad{j}"


def enumerate_indecomposables(alg: Algebra) -> IndecList:
    """All indecomposables of a Nakayama algebra; standard modules otherwise."""
    if alg.is_nakayama():
        out = []
        for i in range(alg.n_vertices):
            length = alg.loewy_length(i)
            for j in range(1, length + 1):
                M = serial_quotient(alg, i, j)
                out.append(M.with_label(_label(alg, M, i, j, length)))
        return IndecList(_dedup(out), True)
    std = [projective(alg, i) for i in range(alg.n_vertices)]
    std += [injective(alg, i) for i in range(alg.n_vertices)]
    std += [simple(alg, i) for i in range(alg.n_vertices)]
    return IndecList(_dedup(std), False)


def _dedup(modules: Sequence[Representation], seed: int = 0) -> List[Representation]:
    return basic_summands(modules, seed)


def ext_vanishing_bound(alg: Algebra, cutoff: int = DEFAULT_CUTOFF, seed: int = 0) -> ValueWithStatus:
    """Largest ``d`` with ``Ext^j(D(A), A) = 0`` for ``1 <= j <= d``."""
    if is_selfinjective(alg):
        raise SelfInjectiveInput("the bound is vacuous for self-injective algebras")
    runs = []
    for i in range(alg.n_vertices):
        I = injective(alg, i)
        for j in range(alg.n_vertices):
            runs.append(ext_vanishing_run(I, projective(alg, j), cutoff, seed))
    return vws_min(runs)


@dataclass
class Candidate:
    summands: List[Representation]
    evd: ValueWithStatus
    gldim: Optional[ValueWithStatus] = None

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(X.label for X in self.summands)


@dataclass
class RigidityReport:
    cf: ValueWithStatus
    interval: Optional[Tuple[int, Optional[int]]]
    witness: Optional[List[str]]
    ext_bound: Optional[ValueWithStatus]
    idim_bound: Optional[ValueWithStatus]
    candidates_examined: int
    completeness: str
    rep_n_finite_up_to: Optional[int]
    candidates: List[Candidate] = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        cf = self.cf.to_json()
        if self.interval is not None:
            cf["interval"] = list(self.interval)
        return {
            "cf": cf,
            "witness": self.witness,
            "ext_bound": self.ext_bound.to_json() if self.ext_bound else None,
            "idim_bound": self.idim_bound.to_json() if self.idim_bound else None,
            "candidates_examined": self.candidates_examined,
            "completeness": self.completeness,
            "rep_n_finite_up_to": self.rep_n_finite_up_to,
            "reduction": "basic generator-cogenerators (Morita invariance of domdim and gldim)",
        }


def _base_modules(alg: Algebra, seed: int) -> List[Representation]:
    mods = [projective(alg, i) for i in range(alg.n_vertices)]
    mods += [injective(alg, i) for i in range(alg.n_vertices)]
    return basic_summands(mods, seed)


def _in(X: Representation, pool: Sequence[Representation], seed: int) -> bool:
    for Y in pool:
        r = is_isomorphic(X, Y, seed=seed)
        if r.status == "inconclusive":
            raise InconclusiveError(f"cannot decide whether {X.label} ~ {Y.label}")
        if r:
            return True
    return False


def _order_key(c: Candidate):
    return (-c.evd.lower, c.labels)


def rigidity_dimension(
    alg: Algebra,
    indecs="auto",
    complete: bool = False,
    cutoff: int = DEFAULT_CUTOFF,
    seed: int = 0,
) -> RigidityReport:
    """``cf(A) = 2 + max evd(M)`` over basic generator-cogenerators with ``gldim End(M)`` finite.

    ``indecs`` is ``"auto"`` (Nakayama enumeration) or a user list whose
    completeness is asserted by ``complete``.  Without a complete list, or
    when some value stays unresolved, the result is an interval.
    """
    if alg.is_semisimple():
        simples = [simple(alg, i) for i in range(alg.n_vertices)]
        return RigidityReport(ValueWithStatus.infinite(), None, [S.label for S in simples], None, None, 1, "exact", None)

    ext_bound = idim_bound = None
    if not is_selfinjective(alg):
        ext_bound = ext_vanishing_bound(alg, cutoff, seed).shift(2)
        idim_bound = injective_dimension(_regular(alg), cutoff, seed).shift(1)

    if isinstance(indecs, str):
        if indecs != "auto":
            raise ValueError("indecs must be 'auto' or a list of modules")
        found = enumerate_indecomposables(alg)
        modules, is_complete = found.modules, found.complete
    else:
        modules, is_complete = list(indecs), bool(complete)

    base = _base_modules(alg, seed)
    pool: List[Representation] = []
    for X in modules:
        if is_projective(X) or is_injective(X):
            continue
        if not _in(X, pool, seed):
            pool.append(X)

    everything = base + pool
    runs: Dict[Tuple[int, int], ValueWithStatus] = {}

    def run(a: int, b: int) -> ValueWithStatus:
        got = runs.get((a, b))
        if got is None:
            got = ext_vanishing_run(everything[a], everything[b], cutoff, seed)
            runs[(a, b)] = got
        return got

    nb = len(base)
    candidates: List[Candidate] = []
    for r in range(len(pool) + 1):
        for T in combinations(range(len(pool)), r):
            idx = list(range(nb)) + [nb + t for t in T]
            evd = vws_min([run(a, b) for a in idx for b in idx])
            candidates.append(Candidate([everything[k] for k in idx], evd))
    candidates.sort(key=_order_key)

    winner = None
    unresolved_hi = None
    for c in candidates:
        try:
            c.gldim = endo_gldim(c.summands, cutoff, seed)
        except (InconclusiveError, UnsupportedCharacteristic) as exc:
            raise type(exc)(f"candidate {'+'.join(c.labels)}: {exc}") from exc
        if c.gldim.is_exact:
            winner = c
            break
        if not c.gldim.is_infinite:
            # gldim unresolved: this candidate might still count
            hi = c.evd.lower + 2
            unresolved_hi = hi if unresolved_hi is None else max(unresolved_hi, hi)

    upper = [b for b in (ext_bound, idim_bound) if b is not None and b.is_exact]
    bound_hi = min((b.value for b in upper), default=None)

    if winner is not None and winner.evd.is_infinite:
        lo_val = float("inf")
    elif winner is not None:
        lo_val = winner.evd.lower + 2
    else:
        lo_val = 2

    exact = (
        winner is not None
        and is_complete
        and unresolved_hi is None
        and not (winner.evd.status == "at_least")
    )
    if exact:
        cf = ValueWithStatus.infinite() if lo_val == float("inf") else ValueWithStatus.exact(lo_val)
        interval = None
    else:
        his = [bound_hi] if bound_hi is not None else []
        searched = is_complete and (winner is None or winner.evd.status != "at_least")
        if searched and unresolved_hi is not None:
            his.append(max(unresolved_hi, lo_val))
        hi = min(his) if his else None
        cf = ValueWithStatus.at_least(lo_val)
        interval = (lo_val, hi)

    if cf.is_exact:
        if cf.value < 2:
            raise ConsistencyError(f"cf = {cf.value} < 2")
        if bound_hi is not None and cf.value > bound_hi:
            raise ConsistencyError(f"cf = {cf.value} exceeds the upper bound {bound_hi}")

    if cf.is_exact:
        rep_n = cf.value - 1
    elif cf.is_infinite:
        rep_n = None
    else:
        rep_n = lo_val - 1
    return RigidityReport(
        cf=cf,
        interval=interval,
        witness=list(winner.labels) if winner is not None else None,
        ext_bound=ext_bound,
        idim_bound=idim_bound,
        candidates_examined=len(candidates),
        completeness="exact" if exact else "lower_bound_only",
        rep_n_finite_up_to=rep_n,
        candidates=candidates,
    )
