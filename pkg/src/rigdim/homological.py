"""Minimal resolutions, Ext and the homological dimensions built from them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .exactla import Matrix
from .quiveralg import Algebra
from .repmod import (
    InconclusiveError,
    ModuleError,
    Representation,
    coregular,
    dual,
    hom_dim,
    is_injective,
    is_isomorphic,
    is_projective,
    projective,
    regular,
    simple,
    syzygy,
)

DEFAULT_CUTOFF = 30


class IncompleteList(ValueError):
    """An operation needs a list of indecomposables flagged complete."""


class NotSelfInjective(ValueError):
    pass


# -- values with provenance ---------------------------------------------------

@dataclass(frozen=True)
class ValueWithStatus:
    """``exact`` carries a value; ``at_least`` carries a lower bound; ``infinite`` is certified."""

    value: Optional[int]
    status: str
    bound: Optional[int] = None

    @classmethod
    def exact(cls, n: int) -> "ValueWithStatus":
        return cls(int(n), "exact")

    @classmethod
    def infinite(cls) -> "ValueWithStatus":
        return cls(None, "infinite")

    @classmethod
    def at_least(cls, n: int) -> "ValueWithStatus":
        return cls(None, "at_least", int(n))

    @property
    def is_exact(self) -> bool:
        return self.status == "exact"

    @property
    def is_infinite(self) -> bool:
        return self.status == "infinite"

    @property
    def is_finite(self) -> bool:
        return self.status == "exact"

    @property
    def lower(self) -> float:
        """Best known lower bound (``inf`` when certified infinite)."""
        if self.status == "exact":
            return self.value
        if self.status == "infinite":
            return float("inf")
        return self.bound

    def shift(self, k: int) -> "ValueWithStatus":
        if self.status == "exact":
            return ValueWithStatus.exact(self.value + k)
        if self.status == "at_least":
            return ValueWithStatus.at_least(self.bound + k)
        return self

    def to_json(self) -> dict:
        out = {"value": self.value, "status": self.status}
        if self.status == "at_least":
            out["bound"] = self.bound
        return out

    def __str__(self):
        if self.status == "exact":
            return str(self.value)
        if self.status == "infinite":
            return "inf"
        return f">={self.bound}"


def vws_min(values: Sequence[ValueWithStatus]) -> ValueWithStatus:
    """Minimum of several values, exact only when it is pinned down."""
    best = ValueWithStatus.infinite()
    for v in values:
        if v.is_infinite:
            continue
        if best.is_infinite:
            best = v
            continue
        lo = min(best.lower, v.lower)
        exact_hit = (best.is_exact and best.value == lo) or (v.is_exact and v.value == lo)
        best = ValueWithStatus.exact(lo) if exact_hit else ValueWithStatus.at_least(lo)
    return best


def vws_max(values: Sequence[ValueWithStatus]) -> ValueWithStatus:
    values = list(values)
    if not values:
        return ValueWithStatus.exact(0)
    if any(v.is_infinite for v in values):
        return ValueWithStatus.infinite()
    hi = max(v.lower for v in values)
    if all(v.is_exact for v in values):
        return ValueWithStatus.exact(hi)
    return ValueWithStatus.at_least(hi)


# -- resolutions --------------------------------------------------------------

class Resolution:
    """Lazily extended minimal projective (or injective) resolution.

    ``terms[t]`` lists the vertices ``v`` with ``P(v)`` (resp. ``I(v)``) in
    degree ``t``.  An injective resolution of ``M`` is the dual of the
    projective resolution of ``D M`` over the opposite algebra.
    ``status`` is ``("complete", length)``, ``("periodic", period, entry)``
    or ``("truncated", computed)``.
    """

    def __init__(self, module: Representation, direction: str = "projective", seed: int = 0):
        if direction not in ("projective", "injective"):
            raise ValueError("direction must be projective or injective")
        self.module = module
        self.direction = direction
        self.seed = seed
        base = module if direction == "projective" else dual(module)
        self._syz: List[Representation] = [base]
        self._incl = [None]
        self.terms: List[Tuple[int, ...]] = []
        self.frees = []
        # images[t][l]: image of generator l of P_t inside P_{t-1} (vertex, vector)
        self.images: List[list] = [[]]
        self.status: Tuple = ("truncated", 0)

    @property
    def algebra(self) -> Algebra:
        return self.module.algebra

    @property
    def finished(self) -> bool:
        return self.status[0] != "truncated"

    def syzygy(self, t: int) -> Representation:
        """``Omega^t`` (projective) or ``Omega^-t`` (injective) of the module."""
        self.extend(t)
        X = self._syz[t] if t < len(self._syz) else None
        if X is None:
            raise IndexError("beyond the end of a finite resolution")
        return X if self.direction == "projective" else dual(X)

    def extend(self, n: int) -> None:
        """Compute terms up to degree ``n`` (or until the resolution ends)."""
        while len(self.terms) <= n:
            t = len(self.terms)
            X = self._syz[t]
            if X.is_zero():
                self.status = ("complete", max(t - 1, 0))
                return
            K, incl, cov = syzygy(X)
            self.terms.append(tuple(v for v, _ in cov.lifts))
            self.frees.append(cov.module)
            if t >= 1:
                prev_incl = self._incl[t]
                self.images.append([(v, prev_incl.mats[v].apply(vec)) for v, vec in cov.lifts])
            self._syz.append(K)
            self._incl.append(incl)
            if K.is_zero():
                self.status = ("complete", t)
                return
            if self.status[0] != "periodic":
                for a in range(1, t + 1):
                    if is_isomorphic(self._syz[a], K, seed=self.seed):
                        self.status = ("periodic", t + 1 - a, a)
                        break
                else:
                    self.status = ("truncated", t)

    def length(self, cutoff: int) -> ValueWithStatus:
        """Projective (injective) dimension with provenance."""
        if self.module.is_zero():
            return ValueWithStatus.exact(0)
        self.extend(cutoff)
        kind = self.status[0]
        if kind == "complete":
            return ValueWithStatus.exact(self.status[1])
        if kind == "periodic":
            return ValueWithStatus.infinite()
        return ValueWithStatus.at_least(cutoff)

    def term_is_projective(self, t: int) -> bool:
        """For injective resolutions: is ``I^t`` projective?"""
        self.extend(t)
        if t >= len(self.terms):
            return True
        alg = self.algebra
        table = injective_projectivity(alg)
        return all(table[v] for v in self.terms[t])

    def differential_check(self, t: int) -> bool:
        """``d_t d_{t+1} = 0`` for the projective direction (a sanity check)."""
        self.extend(t + 1)
        if t + 1 >= len(self.terms) or t < 1:
            return True
        F_prev = self.frees[t - 1]
        alg = self.algebra
        for w, vec in self.images[t + 1]:
            out = [alg.field.zero] * F_prev.dims[w]
            F = self.frees[t]
            for k, v in enumerate(F.gens):
                u_vertex, u = self.images[t][k]
                for b in alg.between(v, w):
                    c = vec[F.offsets[k][w] + alg.between(v, w).index(b)]
                    if c == 0:
                        continue
                    img = F_prev.action(b).apply(u)
                    out = [x + c * y for x, y in zip(out, img)]
            if any(alg.field(x) != 0 for x in out):
                return False
        return True


def projective_resolution(M: Representation, seed: int = 0) -> Resolution:
    got = M._cache.get("proj_res")
    if got is None:
        got = Resolution(M, "projective", seed=seed)
        M._cache["proj_res"] = got
    return got


def injective_resolution(M: Representation, seed: int = 0) -> Resolution:
    got = M._cache.get("inj_res")
    if got is None:
        got = Resolution(M, "injective", seed=seed)
        M._cache["inj_res"] = got
    return got


def injective_projectivity(alg: Algebra) -> List[bool]:
    """Which ``I(v)`` are projective; decided once per algebra."""
    got = getattr(alg, "_inj_proj", None)
    if got is None:
        from .repmod import injective
        got = [is_projective(injective(alg, v)) for v in range(alg.n_vertices)]
        alg._inj_proj = got
    return got


# -- Ext ----------------------------------------------------------------------

def _delta(res: Resolution, N: Representation, t: int) -> Matrix:
    """``Hom(P_t, N) -> Hom(P_{t+1}, N)`` with ``Hom(P(v), N) = N_v``."""
    alg = N.algebra
    field = N.field
    F = res.frees[t]
    src = res.terms[t]
    dst = res.terms[t + 1] if t + 1 < len(res.terms) else ()
    col_off = [0]
    for v in src:
        col_off.append(col_off[-1] + N.dims[v])
    row_off = [0]
    for w in dst:
        row_off.append(row_off[-1] + N.dims[w])
    out = [[field.zero] * col_off[-1] for _ in range(row_off[-1])]
    for l, (w, u) in enumerate(res.images[t + 1] if t + 1 < len(res.images) else ()):
        for k, v in enumerate(src):
            for pos, b in enumerate(alg.between(v, w)):
                c = u[F.offsets[k][w] + pos]
                if c == 0:
                    continue
                act = N.action(b)
                for r in range(N.dims[w]):
                    row = out[row_off[l] + r]
                    arow = act.rows[r]
                    for s in range(N.dims[v]):
                        if arow[s] != 0:
                            row[col_off[k] + s] += c * arow[s]
    p = field.p
    if p:
        out = [[x % p for x in r] for r in out]
    return Matrix._wrap(field, out, col_off[-1])


def _delta_rank(res: Resolution, N: Representation, t: int) -> int:
    key = ("delta_rank", id(N), t)
    cache = res.__dict__.setdefault("_ranks", {})
    got = cache.get(key)
    if got is None:
        got = _delta(res, N, t).rank() if t >= 0 else 0
        cache[key] = (got, N)
        return got
    return got[0]


def ext_dim(M: Representation, N: Representation, i: int, seed: int = 0) -> int:
    """``dim Ext^i(M, N)`` from the minimal projective resolution of ``M``."""
    if i < 0:
        raise ValueError("degree must be non-negative")
    if M.algebra is not N.algebra:
        raise ModuleError("modules over different algebras")
    if i == 0:
        return hom_dim(M, N)
    res = projective_resolution(M, seed)
    res.extend(i + 1)
    if i >= len(res.terms):
        return 0
    hom_pi = sum(N.dims[v] for v in res.terms[i])
    return hom_pi - _delta_rank(res, N, i) - _delta_rank(res, N, i - 1)


def ext1_cocycle_dim(M: Representation, N: Representation) -> int:
    """``dim Ext^1(M, N)`` from the representation-theoretic description.

    A cocycle assigns ``h_a: M_s -> N_t`` to each arrow ``a: s -> t`` so that the
    linearised relations vanish; coboundaries come from vertex maps.  Needs a
    presented algebra (quiver with relations).
    """
    alg = M.algebra
    if alg.quiver is None or alg.relations is None:
        raise ModuleError("the cocycle description needs a quiver presentation")
    field = M.field
    arrows = alg.quiver.arrows
    offs = [0]
    for a in arrows:
        offs.append(offs[-1] + N.dims[a.target] * M.dims[a.source])
    nvars = offs[-1]
    rows = []
    for rel in alg.relations:
        paths = list(rel.items())
        s = arrows[alg.quiver.arrow_index(paths[0][0][0])].source
        t = arrows[alg.quiver.arrow_index(paths[0][0][-1])].target
        # entry (r, c) of sum_k N_{aL..a(k+1)} h_{ak} M_{a(k-1)..a1}
        block = [[[field.zero] * nvars for _ in range(M.dims[s])] for _ in range(N.dims[t])]
        for path, coef in paths:
            idx = [alg.quiver.arrow_index(x) for x in path]
            for k, ak in enumerate(idx):
                a = arrows[ak]
                before = Matrix.identity(field, M.dims[s])
                for j in idx[:k]:
                    before = M.mats[j] @ before
                after = Matrix.identity(field, N.dims[t])
                for j in reversed(idx[k + 1:]):
                    after = after @ N.mats[j]
                ms = M.dims[a.source]
                for r in range(N.dims[t]):
                    for c in range(M.dims[s]):
                        row = block[r][c]
                        for x in range(N.dims[a.target]):
                            ax = after.rows[r][x]
                            if ax == 0:
                                continue
                            for y in range(ms):
                                by = before.rows[y][c]
                                if by != 0:
                                    row[offs[ak] + x * ms + y] += coef * ax * by
        for r in range(N.dims[t]):
            for c in range(M.dims[s]):
                rows.append(block[r][c])
    p = field.p
    if p:
        rows = [[x % p for x in r] for r in rows]
    z_dim = nvars - (Matrix._wrap(field, rows, nvars).rank() if rows else 0)
    vertex_maps = sum(M.dims[v] * N.dims[v] for v in range(alg.n_vertices))
    coboundaries = vertex_maps - hom_dim(M, N)
    return z_dim - coboundaries


# -- dimensions ---------------------------------------------------------------

def projective_dimension(M: Representation, cutoff: int = DEFAULT_CUTOFF, seed: int = 0) -> ValueWithStatus:
    return projective_resolution(M, seed).length(cutoff)


def injective_dimension(M: Representation, cutoff: int = DEFAULT_CUTOFF, seed: int = 0) -> ValueWithStatus:
    return injective_resolution(M, seed).length(cutoff)


def global_dimension(alg: Algebra, cutoff: int = DEFAULT_CUTOFF, seed: int = 0) -> ValueWithStatus:
    return vws_max(projective_dimension(simple(alg, i), cutoff, seed) for i in range(alg.n_vertices))


def dominant_dimension(alg: Algebra, cutoff: int = DEFAULT_CUTOFF, seed: int = 0) -> ValueWithStatus:
    """Leading projective terms of the minimal injective resolution of the regular module."""
    A = _regular(alg)
    res = injective_resolution(A, seed)
    t = 0
    while t <= cutoff:
        res.extend(t)
        if t >= len(res.terms):
            return ValueWithStatus.infinite()
        if not res.term_is_projective(t):
            return ValueWithStatus.exact(t)
        if res.status[0] == "periodic" and t >= res.status[2] + res.status[1]:
            # every later term repeats one already seen
            return ValueWithStatus.infinite()
        t += 1
    return ValueWithStatus.at_least(cutoff)


def is_selfinjective(alg: Algebra) -> bool:
    return all(is_injective(projective(alg, i)) for i in range(alg.n_vertices))


def _regular(alg: Algebra) -> Representation:
    got = getattr(alg, "_regular_module", None)
    if got is None:
        got = regular(alg)
        alg._regular_module = got
    return got


def _coregular(alg: Algebra) -> Representation:
    got = getattr(alg, "_coregular_module", None)
    if got is None:
        got = coregular(alg)
        alg._coregular_module = got
    return got


@dataclass
class HomologicalDims:
    gldim: ValueWithStatus
    domdim: ValueWithStatus
    idim_left: ValueWithStatus
    idim_right: ValueWithStatus
    selfinjective: bool
    nakayama: bool

    def to_json(self) -> dict:
        return {
            "gldim": self.gldim.to_json(),
            "domdim": self.domdim.to_json(),
            "idim_left": self.idim_left.to_json(),
            "idim_right": self.idim_right.to_json(),
            "selfinjective": self.selfinjective,
            "nakayama": self.nakayama,
        }


def homological_dims(alg: Algebra, cutoff: int = DEFAULT_CUTOFF, seed: int = 0) -> HomologicalDims:
    if cutoff < 1:
        raise ValueError("cutoff >= 1 required")
    return HomologicalDims(
        gldim=global_dimension(alg, cutoff, seed),
        domdim=dominant_dimension(alg, cutoff, seed),
        idim_left=injective_dimension(_regular(alg), cutoff, seed),
        idim_right=injective_dimension(_regular(alg.opposite()), cutoff, seed),
        selfinjective=is_selfinjective(alg),
        nakayama=alg.is_nakayama(),
    )


# -- rigidity degree ----------------------------------------------------------

def ext_vanishing_run(X: Representation, Y: Representation, cutoff: int = DEFAULT_CUTOFF, seed: int = 0) -> ValueWithStatus:
    """Largest ``n`` with ``Ext^i(X, Y) = 0`` for ``1 <= i <= n``.

    Exact when a nonvanishing degree is found.  Infinite when the resolution
    of ``X`` ends, or when ``Omega^a X ~ Omega^b X`` and all degrees up to ``b``
    vanish (dimension shifting makes Ext periodic beyond ``a``).
    """
    if is_projective(X):
        return ValueWithStatus.infinite()
    res = projective_resolution(X, seed)
    for i in range(1, cutoff + 1):
        if ext_dim(X, Y, i, seed) != 0:
            return ValueWithStatus.exact(i - 1)
        kind = res.status[0]
        if kind == "complete" and i >= res.status[1]:
            return ValueWithStatus.infinite()
        if kind == "periodic" and i >= res.status[2] + res.status[1]:
            return ValueWithStatus.infinite()
    return ValueWithStatus.at_least(cutoff)


def rigidity_degree(M, cutoff: int = DEFAULT_CUTOFF, seed: int = 0) -> ValueWithStatus:
    """``evd(M)``: largest ``n`` with ``Ext^i(M, M) = 0`` for ``1 <= i <= n``.

    ``M`` may be a module or a list of summands; for a list the value is the
    minimum over ordered pairs, which avoids resolving the whole sum.
    """
    if cutoff < 1:
        raise ValueError("cutoff >= 1 required")
    if isinstance(M, Representation):
        return ext_vanishing_run(M, M, cutoff, seed)
    summands = list(M)
    return vws_min([ext_vanishing_run(X, Y, cutoff, seed) for X in summands for Y in summands])


# -- orthogonality ------------------------------------------------------------

def in_add(X: Representation, summands: Sequence[Representation], seed: int = 0) -> bool:
    """Membership of an indecomposable ``X`` in ``add(M)`` via certificate iso."""
    for Y in summands:
        r = is_isomorphic(X, Y, seed=seed)
        if r.status == "inconclusive":
            raise InconclusiveError(f"could not decide {X.label} ~ {Y.label}")
        if r:
            return True
    return False


def max_orthogonal_check(summands: Sequence[Representation], n: int, indecomposables: Sequence[Representation], complete: bool = False, seed: int = 0) -> bool:
    """Is ``M = sum(summands)`` maximal ``n``-orthogonal?

    Tested against every module of a list of indecomposables that must be
    flagged complete.
    """
    if not complete:
        raise IncompleteList("maximal orthogonality needs a complete list of indecomposables")
    if n < 1:
        raise ValueError("n >= 1 required")
    for X in indecomposables:
        member = in_add(X, summands, seed)
        right = all(ext_dim(Y, X, i, seed) == 0 for Y in summands for i in range(1, n + 1))
        left = all(ext_dim(X, Y, i, seed) == 0 for Y in summands for i in range(1, n + 1))
        if not (right == member == left):
            return False
    return True


# -- nodes --------------------------------------------------------------------

@dataclass
class NodeData:
    nodes: List[Representation]
    rho: Optional[ValueWithStatus]

    def to_json(self) -> dict:
        return {
            "nodes": [S.label for S in self.nodes],
            "rho": self.rho.to_json() if self.rho is not None else None,
        }


def _block_has_nodes(alg: Algebra, block: Sequence[int]) -> bool:
    bs = set(block)
    nonsimple = any(b.source in bs and not b.is_idempotent for b in alg.basis)
    if not nonsimple:
        return False
    if alg.quiver is not None:
        q = alg.quiver
        for v in block:
            if q.in_degree(v) > 1 or q.out_degree(v) > 1:
                return False
    elif not alg.is_nakayama():
        return False
    return max(len(b.word) for b in alg.basis if b.source in bs) == 1


def nodes_and_rho(alg: Algebra, cutoff: int = DEFAULT_CUTOFF, seed: int = 0) -> NodeData:
    """Nodes of a self-injective algebra and the least Omega-period of a node."""
    if not is_selfinjective(alg):
        raise NotSelfInjective("node detection is only implemented for self-injective algebras")
    nodes = []
    for block in alg.components():
        if _block_has_nodes(alg, block):
            nodes.extend(simple(alg, v) for v in block)
    if not nodes:
        return NodeData([], None)
    periods = []
    for S in nodes:
        res = projective_resolution(S, seed)
        found = None
        for m in range(1, cutoff + 1):
            res.extend(m)
            r = is_isomorphic(res.syzygy(m), S, seed=seed)
            if r:
                found = m
                break
        periods.append(ValueWithStatus.exact(found) if found else ValueWithStatus.at_least(cutoff))
    return NodeData(nodes, vws_min(periods))
