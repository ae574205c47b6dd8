"""Modules over an :class:`~rigdim.quiveralg.Algebra` and constructions on them.

A :class:`Representation` assigns a vector space ``M_i`` to every vertex and a
matrix to every generator ``g: s -> t`` (shape ``dim M_t x dim M_s``, acting
on column vectors).  A word ``g1 g2 ... gk`` acts as ``M_gk ... M_g1``.  With
this convention ``P(i)`` is spanned by the basis elements starting at ``i``,
generators act by right multiplication, and ``Hom(P(i), M) = M_i``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .exactla import (
    Coordinates,
    FieldSpec,
    Matrix,
    complement_basis,
    kernel,
    row_space_basis,
    solve,
)
from .quiveralg import Algebra


class ModuleError(ValueError):
    pass


class AlgebraMismatch(ModuleError):
    pass


class RelationViolated(ModuleError):
    pass


class UnsupportedCharacteristic(ModuleError):
    pass


class InconclusiveError(RuntimeError):
    """A randomized certificate search ran out of trials."""


class Representation:
    """Finite-dimensional module given by vertex dimensions and generator matrices."""

    def __init__(self, algebra: Algebra, dims: Sequence[int], mats: Sequence[Matrix], label: str = "", check: bool = True):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        self.mats = tuple(mats)
        self.label = label
        self._action = {}
        self._cache = {}
        if len(self.dims) != algebra.n_vertices:
            raise ModuleError("one dimension per vertex required")
        if len(self.mats) != len(algebra.generators):
            raise ModuleError("one matrix per arrow required")
        for g, m in zip(algebra.generators, self.mats):
            if m.field != algebra.field:
                raise ModuleError("field mismatch")
            if m.shape != (self.dims[g.target], self.dims[g.source]):
                raise ModuleError(
                    f"matrix for {g.name} has shape {m.shape}, expected {(self.dims[g.target], self.dims[g.source])}"
                )
        if check:
            self.validate()

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.dim == 0

    def __repr__(self):
        name = self.label or "M"
        return f"<{name}: dims {self.dims}>"

    def action(self, k: int) -> Matrix:
        """Matrix by which basis element ``k`` acts (``M_source -> M_target``)."""
        got = self._action.get(k)
        if got is None:
            b = self.algebra.basis[k]
            if b.is_idempotent:
                got = Matrix.identity(self.field, self.dims[b.source])
            else:
                got = self.mats[b.word[0]]
                for g in b.word[1:]:
                    got = self.mats[g] @ got
            self._action[k] = got
        return got

    def validate(self) -> None:
        """Raise :class:`RelationViolated` unless the action respects the algebra."""
        alg = self.algebra
        if alg.relations is not None and alg.quiver is not None:
            for rel in alg.relations:
                total = None
                for path, c in rel.items():
                    m = None
                    for name in path:
                        g = self.mats[alg.quiver.arrow_index(name)]
                        m = g if m is None else g @ m
                    m = m.scale(c)
                    total = m if total is None else total + m
                if total is not None and not total.is_zero():
                    raise RelationViolated(f"relation {rel} is not satisfied")
        for u, b in enumerate(alg.basis):
            for gi, g in enumerate(alg.generators):
                if g.source != b.target:
                    continue
                lhs = self.mats[gi] @ self.action(u)
                rhs = Matrix.zeros(self.field, self.dims[g.target], self.dims[b.source])
                for k, c in alg.mult.get((u, alg.gen_index[gi]), ()):
                    rhs = rhs + self.action(k).scale(c)
                if lhs != rhs:
                    raise RelationViolated(f"action of {alg.word_name(u)}*{g.name} is inconsistent")

    def with_label(self, label: str) -> "Representation":
        out = Representation(self.algebra, self.dims, self.mats, label=label, check=False)
        out._action = self._action
        out._cache = self._cache
        return out


# -- maps ---------------------------------------------------------------------

class ModuleMap:
    """Homomorphism given by one matrix per vertex (``source_i -> target_i``)."""

    def __init__(self, source: Representation, target: Representation, mats: Sequence[Matrix], check: bool = True):
        if source.algebra is not target.algebra:
            raise AlgebraMismatch("maps need modules over the same algebra")
        self.source = source
        self.target = target
        self.mats = tuple(mats)
        for v, m in enumerate(self.mats):
            if m.shape != (target.dims[v], source.dims[v]):
                raise ModuleError("vertex matrix has the wrong shape")
        if check and not self.commutes():
            raise ModuleError("vertex matrices do not commute with the arrows")

    @property
    def field(self) -> FieldSpec:
        return self.source.field

    def commutes(self) -> bool:
        for gi, g in enumerate(self.source.algebra.generators):
            lhs = self.target.mats[gi] @ self.mats[g.source]
            rhs = self.mats[g.target] @ self.source.mats[gi]
            if lhs != rhs:
                return False
        return True

    def then(self, other: "ModuleMap") -> "ModuleMap":
        """``other`` after ``self``."""
        if other.source is not self.target and other.source.dims != self.target.dims:
            raise ModuleError("maps are not composable")
        return ModuleMap(self.source, other.target, [b @ a for a, b in zip(self.mats, other.mats)], check=False)

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target, [a + b for a, b in zip(self.mats, other.mats)], check=False)

    def scale(self, c) -> "ModuleMap":
        return ModuleMap(self.source, self.target, [a.scale(c) for a in self.mats], check=False)

    def vector(self) -> list:
        return [x for m in self.mats for row in m.rows for x in row]

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.mats)

    def is_isomorphism(self) -> bool:
        return all(m.is_invertible() for m in self.mats)

    def is_injective(self) -> bool:
        return all(m.rank() == m.ncols for m in self.mats)

    def is_surjective(self) -> bool:
        return all(m.rank() == m.nrows for m in self.mats)

    def rank(self) -> int:
        return sum(m.rank() for m in self.mats)

    @classmethod
    def zero(cls, source: Representation, target: Representation) -> "ModuleMap":
        f = source.field
        return cls(source, target, [Matrix.zeros(f, t, s) for s, t in zip(source.dims, target.dims)], check=False)

    @classmethod
    def identity(cls, module: Representation) -> "ModuleMap":
        return cls(module, module, [Matrix.identity(module.field, d) for d in module.dims], check=False)


def combine(maps: Sequence[ModuleMap], coeffs: Sequence) -> ModuleMap:
    out = None
    for f, c in zip(maps, coeffs):
        if c == 0:
            continue
        term = f.scale(c)
        out = term if out is None else out + term
    if out is None:
        out = ModuleMap.zero(maps[0].source, maps[0].target)
    return out


@dataclass
class HomSpace:
    source: Representation
    target: Representation
    basis: List[ModuleMap]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, f: ModuleMap) -> list:
        if self._coords is None:
            self._coords = Coordinates(self.source.field, [b.vector() for b in self.basis], self._length())
        return self._coords(f.vector())

    def _length(self) -> int:
        return sum(s * t for s, t in zip(self.source.dims, self.target.dims))

    def __post_init__(self):
        self._coords = None


def hom_basis(M: Representation, N: Representation) -> HomSpace:
    """Basis of ``Hom(M, N)`` as the kernel of the commutation equations."""
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("modules over different algebras")
    alg = M.algebra
    field = M.field
    offsets = []
    nvars = 0
    for v in range(alg.n_vertices):
        offsets.append(nvars)
        nvars += N.dims[v] * M.dims[v]
    if nvars == 0:
        return HomSpace(M, N, [])
    # unknown f_v[r][c] sits at offsets[v] + r * M.dims[v] + c
    rows = []
    z = field.zero
    for gi, g in enumerate(alg.generators):
        s, t = g.source, g.target
        Ng, Mg = N.mats[gi], M.mats[gi]
        ms, mt, nt, ns = M.dims[s], M.dims[t], N.dims[t], N.dims[s]
        for r in range(nt):
            for c in range(ms):
                row = [z] * nvars
                # (N_g f_s)[r, c] = sum_k N_g[r, k] f_s[k, c]
                for k in range(ns):
                    a = Ng.rows[r][k]
                    if a != 0:
                        row[offsets[s] + k * ms + c] += a
                # (f_t M_g)[r, c] = sum_k f_t[r, k] M_g[k, c]
                for k in range(mt):
                    a = Mg.rows[k][c]
                    if a != 0:
                        row[offsets[t] + r * mt + k] -= a
                if any(x != 0 for x in row):
                    rows.append(row)
    if rows:
        ker = kernel(_mat(field, rows, nvars))
        vectors = ker.columns()
    else:
        vectors = [[field.one if i == j else z for i in range(nvars)] for j in range(nvars)]
    basis = []
    for vec in vectors:
        mats = []
        for v in range(alg.n_vertices):
            o = offsets[v]
            mats.append(Matrix._wrap(field, [vec[o + r * M.dims[v]: o + (r + 1) * M.dims[v]] for r in range(N.dims[v])], M.dims[v]))
        basis.append(ModuleMap(M, N, mats, check=False))
    return HomSpace(M, N, basis)


def hom_dim(M: Representation, N: Representation) -> int:
    return hom_basis(M, N).dim


def map_from_vector(M: Representation, N: Representation, vec: Sequence) -> ModuleMap:
    field = M.field
    mats = []
    o = 0
    for v in range(M.algebra.n_vertices):
        m, n = M.dims[v], N.dims[v]
        mats.append(Matrix._wrap(field, [list(vec[o + r * m: o + (r + 1) * m]) for r in range(n)], m))
        o += m * n
    return ModuleMap(M, N, mats, check=False)


# -- sub, quotient, sums ------------------------------------------------------

def _independent_columns(field: FieldSpec, vectors: Sequence[Sequence], length: int) -> List[list]:
    return row_space_basis(field, vectors, length)


def submodule(M: Representation, bases: Sequence[Sequence[Sequence]], label: str = "") -> Tuple[Representation, ModuleMap]:
    """Submodule with the given (independent, closed) column bases per vertex, and its inclusion."""
    field = M.field
    alg = M.algebra
    incl = [Matrix.from_columns(field, list(b), M.dims[v]) for v, b in enumerate(bases)]
    mats = []
    for gi, g in enumerate(alg.generators):
        img = M.mats[gi] @ incl[g.source]
        x = solve(incl[g.target], img)
        if x is None:
            raise ModuleError("subspaces are not closed under the action")
        mats.append(x)
    K = Representation(alg, [len(b) for b in bases], mats, label=label, check=False)
    return K, ModuleMap(K, M, incl, check=False)


def generated_submodule(M: Representation, elements: Sequence[Tuple[int, Sequence]]) -> Tuple[Representation, ModuleMap]:
    """Submodule generated by vertex-homogeneous elements ``(vertex, vector)``."""
    alg = M.algebra
    spans = [[] for _ in range(alg.n_vertices)]
    for w, vec in elements:
        for j in range(alg.n_vertices):
            for b in alg.between(w, j):
                spans[j].append(M.action(b).apply(vec))
    bases = [_independent_columns(M.field, spans[j], M.dims[j]) for j in range(alg.n_vertices)]
    return submodule(M, bases)


def quotient(M: Representation, bases: Sequence[Sequence[Sequence]], label: str = "") -> Tuple[Representation, ModuleMap]:
    """Quotient by the submodule spanned by ``bases``; returns it with the projection."""
    field = M.field
    alg = M.algebra
    projs = []
    lifts = []
    for v, b in enumerate(bases):
        comp = complement_basis(field, b, M.dims[v])
        full = Matrix.from_columns(field, list(b) + [_unit(field, M.dims[v], j) for j in comp], M.dims[v])
        inv = full.inverse() if M.dims[v] else Matrix.zeros(field, 0, 0)
        projs.append(inv.submatrix(range(len(b), M.dims[v]), range(M.dims[v])))
        lifts.append(Matrix.from_columns(field, [_unit(field, M.dims[v], j) for j in comp], M.dims[v]))
    mats = []
    for gi, g in enumerate(alg.generators):
        mats.append(projs[g.target] @ M.mats[gi] @ lifts[g.source])
    Q = Representation(alg, [p.nrows for p in projs], mats, label=label, check=False)
    return Q, ModuleMap(M, Q, projs, check=False)


def _mat(field: FieldSpec, rows, ncols: int) -> Matrix:
    """Wrap accumulated rows, reducing modulo p where needed."""
    p = field.p
    if p:
        rows = [[x % p for x in r] for r in rows]
    return Matrix._wrap(field, rows, ncols)


def _unit(field: FieldSpec, n: int, j: int) -> list:
    v = [field.zero] * n
    v[j] = field.one
    return v


def kernel_of(f: ModuleMap) -> Tuple[Representation, ModuleMap]:
    bases = [kernel(m).columns() for m in f.mats]
    return submodule(f.source, bases)


def image_of(f: ModuleMap) -> Tuple[Representation, ModuleMap]:
    bases = [_independent_columns(f.field, m.columns(), m.nrows) for m in f.mats]
    return submodule(f.target, bases)


def cokernel_of(f: ModuleMap) -> Tuple[Representation, ModuleMap]:
    bases = [_independent_columns(f.field, m.columns(), m.nrows) for m in f.mats]
    return quotient(f.target, bases)


def direct_sum(modules: Sequence[Representation], label: str = "") -> Representation:
    if not modules:
        raise ModuleError("empty direct sum needs an algebra; use zero_module")
    alg = modules[0].algebra
    field = alg.field
    dims = [sum(M.dims[v] for M in modules) for v in range(alg.n_vertices)]
    mats = []
    for gi, g in enumerate(alg.generators):
        blocks = [M.mats[gi] for M in modules]
        out = Matrix.zeros(field, dims[g.target], dims[g.source]).tolist()
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b.rows):
                out[r0 + i][c0:c0 + b.ncols] = row
            r0 += b.nrows
            c0 += b.ncols
        mats.append(Matrix._wrap(field, out, dims[g.source]))
    if not label:
        label = "+".join(M.label or "?" for M in modules)
    return Representation(alg, dims, mats, label=label, check=False)


def sum_offsets(modules: Sequence[Representation]) -> List[List[int]]:
    """``offsets[k][v]``: where summand ``k`` starts inside vertex ``v`` of the direct sum."""
    n = modules[0].algebra.n_vertices
    out = []
    run = [0] * n
    for M in modules:
        out.append(list(run))
        run = [r + d for r, d in zip(run, M.dims)]
    return out


def zero_module(alg: Algebra) -> Representation:
    mats = [Matrix.zeros(alg.field, 0, 0) for _ in alg.generators]
    return Representation(alg, [0] * alg.n_vertices, mats, label="0", check=False)


def map_from_summands(sources: Sequence[Representation], maps: Sequence[ModuleMap], target: Representation) -> Tuple[Representation, ModuleMap]:
    """``(f_1 ... f_r): X_1 + ... + X_r -> target`` from its components."""
    alg = target.algebra
    if not sources:
        Z = zero_module(alg)
        return Z, ModuleMap.zero(Z, target)
    X = direct_sum(sources)
    mats = []
    for v in range(alg.n_vertices):
        m = Matrix.zeros(target.field, target.dims[v], 0)
        for f in maps:
            m = m.hstack(f.mats[v])
        mats.append(m)
    return X, ModuleMap(X, target, mats, check=False)


# -- standard modules ---------------------------------------------------------

class FreeModule(Representation):
    """``P(v_1) + ... + P(v_r)``; ``gens`` are the vertices ``v_k``."""

    gens: Tuple[int, ...]
    offsets: List[List[int]]

    def position(self, k: int, basis_index: int) -> Tuple[int, int]:
        """(vertex, coordinate) of basis element ``basis_index`` in copy ``k``."""
        b = self.algebra.basis[basis_index]
        j = b.target
        return j, self.offsets[k][j] + self.algebra.between(self.gens[k], j).index(basis_index)


def free_module(alg: Algebra, gens: Sequence[int], label: str = "") -> FreeModule:
    field = alg.field
    n = alg.n_vertices
    gens = tuple(gens)
    offsets = []
    run = [0] * n
    for v in gens:
        offsets.append(list(run))
        for j in range(n):
            run[j] += len(alg.between(v, j))
    dims = run
    mats = []
    for gi, g in enumerate(alg.generators):
        s, t = g.source, g.target
        out = [[field.zero] * dims[s] for _ in range(dims[t])]
        gb = alg.gen_index[gi]
        for k, v in enumerate(gens):
            targets = alg.between(v, t)
            for col, b in enumerate(alg.between(v, s)):
                for m, c in alg.mult.get((b, gb), ()):
                    out[offsets[k][t] + targets.index(m)][offsets[k][s] + col] += c
        mats.append(_mat(field, out, dims[s]))
    if not label:
        label = "+".join(f"P{alg.vertices[v]}" for v in gens) if gens else "0"
    F = FreeModule(alg, dims, mats, label=label, check=False)
    F.gens = gens
    F.offsets = offsets
    return F


def projective(alg: Algebra, i: int) -> FreeModule:
    return free_module(alg, (i,), label=f"P{alg.vertices[i]}")


def simple(alg: Algebra, i: int) -> Representation:
    dims = [1 if v == i else 0 for v in range(alg.n_vertices)]
    mats = [Matrix.zeros(alg.field, dims[g.target], dims[g.source]) for g in alg.generators]
    return Representation(alg, dims, mats, label=f"S{alg.vertices[i]}", check=False)


def injective(alg: Algebra, i: int) -> Representation:
    return dual(projective(alg.opposite(), i)).with_label(f"I{alg.vertices[i]}")


def regular(alg: Algebra) -> FreeModule:
    return free_module(alg, range(alg.n_vertices), label="A")


def coregular(alg: Algebra) -> Representation:
    return direct_sum([injective(alg, i) for i in range(alg.n_vertices)], label="DA")


@dataclass
class StandardModules:
    projectives: List[Representation]
    injectives: List[Representation]
    simples: List[Representation]
    regular: Representation
    coregular: Representation


def standard_modules(alg: Algebra) -> StandardModules:
    n = alg.n_vertices
    return StandardModules(
        [projective(alg, i) for i in range(n)],
        [injective(alg, i) for i in range(n)],
        [simple(alg, i) for i in range(n)],
        regular(alg),
        coregular(alg),
    )


# -- duality ------------------------------------------------------------------

def dual(M: Representation) -> Representation:
    """``D M = Hom_k(M, k)``, a module over the opposite algebra."""
    opp = M.algebra.opposite()
    label = M.label[2:-1] if M.label.startswith("D(") and M.label.endswith(")") else (f"D({M.label})" if M.label else "")
    return Representation(opp, M.dims, [m.T for m in M.mats], label=label, check=False)


def dual_map(f: ModuleMap) -> ModuleMap:
    """``D f: D(target) -> D(source)``."""
    return ModuleMap(dual(f.target), dual(f.source), [m.T for m in f.mats], check=False)


# -- radical, socle, top ------------------------------------------------------

@dataclass
class Structure:
    radical: Representation
    radical_inclusion: ModuleMap
    socle: Representation
    socle_inclusion: ModuleMap
    top: Representation
    top_projection: ModuleMap

    @property
    def top_multiplicities(self) -> Tuple[int, ...]:
        return self.top.dims

    @property
    def socle_multiplicities(self) -> Tuple[int, ...]:
        return self.socle.dims


def radical_bases(M: Representation) -> List[list]:
    alg = M.algebra
    spans = [[] for _ in range(alg.n_vertices)]
    for gi, g in enumerate(alg.generators):
        spans[g.target].extend(M.mats[gi].columns())
    return [_independent_columns(M.field, spans[v], M.dims[v]) for v in range(alg.n_vertices)]


def socle_bases(M: Representation) -> List[list]:
    alg = M.algebra
    out = []
    for v in range(alg.n_vertices):
        stack = Matrix.zeros(M.field, 0, M.dims[v])
        for gi, g in enumerate(alg.generators):
            if g.source == v:
                stack = stack.vstack(M.mats[gi])
        out.append(kernel(stack).columns())
    return out


def structure(M: Representation) -> Structure:
    got = M._cache.get("structure")
    if got is None:
        rad, rinc = submodule(M, radical_bases(M), label=f"rad({M.label})")
        soc, sinc = submodule(M, socle_bases(M), label=f"soc({M.label})")
        top, tproj = quotient(M, radical_bases(M), label=f"top({M.label})")
        got = Structure(rad, rinc, soc, sinc, top, tproj)
        M._cache["structure"] = got
    return got


def top_dims(M: Representation) -> Tuple[int, ...]:
    got = M._cache.get("top_dims")
    if got is None:
        got = tuple(d - len(b) for d, b in zip(M.dims, radical_bases(M)))
        M._cache["top_dims"] = got
    return got


def socle_dims(M: Representation) -> Tuple[int, ...]:
    got = M._cache.get("socle_dims")
    if got is None:
        got = tuple(len(b) for b in socle_bases(M))
        M._cache["socle_dims"] = got
    return got


# -- covers, envelopes, syzygies ----------------------------------------------

@dataclass
class Cover:
    module: FreeModule
    epi: ModuleMap
    lifts: List[Tuple[int, list]]


def projective_cover(M: Representation) -> Cover:
    """Minimal epimorphism from a projective onto ``M``.

    The top is lifted by standard basis vectors completing ``rad(M)_v``.
    """
    got = M._cache.get("cover")
    if got is not None:
        return got
    alg = M.algebra
    field = M.field
    rad = radical_bases(M)
    lifts = []
    for v in range(alg.n_vertices):
        for j in complement_basis(field, rad[v], M.dims[v]):
            lifts.append((v, _unit(field, M.dims[v], j)))
    P = free_module(alg, [v for v, _ in lifts])
    cols = [[] for _ in range(alg.n_vertices)]
    for k, (v, vec) in enumerate(lifts):
        for j in range(alg.n_vertices):
            for b in alg.between(v, j):
                cols[j].append(M.action(b).apply(vec))
    mats = [Matrix.from_columns(field, cols[j], M.dims[j]) for j in range(alg.n_vertices)]
    got = Cover(P, ModuleMap(P, M, mats, check=False), lifts)
    M._cache["cover"] = got
    return got


@dataclass
class Envelope:
    module: Representation
    mono: ModuleMap
    socle_vertices: Tuple[int, ...]


def injective_envelope(M: Representation) -> Envelope:
    """Computed as the dual of the projective cover of ``D M``."""
    got = M._cache.get("envelope")
    if got is None:
        cov = projective_cover(dual(M))
        inj = dual(cov.module)
        mono = ModuleMap(M, inj, [m.T for m in cov.epi.mats], check=False)
        got = Envelope(inj, mono, tuple(v for v, _ in cov.lifts))
        M._cache["envelope"] = got
    return got


def envelopes(M: Representation) -> dict:
    cov = projective_cover(M)
    env = injective_envelope(M)
    return {"projective_cover": (cov.module, cov.epi), "injective_envelope": (env.module, env.mono)}


def syzygy(M: Representation) -> Tuple[Representation, ModuleMap, Cover]:
    """``Omega(M)`` with its inclusion into the projective cover."""
    got = M._cache.get("syzygy")
    if got is None:
        cov = projective_cover(M)
        K, incl = kernel_of(cov.epi)
        K.label = f"Omega({M.label})" if M.label else ""
        got = (K, incl, cov)
        M._cache["syzygy"] = got
    return got


def cosyzygy(M: Representation) -> Representation:
    K, _, _ = syzygy(dual(M))
    return dual(K)


def syzygies(M: Representation, t: int, direction: str = "syzygy") -> List[Representation]:
    if t < 1:
        raise ValueError("t >= 1 required")
    out = []
    X = M
    for _ in range(t):
        X = syzygy(X)[0] if direction == "syzygy" else cosyzygy(X)
        out.append(X)
    return out


def is_projective(M: Representation) -> bool:
    """Decided exactly: the projective cover is an isomorphism iff dimensions agree."""
    return projective_cover(M).module.dim == M.dim


def is_injective(M: Representation) -> bool:
    return is_projective(dual(M))


# -- isomorphism and indecomposability ----------------------------------------

@dataclass
class IsoResult:
    status: str  # "isomorphic" | "not_isomorphic" | "inconclusive"
    certificate: Optional[ModuleMap] = None

    def __bool__(self):
        return self.status == "isomorphic"

    @property
    def definitive(self) -> bool:
        return self.status != "inconclusive"


def _invariants(M: Representation):
    got = M._cache.get("invariants")
    if got is None:
        got = (M.dims, top_dims(M), socle_dims(M), tuple(m.rank() for m in M.mats))
        M._cache["invariants"] = got
    return got


def end_dim(M: Representation) -> int:
    got = M._cache.get("end_dim")
    if got is None:
        got = hom_basis(M, M).dim
        M._cache["end_dim"] = got
    return got


def is_isomorphic(M: Representation, N: Representation, seed: int = 0, trials: int = 24) -> IsoResult:
    """Certificate search for ``M ~ N``.

    Cheap invariants reject most pairs.  Otherwise random integer combinations
    of a ``Hom(M, N)`` basis are tested for invertibility; a hit is a verified
    isomorphism, a miss after ``trials`` attempts is reported as inconclusive.
    """
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("modules over different algebras")
    if _invariants(M) != _invariants(N):
        return IsoResult("not_isomorphic")
    if M.dim == 0:
        return IsoResult("isomorphic", ModuleMap.zero(M, N))
    H = hom_basis(M, N)
    if H.dim == 0 or H.dim != end_dim(M) or H.dim != end_dim(N) or hom_dim(N, M) != H.dim:
        return IsoResult("not_isomorphic")
    rng = random.Random(seed)
    field = M.field
    for trial in range(trials):
        if H.dim == 1:
            coeffs = [1]
        else:
            bound = 3 + 4 * trial
            coeffs = [field(rng.randint(-bound, bound)) for _ in range(H.dim)]
        f = combine(H.basis, coeffs)
        if f.is_isomorphism():
            return IsoResult("isomorphic", f)
        if H.dim == 1:
            break
    if H.dim == 1:
        # the only candidates are scalar multiples of one map
        return IsoResult("not_isomorphic")
    return IsoResult("inconclusive")


def endomorphism_constants(M: Representation):
    """Basis of ``End(M)`` and structure constants ``c[a][b]`` of "``a`` then ``b``"."""
    got = M._cache.get("end_constants")
    if got is None:
        H = hom_basis(M, M)
        coords = Coordinates(M.field, [f.vector() for f in H.basis], sum(d * d for d in M.dims))
        consts = [[coords(fa.then(fb).vector()) for fb in H.basis] for fa in H.basis]
        got = (H, consts)
        M._cache["end_constants"] = got
    return got


def trace_form_radical(field: FieldSpec, consts) -> list:
    """Radical of a structure-constant algebra via the trace form.

    Valid in characteristic 0 or ``p > dim``; callers check the bound.
    """
    n = len(consts)
    if n == 0:
        return []
    p = field.p
    # trace of left multiplication by x_k: sum_j c[k][j][j]
    traces = [sum((consts[k][j][j] for j in range(n)), field.zero) for k in range(n)]
    if p:
        traces = [t % p for t in traces]
    gram = []
    for a in range(n):
        row = []
        for b in range(n):
            s = sum((consts[a][b][k] * traces[k] for k in range(n)), field.zero)
            row.append(s % p if p else s)
        gram.append(row)
    return kernel(Matrix._wrap(field, gram, n)).columns()


def _check_characteristic(field: FieldSpec, dim: int) -> None:
    if field.p and field.p <= dim:
        raise UnsupportedCharacteristic(
            f"characteristic {field.p} is too small for an endomorphism algebra of dimension {dim}"
        )


def endomorphism_radical(M: Representation) -> Tuple[HomSpace, List[ModuleMap]]:
    H, consts = endomorphism_constants(M)
    _check_characteristic(M.field, H.dim)
    rad = trace_form_radical(M.field, consts)
    return H, [combine(H.basis, v) for v in rad]


def is_indecomposable(M: Representation) -> bool:
    """``End(M)`` is local, i.e. its radical has codimension one."""
    if M.dim == 0:
        return False
    H, rad = endomorphism_radical(M)
    return H.dim - len(rad) == 1


# -- random modules -----------------------------------------------------------

def random_module(alg: Algebra, rng: random.Random, max_gens: int = 3, max_relations: int = 3) -> Representation:
    """Random quotient (or submodule) of a small free module.

    Both constructions satisfy every relation by design.
    """
    field = alg.field
    gens = [rng.randrange(alg.n_vertices) for _ in range(rng.randint(1, max_gens))]
    F = free_module(alg, gens)
    elements = []
    for _ in range(rng.randint(0, max_relations)):
        v = rng.randrange(alg.n_vertices)
        if F.dims[v] == 0:
            continue
        elements.append((v, [field(rng.randint(-2, 2)) for _ in range(F.dims[v])]))
    U, incl = generated_submodule(F, elements)
    if rng.random() < 0.3 and U.dim:
        return U.with_label("random-sub")
    Q, _ = quotient(F, [m.columns() for m in incl.mats])
    return Q.with_label("random-quot")
