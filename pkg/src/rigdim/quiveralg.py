"""Finite-dimensional basic algebras: bound path algebras kQ/I and their kin.

An :class:`Algebra` is a finite-dimensional algebra with a complete set of
primitive orthogonal idempotents (the *vertices*), a basis adapted to them and
a multiplication table.  A list of *generators* (the arrows, for a path
algebra) spans the radical as a one-sided ideal, and every basis element is a
word in the generators.  Modules only ever store the action of the
generators, see :mod:`rigdim.repmod`.

Products compose left to right: for paths ``u`` and ``v``, ``u * v`` is
"first ``u`` then ``v``" and is zero unless ``u`` ends where ``v`` starts.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .exactla import FieldSpec, _rref_inplace


class AlgebraError(ValueError):
    pass


class NotFiniteDimensional(AlgebraError):
    pass


class NotHomogeneous(AlgebraError):
    pass


class NotAdmissible(AlgebraError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError("vertex names must be unique")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraError("arrow names must be unique")
        n = len(self.vertices)
        for a in self.arrows:
            if not (0 <= a.source < n and 0 <= a.target < n):
                raise AlgebraError(f"arrow {a.name} has a missing endpoint")

    @classmethod
    def from_names(cls, vertices: Sequence[str], arrows: Sequence[Tuple[str, str, str]]) -> "Quiver":
        """``arrows`` are ``(name, from_vertex_name, to_vertex_name)`` triples."""
        vertices = tuple(str(v) for v in vertices)
        index = {v: i for i, v in enumerate(vertices)}
        out = []
        for name, s, t in arrows:
            if str(s) not in index or str(t) not in index:
                raise AlgebraError(f"arrow {name} has a missing endpoint")
            out.append(Arrow(str(name), index[str(s)], index[str(t)]))
        return cls(vertices, tuple(out))

    def arrow_index(self, name: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.name == name:
                return i
        raise KeyError(name)

    def in_degree(self, v: int) -> int:
        return sum(1 for a in self.arrows if a.target == v)

    def out_degree(self, v: int) -> int:
        return sum(1 for a in self.arrows if a.source == v)

    def is_nakayama(self) -> bool:
        return all(self.in_degree(v) <= 1 and self.out_degree(v) <= 1 for v in range(len(self.vertices)))


@dataclass(frozen=True)
class BasisElement:
    word: Tuple[int, ...]
    source: int
    target: int

    @property
    def is_idempotent(self) -> bool:
        return not self.word


# A relation is a mapping from paths (tuples of arrow names) to coefficients.
Relation = Mapping[Tuple[str, ...], object]


class Algebra:
    """Basic finite-dimensional algebra with structure constants.

    ``mult[(a, b)]`` is the product of basis elements ``a`` and ``b`` as a
    tuple of ``(index, coefficient)`` pairs; missing keys mean zero.
    """

    def __init__(
        self,
        field: FieldSpec,
        vertices: Sequence[str],
        generators: Sequence[Arrow],
        basis: Sequence[BasisElement],
        mult: Dict[Tuple[int, int], Tuple[Tuple[int, object], ...]],
        *,
        quiver: Optional[Quiver] = None,
        relations: Optional[Sequence[Dict[Tuple[str, ...], object]]] = None,
        name: str = "",
    ):
        self.field = field
        self.vertices = tuple(vertices)
        self.generators = tuple(generators)
        self.basis = tuple(basis)
        self.mult = dict(mult)
        self.quiver = quiver
        self.relations = tuple(dict(r) for r in relations) if relations is not None else None
        self.name = name
        self._opposite: Optional[Algebra] = None

        self.idempotent = [None] * len(self.vertices)
        self.gen_index = [None] * len(self.generators)
        for i, b in enumerate(self.basis):
            if b.is_idempotent:
                self.idempotent[b.source] = i
            elif len(b.word) == 1:
                self.gen_index[b.word[0]] = i
        if any(x is None for x in self.idempotent):
            raise AlgebraError("basis must contain every trivial path")
        if any(x is None for x in self.gen_index):
            raise AlgebraError("every generator must be a basis element")
        self._between: Dict[Tuple[int, int], Tuple[int, ...]] = {}
        for i, b in enumerate(self.basis):
            self._between.setdefault((b.source, b.target), ())
            self._between[(b.source, b.target)] += (i,)

    # -- sizes and lookups
    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def between(self, i: int, j: int) -> Tuple[int, ...]:
        """Basis indices of ``e_i A e_j`` (elements starting at i, ending at j)."""
        return self._between.get((i, j), ())

    def starting_at(self, i: int) -> Tuple[int, ...]:
        return tuple(k for k, b in enumerate(self.basis) if b.source == i)

    def radical_dim(self) -> int:
        return self.dim - self.n_vertices

    def is_semisimple(self) -> bool:
        return self.radical_dim() == 0

    def word_name(self, k: int) -> str:
        b = self.basis[k]
        if b.is_idempotent:
            return f"e{self.vertices[b.source]}"
        return "*".join(self.generators[g].name for g in b.word)

    def length(self, k: int) -> int:
        return len(self.basis[k].word)

    # -- multiplication
    def multiply(self, u: Sequence, v: Sequence) -> list:
        """Product of two coordinate vectors over the basis."""
        p = self.field.p
        out = [self.field.zero] * self.dim
        for a, x in enumerate(u):
            if x == 0:
                continue
            for b, y in enumerate(v):
                if y == 0:
                    continue
                for k, c in self.mult.get((a, b), ()):
                    out[k] += x * y * c
        if p:
            out = [x % p for x in out]
        return out

    def unit_vector(self, k: int) -> list:
        v = [self.field.zero] * self.dim
        v[k] = self.field.one
        return v

    def one(self) -> list:
        v = [self.field.zero] * self.dim
        for k in self.idempotent:
            v[k] = self.field.one
        return v

    def check_associative(self) -> bool:
        """Full triple scan of the basis."""
        n = self.dim
        for a in range(n):
            for b in range(n):
                ab = self.mult.get((a, b), ())
                for c in range(n):
                    left: Dict[int, object] = {}
                    for k, x in ab:
                        for m, y in self.mult.get((k, c), ()):
                            left[m] = left.get(m, 0) + x * y
                    right: Dict[int, object] = {}
                    for k, x in self.mult.get((b, c), ()):
                        for m, y in self.mult.get((a, k), ()):
                            right[m] = right.get(m, 0) + x * y
                    p = self.field.p
                    norm = (lambda d: {k: (v % p if p else v) for k, v in d.items() if (v % p if p else v) != 0})
                    if norm(left) != norm(right):
                        return False
        return True

    # -- derived algebras
    def opposite(self) -> "Algebra":
        if self._opposite is None:
            gens = [Arrow(g.name, g.target, g.source) for g in self.generators]
            basis = [BasisElement(tuple(reversed(b.word)), b.target, b.source) for b in self.basis]
            mult = {(b, a): v for (a, b), v in self.mult.items()}
            quiver = None
            if self.quiver is not None:
                quiver = Quiver(self.quiver.vertices, tuple(gens))
            relations = None
            if self.relations is not None:
                relations = [{tuple(reversed(p)): c for p, c in r.items()} for r in self.relations]
            name = self.name[:-3] if self.name.endswith("^op") else (self.name + "^op" if self.name else "")
            opp = Algebra(self.field, self.vertices, gens, basis, mult, quiver=quiver, relations=relations, name=name)
            opp._opposite = self
            self._opposite = opp
        return self._opposite

    def components(self) -> list:
        """Vertex sets of the connected components (blocks)."""
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for b in self.basis:
            parent[find(b.source)] = find(b.target)
        groups: Dict[int, list] = {}
        for v in range(self.n_vertices):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def is_nakayama(self) -> bool:
        if self.quiver is None:
            return False
        return self.quiver.is_nakayama()

    def loewy_length(self, vertex: Optional[int] = None) -> int:
        """Loewy length of ``P(vertex)`` (or of the algebra), for graded presentations."""
        if vertex is None:
            return max((self.loewy_length(v) for v in range(self.n_vertices)), default=0)
        return 1 + max(len(self.basis[k].word) for k in self.starting_at(vertex))

    def same_presentation(self, other: "Algebra") -> bool:
        return (
            self.field == other.field
            and self.vertices == other.vertices
            and self.generators == other.generators
            and self.basis == other.basis
            and _norm_mult(self) == _norm_mult(other)
        )

    def __repr__(self):
        label = self.name or "Algebra"
        return f"<{label} over {self.field}: {self.n_vertices} vertices, dim {self.dim}>"


def _norm_mult(alg: Algebra) -> dict:
    return {k: tuple(sorted(v)) for k, v in alg.mult.items() if v}


# -- building kQ/I -----------------------------------------------------------

def _path_endpoints(quiver: Quiver, path: Tuple[int, ...]) -> Tuple[int, int]:
    for a, b in zip(path, path[1:]):
        if quiver.arrows[a].target != quiver.arrows[b].source:
            raise NotAdmissible(f"path {'*'.join(quiver.arrows[x].name for x in path)} is not composable")
    return quiver.arrows[path[0]].source, quiver.arrows[path[-1]].target


def _relation_text(rel: Relation) -> str:
    terms = []
    for p, c in rel.items():
        path = "*".join(p)
        terms.append(path if c == 1 else f"-{path}" if c == -1 else f"{c}*{path}")
    return " + ".join(terms).replace("+ -", "- ")


def build_algebra(
    field: FieldSpec,
    quiver: Quiver,
    relations: Sequence[Relation] = (),
    max_path_length: int = 64,
    name: str = "",
) -> Algebra:
    """Construct ``kQ/I`` for ``I`` generated by length-homogeneous relations.

    The basis is computed degree by degree: the degree-``d`` part is the span
    of products ``b * a`` (``b`` a degree ``d-1`` basis path, ``a`` an arrow)
    modulo the images ``c * r`` of the relations.  Among equivalent paths the
    lexicographically smaller ones (by arrow names) are kept as normal forms.
    """
    arrows = quiver.arrows
    parsed = []
    for rel in relations:
        terms = {}
        for path, coeff in rel.items():
            path = tuple(path)
            c = field(coeff)
            if c == 0:
                continue
            try:
                idx = tuple(quiver.arrow_index(a) for a in path)
            except KeyError as exc:
                raise NotAdmissible(f"unknown arrow {exc.args[0]!r} in relation {_relation_text(rel)!r}") from None
            terms[idx] = terms.get(idx, 0) + c
        terms = {k: field(v) for k, v in terms.items()}
        terms = {k: v for k, v in terms.items() if v != 0}
        if not terms:
            continue
        lengths = {len(p) for p in terms}
        if len(lengths) > 1:
            raise NotHomogeneous(f"relation {_relation_text(rel)!r} mixes path lengths {sorted(lengths)}")
        length = lengths.pop()
        if length < 2:
            raise NotAdmissible(f"relation {_relation_text(rel)!r} has a term of length {length} < 2")
        ends = {_path_endpoints(quiver, p) for p in terms}
        if len(ends) > 1:
            raise NotAdmissible(f"relation {_relation_text(rel)!r} has no common source and target")
        parsed.append((length, ends.pop(), terms, rel))

    names = [a.name for a in arrows]
    # degree 0
    basis: list = [BasisElement((), v, v) for v in range(len(quiver.vertices))]
    by_degree = [list(range(len(basis)))]
    rmul: Dict[Tuple[int, int], Dict[int, object]] = {}
    p = field.p

    def right_mult(vec: Dict[int, object], a: int) -> Dict[int, object]:
        out: Dict[int, object] = {}
        for k, c in vec.items():
            for m, d in rmul.get((k, a), {}).items():
                out[m] = out.get(m, 0) + c * d
        return {k: (v % p if p else v) for k, v in out.items() if (v % p if p else v) != 0}

    degree = 0
    while True:
        degree += 1
        if degree > max_path_length:
            raise NotFiniteDimensional(
                f"paths of length {max_path_length} are still nonzero; the ideal is not admissible"
            )
        prev = by_degree[degree - 1]
        span = []  # candidate products (b, a)
        for b in prev:
            for ai, a in enumerate(arrows):
                if a.source == basis[b].target:
                    span.append((b, ai))
        if not span:
            by_degree.append([])
            break
        words = [basis[b].word + (a,) for b, a in span]
        order = sorted(range(len(span)), key=lambda i: [names[x] for x in words[i]], reverse=True)
        col_of = {span[i]: c for c, i in enumerate(order)}
        ncols = len(span)
        rows = []
        for length, (s, t), terms, _ in parsed:
            if length > degree:
                continue
            for c in by_degree[degree - length]:
                if basis[c].target != s:
                    continue
                row = [field.zero] * ncols
                for path, coeff in terms.items():
                    vec = {c: field.one}
                    for a in path[:-1]:
                        vec = right_mult(vec, a)
                    for k, x in vec.items():
                        col = col_of[(k, path[-1])]
                        row[col] += coeff * x
                if p:
                    row = [x % p for x in row]
                if any(x != 0 for x in row):
                    rows.append(row)
        pivots = _rref_inplace(rows, ncols, field) if rows else []
        pivset = set(pivots)
        free_cols = [c for c in range(ncols) if c not in pivset]
        free_cols.sort(key=lambda c: [names[x] for x in words[order[c]]])
        new_index = {}
        current = []
        for c in free_cols:
            b, a = span[order[c]]
            new_index[c] = len(basis)
            current.append(len(basis))
            basis.append(BasisElement(words[order[c]], basis[b].source, arrows[a].target))
        for c in range(ncols):
            b, a = span[order[c]]
            if c in new_index:
                rmul[(b, a)] = {new_index[c]: field.one}
            else:
                r = pivots.index(c)
                vec = {}
                for f in free_cols:
                    x = rows[r][f]
                    if x != 0:
                        x = -x
                        vec[new_index[f]] = x % p if p else x
                rmul[(b, a)] = vec
        by_degree.append(current)
        if not current:
            break

    # multiplication table from right multiplication by arrows
    n = len(basis)
    mult: Dict[Tuple[int, int], Tuple[Tuple[int, object], ...]] = {}
    for u in range(n):
        for v in range(n):
            if basis[u].target != basis[v].source:
                continue
            vec = {u: field.one}
            for a in basis[v].word:
                vec = right_mult(vec, a)
                if not vec:
                    break
            if vec:
                mult[(u, v)] = tuple(sorted(vec.items()))
    rel_dicts = [{tuple(names[a] for a in path): c for path, c in terms.items()} for _, _, terms, _ in parsed]
    alg = Algebra(field, quiver.vertices, arrows, basis, mult, quiver=quiver, relations=rel_dicts, name=name)
    alg.nilpotency = degree
    return alg


def opposite(alg: Algebra) -> Algebra:
    return alg.opposite()


def direct_product(a: Algebra, b: Algebra, name: str = "") -> Algebra:
    """``a x b``: disjoint union of quivers, relations concatenated."""
    if a.field != b.field:
        raise AlgebraError("field mismatch")
    if a.quiver is None or b.quiver is None:
        raise AlgebraError("direct products need quiver presentations")
    va = [f"a{v}" for v in a.vertices] if set(a.vertices) & set(b.vertices) else list(a.vertices)
    vb = [f"b{v}" for v in b.vertices] if set(a.vertices) & set(b.vertices) else list(b.vertices)
    na = [g.name for g in a.generators]
    nb = [g.name for g in b.generators]
    clash = set(na) & set(nb)
    ren_a = {x: (f"{x}_a" if x in clash else x) for x in na}
    ren_b = {x: (f"{x}_b" if x in clash else x) for x in nb}
    n = a.n_vertices
    arrows = [Arrow(ren_a[g.name], g.source, g.target) for g in a.generators]
    arrows += [Arrow(ren_b[g.name], g.source + n, g.target + n) for g in b.generators]
    quiver = Quiver(tuple(va + vb), tuple(arrows))
    rels = [{tuple(ren_a[x] for x in p): c for p, c in r.items()} for r in a.relations or ()]
    rels += [{tuple(ren_b[x] for x in p): c for p, c in r.items()} for r in b.relations or ()]
    nil = max(a.loewy_length(), b.loewy_length())
    return build_algebra(a.field, quiver, rels, max_path_length=max(nil + 1, 2), name=name or f"{a.name}x{b.name}")


def restrict_to_block(alg: Algebra, vertices: Sequence[int], name: str = "") -> Algebra:
    """The block (product factor) of a quiver algebra supported on ``vertices``."""
    if alg.quiver is None:
        raise AlgebraError("blocks need a quiver presentation")
    keep = sorted(vertices)
    index = {v: i for i, v in enumerate(keep)}
    arrows = [Arrow(a.name, index[a.source], index[a.target]) for a in alg.quiver.arrows if a.source in index]
    kept_names = {a.name for a in arrows}
    rels = [r for r in alg.relations or () if all(x in kept_names for p in r for x in p)]
    quiver = Quiver(tuple(alg.quiver.vertices[v] for v in keep), tuple(arrows))
    return build_algebra(alg.field, quiver, rels, max_path_length=alg.loewy_length() + 1, name=name)


def parse_relation(text: str) -> Dict[Tuple[str, ...], object]:
    """Parse ``"alpha*beta - 2*gamma*delta"`` into ``{path: coefficient}``.

    Coefficients are integers or fractions written before the first ``*``.
    """
    from fractions import Fraction
    import re

    s = text.replace(" ", "")
    if not s:
        raise AlgebraError("empty relation")
    if s[0] not in "+-":
        s = "+" + s
    out: Dict[Tuple[str, ...], object] = {}
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        if not body:
            raise AlgebraError(f"cannot parse relation {text!r}")
        parts = body.split("*")
        coeff = Fraction(1)
        if re.fullmatch(r"\d+(/\d+)?", parts[0]):
            coeff = Fraction(parts[0])
            parts = parts[1:]
        if not parts or any(not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", x) for x in parts):
            raise AlgebraError(f"cannot parse term {body!r} in relation {text!r}")
        if sign == "-":
            coeff = -coeff
        key = tuple(parts)
        out[key] = out.get(key, 0) + coeff
    if "".join(sign + body for sign, body in re.findall(r"([+-])([^+-]+)", s)) != s:
        raise AlgebraError(f"cannot parse relation {text!r}")
    return out
