"""Independent reference computations built on sympy.

These use Kronecker-product formulations of the defining equations and share
no linear algebra with the package, so agreement is meaningful.
"""
from fractions import Fraction

import sympy as sp


def _sym(m):
    """Package matrix -> sympy matrix over the rationals."""
    if m.nrows == 0 or m.ncols == 0:
        return sp.zeros(m.nrows, m.ncols)
    return sp.Matrix([[sp.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in m.rows])


def _kron(a, b):
    if a.rows * b.rows == 0 or a.cols * b.cols == 0:
        return sp.zeros(a.rows * b.rows, a.cols * b.cols)
    return sp.kronecker_product(a, b)


def _rank(blocks_rows, ncols):
    rows = [r for r in blocks_rows if r.rows]
    if not rows or ncols == 0:
        return 0
    return sp.Matrix.vstack(*rows).rank()


def hom_dim(M, N):
    """dim Hom(M, N) from vec(N_g F_s - F_t M_g) = 0 with column-major vec."""
    alg = M.algebra
    sizes = [N.dims[v] * M.dims[v] for v in range(alg.n_vertices)]
    offs = [sum(sizes[:v]) for v in range(alg.n_vertices)]
    total = sum(sizes)
    if total == 0:
        return 0
    eqs = []
    for gi, g in enumerate(alg.generators):
        s, t = g.source, g.target
        Ng, Mg = _sym(N.mats[gi]), _sym(M.mats[gi])
        left = _kron(sp.eye(M.dims[s]), Ng)
        right = _kron(Mg.T, sp.eye(N.dims[t]))
        row = sp.zeros(N.dims[t] * M.dims[s], total)
        if left.rows and left.cols:
            row[:, offs[s]:offs[s] + sizes[s]] += left
        if right.rows and right.cols:
            row[:, offs[t]:offs[t] + sizes[t]] -= right
        eqs.append(row)
    return total - _rank(eqs, total)


def ext1_dim(M, N):
    """dim Ext^1(M, N) as cocycles of extensions of representations modulo coboundaries."""
    alg = M.algebra
    q = alg.quiver
    arrows = q.arrows
    sizes = [N.dims[a.target] * M.dims[a.source] for a in arrows]
    offs = [sum(sizes[:k]) for k in range(len(arrows))]
    total = sum(sizes)
    if total == 0:
        return 0
    eqs = []
    for rel in alg.relations:
        first = next(iter(rel))
        s = arrows[q.arrow_index(first[0])].source
        t = arrows[q.arrow_index(first[-1])].target
        row = sp.zeros(N.dims[t] * M.dims[s], total)
        for path, coef in rel.items():
            idx = [q.arrow_index(x) for x in path]
            for k, ak in enumerate(idx):
                before = sp.eye(M.dims[s])
                for j in idx[:k]:
                    before = _sym(M.mats[j]) * before
                after = sp.eye(N.dims[t])
                for j in reversed(idx[k + 1:]):
                    after = after * _sym(N.mats[j])
                blk = _kron(before.T, after) * sp.Rational(Fraction(coef).numerator, Fraction(coef).denominator)
                if blk.rows and blk.cols:
                    row[:, offs[ak]:offs[ak] + sizes[ak]] += blk
        eqs.append(row)
    cocycles = total - _rank(eqs, total)
    vertex_maps = sum(M.dims[v] * N.dims[v] for v in range(alg.n_vertices))
    return cocycles - (vertex_maps - hom_dim(M, N))


def count_paths(alg_spec):
    """Number of nonzero paths of a monomial quiver algebra, by enumeration.

    ``alg_spec`` is (vertices, arrows as (name, src, dst), zero paths as tuples).
    """
    vertices, arrows, zero = alg_spec
    zero = [tuple(z) for z in zero]

    def killed(path):
        for z in zero:
            for i in range(len(path) - len(z) + 1):
                if tuple(path[i:i + len(z)]) == z:
                    return True
        return False

    count = len(vertices)
    frontier = [(a[0],) for a in arrows]
    while frontier:
        nxt = []
        for p in frontier:
            if killed(p):
                continue
            count += 1
            last = [a for a in arrows if a[0] == p[-1]][0]
            for a in arrows:
                if a[1] == last[2]:
                    nxt.append(p + (a[0],))
        frontier = nxt
        if count > 10_000:
            raise RuntimeError("not finite dimensional")
    return count
