"""Stock algebras: matrix algebras, the Zorn vector-matrix algebra,
Cayley-Dickson doublings, and direct sums.

Every constructor returns a validated Algebra: the unit and involution
checks run at build time (alternativity deliberately does not, since the
16-dimensional doubling must be constructible as a boundary case).
"""

from __future__ import annotations

from typing import Sequence

from . import linalg
from .algebra import Algebra, AlgebraError, check_involution, check_unit
from .scalars import MINUS_ONE, ONE, ZERO, Scalar


class ConstructionError(AlgebraError):
    pass


def _validated(a: Algebra) -> Algebra:
    rep = check_unit(a)
    if not rep.ok:
        raise ConstructionError(f"{a.name}: unit axiom failed")
    rep = check_involution(a)
    if not rep.ok:
        bad = [c.name for c in rep.checks if not c.passed]
        raise ConstructionError(f"{a.name}: involution checks failed: {bad}")
    return a


def matrix_algebra(k: int) -> Algebra:
    """k x k matrices, basis E_pq row-major, star = conjugate transpose."""
    if k < 1:
        raise ConstructionError("matrix_algebra needs k >= 1")
    dim = k * k

    def idx(p: int, q: int) -> int:
        return p * k + q

    structure = {}
    for p in range(k):
        for q in range(k):
            for r in range(k):
                # E_pq E_qr = E_pr
                structure[(idx(p, q), idx(q, r), idx(p, r))] = ONE
    unit = [ZERO] * dim
    for p in range(k):
        unit[idx(p, p)] = ONE
    star = [[ZERO] * dim for _ in range(dim)]
    for p in range(k):
        for q in range(k):
            star[idx(q, p)][idx(p, q)] = ONE
    labels = [f"E{p + 1}{q + 1}" for p in range(k) for q in range(k)]
    return _validated(Algebra(f"matrix:{k}", dim, labels, structure, unit, star))


# Zorn vector matrices [[a, v], [w, b]] with a, b scalars and v, w 3-vectors:
#   [[a,v],[w,b]] [[a',v'],[w',b']] =
#     [[aa' + v.w',  av' + b'v - w x w'], [a'w + bw' + v x v',  bb' + w.v']]
# Basis order: e1, e2, u1..u3 (upper 3-vector), w1..w3 (lower 3-vector).
_EPS = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1,
        (1, 0, 2): -1, (2, 1, 0): -1, (0, 2, 1): -1}


def zorn_algebra() -> Algebra:
    dim = 8
    E1, E2 = 0, 1

    def u(i: int) -> int:
        return 2 + i

    def w(i: int) -> int:
        return 5 + i

    s = {}
    s[(E1, E1, E1)] = ONE
    s[(E2, E2, E2)] = ONE
    for i in range(3):
        s[(E1, u(i), u(i))] = ONE      # e1 is a left unit on the upper block
        s[(u(i), E2, u(i))] = ONE
        s[(E2, w(i), w(i))] = ONE
        s[(w(i), E1, w(i))] = ONE
        s[(u(i), w(i), E1)] = ONE      # dot products to the diagonal
        s[(w(i), u(i), E2)] = ONE
    for (i, j, k), sign in _EPS.items():
        s[(u(i), u(j), w(k))] = ONE if sign > 0 else MINUS_ONE
        s[(w(i), w(j), u(k))] = MINUS_ONE if sign > 0 else ONE
    unit = [ONE, ONE] + [ZERO] * 6
    star = [[ZERO] * dim for _ in range(dim)]
    star[E1][E1] = ONE
    star[E2][E2] = ONE
    for i in range(3):
        star[w(i)][u(i)] = ONE         # star swaps the two 3-vectors
        star[u(i)][w(i)] = ONE
    labels = ["e1", "e2", "u1", "u2", "u3", "w1", "w2", "w3"]
    return _validated(Algebra("zorn", dim, labels, s, unit, star))


def zorn_idempotents(a: Algebra) -> dict[str, list[Scalar]]:
    e1 = [ONE] + [ZERO] * 7
    e2 = [ZERO, ONE] + [ZERO] * 6
    return {"e1": e1, "e2": e2}


def cayley_dickson(gammas: Sequence[Scalar]) -> Algebra:
    """Iterated doubling over the Gaussian rationals.

    Product at each level: (a,b)(c,d) = (ac + g*sigma(d)*b, da + b*sigma(c)),
    conjugation sigma(a,b) = (sigma(a), -b); the doubling unit squares to g.
    Levels 0..4 (dims 1..16).  Each g must be a nonzero real rational,
    otherwise the exported conjugate-linear star fails to be multiplicative
    against the structure constants.
    """
    levels = len(gammas)
    if levels > 4:
        raise ConstructionError("cayley_dickson supports at most 4 levels")
    for g in gammas:
        if g.is_zero():
            raise ConstructionError("cayley_dickson gamma must be nonzero")
        if g.b != 0:
            raise ConstructionError("cayley_dickson gamma must be real")

    # mul[i][j] = list of (k, coeff); sigma = diagonal signs
    mul: list[list[list[tuple[int, Scalar]]]] = [[[(0, ONE)]]]
    sigma: list[Scalar] = [ONE]
    for g in gammas:
        n = len(sigma)
        old = mul
        new_mul: list[list[list[tuple[int, Scalar]]]] = [
            [[] for _ in range(2 * n)] for _ in range(2 * n)]

        def put(i: int, j: int, terms: list[tuple[int, Scalar]],
                acc=new_mul) -> None:
            merged: dict[int, Scalar] = {}
            for k, c in terms:
                merged[k] = merged.get(k, ZERO) + c
            acc[i][j] = sorted(((k, c) for k, c in merged.items()
                                if not c.is_zero()))

        for i in range(n):
            for j in range(n):
                ac = old[i][j]
                # (a,0)(c,0) = (ac, 0)
                put(i, j, [(k, c) for k, c in ac])
                # (a,0)(0,d) = (0, da)
                put(i, n + j, [(n + k, c) for k, c in old[j][i]])
                # (0,b)(c,0) = (0, b*sigma(c))
                put(n + i, j, [(n + k, c * sigma[j]) for k, c in old[i][j]])
                # (0,b)(0,d) = (g*sigma(d)*b, 0)
                put(n + i, n + j, [(k, g * sigma[j] * c) for k, c in old[j][i]])
        mul = new_mul
        # sigma(a, b) = (sigma(a), -b): the doubled half is negated outright
        sigma = sigma + [MINUS_ONE] * len(sigma)

    dim = len(sigma)
    structure = {}
    for i in range(dim):
        for j in range(dim):
            for k, c in mul[i][j]:
                structure[(i, j, k)] = c
    unit = [ONE] + [ZERO] * (dim - 1)
    star = [[ZERO] * dim for _ in range(dim)]
    for k in range(dim):
        star[k][k] = sigma[k]
    labels = ["1"] + [f"g{k}" for k in range(1, dim)]
    name = "cd:" + ",".join(str(g) for g in gammas) if gammas else "cd:"
    return _validated(Algebra(name, dim, labels, structure, unit, star))


def direct_sum(a: Algebra, b: Algebra) -> Algebra:
    """Componentwise product and star on the concatenated coordinates."""
    dim = a.dim + b.dim
    structure = {}
    for i, j, k, c in a.structure_entries():
        structure[(i, j, k)] = c
    for i, j, k, c in b.structure_entries():
        structure[(a.dim + i, a.dim + j, a.dim + k)] = c
    unit = list(a.unit.coords) + list(b.unit.coords)
    star = [[ZERO] * dim for _ in range(dim)]
    for i, row in enumerate(a.star_matrix()):
        for j, c in enumerate(row):
            star[i][j] = c
    for i, row in enumerate(b.star_matrix()):
        for j, c in enumerate(row):
            star[a.dim + i][a.dim + j] = c
    labels = ([f"L.{t}" for t in a.basis_labels]
              + [f"R.{t}" for t in b.basis_labels])
    return _validated(Algebra(f"dsum:{a.name},{b.name}", dim, labels,
                              structure, unit, star))


def change_of_basis(a: Algebra, m: Sequence[Sequence[Scalar]],
                    name: str | None = None) -> Algebra:
    """Transport a to the basis whose old-coordinate vectors are m's columns."""
    if not linalg.is_invertible(list(map(list, m))):
        raise ConstructionError("change of basis matrix is singular")
    dim = a.dim
    minv = linalg.inverse(list(map(list, m)))

    def to_new(coords: Sequence[Scalar]) -> list[Scalar]:
        return linalg.mat_vec(minv, coords)

    cols = [[m[r][c] for r in range(dim)] for c in range(dim)]
    new_basis_old = [a.element(col) for col in cols]
    structure = {}
    for i in range(dim):
        for j in range(dim):
            prod = to_new((new_basis_old[i] * new_basis_old[j]).coords)
            for k, c in enumerate(prod):
                if not c.is_zero():
                    structure[(i, j, k)] = c
    unit = to_new(a.unit.coords)
    # star'(y) = M^{-1} S conj(M) conj(y)
    s_old = a.star_matrix()
    sm = [[ZERO] * dim for _ in range(dim)]
    for r in range(dim):
        for c in range(dim):
            acc = ZERO
            for t in range(dim):
                acc = acc + s_old[r][t] * m[t][c].conj()
            sm[r][c] = acc
    star = [linalg.mat_vec(minv, [sm[r][c] for r in range(dim)])
            for c in range(dim)]
    star_rows = [[star[c][r] for c in range(dim)] for r in range(dim)]
    return _validated(Algebra(name or f"{a.name}~", dim, a.basis_labels,
                              structure, unit, star_rows))
