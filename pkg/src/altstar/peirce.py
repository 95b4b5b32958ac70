"""Peirce decomposition relative to a symmetric idempotent, and the
left-annihilator condition on the column spaces A·e_i.

With e1 a symmetric idempotent, e2 = 1 - e1, and A_ij = e_i (A e_j), an
alternative algebra splits as A = A11 + A12 + A21 + A22 (direct sum).  The
component relations checked here:

  (i)   A_ij * A_jl  is contained in  A_il
  (ii)  A_ij * A_ij  is contained in  A_ji   (may be nonzero for i != j)
  (iii) A_ij * A_kl = 0  when j != k and (i,j) != (k,l)
  (iv)  x*x = 0  for x in A_12 or A_21
  (v)   star maps A_ij into A_ji

The annihilator condition ("spade") for an idempotent e:
x * (a e) = 0 for all a implies x = 0; note the parenthesization, the
products are x(ae), never (xa)e.  It is decided exactly via the nullspace
of the induced linear map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import linalg
from .algebra import (Algebra, AlgebraError, AxiomReport, CheckResult,
                      Element, Witness)
from .sampling import (derive_rng, random_combination,
                       random_nonzero_combination)
from .scalars import I, Scalar, ZERO, half_power

IJ_PAIRS = ((1, 1), (1, 2), (2, 1), (2, 2))


class PeirceError(AlgebraError):
    pass


@dataclass(frozen=True)
class IdempotentInfo:
    is_idempotent: bool
    is_symmetric: bool
    is_trivial: bool


def classify_idempotent(a: Algebra, e: Element) -> IdempotentInfo:
    idem = (e * e - e).is_zero()
    sym = (e.star() - e).is_zero()
    trivial = e.is_zero() or (e - a.unit).is_zero()
    return IdempotentInfo(idem, sym, trivial)


def is_symmetric_idempotent(a: Algebra, e: Element) -> bool:
    info = classify_idempotent(a, e)
    return info.is_idempotent and info.is_symmetric


def find_symmetric_idempotents(a: Algebra,
                               extra: Sequence[Element] = ()) -> list[Element]:
    """Nontrivial symmetric idempotents among structured candidates.

    Candidates: basis vectors, (1 +- b)/2 and (1 +- i*b)/2 for basis b,
    plus any caller-supplied elements.  Deterministic order, deduplicated.
    """
    half = half_power(1)
    candidates: list[Element] = []
    for b in a.basis():
        candidates.append(b)
        candidates.append((a.unit + b).scale(half))
        candidates.append((a.unit - b).scale(half))
        candidates.append((a.unit + b.scale(I)).scale(half))
        candidates.append((a.unit - b.scale(I)).scale(half))
    candidates.extend(extra)
    out: list[Element] = []
    seen = set()
    for e in candidates:
        if e.coords in seen:
            continue
        seen.add(e.coords)
        info = classify_idempotent(a, e)
        if info.is_idempotent and info.is_symmetric and not info.is_trivial:
            out.append(e)
    return out


class PeirceSystem:
    """A validated pair (e1, e2 = 1 - e1) with the four component bases."""

    def __init__(self, algebra: Algebra, e1: Element):
        info = classify_idempotent(algebra, e1)
        if not info.is_idempotent:
            raise PeirceError("e1 is not idempotent")
        if not info.is_symmetric:
            raise PeirceError("e1 is not star-symmetric")
        if info.is_trivial:
            raise PeirceError("e1 must differ from 0 and 1")
        self.algebra = algebra
        self.e1 = e1
        self.e2 = algebra.unit - e1

        # compatibility (e_i b) e_j = e_i (b e_j) on the basis extends linearly
        for b in algebra.basis():
            for ei in (self.e1, self.e2):
                for ej in (self.e1, self.e2):
                    if not ((ei * b) * ej - ei * (b * ej)).is_zero():
                        raise PeirceError(
                            "idempotent fails Peirce compatibility "
                            f"(e_i b) e_j != e_i (b e_j) at basis {b!r}")

        bases: dict[tuple[int, int], list[Element]] = {}
        for ij in IJ_PAIRS:
            projected = [self.project(b, ij) for b in algebra.basis()]
            keep = linalg.independent_subset([p.coords for p in projected])
            bases[ij] = [projected[t] for t in keep]
        self.component_bases = bases
        if sum(len(v) for v in bases.values()) != algebra.dim:
            raise PeirceError("Peirce components do not span the algebra")
        stacked = [list(v.coords) for ij in IJ_PAIRS for v in bases[ij]]
        if linalg.rank(stacked) != algebra.dim:
            raise PeirceError("Peirce components are not independent")

    def idempotent(self, i: int) -> Element:
        return self.e1 if i == 1 else self.e2

    def project(self, x: Element, ij: tuple[int, int]) -> Element:
        i, j = ij
        return self.idempotent(i) * (x * self.idempotent(j))

    def component_dims(self) -> dict[tuple[int, int], int]:
        return {ij: len(self.component_bases[ij]) for ij in IJ_PAIRS}


@dataclass(frozen=True)
class PeirceSplit:
    parts: dict  # (i, j) -> Element

    def __getitem__(self, ij: tuple[int, int]) -> Element:
        return self.parts[ij]

    def recombined(self) -> Element:
        out = None
        for ij in IJ_PAIRS:
            out = self.parts[ij] if out is None else out + self.parts[ij]
        return out


def peirce_decompose(p: PeirceSystem, x: Element) -> PeirceSplit:
    """Split x into its four components; exact, and verified to recombine."""
    parts = {}
    for ij in IJ_PAIRS:
        i, j = ij
        ei, ej = p.idempotent(i), p.idempotent(j)
        left_first = (ei * x) * ej
        right_first = ei * (x * ej)
        if not (left_first - right_first).is_zero():
            raise PeirceError(
                "compatibility failure: (e_i x) e_j != e_i (x e_j)")
        parts[ij] = right_first
    split = PeirceSplit(parts)
    if not (split.recombined() - x).is_zero():
        raise PeirceError("Peirce components do not recombine to x")
    return split


def component_of(p: PeirceSystem, x: Element, ij: tuple[int, int]) -> bool:
    """True iff x lies in A_ij (all other components vanish)."""
    split = peirce_decompose(p, x)
    return all(split[kl].is_zero() for kl in IJ_PAIRS if kl != ij) \
        and (split[ij] - x).is_zero()


def random_component(p: PeirceSystem, ij: tuple[int, int], rng,
                     nonzero: bool = False) -> Element:
    basis = p.component_bases[ij]
    if not basis:
        raise PeirceError(f"A_{ij[0]}{ij[1]} is zero-dimensional")
    if nonzero:
        return random_nonzero_combination(basis, rng)
    return random_combination(basis, rng)


@dataclass(frozen=True)
class PeirceRelationsReport:
    algebra_name: str
    samples: int
    seed: int
    checks: tuple[CheckResult, ...]
    offdiag_product_witness: Optional[Witness]  # nonzero x12*y12 if seen

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def check_peirce_relations(p: PeirceSystem, samples: int,
                           seed: int) -> PeirceRelationsReport:
    """Sampled membership checks for relations (i)-(v) above.

    Membership is decided by exact re-decomposition of each product.  The
    report also carries the first nonzero A12*A12 product encountered,
    which witnesses the genuinely alternative (nonassociative) case.
    """
    a = p.algebra
    failures: dict[str, Witness] = {}
    names: list[str] = []

    def note(name: str, args: tuple[Element, ...], residual: Element) -> None:
        if name not in failures and not residual.is_zero():
            failures[name] = Witness(args, residual)

    def membership_residual(x: Element, ij: tuple[int, int]) -> Element:
        split = peirce_decompose(p, x)
        out = a.zero()
        for kl in IJ_PAIRS:
            if kl != ij:
                out = out + split[kl]
        return out

    for i, j in IJ_PAIRS:
        for k, l in IJ_PAIRS:
            if j == k:
                names.append(f"(i) A{i}{j}*A{k}{l} in A{i}{l}")
            elif (i, j) == (k, l):
                names.append(f"(ii) A{i}{j}*A{i}{j} in A{j}{i}")
            else:
                names.append(f"(iii) A{i}{j}*A{k}{l} = 0")
    names.append("(iv) squares in A12 vanish")
    names.append("(iv) squares in A21 vanish")
    for i, j in IJ_PAIRS:
        names.append(f"(v) star(A{i}{j}) in A{j}{i}")

    offdiag_witness: Optional[Witness] = None
    dims = p.component_dims()

    for s in range(samples):
        rng = derive_rng(seed, "peirce", s)
        draws = {}
        for ij in IJ_PAIRS:
            if dims[ij]:
                draws[ij] = (random_component(p, ij, rng),
                             random_component(p, ij, rng))
        for i, j in IJ_PAIRS:
            if (i, j) not in draws:
                continue
            x = draws[(i, j)][0]
            for k, l in IJ_PAIRS:
                if (k, l) not in draws:
                    continue
                y = draws[(k, l)][1] if (k, l) == (i, j) else draws[(k, l)][0]
                prod = x * y
                if j == k:
                    note(f"(i) A{i}{j}*A{k}{l} in A{i}{l}", (x, y),
                         membership_residual(prod, (i, l)))
                elif (i, j) == (k, l):
                    note(f"(ii) A{i}{j}*A{i}{j} in A{j}{i}", (x, y),
                         membership_residual(prod, (j, i)))
                    if (i, j) == (1, 2) and offdiag_witness is None \
                            and not prod.is_zero():
                        offdiag_witness = Witness((x, y), prod)
                else:
                    note(f"(iii) A{i}{j}*A{k}{l} = 0", (x, y), prod)
        for ij, tag in (((1, 2), "(iv) squares in A12 vanish"),
                        ((2, 1), "(iv) squares in A21 vanish")):
            if ij in draws:
                x = draws[ij][0]
                note(tag, (x, x), x * x)
        for i, j in IJ_PAIRS:
            if (i, j) in draws:
                x = draws[(i, j)][0]
                note(f"(v) star(A{i}{j}) in A{j}{i}", (x,),
                     membership_residual(x.star(), (j, i)))

    checks = tuple(CheckResult(n, n not in failures, failures.get(n))
                   for n in names)
    return PeirceRelationsReport(a.name, samples, seed, checks,
                                 offdiag_witness)


@dataclass(frozen=True)
class SpadeResult:
    holds: bool
    witness: Optional[Element]  # nonzero x with x*(a e) = 0 for all a


def check_spade(a: Algebra, e: Element) -> SpadeResult:
    """Exact decision of: x (A e) = 0 implies x = 0.

    Builds the matrix of x -> (x (b_k e))_k over the basis and computes its
    nullspace; a nonzero nullspace vector is returned as the witness after
    re-verifying that it annihilates every column generator.
    """
    if not (e * e - e).is_zero():
        raise PeirceError("spade check requires an idempotent e")
    dim = a.dim
    gens = [b * e for b in a.basis()]
    rows: list[list[Scalar]] = []
    for g in gens:
        # row block: output coordinate l of b_i * g, unknowns indexed by i
        block = [[ZERO] * dim for _ in range(dim)]
        for i in range(dim):
            prod = a.basis_element(i) * g
            for l, c in enumerate(prod.coords):
                block[l][i] = c
        rows.extend(block)
    null = linalg.nullspace(rows)
    if not null:
        return SpadeResult(True, None)
    x = a.element(null[0])
    for g in gens:
        if not (x * g).is_zero():
            raise PeirceError("internal error: spade witness fails to verify")
    return SpadeResult(False, x)


def spade_pair(p: PeirceSystem) -> tuple[SpadeResult, SpadeResult]:
    """The annihilator condition for e1 and for e2."""
    return check_spade(p.algebra, p.e1), check_spade(p.algebra, p.e2)


def spade_ok(p: PeirceSystem) -> bool:
    """Conjunction over both idempotents."""
    r1, r2 = spade_pair(p)
    return r1.holds and r2.holds
