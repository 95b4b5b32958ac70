"""Candidate maps between *-algebras and the falsification harness.

A map is a linear core (matrix times the coordinate vector, optionally
applied to the entrywise-conjugated coordinates) plus a finite pointwise
patch table consulted before the core.  Patches deliberately break
linearity, which is how the negative test subjects are built.

Two checkers:

* check_jordan_condition: phi(q_n(xi, ..., xi, a, b)) =
  q_n(phi(xi), ..., phi(xi), phi(a), phi(b)) for xi in {1, e1, e2} over a
  deterministic sample pool.  A surviving map is reported "not refuted",
  never "verified".
* check_star_ring_isomorphism: additivity, multiplicativity, star
  preservation, exact linear bijectivity, idempotent images, and
  Peirce-block preservation, each with a reproducible witness on failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import linalg
from .algebra import Algebra, AlgebraError, Element
from .jordan import jordan_star, q_star
from .peirce import (IJ_PAIRS, PeirceSystem, classify_idempotent,
                     peirce_decompose, random_component)
from .sampling import derive_rng, random_element
from .scalars import I, ONE, Scalar, ZERO, half_power


class MapError(AlgebraError):
    pass


class AlgebraMap:
    """linear_part @ coords (conjugated first if conjugates_scalars),
    overridden pointwise by the patch table."""

    def __init__(self, domain: Algebra, codomain: Algebra,
                 linear_part: Sequence[Sequence[Scalar]],
                 conjugates_scalars: bool = False,
                 patches: Optional[dict[Element, Element]] = None,
                 name: str = "map"):
        if len(linear_part) != codomain.dim or any(
                len(r) != domain.dim for r in linear_part):
            raise MapError("linear part must be codomain.dim x domain.dim")
        self.domain = domain
        self.codomain = codomain
        self.linear_part = tuple(tuple(r) for r in linear_part)
        self.conjugates_scalars = conjugates_scalars
        self.name = name
        patches = dict(patches or {})
        for x, y in patches.items():
            if x.algebra is not domain or y.algebra is not codomain:
                raise MapError("patch endpoints must live in domain/codomain")
        ins = list(patches.keys())
        if len(set(ins)) != len(ins):
            raise MapError("patch inputs must be pairwise distinct")
        outs = list(patches.values())
        if len({o.coords for o in outs}) != len(outs):
            raise MapError("patch outputs must be pairwise distinct")
        self.patches = patches

    def _core(self, x: Element) -> Element:
        coords = [c.conj() for c in x.coords] if self.conjugates_scalars \
            else x.coords
        return self.codomain.element(linalg.mat_vec(self.linear_part, coords))

    def __call__(self, x: Element) -> Element:
        if x.algebra is not self.domain:
            raise MapError("argument is not a domain element")
        hit = self.patches.get(x)
        if hit is not None:
            return hit
        return self._core(x)


def apply_map(phi: AlgebraMap, x: Element) -> Element:
    return phi(x)


def bijective_claim(phi: AlgebraMap) -> bool:
    """Invertible linear part and a patch table that permutes its inputs."""
    if not linalg.is_invertible(list(map(list, phi.linear_part))):
        return False
    ins = {x.coords for x in phi.patches}
    outs = {y.coords for y in phi.patches.values()}
    return ins == outs


def check_unital(phi: AlgebraMap) -> bool:
    return (phi(phi.domain.unit) - phi.codomain.unit).is_zero()


def identity_map(a: Algebra, name: str = "identity") -> AlgebraMap:
    eye = [[ONE if i == j else ZERO for j in range(a.dim)]
           for i in range(a.dim)]
    return AlgebraMap(a, a, eye, name=name)


def scale_map(a: Algebra, s: Scalar, name: Optional[str] = None) -> AlgebraMap:
    m = [[s if i == j else ZERO for j in range(a.dim)] for i in range(a.dim)]
    return AlgebraMap(a, a, m, name=name or f"scale:{s}")


def conjugation_map(a: Algebra) -> AlgebraMap:
    """Entrywise coordinate conjugation; a ring automorphism whenever the
    structure constants are real."""
    eye = [[ONE if i == j else ZERO for j in range(a.dim)]
           for i in range(a.dim)]
    return AlgebraMap(a, a, eye, conjugates_scalars=True, name="conjugation")


def star_as_map(a: Algebra) -> AlgebraMap:
    """x -> x* as a map object: star matrix applied after conjugation."""
    return AlgebraMap(a, a, a.star_matrix(), conjugates_scalars=True,
                      name="star")


def patched_map(base: AlgebraMap, patches: dict[Element, Element],
                name: Optional[str] = None) -> AlgebraMap:
    merged = dict(base.patches)
    merged.update(patches)
    return AlgebraMap(base.domain, base.codomain, base.linear_part,
                      base.conjugates_scalars, merged,
                      name=name or f"{base.name}+patch")


def zorn_rotation_map(a: Algebra) -> AlgebraMap:
    """Cyclic rotation of both 3-vector blocks of the Zorn algebra.

    An even coordinate permutation preserves dot and cross products, so this
    is a *-algebra automorphism.
    """
    if a.name != "zorn":
        raise MapError("zorn_rotation_map expects the zorn algebra")
    m = [[ZERO] * 8 for _ in range(8)]
    m[0][0] = ONE
    m[1][1] = ONE
    for base in (2, 5):
        for i in range(3):
            m[base + (i + 1) % 3][base + i] = ONE
    return AlgebraMap(a, a, m, name="zorn-rotation")


def matrix_swap_conjugation(a: Algebra) -> AlgebraMap:
    """x -> u x u for the 2x2 permutation u = [[0,1],[1,0]]; u = u* = u^-1."""
    if a.name != "matrix:2":
        raise MapError("matrix_swap_conjugation expects matrix:2")
    u = a.element([ZERO, ONE, ONE, ZERO])
    cols = []
    for b in a.basis():
        cols.append((u * b) * u)
    m = [[cols[j].coords[i] for j in range(4)] for i in range(4)]
    return AlgebraMap(a, a, m, name="swap-conjugation")


# -- sample pools ----------------------------------------------------------


def sample_pool(phi: AlgebraMap, p: PeirceSystem, count: int,
                seed: int) -> list[Element]:
    """Deterministic pool: patch points, unit, idempotents, halved and
    i-scaled idempotents, then seeded Peirce-component and dense elements."""
    if p.algebra is not phi.domain:
        raise MapError("Peirce system must live on the map's domain")
    a = phi.domain
    pool: list[Element] = []
    seen: set = set()

    def push(x: Element) -> None:
        if x.coords not in seen:
            seen.add(x.coords)
            pool.append(x)

    for x in phi.patches:
        push(x)
    push(a.unit)
    push(p.e1)
    push(p.e2)
    for k in (1, 2):
        push(p.e1.scale(half_power(k)))
        push(p.e2.scale(half_power(k)))
    push(p.e1.scale(I))
    push(p.e2.scale(I))
    dims = p.component_dims()
    idx = 0
    while len(pool) < count:
        rng = derive_rng(seed, "pool", idx)
        ij = IJ_PAIRS[idx % 4]
        if dims[ij]:
            push(random_component(p, ij, rng))
        if len(pool) < count:
            push(random_element(a, rng))
        idx += 1
    return pool[:count]


def _pairs(pool: Sequence[Element], samples: int, seed: int):
    """First the structured head crossed with itself, then seeded picks."""
    head = pool[: min(len(pool), 12)]
    count = 0
    for x in head:
        for y in head:
            if count >= samples:
                return
            yield x, y
            count += 1
    idx = 0
    while count < samples:
        rng = derive_rng(seed, "pair", idx)
        yield pool[rng.randrange(len(pool))], pool[rng.randrange(len(pool))]
        count += 1
        idx += 1


# -- condition reports -----------------------------------------------------


@dataclass(frozen=True)
class MapWitness:
    kind: str
    inputs: tuple[Element, ...]
    lhs: Element
    rhs: Element


@dataclass(frozen=True)
class ConditionReport:
    map_name: str
    check: str
    n: Optional[int]
    samples_run: int
    refuted: bool
    witness: Optional[MapWitness]

    @property
    def verdict(self) -> str:
        return ("refuted" if self.refuted
                else f"not refuted ({self.samples_run} samples)")


def check_jordan_condition(phi: AlgebraMap, peirce: PeirceSystem, n: int,
                           samples: int, seed: int) -> ConditionReport:
    """phi(q_n(xi,...,xi,a,b)) = q_n(phi(xi),...,phi(xi),phi(a),phi(b)) for
    xi in {1, e1, e2}, over sampled pairs (a, b).  Requires a unital map."""
    if n < 2:
        raise MapError("jordan condition needs n >= 2")
    if not check_unital(phi):
        raise MapError("jordan condition requires a unital map")
    if peirce.algebra is not phi.domain:
        raise MapError("Peirce system must live on the map's domain")
    xis = (("1", phi.domain.unit), ("e1", peirce.e1), ("e2", peirce.e2))
    prefix_dom = {}
    prefix_cod = {}
    for tag, xi in xis:
        dom = None
        for _ in range(n - 2):
            dom = xi if dom is None else jordan_star(dom, xi)
        prefix_dom[tag] = dom  # None when n == 2
        img = phi(xi)
        cod = None
        for _ in range(n - 2):
            cod = img if cod is None else jordan_star(cod, img)
        prefix_cod[tag] = cod

    pool = sample_pool(phi, peirce, max(16, min(samples, 64)), seed)
    run = 0
    for a, b in _pairs(pool, samples, seed):
        run += 1
        for tag, xi in xis:
            dom = prefix_dom[tag]
            val = a if dom is None else jordan_star(dom, a)
            val = jordan_star(val, b)
            lhs = phi(val)
            cod = prefix_cod[tag]
            img_a, img_b = phi(a), phi(b)
            rval = img_a if cod is None else jordan_star(cod, img_a)
            rval = jordan_star(rval, img_b)
            if not (lhs - rval).is_zero():
                return ConditionReport(
                    phi.name, "jordan_condition", n, run, True,
                    MapWitness(f"xi={tag}", (a, b), lhs, rval))
    return ConditionReport(phi.name, "jordan_condition", n, run, False, None)


@dataclass(frozen=True)
class IsomorphismReport:
    map_name: str
    samples_run: int
    checks: tuple[ConditionReport, ...]

    @property
    def ok(self) -> bool:
        return not any(c.refuted for c in self.checks)

    def check(self, name: str) -> ConditionReport:
        for c in self.checks:
            if c.check == name:
                return c
        raise KeyError(name)


def check_star_ring_isomorphism(phi: AlgebraMap, peirce: PeirceSystem,
                                samples: int, seed: int) -> IsomorphismReport:
    """Additivity, multiplicativity, star preservation, exact bijectivity,
    idempotent images and Peirce-block preservation."""
    if peirce.algebra is not phi.domain:
        raise MapError("Peirce system must live on the map's domain")
    pool = sample_pool(phi, peirce, max(16, min(samples, 64)), seed)
    reports: list[ConditionReport] = []

    def scan(check: str, law) -> None:
        run = 0
        for a, b in _pairs(pool, samples, seed):
            run += 1
            w = law(a, b)
            if w is not None:
                reports.append(ConditionReport(phi.name, check, None, run,
                                               True, w))
                return
        reports.append(ConditionReport(phi.name, check, None, run, False,
                                       None))

    def additivity(a: Element, b: Element) -> Optional[MapWitness]:
        lhs = phi(a + b)
        rhs = phi(a) + phi(b)
        if not (lhs - rhs).is_zero():
            return MapWitness("additivity", (a, b), lhs, rhs)
        return None

    def multiplicativity(a: Element, b: Element) -> Optional[MapWitness]:
        lhs = phi(a * b)
        rhs = phi(a) * phi(b)
        if not (lhs - rhs).is_zero():
            return MapWitness("multiplicativity", (a, b), lhs, rhs)
        return None

    def star_preservation(a: Element, b: Element) -> Optional[MapWitness]:
        lhs = phi(a.star())
        rhs = phi(a).star()
        if not (lhs - rhs).is_zero():
            return MapWitness("star_preservation", (a,), lhs, rhs)
        return None

    scan("additivity", additivity)
    scan("multiplicativity", multiplicativity)
    scan("star_preservation", star_preservation)

    bij = bijective_claim(phi)
    reports.append(ConditionReport(
        phi.name, "linear_part_bijective", None, 0, not bij,
        None if bij else MapWitness("linear_part_bijective", (), phi.domain.unit,
                                    phi.domain.unit)))

    # images of the idempotents must again be symmetric idempotents
    f_ok = True
    f1 = phi(peirce.e1)
    for tag, f in (("f1", f1), ("f2", phi(peirce.e2))):
        info = classify_idempotent(phi.codomain, f)
        if not (info.is_idempotent and info.is_symmetric):
            f_ok = False
            reports.append(ConditionReport(
                phi.name, f"idempotent_image_{tag}", None, 0, True,
                MapWitness(f"idempotent_image_{tag}", (f,), f * f, f)))
        else:
            reports.append(ConditionReport(
                phi.name, f"idempotent_image_{tag}", None, 0, False, None))

    # block preservation phi(A_ij) in A'_ij for the image system, when the
    # image idempotent is usable
    info = classify_idempotent(phi.codomain, f1)
    if f_ok and info.is_idempotent and info.is_symmetric \
            and not info.is_trivial:
        cod_p = PeirceSystem(phi.codomain, f1)
        witness = None
        run = 0
        dims = peirce.component_dims()
        for s in range(samples):
            rng = derive_rng(seed, "blocks", s)
            for ij in IJ_PAIRS:
                if not dims[ij]:
                    continue
                x = random_component(peirce, ij, rng)
                run += 1
                img = phi(x)
                split = peirce_decompose(cod_p, img)
                bad = None
                for kl in IJ_PAIRS:
                    if kl != ij and not split[kl].is_zero():
                        bad = split[kl]
                        break
                if bad is not None:
                    witness = MapWitness(f"peirce_block_{ij[0]}{ij[1]}",
                                         (x,), img, img - bad)
                    break
            if witness is not None:
                break
        reports.append(ConditionReport(phi.name, "peirce_blocks", None, run,
                                       witness is not None, witness))
    else:
        reports.append(ConditionReport(
            phi.name, "peirce_blocks", None, 0, not f_ok,
            None if f_ok else MapWitness("peirce_blocks", (), f1, f1)))

    total = max((c.samples_run for c in reports), default=0)
    return IsomorphismReport(phi.name, total, tuple(reports))
