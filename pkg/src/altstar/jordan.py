"""Recursive *-Jordan products and the closed-form identity catalog.

The binary product is {x, y} = x y + y x*.  The n-ary family is the
left-nested recursion

    q_1(x) = x,        q_n(x_1, ..., x_n) = {q_{n-1}(x_1, ..., x_{n-1}), x_n}.

Useful consequences, all derivable by unwinding the recursion once per slot:
an idempotent prefix doubles each step (q_k(e, ..., e) = 2^{k-1} e), a prefix
of units doubles each step, and an off-diagonal Peirce component does NOT
double under a further idempotent slot (x_ij e_i = 0 for i != j), which is
where several of the catalogued displayed forms lose a power of two.

Each catalog entry carries two closed forms for the same argument pattern:
``derived`` (independently computed from the recursion, the expected truth)
and ``display`` (the closed form as displayed in the source material this
catalog audits, transcribed without correction).  ``verbatim_match`` records
per run whether the displayed form agreed with every sample.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .algebra import Algebra, AlgebraError, Element
from .peirce import IJ_PAIRS, PeirceSystem, peirce_decompose, random_component
from .sampling import derive_rng, random_element
from .scalars import Scalar, half_power

Rng = object  # random.Random; kept loose for typing brevity


def jordan_star(x: Element, y: Element) -> Element:
    """{x, y} = x y + y x*."""
    return x * y + y * x.star()


def q_star(args: Sequence[Element]) -> Element:
    """Left-nested n-ary product; n = len(args) >= 1."""
    if not args:
        raise AlgebraError("q_star needs at least one argument")
    a0 = args[0].algebra
    for x in args[1:]:
        if x.algebra is not a0:
            raise AlgebraError("q_star arguments from different algebras")
    val = args[0]
    for x in args[1:]:
        val = jordan_star(val, x)
    return val


def _q_cached(args: Sequence[Element], cache: dict) -> Element:
    # same left fold as q_star; shared prefixes are computed once
    val: Optional[Element] = None
    key: tuple = ()
    for x in args:
        key = key + (x.coords,)
        hit = cache.get(key)
        if hit is not None:
            val = hit
            continue
        val = x if val is None else jordan_star(val, x)
        cache[key] = val
    assert val is not None
    return val


def collapse_prefix(e: Element, m: int) -> list[Element]:
    """m slots of scaled copies of e whose nested product is exactly e.

    q_m(e, ..., e, (1/2^{m-1}) e) = e for an idempotent e, since each slot
    doubles the accumulated multiple.
    """
    if m < 1:
        raise AlgebraError("prefix needs at least one slot")
    return [e] * (m - 1) + [e.scale(half_power(m - 1))]


def _pow2(k: int) -> Scalar:
    return Scalar(2 ** k) if k >= 0 else half_power(-k)


# -- catalog ---------------------------------------------------------------


@dataclass(frozen=True)
class IdentityEntry:
    entry_id: str
    pattern: str
    derived_form: str
    display_form: str
    notes: str
    n_min: int
    variants: Callable[[PeirceSystem], list[str]]
    sample: Callable[[PeirceSystem, str, Rng], dict[str, Element]]
    args: Callable[[PeirceSystem, str, int, dict], list[Element]]
    derived: Callable[[PeirceSystem, str, int, dict], Element]
    display: Callable[[PeirceSystem, str, int, dict], Element]


@dataclass(frozen=True)
class IdentitySample:
    variant: str
    frees: dict
    lhs: Element
    rhs: Element
    residual: Element


@dataclass(frozen=True)
class EntryRun:
    entry_id: str
    n: int
    samples: int
    skipped: Optional[str]
    derived_ok: bool
    verbatim_match: bool
    derived_counterexample: Optional[IdentitySample]
    display_counterexample: Optional[IdentitySample]


def _dims(p: PeirceSystem) -> dict[tuple[int, int], int]:
    return p.component_dims()


def _offdiag_variants(p: PeirceSystem) -> list[str]:
    d = _dims(p)
    out = []
    if d[(1, 2)]:
        out.append("i=1,j=2")
    if d[(2, 1)]:
        out.append("i=2,j=1")
    return out


def _parse_ij(variant: str) -> tuple[int, int]:
    i = int(variant[2])
    j = int(variant[6])
    return i, j


def _both(p: PeirceSystem) -> list[str]:
    return ["i=1", "i=2"]


def _single(p: PeirceSystem) -> list[str]:
    return ["-"]


def _need_a12(p: PeirceSystem) -> list[str]:
    return ["-"] if _dims(p)[(1, 2)] else []


def _ei(p: PeirceSystem, variant: str) -> Element:
    return p.idempotent(int(variant[2]))


def _t_offdiag(p: PeirceSystem, rng: Rng) -> dict[str, Element]:
    d = _dims(p)
    t12 = random_component(p, (1, 2), rng) if d[(1, 2)] else p.algebra.zero()
    t21 = random_component(p, (2, 1), rng) if d[(2, 1)] else p.algebra.zero()
    c12 = random_component(p, (1, 2), rng)
    return {"t12": t12, "t21": t21, "t": t12 + t21, "c12": c12}


def _entry_b() -> IdentityEntry:
    return IdentityEntry(
        entry_id="ID-B",
        pattern="q_n(e_i, ..., e_i, t) with n-1 idempotent slots, t free",
        derived_form="2^(n-2) (e_i t + t e_i)",
        display_form="2^(n-2) (e_i t + t e_i)",
        notes="",
        n_min=2,
        variants=_both,
        sample=lambda p, v, rng: {"t": random_element(p.algebra, rng)},
        args=lambda p, v, n, f: [_ei(p, v)] * (n - 1) + [f["t"]],
        derived=lambda p, v, n, f: (_ei(p, v) * f["t"]
                                    + f["t"] * _ei(p, v)).scale(_pow2(n - 2)),
        display=lambda p, v, n, f: (_ei(p, v) * f["t"]
                                    + f["t"] * _ei(p, v)).scale(_pow2(n - 2)),
    )


def _entry_c() -> IdentityEntry:
    return IdentityEntry(
        entry_id="ID-C",
        pattern=("q_n(e1, ..., (1/2^(n-2)) e1, x12): scaled idempotent prefix "
                 "collapsing to e1, then a free A12 component"),
        derived_form="e1 x12 + x12 e1 (= x12)",
        display_form="e1 x12 + x12 e1 (= x12)",
        notes=("prefix scale normalized to 1/2^(n-2) so the n-1 leading slots "
               "collapse to exactly e1; the source text's 1/2^(n-1) halves "
               "the displayed value under an arity-n reading"),
        n_min=2,
        variants=_need_a12,
        sample=lambda p, v, rng: {"x12": random_component(p, (1, 2), rng)},
        args=lambda p, v, n, f: collapse_prefix(p.e1, n - 1) + [f["x12"]],
        derived=lambda p, v, n, f: p.e1 * f["x12"] + f["x12"] * p.e1,
        display=lambda p, v, n, f: p.e1 * f["x12"] + f["x12"] * p.e1,
    )


def _args_d(p: PeirceSystem, n: int, f: dict) -> list[Element]:
    return collapse_prefix(p.e2, n - 2) + [f["t"], f["c12"]]


def _entry_d() -> IdentityEntry:
    def rhs(p, v, n, f):
        t12, t21, c12 = f["t12"], f["t21"], f["c12"]
        return (t21 * c12 + t12 * c12 + c12 * t21.star()
                + c12 * t12.star())

    return IdentityEntry(
        entry_id="ID-D",
        pattern=("q_n(e2, ..., (1/2^(n-3)) e2, t, c12): collapsed e2 prefix, "
                 "then t with zero diagonal (t = t12 + t21) and c12 in A12"),
        derived_form="t21 c12 + t12 c12 + c12 t21^* + c12 t12^*",
        display_form="t21 c12 + t12 c12 + c12 t21^* + c12 t12^*",
        notes=("prefix scale normalized to collapse exactly (see ID-C note); "
               "with the collapse the displayed right side is exact"),
        n_min=3,
        variants=_need_a12,
        sample=lambda p, v, rng: _t_offdiag(p, rng),
        args=lambda p, v, n, f: _args_d(p, n, f),
        derived=rhs,
        display=rhs,
    )


def _entry_e() -> IdentityEntry:
    def rhs(p, v, n, f):
        prod = f["t21"] * f["c12"]
        return (prod + prod.star()).scale(Scalar(2))

    return IdentityEntry(
        entry_id="ID-E",
        pattern=("q_n(e2, ..., (1/2^(n-3)) e2, D, e2) where D is the ID-D "
                 "product for the same t, c12"),
        derived_form="2 (t21 c12 + (t21 c12)^*)",
        display_form="2 (t21 c12 + (t21 c12)^*)",
        notes="inner argument D is evaluated through the recursion itself",
        n_min=3,
        variants=_need_a12,
        sample=lambda p, v, rng: _t_offdiag(p, rng),
        args=lambda p, v, n, f: collapse_prefix(p.e2, n - 2)
        + [q_star(_args_d(p, n, f)), p.e2],
        derived=rhs,
        display=rhs,
    )


def _entry_f() -> IdentityEntry:
    def rhs(p, v, n, f):
        split = peirce_decompose(p, f["t"])
        return (split[(1, 1)] - split[(2, 2)]).scale(_pow2(n - 1))

    return IdentityEntry(
        entry_id="ID-F",
        pattern="q_n(1, ..., 1, e1 - e2, t) with n-2 unit slots, t free",
        derived_form="2^(n-1) (t11 - t22)",
        display_form="2^(n-2) * (2 t11 - 2 t22)",
        notes=("the source displays the equation with the common factor "
               "2^(n-2) cancelled; restored here, the two forms coincide"),
        n_min=2,
        variants=_single,
        sample=lambda p, v, rng: {"t": random_element(p.algebra, rng)},
        args=lambda p, v, n, f: [p.algebra.unit] * (n - 2)
        + [p.e1 - p.e2, f["t"]],
        derived=rhs,
        display=rhs,
    )


def _entry_g() -> IdentityEntry:
    def rhs(p, v, n, f):
        a12, b12 = f["a12"], f["b12"]
        return a12 + a12 * b12 + a12.star() + b12 * a12.star()

    return IdentityEntry(
        entry_id="ID-G",
        pattern=("q_n(1, ..., 1, a12, (1/2^(n-2)) (e2 + b12)) with n-2 unit "
                 "slots and free A12 components a12, b12"),
        derived_form="a12 + a12 b12 + a12^* + b12 a12^*",
        display_form="a12 + a12 b12 + a12^* + b12 a12^*",
        notes="the unit prefix doubles n-2 times, cancelled by the scale",
        n_min=2,
        variants=_need_a12,
        sample=lambda p, v, rng: {"a12": random_component(p, (1, 2), rng),
                                  "b12": random_component(p, (1, 2), rng)},
        args=lambda p, v, n, f: [p.algebra.unit] * (n - 2)
        + [f["a12"], (p.e2 + f["b12"]).scale(half_power(n - 2))],
        derived=rhs,
        display=rhs,
    )


def _entry_h() -> IdentityEntry:
    def derived(p, v, n, f):
        a, b = f["a"], f["b"]
        return a + b + a.star() + a * b + b * a.star()

    def display(p, v, n, f):
        # the displayed product pairs a_ij with a (j,i) component of b;
        # b lies in A_ij, so that component is zero and the term drops
        a, b = f["a"], f["b"]
        return a + b + a.star() + b * a.star()

    def sample(p, v, rng):
        ij = _parse_ij(v)
        return {"a": random_component(p, ij, rng),
                "b": random_component(p, ij, rng)}

    def args(p, v, n, f):
        i, j = _parse_ij(v)
        return ([p.algebra.unit] * (n - 2)
                + [(p.idempotent(i) + f["a"]).scale(half_power(n - 2)),
                   p.idempotent(j) + f["b"]])

    return IdentityEntry(
        entry_id="ID-H",
        pattern=("q_n(1, ..., 1, (1/2^(n-2)) (e_i + a_ij), e_j + b_ij) with "
                 "free A_ij components a, b"),
        derived_form="a + b + a^* + a b + b a^*",
        display_form="a + b + a^* + [a b_ji] + b a^*",
        notes=("the displayed middle term multiplies a by a (j,i) component "
               "that the argument list never provides; it is read as the "
               "A_ji part of b, which is zero.  The derived form's a b term "
               "lies in A_ij A_ij: zero associatively, nonzero on zorn"),
        n_min=2,
        variants=_offdiag_variants,
        sample=sample,
        args=args,
        derived=derived,
        display=display,
    )


def _entry_i() -> IdentityEntry:
    def rhs(p, v, n, f):
        return (f["a"] + f["a"].star()).scale(_pow2(n - 2))

    return IdentityEntry(
        entry_id="ID-I",
        pattern="q_n(1, ..., 1, a, 1) with n-2 leading unit slots, a free",
        derived_form="2^(n-2) (a + a^*)",
        display_form="2^(n-2) (a + a^*)",
        notes="",
        n_min=2,
        variants=_single,
        sample=lambda p, v, rng: {"a": random_element(p.algebra, rng)},
        args=lambda p, v, n, f: [p.algebra.unit] * (n - 2)
        + [f["a"], p.algebra.unit],
        derived=rhs,
        display=rhs,
    )


def _diag_offdiag_variants(p: PeirceSystem) -> list[str]:
    d = _dims(p)
    out = []
    if d[(1, 1)] and d[(1, 2)]:
        out.append("i=1,j=2")
    if d[(2, 2)] and d[(2, 1)]:
        out.append("i=2,j=1")
    return out


def _entry_j() -> IdentityEntry:
    def sample(p, v, rng):
        i, j = _parse_ij(v)
        return {"a": random_component(p, (i, i), rng),
                "b": random_component(p, (i, j), rng)}

    return IdentityEntry(
        entry_id="ID-J",
        pattern=("q_n(e_i, ..., e_i, a_ii, b_ij) with n-2 idempotent slots, "
                 "a in A_ii, b in A_ij, i != j"),
        derived_form="2^(n-2) (a b + b a^*)",
        display_form="2^(n-2) a b",
        notes=("the b a^* term lies in A_ij A_ii with j != i, which vanishes "
               "in every alternative algebra, so the two forms agree"),
        n_min=2,
        variants=_diag_offdiag_variants,
        sample=sample,
        args=lambda p, v, n, f: [_ei(p, v)] * (n - 2) + [f["a"], f["b"]],
        derived=lambda p, v, n, f: (f["a"] * f["b"]
                                    + f["b"] * f["a"].star()).scale(_pow2(n - 2)),
        display=lambda p, v, n, f: (f["a"] * f["b"]).scale(_pow2(n - 2)),
    )


def _opposed_variants(p: PeirceSystem) -> list[str]:
    d = _dims(p)
    out = []
    if d[(1, 2)] and d[(2, 1)]:
        out.append("i=1,j=2")
        out.append("i=2,j=1")
    return out


def _entry_k() -> IdentityEntry:
    def sample(p, v, rng):
        i, j = _parse_ij(v)
        return {"a": random_component(p, (i, j), rng),
                "b": random_component(p, (j, i), rng)}

    return IdentityEntry(
        entry_id="ID-K",
        pattern=("q_n(e_i, ..., e_i, a_ij, b_ji) with n-2 idempotent slots, "
                 "a in A_ij, b in A_ji, i != j"),
        derived_form="2^(n-3) (a b + b a^*)",
        display_form="2^(n-3) a b",
        notes=("the omitted b a^* term lies in A_ji A_ji: zero associatively "
               "(verbatim holds on matrix algebras), nonzero on zorn"),
        n_min=3,
        variants=_opposed_variants,
        sample=sample,
        args=lambda p, v, n, f: [_ei(p, v)] * (n - 2) + [f["a"], f["b"]],
        derived=lambda p, v, n, f: (f["a"] * f["b"]
                                    + f["b"] * f["a"].star()).scale(_pow2(n - 3)),
        display=lambda p, v, n, f: (f["a"] * f["b"]).scale(_pow2(n - 3)),
    )


def _entry_l() -> IdentityEntry:
    def sample(p, v, rng):
        ij = _parse_ij(v)
        return {"a": random_component(p, ij, rng),
                "b": random_component(p, ij, rng)}

    return IdentityEntry(
        entry_id="ID-L",
        pattern=("q_n(e_i, ..., e_i, a_ij, b_ij) with n-2 idempotent slots "
                 "and both free components in A_ij, i != j"),
        derived_form="2^(n-3) (a b + b a^*)",
        display_form="2^(n-2) a b",
        notes=("the displayed form both doubles the true coefficient (an "
               "off-diagonal slot does not double: a_ij e_i = 0) and omits "
               "b a^*, which lies in A_ij A_ji and is nonzero even in "
               "associative algebras; verbatim_match is false on matrix "
               "algebras too, e.g. q_3(E11, E12, E12) = E11, displayed 0"),
        n_min=3,
        variants=_offdiag_variants,
        sample=sample,
        args=lambda p, v, n, f: [_ei(p, v)] * (n - 2) + [f["a"], f["b"]],
        derived=lambda p, v, n, f: (f["a"] * f["b"]
                                    + f["b"] * f["a"].star()).scale(_pow2(n - 3)),
        display=lambda p, v, n, f: (f["a"] * f["b"]).scale(_pow2(n - 2)),
    )


def _entry_m() -> IdentityEntry:
    return IdentityEntry(
        entry_id="ID-M",
        pattern="q_n(e1, ..., e1, e2, x) with n-2 idempotent slots, x free",
        derived_form="0",
        display_form="0",
        notes="the prefix against e2 annihilates: {2^(n-3) e1, e2} = 0",
        n_min=3,
        variants=_single,
        sample=lambda p, v, rng: {"x": random_element(p.algebra, rng)},
        args=lambda p, v, n, f: [p.e1] * (n - 2) + [p.e2, f["x"]],
        derived=lambda p, v, n, f: p.algebra.zero(),
        display=lambda p, v, n, f: p.algebra.zero(),
    )


def _entry_n() -> IdentityEntry:
    def rhs(p, v, n, f):
        e = _ei(p, v)
        x = f["x"]
        xs = x.star()
        return ((e * x) * e + x * e + e * (xs * e) + e * xs).scale(_pow2(n - 3))

    return IdentityEntry(
        entry_id="ID-N",
        pattern="q_n(e_i, ..., e_i, x, e_i) with n-2 idempotent slots, x free",
        derived_form="2^(n-3) (e_i x e_i + x e_i + e_i x^* e_i + e_i x^*)",
        display_form="2^(n-3) (e_i x e_i + x e_i + e_i x^* e_i + e_i x^*)",
        notes="e_i x e_i is unambiguous: alternative algebras are flexible",
        n_min=3,
        variants=_both,
        sample=lambda p, v, rng: {"x": random_element(p.algebra, rng)},
        args=lambda p, v, n, f: [_ei(p, v)] * (n - 2) + [f["x"], _ei(p, v)],
        derived=rhs,
        display=rhs,
    )


CATALOG: tuple[IdentityEntry, ...] = (
    _entry_b(), _entry_c(), _entry_d(), _entry_e(), _entry_f(), _entry_g(),
    _entry_h(), _entry_i(), _entry_j(), _entry_k(), _entry_l(), _entry_m(),
    _entry_n(),
)


def catalog_entry(entry_id: str) -> IdentityEntry:
    for e in CATALOG:
        if e.entry_id == entry_id:
            return e
    raise KeyError(entry_id)


def verify_identity(entry: IdentityEntry, p: PeirceSystem, n: int,
                    samples: int, seed: int) -> EntryRun:
    """Evaluate the recursion against both closed forms on seeded samples."""
    if n < entry.n_min:
        return EntryRun(entry.entry_id, n, 0,
                        f"requires n >= {entry.n_min}", True, True, None, None)
    variants = entry.variants(p)
    if not variants:
        return EntryRun(entry.entry_id, n, 0,
                        "required Peirce component is zero-dimensional",
                        True, True, None, None)
    cache: dict = {}
    derived_bad: Optional[IdentitySample] = None
    display_bad: Optional[IdentitySample] = None
    for s in range(samples):
        for v in variants:
            rng = derive_rng(seed, entry.entry_id, n, v, s)
            frees = entry.sample(p, v, rng)
            lhs = _q_cached(entry.args(p, v, n, frees), cache)
            want = entry.derived(p, v, n, frees)
            res = lhs - want
            if derived_bad is None and not res.is_zero():
                derived_bad = IdentitySample(v, frees, lhs, want, res)
            shown = entry.display(p, v, n, frees)
            res2 = lhs - shown
            if display_bad is None and not res2.is_zero():
                display_bad = IdentitySample(v, frees, lhs, shown, res2)
    return EntryRun(entry.entry_id, n, samples, None,
                    derived_bad is None, display_bad is None,
                    derived_bad, display_bad)


@dataclass(frozen=True)
class CatalogReport:
    algebra_name: str
    n_min: int
    n_max: int
    samples: int
    seed: int
    runs: tuple[EntryRun, ...]

    @property
    def derived_all_ok(self) -> bool:
        return all(r.derived_ok for r in self.runs)

    def runs_for(self, entry_id: str) -> list[EntryRun]:
        return [r for r in self.runs if r.entry_id == entry_id]


def audit_catalog(p: PeirceSystem, n_min: int, n_max: int, samples: int,
                  seed: int) -> CatalogReport:
    if n_min < 2 or n_max < n_min:
        raise AlgebraError("audit needs 2 <= n_min <= n_max")
    runs = []
    for entry in CATALOG:
        for n in range(n_min, n_max + 1):
            runs.append(verify_identity(entry, p, n, samples, seed))
    return CatalogReport(p.algebra.name, n_min, n_max, samples, seed,
                         tuple(runs))
