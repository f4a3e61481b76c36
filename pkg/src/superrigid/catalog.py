"""Catalog of the classified simple rigid products.

Entries come in two kinds.  Finite entries carry exact structure constants
in a FinSuperAlg and run the full simplicity and rigidity machinery.  Oracle
entries describe infinite-dimensional products through jet coefficients: a
carrier (an ambient, a kernel, or a quotient), a named slot layout, and an
explicit product rule for every ordered slot pair.

Conventions shared by all entries:

  - an element is a dict mapping slot name -> coefficient jet;
  - the parity of a homogeneous piece is its jet parity plus the slot parity;
  - a commutative entry satisfies a o b = (-1)^{p(a)p(b)} b o a and an
    anticommutative one a o b = -(-1)^{p(a)p(b)} b o a in the entry's own
    parities; the declared symmetry is checked by verify_entry, never imposed.

Names are resolved through ``make``; ``registry_listing`` enumerates every
entry with its parameters and constraints.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction as F
from typing import Callable, Iterable, Sequence

from .brackets import _homogeneous, buttin, fd_bracket, k_bracket, quasi_poisson
from .fields import FamilyRealization, GradingSpec, VectorField
from .jets import Ambient, Jet, div_beta, format_jet
from .linalg import closure_under, nullspace, span_reduce, vec_clean
from .walg import FinSuperAlg, format_element, is_rigid, is_simple


class CatalogError(ValueError):
    """Unknown entry name or parameters outside an entry's legal range."""


def _sgn(k: int) -> int:
    return -1 if k & 1 else 1


# -- elements as slot dicts ------------------------------------------------


Element = dict

def elem_clean(a: Element) -> Element:
    return {s: f for s, f in a.items() if not f.is_zero()}


def elem_add(a: Element, b: Element) -> Element:
    out = dict(a)
    for s, f in b.items():
        out[s] = out[s] + f if s in out else f
    return out


def elem_scale(a: Element, c) -> Element:
    return {s: f.scale(c) for s, f in a.items()}


def elem_sub(a: Element, b: Element) -> Element:
    return elem_add(a, elem_scale(b, -1))


def elem_is_zero(a: Element) -> bool:
    return all(f.is_zero() for f in a.values())


def elem_truncate(a: Element, order: int | None) -> Element:
    return elem_clean({s: f.truncate(order) for s, f in a.items()})


# -- oracle entries --------------------------------------------------------


class OracleEntry:
    """Infinite-dimensional product described by an explicit slot-pair rule.

    ``pair_product(s1, f1, s2, f2)`` receives parity-homogeneous jets and
    returns an element; ``product`` extends it bilinearly and applies the
    quotient reduction.  ``excluded`` lists monomials projected away per
    slot; entries with a non-monomial carrier override ``member`` and
    ``slot_basis`` instead.
    """

    kind = "oracle"

    def __init__(self, name: str, ambient: Ambient, slots: Sequence[str],
                 slot_parity: dict, symmetry: str, product_parity: int,
                 pair_product: Callable, *, excluded: dict | None = None,
                 member: Callable | None = None, slot_basis: dict | None = None,
                 params: dict | None = None, summary: str = "",
                 extra_checks: Sequence = ()):
        if symmetry not in ("commutative", "anticommutative"):
            raise ValueError(f"unknown symmetry {symmetry!r}")
        self.name = name
        self.ambient = ambient
        self.slots = tuple(slots)
        self.slot_parity = dict(slot_parity)
        self.symmetry = symmetry
        self.product_parity = product_parity
        self.pair_product = pair_product
        self.excluded = {s: set(v) for s, v in (excluded or {}).items()}
        self._member = member
        self._slot_basis = slot_basis or {}
        self.params = dict(params or {})
        self.summary = summary
        self.extra_checks = tuple(extra_checks)
        self.default_seeds: list[Element] | None = None
        self.space = None

    def __repr__(self):
        return f"<OracleEntry {self.name}>"

    # -- carrier ----------------------------------------------------------

    def slot_jets(self, slot: str, max_deg: int) -> list[Jet]:
        gen = self._slot_basis.get(slot)
        if gen is not None:
            return gen(max_deg)
        excl = self.excluded.get(slot, ())
        return [Jet(self.ambient, {m: F(1)})
                for m in sorted(self.ambient.monomials(max_deg))
                if m not in excl]

    def basis(self, max_deg: int) -> list[Element]:
        return [{s: f} for s in self.slots for f in self.slot_jets(s, max_deg)]

    def member(self, a: Element) -> bool:
        if self._member is not None:
            return self._member(a)
        for s, f in a.items():
            excl = self.excluded.get(s)
            if excl and any(m in excl for m in f.terms):
                return False
        return True

    def reduce(self, a: Element) -> Element:
        if not self.excluded:
            return a
        out = {}
        for s, f in a.items():
            excl = self.excluded.get(s)
            if excl:
                f = Jet(f.ambient,
                        {m: c for m, c in f.terms.items() if m not in excl},
                        f.order)
            out[s] = f
        return out

    # -- algebra ----------------------------------------------------------

    def parity(self, a: Element) -> int | None:
        seen = set()
        for s, f in elem_clean(a).items():
            p = f.parity()
            if p is None:
                return None
            seen.add(p ^ (self.slot_parity[s] & 1))
        if len(seen) != 1:
            return None
        return seen.pop()

    def product(self, a: Element, b: Element) -> Element:
        for e in (a, b):
            for s in e:
                if s not in self.slot_parity:
                    raise CatalogError(
                        f"{self.name} has slots {self.slots}, not {s!r}")
        out: Element = {}
        for s1, f1 in a.items():
            for part1, _ in _homogeneous(f1):
                for s2, f2 in b.items():
                    for part2, _ in _homogeneous(f2):
                        out = elem_add(
                            out, self.pair_product(s1, part1, s2, part2))
        return elem_clean(self.reduce(out))

    # -- flattening --------------------------------------------------------

    def to_vec(self, a: Element) -> dict:
        out = {}
        for s, f in a.items():
            i = self.slots.index(s)
            for m, c in f.terms.items():
                out[(i,) + m] = out.get((i,) + m, F(0)) + c
        return vec_clean(out)

    def from_vec(self, v: dict) -> Element:
        terms: dict = {s: {} for s in self.slots}
        for (i, ex, odds), c in v.items():
            terms[self.slots[i]][(ex, odds)] = c
        return elem_clean(
            {s: Jet(self.ambient, t) for s, t in terms.items() if t})

    def format(self, a: Element) -> str:
        a = elem_clean(a)
        if not a:
            return "0"
        parts = []
        for s in self.slots:
            if s in a:
                parts.append(f"{s}: {format_jet(a[s])}")
        return "; ".join(parts)


class FiniteEntry:
    """Entry backed by exact structure constants; elements are index vecs."""

    kind = "finite"

    def __init__(self, name: str, algebra: FinSuperAlg,
                 params: dict | None = None, summary: str = ""):
        self.name = name
        self.algebra = algebra
        self.params = dict(params or {})
        self.summary = summary

    def __repr__(self):
        return f"<FiniteEntry {self.name} dim={self.dim}>"

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def symmetry(self) -> str:
        if self.algebra.anticommutative_presentation:
            return "anticommutative"
        return "commutative"

    def basis(self, max_deg: int | None = None) -> list[dict]:
        return [{i: F(1)} for i in range(self.dim)]

    def product(self, u: dict, v: dict) -> dict:
        return self.algebra.mult_vec(u, v)

    def parity(self, v: dict) -> int | None:
        pars = self.algebra.presented_parities
        seen = {pars[i] for i, c in v.items() if c}
        return seen.pop() if len(seen) == 1 else None

    def member(self, v: dict) -> bool:
        return True

    def to_vec(self, v: dict) -> dict:
        return v

    def from_vec(self, v: dict) -> dict:
        return v

    def format(self, v: dict) -> str:
        return format_element(self.algebra, v)


# -- carrier for the series products over an odd Poisson algebra ----------


class OjpSpace:
    """Odd-Poisson coefficient algebra with a formal even series variable
    and a square-zero odd marker adjoined as honest generators.

    The carrier P uses even generators x_1..x_n and odd xi_1..xi_n (plus a
    distinguished last odd generator when m = n + 1); the series variable is
    x_{n+1} and the marker is xi_{n+1}.  Working inside one ambient makes
    every sign a plain Koszul sign of the jet algebra.
    """

    def __init__(self, n: int, m: int):
        if n < 0 or m not in (n, n + 1):
            raise CatalogError(
                "carrier needs n >= 0 and m in {n, n+1}, "
                f"got n={n}, m={m}")
        self.n = n
        self.m = m
        self.has_d = m == n + 1
        n_odd = n + 2 if self.has_d else n + 1
        self.ambient = Ambient(n + 1, n_odd, tau=self.has_d)
        self.x_i = n + 1
        self.eta_j = n + 1

    def __repr__(self):
        return f"OjpSpace({self.n}, {self.m})"

    def zero(self) -> Jet:
        return Jet.zero(self.ambient)

    def one(self) -> Jet:
        return Jet.one(self.ambient)

    def x(self) -> Jet:
        return Jet.x(self.ambient, self.x_i)

    def eta(self) -> Jet:
        return Jet.xi(self.ambient, self.eta_j)

    def dx(self, f: Jet) -> Jet:
        return f.d_even(self.x_i)

    def antider(self, f: Jet, constant=0) -> Jet:
        return f.antiderivative(self.x_i, constant)

    def D(self, f: Jet) -> Jet:
        if not self.has_d:
            return Jet.zero(self.ambient)
        return f.d_tau().scale(-2)

    def pbracket(self, f: Jet, g: Jet) -> Jet:
        """Odd Poisson bracket of the coefficient algebra; the series
        variable and the marker ride along as passengers."""
        n = self.n
        out = Jet.zero(self.ambient)
        for part, p in _homogeneous(f):
            s = _sgn(p)
            for i in range(1, n + 1):
                out = out + part.d_even(i) * g.d_odd(i)
                out = out + (part.d_odd(i) * g.d_even(i)).scale(s)
            if self.has_d:
                idx = range(1, n + 1)
                ef = part.euler(even_idx=idx, odd_idx=idx) - part.scale(2)
                eg = g.euler(even_idx=idx, odd_idx=idx) - g.scale(2)
                out = out + ef * g.d_tau() + (part.d_tau() * eg).scale(s)
        return out

    def jbracket(self, f: Jet, g: Jet) -> Jet:
        """Full odd bracket of the enlarged ambient (series variable and
        marker included in the pairing)."""
        if self.has_d:
            return k_bracket(f, g)
        return buttin(f, g)

    def split(self, f: Jet) -> tuple[Jet, Jet]:
        """Write f = plain + marker * rest; returns (plain, rest)."""
        plain = {m: c for m, c in f.terms.items() if self.eta_j not in m[1]}
        rest = {m: c for m, c in f.terms.items() if self.eta_j in m[1]}
        g = Jet(self.ambient, rest, f.order).d_odd(self.eta_j)
        return Jet(self.ambient, plain, f.order), g

    # -- the commutative odd-type product ---------------------------------

    def product(self, u: Jet, v: Jet) -> Jet:
        out = Jet.zero(self.ambient)
        for pu_part, pu in _homogeneous(u):
            f1, g1 = self.split(pu_part)
            for pv_part, pv in _homogeneous(v):
                f2, g2 = self.split(pv_part)
                if not f1.is_zero() and not f2.is_zero():
                    out = out + self._pp(f1, pu, f2)
                if not f1.is_zero() and not g2.is_zero():
                    out = out + self._pe(f1, pu, g2)
                if not g1.is_zero() and not f2.is_zero():
                    out = out + self._pe(f2, pv, g1).scale(_sgn(pu & pv))
                if not g1.is_zero() and not g2.is_zero():
                    out = out + self._ee(g1, pu ^ 1, g2)
        return out

    def _pp(self, f1: Jet, p1: int, f2: Jet) -> Jet:
        res = self.pbracket(f1, f2).scale(_sgn(p1 + 1))
        return res + (self.eta() * (f1 * f2)).scale(2)

    def _pe(self, f: Jet, p: int, g: Jet) -> Jet:
        res = self.eta() * self.pbracket(f, g)
        res = res - (self.dx(f) * g).scale(_sgn(p))
        res = res - (self.eta() * (self.D(f) * g)).scale(_sgn(p))
        return res

    def _ee(self, g1: Jet, p1: int, g2: Jet) -> Jet:
        return (self.eta() * (self.dx(g1) * g2 - g1 * self.dx(g2))
                ).scale(_sgn(p1))


# -- operator identities of the series product -----------------------------


def _op_parity(tag: str, e: Jet) -> int:
    p = e.parity()
    return p ^ 1 if tag == "mu" else p


def _op_apply(space: OjpSpace, tag: str, e: Jet, u: Jet) -> Jet:
    return space.product(e, u) if tag == "mu" else e * u


def _ops_of(tag: str, e: Jet, coeff=1) -> list:
    return [(tag, coeff, part) for part, _ in _homogeneous(e)]


def _apply_ops(space: OjpSpace, ops: Iterable, u: Jet) -> Jet:
    out = Jet.zero(space.ambient)
    for tag, c, e in ops:
        out = out + _op_apply(space, tag, e, u).scale(c)
    return out


def _brmu(space: OjpSpace, tag: str, e: Jet, a: Jet, b: Jet, pa: int) -> Jet:
    """Bracket of a left/structure operator with the product, on (a, b)."""
    pt = _op_parity(tag, e)
    head = _op_apply(space, tag, e, space.product(a, b))
    ta = space.product(_op_apply(space, tag, e, a), b)
    tb = space.product(a, _op_apply(space, tag, e, b)).scale(_sgn(pa & pt))
    return head - (ta + tb).scale(_sgn(pt))


def _brmu_sum(space: OjpSpace, ops: Iterable, a: Jet, b: Jet, pa: int) -> Jet:
    out = Jet.zero(space.ambient)
    for tag, c, e in ops:
        out = out + _brmu(space, tag, e, a, b, pa).scale(c)
    return out


def _br2(space: OjpSpace, tag_a: str, ea: Jet, tag_b: str, eb: Jet,
         a: Jet, b: Jet) -> Jet:
    """Nested bracket [A, [B, product]] evaluated on (a, b)."""
    pa_op = _op_parity(tag_a, ea)
    pc = _op_parity(tag_b, eb) ^ 1
    pa = a.parity()
    head = _op_apply(space, tag_a, ea, _brmu(space, tag_b, eb, a, b, pa))
    aa = _op_apply(space, tag_a, ea, a)
    ab = _op_apply(space, tag_a, ea, b)
    tail = _brmu(space, tag_b, eb, aa, b, pa ^ pa_op)
    tail = tail + _brmu(space, tag_b, eb, a, ab, pa).scale(_sgn(pa & pa_op))
    return head - tail.scale(_sgn(pa_op & pc))


@dataclass
class RelationReport:
    """Outcome of the operator-identity suite for a series carrier."""

    carrier: str
    samples: int
    results: dict
    failures: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.results.values())


def ojp_relation_suite(space: OjpSpace, vw_pairs: Sequence,
                       probe_pairs: Sequence,
                       constants: Sequence = (0, 1)) -> RelationReport:
    """Check the structure-operator identities of the series product.

    ``vw_pairs`` supplies the homogeneous subscript elements, ``probe_pairs``
    the homogeneous arguments the resulting operators are evaluated on.  The
    integration constant of every antiderivative is swept over ``constants``;
    the identities must hold for any choice.
    """
    names = ("op_mul_mul", "op_mul_left", "op_left_left", "unit_product",
             "nested_left_left", "nested_left_mul", "nested_mul_left",
             "nested_mul_mul")
    results = {k: True for k in names}
    failures: dict = {}
    probes = []
    for a, b in probe_pairs:
        for u in (a, b):
            if not any(u.same_series(q) for q in probes):
                probes.append(u)

    def note(name, v, w, extra=""):
        if results[name]:
            results[name] = False
            failures[name] = (
                f"v={format_jet(v)}, w={format_jet(w)}{extra}")

    for v, w in vw_pairs:
        pv, pw = v.parity(), w.parity()
        if pv is None or pw is None:
            raise CatalogError("subscript elements must be homogeneous")
        vw = v * w
        ovw = space.product(v, w)
        e1 = ovw - (space.eta() * vw).scale(2)
        e2 = (space.eta() * ovw + space.dx(vw)
              + (space.eta() * space.D(vw)).scale(2))
        s1_ops = (_ops_of("mu", e1, _sgn(pv + 1))
                  + _ops_of("l", e2, 2 * _sgn(pv + 1)))
        s2_ops = _ops_of("l", e1) + _ops_of("l", space.D(v) * w)
        for u in probes:
            pu = u.parity()
            lhs = (space.product(v, space.product(w, u))
                   - space.product(w, space.product(v, u)).scale(
                       _sgn((pv ^ 1) & (pw ^ 1))))
            if not (lhs - _apply_ops(space, s1_ops, u)).is_zero():
                note("op_mul_mul", v, w, f", u={format_jet(u)}")
            lhs = (space.product(v, w * u)
                   - (w * space.product(v, u)).scale(_sgn((pv ^ 1) & pw)))
            if not (lhs - _apply_ops(space, s2_ops, u)).is_zero():
                note("op_mul_left", v, w, f", u={format_jet(u)}")
            lhs = v * (w * u) - (w * (v * u)).scale(_sgn(pv & pw))
            if not lhs.is_zero():
                note("op_left_left", v, w, f", u={format_jet(u)}")
            lhs = (space.product(space.one(), u)
                   - (space.eta() * u).scale(2) + space.D(u))
            if not lhs.is_zero():
                note("unit_product", v, w, f", u={format_jet(u)}")
        d_free = space.D(v).is_zero() and space.D(w).is_zero()
        for const in constants:
            tag = f", constant={const}"

            def block(prime):
                """[mu_{t - 2*eta*s} - 2 l_{eta*t}, mu] with t' = prime and
                s the matching antiderivative of D(t)."""
                t = space.antider(prime, const)
                s = space.antider(space.D(t), const)
                return (_ops_of("mu", t - (space.eta() * s).scale(2))
                        + _ops_of("l", space.eta() * t, -2))

            ll_ops = block(ovw - (space.eta() * vw).scale(2) + space.D(vw))
            lm_ops = block(space.dx(v) * w + (space.eta() * ovw).scale(2)
                           + (space.eta() * space.D(vw)).scale(2))
            e7 = space.product(w, v) - (space.eta() * (w * v)).scale(2)
            ml_ops = _ops_of("l", e7) + _ops_of("l", space.D(w) * v)
            z8 = space.antider(space.dx(v) * w, const)
            mm_ops = block(space.product(v, space.dx(w)))
            for a, b in probe_pairs:
                pa = a.parity()
                lhs = _br2(space, "l", v, "l", w, a, b)
                rhs = (_brmu_sum(space, _ops_of("l", vw, -1), a, b, pa)
                       + _brmu_sum(space, ll_ops, a, b, pa))
                if not (lhs - rhs).is_zero():
                    note("nested_left_left", v, w, tag)
                lhs = _br2(space, "l", v, "mu", w, a, b)
                rhs = (_brmu_sum(space, _ops_of("mu", vw), a, b, pa)
                       + _brmu_sum(space, lm_ops, a, b, pa)
                       ).scale(_sgn(pv + 1))
                if not (lhs - rhs).is_zero():
                    note("nested_left_mul", v, w, tag)
                lhs = _br2(space, "mu", w, "l", v, a, b)
                rhs = (_brmu_sum(space, ml_ops, a, b, pa)
                       + _br2(space, "l", v, "mu", w, a, b)
                       .scale(_sgn(pv & (pw ^ 1))))
                if not (lhs - rhs).is_zero():
                    note("nested_mul_left", v, w, tag)
                if not d_free:
                    # The closed form of the double multiplication-operator
                    # bracket is established for subscripts killed by the
                    # tail derivation; other subscripts stay in the span of
                    # the structure operators but have no uniform expression
                    # in these shapes.
                    continue
                lhs = _br2(space, "mu", v, "mu", w, a, b)
                rhs = _brmu_sum(
                    space, _ops_of("l", space.product(v, space.eta() * w), 2),
                    a, b, pa)
                rhs = rhs + (
                    _brmu_sum(space, mm_ops, a, b, pa)
                    - _brmu_sum(space, _ops_of("mu", space.eta() * z8),
                                a, b, pa).scale(2)
                ).scale(_sgn(pv + 1))
                if not (lhs - rhs).is_zero():
                    note("nested_mul_mul", v, w, tag)
    return RelationReport(repr(space), len(vw_pairs), results, failures)


def ojp_probe_pairs(space: OjpSpace, count: int, seed: int = 9) -> list:
    """Deterministic homogeneous probe pairs of low even degree."""
    singles = [Jet(space.ambient, {m: F(1)})
               for m in sorted(space.ambient.monomials(1))]
    pairs = [(a, b) for a in singles for b in singles]
    if len(pairs) <= count:
        return pairs
    rng = random.Random(seed)
    return rng.sample(pairs, count)


# -- finite builders -------------------------------------------------------


def _entry_js_0_2() -> FiniteEntry:
    alg = FinSuperAlg((0, 0), 0, {(0, 0): {1: F(1)}, (1, 1): {0: F(1)}},
                      ("a", "b"))
    return FiniteEntry(
        "JS_0_2", alg,
        summary="two even elements whose squares swap them and whose mixed "
                "product vanishes")


def _entry_lw_0_2() -> FiniteEntry:
    alg = FinSuperAlg.from_anticommutative(
        (0, 1), 0,
        {(0, 1): {1: F(1)}, (1, 0): {1: F(-1)}, (1, 1): {0: F(1)}},
        ("a", "abar"))
    return FiniteEntry(
        "LW_0_2", alg,
        summary="even element acting on an odd copy whose square returns it")


def _jdd_entry(name: str, amb: Ambient, d1: VectorField | None,
               d2: VectorField | None, mu1, mu2, summary: str) -> FiniteEntry:
    """Free rank-two module over a finite exterior coefficient algebra with
    the formal derivation-pair product and an optional odd correction on the
    cross terms.  Both module blocks are kept even when a derivation is zero.
    """
    monos = sorted(amb.monomials(0), key=lambda m: (len(m[1]), m[1]))
    basis = [(1, m) for m in monos] + [(2, m) for m in monos]
    index = {bm: i for i, bm in enumerate(basis)}
    zero = lambda f: Jet.zero(amb)
    derivs = [None, d1.apply if d1 else zero, d2.apply if d2 else zero]
    unit = ((), ())

    def lab(blk, m):
        if m == unit:
            return f"D{blk}"
        return f"{format_jet(Jet(amb, {m: F(1)}))}*D{blk}"

    parities = tuple((len(m[1]) + 1) & 1 for _, m in basis)
    table = {}
    for i, (b1, m1) in enumerate(basis):
        f1 = Jet(amb, {m1: F(1)})
        for j in range(i, len(basis)):
            b2, m2 = basis[j]
            f2 = Jet(amb, {m2: F(1)})
            res = fd_bracket(f1, b1, f2, b2, derivs, plus=True, odd_type=True)
            if (b1, b2) == (1, 2) and (mu1 or mu2):
                s = _sgn(len(m2[1]) & 1)
                for blk, mu in ((1, mu1), (2, mu2)):
                    if mu:
                        res[blk] = res.get(blk, Jet.zero(amb)) \
                            + mu(f1, f2).scale(s)
            cell: dict = {}
            for blk, jet in res.items():
                for m, c in jet.terms.items():
                    k = index[(blk, m)]
                    cell[k] = cell.get(k, F(0)) + c
            cell = vec_clean(cell)
            if cell:
                table[(i, j)] = cell
    alg = FinSuperAlg(parities, 0, table,
                      tuple(lab(b, m) for b, m in basis))
    return FiniteEntry(name, alg, summary=summary)


def _entry_jw_0_4() -> FiniteEntry:
    amb = Ambient(0, 1)
    one = Jet.one(amb)
    xi = Jet.xi(amb, 1)
    d1 = VectorField(amb, {("xi", 1): one})
    mu = lambda f, g: (f * g) * xi
    return _jdd_entry(
        "JW_0_4", amb, d1, None, mu, mu,
        summary="rank-two module over one odd generator; one derivation "
                "acts, the cross product carries an odd correction")


def _entry_jw_0_8() -> FiniteEntry:
    amb = Ambient(0, 2)
    one = Jet.one(amb)
    xi1, xi2 = Jet.xi(amb, 1), Jet.xi(amb, 2)
    d1 = VectorField(amb, {("xi", 1): one})
    d2 = VectorField(amb, {("xi", 2): one, ("xi", 1): xi1 * xi2})
    mu = lambda f, g: (f * g) * xi1
    return _jdd_entry(
        "JW_0_8", amb, d1, d2, mu, mu,
        summary="rank-two module over two odd generators with a twisted "
                "second derivation and one odd cross correction")


def _entry_js_0_8() -> FiniteEntry:
    amb = Ambient(0, 2)
    one = Jet.one(amb)
    xi1, xi2 = Jet.xi(amb, 1), Jet.xi(amb, 2)
    prod = xi1 * xi2
    d1 = VectorField(amb, {("xi", 1): one, ("xi", 2): prod})
    d2 = VectorField(amb, {("xi", 2): one - prod, ("xi", 1): prod})
    mu1 = lambda f, g: (f * g) * (xi1 + xi2)
    mu2 = lambda f, g: (f * g) * xi1
    return _jdd_entry(
        "JS_0_8", amb, d1, d2, mu1, mu2,
        summary="rank-two module over two odd generators with twisted "
                "derivations and two distinct odd cross corrections")


def _entry_js_0_16() -> FiniteEntry:
    amb = Ambient(0, 3)
    one = Jet.one(amb)
    xi1, xi2, xi3 = (Jet.xi(amb, j) for j in (1, 2, 3))
    d1 = VectorField(amb, {("xi", 1): one, ("xi", 3): xi1 * xi2})
    d2 = VectorField(amb, {("xi", 2): one, ("xi", 1): xi1 * xi2,
                           ("xi", 3): xi2 * xi3 + xi1 * xi2})
    return _jdd_entry(
        "JS_0_16", amb, d1, d2, None, None,
        summary="rank-two module over three odd generators; both "
                "derivations twisted, no cross correction")


# -- oracle builders: commutative series entries ---------------------------


def _entry_js_1_1() -> OracleEntry:
    amb = Ambient(1, 0)

    def pp(s1, f1, s2, f2):
        return {"field": (f1 * f2).d_even(1)}

    return OracleEntry(
        "JS_1_1", amb, ("field",), {"field": 0}, "commutative", 0, pp,
        summary="one-variable fields multiplying to the derivative of the "
                "coefficient product")


def _entry_jsho_2_2() -> OracleEntry:
    amb = Ambient(2, 0)

    def pp(s1, f1, s2, f2):
        if s1 == "field" and s2 == "field":
            return {"field": f1 * f2.d_even(1) + f2 * f1.d_even(1)}
        if s1 == "field" and s2 == "bar":
            return {"bar": f1 * f2.d_even(1)}
        if s1 == "bar" and s2 == "field":
            return {"bar": f2 * f1.d_even(1)}
        return {"field": f1.d_even(1) * f2.d_even(2)
                - f1.d_even(2) * f2.d_even(1)}

    return OracleEntry(
        "JSHO_2_2", amb, ("field", "bar"), {"field": 0, "bar": 1},
        "commutative", 0, pp,
        summary="two-variable fields along the first coordinate paired with "
                "an odd copy of the functions")


def _entry_jsko_1_2() -> OracleEntry:
    amb = Ambient(1, 0)

    def pp(s1, f1, s2, f2):
        if s1 == "field" and s2 == "field":
            return {"field": f1 * f2.d_even(1) + f2 * f1.d_even(1)}
        if s1 == "field" and s2 == "bar":
            return {"bar": f1 * f2.d_even(1)}
        if s1 == "bar" and s2 == "field":
            return {"bar": f2 * f1.d_even(1)}
        return {"field": (f1 * f2.d_even(1) - f2 * f1.d_even(1)).scale(2)}

    return OracleEntry(
        "JSKO_1_2", amb, ("field", "bar"), {"field": 0, "bar": 1},
        "commutative", 0, pp,
        summary="one-variable fields paired with an odd copy of the "
                "functions, the odd square landing back in the fields")


def _entry_js_1_8(alpha) -> OracleEntry:
    amb = Ambient(1, 2)
    one = Jet.one(amb)
    x = Jet.x(amb, 1)
    xi1, xi2 = Jet.xi(amb, 1), Jet.xi(amb, 2)
    d1 = VectorField(amb, {("xi", 1): one, ("x", 1): xi1 + xi2.scale(alpha)})
    d2 = VectorField(amb, {("xi", 2): one, ("x", 1): x * xi2,
                           ("xi", 1): (xi1 * xi2).scale(-1)})
    derivs = [None, d1.apply, d2.apply]
    idx = {"D1": 1, "D2": 2}
    back = {1: "D1", 2: "D2"}

    def pp(s1, f1, s2, f2):
        res = fd_bracket(f1, idx[s1], f2, idx[s2], derivs,
                         plus=True, odd_type=True)
        return {back[k]: v for k, v in res.items()}

    return OracleEntry(
        "JS_1_8", amb, ("D1", "D2"), {"D1": 1, "D2": 1}, "commutative", 0,
        pp, params={"alpha": alpha},
        summary="rank-two module of odd derivations on one even and two odd "
                "coordinates, product given by the formal plus-bracket")


# -- oracle builders: anticommutative small families -----------------------


def _entry_lw_1_2() -> OracleEntry:
    amb = Ambient(1, 0)

    def pp(s1, f1, s2, f2):
        if s1 == "fun" and s2 == "fun":
            return {}
        if s1 == "fun" and s2 == "bar":
            return {"bar": f1 * f2}
        if s1 == "bar" and s2 == "fun":
            return {"bar": (f1 * f2).scale(-1)}
        fg = f1 * f2
        return {"fun": fg.scale(2) - fg.d_even(1)}

    return OracleEntry(
        "LW_1_2", amb, ("fun", "bar"), {"fun": 0, "bar": 1},
        "anticommutative", 0, pp,
        summary="functions with an odd copy; the odd square folds back "
                "through twice-minus-derivative")


def _entry_lho_1_2() -> OracleEntry:
    amb = Ambient(1, 0)
    unit = ((0,), ())

    def pp(s1, f1, s2, f2):
        if s1 == "fun" and s2 == "fun":
            return {}
        if s1 == "fun" and s2 == "bar":
            return {"bar": f1.d_even(1) * f2}
        if s1 == "bar" and s2 == "fun":
            return {"bar": (f2.d_even(1) * f1).scale(-1)}
        return {"fun": (f1 * f2).scale(2)}

    return OracleEntry(
        "LHO_1_2", amb, ("fun", "bar"), {"fun": 0, "bar": 1},
        "anticommutative", 0, pp, excluded={"fun": {unit}},
        summary="functions modulo constants with an odd copy; the odd "
                "square is twice the product")


def _entry_lshop_2_2() -> OracleEntry:
    amb = Ambient(2, 0)
    one = Jet.one(amb)
    x1 = Jet.x(amb, 1)
    unit = ((0, 0), ())
    d1 = lambda f: (one + x1) * f.d_even(1)
    d2 = lambda f: f.d_even(2)
    br = lambda f, g: d1(f) * d2(g) - d2(f) * d1(g)

    def pp(s1, f1, s2, f2):
        if s1 == "fun" and s2 == "fun":
            return {"fun": br(f1, f2).scale(-1)}
        if s1 == "fun" and s2 == "bar":
            return {"bar": br(f1, f2) + f2 * d2(f1)}
        if s1 == "bar" and s2 == "fun":
            return {"bar": (br(f2, f1) + f1 * d2(f2)).scale(-1)}
        return {"fun": (f1 * f2).scale(-2)}

    return OracleEntry(
        "LSHOp_2_2", amb, ("fun", "bar"), {"fun": 0, "bar": 1},
        "anticommutative", 0, pp, excluded={"fun": {unit}},
        summary="two-variable functions modulo constants under a shifted "
                "divergence-free bracket, with an odd copy")


def _entry_lwa_1_2(alpha) -> OracleEntry:
    amb = Ambient(1, 0)
    w = Jet.const(amb, alpha) + Jet.x(amb, 1)

    def pp(s1, f1, s2, f2):
        if s1 == "field" and s2 == "field":
            return {"field": f1 * f2.d_even(1) - f2 * f1.d_even(1)}
        if s1 == "field" and s2 == "fun":
            return {"field": (w * (f1 * f2)).scale(-1),
                    "fun": f1 * f2.d_even(1)}
        if s1 == "fun" and s2 == "field":
            return {"field": w * (f1 * f2),
                    "fun": (f2 * f1.d_even(1)).scale(-1)}
        return {}

    return OracleEntry(
        "LWa_1_2", amb, ("field", "fun"), {"field": 0, "fun": 0},
        "anticommutative", 0, pp, params={"alpha": alpha},
        summary="one-variable fields acting on functions with a shifted "
                "multiplication back into the fields")


def _entry_ls_1_3() -> OracleEntry:
    amb = Ambient(1, 0)

    def pp(s1, f1, s2, f2):
        d = lambda f: f.d_even(1)
        if s1 == "field" and s2 == "field":
            return {"field": f1 * d(f2) - f2 * d(f1)}
        if s1 == "field" and s2 == "fun":
            return {"fun": f1 * d(f2)}
        if s1 == "fun" and s2 == "field":
            return {"fun": (f2 * d(f1)).scale(-1)}
        if s1 == "field" and s2 == "tilde":
            return {"tilde": f1 * d(f2)}
        if s1 == "tilde" and s2 == "field":
            return {"tilde": (f2 * d(f1)).scale(-1)}
        if s1 == "fun" and s2 == "tilde":
            return {"field": f1 * f2}
        if s1 == "tilde" and s2 == "fun":
            return {"field": f1 * f2}
        return {}

    return OracleEntry(
        "LS_1_3", amb, ("field", "fun", "tilde"),
        {"field": 0, "fun": 1, "tilde": 1}, "anticommutative", 0, pp,
        summary="one-variable fields with two odd copies of the functions "
                "pairing into the fields")


def _entry_lwa_2_2(alpha) -> OracleEntry:
    amb = Ambient(2, 0)
    one = Jet.one(amb)
    x1, x2 = Jet.x(amb, 1), Jet.x(amb, 2)
    derivs = [None, lambda f: f.d_even(1), lambda f: f.d_even(2)]
    idx = {"D1": 1, "D2": 2}
    back = {1: "D1", 2: "D2"}

    def cross(f, g):
        fg = f * g
        return {"D1": fg * (one + x1), "D2": (x2 * fg).scale(-alpha)}

    def pp(s1, f1, s2, f2):
        i1, i2 = idx[s1], idx[s2]
        res = fd_bracket(f1, i1, f2, i2, derivs, plus=False, odd_type=False)
        out = {back[k]: v for k, v in res.items()}
        if (i1, i2) == (1, 2):
            out = elem_add(out, cross(f1, f2))
        elif (i1, i2) == (2, 1):
            out = elem_add(out, elem_scale(cross(f2, f1), -1))
        return out

    return OracleEntry(
        "LWa_2_2", amb, ("D1", "D2"), {"D1": 0, "D2": 0},
        "anticommutative", 0, pp, params={"alpha": alpha},
        summary="two coordinate fields with an affine correction on the "
                "cross bracket")


def _entry_lsa_2_2(alpha) -> OracleEntry:
    amb = Ambient(2, 0)
    one = Jet.one(amb)
    x1, x2 = Jet.x(amb, 1), Jet.x(amb, 2)
    w = one + x1.scale(alpha) + x1 * x2
    derivs = [None, lambda f: f.d_even(1), lambda f: w * f.d_even(2)]
    idx = {"D1": 1, "D2": 2}
    back = {1: "D1", 2: "D2"}

    def cross(f, g):
        return {"D1": x1 * (f * g)}

    def pp(s1, f1, s2, f2):
        i1, i2 = idx[s1], idx[s2]
        res = fd_bracket(f1, i1, f2, i2, derivs, plus=False, odd_type=False)
        out = {back[k]: v for k, v in res.items()}
        if (i1, i2) == (1, 2):
            out = elem_add(out, cross(f1, f2))
        elif (i1, i2) == (2, 1):
            out = elem_add(out, elem_scale(cross(f2, f1), -1))
        return out

    return OracleEntry(
        "LSa_2_2", amb, ("D1", "D2"), {"D1": 0, "D2": 0},
        "anticommutative", 0, pp, params={"alpha": alpha},
        summary="rank-two module over a plain and a weighted coordinate "
                "derivation with a linear cross correction")


def _entry_lskop_1_2(beta) -> OracleEntry:
    _check_lskop_1_2_beta(beta)
    amb = Ambient(1, 0)
    x = Jet.x(amb, 1)

    def pp(s1, f1, s2, f2):
        d = lambda f: f.d_even(1)
        if s1 == "field" and s2 == "field":
            return {"field": (f1 * d(f2) - f2 * d(f1)).scale(-beta)}
        if s1 == "field" and s2 == "bar":
            return {"bar": (f1 * d(f2)).scale(beta) - f2 * d(f1)}
        if s1 == "bar" and s2 == "field":
            return {"bar": f1 * d(f2) - (f2 * d(f1)).scale(beta)}
        return {"field": x * (f1 * f2)}

    return OracleEntry(
        "LSKOp_1_2", amb, ("field", "bar"), {"field": 0, "bar": 1},
        "anticommutative", 0, pp, params={"beta": beta},
        summary="one-variable fields scaled by a parameter with an odd copy "
                "squaring to a multiple of x")


def _check_lskop_1_2_beta(beta) -> None:
    beta = F(beta)
    bad = beta in (0, 1)
    if not bad and beta > 2:
        t = beta - 2
        bad = t.numerator in (1, 2)
    if bad:
        raise CatalogError(
            "beta must avoid 0, 1 and the values 2 + 1/b, 2 + 2/b for "
            f"positive integers b; got {beta}")


def _entry_lha_1_2(alpha) -> OracleEntry:
    amb = Ambient(1, 0)
    w = Jet.const(amb, alpha) + Jet.x(amb, 1)
    unit = ((0,), ())

    def pp(s1, f1, s2, f2):
        d = lambda f: f.d_even(1)
        if s1 == "field" and s2 == "field":
            return {"field": f1 * d(f2) - f2 * d(f1)}
        if s1 == "field" and s2 == "bar":
            return {"bar": f1 * d(f2)}
        if s1 == "bar" and s2 == "field":
            return {"bar": (f2 * d(f1)).scale(-1)}
        return {"field": (w * (d(f1) * d(f2))).scale(-2)}

    return OracleEntry(
        "LHa_1_2", amb, ("field", "bar"), {"field": 0, "bar": 1},
        "anticommutative", 0, pp, excluded={"bar": {unit}},
        params={"alpha": alpha},
        summary="one-variable fields with an odd copy modulo constants; the "
                "odd square multiplies the two derivatives")


# -- oracle builders: skew brackets from bivectors -------------------------


def _quasi_entry(name: str, amb: Ambient, z_field: VectorField | None,
                 pairs: Sequence, drop_unit: bool, params: dict,
                 summary: str) -> OracleEntry:
    zfn = z_field.apply if z_field is not None else None
    pfn = [(X.apply, Y.apply) for X, Y in pairs]
    unit = ((0,) * amb.n_even, ())

    def pp(s1, f1, s2, f2):
        return {"fun": quasi_poisson(zfn, pfn, f1, f2)}

    return OracleEntry(
        name, amb, ("fun",), {"fun": 0}, "anticommutative", 0, pp,
        excluded={"fun": {unit}} if drop_unit else None,
        params=params, summary=summary)


def _entry_lhoa_3_1(alpha) -> OracleEntry:
    amb = Ambient(3, 0)
    x1 = Jet.x(amb, 1)
    w = x1.scale(alpha) + x1 * x1
    pairs = [(VectorField.partial(amb, "x", 1), VectorField.partial(amb, "x", 2)),
             (VectorField(amb, {("x", 1): w}), VectorField.partial(amb, "x", 3))]
    return _quasi_entry(
        "LHOa_3_1", amb, None, pairs, True, {"alpha": alpha},
        summary="three-variable functions modulo constants under a "
                "quadratically weighted biderivation bracket")


def _entry_lshoa_4_1(alpha) -> OracleEntry:
    amb = Ambient(4, 0)
    w = Jet.const(amb, alpha) + Jet.x(amb, 1)
    pairs = [(VectorField.partial(amb, "x", 1), VectorField.partial(amb, "x", 2)),
             (VectorField(amb, {("x", 3): w}), VectorField.partial(amb, "x", 4))]
    return _quasi_entry(
        "LSHOa_4_1", amb, None, pairs, True, {"alpha": alpha},
        summary="four-variable functions modulo constants; the second "
                "biderivation pair is shifted by the first coordinate")


def _entry_lko_2_1() -> OracleEntry:
    amb = Ambient(2, 0)
    z = VectorField(amb, {("x", 1): Jet.const(amb, 2)})
    w = Jet.x(amb, 1) + Jet.x(amb, 2)
    pairs = [(VectorField(amb, {("x", 1): w}), VectorField.partial(amb, "x", 2))]
    return _quasi_entry(
        "LKO_2_1", amb, z, pairs, False, {},
        summary="two-variable functions under a skew bracket with a "
                "translation part along the first coordinate")


def _entry_lskoa_3_1(alpha, beta) -> OracleEntry:
    if alpha != 0 and beta == F(1, 3):
        raise CatalogError(
            "the pair alpha != 0, beta = 1/3 is outside the family; "
            f"got alpha={alpha}, beta={beta}")
    amb = Ambient(3, 0)
    x1, x2 = Jet.x(amb, 1), Jet.x(amb, 2)
    z = VectorField(amb, {("x", 3): (Jet.const(amb, alpha)
                                     + x1.scale(2)).scale(2)})
    w2 = (x1.scale(alpha) + x1 * x1).scale(-3 * beta)
    w3 = ((Jet.const(amb, alpha) + x1.scale(2)) * x2).scale(-1)
    pairs = [(VectorField.partial(amb, "x", 1), VectorField.partial(amb, "x", 2)),
             (VectorField(amb, {("x", 1): w2}), VectorField.partial(amb, "x", 3)),
             (VectorField(amb, {("x", 2): w3}), VectorField.partial(amb, "x", 3))]
    return _quasi_entry(
        "LSKOa_3_1", amb, z, pairs, False, {"alpha": alpha, "beta": beta},
        summary="three-variable functions under a skew bracket mixing a "
                "translation part with two weighted biderivation pairs")


# -- oracle builders: kernel carriers --------------------------------------


def _kernel_carrier(amb: Ambient, op: Callable, excluded_key=None):
    """Slot generator and membership test for the kernel of ``op`` with the
    component along ``excluded_key`` removed."""

    def gen(max_deg: int) -> list[Jet]:
        domain = [m for m in sorted(amb.monomials(max_deg))
                  if m != excluded_key]
        vec_of = lambda key: dict(op(Jet(amb, {key: F(1)})).terms)
        return [Jet(amb, dict(v)) for v in nullspace(domain, vec_of)]

    def member(a: Element) -> bool:
        f = a.get("j")
        if f is None:
            return True
        if excluded_key is not None and excluded_key in f.terms:
            return False
        return op(f).is_zero()

    return gen, member


def _entry_lsho(n: int) -> OracleEntry:
    if n < 2:
        raise CatalogError(f"carrier needs n >= 2, got n={n}")
    amb = Ambient(n, n)
    xi1 = Jet.xi(amb, 1)
    w = Jet.x(amb, 2) * xi1 * Jet.xi(amb, 2)
    top = ((0,) * n, tuple(range(1, n + 1)))

    def laplace(f: Jet) -> Jet:
        out = Jet.zero(amb)
        for i in range(1, n + 1):
            out = out + f.d_odd(i).d_even(i)
        return out

    gen, member = _kernel_carrier(amb, laplace, top)

    def pp(s1, f1, s2, f2):
        p1 = f1.parity()
        res = buttin(f1, f2)
        res = res + (xi1 * (f1 * f2)).scale(2 * _sgn(p1 + 1))
        res = res + buttin(w * f1, f2).scale(2)
        res = res + (buttin(w, f1) * f2).scale(2 * _sgn(p1))
        return {"j": res}

    return OracleEntry(
        f"LSHO_{n}_{2 ** (n - 1)}", amb, ("j",), {"j": 1},
        "anticommutative", 0, pp, member=member, slot_basis={"j": gen},
        params={"n": n},
        summary="kernel of the odd Laplacian with no top odd component, "
                "under a twisted divergence-free bracket")


def _entry_lsko(n: int, beta) -> OracleEntry:
    if n < 1:
        raise CatalogError(f"carrier needs n >= 1, got n={n}")
    beta = F(beta)
    if beta == F(4, n + 1):
        raise CatalogError(
            f"beta = 4/(n+1) is outside the family; got beta={beta} at n={n}")
    amb = Ambient(n, n + 1, tau=True)
    xi1 = Jet.xi(amb, 1)
    tau = Jet.tau_gen(amb)
    w = xi1 * tau
    c = beta * (n + 1)

    def op(f: Jet) -> Jet:
        return div_beta(f, beta) + f.d_tau().scale(1 - beta)

    top_all = ((0,) * n, tuple(range(1, n + 2)))
    top_xi = ((0,) * n, tuple(range(1, n + 1)))
    special = {F(1): top_all, F(n - 1, n + 1): top_xi}.get(beta)
    gen, member = _kernel_carrier(amb, op, special)

    def pp(s1, f1, s2, f2):
        p1 = f1.parity()
        res = k_bracket(f1, f2) + k_bracket(w * f1, f2)
        extra = xi1 * ((f1.euler().scale(2) - f1.scale(c)) * f2)
        extra = extra + k_bracket(w, f1) * f2
        extra = extra - (tau * f1.d_even(1) * f2).scale(2)
        return {"j": res + extra.scale(_sgn(p1 + 1))}

    return OracleEntry(
        f"LSKO_{n}_{2 ** n}", amb, ("j",), {"j": 1}, "anticommutative", 0,
        pp, member=member, slot_basis={"j": gen},
        params={"n": n, "beta": beta},
        summary="kernel of a weighted divergence under a twisted contact "
                "bracket; special weights drop one top odd component")


def _entry_lskop_2_4() -> OracleEntry:
    amb = Ambient(2, 3, tau=True)
    xi1, xi2 = Jet.xi(amb, 1), Jet.xi(amb, 2)
    tau = Jet.tau_gen(amb)
    w = xi1 * tau
    xx = xi1 * xi2
    top = ((0, 0), (1, 2, 3))

    def op(f: Jet) -> Jet:
        return div_beta(f, 1)

    gen, member = _kernel_carrier(amb, op, top)

    def pp(s1, f1, s2, f2):
        p1 = f1.parity()
        res = k_bracket(f1, f2) + k_bracket((w - xx) * f1, f2)
        extra = xi1 * ((f1.euler().scale(2) - f1.scale(3)) * f2)
        extra = extra + k_bracket(w + xx, f1) * f2
        extra = extra - (tau * f1.d_even(1) * f2).scale(2)
        res = res + extra.scale(_sgn(p1 + 1))
        res = res + (f1.d_tau() * (xx * f2)).scale(2)
        return {"j": res}

    return OracleEntry(
        "LSKOp_2_4", amb, ("j",), {"j": 1}, "anticommutative", 0, pp,
        member=member, slot_basis={"j": gen},
        summary="weight-one divergence kernel in two coordinates under a "
                "contact bracket twisted by a mixed odd factor")


# -- oracle builders: series products over an odd Poisson carrier ----------


def _ojp_checks(entry: OracleEntry, order: int, rng) -> tuple[bool, str]:
    space = entry.space
    pairs = ojp_probe_pairs(space, 6)
    rep = ojp_relation_suite(space, pairs, pairs[:3], constants=(0, 1))
    if rep.passed:
        return True, f"{rep.samples} subscript pairs, both constants"
    bad = ", ".join(f"{k}: {v}" for k, v in rep.failures.items())
    return False, bad


def _lp_closed_form(entry: OracleEntry, order: int, rng) -> tuple[bool, str]:
    space = entry.space
    eff = min(order, 3)
    monos = [Jet(space.ambient, {m: F(1)})
             for m in sorted(space.ambient.monomials(eff))][:40]
    for u in monos:
        for v in monos:
            lhs = entry.product({"j": u}, {"j": v}).get(
                "j", Jet.zero(space.ambient))
            rhs = (space.jbracket(u, v).scale(-1)
                   + (space.eta() * (u * v)).scale(2 * _sgn(u.parity())))
            if not (lhs - rhs).is_zero():
                return False, (f"mismatch at {format_jet(u)}, "
                               f"{format_jet(v)}")
    return True, f"{len(monos)}^2 monomial pairs"


def _entry_ojp(n: int, m: int) -> OracleEntry:
    space = OjpSpace(n, m)

    def pp(s1, f1, s2, f2):
        return {"j": space.product(f1, f2)}

    entry = OracleEntry(
        f"OJP_{n}_{m}", space.ambient, ("j",), {"j": 0}, "commutative", 1,
        pp, params={"n": n, "m": m},
        extra_checks=(("operator_relations", _ojp_checks),),
        summary="commutative odd-type series product over an odd Poisson "
                "coefficient algebra with marker and series variable")
    entry.space = space
    entry.default_seeds = [{"j": space.eta()}, {"j": space.one()}, {}]
    return entry


def _entry_lp(n: int, m: int) -> OracleEntry:
    space = OjpSpace(n, m)

    def pp(s1, f1, s2, f2):
        return {"j": space.product(f1, f2).scale(_sgn(f1.parity()))}

    checks = (("closed_form", _lp_closed_form),) if n <= 2 and m == n else ()
    entry = OracleEntry(
        f"LP_{n}_{m}", space.ambient, ("j",), {"j": 1}, "anticommutative",
        0, pp, params={"n": n, "m": m}, extra_checks=checks,
        summary="parity-reversed twin of the odd-type series product; "
                "matches a closed-form bracket on the enlarged ambient")
    entry.space = space
    return entry


# -- verification ----------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerifyReport:
    name: str
    order: int | None
    passed: bool
    checks: list
    stats: dict


def verify_entry(entry, order: int | None = None,
                 seed: int = 9) -> VerifyReport:
    """Run an entry's defining checks.

    Finite entries are checked exactly: simplicity, rigidity, and the
    operator dimensions.  Oracle entries are sampled inside the degree
    window: declared symmetry, carrier closure of products, and any
    entry-specific checks (operator relations, closed forms).
    """
    if entry.kind == "finite":
        simp = is_simple(entry.algebra)
        rig = is_rigid(entry.algebra)
        checks = [Check("simple", simp.simple),
                  Check("rigid", rig.rigid)]
        stats = {"dim": entry.dim, "simple": simp.simple,
                 "rigid": rig.rigid, "dim_str": rig.dim_str,
                 "dim_r": rig.dim_r}
        return VerifyReport(entry.name, None, simp.simple and rig.rigid,
                            checks, stats)

    eff = 4 if order is None else order
    rng = random.Random(seed)
    lo = entry.basis(min(2, eff))
    step = max(1, len(lo) // 18)
    lo = lo[::step][:18]
    pairs = [(a, b) for a in lo for b in lo]
    hi = entry.basis(eff)
    for _ in range(12):
        pairs.append((rng.choice(hi), rng.choice(hi)))

    sym_sign = 1 if entry.symmetry == "commutative" else -1
    sym_ok, sym_detail = True, f"{len(pairs)} pairs"
    clo_ok, clo_detail = True, f"{len(pairs)} pairs"
    for a, b in pairs:
        pa, pb = entry.parity(a), entry.parity(b)
        ab = entry.product(a, b)
        if sym_ok:
            mirror = elem_scale(entry.product(b, a),
                                sym_sign * _sgn(pa & pb))
            if not elem_is_zero(elem_sub(ab, mirror)):
                sym_ok = False
                sym_detail = (f"broken at {entry.format(a)} | "
                              f"{entry.format(b)}")
        if clo_ok and not entry.member(ab):
            clo_ok = False
            clo_detail = (f"product of {entry.format(a)} and "
                          f"{entry.format(b)} leaves the carrier")
    checks = [Check("symmetry", sym_ok, sym_detail),
              Check("closure", clo_ok, clo_detail)]
    for name, fn in entry.extra_checks:
        ok, detail = fn(entry, eff, rng)
        checks.append(Check(name, ok, detail))
    stats = {"window_dim": len(hi), "sample_pairs": len(pairs),
             "seed": seed}
    return VerifyReport(entry.name, eff, all(c.passed for c in checks),
                        checks, stats)


# -- ideal spot checks ------------------------------------------------------


@dataclass
class SeedReach:
    seed: str
    dim: int
    reached: int
    targets: int
    missing: list
    complete: bool


@dataclass
class SpotIdealReport:
    name: str
    order: int
    seeds: list

    @property
    def passed(self) -> bool:
        return all(s.complete or s.dim == 0 for s in self.seeds)


def ideal_spot_checks(entry, seeds: Sequence | None = None,
                      order: int = 3) -> SpotIdealReport:
    """Grow the two-sided multiplicative closure of each seed inside the
    degree window and report which window basis elements it reaches.

    Products are truncated back into the window, so the closure is the
    window shadow of the true ideal; a seed that reaches every target of
    degree below the window edge is reported complete.
    """
    basis = entry.basis(order)
    vecs = [entry.to_vec(elem_truncate(b, order)
                         if entry.kind == "oracle" else b) for b in basis]
    partners = span_reduce(vecs)

    def step(p, v):
        u = entry.from_vec(p)
        w = entry.from_vec(v)
        pr = entry.product(u, w)
        if entry.kind == "oracle":
            pr = elem_truncate(pr, order)
        return entry.to_vec(pr)

    if seeds is None:
        seeds = getattr(entry, "default_seeds", None)
        if seeds is None:
            seeds = [basis[0], {}] if basis else [{}]

    if entry.kind == "oracle":
        def deg(b):
            return max((f.even_degree() for f in b.values()), default=0)
        targets = [(b, v) for b, v in zip(basis, vecs)
                   if deg(b) <= order - 1]
    else:
        targets = list(zip(basis, vecs))

    out = []
    for seed in seeds:
        sv = entry.to_vec(elem_truncate(seed, order)
                          if entry.kind == "oracle" else seed)
        closed = closure_under(span_reduce([sv] if sv else []),
                               [step], partners)
        missing = [entry.format(b) for b, v in targets
                   if not closed.contains(v)]
        out.append(SeedReach(entry.format(seed), closed.dim,
                             len(targets) - len(missing), len(targets),
                             missing[:8], not missing))
    return SpotIdealReport(entry.name, order, out)


# -- products carved from graded families ----------------------------------


def product_from_mu(family: str, spec: GradingSpec, mu, x, y,
                    order: int = 4, beta=None):
    """Quadratic product on the bottom component of a graded family:
    bracket the degree-one element with each argument in turn.

    ``mu`` must be parity-homogeneous of pure weighted degree one.
    """
    real = FamilyRealization(family, spec, beta=beta)
    if real.parity(mu) is None:
        raise CatalogError("mu must be parity-homogeneous")
    if real.degrees(mu) != {1}:
        raise CatalogError(
            f"mu must have pure degree 1, found degrees {real.degrees(mu)}")
    return real.bracket(real.bracket(mu, x), y)


# -- registry ---------------------------------------------------------------


@dataclass(frozen=True)
class RegistryRow:
    name: str
    kind: str
    params: tuple
    constraints: str
    summary: str


_FIXED: dict = {
    "JS_0_2": ((), "", _entry_js_0_2),
    "JW_0_4": ((), "", _entry_jw_0_4),
    "JW_0_8": ((), "", _entry_jw_0_8),
    "JS_0_8": ((), "", _entry_js_0_8),
    "JS_0_16": ((), "", _entry_js_0_16),
    "LW_0_2": ((), "", _entry_lw_0_2),
    "JS_1_1": ((), "", _entry_js_1_1),
    "JSHO_2_2": ((), "", _entry_jsho_2_2),
    "JSKO_1_2": ((), "", _entry_jsko_1_2),
    "JS_1_8": (("alpha",), "any alpha; 0 and 1 cover the family up to "
               "isomorphism", _entry_js_1_8),
    "LW_1_2": ((), "", _entry_lw_1_2),
    "LHO_1_2": ((), "", _entry_lho_1_2),
    "LSHOp_2_2": ((), "", _entry_lshop_2_2),
    "LSKOp_2_4": ((), "", _entry_lskop_2_4),
    "LSKOp_1_2": (("beta",), "beta outside {0, 1} and not 2 + 1/b or "
                  "2 + 2/b for a positive integer b", _entry_lskop_1_2),
    "LHa_1_2": (("alpha",), "any alpha; 0 and 1 cover the family",
                _entry_lha_1_2),
    "LWa_1_2": (("alpha",), "any alpha; 0 and 1 cover the family",
                _entry_lwa_1_2),
    "LWa_2_2": (("alpha",), "any alpha; 0 and 1 cover the family",
                _entry_lwa_2_2),
    "LSa_2_2": (("alpha",), "any alpha; 0 and 1 cover the family",
                _entry_lsa_2_2),
    "LS_1_3": ((), "", _entry_ls_1_3),
    "LHOa_3_1": (("alpha",), "any alpha; 0 and 1 cover the family",
                 _entry_lhoa_3_1),
    "LSHOa_4_1": (("alpha",), "any alpha; 0 and 1 cover the family",
                  _entry_lshoa_4_1),
    "LKO_2_1": ((), "", _entry_lko_2_1),
    "LSKOa_3_1": (("alpha", "beta"), "rejected only when alpha != 0 and "
                  "beta = 1/3", _entry_lskoa_3_1),
}

_PATTERNS: dict = {
    "OJP": (("n", "m"), "n >= 0, m in {n, n+1}",
            "odd-type series product over an odd Poisson carrier"),
    "LP": (("n", "m"), "n >= 0, m in {n, n+1}",
           "parity-reversed twin of the odd-type series product"),
    "LSHO": (("n",), "n >= 2, second index 2^(n-1)",
             "monomial divergence kernel under a twisted bracket"),
    "LSKO": (("n", "beta"), "n >= 1, second index 2^n, beta != 4/(n+1)",
             "weighted divergence kernel under a twisted contact bracket"),
}

_ALIASES = {"LHa_2_2": "LHa_1_2", "JSa_1_8": "JS_1_8"}


def normalize_name(raw: str) -> str:
    s = raw.strip()
    for old, new in (("′", "p"), ("'", "p"), ("α", "a"),
                     ("β", ""), ("^", ""), ("{", ""), ("}", ""),
                     ("(", "_"), (")", ""), (",", "_"), (" ", "")):
        s = s.replace(old, new)
    while "__" in s:
        s = s.replace("__", "_")
    s = s.strip("_")
    return _ALIASES.get(s, s)


def make(name: str, *, alpha=None, beta=None):
    """Build a catalog entry by name.

    Names are normalized first, so decorated spellings resolve to the same
    entry.  Parametrized entries take exact rationals for alpha and beta;
    out-of-range parameters raise CatalogError naming the constraint.
    """
    key = normalize_name(name)
    if key in _FIXED:
        wanted, _, builder = _FIXED[key]
        kwargs = {}
        if "alpha" in wanted:
            kwargs["alpha"] = F(0) if alpha is None else F(alpha)
        if "beta" in wanted:
            if beta is None:
                raise CatalogError(f"{key} needs an explicit beta")
            kwargs["beta"] = F(beta)
        return builder(**kwargs)
    parts = key.split("_")
    base = parts[0] if parts else ""
    if base in _PATTERNS and len(parts) == 3:
        try:
            a, b = int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise CatalogError(f"unknown entry {name!r}") from exc
        if base == "OJP":
            return _entry_ojp(a, b)
        if base == "LP":
            return _entry_lp(a, b)
        if base == "LSHO":
            if a < 2 or b != 2 ** (a - 1):
                raise CatalogError(
                    f"indices must be n, 2^(n-1) with n >= 2; got {key}")
            return _entry_lsho(a)
        if base == "LSKO":
            if a < 1 or b != 2 ** a:
                raise CatalogError(
                    f"indices must be n, 2^n with n >= 1; got {key}")
            if beta is None:
                raise CatalogError(f"{key} needs an explicit beta")
            return _entry_lsko(a, F(beta))
    raise CatalogError(f"unknown entry {name!r}")


def registry_listing() -> list:
    """All catalog entries with parameters and constraints, JSON-friendly."""
    rows = []
    for name, (params, constraints, builder) in _FIXED.items():
        kind = "finite" if name in ("JS_0_2", "JW_0_4", "JW_0_8", "JS_0_8",
                                    "JS_0_16", "LW_0_2") else "oracle"
        probe_kwargs = {}
        if "alpha" in params:
            probe_kwargs["alpha"] = F(0)
        if "beta" in params:
            probe_kwargs["beta"] = F(1, 2)
        summary = builder(**probe_kwargs).summary
        rows.append(RegistryRow(name, kind, params, constraints, summary))
    for base, (params, constraints, summary) in _PATTERNS.items():
        rows.append(RegistryRow(f"{base}_<n>_<s>", "oracle", params,
                                constraints, summary))
    return [{"name": r.name, "kind": r.kind, "params": list(r.params),
             "constraints": r.constraints, "summary": r.summary}
            for r in rows]
