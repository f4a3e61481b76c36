"""Polynomial jets in commuting and anticommuting generators.

An Ambient fixes m commuting generators x1..xm and n anticommuting ones
xi1..xin; when ``tau=True`` the last anticommuting generator is special (it
prints as ``tau`` and the default Euler weight skips it).  A Jet is a finite
Fraction-linear combination of monomials together with a validity order: the
series is trusted only up to that total degree in the commuting generators
(None means exact).  Products and derivatives track the order so truncated
data never masquerades as exact.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator

F = Fraction

# monomial: (tuple of even exponents, strictly increasing tuple of odd indices)
Monomial = tuple


class Ambient:
    """Generator layout shared by a family of jets."""

    __slots__ = ("n_even", "n_odd", "tau")

    def __init__(self, n_even: int, n_odd: int, tau: bool = False):
        if tau and n_odd == 0:
            raise ValueError("tau designation needs at least one odd generator")
        self.n_even = n_even
        self.n_odd = n_odd
        self.tau = tau

    @property
    def tau_index(self) -> int | None:
        return self.n_odd if self.tau else None

    def odd_name(self, j: int) -> str:
        return "tau" if self.tau and j == self.n_odd else f"xi{j}"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ambient)
            and (self.n_even, self.n_odd, self.tau)
            == (other.n_even, other.n_odd, other.tau)
        )

    def __hash__(self):
        return hash((self.n_even, self.n_odd, self.tau))

    def __repr__(self):
        t = ", tau=True" if self.tau else ""
        return f"Ambient({self.n_even}, {self.n_odd}{t})"

    def monomials(self, max_even_deg: int) -> Iterator[Monomial]:
        """All monomials with total even degree <= max_even_deg."""
        for odds in _subsets(self.n_odd):
            for ex in _exponents(self.n_even, max_even_deg):
                yield (ex, odds)


def _subsets(n: int) -> Iterator[tuple]:
    for mask in range(1 << n):
        yield tuple(j + 1 for j in range(n) if mask >> j & 1)


def _exponents(m: int, total: int) -> Iterator[tuple]:
    if m == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in _exponents(m - 1, total - first):
            yield (first,) + rest


def merge_sign(a: tuple, b: tuple) -> tuple[int, tuple]:
    """Merge two increasing odd-index tuples; sign counts transpositions.

    Returns (0, ()) when an index repeats (the square of an odd generator).
    """
    if not a:
        return 1, b
    if not b:
        return 1, a
    out = []
    sign = 1
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return 0, ()
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            # b[j] hops over the remaining entries of a
            if (len(a) - i) & 1:
                sign = -sign
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return sign, tuple(out)


class Jet:
    """Finite combination of monomials with an even-degree validity order."""

    __slots__ = ("ambient", "terms", "order")

    def __init__(self, ambient: Ambient, terms: dict | None = None,
                 order: int | None = None):
        self.ambient = ambient
        self.order = order
        if terms:
            if order is None:
                self.terms = {m: c for m, c in terms.items() if c}
            else:
                self.terms = {
                    m: c for m, c in terms.items() if c and sum(m[0]) <= order
                }
        else:
            self.terms = {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, amb: Ambient) -> "Jet":
        return cls(amb)

    @classmethod
    def const(cls, amb: Ambient, c) -> "Jet":
        return cls(amb, {((0,) * amb.n_even, ()): F(c)})

    @classmethod
    def one(cls, amb: Ambient) -> "Jet":
        return cls.const(amb, 1)

    @classmethod
    def x(cls, amb: Ambient, i: int, power: int = 1) -> "Jet":
        if not 1 <= i <= amb.n_even:
            raise ValueError(f"x{i} not in {amb!r}")
        ex = [0] * amb.n_even
        ex[i - 1] = power
        return cls(amb, {(tuple(ex), ()): F(1)})

    @classmethod
    def xi(cls, amb: Ambient, j: int) -> "Jet":
        if not 1 <= j <= amb.n_odd:
            raise ValueError(f"xi{j} not in {amb!r}")
        return cls(amb, {((0,) * amb.n_even, (j,)): F(1)})

    @classmethod
    def tau_gen(cls, amb: Ambient) -> "Jet":
        if not amb.tau:
            raise ValueError("ambient has no tau generator")
        return cls.xi(amb, amb.n_odd)

    @classmethod
    def monomial(cls, amb: Ambient, even_exps: Iterable[int],
                 odd_idx: Iterable[int], coeff=1) -> "Jet":
        ex = tuple(even_exps)
        odds = tuple(sorted(odd_idx))
        if len(ex) != amb.n_even or len(set(odds)) != len(odds):
            raise ValueError("bad monomial")
        return cls(amb, {(ex, odds): F(coeff)})

    # -- basics ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def parity(self) -> int | None:
        """0 or 1 for parity-homogeneous jets, None for mixed or zero."""
        ps = {len(m[1]) & 1 for m in self.terms}
        if len(ps) == 1:
            return ps.pop()
        return None

    def even_degree(self) -> int:
        """Largest total degree in the commuting generators (0 if zero)."""
        return max((sum(m[0]) for m in self.terms), default=0)

    def coeff(self, even_exps: Iterable[int], odd_idx: Iterable[int]) -> F:
        key = (tuple(even_exps), tuple(sorted(odd_idx)))
        return self.terms.get(key, F(0))

    def truncate(self, order: int | None) -> "Jet":
        """Forget information above the given even degree."""
        new_order = order if self.order is None else (
            self.order if order is None else min(self.order, order)
        )
        return Jet(self.ambient, dict(self.terms), new_order)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Jet)
            and self.ambient == other.ambient
            and self.terms == other.terms
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.ambient, tuple(sorted(self.terms.items())), self.order))

    def same_series(self, other: "Jet") -> bool:
        """Agreement up to the smaller validity order."""
        o = _min_order(self.order, other.order)
        return self.truncate(o).terms == other.truncate(o).terms

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Jet") -> "Jet":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, F(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Jet(self.ambient, out, _min_order(self.order, other.order))

    def __sub__(self, other: "Jet") -> "Jet":
        return self + (-other)

    def __neg__(self) -> "Jet":
        return Jet(self.ambient, {m: -c for m, c in self.terms.items()},
                   self.order)

    def scale(self, c) -> "Jet":
        c = F(c)
        if not c:
            return Jet(self.ambient, {}, self.order)
        return Jet(self.ambient, {m: c * v for m, v in self.terms.items()},
                   self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Jet):
            return NotImplemented
        out: dict = {}
        for (ex1, od1), c1 in self.terms.items():
            for (ex2, od2), c2 in other.terms.items():
                sign, odds = merge_sign(od1, od2)
                if sign == 0:
                    continue
                ex = tuple(a + b for a, b in zip(ex1, ex2))
                key = (ex, odds)
                s = out.get(key, F(0)) + sign * c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Jet(self.ambient, out, _min_order(self.order, other.order))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "Jet":
        out = Jet.one(self.ambient).truncate(self.order)
        for _ in range(k):
            out = out * self
        return out

    # -- derivatives -------------------------------------------------------

    def d_even(self, i: int) -> "Jet":
        """Partial derivative in the i-th commuting generator."""
        out = {}
        for (ex, odds), c in self.terms.items():
            e = ex[i - 1]
            if e:
                ex2 = ex[: i - 1] + (e - 1,) + ex[i:]
                out[(ex2, odds)] = c * e
        return Jet(self.ambient, out,
                   None if self.order is None else self.order - 1)

    def d_odd(self, j: int) -> "Jet":
        """Left partial derivative in the j-th anticommuting generator."""
        out = {}
        for (ex, odds), c in self.terms.items():
            if j not in odds:
                continue
            pos = odds.index(j)
            odds2 = odds[:pos] + odds[pos + 1:]
            sign = -1 if pos & 1 else 1
            out[(ex, odds2)] = sign * c
        return Jet(self.ambient, out, self.order)

    def d_tau(self) -> "Jet":
        return self.d_odd(self.ambient.n_odd)

    def antiderivative(self, i: int, constant=0) -> "Jet":
        """Inverse of d_even(i); the constant lands on the unit monomial."""
        out = {}
        for (ex, odds), c in self.terms.items():
            e = ex[i - 1]
            ex2 = ex[: i - 1] + (e + 1,) + ex[i:]
            out[(ex2, odds)] = c / (e + 1)
        constant = F(constant)
        if constant:
            unit = ((0,) * self.ambient.n_even, ())
            out[unit] = out.get(unit, F(0)) + constant
        return Jet(self.ambient, out,
                   None if self.order is None else self.order + 1)

    def euler(self, even_idx: Iterable[int] | None = None,
              odd_idx: Iterable[int] | None = None) -> "Jet":
        """Degree-counting operator over the chosen generators.

        Defaults count every commuting generator and every anticommuting one
        except a designated tau.
        """
        amb = self.ambient
        ev = set(range(1, amb.n_even + 1)) if even_idx is None else set(even_idx)
        if odd_idx is None:
            od = set(range(1, amb.n_odd + 1))
            if amb.tau:
                od.discard(amb.n_odd)
        else:
            od = set(odd_idx)
        out = {}
        for (ex, odds), c in self.terms.items():
            w = sum(e for i, e in enumerate(ex, 1) if i in ev)
            w += sum(1 for j in odds if j in od)
            if w:
                out[(ex, odds)] = c * w
        return Jet(self.ambient, out, self.order)


def _min_order(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def odd_laplacian(f: Jet) -> Jet:
    """Sum over matched pairs (x_i, xi_i) of the mixed second derivative."""
    amb = f.ambient
    pairs = min(amb.n_even, amb.n_odd - (1 if amb.tau else 0))
    out = Jet.zero(amb).truncate(
        None if f.order is None else f.order - 1
    )
    for i in range(1, pairs + 1):
        out = out + f.d_odd(i).d_even(i)
    return out


def div_beta(f: Jet, beta) -> Jet:
    """Weighted divergence on an ambient with a tau generator:
    the odd Laplacian plus (E - n*beta) applied to the tau derivative,
    where E counts all generators except tau and n is the even count."""
    amb = f.ambient
    if not amb.tau:
        raise ValueError("div_beta needs a tau generator")
    ft = f.d_tau()
    return odd_laplacian(f) + ft.euler() - ft.scale(F(beta) * amb.n_even)


def geometric_inverse(phi: Jet, order: int) -> Jet:
    """Multiplicative inverse of a jet with invertible constant term,
    computed to the requested validity order."""
    amb = phi.ambient
    unit = ((0,) * amb.n_even, ())
    c0 = phi.terms.get(unit, F(0))
    if not c0:
        raise ValueError("constant term is zero; jet is not invertible")
    u = (phi.scale(F(1) / c0) - Jet.one(amb)).truncate(order)
    inv = Jet.one(amb).truncate(order)
    power = Jet.one(amb).truncate(order)
    # u has no constant term, so powers beyond order + odd count vanish
    for k in range(1, order + amb.n_odd + 1):
        power = power * u
        if power.is_zero():
            break
        inv = inv + power.scale((-1) ** k)
    return inv.scale(F(1) / c0)


class ExprError(ValueError):
    """Raised on malformed jet expressions."""


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z]+\d*)|([+\-*^()]))")


def _tokenize(text: str) -> list[str]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ExprError(f"bad character at {text[pos:]!r}")
            break
        toks.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    return toks


def parse_jet(text: str, amb: Ambient, params: dict | None = None) -> Jet:
    """Parse sums of monomial terms: rationals, generator names x<i>, xi<j>,
    tau, p<i>, q<i> (mapping to odd/even x-slots), optional '^' powers, '*'
    or juxtaposition for products, and parentheses.  Named scalars from
    ``params`` (e.g. alpha, beta) are substituted as constants."""
    toks = _tokenize(text)
    parser = _JetParser(toks, amb, params or {})
    out = parser.expr()
    if parser.pos != len(toks):
        raise ExprError(f"unexpected token {toks[parser.pos]!r}")
    return out


class _JetParser:
    def __init__(self, toks, amb, params):
        self.toks = toks
        self.amb = amb
        self.params = params
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def expr(self) -> Jet:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.toks[self.pos] == "-" else 1
            self.pos += 1
        out = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            sign = -1 if self.toks[self.pos] == "-" else 1
            self.pos += 1
            out = out + self.term().scale(sign)
        return out

    def term(self) -> Jet:
        out = self.atom()
        while True:
            t = self.peek()
            if t == "*":
                self.pos += 1
                out = out * self.atom()
            elif t is not None and t not in ("+", "-", ")"):
                out = out * self.atom()
            else:
                return out

    def atom(self) -> Jet:
        t = self.peek()
        if t is None:
            raise ExprError("unexpected end of expression")
        self.pos += 1
        if t == "(":
            inner = self.expr()
            if self.peek() != ")":
                raise ExprError("missing ')'")
            self.pos += 1
            return self._power(inner)
        if t[0].isdigit():
            return self._power(Jet.const(self.amb, Fraction(t)))
        return self._power(self._generator(t))

    def _power(self, base: Jet) -> Jet:
        if self.peek() == "^":
            self.pos += 1
            t = self.peek()
            if t is None or not t.isdigit() or int(t) < 1:
                raise ExprError("'^' needs a positive integer")
            self.pos += 1
            return base ** int(t)
        return base

    def _generator(self, name: str) -> Jet:
        amb = self.amb
        if name in self.params:
            return Jet.const(amb, Fraction(self.params[name]))
        if name == "tau":
            if not amb.tau:
                raise ExprError("no tau generator in this ambient")
            return Jet.tau_gen(amb)
        m = re.fullmatch(r"(xi|x|p|q)(\d+)", name)
        if not m:
            raise ExprError(f"unknown name {name!r}")
        kind, idx = m.group(1), int(m.group(2))
        try:
            if kind == "xi":
                if amb.tau and idx == amb.n_odd:
                    raise ExprError("use 'tau' for the last odd generator")
                return Jet.xi(amb, idx)
            if kind == "x":
                return Jet.x(amb, idx)
            if kind == "p":
                return Jet.x(amb, 2 * idx - 1)
            return Jet.x(amb, 2 * idx)
        except ValueError as e:
            raise ExprError(str(e)) from None


def format_jet(f: Jet) -> str:
    """Deterministic display: degree-then-lex term order, exact coefficients."""
    if not f.terms:
        return "0"
    items = sorted(
        f.terms.items(), key=lambda kv: (sum(kv[0][0]) + len(kv[0][1]), kv[0])
    )
    parts = []
    for (ex, odds), c in items:
        factors = []
        for i, e in enumerate(ex, 1):
            if e == 1:
                factors.append(f"x{i}")
            elif e > 1:
                factors.append(f"x{i}^{e}")
        for j in odds:
            factors.append(f.ambient.odd_name(j))
        mag = c if c > 0 else -c
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
