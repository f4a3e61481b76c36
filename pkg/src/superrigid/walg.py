"""Finite-dimensional superalgebras and the graded algebra of multilinear maps.

A FinSuperAlg stores exact structure constants of a supercommutative product;
anticommutative products are converted on construction to their parity-reversed
supersymmetric partners, so every stored product is supersymmetric.

MultiLinMap models k-argument supersymmetric multilinear maps on the underlying
superspace.  The box product and its commutator bracket organize these maps
into a Z-graded Lie superalgebra with the space itself in degree -1, operators
in degree 0, and supersymmetric products in degree 1.  On top of that live the
structure operators of an algebra, the orbit of its product under them,
rigidity and simplicity tests, and the graded expansion generated by degree 1.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .linalg import (
    Subspace,
    Vec,
    ZERO,
    closure_under,
    pairwise_closure,
    span_reduce,
    vec_add,
    vec_clean,
)

F = Fraction


def _sort_sign(idxs, parities):
    """Sort basis indices ascending, tracking the sign from odd-odd swaps.

    Returns (sign, sorted_tuple); sign is 0 when an odd index repeats.
    """
    sign = 1
    lst = list(idxs)
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1] > lst[j]:
            if parities[lst[j - 1]] and parities[lst[j]]:
                sign = -sign
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            j -= 1
    for a, b in zip(lst, lst[1:]):
        if a == b and parities[a]:
            return 0, tuple(lst)
    return sign, tuple(lst)


def _canonical_keys(n, arity, parities):
    for key in combinations_with_replacement(range(n), arity):
        if any(a == b and parities[a] for a, b in zip(key, key[1:])):
            continue
        yield key


def _key_parity(key, parities):
    args, out = key
    s = parities[out]
    for a in args:
        s += parities[a]
    return s % 2


def _split_by_parity(vec, parities):
    parts: dict[int, Vec] = {}
    for key, c in vec.items():
        parts.setdefault(_key_parity(key, parities), {})[key] = c
    return parts


class MultiLinMap:
    """Supersymmetric multilinear map on a finite superspace.

    Entries are stored on canonically sorted argument tuples; queries with
    permuted or repeated arguments resolve through the Koszul sign.  A map of
    arity 0 is just a vector of the space, arity 1 an operator, arity 2 a
    supersymmetric product.
    """

    __slots__ = ("arity", "parity", "parities", "entries")

    def __init__(self, arity, parity, parities, entries=None, *, check=True):
        self.arity = arity
        self.parity = parity % 2
        self.parities = tuple(parities)
        canon: dict = {}
        for key, out in (entries or {}).items():
            key = tuple(key)
            if len(key) != arity:
                raise ValueError(f"entry key {key} does not have arity {arity}")
            sign, skey = _sort_sign(key, self.parities)
            if sign == 0:
                continue
            slot = canon.setdefault(skey, {})
            for k, c in out.items():
                s = slot.get(k, F(0)) + sign * F(c)
                if s:
                    slot[k] = s
                else:
                    slot.pop(k, None)
        self.entries = {k: v for k, v in canon.items() if v}
        if check:
            for skey, out in self.entries.items():
                base = sum(self.parities[a] for a in skey)
                for k in out:
                    if (base + self.parities[k]) % 2 != self.parity:
                        raise ValueError(
                            f"entry {skey}->{k} violates parity {self.parity}"
                        )

    @classmethod
    def zero(cls, arity, parity, parities):
        return cls(arity, parity, parities, {}, check=False)

    @classmethod
    def identity(cls, parities):
        ent = {(i,): {i: F(1)} for i in range(len(parities))}
        return cls(1, 0, parities, ent, check=False)

    @classmethod
    def vector(cls, v, parities):
        """Arity-0 map holding one homogeneous vector of the space."""
        pars = {parities[i] for i in v}
        if len(pars) > 1:
            raise ValueError("mixed parity vector")
        parity = pars.pop() if pars else 0
        return cls(0, parity, parities, {(): vec_clean(dict(v))}, check=False)

    @classmethod
    def from_vec(cls, vec, arity, parities, parity=None, *, check=False):
        entries: dict = {}
        for (args, out), c in vec.items():
            entries.setdefault(tuple(args), {})[out] = c
        if parity is None:
            key = next(iter(vec), None)
            parity = _key_parity(key, parities) if key else 0
        return cls(arity, parity, parities, entries, check=check)

    def as_vec(self) -> Vec:
        out = {}
        for args, images in self.entries.items():
            for k, c in images.items():
                out[(args, k)] = c
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def __call__(self, *idxs):
        if len(idxs) != self.arity:
            raise ValueError(f"expected {self.arity} arguments, got {len(idxs)}")
        sign, key = _sort_sign(idxs, self.parities)
        if sign == 0:
            return {}
        images = self.entries.get(key)
        if not images:
            return {}
        return {k: sign * c for k, c in images.items()}

    def add(self, other: "MultiLinMap") -> "MultiLinMap":
        if self.arity != other.arity or self.parities != other.parities:
            raise ValueError("shape mismatch")
        if not self.is_zero() and not other.is_zero() and self.parity != other.parity:
            raise ValueError("parity mismatch")
        parity = other.parity if self.is_zero() else self.parity
        ent = {k: dict(v) for k, v in self.entries.items()}
        for key, out in other.entries.items():
            slot = ent.setdefault(key, {})
            for k, c in out.items():
                s = slot.get(k, F(0)) + c
                if s:
                    slot[k] = s
                else:
                    slot.pop(k, None)
        ent = {k: v for k, v in ent.items() if v}
        return MultiLinMap(self.arity, parity, self.parities, ent, check=False)

    def scale(self, c) -> "MultiLinMap":
        c = F(c)
        if c == 0:
            return MultiLinMap.zero(self.arity, self.parity, self.parities)
        ent = {key: {k: c * v for k, v in out.items()}
               for key, out in self.entries.items()}
        return MultiLinMap(self.arity, self.parity, self.parities, ent, check=False)

    def __eq__(self, other):
        return (isinstance(other, MultiLinMap)
                and self.arity == other.arity
                and self.parities == other.parities
                and self.entries == other.entries)

    def __repr__(self):
        nnz = sum(len(v) for v in self.entries.values())
        return f"MultiLinMap(arity={self.arity}, parity={self.parity}, nnz={nnz})"


def box(f: MultiLinMap, g: MultiLinMap) -> MultiLinMap:
    """Insertion product: sum over shuffles of g into the first slot of f.

    A map with a arguments sits in degree a-1; the result lives in the degree
    sum, so two degree -1 maps underflow.
    """
    p, q = f.arity - 1, g.arity - 1
    if p + q < -1:
        raise ValueError("arity underflow: both operands are plain vectors")
    arity = p + q + 1
    parity = (f.parity + g.parity) % 2
    pars = f.parities
    if pars != g.parities:
        raise ValueError("operands live over different spaces")
    if f.arity == 0:
        return MultiLinMap.zero(arity, parity, pars)
    entries: dict = {}
    n = len(pars)
    for key in _canonical_keys(n, arity, pars):
        argpars = tuple(pars[i] for i in key)
        acc: dict = {}
        for S in combinations(range(arity), g.arity):
            sgn = 1
            inS = set(S)
            for u in S:
                if argpars[u]:
                    for v in range(u):
                        if v not in inS and argpars[v]:
                            sgn = -sgn
            inner = g(*(key[i] for i in S))
            if not inner:
                continue
            rest = tuple(key[i] for i in range(arity) if i not in inS)
            for k, c in inner.items():
                for m, cm in f(k, *rest).items():
                    s = acc.get(m, F(0)) + sgn * c * cm
                    if s:
                        acc[m] = s
                    else:
                        acc.pop(m, None)
        if acc:
            entries[key] = acc
    return MultiLinMap(arity, parity, pars, entries, check=False)


def w_bracket(f: MultiLinMap, g: MultiLinMap) -> MultiLinMap:
    """Graded commutator of the insertion product."""
    sign = -1 if (f.parity and g.parity) else 1
    return box(f, g).add(box(g, f).scale(-sign))


def act(f: MultiLinMap, B: MultiLinMap) -> MultiLinMap:
    """Operator action on a supersymmetric product, as a derivation-style
    commutator: (f.B)(x,y) = f(B(x,y)) - +/-(B(f(x),y) + +/-B(x,f(y))).

    Agrees with w_bracket restricted to arity-1 by arity-2 arguments.
    """
    if f.arity != 1 or B.arity != 2:
        raise ValueError("act expects an operator and a binary product")
    pars = f.parities
    outer = -1 if (f.parity and B.parity) else 1
    entries: dict = {}
    for (i, j) in _canonical_keys(len(pars), 2, pars):
        acc: dict = {}

        def bump(vecs, coeff):
            for k, c in vecs.items():
                s = acc.get(k, F(0)) + coeff * c
                if s:
                    acc[k] = s
                else:
                    acc.pop(k, None)

        for k, c in B(i, j).items():
            bump(f(k), c)
        for k, c in f(i).items():
            bump(B(k, j), outer * -c)
        inner = -1 if (pars[i] and f.parity) else 1
        for k, c in f(j).items():
            bump(B(i, k), outer * inner * -c)
        if acc:
            entries[(i, j)] = acc
    return MultiLinMap(2, (f.parity + B.parity) % 2, pars, entries, check=False)


class FinSuperAlg:
    """Finite-dimensional superalgebra with exact structure constants.

    The stored product is always supersymmetric.  Anticommutative products
    enter through from_anticommutative, which flips every parity and the
    product parity and twists by the sign of the first factor; the flag
    anticommutative_presentation records that the user-facing product is the
    anticommutative original.
    """

    __slots__ = ("parities", "product_parity", "table", "labels",
                 "anticommutative_presentation")

    def __init__(self, parities, product_parity, table, labels=None, *,
                 anticommutative_presentation=False):
        self.parities = tuple(int(p) % 2 for p in parities)
        self.product_parity = int(product_parity) % 2
        self.labels = tuple(labels) if labels else None
        if self.labels and len(self.labels) != len(self.parities):
            raise ValueError("labels do not match dimension")
        self.anticommutative_presentation = bool(anticommutative_presentation)
        n = len(self.parities)
        canon: dict = {}
        for (i, j), out in table.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"basis index out of range in ({i},{j})")
            out = {k: F(c) for k, c in out.items() if c}
            if not out:
                continue
            if i > j:
                sign = -1 if (self.parities[i] and self.parities[j]) else 1
                i, j = j, i
                out = {k: sign * c for k, c in out.items()}
            if (i, j) in canon:
                if canon[(i, j)] != out:
                    raise ValueError(
                        f"product of basis vectors {i},{j} given twice with "
                        "values that break supersymmetry")
            else:
                canon[(i, j)] = out
        for (i, j), out in canon.items():
            if i == j and self.parities[i]:
                raise ValueError(
                    f"odd basis vector {i} cannot have a nonzero square in a "
                    "supersymmetric product")
            want = (self.parities[i] + self.parities[j]
                    + self.product_parity) % 2
            for k in out:
                if self.parities[k] != want:
                    raise ValueError(
                        f"product of {i},{j} hits {k} of the wrong parity")
        self.table = canon

    @classmethod
    def from_anticommutative(cls, parities, product_parity, table, labels=None):
        """Store an anticommutative product via its parity-reversed partner."""
        parities = tuple(int(p) % 2 for p in parities)
        product_parity = int(product_parity) % 2
        n = len(parities)
        full: dict = {}
        for (i, j), out in table.items():
            out = {k: F(c) for k, c in out.items() if c}
            if (i, j) in full and full[(i, j)] != out:
                raise ValueError(f"product of {i},{j} given twice")
            full[(i, j)] = out
        for (i, j), out in list(full.items()):
            sign = -1 if (parities[i] and parities[j]) else 1
            mirror = {k: -sign * c for k, c in out.items()}
            if (j, i) in full and full[(j, i)] != mirror:
                raise ValueError(
                    f"products of {i},{j} and {j},{i} break anticommutativity")
            if i == j and not parities[i] and out:
                raise ValueError(
                    f"even basis vector {i} cannot have a nonzero square in "
                    "an anticommutative product")
            want = (parities[i] + parities[j] + product_parity) % 2
            for k in out:
                if parities[k] != want:
                    raise ValueError(
                        f"product of {i},{j} hits {k} of the wrong parity")
        partner: dict = {}
        for (i, j) in full:
            a, b = (i, j) if i <= j else (j, i)
            if (a, b) in partner:
                continue
            out = full.get((a, b))
            if out is None:
                sign = -1 if (parities[a] and parities[b]) else 1
                out = {k: -sign * c for k, c in full[(b, a)].items()}
            if not out:
                continue
            tw = -1 if parities[a] else 1
            partner[(a, b)] = {k: tw * c for k, c in out.items()}
        return cls(tuple(1 - p for p in parities), 1 - product_parity, partner,
                   labels, anticommutative_presentation=True)

    @property
    def dim(self) -> int:
        return len(self.parities)

    @property
    def presented_parities(self):
        if self.anticommutative_presentation:
            return tuple(1 - p for p in self.parities)
        return self.parities

    @property
    def presented_product_parity(self):
        if self.anticommutative_presentation:
            return 1 - self.product_parity
        return self.product_parity

    def product(self, i, j) -> Vec:
        if i > j:
            sign = -1 if (self.parities[i] and self.parities[j]) else 1
            out = self.table.get((j, i))
            return {k: sign * c for k, c in out.items()} if out else {}
        out = self.table.get((i, j))
        return dict(out) if out else {}

    def mult_vec(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.product(i, j).items():
                    s = out.get(k, F(0)) + a * b * c
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def mu_map(self) -> MultiLinMap:
        ent = {key: dict(out) for key, out in self.table.items()}
        return MultiLinMap(2, self.product_parity, self.parities, ent,
                           check=False)

    def __eq__(self, other):
        return (isinstance(other, FinSuperAlg)
                and self.parities == other.parities
                and self.product_parity == other.product_parity
                and self.table == other.table
                and self.anticommutative_presentation
                == other.anticommutative_presentation)

    def __repr__(self):
        n_odd = sum(self.parities)
        return (f"FinSuperAlg(dim={self.dim - n_odd}|{n_odd}, "
                f"product_parity={self.product_parity})")


def parity_reverse(J: FinSuperAlg) -> FinSuperAlg:
    """Flip all parities and the product parity, twisting by the sign of the
    first factor.

    On a stored supersymmetric product this lands on an anticommutative one,
    which is put straight back into partner storage with the flag set; on an
    anticommutative presentation it uncovers the stored partner itself.
    Applying it twice returns the start up to a global sign.
    """
    if J.anticommutative_presentation:
        return FinSuperAlg(J.parities, J.product_parity, J.table, J.labels)
    negated = {key: {k: -c for k, c in out.items()}
               for key, out in J.table.items()}
    return FinSuperAlg(J.parities, J.product_parity, negated, J.labels,
                       anticommutative_presentation=True)


def left_mult_op(J: FinSuperAlg, a) -> MultiLinMap:
    """Operator of left multiplication by a basis index or homogeneous vector."""
    if isinstance(a, int):
        a = {a: F(1)}
    pars = {J.parities[i] for i in a}
    if len(pars) > 1:
        raise ValueError("mixed parity multiplier")
    parity = (J.product_parity + pars.pop()) % 2 if pars else J.product_parity
    entries: dict = {}
    for j in range(J.dim):
        img: Vec = {}
        for i, c in a.items():
            img = vec_add(img, J.product(i, j), c)
        if img:
            entries[(j,)] = img
    return MultiLinMap(1, parity, J.parities, entries, check=False)


def _w_bracket_vec(u: Vec, v: Vec, arity, parities) -> Vec:
    """Bracket of two flattened maps of equal arity, split by parity."""
    acc: Vec = {}
    for pu, cu in _split_by_parity(u, parities).items():
        fu = MultiLinMap.from_vec(cu, arity, parities, pu)
        for pv, cv in _split_by_parity(v, parities).items():
            fv = MultiLinMap.from_vec(cv, arity, parities, pv)
            acc = vec_add(acc, w_bracket(fu, fv).as_vec())
    return acc


def _homogeneous_maps(space: Subspace, arity, parities):
    maps = []
    for row in space.rows:
        for p, comp in _split_by_parity(row, parities).items():
            maps.append(MultiLinMap.from_vec(comp, arity, parities, p))
    return maps


def str_algebra(J: FinSuperAlg) -> Subspace:
    """Smallest bracket-closed operator space containing every left
    multiplication."""
    seed = span_reduce([left_mult_op(J, i).as_vec() for i in range(J.dim)])
    pars = J.parities
    return pairwise_closure(seed, lambda u, v: _w_bracket_vec(u, v, 1, pars))


def related_products(J: FinSuperAlg, str_space: Subspace | None = None) -> Subspace:
    """Smallest act-invariant space of supersymmetric products containing the
    structure product."""
    S = str_algebra(J) if str_space is None else str_space
    mu_vec = J.mu_map().as_vec()
    if not mu_vec:
        return ZERO
    pars = J.parities

    def apply(u, v):
        ku = next(iter(u), None)
        kv = next(iter(v), None)
        if ku is None or kv is None or len(ku[0]) != 1 or len(kv[0]) != 2:
            return {}
        acc: Vec = {}
        for pu, cu in _split_by_parity(u, pars).items():
            f = MultiLinMap.from_vec(cu, 1, pars, pu)
            for pv, cv in _split_by_parity(v, pars).items():
                B = MultiLinMap.from_vec(cv, 2, pars, pv)
                acc = vec_add(acc, act(f, B).as_vec())
        return acc

    return closure_under(span_reduce([mu_vec]), [apply], S)


@dataclass
class RigidityReport:
    rigid: bool
    degenerate: bool
    dim_str: int
    dim_r: int
    witness: MultiLinMap | None
    str_space: Subspace
    r_space: Subspace


def is_rigid(J: FinSuperAlg) -> RigidityReport:
    """Whether every related product already lies in the one-step orbit of the
    structure product (its act-image plus its scalar line)."""
    S = str_algebra(J)
    mu = J.mu_map()
    mu_vec = mu.as_vec()
    if not mu_vec:
        return RigidityReport(True, True, S.dim, 0, None, S, ZERO)
    R = related_products(J, S)
    first = [mu_vec]
    for f in _homogeneous_maps(S, 1, J.parities):
        first.append(act(f, mu).as_vec())
    one_step = span_reduce(first)
    if one_step == R:
        return RigidityReport(True, False, S.dim, R.dim, None, S, R)
    witness = None
    for row in R.rows:
        red = one_step.reduce(row)
        if red:
            witness = MultiLinMap.from_vec(red, 2, J.parities)
            break
    return RigidityReport(False, False, S.dim, R.dim, witness, S, R)


@dataclass
class SimplicityReport:
    simple: bool
    witness: Subspace | None


def is_simple(J: FinSuperAlg, probes: int = 3) -> SimplicityReport:
    """Whether no proper nonzero subspace absorbs multiplication.

    Checks the multiplicative closure of every basis vector and of a few
    deterministic pseudo-random vectors; any proper closure is returned as a
    witness.  A zero product is never simple.
    """
    n = J.dim
    if n == 0:
        return SimplicityReport(False, None)
    if not J.table:
        witness = span_reduce([{0: F(1)}]) if n > 1 else None
        return SimplicityReport(False, witness)
    full = span_reduce([{i: F(1)} for i in range(n)])
    rng = random.Random(11)
    candidates = [{i: F(1)} for i in range(n)]
    for _ in range(probes):
        v = {i: F(rng.randint(-2, 2)) for i in range(n)}
        v = vec_clean(v)
        if v:
            candidates.append(v)
    for v in candidates:
        closed = closure_under(span_reduce([v]), [J.mult_vec], full)
        if closed.dim < n:
            return SimplicityReport(False, closed)
    return SimplicityReport(True, None)


@dataclass
class GradedLie:
    """Graded expansion of an algebra: components indexed by degree."""
    J: FinSuperAlg
    components: dict[int, Subspace] = field(default_factory=dict)
    depth_cap: int = 6
    terminated: bool = False

    @property
    def dims(self) -> dict[int, int]:
        return {k: self.components[k].dim for k in sorted(self.components)}


def tkk(J: FinSuperAlg, depth_cap: int = 6) -> GradedLie:
    """Graded Lie superalgebra generated by an algebra's product.

    Degree -1 is the space itself, degree 0 its structure operators, degree 1
    the related products, and each further degree the bracket of degree 1 with
    the previous one, up to depth_cap.  Reports whether the chain hit zero.
    """
    if depth_cap < 1:
        raise ValueError("depth_cap must be at least 1")
    pars = J.parities
    S = str_algebra(J)
    R = related_products(J, S)
    comps = {-1: span_reduce([{i: F(1)} for i in range(J.dim)]), 0: S, 1: R}
    terminated = R.dim == 0
    g1_maps = _homogeneous_maps(R, 2, pars)
    prev = g1_maps
    for k in range(1, depth_cap):
        if terminated:
            break
        vecs = [w_bracket(u, v).as_vec() for u in g1_maps for v in prev]
        nxt = span_reduce(vecs)
        comps[k + 1] = nxt
        if nxt.dim == 0:
            terminated = True
        else:
            prev = _homogeneous_maps(nxt, k + 2, pars)
    return GradedLie(J, comps, depth_cap, terminated)


@dataclass
class AdmissibleFindimReport:
    degree_one_spanned: bool
    degree_zero_generated: bool
    chain_consistent: bool

    @property
    def admissible(self) -> bool:
        return (self.degree_one_spanned and self.degree_zero_generated
                and self.chain_consistent)


def check_admissible_findim(G: GradedLie) -> AdmissibleFindimReport:
    """Check the three graded conditions on a graded expansion:

    degree 1 spanned by the operator action on the product plus its line,
    degree 0 generated by brackets of the space with the product, and every
    higher component equal to the span of all bracket splittings of lower
    positive degrees.
    """
    J = G.J
    pars = J.parities
    mu = J.mu_map()
    mu_vec = mu.as_vec()
    g0 = G.components[0]
    g1 = G.components[1]

    if mu_vec:
        first = [mu_vec]
        for f in _homogeneous_maps(g0, 1, pars):
            first.append(act(f, mu).as_vec())
        degree_one_spanned = span_reduce(first) == g1
    else:
        degree_one_spanned = g1.dim == 0

    if mu_vec:
        seeds = []
        for i in range(J.dim):
            e = MultiLinMap.vector({i: F(1)}, pars)
            seeds.append(w_bracket(e, mu).as_vec())
        closure = pairwise_closure(
            span_reduce(seeds), lambda u, v: _w_bracket_vec(u, v, 1, pars))
        degree_zero_generated = closure == g0
    else:
        degree_zero_generated = False

    chain_consistent = True
    maps_by_deg = {
        k: _homogeneous_maps(G.components[k], k + 1, pars)
        for k in G.components if k >= 1
    }
    for k in sorted(G.components):
        if k < 2:
            continue
        vecs = []
        for i in range(1, k):
            j = k - i
            if i not in maps_by_deg or j not in maps_by_deg:
                continue
            for u in maps_by_deg[i]:
                for v in maps_by_deg[j]:
                    vecs.append(w_bracket(u, v).as_vec())
        if span_reduce(vecs) != G.components[k]:
            chain_consistent = False
    return AdmissibleFindimReport(degree_one_spanned, degree_zero_generated,
                                  chain_consistent)


def direct_sum(J1: FinSuperAlg, J2: FinSuperAlg) -> FinSuperAlg:
    if J1.product_parity != J2.product_parity:
        raise ValueError("product parities differ")
    if J1.anticommutative_presentation != J2.anticommutative_presentation:
        raise ValueError("presentation flags differ")
    n1 = J1.dim
    table = {key: dict(out) for key, out in J1.table.items()}
    for (i, j), out in J2.table.items():
        table[(i + n1, j + n1)] = {k + n1: c for k, c in out.items()}
    labels = None
    if J1.labels and J2.labels:
        labels = tuple(f"{s}'" for s in J1.labels) \
            + tuple(f"{s}''" for s in J2.labels)
    return FinSuperAlg(
        J1.parities + J2.parities, J1.product_parity, table, labels,
        anticommutative_presentation=J1.anticommutative_presentation)


def format_element(J: FinSuperAlg, v: Vec) -> str:
    if not v:
        return "0"
    names = J.labels or tuple(f"e{i}" for i in range(J.dim))
    parts = []
    for i in sorted(v):
        c = v[i]
        mag = abs(c)
        body = names[i] if mag == 1 else f"{mag}*{names[i]}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
