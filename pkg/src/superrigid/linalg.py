"""Exact rational linear algebra over sparse vectors with orderable keys.

Vectors are dicts mapping hashable, totally ordered coordinate keys to nonzero
Fractions.  A Subspace is a canonical reduced-echelon basis of such vectors:
each basis row has a pivot (its smallest key), pivot coefficient 1, and no row
contains another row's pivot.  Equal spans produce identical Subspace values,
so subspaces compare by ==.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence

Vec = dict
Key = Hashable


def vec_clean(v: Vec) -> Vec:
    return {k: c for k, c in v.items() if c != 0}


def vec_add(u: Vec, v: Vec, scale: Fraction = Fraction(1)) -> Vec:
    """u + scale*v as a new clean vector."""
    out = dict(u)
    for k, c in v.items():
        s = out.get(k, Fraction(0)) + scale * c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vec_scale(v: Vec, scale: Fraction) -> Vec:
    if scale == 0:
        return {}
    return {k: scale * c for k, c in v.items()}


class Subspace:
    """Canonical span of sparse vectors; immutable once built."""

    __slots__ = ("rows", "pivots")

    def __init__(self, rows: Sequence[Vec], pivots: Sequence[Key]):
        self.rows = tuple(rows)
        self.pivots = tuple(pivots)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(sorted(r.items())) for r in self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim})"

    def reduce(self, v: Vec) -> Vec:
        """Remainder of v after elimination against the basis."""
        v = vec_clean(v)
        for row, piv in zip(self.rows, self.pivots):
            c = v.get(piv)
            if c:
                v = vec_add(v, row, -c)
        return v

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def contains_all(self, vecs: Iterable[Vec]) -> bool:
        return all(self.contains(v) for v in vecs)

    def basis(self) -> list[Vec]:
        return [dict(r) for r in self.rows]

    def extended(self, vectors: Iterable[Vec]) -> "Subspace":
        """Canonical span of self plus the given vectors."""
        return span_reduce(list(self.rows) + list(vectors))


def span_reduce(vectors: Iterable[Vec]) -> Subspace:
    """Canonical reduced-echelon Subspace spanning the given vectors.

    Pivot of a row is its smallest key; rows are sorted by pivot; every pivot
    column is cleared in all other rows and normalized to 1.
    """
    rows: list[Vec] = []
    pivots: list[Key] = []
    for v in vectors:
        v = vec_clean(v)
        for row, piv in zip(rows, pivots):
            c = v.get(piv)
            if c:
                v = vec_add(v, row, -c)
        if not v:
            continue
        piv = min(v)
        c = v[piv]
        v = vec_scale(v, Fraction(1) / c)
        # clear the new pivot from existing rows
        for i, row in enumerate(rows):
            c2 = row.get(piv)
            if c2:
                rows[i] = vec_add(row, v, -c2)
        rows.append(v)
        pivots.append(piv)
    order = sorted(range(len(rows)), key=lambda i: _key_rank(pivots[i]))
    return Subspace([rows[i] for i in order], [pivots[i] for i in order])


def _key_rank(k):
    # Keys within one ambient share a type, so plain ordering works; this
    # wrapper exists only to keep the sort total if ints and tuples mix.
    return (0, k) if isinstance(k, tuple) else (1, (k,))


ZERO = span_reduce([])


def closure_under(
    seed: Subspace,
    maps: Sequence[Callable[[Vec, Vec], Vec]],
    partners: Subspace,
    max_rounds: int | None = None,
) -> Subspace:
    """Smallest subspace containing seed and closed under each bilinear map
    applied with any partner element (map(partner, v) and map(v, partner)).

    Terminates because the dimension strictly increases each round.
    """
    current = seed
    frontier = list(seed.rows)
    rounds = 0
    while frontier:
        rounds += 1
        if max_rounds is not None and rounds > max_rounds:
            break
        new_vecs = []
        for v in frontier:
            for m in maps:
                for p in partners.rows:
                    for cand in (m(p, v), m(v, p)):
                        r = current.reduce(cand)
                        if r:
                            new_vecs.append(cand)
                            current = current.extended([cand])
        frontier = new_vecs
    return current


def pairwise_closure(
    seed: Subspace,
    bracket: Callable[[Vec, Vec], Vec],
    max_rounds: int | None = None,
) -> Subspace:
    """Smallest subspace containing seed closed under bracket(a, b) for all
    pairs a, b drawn from it (Lie-subalgebra closure)."""
    current = seed
    frontier = list(seed.rows)
    rounds = 0
    while frontier:
        rounds += 1
        if max_rounds is not None and rounds > max_rounds:
            break
        new_vecs = []
        for v in frontier:
            for w in current.rows:
                for cand in (bracket(v, w), bracket(w, v)):
                    r = current.reduce(cand)
                    if r:
                        new_vecs.append(cand)
                        current = current.extended([cand])
        frontier = new_vecs
    return current


def nullspace(
    domain_basis: Sequence[Key],
    operator: Callable[[Key], Vec],
) -> list[Vec]:
    """Basis of the kernel of a linear operator given by its action on basis
    keys.  Returns coordinate vectors over the domain keys."""
    cols = [vec_clean(operator(k)) for k in domain_basis]
    # Gaussian elimination on the transpose: track domain combinations.
    combos = [{k: Fraction(1)} for k in domain_basis]
    images = list(cols)
    pivots: dict[Key, int] = {}
    kernel: list[Vec] = []
    for i in range(len(images)):
        img = images[i]
        for piv, j in pivots.items():
            c = img.get(piv)
            if c:
                img = vec_add(img, images[j], -c)
                combos[i] = vec_add(combos[i], combos[j], -c)
        if img:
            piv = min(img)
            c = img[piv]
            img = vec_scale(img, Fraction(1) / c)
            combos[i] = vec_scale(combos[i], Fraction(1) / c)
            images[i] = img
            pivots[piv] = i
        else:
            images[i] = img
            kernel.append(combos[i])
    return kernel
