"""Shared randomized-construction helpers for the test suite."""
from __future__ import annotations

import random
from fractions import Fraction as F

from superrigid.fields import VectorField
from superrigid.jets import Ambient, Jet


def random_jet(
    amb: Ambient,
    rng: random.Random,
    max_even_deg: int = 2,
    parity: int | None = None,
    n_terms: int = 3,
) -> Jet:
    """Small random jet with coefficients in {-3..3}; optionally homogeneous
    of the requested parity."""
    monos = [
        m
        for m in amb.monomials(max_even_deg)
        if parity is None or len(m[1]) & 1 == parity
    ]
    out = Jet.zero(amb)
    for _ in range(n_terms):
        m = rng.choice(monos)
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        out = out + Jet(amb, {m: F(c)})
    return out


def random_field(
    amb: Ambient,
    rng: random.Random,
    max_even_deg: int = 2,
    parity: int | None = None,
    n_terms: int = 3,
) -> VectorField:
    """Random field; when parity is given, every term matches that total
    parity (coefficient plus slot)."""
    slots = [("x", i) for i in range(1, amb.n_even + 1)] + [
        ("xi", j) for j in range(1, amb.n_odd + 1)
    ]
    out = VectorField.zero(amb)
    for _ in range(n_terms):
        slot = rng.choice(slots)
        pslot = 0 if slot[0] == "x" else 1
        want = None if parity is None else parity ^ pslot
        c = random_jet(amb, rng, max_even_deg, want, n_terms=1)
        out = out + VectorField(amb, {slot: c})
    return out
