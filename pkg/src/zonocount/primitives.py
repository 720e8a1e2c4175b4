"""Primitive integer vectors in the nonnegative orthant.

These index the factors of the zonotope generating function: a vector v with
d(v) nonzero coordinates carries 2^(d(v)-1) sign classes, so its factor weight
is 2^(d(v)-1).  Enumeration is streamed in lexicographic order; the Moebius
sieve count is the independent cross-check,

    #primitive <= b  =  sum_{k>=1} mu(k) (prod_i (floor(b_i/k) + 1) - 1).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class PrimVec:
    """A primitive direction in the nonnegative orthant with its class weight."""

    coords: tuple[int, ...]
    nonzero_count: int
    weight: int

    @classmethod
    def from_coords(cls, coords: Sequence[int]) -> "PrimVec":
        v = tuple(int(c) for c in coords)
        if not is_primitive(v, len(v)):
            raise ValueError(f"{v} is not a primitive nonnegative vector")
        nz = sum(1 for c in v if c)
        return cls(coords=v, nonzero_count=nz, weight=1 << (nz - 1))

    @property
    def l1(self) -> int:
        return sum(self.coords)


def _validate_vector(v: Sequence[int], dim: int) -> tuple[int, ...]:
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    vt = tuple(int(c) for c in v)
    if len(vt) != dim:
        raise ValueError(f"expected {dim} coordinates, got {len(vt)}")
    if any(c < 0 for c in vt):
        raise ValueError(f"coordinates must be >= 0, got {vt}")
    return vt


def is_primitive(v: Sequence[int], dim: int) -> bool:
    """True iff v is nonzero with coprime coordinates (gcd(0, x) = x convention)."""
    vt = _validate_vector(v, dim)
    return math.gcd(*vt) == 1


def enumerate_primitive(dim: int, bound: Sequence[int]) -> Iterator[PrimVec]:
    """Stream every primitive vector v <= bound componentwise, lex ascending.

    The order is part of the reproducibility contract for the coefficient DP
    and the sampler; consumers must not rely on materializing the sequence.
    """
    bt = _validate_vector(bound, dim)
    for v in itertools.product(*(range(b + 1) for b in bt)):
        if math.gcd(*v) == 1:
            nz = sum(1 for c in v if c)
            yield PrimVec(coords=v, nonzero_count=nz, weight=1 << (nz - 1))


def iter_primitive_l1(dim: int, l1_max: int) -> Iterator[PrimVec]:
    """Stream primitive vectors with ||v||_1 <= l1_max, lex ascending.

    Same contract as enumerate_primitive but pruned by the 1-norm; the sampler
    visits classes through this (box enumeration would be wasteful in d >= 3).
    """
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    if l1_max < 0:
        raise ValueError("l1_max must be >= 0")
    prefix = [0] * dim

    def rec(i: int, budget: int, g: int) -> Iterator[PrimVec]:
        if i == dim - 1:
            for x in range(budget + 1):
                if math.gcd(g, x) == 1:
                    prefix[i] = x
                    v = tuple(prefix)
                    nz = sum(1 for c in v if c)
                    yield PrimVec(coords=v, nonzero_count=nz, weight=1 << (nz - 1))
            return
        for x in range(budget + 1):
            prefix[i] = x
            yield from rec(i + 1, budget - x, math.gcd(g, x))

    yield from rec(0, l1_max, 0)


def _mobius_upto(n: int) -> list[int]:
    """mu(0..n) by sieve."""
    mu = [1] * (n + 1)
    if n >= 0:
        mu[0] = 0
    primes = []
    is_comp = [False] * (n + 1)
    for i in range(2, n + 1):
        if not is_comp[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > n:
                break
            is_comp[i * p] = True
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    return mu


def count_primitive_moebius(dim: int, bound: Sequence[int]) -> int:
    """Moebius-sieve count of primitive vectors <= bound (enumeration oracle)."""
    bt = _validate_vector(bound, dim)
    bmax = max(bt)
    if bmax == 0:
        return 0
    mu = _mobius_upto(bmax)
    total = 0
    for k in range(1, bmax + 1):
        if mu[k] == 0:
            continue
        box = 1
        for b in bt:
            box *= b // k + 1
        total += mu[k] * (box - 1)
    return total
