"""Multiplicative t-orbits in Z_n.

An orbit is the cycle a, t*a, t^2*a, ... (mod n); gcd(t, n) = 1 so
multiplication by t permutes Z_n. Orbit lengths drive the classification
machinery: which orbit length partitions are feasible at a given order,
and which orders admit them at all.

Two facts carry most of the weight here:

  * the elements whose orbit length divides i are exactly the solutions
    of (t^i - 1)*a = 0 (mod n), i.e. the multiples of n/gcd(n, t^i - 1);
  * consequently the number of length-i orbits in Z_n depends on n only
    through gcd(n, t^i - 1), and is maximal at n = t^i - 1 itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd


def units(n: int) -> list[int]:
    """Residues coprime to n, ascending. For n = 1 this is [0]."""
    return [u for u in range(n) if gcd(u, n) == 1]


def divisors(m: int) -> list[int]:
    """Positive divisors of m, ascending."""
    if m < 1:
        raise ValueError(f"need a positive integer, got {m}")
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class ModulusContext:
    """Ambient modulus n with multiplier base t, stored reduced mod n."""

    n: int
    t: int = 2

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")
        t = self.t % self.n
        if gcd(t, self.n) != 1:
            raise ValueError(f"t={self.t} is not a unit mod {self.n}")
        object.__setattr__(self, "t", t)


@dataclass(frozen=True)
class Orbit:
    """A t-orbit, elements listed once around the cycle starting from the
    smallest one (the canonical generator)."""

    elements: tuple[int, ...]

    @property
    def generator(self) -> int:
        return self.elements[0]

    @property
    def length(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements


def orbit_of(a: int, ctx: ModulusContext) -> Orbit:
    """The t-orbit through a."""
    if not 0 <= a < ctx.n:
        raise ValueError(f"residue {a} out of range for modulus {ctx.n}")
    cycle = [a]
    x = a * ctx.t % ctx.n
    while x != a:
        cycle.append(x)
        x = x * ctx.t % ctx.n
    i = cycle.index(min(cycle))
    return Orbit(tuple(cycle[i:] + cycle[:i]))


def orbit_length(a: int, ctx: ModulusContext) -> int:
    """ol(a): the length of the t-orbit through a."""
    if not 0 <= a < ctx.n:
        raise ValueError(f"residue {a} out of range for modulus {ctx.n}")
    length = 1
    x = a * ctx.t % ctx.n
    while x != a:
        length += 1
        x = x * ctx.t % ctx.n
    return length


def length_table(ctx: ModulusContext) -> list[int]:
    """ol(a) for every a in Z_n, computed in one sweep over the orbits."""
    table = [0] * ctx.n
    for a in range(ctx.n):
        if table[a]:
            continue
        cycle = [a]
        x = a * ctx.t % ctx.n
        while x != a:
            cycle.append(x)
            x = x * ctx.t % ctx.n
        for y in cycle:
            table[y] = len(cycle)
    return table


def all_orbits(ctx: ModulusContext) -> list[Orbit]:
    """Every t-orbit of Z_n, sorted by canonical generator."""
    seen = [False] * ctx.n
    out = []
    for a in range(ctx.n):
        if seen[a]:
            continue
        orb = orbit_of(a, ctx)
        for y in orb.elements:
            seen[y] = True
        out.append(orb)
    return out


def orbits_of_length(ctx: ModulusContext, i: int) -> list[Orbit]:
    """All orbits of length exactly i, sorted by canonical generator.

    Candidates are the multiples of n/gcd(n, t^i - 1) (orbit length
    divides i); the ones with a properly dividing length are dropped.
    """
    if i < 1:
        raise ValueError(f"orbit length must be positive, got {i}")
    g = gcd(ctx.n, (pow(ctx.t, i, ctx.n) - 1) % ctx.n)
    step = ctx.n // g
    out = []
    seen: set[int] = set()
    for a in range(0, ctx.n, step):
        if a in seen:
            continue
        orb = orbit_of(a, ctx)
        seen.update(orb.elements)
        if orb.length == i:
            out.append(orb)
    out.sort(key=lambda o: o.generator)
    return out


@lru_cache(maxsize=None)
def orbit_count_cap(i: int, t: int) -> int:
    """n-independent upper bound on the number of length-i orbits in Z_n.

    The count in Z_n equals the count in Z_{gcd(n, t^i - 1)}, which is
    monotone along the divisor lattice of t^i - 1, so the bound is the
    count in Z_{t^i - 1} itself (and it is attained there).
    """
    if i < 1:
        raise ValueError(f"orbit length must be positive, got {i}")
    if t < 2:
        raise ValueError(f"multiplier base must be at least 2, got {t}")
    return len(orbits_of_length(ModulusContext(t**i - 1, t), i))


def required_divisors(i: int, t: int, orbits_needed: int = 1) -> list[int]:
    """Minimal d such that d | n guarantees >= orbits_needed orbits of length i.

    Scans the divisors of t^i - 1 (the only part of n the count can see)
    and keeps the divisibility-minimal ones with a large enough count.
    """
    cap = orbit_count_cap(i, t)
    if not 1 <= orbits_needed <= cap:
        raise ValueError(
            f"cannot require {orbits_needed} orbits of length {i}: "
            f"at most {cap} exist for t={t}"
        )
    m = t**i - 1
    hits = [
        d
        for d in divisors(m)
        if len(orbits_of_length(ModulusContext(d, t), i)) >= orbits_needed
    ]
    return sorted(d for d in hits if not any(e != d and d % e == 0 for e in hits))
