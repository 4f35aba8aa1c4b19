"""Orbit-length-partition enumeration and pruning.

A normalized weighing row of square weight s^2 whose describing sets are
unions of t-orbits induces a pair of orbit length partitions
(olp(P), olp(N)) with |P| = s(s+1)/2 and |N| = s(s-1)/2. This module
enumerates the partition pairs compatible with the orbit-count caps and
prunes them with a single divisibility calculus:

  diff_length_candidates(k, l) = { m > 1 : m | lcm(k,l),
                                   k | lcm(l,m), l | lcm(m,k) }

is a sound superset of the possible orbit lengths of a difference a - b
with ol(a) = k, ol(b) = l; the test suite checks it collapses to the
expected exact sets in the coprime and shared-prime-factor cases.
Pruning then runs at two levels:

  existence  a cross pair (k in olp(P), l in olp(N)) forces difference
             lengths that no same-side pair can produce;
  counting   for some length, the number of differences forced onto it
             on one side strictly exceeds the number the other side can
             possibly place there.

Counting uses per-contribution sizes k(k-1) (within one orbit) and 2kl
(between two orbits), a lower bound only for contributions whose
candidate set is a singleton, plus one t=2 special: an orbit of length
k >= 2 always contains the differences +-t^i(t*a - a) = +-t^i*a, which
lie in the orbit itself, so at least min(2k, k(k-1)) differences of
length exactly k are forced.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt, lcm

from .orbits import ModulusContext, divisors, orbit_count_cap, orbit_of


@dataclass(frozen=True)
class Olp:
    """Orbit length partition: a multiset of positive part lengths."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(int(p) for p in self.parts))
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_string(cls, text: str) -> "Olp":
        """Parse space-separated 'length^multiplicity' tokens, e.g. '1^1 5^1'."""
        parts: list[int] = []
        for token in text.split():
            length_s, sep, mult_s = token.partition("^")
            try:
                length = int(length_s)
                mult = int(mult_s) if mult_s else 1
            except ValueError:
                raise ValueError(f"bad olp token {token!r}") from None
            if length < 1 or mult < 1 or (sep and not mult_s):
                raise ValueError(f"bad olp token {token!r}")
            parts.extend([length] * mult)
        return cls(tuple(parts))

    def __str__(self) -> str:
        mults = self.multiplicities
        return " ".join(f"{length}^{mults[length]}" for length in sorted(mults))

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))


@dataclass(frozen=True)
class OlpPair:
    """(olp(P), olp(N)); p sums to |P|, n sums to |N|."""

    p: Olp
    n: Olp

    def __str__(self) -> str:
        return f"({self.p}, {self.n})"


def olp_of_set(X, ctx: ModulusContext) -> Olp:
    """Orbit length partition of a union of t-orbits.

    Rejects sets that are not unions of orbits; the partition would be
    meaningless for them.
    """
    remaining = set(x % ctx.n for x in X)
    parts = []
    while remaining:
        orb = orbit_of(min(remaining), ctx)
        if not remaining.issuperset(orb.elements):
            raise ValueError("set is not a union of t-orbits")
        remaining.difference_update(orb.elements)
        parts.append(orb.length)
    return Olp(tuple(parts))


def enumerate_partitions(total: int, max_part: int | None = None) -> list[Olp]:
    """All partitions of total with parts <= max_part.

    Deterministic order: ascending largest part, then recursively the
    same order on the remainder. total = 0 gives the empty partition.
    """
    if total < 0:
        raise ValueError(f"total must be nonnegative, got {total}")
    if max_part is None:
        max_part = total

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for m in range(1, min(remaining, cap) + 1):
            for rest in rec(remaining - m, m):
                yield rest + (m,)

    return [Olp(parts) for parts in rec(total, max_part)]


def cap_feasible(pair: OlpPair, t: int = 2) -> bool:
    """Whether the combined partition respects every orbit-count cap."""
    combined = Counter(pair.p.parts) + Counter(pair.n.parts)
    return all(mult <= orbit_count_cap(i, t) for i, mult in combined.items())


def describing_set_sizes(weight: int) -> tuple[int, int]:
    """(|P|, |N|) for a normalized weighing row of the given square weight."""
    s = isqrt(weight)
    if s * s != weight:
        raise ValueError(
            f"weight {weight} is not a perfect square; odd-order circulant "
            "weighing matrices only exist for square weights"
        )
    return s * (s + 1) // 2, s * (s - 1) // 2


def feasible_partitions(size: int, t: int = 2) -> list[Olp]:
    """Partitions of size whose own multiplicities fit the orbit caps."""
    return [
        olp
        for olp in enumerate_partitions(size)
        if all(m <= orbit_count_cap(i, t) for i, m in olp.multiplicities.items())
    ]


def cross_pairs(weight: int, t: int = 2) -> list[OlpPair]:
    """All (olp(P), olp(N)) combinations of individually feasible partitions.

    Outer loop over olp(N), inner over olp(P), both in enumeration
    order; weight 16, t = 2 gives 5 x 13 = 65 pairs.
    """
    p_size, n_size = describing_set_sizes(weight)
    return [
        OlpPair(olp_p, olp_n)
        for olp_n in feasible_partitions(n_size, t)
        for olp_p in feasible_partitions(p_size, t)
    ]


def feasible_pairs(weight: int, t: int = 2) -> list[OlpPair]:
    """Cross pairs whose combined multiplicities also fit the caps.

    For weight 16 and t = 2 this leaves 41 pairs, in the conventional
    numbering (same order as cross_pairs).
    """
    return [pair for pair in cross_pairs(weight, t) if cap_feasible(pair, t)]


@lru_cache(maxsize=None)
def diff_length_candidates(k: int, l: int) -> frozenset[int]:
    """Possible values of ol(a - b) for distinct a, b with ol(a)=k, ol(b)=l.

    Difference length 1 would force a = b, hence the m > 1 cut.
    """
    if k < 1 or l < 1:
        raise ValueError(f"orbit lengths must be positive, got ({k}, {l})")
    L = lcm(k, l)
    return frozenset(
        m
        for m in divisors(L)
        if m > 1 and lcm(l, m) % k == 0 and lcm(m, k) % l == 0
    )


def _side_contributions(olp: Olp) -> list[tuple[int, int, int, bool]]:
    """(k, l, size, intra) per difference contribution of one describing set.

    One orbit of length k >= 2 contributes k(k-1) ordered differences
    (intra); two distinct orbits of lengths k, l on the same side
    contribute 2kl.
    """
    parts = olp.parts
    out = []
    for k in parts:
        if k >= 2:
            out.append((k, k, k * (k - 1), True))
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            k, l = parts[i], parts[j]
            out.append((min(k, l), max(k, l), 2 * k * l, False))
    return out


def _cross_contributions(pair: OlpPair) -> list[tuple[int, int, int, bool]]:
    """(k, l, 2kl) per (P part, N part) pair on the delta_bar side."""
    return [(k, l, 2 * k * l, False) for k in pair.p.parts for l in pair.n.parts]


def pol_delta(olp: Olp) -> frozenset[int]:
    """Possible orbit lengths of differences within one describing set."""
    out: set[int] = set()
    for k, l, _, _ in _side_contributions(olp):
        out |= diff_length_candidates(k, l)
    return frozenset(out)


def pol_delta_bar(pair: OlpPair) -> frozenset[int]:
    """Possible orbit lengths of differences across the two describing sets."""
    out: set[int] = set()
    for k, l, _, _ in _cross_contributions(pair):
        out |= diff_length_candidates(k, l)
    return frozenset(out)


@dataclass(frozen=True)
class LengthCountBounds:
    """Per-length (min, max) difference counts for both sides of the
    multiset equation: delta = within-side differences, delta_bar =
    cross differences."""

    delta: tuple[tuple[int, int, int], ...]      # (length, min, max)
    delta_bar: tuple[tuple[int, int, int], ...]

    def _lookup(self, table, length):
        for ell, lo, hi in table:
            if ell == length:
                return lo, hi
        return 0, 0

    def delta_bounds(self, length: int) -> tuple[int, int]:
        return self._lookup(self.delta, length)

    def delta_bar_bounds(self, length: int) -> tuple[int, int]:
        return self._lookup(self.delta_bar, length)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(sorted({ell for ell, _, _ in self.delta}
                            | {ell for ell, _, _ in self.delta_bar}))


def _bounds_table(contributions, lengths, intra_floor: bool):
    table = []
    for ell in lengths:
        lo = hi = 0
        for k, l, size, intra in contributions:
            cand = diff_length_candidates(k, l)
            if ell in cand:
                hi += size
            forced = size if cand == frozenset({ell}) else 0
            floor = 0
            if intra_floor and intra and ell == k:
                # +-t^i(t*a - a) = +-t^i*a stays in the orbit (t = 2 only)
                floor = min(2 * k, size)
            lo += max(forced, floor)
        if lo or hi:
            table.append((ell, lo, hi))
    return tuple(table)


def length_count_bounds(pair: OlpPair, t: int = 2) -> LengthCountBounds:
    """Min/max number of differences of each orbit length on both sides.

    max counts a contribution wherever its candidate set allows it; min
    counts it only where it is forced (singleton candidate set, or the
    t=2 intra-orbit floor). The two are combined per contribution by
    max, so nothing is double counted.
    """
    side = _side_contributions(pair.p) + _side_contributions(pair.n)
    cross = _cross_contributions(pair)
    lengths: set[int] = set()
    for k, l, _, _ in side + cross:
        lengths |= diff_length_candidates(k, l)
    ordered = sorted(lengths)
    return LengthCountBounds(
        delta=_bounds_table(side, ordered, intra_floor=(t == 2)),
        delta_bar=_bounds_table(cross, ordered, intra_floor=False),
    )


@dataclass(frozen=True)
class ExistenceWitness:
    """Cross pair (k in olp(P), l in olp(N)) whose forced difference
    lengths are impossible within either describing set."""

    k: int
    l: int
    lengths: tuple[int, ...]

    def __str__(self) -> str:
        forced = ",".join(str(m) for m in self.lengths)
        return f"cross ({self.k},{self.l}) forces length in {{{forced}}}"


@dataclass(frozen=True)
class CountingWitness:
    """Length whose forced count on one side exceeds the other side's cap."""

    length: int
    min_count: int
    max_count: int
    direction: str  # "delta>delta_bar" or "delta_bar>delta"

    def __str__(self) -> str:
        lhs, rhs = self.direction.split(">")
        return (
            f"at length {self.length}: min {lhs} = {self.min_count} "
            f"> max {rhs} = {self.max_count}"
        )


@dataclass(frozen=True)
class PruneReport:
    pair: OlpPair
    verdict: str  # "accepted" | "rejected"
    witnesses: tuple = ()

    @property
    def reason(self) -> str:
        return str(self.witnesses[0]) if self.witnesses else ""


def _existence_witnesses(pair: OlpPair) -> list[ExistenceWitness]:
    possible = pol_delta(pair.p) | pol_delta(pair.n)
    out = []
    for k, l in sorted({(k, l) for k in pair.p.parts for l in pair.n.parts}):
        cand = diff_length_candidates(k, l)
        if not cand & possible:
            out.append(ExistenceWitness(k, l, tuple(sorted(cand))))
    return out


def _counting_witnesses(pair: OlpPair, t: int) -> list[CountingWitness]:
    bounds = length_count_bounds(pair, t)
    out = []
    for ell in bounds.lengths:
        d_lo, d_hi = bounds.delta_bounds(ell)
        b_lo, b_hi = bounds.delta_bar_bounds(ell)
        if d_lo > b_hi:
            out.append(CountingWitness(ell, d_lo, b_hi, "delta>delta_bar"))
        if b_lo > d_hi:
            out.append(CountingWitness(ell, b_lo, d_hi, "delta_bar>delta"))
    return out


def prune(pairs, level: str = "counting", t: int = 2) -> list[PruneReport]:
    """One report per pair; rejected reports carry every firing witness.

    existence: cross-pair impossibility only. counting: additionally the
    per-length bound comparison, strict in both directions.
    """
    if level not in ("existence", "counting"):
        raise ValueError(f"unknown prune level {level!r}")
    reports = []
    for pair in pairs:
        witnesses: list = _existence_witnesses(pair)
        if not witnesses and level == "counting":
            witnesses = _counting_witnesses(pair, t)
        verdict = "rejected" if witnesses else "accepted"
        reports.append(PruneReport(pair, verdict, tuple(witnesses)))
    return reports


def survivors(reports) -> list[OlpPair]:
    return [r.pair for r in reports if r.verdict == "accepted"]
