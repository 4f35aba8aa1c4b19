"""Exhaustive orbit-assignment search and equivalence classification.

A normalized weighing row fixed by multiplier t has describing sets that
are unions of t-orbits, so for a given (olp(P), olp(N)) pair the search
space is the set of assignments of distinct orbits to parts. Orbits of
equal length within one side are interchangeable (combinations, not
permutations); the two sides are ordered. Every assignment is built
into a row and checked by verify_cw.

base_orders computes, per part length with multiplicity, which moduli
can host enough orbits of that length; the lcms of one choice per
length are the orders worth searching. Solutions at any multiple of a
base order are lifts of base solutions, which is what full_classification
exploits: it applies the divisibility rules for weight 16 and, for
small orders, re-derives the answer by searching every candidate pair
from scratch.
"""
from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

from .orbits import ModulusContext, divisors, orbits_of_length, units
from .pruning import Olp, OlpPair, cross_pairs, describing_set_sizes
from .rows import (
    CirculantRow,
    EquivalenceWitness,
    apply_transform,
    are_equivalent,
    canonical_form,
    canonical_form_up_to_negation,
    from_sets,
    normalize_sign,
    sort_key,
    verify_cw,
)


@dataclass(frozen=True)
class SearchSpec:
    """Order, weight, multiplier, and orbit length partition pair."""

    n: int
    weight: int
    t: int
    pair: OlpPair

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"order must be positive, got {self.n}")
        if gcd(self.t, self.n) != 1:
            raise ValueError(f"t={self.t} is not a unit mod {self.n}")
        p_size, n_size = describing_set_sizes(self.weight)
        if (self.pair.p.total, self.pair.n.total) != (p_size, n_size):
            raise ValueError(
                f"olp sums must be ({p_size}, {n_size}) for weight "
                f"{self.weight}, got ({self.pair.p.total}, {self.pair.n.total})"
            )


@dataclass(frozen=True)
class EquivalenceClass:
    """representative is the canonical form; members are found rows."""

    representative: CirculantRow
    members: tuple[CirculantRow, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class SearchReport:
    spec: SearchSpec
    candidates_tested: int
    solutions: tuple[CirculantRow, ...]
    classes: tuple[EquivalenceClass, ...]


def _assignments(spec: SearchSpec) -> list[tuple[frozenset, frozenset]]:
    """Every (P, N) choice of distinct orbits matching the olp pair."""
    ctx = ModulusContext(spec.n, spec.t)
    p_mults = spec.pair.p.multiplicities
    n_mults = spec.pair.n.multiplicities
    lengths = sorted(set(p_mults) | set(n_mults))
    available = {ell: orbits_of_length(ctx, ell) for ell in lengths}
    for ell in lengths:
        if len(available[ell]) < p_mults.get(ell, 0) + n_mults.get(ell, 0):
            return []

    def per_length(ell):
        out = []
        for p_sel in itertools.combinations(available[ell], p_mults.get(ell, 0)):
            rest = [o for o in available[ell] if o not in p_sel]
            for n_sel in itertools.combinations(rest, n_mults.get(ell, 0)):
                out.append((p_sel, n_sel))
        return out

    assignments = []
    for combo in itertools.product(*(per_length(ell) for ell in lengths)):
        P = frozenset(x for p_sel, _ in combo for orb in p_sel for x in orb.elements)
        N = frozenset(x for _, n_sel in combo for orb in n_sel for x in orb.elements)
        assignments.append((P, N))
    return assignments


def _verify_batch(args):
    """(n, weight, assignments) -> verifying (P, N) pairs, in order."""
    n, weight, assignments = args
    hits = []
    for P, N in assignments:
        if verify_cw(from_sets(n, P, N)) == weight:
            hits.append((P, N))
    return hits


def exhaustive_search(spec: SearchSpec, jobs: int = 1) -> SearchReport:
    """Test every orbit assignment; report solutions and their classes.

    Output is independent of jobs: candidates are checked in chunks and
    hits re-assembled in enumeration order before sorting by canonical
    form.
    """
    assignments = _assignments(spec)
    if jobs > 1 and len(assignments) > 4 * jobs:
        size = (len(assignments) + jobs - 1) // jobs
        chunks = [
            (spec.n, spec.weight, assignments[i : i + size])
            for i in range(0, len(assignments), size)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            hits = [pn for batch in pool.map(_verify_batch, chunks) for pn in batch]
    else:
        hits = _verify_batch((spec.n, spec.weight, assignments))

    seen: dict[tuple, CirculantRow] = {}
    for P, N in hits:
        row = normalize_sign(from_sets(spec.n, P, N))
        seen.setdefault(row.coeffs, row)
    solutions = sorted(seen.values(), key=lambda r: sort_key(canonical_form(r)))
    classes = classify(solutions)
    return SearchReport(spec, len(assignments), tuple(solutions), tuple(classes))


def classify(rows, up_to_negation: bool = False) -> tuple[EquivalenceClass, ...]:
    """Partition rows into equivalence classes, deterministically ordered.

    Grouping is by canonical form, so cost is linear in the number of
    rows; classes are sorted by their canonical representative.
    """
    orders = {row.n for row in rows}
    if len(orders) > 1:
        raise ValueError(f"rows have mixed orders {sorted(orders)}")
    canon = canonical_form_up_to_negation if up_to_negation else canonical_form
    groups: dict[tuple, list[CirculantRow]] = {}
    reps: dict[tuple, CirculantRow] = {}
    for row in rows:
        rep = canon(row)
        key = sort_key(rep)
        groups.setdefault(key, []).append(row)
        reps.setdefault(key, rep)
    return tuple(
        EquivalenceClass(reps[key], tuple(sorted(groups[key], key=sort_key)))
        for key in sorted(groups)
    )


def base_orders(pair: OlpPair, t: int = 2) -> list[int]:
    """Orders at which every class with this olp pair has a base solution.

    For each length ell with combined multiplicity c, the admissible
    moduli are the divisors d of t^ell - 1 hosting at least c orbits of
    length ell; the returned orders are the lcms of one admissible
    modulus per length. Any CW of odd order whose normalized row
    realizes this pair is a lift of a solution at one of these orders.
    """
    parts = pair.p.parts + pair.n.parts
    if any(p > 10 for p in parts):
        raise ValueError("orbit lengths above 10 are outside the implemented analysis")
    mults = Counter(parts)
    per_length = []
    for ell in sorted(mults):
        modulus = t**ell - 1
        choices = [
            d
            for d in divisors(modulus)
            if len(orbits_of_length(ModulusContext(d, t), ell)) >= mults[ell]
        ]
        if not choices:
            raise ValueError(f"no modulus hosts {mults[ell]} orbits of length {ell}")
        per_length.append(choices)
    return sorted({lcm(*combo) for combo in itertools.product(*per_length)})


def lift(row: CirculantRow, m: int) -> CirculantRow:
    """Spread the row to order n*m: coefficient i moves to index i*m."""
    if m < 1:
        raise ValueError(f"lift factor must be positive, got {m}")
    coeffs = [0] * (row.n * m)
    for i, c in enumerate(row.coeffs):
        coeffs[i * m] = c
    return CirculantRow(row.n * m, tuple(coeffs))


def contract(row: CirculantRow) -> tuple[CirculantRow, int]:
    """Maximal inverse of lift: (base, m) with lift(base, m) == row.

    m is the gcd of the order and all support indices; m == 1 means the
    row is incompressible.
    """
    support = row.support
    if not support:
        raise ValueError("cannot contract the zero row")
    m = gcd(row.n, *support)
    base = CirculantRow(row.n // m, tuple(row.coeffs[i * m] for i in range(row.n // m)))
    return base, m


def class_contractible(row: CirculantRow, d: int) -> bool:
    """Whether some equivalent row has all support indices divisible by d.

    An image under (s, t) has support {t*i + s}; a suitable s exists
    exactly when all t*i agree mod d, so only units t are scanned.
    """
    if d < 1 or row.n % d != 0:
        raise ValueError(f"d must divide the order, got d={d}, n={row.n}")
    support = row.support
    if not support:
        return True
    return any(len({(t * i) % d for i in support}) == 1 for t in units(row.n))


def _contract_class(row: CirculantRow, d: int) -> CirculantRow:
    """A base row whose lift is equivalent to the given row."""
    for t in units(row.n):
        residues = {(t * i) % d for i in row.support}
        if len(residues) == 1:
            s = (d - residues.pop()) % d
            image = apply_transform(row, EquivalenceWitness(s, t))
            base, _ = contract(image)
            return base
    raise ValueError(f"class has no representative with support divisible by {d}")


@lru_cache(maxsize=None)
def _base_search(n: int, p_text: str, n_text: str) -> SearchReport:
    pair = OlpPair(Olp.from_string(p_text), Olp.from_string(n_text))
    return exhaustive_search(SearchSpec(n, 16, 2, pair))


def _reps_31() -> tuple[CirculantRow, CirculantRow]:
    report = _base_search(31, "5^2", "1^1 5^1")
    if len(report.classes) != 2:
        raise RuntimeError(f"expected 2 classes at order 31, found {len(report.classes)}")
    a, b = (c.representative for c in report.classes)
    return a, b


def _split_63() -> tuple[CirculantRow, CirculantRow]:
    """(non-3-contractible representative at 63, contracted row at 21)."""
    report = _base_search(63, "1^1 3^1 6^1", "6^1")
    fresh = [c.representative for c in report.classes if not class_contractible(c.representative, 3)]
    lifted = [c.representative for c in report.classes if class_contractible(c.representative, 3)]
    if len(fresh) != 1 or len(lifted) != 1:
        raise RuntimeError(
            f"expected one 3-contractible and one incompressible class at 63, "
            f"found {len(lifted)} and {len(fresh)}"
        )
    return fresh[0], _contract_class(lifted[0], 3)


@dataclass(frozen=True)
class ClassificationResult:
    n: int
    weight: int
    classes: tuple[CirculantRow, ...]
    cross_checked: bool

    @property
    def count(self) -> int:
        return len(self.classes)


def _search_all_pairs(n: int, weight: int, t: int = 2, jobs: int = 1):
    rows = []
    for pair in cross_pairs(weight, t):
        report = exhaustive_search(SearchSpec(n, weight, t, pair), jobs=jobs)
        rows.extend(report.solutions)
    return rows


def full_classification(
    weight: int, n: int, cross_check: bool | None = None, jobs: int = 1
) -> ClassificationResult:
    """Equivalence classes of CW(n, 16) for odd n, by the divisibility rules.

    Classes are lifts of base representatives: two at order 31, one new
    at order 63, one at order 21, giving 2*[31|n] + [63|n] + [21|n]
    classes. cross_check (default: on for n <= 105) re-derives the
    answer by exhaustive search over every candidate olp pair and fails
    loudly on any mismatch.
    """
    if weight != 16:
        raise ValueError(f"only weight 16 is classified, got {weight}")
    if n < 1 or n % 2 == 0:
        raise ValueError(f"order must be odd and positive, got {n}")
    reps: list[CirculantRow] = []
    if n % 31 == 0:
        reps.extend(lift(r, n // 31) for r in _reps_31())
    if n % 63 == 0:
        reps.append(lift(_split_63()[0], n // 63))
    if n % 21 == 0:
        reps.append(lift(_split_63()[1], n // 21))

    if cross_check is None:
        cross_check = n <= 105
    if cross_check:
        found = _search_all_pairs(n, weight, jobs=jobs)
        classes = classify(found)
        if len(classes) != len(reps):
            raise RuntimeError(
                f"rule predicts {len(reps)} classes at n={n}, search found {len(classes)}"
            )
        remaining = list(classes)
        for rep in reps:
            matches = [c for c in remaining if are_equivalent(rep, c.representative)]
            if len(matches) != 1:
                raise RuntimeError(
                    f"rule representative at n={n} matches {len(matches)} search classes"
                )
            remaining.remove(matches[0])
    return ClassificationResult(n, weight, tuple(reps), cross_check)
