"""Circulant rows over {-1, 0, +1} and their symmetry machinery.

A length-n row w stands for the circulant matrix whose (i, j) entry is
w[(j - i) mod n], equivalently the polynomial sum_i w_i x^i in
Z[x]/(x^n - 1). The row is a weighing row of weight k when every
nonzero-lag periodic autocorrelation vanishes; k is then the number of
nonzero entries. Checking lags 1..n//2 suffices, the rest are mirror
images.

Equivalence is generated by cyclic shifts and the substitutions
x -> x^t with gcd(t, n) = 1: the witness (s, t) sends the coefficient
at index i to index t*i + s (mod n). Negation is deliberately NOT part
of equivalence; sign is handled by normalize_sign alone.

Conventions:
  sign strings: '-', '0', '+' read left to right as w_0 .. w_{n-1},
  single spaces between characters allowed.
  witness order: (s, t) compared lexicographically, s first.
  row order: coefficientwise with -1 < 0 < +1, index 0 first.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .orbits import units

_CHAR_TO_COEFF = {"-": -1, "0": 0, "+": 1}
_COEFF_TO_CHAR = {-1: "-", 0: "0", 1: "+"}

# Internal comparison alphabet: must be ordered like the coefficients.
_COEFF_TO_KEY = {-1: "a", 0: "b", 1: "c"}
_KEY_TO_COEFF = {"a": -1, "b": 0, "c": 1}


@dataclass(frozen=True)
class CirculantRow:
    """First row of a circulant {-1,0,+1} matrix of order n."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"order must be positive, got {self.n}")
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
        if any(c not in (-1, 0, 1) for c in coeffs):
            raise ValueError("coefficients must lie in {-1, 0, +1}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_string(cls, text: str) -> "CirculantRow":
        """Parse a sign string like '-++0+00' (single spaces allowed)."""
        stripped = text.replace(" ", "")
        if not stripped:
            raise ValueError("empty sign string")
        try:
            coeffs = tuple(_CHAR_TO_COEFF[ch] for ch in stripped)
        except KeyError as exc:
            raise ValueError(f"bad sign character {exc.args[0]!r}") from None
        return cls(len(coeffs), coeffs)

    def to_string(self, spaced: bool = False) -> str:
        chars = [_COEFF_TO_CHAR[c] for c in self.coeffs]
        return (" " if spaced else "").join(chars)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def __neg__(self) -> "CirculantRow":
        return CirculantRow(self.n, tuple(-c for c in self.coeffs))


@dataclass(frozen=True)
class DescribingSets:
    """Index sets of the +1 entries (P) and the -1 entries (N)."""

    P: frozenset[int]
    N: frozenset[int]


@dataclass(frozen=True)
class EquivalenceWitness:
    """Shift s and unit t realizing row2 = x^s * row1(x^t)."""

    s: int
    t: int


def describing_sets(row: CirculantRow) -> DescribingSets:
    return DescribingSets(
        P=frozenset(i for i, c in enumerate(row.coeffs) if c == 1),
        N=frozenset(i for i, c in enumerate(row.coeffs) if c == -1),
    )


def from_sets(n: int, P, N) -> CirculantRow:
    """Row with +1 on P, -1 on N, 0 elsewhere. Inverse of describing_sets."""
    P, N = set(P), set(N)
    if P & N:
        raise ValueError(f"P and N overlap: {sorted(P & N)}")
    coeffs = [0] * n
    for i in P:
        if not 0 <= i < n:
            raise ValueError(f"index {i} out of range for order {n}")
        coeffs[i] = 1
    for i in N:
        if not 0 <= i < n:
            raise ValueError(f"index {i} out of range for order {n}")
        coeffs[i] = -1
    return CirculantRow(n, tuple(coeffs))


def periodic_autocorrelation(row: CirculantRow, lag: int) -> int:
    """sum_i w_i * w_{i+lag mod n}. Only support indices contribute."""
    if not 0 <= lag < row.n:
        raise ValueError(f"lag {lag} out of range for order {row.n}")
    c, n = row.coeffs, row.n
    return sum(c[i] * c[(i + lag) % n] for i in row.support)


def verify_cw(row: CirculantRow) -> int | None:
    """Weight k if the row is a circulant weighing row, else None."""
    c, n = row.coeffs, row.n
    support = row.support
    for lag in range(1, n // 2 + 1):
        if sum(c[i] * c[(i + lag) % n] for i in support) != 0:
            return None
    return len(support)


def normalize_sign(row: CirculantRow) -> CirculantRow:
    """The one of row, -row with more +1 entries.

    Callers are expected to pass weighing rows; a square weight forces
    |P| != |N|, so a tie is an input error, as is an all-zero row.
    """
    pos = sum(1 for c in row.coeffs if c == 1)
    neg = sum(1 for c in row.coeffs if c == -1)
    if pos + neg == 0:
        raise ValueError("cannot sign-normalize an all-zero row")
    if pos == neg:
        raise ValueError("row has |P| = |N|; not a square-weight weighing row")
    return row if pos > neg else -row


def apply_transform(row: CirculantRow, witness: EquivalenceWitness) -> CirculantRow:
    """x^s * row(x^t): coefficient at i moves to (t*i + s) mod n."""
    n = row.n
    s, t = witness.s % n, witness.t % n
    if gcd(t, n) != 1:
        raise ValueError(f"t={witness.t} is not a unit mod {n}")
    out = [0] * n
    for i, c in enumerate(row.coeffs):
        out[(t * i + s) % n] = c
    return CirculantRow(n, tuple(out))


def _key(row: CirculantRow) -> str:
    return "".join(_COEFF_TO_KEY[c] for c in row.coeffs)


def _row_from_key(key: str) -> CirculantRow:
    return CirculantRow(len(key), tuple(_KEY_TO_COEFF[ch] for ch in key))


def sort_key(row: CirculantRow) -> str:
    """String whose lexicographic order matches the row order.

    ASCII order of '-', '0', '+' does not match -1 < 0 < +1, so sorting
    must go through this key, not to_string().
    """
    return _key(row)


def _shift_matches(base_key: str, target_key: str) -> list[int]:
    """All s with rotate(base, s) == target, ascending.

    rotate(base, s)[j] = base[(j - s) mod n], i.e. window n-s of the
    doubled string; found with str.find so the scan stays in C.
    """
    n = len(base_key)
    doubled = base_key + base_key
    shifts = []
    p = doubled.find(target_key)
    while 0 <= p < n:
        shifts.append((n - p) % n)
        p = doubled.find(target_key, p + 1)
    shifts.sort()
    return shifts


def multiplier_shift(row: CirculantRow, t: int) -> int | None:
    """Least s with row = x^s * row(x^t), or None. s = 0 means t fixes row."""
    n = row.n
    if gcd(t % n, n) != 1:
        raise ValueError(f"t={t} is not a unit mod {n}")
    base = _key(apply_transform(row, EquivalenceWitness(0, t)))
    matches = _shift_matches(base, _key(row))
    return matches[0] if matches else None


def are_equivalent(r1: CirculantRow, r2: CirculantRow) -> EquivalenceWitness | None:
    """Lexicographically least witness (s, t) with r2 = x^s * r1(x^t), or None.

    Brute force over every unit t; for each t all matching shifts are
    read off by rotation matching, so the search is exhaustive.
    """
    if r1.n != r2.n:
        raise ValueError(f"order mismatch: {r1.n} vs {r2.n}")
    n = r1.n
    target = _key(r2)
    found: list[tuple[int, int]] = []
    for t in units(n):
        base = _key(apply_transform(r1, EquivalenceWitness(0, t)))
        for s in _shift_matches(base, target):
            found.append((s, t))
    if not found:
        return None
    s, t = min(found)
    return EquivalenceWitness(s, t)


def canonical_form(row: CirculantRow) -> CirculantRow:
    """Lexicographically least row over the full (s, t) orbit.

    Two rows are equivalent iff their canonical forms are identical.
    """
    n = row.n
    best: str | None = None
    for t in units(n):
        base = _key(apply_transform(row, EquivalenceWitness(0, t)))
        doubled = base + base
        for p in range(n):
            cand = doubled[p : p + n]
            if best is None or cand < best:
                best = cand
    assert best is not None
    return _row_from_key(best)


def canonical_form_up_to_negation(row: CirculantRow) -> CirculantRow:
    """Least canonical form of row and -row; convenience for sign-blind grouping."""
    a = canonical_form(row)
    b = canonical_form(-row)
    return a if _key(a) <= _key(b) else b
