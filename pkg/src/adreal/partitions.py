"""Integer partitions in exponent notation and the even / very even / P~e predicates.

A partition ``[d_1^t_1, ..., d_s^t_s]`` is stored as ``((d_1, t_1), ..., (d_s, t_s))``
with ``d_1 > ... > d_s > 0``; :meth:`Partition.flat` gives the expanded list
used when Jordan blocks are laid out.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .errors import BoundExceeded

DEFAULT_BOUND = 40


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple((int(d), int(t)) for d, t in self.parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        for (d, t) in parts:
            if d <= 0 or t <= 0:
                raise ValueError(f"parts and multiplicities must be positive: {parts}")
        if any(a[0] <= b[0] for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be strictly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, flat):
        """Build from an unordered list of part sizes, e.g. [2, 4, 2]."""
        counts = {}
        for d in flat:
            counts[d] = counts.get(d, 0) + 1
        return cls(tuple(sorted(counts.items(), reverse=True)))

    @property
    def n(self):
        return sum(d * t for d, t in self.parts)

    def flat(self):
        """Part sizes in descending order, each repeated by its multiplicity."""
        return [d for d, t in self.parts for _ in range(t)]

    def multiplicity(self, d):
        return dict(self.parts).get(d, 0)

    def class_sets(self):
        return PartitionClassSets.of(self)

    def is_even(self):
        return all(d % 2 == 0 for d, _ in self.parts)

    def is_very_even(self):
        return self.is_even() and all(t % 2 == 0 for _, t in self.parts)

    def has_odd_part(self):
        return not self.is_even()

    def e2_multiplicity(self):
        """Sum of t_eta over parts eta = 2 mod 4."""
        return sum(t for d, t in self.parts if d % 4 == 2)

    def in_p_tilde_e(self):
        return self.is_even() and not self.is_very_even() and self.e2_multiplicity() % 2 == 1

    def to_json(self):
        return [[d, t] for d, t in self.parts]

    def __str__(self):
        return "[" + ",".join(str(d) if t == 1 else f"{d}^{t}" for d, t in self.parts) + "]"


class PartitionClassSets(NamedTuple):
    N: frozenset
    E: frozenset
    E2: frozenset
    O: frozenset
    O1: frozenset
    O3: frozenset

    @classmethod
    def of(cls, p):
        N = frozenset(d for d, _ in p.parts)
        E = frozenset(d for d in N if d % 2 == 0)
        O = N - E
        return cls(N=N, E=E, E2=frozenset(d for d in E if d % 4 == 2), O=O,
                   O1=frozenset(d for d in O if d % 4 == 1),
                   O3=frozenset(d for d in O if d % 4 == 3))


class PartitionClassification(NamedTuple):
    even: bool
    very_even: bool
    in_P_tilde_e: bool


def classify_partition(p):
    return PartitionClassification(p.is_even(), p.is_very_even(), p.in_p_tilde_e())


def _check_bound(n, bound):
    if n < 1:
        raise ValueError("n must be positive")
    if n > bound:
        raise BoundExceeded(f"n = {n} exceeds the enumeration bound {bound}")


def enumerate_partitions(n, bound=DEFAULT_BOUND):
    """All partitions of ``n``, reverse-lexicographic on the flat form ([n] first)."""
    _check_bound(n, bound)
    out = []

    def rec(remaining, largest, acc):
        if remaining == 0:
            out.append(Partition.from_parts(acc))
            return
        for d in range(min(remaining, largest), 0, -1):
            acc.append(d)
            rec(remaining - d, d, acc)
            acc.pop()

    rec(n, n, [])
    return out


class Census(NamedTuple):
    total: int
    even: int
    very_even: int
    p_tilde_e: int


def census(n, bound=DEFAULT_BOUND):
    total = even = very_even = tilde = 0
    for p in enumerate_partitions(n, bound):
        c = classify_partition(p)
        total += 1
        even += c.even
        very_even += c.very_even
        tilde += c.in_P_tilde_e
    return Census(total, even, very_even, tilde)


ATLAS_HEADER = ("n", "total", "even", "very_even", "p_tilde_e",
                "strong_nilpotent_C", "strong_nilpotent_H")


def atlas_rows(bound, max_bound=DEFAULT_BOUND):
    """One row per n = 1..bound.

    The two trailing columns count nilpotent orbits that are strongly real:
    over C every partition outside P~e(n), over H every partition.
    """
    if bound > max_bound:
        raise BoundExceeded(f"atlas bound {bound} exceeds {max_bound}")
    rows = []
    for n in range(1, bound + 1):
        c = census(n, max_bound)
        rows.append((n, c.total, c.even, c.very_even, c.p_tilde_e, c.total - c.p_tilde_e, c.total))
    return rows
