"""Partitions, nested partition chains and the generator-count strata.

Monomial ideals are the torus-fixed points of the Hilbert scheme of the plane.
A partition lam = (lam_0 >= lam_1 >= ...) stands for the ideal whose standard
monomials are x^c y^r with c < lam_r, so row r of the diagram is the set of
x-powers standing next to y^r.
"""

import csv
import io
from dataclasses import dataclass, field
from math import comb

from .ideal import PunctualIdeal

# The censuses scan monomial ideals only. Generator counts can only go up under
# a torus degeneration, so an empty monomial census is evidence for emptiness
# of the full stratum; this justification is ours, not a proved statement.
SEMICONTINUITY_NOTE = ("emptiness inferred from monomial ideals; relies on upper "
                       "semicontinuity of the generator count under torus degeneration")


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self):
        return sum(self.parts)

    def boxes(self):
        """Exponent pairs (i, j) of the standard monomials x^i y^j."""
        return [(c, r) for r, length in enumerate(self.parts) for c in range(length)]

    def contains(self, other):
        """Diagram containment other ⊆ self."""
        if len(other.parts) > len(self.parts):
            return False
        return all(a <= b for a, b in zip(other.parts, self.parts))

    def conjugate(self):
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0])))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(n):
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = []

    def rec(rest, largest, acc):
        if rest == 0:
            out.append(Partition(tuple(acc)))
            return
        for p in range(min(rest, largest), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return out


def _grow(lam, k):
    """Partitions containing lam with k more boxes."""
    level = {lam}
    for _ in range(k):
        nxt = set()
        for mu in level:
            parts = list(mu.parts) + [0]
            for r in range(len(parts)):
                if r == 0 or parts[r] < parts[r - 1]:
                    new = parts[:]
                    new[r] += 1
                    nxt.add(Partition(tuple(p for p in new if p)))
        level = nxt
    return sorted(level, reverse=True)


def nested_partition_chains(lengths):
    """All chains of Young diagrams with the given sizes, each contained in the next."""
    lengths = list(lengths)
    if any(a >= b for a, b in zip(lengths, lengths[1:])):
        raise ValueError("lengths must be strictly increasing")
    if not lengths:
        return [()]
    chains = [(lam,) for lam in partitions(lengths[0])]
    for prev, nxt in zip(lengths, lengths[1:]):
        chains = [c + (mu,) for c in chains for mu in _grow(c[-1], nxt - prev)]
    return chains


def monomial_ideal_of(lam, field):
    if not lam.parts:
        raise ValueError("monomial_ideal_of needs a nonempty partition")
    return PunctualIdeal.monomial(field, lam.boxes())


def min_gens_partition(lam):
    if not lam.parts:
        raise ValueError("min_gens_partition needs a nonempty partition")
    return len(set(lam.parts)) + 1


def staircase(k):
    """The partition (k, k-1, ..., 1) of m^k."""
    return Partition(tuple(range(k, 0, -1)))


@dataclass
class CensusReport:
    n: int
    i: int
    threshold: int
    scanned: int
    max_generators: int
    witnesses: list
    staircase_witness: bool
    empty: bool
    consistent: bool
    note: str = SEMICONTINUITY_NOTE

    def to_json(self):
        return {
            "n": self.n, "i": self.i, "threshold": self.threshold, "scanned": self.scanned,
            "max_generators": self.max_generators,
            "witnesses": [list(w.parts) for w in self.witnesses],
            "staircase_witness": self.staircase_witness, "empty": self.empty,
            "consistent": self.consistent, "note": self.note,
        }


def emptiness_census(n, i, field=None):
    """Does any monomial ideal of colength <= n need at least i generators?"""
    if i < 2:
        raise ValueError("the census needs i >= 2")
    if field is None:
        from .exactcore.field import Field
        field = Field.prime()
    scanned = 0
    max_gens = 0
    witnesses = []
    for l in range(1, n + 1):
        for lam in partitions(l):
            scanned += 1
            r = monomial_ideal_of(lam, field).min_gens()
            max_gens = max(max_gens, r)
            if r >= i:
                witnesses.append(lam)
    threshold = comb(i, 2)
    empty = not witnesses
    smallest = min((w.size for w in witnesses), default=None)
    minimal = [w for w in witnesses if w.size == smallest]
    has_stair = staircase(i - 1) in witnesses
    consistent = empty if n < threshold else (has_stair and smallest == threshold)
    return CensusReport(n, i, threshold, scanned, max_gens, minimal, has_stair, empty, consistent)


def _codim_single(i):
    return comb(i, 2) + 1 if i >= 2 else None


def _fiber_dim(i):
    return 2 if i <= 2 else i - 1


def _codim_intersection(i, j):
    if j > i:
        return comb(j, 2) + comb(i, 2)
    return comb(i, 2) + 1


def _codim_preimage(i):
    if i == 2:
        return 2
    return comb(i - 1, 2) + 3


def _codim_preimage_derived(i, j_max):
    # a generic fiber of the forgetful map is a surface, so a fiber of
    # dimension f adds f - 2 to the preimage dimension
    return min(_codim_intersection(i, j) + 2 - _fiber_dim(j) for j in range(i, j_max + 1))


def _codim_two_step(i):
    if i == 1:
        return 0
    if i == 2:
        return 2
    return comb(i - 2, 2) + 3


@dataclass
class BoundTable:
    i_max: int
    rows: list
    intersections: list
    assertions: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.assertions.values())

    def to_json(self):
        return {"i_max": self.i_max, "rows": self.rows, "intersections": self.intersections,
                "assertions": self.assertions, "ok": self.ok}

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(ROW_COLUMNS)
        for row in self.rows:
            w.writerow(["" if row[c] is None else row[c] for c in ROW_COLUMNS])
        return buf.getvalue()


ROW_COLUMNS = ["i", "codim_single_step", "fiber_dim", "codim_preimage", "codim_preimage_derived",
               "codim_two_step", "two_step_at_least_i"]


def bound_tables(i_max):
    if i_max < 3:
        raise ValueError("i_max must be at least 3")
    rows, inter = [], []
    derived_ok = True
    two_step_ok = True
    two_step_derived_ok = True
    for i in range(1, i_max + 1):
        pre = _codim_preimage(i) if i >= 2 else None
        # the preimage minimum is attained at j = i, so a finite range of j suffices
        pre_d = _codim_preimage_derived(i, i_max + 1) if i >= 2 else None
        two = _codim_two_step(i)
        rows.append({
            "i": i, "codim_single_step": _codim_single(i), "fiber_dim": _fiber_dim(i),
            "codim_preimage": pre, "codim_preimage_derived": pre_d, "codim_two_step": two,
            "two_step_at_least_i": two >= i if i >= 3 else None,
        })
        if pre != pre_d:
            derived_ok = False
        if i >= 3 and two < i:
            two_step_ok = False
        if i >= 4 and two != min(_codim_preimage(k) for k in (i - 1, i, i + 1)):
            two_step_derived_ok = False
        for j in range(max(i, 2), i_max + 1):
            if i >= 2:
                inter.append({"i": i, "j": j, "codim_intersection": _codim_intersection(i, j)})
    assertions = {
        "two_step_at_least_i": two_step_ok,
        "preimage_matches_minimum_over_j": derived_ok,
        "two_step_matches_three_neighbouring_strata": two_step_derived_ok,
    }
    return BoundTable(i_max, rows, inter, assertions)


def census_to_csv(reports):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    cols = ["n", "i", "threshold", "scanned", "max_generators", "empty", "staircase_witness",
            "consistent"]
    w.writerow(cols)
    for r in reports:
        d = r.to_json()
        w.writerow([d[c] for c in cols])
    return buf.getvalue()
