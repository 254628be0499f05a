"""Modified cardinalities on the subset lattice of a finite set system.

Given finite sets A_0 .. A_{k-1}, the modified cardinality of an
intersection over an index set I counts the elements lying in no strictly
finer intersection.  It is computed by backward induction over the lattice
(largest index sets first):

    modified(I) = |inter_I| - sum of modified(J) over all J strictly
                  containing I

The modified values decompose the union additively, with no alternating
signs; the classical alternating inclusion-exclusion sum is kept alongside
as an independent route to the same union count.

Index sets are 0-based throughout, matching the input list positions.
"""

from dataclasses import dataclass, field
from itertools import combinations

MAX_SETS = 10


@dataclass(frozen=True)
class SetSystem:
    """A finite list of finite sets of nonnegative integers."""
    sets: tuple
    max_sets: int = field(default=MAX_SETS, compare=False)

    def __post_init__(self):
        sets = tuple(frozenset(s) for s in self.sets)
        if not sets:
            raise ValueError("a set system needs at least one set")
        if len(sets) > self.max_sets:
            raise ValueError(
                f"{len(sets)} sets exceed the bound {self.max_sets}: the "
                f"lattice has 2^k - 1 index sets")
        for s in sets:
            for x in s:
                if not isinstance(x, int) or x < 0:
                    raise ValueError("set elements must be nonnegative integers")
        object.__setattr__(self, "sets", sets)

    @property
    def k(self):
        return len(self.sets)

    def union(self):
        out = set()
        for s in self.sets:
            out |= s
        return frozenset(out)


def nonempty_index_sets(k):
    """All nonempty subsets of {0..k-1}, as frozensets, smallest first."""
    for size in range(1, k + 1):
        for combo in combinations(range(k), size):
            yield frozenset(combo)


def intersection_table(system):
    """Exact intersections over every nonempty index set."""
    table = {}
    for index_set in nonempty_index_sets(system.k):
        it = iter(index_set)
        acc = set(system.sets[next(it)])
        for i in it:
            acc &= system.sets[i]
        table[index_set] = frozenset(acc)
    return table


def modified_cardinalities(system):
    """Map from index set I to (plain, modified) cardinality.

    The full index set keeps its plain cardinality; every other value is
    the plain one minus the already-settled strictly-finer contributions.
    """
    inter = intersection_table(system)
    index_sets = sorted(inter, key=len, reverse=True)
    modified = {}
    for index_set in index_sets:
        correction = sum(modified[j] for j in modified if j > index_set)
        modified[index_set] = len(inter[index_set]) - correction
    return {i: (len(inter[i]), modified[i]) for i in inter}


def union_via_modified(system):
    """Union size as the plain sum of all modified cardinalities."""
    table = modified_cardinalities(system)
    return sum(mod for _, mod in table.values())


def union_via_alternating(system):
    """Union size by the classical alternating inclusion-exclusion sum."""
    inter = intersection_table(system)
    return sum((-1) ** (len(i) + 1) * len(inter[i]) for i in inter)
