"""Brute-force oracle: hyper-partitions of {1..n} under symmetric-group actions.

An order-0 structure over a label set is the set itself, as a single atom.
An order-m structure (m >= 1) is a set of order-(m-1) structures whose
ground sets are disjoint, nonempty, and cover the labels; order 1 gives
ordinary set partitions.  Equality is structural on canonical forms, where
the members of every level are sorted by minimum label, so counting fixed
points of a relabeling is a pure equality check.

The composition step uses nonempty blocks throughout: allowing an empty
block would make the structure sets infinite and the counts would no
longer match the Bell numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BudgetExceededError, CrossCheckError
from .bell import egf_bell_numbers
from .partitions import Partition, partitions_of, sort_parts, z_of
from .symfunc import SymFunc

DEFAULT_OBJECT_BUDGET = 10**6

# Canonical node forms: order 0 -> sorted tuple of labels;
# order m >= 1 -> tuple of order-(m-1) nodes sorted by minimum label.
Node = tuple


class HyperPartition:
    """Immutable canonical hyper-partition of a fixed order."""

    __slots__ = ("order", "node")

    def __init__(self, order: int, node: Node):
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "node", node)

    def __setattr__(self, name, value):
        raise AttributeError("HyperPartition is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HyperPartition)
            and self.order == other.order
            and self.node == other.node
        )

    def __hash__(self):
        return hash((self.order, self.node))

    def labels(self) -> tuple[int, ...]:
        return _labels(self.node, self.order)

    def relabel(self, perm: dict[int, int]) -> HyperPartition:
        """Apply a label bijection and re-canonicalize."""
        return HyperPartition(self.order, _relabel(self.node, self.order, perm))

    def render(self) -> str:
        """Nested-braces text form, e.g. "{{1,2},{3}}" at order 1."""
        return _render(self.node, self.order)

    def __repr__(self) -> str:
        return f"HyperPartition(order={self.order}, {self.render()})"


def _labels(node: Node, order: int) -> tuple[int, ...]:
    if order == 0:
        return node
    out: list[int] = []
    for child in node:
        out.extend(_labels(child, order - 1))
    return tuple(sorted(out))


def _min_label(node: Node, order: int) -> int:
    while order > 0:
        node = node[0]
        order -= 1
    return node[0]


def _relabel(node: Node, order: int, perm: dict[int, int]) -> Node:
    if order == 0:
        return tuple(sorted(perm[x] for x in node))
    children = [_relabel(child, order - 1, perm) for child in node]
    children.sort(key=lambda c: _min_label(c, order - 1))
    return tuple(children)


def _render(node: Node, order: int) -> str:
    if order == 0:
        return "{" + ",".join(str(x) for x in node) + "}"
    return "{" + ",".join(_render(child, order - 1) for child in node) + "}"


def _set_partitions(labels: tuple[int, ...]):
    """All set partitions as tuples of blocks (each block a sorted tuple),
    blocks ordered by minimum element."""
    if not labels:
        yield ()
        return
    first, rest = labels[0], labels[1:]
    for sub in _set_partitions(rest):
        # first is the global minimum, so whichever block receives it
        # moves to the front; the others keep their relative order.
        for i, block in enumerate(sub):
            yield ((first,) + block,) + sub[:i] + sub[i + 1 :]
        yield ((first,),) + sub


@lru_cache(maxsize=None)
def _structures(order: int, labels: tuple[int, ...]) -> tuple[Node, ...]:
    if order == 0:
        return (labels,)
    if not labels:
        return ((),)
    out: list[Node] = []
    for blocks in _set_partitions(labels):
        choices = [_structures(order - 1, block) for block in blocks]
        idx = [0] * len(choices)
        while True:
            node = tuple(choices[i][idx[i]] for i in range(len(choices)))
            out.append(node)
            for i in range(len(choices) - 1, -1, -1):
                idx[i] += 1
                if idx[i] < len(choices[i]):
                    break
                idx[i] = 0
            else:
                break
    return tuple(sorted(out))


def expected_count(order: int, n: int) -> int:
    return egf_bell_numbers(order, n)[n]


def enumerate_hyperpartitions(
    order: int, n: int, budget: int = DEFAULT_OBJECT_BUDGET
) -> list[HyperPartition]:
    """All order-m hyper-partitions of {1..n}, canonical, each exactly once.

    The expected count is known in advance from the generating-function
    tower; the enumeration refuses to start past the budget, and the
    actual count is certified against the expectation afterwards.
    """
    if order < 0 or n < 0:
        raise ValueError("order and n must be nonnegative")
    expect = expected_count(order, n)
    if expect > budget:
        raise BudgetExceededError(
            f"{expect} hyper-partitions of order {order} on {n} labels exceeds budget {budget}"
        )
    labels = tuple(range(1, n + 1))
    nodes = _structures(order, labels)
    if len(nodes) != expect:
        raise CrossCheckError(
            f"enumerated {len(nodes)} hyper-partitions at (order={order}, n={n}), expected {expect}"
        )
    return [HyperPartition(order, node) for node in nodes]


# ---------------------------------------------------------------------------
# permutation actions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PermutationAction:
    """A permutation of {1..n}: images[i-1] is the image of i."""

    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise ValueError(f"not a permutation of 1..{self.n}: {self.images!r}")

    @classmethod
    def identity(cls, n: int) -> PermutationAction:
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def from_cycle_type(cls, lam) -> PermutationAction:
        """Canonical permutation with the given cycle type: consecutive cycles."""
        lam = tuple(lam)
        n = sum(lam)
        images = list(range(1, n + 1))
        start = 1
        for part in lam:
            for i in range(part):
                images[start - 1 + i] = start + (i + 1) % part
            start += part
        return cls(n, tuple(images))

    def as_mapping(self) -> dict[int, int]:
        return {i + 1: img for i, img in enumerate(self.images)}

    def cycle_type(self) -> Partition:
        seen = [False] * self.n
        cycles = []
        for i in range(1, self.n + 1):
            if seen[i - 1]:
                continue
            length = 0
            j = i
            while not seen[j - 1]:
                seen[j - 1] = True
                j = self.images[j - 1]
                length += 1
            cycles.append(length)
        return sort_parts(cycles)

    def conjugate_by(self, tau: PermutationAction) -> PermutationAction:
        """tau o self o tau^{-1}; preserves the cycle type."""
        images = [0] * self.n
        for i in range(1, self.n + 1):
            images[tau.images[i - 1] - 1] = tau.images[self.images[i - 1] - 1]
        return PermutationAction(self.n, tuple(images))


def fixed_points(
    order: int, sigma: PermutationAction, budget: int = DEFAULT_OBJECT_BUDGET
) -> int:
    """Number of order-m hyper-partitions fixed by the relabeling sigma."""
    structures = enumerate_hyperpartitions(order, sigma.n, budget)
    mapping = sigma.as_mapping()
    return sum(1 for H in structures if H.relabel(mapping) == H)


def fixed_points_of_type(order: int, lam, budget: int = DEFAULT_OBJECT_BUDGET) -> int:
    return fixed_points(order, PermutationAction.from_cycle_type(lam), budget)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def count(self) -> int:
        return sum(1 for i, p in enumerate(self.parent) if self.find(i) == i)


def young_subgroup_generators(lam) -> list[PermutationAction]:
    """Adjacent transpositions inside each block of the Young subgroup."""
    lam = tuple(lam)
    n = sum(lam)
    gens = []
    start = 1
    for part in lam:
        for i in range(start, start + part - 1):
            images = list(range(1, n + 1))
            images[i - 1], images[i] = images[i], images[i - 1]
            gens.append(PermutationAction(n, tuple(images)))
        start += part
    return gens


def orbit_count(order: int, lam, budget: int = DEFAULT_OBJECT_BUDGET) -> int:
    """Orbits of the Young subgroup of lam on the hyper-partitions of {1..|lam|}.

    Union-find seeded with adjacent-transposition generators; cheaper than
    averaging fixed points over the whole subgroup.
    """
    lam = tuple(lam)
    structures = enumerate_hyperpartitions(order, sum(lam), budget)
    index = {H: i for i, H in enumerate(structures)}
    uf = _UnionFind(len(structures))
    for gen in young_subgroup_generators(lam):
        mapping = gen.as_mapping()
        for H, i in index.items():
            uf.union(i, index[H.relabel(mapping)])
    return uf.count()


def frobenius_oracle(order: int, n: int, budget: int = DEFAULT_OBJECT_BUDGET) -> SymFunc:
    """Permutation-character image: sum over cycle types of
    fix(lam)/z_lam * p_lam.  Must reproduce the degree-n Bell function."""
    terms = {}
    for lam in partitions_of(n):
        fix = fixed_points_of_type(order, lam, budget)
        if fix:
            terms[lam] = Fraction(fix, z_of(lam))
    return SymFunc("powersum", n, terms)


def dump_tsv(structures: list[HyperPartition]) -> str:
    """TSV dump: ordinal and nested-braces rendering, one structure per line."""
    lines = [f"{i}\t{H.render()}" for i, H in enumerate(structures)]
    return "\n".join(lines)
