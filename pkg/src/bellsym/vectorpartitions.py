"""Vector partitions: multisets of nonzero integer vectors with a fixed sum.

Targets and parts are tuples of nonnegative ints with trailing zeros
trimmed, so vectors differing only by padding are identical.  The count of
vector partitions of a partition lambda (read as the vector of its parts)
is the monomial expansion coefficient of the order-1 Bell functions, and
the part-count generating polynomials feed the restriction series.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError
from .partitions import Partition, sort_parts
from .unipoly import UniPoly

IntVector = tuple[int, ...]

DEFAULT_NODE_BUDGET = 10**7


def trim(vec) -> IntVector:
    """Canonical form: drop trailing zeros."""
    v = list(vec)
    while v and v[-1] == 0:
        v.pop()
    if any(x < 0 for x in v):
        raise ValueError(f"vector entries must be nonnegative: {vec!r}")
    return tuple(v)


@dataclass(frozen=True)
class VectorPartition:
    """A multiset of nonzero vectors (stored in decreasing order) summing to target."""

    parts: tuple[IntVector, ...]
    target: IntVector

    def part_multiplicities(self) -> dict[IntVector, int]:
        mult: dict[IntVector, int] = {}
        for p in self.parts:
            mult[p] = mult.get(p, 0) + 1
        return mult

    def __len__(self) -> int:
        return len(self.parts)


def enumerate_vector_partitions(
    target, budget: int = DEFAULT_NODE_BUDGET
) -> list[VectorPartition]:
    """All vector partitions of the target, each once, deterministically ordered.

    Parts are generated in decreasing lexicographic order inside each
    partition (each new part is bounded by the previous one and by the
    remaining target componentwise), which yields every multiset exactly
    once; the result list is sorted by the part tuple.  Raises
    BudgetExceededError when the recursion exceeds `budget` nodes.
    """
    target = trim(target)
    n = len(target)
    out: list[VectorPartition] = []
    nodes = 0

    def candidates(bound: IntVector | None, remaining: tuple[int, ...]):
        """Nonzero vectors <= remaining componentwise and lex-<= bound, decreasing."""
        vecs: list[IntVector] = []

        def build(i: int, prefix: list[int], tight: bool) -> None:
            if i == n:
                if any(prefix):
                    vecs.append(tuple(prefix))
                return
            hi = remaining[i]
            if tight and bound is not None:
                hi = min(hi, bound[i] if i < len(bound) else 0)
            for v in range(hi, -1, -1):
                still_tight = tight and bound is not None and v == (bound[i] if i < len(bound) else 0)
                prefix.append(v)
                build(i + 1, prefix, still_tight)
                prefix.pop()

        build(0, [], bound is not None)
        return vecs

    def descend(remaining: tuple[int, ...], bound: IntVector | None, stack: list[IntVector]) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(
                f"vector partition enumeration of {target} exceeded {budget} nodes"
            )
        if not any(remaining):
            out.append(VectorPartition(tuple(trim(p) for p in stack), target))
            return
        for part in candidates(bound, remaining):
            stack.append(part)
            descend(tuple(r - p for r, p in zip(remaining, part)), part, stack)
            stack.pop()

    descend(target, None, [])
    out.sort(key=lambda vp: vp.parts)
    return out


def count_vector_partitions(target, budget: int = DEFAULT_NODE_BUDGET) -> int:
    return len(enumerate_vector_partitions(target, budget))


def rho_direct(lam: Partition, budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Number of vector partitions of lam read as an integer vector.

    Depends only on the sorted form of lam.
    """
    return count_vector_partitions(sort_parts(lam), budget)


def f_poly(mu: Partition, budget: int = DEFAULT_NODE_BUDGET) -> UniPoly:
    """Generating polynomial of vector partitions of mu by number of parts.

    Monic of degree |mu| (the all-unit-vectors partition), zero constant
    term for nonempty mu, and evaluates to rho_direct(mu) at 1.
    """
    mu = sort_parts(mu)
    counts: dict[int, int] = {}
    for vp in enumerate_vector_partitions(mu, budget):
        k = len(vp)
        counts[k] = counts.get(k, 0) + 1
    top = max(counts, default=0)
    return UniPoly([counts.get(k, 0) for k in range(top + 1)])
