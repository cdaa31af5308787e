"""Integer partition arithmetic.

Partitions are plain tuples of positive ints in weakly decreasing order;
the empty tuple is the empty partition.  They are immutable, hashable and
key every sparse mapping in the package.
"""

from fractions import Fraction
from functools import reduce
from math import factorial, gcd, prod

Partition = tuple[int, ...]

EMPTY: Partition = ()


def check_partition(parts) -> Partition:
    """Validate and return a partition tuple.

    Raises ValueError unless all parts are positive ints in weakly
    decreasing order.
    """
    lam = tuple(parts)
    for i, p in enumerate(lam):
        if not isinstance(p, int) or p <= 0:
            raise ValueError(f"partition parts must be positive integers: {lam!r}")
        if i > 0 and lam[i - 1] < p:
            raise ValueError(f"partition parts must be weakly decreasing: {lam!r}")
    return lam


def sort_parts(parts) -> Partition:
    """Weakly decreasing rearrangement, zero entries dropped."""
    return tuple(sorted((p for p in parts if p != 0), reverse=True))


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def multiplicities(lam: Partition) -> dict[int, int]:
    """Map part value j -> number of parts equal to j."""
    mult: dict[int, int] = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    return mult


def gcd_parts(lam: Partition) -> int:
    """gcd of the parts; undefined (rejected) for the empty partition."""
    if not lam:
        raise ValueError("gcd of the empty partition is undefined")
    return reduce(gcd, lam)


def z_of(lam: Partition) -> int:
    """Centralizer size prod_j m_j! * j^m_j of a permutation of cycle type lam."""
    return prod(factorial(m) * j**m for j, m in multiplicities(lam).items())


def union(mus) -> Partition:
    """Multiset union of the parts of several partitions, re-sorted."""
    parts: list[int] = []
    for mu in mus:
        parts.extend(mu)
    return tuple(sorted(parts, reverse=True))


def part_multinomial(lam: Partition, mus) -> int:
    """Multinomial prod_j m_j(lam)! / (m_j(mu1)! ... m_j(mun)!).

    Requires the multiset union of mus to be lam.  Equals
    z_of(lam) / prod z_of(mu_i).
    """
    mus = list(mus)
    if union(mus) != lam:
        raise ValueError(f"union of {mus!r} is not {lam!r}")
    val = Fraction(1)
    lam_mult = multiplicities(lam)
    for j, m in lam_mult.items():
        val *= factorial(m)
    for mu in mus:
        for j, m in multiplicities(mu).items():
            val /= factorial(m)
    assert val.denominator == 1
    return int(val)


def divide(mu: Partition, d: int) -> Partition:
    """Divide every part of mu by d; d must divide the gcd of the parts.

    For the empty partition only d = 1 is accepted.
    """
    if d <= 0:
        raise ValueError(f"divisor must be positive: {d}")
    if not mu:
        if d != 1:
            raise ValueError("only d=1 divides the empty partition")
        return mu
    if gcd_parts(mu) % d != 0:
        raise ValueError(f"{d} does not divide gcd of {mu!r}")
    out = tuple(p // d for p in mu)
    # z_{mu/d} = z_mu / d^len(mu)
    assert z_of(out) * d ** len(mu) == z_of(mu)
    return out


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order ((n) first, (1^n) last)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative: {n}")
    out: list[Partition] = []

    def descend(remaining: int, max_part: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(max_part, remaining), 0, -1):
            prefix.append(p)
            descend(remaining - p, p, prefix)
            prefix.pop()

    descend(n, n if n else 1, [])
    return out


def partitions_upto(n: int) -> list[Partition]:
    """Partitions of 0..n, by degree then reverse-lexicographic."""
    out: list[Partition] = []
    for k in range(n + 1):
        out.extend(partitions_of(k))
    return out


def multiset_splits(lam: Partition, n: int) -> list[tuple[tuple[Partition, ...], int]]:
    """Unordered splits of lam into exactly n nonempty partitions.

    Returns (parts, ordered_count) pairs where parts is the multiset written
    as a decreasing tuple of partitions, and ordered_count is the number of
    ordered sequences realizing the multiset (n! over the repetition
    factorials), so callers can reconstruct ordered sums exactly.
    """
    if not 1 <= n <= len(lam):
        return []
    parts = list(lam)
    ell = len(parts)
    seen: set[tuple[Partition, ...]] = set()
    # Assign each part a block in 0..n-1; restricted-growth labels kill the
    # block-order symmetry, a final dedupe kills equal-part swaps.
    def assign(i: int, used: int, blocks: list[list[int]]) -> None:
        if ell - i < n - used:
            return
        if i == ell:
            if used == n:
                key = tuple(sorted((sort_parts(b) for b in blocks), reverse=True))
                seen.add(key)
            return
        for b in range(used):
            blocks[b].append(parts[i])
            assign(i + 1, used, blocks)
            blocks[b].pop()
        if used < n:
            blocks[used].append(parts[i])
            assign(i + 1, used + 1, blocks)
            blocks[used].pop()

    assign(0, 0, [[] for _ in range(n)])

    out = []
    for key in sorted(seen):
        mult: dict[Partition, int] = {}
        for mu in key:
            mult[mu] = mult.get(mu, 0) + 1
        ordered = factorial(n) // prod(factorial(m) for m in mult.values())
        out.append((key, ordered))
    return out


def parse_partition(text: str) -> Partition:
    """Parse the textual format "a,b,c"; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return EMPTY
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed partition string: {text!r}") from None
    return check_partition(parts)


def format_partition(lam: Partition) -> str:
    """Inverse of parse_partition."""
    return ",".join(str(p) for p in lam)


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order on partitions of equal size: lam >= mu."""
    if size(lam) != size(mu):
        return False
    total_l = total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += lam[i] if i < len(lam) else 0
        total_m += mu[i] if i < len(mu) else 0
        if total_l < total_m:
            return False
    return True
