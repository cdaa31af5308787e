"""Independent brute-force oracles used only by the tests.

Each function here deliberately takes a different algorithmic route from
the package code it checks.
"""

from fractions import Fraction
from itertools import product


def brute_partitions(n):
    """Partitions of n by the iterative reverse-lex successor algorithm."""
    if n == 0:
        return [()]
    out = []
    r = (n,)
    out.append(r)
    while True:
        i = len(r) - 1
        while i > -1:
            if r[i] > 1:
                break
            i -= 1
        if i == -1:
            return out
        s = len(r) - i
        r = r[:i] + (r[i] - 1,)
        while s > 0:
            r += (min(r[-1], s),)
            s -= r[-1]
        out.append(r)


def ordered_set_compositions_count(lam):
    """Number of ordered tuples of nonempty sub-multisets with union lam,
    over all tuple lengths, by exhaustive assignment and dedup."""
    ell = len(lam)
    total = 0
    for n in range(1, ell + 1):
        seen = set()
        for assign in product(range(n), repeat=ell):
            if len(set(assign)) != n:
                continue
            blocks = [[] for _ in range(n)]
            for pos, b in zip(range(ell), assign):
                blocks[b].append(lam[pos])
            key = tuple(tuple(sorted(b, reverse=True)) for b in blocks)
            seen.add(key)
        total += len(seen)
    return total


def ssyt_count(shape, content):
    """Semistandard tableaux by exhaustive cell-filling."""
    shape = tuple(shape)
    letters = len(content)
    rows = [[0] * r for r in shape]
    remaining = list(content)
    count = 0

    cells = [(i, j) for i, row in enumerate(rows) for j in range(len(row))]

    def fill(k):
        nonlocal count
        if k == len(cells):
            count += 1
            return
        i, j = cells[k]
        for v in range(1, letters + 1):
            if remaining[v - 1] == 0:
                continue
            if j > 0 and rows[i][j - 1] > v:
                continue
            if i > 0 and len(rows[i - 1]) > j and rows[i - 1][j] >= v:
                continue
            rows[i][j] = v
            remaining[v - 1] -= 1
            fill(k + 1)
            remaining[v - 1] += 1
            rows[i][j] = 0

    fill(0)
    return count


def inverse_kostka_rimhook(lam, mu):
    """Coefficient of h_mu in s_lam by signed special rim hook decompositions.

    A decomposition repeatedly removes a rim hook that empties the bottom
    row while touching the first column: the hook anchored at row r of a
    shape with ell rows has size lam[r] + ell - r - 1 (the first-column
    hook length), sign (-1)^(ell - r - 1), and leaves
    (lam[0..r-1], lam[r+1]-1, ..., lam[ell-1]-1).
    """
    mu = tuple(sorted(mu, reverse=True))

    def walk(shape, sizes, sign):
        if not shape:
            yield sizes, sign
            return
        ell = len(shape)
        for r in range(ell):
            hook = shape[r] + ell - r - 1
            rest = tuple(shape[:r]) + tuple(p - 1 for p in shape[r + 1 :])
            rest = tuple(p for p in rest if p > 0)
            yield from walk(rest, sizes + [hook], sign * (-1) ** (ell - r - 1))

    total = 0
    for sizes, sign in walk(tuple(lam), [], 1):
        if tuple(sorted(sizes, reverse=True)) == mu:
            total += sign
    return total


def bivariate_cauchy_lhs(cap):
    """Degreewise expansion of the exponential of sum_n p_n(X)p_n(Y)/n in
    a two-alphabet powersum algebra; keys are pairs of partitions."""
    arg = {}
    for n in range(1, cap + 1):
        arg[((n,), (n,))] = Fraction(1, n)

    def weight(key):
        return sum(key[0])

    def mul(a, b):
        out = {}
        for (l1, r1), c1 in a.items():
            for (l2, r2), c2 in b.items():
                if sum(l1) + sum(l2) > cap:
                    continue
                key = (
                    tuple(sorted(l1 + l2, reverse=True)),
                    tuple(sorted(r1 + r2, reverse=True)),
                )
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return {k: v for k, v in out.items() if v}

    by_w = {}
    for key, c in arg.items():
        by_w.setdefault(weight(key), {})[key] = c
    E = {0: {((), ()): Fraction(1)}}
    for w in range(1, cap + 1):
        comp = {}
        for j, aj in by_w.items():
            if j > w or (w - j) not in E:
                continue
            for key, c in mul(aj, E[w - j]).items():
                comp[key] = comp.get(key, Fraction(0)) + j * c
        E[w] = {k: c / w for k, c in comp.items() if c}
    flat = {}
    for part in E.values():
        flat.update(part)
    return flat
