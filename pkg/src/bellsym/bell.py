"""Higher-order Bell symmetric functions by several independent routes.

The order-m Bell function of degree n is the degree-n slice of the
iterated plethystic exponential tower: start from h_1, apply the
exponential-minus-one m times, then one full exponential.  The same
functions fall out of a plethysm recursion in the order, a monomial
coefficient recursion over vector partitions, a powersum coefficient
recursion over multiset splits, and (at order 1) a convolution against
divisor-sum auxiliary functions.  Route agreement is the package's main
correctness certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import CrossCheckError
from .partitions import (
    Partition,
    gcd_parts,
    divide,
    multiplicities,
    multiset_splits,
    partitions_of,
    size,
    sort_parts,
    z_of,
)
from .plethysm import PlethysmContext, omega, omega0, pleth, psi
from .series import exp_series, series_compose
from .symfunc import SymFunc, extract_basis, hall_inner, to_powersum
from .vectorpartitions import DEFAULT_NODE_BUDGET, enumerate_vector_partitions

ROUTES = ("tower", "plethystic", "monomial-recursion", "powersum-recursion", "convolution")


@dataclass
class BellTable:
    """Bell functions B_0..B_N of a fixed order, tagged with how they were built."""

    order: int
    cap: int
    route: str
    values: list[SymFunc]  # powersum basis, values[n] homogeneous of degree n
    _schur: dict[Partition, int] = field(default_factory=dict, repr=False)
    _monomial: dict[Partition, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        assert self.values[0] == SymFunc.one("powersum", self.cap)
        if self.cap >= 1:
            assert self.values[1] == SymFunc.basis_element("powersum", (1,), self.cap)

    def bell(self, n: int) -> SymFunc:
        return self.values[n]

    def schur_coeff(self, lam) -> int:
        """Schur expansion coefficient; checked nonnegative integer."""
        lam = tuple(lam)
        if lam not in self._schur:
            F = extract_basis(self.values[size(lam)], "schur")
            for mu, c in F.terms.items():
                if c.denominator != 1 or c < 0:
                    raise CrossCheckError(f"Schur coefficient of {mu} is {c}, not a nonnegative integer")
                self._schur[mu] = int(c)
            for mu in partitions_of(size(lam)):
                self._schur.setdefault(mu, 0)
        return self._schur[lam]

    def monomial_coeff(self, lam) -> int:
        """Monomial expansion coefficient; checked nonnegative integer."""
        lam = tuple(lam)
        if lam not in self._monomial:
            F = extract_basis(self.values[size(lam)], "monomial")
            for mu, c in F.terms.items():
                if c.denominator != 1 or c < 0:
                    raise CrossCheckError(f"monomial coefficient of {mu} is {c}, not a nonnegative integer")
                self._monomial[mu] = int(c)
            for mu in partitions_of(size(lam)):
                self._monomial.setdefault(mu, 0)
        return self._monomial[lam]

    def powersum_weight(self, lam) -> int:
        """The integer z_lam times the p_lam coefficient (a fixed-point count)."""
        lam = tuple(lam)
        c = self.values[size(lam)].coeff(lam) * z_of(lam)
        if c.denominator != 1 or c < 0:
            raise CrossCheckError(f"powersum weight of {lam} is {c}, not a nonnegative integer")
        return int(c)


def _split_by_degree(F: SymFunc, cap: int) -> list[SymFunc]:
    return [F.degree_part(n) for n in range(cap + 1)]


# ---------------------------------------------------------------------------
# route 1: the defining tower
# ---------------------------------------------------------------------------


def bell_tower(order: int, cap: int) -> BellTable:
    """Bell functions from the iterated plethystic exponential tower."""
    if order < 0 or cap < 0:
        raise ValueError("order and cap must be nonnegative")
    ctx = PlethysmContext(cap)
    G = SymFunc.basis_element("powersum", (1,), cap) if cap >= 1 else SymFunc.zero("powersum", cap)
    for _ in range(order):
        G = omega0(G, ctx)
    full = omega(G, ctx)
    return BellTable(order, cap, "tower", _split_by_degree(full, cap))


# ---------------------------------------------------------------------------
# route 2: plethysm recursion in the order
# ---------------------------------------------------------------------------


def bell_plethystic_recursion(order: int, cap: int) -> BellTable:
    """Build up in the order: the degree-n value at order m+1 collects, over
    partitions lam of n, the products of h_{m_j(lam)} plethystically applied
    to the order-m value of degree j."""
    ctx = PlethysmContext(cap)
    values = [to_powersum(SymFunc.basis_element("homogeneous", (n,) if n else (), cap)) for n in range(cap + 1)]
    for _ in range(order):
        prev = values
        values = [SymFunc.one("powersum", cap)]
        for n in range(1, cap + 1):
            total = SymFunc.zero("powersum", cap)
            for lam in partitions_of(n):
                prod = SymFunc.one("powersum", cap)
                for j, m in multiplicities(lam).items():
                    hm = SymFunc.basis_element("homogeneous", (m,), cap)
                    prod = prod * pleth(hm, prev[j], ctx)
                total = total + prod
            values.append(total.degree_part(n))
    return BellTable(order, cap, "plethystic", values)


# ---------------------------------------------------------------------------
# route 3: monomial coefficient recursion over vector partitions
# ---------------------------------------------------------------------------

_rho_memo: dict[tuple[int, Partition], int] = {}


def rho_recursion(order: int, lam, budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Monomial coefficient of the order-m Bell function, recursively.

    Depends only on the sorted form of lam; the order-0 value is 1.  One
    order step sums over vector partitions of lam (every part is bounded
    componentwise by lam, so the index set is finite) the product over
    distinct parts alpha of binomial(mult(alpha) + rho - 1, rho - 1) with
    rho the previous-order value at alpha.
    """
    lam = sort_parts(lam)
    if order == 0:
        return 1
    if order < 0:
        raise ValueError("order must be nonnegative")
    key = (order, lam)
    cached = _rho_memo.get(key)
    if cached is not None:
        return cached
    if not lam:
        value = 1
    else:
        value = 0
        for vp in enumerate_vector_partitions(lam, budget):
            prod = 1
            for alpha, mult in vp.part_multiplicities().items():
                r = rho_recursion(order - 1, sort_parts(alpha), budget)
                prod *= comb(mult + r - 1, r - 1)
                if prod == 0:
                    break
            value += prod
    _rho_memo[key] = value
    return value


def bell_monomial_recursion(order: int, cap: int, budget: int = DEFAULT_NODE_BUDGET) -> BellTable:
    values = []
    for n in range(cap + 1):
        terms = {lam: rho_recursion(order, lam, budget) for lam in partitions_of(n)}
        F = SymFunc("monomial", cap, terms)
        values.append(to_powersum(F))
    return BellTable(order, cap, "monomial-recursion", values)


# ---------------------------------------------------------------------------
# route 4: powersum coefficient recursion over multiset splits
# ---------------------------------------------------------------------------

_beta_memo: dict[tuple[int, Partition], int] = {}


def beta_recursion(order: int, lam) -> int:
    """z_lam-normalized powersum coefficient of the order-m Bell function.

    The order-0 value is 1 for every lam.  One order step sums, over
    unordered splits of lam into nonempty sub-partitions, the split
    multinomial times a divisor sum d^(len-1) * beta(mu/d) per block; the
    1/n! symmetry factors cancel exactly, and a non-integer result is
    reported as a bug.
    """
    lam = sort_parts(lam)
    if order == 0:
        return 1
    if order < 0:
        raise ValueError("order must be nonnegative")
    key = (order, lam)
    cached = _beta_memo.get(key)
    if cached is not None:
        return cached
    if not lam:
        value = 1
    else:
        total = Fraction(0)
        lam_mults = multiplicities(lam)
        for n in range(1, len(lam) + 1):
            for parts, ordered_count in multiset_splits(lam, n):
                multinomial = Fraction(1)
                for j, m in lam_mults.items():
                    multinomial *= factorial(m)
                prod = Fraction(ordered_count, factorial(n)) * multinomial
                for mu in parts:
                    for j, m in multiplicities(mu).items():
                        prod /= factorial(m)
                    g = gcd_parts(mu)
                    dsum = 0
                    for d in range(1, g + 1):
                        if g % d == 0:
                            dsum += d ** (len(mu) - 1) * beta_recursion(order - 1, divide(mu, d))
                    prod *= dsum
                    if prod == 0:
                        break
                total += prod
        if total.denominator != 1 or total < 0:
            raise CrossCheckError(f"beta({order}, {lam}) = {total} is not a nonnegative integer")
        value = int(total)
    _beta_memo[key] = value
    return value


def bell_powersum_recursion(order: int, cap: int) -> BellTable:
    values = []
    for n in range(cap + 1):
        terms = {lam: Fraction(beta_recursion(order, lam), z_of(lam)) for lam in partitions_of(n)}
        values.append(SymFunc("powersum", cap, terms))
    return BellTable(order, cap, "powersum-recursion", values)


# ---------------------------------------------------------------------------
# auxiliary divisor-sum functions and the order-1 convolution
# ---------------------------------------------------------------------------


def _sigma(r: int, m: int) -> Fraction:
    """Divisor power sum: sum of d^r over divisors d of m (r may be -1)."""
    total = Fraction(0)
    for d in range(1, m + 1):
        if m % d == 0:
            total += Fraction(d) ** r
    return total


@lru_cache(maxsize=None)
def h_function(n: int) -> SymFunc:
    """Auxiliary function H_n in the powersum basis.

    The p_lam coefficient is sigma_{len(lam)-1}(gcd lam) / z_lam; its
    monomial expansion must agree with the direct formula
    sum over lam of sigma_{-1}(gcd lam) * m_lam, and that agreement is
    asserted on every construction.
    """
    if n < 1:
        raise ValueError("H_n is defined for n >= 1")
    terms = {
        lam: _sigma(len(lam) - 1, gcd_parts(lam)) / z_of(lam)
        for lam in partitions_of(n)
    }
    F = SymFunc("powersum", n, terms)
    expected = h_function_monomial(n)
    if extract_basis(F, "monomial") != expected:
        raise CrossCheckError(f"H_{n}: powersum and monomial formulas disagree")
    return F


@lru_cache(maxsize=None)
def h_function_monomial(n: int) -> SymFunc:
    """H_n directly in the monomial basis: coefficient sigma_{-1}(gcd lam)."""
    terms = {lam: _sigma(-1, gcd_parts(lam)) for lam in partitions_of(n)}
    return SymFunc("monomial", n, terms)


def bell_convolution(cap: int) -> BellTable:
    """Order-1 Bell functions from the derivative convolution
    B_{n+1} = sum_k (n-k+1)/(n+1) * H_{n-k+1} * B_k."""
    values = [SymFunc.one("powersum", cap)]
    for n in range(cap):
        total = SymFunc.zero("powersum", cap)
        for k in range(n + 1):
            H = h_function(n - k + 1)
            H = SymFunc("powersum", cap, H.terms)
            total = total + (H * values[k]).scale(Fraction(n - k + 1, n + 1))
        values.append(total.degree_part(n + 1))
    return BellTable(1, cap, "convolution", values)


def bell_table(order: int, cap: int, route: str = "tower") -> BellTable:
    """Dispatch a Bell table build by route name."""
    if route == "tower":
        return bell_tower(order, cap)
    if route == "plethystic":
        return bell_plethystic_recursion(order, cap)
    if route == "monomial-recursion":
        return bell_monomial_recursion(order, cap)
    if route == "powersum-recursion":
        return bell_powersum_recursion(order, cap)
    if route == "convolution":
        if order != 1:
            raise ValueError("the convolution route is defined for order 1 only")
        return bell_convolution(cap)
    raise ValueError(f"unknown route {route!r}")


# ---------------------------------------------------------------------------
# Bell numbers
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def egf_bell_numbers(order: int, n_max: int) -> tuple[int, ...]:
    """b_0..b_{n_max} from the univariate tower of exp(t)-1 compositions."""
    if order < 0 or n_max < 0:
        raise ValueError("order and n_max must be nonnegative")
    E = exp_series(n_max)
    inner = exp_series(n_max)
    inner[0] = Fraction(0)
    for _ in range(order):
        E = series_compose(E, inner)
    out = []
    for n, c in enumerate(E):
        b = c * factorial(n)
        assert b.denominator == 1
        out.append(int(b))
    return tuple(out)


@lru_cache(maxsize=None)
def _tower_cached(order: int, cap: int) -> BellTable:
    return bell_tower(order, cap)


def bell_number(order: int, n: int) -> int:
    """Hall pairing of the degree-n Bell function against p_{1^n}.

    Cross-checked against the univariate tower of exponential generating
    functions; a mismatch raises CrossCheckError.
    """
    table = _tower_cached(order, n)
    p1n = SymFunc.basis_element("powersum", (1,) * n, n)
    paired = hall_inner(table.bell(n), p1n)
    egf = egf_bell_numbers(order, n)[n]
    if paired != egf:
        raise CrossCheckError(
            f"bell_number({order}, {n}): Hall pairing gives {paired}, EGF tower gives {egf}"
        )
    return egf


def psi_matches_egf(order: int, cap: int, table: BellTable | None = None) -> bool:
    """Termwise check that the p_1 specialization of the Bell functions
    reproduces the univariate tower."""
    if table is None:
        table = _tower_cached(order, cap)
    egf = egf_bell_numbers(order, cap)
    for n in range(cap + 1):
        coeffs = psi(table.bell(n))
        expect = [Fraction(0)] * (cap + 1)
        expect[n] = Fraction(egf[n], factorial(n))
        if coeffs[: cap + 1] != expect:
            return False
    return True
