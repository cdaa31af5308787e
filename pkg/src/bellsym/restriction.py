"""Restriction series, their polynomial numerators, and stable limits.

For a partition lam, the generating series of the multiplicities of the
trivial-extended Specht modules inside the restricted highest-weight
representations becomes a polynomial after multiplication by (1 - z); the
polynomial is a signed combination of the vector-partition generating
polynomials through the inverse Kostka transition.  Its value at 1 is the
Schur coefficient of the degree-|lam| order-1 Bell function, and the
coefficient stream stabilizes there, which makes the Cesaro-average limit
an exact, finitely checkable statement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CrossCheckError
from .partitions import Partition, format_partition, partitions_of, size
from .plethysm import PlethysmContext, omega, pleth, z_shift
from .symfunc import SymFunc, ZTrunc, hall_inner, inverse_kostka, schur_in_powersum
from .unipoly import UniPoly
from .vectorpartitions import DEFAULT_NODE_BUDGET, f_poly, rho_direct

DEFAULT_CROSS_CHECK_CAP = 4


def restriction_poly(lam, budget: int = DEFAULT_NODE_BUDGET) -> UniPoly:
    """The polynomial (1 - z) times the restriction series of lam.

    Computed as the inverse-Kostka combination of the vector-partition
    generating polynomials; integer coefficients, degree at most |lam|.
    """
    lam = tuple(lam)
    n = size(lam)
    inv = inverse_kostka(n)
    P = UniPoly.zero()
    for mu in partitions_of(n):
        c = inv[(lam, mu)]
        if c:
            P = P + c * f_poly(mu, budget)
    if P.degree > n or not P.is_integral():
        raise CrossCheckError(f"(1-z)R for {lam}: unexpected numerator {P!r}")
    return P


def restriction_coeffs(
    lam,
    n_cap: int,
    cross_cap: int | None = None,
    budget: int = DEFAULT_NODE_BUDGET,
) -> list[int]:
    """Coefficients r_0..r_{n_cap} of the restriction series of lam.

    Expands the polynomial numerator against 1/(1 - z); the leading
    entries are cross-checked against the Hall pairing with the z-graded
    exponential of z times the full exponential, and a mismatch raises.
    """
    lam = tuple(lam)
    series = restriction_poly(lam, budget).geometric_quotient(n_cap)
    out = []
    for c in series:
        if c.denominator != 1 or c < 0:
            raise CrossCheckError(f"restriction coefficient {c} of {lam} is not a nonnegative integer")
        out.append(int(c))
    if cross_cap is None:
        cross_cap = min(n_cap, DEFAULT_CROSS_CHECK_CAP)
    cross_cap = min(cross_cap, n_cap)
    if cross_cap >= 0:
        cross = littlewood_coeffs(lam, cross_cap)
        if cross != out[: cross_cap + 1]:
            raise CrossCheckError(
                f"restriction coefficients of {lam} disagree with the plethysm route: "
                f"{out[:cross_cap + 1]} vs {cross}"
            )
    return out


def littlewood_coeffs(lam, n_cap: int, x_margin: int = 0) -> list[int]:
    """Restriction coefficients from the z-graded plethysm route.

    Builds the exponential of z times the full plethystic exponential at
    X-degree cap |lam| (pairing against s_lam only reads that degree) and
    z cap n_cap, then Hall-pairs with s_lam.
    """
    lam = tuple(lam)
    xcap = size(lam) + x_margin
    ctx = PlethysmContext(xcap, n_cap)
    full = omega(
        SymFunc.basis_element("powersum", (1,), xcap) if xcap >= 1 else SymFunc.zero("powersum", 0),
        PlethysmContext(xcap),
    )
    inner = z_shift(full, 1, n_cap)
    expanded = omega(inner, ctx)
    s_lam = SymFunc("powersum", xcap, schur_in_powersum(lam))
    paired = hall_inner(s_lam, expanded)
    if not isinstance(paired, ZTrunc):
        paired = ZTrunc.const(paired, n_cap)
    out = []
    for k in range(n_cap + 1):
        c = paired.coeff(k)
        if c.denominator != 1:
            raise CrossCheckError(f"non-integer restriction coefficient {c} for {lam}")
        out.append(int(c))
    return out


def general_restriction_coeff(mu, lam, x_margin: int = 0) -> int:
    """Stable restriction coefficient for an arbitrary Specht label mu:
    the Hall pairing of s_lam with s_mu evaluated at the plethystic
    exponential.  Small-case cross-check use only."""
    lam, mu = tuple(lam), tuple(mu)
    xcap = size(lam) + x_margin
    full = omega(
        SymFunc.basis_element("powersum", (1,), xcap) if xcap >= 1 else SymFunc.zero("powersum", 0),
        PlethysmContext(xcap),
    )
    s_mu = SymFunc.basis_element("schur", mu, max(size(mu), 1))
    image = pleth(s_mu, full, PlethysmContext(xcap))
    s_lam = SymFunc("powersum", xcap, schur_in_powersum(lam))
    c = hall_inner(s_lam, image)
    if c.denominator != 1 or c < 0:
        raise CrossCheckError(f"restriction coefficient ({mu}, {lam}) = {c}")
    return int(c)


def schur_residue(lam, budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Value of the polynomial numerator at z = 1: the inverse-Kostka
    combination of vector-partition counts.  Equals the Schur coefficient
    of the degree-|lam| order-1 Bell function; negativity would contradict
    Schur positivity and raises."""
    lam = tuple(lam)
    n = size(lam)
    inv = inverse_kostka(n)
    total = 0
    for mu in partitions_of(n):
        c = inv[(lam, mu)]
        if c:
            total += c * rho_direct(mu, budget)
    if total < 0:
        raise CrossCheckError(f"negative residue {total} at {lam}")
    return total


@dataclass(frozen=True)
class RestrictionReport:
    """Everything the CLI prints about one restriction series."""

    lam: Partition
    poly: UniPoly  # (1 - z) times the series
    coeffs: tuple[int, ...]  # r_0..r_horizon
    residue: int  # value at z = 1, the stable coefficient
    stabilization_index: int

    def tsv_row(self) -> str:
        pcoeffs = ",".join(str(int(c)) for c in self.poly.coeffs) if not self.poly.is_zero() else "0"
        return "\t".join(
            (
                format_partition(self.lam),
                pcoeffs,
                str(self.residue),
                str(self.stabilization_index),
            )
        )


def build_report(lam, horizon: int | None = None, budget: int = DEFAULT_NODE_BUDGET) -> RestrictionReport:
    lam = tuple(lam)
    n = size(lam)
    if horizon is None:
        horizon = max(2 * n, 10)
    horizon = max(horizon, n + 1)
    P = restriction_poly(lam, budget)
    coeffs = restriction_coeffs(lam, horizon, budget=budget)
    A = schur_residue(lam, budget)
    assert P(1) == A
    stab = 0
    for k in range(len(coeffs) - 1, -1, -1):
        if coeffs[k] != A:
            stab = k + 1
            break
    if stab > n + 1:
        raise CrossCheckError(f"stabilization index {stab} exceeds |lam|+1 for {lam}")
    return RestrictionReport(lam, P, tuple(coeffs), A, stab)


@dataclass(frozen=True)
class TauberianReport:
    """Cesaro averages of the restriction coefficients with an exact bound."""

    lam: Partition
    residue: int
    bound_constant: Fraction  # sum of k*|coeff_k| over the numerator
    averages: tuple[Fraction, ...]  # averages[i] = mean of r_0..r_{i-1}, i >= 1
    bound_holds: bool
    converged: bool


def tauberian_check(lam, horizon: int, budget: int = DEFAULT_NODE_BUDGET) -> TauberianReport:
    """Exact check that the running averages of the restriction
    coefficients approach the stable value with error at most C/n, where
    C is the degree-weighted absolute coefficient sum of the numerator."""
    lam = tuple(lam)
    n = size(lam)
    if horizon < n + 1:
        raise ValueError(f"horizon must be at least |lam|+1 = {n + 1}")
    P = restriction_poly(lam, budget)
    coeffs = restriction_coeffs(lam, horizon, budget=budget)
    A = schur_residue(lam, budget)
    C = sum((Fraction(k * abs(c)) for k, c in enumerate(P.coeffs)), Fraction(0))
    averages = []
    bound_holds = True
    total = 0
    for m in range(1, horizon + 1):
        total += coeffs[m - 1]
        avg = Fraction(total, m)
        averages.append(avg)
        if abs(avg - A) * m > C:
            bound_holds = False
    converged = bool(averages) and abs(averages[-1] - A) <= Fraction(C, horizon)
    return TauberianReport(lam, A, C, tuple(averages), bound_holds, converged)


def factorization_identity_holds(xcap: int, zcap: int) -> bool:
    """Termwise identity at joint caps: the exponential of z times the
    exponential-minus-one equals (1 - z) times the exponential of z times
    the full exponential."""
    ctx = PlethysmContext(xcap, zcap)
    p1 = SymFunc.basis_element("powersum", (1,), xcap)
    base = omega(p1, PlethysmContext(xcap))
    base0_terms = dict(base.terms)
    base0_terms.pop((), None)
    base0 = SymFunc("powersum", xcap, base0_terms)

    lhs = omega(z_shift(base0, 1, zcap), ctx)
    rhs_full = omega(z_shift(base, 1, zcap), ctx)
    one_minus_z = ZTrunc([1, -1], zcap)
    rhs = SymFunc(
        "powersum", xcap, {lam: one_minus_z * c for lam, c in rhs_full.terms.items()}, zcap
    )
    return lhs == rhs
