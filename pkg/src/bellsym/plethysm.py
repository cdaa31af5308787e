"""Plethystic substitution, the plethystic exponential, and the p_1 specialization.

Everything here works on the powersum basis, where p_n acts monomially:
p_n sends a term c * z^k * p_mu to c * z^(n*k) * p_(n*mu).  Substitutions
where both the outer function is an infinite series and the inner one has
a nonzero rational constant term are undefined and rejected; the only
constant terms admitted are polynomials in z, and the exponential
additionally demands that their z^0 part vanish.

Internally, z-carrying symmetric functions are flattened to dicts keyed by
(partition, z-power) so that the joint (X, z) grading is explicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import Partition, size
from .symfunc import SymFunc, ZTrunc, to_powersum

Flat = dict[tuple[Partition, int], Fraction]


@dataclass(frozen=True)
class PlethysmContext:
    """Truncation caps: X-degree, and z-degree when coefficients carry z."""

    degree_cap: int
    z_cap: int | None = None

    def __post_init__(self):
        if self.degree_cap < 0 or (self.z_cap is not None and self.z_cap < 0):
            raise ValueError("caps must be nonnegative")


# ---------------------------------------------------------------------------
# flattening between SymFunc and (partition, z-power) dicts
# ---------------------------------------------------------------------------


def _flatten(F: SymFunc) -> Flat:
    flat: Flat = {}
    for lam, c in F.terms.items():
        if isinstance(c, ZTrunc):
            for k, ck in enumerate(c.coeffs):
                if ck:
                    flat[(lam, k)] = ck
        else:
            if c:
                flat[(lam, 0)] = c
    return flat


def _unflatten(flat: Flat, degree_cap: int, z_cap) -> SymFunc:
    if z_cap is None:
        terms = {lam: c for (lam, k), c in flat.items() if k == 0}
        assert len(terms) == len(flat), "z-powers present but no z cap given"
        return SymFunc("powersum", degree_cap, terms, None)
    grouped: dict[Partition, list[Fraction]] = {}
    for (lam, k), c in flat.items():
        grouped.setdefault(lam, [Fraction(0)] * (z_cap + 1))[k] += c
    terms = {lam: ZTrunc(cs, z_cap) for lam, cs in grouped.items()}
    return SymFunc("powersum", degree_cap, terms, z_cap)


def _weight(key: tuple[Partition, int]) -> int:
    return size(key[0]) + key[1]


def _flat_mul(a: Flat, b: Flat, xcap: int, zcap: int) -> Flat:
    out: Flat = {}
    for (l1, k1), c1 in a.items():
        for (l2, k2), c2 in b.items():
            if size(l1) + size(l2) > xcap or k1 + k2 > zcap:
                continue
            key = (tuple(sorted(l1 + l2, reverse=True)), k1 + k2)
            val = out.get(key, Fraction(0)) + c1 * c2
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


def _flat_exp(a: Flat, xcap: int, zcap: int) -> Flat:
    """exp(a) truncated, via the Euler-derivative recurrence on joint weight.

    Requires every term of `a` to have joint weight >= 1, which makes the
    exponential summable degree by degree.
    """
    by_weight: dict[int, Flat] = {}
    for key, c in a.items():
        w = _weight(key)
        if w == 0:
            raise ValueError("exponential of a series with a constant term")
        by_weight.setdefault(w, {})[key] = c
    top = xcap + zcap
    E: dict[int, Flat] = {0: {((), 0): Fraction(1)}}
    for w in range(1, top + 1):
        comp: Flat = {}
        for j, aj in by_weight.items():
            if j > w:
                continue
            ej = E.get(w - j)
            if not ej:
                continue
            for key, c in _flat_mul(aj, ej, xcap, zcap).items():
                comp[key] = comp.get(key, Fraction(0)) + j * c
        Ew = {key: c / w for key, c in comp.items() if c}
        if Ew:
            E[w] = Ew
    out: Flat = {}
    for flat in E.values():
        out.update(flat)
    return out


def _p_n(flat: Flat, n: int, xcap: int, zcap: int) -> Flat:
    """Image of the flattened series under p_n: exponents scale by n."""
    out: Flat = {}
    for (lam, k), c in flat.items():
        nl = tuple(n * p for p in lam)
        if size(nl) > xcap or n * k > zcap:
            continue
        key = (nl, n * k)
        out[key] = out.get(key, Fraction(0)) + c
    return {k: c for k, c in out.items() if c}


def _min_weight(flat: Flat) -> int:
    return min((_weight(k) for k in flat), default=0)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def pleth(F: SymFunc, G: SymFunc, ctx: PlethysmContext | None = None) -> SymFunc:
    """Plethystic substitution F(G), truncated to the context caps.

    F is taken at face value as a finitely supported symmetric function
    with rational coefficients.  G may have a constant term only if it is
    a polynomial in z (the z^0 part included); substituting a genuinely
    infinite F into such a G is the undefined case and must go through
    omega() instead, which enforces its own domain check.
    """
    if F.z_cap is not None:
        raise ValueError("the outer function of a plethysm must have rational coefficients")
    if ctx is None:
        ctx = PlethysmContext(min(F.degree_cap, G.degree_cap), G.z_cap)
    xcap = ctx.degree_cap
    out_z_cap = G.z_cap if ctx.z_cap is None else ctx.z_cap
    if G.z_cap is None and ctx.z_cap is None:
        out_z_cap = None
    zcap = 0 if out_z_cap is None else out_z_cap

    fp = to_powersum(F)
    gflat = _flatten(to_powersum(G))
    g_min = _min_weight(gflat)

    images: dict[int, Flat] = {}

    def p_image(n: int) -> Flat:
        img = images.get(n)
        if img is None:
            img = _p_n(gflat, n, xcap, zcap)
            # truncation safety: p_n raises the joint grading n-fold
            assert _min_weight(img) >= n * g_min or not img
            images[n] = img
        return img

    acc: Flat = {}
    one: Flat = {((), 0): Fraction(1)}
    for lam, c in fp.terms.items():
        term = one
        for part in lam:
            term = _flat_mul(term, p_image(part), xcap, zcap)
            if not term:
                break
        for key, v in term.items():
            acc[key] = acc.get(key, Fraction(0)) + c * v
    acc = {k: v for k, v in acc.items() if v}
    return _unflatten(acc, xcap, out_z_cap)


def omega(G: SymFunc, ctx: PlethysmContext) -> SymFunc:
    """Plethystic exponential exp(sum_n p_n(G)/n) of G, truncated.

    G must have no constant term in the X-grading, except possibly a pure
    z-polynomial whose z^0 coefficient vanishes; a nonzero rational
    constant makes the exponential meaningless and is rejected.
    """
    gp = to_powersum(G)
    const = gp.terms.get(())
    if const is not None:
        rational_part = const.coeff(0) if isinstance(const, ZTrunc) else const
        if rational_part:
            raise ValueError("the exponential of a series with a nonzero rational constant term is undefined")
    xcap = ctx.degree_cap
    out_z_cap = G.z_cap if ctx.z_cap is None else ctx.z_cap
    if G.z_cap is None and ctx.z_cap is None:
        out_z_cap = None
    zcap = 0 if out_z_cap is None else out_z_cap

    gflat = _flatten(gp)
    arg: Flat = {}
    for n in range(1, xcap + zcap + 1):
        img = _p_n(gflat, n, xcap, zcap)
        for key, c in img.items():
            arg[key] = arg.get(key, Fraction(0)) + c / n
    arg = {k: c for k, c in arg.items() if c}
    return _unflatten(_flat_exp(arg, xcap, zcap), xcap, out_z_cap)


def omega0(G: SymFunc, ctx: PlethysmContext) -> SymFunc:
    """omega(G) with the leading 1 removed."""
    full = omega(G, ctx)
    terms = dict(full.terms)
    const = terms.get(())
    if const is not None:
        const = const - (ZTrunc.const(1, full.z_cap) if isinstance(const, ZTrunc) else 1)
        if const:
            terms[()] = const
        else:
            del terms[()]
    return SymFunc("powersum", full.degree_cap, terms, full.z_cap)


def z_shift(F: SymFunc, k: int, z_cap: int) -> SymFunc:
    """Multiply every coefficient of F by z^k, moving to the z domain."""
    if F.z_cap is not None:
        raise ValueError("z_shift expects rational coefficients")
    zk = ZTrunc.monomial(k, z_cap)
    terms = {lam: zk * c for lam, c in F.terms.items()}
    return SymFunc(F.basis, F.degree_cap, terms, z_cap)


def psi(F: SymFunc) -> list[Fraction]:
    """Specialization killing p_m for m > 1: coefficients of p_1^k for k <= cap."""
    if F.z_cap is not None:
        raise ValueError("psi expects rational coefficients")
    fp = to_powersum(F)
    out = [Fraction(0)] * (F.degree_cap + 1)
    for lam, c in fp.terms.items():
        if all(p == 1 for p in lam):
            out[len(lam)] = c
    return out
