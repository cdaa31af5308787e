"""Graded symmetric functions with exact coefficients.

A SymFunc is a sparse partition-keyed mapping tagged with one of the four
classical bases (monomial, homogeneous, powersum, schur), truncated at an
X-degree cap.  Coefficients are either exact rationals or truncated
polynomials in an auxiliary variable z (ZTrunc), which is what the
restriction-series computations need.

The internal canonical basis is powersum: the Hall pairing is diagonal
there and plethysm acts monomially.  Basis changes route through it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .partitions import (
    Partition,
    format_partition,
    parse_partition,
    partitions_of,
    size,
    sort_parts,
    z_of,
)

BASES = ("monomial", "homogeneous", "powersum", "schur")

# Multiplicative bases: b_lam * b_mu = b_{lam union mu}.
_MULTIPLICATIVE = ("homogeneous", "powersum")


class ZTrunc:
    """Polynomial in z truncated at a fixed degree cap, Fraction coefficients."""

    __slots__ = ("coeffs", "cap")

    def __init__(self, coeffs, cap: int):
        cs = [Fraction(c) for c in coeffs[: cap + 1]]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "cap", cap)

    def __setattr__(self, name, value):
        raise AttributeError("ZTrunc is immutable")

    @classmethod
    def const(cls, c, cap: int) -> ZTrunc:
        return cls((Fraction(c),), cap)

    @classmethod
    def monomial(cls, k: int, cap: int, c=1) -> ZTrunc:
        if k > cap:
            return cls((), cap)
        return cls((Fraction(0),) * k + (Fraction(c),), cap)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other) -> ZTrunc:
        if isinstance(other, ZTrunc):
            cap = min(self.cap, other.cap)
            n = max(len(self.coeffs), len(other.coeffs))
            return ZTrunc([self.coeff(k) + other.coeff(k) for k in range(n)], cap)
        return self + ZTrunc.const(other, self.cap)

    __radd__ = __add__

    def __neg__(self) -> ZTrunc:
        return ZTrunc([-c for c in self.coeffs], self.cap)

    def __sub__(self, other):
        return self + (-other if isinstance(other, ZTrunc) else ZTrunc.const(-Fraction(other), self.cap))

    def __mul__(self, other) -> ZTrunc:
        if isinstance(other, ZTrunc):
            cap = min(self.cap, other.cap)
            out = [Fraction(0)] * (cap + 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    if i + j > cap:
                        break
                    out[i + j] += a * b
            return ZTrunc(out, cap)
        c = Fraction(other)
        return ZTrunc([a * c for a in self.coeffs], self.cap)

    __rmul__ = __mul__

    def substitute_power(self, n: int) -> ZTrunc:
        """z -> z^n, truncated at the cap."""
        out = [Fraction(0)] * (self.cap + 1)
        for k, c in enumerate(self.coeffs):
            if n * k > self.cap:
                break
            out[n * k] += c
        return ZTrunc(out, self.cap)

    def __eq__(self, other) -> bool:
        return isinstance(other, ZTrunc) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"ZTrunc({list(self.coeffs)}, cap={self.cap})"


def _normalize_coeff(c, z_cap):
    """Coerce c to the coefficient domain fixed by z_cap; None if zero."""
    if z_cap is None:
        c = c if isinstance(c, Fraction) else Fraction(c)
        return c if c else None
    if not isinstance(c, ZTrunc):
        c = ZTrunc.const(c, z_cap)
    elif c.cap != z_cap:
        c = ZTrunc(c.coeffs, z_cap)
    return c if c else None


class SymFunc:
    """Immutable basis-tagged symmetric function truncated at degree_cap."""

    __slots__ = ("basis", "degree_cap", "z_cap", "terms")

    def __init__(self, basis: str, degree_cap: int, terms=None, z_cap=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        if degree_cap < 0:
            raise ValueError("degree_cap must be nonnegative")
        clean: dict[Partition, object] = {}
        for lam, c in (terms or {}).items():
            lam = tuple(lam)
            if size(lam) > degree_cap:
                continue
            c = _normalize_coeff(c, z_cap)
            if c is not None:
                clean[lam] = c
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "degree_cap", degree_cap)
        object.__setattr__(self, "z_cap", z_cap)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, basis: str, degree_cap: int, z_cap=None) -> SymFunc:
        return cls(basis, degree_cap, {}, z_cap)

    @classmethod
    def one(cls, basis: str, degree_cap: int, z_cap=None) -> SymFunc:
        return cls(basis, degree_cap, {(): 1}, z_cap)

    @classmethod
    def basis_element(cls, basis: str, lam, degree_cap: int, z_cap=None) -> SymFunc:
        lam = tuple(lam)
        if size(lam) > degree_cap:
            raise ValueError(f"|{lam}| exceeds degree cap {degree_cap}")
        return cls(basis, degree_cap, {lam: 1}, z_cap)

    # -- basic queries -----------------------------------------------------

    def coeff(self, lam):
        lam = tuple(lam)
        c = self.terms.get(lam)
        if c is not None:
            return c
        return Fraction(0) if self.z_cap is None else ZTrunc.const(0, self.z_cap)

    def is_zero(self) -> bool:
        return not self.terms

    def support_degrees(self) -> list[int]:
        return sorted({size(lam) for lam in self.terms})

    def degree_part(self, n: int) -> SymFunc:
        """Homogeneous degree-n slice (the z-grading is untouched)."""
        terms = {lam: c for lam, c in self.terms.items() if size(lam) == n}
        return SymFunc(self.basis, self.degree_cap, terms, self.z_cap)

    def sorted_terms(self):
        """Terms by degree, then reverse-lexicographic within a degree."""
        key = lambda item: (size(item[0]), tuple(-p for p in item[0]))
        return sorted(self.terms.items(), key=key)

    # -- ring operations ---------------------------------------------------

    def _merge_caps(self, other: SymFunc):
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        if (self.z_cap is None) != (other.z_cap is None):
            raise ValueError("coefficient domain mismatch (rational vs z-truncated)")
        cap = min(self.degree_cap, other.degree_cap)
        z_cap = None if self.z_cap is None else min(self.z_cap, other.z_cap)
        return cap, z_cap

    def __add__(self, other: SymFunc) -> SymFunc:
        cap, z_cap = self._merge_caps(other)
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, 0) + c
        return SymFunc(self.basis, cap, terms, z_cap)

    def __sub__(self, other: SymFunc) -> SymFunc:
        return self + (-other)

    def __neg__(self) -> SymFunc:
        return SymFunc(self.basis, self.degree_cap, {lam: -c for lam, c in self.terms.items()}, self.z_cap)

    def __mul__(self, other: SymFunc) -> SymFunc:
        if self.basis not in _MULTIPLICATIVE:
            raise ValueError(f"products require a multiplicative basis, not {self.basis}")
        cap, z_cap = self._merge_caps(other)
        terms: dict[Partition, object] = {}
        for lam, a in self.terms.items():
            for mu, b in other.terms.items():
                if size(lam) + size(mu) > cap:
                    continue
                key = tuple(sorted(lam + mu, reverse=True))
                terms[key] = terms.get(key, 0) + a * b
        return SymFunc(self.basis, cap, terms, z_cap)

    def scale(self, c) -> SymFunc:
        return SymFunc(self.basis, self.degree_cap, {lam: v * c for lam, v in self.terms.items()}, self.z_cap)

    def __eq__(self, other) -> bool:
        """Equality of basis tag and stored terms (caps are not compared)."""
        return isinstance(other, SymFunc) and self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"SymFunc({self.basis}, cap={self.degree_cap}, {len(self.terms)} terms)"

    # -- JSON --------------------------------------------------------------

    def to_json_dict(self) -> dict:
        if self.z_cap is not None:
            raise ValueError("JSON serialization is defined for rational coefficients only")
        return {
            "basis": self.basis,
            "degree_cap": self.degree_cap,
            "terms": [
                {"partition": format_partition(lam), "coeff": str(c)}
                for lam, c in self.sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> SymFunc:
        terms = {
            parse_partition(t["partition"]): Fraction(t["coeff"])
            for t in data["terms"]
        }
        return cls(data["basis"], data["degree_cap"], terms)

    @classmethod
    def from_json(cls, text: str) -> SymFunc:
        return cls.from_json_dict(json.loads(text))


# ---------------------------------------------------------------------------
# Character values (Murnaghan-Nakayama border-strip recursion)
# ---------------------------------------------------------------------------

_char_memo: dict[tuple[Partition, Partition], int] = {}


def char_value(lam: Partition, mu: Partition) -> int:
    """Irreducible symmetric-group character chi^lam evaluated at cycle type mu."""
    lam, mu = tuple(lam), tuple(mu)
    if size(lam) != size(mu):
        raise ValueError(f"|{lam}| != |{mu}|")
    return _char_rec(lam, mu)


def _char_rec(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1  # lam is empty too by the size guard
    key = (lam, mu)
    cached = _char_memo.get(key)
    if cached is not None:
        return cached
    r, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    bset = set(beta)
    total = 0
    for i, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((c for c in beta if c != b), reverse=True)
        newbeta.append(nb)
        newbeta.sort(reverse=True)
        nu = tuple(v - (ell - 1 - j) for j, v in enumerate(newbeta))
        nu = tuple(p for p in nu if p > 0)
        total += (-1) ** height * _char_rec(nu, rest)
    _char_memo[key] = total
    return total


@dataclass(frozen=True)
class CharacterTable:
    """All character values chi^lam(mu) for lam, mu of a fixed degree."""

    n: int
    values: dict[tuple[Partition, Partition], int]

    def chi(self, lam, mu) -> int:
        return self.values[(tuple(lam), tuple(mu))]


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    parts = partitions_of(n)
    values = {(lam, mu): char_value(lam, mu) for lam in parts for mu in parts}
    return CharacterTable(n, values)


# ---------------------------------------------------------------------------
# Kostka numbers and the inverse transition
# ---------------------------------------------------------------------------

_kostka_memo: dict[tuple[Partition, Partition], int] = {}


def kostka_number(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape lam and content mu.

    Invariant under reordering the content, so mu is canonicalized to a
    partition first.
    """
    lam = tuple(lam)
    mu = sort_parts(mu)
    if size(lam) != size(mu):
        return 0
    return _kostka_rec(lam, mu)


def _kostka_rec(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    key = (lam, mu)
    cached = _kostka_memo.get(key)
    if cached is not None:
        return cached
    strip, rest = mu[-1], mu[:-1]
    total = 0
    for nu in _horizontal_strip_removals(lam, strip):
        total += _kostka_rec(nu, rest)
    _kostka_memo[key] = total
    return total


def _horizontal_strip_removals(lam: Partition, k: int):
    """All nu with lam/nu a horizontal strip of size k."""
    ell = len(lam)
    out: list[Partition] = []

    def descend(i: int, remaining: int, prefix: list[int]) -> None:
        if remaining < 0:
            return
        if i == ell:
            if remaining == 0:
                out.append(tuple(p for p in prefix if p > 0))
            return
        lo = lam[i + 1] if i + 1 < ell else 0
        for v in range(lam[i], lo - 1, -1):
            prefix.append(v)
            descend(i + 1, remaining - (lam[i] - v), prefix)
            prefix.pop()

    descend(0, k, [])
    return out


@lru_cache(maxsize=None)
def kostka_matrix(n: int) -> dict[tuple[Partition, Partition], int]:
    """All Kostka numbers at degree n, keyed (shape, content)."""
    parts = partitions_of(n)
    return {(lam, mu): kostka_number(lam, mu) for lam in parts for mu in parts}


@lru_cache(maxsize=None)
def inverse_kostka(n: int) -> dict[tuple[Partition, Partition], int]:
    """Integer matrix expanding Schur functions over the homogeneous basis.

    Keyed (lam, mu): the coefficient of h_mu in s_lam.  It is the inverse of
    the Kostka transition in the sense that
    sum_nu inverse[lam, nu] * kostka[kappa, nu] = delta(lam, kappa):
    substituting h_nu = sum_kappa K[kappa, nu] s_kappa recovers s_lam.
    """
    parts = partitions_of(n)  # reverse-lex refines dominance: K is triangular
    K = kostka_matrix(n)
    inv: dict[tuple[Partition, Partition], int] = {}
    for lam in parts:
        row: dict[Partition, int] = {}
        for kappa in reversed(parts):
            val = (1 if kappa == lam else 0) - sum(
                row[mu] * K[(kappa, mu)] for mu in row
            )
            # K[kappa, kappa] == 1
            row[kappa] = val
        for mu in parts:
            inv[(lam, mu)] = row[mu]
    return inv


# ---------------------------------------------------------------------------
# Transition data for the monomial basis
# ---------------------------------------------------------------------------

_maps_memo: dict[tuple[Partition, Partition], int] = {}


def _count_part_maps(remaining: Partition, targets: Partition) -> int:
    """Number of maps from the part-positions of `remaining` onto coordinates
    with prescribed coordinate sums `targets`."""
    if not targets:
        return 1 if not remaining else 0
    key = (remaining, targets)
    cached = _maps_memo.get(key)
    if cached is not None:
        return cached
    goal, rest = targets[0], targets[1:]
    values = sorted(set(remaining), reverse=True)
    avail = {v: remaining.count(v) for v in values}
    total = 0

    def choose(vi: int, need: int, ways: int, taken: dict[int, int]) -> None:
        nonlocal total
        if need == 0:
            left = []
            for v in values:
                left.extend([v] * (avail[v] - taken.get(v, 0)))
            total += ways * _count_part_maps(tuple(left), rest)
            return
        if vi == len(values):
            return
        v = values[vi]
        max_take = min(avail[v], need // v)
        for t in range(max_take + 1):
            taken[v] = t
            choose(vi + 1, need - t * v, ways * comb(avail[v], t), taken)
        del taken[v]

    choose(0, goal, 1, {})
    _maps_memo[key] = total
    return total


@lru_cache(maxsize=None)
def powersum_to_monomial_row(lam: Partition) -> dict[Partition, int]:
    """Monomial expansion of p_lam: p_lam = sum_mu row[mu] * m_mu."""
    lam = tuple(lam)
    n = size(lam)
    row = {}
    for mu in partitions_of(n):
        cnt = _count_part_maps(lam, mu)
        if cnt:
            row[mu] = cnt
    return row


@lru_cache(maxsize=None)
def monomial_to_powersum_row(mu: Partition) -> dict[Partition, Fraction]:
    """Powersum expansion of m_mu, by inverting the p-to-m transition at |mu|."""
    mu = tuple(mu)
    n = size(mu)
    parts = partitions_of(n)
    # p_lam = sum_nu R[lam][nu] m_nu with R triangular in reverse-lex order
    # (merging parts moves up in dominance), diagonal prod m_j(lam)!.
    # Solve m_mu = sum_lam x_lam p_lam: the equation indexed by nu reads
    # sum_lam x_lam R[lam][nu] = delta(nu, mu) and only involves lam at
    # list position >= nu, so back-substitute from the end of the list.
    row: dict[Partition, Fraction] = {}
    for nu in reversed(parts):
        acc = Fraction(1 if nu == mu else 0)
        for lam, x in row.items():
            acc -= x * powersum_to_monomial_row(lam).get(nu, 0)
        x_nu = acc / powersum_to_monomial_row(nu)[nu]
        if x_nu:
            row[nu] = x_nu
    return row


# ---------------------------------------------------------------------------
# Cached powersum expansions of basis elements
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def h_in_powersum(n: int) -> dict[Partition, Fraction]:
    """h_n = sum over lam of p_lam / z_lam."""
    return {lam: Fraction(1, z_of(lam)) for lam in partitions_of(n)}


@lru_cache(maxsize=None)
def h_lambda_in_powersum(lam: Partition) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {(): Fraction(1)}
    for part in lam:
        nxt: dict[Partition, Fraction] = {}
        factor = h_in_powersum(part)
        for k1, c1 in out.items():
            for k2, c2 in factor.items():
                key = tuple(sorted(k1 + k2, reverse=True))
                nxt[key] = nxt.get(key, Fraction(0)) + c1 * c2
        out = nxt
    return out


@lru_cache(maxsize=None)
def schur_in_powersum(lam: Partition) -> dict[Partition, Fraction]:
    """s_lam = sum_mu chi^lam(mu)/z_mu p_mu."""
    lam = tuple(lam)
    out = {}
    for mu in partitions_of(size(lam)):
        chi = char_value(lam, mu)
        if chi:
            out[mu] = Fraction(chi, z_of(mu))
    return out


# ---------------------------------------------------------------------------
# Basis conversion and the Hall inner product
# ---------------------------------------------------------------------------


def to_powersum(F: SymFunc) -> SymFunc:
    """Re-express F in the powersum basis (exact)."""
    if F.basis == "powersum":
        return F
    terms: dict[Partition, object] = {}

    def accumulate(expansion: dict[Partition, Fraction], c) -> None:
        for mu, w in expansion.items():
            terms[mu] = terms.get(mu, 0) + c * w

    for lam, c in F.terms.items():
        if F.basis == "homogeneous":
            accumulate(h_lambda_in_powersum(lam), c)
        elif F.basis == "schur":
            accumulate(schur_in_powersum(lam), c)
        else:  # monomial
            accumulate(monomial_to_powersum_row(lam), c)
    return SymFunc("powersum", F.degree_cap, terms, F.z_cap)


def hall_inner(F: SymFunc, G: SymFunc):
    """Hall inner product; diagonal on the powersum basis with weights z_lam."""
    fp = to_powersum(F)
    gp = to_powersum(G)
    if len(fp.terms) > len(gp.terms):
        fp, gp = gp, fp
    total = 0
    for lam, a in fp.terms.items():
        b = gp.terms.get(lam)
        if b is not None:
            total = total + a * b * z_of(lam)
    if not isinstance(total, (Fraction, ZTrunc)):
        total = Fraction(total)
    return total


def extract_basis(F: SymFunc, target: str) -> SymFunc:
    """Re-express F in the target basis via Hall duality pairings.

    Monomial coefficients pair against h, homogeneous against m, Schur
    against s; everything is exact.
    """
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if target == F.basis:
        return F
    P = to_powersum(F)
    if target == "powersum":
        return P
    terms: dict[Partition, object] = {}
    for n in P.support_degrees():
        slice_terms = {lam: c for lam, c in P.terms.items() if size(lam) == n}
        Pn = SymFunc("powersum", P.degree_cap, slice_terms, P.z_cap)
        for lam in partitions_of(n):
            if target == "monomial":
                dual = h_lambda_in_powersum(lam)
            elif target == "homogeneous":
                dual = monomial_to_powersum_row(lam)
            else:
                dual = schur_in_powersum(lam)
            c = 0
            for mu, w in dual.items():
                b = Pn.terms.get(mu)
                if b is not None:
                    c = c + w * b * z_of(mu)
            if isinstance(c, int):
                c = Fraction(c)
            if c:
                terms[lam] = c
    return SymFunc(target, P.degree_cap, terms, P.z_cap)


def convert(F: SymFunc, target: str) -> SymFunc:
    """to_powersum / extract_basis in one call."""
    if target == "powersum":
        return to_powersum(F)
    return extract_basis(F, target)
