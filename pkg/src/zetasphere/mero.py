"""Divisor algebra and rational maps on the extended plane.

Rational maps live in factored (root) form: leading constant plus zero and
pole multisets.  That keeps divisors exact; coefficient expansion happens
only inside partial fractions and differentiation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import DegreeNotZero, DomainError
from .sphere import INFINITY, ExtendedPoint, is_infinity

ROOT_MATCH_TOL = 1e-9


# ---------------------------------------------------------------------------
# divisors


class Divisor:
    """Finite integer-weighted formal sum of extended points.

    Zero multiplicities are never stored; two divisors are equal iff their
    supports and multiplicities match exactly.
    """

    __slots__ = ("_support",)

    def __init__(self, support: Mapping[ExtendedPoint, int] | None = None):
        self._support: dict[ExtendedPoint, int] = {}
        if support:
            for point, mult in support.items():
                if mult == 0:
                    continue
                if not isinstance(mult, int):
                    raise DomainError("divisor multiplicities must be integers")
                key = point if is_infinity(point) else complex(point)
                self._support[key] = self._support.get(key, 0) + mult
                if self._support[key] == 0:
                    del self._support[key]

    def items(self):
        return self._support.items()

    def multiplicity(self, point: ExtendedPoint) -> int:
        key = point if is_infinity(point) else complex(point)
        return self._support.get(key, 0)

    def __eq__(self, other):
        return isinstance(other, Divisor) and self._support == other._support

    def __hash__(self):
        return hash(frozenset(self._support.items()))

    def __len__(self):
        return len(self._support)

    def __repr__(self):
        if not self._support:
            return "Divisor(0)"
        parts = [f"{m:+d}*[{p}]" for p, m in sorted(self._support.items(), key=lambda kv: str(kv[0]))]
        return "Divisor(" + " ".join(parts) + ")"


def divisor_add(a: Divisor, b: Divisor) -> Divisor:
    merged = dict(a.items())
    for p, m in b.items():
        merged[p] = merged.get(p, 0) + m
    return Divisor(merged)


def divisor_negate(a: Divisor) -> Divisor:
    return Divisor({p: -m for p, m in a.items()})


def divisor_degree(a: Divisor) -> int:
    return sum(m for _, m in a.items())


def divisor_leq(a: Divisor, b: Divisor) -> bool:
    points = {p for p, _ in a.items()} | {p for p, _ in b.items()}
    return all(a.multiplicity(p) <= b.multiplicity(p) for p in points)


def divisor_to_json(a: Divisor) -> list[dict]:
    out = []
    for p, m in a.items():
        if is_infinity(p):
            out.append({"point": "inf", "multiplicity": m})
        else:
            out.append({"point": {"re": p.real, "im": p.imag}, "multiplicity": m})
    out.sort(key=lambda row: str(row["point"]))
    return out


def divisor_from_json(rows: Iterable[dict]) -> Divisor:
    support: dict[ExtendedPoint, int] = {}
    for row in rows:
        p = row["point"]
        point = INFINITY if p == "inf" else complex(p["re"], p["im"])
        support[point] = support.get(point, 0) + int(row["multiplicity"])
    return Divisor(support)


# ---------------------------------------------------------------------------
# rational maps in factored form


@dataclass(frozen=True)
class RationalMap:
    """c * prod (z - z_i)^h_i / prod (z - p_j)^k_j with c != 0."""

    constant: complex
    zeros: tuple[tuple[complex, int], ...] = ()
    poles: tuple[tuple[complex, int], ...] = ()

    def __post_init__(self):
        if self.constant == 0:
            raise DomainError("RationalMap constant must be nonzero")
        for _, h in self.zeros + self.poles:
            if h < 1 or not isinstance(h, int):
                raise DomainError("multiplicities must be positive integers")
        for z, _ in self.zeros:
            for p, _ in self.poles:
                if abs(complex(z) - complex(p)) < ROOT_MATCH_TOL:
                    raise DomainError(f"point {z} appears among both zeros and poles")
        for group in (self.zeros, self.poles):
            for i, (a, _) in enumerate(group):
                for b, _ in group[i + 1 :]:
                    if abs(complex(a) - complex(b)) < ROOT_MATCH_TOL:
                        raise DomainError(
                            f"repeated point {a}; express repetition through multiplicity"
                        )

    @property
    def zero_count(self) -> int:
        return sum(h for _, h in self.zeros)

    @property
    def pole_count(self) -> int:
        return sum(k for _, k in self.poles)

    @property
    def degree(self) -> int:
        return max(self.zero_count, self.pole_count)


@dataclass(frozen=True)
class BranchData:
    """Degree plus ramification points (point, index e >= 2); total branching
    index b = sum (e - 1)."""

    degree: int
    ramification: tuple[tuple[ExtendedPoint, int], ...]
    total_b: int

    def __post_init__(self):
        if any(e < 2 for _, e in self.ramification):
            raise DomainError("ramification indices must be >= 2")
        if self.total_b != sum(e - 1 for _, e in self.ramification):
            raise DomainError("total_b must equal sum of (e - 1)")


def principal_divisor(f: RationalMap) -> Divisor:
    """Zeros positive, poles negative, order at infinity = poles - zeros;
    total degree identically 0."""
    support: dict[ExtendedPoint, int] = {}
    for z, h in f.zeros:
        support[complex(z)] = support.get(complex(z), 0) + h
    for p, k in f.poles:
        support[complex(p)] = support.get(complex(p), 0) - k
    inf_order = f.pole_count - f.zero_count
    if inf_order:
        support[INFINITY] = inf_order
    return Divisor(support)


def rational_from_divisor(d: Divisor, c: complex) -> RationalMap:
    """Inverse of principal_divisor up to the multiplicative constant c.

    Degree 0 already forces the infinity entry to match the finite entries,
    so the single check covers both stated preconditions.
    """
    if divisor_degree(d) != 0:
        raise DegreeNotZero(f"divisor degree {divisor_degree(d)} != 0")
    zeros = []
    poles = []
    for p, m in d.items():
        if is_infinity(p):
            continue
        if m > 0:
            zeros.append((complex(p), m))
        else:
            poles.append((complex(p), -m))
    return RationalMap(constant=complex(c), zeros=tuple(zeros), poles=tuple(poles))


def evaluate(f: RationalMap, point: ExtendedPoint) -> ExtendedPoint:
    """Value on the sphere: poles go to infinity; the value at infinity is
    c when zero and pole counts balance, else 0 or infinity by the count
    difference."""
    if is_infinity(point):
        diff = f.zero_count - f.pole_count
        if diff > 0:
            return INFINITY
        if diff < 0:
            return 0j
        return f.constant
    z = complex(point)
    for p, _ in f.poles:
        if z == complex(p):
            return INFINITY
    value = f.constant
    for zr, h in f.zeros:
        value *= (z - complex(zr)) ** h
    for p, k in f.poles:
        value /= (z - complex(p)) ** k
    return value


# ---------------------------------------------------------------------------
# coefficient-form helpers (ascending order)


def _poly_from_roots(roots: Iterable[tuple[complex, int]], lead: complex = 1.0 + 0j):
    coeffs = np.array([lead], dtype=complex)
    for root, mult in roots:
        for _ in range(mult):
            coeffs = np.convolve(coeffs, np.array([-complex(root), 1.0], dtype=complex))
    return coeffs


def _poly_trim(coeffs: np.ndarray, tol: float = 0.0) -> np.ndarray:
    scale = max(np.abs(coeffs).max(), 1.0)
    keep = len(coeffs)
    while keep > 1 and abs(coeffs[keep - 1]) <= tol * scale:
        keep -= 1
    return coeffs[:keep]

def _poly_eval(coeffs: np.ndarray, z: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _poly_derivative(coeffs: np.ndarray) -> np.ndarray:
    if len(coeffs) <= 1:
        return np.zeros(1, dtype=complex)
    return coeffs[1:] * np.arange(1, len(coeffs), dtype=complex)


def _taylor_at(coeffs: np.ndarray, center: complex, order: int) -> np.ndarray:
    """First `order` Taylor coefficients of the polynomial about center,
    by repeated synthetic division."""
    work = np.array(coeffs, dtype=complex)
    out = np.zeros(order, dtype=complex)
    for j in range(order):
        # divide work by (z - center): remainder is the Taylor coefficient
        rem = 0j
        for i in range(len(work) - 1, -1, -1):
            rem = rem * center + work[i]
        out[j] = rem
        if len(work) > 1:
            quot = np.zeros(len(work) - 1, dtype=complex)
            carry = work[-1]
            for i in range(len(work) - 2, -1, -1):
                quot[i] = carry
                carry = work[i] + carry * center
            work = quot
        else:
            work = np.zeros(1, dtype=complex)
    return out


def _series_divide(num: np.ndarray, den: np.ndarray, order: int) -> np.ndarray:
    if abs(den[0]) == 0:
        raise DomainError("series division by a series with zero constant term")
    out = np.zeros(order, dtype=complex)
    for m in range(order):
        acc = num[m] if m < len(num) else 0j
        for j in range(1, m + 1):
            dj = den[j] if j < len(den) else 0j
            acc -= dj * out[m - j]
        out[m] = acc / den[0]
    return out


# ---------------------------------------------------------------------------
# partial fractions


@dataclass(frozen=True)
class PartialFractions:
    """polynomial part (ascending coefficients) plus principal-part terms
    (pole, order j, coefficient of 1/(z - pole)^j)."""

    polynomial: tuple[complex, ...]
    terms: tuple[tuple[complex, int, complex], ...]

    def __call__(self, z: complex) -> complex:
        value = _poly_eval(np.array(self.polynomial, dtype=complex), z)
        for pole, order, coeff in self.terms:
            value += coeff / (z - pole) ** order
        return value


def partial_fractions(f: RationalMap) -> PartialFractions:
    """Unique presentation by poles: f = p(z) + sum c_ij / (z - p_i)^j."""
    num = _poly_from_roots(f.zeros, lead=f.constant)
    den = _poly_from_roots(f.poles)
    if len(num) >= len(den):
        # ascending-order long division: strip leading (highest) terms
        quot = np.zeros(len(num) - len(den) + 1, dtype=complex)
        rem = np.array(num, dtype=complex)
        for i in range(len(quot) - 1, -1, -1):
            factor = rem[i + len(den) - 1] / den[-1]
            quot[i] = factor
            rem[i : i + len(den)] -= factor * den
        rem = rem[: len(den) - 1] if len(den) > 1 else np.zeros(1, dtype=complex)
        poly = quot
    else:
        poly = np.zeros(1, dtype=complex)
        rem = num
    terms = []
    for p_i, k_i in f.poles:
        other = _poly_from_roots([(p, k) for p, k in f.poles if p != p_i])
        rem_taylor = _taylor_at(rem, p_i, k_i)
        other_taylor = _taylor_at(other, p_i, k_i)
        series = _series_divide(rem_taylor, other_taylor, k_i)
        for j in range(1, k_i + 1):
            coeff = series[k_i - j]
            if coeff != 0:
                terms.append((complex(p_i), j, complex(coeff)))
    return PartialFractions(polynomial=tuple(poly.tolist()), terms=tuple(terms))


# ---------------------------------------------------------------------------
# derivative, critical points, preimages


@dataclass(frozen=True)
class PolyQuotient:
    """Derivative of a rational map: numerator coefficients (ascending) over
    the squared pole factors (pole, order)."""

    numerator: tuple[complex, ...]
    poles: tuple[tuple[complex, int], ...]

    def __call__(self, z: complex) -> complex:
        value = _poly_eval(np.array(self.numerator, dtype=complex), z)
        for p, k in self.poles:
            value /= (z - p) ** k
        return value


def derivative(f: RationalMap) -> PolyQuotient:
    """(N' D - N D') / D^2 by the quotient rule, unreduced."""
    num = _poly_from_roots(f.zeros, lead=f.constant)
    den = _poly_from_roots(f.poles)
    dnum = _poly_derivative(num)
    dden = _poly_derivative(den)
    top = np.convolve(dnum, den)
    bottom = np.convolve(num, dden)
    width = max(len(top), len(bottom))
    top = np.pad(top, (0, width - len(top)))
    bottom = np.pad(bottom, (0, width - len(bottom)))
    numerator = _poly_trim(top - bottom, tol=1e-14)
    return PolyQuotient(
        numerator=tuple(numerator.tolist()),
        poles=tuple((complex(p), 2 * k) for p, k in f.poles),
    )


def _cluster_roots(roots: Iterable[complex]) -> list[tuple[complex, int]]:
    clusters: list[list[complex]] = []
    for r in sorted(roots, key=lambda z: (z.real, z.imag)):
        for group in clusters:
            anchor = group[0]
            if abs(r - anchor) <= ROOT_MATCH_TOL * max(1.0, abs(anchor)) * 100:
                group.append(r)
                break
        else:
            clusters.append([r])
    return [(sum(g) / len(g), len(g)) for g in clusters]


def critical_points(f: RationalMap) -> list[tuple[complex, int]]:
    """Finite critical points: roots (with multiplicity) of the numerator of
    f', minus the copies forced by repeated poles."""
    quot = derivative(f)
    num = _poly_trim(np.array(quot.numerator, dtype=complex), tol=1e-13)
    if len(num) <= 1:
        return []
    roots = np.roots(num[::-1])
    clustered = _cluster_roots(roots)
    out = []
    for point, mult in clustered:
        for p, k in f.poles:
            if k >= 2 and abs(point - complex(p)) <= ROOT_MATCH_TOL * max(1.0, abs(p)) * 100:
                mult -= k - 1
                break
        if mult > 0:
            out.append((point, mult))
    return out


def preimages(f: RationalMap, w: ExtendedPoint) -> list[tuple[ExtendedPoint, int]]:
    """Solutions of f(s) = w with multiplicity, infinity included."""
    if is_infinity(w):
        out: list[tuple[ExtendedPoint, int]] = [(complex(p), k) for p, k in f.poles]
        diff = f.zero_count - f.pole_count
        if diff > 0:
            out.append((INFINITY, diff))
        return out
    num = _poly_from_roots(f.zeros, lead=f.constant)
    den = _poly_from_roots(f.poles)
    width = max(len(num), len(den))
    num = np.pad(num, (0, width - len(num)))
    den = np.pad(den, (0, width - len(den)))
    poly = _poly_trim(num - complex(w) * den, tol=1e-14)
    nominal = f.degree
    out = []
    if len(poly) > 1:
        roots = np.roots(poly[::-1])
        out = [(complex(r), m) for r, m in _cluster_roots(roots)]
    drop = nominal - (len(poly) - 1)
    if drop > 0:
        out.append((INFINITY, drop))
    return out


# ---------------------------------------------------------------------------
# Riemann-Hurwitz / Riemann-Roch


def riemann_hurwitz_check(bd: BranchData, chi_domain: int, chi_codomain: int) -> bool:
    """chi(domain) = deg * chi(codomain) - b, and b must be even."""
    if bd.total_b % 2 != 0:
        return False
    return chi_domain == bd.degree * chi_codomain - bd.total_b


def riemann_roch_dims(d: Divisor) -> tuple[int, int]:
    """(l, i) on the genus-0 sphere: l = max(0, deg + 1), i = max(0, -deg - 1),
    so l - i = deg + 1."""
    deg = divisor_degree(d)
    return max(0, deg + 1), max(0, -deg - 1)


# ---------------------------------------------------------------------------
# the rational extension of the completed zeta


def build_zeta_hat(
    zero_pair_ordinate: float, anchor_value: complex
) -> tuple[RationalMap, BranchData]:
    """Degree-2 rational map with simple zeros 1/2 +- i t0, simple poles 0
    and 1, pointed so its value at 1/2 equals the supplied completed-zeta
    value there: c = -(1/4) anchor / prod(1/2 - z_i)."""
    t0 = float(zero_pair_ordinate)
    if t0 <= 0:
        raise DomainError("zero-pair ordinate must be positive")
    z_up = complex(0.5, t0)
    z_dn = complex(0.5, -t0)
    denom = (0.5 - z_up) * (0.5 - z_dn)  # = t0^2
    c = -0.25 * complex(anchor_value) / denom
    rmap = RationalMap(constant=c, zeros=((z_up, 1), (z_dn, 1)), poles=((0j, 1), (1 + 0j, 1)))
    crit = critical_points(rmap)
    ramification: list[tuple[ExtendedPoint, int]] = [(pt, m + 1) for pt, m in crit]
    value_at_inf = evaluate(rmap, INFINITY)
    inf_pre = preimages(rmap, value_at_inf)
    for point, mult in inf_pre:
        if is_infinity(point) and mult >= 2:
            ramification.append((INFINITY, mult))
    total_b = sum(e - 1 for _, e in ramification)
    bd = BranchData(degree=rmap.degree, ramification=tuple(ramification), total_b=total_b)
    return rmap, bd


def zeta_hat_params(rmap: RationalMap, bd: BranchData) -> dict:
    """JSON-ready parameter block for the CLI's extend command."""
    ram = []
    for point, e in bd.ramification:
        ram.append({"point": "inf" if is_infinity(point) else {"re": point.real, "im": point.imag},
                    "index": e})
    return {
        "constant": {"re": rmap.constant.real, "im": rmap.constant.imag},
        "zeros": [{"re": z.real, "im": z.imag, "multiplicity": h} for z, h in rmap.zeros],
        "poles": [{"re": p.real, "im": p.imag, "multiplicity": k} for p, k in rmap.poles],
        "divisor": divisor_to_json(principal_divisor(rmap)),
        "degree": bd.degree,
        "ramification": ram,
        "total_branching_index": bd.total_b,
    }
