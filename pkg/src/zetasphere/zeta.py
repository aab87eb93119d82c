"""Riemann zeta on all of C, the completed zeta, and Laurent machinery.

Evaluation strategy:

* Re(s) >= 1/2: binomial-accelerated alternating (eta) series divided by
  1 - 2^(1-s).  The acceleration is Borwein's d_k scheme with the
  coefficients computed in log space so the scheme stays usable out to
  |Im s| ~ 1000.
* Re(s) < 1/2: functional equation applied to the Re >= 1/2 value.  The
  switch sits at 1/2 (not 0) so both sides stay well conditioned.
* |1 - 2^(1-s)| < 1e-2 (the eta-denominator zeros on Re s = 1): direct
  Euler-Maclaurin summation.
* |s| < 1e-6: the 0*inf product sin(pi s/2) * zeta(1-s) is expanded so the
  limit value -1/2 comes out of the same formula instead of a 0 * pole.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError
from .specfun import DEFAULT_OPTIONS, EvalOptions, gamma, loggamma

# gamma_0 .. gamma_4, frozen from the multiprecision pre-build oracle
STIELTJES = (
    0.57721566490153286,
    -0.072815845483676725,
    -0.0096903631928723185,
    0.0020538344203033459,
    0.0023253700654673001,
)

_LN2 = math.log(2.0)
_ACCEL_RATE = math.log(3.0 + math.sqrt(8.0))
_ETA_FALLBACK_WINDOW = 1e-2
_SMALL_S_WINDOW = 1e-6


@dataclass(frozen=True)
class LaurentData:
    """Stieltjes coefficients gamma_0..gamma_K for the expansion at s = 1."""

    stieltjes: tuple[float, ...] = STIELTJES
    K: int = len(STIELTJES) - 1

    def __post_init__(self):
        if self.K != len(self.stieltjes) - 1 or self.K < 0:
            raise DomainError("K must equal len(stieltjes) - 1")
        if abs(self.stieltjes[0] - 0.57721) > 1e-5:
            raise DomainError("gamma_0 not within 1e-5 of 0.57721")


# ---------------------------------------------------------------------------
# eta series with binomial acceleration


@lru_cache(maxsize=32)
def _accel_coeffs(n: int):
    """(d_n - d_k)/d_n for Borwein's scheme, with log-space term sums, plus
    the cached log(k+1) table.  Quantized n keeps the cache small."""
    log_t = np.array(
        [
            math.lgamma(n + i) + i * math.log(4.0) - math.lgamma(n - i + 1) - math.lgamma(2 * i + 1)
            for i in range(n + 1)
        ]
    )
    t = np.exp(log_t - log_t.max())
    csum = np.cumsum(t)
    ek = (csum[-1] - csum[:-1]) / csum[-1]
    signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    return signs * ek, np.log(np.arange(1.0, n + 1.0))


def _accel_terms_needed(t_abs: float, tol: float) -> int:
    n = (math.pi * t_abs / 2 + math.log(3.0 * (1 + 2 * t_abs)) - math.log(tol)) / _ACCEL_RATE
    n = int(n) + 8
    return ((n + 31) // 32) * 32


def eta_eval(s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Dirichlet eta sum of (-1)^(n+1) / n^s for Re(s) > 0, accelerated."""
    s = complex(s)
    if s.real <= 0:
        raise DomainError(f"eta series requires Re(s) > 0, got {s}")
    n = _accel_terms_needed(abs(s.imag), opts.tolerance)
    if n > opts.max_terms:
        raise ConvergenceError(
            f"eta at {s} needs {n} accelerated terms > max_terms {opts.max_terms}"
        )
    coeffs, logk = _accel_coeffs(n)
    return complex(np.sum(coeffs * np.exp(-s * logk)))


def _eta_unrestricted(s: complex, tol: float = 1e-14) -> complex:
    """Internal eta path without the Re(s) > 0 precondition (the accelerated
    sum keeps converging on a neighbourhood of the closed strip)."""
    n = _accel_terms_needed(abs(s.imag), tol)
    if n > 10**7:
        raise ConvergenceError(f"eta acceleration impractical at {s}")
    coeffs, logk = _accel_coeffs(n)
    return complex(np.sum(coeffs * np.exp(-s * logk)))


# ---------------------------------------------------------------------------
# Euler-Maclaurin fallback (eta-denominator zeros s = 1 + 2 pi i k / ln 2)


def _zeta_euler_maclaurin(s: complex, m: int = 12) -> complex:
    n_cut = max(30, int(1.3 * abs(s.imag)))
    n = np.arange(1, n_cut + 1)
    total = complex(np.sum(np.exp(-s * np.log(n))))
    ln_n = math.log(n_cut)
    total += cmath.exp((1 - s) * ln_n) / (s - 1) - 0.5 * cmath.exp(-s * ln_n)
    rising = s
    for k in range(1, m + 1):
        coef = float(bernoulli_exact(2 * k)) / math.factorial(2 * k)
        total += coef * rising * cmath.exp((1 - s - 2 * k) * ln_n)
        rising = rising * (s + 2 * k - 1) * (s + 2 * k)
    return total


# ---------------------------------------------------------------------------
# zeta proper


def _laurent_regular_part(h: complex, data: LaurentData) -> complex:
    """sum (-1)^n gamma_n h^n / n!, the regular part of zeta at 1."""
    total = 0j
    hp = 1.0 + 0j
    for n_, g in enumerate(data.stieltjes):
        total += ((-1) ** n_) * g * hp / math.factorial(n_)
        hp *= h
    return total


def _zeta_small_s(s: complex) -> complex:
    # f(s) * zeta(1-s) with sin(pi s/2) = (pi s / 2) * w(s) and
    # zeta(1-s) = -1/s + P(-s); the 1/s cancels against the sin zero.
    w = 1.0 if s == 0 else cmath.sin(math.pi * s / 2) / (math.pi * s / 2)
    p = _laurent_regular_part(-s, LaurentData())
    prefactor = 2**s * math.pi ** (s - 1) * gamma(1 - s)
    return (math.pi / 2) * w * prefactor * (s * p - 1.0)


def _zeta_right_half(s: complex) -> complex:
    denom = 1.0 - 2 ** (1 - s)
    if abs(denom) < _ETA_FALLBACK_WINDOW:
        return _zeta_euler_maclaurin(s)
    return _eta_unrestricted(s) / denom


def zeta_eval(s: complex) -> complex:
    """zeta(s) anywhere except the simple pole at s = 1 (residue 1)."""
    s = complex(s)
    if abs(s - 1) < 1e-12:
        raise PoleError(1.0, residue=1.0)
    if s.real >= 0.5:
        return _zeta_right_half(s)
    if abs(s) < _SMALL_S_WINDOW:
        return _zeta_small_s(s)
    return _f_factor_raw(s) * _zeta_right_half(1 - s)


def _f_factor_raw(s: complex) -> complex:
    return 2**s * math.pi ** (s - 1) * cmath.sin(math.pi * s / 2) * gamma(1 - s)


def functional_rhs(s: complex) -> complex:
    """Right side of the functional equation: f(s) * zeta(1-s).

    DomainError where any factor is at a pole (s a positive integer puts
    Gamma(1-s) at a pole; s = 0 puts zeta(1-s) at its pole).  Even positive
    integers resolve the resulting 0*inf through even_limit_probe instead.
    """
    s = complex(s)
    if abs(s.imag) <= 1e-12:
        r = round(s.real)
        if r >= 1 and abs(s.real - r) <= 1e-12:
            raise DomainError(f"Gamma(1-s) pole at s={s}; use even_limit_probe for even s")
        if abs(s.real) <= 1e-12:
            raise DomainError("zeta(1-s) pole at s=0; zeta_eval takes the limit")
    return _f_factor_raw(s) * zeta_eval(1 - s)


def even_limit_probe(n: int) -> complex:
    """Resolve the 0*inf in f(s) zeta(1-s) at s = 2n by Richardson
    extrapolation over eps in {1e-3, 5e-4, 2.5e-4}."""
    if not 1 <= n <= 10:
        raise DomainError("even_limit_probe supports 1 <= n <= 10")
    values = []
    for eps in (1e-3, 5e-4, 2.5e-4):
        s = 2 * n + eps
        values.append(_f_factor_raw(s) * zeta_eval(1 - s))
    r01 = 2 * values[1] - values[0]
    r12 = 2 * values[2] - values[1]
    out = (4 * r12 - r01) / 3
    if not (math.isfinite(out.real) and math.isfinite(out.imag)):
        raise ConvergenceError("even_limit_probe extrapolation diverged")
    return out


def completed_log_prefactor(s: complex) -> complex:
    """log(pi^(-s/2) Gamma(s/2)); shared by completed_zeta and the zero
    scanner's sign kernel."""
    return loggamma(s / 2) - (s / 2) * math.log(math.pi)


def completed_zeta(s: complex) -> complex:
    """pi^(-s/2) Gamma(s/2) zeta(s); poles at 0 and 1.

    At negative even integers the Gamma pole cancels the trivial zero; the
    finite limit is taken through the reflected point, where both factors
    are regular.
    """
    s = complex(s)
    if abs(s) < 1e-12:
        raise PoleError(0.0)
    if abs(s - 1) < 1e-12:
        raise PoleError(1.0)
    half = s / 2
    if abs(half.imag) <= 1e-9 and half.real < 0.5 and abs(half.real - round(half.real)) <= 1e-9:
        s = 1 - s
    return cmath.exp(completed_log_prefactor(s)) * zeta_eval(s)


# ---------------------------------------------------------------------------
# exact even values (Table reproduction) and Euler product


@lru_cache(maxsize=None)
def _bernoulli_through(m: int) -> tuple[Fraction, ...]:
    out = [Fraction(1)]
    for n in range(1, m + 1):
        acc = Fraction(0)
        for k in range(n):
            acc += Fraction(math.comb(n + 1, k)) * out[k]
        out.append(-acc / (n + 1))
    return tuple(out)


def bernoulli_exact(n: int) -> Fraction:
    """Bernoulli number B_n as an exact rational (B_1 = -1/2 convention)."""
    if n < 0:
        raise DomainError("Bernoulli index must be >= 0")
    return _bernoulli_through(max(n, 30))[n]


def even_zeta_rational(k: int) -> Fraction:
    """Exact alpha with zeta(k) = alpha * pi^k for even 0 <= k <= 30.

    alpha = (-1)^(k/2 + 1) B_k 2^k / (2 k!); k = 0 gives -1/2.
    """
    if k < 0 or k % 2 != 0 or k > 30:
        raise DomainError("even_zeta_rational requires even k with 0 <= k <= 30")
    n = k // 2
    b = bernoulli_exact(k)
    return Fraction((-1) ** (n + 1)) * b * Fraction(2**k, 2 * math.factorial(k))


def primes_below(bound: int) -> list[int]:
    if bound < 3:
        return []
    sieve = bytearray([1]) * bound
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(bound**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(range(p * p, bound, p))
    return [i for i, flag in enumerate(sieve) if flag]


def euler_product_partial(s: complex, prime_bound: int = 10**4) -> complex:
    """prod over primes p < prime_bound of 1/(1 - p^-s); needs Re(s) > 1."""
    s = complex(s)
    if s.real <= 1:
        raise DomainError("Euler product requires Re(s) > 1")
    out = 1.0 + 0j
    for p in primes_below(prime_bound):
        out /= 1.0 - cmath.exp(-s * math.log(p))
    return out


# ---------------------------------------------------------------------------
# Stieltjes constants and the Laurent series


def stieltjes_gamma(k: int) -> float:
    """gamma_k extracted from zeta(1+h) - 1/h sampled on circles around 0.

    Two radii must agree to 1e-7 or the extraction is declared failed;
    guaranteed absolute accuracy 1e-5 (measured ~1e-12).
    """
    if not 0 <= k <= 4:
        raise DomainError("stieltjes_gamma supports 0 <= k <= 4")

    def coeff(radius: float, samples: int) -> complex:
        acc = 0j
        for j in range(samples):
            theta = 2 * math.pi * j / samples
            h = radius * cmath.exp(1j * theta)
            g = zeta_eval(1 + h) - 1 / h
            acc += g * cmath.exp(-1j * k * theta)
        return acc / (samples * radius**k)

    a1 = coeff(0.5, 64)
    a2 = coeff(0.25, 64)
    if abs(a1 - a2) > 1e-7:
        raise ConvergenceError(f"stieltjes_gamma({k}) radii disagree: {a1} vs {a2}")
    return ((-1) ** k) * math.factorial(k) * a2.real


def laurent_eval(s: complex, data: LaurentData | None = None) -> complex:
    """Laurent expansion 1/(s-1) + sum (-1)^n gamma_n (s-1)^n / n! on the
    punctured unit disk around 1."""
    data = data if data is not None else LaurentData()
    s = complex(s)
    h = s - 1
    if abs(h) < 1e-12:
        raise PoleError(1.0, residue=1.0)
    if abs(h) >= 1:
        raise DomainError("laurent_eval valid only for 0 < |s-1| < 1")
    return 1 / h + _laurent_regular_part(h, data)
