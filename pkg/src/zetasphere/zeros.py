"""Critical-line zero location and argument-principle rectangle counting.

The scanner works on the real-valued restriction of the completed zeta to
the critical line.  Sign changes are detected on a uniform grid, then each
bracket is tightened by a secant/bisection hybrid.  An independent count of
zeros inside a rectangle comes from the winding of the completed zeta along
the boundary (trapezoid quadrature of the log-derivative with adaptive
halving, phase-step guarded).
"""

from __future__ import annotations

import cmath
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import (
    ConvergenceError,
    DomainError,
    NoSignChange,
    PhaseJumpError,
    RealnessViolation,
)
from .modulus import criterion_ratio
from .zeta import completed_log_prefactor, completed_zeta, zeta_eval

BRACKET_TOLERANCE = 1e-9
RESIDUAL_BOUND = 1e-8
CRITERION_RADIUS = 1e-4
CSV_HEADER = "# zetasphere v0.1.0"


@dataclass(frozen=True)
class ZeroRecord:
    """A located critical-line zero: its ordinate t (zero at 1/2 + it),
    the final refinement bracket, |completed zeta| residual there, and the
    criterion-ratio value (1 exactly when the zero sits on the line)."""

    ordinate: float
    bracket: tuple[float, float]
    residual: float
    criterion: float


@dataclass(frozen=True)
class Rectangle:
    x_min: float
    x_max: float
    y_min: float
    y_max: float

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise DomainError("Rectangle needs x_min < x_max")
        if not 0.0 < self.y_min < self.y_max:
            raise DomainError("Rectangle needs 0 < y_min < y_max (poles sit at y=0)")


def z_real(t: float) -> float:
    """Re of the completed zeta at 1/2 + it, with a realness audit.

    The imaginary residual must stay below 1e-10 (1 + |Re|); anything larger
    means the evaluator itself broke, so it raises rather than returns.
    """
    s = complex(0.5, t)
    a = completed_log_prefactor(s)
    zv = zeta_eval(s)
    w = cmath.exp(a) * zv
    if abs(w.imag) > 1e-10 * (1.0 + abs(w.real)):
        raise RealnessViolation(
            f"Im completed zeta at t={t} is {w.imag:.3e}, beyond the realness bound"
        )
    return w.real


def _sign_kernel(t: float) -> float:
    """Same sign as z_real(t) with the positive e^(Re log-prefactor) factor
    stripped, so the scan keeps a usable signal where the completed zeta
    underflows (t beyond ~900)."""
    s = complex(0.5, t)
    a = completed_log_prefactor(s)
    zv = zeta_eval(s)
    return math.cos(a.imag) * zv.real - math.sin(a.imag) * zv.imag


def _refine_bracket(a: float, b: float) -> tuple[float, float]:
    fa = _sign_kernel(a)
    fb = _sign_kernel(b)
    if fa == 0.0:
        return a, a
    if fb == 0.0:
        return b, b
    if fa * fb > 0:
        raise NoSignChange(f"no sign change of Z across ({a}, {b})")
    while b - a > BRACKET_TOLERANCE:
        # secant proposal, bisection whenever it lands outside or stalls
        m = a - fa * (b - a) / (fb - fa)
        lo, hi = a + 0.1 * (b - a), b - 0.1 * (b - a)
        if not lo <= m <= hi:
            m = 0.5 * (a + b)
        fm = _sign_kernel(m)
        if fm == 0.0:
            return m, m
        if fa * fm < 0:
            b, fb = m, fm
        else:
            a, fa = m, fm
    return a, b


def refine_zero(bracket: tuple[float, float]) -> ZeroRecord:
    """Tighten a sign-change bracket to width < 1e-9 and record residual and
    criterion value at the located ordinate."""
    a, b = bracket
    if not a < b:
        raise DomainError("bracket must be an increasing pair")
    a, b = _refine_bracket(a, b)
    t = 0.5 * (a + b)
    residual = abs(completed_zeta(complex(0.5, t)))
    criterion = criterion_ratio(complex(0.5, abs(t)), CRITERION_RADIUS)
    return ZeroRecord(ordinate=t, bracket=(a, b), residual=residual, criterion=criterion)


def _scan_chunk(args: tuple[float, float, int, int]) -> list[tuple[float, float]]:
    t0, step, i_start, i_stop = args
    brackets = []
    prev_t = t0 + i_start * step
    prev_v = _sign_kernel(prev_t)
    for i in range(i_start + 1, i_stop + 1):
        t = t0 + i * step
        v = _sign_kernel(t)
        if prev_v == 0.0:
            brackets.append((prev_t, prev_t))
        elif prev_v * v < 0:
            brackets.append((prev_t, t))
        prev_t, prev_v = t, v
    return brackets


def scan_zeros(t0: float, t1: float, step: float, workers: int = 1) -> list[ZeroRecord]:
    """Detect and refine all sign changes of Z on the grid t0, t0+step, ...

    Chunks of the shared grid may be scanned by separate processes; results
    merge deterministically by ordinate.
    """
    if not (0.0 <= t0 < t1 <= 1000.0):
        raise DomainError("scan range must satisfy 0 <= t0 < t1 <= 1000")
    if not 0.01 <= step <= 1.0:
        raise DomainError("scan step must lie in [0.01, 1]")
    n_steps = int(math.floor((t1 - t0) / step + 1e-9))
    if n_steps < 1:
        return []
    if workers <= 1:
        brackets = _scan_chunk((t0, step, 0, n_steps))
    else:
        chunk = max(1, n_steps // workers)
        jobs = []
        i = 0
        while i < n_steps:
            jobs.append((t0, step, i, min(i + chunk, n_steps)))
            i += chunk
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk, jobs))
        brackets = [b for part in parts for b in part]
    records = [refine_zero(b) if b[0] < b[1] else _exact_hit(b[0]) for b in brackets]
    records.sort(key=lambda r: r.ordinate)
    deduped: list[ZeroRecord] = []
    for rec in records:
        if deduped and abs(rec.ordinate - deduped[-1].ordinate) < 10 * BRACKET_TOLERANCE:
            continue
        deduped.append(rec)
    return deduped


def _exact_hit(t: float) -> ZeroRecord:
    residual = abs(completed_zeta(complex(0.5, t)))
    criterion = criterion_ratio(complex(0.5, abs(t)), CRITERION_RADIUS)
    return ZeroRecord(ordinate=t, bracket=(t, t), residual=residual, criterion=criterion)


# ---------------------------------------------------------------------------
# argument-principle counting


def count_zeros_rectangle(rect: Rectangle, derivative_step: float = 1e-6) -> int:
    """Winding number (1/2 pi i) contour integral of zt'/zt around rect.

    Trapezoid on the boundary with adaptive halving; a segment is split
    until its endpoint phase step drops below pi/4 AND its own two-level
    trapezoid estimates agree.  zt' comes from a central difference with the
    given step.  Raises PhaseJumpError when refinement cannot get adjacent
    phases within pi/2 (boundary hugging a zero).
    """
    corners = [
        complex(rect.x_min, rect.y_min),
        complex(rect.x_max, rect.y_min),
        complex(rect.x_max, rect.y_max),
        complex(rect.x_min, rect.y_max),
        complex(rect.x_min, rect.y_min),
    ]
    cache: dict[complex, complex] = {}

    def f(z: complex) -> complex:
        if z not in cache:
            cache[z] = completed_zeta(z)
        return cache[z]

    def g(z: complex) -> complex:
        d = (completed_zeta(z + derivative_step) - completed_zeta(z - derivative_step)) / (
            2 * derivative_step
        )
        return d / f(z)

    def wrapped_step(za: complex, zb: complex) -> float:
        return (cmath.phase(f(zb)) - cmath.phase(f(za)) + math.pi) % (2 * math.pi) - math.pi

    integral = 0j
    max_depth = 30
    for i in range(4):
        stack = [(corners[i], corners[i + 1], g(corners[i]), g(corners[i + 1]), 0)]
        while stack:
            za, zb, ga, gb, depth = stack.pop()
            zm = 0.5 * (za + zb)
            gm = g(zm)
            coarse = 0.5 * (ga + gb) * (zb - za)
            fine = 0.25 * (ga + gm) * (zb - za) + 0.25 * (gm + gb) * (zb - za)
            dphi = abs(wrapped_step(za, zb))
            if dphi > math.pi / 4 or abs(fine - coarse) > 2e-4:
                if depth >= max_depth:
                    if dphi > math.pi / 4:
                        raise PhaseJumpError(
                            f"phase step {dphi:.3f} > pi/4 near {zm} after refinement; "
                            "boundary too close to a zero"
                        )
                else:
                    stack.append((za, zm, ga, gm, depth + 1))
                    stack.append((zm, zb, gm, gb, depth + 1))
                    continue
            if max(abs(wrapped_step(za, zm)), abs(wrapped_step(zm, zb))) > math.pi / 2:
                raise PhaseJumpError(
                    f"phase step > pi/2 near {zm} after refinement; boundary too close to a zero"
                )
            integral += fine
    count = integral / (2j * math.pi)
    nearest = round(count.real)
    if abs(count.real - nearest) > 0.25 or abs(count.imag) > 0.25:
        raise ConvergenceError(f"winding integral {count} not close to an integer")
    return int(nearest)


# ---------------------------------------------------------------------------
# catalog export / import


def records_to_csv(records: list[ZeroRecord]) -> str:
    lines = [CSV_HEADER, "ordinate,residual,criterion"]
    for r in records:
        lines.append(f"{r.ordinate:.12f},{r.residual:.6e},{r.criterion:.9f}")
    return "\n".join(lines) + "\n"


def records_to_json(records: list[ZeroRecord]) -> str:
    payload = [
        {
            "ordinate": r.ordinate,
            "bracket": list(r.bracket),
            "residual": r.residual,
            "criterion": r.criterion,
        }
        for r in records
    ]
    return json.dumps(payload, indent=2) + "\n"


def ordinates_from_csv(text: str) -> list[float]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#") or line.startswith("ordinate"):
            continue
        out.append(float(line.split(",")[0]))
    return out


def ordinates_from_json(text: str) -> list[float]:
    return [row["ordinate"] for row in json.loads(text)]
