"""Circle evaluation of Rudin-Shapiro pairs, fast path plus slow oracle.

The fast path iterates the doubling recursion with repeated squaring of
z, so a point costs O(k) complex operations instead of the O(2^k) of
Horner's rule, and rounding error grows with k rather than with the
degree.  Each squaring renormalizes the power back to unit modulus to
stop drift.  Identity checks that compare values at z against values
at -z share one squaring chain: (-z)^(2^j) equals z^(2^j) for j >= 1,
so evaluating both in a single sweep removes the angle-rounding
sensitivity (an ulp of angle error moves a degree-n value by about
n * |P| * ulp, which would swamp such comparisons by k = 12).  Horner
evaluation is kept as an independent cross-check oracle and for
Littlewood polynomials that are not Rudin-Shapiro pairs.
"""

from __future__ import annotations

import cmath
import math
import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .core import LittlewoodPolynomial, ResourceLimitError, RudinShapiroPair

if TYPE_CHECKING:
    from .norms import Arc

TAU = math.tau

#: Fixed evaluation chunk; reductions depend on it, thread counts do not.
DEFAULT_CHUNK = 1 << 19
#: Cap on materialized grids (two complex arrays of this length).
GRID_MAX_COUNT = 1 << 24
#: Horner oracle degree guard; the oracle is O(n) per point.
HORNER_MAX_DEGREE = 1 << 20

GRID_DUMP_MAGIC = b"RSGRID"
GRID_DUMP_VERSION = 1


@dataclass(frozen=True)
class CirclePoint:
    """An angle on the unit circle, reduced to [0, 2*pi)."""

    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta) % TAU)

    @property
    def z(self) -> complex:
        return cmath.exp(1j * self.theta)


@dataclass(frozen=True, eq=False)
class GridSamples:
    """Pair values on a uniform grid over an arc.

    Sample j sits at theta = alpha + (j + offset) * (beta - alpha) / count
    with offset = 1/2 on the default half-offset grid and 0 on the full
    lattice (which contains the exact n-th roots of unity).
    """

    k: int
    arc: "Arc"
    count: int
    values_p: np.ndarray
    values_q: np.ndarray
    half_offset: bool = True


def circle_grid(alpha: float, beta: float, count: int,
                half_offset: bool = True) -> np.ndarray:
    """Uniform grid angles over [alpha, beta) with optional half-step offset."""
    if count < 1:
        raise ValueError("count must be >= 1")
    offset = 0.5 if half_offset else 0.0
    return alpha + (np.arange(count, dtype=np.float64) + offset) * \
        ((beta - alpha) / count)


def _unit_circle(thetas: np.ndarray) -> np.ndarray:
    return np.exp(1j * np.mod(thetas, TAU))


# Error-free transformations (Dekker/Knuth).  Work elementwise on
# arrays; no fma required.

def _split(a):
    c = 134217729.0 * a  # 2^27 + 1
    hi = c - (c - a)
    return hi, a - hi


def _two_prod(a, b):
    p = a * b
    ahi, alo = _split(a)
    bhi, blo = _split(b)
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _dd_square_complex(xh, xl, yh, yl):
    """Double-double square of x + iy; keeps ~32 digits of phase.

    Powers of z obtained by repeated plain squaring lose 2^j * eps of
    phase by level j, which is fatal to point values at degree 2^k - 1;
    the compensated chain keeps every power consistent with the exact
    square of the starting complex number.
    """
    p1, e1 = _two_prod(xh, xh)
    e1 = e1 + 2.0 * xh * xl
    p2, e2 = _two_prod(yh, yh)
    e2 = e2 + 2.0 * yh * yl
    rh, rl = _two_sum(p1, -p2)
    rl = rl + (e1 - e2)
    rh, rl = _two_sum(rh, rl)
    p3, e3 = _two_prod(xh, yh)
    e3 = e3 + (xh * yl + xl * yh)
    ih, il = _two_sum(2.0 * p3, 2.0 * e3)
    return rh, rl, ih, il


def _pair_recursion(z: np.ndarray, k: int):
    """Run the doubling recursion on an array of unit-circle points."""
    p = np.ones_like(z)
    q = np.ones_like(z)
    w = z
    for step in range(k):
        wq = w * q
        p, q = p + wq, p - wq
        if step != k - 1:
            w = w * w
            w = w / np.abs(w)
    return p, q


def _pair_recursion_negated(z: np.ndarray, k: int):
    """(P(z), Q(z), P(-z)) from one shared squaring chain.

    The -z run differs only in the sign of the first power, so both
    evaluations see identical rounding in every w; comparisons between
    them are then free of angle-representation error.
    """
    p = np.ones_like(z)
    q = np.ones_like(z)
    pn = np.ones_like(z)
    qn = np.ones_like(z)
    w = z
    for step in range(k):
        wq = w * q
        p, q = p + wq, p - wq
        wqn = (-w if step == 0 else w) * qn
        pn, qn = pn + wqn, pn - wqn
        if step != k - 1:
            w = w * w
            w = w / np.abs(w)
    return p, q, pn


def _pair_recursion_deriv(z: np.ndarray, k: int):
    """Recursion carrying (P, Q, P', Q'); derivatives are in z.

    Differentiating P_{j+1} = P_j + z^m Q_j with m = 2^j gives
    P'_{j+1} = P'_j + m z^(m-1) Q_j + z^m Q'_j, and z^(m-1) = w conj(z)
    on the unit circle.
    """
    p = np.ones_like(z)
    q = np.ones_like(z)
    dp = np.zeros_like(z)
    dq = np.zeros_like(z)
    w = z
    zinv = np.conj(z)
    for step in range(k):
        t = w * (float(1 << step) * zinv * q + dq)
        dp, dq = dp + t, dp - t
        wq = w * q
        p, q = p + wq, p - wq
        if step != k - 1:
            w = w * w
            w = w / np.abs(w)
    return p, q, dp, dq


def eval_pair_grid(pair: RudinShapiroPair, thetas) -> tuple[np.ndarray, np.ndarray]:
    """(P_k, Q_k) at the given angles, O(k) vector passes."""
    z = _unit_circle(np.asarray(thetas, dtype=np.float64))
    return _pair_recursion(z, pair.k)


def eval_pair_negated_grid(pair: RudinShapiroPair, thetas):
    """(P(z), Q(z), P(-z)) at the given angles, one shared squaring chain."""
    z = _unit_circle(np.asarray(thetas, dtype=np.float64))
    return _pair_recursion_negated(z, pair.k)


def eval_pair_deriv_grid(pair: RudinShapiroPair, thetas):
    """(P, Q, P', Q', z) at the given angles; primes are d/dz."""
    z = _unit_circle(np.asarray(thetas, dtype=np.float64))
    p, q, dp, dq = _pair_recursion_deriv(z, pair.k)
    return p, q, dp, dq, z


def eval_pair_point(pair: RudinShapiroPair, point) -> tuple[complex, complex]:
    """Scalar recursion evaluation at one circle point.

    The squaring chain runs in double-double so the powers stay true
    powers of the evaluation point; values then agree with the Horner
    oracle to the oracle's own rounding level.
    """
    theta = point.theta if isinstance(point, CirclePoint) else float(point) % TAU
    z = cmath.exp(1j * theta)
    p = 1 + 0j
    q = 1 + 0j
    wxh, wxl, wyh, wyl = z.real, 0.0, z.imag, 0.0
    for step in range(pair.k):
        wq = complex(wxh + wxl, wyh + wyl) * q
        p, q = p + wq, p - wq
        if step != pair.k - 1:
            wxh, wxl, wyh, wyl = _dd_square_complex(wxh, wxl, wyh, wyl)
    return p, q


def eval_horner(poly, point):
    """Nested-multiplication oracle, O(degree) per point.

    Accepts a LittlewoodPolynomial or a coefficient sequence (low degree
    first) and a scalar angle, CirclePoint, or array of angles.  Runs
    compensated: every product and sum carries its rounding error into
    a first-order correction term, which keeps the oracle trustworthy
    at degree 2^20 where plain Horner drifts past 1e-10.
    """
    coeffs = poly.coeffs if isinstance(poly, LittlewoodPolynomial) else \
        np.asarray(poly)
    degree = len(coeffs) - 1
    if degree > HORNER_MAX_DEGREE:
        raise ResourceLimitError(
            f"degree {degree} exceeds the Horner oracle limit {HORNER_MAX_DEGREE}")
    c = np.asarray(coeffs, dtype=np.float64)
    if isinstance(point, CirclePoint):
        thetas = np.array([point.theta])
        scalar = True
    else:
        arr = np.asarray(point, dtype=np.float64)
        scalar = arr.ndim == 0
        thetas = np.atleast_1d(arr)
    z = _unit_circle(thetas)
    zr, zi = z.real.copy(), z.imag.copy()
    ar = np.full(z.shape, c[-1])
    ai = np.zeros(z.shape)
    err = np.zeros(z.shape, dtype=np.complex128)
    for j in range(len(c) - 2, -1, -1):
        pr1, er1 = _two_prod(ar, zr)
        pr2, er2 = _two_prod(ai, zi)
        re_prod, er3 = _two_sum(pr1, -pr2)
        pi1, ei1 = _two_prod(ar, zi)
        pi2, ei2 = _two_prod(ai, zr)
        im_prod, ei3 = _two_sum(pi1, pi2)
        re_new, er4 = _two_sum(re_prod, c[j])
        err = err * z + ((er1 - er2 + er3 + er4) + 1j * (ei1 + ei2 + ei3))
        ar, ai = re_new, im_prod
    acc = (ar + 1j * ai) + err
    return complex(acc[0]) if scalar else acc


def iter_pair_chunks(pair: RudinShapiroPair, alpha: float, beta: float,
                     count: int, *, half_offset: bool = True,
                     chunk: int = DEFAULT_CHUNK, deriv: bool = False):
    """Yield (thetas, P, Q) or (thetas, z, P, Q, dP, dQ) per index chunk.

    The chunk size is a constant of the grid, never of the worker
    count, so downstream reductions see identical blocks regardless of
    threading.
    """
    offset = 0.5 if half_offset else 0.0
    step = (beta - alpha) / count
    for lo in range(0, count, chunk):
        hi = min(lo + chunk, count)
        j = np.arange(lo, hi, dtype=np.float64)
        thetas = alpha + (j + offset) * step
        z = _unit_circle(thetas)
        if deriv:
            p, q, dp, dq = _pair_recursion_deriv(z, pair.k)
            yield thetas, z, p, q, dp, dq
        else:
            yield (thetas,) + _pair_recursion(z, pair.k)


def eval_grid(pair: RudinShapiroPair, arc, count: int, *,
              half_offset: bool = True, threads: int = 1,
              max_count: int = GRID_MAX_COUNT) -> GridSamples:
    """Materialize pair values over an arc.

    Work may be partitioned across threads by fixed index ranges; each
    sample is computed independently, so the output is bit-identical
    for any worker count.
    """
    if count < 2:
        raise ValueError("count must be >= 2")
    if count > max_count:
        raise ResourceLimitError(
            f"count {count} exceeds the grid memory cap {max_count}")
    values_p = np.empty(count, dtype=np.complex128)
    values_q = np.empty(count, dtype=np.complex128)
    offset = 0.5 if half_offset else 0.0
    step = (arc.beta - arc.alpha) / count

    def fill(lo: int, hi: int):
        j = np.arange(lo, hi, dtype=np.float64)
        z = _unit_circle(arc.alpha + (j + offset) * step)
        values_p[lo:hi], values_q[lo:hi] = _pair_recursion(z, pair.k)

    bounds = [(lo, min(lo + DEFAULT_CHUNK, count))
              for lo in range(0, count, DEFAULT_CHUNK)]
    if threads > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(lambda b: fill(*b), bounds))
    else:
        for lo, hi in bounds:
            fill(lo, hi)
    return GridSamples(k=pair.k, arc=arc, count=count,
                       values_p=values_p, values_q=values_q,
                       half_offset=half_offset)


def pair_modulus_sampler(pair: RudinShapiroPair, component: str = "p"):
    """Sampler (alpha, beta, count) -> |P_k| (or |Q_k|) on the midpoint grid."""
    if component not in ("p", "q"):
        raise ValueError("component must be 'p' or 'q'")
    pick = 0 if component == "p" else 1

    def sampler(alpha, beta, count, half_offset=True):
        out = np.empty(count, dtype=np.float64)
        pos = 0
        for _th, p, q in iter_pair_chunks(pair, alpha, beta, count,
                                          half_offset=half_offset):
            vals = (p, q)[pick]
            out[pos:pos + vals.size] = np.abs(vals)
            pos += vals.size
        return out

    return sampler


def littlewood_modulus_sampler(poly: LittlewoodPolynomial):
    """Sampler built on the Horner oracle, for non-pair Littlewood inputs."""

    def sampler(alpha, beta, count, half_offset=True):
        thetas = circle_grid(alpha, beta, count, half_offset)
        return np.abs(eval_horner(poly, thetas))

    return sampler


def flatness_defect_sampler(pair: RudinShapiroPair):
    """Sampler for | |P_k|^2 - n |, the deviation of P from perfect flatness."""

    def sampler(alpha, beta, count, half_offset=True):
        out = np.empty(count, dtype=np.float64)
        pos = 0
        for _th, p, _q in iter_pair_chunks(pair, alpha, beta, count,
                                           half_offset=half_offset):
            out[pos:pos + p.size] = np.abs(np.abs(p) ** 2 - pair.n)
            pos += p.size
        return out

    return sampler


def write_grid_dump(samples: GridSamples, path) -> None:
    """Binary dump: header, then interleaved re/im doubles for P then Q."""
    header = GRID_DUMP_MAGIC + struct.pack(
        "<BBddQB", GRID_DUMP_VERSION, samples.k,
        samples.arc.alpha, samples.arc.beta,
        samples.count, 1 if samples.half_offset else 0)
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(np.ascontiguousarray(samples.values_p, dtype=np.complex128).tobytes())
        fh.write(np.ascontiguousarray(samples.values_q, dtype=np.complex128).tobytes())


def read_grid_dump(path) -> GridSamples:
    from .norms import Arc

    with open(path, "rb") as fh:
        magic = fh.read(6)
        if magic != GRID_DUMP_MAGIC:
            raise ValueError(f"{path}: bad magic {magic!r}")
        version, k, alpha, beta, count, half = struct.unpack(
            "<BBddQB", fh.read(struct.calcsize("<BBddQB")))
        if version != GRID_DUMP_VERSION:
            raise ValueError(f"{path}: unsupported version {version}")
        body = np.frombuffer(fh.read(), dtype=np.complex128)
    if body.size != 2 * count:
        raise ValueError(f"{path}: expected {2 * count} complex values, "
                         f"found {body.size}")
    return GridSamples(k=k, arc=Arc(alpha, beta), count=count,
                       values_p=body[:count].copy(), values_q=body[count:].copy(),
                       half_offset=bool(half))
