"""Executable checks of the proved inequalities and finite-k experiments.

Proved statements (the lattice lower bound, its interval propagation,
the Bernstein derivative factor, the level-set measure bound, and the
two-sided subarc moment bounds) are gated: they must pass at every
tested k and arc.  Asymptotic statements (the Saffari limit form of
M_q, the limiting value distribution, the Mahler measure asymptote)
cannot be certified at finite k; they are checked as trends over a
fixed k-ladder with calibrated terminal tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import evaluate, norms
from .core import RudinShapiroPair, generate_pair
from .norms import Arc, FULL_CIRCLE

TAU = math.tau

#: The lattice constant sin^2(pi/8); satisfies 2*gamma = 1 - cos(pi/4).
GAMMA = math.sin(math.pi / 8.0) ** 2

#: Limit of M_0(P_k, full circle) / sqrt(n): (2/e)^(1/2).
MAHLER_LIMIT_RATIO = math.sqrt(2.0 / math.e)

#: Minimum arc length for the subarc theorems, as a multiple of 1/n.
MIN_ARC_FACTOR = 32.0 * math.pi

#: Fixed k-ladders for trend acceptance of asymptotic statements.
SAFFARI_TREND_KS = (10, 12, 14, 16)
MAHLER_TREND_KS = (8, 10, 12, 14, 16)

#: Calibrated noise floors for trend monotonicity: finite-k deviations
#: oscillate below these levels (measured at 16n and 64n samples), so
#: a rise that stays under the floor is convergence noise, not a trend
#: violation.
SAFFARI_TREND_FLOOR = 5e-4
MAHLER_TREND_FLOOR = 1e-3
TREND_TERMINAL_TOL = 0.05

#: Rectangles in the open unit disk used by the distribution check.
DEFAULT_RECTANGLES = (
    (0.0, 0.3, 0.0, 0.3),
    (-0.5, 0.0, -0.5, 0.0),
    (-0.25, 0.25, -0.25, 0.25),
    (0.1, 0.6, -0.4, 0.1),
    (-0.6, -0.1, 0.1, 0.5),
)


@dataclass
class InequalityReport:
    """Uniform result record: one named inequality at one parameter point.

    margin is rhs - lhs or lhs - rhs, whichever the inequality makes
    nonnegative when it holds; details carries whatever is needed to
    replay the computation (counts, seeds, secondary readings).
    """

    name: str
    k: int
    lhs: float
    rhs: float
    margin: float
    passed: bool
    arc: Arc | None = None
    q: float | None = None
    details: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        out = {
            "name": self.name,
            "k": self.k,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "passed": self.passed,
        }
        if self.arc is not None:
            out["alpha"] = self.arc.alpha
            out["beta"] = self.arc.beta
        if self.q is not None:
            out["q"] = self.q
        for key in sorted(self.details):
            out[f"detail_{key}"] = self.details[key]
        return out


@dataclass
class DistributionReport:
    """Empirical distribution of |P_k|^2 / (2n) against the uniform law.

    empirical_cdf is sampled at `bins` equally spaced thresholds in
    (0, 1]; sup_distance_to_uniform is the exact Kolmogorov distance of
    the sample to the uniform CDF.  rectangle_tests pairs the measure
    of {t : P_k(e^it)/sqrt(2n) in E} with its limit 2*area(E).
    """

    k: int
    bins: int
    count: int
    empirical_cdf: np.ndarray
    sup_distance_to_uniform: float
    rectangle_tests: list


def _pair(k: int, pair: RudinShapiroPair | None) -> RudinShapiroPair:
    if pair is not None:
        if pair.k != k:
            raise ValueError(f"pair has k={pair.k}, expected {k}")
        return pair
    return generate_pair(k)


def _lattice_squared_moduli(pair: RudinShapiroPair):
    """|P|^2 and |Q|^2 at the exact n-th roots of unity (no offset)."""
    n = pair.n
    rp = np.empty(n)
    rq = np.empty(n)
    pos = 0
    for _th, p, q in evaluate.iter_pair_chunks(pair, 0.0, TAU, n,
                                                   half_offset=False):
        rp[pos:pos + p.size] = np.abs(p) ** 2
        rq[pos:pos + q.size] = np.abs(q) ** 2
        pos += p.size
    return rp, rq


def check_lattice_pair_bound(k: int, pair=None) -> InequalityReport:
    """At every even lattice index, one of each neighbor pair is large.

    Verifies max(|S(z_j)|^2, |S(z_{j+r})|^2) >= 2*gamma*n for every
    even j and r in {-1, +1}, at the n-th roots of unity z_j, for both
    S = P_k and S = Q_k.  Proved, so the worst margin must be positive.
    """
    if k < 1:
        raise ValueError("lattice bound needs k >= 1")
    pair = _pair(k, pair)
    n = pair.n
    bound = 2.0 * GAMMA * n
    rp, rq = _lattice_squared_moduli(pair)
    even = np.arange(0, n, 2)
    worst = math.inf
    worst_component = ""
    for label, values in (("p", rp), ("q", rq)):
        for r in (-1, 1):
            pairwise_max = np.maximum(values[even], values[(even + r) % n])
            margin = float(pairwise_max.min() - bound)
            if margin < worst:
                worst = margin
                worst_component = f"{label}, r={r}"
    return InequalityReport(
        name="lattice_pair_bound", k=k, lhs=bound + worst, rhs=bound,
        margin=worst, passed=worst > 0.0,
        details={"worst_case": worst_component, "bound": bound})


def check_certified_intervals(k: int, pair=None,
                              points_per_interval: int = 33) -> InequalityReport:
    """Large lattice values propagate to intervals of radius gamma/n.

    For every lattice index j with |S(z_j)|^2 >= 2*gamma*n, samples
    points_per_interval points across [t_j - gamma/n, t_j + gamma/n]
    and verifies |S|^2 >= gamma*n on all of them, for S = P_k and Q_k.
    Reports the minimum over all certified intervals.
    """
    if k < 1:
        raise ValueError("interval propagation needs k >= 1")
    pair = _pair(k, pair)
    n = pair.n
    radius = GAMMA / n
    rp, rq = _lattice_squared_moduli(pair)
    offsets = np.linspace(-radius, radius, points_per_interval)
    overall_min = math.inf
    certified_total = 0
    for component, lattice_sq in (("p", rp), ("q", rq)):
        qualifying = np.nonzero(lattice_sq >= 2.0 * GAMMA * n)[0]
        certified_total += qualifying.size
        if qualifying.size == 0:
            continue
        thetas = (TAU * qualifying[:, None] / n + offsets[None, :]).ravel()
        vals = evaluate.eval_pair_grid(pair, thetas)[0 if component == "p" else 1]
        overall_min = min(overall_min, float(np.min(np.abs(vals) ** 2)))
    bound = GAMMA * n
    return InequalityReport(
        name="certified_intervals", k=k, lhs=overall_min, rhs=bound,
        margin=overall_min - bound, passed=overall_min >= bound,
        details={"certified_intervals": certified_total,
                 "points_per_interval": points_per_interval})


def bernstein_ratio(k: int, count: int | None = None,
                    pair=None) -> InequalityReport:
    """Derivative bound for the nonnegative trig polynomial |P_k(e^it)|^2.

    R(t) = |P_k(e^it)|^2 has degree n - 1, so max |R'| <= ((n-1)/2) max R
    (the factor for nonnegative trigonometric polynomials is half the
    classical one).  R' comes from the exact product rule through a
    parallel recursion for P_k', never from finite differences.
    """
    pair = _pair(k, pair)
    n = pair.n
    if count is None:
        count = max(64, 16 * n)
    if count < 16 * n and k > 0:
        raise ValueError("bernstein ratio needs count >= 16n to resolve R'")
    max_r = 0.0
    max_dr = 0.0
    for _th, z, p, _q, dp, _dq in evaluate.iter_pair_chunks(
            pair, 0.0, TAU, count, deriv=True):
        r = np.abs(p) ** 2
        # d/dt |P(e^it)|^2 = 2 Re( conj(P) * i z P'(z) )
        dr = 2.0 * np.real(np.conj(p) * 1j * z * dp)
        max_r = max(max_r, float(r.max()))
        max_dr = max(max_dr, float(np.abs(dr).max()))
    allowed = 0.5 * (n - 1) * max_r
    ratio = 0.0 if max_dr == 0.0 else max_dr / allowed
    return InequalityReport(
        name="bernstein_ratio", k=k, lhs=max_dr, rhs=allowed,
        margin=allowed - max_dr, passed=ratio <= 1.0 + 1e-9,
        details={"ratio": ratio, "count": count})


def _require_min_length(k: int, arc: Arc) -> None:
    min_len = MIN_ARC_FACTOR / (1 << k)
    if arc.length < min_len * (1.0 - 1e-9):
        raise ValueError(
            f"arc length {arc.length:.6g} is below the 32*pi/n = "
            f"{min_len:.6g} hypothesis for k={k}")


def check_level_set_measure(k: int, arc: Arc, pair=None) -> InequalityReport:
    """The set where |P_k|^2 >= gamma*n fills a gamma/(4*pi) share of any
    admissible arc.

    E = {t in [alpha, beta] : |P_k(e^it)|^2 >= gamma*n} is a finite
    union of intervals whose endpoints move at Bernstein-bounded speed,
    so dense sampling (64 points per 1/n window) localizes them well
    below the gamma/n interval scale.  The squared-modulus level set is
    the gated reading; the unsquared variant |P_k| >= gamma*n is also
    measured and reported for transparency (it empties out once
    gamma*n exceeds sqrt(2n)).
    """
    pair = _pair(k, pair)
    n = pair.n
    _require_min_length(k, arc)
    count = max(1024, int(math.ceil(64.0 * n * arc.length)))
    in_sq = 0
    in_lit = 0
    total = 0
    for _th, p, _q in evaluate.iter_pair_chunks(
            pair, arc.alpha, arc.beta, count):
        moduli = np.abs(p)
        in_sq += int(np.count_nonzero(moduli ** 2 >= GAMMA * n))
        in_lit += int(np.count_nonzero(moduli >= GAMMA * n))
        total += moduli.size
    measure = arc.length * in_sq / total
    literal_measure = arc.length * in_lit / total
    rhs = arc.length * GAMMA / (4.0 * math.pi)
    return InequalityReport(
        name="level_set_measure", k=k, arc=arc, lhs=measure, rhs=rhs,
        margin=measure - rhs, passed=measure >= rhs,
        details={"count": count,
                 "literal_measure": literal_measure,
                 "literal_passed": literal_measure >= rhs})


def check_subarc_moment_bounds(k: int, arc: Arc, q: float,
                               pair=None) -> InequalityReport:
    """Two-sided bounds for M_q(P_k, [alpha, beta])^q on admissible arcs:

        (gamma / 4pi) (gamma n)^(q/2)  <=  M_q^q  <=  (2n)^(q/2).

    The upper bound is the flatness identity; it is allowed a 1e-9
    relative rounding budget.
    """
    if q <= 0:
        raise ValueError("q must be positive")
    pair = _pair(k, pair)
    n = pair.n
    _require_min_length(k, arc)
    est = norms.mq_arc((pair, "p"), arc, q)
    mq_pow = est.value ** q
    lower = GAMMA / (4.0 * math.pi) * (GAMMA * n) ** (q / 2.0)
    upper = (2.0 * n) ** (q / 2.0)
    passed = lower <= mq_pow <= upper * (1.0 + 1e-9)
    return InequalityReport(
        name="subarc_moment_bounds", k=k, arc=arc, q=q,
        lhs=mq_pow, rhs=upper, margin=upper - mq_pow, passed=passed,
        details={"lower_bound": lower, "lower_margin": mq_pow - lower,
                 "count": est.count, "rel_step": est.rel_step,
                 "estimate_flagged": est.flagged})


def saffari_ratio(k: int, q: float, count: int | None = None,
                  pair=None) -> InequalityReport:
    """Full-circle M_q against its limit value sqrt(2n) / (q/2+1)^(1/q).

    Also reports the P-vs-Q discrepancy, which is zero up to quadrature
    because |Q_k| on the circle is |P_k| shifted by pi.  At q = 2 both
    the norm and the limit value equal sqrt(n) exactly, so the ratio is
    gated at 1e-8; other exponents are trend material, not gates.
    """
    if q <= 0:
        raise ValueError("q must be positive")
    pair = _pair(k, pair)
    n = pair.n
    est_p = norms.mq_arc((pair, "p"), FULL_CIRCLE, q, count)
    est_q = norms.mq_arc((pair, "q"), FULL_CIRCLE, q, count)
    limit_value = math.sqrt(2.0 * n) / (q / 2.0 + 1.0) ** (1.0 / q)
    ratio = est_p.value / limit_value
    discrepancy = abs(est_p.value - est_q.value)
    passed = abs(ratio - 1.0) <= 1e-8 if q == 2.0 else True
    return InequalityReport(
        name="saffari_ratio", k=k, q=q, lhs=est_p.value, rhs=limit_value,
        margin=-(abs(ratio - 1.0)), passed=passed,
        details={"ratio": ratio, "pq_discrepancy": discrepancy,
                 "count": est_p.count, "rel_step": est_p.rel_step})


def mahler_asymptote_ratio(k: int, count: int | None = None,
                           pair=None) -> InequalityReport:
    """M_0(P_k, full circle) / sqrt(n) against its limit (2/e)^(1/2)."""
    if k < 4:
        raise ValueError("the asymptote ratio is meaningful for k >= 4")
    pair = _pair(k, pair)
    sqrt_n = math.sqrt(pair.n)
    est_p = norms.mahler_arc((pair, "p"), FULL_CIRCLE, count)
    est_q = norms.mahler_arc((pair, "q"), FULL_CIRCLE, count)
    ratio_p = est_p.value / sqrt_n
    ratio_q = est_q.value / sqrt_n
    dist = abs(ratio_p - MAHLER_LIMIT_RATIO)
    return InequalityReport(
        name="mahler_asymptote_ratio", k=k, lhs=ratio_p,
        rhs=MAHLER_LIMIT_RATIO, margin=-dist, passed=True,
        details={"distance": dist, "ratio_q": ratio_q,
                 "distance_q": abs(ratio_q - MAHLER_LIMIT_RATIO),
                 "count": est_p.count, "rel_step": est_p.rel_step})


def subarc_mahler_ratio(k: int, arc: Arc, count: int | None = None,
                        pair=None) -> InequalityReport:
    """Evidence row for the subarc Mahler lower bound: M_0/sqrt(n) on one arc.

    The proved regime needs length >= (log n)^1.5 / sqrt(n); whether a
    positive uniform constant persists down to 32*pi/n is open, so this
    reports the ratio without a pass/fail verdict.
    """
    pair = _pair(k, pair)
    n = pair.n
    _require_min_length(k, arc)
    est = norms.mahler_arc((pair, "p"), arc, count)
    ratio = est.value / math.sqrt(n)
    proved_regime = arc.length >= math.log(n) ** 1.5 / math.sqrt(n)
    return InequalityReport(
        name="subarc_mahler_ratio", k=k, arc=arc, lhs=ratio, rhs=0.0,
        margin=ratio, passed=True,
        details={"in_proved_length_regime": proved_regime,
                 "count": est.count, "rel_step": est.rel_step,
                 "estimate_flagged": est.flagged})


def value_distribution(k: int, bins: int = 64, rectangles=DEFAULT_RECTANGLES,
                       count: int | None = None, component: str = "p",
                       pair=None) -> DistributionReport:
    """Empirical law of |S|^2/(2n) and of S/sqrt(2n) over the circle.

    In the limit, |S|^2/(2n) is uniform on [0, 1] and the planar point
    S/sqrt(2n) covers any rectangle E inside the unit disk with measure
    2 m(E); both are measured at finite k.
    """
    if bins < 2:
        raise ValueError("bins must be >= 2")
    pair = _pair(k, pair)
    n = pair.n
    if count is None:
        count = max(4096, 64 * n)
    for rect in rectangles:
        r0, r1, i0, i1 = rect
        if not (r0 < r1 and i0 < i1):
            raise ValueError(f"degenerate rectangle {rect}")
        corner = math.hypot(max(abs(r0), abs(r1)), max(abs(i0), abs(i1)))
        if corner >= 1.0:
            raise ValueError(f"rectangle {rect} leaves the open unit disk")
    scale = math.sqrt(2.0 * n)
    normalized = np.empty(count, dtype=np.complex128)
    pos = 0
    for _th, p, q in evaluate.iter_pair_chunks(pair, 0.0, TAU, count):
        vals = p if component == "p" else q
        normalized[pos:pos + vals.size] = vals / scale
        pos += vals.size
    u = np.clip(np.abs(normalized) ** 2, 0.0, 1.0)
    u.sort()
    grid = np.arange(1, count + 1, dtype=np.float64) / count
    sup = float(max(np.max(u - (grid - 1.0 / count)), np.max(grid - u)))
    hist, _ = np.histogram(u, bins=bins, range=(0.0, 1.0))
    cdf = np.cumsum(hist) / count
    rect_tests = []
    for rect in rectangles:
        r0, r1, i0, i1 = rect
        inside = (normalized.real >= r0) & (normalized.real <= r1) & \
                 (normalized.imag >= i0) & (normalized.imag <= i1)
        empirical = TAU * float(np.count_nonzero(inside)) / count
        rect_tests.append((rect, empirical, 2.0 * (r1 - r0) * (i1 - i0)))
    return DistributionReport(k=k, bins=bins, count=count, empirical_cdf=cdf,
                              sup_distance_to_uniform=sup,
                              rectangle_tests=rect_tests)


def min_modulus_excluding_poles(k: int, count: int | None = None,
                                exclusion: float = 0.01, component: str = "p",
                                pair=None) -> float:
    """min |S| on the circle away from t = 0 and t = pi.

    Evidence for the open question of where circle zeros can sit: the
    pair polynomials vanish at -1 or +1 depending on parity, and the
    conjecture is that nothing else on the circle comes close to zero.
    """
    pair = _pair(k, pair)
    if count is None:
        count = max(4096, 64 * pair.n)
    best = math.inf
    for th, p, q in evaluate.iter_pair_chunks(pair, 0.0, TAU, count):
        vals = p if component == "p" else q
        away = (np.abs(np.mod(th, TAU)) > exclusion) & \
               (np.abs(np.mod(th, TAU) - math.pi) > exclusion) & \
               (np.abs(np.mod(th, TAU) - TAU) > exclusion)
        if away.any():
            best = min(best, float(np.min(np.abs(vals[away]))))
    return best


def trend_nonincreasing(values, floor: float) -> bool:
    """Trend acceptance for quantities converging to zero.

    Each step may not rise above max(previous value, floor); values
    under the floor count as converged.  The last value must also not
    exceed max(first value, floor), so a genuine overall decrease is
    required whenever the sequence starts above the floor.
    """
    vals = list(values)
    if len(vals) < 2:
        return True
    steps_ok = all(b <= max(a, floor) for a, b in zip(vals, vals[1:]))
    overall_ok = vals[-1] <= max(vals[0], floor)
    return steps_ok and overall_ok


def saffari_trend(q: float, ks=SAFFARI_TREND_KS,
                  floor: float = SAFFARI_TREND_FLOOR,
                  terminal_tol: float = TREND_TERMINAL_TOL) -> InequalityReport:
    """|M_q ratio - 1| along the k-ladder: nonincreasing and small at the end."""
    distances = []
    for k in ks:
        report = saffari_ratio(k, q)
        distances.append(abs(report.details["ratio"] - 1.0))
    passed = trend_nonincreasing(distances, floor) and \
        distances[-1] <= terminal_tol
    return InequalityReport(
        name="saffari_trend", k=ks[-1], q=q, lhs=distances[-1],
        rhs=terminal_tol, margin=terminal_tol - distances[-1], passed=passed,
        details={"ks": list(ks), "distances": distances, "floor": floor})


def mahler_asymptote_trend(ks=MAHLER_TREND_KS,
                           floor: float = MAHLER_TREND_FLOOR,
                           terminal_tol: float = TREND_TERMINAL_TOL) -> InequalityReport:
    """Distance of M_0/sqrt(n) to (2/e)^(1/2) along the k-ladder."""
    distances = []
    for k in ks:
        report = mahler_asymptote_ratio(k)
        distances.append(report.details["distance"])
    passed = trend_nonincreasing(distances, floor) and \
        distances[-1] <= terminal_tol
    return InequalityReport(
        name="mahler_asymptote_trend", k=ks[-1], lhs=distances[-1],
        rhs=terminal_tol, margin=terminal_tol - distances[-1], passed=passed,
        details={"ks": list(ks), "distances": distances, "floor": floor})


def random_arcs(k: int, how_many: int, seed: int = 0,
                min_length: float | None = None) -> list[Arc]:
    """Seeded random arcs meeting the 32*pi/n length hypothesis.

    Lengths are log-uniform between the hypothesis minimum and the full
    circle, so the small-arc regime is actually exercised; positions
    are uniform.
    """
    n = 1 << k
    lo = MIN_ARC_FACTOR / n if min_length is None else min_length
    if lo > TAU:
        raise ValueError(f"minimum arc length {lo:.4g} exceeds 2*pi; "
                         f"k={k} is too small for the hypothesis")
    rng = np.random.default_rng(seed)
    arcs = []
    for _ in range(how_many):
        length = math.exp(rng.uniform(math.log(lo), math.log(TAU)))
        length = min(length, TAU)
        alpha = rng.uniform(0.0, TAU)
        arcs.append(Arc(alpha, alpha + length))
    return arcs


GATED_CHECKS = ("lattice_pair", "intervals", "bernstein", "level_set",
                "moment_bounds")
ALL_CHECKS = GATED_CHECKS + ("saffari", "saffari_trend", "mahler_trend",
                             "subarc_mahler")


def run_verification(names, ks, n_arcs: int = 8, qs=(0.25, 1.0, 2.0, 4.0),
                     seed: int = 0) -> list[InequalityReport]:
    """Run named checks over a (k, arc, q) grid; reports in sorted order.

    `names` may be any subset of ALL_CHECKS or the single word "all".
    Arc-dependent checks draw n_arcs seeded random arcs per k meeting
    the 32*pi/n hypothesis.
    """
    if names == "all" or names == ["all"]:
        selected = list(ALL_CHECKS)
    else:
        selected = list(names)
        unknown = set(selected) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}; "
                             f"available: {list(ALL_CHECKS)}")
    reports: list[InequalityReport] = []
    for k in ks:
        pair = generate_pair(k)
        # the 32*pi/n hypothesis is unsatisfiable for k < 4, so the
        # subarc checks are vacuous there
        can_meet_hypothesis = MIN_ARC_FACTOR / (1 << k) <= TAU
        arcs = random_arcs(k, n_arcs, seed=seed + k) \
            if (n_arcs > 0 and can_meet_hypothesis) else []
        if "lattice_pair" in selected:
            reports.append(check_lattice_pair_bound(k, pair=pair))
        if "intervals" in selected:
            reports.append(check_certified_intervals(k, pair=pair))
        if "bernstein" in selected:
            reports.append(bernstein_ratio(k, pair=pair))
        if "level_set" in selected:
            for arc in arcs:
                reports.append(check_level_set_measure(k, arc, pair=pair))
        if "moment_bounds" in selected:
            for arc in arcs:
                for q in qs:
                    reports.append(check_subarc_moment_bounds(k, arc, q,
                                                              pair=pair))
        if "subarc_mahler" in selected:
            for arc in arcs:
                reports.append(subarc_mahler_ratio(k, arc, pair=pair))
        if "saffari" in selected:
            reports.append(saffari_ratio(k, 2.0, pair=pair))
    if "saffari_trend" in selected:
        for q in (1.0, 4.0, 6.0):
            reports.append(saffari_trend(q))
    if "mahler_trend" in selected:
        reports.append(mahler_asymptote_trend())
    reports.sort(key=lambda r: (r.name, r.k,
                                r.arc.alpha if r.arc else -1.0,
                                r.q if r.q is not None else -1.0))
    return reports
