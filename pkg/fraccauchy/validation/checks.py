"""
Acceptance checks, one function per criterion.

Each check reads its parameters from the suite file, compares an engine with
an independent oracle, and returns a CheckOutcome. Monte-Carlo checks draw
from streams keyed by (seed, criterion, case), so a check's result does not
depend on which other checks ran before it.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Tuple

import mpmath
import numpy as np
from scipy import integrate

from fraccauchy.core.config import get_settings
from fraccauchy.distorder import (
    DensityPart,
    OrderMeasure,
    h_eigen,
    k_bound,
    sample_inverse_composite,
    validate_measure,
)
from fraccauchy.mcsolver import McConfig, mc_solve
from fraccauchy.solver import (
    OrderSpec,
    convergence_rate,
    eigen_residual,
    residual_check,
    solve,
    uniform_grid,
)
from fraccauchy.spectral import BoxDomain, ModeSum, parse_initial, project
from fraccauchy.specfun import MLQuery, mittag_leffler
from fraccauchy.subord import (
    RngStream,
    StableIndex,
    inverse_density,
    inverse_moment,
    sample_inverse,
    sample_stable,
    summarize,
)

logger = logging.getLogger(__name__)

MIN_SAMPLES = 1000

Params = Dict[str, Any]


@dataclass(frozen=True)
class CheckContext:
    """Run-wide settings shared by all checks."""

    seed: int = 0
    threads: int = 1
    scale: float = 1.0

    def samples(self, n) -> int:
        return max(MIN_SAMPLES, int(round(float(n) * self.scale)))

    def stream(self, criterion: int, case: int = 0) -> RngStream:
        return RngStream(self.seed, (criterion << 48) + (case << 32))

    def stream_base(self, criterion: int, case: int = 0) -> int:
        return (criterion << 48) + (case << 32)


@dataclass
class CheckOutcome:
    """
    Attributes:
        passed: Whether the check met its tolerance
        measured: Worst measured quantity
        threshold: The limit measured was compared with
        detail: One line per case
    """

    passed: bool
    measured: float
    threshold: float
    detail: List[str] = field(default_factory=list)


def _at_most(ratios: List[float], detail: List[str]) -> CheckOutcome:
    """Outcome for checks whose cases report error / allowed error."""
    worst = max(ratios)
    return CheckOutcome(passed=worst <= 1.0, measured=worst, threshold=1.0, detail=detail)


def _at_least(ratios: List[float], detail: List[str]) -> CheckOutcome:
    """Outcome for checks whose cases report achieved / required rate."""
    worst = min(ratios)
    return CheckOutcome(passed=worst >= 1.0, measured=worst, threshold=1.0, detail=detail)


def _ml(beta: float, x: float) -> float:
    return mittag_leffler(MLQuery(beta, x, get_settings().ml_rel_tol))


def _atoms(value) -> OrderMeasure:
    return OrderMeasure(atoms=tuple((float(b), float(w)) for b, w in value))


def _order(value) -> OrderSpec:
    if isinstance(value, (list, tuple)):
        return _atoms(value)
    return float(value)


def check_ml_exact(params: Params, ctx: CheckContext) -> CheckOutcome:
    """M_1(-x) against exp(-x) and M_1/2(-x) against exp(x^2) erfc(x) in 40-digit arithmetic."""
    lo, hi = params["exp_range"]
    xs = np.logspace(math.log10(lo), math.log10(hi), int(params["exp_points"]))
    exp_err = max(abs(_ml(1.0, -x) - math.exp(-x)) / math.exp(-x) for x in xs)

    lo, hi = params["erfc_range"]
    grid = np.linspace(lo, hi, int(params["erfc_points"]))
    with mpmath.workdps(40):
        oracle = [float(mpmath.exp(mpmath.mpf(x) ** 2) * mpmath.erfc(mpmath.mpf(x))) for x in grid]
    erfc_err = max(abs(_ml(0.5, -x) - ref) / ref for x, ref in zip(grid, oracle))

    detail = [
        f"M_1 vs exp: max relative error {exp_err:.3e} (tol {params['exp_tol']:g})",
        f"M_1/2 vs erfc identity: max relative error {erfc_err:.3e} (tol {params['erfc_tol']:g})",
    ]
    return _at_most([exp_err / params["exp_tol"], erfc_err / params["erfc_tol"]], detail)


def check_eigen_ode(params: Params, ctx: CheckContext) -> CheckOutcome:
    """Observed L1 rate of D^beta G + lam G against dt^(offset - beta)."""
    dts = sorted(params["dts"], reverse=True)
    ratios, detail = [], []
    for beta in params["betas"]:
        required = params["rate_offset"] - beta
        for lam in params["lambdas"]:
            residuals = [
                eigen_residual(beta, lam, dt, t_min=params["t_min"], t_max=params["t_max"]) for dt in dts
            ]
            rates = [convergence_rate(a, b) for a, b in zip(residuals, residuals[1:])]
            ratios.append(min(rates) / required)
            detail.append(
                f"beta={beta:g} lam={lam:g}: residuals "
                + ", ".join(f"{r:.3e}" for r in residuals)
                + "; rates " + ", ".join(f"{r:.2f}" for r in rates)
                + f" (need {required:.2f})"
            )
    return _at_least(ratios, detail)


def check_stable_laplace(params: Params, ctx: CheckContext) -> CheckOutcome:
    """E[exp(-s D(1))] against exp(-s^beta)."""
    n = ctx.samples(params["n_samples"])
    sigmas = params["sigmas"]
    zs, detail = [], []
    for i, beta in enumerate(params["betas"]):
        d1 = sample_stable(StableIndex(beta), ctx.stream(3, i), size=n)
        for s in params["s_values"]:
            summary = summarize(np.exp(-s * d1))
            reference = math.exp(-s ** beta)
            z = abs(summary.mean - reference) / summary.std_error
            zs.append(z / sigmas)
            detail.append(
                f"beta={beta:g} s={s:g}: {summary.mean:.6f} vs {reference:.6f} ({z:.2f} sigma, n={n})"
            )
    return _at_most(zs, detail)


def check_inverse_laplace(params: Params, ctx: CheckContext) -> CheckOutcome:
    """E[exp(-lam E(t))] against M_beta(-lam t^beta), and E[E(t)] against t^beta / Gamma(1 + beta)."""
    n = ctx.samples(params["n_samples"])
    sigmas = params["sigmas"]
    zs, detail = [], []
    case = 0
    for beta in params["betas"]:
        idx = StableIndex(beta)
        for t in params["times"]:
            clocks = sample_inverse(idx, t, ctx.stream(4, case), size=n)
            case += 1

            moment = summarize(clocks)
            reference = inverse_moment(idx, t)
            z = abs(moment.mean - reference) / moment.std_error
            zs.append(z / sigmas)
            detail.append(f"beta={beta:g} t={t:g} E[E(t)]: {moment.mean:.6f} vs {reference:.6f} ({z:.2f} sigma)")

            for lam in params["lambdas"]:
                summary = summarize(np.exp(-lam * clocks))
                reference = _ml(beta, -lam * t ** beta)
                z = abs(summary.mean - reference) / summary.std_error
                zs.append(z / sigmas)
                detail.append(
                    f"beta={beta:g} t={t:g} lam={lam:g}: {summary.mean:.6f} vs {reference:.6f} ({z:.2f} sigma)"
                )
    return _at_most(zs, detail)


def _integrate_half_line(func: Callable[[float], float], split: float) -> float:
    head, _ = integrate.quad(func, 0.0, split, epsabs=1e-11, epsrel=1e-10, limit=200)
    tail, _ = integrate.quad(func, split, np.inf, epsabs=1e-11, epsrel=1e-10, limit=200)
    return head + tail


def check_inverse_density(params: Params, ctx: CheckContext) -> CheckOutcome:
    """Normalisation and Laplace transform of the inverse-subordinator density by quadrature."""
    t = params["t"]
    lam = params["lam"]
    tol = params["tol"]
    ratios, detail = [], []
    for beta in params["betas"]:
        idx = StableIndex(beta)
        split = inverse_moment(idx, t)
        mass = _integrate_half_line(lambda l: inverse_density(idx, t, l), split)
        laplace = _integrate_half_line(lambda l: math.exp(-lam * l) * inverse_density(idx, t, l), split)
        reference = _ml(beta, -lam * t ** beta)
        ratios += [abs(mass - 1.0) / tol, abs(laplace - reference) / tol]
        detail.append(
            f"beta={beta:g}: mass-1 = {mass - 1.0:.2e}, Laplace error {laplace - reference:.2e} (tol {tol:g})"
        )

    # beta = 1/2: f(l) = exp(-l^2 / 4t) / sqrt(pi t)
    idx = StableIndex(0.5)
    worst = 0.0
    for l in params["closed_form_points"]:
        exact = math.exp(-l * l / (4.0 * t)) / math.sqrt(math.pi * t)
        worst = max(worst, abs(inverse_density(idx, t, l) - exact) / exact)
    ratios.append(worst / params["closed_form_tol"])
    detail.append(f"beta=1/2 closed form: max relative error {worst:.2e} (tol {params['closed_form_tol']:g})")
    return _at_most(ratios, detail)


def check_single_atom(params: Params, ctx: CheckContext) -> CheckOutcome:
    """h_eigen for a one-atom measure against M_beta(-lam t^beta)."""
    tol = params["tol"]
    errors, detail = [], []
    for beta in params["betas"]:
        m = OrderMeasure.single(beta)
        for t in params["times"]:
            for lam in params["lambdas"]:
                value = h_eigen(m, t, lam).value
                reference = _ml(beta, -lam * t ** beta)
                errors.append(abs(value - reference) / tol)
                detail.append(f"beta={beta:g} t={t:g} lam={lam:g}: |h - M| = {abs(value - reference):.2e}")
    return _at_most(errors, detail)


def check_composite_mc(params: Params, ctx: CheckContext) -> CheckOutcome:
    """First-passage clock of the composite subordinator against h_eigen."""
    m = _atoms(params["atoms"])
    validate_measure(m)
    n = ctx.samples(params["n_samples"])
    t, dx, sigmas = params["t"], params["dx"], params["sigmas"]
    clocks = sample_inverse_composite(m, t, ctx.stream(7), dx, size=n, budget=get_settings().walk_budget)

    ratios, detail = [], []
    for lam in params["lambdas"]:
        summary = summarize(np.exp(-lam * clocks))
        reference = h_eigen(m, t, lam).value
        allowed = sigmas * summary.std_error + 2.0 * dx
        ratios.append(abs(summary.mean - reference) / allowed)
        detail.append(
            f"{m.describe()} t={t:g} lam={lam:g}: MC {summary.mean:.6f} +/- {summary.std_error:.1e} "
            f"vs h {reference:.6f} (allowed {allowed:.2e})"
        )
    return _at_most(ratios, detail)


def check_derivative_bound(params: Params, ctx: CheckContext) -> CheckOutcome:
    """Central difference of h(., lam) against lam k(t)."""
    beta0, beta1 = params["density"]
    m = OrderMeasure(density=DensityPart(float(beta0), float(beta1), int(params["nodes"])))
    validate_measure(m)
    ratios, detail = [], []
    for t in params["times"]:
        bound = k_bound(m, t)
        for lam in params["lambdas"]:
            h = params["step"] * t
            derivative = (h_eigen(m, t + h, lam).value - h_eigen(m, t - h, lam).value) / (2.0 * h)
            ratios.append(abs(derivative) / (lam * bound))
            detail.append(f"t={t:g} lam={lam:g}: |dh/dt| = {abs(derivative):.4e} <= {lam * bound:.4e}")
    return _at_most(ratios, detail)


def check_engine_agreement(params: Params, ctx: CheckContext) -> CheckOutcome:
    """Monte-Carlo and spectral solutions for the first eigenfunction at the box centre."""
    ratios, detail = [], []
    for ci, case in enumerate(params["cases"]):
        d = int(case["dim"])
        dom = BoxDomain.unit(d)
        order = _order(case["order"])
        f = ModeSum.single((1,) * d)
        coeffs = project(f, dom)
        x0 = (0.5,) * d
        cfg = McConfig(
            n_paths=ctx.samples(params["n_paths"]),
            dt=params["dt"],
            dx=params["dx"],
            seed=ctx.seed,
            threads=ctx.threads,
        )
        for ti, t in enumerate(case["times"]):
            spectral = float(solve(coeffs, order, t, [x0]).values[0])
            mc = mc_solve(f, dom, order, t, x0, cfg, base_stream=ctx.stream_base(9, (ci << 8) + ti))
            allowed = params["sigmas"] * mc.std_error + params["bias"]
            ratios.append(abs(mc.mean - spectral) / allowed)
            label = order.describe() if isinstance(order, OrderMeasure) else f"beta={order:g}"
            detail.append(
                f"d={d} {label} t={t:g}: MC {mc.mean:.5f} +/- {mc.std_error:.1e} "
                f"vs spectral {spectral:.5f} (allowed {allowed:.3e})"
            )
    return _at_most(ratios, detail)


def _residual_factors(
    coeffs, order: OrderSpec, dts: List[float], points, params: Params
) -> Tuple[List[float], List[float]]:
    """(reduction factor per halving, residual per step), coarsest step first."""
    residuals = [
        residual_check(coeffs, order, uniform_grid(dt, params["t_max"]), points, params["t_min"]).max_residual
        for dt in sorted(dts, reverse=True)
    ]
    return [a / b if b > 0.0 else math.inf for a, b in zip(residuals, residuals[1:])], residuals


def check_pde_residual(params: Params, ctx: CheckContext) -> CheckOutcome:
    """Residual of the assembled series under the L1 operator and the spectral Laplacian."""
    dom = BoxDomain.unit(1)
    points = np.asarray(params["points"], dtype=float).reshape(-1, 1)
    measure = _atoms(params["measure"])
    measure_factor = 2.0 ** (params["measure_rate_offset"] - measure.max_order)

    ratios, detail = [], []
    for text in params["initial"]:
        coeffs = project(parse_initial(text, dom), dom)
        for beta in params["betas"]:
            factors, residuals = _residual_factors(coeffs, beta, params["dts"], points, params)
            ratios.append(min(factors) / params["min_factor"])
            detail.append(
                f"{text!r} beta={beta:g}: residuals " + ", ".join(f"{r:.3e}" for r in residuals)
                + "; factors " + ", ".join(f"{x:.2f}" for x in factors)
                + f" (need {params['min_factor']:g})"
            )
        factors, residuals = _residual_factors(coeffs, measure, params["measure_dts"], points, params)
        ratios.append(min(factors) / measure_factor)
        detail.append(
            f"{text!r} {measure.describe()}: residuals " + ", ".join(f"{r:.3e}" for r in residuals)
            + "; factors " + ", ".join(f"{x:.2f}" for x in factors)
            + f" (need {measure_factor:.2f})"
        )
    return _at_least(ratios, detail)


CHECKS: Dict[int, Callable[[Params, CheckContext], CheckOutcome]] = {
    1: check_ml_exact,
    2: check_eigen_ode,
    3: check_stable_laplace,
    4: check_inverse_laplace,
    5: check_inverse_density,
    6: check_single_atom,
    7: check_composite_mc,
    8: check_derivative_bound,
    9: check_engine_agreement,
    10: check_pde_residual,
}
