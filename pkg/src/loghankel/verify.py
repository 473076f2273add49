"""The theorem-by-theorem reproduction suite behind ``loghankel verify``."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from fractions import Fraction

from .bounds import (
    SHARP_BOUND,
    VIOLATION_TOL,
    bound_from_surface,
    interior_ry_min,
    maximize_surface,
    stress_test,
)
from .families import Family, Named, build_function_series, h21_from_schwarz, named_function
from .functionals import gamma_from_taylor, h21_log, h21_log_closed_form, log_coefficients
from .report import VerificationReport, fmt_exact
from .schwarz import sample_schur, schur_coefficients, schwarz_from_schur
from .series import series_exp_zero, series_log_unit

PIPELINE_TOL = 1e-12
MAX_TOL = 1e-9
#: Published edge maxima are truncated to a few figures.
EDGE_TOL = {Family.STARLIKE_SYM: 1e-3, Family.CONVEX_SYM: 1e-2}
EDGE_PUBLISHED = {Family.STARLIKE_SYM: 2.4378, Family.CONVEX_SYM: 15.512}
SURFACE_MAX = {Family.STARLIKE_SYM: 12, Family.CONVEX_SYM: 64}
SURFACE_NAME = {Family.STARLIKE_SYM: "F", Family.CONVEX_SYM: "G"}

#: (extremal, example) named functions per family with the published example value.
SHARP_FUNCTION = {Family.STARLIKE_SYM: Named.F1, Family.CONVEX_SYM: Named.F3}
EXAMPLE_FUNCTION = {Family.STARLIKE_SYM: Named.F2, Family.CONVEX_SYM: Named.F4}
PUBLISHED_EXAMPLE = {Named.F2: Fraction(1, 12), Named.F4: Fraction(11, 576)}


@dataclass(frozen=True)
class VerifyConfig:
    families: tuple = (Family.STARLIKE_SYM, Family.CONVEX_SYM)
    samples: int = 100_000
    seed: int = 42
    grid: int = 1001
    pipeline_samples: int = 1000
    identity_trials: int = 1000
    interior_grid: int = 500
    roundtrip_order: int = 30
    koebe_terms: int = 20

    def as_dict(self) -> dict:
        d = asdict(self)
        d["families"] = [f.value for f in self.families]
        return d


def exact_h21(tag: Named, order: int = 8) -> Fraction:
    """gamma_1 gamma_3 - gamma_2^2 through the full series pipeline."""
    return h21_log(named_function(tag, order))


def random_rational_triples(count: int, seed: int, bound: int = 20):
    rng = random.Random(seed)
    for _ in range(count):
        yield tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(3))


def identity_mismatches(count: int, seed: int) -> int:
    bad = 0
    for a2, a3, a4 in random_rational_triples(count, seed):
        g1, g2, g3 = gamma_from_taylor(a2, a3, a4)
        if g1 * g3 - g2 * g2 != h21_log_closed_form(a2, a3, a4):
            bad += 1
    return bad


def roundtrip_failures(order: int) -> list[str]:
    bad = []
    for tag in Named:
        u = named_function(tag, order + 1).shift_down()
        if series_exp_zero(series_log_unit(u)) != u:
            bad.append(tag.value)
    return bad


def pipeline_max_error(family: Family, count: int, seed: int, order: int = 8) -> float:
    worst = 0.0
    for t in sample_schur(count, seed):
        closed = h21_from_schwarz(family, schur_coefficients(t))
        f = build_function_series(family, schwarz_from_schur(t, order), order)
        worst = max(worst, abs(closed - h21_log(f)))
    return worst


def _common_claims(report: VerificationReport, cfg: VerifyConfig) -> None:
    bad = roundtrip_failures(cfg.roundtrip_order)
    report.add(
        "series.roundtrip_named",
        "exp(log(f/z)) = f/z for f1, f2, f3, f4 and the Koebe function",
        "exact equality for 5 functions",
        f"{5 - len(bad)} of 5 equal",
        0.0,
        not bad,
        f"order {cfg.roundtrip_order}" + (f"; mismatches: {', '.join(bad)}" if bad else ""),
    )

    n = cfg.koebe_terms
    gammas = log_coefficients(named_function(Named.KOEBE, n + 1), n)
    wrong = [k for k in range(1, n + 1) if gammas[k] != Fraction(1, k)]
    report.add(
        "koebe.gamma",
        "Koebe function z/(1-z)^2 has gamma_n = 1/n",
        f"1/n for n=1..{n}",
        "1/n" if not wrong else f"differs at n={wrong}",
        0.0,
        not wrong,
        "gammas: " + ", ".join(fmt_exact(g) for g in gammas.gammas[:5]) + ", ...",
    )

    bad = identity_mismatches(cfg.identity_trials, cfg.seed)
    report.add(
        "identity.h21_taylor_form",
        "gamma1*gamma3 - gamma2^2 = (a2*a4 - a3^2 + a2^4/12)/4",
        f"0 mismatches in {cfg.identity_trials}",
        f"{bad} mismatches",
        0.0,
        bad == 0,
        "random rationals with |numerator|, denominator <= 20; the unscaled a-form is 4x the definition",
    )


def _family_claims(report: VerificationReport, family: Family, cfg: VerifyConfig) -> None:
    p = family.value
    lab = family.label
    sharp = SHARP_BOUND[family]
    name = SURFACE_NAME[family]

    tag = SHARP_FUNCTION[family]
    h = exact_h21(tag)
    report.add(
        f"{p}.sharp_{tag.value}",
        f"{lab} bound |H21(F_f/2)| <= {fmt_exact(sharp)} attained by {tag.value}",
        fmt_exact(sharp),
        fmt_exact(abs(h)),
        0.0,
        abs(h) == sharp,
        f"signed value H21 = {fmt_exact(h)}",
    )

    tag = EXAMPLE_FUNCTION[family]
    h = exact_h21(tag)
    expected = {Named.F2: Fraction(1, 48), Named.F4: Fraction(11, 2304)}[tag]
    published = PUBLISHED_EXAMPLE[tag]
    report.add(
        f"{p}.example_{tag.value}",
        f"{lab} example {tag.value}: H21(F_f/2) from the gamma definition",
        fmt_exact(expected),
        fmt_exact(h),
        0.0,
        h == expected and published <= sharp,
        f"published example value {fmt_exact(published)} = {published / h} x this value "
        f"(the unscaled a-form without the factor 1/4); "
        f"{fmt_exact(published)} <= {fmt_exact(sharp)} still respects the bound",
    )

    rep = maximize_surface(family, cfg.grid)
    target = SURFACE_MAX[family]
    at_corner = rep.argmax.x == 0.0 and rep.argmax.y == 1.0
    report.add(
        f"{p}.max_{name}",
        f"max of {name} over Omega is {target}",
        target,
        rep.max_value,
        MAX_TOL,
        abs(rep.max_value - target) <= MAX_TOL and at_corner,
        f"max{name}={rep.max_value:g} at ({rep.argmax.x:g}, {rep.argmax.y:g}); "
        f"grid {rep.grid_size}, {rep.refinement_steps} refinement steps",
    )
    bound = bound_from_surface(family, rep)
    report.add(
        f"{p}.bound",
        f"{name}max / {48 if family is Family.STARLIKE_SYM else 2304} gives the sharp bound",
        fmt_exact(sharp),
        fmt_exact(bound),
        0.0,
        bound == sharp,
    )

    edges = rep.boundary_maxima
    e = edges["y=0"]
    report.add(
        f"{p}.edge_y0",
        f"max of {name}(x,0) on [0,1] (published to few figures)",
        EDGE_PUBLISHED[family],
        e.value,
        EDGE_TOL[family],
        abs(e.value - EDGE_PUBLISHED[family]) <= EDGE_TOL[family],
        f"argmax x = {e.argmax.x:.12f}",
    )
    for label, cid in (("x=0", "edge_x0"), ("y=1-x^2", "edge_curve")):
        e = edges[label]
        report.add(
            f"{p}.{cid}",
            f"max of {name} on the boundary piece {label}",
            target,
            e.value,
            0.0,
            e.value == target and e.argmax.x == 0.0 and e.argmax.y == 1.0,
            f"argmax ({e.argmax.x:g}, {e.argmax.y:g})",
        )

    ry = interior_ry_min(family, cfg.interior_grid, y_min=1e-6)
    report.add(
        f"{p}.no_interior_critical",
        f"cleared dy-residual of {name} is positive on the interior of Omega",
        "> 0",
        ry,
        None,
        ry > 0,
        f"minimum over a {cfg.interior_grid}x{cfg.interior_grid} interior grid with y >= 1e-6",
    )

    st = stress_test(family, cfg.samples, cfg.seed)
    report.add(
        f"{p}.stress",
        f"{lab}: no sampled Schwarz function exceeds |H21| <= {fmt_exact(sharp)}",
        float(sharp),
        st.max_abs_h,
        VIOLATION_TOL,
        st.passed and st.max_abs_h == float(sharp),
        f"{len(st.violations)} violations in {st.count} samples (seed {st.seed}); "
        f"supremum at sample {st.argmax_index}",
    )
    report.add(
        f"{p}.triangle_chain",
        f"{'48' if family is Family.STARLIKE_SYM else '2304'}|H| <= {name}(|c1|,|c2|) on samples",
        "<= 0",
        st.triangle_gap_max,
        VIOLATION_TOL,
        st.triangle_gap_max <= VIOLATION_TOL,
    )

    count = min(cfg.pipeline_samples, cfg.samples)
    err = pipeline_max_error(family, count, cfg.seed)
    report.add(
        f"{p}.pipeline",
        f"{lab}: closed-form H in Schwarz coordinates equals series-pipeline H",
        0.0,
        err,
        PIPELINE_TOL,
        err <= PIPELINE_TOL,
        f"{count} Schur samples, series order 8",
    )


def run_verification(cfg: VerifyConfig | None = None) -> VerificationReport:
    cfg = cfg or VerifyConfig()
    report = VerificationReport(config=cfg.as_dict())
    _common_claims(report, cfg)
    for family in cfg.families:
        _family_claims(report, family, cfg)
    return report

