"""Verification suites run by ``kv verify``.

A suite is a list of independent cases. Each case is a module-level function
called with plain arguments, so that cases can be shipped to worker
processes; results are always returned in case order.
"""

from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from koszulx.algorithms.hilbert import hilbert_function, oracle_hilbert
from koszulx.algorithms.kv import check_I2_IIsat, check_saturated_KV, kv_verdict
from koszulx.algorithms.sym2 import sym2_euler_check
from koszulx.classes.field import GF
from koszulx.classes.module import QuotientModule, Submodule
from koszulx.config import SessionConfig
from koszulx.datasets.arrangements import (
    ArrangementSpec,
    arrangement_report,
    build_arrangement,
    jacobian_ideal,
)
from koszulx.datasets.fixtures import LCI_FIXTURES, SATURATED_FIXTURES, fixture
from koszulx.datasets.random_ideals import five_points_counterexample, random_codim2_ideal
from koszulx.exception import KoszulXError
from koszulx.read_write import format_polynomials, parse_polynomials

__all__ = ["CaseResult", "SUITES", "DEFAULT_TRIALS", "run_suite"]

SUITES = (
    "main-theorem",
    "herzog",
    "arrangements",
    "five-points",
    "sym2",
    "saturation-lemma",
    "oracle",
)
DEFAULT_TRIALS = {"main-theorem": 100, "herzog": 100, "saturation-lemma": 25, "oracle": 50}
ORACLE_DEGREE = 8
ORACLE_FIXTURES = (*SATURATED_FIXTURES, "unsaturated-fat-point", "regular-sequence")


@dataclass(frozen=True)
class CaseResult:
    """Outcome of one verification case."""

    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        """Return a JSON-compatible description."""
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class _Case:
    name: str
    func: Callable
    args: tuple


def _random_forms(p: int, seed: int, index: int, degrees=(2, 3, 4)):
    rng = np.random.default_rng([seed, index])
    return random_codim2_ideal(rng, GF(p), degrees=degrees)


def _fixture_texts(p: int, names) -> list[tuple[str, str]]:
    return [(name, format_polynomials(fixture(name, GF(p)))) for name in names]


def _three_generated_inputs(p: int) -> list[tuple[str, str]]:
    named = _fixture_texts(
        p, ("coordinate-triangle", "fat-point", "fat-point-length-4", "unsaturated-fat-point")
    )
    for m, n in ((1, 1), (2, 1), (1, 2)):
        spec = ArrangementSpec(m, n, tuple(range(1, m + 1)), tuple(range(1, n + 1)), GF(p))
        J = jacobian_ideal(build_arrangement(spec))
        named.append((f"arrangement-{m}-{n}", format_polynomials(J.polynomials())))
    return named


def _main_theorem_case(p: int, text: str | None, seed: int, index: int, degree_cap: int) -> tuple[bool, str]:
    forms = parse_polynomials(text, GF(p)) if text else _random_forms(p, seed, index)
    report = kv_verdict(forms, degree_cap)
    detail = (
        f"K=V {report.verdict_KeqV}, lci {report.verdict_lci}, slack {report.herzog_slack}"
    )
    return report.verdict_theorem_consistent is True, detail


def _herzog_case(p: int, seed: int, index: int, degree_cap: int) -> tuple[bool, str]:
    report = kv_verdict(_random_forms(p, seed, index), degree_cap)
    return report.herzog_slack >= 0, f"deg Z {report.deg_Z}, slack {report.herzog_slack}"


def _arrangement_case(p: int, seed: int, m: int, n: int, degree_cap: int) -> tuple[bool, str]:
    spec = ArrangementSpec.random(m, n, np.random.default_rng([seed, m, n]), GF(p))
    report = arrangement_report(spec, degree_cap)
    failed = [name for name, ok in report.checks.items() if not ok]
    return report.passed, f"deg Z {report.kv.deg_Z}, shifts {report.shifts}" + (
        f", failed {failed}" if failed else ""
    )


def _five_points_case(p: int, seed: int, degree_cap: int) -> tuple[bool, str]:
    report = five_points_counterexample(seed, GF(p), degree_cap)
    failed = [name for name, ok in report.checks.items() if not ok]
    detail = f"witness {report.witness}" if report.witness is not None else "no witness"
    return report.passed, detail + (f", failed {failed}" if failed else "")


def _sym2_case(p: int, text: str, degree_cap: int) -> tuple[bool, str]:
    forms = parse_polynomials(text, GF(p))
    sym2 = sym2_euler_check(Submodule.ideal(forms, GF(p)))
    lci = kv_verdict(forms, degree_cap).verdict_lci
    return sym2.verdict_iso == lci, f"total discrepancy {sym2.total_discrepancy}, lci {lci}"


def _saturation_case(p: int, text: str | None, seed: int, index: int, degree_cap: int) -> tuple[bool, str]:
    forms = parse_polynomials(text, GF(p)) if text else _random_forms(p, seed, index)
    saturated = check_saturated_KV(forms, degree_cap)
    same = check_I2_IIsat(forms, degree_cap)
    detail = f"K {saturated.K}, V {saturated.V}, S {saturated.S}, I^2 ~ I*I^sat {same}"
    return bool(saturated) and same, detail


def _oracle_case(p: int, text: str | None, seed: int, index: int) -> tuple[bool, str]:
    field = GF(p)
    forms = parse_polynomials(text, field) if text else _random_forms(p, seed, index, degrees=(2, 3))
    I = Submodule.ideal(forms, field)
    for M in (I, QuotientModule(I)):
        for n in range(ORACLE_DEGREE + 1):
            if hilbert_function(M, n) != oracle_hilbert(M, n):
                return False, f"disagreement in degree {n} for {M!r}"
    return True, f"agree up to degree {ORACLE_DEGREE}"


def _cases(suite: str, config: SessionConfig, trials: int | None) -> list[_Case]:
    p, seed, cap = config.p, config.seed, config.degree_cap
    count = DEFAULT_TRIALS.get(suite, 0) if trials is None else trials
    if suite == "main-theorem":
        cases = [
            _Case(name, _main_theorem_case, (p, text, seed, 0, cap))
            for name, text in _three_generated_inputs(p)
        ]
        cases += [
            _Case(f"random-{i}", _main_theorem_case, (p, None, seed, i, cap)) for i in range(count)
        ]
        return cases
    if suite == "herzog":
        return [_Case(f"random-{i}", _herzog_case, (p, seed, i, cap)) for i in range(count)]
    if suite == "arrangements":
        return [
            _Case(f"m={m} n={n}", _arrangement_case, (p, seed, m, n, cap))
            for m in range(1, 5)
            for n in range(1, 5)
        ]
    if suite == "five-points":
        return [_Case(f"seed {seed + k}", _five_points_case, (p, seed + k, cap)) for k in range(3)]
    if suite == "sym2":
        names = [*SATURATED_FIXTURES]
        return [_Case(name, _sym2_case, (p, text, cap)) for name, text in _fixture_texts(p, names)]
    if suite == "saturation-lemma":
        names = [*LCI_FIXTURES, "fat-point", "fat-point-length-4", "unsaturated-fat-point"]
        cases = [
            _Case(name, _saturation_case, (p, text, seed, 0, cap))
            for name, text in _fixture_texts(p, names)
        ]
        cases += [
            _Case(f"random-{i}", _saturation_case, (p, None, seed, i, cap)) for i in range(count)
        ]
        return cases
    if suite == "oracle":
        cases = [
            _Case(name, _oracle_case, (p, text, seed, 0))
            for name, text in _fixture_texts(p, ORACLE_FIXTURES)
        ]
        cases += [_Case(f"random-{i}", _oracle_case, (p, None, seed, i)) for i in range(count)]
        return cases
    raise ValueError(f"unknown suite {suite!r}, choose from {', '.join(SUITES)}")


def _run_case(case: _Case) -> CaseResult:
    try:
        passed, detail = case.func(*case.args)
    except KoszulXError as error:
        return CaseResult(case.name, False, f"{type(error).__name__}: {error}")
    return CaseResult(case.name, bool(passed), detail)


def run_suite(
    suite: str, config: SessionConfig | None = None, trials: int | None = None, progress=None
) -> list[CaseResult]:
    """Run a verification suite.

    Parameters
    ----------
    suite : str
        One of :data:`SUITES`.
    config : SessionConfig, optional
        Field, seed, degree cap and number of worker processes.
    trials : int, optional
        Number of random cases, where the suite has any.
    progress : callable, optional
        Called with each result as it becomes available, in case order.

    Returns
    -------
    list of CaseResult
        One result per case, in case order whatever the number of workers.

    Raises
    ------
    ValueError
        If `suite` is unknown.
    """
    config = config if config is not None else SessionConfig()
    cases = _cases(suite, config, trials)
    results = []
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            outcomes = pool.map(_run_case, cases)
            for result in outcomes:
                results.append(result)
                if progress:
                    progress(result)
    else:
        for case in cases:
            result = _run_case(case)
            results.append(result)
            if progress:
                progress(result)
    return results
