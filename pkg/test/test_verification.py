"""Test the verification suites."""

import pytest

from koszulx.config import SessionConfig
from koszulx.exception import PreconditionError
from koszulx.verification import SUITES, CaseResult, _Case, _run_case, run_suite


def _failing():
    raise PreconditionError("not applicable")


class TestRunSuite:
    """Test the run_suite function."""

    def test_unknown(self):
        """Test that unknown suites raise."""
        with pytest.raises(ValueError):
            run_suite("no-such-suite")

    def test_sym2(self):
        """Test that every fixture passes the Sym_2 suite."""
        results = run_suite("sym2", SessionConfig(p=32003))
        assert [r.name for r in results] == [
            "coordinate-triangle",
            "fat-point",
            "fat-point-length-4",
            "reduced-point",
            "complete-intersection",
        ]
        assert all(r.passed for r in results)

    def test_progress(self):
        """Test that progress sees every result in order."""
        seen = []
        results = run_suite("herzog", SessionConfig(p=32003), trials=2, progress=seen.append)
        assert seen == results
        assert [r.name for r in results] == ["random-0", "random-1"]
        assert all(r.passed for r in results)

    def test_saturation_lemma(self):
        """Test the saturation suite on its fixtures only."""
        results = run_suite("saturation-lemma", SessionConfig(p=32003), trials=0)
        assert len(results) == 6
        assert all(r.passed for r in results), [r.detail for r in results]

    @pytest.mark.slow
    @pytest.mark.parametrize("suite", SUITES)
    def test_all_suites(self, suite):
        """Test every suite with a few random cases."""
        results = run_suite(suite, SessionConfig(p=32003, seed=3), trials=3)
        assert all(r.passed for r in results), [r.to_dict() for r in results if not r.passed]

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "suite, count",
        [
            ("main-theorem", 107),
            ("herzog", 100),
            ("arrangements", 16),
            ("five-points", 3),
            ("sym2", 5),
            ("saturation-lemma", 31),
            ("oracle", 57),
        ],
    )
    def test_default_sizes(self, suite, count):
        """Test every suite at its default number of cases."""
        results = run_suite(suite, SessionConfig(p=32003, seed=0))
        assert len(results) == count
        assert all(r.passed for r in results), [r.to_dict() for r in results if not r.passed]

    @pytest.mark.slow
    def test_workers(self):
        """Test that worker processes give the same results in order."""
        serial = run_suite("main-theorem", SessionConfig(p=32003), trials=2)
        parallel = run_suite("main-theorem", SessionConfig(p=32003, workers=2), trials=2)
        assert parallel == serial


class TestCaseResult:
    """Test CaseResult and the case runner."""

    def test_to_dict(self):
        """Test the JSON description."""
        assert CaseResult("a", True, "ok").to_dict() == {"name": "a", "passed": True, "detail": "ok"}

    def test_error_fails_case(self):
        """Test that an engine error turns into a failed case."""
        result = _run_case(_Case("broken", _failing, ()))
        assert not result.passed
        assert result.detail == "PreconditionError: not applicable"
