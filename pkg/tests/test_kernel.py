"""Backend parity: the compiled kernels must agree with the pure twins."""

from __future__ import annotations

import subprocess
import sys
from fractions import Fraction as F

import pytest

from fordcircles import (
    GapRelation,
    gap_relation,
    reduced_fractions_in,
    statement_v_witness,
    theorem_u_check,
)
from fordcircles import _kernel
from fordcircles._kernel import _pure

compiled = pytest.importorskip(
    "fordcircles._kernel._speedups", reason="compiled backend not built")


def _pairs(max_den_x: int, max_den_alpha: int):
    xs = [x for x in reduced_fractions_in(F(-1), F(2), max_den_x)
          if x.denominator > 1]
    alphas = list(reduced_fractions_in(F(0), F(1), max_den_alpha,
                                       include_hi=False))
    for alpha in alphas:
        for x in xs:
            yield x.numerator, x.denominator, alpha.numerator, alpha.denominator


class TestParity:
    def test_flag_functions(self):
        for a, b, p, q in _pairs(9, 9):
            assert compiled.best_flag(a, b, p, q) == _pure.best_flag(a, b, p, q)
            assert compiled.near_flag(a, b, p, q) == _pure.near_flag(a, b, p, q)
            assert compiled.witness_flag(a, b, p, q) == \
                _pure.witness_flag(a, b, p, q)
            assert compiled.pair_flags(a, b, p, q) == \
                _pure.pair_flags(a, b, p, q)

    def test_gap_class(self):
        pts = list(reduced_fractions_in(F(0), F(1), 8))
        for x in pts:
            for y in pts:
                if x == y:
                    continue
                assert compiled.gap_class(x.numerator, x.denominator,
                                          y.numerator, y.denominator) == \
                    _pure.gap_class(x.numerator, x.denominator,
                                    y.numerator, y.denominator)

    def test_identical_circles_both_raise(self):
        with pytest.raises(ValueError, match="identical circles"):
            _pure.gap_class(1, 2, 1, 2)
        with pytest.raises(ValueError, match="identical circles"):
            compiled.gap_class(1, 2, 1, 2)


class TestAgainstHighLevel:
    def test_pure_matches_theorem_u_check(self):
        # the kernels and the Fraction-based checker decide identically
        for a, b, p, q in _pairs(7, 7):
            report = theorem_u_check(F(a, b), F(p, q))
            assert _pure.best_flag(a, b, p, q) == report.stmt_iii
            assert _pure.near_flag(a, b, p, q) == report.stmt_iv
            assert _pure.witness_flag(a, b, p, q) == report.stmt_v

    def test_witness_flag_matches_search(self):
        for a, b, p, q in _pairs(8, 8):
            found = statement_v_witness(F(a, b), F(p, q)) is not None
            assert _pure.witness_flag(a, b, p, q) == found

    def test_gap_class_matches_gap_relation(self):
        pts = list(reduced_fractions_in(F(0), F(1), 9))
        for x in pts:
            for y in pts:
                if x == y:
                    continue
                cls = _pure.gap_class(x.numerator, x.denominator,
                                      y.numerator, y.denominator)
                rel = gap_relation(x, y)
                assert (cls == 0) == (rel is GapRelation.TANGENT_EQUALITY)


class TestOverflowGuard:
    def test_oversized_operands_rejected(self):
        big = 1 << 40
        with pytest.raises(OverflowError):
            compiled.best_flag(1, 2, big + 1, 2 * big)
        with pytest.raises(OverflowError):
            compiled.near_flag(big - 1, big, 1, 3)
        with pytest.raises(OverflowError):
            compiled.pair_flags(1, 2, big + 1, 2 * big)
        with pytest.raises(OverflowError):
            compiled.gap_class(1 << 20, 1, 0, 1)

    def test_pure_has_no_size_limit(self):
        big = 1 << 40
        assert isinstance(_pure.best_flag(1, 2, big + 1, 2 * big), bool)
        assert _pure.gap_class(1 << 20, 1, 0, 1) == 1

    def test_bad_denominators(self):
        with pytest.raises(ValueError, match="denominators"):
            compiled.best_flag(1, 0, 1, 2)
        with pytest.raises(ValueError, match="denominators"):
            compiled.pair_flags(1, 2, 1, 0)


class TestSelection:
    def test_active_is_compiled_here(self):
        assert _kernel.backend_name() == "compiled"
        assert _kernel.active is compiled

    def test_get_backend(self):
        assert _kernel.get_backend() is _kernel.active
        assert _kernel.get_backend("pure") is _pure
        assert _kernel.get_backend("compiled") is compiled
        with pytest.raises(ValueError, match="unknown backend"):
            _kernel.get_backend("fast")

    def test_env_var_forces_pure(self):
        code = ("import fordcircles._kernel as k; "
                "print(k.backend_name())")
        out = subprocess.run(
            [sys.executable, "-c", code],
            capture_output=True, text=True, check=True,
            env={"PATH": "/usr/bin:/bin", "FORDCIRCLES_PURE": "1"},
        )
        assert out.stdout.strip() == "pure"
