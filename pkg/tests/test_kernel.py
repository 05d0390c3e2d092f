from __future__ import annotations

import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weiljet import _pykernel, kernel

ck = pytest.importorskip("weiljet._ckernel")

monos = st.dictionaries(st.integers(0, 4), st.integers(1, 4), max_size=4).map(
    lambda d: tuple(sorted(d.items()))
)
coeffs = st.one_of(st.integers(-5, 5), st.fractions(max_denominator=6)).filter(lambda c: c != 0)
term_maps = st.dictionaries(monos, coeffs, max_size=6)
gen_sets = st.lists(monos.filter(bool), max_size=3).map(tuple)


@given(monos, monos)
def test_mono_ops_agree(a, b):
    assert ck.mono_mul(a, b) == _pykernel.mono_mul(a, b)
    assert ck.mono_divides(a, b) == _pykernel.mono_divides(a, b)


@given(term_maps, term_maps, gen_sets)
def test_mul_terms_agree(ta, tb, gens):
    assert ck.mul_terms(ta, tb, gens) == _pykernel.mul_terms(ta, tb, gens)


@given(term_maps, term_maps, coeffs)
def test_add_terms_agree(ta, tb, scale):
    assert ck.add_terms(ta, tb, scale) == _pykernel.add_terms(ta, tb, scale)


@given(term_maps, gen_sets)
def test_reduce_terms_agree(t, gens):
    assert ck.reduce_terms(t, gens) == _pykernel.reduce_terms(t, gens)


def test_integral_fractions_are_normalized():
    out = _pykernel.mul_terms({(): Fraction(1, 2)}, {(): 2})
    assert out == {(): 1} and type(out[()]) is int
    out = ck.mul_terms({(): Fraction(1, 2)}, {(): 2})
    assert type(out[()]) is int


def test_compiled_backend_selected_by_default():
    if os.environ.get("WEILJET_PURE", "") not in ("", "0"):
        pytest.skip("pure kernel forced by environment")
    assert kernel.BACKEND == "cython"


def test_pure_backend_forced_by_environment():
    env = dict(os.environ, WEILJET_PURE="1")
    code = "from weiljet import kernel; print(kernel.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
