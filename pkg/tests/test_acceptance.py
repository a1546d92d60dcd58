"""Acceptance gate: one test per criterion, reported in the terminal summary."""

import time

import numpy as np
import pytest

from hermcodes.cayley_spectrum import (
    build_connection_set,
    character_value,
    default_basis,
    moore_matrix_nonsingular,
    spectrum_of_cayley,
    verify_isomorphism,
)
from hermcodes.code_construct import (
    all_coefficient_tuples,
    brute_force_weight_distribution,
    build_code,
    codeword,
    divides_x_power_minus_one,
    random_coefficient_tuple,
    shift_coefficients,
)
from hermcodes.exp_sums import closed_form_weight_distribution, exp_sum_T, weights_from_spectrum
from hermcodes.finite_field import CodeParams, build_field
from hermcodes.hermitian_graph import closed_form_spectrum, enumerate_rank1, spectrum_multiset

EXAMPLE_1 = {0: 1, 432: 5460, 504: 14040, 648: 182}
EXAMPLE_2 = {0: 1, 384: 57970, 480: 12985280, 528: 18887680, 576: 1623160, 768: 341}


def timed(fn, *args, **kw):
    start = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - start


@pytest.mark.criterion(1, "closed-form weights for (3,3) reproduce the first worked example")
def test_criterion_1():
    wd, elapsed = timed(closed_form_weight_distribution, CodeParams(3, 3))
    assert wd.lines == EXAMPLE_1
    assert elapsed < 1.0
    print(f"criterion 1: {wd.enumerator()} in {elapsed:.4f}s")


@pytest.mark.criterion(2, "closed-form weights for (2,5) reproduce the second worked example")
def test_criterion_2():
    wd, elapsed = timed(closed_form_weight_distribution, CodeParams(2, 5))
    assert wd.lines == EXAMPLE_2
    assert wd.enumerator() == "1 + 57970*x^384 + 12985280*x^480 + 18887680*x^528 + 1623160*x^576 + 341*x^768"
    assert elapsed < 1.0
    print(f"criterion 2: {wd.enumerator()} in {elapsed:.4f}s")


def three_way(p, m):
    params = CodeParams(p, m)
    ctx = build_field(params)
    brute = brute_force_weight_distribution(build_code(params, ctx), ctx, workers=1)
    via_spectrum = weights_from_spectrum(params, spectrum_of_cayley(ctx, workers=1))
    closed = closed_form_weight_distribution(params)
    return brute.lines, via_spectrum.lines, closed.lines


@pytest.mark.criterion(3, "brute force, spectrum and closed form agree for (2,3) and (3,3)")
@pytest.mark.parametrize("p,m,budget", [(2, 3, 1.0), (3, 3, 60.0)])
def test_criterion_3(warm_kernels, p, m, budget):
    (brute, spec, closed), elapsed = timed(three_way, p, m)
    assert brute == spec == closed
    assert elapsed < budget
    print(f"criterion 3 ({p},{m}): identical histograms {closed} in {elapsed:.3f}s single worker")


@pytest.mark.criterion(4, "character-sum spectrum of the Cayley graph equals the closed-form spectrum")
@pytest.mark.parametrize("p,m", [(2, 1), (2, 3), (3, 3)])
def test_criterion_4(field_ctx, p, m):
    direct = spectrum_of_cayley(field_ctx(p, m))
    assert direct == spectrum_multiset(closed_form_spectrum(m, p))
    print(f"criterion 4 ({p},{m}): {direct}")


@pytest.mark.criterion(5, "phi passes all four isomorphism clauses; default Moore matrix nonsingular")
@pytest.mark.parametrize("p,m", [(2, 3), (3, 3)])
def test_criterion_5(field_ctx, p, m):
    ctx = field_ctx(p, m)
    assert moore_matrix_nonsingular(ctx, default_basis(ctx))
    report = verify_isomorphism(ctx)
    assert report.passed and len(report.clauses) == 4
    print(f"criterion 5 ({p},{m}):\n{report.to_text()}")


@pytest.mark.criterion(6, "spectrum counting identities and rank-one counts")
def test_criterion_6():
    for r in (2, 3, 4, 5):
        for d in range(1, 8):
            lines = closed_form_spectrum(d, r)
            assert sum(ln.multiplicity for ln in lines) == r ** (d * d)
            assert sum(ln.multiplicity * ln.eigenvalue for ln in lines) == 0
    for d, r in [(1, 2), (2, 2), (3, 2), (2, 3)]:
        count = len(enumerate_rank1(d, r))
        assert count == (r ** (2 * d) - 1) // (r + 1) == closed_form_spectrum(d, r)[0].eigenvalue
    print("criterion 6: identities hold for d<=7, r in {2,3,4,5}; rank-one counts match")


@pytest.mark.criterion(7, "parity-check factor degrees, distinctness and divisibility")
@pytest.mark.parametrize("p,m", [(2, 3), (3, 3), (2, 5), (5, 3), (2, 7)])
def test_criterion_7(field_ctx, p, m):
    params = CodeParams(p, m)
    spec = build_code(params, field_ctx(p, m))
    degrees = [h.degree for h in spec.h_factors]
    assert degrees == [m] + [2 * m] * params.t
    assert len(set(spec.h_factors)) == len(spec.h_factors)
    assert spec.parity_check.degree == m * m
    assert divides_x_power_minus_one(spec.parity_check, params.q - 1)
    print(f"criterion 7 ({p},{m}): degrees {degrees}, product degree {m * m}")


@pytest.mark.criterion(8, "T = (p+1) chi(S) + 1 on every (2,3) tuple and 10^4 random (2,5) tuples")
@pytest.mark.parametrize("p,m,samples", [(2, 3, None), (2, 5, 10_000)])
def test_criterion_8(field_ctx, p, m, samples):
    ctx = field_ctx(p, m)
    S = build_connection_set(ctx)
    if samples is None:
        tuples = all_coefficient_tuples(ctx)
    else:
        rng = np.random.default_rng(8)
        tuples = (random_coefficient_tuple(ctx, rng) for _ in range(samples))
    checked = 0
    for c in tuples:
        T = exp_sum_T(ctx, c)
        assert T == (p + 1) * character_value(ctx, c, S) + 1
        assert T % (p + 1) == 1
        checked += 1
    assert checked == (p ** (m * m) if samples is None else samples)
    print(f"criterion 8 ({p},{m}): {checked} tuples")


@pytest.mark.criterion(9, "weight-sum identity, 9552816 for (3,3)")
def test_criterion_9():
    params = CodeParams(3, 3)
    total = sum(w * a for w, a in EXAMPLE_1.items())
    assert total == (params.q - 1) * (params.p - 1) * params.p ** (params.m**2 - 1) == 9_552_816
    assert closed_form_weight_distribution(params).weight_sum() == total
    print(f"criterion 9: {total}")


@pytest.mark.criterion(10, "cyclic shift of every (2,3) codeword is a codeword")
def test_criterion_10(field_ctx, code_of):
    ctx = field_ctx(2, 3)
    spec = code_of(2, 3)
    words = set()
    shifted = []
    for c in all_coefficient_tuples(ctx):
        w = codeword(spec, ctx, c)
        words.add(w.tobytes())
        rolled = np.roll(w, -1)
        assert np.array_equal(rolled, codeword(spec, ctx, shift_coefficients(ctx, c)))
        shifted.append(rolled.tobytes())
    assert len(words) == 2**9 and set(shifted) == words
    print("criterion 10: 512 codewords closed under the shift")
