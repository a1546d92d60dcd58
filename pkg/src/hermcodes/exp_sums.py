"""Exponential sums T(alpha) as exact integers, and weights derived from them.

T is a sum of p-th roots of unity, sum_r N_r * zeta^r. It equals an integer
exactly when N_1 = ... = N_{p-1}, in which case T = N_0 - N_1. We count
residues and check that condition instead of touching complex numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .code_construct import WeightDistribution, tuple_basis
from .errors import InternalInconsistency, NonIntegralWeight, NonRationalSum
from .finite_field import ZERO
from .hermitian_graph import gaussian_binomial
from .span import profile_span


@dataclass(frozen=True)
class ResidueCounts:
    counts: tuple

    @property
    def p(self):
        return len(self.counts)

    def value(self):
        """The integer sum_r N_r zeta_p^r; raises if it is not rational."""
        nonzero = self.counts[1:]
        if any(c != nonzero[0] for c in nonzero):
            raise NonRationalSum(f"residue counts {self.counts} are not Galois-balanced")
        return self.counts[0] - nonzero[0]


def subfield_index(ctx, logs, degree):
    """Map exponents of GF(p^degree) elements to indices of ``subfield_trace``."""
    step = (ctx.order - 1) // (ctx.p**degree - 1)
    logs = np.asarray(logs, dtype=np.int64)
    return np.where(logs == ZERO, -1, logs // step)


def form_values(ctx, coeffs, xs):
    """Tr_1^m(a0 x^(p^m+1)) + sum_j Tr_1^n(a_j x^(p^(2j-1)+1)) mod p, for each x in ``xs``."""
    params = ctx.params
    classes = params.exponent_classes()
    xs = np.asarray(xs, dtype=np.int64)
    out = np.zeros(xs.shape, dtype=np.int64)
    if coeffs.alpha0 != ZERO:
        y = ctx.mul_arrays(ctx.power_arrays(xs, classes[0]), coeffs.alpha0)
        out += ctx.subfield_trace(params.m)[subfield_index(ctx, y, params.m)]
    for a, e in zip(coeffs.alphas, classes[1:]):
        if a != ZERO:
            out += ctx.prime_trace[ctx.mul_arrays(ctx.power_arrays(xs, e), a)]
    return out % params.p


def field_points(ctx):
    """Every element of GF(q) as an exponent, in coefficient-vector order (0 first)."""
    return ctx.log.copy()


def residue_counts(ctx, coeffs):
    coeffs.check(ctx)
    vals = form_values(ctx, coeffs, field_points(ctx))
    return ResidueCounts(tuple(int(c) for c in np.bincount(vals, minlength=ctx.p)))


def exp_sum_T(ctx, coeffs):
    """T(alpha_0, ..., alpha_t) = sum over x in GF(q) of zeta_p^(form value)."""
    return residue_counts(ctx, coeffs).value()


def weight_from_T(params, T):
    """Hamming weight p^(n-1)(p-1) - (p-1)/p * T of the codeword with sum T."""
    p = params.p
    if T % p:
        raise NonIntegralWeight(f"T = {T} is not divisible by p = {p}")
    w = p ** (params.n - 1) * (p - 1) - (p - 1) * (T // p)
    if w < 0 or w > params.q - 1:
        raise NonIntegralWeight(f"T = {T} gives weight {w} outside [0, q-1]")
    return w


def form_basis(ctx, points):
    """Form values of each ``tuple_basis`` element at ``points``; one row per tuple."""
    return np.array([form_values(ctx, c, points) for c in tuple_basis(ctx)], dtype=np.int64)


def t_value_distribution(ctx, spec=None, *, cap=None, workers=1):
    """Exact multiset {T(alpha)} over all p^(m^2) coefficient tuples."""
    points = field_points(ctx)
    prof = profile_span(form_basis(ctx, points), ctx.p, cap=cap, workers=workers)
    if prof.unbalanced:
        raise NonRationalSum(f"{prof.unbalanced} tuples gave a non-rational T")
    p, q = ctx.p, ctx.order
    dist = {}
    for n0, count in prof.items():
        n1, rem = divmod(q - n0, p - 1)
        if rem:
            raise NonRationalSum(f"N_0 = {n0} leaves an unequal split of residues")
        dist[n0 - n1] = dist.get(n0 - n1, 0) + count
    return dict(sorted(dist.items()))


def weights_from_T_distribution(params, dist):
    lines = {}
    for T, count in dist.items():
        w = weight_from_T(params, T)
        lines[w] = lines.get(w, 0) + count
    return WeightDistribution(lines, params.q - 1, params.dimension, params.p)


def weights_from_spectrum(params, spectrum):
    """Weights from Cayley eigenvalues theta via T = (p+1)*theta + 1."""
    dist = {}
    for theta, count in spectrum.items():
        T = (params.p + 1) * theta + 1
        dist[T] = dist.get(T, 0) + count
    return weights_from_T_distribution(params, dist)


def closed_form_weight(p, m, j):
    """w_j = (p^2m - p^(2m-1)) * (1 - 1/(-p)^j)."""
    w = (p ** (2 * m) - p ** (2 * m - 1)) * (1 - Fraction(1, (-p) ** j))
    if w.denominator != 1:
        raise NonIntegralWeight(f"w_{j} = {w} is not an integer")
    return int(w)


def closed_form_count(p, m, j):
    """f_j = [m, j]_{-p} * prod_{l<j} (p^m - (-p)^l)."""
    count = gaussian_binomial(m, j, -p)
    for ell in range(j):
        count *= p**m - (-p) ** ell
    return count


def closed_form_weight_distribution(params):
    """Weight distribution of C(p, m) in closed form (no field arithmetic)."""
    p, m = params.p, params.m
    lines = {0: 1}
    for j in range(1, m + 1):
        w = closed_form_weight(p, m, j)
        lines[w] = lines.get(w, 0) + closed_form_count(p, m, j)
    dist = WeightDistribution(lines, params.q - 1, params.dimension, p)
    if m >= 3:
        expected = (p ** (2 * m) - p ** (2 * m - 1)) * (1 - Fraction(1, p * p))
        if dist.min_distance != expected:
            raise InternalInconsistency(
                f"minimum distance {dist.min_distance} != {expected}"
            )
    return dist
