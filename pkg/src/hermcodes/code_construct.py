"""The cyclic code C(p, m): parity-check polynomial, codewords, brute-force weights."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import InternalInconsistency, NotInSubfield
from .finite_field import ZERO, PolyFp, minimal_polynomial, rank_mod_p
from .span import profile_span


@dataclass(frozen=True)
class CoefficientTuple:
    """(alpha_0, alpha_1, ..., alpha_t): alpha_0 in GF(p^m), the rest in GF(q)."""

    alpha0: int
    alphas: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(int(a) for a in self.alphas))

    @classmethod
    def zero(cls, t):
        return cls(ZERO, (ZERO,) * t)

    def check(self, ctx):
        if len(self.alphas) != ctx.params.t:
            raise ValueError(f"expected {ctx.params.t} alphas, got {len(self.alphas)}")
        if not ctx.in_subfield(self.alpha0, ctx.params.m):
            raise NotInSubfield(f"alpha0 = pi^{self.alpha0} is not in GF(p^m)")
        return self


@dataclass(frozen=True)
class CodeSpec:
    params: object
    h_factors: tuple
    parity_check: PolyFp

    @property
    def length(self):
        return self.params.q - 1

    @property
    def dimension(self):
        return self.params.m ** 2


@dataclass(frozen=True)
class WeightDistribution:
    """Exact weight histogram plus the code's [length, dimension, min_distance]."""

    lines: dict
    length: int
    dimension: int
    p: int

    def __post_init__(self):
        lines = {int(w): int(a) for w, a in sorted(self.lines.items()) if a}
        object.__setattr__(self, "lines", lines)
        if lines.get(0) != 1:
            raise InternalInconsistency("weight 0 must occur exactly once")
        if sum(lines.values()) != self.p**self.dimension:
            raise InternalInconsistency(
                f"counts sum to {sum(lines.values())}, expected {self.p}^{self.dimension}"
            )
        if any(w < 0 or w > self.length for w in lines):
            raise InternalInconsistency("weight outside [0, length]")

    @property
    def min_distance(self):
        nonzero = [w for w in self.lines if w]
        return min(nonzero) if nonzero else 0

    def weight_sum(self):
        return sum(w * a for w, a in self.lines.items())

    def enumerator(self):
        terms = ["1"]
        terms += [f"{a}*x^{w}" for w, a in self.lines.items() if w]
        return " + ".join(terms)

    def to_dict(self, m=None):
        out = {
            "p": self.p,
            "length": self.length,
            "dimension": self.dimension,
            "min_distance": self.min_distance,
            "weights": [{"w": w, "A": str(a)} for w, a in self.lines.items()],
        }
        if m is not None:
            out["m"] = m
        return out

    def to_csv(self):
        return "w,A\n" + "".join(f"{w},{a}\n" for w, a in self.lines.items())


def _poly_product(polys, p):
    out = PolyFp((1,), p)
    for h in polys:
        out = out * h
    return out


def build_code(params, ctx):
    """Parity-check factors h_0, ..., h_t and their product, with every degree claim checked."""
    if ctx.params != params:
        raise ValueError("field context was built for different parameters")
    p, m, n, q = params.p, params.m, params.n, params.q
    classes = params.exponent_classes()
    factors = tuple(minimal_polynomial(ctx, ctx.elem(-e)) for e in classes)
    expected = [m] + [n] * params.t
    for i, (h, d) in enumerate(zip(factors, expected)):
        if h.degree != d:
            raise InternalInconsistency(f"deg h_{i} = {h.degree}, expected {d}")
    if len(set(factors)) != len(factors):
        raise InternalInconsistency("parity-check factors are not pairwise distinct")
    parity = _poly_product(factors, p)
    if parity.degree != m * m:
        raise InternalInconsistency(f"deg h = {parity.degree}, expected {m * m}")
    if not divides_x_power_minus_one(parity, q - 1):
        raise InternalInconsistency("parity-check polynomial does not divide X^(q-1) - 1")
    return CodeSpec(params, factors, parity)


def divides_x_power_minus_one(poly, length):
    """Whether ``poly`` divides X^length - 1, via X^length mod poly."""
    x = PolyFp((0, 1), poly.p)
    return x.powmod(length, poly) == PolyFp((1,), poly.p) % poly


def codeword(spec, ctx, coeffs):
    """Symbols c_i, 0 <= i <= q-2, as an int array over GF(p)."""
    params = spec.params
    coeffs.check(ctx)
    p, m = params.p, params.m
    mo = ctx.order - 1
    i = np.arange(mo, dtype=np.int64)
    classes = params.exponent_classes()
    word = np.zeros(mo, dtype=np.int64)
    if coeffs.alpha0 != ZERO:
        # alpha0 * pi^(i(p^m+1)) = gamma^(k0 + i) with gamma = pi^(p^m+1)
        k0 = coeffs.alpha0 // classes[0]
        word += ctx.subfield_trace(m)[(k0 + i) % (p**m - 1)]
    for a, e in zip(coeffs.alphas, classes[1:]):
        if a != ZERO:
            word += ctx.prime_trace[(a + i * e) % mo]
    return word % p


def hamming_weight(word):
    return int(np.count_nonzero(word))


def tuple_basis(ctx):
    """A GF(p)-basis of the coefficient space, m^2 tuples long.

    alpha_0 runs over gamma^k (k < m, gamma = pi^(p^m+1) primitive in GF(p^m));
    each alpha_j runs over pi^k (k < n), the polynomial basis of GF(q).
    """
    params = ctx.params
    step = params.exponent_classes()[0]
    t = params.t
    basis = [CoefficientTuple(k * step, (ZERO,) * t) for k in range(params.m)]
    for j in range(t):
        for k in range(params.n):
            alphas = [ZERO] * t
            alphas[j] = k
            basis.append(CoefficientTuple(ZERO, tuple(alphas)))
    return basis


def codeword_basis(spec, ctx):
    rows = np.array([codeword(spec, ctx, c) for c in tuple_basis(ctx)], dtype=np.int64)
    rank = rank_mod_p(rows, ctx.p)
    if rank != spec.dimension:
        raise InternalInconsistency(f"codeword basis has rank {rank}, expected {spec.dimension}")
    return rows


def brute_force_weight_distribution(spec, ctx, *, cap=None, workers=1):
    """Weight histogram over every one of the p^(m^2) codewords.

    Codewords are enumerated as GF(p)-combinations of the codewords of
    ``tuple_basis``; full rank of that basis means the p^(m^2) combinations
    are pairwise distinct.
    """
    basis = codeword_basis(spec, ctx)
    prof = profile_span(basis, ctx.p, cap=cap, workers=workers)
    lines = {spec.length - z: c for z, c in prof.items()}
    return WeightDistribution(lines, spec.length, spec.dimension, ctx.p)


def shift_coefficients(ctx, coeffs):
    """Coefficients of the codeword cyclically shifted left by one position."""
    classes = ctx.params.exponent_classes()
    return CoefficientTuple(
        ctx.mul(coeffs.alpha0, ctx.elem(classes[0])),
        tuple(ctx.mul(a, ctx.elem(e)) for a, e in zip(coeffs.alphas, classes[1:])),
    )


def add_coefficients(ctx, a, b):
    return CoefficientTuple(
        ctx.add(a.alpha0, b.alpha0),
        tuple(ctx.add(x, y) for x, y in zip(a.alphas, b.alphas)),
    )


def all_coefficient_tuples(ctx):
    """Every coefficient tuple, lexicographic in exponent order (ZERO first)."""
    params = ctx.params
    sub = [ZERO] + list(range(0, ctx.order - 1, params.exponent_classes()[0]))
    full = [ZERO] + list(range(ctx.order - 1))
    for a0 in sub:
        for rest in itertools.product(full, repeat=params.t):
            yield CoefficientTuple(a0, rest)


def random_coefficient_tuple(ctx, rng):
    params = ctx.params
    step = params.exponent_classes()[0]
    k = int(rng.integers(0, params.p**params.m))
    a0 = ZERO if k == 0 else (k - 1) * step
    alphas = tuple(int(x) - 1 for x in rng.integers(0, ctx.order, size=params.t))
    return CoefficientTuple(a0, alphas)
