"""Cay(G, S) on G = GF(p^m) x GF(q)^t, its character-sum spectrum, and the map phi.

phi sends an m x m Hermitian matrix H over GF(p^2) to
(f_H(e, e^(p^m)), f_H(e, e^p), f_H(e, e^(p^3)), ..., f_H(e, e^(p^(m-2))))
with f_H(x, y) = x H y^T and e a GF(p^2)-basis of GF(q). It is a group
isomorphism carrying the rank-1 matrices onto S, so the Hermitian forms
graph and Cay(G, S) share a spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .code_construct import tuple_basis
from .errors import InternalInconsistency, NonRationalSum, NotABasis, VerificationFailed
from .exp_sums import ResidueCounts, subfield_index
from .finite_field import ZERO, matrix_rank
from .hermitian_graph import HermitianMatrix, QuadraticSpace, enumerate_rank1
from .span import default_cap, profile_span


class GroupElement(NamedTuple):
    u0: int
    u: tuple


def group_add(ctx, a, b):
    return GroupElement(ctx.add(a.u0, b.u0), tuple(ctx.add(x, y) for x, y in zip(a.u, b.u)))


def group_identity(ctx):
    return GroupElement(ZERO, (ZERO,) * ctx.params.t)


@dataclass(frozen=True)
class ConnectionSet:
    elements: tuple
    u0: np.ndarray = field(repr=False, compare=False)
    u: np.ndarray = field(repr=False, compare=False)

    def __len__(self):
        return len(self.elements)

    def as_set(self):
        return set(self.elements)


def _negate(ctx, g):
    return GroupElement(ctx.neg(g.u0), tuple(ctx.neg(x) for x in g.u))


def build_connection_set(ctx):
    """S = {(x^(p^m+1), x^(p+1), x^(p^3+1), ..., x^(p^(m-2)+1)) : x != 0}."""
    params = ctx.params
    mo = ctx.order - 1
    classes = params.exponent_classes()
    seen = {}
    for i in range(mo):
        g = GroupElement(i * classes[0] % mo, tuple(i * e % mo for e in classes[1:]))
        seen.setdefault(g, None)
    elements = tuple(seen)
    expected = (params.q - 1) // (params.p + 1)
    if len(elements) != expected:
        raise InternalInconsistency(f"|S| = {len(elements)}, expected {expected}")
    as_set = set(elements)
    if any(_negate(ctx, g) not in as_set for g in elements):
        raise InternalInconsistency("S is not closed under negation")
    u0 = np.array([g.u0 for g in elements], dtype=np.int64)
    u = np.array([g.u for g in elements], dtype=np.int64).reshape(len(elements), params.t)
    return ConnectionSet(elements, u0, u)


def character_exponents(ctx, coeffs, S):
    """Tr_1^m(a0 u0) + sum_j Tr_1^n(a_j u_j) mod p, for every u in S."""
    params = ctx.params
    out = np.zeros(len(S), dtype=np.int64)
    if coeffs.alpha0 != ZERO:
        y = ctx.mul_arrays(S.u0, coeffs.alpha0)
        out += ctx.subfield_trace(params.m)[subfield_index(ctx, y, params.m)]
    for j, a in enumerate(coeffs.alphas):
        if a != ZERO:
            out += ctx.prime_trace[ctx.mul_arrays(S.u[:, j], a)]
    return out % params.p


def character_value(ctx, coeffs, S):
    """chi_alpha(S) as an exact integer."""
    coeffs.check(ctx)
    vals = character_exponents(ctx, coeffs, S)
    return ResidueCounts(tuple(int(c) for c in np.bincount(vals, minlength=ctx.p))).value()


def spectrum_of_cayley(ctx, spec=None, S=None, *, cap=None, workers=1):
    """Eigenvalue multiset {chi(S)} over all p^(m^2) characters of G."""
    if S is None:
        S = build_connection_set(ctx)
    basis = np.array([character_exponents(ctx, c, S) for c in tuple_basis(ctx)], dtype=np.int64)
    prof = profile_span(basis, ctx.p, cap=cap, workers=workers)
    if prof.unbalanced:
        raise NonRationalSum(f"{prof.unbalanced} characters gave a non-rational chi(S)")
    p, size = ctx.p, len(S)
    spectrum = {}
    for n0, count in prof.items():
        n1, rem = divmod(size - n0, p - 1)
        if rem:
            raise NonRationalSum(f"N_0 = {n0} leaves an unequal split of residues")
        spectrum[n0 - n1] = spectrum.get(n0 - n1, 0) + count
    return dict(sorted(spectrum.items()))


# ---------------------------------------------------------------------------
# phi and the Moore matrix
# ---------------------------------------------------------------------------


def moore_matrix(ctx, basis):
    """Rows e_a, columns e_a^(p^(2i-1)) for i = 1..m."""
    m = ctx.params.m
    return [[ctx.frobenius(e, 2 * i - 1) for i in range(1, m + 1)] for e in basis]


def moore_matrix_nonsingular(ctx, basis):
    m = ctx.params.m
    if len(basis) != m:
        return False
    return matrix_rank(ctx, moore_matrix(ctx, basis)) == m


def default_basis(ctx):
    """(1, pi, ..., pi^(m-1)), or the first power basis of pi^s passing the Moore test."""
    m = ctx.params.m
    for s in range(1, ctx.order - 1):
        cand = [ctx.power(ctx.elem(s), k) for k in range(m)]
        if moore_matrix_nonsingular(ctx, cand):
            return cand
    raise InternalInconsistency("no power basis of GF(q) over GF(p^2) found")


def hermitian_space(ctx):
    """GF(p^2) inside the code's field, as used by the matrices phi acts on."""
    return QuadraticSpace(ctx, ctx.params.p)


def _phi_exponents(ctx):
    p, m = ctx.params.p, ctx.params.m
    return [p**m] + [p ** (2 * j - 1) for j in range(1, ctx.params.t + 1)]


def _require_basis(ctx, basis):
    if not moore_matrix_nonsingular(ctx, basis):
        raise NotABasis("Moore matrix of the basis is singular")


def phi(ctx, basis, H, *, checked=False):
    """Image of H under phi."""
    if not checked:
        _require_basis(ctx, basis)
    m = ctx.params.m
    if H.d != m:
        raise ValueError(f"expected a {m} x {m} matrix")
    coords = []
    for s in _phi_exponents(ctx):
        terms = []
        for a in range(m):
            for b in range(m):
                h = H.entries[a][b]
                if h != ZERO:
                    terms.append(ctx.mul(ctx.mul(basis[a], h), ctx.power(basis[b], s)))
        coords.append(ctx.sum(terms))
    if not ctx.in_subfield(coords[0], m):
        raise InternalInconsistency("first coordinate of phi(H) is not in GF(p^m)")
    return GroupElement(coords[0], tuple(coords[1:]))


def _all_hermitian_arrays(ctx, space):
    """Every m x m Hermitian matrix as an (N, m, m) exponent array, N = p^(m^2)."""
    m, p = ctx.params.m, ctx.params.p
    diag_vals = np.array(space.base_elements(), dtype=np.int64)
    off_vals = np.array(space.elements(), dtype=np.int64)
    conj_vals = np.array([space.conj(int(x)) for x in off_vals], dtype=np.int64)
    upper = [(i, j) for i in range(m) for j in range(i + 1, m)]
    total = p ** (m * m)
    idx = np.arange(total, dtype=np.int64)
    H = np.full((total, m, m), ZERO, dtype=np.int64)
    for i in range(m):
        H[:, i, i] = diag_vals[idx % p]
        idx //= p
    for i, j in upper:
        pick = idx % (p * p)
        idx //= p * p
        H[:, i, j] = off_vals[pick]
        H[:, j, i] = conj_vals[pick]
    return H


def _phi_arrays(ctx, basis, H):
    """phi applied to a stack of matrices; returns (N, t+1) exponent array."""
    m = ctx.params.m
    out = []
    for s in _phi_exponents(ctx):
        acc = np.zeros(H.shape[0], dtype=np.int64)
        for a in range(m):
            for b in range(m):
                w = ctx.mul(basis[a], ctx.power(basis[b], s))
                acc = ctx.vadd(acc, ctx.exp_ext[ctx.mul_arrays(H[:, a, b], w)])
        out.append(ctx.log[acc])
    return np.stack(out, axis=1)


@dataclass
class IsoReport:
    p: int
    m: int
    clauses: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def record(self, name, passed, detail=""):
        self.clauses[name] = bool(passed)
        self.details[name] = detail

    @property
    def passed(self):
        return all(self.clauses.values())

    def first_failure(self):
        return next((k for k, ok in self.clauses.items() if not ok), None)

    def to_dict(self):
        return {
            "p": self.p,
            "m": self.m,
            "passed": self.passed,
            "clauses": [
                {"name": k, "passed": ok, "detail": self.details[k]} for k, ok in self.clauses.items()
            ],
        }

    def to_text(self):
        lines = [f"phi isomorphism check, p={self.p} m={self.m}"]
        for k, ok in self.clauses.items():
            lines.append(f"  [{'PASS' if ok else 'FAIL'}] {k}: {self.details[k]}")
        n_ok = sum(self.clauses.values())
        lines.append(f"{'PASS' if self.passed else 'FAIL'} ({n_ok}/{len(self.clauses)} clauses)")
        return "\n".join(lines)


def _random_hermitian(ctx, space, rng):
    m = ctx.params.m
    diag = space.base_elements()
    off = space.elements()
    rows = [[ZERO] * m for _ in range(m)]
    for i in range(m):
        rows[i][i] = diag[rng.integers(len(diag))]
        for j in range(i + 1, m):
            x = off[rng.integers(len(off))]
            rows[i][j] = x
            rows[j][i] = space.conj(x)
    return HermitianMatrix(space, tuple(tuple(r) for r in rows))


def verify_isomorphism(ctx, basis=None, *, cap=None, samples=200, seed=0, strict=True):
    """Check that phi is an isomorphism of groups with phi(D) = S.

    Clauses: homomorphism (sampled pairs), injectivity (Moore matrix, plus an
    exhaustive kernel and image count when p^(m^2) is within ``cap``),
    phi(D) = S, and |H| = |G| = p^(m^2).
    """
    params = ctx.params
    p, m = params.p, params.m
    basis = default_basis(ctx) if basis is None else list(basis)
    _require_basis(ctx, basis)
    cap = default_cap() if cap is None else cap
    space = hermitian_space(ctx)
    rng = np.random.default_rng(seed)
    report = IsoReport(p, m)

    bad = 0
    for _ in range(samples):
        h1 = _random_hermitian(ctx, space, rng)
        h2 = _random_hermitian(ctx, space, rng)
        lhs = phi(ctx, basis, h1 + h2, checked=True)
        rhs = group_add(ctx, phi(ctx, basis, h1, checked=True), phi(ctx, basis, h2, checked=True))
        bad += lhs != rhs
    report.record("homomorphism", bad == 0, f"{samples - bad}/{samples} sampled pairs additive")

    order = p ** (m * m)
    inj_detail = "Moore matrix nonsingular"
    inj_ok = True
    exhaustive = order <= cap
    if exhaustive:
        images = _phi_arrays(ctx, basis, _all_hermitian_arrays(ctx, space))
        kernel = int(np.all(images == ZERO, axis=1).sum())
        distinct = len(np.unique(images, axis=0))
        inj_ok = kernel == 1 and distinct == order
        inj_detail += f"; exhaustive: kernel size {kernel}, {distinct}/{order} distinct images"
    report.record("injective", inj_ok, inj_detail)

    S = build_connection_set(ctx)
    D = enumerate_rank1(m, p, space=space, cap=max(cap, p ** (2 * m)))
    image = {phi(ctx, basis, H, checked=True) for H in D}
    report.record(
        "phi(D)=S",
        image == S.as_set() and len(D) == len(S),
        f"|D| = {len(D)}, |phi(D)| = {len(image)}, |S| = {len(S)}",
    )

    group_order = p**m * params.q**params.t
    herm_order = p ** (m * m)
    card_ok = group_order == herm_order == order
    detail = f"|H| = {herm_order}, |G| = {group_order}"
    if exhaustive:
        card_ok = card_ok and images.shape[0] == order
        detail += f", enumerated {images.shape[0]}"
    report.record("cardinality", card_ok, detail)

    if strict and not report.passed:
        err = VerificationFailed(report.first_failure(), report.details[report.first_failure()])
        err.report = report
        raise err
    return report


def rank1_image_coordinates(ctx, basis, a):
    """(x^(p^m+1), x^(p+1), ..., x^(p^(m-2)+1)) with x = e . a^T."""
    x = ctx.sum(ctx.mul(e, ai) for e, ai in zip(basis, a))
    classes = ctx.params.exponent_classes()
    return GroupElement(ctx.power(x, classes[0]), tuple(ctx.power(x, c) for c in classes[1:]))

