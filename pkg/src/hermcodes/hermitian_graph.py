"""Hermitian forms graphs over GF(r^2): matrices, rank-1 set, closed-form spectrum."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint

from .errors import InvalidBasis, ParameterError, TooLargeToEnumerate
from .finite_field import ZERO, GaloisField, matrix_rank
from .span import default_cap


@lru_cache(maxsize=None)
def _gauss_row(j, b):
    if j == 0:
        return (1,)
    prev = _gauss_row(j - 1, b)
    row = [1]
    for i in range(1, j + 1):
        left = prev[i - 1]
        right = prev[i] if i < j else 0
        row.append(left + b**i * right)
    return tuple(row)


def gaussian_binomial(j, i, b):
    """[j, i]_b via [j, i] = [j-1, i-1] + b^i [j-1, i]; 0 when i > j."""
    if b in (0, 1):
        raise InvalidBasis(f"Gaussian binomial basis must not be 0 or 1, got {b}")
    if i < 0 or j < 0:
        raise ParameterError(f"indices must be non-negative, got j={j}, i={i}")
    if i > j:
        return 0
    return _gauss_row(j, b)[i]


@dataclass(frozen=True)
class SpectrumLine:
    j: int
    eigenvalue: int
    multiplicity: int


def prime_power_base(r):
    """(p, k) with r = p^k, or ParameterError."""
    if not isinstance(r, int) or r < 2:
        raise ParameterError(f"r must be a prime power >= 2, got {r}")
    f = factorint(r)
    if len(f) != 1:
        raise ParameterError(f"r must be a prime power, got {r}")
    (p, k), = f.items()
    return p, k


def closed_form_spectrum(d, r):
    """Eigenvalues theta_j and multiplicities f_j, j = 0..d, of the Hermitian forms graph."""
    if d < 1:
        raise ParameterError(f"d must be >= 1, got {d}")
    prime_power_base(r)
    theta0 = (r ** (2 * d) - 1) // (r + 1)
    lines = [SpectrumLine(0, theta0, 1)]
    lead = (-1) ** (d + 1) * r**d
    for j in range(1, d + 1):
        theta = theta0 + (-r) ** (2 * d - j) * gaussian_binomial(j, 1, -r)
        f = gaussian_binomial(d, j, -r)
        for ell in range(j):
            f *= lead + (-1) ** (ell + 1) * r**ell
        lines.append(SpectrumLine(j, theta, f))
    return lines


def spectrum_multiset(lines):
    out = {}
    for line in lines:
        out[line.eigenvalue] = out.get(line.eigenvalue, 0) + line.multiplicity
    return dict(sorted(out.items()))


class QuadraticSpace:
    """GF(r^2) sitting inside ``field``, with conjugation x -> x^r.

    ``field`` is either GF(r^2) itself or a larger field containing it (the
    code's GF(p^2m) when r = p), in which case elements stay in the big
    field's exponent coordinates.
    """

    def __init__(self, field, r):
        p, k = prime_power_base(r)
        if field.p != p or field.degree % (2 * k):
            raise ParameterError(f"GF({r}^2) is not a subfield of {field!r}")
        self.field = field
        self.r = r
        self.step = (field.order - 1) // (r * r - 1)

    @classmethod
    def standalone(cls, r):
        p, k = prime_power_base(r)
        return cls(GaloisField(p, 2 * k), r)

    def conj(self, x):
        return self.field.power(x, self.r) if x != ZERO else ZERO

    def elements(self):
        """All r^2 elements, zero first, then omega^k for k = 0..r^2-2."""
        return [ZERO] + [k * self.step for k in range(self.r * self.r - 1)]

    def base_elements(self):
        """The r elements of GF(r)."""
        s = self.step * (self.r + 1)
        return [ZERO] + [k * s for k in range(self.r - 1)]

    def local_exponent(self, x):
        return ZERO if x == ZERO else x // self.step


@dataclass(frozen=True)
class HermitianMatrix:
    space: QuadraticSpace
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        d = len(rows)
        sp = self.space
        for i in range(d):
            if len(rows[i]) != d:
                raise ParameterError("Hermitian matrix must be square")
            for j in range(d):
                x = rows[i][j]
                if x != ZERO and x % sp.step:
                    raise ParameterError(f"entry ({i},{j}) is not in GF({sp.r}^2)")
                if rows[j][i] != sp.conj(x):
                    raise ParameterError(f"entry ({i},{j}) breaks H = H*")

    @property
    def d(self):
        return len(self.entries)

    def __add__(self, other):
        f = self.space.field
        return HermitianMatrix(
            self.space,
            tuple(
                tuple(f.add(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    @classmethod
    def zero(cls, space, d):
        return cls(space, ((ZERO,) * d,) * d)

    @classmethod
    def outer(cls, space, a):
        """a^T * conj(a) for a row vector a over GF(r^2)."""
        f = space.field
        return cls(space, tuple(tuple(f.mul(x, space.conj(y)) for y in a) for x in a))


def hermitian_rank(H):
    return matrix_rank(H.space.field, H.entries)


def _check_cap(count, cap):
    cap = default_cap() if cap is None else cap
    if count > cap:
        raise TooLargeToEnumerate(f"{count} items exceed enumeration cap {cap}")


def enumerate_rank1(d, r, space=None, cap=None):
    """All rank-1 Hermitian d x d matrices, one per (r+1)-th-root-of-unity class of rows.

    A row a is canonical when its first nonzero coordinate omega^k has
    k < r - 1, the least exponent in its coset under multiplication by
    (r+1)-th roots of unity.
    """
    space = space or QuadraticSpace.standalone(r)
    if space.r != r:
        raise ParameterError("space does not match r")
    _check_cap(r ** (2 * d), cap)
    elems = space.elements()
    out = []
    for lead_pos in range(d):
        for k in range(r - 1):
            for tail in itertools.product(elems, repeat=d - lead_pos - 1):
                a = (ZERO,) * lead_pos + (k * space.step,) + tail
                out.append(HermitianMatrix.outer(space, a))
    return out


def all_hermitian(d, space, cap=None):
    """Every Hermitian d x d matrix over the space, r^(d^2) of them."""
    r = space.r
    _check_cap(r ** (d * d), cap)
    diag_vals = space.base_elements()
    off_vals = space.elements()
    upper = [(i, j) for i in range(d) for j in range(i + 1, d)]
    for diag in itertools.product(diag_vals, repeat=d):
        for offs in itertools.product(off_vals, repeat=len(upper)):
            rows = [[ZERO] * d for _ in range(d)]
            for i in range(d):
                rows[i][i] = diag[i]
            for (i, j), x in zip(upper, offs):
                rows[i][j] = x
                rows[j][i] = space.conj(x)
            yield HermitianMatrix(space, tuple(tuple(row) for row in rows))
