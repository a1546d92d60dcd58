"""Finite fields GF(p^k) in discrete-log form.

A field element is a plain ``int``: the exponent ``e`` in ``pi**e`` reduced
mod ``order - 1``, or ``ZERO`` (-1). The power table ``exp`` maps exponents to
the coefficient vector of ``pi**e`` written as a base-p integer (digit i is the
coefficient of ``X**i``), and ``log`` is its inverse with ``log[0] == ZERO``.
``exp_ext`` has one extra trailing 0 so that ``exp_ext[ZERO]`` is the zero
vector, which lets numpy code index it with unmasked exponent arrays.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from sympy import factorint, isprime

from . import _kernels
from .errors import (
    CompositeP,
    EvenM,
    InternalInconsistency,
    NotADivisor,
    NotInSubfield,
    ParameterError,
    TooLarge,
)

ZERO = -1
DEFAULT_MAX_ORDER = 2**26


@dataclass(frozen=True)
class CodeParams:
    """The tuple (p, m) and its derived n = 2m, t = (m-1)/2, q = p^n."""

    p: int
    m: int
    n: int = field(init=False)
    t: int = field(init=False)
    q: int = field(init=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 2 or not isprime(self.p):
            raise CompositeP(f"p must be prime, got {self.p}")
        if not isinstance(self.m, int):
            raise ParameterError(f"m must be an integer, got {self.m!r}")
        if self.m % 2 == 0:
            raise EvenM(f"m must be odd, got {self.m}")
        if self.m < 1:
            raise ParameterError(f"m must be positive, got {self.m}")
        object.__setattr__(self, "n", 2 * self.m)
        object.__setattr__(self, "t", (self.m - 1) // 2)
        object.__setattr__(self, "q", self.p ** (2 * self.m))

    @property
    def length(self):
        return self.q - 1

    @property
    def dimension(self):
        return self.m * self.m

    def exponent_classes(self):
        """Exponents p^m+1, p+1, p^3+1, ..., p^(m-2)+1 of the code's zeros."""
        p, m = self.p, self.m
        return [p**m + 1] + [p ** (2 * j - 1) + 1 for j in range(1, self.t + 1)]


# ---------------------------------------------------------------------------
# Polynomials over GF(p)
# ---------------------------------------------------------------------------


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class PolyFp:
    """Polynomial over GF(p), coefficients stored low degree first."""

    coeffs: tuple
    p: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(c % self.p for c in self.coeffs))

    @classmethod
    def x_power(cls, k, p):
        return cls((0,) * k + (1,), p)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        a = a + (0,) * (size - len(a))
        b = b + (0,) * (size - len(b))
        return PolyFp(tuple(x + y for x, y in zip(a, b)), self.p)

    def __neg__(self):
        return PolyFp(tuple(-c for c in self.coeffs), self.p)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return PolyFp((), self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyFp(tuple(out), self.p)

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dd = other.degree
        inv_lead = pow(other.coeffs[-1], -1, p)
        quot = [0] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] * inv_lead % p
            if c:
                quot[i - dd] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dd + j] = (rem[i - dd + j] - c * b) % p
        return PolyFp(tuple(quot), p), PolyFp(tuple(rem[:dd]), p)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def powmod(self, exponent, modulus):
        result = PolyFp((1,), self.p) % modulus
        base = self % modulus
        while exponent:
            if exponent & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            exponent >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def _has_order(x_poly, modulus, order, prime_factors):
    one = PolyFp((1,), modulus.p)
    if x_poly.powmod(order, modulus) != one:
        return False
    return all(x_poly.powmod(order // ell, modulus) != one for ell in prime_factors)


def least_primitive_polynomial(p, n):
    """Lexicographically least monic primitive polynomial of degree ``n``.

    Candidates are ordered by their coefficient tuple (c_0, ..., c_{n-1}),
    compared low degree first. X having multiplicative order p^n - 1 modulo f
    forces f to be irreducible, so no separate irreducibility test is needed.
    """
    order = p**n - 1
    factors = sorted(factorint(order)) if order > 1 else []
    x = PolyFp((0, 1), p)
    for low in itertools.product(range(p), repeat=n):
        if low[0] == 0:
            continue
        f = PolyFp(low + (1,), p)
        if n > 1 and any(f(a) == 0 for a in range(p)):
            continue
        if _has_order(x, f, order, factors):
            return f
    raise InternalInconsistency(f"no primitive polynomial of degree {n} over GF({p})")


# ---------------------------------------------------------------------------
# Fields
# ---------------------------------------------------------------------------


class GaloisField:
    """GF(p^degree) with generator ``pi`` = class of X modulo a primitive polynomial.

    Instances are treated as immutable; all tables are read-only arrays.
    """

    def __init__(self, p, degree, max_order=DEFAULT_MAX_ORDER):
        if p < 2 or not isprime(p):
            raise CompositeP(f"p must be prime, got {p}")
        order = p**degree
        if order > max_order:
            raise TooLarge(f"field of size {p}^{degree} = {order} exceeds cap {max_order}")
        self.p = p
        self.degree = degree
        self.order = order
        self.modulus = least_primitive_polynomial(p, degree)
        mod = np.array(self.modulus.coeffs, dtype=np.int64)
        exp = np.asarray(_kernels.exp_table(p, degree, mod), dtype=np.int64)
        logt = np.full(order, ZERO, dtype=np.int64)
        logt[exp] = np.arange(order - 1, dtype=np.int64)
        if logt[0] != ZERO or np.count_nonzero(logt == ZERO) != 1:
            raise InternalInconsistency("power table is not a permutation of the nonzero elements")
        self.exp = exp
        self.exp_ext = np.append(exp, 0)
        self.log = logt
        self._powers = p ** np.arange(degree, dtype=np.int64)
        for arr in (self.exp, self.exp_ext, self.log):
            arr.setflags(write=False)
        self._subfield_traces = {}

    def __repr__(self):
        return f"GaloisField({self.p}^{self.degree}, modulus={self.modulus})"

    @property
    def pi(self):
        return 1

    @property
    def mult_order(self):
        return self.order - 1

    # -- scalar arithmetic on exponents --------------------------------------

    def elem(self, e):
        """The element pi**e for any integer e (negative allowed)."""
        return e % (self.order - 1)

    def to_vector(self, x):
        return int(self.exp_ext[x])

    def from_vector(self, v):
        return int(self.log[v])

    def vadd(self, a, b):
        """Add coefficient vectors encoded as base-p integers (scalars or arrays)."""
        if self.p == 2:
            return np.bitwise_xor(a, b)
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for pk in self._powers:
            out += ((a // pk + b // pk) % self.p) * pk
        return out

    def vscale(self, v, c):
        """Multiply a coefficient vector by the integer ``c`` mod p."""
        v = np.asarray(v, dtype=np.int64)
        out = np.zeros(v.shape, dtype=np.int64)
        for pk in self._powers:
            out += ((v // pk) % self.p * c % self.p) * pk
        return out

    def add(self, a, b):
        return int(self.log[int(self.vadd(self.exp_ext[a], self.exp_ext[b]))])

    def neg(self, a):
        if a == ZERO or self.p == 2:
            return a
        return (a + (self.order - 1) // 2) % (self.order - 1)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == ZERO or b == ZERO:
            return ZERO
        return (a + b) % (self.order - 1)

    def inv(self, a):
        if a == ZERO:
            raise ZeroDivisionError("inverse of zero")
        return (-a) % (self.order - 1)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, k):
        if a == ZERO:
            if k <= 0:
                raise ZeroDivisionError("non-positive power of zero")
            return ZERO
        return (a * k) % (self.order - 1)

    def frobenius(self, a, k=1):
        """a ** (p ** k)."""
        if a == ZERO:
            return ZERO
        return a * pow(self.p, k, self.order - 1) % (self.order - 1)

    def sum(self, items):
        acc = 0
        for x in items:
            acc = self.vadd(acc, self.exp_ext[x])
        return int(self.log[int(acc)])

    def from_int(self, c):
        """Embed the integer ``c`` mod p as an element of the prime field."""
        return int(self.log[c % self.p])

    def to_int(self, x):
        """Integer value of an element of the prime field."""
        v = int(self.exp_ext[x])
        if v >= self.p:
            raise NotInSubfield(f"element pi^{x} is not in GF({self.p})")
        return v

    def in_subfield(self, x, degree):
        if self.degree % degree:
            raise NotADivisor(f"{degree} does not divide {self.degree}")
        return x == ZERO or x % ((self.order - 1) // (self.p**degree - 1)) == 0

    # -- vectorised helpers over exponent arrays -----------------------------

    def mul_arrays(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = (a + b) % (self.order - 1)
        return np.where((a == ZERO) | (b == ZERO), ZERO, out)

    def power_arrays(self, a, k):
        a = np.asarray(a, dtype=np.int64)
        out = (a * (k % (self.order - 1))) % (self.order - 1)
        return np.where(a == ZERO, ZERO, out)

    def add_arrays(self, a, b):
        return self.log[self.vadd(self.exp_ext[a], self.exp_ext[b])]

    # -- traces --------------------------------------------------------------

    @cached_property
    def prime_trace(self):
        """Tr to GF(p) of pi**e as an int, indexed by exponent (index -1 is ZERO)."""
        basis_tr = np.array(
            [self.to_int(trace_element(self, self.degree, 1, k)) for k in range(self.degree)],
            dtype=np.int64,
        )
        vecs = np.arange(self.order, dtype=np.int64)
        tr_vec = np.zeros(self.order, dtype=np.int64)
        for k, pk in enumerate(self._powers):
            tr_vec += (vecs // pk) % self.p * basis_tr[k]
        tr_vec %= self.p
        out = np.append(tr_vec[self.exp], 0)
        out.setflags(write=False)
        return out

    def subfield_trace(self, degree):
        """Tr from GF(p^degree) to GF(p) as ints, indexed by k for gamma**k.

        gamma = pi**((order-1)/(p^degree-1)) generates the subfield; the
        trailing entry (index -1) is the trace of zero.
        """
        if degree not in self._subfield_traces:
            if self.degree % degree:
                raise NotADivisor(f"{degree} does not divide {self.degree}")
            sub = self.p**degree - 1
            step = (self.order - 1) // sub
            acc = np.zeros(sub, dtype=np.int64)
            base = np.arange(sub, dtype=np.int64) * step
            for k in range(degree):
                acc = self.vadd(acc, self.exp[(base * pow(self.p, k, self.order - 1)) % (self.order - 1)])
            if np.any(acc >= self.p):
                raise InternalInconsistency("subfield trace left GF(p)")
            out = np.append(acc, 0)
            out.setflags(write=False)
            self._subfield_traces[degree] = out
        return self._subfield_traces[degree]


class FieldCtx(GaloisField):
    """The tower GF(p) < GF(p^m) < GF(p^2m) for one set of code parameters."""

    def __init__(self, params, max_order=DEFAULT_MAX_ORDER):
        self.params = params
        super().__init__(params.p, params.n, max_order=max_order)

    def __repr__(self):
        return f"FieldCtx(p={self.params.p}, m={self.params.m}, modulus={self.modulus})"


def build_field(params, max_order=DEFAULT_MAX_ORDER):
    return FieldCtx(params, max_order=max_order)


def trace_element(field, from_degree, to_degree, x):
    """Tr from GF(p^from_degree) down to GF(p^to_degree) of one element."""
    if from_degree % to_degree:
        raise NotADivisor(f"{to_degree} does not divide {from_degree}")
    if field.degree % from_degree:
        raise NotADivisor(f"{from_degree} does not divide {field.degree}")
    if field.frobenius(x, from_degree) != x:
        raise NotInSubfield(f"pi^{x} is not in GF({field.p}^{from_degree})")
    return field.sum(field.frobenius(x, to_degree * k) for k in range(from_degree // to_degree))


def trace(ctx, from_degree, to_degree, x):
    return trace_element(ctx, from_degree, to_degree, x)


def subfield_elements(ctx, degree):
    """All elements of GF(p^degree) inside ``ctx``, zero first."""
    if degree < 1 or ctx.degree % degree:
        raise NotADivisor(f"{degree} does not divide {ctx.degree}")
    sub = ctx.p**degree - 1
    step = (ctx.order - 1) // sub
    return [ZERO] + [k * step for k in range(sub)]


def frobenius_orbit(field, x):
    orbit = [x]
    while True:
        nxt = field.frobenius(orbit[-1])
        if nxt == x:
            return orbit
        orbit.append(nxt)


def minimal_polynomial(field, x):
    """Monic product of (X - y) over the Frobenius conjugates y of x."""
    poly = [0]  # coefficients as field elements, low degree first; "0" is 1
    for root in frobenius_orbit(field, x):
        neg_root = field.neg(root)
        shifted = [ZERO] + poly
        scaled = [field.mul(c, neg_root) for c in poly] + [ZERO]
        poly = [field.add(a, b) for a, b in zip(shifted, scaled)]
    return PolyFp(tuple(field.to_int(c) for c in poly), field.p)


def matrix_rank(field, rows):
    """Rank of a matrix of field elements by Gaussian elimination."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != ZERO), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = field.inv(mat[rank][col])
        mat[rank] = [field.mul(v, inv) for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != ZERO:
                factor = field.neg(mat[r][col])
                mat[r] = [field.add(a, field.mul(factor, b)) for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def rank_mod_p(matrix, p):
    """Rank over GF(p) of an integer matrix."""
    a = np.array(matrix, dtype=np.int64) % p
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        a[rank] = a[rank] * pow(int(a[rank, col]), -1, p) % p
        others = np.nonzero(a[:, col])[0]
        others = others[others != rank]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, col], a[rank])) % p
        rank += 1
    return rank
