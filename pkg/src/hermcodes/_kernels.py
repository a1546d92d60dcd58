"""Hot inner loops, each in a numba and a pure-numpy flavour.

The backend is chosen once at import time from ``HERMCODES_BACKEND``
(``numba`` or ``numpy``; default ``numba`` when it imports). Both flavours
are always importable by name so tests and the benchmark can compare them.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


def _select_backend():
    want = os.environ.get("HERMCODES_BACKEND", "numba").strip().lower()
    if want not in ("numba", "numpy"):
        raise ValueError(f"HERMCODES_BACKEND must be 'numba' or 'numpy', got {want!r}")
    if want == "numba" and not HAVE_NUMBA:
        return "numpy"
    return want


BACKEND = _select_backend()


# ---------------------------------------------------------------------------
# Power table of the field generator: exp[k] = X^k mod f, encoded base p.
# ---------------------------------------------------------------------------


@njit(cache=True)
def exp_table_numba(p, n, modulus):
    # modulus: monic, low-degree-first, length n+1
    order = p**n
    out = np.empty(order - 1, np.int64)
    digits = np.zeros(n, np.int64)
    digits[0] = 1
    for k in range(order - 1):
        v = 0
        for i in range(n - 1, -1, -1):
            v = v * p + digits[i]
        out[k] = v
        lead = digits[n - 1]
        for i in range(n - 1, 0, -1):
            digits[i] = (digits[i - 1] - lead * modulus[i]) % p
        digits[0] = (-lead * modulus[0]) % p
    return out


def _mul_matrix(p, n, modulus, shift):
    """GF(p)-matrix of multiplication by X^shift on coefficient vectors (rows)."""
    rows = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        vec = np.zeros(n, dtype=np.int64)
        vec[i] = 1
        for _ in range(shift):
            lead = vec[n - 1]
            vec[1:] = vec[:-1].copy()
            vec[0] = 0
            vec = (vec - lead * np.asarray(modulus[:n], dtype=np.int64)) % p
        rows[i] = vec
    return rows


def exp_table_numpy(p, n, modulus):
    # doubling: block [k, 2k) is block [0, k) times X^k
    order = p**n
    weights = p ** np.arange(n, dtype=np.int64)
    digits = np.zeros((1, n), dtype=np.int64)
    digits[0, 0] = 1
    step = _mul_matrix(p, n, modulus, 1)
    shift_mat = step.copy()
    while digits.shape[0] < order - 1:
        nxt = (digits @ shift_mat) % p
        digits = np.vstack([digits, nxt])
        shift_mat = (shift_mat @ shift_mat) % p
    return digits[: order - 1] @ weights


# ---------------------------------------------------------------------------
# Residue profiles over a GF(p)-linear span.
#
# Row k of ``basis`` is a word over GF(p); combination number ``idx`` has
# base-p digits d_k (least significant first) and equals sum d_k * basis[k].
# For every combination in [start, stop) we count how many coordinates take
# each residue r. Returned: histogram of the zero-count N_0 (length L+1) and
# the number of combinations whose nonzero residue counts are not all equal.
# ---------------------------------------------------------------------------


@njit(cache=True)
def span_profile_numba(basis, p, start, stop):
    k, length = basis.shape
    digits = np.zeros(k, np.int64)
    word = np.zeros(length, np.int64)
    idx = start
    for i in range(k):
        digits[i] = idx % p
        idx //= p
    for i in range(k):
        d = digits[i]
        if d != 0:
            for c in range(length):
                word[c] = (word[c] + d * basis[i, c]) % p
    hist = np.zeros(length + 1, np.int64)
    counts = np.zeros(p, np.int64)
    unbalanced = 0
    for _ in range(start, stop):
        for r in range(p):
            counts[r] = 0
        for c in range(length):
            counts[word[c]] += 1
        hist[counts[0]] += 1
        for r in range(2, p):
            if counts[r] != counts[1]:
                unbalanced += 1
                break
        i = 0
        while i < k:
            for c in range(length):
                w = word[c] + basis[i, c]
                if w >= p:
                    w -= p
                word[c] = w
            digits[i] += 1
            if digits[i] < p:
                break
            digits[i] = 0
            i += 1
    return hist, unbalanced


def span_profile_numpy(basis, p, start, stop, chunk_cells=1 << 22):
    basis = np.asarray(basis, dtype=np.int64)
    k, length = basis.shape
    hist = np.zeros(length + 1, dtype=np.int64)
    unbalanced = 0
    chunk = max(1, chunk_cells // max(length, 1))
    for lo in range(start, stop, chunk):
        hi = min(stop, lo + chunk)
        idx = np.arange(lo, hi, dtype=np.int64)
        digits = np.empty((hi - lo, k), dtype=np.int64)
        for i in range(k):
            digits[:, i] = idx % p
            idx //= p
        words = (digits @ basis) % p
        counts = np.stack([(words == r).sum(axis=1) for r in range(p)], axis=1)
        hist += np.bincount(counts[:, 0], minlength=length + 1)
        if p > 2:
            unbalanced += int(np.any(counts[:, 2:] != counts[:, 1:2], axis=1).sum())
    return hist, unbalanced


if BACKEND == "numba":
    exp_table = exp_table_numba
    span_profile = span_profile_numba
else:
    exp_table = exp_table_numpy
    span_profile = span_profile_numpy

KERNELS = {
    "numba": {"exp_table": exp_table_numba, "span_profile": span_profile_numba},
    "numpy": {"exp_table": exp_table_numpy, "span_profile": span_profile_numpy},
}
