"""Exhaustive enumeration of a GF(p)-linear span with a worker pool."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import TooLargeToEnumerate

log = logging.getLogger(__name__)

DEFAULT_ENUM_CAP = 2**26
# below this many words a process pool costs more than it saves
MIN_PARALLEL = 2**16


def default_cap():
    """Enumeration cap, overridable through ``HERMCODES_ENUM_CAP``."""
    raw = os.environ.get("HERMCODES_ENUM_CAP")
    return int(raw) if raw else DEFAULT_ENUM_CAP


def default_workers():
    return os.cpu_count() or 1


@dataclass(frozen=True)
class SpanProfile:
    """Zero-count histogram of every word in a span.

    ``zeros[z]`` is the number of words with exactly ``z`` zero coordinates;
    ``unbalanced`` counts words whose nonzero residues are not equidistributed.
    """

    p: int
    length: int
    zeros: tuple
    unbalanced: int

    @property
    def total(self):
        return sum(self.zeros)

    def items(self):
        return [(z, c) for z, c in enumerate(self.zeros) if c]


def _run_range(args):
    basis, p, start, stop, backend = args
    kernel = _kernels.KERNELS[backend]["span_profile"]
    hist, bad = kernel(basis, p, start, stop)
    return np.asarray(hist, dtype=np.int64), int(bad)


def profile_span(basis, p, *, cap=None, workers=1, backend=None):
    """Enumerate all ``p**k`` combinations of the rows of ``basis``.

    The index range is cut into contiguous pieces, one batch per worker, and
    the per-piece histograms are summed, so the result does not depend on
    ``workers``.
    """
    basis = np.ascontiguousarray(basis, dtype=np.int64)
    k, length = basis.shape
    total = p**k
    cap = default_cap() if cap is None else cap
    if total > cap:
        raise TooLargeToEnumerate(f"span has {p}^{k} = {total} elements, cap is {cap}")
    backend = backend or _kernels.BACKEND
    workers = max(1, int(workers or 1)) if total >= MIN_PARALLEL else 1
    pieces = min(total, workers * 4 if workers > 1 else 1)
    bounds = [total * i // pieces for i in range(pieces + 1)]
    jobs = [(basis, p, bounds[i], bounds[i + 1], backend) for i in range(pieces)]
    log.info("enumerating %d words of length %d on %d worker(s)", total, length, workers)
    if workers == 1:
        results = [_run_range(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_range, jobs))
    hist = np.zeros(length + 1, dtype=np.int64)
    bad = 0
    for h, b in results:
        hist += h
        bad += b
    return SpanProfile(p, length, tuple(int(c) for c in hist), bad)
