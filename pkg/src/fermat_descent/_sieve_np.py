"""Numpy fallback for the residue sieve; same contract as the compiled kernel."""
from __future__ import annotations

import numpy as np

_CHUNK = 1 << 20


def sieve_range(lo, hi, moduli, tables, offsets):
    """Return every ``a`` in ``[lo, hi]`` whose residue passes all tables."""
    parts = []
    start = lo
    while start <= hi:
        stop = min(hi, start + _CHUNK - 1)
        a = np.arange(start, stop + 1, dtype=np.int64)
        for m, off in zip(moduli, offsets):
            if a.size == 0:
                break
            # np.mod follows the divisor's sign, so residues are in [0, m)
            a = a[tables[off + np.mod(a, m)].astype(bool)]
        parts.append(a)
        start = stop + 1
    if not parts:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(parts)
