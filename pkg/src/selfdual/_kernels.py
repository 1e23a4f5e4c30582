"""Compiled inner loops: Gray-code codeword scans and short-vector search.

A code is handed to the scan as additive generators ``gens`` (rows of
coefficient vectors mod ``modulus``) with additive orders ``orders``.  The
scan walks the modular mixed-radix Gray code, in which consecutive messages
differ by +1 in a single digit, so each step costs one row addition.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _coord_weight(cw, j, r, wtab):
    if r == 1:
        return wtab[cw[j]]
    for l in range(j * r, j * r + r):
        if cw[l] != 0:
            return 1
    return 0


@njit(cache=True, inline="always")
def _step(gens, t, modulus, r, wtab, cw, sup_ptr, sup_idx):
    """Add generator t to cw; return the weight change."""
    dw = 0
    if r == 1:
        for q in range(sup_ptr[t], sup_ptr[t + 1]):
            j = sup_idx[q]
            c = cw[j]
            v = c + gens[t, j]
            if v >= modulus:
                v -= modulus
            cw[j] = v
            dw += wtab[v] - wtab[c]
        return dw
    for q in range(sup_ptr[t], sup_ptr[t + 1]):
        j = sup_idx[q]
        old = _coord_weight(cw, j, r, wtab)
        for l in range(j * r, j * r + r):
            v = cw[l] + gens[t, l]
            if v >= modulus:
                v -= modulus
            cw[l] = v
        dw += _coord_weight(cw, j, r, wtab) - old
    return dw


@njit(cache=True)
def _start_word(gens, orders, modulus, base, start):
    g, L = gens.shape
    digits = np.zeros(g, dtype=np.int64)
    x = start
    for j in range(g):
        digits[j] = x % orders[j]
        x //= orders[j]
    cw = base.copy()
    for j in range(g):
        nxt = digits[j + 1] if j + 1 < g else 0
        gj = (digits[j] - nxt) % orders[j]
        if gj:
            for l in range(L):
                cw[l] = (cw[l] + gj * gens[j, l]) % modulus
    return digits, cw


@njit(cache=True, nogil=True)
def gray_scan(gens, orders, modulus, r, ncoord, wtab, base, start, count,
              sup_ptr, sup_idx, stop_below, out):
    """Accumulate weight counts of ``count`` consecutive Gray-code words into
    ``out``; return (min nonzero weight, its step index).  A nonzero word of
    weight below ``stop_below`` ends the scan early."""
    digits, cw = _start_word(gens, orders, modulus, base, start)
    w = 0
    for j in range(ncoord):
        w += _coord_weight(cw, j, r, wtab)
    best_w = 1 << 62
    best_s = -1
    g = gens.shape[0]
    for s in range(count):
        out[w] += 1
        if w > 0 and w < best_w:
            best_w = w
            best_s = start + s
            if w < stop_below:
                break
        if s == count - 1:
            break
        t = 0
        while digits[t] == orders[t] - 1:
            digits[t] = 0
            t += 1
        digits[t] += 1
        w += _step(gens, t, modulus, r, wtab, cw, sup_ptr, sup_idx)
    return best_w, best_s


@njit(cache=True, nogil=True)
def gray_collect(gens, orders, modulus, r, ncoord, wtab, base, start, count,
                 sup_ptr, sup_idx, max_w, found):
    """Store step indices of words with 0 < weight <= max_w; return how many
    were seen (may exceed the capacity of ``found``)."""
    digits, cw = _start_word(gens, orders, modulus, base, start)
    w = 0
    for j in range(ncoord):
        w += _coord_weight(cw, j, r, wtab)
    nfound = 0
    g = gens.shape[0]
    for s in range(count):
        if w > 0 and w <= max_w:
            if nfound < found.shape[0]:
                found[nfound] = start + s
            nfound += 1
        if s == count - 1:
            break
        t = 0
        while digits[t] == orders[t] - 1:
            digits[t] = 0
            t += 1
        digits[t] += 1
        w += _step(gens, t, modulus, r, wtab, cw, sup_ptr, sup_idx)
    return nfound


class Scanner:
    """Prepared generator data for repeated scans of one additive group."""

    def __init__(self, gens, orders, modulus: int, r: int, wtab):
        self.gens = np.ascontiguousarray(gens, dtype=np.int64)
        if self.gens.ndim != 2:
            raise ValueError("gens must be 2-D")
        self.orders = np.ascontiguousarray(orders, dtype=np.int64)
        self.modulus = int(modulus)
        self.r = int(r)
        self.ncoord = self.gens.shape[1] // self.r
        self.wtab = np.ascontiguousarray(wtab, dtype=np.int64)
        ptr, idx = [0], []
        for row in self.gens:
            nz = np.flatnonzero(row.reshape(self.ncoord, self.r).any(axis=1))
            idx.extend(nz.tolist())
            ptr.append(len(idx))
        self.sup_ptr = np.array(ptr, dtype=np.int64)
        self.sup_idx = np.array(idx, dtype=np.int64)
        self.total = 1
        for o in self.orders.tolist():
            self.total *= o

    def _base(self, base):
        if base is None:
            return np.zeros(self.gens.shape[1], dtype=np.int64)
        return np.ascontiguousarray(base, dtype=np.int64) % self.modulus

    def scan(self, nweights: int, base=None, start: int = 0, count: int | None = None,
             jobs: int = 1, stop_below: int = 0):
        """Return (counts, min nonzero weight or None, step index or -1).

        With ``stop_below`` the counts are partial once a lighter word turns up.
        """
        base = self._base(base)
        if count is None:
            count = self.total - start
        out = np.zeros(nweights, dtype=np.int64)
        if count <= 0:
            return out, None, -1
        chunks = _split(start, count, jobs)

        def work(chunk):
            s, c = chunk
            part = np.zeros(nweights, dtype=np.int64)
            bw, bs = gray_scan(self.gens, self.orders, self.modulus, self.r, self.ncoord,
                               self.wtab, base, s, c, self.sup_ptr, self.sup_idx, stop_below, part)
            return part, bw, bs

        if len(chunks) == 1:
            results = [work(chunks[0])]
        else:
            with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
                results = list(pool.map(work, chunks))
        best_w, best_s = None, -1
        for part, bw, bs in results:
            out += part
            if bs >= 0 and (best_w is None or bw < best_w):
                best_w, best_s = int(bw), int(bs)
        return out, best_w, best_s

    def collect(self, max_w: int, capacity: int = 1 << 20, base=None):
        base = self._base(base)
        found = np.zeros(capacity, dtype=np.int64)
        n = gray_collect(self.gens, self.orders, self.modulus, self.r, self.ncoord, self.wtab,
                         base, 0, self.total, self.sup_ptr, self.sup_idx, max_w, found)
        if n > capacity:
            raise OverflowError(f"{n} low-weight words exceed capacity {capacity}")
        return found[:n]

    def digits_at(self, index: int) -> np.ndarray:
        """Gray-code message digits (generator coefficients) at a step index."""
        d = []
        x = int(index)
        for o in self.orders.tolist():
            d.append(x % o)
            x //= o
        d.append(0)
        return np.array([(d[j] - d[j + 1]) % o for j, o in enumerate(self.orders.tolist())],
                        dtype=np.int64)

    def word_at(self, index: int, base=None) -> np.ndarray:
        g = self.digits_at(index)
        return (self._base(base) + g @ self.gens) % self.modulus


def _split(start: int, count: int, jobs: int):
    jobs = max(1, min(int(jobs), count // 4096 or 1))
    step = -(-count // jobs)
    return [(s, min(step, start + count - s)) for s in range(start, start + count, step)]


# --------------------------------------------------------------------------
# short vectors


@njit(cache=True)
def short_vector_counts(fp, gram, bound, max_norm, eps):
    """Count integer vectors x != 0 with x^T gram x <= max_norm, by exact norm.

    ``fp`` holds the Fincke-Pohst coefficients of ``gram`` (diagonal q_ii and
    upper q_ij) in floating point; ``bound`` is max_norm plus slack.  The
    float search only prunes; every leaf is re-measured with the exact
    integer Gram matrix.
    """
    n = gram.shape[0]
    counts = np.zeros(max_norm + 1, dtype=np.int64)
    x = np.zeros(n, dtype=np.int64)
    T = np.zeros(n + 1)
    U = np.zeros(n)
    ub = np.zeros(n, dtype=np.int64)
    i = n - 1
    T[i] = bound
    U[i] = 0.0
    z = np.sqrt(max(T[i], 0.0) / fp[i, i])
    ub[i] = np.int64(np.floor(z - U[i] + eps))
    x[i] = np.int64(np.ceil(-z - U[i] - eps)) - 1
    while True:
        x[i] += 1
        if x[i] > ub[i]:
            i += 1
            if i == n:
                break
            continue
        if i == 0:
            nrm = 0
            for a in range(n):
                if x[a] != 0:
                    s = 0
                    for b in range(n):
                        s += gram[a, b] * x[b]
                    nrm += x[a] * s
            if 0 < nrm <= max_norm:
                counts[nrm] += 1
            continue
        d = x[i] + U[i]
        T[i - 1] = T[i] - fp[i, i] * d * d
        i -= 1
        u = 0.0
        for j in range(i + 1, n):
            u += fp[i, j] * x[j]
        U[i] = u
        z = np.sqrt(max(T[i], 0.0) / fp[i, i])
        ub[i] = np.int64(np.floor(z - U[i] + eps))
        x[i] = np.int64(np.ceil(-z - U[i] - eps)) - 1
    return counts
