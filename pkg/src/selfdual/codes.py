"""Linear codes over the chain rings in :mod:`selfdual.ring`.

A :class:`Code` is a ring plus a generator matrix of packed elements.  Most
structure (cardinality, type, residue and torsion codes, additive generators
for enumeration) is read off the standard form, which is computed once and
cached.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb

import numpy as np

from ._kernels import Scanner
from .ring import Ring, RingSpec, get_ring

DEFAULT_BUDGET = 2**33


class BudgetExceeded(RuntimeError):
    """Enumeration would visit more codewords than allowed."""

    def __init__(self, size: int, budget: int):
        super().__init__(f"code has {size} codewords, budget is {budget}")
        self.size = size
        self.budget = budget


@dataclass(frozen=True)
class StandardForm:
    """Rows in standard form on permuted coordinates.

    Column ``j`` of ``gen`` is column ``perm[j]`` of the original code.  Row
    ``i`` has pivot gamma^valuations[i] at column ``i`` and zeros below it.
    """

    gen: np.ndarray
    perm: np.ndarray
    valuations: tuple[int, ...]
    blocks: tuple[int, ...]

    def unpermuted(self) -> np.ndarray:
        out = np.empty_like(self.gen)
        out[:, self.perm] = self.gen
        return out


@dataclass(frozen=True, eq=False)
class Code:
    spec: RingSpec
    gen: np.ndarray
    name: str = field(default="", compare=False)

    def __post_init__(self):
        g = np.array(self.gen, dtype=np.int64)
        if g.ndim == 1:
            g = g[None, :]
        if g.ndim != 2:
            raise ValueError("generator matrix must be 2-D")
        if g.size and (g.min() < 0 or g.max() >= self.spec.size):
            raise ValueError("entries must be packed ring elements")
        g.flags.writeable = False
        object.__setattr__(self, "gen", g)

    @classmethod
    def from_rows(cls, spec: RingSpec, rows, name: str = "") -> "Code":
        """Rows of integers, reduced mod the characteristic (constants for
        Galois rings)."""
        g = np.array(rows, dtype=np.int64) % spec.char
        return cls(spec, g, name)

    @property
    def ring(self) -> Ring:
        return get_ring(self.spec)

    @property
    def n(self) -> int:
        return self.gen.shape[1]

    @property
    def k(self) -> int:
        """Number of generator rows."""
        return self.gen.shape[0]

    @cached_property
    def standard(self) -> StandardForm:
        return standardize(self)

    @property
    def blocks(self) -> tuple[int, ...]:
        return self.standard.blocks

    @property
    def free_rank(self) -> int:
        return self.blocks[0] if self.blocks else 0

    @property
    def rank(self) -> int:
        return len(self.standard.valuations)

    @property
    def is_free(self) -> bool:
        return self.rank == self.free_rank

    @property
    def cardinality(self) -> int:
        q = self.spec.residue_size
        e = self.spec.m
        out = 1
        for v in self.standard.valuations:
            out *= q ** (e - v)
        return out

    def permuted(self, perm) -> "Code":
        """Code on coordinates ``perm`` (new column j = old column perm[j])."""
        return Code(self.spec, self.gen[:, np.asarray(perm)], self.name)

    def __repr__(self):
        return f"Code({self.spec}, n={self.n}, blocks={self.blocks})"


# --------------------------------------------------------------------------
# standard form and duals


def _pivot(R: Ring, M: np.ndarray, r0: int, c0: int):
    """Minimum-valuation entry of M[r0:, c0:]: leftmost column, then topmost row."""
    sub = M[r0:, c0:]
    if sub.size == 0:
        return None
    V = np.asarray(R.valuation(sub))
    v = int(V.min())
    if v >= R.e:
        return None
    c = int(np.flatnonzero((V == v).any(axis=0))[0])
    r = int(np.flatnonzero(V[:, c] == v)[0])
    return r0 + r, c0 + c, v


def _normalize_row(R: Ring, M, i, v):
    u = R.gamma_div(int(M[i, i]), v)
    M[i] = R.mul(R.inv(u), M[i])


def standardize(code: Code) -> StandardForm:
    R = code.ring
    M = code.gen.copy()
    k, n = M.shape
    perm = np.arange(n)
    vals: list[int] = []
    piv = 0
    while piv < min(k, n):
        found = _pivot(R, M, piv, piv)
        if found is None:
            break
        i, j, v = found
        M[[piv, i]] = M[[i, piv]]
        M[:, [piv, j]] = M[:, [j, piv]]
        perm[[piv, j]] = perm[[j, piv]]
        _normalize_row(R, M, piv, v)
        col = M[:, piv]
        for t in range(k):
            x = int(col[t])
            if t == piv or x == 0 or R.valuation(x) < v:
                continue
            M[t] = R.sub(M[t], R.mul(R.gamma_div(x, v), M[piv]))
        vals.append(v)
        piv += 1
    M = M[:piv]
    M.flags.writeable = False
    blocks = tuple(vals.count(i) for i in range(R.e))
    return StandardForm(M, perm, tuple(vals), blocks)


def dual(code: Code) -> Code:
    """Euclidean dual, via diagonalization with row and column operations."""
    R = code.ring
    M = code.gen.copy()
    k, n = M.shape
    W = np.eye(n, dtype=np.int64)
    vals: list[int] = []
    piv = 0
    while piv < min(k, n):
        found = _pivot(R, M, piv, piv)
        if found is None:
            break
        i, j, v = found
        M[[piv, i]] = M[[i, piv]]
        M[:, [piv, j]] = M[:, [j, piv]]
        W[:, [piv, j]] = W[:, [j, piv]]
        _normalize_row(R, M, piv, v)
        for t in range(piv + 1, k):
            x = int(M[t, piv])
            if x:
                M[t] = R.sub(M[t], R.mul(R.gamma_div(x, v), M[piv]))
        for t in range(piv + 1, n):
            x = int(M[piv, t])
            if x:
                f = R.gamma_div(x, v)
                M[:, t] = R.sub(M[:, t], R.mul(f, M[:, piv]))
                W[:, t] = R.sub(W[:, t], R.mul(f, W[:, piv]))
        vals.append(v)
        piv += 1
    rows = [R.mul(R.gamma_pow(R.e - v), W[:, i]) for i, v in enumerate(vals) if v > 0]
    rows += [W[:, j] for j in range(piv, n)]
    gen = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    return Code(code.spec, gen, f"{code.name}^perp" if code.name else "")


def contains(code: Code, vectors) -> np.ndarray | bool:
    """Membership of one vector or each row of a matrix."""
    V = np.atleast_2d(np.asarray(vectors, dtype=np.int64)) % code.spec.size
    H = _parity(code)
    if H.shape[0] == 0:
        out = np.ones(V.shape[0], dtype=bool)
    else:
        out = ~code.ring.matmul(V, H.T).any(axis=1)
    return bool(out[0]) if np.ndim(vectors) == 1 else out


def _parity(code: Code) -> np.ndarray:
    cache = code.__dict__.setdefault("_parity", [])
    if not cache:
        cache.append(dual(code).gen)
    return cache[0]


def same_row_space(a: Code, b: Code) -> bool:
    if a.spec != b.spec or a.n != b.n or a.cardinality != b.cardinality:
        return False
    return bool(np.all(contains(a, b.gen))) if b.k else True


def row_space_key(code: Code) -> bytes:
    """Canonical key for the row space (reduced echelon form over a field)."""
    if not code.spec.is_field:
        raise ValueError("row_space_key needs a field")
    return rref(code).tobytes()


def rref(code: Code) -> np.ndarray:
    R = code.ring
    M = code.gen.copy()
    k, n = M.shape
    row = 0
    for c in range(n):
        if row == k:
            break
        nz = np.flatnonzero(M[row:, c])
        if nz.size == 0:
            continue
        i = row + int(nz[0])
        M[[row, i]] = M[[i, row]]
        M[row] = R.mul(R.inv(int(M[row, c])), M[row])
        for t in range(k):
            x = int(M[t, c])
            if t != row and x:
                M[t] = R.sub(M[t], R.mul(x, M[row]))
        row += 1
    return M[:row]


@dataclass(frozen=True)
class InnerProductReport:
    gram: np.ndarray
    cardinality: int
    ambient: int

    @property
    def self_orthogonal(self) -> bool:
        return not self.gram.any()

    @property
    def full_size(self) -> bool:
        return self.cardinality**2 == self.ambient

    @property
    def self_dual(self) -> bool:
        return self.self_orthogonal and self.full_size

    def failures(self) -> list[tuple[int, int, int]]:
        """Row pairs (i, j), i <= j, with nonzero inner product."""
        ii, jj = np.nonzero(np.triu(self.gram != 0))
        return [(int(i), int(j), int(self.gram[i, j])) for i, j in zip(ii, jj)]


def inner_product_report(code: Code) -> InnerProductReport:
    R = code.ring
    return InnerProductReport(R.matmul(code.gen, code.gen.T), code.cardinality,
                              code.spec.size**code.n)


def is_self_dual(code: Code) -> bool:
    return inner_product_report(code).self_dual


# --------------------------------------------------------------------------
# residue and torsion codes


def residue_code(code: Code) -> Code:
    R = code.ring
    F = code.spec.residue_field()
    res = Code(F, R.residue(code.gen), f"Res({code.name})" if code.name else "")
    return Code(F, rref(res), res.name)


def torsion_code(code: Code) -> Code:
    R = code.ring
    F = code.spec.residue_field()
    sf = code.standard
    rows = [R.residue(R.gamma_div(row, v)) for row, v in zip(sf.unpermuted(), sf.valuations)]
    gen = np.array(rows, dtype=np.int64).reshape(len(rows), code.n)
    tor = Code(F, gen)
    return Code(F, rref(tor), f"Tor({code.name})" if code.name else "")


# --------------------------------------------------------------------------
# enumeration


@dataclass(frozen=True)
class WeightEnumerator:
    counts: tuple[int, ...]
    kind: str = "hamming"

    def __getitem__(self, w: int) -> int:
        return self.counts[w] if 0 <= w < len(self.counts) else 0

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def min_weight(self) -> int | None:
        return next((w for w, c in enumerate(self.counts) if w and c), None)

    def nonzero(self) -> dict[int, int]:
        return {w: c for w, c in enumerate(self.counts) if c}

    def fingerprint(self) -> str:
        text = ",".join(map(str, self.counts))
        return hashlib.sha256(f"{self.kind}:{text}".encode()).hexdigest()[:16]

    def __str__(self):
        return " ".join(f"{w}:{c}" for w, c in self.nonzero().items())


def _weight_table(spec: RingSpec, kind: str) -> tuple[np.ndarray, int]:
    N = spec.char
    if kind == "hamming":
        t = (np.arange(N) != 0).astype(np.int64)
        return t, 1
    if kind == "euclidean":
        if spec.r != 1:
            raise ValueError("euclidean weight is defined here only for Z/p^m")
        v = np.arange(N, dtype=np.int64)
        t = np.minimum(v * v, (N - v) ** 2)
        return t, int(t.max())
    raise ValueError(f"unknown weight {kind!r}")


def additive_generators(code: Code) -> tuple[np.ndarray, np.ndarray]:
    """Generators of the additive group as flattened coefficient rows, with
    their additive orders."""
    R = code.ring
    sf = code.standard
    rows, orders = [], []
    for row, v in zip(sf.unpermuted(), sf.valuations):
        order = code.spec.p ** (R.e - v)
        for j in range(code.spec.r):
            xi = R.pack(np.eye(code.spec.r, dtype=np.int64)[j])
            rows.append(R.coeffs(R.mul(xi, row)).reshape(-1))
            orders.append(order)
    L = code.n * code.spec.r
    return np.array(rows, dtype=np.int64).reshape(len(rows), L), np.array(orders, dtype=np.int64)


def _scanner(code: Code, kind: str, gens=None, orders=None) -> Scanner:
    table, _ = _weight_table(code.spec, kind)
    if gens is None:
        gens, orders = additive_generators(code)
    return Scanner(gens, orders, code.spec.char, code.spec.r, table)


def _check_budget(code: Code, budget: int | None):
    size = code.cardinality
    if budget is not None and size > budget:
        raise BudgetExceeded(size, budget)


def _projective(code: Code, kind: str) -> bool:
    return kind == "hamming" and code.spec.is_field and code.spec.r == 1 and code.rank > 0


def _enumerate(code: Code, kind: str, jobs: int, stop_below: int = 0):
    """Full scan.  Returns (counts, min weight, witness); counts are partial
    if a word lighter than ``stop_below`` ended the scan."""
    _, wmax = _weight_table(code.spec, kind)
    nw = code.n * wmax + 1
    if not _projective(code, kind):
        sc = _scanner(code, kind)
        counts, bw, bs = sc.scan(nw, jobs=jobs, stop_below=stop_below)
        wit = _unflatten(code, sc.word_at(bs)) if bs >= 0 else None
        return counts, bw, wit
    gens, orders = additive_generators(code)
    p = code.spec.p
    total = np.zeros(nw, dtype=np.int64)
    best = (None, None)
    for j in range(gens.shape[0]):
        sc = _scanner(code, kind, gens[:j], orders[:j])
        counts, bw, bs = sc.scan(nw, base=gens[j], jobs=jobs, stop_below=stop_below)
        total += counts
        if bw is not None and (best[0] is None or bw < best[0]):
            best = (bw, sc.word_at(bs, base=gens[j]))
            if bw < stop_below:
                break
    total *= p - 1
    total[0] = 1
    wit = _unflatten(code, best[1]) if best[1] is not None else None
    return total, best[0], wit


def _unflatten(code: Code, flat) -> np.ndarray:
    return np.asarray(code.ring.pack(np.asarray(flat).reshape(code.n, code.spec.r)))


def weight_enumerator(code: Code, kind: str = "hamming", budget: int | None = DEFAULT_BUDGET,
                      jobs: int = 1) -> WeightEnumerator:
    _check_budget(code, budget)
    counts, _, _ = _enumerate(code, kind, jobs)
    # Hamming: A_0..A_n; Euclidean: trimmed after the heaviest word
    last = code.n if kind == "hamming" else int(np.flatnonzero(counts).max())
    return WeightEnumerator(tuple(int(c) for c in counts[: last + 1]), kind)


@dataclass(frozen=True)
class MinWeight:
    weight: int | None
    witness: np.ndarray | None
    method: str


def min_weight(code: Code, kind: str = "hamming", budget: int | None = DEFAULT_BUDGET,
               jobs: int = 1, use_residue: bool = True) -> MinWeight:
    """Minimum nonzero weight with a witness codeword (None for the zero code).

    For free codes over a non-field chain ring the Hamming distance equals
    that of the residue code, and gamma^(e-1) times a lifted minimum residue
    word attains it.
    """
    if code.rank == 0:
        return MinWeight(None, None, "empty")
    if kind == "hamming" and use_residue and code.is_free and not code.spec.is_field:
        res = residue_code(code)
        mw = min_weight(res, kind, budget, jobs)
        R = code.ring
        wit = R.mul(R.gamma_pow(R.e - 1), R.lift(mw.witness))
        return MinWeight(mw.weight, np.asarray(wit), "residue")
    _check_budget(code, budget)
    _, bw, wit = _enumerate(code, kind, jobs)
    return MinWeight(bw, wit, "enumeration")


def screen(code: Code, min_d: int, budget: int | None = DEFAULT_BUDGET,
           jobs: int = 1) -> WeightEnumerator | None:
    """Hamming enumerator if the minimum distance is at least ``min_d``,
    else None (found cheaply: the scan stops at the first light word)."""
    _check_budget(code, budget)
    counts, bw, _ = _enumerate(code, "hamming", jobs, stop_below=min_d)
    if bw is not None and bw < min_d:
        return None
    return WeightEnumerator(tuple(int(c) for c in counts[: code.n + 1]), "hamming")


def min_euclidean_weight(code: Code, budget: int | None = DEFAULT_BUDGET, jobs: int = 1) -> MinWeight:
    return min_weight(code, "euclidean", budget, jobs)


def low_weight_counts(code: Code, max_weight: int, budget: int | None = DEFAULT_BUDGET,
                      capacity: int = 1 << 22) -> tuple[int, ...]:
    """Hamming counts A_0..A_max_weight of a free code over Z/p^2.

    Every codeword is a G + p w with a a message over {0..p-1} and w in the
    residue code.  Its weight is wt(a G mod p) plus the number of
    coordinates where a G vanishes mod p and the residue word does not
    cancel (a G)/p.  Only messages whose residue word is light can
    contribute, so the cost is (#light residue words) * |residue code|.
    """
    spec = code.spec
    if not (spec.r == 1 and spec.m == 2 and code.is_free):
        raise ValueError("low_weight_counts needs a free code over Z/p^2")
    p = spec.p
    G = code.standard.unpermuted()
    Gres = G % p
    k = G.shape[0]
    res_counts = np.zeros(max_weight + 1, dtype=np.int64)
    table = (np.arange(p) != 0).astype(np.int64)
    orders = np.full(k, p, dtype=np.int64)
    full = Scanner(Gres, orders, p, 1, table)
    if budget is not None and full.total > budget:
        raise BudgetExceeded(full.total, budget)
    counts, _, _ = full.scan(code.n + 1)
    res_counts[:] = counts[: max_weight + 1]
    out = res_counts.copy()
    for idx in full.collect(max_weight, capacity).tolist():
        a = full.digits_at(idx)
        lead = a[np.flatnonzero(a)[0]]
        if lead != 1:
            continue
        u = (a @ G) % (p * p)
        ures = u % p
        rho = int(np.count_nonzero(ures))
        Z = np.flatnonzero(ures == 0)
        h = u[Z] // p
        sub = Scanner(Gres[:, Z], orders, p, 1, table)
        part, _, _ = sub.scan(len(Z) + 1, base=h)
        top = max_weight - rho
        out[rho: max_weight + 1] += (p - 1) * part[: top + 1]
    return tuple(int(c) for c in out)


# --------------------------------------------------------------------------
# identities


def macwilliams(counts, n: int, q: int) -> tuple:
    """Hamming enumerator of the dual from that of a code over a q-ary alphabet.

    Returns Fractions only when the division is inexact.
    """
    A = list(counts) + [0] * (n + 1 - len(counts))
    size = sum(A)
    out = []
    for j in range(n + 1):
        s = 0
        for i, a in enumerate(A):
            if a:
                s += a * sum((-1) ** t * (q - 1) ** (j - t) * comb(i, t) * comb(n - i, j - t)
                             for t in range(j + 1))
        f = Fraction(s, size)
        out.append(int(f) if f.denominator == 1 else f)
    return tuple(out)


def mass_formula_gf7(n: int) -> int:
    """N(n) = 2 prod_{i=1}^{(n-2)/2} (7^i + 1) for even n.

    This counts self-dual codes over GF(7) when 4 | n; for n = 2 mod 4 it is
    only the formula value (no such codes exist).
    """
    if n < 2 or n % 2:
        raise ValueError("n must be even and at least 2")
    out = 2
    for i in range(1, (n - 2) // 2 + 1):
        out *= 7**i + 1
    return out
