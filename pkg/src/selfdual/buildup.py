"""Building-up construction, its coset-based variant, and the converse.

Given a self-dual code C0 of length 2n with rows r_i, units alpha, beta with
alpha^2 + beta^2 + 1 = 0, and vectors x1, x2 with x1.x2 = 0 and
x1.x1 = x2.x2 = -1, the matrix

    [ 1 0 0 0 | x1 ]
    [ 0 1 0 0 | x2 ]
    [   y_i   | r_i]      y_i = (-s, -t, -a s - b t, -b s + a t),
                          s = x1.r_i, t = x2.r_i

generates a self-dual code of length 2n + 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

import numpy as np

from .codes import Code, dual, inner_product_report, is_self_dual, rref, same_row_space
from .ring import Ring, RingSpec, get_ring, solve_alpha_beta


class WitnessInvalid(ValueError):
    pass


class NotSelfDual(ValueError):
    pass


class LengthTooSmall(ValueError):
    pass


class FreeRankTooSmall(ValueError):
    pass


class Exhausted(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class BuildUpWitness:
    spec: RingSpec
    alpha: int
    beta: int
    x1: np.ndarray
    x2: np.ndarray

    def __post_init__(self):
        for name in ("x1", "x2"):
            v = np.asarray(getattr(self, name), dtype=np.int64) % self.spec.size
            v.flags.writeable = False
            object.__setattr__(self, name, v)
        object.__setattr__(self, "alpha", int(self.alpha) % self.spec.size)
        object.__setattr__(self, "beta", int(self.beta) % self.spec.size)

    @classmethod
    def from_ints(cls, spec: RingSpec, x1, x2, alpha=None, beta=None) -> "BuildUpWitness":
        """Integer vectors reduced mod the characteristic; alpha and beta default
        to :func:`solve_alpha_beta`."""
        if alpha is None or beta is None:
            alpha, beta = solve_alpha_beta(spec)
        c = spec.char
        return cls(spec, int(alpha) % c, int(beta) % c,
                   np.asarray(x1, dtype=np.int64) % c, np.asarray(x2, dtype=np.int64) % c)

    def problems(self) -> list[str]:
        R = get_ring(self.spec)
        out = []
        a, b = self.alpha, self.beta
        if not (R.is_unit(a) and R.is_unit(b)):
            out.append("alpha and beta must be units")
        if R.add(R.add(R.mul(a, a), R.mul(b, b)), 1) != 0:
            out.append("alpha^2 + beta^2 + 1 != 0")
        if self.x1.shape != self.x2.shape:
            out.append("x1 and x2 differ in length")
            return out
        minus_one = R.neg(1)
        if R.dot(self.x1, self.x2) != 0:
            out.append("x1.x2 != 0")
        if R.dot(self.x1, self.x1) != minus_one:
            out.append("x1.x1 != -1")
        if R.dot(self.x2, self.x2) != minus_one:
            out.append("x2.x2 != -1")
        return out

    def validate(self) -> None:
        bad = self.problems()
        if bad:
            raise WitnessInvalid("; ".join(bad))

    def derived(self, c0: Code) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(s, t, y) for each row of ``c0``."""
        R = get_ring(self.spec)
        s = R.matmul(c0.gen, self.x1[:, None])[:, 0]
        t = R.matmul(c0.gen, self.x2[:, None])[:, 0]
        y = _y_rows(R, s, t, self.alpha, self.beta, sign=-1)
        return s, t, y


def _y_rows(R: Ring, s, t, a, b, sign: int) -> np.ndarray:
    cols = [s, t, R.add(R.mul(a, s), R.mul(b, t)), R.sub(R.mul(b, s), R.mul(a, t))]
    y = np.stack([np.asarray(c, dtype=np.int64) for c in cols], axis=1)
    return R.neg(y) if sign < 0 else y


def seed_code(spec: RingSpec, alpha: int | None = None, beta: int | None = None) -> Code:
    """The length-4 self-dual code generated by (1,0,a,b) and (0,1,b,-a)."""
    if alpha is None or beta is None:
        alpha, beta = solve_alpha_beta(spec)
    R = get_ring(spec)
    return Code(spec, [[1, 0, alpha, beta], [0, 1, beta, R.neg(alpha)]], "seed")


def buildup(c0: Code, w: BuildUpWitness, check: bool = True) -> Code:
    """Length 2n+4 code in the literal row layout (no re-standardization)."""
    if w.spec != c0.spec:
        raise WitnessInvalid("witness and code are over different rings")
    if w.x1.shape[0] != c0.n:
        raise WitnessInvalid(f"witness length {w.x1.shape[0]} != code length {c0.n}")
    if check:
        w.validate()
        if not is_self_dual(c0):
            raise NotSelfDual("seed code is not self-dual")
    _, _, y = w.derived(c0)
    top = np.zeros((2, 4), dtype=np.int64)
    top[0, 0] = top[1, 1] = 1
    head = np.vstack([np.hstack([top, np.stack([w.x1, w.x2])]),
                      np.hstack([y, c0.gen])])
    return Code(c0.spec, head)


# --------------------------------------------------------------------------
# witness search


def _norms(R: Ring, V: np.ndarray) -> np.ndarray:
    return R.sum(R.mul(V, V), axis=-1)


def _all_vectors(size: int, n: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, n), dtype=np.int64)
    for j in range(n - 1, -1, -1):
        out[:, j] = idx % size
        idx //= size
    return out


def find_witness_vectors(c0: Code, strategy: str = "random", seed: int = 0,
                         count: int | None = None, alpha: int | None = None,
                         beta: int | None = None, max_tries: int = 10_000
                         ) -> Iterator[BuildUpWitness]:
    """Stream of valid witnesses for ``c0``.

    ``random``: x1 is sampled uniformly and its last coordinate repaired so
    that x1.x1 = -1; x2 is sampled with two coordinates left free, one fixed
    by x1.x2 = 0 and the other by searching the ring for x2.x2 = -1.
    ``exhaustive``: every valid pair in lexicographic order (small cases).
    """
    spec = c0.spec
    if alpha is None or beta is None:
        alpha, beta = solve_alpha_beta(spec)
    if strategy == "random":
        it = _random_witnesses(c0, seed, alpha, beta, max_tries)
    elif strategy == "exhaustive":
        it = _exhaustive_witnesses(c0, alpha, beta)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    produced = 0
    for w in it:
        yield w
        produced += 1
        if count is not None and produced >= count:
            return
    if produced == 0:
        raise Exhausted("no witness vectors exist for this code")


def _random_witnesses(c0: Code, seed: int, alpha, beta, max_tries: int):
    spec = c0.spec
    R = get_ring(spec)
    n = c0.n
    if n < 2:
        raise Exhausted("need length at least 2")
    rng = np.random.default_rng(seed)
    sq = R.squares()
    elems = np.arange(spec.size, dtype=np.int64)
    minus_one = R.neg(1)
    misses = 0
    while True:
        x1 = rng.integers(0, spec.size, n)
        target = R.sub(minus_one, R.dot(x1[:-1], x1[:-1]))
        roots = np.flatnonzero(sq == target)
        if roots.size == 0:
            misses += 1
            if misses > max_tries:
                raise Exhausted(f"no witness found in {max_tries} consecutive tries")
            continue
        x1[-1] = rng.choice(roots)
        units = np.flatnonzero(R.is_unit(x1))
        if units.size == 0:
            misses += 1
            continue
        j = int(units[-1])
        l = n - 1 if j != n - 1 else n - 2
        x2 = rng.integers(0, spec.size, n)
        x2[j] = x2[l] = 0
        # x2[j] = -(x1.x2_rest + x1[l] z) / x1[j] for each candidate z = x2[l]
        base = R.dot(x1, x2)
        inv = R.inv(int(x1[j]))
        xj = R.neg(R.mul(R.add(base, R.mul(int(x1[l]), elems)), inv))
        rest = R.dot(x2, x2)
        norm = R.add(R.add(rest, sq[elems]), sq[xj])
        ok = np.flatnonzero(norm == minus_one)
        if ok.size == 0:
            misses += 1
            if misses > max_tries:
                raise Exhausted(f"no witness found in {max_tries} consecutive tries")
            continue
        z = int(rng.choice(ok))
        x2[l] = z
        x2[j] = xj[z]
        misses = 0
        w = BuildUpWitness(spec, alpha, beta, x1, x2)
        assert not w.problems(), w.problems()
        yield w


EXHAUSTIVE_LIMIT = 2**24


def _exhaustive_witnesses(c0: Code, alpha, beta):
    spec = c0.spec
    R = get_ring(spec)
    n = c0.n
    total = spec.size**n
    if total > EXHAUSTIVE_LIMIT:
        raise ValueError(f"|R|^n = {total} exceeds {EXHAUSTIVE_LIMIT}")
    V = _all_vectors(spec.size, n, 0, total)
    V = V[_norms(R, V) == R.neg(1)]
    if V.shape[0] == 0:
        return
    dots = R.matmul(V, V.T)
    for i in range(V.shape[0]):
        for j in np.flatnonzero(dots[i] == 0):
            yield BuildUpWitness(spec, alpha, beta, V[i], V[j])


# --------------------------------------------------------------------------
# coset-based variant


MODIFIED_LIMIT = 2**20


def _solve_field(R: Ring, A: np.ndarray, b: np.ndarray):
    """A particular solution of A x = b and a kernel basis, or None."""
    k, n = A.shape
    aug = Code(R.spec, np.hstack([A, np.asarray(b, dtype=np.int64)[:, None]]) % R.spec.size)
    M = rref(aug)
    pivots = [int(np.flatnonzero(row)[0]) for row in M]
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for row, c in zip(M, pivots):
        x[c] = row[n]
    free = [c for c in range(n) if c not in pivots]
    K = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        K[t, f] = 1
        for row, c in zip(M, pivots):
            K[t, c] = R.neg(int(row[f]))
    return x, K


def _affine_span(R: Ring, x: np.ndarray, K: np.ndarray) -> np.ndarray:
    vecs = x[None, :]
    for b in K:
        steps = R.mul(np.arange(R.size, dtype=np.int64)[:, None], b[None, :])
        vecs = R.add(vecs[:, None, :], steps[None, :, :]).reshape(-1, x.size)
    return vecs


def modified_buildup(c0: Code, st, alpha: int | None = None, beta: int | None = None
                     ) -> list[Code]:
    """Self-dual codes from one assignment of (s_i, t_i), one per compatible
    pair of coset representatives, deduplicated by row space."""
    spec = c0.spec
    if not spec.is_field:
        raise ValueError("the coset variant is implemented over fields")
    R = get_ring(spec)
    if alpha is None or beta is None:
        alpha, beta = solve_alpha_beta(spec)
    st = np.asarray(st, dtype=np.int64).reshape(-1, 2) % spec.size
    if st.shape[0] != c0.k:
        raise ValueError("need one (s, t) pair per seed row")
    s, t = st[:, 0], st[:, 1]
    y = _y_rows(R, s, t, alpha, beta, sign=+1)
    c1_rows = np.hstack([y, c0.gen])
    C = dual(Code(spec, c1_rows))
    gap = C.rank - c0.k
    if spec.size ** max(gap, c0.n - c0.k) > MODIFIED_LIMIT:
        raise ValueError("quotient too large to materialize")
    reps = []
    for e, rhs in ((0, R.neg(s)), (1, R.neg(t))):
        sol = _solve_field(R, c0.gen, rhs)
        if sol is None:
            reps.append(np.zeros((0, c0.n), dtype=np.int64))
            continue
        X = _affine_span(R, *sol)
        reps.append(X[_norms(R, X) == R.neg(1)])
    U1, U2 = reps
    out, seen = [], set()
    if U1.shape[0] == 0 or U2.shape[0] == 0:
        return out
    dots = R.matmul(U1, U2.T)
    for i, j in zip(*np.nonzero(dots == 0)):
        top = np.zeros((2, 4), dtype=np.int64)
        top[0, 0] = top[1, 1] = 1
        G = np.vstack([np.hstack([top, np.stack([U1[i], U2[j]])]), c1_rows])
        code = Code(spec, G)
        key = rref(code).tobytes()
        if key not in seen:
            seen.add(key)
            out.append(code)
    return out


def all_st_assignments(spec: RingSpec, k: int):
    """Every assignment of (s_i, t_i) pairs for k rows, in lexicographic order."""
    for flat in product(range(spec.size), repeat=2 * k):
        yield np.array(flat, dtype=np.int64).reshape(k, 2)


# --------------------------------------------------------------------------
# converse


@dataclass(frozen=True, eq=False)
class ReductionCertificate:
    perm: np.ndarray
    permuted: Code
    c0: Code
    witness: BuildUpWitness
    unit_counts: tuple[int, int]

    def rebuilt(self) -> Code:
        return buildup(self.c0, self.witness)

    def check(self) -> bool:
        return is_self_dual(self.c0) and same_row_space(self.permuted, self.rebuilt())


def reduce(code: Code, alpha: int | None = None, beta: int | None = None) -> ReductionCertificate:
    """Strip four coordinates: return C0 and a witness that rebuilds ``code``
    up to the recorded column permutation."""
    spec = code.spec
    R = get_ring(spec)
    if code.n < 8:
        raise LengthTooSmall(f"length {code.n} < 8")
    rep = inner_product_report(code)
    if not rep.self_dual:
        raise NotSelfDual("input code is not self-dual")
    if code.free_rank < 4:
        raise FreeRankTooSmall(f"free rank {code.free_rank} < 4")
    if alpha is None or beta is None:
        alpha, beta = solve_alpha_beta(spec)
    sf = code.standard
    G = sf.gen
    a = G[:4, 4:]
    v1 = R.add(R.add(a[0], R.mul(alpha, a[2])), R.mul(beta, a[3]))
    v2 = R.sub(R.add(a[1], R.mul(beta, a[2])), R.mul(alpha, a[3]))
    counts = (int(np.count_nonzero(R.is_unit(v1))), int(np.count_nonzero(R.is_unit(v2))))
    if min(counts) < 2:
        raise AssertionError(f"derived rows carry too few units: {counts}")
    c0 = Code(spec, np.vstack([v1, v2, G[4:, 4:]]))
    if not is_self_dual(c0):
        raise AssertionError("reduced code is not self-dual")
    w = BuildUpWitness(spec, alpha, beta, a[0], a[1])
    w.validate()
    perm = sf.perm.copy()
    perm.flags.writeable = False
    return ReductionCertificate(perm, code.permuted(perm), c0, w, counts)
