"""Construction A lattices from self-dual codes over Z/m.

Everything is kept integral: a lattice is stored through an integer basis B
of {x in Z^n : x mod m in C}, so the true Gram matrix is B B^T / m and all
norms are compared as integers scaled by m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._kernels import short_vector_counts
from .codes import Code, is_self_dual


class NotPositiveDefinite(ValueError):
    pass


class NotSelfDualCode(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class LatticeBasis:
    basis: np.ndarray
    scale: int

    @property
    def dimension(self) -> int:
        return self.basis.shape[1]

    def scaled_gram(self) -> np.ndarray:
        B = self.basis.astype(object)
        return (B @ B.T).astype(np.int64)


def construction_a(code: Code, check: bool = True) -> LatticeBasis:
    """Triangular basis: lifted standard-form rows and m e_j for the
    remaining coordinates, returned in the code's original coordinates."""
    spec = code.spec
    if spec.r != 1:
        raise ValueError("Construction A needs a code over Z/m")
    if check and not is_self_dual(code):
        raise NotSelfDualCode("code is not self-dual")
    m = spec.char
    sf = code.standard
    n = code.n
    B = np.zeros((n, n), dtype=np.int64)
    B[: sf.gen.shape[0]] = sf.gen
    for j in range(sf.gen.shape[0], n):
        B[j, j] = m
    out = np.empty_like(B)
    out[:, sf.perm] = B
    return LatticeBasis(out, m)


def bareiss_det(M) -> int:
    A = [[int(x) for x in row] for row in M]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1


def lll_reduce(basis, delta: Fraction = Fraction(99, 100)) -> np.ndarray:
    """Integral LLL (exact, no rational arithmetic) on the rows of ``basis``.

    Follows the classical integral formulation with d_i = Gram determinants
    and lambda_ij = d_j mu_ij, both integers.
    """
    b = [None] + [[int(x) for x in row] for row in np.asarray(basis)]
    n = len(b) - 1
    if n == 0:
        return np.asarray(basis)

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    d = [1] + [0] * n
    lam = [[0] * (n + 1) for _ in range(n + 1)]
    d[1] = dot(b[1], b[1])
    if d[1] == 0:
        raise NotPositiveDefinite("zero basis vector")
    dp, dq = delta.numerator, delta.denominator

    def redi(k, l):
        if 2 * abs(lam[k][l]) <= d[l]:
            return
        q = (2 * lam[k][l] + d[l]) // (2 * d[l])
        b[k] = [x - q * y for x, y in zip(b[k], b[l])]
        lam[k][l] -= q * d[l]
        for i in range(1, l):
            lam[k][i] -= q * lam[l][i]

    def swapi(k, kmax):
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(1, k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        la = lam[k][k - 1]
        B = (d[k - 2] * d[k] + la * la) // d[k - 1]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k] * lam[i][k - 1] - la * t) // d[k - 1]
            lam[i][k - 1] = (B * t + la * lam[i][k]) // d[k]
        d[k - 1] = B

    k, kmax = 2, 1
    while k <= n:
        if k > kmax:
            kmax = k
            for j in range(1, k + 1):
                u = dot(b[k], b[j])
                for i in range(1, j):
                    u = (d[i] * u - lam[k][i] * lam[j][i]) // d[i - 1]
                if j < k:
                    lam[k][j] = u
                else:
                    d[k] = u
            if d[k] == 0:
                raise NotPositiveDefinite("basis vectors are dependent")
        while True:
            redi(k, k - 1)
            if dq * d[k] * d[k - 2] < dp * d[k - 1] ** 2 - dq * lam[k][k - 1] ** 2:
                swapi(k, kmax)
                k = max(2, k - 1)
            else:
                for l in range(k - 2, 0, -1):
                    redi(k, l)
                k += 1
                break
    return np.array(b[1:], dtype=np.int64)


def _fp_coefficients(gram: np.ndarray) -> np.ndarray:
    """Upper-triangular quadratic-form coefficients q_ii, q_ij (floats)."""
    G = gram.astype(np.float64)
    n = G.shape[0]
    Q = G.copy()
    for i in range(n):
        if Q[i, i] <= 0:
            raise NotPositiveDefinite("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            Q[j, i] = Q[i, j]
            Q[i, j] = Q[i, j] / Q[i, i]
        for k in range(i + 1, n):
            for l in range(k, n):
                Q[k, l] -= Q[k, i] * Q[i, l]
    return np.triu(Q)


def short_vectors(gram: np.ndarray, max_norm: int) -> np.ndarray:
    """counts[t] = #{x != 0 : x^T gram x = t} for t <= max_norm (exact)."""
    gram = np.ascontiguousarray(gram, dtype=np.int64)
    fp = _fp_coefficients(gram)
    return short_vector_counts(fp, gram, float(max_norm) + 0.5, int(max_norm), 1e-9)


@dataclass(frozen=True, eq=False)
class LatticeReport:
    dimension: int
    scale: int
    gram: np.ndarray
    det: int
    mu: Fraction
    tau: int
    theta_prefix: dict[Fraction, int] = field(default_factory=dict)

    @property
    def unimodular(self) -> bool:
        return self.det == self.scale**self.dimension

    def lines(self) -> list[tuple[str, str]]:
        out = [("dimension", str(self.dimension)), ("scale", str(self.scale)),
               ("det", f"{self.det}/{self.scale}^{self.dimension}"),
               ("unimodular", str(self.unimodular).lower()),
               ("mu", str(self.mu)), ("tau", str(self.tau))]
        out += [(f"theta {k}", str(v)) for k, v in self.theta_prefix.items()]
        return out


def lattice_report(lat: LatticeBasis | Code, theta_depth: int = 1) -> LatticeReport:
    """Minimum norm, kissing number and the first ``theta_depth`` nonzero
    shells (norms mu, mu+1, ...) of the lattice."""
    if isinstance(lat, Code):
        lat = construction_a(lat)
    m = lat.scale
    gram0 = lat.scaled_gram()
    det = bareiss_det(gram0)
    if det <= 0:
        raise NotPositiveDefinite("Gram matrix is singular")
    red = lll_reduce(lat.basis)
    gram = LatticeBasis(red, m).scaled_gram()
    first = short_vectors(gram, int(np.diag(gram).min()))
    mu_s = int(np.flatnonzero(first)[0])
    top = mu_s + m * (max(theta_depth, 1) - 1)
    counts = first if top <= first.size - 1 else short_vectors(gram, top)
    tau = int(counts[mu_s])
    assert tau % 2 == 0, "vectors come in +- pairs"
    theta = {Fraction(mu_s + m * i, m): int(counts[mu_s + m * i]) for i in range(max(theta_depth, 1))}
    return LatticeReport(lat.dimension, m, gram0, det, Fraction(mu_s, m), tau, theta)
