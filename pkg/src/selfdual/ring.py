"""Exact arithmetic over GF(p^r), Z_{p^m} and Galois rings GR(p^m, r).

Elements are stored as plain integers.  For ``r == 1`` the integer is the
least nonnegative residue mod ``p^m``.  For ``r > 1`` an element with
coefficient vector ``(c_0, ..., c_{r-1})`` (monomial basis of the modulus
polynomial, constant term first) is packed as ``sum c_i * (p^m)^i``.  Every
arithmetic method accepts either Python ints or numpy integer arrays and
returns the same kind.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Sequence

import numpy as np

MAX_CHAR = 2**31
MAX_SIZE = 2**62


class RingError(ValueError):
    """Invalid ring description."""


class NotAUnit(ArithmeticError):
    pass


class NoSolution(ValueError):
    pass


class UseOtherConstruction(NoSolution):
    """The ring needs the p = 1 (mod 4) variant of the construction."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# --------------------------------------------------------------------------
# polynomials over Z_n, coefficient lists with the constant term first


def _trim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % n
    return _trim(out)


def _pmod(a: Sequence[int], f: Sequence[int], n: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``f``."""
    a = [x % n for x in a]
    d = len(f) - 1
    for k in range(len(a) - 1, d - 1, -1):
        c = a[k]
        if c:
            for i in range(d + 1):
                a[k - d + i] = (a[k - d + i] - c * f[i]) % n
    return _trim(a[:d] if len(a) > d else a) or [0]


def _pmulmod(a, b, f, n):
    return _pmod(_pmul(a, b, n), f, n)


def _ppowmod(a, e: int, f, n):
    result = [1]
    base = _pmod(a, f, n)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, n)
        e >>= 1
        if e:
            base = _pmulmod(base, base, f, n)
    return result


def _pdivmod_field(a, b, p):
    """Division with remainder over GF(p); ``b`` need not be monic."""
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and a != [0]:
        shift = len(a) - len(b)
        c = a[-1] * inv_lead % p
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        a = _trim(a)
    return _trim(q), a


def _pgcd_field(a, b, p):
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    while b != [0]:
        _, r = _pdivmod_field(a, b, p)
        a, b = b, r
    return a


def is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Ben-Or test for a monic polynomial over GF(p)."""
    f = _trim([x % p for x in f])
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    xp = [0, 1]
    for _ in range(d // 2):
        xp = _ppowmod(xp, p, f, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd_field(f, _trim(diff), p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """First monic irreducible of degree ``r`` over GF(p), in lexicographic
    order of the non-leading coefficients (constant term first)."""
    for low in itertools.product(range(p), repeat=r):
        f = list(low) + [1]
        if is_irreducible_mod_p(f, p):
            return tuple(f)
    raise RingError(f"no irreducible polynomial of degree {r} over GF({p})")


def teichmuller_lift(fbar: Sequence[int], p: int, m: int) -> tuple[int, ...]:
    """Lift a monic irreducible over GF(p) to the basic irreducible over
    Z_{p^m} that divides x^(p^r - 1) - 1.

    The lift is the product of (X - tau^(p^i)) where tau is the Teichmuller
    representative of the root class of x in Z_{p^m}[x]/(fbar).  It agrees
    with the Hensel lift of fbar against the cofactor of x^(p^r-1) - 1,
    which is unique.
    """
    r = len(fbar) - 1
    if m == 1:
        return tuple(x % p for x in fbar)
    n = p**m
    f1 = [x % p for x in fbar]
    q = p**r
    tau = _ppowmod([0, 1], q ** (m - 1), f1, n)
    conj = [tau]
    for _ in range(r - 1):
        conj.append(_ppowmod(conj[-1], p, f1, n))
    # product over S[X], S = Z_n[x]/(f1); coefficient j of X^j is an S-element
    prod: list[list[int]] = [[1]]
    for c in conj:
        neg_c = [(-v) % n for v in c]
        new = [[0] for _ in range(len(prod) + 1)]
        for j, a in enumerate(prod):
            new[j + 1] = _padd(new[j + 1], a, n)
            new[j] = _padd(new[j], _pmulmod(a, neg_c, f1, n), n)
        prod = new
    out = []
    for coeff in prod:
        coeff = _trim(list(coeff))
        if len(coeff) > 1:
            raise RingError("Teichmuller lift produced a non-constant coefficient")
        out.append(coeff[0] % n)
    return tuple(out)


def _padd(a, b, n):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = (out[i] + y) % n
    return _trim(out)


# --------------------------------------------------------------------------
# ring descriptions


class RingKind(str, Enum):
    FIELD = "gf"
    ZPM = "z"
    GALOIS = "gr"


@dataclass(frozen=True)
class RingSpec:
    kind: RingKind
    p: int
    m: int = 1
    r: int = 1
    modulus_poly: tuple[int, ...] | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise RingError(f"{self.p} is not prime")
        if self.m < 1 or self.r < 1:
            raise RingError("exponents must be >= 1")
        if self.kind is RingKind.FIELD and self.m != 1:
            raise RingError("a field has m = 1")
        if self.kind is RingKind.ZPM and self.r != 1:
            raise RingError("Z_{p^m} has r = 1")
        n = self.p**self.m
        if n > MAX_CHAR:
            raise RingError(f"p^m = {n} exceeds 2^31")
        if n**self.r > MAX_SIZE:
            raise RingError("ring too large for packed element encoding")
        if self.r == 1:
            if self.modulus_poly is not None:
                raise RingError("modulus polynomial only for r > 1")
            return
        f = self.modulus_poly
        if f is None or len(f) != self.r + 1 or f[-1] != 1:
            raise RingError(f"need a monic modulus polynomial of degree {self.r}")
        if any(not 0 <= c < n for c in f):
            raise RingError("modulus coefficients must be canonical residues")
        if not is_irreducible_mod_p(f, self.p):
            raise RingError("modulus polynomial is not irreducible mod p")

    @classmethod
    def field(cls, p: int, r: int = 1, poly: Sequence[int] | None = None) -> "RingSpec":
        if r > 1 and poly is None:
            poly = smallest_irreducible(p, r)
        return cls(RingKind.FIELD, p, 1, r, _norm_poly(poly, r, p))

    @classmethod
    def zpm(cls, p: int, m: int) -> "RingSpec":
        if m == 1:
            return cls.field(p)
        return cls(RingKind.ZPM, p, m, 1)

    @classmethod
    def galois(cls, p: int, m: int, r: int, poly: Sequence[int] | None = None) -> "RingSpec":
        if r == 1:
            return cls.zpm(p, m)
        if m == 1:
            return cls.field(p, r, poly)
        if poly is None:
            poly = teichmuller_lift(smallest_irreducible(p, r), p, m)
        return cls(RingKind.GALOIS, p, m, r, _norm_poly(poly, r, p**m))

    @property
    def char(self) -> int:
        """p^m, the additive order of 1."""
        return self.p**self.m

    @property
    def size(self) -> int:
        return self.p ** (self.m * self.r)

    @property
    def residue_size(self) -> int:
        return self.p**self.r

    @property
    def is_field(self) -> bool:
        return self.m == 1

    def residue_field(self) -> "RingSpec":
        poly = None if self.r == 1 else tuple(c % self.p for c in self.modulus_poly)
        return RingSpec.field(self.p, self.r, poly)

    def __str__(self) -> str:
        return format_ring(self)


def _norm_poly(poly, r, n):
    if poly is None:
        return None
    poly = [int(c) % n for c in poly]
    if len(poly) == r:
        poly.append(1)
    return tuple(poly)


def format_ring(spec: RingSpec) -> str:
    if spec.kind is RingKind.FIELD:
        parts = ["gf", spec.p]
        if spec.r > 1:
            parts += [spec.r, *spec.modulus_poly]
    elif spec.kind is RingKind.ZPM:
        parts = ["z", spec.p, spec.m]
    else:
        parts = ["gr", spec.p, spec.m, spec.r, *spec.modulus_poly]
    return " ".join(str(x) for x in parts)


def parse_ring(text: str) -> RingSpec:
    """Parse ``gf p [r [poly]]``, ``z p m`` or ``gr p m r [poly]``.

    Polynomial coefficients are given constant term first; the leading 1
    may be omitted.
    """
    tok = text.split()
    if not tok:
        raise RingError("empty ring description")
    try:
        nums = [int(t) for t in tok[1:]]
    except ValueError as exc:
        raise RingError(f"bad ring description {text!r}") from exc
    kind = tok[0].lower()
    if kind == "gf" and 1 <= len(nums):
        p = nums[0]
        r = nums[1] if len(nums) > 1 else 1
        poly = nums[2:] or None
        return RingSpec.field(p, r, poly)
    if kind == "z" and len(nums) == 2:
        return RingSpec.zpm(*nums)
    if kind == "gr" and len(nums) >= 3:
        p, m, r = nums[:3]
        return RingSpec.galois(p, m, r, nums[3:] or None)
    raise RingError(f"bad ring description {text!r}")


@dataclass(frozen=True)
class ChainRingSpec:
    base: RingSpec
    gamma: int
    nilpotency_e: int


def chain_ring(spec: RingSpec) -> ChainRingSpec:
    """Maximal ideal generator (p, which is 0 in a field) and nilpotency index."""
    return ChainRingSpec(spec, spec.p % spec.char, spec.m)


# --------------------------------------------------------------------------
# arithmetic


class Ring:
    """Arithmetic suite for a :class:`RingSpec`.  Use :func:`get_ring`."""

    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.p, self.m, self.r = spec.p, spec.m, spec.r
        self.char = spec.char
        self.size = spec.size
        self.e = spec.m
        self.gamma = spec.p % spec.char
        if self.r > 1:
            self._f = np.array(spec.modulus_poly, dtype=np.int64)
            self._pows = self.char ** np.arange(self.r, dtype=np.int64)
        self._unit_group_order = (self.p**self.r - 1) * self.p ** (self.r * (self.m - 1))

    def __repr__(self):
        return f"Ring({format_ring(self.spec)!r})"

    # packed <-> coefficient vectors
    def coeffs(self, a):
        """Coefficient vector(s) along a new trailing axis of length r."""
        arr = np.asarray(a, dtype=np.int64)
        if self.r == 1:
            return arr[..., None]
        return (arr[..., None] // self._pows) % self.char

    def pack(self, c):
        c = np.asarray(c, dtype=np.int64) % self.char
        if self.r == 1:
            out = c[..., 0]
        else:
            out = (c * self._pows).sum(axis=-1)
        return int(out) if out.ndim == 0 else out

    def element(self, value) -> int:
        """Canonical element from an int (embedded as a constant) or a
        coefficient sequence."""
        if isinstance(value, (int, np.integer)):
            return int(value) % self.char
        return self.pack(list(value))

    def elements(self):
        return range(self.size)

    @staticmethod
    def _ret(x):
        return int(x) if np.ndim(x) == 0 else x

    # additive structure
    def add(self, a, b):
        if self.r == 1:
            return self._ret((np.asarray(a, dtype=np.int64) + b) % self.char)
        return self.pack(self.coeffs(a) + self.coeffs(b))

    def sub(self, a, b):
        if self.r == 1:
            return self._ret((np.asarray(a, dtype=np.int64) - b) % self.char)
        return self.pack(self.coeffs(a) - self.coeffs(b))

    def neg(self, a):
        if self.r == 1:
            return self._ret((-np.asarray(a, dtype=np.int64)) % self.char)
        return self.pack(-self.coeffs(a))

    def sum(self, a, axis=-1):
        """Additive sum of an array along ``axis``."""
        a = np.asarray(a, dtype=np.int64)
        if self.r == 1:
            if a.shape[axis] * self.char >= 2**62:
                return self._ret(np.mod(a.astype(object).sum(axis=axis), self.char).astype(np.int64))
            return self._ret(a.sum(axis=axis) % self.char)
        c = self.coeffs(a)
        return self.pack(c.sum(axis=axis if axis >= 0 else axis - 1))

    def mul(self, a, b):
        n = self.char
        if self.r == 1:
            return self._ret((np.asarray(a, dtype=np.int64) * np.asarray(b, dtype=np.int64)) % n)
        A, B = np.broadcast_arrays(self.coeffs(a), self.coeffs(b))
        r = self.r
        prod = np.zeros(A.shape[:-1] + (2 * r - 1,), dtype=np.int64)
        for i in range(r):
            for j in range(r):
                prod[..., i + j] = (prod[..., i + j] + A[..., i] * B[..., j]) % n
        for d in range(2 * r - 2, r - 1, -1):
            c = prod[..., d]
            for i in range(r):
                prod[..., d - r + i] = (prod[..., d - r + i] - c * self._f[i]) % n
        return self.pack(prod[..., :r])

    def pow(self, a: int, k: int) -> int:
        result, base = 1, int(a)
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    # units and the gamma-adic filtration
    def valuation(self, a):
        """Largest v <= e with a in gamma^v R (e for zero)."""
        c = self.coeffs(a)
        v = np.zeros(c.shape, dtype=np.int64)
        for k in range(1, self.m + 1):
            v[c % self.p**k == 0] = k
        return self._ret(v.min(axis=-1))

    def is_unit(self, a):
        c = self.coeffs(a)
        out = (c % self.p != 0).any(axis=-1)
        return bool(out) if out.ndim == 0 else out

    def inv(self, a: int) -> int:
        a = int(a)
        if not self.is_unit(a):
            raise NotAUnit(f"{a} is not a unit in {format_ring(self.spec)}")
        if self.r == 1:
            return pow(a, -1, self.char)
        return self.pow(a, self._unit_group_order - 1)

    def gamma_div(self, a, v: int):
        """A representative of a / gamma^v; ``a`` must lie in gamma^v R."""
        if v == 0:
            return a
        c = self.coeffs(a)
        if (c % self.p**v).any():
            raise ArithmeticError(f"element not divisible by gamma^{v}")
        return self.pack(c // self.p**v)

    def gamma_pow(self, v: int) -> int:
        return self.p**v % self.char

    def residue(self, a):
        """Image in the residue field GF(p^r) (packed for that field)."""
        c = self.coeffs(a) % self.p
        if self.r == 1:
            return self._ret(c[..., 0])
        return self._ret((c * self.p ** np.arange(self.r, dtype=np.int64)).sum(axis=-1))

    def lift(self, a):
        """Embed residue-field elements via coefficientwise representatives."""
        if self.r == 1:
            return a
        c = (np.asarray(a, dtype=np.int64)[..., None] // self.p ** np.arange(self.r)) % self.p
        return self.pack(c)

    # vectors and matrices
    def dot(self, u, v) -> int:
        return self.sum(self.mul(np.asarray(u), np.asarray(v)), axis=-1)

    def matmul(self, A, B):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        n = self.char
        if self.r == 1:
            if A.shape[-1] * (n - 1) ** 2 < 2**62:
                return (A @ B) % n
            return np.mod(A.astype(object) @ B.astype(object), n).astype(np.int64)
        return self.sum(self.mul(A[:, :, None], B[None, :, :]), axis=1)

    def squares(self) -> np.ndarray:
        """Table of x*x for every element x, indexed by packed value."""
        return _squares(self.spec)


@lru_cache(maxsize=None)
def get_ring(spec: RingSpec) -> Ring:
    return Ring(spec)


@lru_cache(maxsize=32)
def _squares(spec: RingSpec) -> np.ndarray:
    R = get_ring(spec)
    x = np.arange(spec.size, dtype=np.int64)
    out = R.mul(x, x)
    out.flags.writeable = False
    return out


def ring_ops(spec: RingSpec) -> Ring:
    """Arithmetic suite (add, sub, mul, neg, inv, is_unit, elements)."""
    return get_ring(spec)


# --------------------------------------------------------------------------
# solutions of a^2 + b^2 + 1 = 0


def solve_alpha_beta_field(spec: RingSpec) -> tuple[int, int]:
    """Lexicographically first pair of units with a^2 + b^2 + 1 = 0 in GF(q),
    q = 3 (mod 4)."""
    if not spec.is_field:
        raise ValueError("solve_alpha_beta_field needs a field")
    q = spec.residue_size
    if q % 4 != 3:
        raise NoSolution(f"GF({q}) has q = 1 (mod 4); use solve_c_field for c^2 = -1")
    R = get_ring(spec)
    sq = R.squares()
    minus_one = R.neg(1)
    for a in range(1, q):
        target = R.sub(minus_one, int(sq[a]))
        hits = np.flatnonzero(sq[1:] == target)
        if hits.size:
            return a, int(hits[0]) + 1
    raise NoSolution(f"no units a, b with a^2 + b^2 + 1 = 0 in GF({q})")


def solve_c_field(spec: RingSpec) -> int:
    """First c with c^2 = -1 in GF(q), q = 1 (mod 4)."""
    if not spec.is_field:
        raise ValueError("solve_c_field needs a field")
    R = get_ring(spec)
    hits = np.flatnonzero(R.squares() == R.neg(1))
    if hits.size == 0:
        raise NoSolution(f"-1 is not a square in GF({spec.residue_size})")
    return int(hits[0])


def hensel_lift_alpha_beta(p: int, m: int) -> tuple[int, int]:
    """Units (x, y) of Z_{p^m} with x^2 + y^2 + 1 = 0, lifting the GF(p)
    solution one p-adic digit at a time with y held fixed."""
    if not is_prime(p) or p % 4 != 3:
        raise UseOtherConstruction(f"p = {p} is not a prime = 3 (mod 4)")
    if m < 1:
        raise ValueError("m must be >= 1")
    alpha, beta = solve_alpha_beta_field(RingSpec.field(p))
    inv2a = pow(2 * alpha, -1, p)
    x = alpha
    for i in range(1, m):
        pi = p**i
        total = x * x + beta * beta + 1
        assert total % pi == 0
        ri = total // pi
        rt = (-ri * inv2a) % p
        x += rt * pi
    return x % p**m, beta % p**m


def solve_alpha_beta(spec: RingSpec) -> tuple[int, int]:
    """Units (alpha, beta) with alpha^2 + beta^2 + 1 = 0 for any supported ring."""
    if spec.p == 2:
        raise UseOtherConstruction("characteristic 2 is not supported")
    if spec.is_field and spec.residue_size % 4 == 3:
        return solve_alpha_beta_field(spec)
    if spec.p % 4 == 1:
        raise UseOtherConstruction(
            f"p = {spec.p} = 1 (mod 4): use the c^2 = -1 building-up variant")
    # p = 3 (mod 4): constants from Z_{p^m} sit inside GR(p^m, r) and GF(p^r)
    return hensel_lift_alpha_beta(spec.p, spec.m)
