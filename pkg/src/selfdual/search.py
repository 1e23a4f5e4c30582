"""Fixtures, table reproduction, and randomized discovery."""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import numpy as np

from . import tables
from .buildup import BuildUpWitness, buildup, find_witness_vectors
from .codes import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    Code,
    WeightEnumerator,
    is_self_dual,
    low_weight_counts,
    min_weight,
    screen,
    weight_enumerator,
)
from .lattice import lattice_report
from .ring import RingSpec

GF3 = RingSpec.field(3)
GF7 = RingSpec.field(7)
Z9 = RingSpec.zpm(3, 2)


class FixtureValidationFailed(AssertionError):
    pass


@dataclass(frozen=True, eq=False)
class Fixture:
    name: str
    code: Code
    note: str
    d: int | None = None

    def validate(self, budget: int | None = DEFAULT_BUDGET) -> int:
        if not is_self_dual(self.code):
            raise FixtureValidationFailed(f"{self.name}: not self-dual")
        d = min_weight(self.code, budget=budget).weight
        if self.d is not None and d != self.d:
            raise FixtureValidationFailed(f"{self.name}: d = {d}, expected {self.d}")
        return d


def symmetry_code(q: int) -> Code:
    """Pless symmetry code [I | S] over GF(3) for a prime q = 2 mod 3."""
    qr = {(x * x) % q for x in range(1, q)}

    def chi(a):
        a %= q
        return 0 if a == 0 else (1 if a in qr else -1)

    S = np.zeros((q + 1, q + 1), dtype=np.int64)
    S[0, 1:] = 1
    S[1:, 0] = chi(-1)
    for i in range(q):
        for j in range(q):
            S[1 + i, 1 + j] = chi(j - i)
    return Code.from_rows(GF3, np.hstack([np.eye(q + 1, dtype=np.int64), S]), f"S({q})")


def bordered_circulant(spec: RingSpec, corner: int, top: int, left: int, row, name="") -> Code:
    """[I | A] with A = [[corner, top...], [left..., circulant(row)]]."""
    row = np.asarray(row, dtype=np.int64)
    k = row.size + 1
    A = np.zeros((k, k), dtype=np.int64)
    A[0, 0], A[0, 1:], A[1:, 0] = corner, top, left
    for i in range(k - 1):
        A[1 + i, 1:] = np.roll(row, i)
    return Code.from_rows(spec, np.hstack([np.eye(k, dtype=np.int64), A]), name)


@lru_cache(maxsize=1)
def fixtures() -> dict[str, Fixture]:
    """Printed matrices ingested verbatim plus the derived seed codes."""
    m = tables.parse_matrix
    out = {
        "c1": Fixture("c1", Code.from_rows(Z9, m(tables.C1), "C1"), "printed, Z/9", 3),
        "g2": Fixture("g2", Code.from_rows(Z9, m(tables.G2), "G2"), "printed, Z/9", 3),
        "g3": Fixture("g3", Code.from_rows(Z9, m(tables.G3), "G3"), "printed, Z/9", 6),
        "g4": Fixture("g4", Code.from_rows(Z9, m(tables.G4), "G4"), "printed, Z/9", 6),
        "g5": Fixture("g5", Code.from_rows(Z9, m(tables.G5), "G5"), "printed, Z/9", 6),
        "g_c28": Fixture("g_c28", Code.from_rows(GF3, m(tables.G_C28), "G(C28)"),
                         "printed, GF(3)", 9),
        "s11": Fixture("s11", symmetry_code(11), "derived symmetry code, GF(3)", 9),
    }
    for name, (a, b, c, row) in tables.BORDERED.items():
        d = {"c11": 6, "c20": 9}[name]
        out[name] = Fixture(name, bordered_circulant(GF7, a, b, c, row, name), "derived bordered circulant, GF(7)", d)
    return out


def catalog_hash() -> str:
    h = hashlib.sha256()
    for name, fx in sorted(fixtures().items()):
        h.update(name.encode())
        h.update(str(fx.code.spec).encode())
        h.update(fx.code.gen.tobytes())
    return h.hexdigest()[:12]


# --------------------------------------------------------------------------
# tables


def _vec(text: str) -> list[int]:
    return [int(t) for t in text.split()]


def pad(tail: str, zeros: int) -> list[int]:
    return [0] * zeros + _vec(tail)


def unpad(vec, zeros: int) -> str:
    """Inverse of :func:`pad`: the printed digit string of the tail."""
    v = [int(x) for x in vec]
    if any(v[:zeros]):
        raise ValueError("vector has nonzero entries in the padded prefix")
    return " ".join(map(str, v[zeros:]))


def table_witness(table_id: int, row: int) -> tuple[Code, BuildUpWitness]:
    """Seed code and witness for a 1-based table row."""
    t = tables.TABLES[table_id]
    seed = fixtures()[t.seed].code
    vecs, _ = t.rows[row - 1]
    if t.x1_fixed is not None:
        x1, x2 = _vec(t.x1_fixed), pad(vecs[0], t.x2_zeros)
    else:
        x1, x2 = pad(vecs[0], t.x1_zeros), pad(vecs[1], t.x2_zeros)
    a, b = t.alpha_beta if t.alpha_beta else (None, None)
    return seed, BuildUpWitness.from_ints(seed.spec, x1, x2, a, b)


def table_code(table_id: int, row: int) -> Code:
    seed, w = table_witness(table_id, row)
    code = buildup(seed, w)
    return Code(code.spec, code.gen, f"T{table_id}.{row}")


def expected_invariants(table_id: int, row: int) -> dict[str, int]:
    t = tables.TABLES[table_id]
    _, vals = t.rows[row - 1]
    exp = dict(zip(t.columns, vals))
    exp.pop("aut", None)
    exp.update(t.metadata)
    return exp


@dataclass
class RowReport:
    table: int
    row: int
    expected: dict
    computed: dict = field(default_factory=dict)
    self_dual: bool | None = None
    error: str | None = None
    seconds: float = 0.0

    @property
    def mismatches(self) -> list[str]:
        out = [k for k, v in self.expected.items() if k in self.computed and self.computed[k] != v]
        if self.self_dual is False:
            out.insert(0, "self_dual")
        return out

    @property
    def passed(self) -> bool:
        return (self.error is None and self.self_dual is True and not self.mismatches
                and all(k in self.computed for k in self.expected))

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        parts = [f"table {self.table}", f"row {self.row}", status,
                 f"self-dual {str(self.self_dual).lower()}"]
        for k, v in self.expected.items():
            got = self.computed.get(k, "-")
            parts.append(f"{k} {got}/{v}")
        if self.error:
            parts.append(f"error {self.error}")
        return "\t".join(parts)


def compute_invariants(code: Code, wanted, budget: int | None = DEFAULT_BUDGET, jobs: int = 1,
                       method: str = "auto") -> dict[str, int]:
    """Hamming d and A_i, plus mu and tau for Z/m codes, as requested.

    ``method`` picks how A_i are counted for free codes over Z/p^2: ``auto``
    and ``residue`` use residue-assisted counting, ``full`` enumerates.
    """
    wanted = list(wanted)
    weights = sorted(int(k[1:]) for k in wanted if k.startswith("A"))
    out: dict[str, int] = {}
    residue_ok = (code.spec.r == 1 and code.spec.m == 2 and code.is_free)
    if weights:
        if method != "full" and residue_ok:
            counts = low_weight_counts(code, max(weights), budget=budget)
            out.update({f"A{w}": counts[w] for w in weights})
            if "d" in wanted:
                out["d"] = min_weight(code, budget=budget, jobs=jobs).weight
        else:
            we = weight_enumerator(code, budget=budget, jobs=jobs)
            out.update({f"A{w}": we[w] for w in weights})
            out["d"] = we.min_weight
    elif "d" in wanted:
        out["d"] = min_weight(code, budget=budget, jobs=jobs).weight
    if "mu" in wanted or "tau" in wanted:
        rep = lattice_report(code)
        out["mu"] = int(rep.mu) if rep.mu.denominator == 1 else rep.mu
        if "tau" in wanted:
            out["tau"] = rep.tau
    return {k: out[k] for k in wanted if k in out}


def reproduce_row(table_id: int, row: int, budget: int | None = DEFAULT_BUDGET, jobs: int = 1,
                  method: str = "auto") -> RowReport:
    rep = RowReport(table_id, row, expected_invariants(table_id, row))
    t0 = time.perf_counter()
    try:
        code = table_code(table_id, row)
        rep.self_dual = is_self_dual(code)
        rep.computed = compute_invariants(code, rep.expected, budget, jobs, method)
    except BudgetExceeded as exc:
        rep.error = f"budget exceeded: |C| = {exc.size}"
    except Exception as exc:  # record and move on; a batch never aborts
        rep.error = f"{type(exc).__name__}: {exc}"
    rep.seconds = time.perf_counter() - t0
    return rep


def reproduce_table(table_id: int, rows=None, budget: int | None = DEFAULT_BUDGET, jobs: int = 1,
                    method: str = "auto", progress=None) -> list[RowReport]:
    t = tables.TABLES[table_id]
    rows = list(rows) if rows is not None else list(range(1, len(t.rows) + 1))
    out = []
    for r in rows:
        rep = reproduce_row(table_id, r, budget, jobs, method)
        if progress:
            progress(rep)
        out.append(rep)
    return out


# --------------------------------------------------------------------------
# discovery


@dataclass(frozen=True, eq=False)
class Discovered:
    name: str
    code: Code
    d: int
    enumerator: WeightEnumerator
    witness: BuildUpWitness

    @property
    def fingerprint(self) -> str:
        return self.enumerator.fingerprint()

    def manifest_line(self) -> str:
        return f"{self.name}.code\t{self.code.n}\t{self.code.k}\t{self.d}\t{self.fingerprint}"


def discover(seed_code: Code, rng_seed: int, count: int, min_d: int, out_dir=None,
             distinct: bool = True, budget: int | None = DEFAULT_BUDGET, jobs: int = 1,
             progress=None) -> list[Discovered]:
    """Try ``count`` random witnesses on ``seed_code``; keep self-dual codes
    with d >= min_d and, if ``distinct``, pairwise different enumerators."""
    from .io import write_code

    found: list[Discovered] = []
    seen: set[str] = set()
    stream = find_witness_vectors(seed_code, "random", seed=rng_seed)
    for trial, w in zip(range(count), stream):
        code = buildup(seed_code, w, check=trial == 0)
        if not is_self_dual(code):
            continue
        we = screen(code, min_d, budget=budget, jobs=jobs)
        if we is None:
            continue
        fp = we.fingerprint()
        if distinct and fp in seen:
            continue
        seen.add(fp)
        item = Discovered(f"code{len(found) + 1:04d}", code, we.min_weight, we, w)
        found.append(item)
        if progress:
            progress(trial, item)
    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for item in found:
            write_code(out / f"{item.name}.code", item.code)
        (out / "manifest.tsv").write_text("".join(i.manifest_line() + "\n" for i in found))
    return found
