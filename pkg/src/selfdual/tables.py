"""Published matrices and witness tables, stored as the printed digit strings.

Each table row keeps only the nonzero tail of x1/x2 as printed; the number
of omitted leading zeros is recorded per table in ``TABLES``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# ternary [28,14,9]
G_C28 = """
1 0 0 0 0 0 0 0 0 0 0 0 0 0 2 1 2 1 2 1 2 1 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 1 2 2 2 2 1 0 2 1 0 0 0 0
2 2 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 1 1 1
1 0 1 1 0 1 0 0 0 0 0 0 0 0 0 0 2 0 1 2 1 1 1 2 2 2 1 2
0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 2 2 0 1 2 1 1 1 2 2 2 1
2 1 0 1 0 0 0 1 0 0 0 0 0 0 0 0 2 1 2 0 1 2 1 1 1 2 2 2
1 2 0 2 0 0 0 0 1 0 0 0 0 0 0 0 2 2 1 2 0 1 2 1 1 1 2 2
0 1 1 2 0 0 0 0 0 1 0 0 0 0 0 0 2 2 2 1 2 0 1 2 1 1 1 2
2 0 2 2 0 0 0 0 0 0 1 0 0 0 0 0 2 2 2 2 1 2 0 1 2 1 1 1
2 1 0 1 0 0 0 0 0 0 0 1 0 0 0 0 2 1 2 2 2 1 2 0 1 2 1 1
0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 2 1 1 2 2 2 1 2 0 1 2 1
1 1 2 0 0 0 0 0 0 0 0 0 0 1 0 0 2 1 1 1 2 2 2 1 2 0 1 2
0 2 2 1 0 0 0 0 0 0 0 0 0 0 1 0 2 2 1 1 1 2 2 2 1 2 0 1
1 1 2 0 0 0 0 0 0 0 0 0 0 0 0 1 2 1 2 1 1 1 2 2 2 1 2 0
"""

# Z/9 chain: C1 -> G2 -> G3 -> G4 -> G5
C1 = """
1 0 2 2
0 1 2 -2
"""

G2 = """
1 0 0 0 1 3 5 0
0 1 0 0 3 8 0 4
7 7 1 0 1 0 2 2
5 0 1 1 0 1 2 7
"""

G3 = """
1 0 0 0 0 0 4 5 1 1 1 0
0 1 0 0 0 0 2 2 2 7 0 1
0 4 8 1 1 0 0 0 1 3 5 0
7 6 8 2 0 1 0 0 3 8 0 4
2 3 1 7 7 7 1 0 1 0 2 2
6 0 3 3 5 0 1 1 0 1 2 7
"""

G4 = """
1 0 0 0 0 0 0 0 4 4 1 1 1 0 0 0
0 1 0 0 0 0 0 0 7 2 7 2 0 1 0 0
8 6 1 4 1 0 0 0 0 0 4 5 1 1 1 0
3 2 1 2 0 1 0 0 0 0 2 2 2 7 0 1
4 8 6 1 0 4 8 1 1 0 0 0 1 3 5 0
2 8 2 6 7 6 8 2 0 1 0 0 3 8 0 4
5 2 5 6 2 3 1 7 7 7 1 0 1 0 2 2
5 0 1 1 6 0 3 3 5 0 1 1 0 1 2 7
"""

G5 = """
1 0 0 0 0 0 0 0 0 0 4 4 4 1 1 1 1 1 0 0
0 1 0 0 0 0 0 0 0 0 6 6 2 3 1 1 1 1 0 0
4 4 7 0 1 0 0 0 0 0 0 0 4 4 1 1 1 0 0 0
5 6 4 7 0 1 0 0 0 0 0 0 7 2 7 2 0 1 0 0
7 7 1 0 8 6 1 4 1 0 0 0 0 0 4 5 1 1 1 0
5 5 2 0 3 2 1 2 0 1 0 0 0 0 2 2 2 7 0 1
1 3 8 5 4 8 6 1 0 4 8 1 1 0 0 0 1 3 5 0
2 7 0 8 2 8 2 6 7 6 8 2 0 1 0 0 3 8 0 4
3 5 7 5 5 2 5 6 2 3 1 7 7 7 1 0 1 0 2 2
7 5 6 4 5 0 1 1 6 0 3 3 5 0 1 1 0 1 2 7
"""

# witnesses that produce G2..G5 from their predecessors
CHAIN_WITNESSES = {
    "g2": ("c1", "1 3 5 0", "3 8 0 4"),
    "g3": ("g2", "0 0 4 5 1 1 1 0", "0 0 2 2 2 7 0 1"),
    "g4": ("g3", "0 0 0 0 4 4 1 1 1 0 0 0", "0 0 0 0 7 2 7 2 0 1 0 0"),
    "g5": ("g4", "0 0 0 0 0 0 4 4 4 1 1 1 1 1 0 0", "0 0 0 0 0 0 6 6 2 3 1 1 1 1 0 0"),
}

# bordered circulant seeds over GF(7): (corner, top border, left border, circulant row)
BORDERED = {
    "c11": (0, 2, 2, (2, 5, 5, 2, 0)),
    "c20": (2, 1, 1, (4, 6, 3, 6, 6, 1, 4, 3, 0)),
}


def parse_matrix(text: str) -> list[list[int]]:
    return [[int(t) for t in line.split()] for line in text.strip().splitlines()]


@dataclass(frozen=True)
class Table:
    seed: str
    x1_zeros: int
    x2_zeros: int
    rows: tuple
    columns: tuple[str, ...]
    x1_fixed: str | None = None
    alpha_beta: tuple[int, int] | None = None
    metadata: dict = field(default_factory=dict)


def _rows(block: str, nvec: int):
    """Parse 'vec | vec | values' lines into ((vec, ...), (value, ...))."""
    out = []
    for line in block.strip().splitlines():
        parts = [p.strip() for p in line.split("|")]
        vals = tuple(int(v) for v in parts[nvec].split()) if len(parts) > nvec else ()
        out.append((tuple(parts[:nvec]), vals))
    return tuple(out)


TABLE1 = _rows("""
0 1 2 2 2 2 1 0 2 1 0 0 0 0 | 2
1 0 2 1 1 1 1 0 2 1 0 0 0 0 | 2
2 2 1 0 1 1 2 0 2 1 0 0 0 0 | 2
1 2 1 0 2 1 2 0 2 1 0 0 0 0 | 2
2 0 0 2 2 2 1 1 2 1 0 0 0 0 | 2
2 0 1 1 1 0 1 1 2 1 0 0 0 0 | 2
2 0 2 1 1 0 1 2 2 1 0 0 0 0 | 2
2 0 1 1 2 0 1 2 2 1 0 0 0 0 | 4
0 1 1 1 2 0 1 2 2 1 0 0 0 0 | 2
1 0 2 1 2 0 1 2 2 1 0 0 0 0 | 2
1 0 0 1 1 1 2 2 2 1 0 0 0 0 | 4
1 2 0 0 2 1 2 2 2 1 0 0 0 0 | 2
0 1 1 2 2 2 0 1 1 1 0 0 0 0 | 2
1 0 2 2 2 2 0 1 1 1 0 0 0 0 | 2
0 1 2 2 2 0 1 2 1 1 0 0 0 0 | 2
1 2 1 0 2 1 2 0 1 1 0 0 0 0 | 2
2 1 1 0 2 2 1 0 0 2 1 0 0 0 | 2
2 2 2 0 2 2 1 0 0 2 1 0 0 0 | 4
1 1 2 0 2 2 1 0 0 2 1 0 0 0 | 4
0 0 1 0 2 2 1 2 2 2 0 1 0 0 | 8
""", 1)

TABLE2 = _rows("""
1 2 1 1 2 1 0 0 2 1 0 0 0 0 0 0
1 1 1 2 2 1 0 0 2 1 0 0 0 0 0 0
2 2 1 2 2 1 0 0 2 1 0 0 0 0 0 0
2 2 1 1 1 1 0 0 2 1 0 0 0 0 0 0
1 1 1 1 1 1 0 0 2 1 0 0 0 0 0 0
1 2 2 1 1 1 0 0 2 1 0 0 0 0 0 0
2 2 2 2 1 1 0 0 2 1 0 0 0 0 0 0
1 1 2 1 1 2 0 0 2 1 0 0 0 0 0 0
2 2 2 1 1 2 0 0 2 1 0 0 0 0 0 0
1 1 2 2 2 2 0 0 2 1 0 0 0 0 0 0
2 2 2 2 2 2 0 0 2 1 0 0 0 0 0 0
1 1 1 1 2 2 0 0 2 1 0 0 0 0 0 0
2 2 1 1 2 2 0 0 2 1 0 0 0 0 0 0
1 2 2 1 2 2 0 0 2 1 0 0 0 0 0 0
1 1 2 1 0 2 1 0 2 1 0 0 0 0 0 0
2 2 2 1 0 2 1 0 2 1 0 0 0 0 0 0
0 1 2 1 1 2 1 0 2 1 0 0 0 0 0 0
1 1 0 1 2 2 1 0 2 1 0 0 0 0 0 0
0 1 1 1 2 2 1 0 2 1 0 0 0 0 0 0
0 1 2 2 2 2 1 0 2 1 0 0 0 0 0 0
""", 1)

TABLE3 = _rows("""
2 1 2 6 1 6 1 0 | 1 2 1 1 6 5 1 0 | 24 696 3432
1 2 2 6 1 6 1 0 | 4 5 6 4 4 6 1 0 | 24 720 3360
5 1 5 6 1 6 1 0 | 4 5 1 3 6 1 3 0 | 12 636 3780
5 1 5 1 1 6 1 0 | 6 3 3 6 1 2 3 0 | 6 564 3996
6 5 5 1 1 6 1 0 | 3 4 1 2 4 1 1 0 | 12 540 4068
5 2 1 1 1 6 1 0 | 2 1 2 1 5 2 3 0 | 12 588 3924
1 6 2 2 1 6 1 0 | 3 2 1 5 1 2 2 0 | 6 612 3804
4 2 3 3 1 6 1 0 | 3 3 5 3 3 5 2 0 | 12 576 3936
5 3 3 3 1 6 1 0 | 4 1 4 5 1 3 1 0 | 12 588 3876
3 2 4 3 1 6 1 0 | 5 5 2 4 1 5 1 0 | 12 552 4104
2 3 4 3 1 6 1 0 | 4 4 5 4 4 2 2 0 | 12 624 3744
5 4 4 3 1 6 1 0 | 3 6 2 6 3 1 3 0 | 12 612 3852
5 3 4 4 1 6 1 0 | 5 5 5 3 5 1 1 0 | 48 576 3936
1 5 1 5 1 6 1 0 | 3 1 1 2 4 3 1 0 | 24 480 4320
2 6 1 5 1 6 1 0 | 5 3 1 1 1 3 3 0 | 24 672 3552
3 4 4 5 1 6 1 0 | 5 2 5 3 6 2 1 0 | 48 528 4128
2 1 6 5 1 6 1 0 | 6 2 5 2 3 2 1 0 | 12 672 3552
5 2 3 5 2 6 1 0 | 1 4 4 5 1 4 1 0 | 12 660 3708
2 2 4 5 2 6 1 0 | 2 1 2 1 2 5 3 0 | 6 564 4092
6 6 6 5 2 6 1 0 | 1 3 1 4 6 2 3 0 | 6 600 3912
""", 2)

TABLE4 = _rows("""
2 6 2 3 2 1 6 1 6 1 0 0 | 4 4 3 5 3 2 1 1 6 1 0 0 | 948 8496 65520 425484
2 2 5 1 3 1 6 1 6 1 0 0 | 3 5 4 4 6 4 2 1 6 1 0 0 | 894 8802 64572 427236
6 4 4 1 4 1 6 1 6 1 0 0 | 3 6 2 6 1 2 2 1 6 1 0 0 | 936 8436 65580 427704
2 6 2 3 5 1 6 1 6 1 0 0 | 5 3 3 4 4 2 1 1 6 1 0 0 | 882 8592 65544 427086
5 6 5 4 5 1 6 1 6 1 0 0 | 2 1 3 5 1 5 1 1 6 1 0 0 | 774 8706 66204 426204
1 4 2 2 1 2 6 1 6 1 0 0 | 3 3 5 6 3 4 2 1 6 1 0 0 | 948 8466 65520 426306
4 5 3 4 4 2 6 1 6 1 0 0 | 1 3 5 1 2 1 2 1 6 1 0 0 | 936 8982 63516 426750
1 6 4 6 4 3 6 1 6 1 0 0 | 2 1 6 3 2 6 2 1 6 1 0 0 | 966 8502 65148 426792
1 3 3 1 1 3 6 1 6 1 0 0 | 5 2 2 3 2 4 2 1 6 1 0 0 | 966 8700 64500 425730
4 6 1 6 3 4 6 1 6 1 0 0 | 5 1 6 3 6 2 2 1 6 1 0 0 | 846 8796 65448 424134
""", 2)

TABLE5 = _rows("""
4 5 1 1 1 0 | 2 2 2 7 0 1 | 516 2
4 5 1 1 1 0 | 8 6 5 4 1 1 | 552 2
4 5 1 1 1 0 | 5 3 2 7 1 1 | 444 2
4 5 1 1 1 0 | 8 3 8 7 1 1 | 480 2
4 5 1 1 1 0 | 2 5 5 4 3 1 | 588 2
4 5 1 1 1 0 | 2 2 8 6 4 1 | 408 2
4 5 1 1 1 0 | 3 5 5 5 7 1 | 624 2
5 5 1 1 1 0 | 0 8 7 2 5 8 | 660 2
""", 2)

TABLE6 = _rows("""
4 4 1 1 1 0 0 0 | 7 2 7 2 0 1 0 0 | 266 2
4 4 1 1 1 0 0 0 | 7 4 8 2 0 1 0 0 | 278 2
4 4 1 1 1 0 0 0 | 1 8 5 4 0 1 0 0 | 248 2
4 4 1 1 1 0 0 0 | 4 8 1 5 0 1 0 0 | 254 2
4 4 1 1 1 0 0 0 | 1 8 4 5 0 1 0 0 | 260 2
4 4 1 1 1 0 0 0 | 1 1 5 5 0 1 0 0 | 284 2
4 4 1 1 1 0 0 0 | 7 4 2 8 0 1 0 0 | 296 2
4 4 1 1 1 0 0 0 | 1 5 4 8 0 1 0 0 | 338 2
4 4 1 1 1 0 0 0 | 8 1 2 6 1 1 0 0 | 272 2
4 4 1 1 1 0 0 0 | 7 5 3 1 2 1 0 0 | 242 2
4 4 1 1 1 0 0 0 | 8 2 1 1 3 1 0 0 | 302 2
4 4 1 1 1 0 0 0 | 2 8 1 1 3 1 0 0 | 290 2
4 4 1 1 1 0 0 0 | 2 2 4 1 6 1 0 0 | 326 2
4 4 1 1 1 0 0 0 | 1 7 2 5 6 1 0 0 | 230 2
4 4 1 1 1 0 0 0 | 5 4 7 2 0 2 0 0 | 308 2
4 4 1 1 1 0 0 0 | 8 7 8 4 0 2 0 0 | 314 2
4 4 1 1 1 0 0 0 | 1 8 4 3 2 2 0 0 | 320 2
4 4 1 1 1 0 0 0 | 7 2 4 0 5 2 0 0 | 332 2
4 4 1 1 1 0 0 0 | 4 1 2 8 6 2 0 0 | 344 2
4 4 1 1 1 0 0 0 | 7 2 3 7 8 7 0 0 | 236 2
""", 2)

TABLE7 = _rows("""
4 4 4 1 1 1 1 1 0 0 | 6 6 2 3 1 1 1 1 0 0 | 138 138 2 152
4 4 4 1 1 1 1 1 0 0 | 4 4 4 1 1 1 1 1 0 0 | 138 60 2 152
4 4 4 1 1 1 1 1 0 0 | 2 5 2 5 1 1 1 1 0 0 | 138 132 2 152
4 4 4 1 1 1 1 1 0 0 | 8 5 5 5 1 1 1 1 0 0 | 138 36 2 120
4 4 4 1 1 1 1 1 0 0 | 5 8 5 5 1 1 1 1 0 0 | 138 90 2 120
4 4 4 1 1 1 1 1 0 0 | 5 5 8 5 1 1 1 1 0 0 | 132 48 2 120
4 4 4 1 1 1 1 1 0 0 | 6 2 3 6 1 1 1 1 0 0 | 144 36 2 120
4 4 4 1 1 1 1 1 0 0 | 5 7 2 2 2 1 1 1 0 0 | 120 30 2 152
4 4 4 1 1 1 1 1 0 0 | 2 6 6 1 3 1 1 1 0 0 | 126 42 2 184
4 4 4 1 1 1 1 1 0 0 | 6 5 4 6 3 1 1 1 0 0 | 126 36 2 120
""", 2)

TABLE8 = _rows("""
4 3 2 1 1 1 1 1 1 0 0 0 | 7 7 1 4 7 2 6 1 1 0 0 0 | 48 3
4 3 2 1 1 1 1 1 1 0 0 0 | 2 1 2 4 7 2 6 1 1 0 0 0 | 40 3
4 3 2 1 1 1 1 1 1 0 0 0 | 4 7 6 2 2 1 7 1 1 0 0 0 | 32 3
""", 2)

TERNARY_X1_T1 = "0 0 0 0 0 0 0 0 0 0 2 1 2 1 2 1 2 1 0 0 0 0 0 0"
TERNARY_X1_T2 = "0 0 0 0 0 0 0 0 0 0 0 0 2 1 2 1 2 1 2 1 0 0 0 0 0 0 0 0"

TABLES: dict[int, Table] = {
    1: Table("s11", 0, 10, TABLE1, ("aut",), x1_fixed=TERNARY_X1_T1,
             metadata={"d": 9}),
    2: Table("g_c28", 0, 12, TABLE2, (), x1_fixed=TERNARY_X1_T2,
             metadata={"d": 9}),
    3: Table("c11", 4, 4, TABLE3, ("aut", "A7", "A8"), metadata={"d": 7}),
    4: Table("c20", 8, 8, TABLE4, ("A9", "A10", "A11", "A12"), metadata={"d": 9}),
    5: Table("g2", 2, 2, TABLE5, ("A6", "mu"), alpha_beta=(2, 2), metadata={"d": 6}),
    6: Table("g3", 4, 4, TABLE6, ("A6", "mu"), alpha_beta=(2, 2), metadata={"d": 6}),
    7: Table("g4", 6, 6, TABLE7, ("A6", "A7", "mu", "tau"), alpha_beta=(2, 2),
             metadata={"d": 6}),
    8: Table("g5", 8, 8, TABLE8, ("A6", "mu"), alpha_beta=(2, 2), metadata={"d": 6}),
}
