"""Bumpless pipedreams (pipes enter on the east edge and leave on the south
edge), the chain bijection into (n-1, ..., 1)-compatible chains, and the
flagged-tableau encodings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .chains import BruhatChain, ChainError, as_chain, increasing_chain_steps
from .perm import (
    Perm, complete_decreasing_tail, has_decreasing_tail, is_cover,
    longest_element, right_transpose,
)
from .poly import Polynomial

__all__ = [
    "BpdGrid", "FlaggedTableau", "enumerate_bpd", "analyze_bpd",
    "prefix_permutation", "chain_bpd", "segment_chain", "build_row",
    "chain_bpd_inverse", "phi", "ft_analyze", "psi", "psi_inverse",
    "bpd_double_weight", "TILE_NAMES", "PORTS",
]

TILE_NAMES = {".": "Blank", "-": "H", "|": "V", "+": "Cross", "r": "TurnES", "j": "TurnNW"}
_GLYPH = {v: k for k, v in TILE_NAMES.items()}
PORTS = {".": "", "-": "EW", "|": "NS", "+": "NESW", "r": "ES", "j": "NW"}
TOP_FREE = ".-r"


@dataclass(frozen=True)
class BpdGrid:
    """k x n filling stored as k row strings of glyphs; k == n for a full BPD."""

    rows: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged bpd rows")
        for row in self.rows:
            bad = set(row) - set(PORTS)
            if bad:
                raise ValueError(f"unknown bpd glyphs {sorted(bad)}")

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def k(self) -> int:
        return len(self.rows)

    def tile(self, r: int, c: int) -> str:
        return self.rows[r - 1][c - 1]

    @property
    def tiles(self) -> list[list[str]]:
        return [[TILE_NAMES[ch] for ch in row] for row in self.rows]

    def ascii(self) -> str:
        return "\n".join(self.rows)

    def to_json(self) -> dict:
        return {"kind": "bpd", "n": self.n, "tiles": self.tiles}

    @classmethod
    def from_json(cls, obj) -> BpdGrid:
        if not isinstance(obj, dict) or obj.get("kind") != "bpd":
            raise ValueError("expected a bpd object")
        try:
            return cls(tuple("".join(_GLYPH[t] for t in row) for row in obj["tiles"]))
        except KeyError as exc:
            raise ValueError(f"unknown bpd tile {exc}") from None

    @classmethod
    def from_ascii(cls, text: str) -> BpdGrid:
        return cls(tuple(line.strip() for line in text.strip().splitlines()))

    def prefix(self, k: int) -> BpdGrid:
        return BpdGrid(self.rows[:k])


def _check_ports(D: BpdGrid) -> None:
    n, k = D.n, D.k
    for r in range(1, k + 1):
        for c in range(1, n + 1):
            p = PORTS[D.tile(r, c)]
            if c == n and "E" not in p:
                raise ValueError(f"east boundary empty at ({r},{c})")
            if c == 1 and "W" in p:
                raise ValueError(f"pipe leaves the west edge at ({r},{c})")
            if c < n and ("E" in p) != ("W" in PORTS[D.tile(r, c + 1)]):
                raise ValueError(f"horizontal mismatch at ({r},{c})")
            if r == 1 and "N" in p:
                raise ValueError(f"pipe enters the north edge at (1,{c})")
            if r < k and ("S" in p) != ("N" in PORTS[D.tile(r + 1, c)]):
                raise ValueError(f"vertical mismatch at ({r},{c})")


def _trace(D: BpdGrid) -> tuple[dict[int, int], dict[tuple[int, int], tuple[int, int]]]:
    """Exit column of every pipe at the bottom edge and (h, v) labels at crosses."""
    _check_ports(D)
    n, k = D.n, D.k
    exits: dict[int, int] = {}
    crosses: dict[tuple[int, int], list[int]] = {}
    for i in range(1, k + 1):
        r, c, moving = i, n, "W"
        while r <= k:
            t = D.tile(r, c)
            if moving == "W":
                if t == "+":
                    crosses.setdefault((r, c), [0, 0])[0] = i
                    c -= 1
                elif t == "-":
                    c -= 1
                elif t == "r":
                    moving = "S"
                    r += 1
                else:
                    raise ValueError(f"pipe {i} blocked at ({r},{c})")
            else:
                if t == "+":
                    crosses.setdefault((r, c), [0, 0])[1] = i
                    r += 1
                elif t == "|":
                    r += 1
                elif t == "j":
                    moving = "W"
                    c -= 1
                else:
                    raise ValueError(f"pipe {i} blocked at ({r},{c})")
            if c < 1:
                raise ValueError(f"pipe {i} left the west edge")
        exits[i] = c
    bottom = sum(1 for ch in D.rows[-1] if "S" in PORTS[ch]) if k else 0
    if bottom != k:
        raise ValueError("bottom edge does not carry exactly the entered pipes")
    out = {}
    for cell, (h, v) in crosses.items():
        if not (h and v):
            raise ValueError(f"cross at {cell} is not used by two pipes")
        if h <= v:
            raise ValueError(f"crossing rule violated at {cell}: {h} over {v}")
        out[cell] = (h, v)
    return exits, out


def enumerate_bpd(w: Perm) -> set[BpdGrid]:
    return {BpdGrid(rows) for rows in kernels.bpd_grids(tuple(w))}


def analyze_bpd(D: BpdGrid) -> tuple[Perm, tuple[int, ...]]:
    if D.k != D.n:
        raise ValueError("analyze_bpd needs a full n x n grid")
    exits, _ = _trace(D)
    w = tuple(exits[i] for i in range(1, D.n + 1))
    wt = tuple(D.rows[i].count(".") for i in range(D.n - 1))
    return w, wt


def prefix_permutation(D: BpdGrid, k: int) -> Perm:
    n = D.n
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range")
    exits, _ = _trace(D.prefix(k)) if k else ({}, {})
    u = complete_decreasing_tail([exits[i] for i in range(1, k + 1)], n)
    assert has_decreasing_tail(u, k)
    return u


def chain_bpd(D: BpdGrid) -> BruhatChain:
    n = D.n
    return BruhatChain(tuple(prefix_permutation(D, k) for k in range(n - 1, -1, -1)))


def _row_sources(D: BpdGrid, r: int) -> dict[int, int]:
    """Column -> label of the pipe occupying a top-free tile in row r."""
    exits, _ = _trace(D.prefix(r - 1)) if r > 1 else ({}, {})
    n = D.n
    down = {c: i for i, c in exits.items()}
    row = D.rows[r - 1]
    # pipes move west then south inside a row; walk right to left
    src: dict[int, int] = {}
    h = r
    for c in range(n, 0, -1):
        t = row[c - 1]
        v = down.get(c, 0)
        if t == "-":
            src[c] = h
        elif t == "r":
            src[c] = h
            h = 0
        elif t == "j":
            h = v
        elif t == "+":
            pass
    return src


def segment_chain(D: BpdGrid, k: int) -> BruhatChain:
    """The increasing k-chain from u_k to u_{k-1} read from row k."""
    n = D.n
    row = D.rows[k - 1]
    src = _row_sources(D, k)
    free = [c for c in range(1, n + 1) if row[c - 1] in TOP_FREE]
    bearing = [c for c in free if c in src]
    perms = [prefix_permutation(D, k)]
    for c in bearing[:-1]:
        j = free.index(c) + 1
        perms.append(right_transpose(perms[-1], src[c], n + 1 - j))
    return BruhatChain(tuple(perms), (k,) * (len(perms) - 1))


def build_row(u: Perm, w: Perm, k: int) -> str:
    """Row k extending a (k-1)-row BPD of w to a k-row BPD of u."""
    n = len(u)
    if not has_decreasing_tail(w, k - 1):
        raise ChainError(f"{w} has no decreasing tail past {k - 1}")
    steps = increasing_chain_steps(u, w, k)
    if steps is None:
        raise ChainError(f"no increasing {k}-chain from {u} to {w}")
    larger: set[int] = set()
    smaller: set[int] = set()
    spans = []
    v = list(u)
    for a, b in steps:
        lo, hi = v[a - 1], v[b - 1]
        assert hi not in u[:k], "larger swapped value sits in the first k entries"
        larger.add(lo)
        smaller.add(hi)
        spans.append((lo, hi))
        v[a - 1], v[b - 1] = hi, lo
    top = set(w[:k])
    row = []
    for c in range(1, n + 1):
        if c in larger and c in smaller:
            t = "-"
        elif c in larger:
            t = "r"
        elif c in smaller:
            t = "j"
        elif c not in top:
            t = "."
        elif any(lo < c < hi for lo, hi in spans):
            t = "+"
        else:
            t = "|"
        row.append(t)
    wk = w[k - 1]
    if row[wk - 1] == "j":
        row[wk - 1] = "-"
    elif row[wk - 1] == "|":
        row[wk - 1] = "r"
    for c in range(wk + 1, n + 1):
        if row[c - 1] == "|":
            row[c - 1] = "+"
    return "".join(row)


def chain_bpd_inverse(C) -> BpdGrid:
    C = as_chain(C)
    n = C.n
    if len(C) != n or C.perms[-1] != longest_element(n):
        raise ChainError("chain must have n entries and end at w0")
    rows = []
    for k in range(1, n):
        rows.append(build_row(C.perms[n - 1 - k], C.perms[n - k], k))
    w = C.perms[0]
    c0 = w[n - 1]
    rows.append("|" * (c0 - 1) + "r" + "+" * (n - c0))
    D = BpdGrid(tuple(rows))
    try:
        ok = chain_bpd(D) == BruhatChain(C.perms)
    except ValueError:
        ok = False
    if not ok:
        raise ChainError("chain is not in the image of chain_bpd")
    return D


def bpd_double_weight(D: BpdGrid) -> Polynomial:
    m = max(D.n - 1, 1)
    out = Polynomial.const(1, m)
    for r, row in enumerate(D.rows, 1):
        for c, ch in enumerate(row, 1):
            if ch == ".":
                out = out * (Polynomial.x(r, m) - Polynomial.y(c, m))
    return out


# -- flagged tableaux -----------------------------------------------------------

@dataclass(frozen=True)
class FlaggedTableau:
    """Staircase filling: row i has n-i cells, each None or a value in [i]."""

    n: int
    rows: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if len(self.rows) != max(self.n - 1, 0):
            raise ValueError("flagged tableau needs n-1 rows")
        for i, row in enumerate(self.rows, 1):
            if len(row) != self.n - i:
                raise ValueError(f"row {i} must have {self.n - i} cells")
            for a in row:
                if a is not None and not 1 <= a <= i:
                    raise ValueError(f"entry {a} in row {i} breaks the flag")

    @classmethod
    def empty(cls, n: int) -> FlaggedTableau:
        return cls(n, tuple((None,) * (n - i) for i in range(1, n)))

    def word(self) -> tuple[tuple[int, int], ...]:
        out = []
        for row in self.rows:
            for c in range(len(row), 0, -1):
                if row[c - 1] is not None:
                    out.append((row[c - 1], self.n + 1 - c))
        return tuple(out)

    def weight(self) -> tuple[int, ...]:
        return tuple(sum(1 for a in row if a is None) for row in self.rows)

    def ascii(self) -> str:
        return "\n".join(" ".join("." if a is None else str(a) for a in row) for row in self.rows)

    def to_json(self) -> dict:
        return {"kind": "ft", "n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj) -> FlaggedTableau:
        if not isinstance(obj, dict) or obj.get("kind") != "ft":
            raise ValueError("expected an ft object")
        return cls(int(obj["n"]), tuple(tuple(row) for row in obj["rows"]))


def phi(D: BpdGrid) -> FlaggedTableau:
    n = D.n
    rows = []
    for i in range(1, n):
        row = D.rows[i - 1]
        src = _row_sources(D, i)
        free = [c for c in range(1, n + 1) if row[c - 1] in TOP_FREE]
        rows.append(tuple(None if row[c - 1] == "." else src[c] for c in free[: n - i]))
    return FlaggedTableau(n, tuple(rows))


def ft_analyze(T: FlaggedTableau) -> tuple[tuple[tuple[int, int], ...], Perm | None, tuple[int, ...]]:
    word = T.word()
    v = longest_element(T.n) if T.n else ()
    for a, b in word:
        x = right_transpose(v, a, b)
        if not is_cover(x, v):
            v = None
            break
        v = x
    return word, v, T.weight()


def psi(C) -> FlaggedTableau:
    C = as_chain(C)
    n = C.n
    if len(C) != n or C.perms[-1] != longest_element(n):
        raise ChainError("chain must have n entries and end at w0")
    rows = []
    for k in range(1, n):
        steps = increasing_chain_steps(C.perms[n - 1 - k], C.perms[n - k], k)
        if steps is None:
            raise ChainError(f"segment {n - k} has no increasing {k}-chain")
        row: list[int | None] = [None] * (n - k)
        for a, b in steps:
            row[n - b] = a
        rows.append(tuple(row))
    return FlaggedTableau(n, tuple(rows))


def psi_inverse(T: FlaggedTableau) -> BruhatChain:
    n = T.n
    u = longest_element(n)
    seq = [u]
    for k, row in enumerate(T.rows, 1):
        for c in range(len(row), 0, -1):
            a = row[c - 1]
            if a is None:
                continue
            x = right_transpose(u, a, n + 1 - c)
            if not is_cover(x, u):
                raise ChainError(f"entry {a} at ({k},{c}) leaves the cover relation")
            u = x
        seq.append(u)
    C = BruhatChain(tuple(reversed(seq)))
    if psi(C) != T:
        raise ChainError("tableau does not come from a compatible chain")
    return C


def flagged_tableau_from_word(n: int, rows: Sequence[Sequence[tuple[int, int]]]) -> FlaggedTableau:
    """Build a tableau from per-row lists of reading-word pairs (a, n+1-c)."""
    out = []
    for k, pairs in enumerate(rows, 1):
        row: list[int | None] = [None] * (n - k)
        for a, b in pairs:
            row[n - b] = a
        out.append(tuple(row))
    return FlaggedTableau(n, tuple(out))
