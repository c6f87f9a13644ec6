"""Hybrid pipedreams: each row is a PD-type (P) or BPD-type (B) row.

Pipes travel upward and leave through the north edge of row 1.  A P row's
pipe enters on the west edge and moves east/north; a B row's pipe enters on
the east edge and moves west/north.  Rows are scanned bottom to top.

Glyphs
  P rows: ``+`` cross, ``-`` horizontal, ``~`` bump (W-N and S-E arcs),
          ``j`` W-N elbow, ``r`` S-E elbow, ``.`` blank
  B rows: ``+`` cross, ``-`` horizontal, ``|`` vertical, ``L`` E-N elbow,
          ``7`` S-W elbow, ``.`` blank
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .chains import BruhatChain, ChainError, as_chain
from .perm import Perm, longest_element

__all__ = [
    "HpdGrid", "row_labels", "gamma_tau", "enumerate_hpd", "hpd_analyze",
    "prefix_permutation_hpd", "chain_tau", "chain_tau_inverse",
    "hpd_to_bpd_rows", "weighty_cells", "iter_taus",
]

P_GLYPHS = "+-~jr."
B_GLYPHS = "+-|L7."


def _check_tau(tau: str) -> str:
    tau = tau.upper()
    if not tau or set(tau) - {"P", "B"}:
        raise ValueError(f"row types must be a nonempty string over P/B: {tau!r}")
    return tau


def row_labels(tau: str) -> tuple[int, ...]:
    """Label of each grid row (top to bottom)."""
    tau = _check_tau(tau)
    n = len(tau)
    labels = [0] * n
    nxt = 1
    for r, t in enumerate(tau):
        if t == "P":
            labels[r] = nxt
            nxt += 1
    for r in range(n - 1, -1, -1):
        if tau[r] == "B":
            labels[r] = nxt
            nxt += 1
    return tuple(labels)


def gamma_tau(tau: str) -> tuple[int, ...]:
    n = len(tau)
    return tuple(x for x in row_labels(tau) if x != n)


@dataclass(frozen=True)
class HpdGrid:
    tau: str
    rows: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "tau", _check_tau(self.tau))
        object.__setattr__(self, "rows", tuple(self.rows))
        n = len(self.tau)
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ValueError("hpd grid must be n x n with n = len(tau)")

    @property
    def n(self) -> int:
        return len(self.tau)

    @property
    def labels(self) -> tuple[int, ...]:
        return row_labels(self.tau)

    def ascii(self) -> str:
        return "\n".join(f"{t} {lab:>2} {row}" for t, lab, row in zip(self.tau, self.labels, self.rows))

    def to_json(self) -> dict:
        return {"kind": "hpd", "tau": self.tau, "labels": list(self.labels), "tiles": list(self.rows)}

    @classmethod
    def from_json(cls, obj) -> HpdGrid:
        if not isinstance(obj, dict) or obj.get("kind") != "hpd":
            raise ValueError("expected an hpd object")
        rows = obj["tiles"]
        rows = tuple(r if isinstance(r, str) else "".join(r) for r in rows)
        return cls(obj["tau"], rows)


# -- single-row transfer --------------------------------------------------------

def _apply_row(glyphs: str, kind: str, label: int, up: tuple[int, ...],
               p_row_vertical: bool = False) -> tuple[tuple[int, ...], int]:
    """Push the pipes in ``up`` (label per column, 0 = none) through one row.

    Returns the labels leaving the north edge and the number of weighty tiles.
    """
    n = len(up)
    new = [0] * n
    weighty = 0
    if kind == "P":
        h = label
        for c in range(n):
            g, v = glyphs[c], up[c]
            if g == "+":
                if not (h and v and h < v):
                    raise ValueError(f"bad P cross at column {c + 1}")
                new[c] = v
                weighty += 1
            elif g == "~":
                if not (h and v):
                    raise ValueError(f"bump needs two pipes at column {c + 1}")
                new[c], h = h, v
            elif g == "-":
                if not h or v:
                    raise ValueError(f"bad P horizontal at column {c + 1}")
                weighty += 1
            elif g == "j":
                if not h or v:
                    raise ValueError(f"bad W-N elbow at column {c + 1}")
                new[c], h = h, 0
            elif g == "r":
                if h or not v:
                    raise ValueError(f"bad S-E elbow at column {c + 1}")
                h = v
            elif g == "|" and p_row_vertical:
                if h or not v:
                    raise ValueError(f"bad P vertical at column {c + 1}")
                new[c] = v
            elif g == ".":
                if h or v:
                    raise ValueError(f"blank carries a pipe at column {c + 1}")
            else:
                raise ValueError(f"glyph {g!r} not allowed in a P row")
        if h:
            raise ValueError("pipe leaves the east edge of a P row")
    else:
        h = label
        for c in range(n - 1, -1, -1):
            g, v = glyphs[c], up[c]
            if g == "+":
                if not (h and v and h > v):
                    raise ValueError(f"bad B cross at column {c + 1}")
                new[c] = v
            elif g == "-":
                if not h or v:
                    raise ValueError(f"bad B horizontal at column {c + 1}")
            elif g == "|":
                if h or not v:
                    raise ValueError(f"bad B vertical at column {c + 1}")
                new[c] = v
            elif g == "L":
                if not h or v:
                    raise ValueError(f"bad E-N elbow at column {c + 1}")
                new[c], h = h, 0
            elif g == "7":
                if h or not v:
                    raise ValueError(f"bad S-W elbow at column {c + 1}")
                h = v
            elif g == ".":
                if h or v:
                    raise ValueError(f"blank carries a pipe at column {c + 1}")
                weighty += 1
            else:
                raise ValueError(f"glyph {g!r} not allowed in a B row")
        if h:
            raise ValueError("pipe leaves the west edge of a B row")
    return tuple(new), weighty


@lru_cache(maxsize=None)
def _row_options(kind: str, label: int, up: tuple[int, ...],
                 p_row_vertical: bool = False) -> tuple[tuple[str, tuple[int, ...], int], ...]:
    """Every legal row over ``up``: (glyphs, labels leaving north, weighty count)."""
    n = len(up)
    out = []
    new = [0] * n
    tiles = [""] * n

    def p_rec(c, h, wt):
        if c == n:
            if not h:
                out.append(("".join(tiles), tuple(new), wt))
            return
        v = up[c]
        if h and v:
            if h < v:
                tiles[c], new[c] = "+", v
                p_rec(c + 1, h, wt + 1)
            tiles[c], new[c] = "~", h
            p_rec(c + 1, v, wt)
        elif h:
            tiles[c], new[c] = "-", 0
            p_rec(c + 1, h, wt + 1)
            tiles[c], new[c] = "j", h
            p_rec(c + 1, 0, wt)
        elif v:
            tiles[c], new[c] = "r", 0
            p_rec(c + 1, v, wt)
            if p_row_vertical:
                tiles[c], new[c] = "|", v
                p_rec(c + 1, 0, wt)
        else:
            tiles[c], new[c] = ".", 0
            p_rec(c + 1, 0, wt)
        new[c] = 0

    def b_rec(c, h, wt):
        if c < 0:
            if not h:
                out.append(("".join(tiles), tuple(new), wt))
            return
        v = up[c]
        if h and v:
            if h > v:
                tiles[c], new[c] = "+", v
                b_rec(c - 1, h, wt)
        elif h:
            tiles[c], new[c] = "-", 0
            b_rec(c - 1, h, wt)
            tiles[c], new[c] = "L", h
            b_rec(c - 1, 0, wt)
        elif v:
            tiles[c], new[c] = "|", v
            b_rec(c - 1, 0, wt)
            tiles[c], new[c] = "7", 0
            b_rec(c - 1, v, wt)
        else:
            tiles[c], new[c] = ".", 0
            b_rec(c - 1, 0, wt + 1)
        new[c] = 0

    if kind == "P":
        p_rec(0, label, 0)
    else:
        b_rec(n - 1, label, 0)
    return tuple(out)


# -- enumeration and analysis ---------------------------------------------------

def enumerate_hpd(w: Perm, tau: str, p_row_vertical: bool = False) -> set[HpdGrid]:
    tau = _check_tau(tau)
    n = len(tau)
    if len(w) != n:
        raise ValueError("tau and w sizes differ")
    labels = row_labels(tau)
    target = tuple(sorted(range(1, n + 1), key=lambda i: w[i - 1]))  # label exiting column c
    out: set[HpdGrid] = set()
    rows: list[str] = [""] * n

    def rec(r: int, up: tuple[int, ...]):
        # r is a 0-based grid row, processed bottom to top
        if r < 0:
            if up == target:
                out.add(HpdGrid(tau, tuple(rows)))
            return
        for glyphs, new, _ in _row_options(tau[r], labels[r], up, p_row_vertical):
            if r == 0 and new != target:
                continue
            rows[r] = glyphs
            rec(r - 1, new)

    rec(n - 1, (0,) * n)
    return out


def _run(H: HpdGrid, bottom: int, p_row_vertical: bool = False) -> tuple[tuple[int, ...], list[int]]:
    n = H.n
    up = (0,) * n
    weights = [0] * n
    labels = H.labels
    for r in range(n - 1, n - 1 - bottom, -1):
        up, wt = _apply_row(H.rows[r], H.tau[r], labels[r], up, p_row_vertical)
        weights[labels[r] - 1] = wt
    return up, weights


def hpd_analyze(H: HpdGrid, p_row_vertical: bool = False) -> tuple[Perm, tuple[int, ...]]:
    n = H.n
    up, weights = _run(H, n, p_row_vertical)
    if 0 in up:
        raise ValueError("north edge of row 1 is not fully occupied")
    w = [0] * n
    for c, lab in enumerate(up, 1):
        w[lab - 1] = c
    return tuple(w), tuple(weights[: n - 1])


def weighty_cells(H: HpdGrid) -> list[tuple[int, int]]:
    out = []
    for r, (t, row) in enumerate(zip(H.tau, H.rows), 1):
        for c, g in enumerate(row, 1):
            if (t == "P" and g in "+-") or (t == "B" and g == "."):
                out.append((r, c))
    return out


def _complete(up: tuple[int, ...], labels: list[int], n: int) -> Perm:
    """Permutation of a bottom prefix from the labels leaving its top edge."""
    if not labels:
        return longest_element(n)
    k1, k2 = min(labels), max(labels)
    u = [0] * n
    for i in range(1, k1):
        u[i - 1] = n + 1 - i
    for c, lab in enumerate(up, 1):
        if lab:
            u[lab - 1] = c
    rest = sorted(set(range(1, n + 1)) - set(u), reverse=True)
    for i in range(k2 + 1, n + 1):
        u[i - 1] = rest.pop(0)
    if sorted(u) != list(range(1, n + 1)):
        raise ValueError("pipes exit through the reserved rightmost columns")
    return tuple(u)


def prefix_permutation_hpd(H: HpdGrid, i: int) -> Perm:
    n = H.n
    if not 0 <= i <= n:
        raise ValueError(f"i={i} out of range")
    up, _ = _run(H, i)
    labels = list(H.labels[n - i:])
    return _complete(up, labels, n)


def chain_tau(H: HpdGrid) -> BruhatChain:
    n = H.n
    perms = [prefix_permutation_hpd(H, i) for i in range(n, -1, -1)]
    top_n = H.labels.index(n)  # grid row (0-based) labeled n
    i0 = n - top_n  # H_{i0} has that row on top
    assert perms[n - i0] == perms[n - i0 + 1]
    del perms[n - i0]
    return BruhatChain(tuple(perms))


def chain_tau_inverse(C, tau: str) -> HpdGrid:
    C = as_chain(C)
    tau = _check_tau(tau)
    n = len(tau)
    if C.n != n or len(C) != n or C.perms[-1] != longest_element(n):
        raise ChainError("chain must have n entries and end at w0")
    labels = row_labels(tau)
    i0 = n - labels.index(n)
    full = list(C.perms[: n - i0]) + [C.perms[n - i0]] + list(C.perms[n - i0:])
    rows = [""] * n
    up = (0,) * n
    for i in range(1, n + 1):
        r = n - i
        want = full[n - i]
        hits = []
        for glyphs, new, _ in _row_options(tau[r], labels[r], up):
            try:
                got = _complete(new, list(labels[r:]), n)
            except ValueError:
                continue
            if got == want:
                hits.append((glyphs, new))
        if not hits:
            raise ChainError(f"no row extends the bottom {i - 1} rows to {want}")
        assert len(hits) == 1, f"row extension is not unique at row {r + 1}"
        rows[r], up = hits[0]
    H = HpdGrid(tau, tuple(rows))
    if chain_tau(H) != BruhatChain(C.perms):
        raise ChainError("chain is not in the image of chain_tau")
    return H


def hpd_to_bpd_rows(H: HpdGrid) -> tuple[str, ...]:
    """All-B grids flipped upside down, in bumpless-pipedream glyphs."""
    if set(H.tau) != {"B"}:
        raise ValueError("only all-B grids flip to bumpless pipedreams")
    table = str.maketrans({"L": "r", "7": "j"})
    return tuple(row.translate(table) for row in reversed(H.rows))


def iter_taus(n: int) -> Iterator[str]:
    for mask in range(2 ** n):
        yield "".join("B" if mask >> (n - 1 - b) & 1 else "P" for b in range(n))
