"""Classical pipedreams on the staircase and the chain bijection into
(1, ..., n-1)-compatible Bruhat chains."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .chains import BruhatChain, ChainError, as_chain, increasing_chain_steps
from .perm import Perm, length, longest_element, make_permutation
from .poly import Polynomial

__all__ = [
    "PdGrid", "enumerate_pd", "analyze_pd", "chain_pd", "chain_pd_inverse",
    "pd_double_weight", "pd_from_ascii",
]

CROSS, BUMP, ELBOW = "Cross", "Bump", "ForcedElbow"
_GLYPH = {CROSS: "+", BUMP: "~", ELBOW: "r"}
_NAME = {v: k for k, v in _GLYPH.items()}


@dataclass(frozen=True)
class PdGrid:
    """A pipedream stored by its set of crossing cells (1-indexed (row, col))."""

    n: int
    crosses: frozenset

    def __post_init__(self):
        object.__setattr__(self, "crosses", frozenset(self.crosses))
        for r, c in self.crosses:
            if not (r >= 1 and c >= 1 and r + c <= self.n):
                raise ValueError(f"cell ({r},{c}) cannot hold a crossing for n={self.n}")

    def tile(self, r: int, c: int) -> str:
        if r + c == self.n + 1:
            return ELBOW
        return CROSS if (r, c) in self.crosses else BUMP

    @property
    def tiles(self) -> list[list[str]]:
        return [[self.tile(r, c) for c in range(1, self.n + 2 - r)] for r in range(1, self.n + 1)]

    def ascii(self) -> str:
        return "\n".join("".join(_GLYPH[t] for t in row) for row in self.tiles)

    def to_json(self) -> dict:
        return {"kind": "pd", "n": self.n, "tiles": self.tiles}

    @classmethod
    def from_json(cls, obj) -> PdGrid:
        if not isinstance(obj, dict) or obj.get("kind") != "pd":
            raise ValueError("expected a pd object")
        return cls.from_tiles(obj["tiles"])

    @classmethod
    def from_tiles(cls, rows) -> PdGrid:
        n = len(rows)
        crosses = set()
        for r, row in enumerate(rows, 1):
            if len(row) != n + 1 - r:
                raise ValueError(f"row {r} of a staircase must have {n + 1 - r} cells")
            for c, t in enumerate(row, 1):
                if t not in _GLYPH:
                    raise ValueError(f"unknown pd tile {t!r}")
                if (t == ELBOW) != (c == n + 1 - r):
                    raise ValueError(f"forced elbow misplaced at ({r},{c})")
                if t == CROSS:
                    crosses.add((r, c))
        return cls(n, frozenset(crosses))


def pd_from_ascii(text: str) -> PdGrid:
    rows = [line.strip() for line in text.strip().splitlines()]
    return PdGrid.from_tiles([[_NAME[ch] for ch in row] for row in rows])


def enumerate_pd(w: Perm) -> set[PdGrid]:
    n = len(w)
    return {PdGrid(n, frozenset(cs)) for cs in kernels.pd_cross_sets(tuple(w))}


def _trace(P: PdGrid) -> tuple[Perm, set]:
    """Follow each pipe from the west edge; return exit columns and crossing pairs."""
    n = P.n
    horiz: dict[tuple[int, int], int] = {}
    vert: dict[tuple[int, int], int] = {}
    exits = []
    for i in range(1, n + 1):
        r, c, came = i, 1, "W"
        while r >= 1:
            t = P.tile(r, c)
            if t == CROSS:
                if came == "W":
                    horiz[r, c] = i
                    c += 1
                else:
                    vert[r, c] = i
                    r -= 1
            elif came == "W":  # W-N arc (bump or forced elbow)
                r -= 1
                came = "S"
            else:  # S-E arc of a bump
                c += 1
                came = "W"
        exits.append(c)
    pairs = []
    for cell in P.crosses:
        pairs.append(frozenset((horiz[cell], vert[cell])))
    if len(set(pairs)) != len(pairs):
        raise ValueError("two pipes cross more than once")
    return make_permutation(exits), set(pairs)


def analyze_pd(P: PdGrid) -> tuple[Perm, tuple[int, ...], tuple[int, ...]]:
    """(permutation, weight, reduced word) of a pipedream."""
    w, _ = _trace(P)
    wt = tuple(sum(1 for r, _ in P.crosses if r == i) for i in range(1, P.n))
    word = tuple(r + c - 1 for r, c in sorted(P.crosses, key=lambda rc: (rc[0], -rc[1])))
    return w, wt, word


def _bottom(P: PdGrid, i: int) -> PdGrid:
    shift = P.n - i
    return PdGrid(i, frozenset((r - shift, c) for r, c in P.crosses if r > shift))


def chain_pd(P: PdGrid) -> BruhatChain:
    n = P.n
    out = []
    for i in range(n, 0, -1):
        v, _ = _trace(_bottom(P, i))
        out.append(tuple(range(n, i, -1)) + v)
    return BruhatChain(tuple(out))


def chain_pd_inverse(C) -> PdGrid:
    C = as_chain(C)
    n = C.n
    if len(C) != n or C.perms[-1] != longest_element(n):
        raise ChainError("chain must have n entries and end at w0")
    crosses = set()
    for k in range(n, 1, -1):
        # C.perms[n-k] is u_k, the next entry is u_{k-1}
        uk, uk1 = C.perms[n - k], C.perms[n - k + 1]
        steps = increasing_chain_steps(uk, uk1, n - k + 1)
        if steps is None:
            raise ChainError(f"no increasing {n - k + 1}-chain from {uk} to {uk1}")
        swapped = set()
        v = list(uk)
        for a, b in steps:
            swapped.update((v[a - 1], v[b - 1]))
            v[a - 1], v[b - 1] = v[b - 1], v[a - 1]
        for j in range(1, k):
            if j not in swapped:
                crosses.add((n - k + 1, j))
    P = PdGrid(n, frozenset(crosses))
    if chain_pd(P) != BruhatChain(C.perms):
        raise ChainError("chain is not in the image of chain_pd")
    return P


def pd_double_weight(P: PdGrid) -> Polynomial:
    m = max(P.n - 1, 1)
    out = Polynomial.const(1, m)
    for r, c in sorted(P.crosses):
        out = out * (Polynomial.x(r, m) - Polynomial.y(c, m))
    return out


def pd_length_ok(P: PdGrid) -> bool:
    w, _, word = analyze_pd(P)
    return len(word) == length(w)
