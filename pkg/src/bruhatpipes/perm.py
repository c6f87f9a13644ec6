"""Permutations of [n] in one-line notation.

A permutation is a plain tuple ``w`` with ``w[i-1] == w(i)``; every public
function speaks 1-indexed positions and values.  Composition follows
``(u o v)(i) = u(v(i))`` and right multiplication by ``t_{i,j}`` swaps the
entries in positions ``i`` and ``j``.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]
Transposition = tuple[int, int]

__all__ = [
    "Perm", "Transposition",
    "make_permutation", "parse_perm", "format_perm",
    "identity", "longest_element", "all_perms",
    "length", "compose", "inverse", "right_transpose", "swap_values",
    "is_cover", "cover_transposition", "is_k_cover", "bruhat_leq",
    "covers_up", "covers_down", "k_covers_up",
    "has_decreasing_tail", "has_antidiagonal_head",
    "complete_decreasing_tail", "reduced_word_product", "embed",
]


def make_permutation(values: Iterable[int]) -> Perm:
    """Validate ``values`` as one-line notation and return it as a tuple."""
    w = tuple(int(v) for v in values)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {list(w)}")
    return w


def parse_perm(text: str) -> Perm:
    """Parse ``"2,5,1,4,3"`` or the compact digit form ``"25143"`` (n <= 9)."""
    text = text.strip().strip("[]()")
    if "," in text or " " in text:
        parts = [p for p in text.replace(",", " ").split() if p]
        return make_permutation(int(p) for p in parts)
    if not text.isdigit():
        raise ValueError(f"malformed permutation: {text!r}")
    return make_permutation(int(ch) for ch in text)


def format_perm(w: Sequence[int]) -> str:
    return ",".join(str(v) for v in w)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Perm:
    if n < 1:
        raise ValueError(f"invalid size n={n}")
    return tuple(range(n, 0, -1))


def all_perms(n: int) -> Iterator[Perm]:
    return permutations(range(1, n + 1))


def length(w: Sequence[int]) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def _check_same(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise ValueError(f"size mismatch: {len(u)} vs {len(v)}")


def compose(u: Perm, v: Perm) -> Perm:
    _check_same(u, v)
    return tuple(u[x - 1] for x in v)


def inverse(u: Sequence[int]) -> Perm:
    inv = [0] * len(u)
    for i, x in enumerate(u, 1):
        inv[x - 1] = i
    return tuple(inv)


def right_transpose(u: Sequence[int], i: int, j: int) -> Perm:
    """``u * t_{i,j}``: swap the entries in positions i and j."""
    w = list(u)
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


def swap_values(u: Sequence[int], a: int, b: int) -> Perm:
    """``t_{a,b} * u``: exchange the values a and b wherever they sit."""
    return tuple(b if x == a else a if x == b else x for x in u)


def cover_transposition(u: Sequence[int], w: Sequence[int]) -> Transposition | None:
    """Return (i, j) with ``w = u t_{i,j}`` and u covered by w, else None."""
    diff = [p for p in range(len(u)) if u[p] != w[p]]
    if len(diff) != 2:
        return None
    i, j = diff
    lo, hi = u[i], u[j]
    if lo > hi:
        return None
    for p in range(i + 1, j):
        if lo < u[p] < hi:
            return None
    return i + 1, j + 1


def is_cover(u: Sequence[int], w: Sequence[int]) -> bool:
    """True iff u is covered by w in Bruhat order."""
    return cover_transposition(u, w) is not None


def is_k_cover(u: Sequence[int], w: Sequence[int], k: int) -> bool:
    """True iff ``w = u t_{i,j}`` is a Bruhat cover with ``i <= k < j``."""
    t = cover_transposition(u, w)
    return t is not None and t[0] <= k < t[1]


def bruhat_leq(u: Sequence[int], w: Sequence[int]) -> bool:
    """Bruhat comparison by the rank-matrix (tableau) criterion.

    ``u <= w`` iff for every prefix length i and every threshold j the number
    of entries ``>= j`` among ``u(1..i)`` is at most the same count for w.
    """
    _check_same(u, w)
    n = len(u)
    cu = [0] * (n + 2)
    cw = [0] * (n + 2)
    for i in range(n - 1):
        for x in range(1, u[i] + 1):
            cu[x] += 1
        for x in range(1, w[i] + 1):
            cw[x] += 1
        for j in range(1, n + 1):
            if cu[j] > cw[j]:
                return False
    return True


def covers_up(u: Sequence[int]) -> list[tuple[Transposition, Perm]]:
    """All Bruhat covers ``u t_{i,j}`` of u, with their transpositions."""
    n = len(u)
    out = []
    for i in range(n):
        lo = u[i]
        best = n + 1
        # scanning right, a cover exists for each new running minimum above u(i)
        for j in range(i + 1, n):
            x = u[j]
            if lo < x < best:
                best = x
                out.append(((i + 1, j + 1), right_transpose(u, i + 1, j + 1)))
    return out


def covers_down(u: Sequence[int]) -> list[tuple[Transposition, Perm]]:
    """All v covered by u, as ``((i, j), v)`` with ``v = u t_{i,j}``."""
    n = len(u)
    out = []
    for i in range(n):
        hi = u[i]
        best = 0
        for j in range(i + 1, n):
            x = u[j]
            if best < x < hi:
                best = x
                out.append(((i + 1, j + 1), right_transpose(u, i + 1, j + 1)))
    return out


def k_covers_up(u: Sequence[int], k: int) -> list[tuple[Transposition, Perm]]:
    """Covers ``u t_{i,j}`` of u in the k-Bruhat order (``i <= k < j``)."""
    n = len(u)
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} out of range for n={n}")
    return [(t, v) for t, v in covers_up(u) if t[0] <= k < t[1]]


def has_decreasing_tail(w: Sequence[int], k: int) -> bool:
    """Membership in the set of w with ``w(k+1) > ... > w(n)``."""
    return all(w[p] > w[p + 1] for p in range(k, len(w) - 1))


def has_antidiagonal_head(w: Sequence[int], k: int) -> bool:
    """Membership in the set of w with ``w(i) = n+1-i`` for ``i < k``."""
    n = len(w)
    return all(w[i - 1] == n + 1 - i for i in range(1, k))


def complete_decreasing_tail(prefix: Sequence[int], n: int) -> Perm:
    """The unique w with the given first values and a decreasing tail."""
    rest = sorted(set(range(1, n + 1)) - set(prefix), reverse=True)
    return tuple(prefix) + tuple(rest)


def reduced_word_product(word: Iterable[int], n: int) -> Perm:
    """``s_{i_1} ... s_{i_l}`` as one-line notation (right multiplication)."""
    w = list(range(1, n + 1))
    for i in word:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def embed(w: Sequence[int], n: int) -> Perm:
    """Extend w to S_n by fixed points."""
    return tuple(w) + tuple(range(len(w) + 1, n + 1))
