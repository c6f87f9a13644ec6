"""Bruhat chains, increasing k-chains, Lenart's growth diagram and flip."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .perm import (
    Perm, bruhat_leq, cover_transposition, covers_up, format_perm,
    has_antidiagonal_head, has_decreasing_tail, is_k_cover, length,
    longest_element, parse_perm, right_transpose,
)
from .poly import Polynomial

__all__ = [
    "BruhatChain", "as_chain", "chain_weight", "find_increasing_k_chain",
    "increasing_chain_steps", "is_compatible", "enumerate_compatible_chains",
    "gamma_exponent", "lenart_local_move", "growth", "growth_triple", "flip",
    "unflip", "double_weight", "count_two_step_chains", "ChainError",
]


class ChainError(ValueError):
    """Input chain violates the order or compatibility a map requires."""


@dataclass(frozen=True)
class BruhatChain:
    perms: tuple[Perm, ...]
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "perms", tuple(tuple(p) for p in self.perms))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(self.perms) - 1:
                raise ChainError("need one label per segment")
        if len({len(p) for p in self.perms}) > 1:
            raise ChainError("permutations of different sizes in one chain")

    def __len__(self):
        return len(self.perms)

    def __getitem__(self, i):
        return self.perms[i]

    def __iter__(self):
        return iter(self.perms)

    @property
    def n(self) -> int:
        return len(self.perms[0]) if self.perms else 0

    def to_json(self):
        perms = [format_perm(p) for p in self.perms]
        if self.labels is None:
            return perms
        return {"perms": perms, "labels": list(self.labels)}

    @classmethod
    def from_json(cls, obj) -> BruhatChain:
        if isinstance(obj, list):
            return cls(tuple(parse_perm(s) for s in obj))
        if isinstance(obj, dict) and "perms" in obj:
            labels = obj.get("labels")
            return cls(tuple(parse_perm(s) for s in obj["perms"]),
                       None if labels is None else tuple(int(k) for k in labels))
        raise ValueError("chain must be a list of permutations or {perms, labels}")


def as_chain(C) -> BruhatChain:
    return C if isinstance(C, BruhatChain) else BruhatChain(tuple(C))


def chain_weight(C) -> tuple[int, ...]:
    C = as_chain(C)
    out = []
    for a, b in zip(C.perms, C.perms[1:]):
        if not bruhat_leq(a, b):
            raise ChainError(f"{a} is not below {b}")
        out.append(length(b) - length(a))
    return tuple(out)


def _increasing_search(u: Perm, w: Perm, k: int, first_only: bool) -> list[list[tuple[int, int]]]:
    target = length(w)
    found: list[list[tuple[int, int]]] = []
    steps: list[tuple[int, int]] = []

    def rec(v, last):
        if length(v) == target:
            if v == w:
                found.append(list(steps))
            return
        for (i, j), x in covers_up(v):
            if i <= k < j and v[i - 1] > last and bruhat_leq(x, w):
                steps.append((i, j))
                rec(x, v[i - 1])
                steps.pop()
                if first_only and found:
                    return

    if length(u) <= target:
        rec(tuple(u), 0)
    return found


def increasing_chain_steps(u: Perm, w: Perm, k: int, verify: bool = False) -> list[tuple[int, int]] | None:
    """Transpositions (i, j) of the increasing k-chain from u to w, or None."""
    if not 1 <= k <= len(u) - 1 and tuple(u) != tuple(w):
        raise ValueError(f"k={k} out of range")
    hits = _increasing_search(tuple(u), tuple(w), k, first_only=not verify)
    if verify and len(hits) > 1:
        raise AssertionError(f"several increasing {k}-chains from {u} to {w}")
    return hits[0] if hits else None


def find_increasing_k_chain(u: Perm, w: Perm, k: int, verify: bool = False) -> BruhatChain | None:
    steps = increasing_chain_steps(u, w, k, verify)
    if steps is None:
        return None
    perms = [tuple(u)]
    for i, j in steps:
        perms.append(right_transpose(perms[-1], i, j))
    return BruhatChain(tuple(perms), (k,) * len(steps))


def _has_increasing(u: Perm, w: Perm, k: int) -> bool:
    if u == w:
        return True
    d = length(w) - length(u)
    return any(v == w and dd == d for v, dd in kernels.increasing_chain_ends(u, k))


def is_compatible(C, ks: Sequence[int]) -> bool:
    C = as_chain(C)
    if len(ks) != len(C) - 1:
        raise ValueError("need one label per segment")
    return all(_has_increasing(a, b, k) for a, b, k in zip(C.perms, C.perms[1:], ks))


class _Enumerator:
    """Suffix enumeration with a memo keyed by (permutation, segment)."""

    def __init__(self, gamma: Sequence[int]):
        self.gamma = tuple(gamma)
        self.n = len(self.gamma) + 1
        self.w0 = longest_element(self.n)
        self.memo: dict[tuple[Perm, int], list[tuple[Perm, ...]]] = {}
        rem = self.gamma
        self.lo = [min(rem[s:]) if rem[s:] else None for s in range(self.n)]
        self.hi = [max(rem[s:]) if rem[s:] else None for s in range(self.n)]

    def viable(self, v: Perm, s: int) -> bool:
        if self.lo[s] is None:
            return v == self.w0
        return has_antidiagonal_head(v, self.lo[s]) and has_decreasing_tail(v, self.hi[s])

    def suffixes(self, v: Perm, s: int) -> list[tuple[Perm, ...]]:
        key = (v, s)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if s == self.n - 1:
            res = [(v,)] if v == self.w0 else []
        else:
            res = []
            for x, _ in kernels.increasing_chain_ends(v, self.gamma[s]):
                if self.viable(x, s + 1):
                    res.extend((v,) + tail for tail in self.suffixes(x, s + 1))
        self.memo[key] = res
        return res


def enumerate_compatible_chains(w: Perm, gamma: Sequence[int], _enum: _Enumerator | None = None) -> set[BruhatChain]:
    n = len(w)
    if sorted(gamma) != list(range(1, n)):
        raise ValueError(f"gamma must be a permutation of 1..{n - 1}")
    en = _enum if _enum is not None else _Enumerator(gamma)
    return {BruhatChain(c) for c in en.suffixes(tuple(w), 0)}


def gamma_exponent(C, gamma: Sequence[int]) -> tuple[int, ...]:
    C = as_chain(C)
    n = C.n
    if len(gamma) != len(C) - 1:
        raise ChainError("chain and gamma lengths disagree")
    exp = [0] * (n - 1)
    for s, k in enumerate(gamma):
        a, b = C.perms[s], C.perms[s + 1]
        if not _has_increasing(a, b, k):
            raise ChainError(f"segment {s + 1} has no increasing {k}-chain")
        exp[k - 1] = n - k - (length(b) - length(a))
    return tuple(exp)


def double_weight(C, gamma: Sequence[int]) -> Polynomial:
    """prod over segments of prod_{t > gamma_i fixed} (x_{gamma_i} - y_{w_i(t)})."""
    C = as_chain(C)
    n = C.n
    m = max(n - 1, 1)
    out = Polynomial.const(1, m)
    for s, k in enumerate(gamma):
        a, b = C.perms[s], C.perms[s + 1]
        if not _has_increasing(a, b, k):
            raise ChainError(f"segment {s + 1} has no increasing {k}-chain")
        for t in range(k + 1, n + 1):
            if a[t - 1] == b[t - 1]:
                out = out * (Polynomial.x(k, m) - Polynomial.y(a[t - 1], m))
    return out


# -- growth diagram -------------------------------------------------------------

def _midpoints(a: Perm, c: Perm) -> list[Perm]:
    return [x for _, x in covers_up(a) if cover_transposition(x, c) is not None]


def _check_case_5b(a: Perm, mid: Perm, c: Perm, k: int) -> None:
    # segment a -k-> mid -1-> c with c having a decreasing tail past k
    _, q = cover_transposition(mid, c)
    b, cc = cover_transposition(a, mid)
    if b == 1 and q > k:
        assert c[q - 1] == c[cc - 1] + 1 and q == cc - 1, (a, mid, c)


def lenart_local_move(a: Perm, b: Perm, c: Perm, k1: int, k2: int) -> tuple[Perm, int, int]:
    a, b, c = tuple(a), tuple(b), tuple(c)
    if not (is_k_cover(a, b, k1) and is_k_cover(b, c, k2)):
        raise ChainError(f"not a segment {a} -{k1}-> {b} -{k2}-> {c}")
    mids = _midpoints(a, c)
    assert len(mids) == 2 and b in mids, mids
    other = mids[0] if mids[1] == b else mids[1]
    if k2 == 1 and has_decreasing_tail(c, k1):
        _check_case_5b(a, b, c, k1)
    if is_k_cover(a, other, k2) and is_k_cover(other, c, k1):
        return other, k2, k1
    if is_k_cover(a, b, k2) and is_k_cover(b, c, k1):
        return b, k2, k1
    raise ChainError(f"no local move for {a} -{k1}-> {b} -{k2}-> {c}")


def _check_saturated(C: Sequence[Perm], k: int) -> None:
    for x, y in zip(C, C[1:]):
        if not is_k_cover(x, y, k):
            raise ChainError(f"{x} -> {y} is not a {k}-cover")


def growth(k1: int, k2: int, C1, C2) -> tuple[BruhatChain, BruhatChain]:
    """Commute a k1-chain followed by a k2-chain into a k2-chain then a k1-chain."""
    C1 = list(as_chain(C1).perms)
    C2 = list(as_chain(C2).perms)
    if C1[-1] != C2[0]:
        raise ChainError("C1 must end where C2 starts")
    _check_saturated(C1, k1)
    _check_saturated(C2, k2)
    d1, d2 = len(C1) - 1, len(C2) - 1
    perms = C1 + C2[1:]
    if k1 != k2:
        labels = [1] * d1 + [2] * d2  # 1 marks a k1 step, 2 a k2 step
        ks = {1: k1, 2: k2}
        while True:
            p = next((q for q in range(len(labels) - 1) if labels[q] == 1 and labels[q + 1] == 2), None)
            if p is None:
                break
            mid, _, _ = lenart_local_move(perms[p], perms[p + 1], perms[p + 2], ks[1], ks[2])
            perms[p + 1] = mid
            labels[p], labels[p + 1] = 2, 1
    return (BruhatChain(tuple(perms[: d2 + 1]), (k2,) * d2),
            BruhatChain(tuple(perms[d2:]), (k1,) * d1))


def growth_triple(u: Perm, v: Perm, w: Perm, k1: int, k2: int) -> tuple[Perm, Perm, Perm]:
    C1 = find_increasing_k_chain(u, v, k1)
    C2 = find_increasing_k_chain(v, w, k2)
    if C1 is None or C2 is None:
        raise ChainError(f"({u}, {v}, {w}) is not compatible with ({k1}, {k2})")
    C2p, _ = growth(k1, k2, C1, C2)
    return tuple(u), C2p.perms[-1], tuple(w)


def _check_endpoint(C: BruhatChain, gamma: Sequence[int]) -> None:
    n = C.n
    if len(C) != n or C.perms[-1] != longest_element(n):
        raise ChainError("chain must have n entries and end at w0")
    if not is_compatible(C, gamma):
        raise ChainError(f"chain is not compatible with {tuple(gamma)}")


def flip(C) -> BruhatChain:
    """(n-1,...,1)-compatible chain to the (1,...,n-1)-compatible chain."""
    C = as_chain(C)
    n = C.n
    gamma = list(range(n - 1, 0, -1))
    _check_endpoint(C, gamma)
    w = list(C.perms)
    while True:
        i = next((p for p in range(1, n) if gamma[p - 1] != p), None)
        if i is None:
            break
        a = gamma.index(i) + 1
        _, w[a - 1], _ = growth_triple(w[a - 2], w[a - 1], w[a], gamma[a - 2], gamma[a - 1])
        gamma[a - 2], gamma[a - 1] = gamma[a - 1], gamma[a - 2]
    return BruhatChain(tuple(w))


def unflip(C) -> BruhatChain:
    C = as_chain(C)
    n = C.n
    gamma = list(range(1, n))
    _check_endpoint(C, gamma)
    w = list(C.perms)
    while True:
        j = next((p for p in range(n - 1, 1, -1) if gamma[p - 2] < gamma[p - 1]), None)
        if j is None:
            break
        _, w[j - 1], _ = growth_triple(w[j - 2], w[j - 1], w[j], gamma[j - 2], gamma[j - 1])
        gamma[j - 2], gamma[j - 1] = gamma[j - 1], gamma[j - 2]
    return BruhatChain(tuple(w))


def count_two_step_chains(u: Perm, w: Perm, k1: int, k2: int, d1: int, d2: int) -> int:
    """#{v : increasing k1-chain u->v of length d1, increasing k2-chain v->w of length d2}."""
    total = 0
    for v, d in kernels.increasing_chain_ends(u, k1):
        if d == d1 and length(w) - length(v) == d2 and _has_increasing(v, w, k2):
            total += 1
    return total


def chains_from_strings(rows: Iterable[str]) -> BruhatChain:
    return BruhatChain(tuple(parse_perm(r) for r in rows))
