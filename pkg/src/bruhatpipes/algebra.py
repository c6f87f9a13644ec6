"""Right actions on Q[x][S_n]: Fomin-Kirillov generators d_{i,j}, Dunkl
elements, nil-Coxeter generators u_i, and the resulting product formulas
for sum_w S_w w.

Everything is kept over the integers; rationals never arise.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .perm import (
    Perm, all_perms, compose, format_perm, has_decreasing_tail, is_cover,
    longest_element, parse_perm, right_transpose,
)
from .poly import Polynomial, divided_difference, schubert

__all__ = [
    "GroupAlgebraElement", "fk_apply_d", "fk_apply_dunkl", "nc_apply_u",
    "compute_S_bpd", "compute_S_bpd_commutative", "compute_S_pd",
    "eval_schubert_at_neg_dunkl", "check_dd_intertwiner", "schubert_sum_element",
    "apply_R", "verify_monk_dunkl",
]


class GroupAlgebraElement:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Perm, Polynomial | int] | None = None):
        self.terms: dict[Perm, Polynomial] = {}
        for w, p in (terms or {}).items():
            if isinstance(p, int):
                p = Polynomial.const(p)
            if not p.is_zero():
                self.terms[tuple(w)] = p

    @classmethod
    def basis(cls, w: Perm, coeff: Polynomial | int = 1) -> GroupAlgebraElement:
        return cls({tuple(w): coeff})

    def _add_into(self, w: Perm, p: Polynomial) -> None:
        cur = self.terms.get(w)
        s = p if cur is None else cur + p
        if s.is_zero():
            self.terms.pop(w, None)
        else:
            self.terms[w] = s

    def __add__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        out = GroupAlgebraElement(self.terms)
        for w, p in other.terms.items():
            out._add_into(w, p)
        return out

    def __neg__(self):
        return GroupAlgebraElement({w: -p for w, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f: Polynomial | int) -> GroupAlgebraElement:
        return GroupAlgebraElement({w: p * f for w, p in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        zero = Polynomial()
        return all(self.terms.get(w, zero) == other.terms.get(w, zero) for w in keys)

    def __hash__(self):
        return hash(frozenset((w, p) for w, p in self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> set[Perm]:
        return set(self.terms)

    def coefficient(self, w: Perm) -> Polynomial:
        return self.terms.get(tuple(w), Polynomial())

    def map_coefficients(self, fn) -> GroupAlgebraElement:
        return GroupAlgebraElement({w: fn(p) for w, p in self.terms.items()})

    def __repr__(self):
        parts = [f"({p})[{format_perm(w)}]" for w, p in sorted(self.terms.items(), reverse=True)]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {format_perm(w): p.to_json() for w, p in sorted(self.terms.items(), reverse=True)}

    @classmethod
    def from_json(cls, obj: Mapping[str, Mapping[str, str]]) -> GroupAlgebraElement:
        return cls({parse_perm(k): Polynomial.from_json(v) for k, v in obj.items()})


GAE = GroupAlgebraElement


# -- actions --------------------------------------------------------------------

def fk_apply_d(a: GAE, i: int, j: int) -> GAE:
    """a (.) d_{i,j}: w -> w t_{i,j} when that is a downward Bruhat cover."""
    out = GAE()
    for w, p in a.terms.items():
        x = right_transpose(w, i, j)
        if is_cover(x, w):
            out._add_into(x, p)
    return out


def fk_apply_dunkl(a: GAE, i: int) -> GAE:
    n = len(next(iter(a.terms))) if a.terms else 0
    out = GAE()
    for j in range(1, i):
        out = out - fk_apply_d(a, j, i)
    for j in range(i + 1, n + 1):
        out = out + fk_apply_d(a, i, j)
    return out


def nc_apply_u(a: GAE, i: int) -> GAE:
    out = GAE()
    for w, p in a.terms.items():
        if w[i - 1] < w[i]:
            out._add_into(right_transpose(w, i, i + 1), p)
    return out


def _linear(a: GAE, scalar: Polynomial | None, ds: Iterable[tuple[int, int]], sign: int = 1) -> GAE:
    """a (.) (scalar + sign * sum of d_{p,q})."""
    out = a.scale(scalar) if scalar is not None else GAE()
    for p, q in ds:
        t = fk_apply_d(a, p, q)
        out = out + (t if sign > 0 else -t)
    return out


def apply_R(a: GAE, i: int, y: Polynomial, n: int) -> GAE:
    """a (.) R_i(y) = a (.) (y + B_{i,i+1}) ... (y + B_{i,n}); R_n(y) = 1."""
    for j in range(i + 1, n + 1):
        a = _linear(a, y, [(p, j) for p in range(1, i + 1)])
    return a


def compute_S_bpd(n: int, check_support: bool = True) -> GAE:
    """w0 (.) R_1(x_1) ... R_{n-1}(x_{n-1})."""
    m = max(n - 1, 1)
    a = GAE.basis(longest_element(n), Polynomial.const(1, m))
    for i in range(1, n):
        a = apply_R(a, i, Polynomial.x(i, m), n)
        if check_support:
            assert all(has_decreasing_tail(w, i) for w in a.terms), f"support leaves S^({i} tail)"
    return a


def compute_S_bpd_commutative(n: int, order: Sequence[tuple[int, int]] | None = None) -> GAE:
    """w0 (.) prod_{i<j} (x_i - theta_j), factors applied in ``order``."""
    m = max(n - 1, 1)
    pairs = list(order) if order is not None else list(combinations(range(1, n + 1), 2))
    a = GAE.basis(longest_element(n), Polynomial.const(1, m))
    for i, j in pairs:
        a = a.scale(Polynomial.x(i, m)) - fk_apply_dunkl(a, j)
    return a


def compute_S_pd(n: int) -> GAE:
    """A_1(x_1) ... A_{n-1}(x_{n-1}) on the permutation basis,
    A_i(x) = (1 + x u_{n-1}) ... (1 + x u_i)."""
    m = max(n - 1, 1)
    a = GAE.basis(tuple(range(1, n + 1)), Polynomial.const(1, m))
    for i in range(1, n):
        xi = Polynomial.x(i, m)
        for k in range(n - 1, i - 1, -1):
            a = a + nc_apply_u(a, k).scale(xi)
    return a


def schubert_sum_element(n: int) -> GAE:
    return GAE({w: schubert(w) for w in all_perms(n)})


def eval_schubert_at_neg_dunkl(w: Perm) -> GAE:
    """w0 (.) S_w(-theta_n, ..., -theta_2)."""
    n = len(w)
    w0 = longest_element(n)
    out = GAE()
    for key, c in schubert(w).terms.items():
        a = GAE.basis(w0, c)
        for i, e in enumerate(key[: len(key) // 2], 1):
            for _ in range(e):
                a = -fk_apply_dunkl(a, n + 1 - i)
        out = out + a
    return out


def check_dd_intertwiner(n: int) -> bool:
    S = compute_S_bpd(n)
    for i in range(1, n):
        lhs = S.map_coefficients(lambda p: divided_difference(p, i))
        if lhs != nc_apply_u(S, i):
            return False
    return True


def verify_monk_dunkl(w: Perm, i: int) -> bool:
    """S_w x_i = -sum_{j<i, w<wt_{j,i}} S_{wt_{j,i}} + sum_{j>i, w<wt_{i,j}} S_{wt_{i,j}},
    and the same coefficients read off -(w w0) (.) theta_{n-i+1}."""
    n = len(w)
    m = max(n - 1, 1)
    lhs = schubert(w) * Polynomial.x(i, m)
    rhs = Polynomial.const(0, m)
    coeffs: dict[Perm, int] = {}
    for j in range(1, i):
        u = right_transpose(w, j, i)
        if is_cover(w, u):
            rhs = rhs - schubert(u)
            coeffs[u] = coeffs.get(u, 0) - 1
    for j in range(i + 1, n + 1):
        u = right_transpose(w, i, j)
        if is_cover(w, u):
            rhs = rhs + schubert(u)
            coeffs[u] = coeffs.get(u, 0) + 1
    w0 = longest_element(n)
    dunkl = -fk_apply_dunkl(GAE.basis(compose(w, w0)), n - i + 1)
    via_theta = {u: dunkl.coefficient(compose(u, w0)).evaluate_ones() for u in coeffs}
    other = {compose(x, w0) for x in dunkl.terms} - set(coeffs)
    return lhs == rhs and via_theta == coeffs and not other
