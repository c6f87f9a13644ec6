"""Exact sparse polynomials in x_1..x_m, y_1..y_m, and Schubert polynomials.

Terms are stored as ``{exponent tuple: int}`` where the tuple is dense of
length ``2*m`` (x exponents first, then y).  Polynomials with different ``m``
combine by zero-padding, so callers never have to agree on a universe up
front.
"""

from __future__ import annotations

import re
from itertools import combinations_with_replacement
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .perm import (
    Perm, all_perms, bruhat_leq, inverse, is_cover, k_covers_up, length,
    longest_element, right_transpose,
)

__all__ = [
    "Polynomial", "divided_difference", "schubert", "schubert_transition",
    "schubert_cache", "complete_homogeneous", "double_schubert_dd",
    "verify_monk", "verify_pieri_stable", "verify_cauchy", "monomial",
    "InapplicableCase",
]


class InapplicableCase(ValueError):
    """Raised when an identity is asked about a case outside its hypothesis."""


class Polynomial:
    __slots__ = ("terms", "m")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None, m: int = 0):
        self.m = m
        self.terms: dict[tuple[int, ...], int] = {}
        if terms:
            for key, c in terms.items():
                if len(key) != 2 * m:
                    raise ValueError(f"exponent {key} does not match m={m}")
                if c:
                    self.terms[key] = int(c)

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: int, m: int = 0) -> Polynomial:
        return cls({(0,) * (2 * m): c}, m)

    @classmethod
    def x(cls, i: int, m: int | None = None) -> Polynomial:
        m = i if m is None else max(m, i)
        e = [0] * (2 * m)
        e[i - 1] = 1
        return cls({tuple(e): 1}, m)

    @classmethod
    def y(cls, j: int, m: int | None = None) -> Polynomial:
        m = j if m is None else max(m, j)
        e = [0] * (2 * m)
        e[m + j - 1] = 1
        return cls({tuple(e): 1}, m)

    @classmethod
    def _raw(cls, terms: dict, m: int) -> Polynomial:
        p = cls.__new__(cls)
        p.m = m
        p.terms = terms
        return p

    # -- shape --------------------------------------------------------------

    def lift(self, m: int) -> Polynomial:
        if m == self.m:
            return self
        if m < self.m:
            raise ValueError("cannot shrink the variable universe")
        pad = m - self.m
        z = (0,) * pad
        terms = {k[: self.m] + z + k[self.m:] + z: c for k, c in self.terms.items()}
        return Polynomial._raw(terms, m)

    def x_part(self, key: tuple[int, ...]) -> tuple[int, ...]:
        return key[: self.m]

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def coefficients(self) -> list[int]:
        return list(self.terms.values())

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> tuple[Polynomial, Polynomial]:
        if isinstance(other, int):
            other = Polynomial.const(other, self.m)
        m = max(self.m, other.m)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        if not isinstance(other, (int, Polynomial)):
            return NotImplemented
        a, b = self._coerce(other)
        terms = dict(a.terms)
        for k, c in b.terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return Polynomial._raw(terms, a.m)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({k: -c for k, c in self.terms.items()}, self.m)

    def __sub__(self, other):
        if not isinstance(other, (int, Polynomial)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Polynomial._raw({}, self.m)
            return Polynomial._raw({k: c * other for k, c in self.terms.items()}, self.m)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coerce(other)
        terms: dict[tuple[int, ...], int] = {}
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                k = tuple(p + q for p, q in zip(ka, kb))
                s = terms.get(k, 0) + ca * cb
                if s:
                    terms[k] = s
                else:
                    del terms[k]
        return Polynomial._raw(terms, a.m)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Polynomial.const(1, self.m)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other, self.m)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coerce(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash(frozenset(self.canonical().items()))

    def canonical(self) -> dict[tuple[int, ...], int]:
        """Terms keyed by exponents with trailing unused variables dropped."""
        m = self.used_vars()
        return self.lift(max(m, self.m)).restrict(m).terms

    def used_vars(self) -> int:
        m = 0
        for k in self.terms:
            for idx, e in enumerate(k):
                if e:
                    m = max(m, idx + 1 if idx < self.m else idx - self.m + 1)
        return m

    def restrict(self, m: int) -> Polynomial:
        """Drop variables beyond index m (they must not occur)."""
        if m >= self.m:
            return self.lift(m)
        terms = {}
        for k, c in self.terms.items():
            if any(k[m:self.m]) or any(k[self.m + m:]):
                raise ValueError("variable in use beyond restriction")
            terms[k[:m] + k[self.m:self.m + m]] = c
        return Polynomial._raw(terms, m)

    # -- operators ----------------------------------------------------------

    def swap_x(self, i: int) -> Polynomial:
        """Exchange x_i and x_{i+1}."""
        p = self.lift(max(self.m, i + 1))
        terms = {}
        for k, c in p.terms.items():
            k = list(k)
            k[i - 1], k[i] = k[i], k[i - 1]
            terms[tuple(k)] = c
        return Polynomial._raw(terms, p.m)

    def divided_difference(self, i: int) -> Polynomial:
        return divided_difference(self, i)

    def substitute_x(self, images: Mapping[int, Polynomial]) -> Polynomial:
        """Replace x_i by ``images[i]`` (variables not listed are kept)."""
        m = max([self.m] + [p.m for p in images.values()])
        src = self.lift(m)
        out = Polynomial._raw({}, m)
        cache: dict[tuple[int, int], Polynomial] = {}
        for k, c in src.terms.items():
            kept = list(k)
            term = Polynomial.const(c, m)
            for i, img in images.items():
                e = kept[i - 1]
                if e:
                    kept[i - 1] = 0
                    if (i, e) not in cache:
                        cache[i, e] = img.lift(m) ** e
                    term = term * cache[i, e]
            out = out + term * Polynomial._raw({tuple(kept): 1}, m)
        return out

    def set_y_zero(self) -> Polynomial:
        terms: dict[tuple[int, ...], int] = {}
        for k, c in self.terms.items():
            if not any(k[self.m:]):
                terms[k] = terms.get(k, 0) + c
        return Polynomial(terms, self.m)

    def evaluate_ones(self) -> int:
        return sum(self.terms.values())

    # -- text / json --------------------------------------------------------

    def monomial_string(self, key: tuple[int, ...]) -> str:
        parts = []
        for idx, e in enumerate(key):
            if not e:
                continue
            name = f"x{idx + 1}" if idx < self.m else f"y{idx - self.m + 1}"
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda kc: (-sum(kc[0]), [-e for e in kc[0]]))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for k, c in self.sorted_terms():
            mono = self.monomial_string(k)
            mag = abs(c)
            body = mono if mono != "1" and mag == 1 else (str(mag) if mono == "1" else f"{mag}*{mono}")
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({self})"

    def to_json(self) -> dict[str, str]:
        return {self.monomial_string(k): str(c) for k, c in self.sorted_terms()}

    @classmethod
    def from_json(cls, obj: Mapping[str, str | int]) -> Polynomial:
        parsed = []
        m = 0
        for mono, c in obj.items():
            factors = []
            if mono.strip() != "1":
                for f in mono.split("*"):
                    hit = _MONO_RE.fullmatch(f.strip())
                    if not hit:
                        raise ValueError(f"malformed monomial {mono!r}")
                    var, idx, e = hit.group(1), int(hit.group(2)), int(hit.group(3) or 1)
                    factors.append((var, idx, e))
                    m = max(m, idx)
            parsed.append((factors, int(c)))
        terms: dict[tuple[int, ...], int] = {}
        for factors, c in parsed:
            k = [0] * (2 * m)
            for var, idx, e in factors:
                k[idx - 1 if var == "x" else m + idx - 1] += e
            key = tuple(k)
            terms[key] = terms.get(key, 0) + c
        return cls(terms, m)


_MONO_RE = re.compile(r"([xy])(\d+)(?:\^(\d+))?")


def monomial(exponents: Sequence[int]) -> Polynomial:
    """x^alpha for an x-exponent vector alpha."""
    m = len(exponents)
    return Polynomial({tuple(exponents) + (0,) * m: 1}, m)


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """``(f - s_i f) / (x_i - x_{i+1})`` computed monomial by monomial.

    For ``x_i^p x_{i+1}^q`` with ``p > q`` the quotient is
    ``(x_i x_{i+1})^q * sum_{s<p-q} x_i^{p-q-1-s} x_{i+1}^s``; the ``p < q``
    case is the negative of the mirrored sum.
    """
    f = f.lift(max(f.m, i + 1))
    terms: dict[tuple[int, ...], int] = {}
    a, b = i - 1, i
    for k, c in f.terms.items():
        p, q = k[a], k[b]
        if p == q:
            continue
        lo, d = min(p, q), abs(p - q)
        sign = 1 if p > q else -1
        base = list(k)
        for s in range(d):
            base[a] = lo + d - 1 - s
            base[b] = lo + s
            key = tuple(base)
            v = terms.get(key, 0) + sign * c
            if v:
                terms[key] = v
            else:
                del terms[key]
    return Polynomial._raw(terms, f.m)


# -- Schubert polynomials ----------------------------------------------------

_SCHUBERT: dict[Perm, Polynomial] = {}
_TRANSITION: dict[Perm, Polynomial] = {}
_DOUBLE: dict[Perm, Polynomial] = {}


def schubert_cache() -> Mapping[Perm, Polynomial]:
    """Read-only view of the divided-difference memo (keyed by w, so by n)."""
    return MappingProxyType(_SCHUBERT)


def _staircase(n: int) -> Polynomial:
    return monomial([n - i for i in range(1, n)])


def schubert(w: Perm) -> Polynomial:
    """Schubert polynomial by divided differences from the top element."""
    w = tuple(w)
    hit = _SCHUBERT.get(w)
    if hit is not None:
        return hit
    n = len(w)
    if w == longest_element(n):
        res = _staircase(n).lift(max(n - 1, 0))
    else:
        i = next(p for p in range(1, n) if w[p - 1] < w[p])
        res = divided_difference(schubert(right_transpose(w, i, i + 1)), i)
    _SCHUBERT[w] = res
    return res


def _transition_indices(w: Perm) -> tuple[int, int] | None:
    n = len(w)
    for i in range(n - 1, 0, -1):
        js = [j for j in range(i + 1, n + 1) if w[j - 1] < w[i - 1]]
        if js:
            return i, max(js)
    return None


def schubert_transition(w: Perm) -> Polynomial:
    """Schubert polynomial via the transition recursion (independent of dd)."""
    w = tuple(w)
    hit = _TRANSITION.get(w)
    if hit is not None:
        return hit
    n = len(w)
    ij = _transition_indices(w)
    if ij is None:
        res = Polynomial.const(1, max(n - 1, 0))
    else:
        i, j = ij
        v = right_transpose(w, i, j)
        res = schubert_transition(v) * Polynomial.x(i, n - 1)
        for h in range(1, i):
            vh = right_transpose(v, h, i)
            if is_cover(v, vh):
                res = res + schubert_transition(vh)
    _TRANSITION[w] = res
    return res


def complete_homogeneous(d: int, k: int, m: int | None = None) -> Polynomial:
    """h_d(x_1, ..., x_k)."""
    m = k if m is None else m
    terms: dict[tuple[int, ...], int] = {}
    for combo in combinations_with_replacement(range(k), d):
        e = [0] * (2 * m)
        for idx in combo:
            e[idx] += 1
        terms[tuple(e)] = 1
    return Polynomial(terms, m)


def double_schubert_dd(w: Perm) -> Polynomial:
    """Double Schubert polynomial by x-divided differences from
    ``prod_{i+j<=n} (x_i - y_j)``."""
    w = tuple(w)
    hit = _DOUBLE.get(w)
    if hit is not None:
        return hit
    n = len(w)
    m = max(n - 1, 0)
    if w == longest_element(n):
        res = Polynomial.const(1, m)
        for i in range(1, n):
            for j in range(1, n + 1 - i):
                res = res * (Polynomial.x(i, m) - Polynomial.y(j, m))
    else:
        i = next(p for p in range(1, n) if w[p - 1] < w[p])
        res = divided_difference(double_schubert_dd(right_transpose(w, i, i + 1)), i)
    _DOUBLE[w] = res
    return res


# -- identities ---------------------------------------------------------------

def verify_monk(w: Perm, k: int) -> bool:
    """Monk's rule: ``S_w (x_1+...+x_k) = sum over k-covers u of S_u``."""
    n = len(w)
    if not any(w[j - 1] == n for j in range(k + 1, n + 1)):
        raise InapplicableCase(f"Monk's rule needs w(j)=n for some j>{k}: {w}")
    lhs = schubert(w) * sum((Polynomial.x(i, n - 1) for i in range(1, k + 1)), Polynomial.const(0, n - 1))
    rhs = Polynomial.const(0, n - 1)
    for _, u in k_covers_up(w, k):
        rhs = rhs + schubert(u)
    return lhs == rhs


def increasing_chain_ends(u: Perm, k: int) -> list[tuple[Perm, int]]:
    """Endpoints of all increasing k-chains from u with their lengths."""
    from .kernels import increasing_chain_ends as _ends
    return [(v, d) for v, d in _ends(u, k)]


def verify_pieri_stable(u: Perm, k: int, d: int) -> bool:
    """Sottile's Pieri rule after embedding u into S_{n+d} by fixed points."""
    n = len(u)
    N = n + d
    uu = tuple(u) + tuple(range(n + 1, N + 1))
    lhs = schubert(uu) * complete_homogeneous(d, k, N - 1)
    rhs = Polynomial.const(0, N - 1)
    for v, dd in increasing_chain_ends(uu, k):
        if dd == d:
            rhs = rhs + schubert(v)
    return lhs == rhs


def verify_cauchy(n: int) -> bool:
    """``prod_{i<j<=n} (x_i - y_j) = sum_w S_w(x) S_{w w0}(-y_n, ..., -y_2)``."""
    m = n
    lhs = Polynomial.const(1, m)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            lhs = lhs * (Polynomial.x(i, m) - Polynomial.y(j, m))
    images = {i: -Polynomial.y(n + 1 - i, m) for i in range(1, n)}
    rhs = Polynomial.const(0, m)
    for w in all_perms(n):
        ww0 = tuple(reversed(w))
        rhs = rhs + schubert(w) * schubert(ww0).substitute_x(images)
    return lhs == rhs


def schubert_sum(perms: Iterable[Perm]) -> Polynomial:
    out = Polynomial()
    for w in perms:
        out = out + schubert(w)
    return out


# keep names that callers in other modules import alongside this one
_ = (bruhat_leq, inverse, length)
