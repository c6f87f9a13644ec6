"""Named exhaustive checks, each re-deriving one identity at desk scale.

A check is a pair (case list, case runner).  Runners are top-level
functions so cases can be farmed out to worker processes; each returns
``(subcases, failures)``.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, permutations, product
from typing import Any, Callable

from . import algebra as alg
from .bumpless import (
    FlaggedTableau, analyze_bpd, chain_bpd, chain_bpd_inverse, enumerate_bpd,
    ft_analyze, phi, psi, psi_inverse,
)
from .chains import (
    _Enumerator, chain_weight, count_two_step_chains, double_weight,
    enumerate_compatible_chains, flip, gamma_exponent, growth, unflip,
)
from .hybrid import (
    chain_tau, chain_tau_inverse, enumerate_hpd, gamma_tau, hpd_analyze, iter_taus,
)
from .perm import all_perms, compose, format_perm, k_covers_up, length, longest_element
from .pipedreams import analyze_pd, chain_pd, chain_pd_inverse, enumerate_pd
from .poly import Polynomial, double_schubert_dd, monomial, schubert, verify_cauchy

Result = tuple[int, list[dict]]


def _fmt(w) -> str:
    return format_perm(w)


# -- polynomial formulas ----------------------------------------------------------

def _pd_formula(w) -> Result:
    s = Polynomial()
    for P in enumerate_pd(w):
        s = s + monomial(analyze_pd(P)[1])
    return 1, [] if s == schubert(w) else [{"w": _fmt(w), "got": s.to_json()}]


def _bpd_formula(w) -> Result:
    s = Polynomial()
    for D in enumerate_bpd(w):
        s = s + monomial(analyze_bpd(D)[1])
    return 1, [] if s == schubert(w) else [{"w": _fmt(w), "got": s.to_json()}]


def _cor_2_9(case) -> Result:
    n, gamma = case
    en = _Enumerator(gamma)
    fails = []
    count = 0
    for w in all_perms(n):
        count += 1
        s = Polynomial()
        for C in enumerate_compatible_chains(w, gamma, en):
            s = s + monomial(gamma_exponent(C, gamma))
        if s != schubert(w):
            fails.append({"w": _fmt(w), "gamma": list(gamma), "got": s.to_json()})
    return count, fails


def _conj_7_1(case) -> Result:
    n, gamma = case
    en = _Enumerator(gamma)
    fails = []
    count = 0
    for w in all_perms(n):
        count += 1
        s = Polynomial()
        for C in enumerate_compatible_chains(w, gamma, en):
            s = s + double_weight(C, gamma)
        if s != double_schubert_dd(w):
            fails.append({"w": _fmt(w), "gamma": list(gamma), "got": s.to_json()})
    return count, fails


# -- bijections -------------------------------------------------------------------

def _thm_2_2(w) -> Result:
    n = len(w)
    fails = []
    image = set()
    for P in enumerate_pd(w):
        C = chain_pd(P)
        image.add(C)
        wt = analyze_pd(P)[1]
        if chain_weight(C)[: n - 1] != tuple(n - 1 - i - wt[i] for i in range(n - 1)):
            fails.append({"w": _fmt(w), "pd": P.to_json(), "reason": "weight law"})
        if chain_pd_inverse(C) != P:
            fails.append({"w": _fmt(w), "pd": P.to_json(), "reason": "round trip"})
    if n > 1 and image != enumerate_compatible_chains(w, tuple(range(1, n))):
        fails.append({"w": _fmt(w), "reason": "image differs from compatible chains"})
    return 1, fails


def _thm_3_6(w) -> Result:
    n = len(w)
    fails = []
    image = set()
    for D in enumerate_bpd(w):
        C = chain_bpd(D)
        image.add(C)
        wt = analyze_bpd(D)[1]
        if chain_weight(C) != tuple(reversed([n - 1 - i - wt[i] for i in range(n - 1)])):
            fails.append({"w": _fmt(w), "bpd": D.to_json(), "reason": "weight law"})
        if chain_bpd_inverse(C) != D:
            fails.append({"w": _fmt(w), "bpd": D.to_json(), "reason": "round trip"})
    if n > 1 and image != enumerate_compatible_chains(w, tuple(range(n - 1, 0, -1))):
        fails.append({"w": _fmt(w), "reason": "image differs from compatible chains"})
    return 1, fails


def all_flagged_tableaux(n: int):
    rows = [list(product([None] + list(range(1, i + 1)), repeat=n - i)) for i in range(1, n)]
    for choice in product(*rows):
        yield FlaggedTableau(n, choice)


def _prop_4_11(n) -> Result:
    by_w: dict = {}
    for T in all_flagged_tableaux(n):
        w = ft_analyze(T)[1]
        if w is not None:
            by_w.setdefault(w, set()).add(T)
    fails = []
    count = 0
    for w in all_perms(n):
        count += 1
        image = set()
        for D in enumerate_bpd(w):
            T = phi(D)
            C = chain_bpd(D)
            if T != psi(C) or psi_inverse(T) != C or T.weight() != analyze_bpd(D)[1]:
                fails.append({"w": _fmt(w), "bpd": D.to_json()})
            image.add(T)
        if image != by_w.get(w, set()):
            fails.append({"w": _fmt(w), "reason": "phi image differs from FT(w)"})
    return count, fails


# -- algebra ---------------------------------------------------------------------

def _compare_elements(n: int, got, name: str) -> Result:
    want = alg.schubert_sum_element(n)
    fails = [{"check": name, "w": _fmt(w), "got": got.coefficient(w).to_json()}
             for w in all_perms(n) if got.coefficient(w) != want.coefficient(w)]
    extra = got.support() - want.support()
    fails += [{"check": name, "w": _fmt(w), "reason": "unexpected term"} for w in sorted(extra)]
    return len(list(all_perms(n))), fails


def _thm_4_2(n) -> Result:
    return _compare_elements(n, alg.compute_S_bpd(n), "theorem-4-2")


def _eq_3(n) -> Result:
    return _compare_elements(n, alg.compute_S_pd(n), "eq-3")


def _prop_4_25(n) -> Result:
    return _compare_elements(n, alg.compute_S_bpd_commutative(n), "prop-4-25")


def _prop_4_16(case) -> Result:
    n, i = case
    from .poly import divided_difference
    S = alg.compute_S_bpd(n)
    lhs = S.map_coefficients(lambda p: divided_difference(p, i))
    return 1, [] if lhs == alg.nc_apply_u(S, i) else [{"n": n, "i": i}]


def _dunkl_commute(w) -> Result:
    n = len(w)
    a = alg.GroupAlgebraElement.basis(w)
    fails = []
    for i, j in combinations(range(1, n + 1), 2):
        if alg.fk_apply_dunkl(alg.fk_apply_dunkl(a, i), j) != alg.fk_apply_dunkl(alg.fk_apply_dunkl(a, j), i):
            fails.append({"w": _fmt(w), "i": i, "j": j})
    return 1, fails


def _lemma_4_4(w) -> Result:
    got = alg.eval_schubert_at_neg_dunkl(w)
    want = alg.GroupAlgebraElement.basis(compose(w, longest_element(len(w))))
    return 1, [] if got == want else [{"w": _fmt(w), "got": got.to_json()}]


def _cauchy(n) -> Result:
    return 1, [] if verify_cauchy(n) else [{"n": n}]


# -- growth and flip --------------------------------------------------------------

def saturated_k_chains(u, k, max_len: int | None = None):
    """All saturated k-chains starting at u (including the trivial one)."""
    out = []

    def rec(chain):
        out.append(tuple(chain))
        if max_len is not None and len(chain) - 1 >= max_len:
            return
        for _, x in k_covers_up(chain[-1], k):
            chain.append(x)
            rec(chain)
            chain.pop()

    rec([tuple(u)])
    return out


def _thm_5_3(u) -> Result:
    n = len(u)
    fails = []
    count = 0
    for k1 in range(1, n):
        for k2 in range(1, n):
            if k1 == k2:
                continue
            for C1 in saturated_k_chains(u, k1):
                for C2 in saturated_k_chains(C1[-1], k2):
                    count += 1
                    C2p, C1p = growth(k1, k2, C1, C2)
                    back2, back1 = growth(k2, k1, C2p, C1p)
                    if back2.perms != C1 or back1.perms != C2:
                        fails.append({"u": _fmt(u), "k1": k1, "k2": k2,
                                      "C1": [_fmt(x) for x in C1], "C2": [_fmt(x) for x in C2]})
    return count, fails


def _thm_5_15(w) -> Result:
    n = len(w)
    dec, inc = tuple(range(n - 1, 0, -1)), tuple(range(1, n))
    A = enumerate_compatible_chains(w, dec)
    B = enumerate_compatible_chains(w, inc)
    fails = []
    image = set()
    for C in A:
        F = flip(C)
        image.add(F)
        if unflip(F) != C or gamma_exponent(C, dec) != gamma_exponent(F, inc):
            fails.append({"w": _fmt(w), "chain": C.to_json()})
    if image != B:
        fails.append({"w": _fmt(w), "reason": "flip is not onto"})
    for C in B:
        if flip(unflip(C)) != C:
            fails.append({"w": _fmt(w), "chain": C.to_json(), "reason": "flip(unflip) != id"})
    return 1, fails


# -- hybrid -----------------------------------------------------------------------

def _thm_6_7(case) -> Result:
    n, tau = case
    g = gamma_tau(tau)
    en = _Enumerator(g) if n > 1 else None
    fails = []
    count = 0
    for w in all_perms(n):
        count += 1
        image = set()
        for H in enumerate_hpd(w, tau):
            C = chain_tau(H)
            image.add(C)
            ww, wt = hpd_analyze(H)
            # segment labeled k has length n-k-m with m weighty tiles in row k
            if ww != w or (n > 1 and gamma_exponent(C, g) != wt):
                fails.append({"w": _fmt(w), "tau": tau, "hpd": H.to_json(), "reason": "weight law"})
            if chain_tau_inverse(C, tau) != H:
                fails.append({"w": _fmt(w), "tau": tau, "hpd": H.to_json(), "reason": "round trip"})
        if n > 1 and image != enumerate_compatible_chains(w, g, en):
            fails.append({"w": _fmt(w), "tau": tau, "reason": "image differs"})
    return count, fails


# -- chain counts -----------------------------------------------------------------

def _prop_2_8(case) -> Result:
    u, pairs = case
    n = len(u)
    fails = []
    count = 0
    for w, k1, k2 in pairs:
        d = length(w) - length(u)
        for d1 in range(d + 1):
            count += 1
            a = count_two_step_chains(u, w, k1, k2, d1, d - d1)
            b = count_two_step_chains(u, w, k2, k1, d - d1, d1)
            if a != b:
                fails.append({"u": _fmt(u), "w": _fmt(w), "k1": k1, "k2": k2, "d1": d1, "counts": [a, b]})
    del n
    return count, fails


def _prop_2_8_cases(n: int):
    ks = [(k1, k2) for k1 in range(1, n) for k2 in range(1, n) if k1 < k2]
    if n <= 4:
        perms = list(all_perms(n))
        return [(u, [(w, k1, k2) for w in perms if length(w) >= length(u) for k1, k2 in ks]) for u in perms]
    rng = random.Random(0)
    perms = list(all_perms(n))
    cases = []
    for _ in range(200):
        u, w = rng.choice(perms), rng.choice(perms)
        if length(u) > length(w):
            u, w = w, u
        k1, k2 = rng.choice(ks)
        cases.append((u, [(w, k1, k2)]))
    return cases


# -- registry ---------------------------------------------------------------------

def _perms(n):
    return list(all_perms(n))


def _gammas(n):
    return [(n, g) for g in permutations(range(1, n))]


CHECKS: dict[str, tuple[int, Callable[[int], list], Callable[[Any], Result]]] = {
    "pd-formula": (6, _perms, _pd_formula),
    "bpd-formula": (6, _perms, _bpd_formula),
    "corollary-2-9": (5, _gammas, _cor_2_9),
    "theorem-2-2": (5, _perms, _thm_2_2),
    "theorem-3-6": (5, _perms, _thm_3_6),
    "prop-4-11": (5, lambda n: [n], _prop_4_11),
    "theorem-4-2": (5, lambda n: [n], _thm_4_2),
    "eq-3": (5, lambda n: [n], _eq_3),
    "prop-4-25": (5, lambda n: [n], _prop_4_25),
    "prop-4-16": (5, lambda n: [(n, i) for i in range(1, n)], _prop_4_16),
    "dunkl-commute": (5, _perms, _dunkl_commute),
    "lemma-4-4": (5, _perms, _lemma_4_4),
    "cauchy-15": (5, lambda n: [n], _cauchy),
    "theorem-5-3": (4, _perms, _thm_5_3),
    "theorem-5-15": (5, _perms, _thm_5_15),
    "theorem-6-7": (4, lambda n: [(n, t) for t in iter_taus(n)], _thm_6_7),
    "prop-2-8": (4, _prop_2_8_cases, _prop_2_8),
    "conjecture-7-1": (5, _gammas, _conj_7_1),
}


def _run_one(args) -> Result:
    name, case = args
    return CHECKS[name][2](case)


def run_check(name: str, n: int | None = None, jobs: int = 1) -> dict:
    if name not in CHECKS:
        raise KeyError(name)
    default_n, cases_fn, _ = CHECKS[name]
    n = default_n if n is None else n
    if n < 1:
        raise ValueError("n must be positive")
    t0 = time.perf_counter()
    cases = cases_fn(n)
    work = [(name, c) for c in cases]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_run_one, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        results = [_run_one(a) for a in work]
    total = sum(c for c, _ in results)
    failures = [f for _, fs in results for f in fs]
    return {
        "check": name,
        "n": n,
        "cases": total,
        "failures": failures,
        "elapsed_ms": int((time.perf_counter() - t0) * 1000),
    }
