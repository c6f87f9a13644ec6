from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from bruhatpipes.chains import (
    BruhatChain, ChainError, chain_weight, chains_from_strings, count_two_step_chains,
    double_weight, enumerate_compatible_chains, find_increasing_k_chain, flip, gamma_exponent,
    growth, growth_triple, increasing_chain_steps, is_compatible, lenart_local_move, unflip,
)
from bruhatpipes.perm import (
    all_perms, has_antidiagonal_head, has_decreasing_tail, k_covers_up, length, longest_element,
)
from bruhatpipes.pipedreams import enumerate_pd
from bruhatpipes.poly import Polynomial, double_schubert_dd, monomial, schubert

PD_CHAIN = chains_from_strings(["25143", "53142", "54132", "54321", "54321"])
BPD_CHAIN = chains_from_strings(["216534", "216543", "316542", "356421", "465321", "654321"])
HPD_CHAIN = chains_from_strings(["25143", "53142", "53142", "54132", "54321"])
FLIP_IN = chains_from_strings(["2143", "2341", "2431", "4321"])
FLIP_OUT = chains_from_strings(["2143", "4132", "4312", "4321"])


def all_increasing_chains(u, w, k):
    """Brute force: every saturated k-chain u -> w with strictly increasing swapped smaller values."""
    out = []

    def rec(v, last, path):
        if v == w:
            out.append(tuple(path))
        if length(v) >= length(w):
            return
        for (i, j), x in k_covers_up(v, k):
            small = v[i - 1]
            if small > last:
                path.append(x)
                rec(x, small, path)
                path.pop()

    rec(tuple(u), 0, [tuple(u)])
    return out


def test_chain_weight():
    w = (2, 5, 1, 4, 3)
    assert chain_weight(BruhatChain((w, w, w))) == (0, 0)
    assert chain_weight(PD_CHAIN) == (2, 1, 2, 0)
    # the printed lengths are 6, 7, 8, 11, 13, 15
    assert chain_weight(BPD_CHAIN) == (1, 1, 3, 2, 2)
    with pytest.raises(ChainError):
        chain_weight(BruhatChain(((2, 1), (1, 2))))


def test_json_round_trip():
    assert BruhatChain.from_json(PD_CHAIN.to_json()) == PD_CHAIN
    labeled = BruhatChain(PD_CHAIN.perms, (1, 2, 3, 4))
    assert labeled.to_json()["labels"] == [1, 2, 3, 4]
    assert BruhatChain.from_json(labeled.to_json()) == labeled
    with pytest.raises(ChainError):
        BruhatChain(PD_CHAIN.perms, (1,))


def test_find_increasing_examples():
    u = (3, 1, 6, 5, 2, 4)
    assert find_increasing_k_chain(u, u, 2).perms == (u,)
    C = find_increasing_k_chain(u, (6, 2, 4, 5, 1, 3), 2)
    assert C.perms == ((3, 1, 6, 5, 2, 4), (3, 2, 6, 5, 1, 4), (4, 2, 6, 5, 1, 3), (6, 2, 4, 5, 1, 3))
    assert increasing_chain_steps(u, (6, 2, 4, 5, 1, 3), 2) == [(2, 5), (1, 6), (1, 3)]
    assert find_increasing_k_chain((2, 3, 4, 1), (3, 4, 2, 1), 2) is None
    assert find_increasing_k_chain((2, 5, 1, 4, 3), (5, 3, 1, 4, 2), 1).perms == (
        (2, 5, 1, 4, 3), (3, 5, 1, 4, 2), (5, 3, 1, 4, 2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_increasing_chain_unique_and_matches_brute_force(n):
    perms = list(all_perms(n))
    for u in perms:
        for w in perms:
            for k in range(1, n):
                found = all_increasing_chains(u, w, k)
                assert len(found) <= 1
                C = find_increasing_k_chain(u, w, k, verify=True)
                if found:
                    assert C.perms == found[0]
                    # b-positions distinct; length = (n-k) - #{j > k fixed}
                    steps = increasing_chain_steps(u, w, k)
                    bs = [b for _, b in steps]
                    assert len(set(bs)) == len(bs)
                    fixed = sum(1 for j in range(k + 1, n + 1) if u[j - 1] == w[j - 1])
                    assert len(steps) == n - k - fixed
                else:
                    assert C is None


def test_is_compatible():
    assert is_compatible(PD_CHAIN, (1, 2, 3, 4))
    assert is_compatible(HPD_CHAIN, (1, 4, 2, 3))
    assert not is_compatible(HPD_CHAIN, (1, 2, 3, 4))
    w0 = longest_element(4)
    assert is_compatible(BruhatChain((w0,) * 4), (3, 1, 2))


def test_enumerate_examples():
    w0 = longest_element(4)
    assert enumerate_compatible_chains(w0, (2, 3, 1)) == {BruhatChain((w0,) * 4)}
    chains = enumerate_compatible_chains((2, 5, 1, 4, 3), (1, 2, 3, 4))
    assert PD_CHAIN in chains
    assert len(chains) == len(enumerate_pd((2, 5, 1, 4, 3)))
    assert BPD_CHAIN in enumerate_compatible_chains((2, 1, 6, 5, 3, 4), (5, 4, 3, 2, 1))
    assert HPD_CHAIN in enumerate_compatible_chains((2, 5, 1, 4, 3), (1, 4, 2, 3))


def test_gamma_exponent_examples():
    n = 5
    w0 = longest_element(n)
    assert gamma_exponent(BruhatChain((w0,) * n), (3, 1, 4, 2)) == (4, 3, 2, 1)
    assert gamma_exponent(PD_CHAIN, (1, 2, 3, 4)) == (2, 2, 0, 1)
    assert gamma_exponent(HPD_CHAIN, (1, 4, 2, 3)) == (2, 2, 0, 1)
    with pytest.raises(ChainError):
        gamma_exponent(HPD_CHAIN, (1, 2, 3, 4))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_chain_formula_every_gamma(n):
    for gamma in permutations(range(1, n)):
        for w in all_perms(n):
            s = Polynomial()
            for C in enumerate_compatible_chains(w, gamma):
                assert is_compatible(C, gamma)
                # every chain for gamma starts in the antidiagonal-head set of min gamma
                assert has_antidiagonal_head(C.perms[0], min(gamma))
                s = s + monomial(gamma_exponent(C, gamma))
            assert s == schubert(w)


def test_local_move_examples():
    assert lenart_local_move((2, 4, 1, 3), (3, 4, 1, 2), (3, 4, 2, 1), 2, 3) == ((2, 4, 3, 1), 3, 2)
    assert lenart_local_move((2, 1, 4, 3), (2, 4, 1, 3), (2, 4, 3, 1), 2, 3) == ((2, 3, 4, 1), 3, 2)


@pytest.mark.parametrize("n", [3, 4])
def test_local_move_reversible(n):
    for a in all_perms(n):
        for k1 in range(1, n):
            for _, b in k_covers_up(a, k1):
                for k2 in range(1, n):
                    if k2 == k1:
                        continue
                    for _, c in k_covers_up(b, k2):
                        b2, j1, j2 = lenart_local_move(a, b, c, k1, k2)
                        assert (j1, j2) == (k2, k1)
                        assert lenart_local_move(a, b2, c, k2, k1) == (b, k1, k2)


def test_growth_examples():
    C1 = chains_from_strings(["2143", "2413", "3412"])
    C2 = chains_from_strings(["3412", "3421"])
    D2, D1 = growth(2, 3, C1, C2)
    assert D2.perms == chains_from_strings(["2143", "2341"]).perms
    assert D1.perms == chains_from_strings(["2341", "2431", "3421"]).perms
    back2, back1 = growth(3, 2, D2, D1)
    assert back2.perms == C1.perms and back1.perms == C2.perms
    # empty second chain
    E2, E1 = growth(2, 3, C1, BruhatChain(((3, 4, 1, 2),)))
    assert E2.perms == ((2, 1, 4, 3),) and E1.perms == C1.perms
    with pytest.raises(ChainError):
        growth(2, 3, C1, chains_from_strings(["3421", "4321"]))


def test_growth_triple_examples():
    assert growth_triple((2, 3, 4, 1), (2, 4, 3, 1), (4, 3, 2, 1), 2, 1) == ((2, 3, 4, 1), (4, 2, 3, 1), (4, 3, 2, 1))
    assert growth_triple((2, 1, 4, 3), (2, 3, 4, 1), (4, 2, 3, 1), 3, 1) == ((2, 1, 4, 3), (4, 1, 3, 2), (4, 2, 3, 1))
    u = (2, 1, 4, 3)
    assert growth_triple(u, u, u, 2, 1) == (u, u, u)


@pytest.mark.parametrize("n", [3, 4])
def test_growth_increasing_chains_stay_increasing(n):
    # with a decreasing tail past k, (increasing k-chain, increasing 1-chain) grows into increasing chains
    for u in all_perms(n):
        for k in range(2, n):
            for v in all_perms(n):
                C1 = find_increasing_k_chain(u, v, k)
                if C1 is None:
                    continue
                for w in all_perms(n):
                    if not has_decreasing_tail(w, k):
                        continue
                    C2 = find_increasing_k_chain(v, w, 1)
                    if C2 is None:
                        continue
                    D2, D1 = growth(k, 1, C1, C2)
                    assert find_increasing_k_chain(D2.perms[0], D2.perms[-1], 1).perms == D2.perms
                    assert find_increasing_k_chain(D1.perms[0], D1.perms[-1], k).perms == D1.perms


def test_flip_example():
    assert flip(FLIP_IN) == FLIP_OUT
    assert unflip(FLIP_OUT) == FLIP_IN
    w0 = longest_element(4)
    const = BruhatChain((w0,) * 4)
    assert flip(const) == const and unflip(const) == const
    with pytest.raises(ChainError):
        flip(FLIP_OUT)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_flip_bijection(n):
    dec, inc = tuple(range(n - 1, 0, -1)), tuple(range(1, n))
    for w in all_perms(n):
        A = enumerate_compatible_chains(w, dec)
        B = enumerate_compatible_chains(w, inc)
        image = {flip(C) for C in A}
        assert image == B
        for C in A:
            assert unflip(flip(C)) == C
            assert gamma_exponent(C, dec) == gamma_exponent(flip(C), inc)
        for C in B:
            assert flip(unflip(C)) == C


def test_double_weight_examples():
    assert double_weight(BruhatChain(((2, 1), (2, 1))), (1,)) == Polynomial.x(1, 1) - Polynomial.y(1, 1)
    n = 4
    w0 = longest_element(n)
    gamma = (2, 3, 1)
    want = Polynomial.const(1, n - 1)
    for g in gamma:
        for t in range(g + 1, n + 1):
            want = want * (Polynomial.x(g, n - 1) - Polynomial.y(w0[t - 1], n - 1))
    assert double_weight(BruhatChain((w0,) * n), gamma) == want


@pytest.mark.parametrize("n", [2, 3, 4])
def test_double_weight_formula(n):
    for gamma in permutations(range(1, n)):
        for w in all_perms(n):
            s = Polynomial()
            for C in enumerate_compatible_chains(w, gamma):
                dw = double_weight(C, gamma)
                assert dw.set_y_zero() == monomial(gamma_exponent(C, gamma))
                s = s + dw
            assert s == double_schubert_dd(w)


def _brute_two_step(u, w, k1, k2, d1, d2, n):
    total = 0
    for v in all_perms(n):
        a = find_increasing_k_chain(u, v, k1)
        b = find_increasing_k_chain(v, w, k2)
        if a is not None and b is not None and len(a) - 1 == d1 and len(b) - 1 == d2:
            total += 1
    return total


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_two_step_counts_symmetric(data):
    n = data.draw(st.integers(3, 5))
    perms = st.permutations(list(range(1, n + 1))).map(tuple)
    u, w = data.draw(perms), data.draw(perms)
    k1 = data.draw(st.integers(1, n - 1))
    k2 = data.draw(st.integers(1, n - 1))
    d = length(w) - length(u)
    if d < 0:
        return
    d1 = data.draw(st.integers(0, d))
    a = count_two_step_chains(u, w, k1, k2, d1, d - d1)
    assert a == _brute_two_step(u, w, k1, k2, d1, d - d1, n)
    assert a == count_two_step_chains(u, w, k2, k1, d - d1, d1)
