import pytest
from hypothesis import given, strategies as st

from bruhatpipes.chains import BruhatChain, ChainError, chain_weight, chains_from_strings, enumerate_compatible_chains
from bruhatpipes.perm import all_perms, identity, length, longest_element, reduced_word_product
from bruhatpipes.pipedreams import (
    PdGrid, analyze_pd, chain_pd, chain_pd_inverse, enumerate_pd, pd_double_weight, pd_from_ascii,
)
from bruhatpipes.poly import Polynomial, double_schubert_dd, monomial, schubert

RUNNING_PD = pd_from_ascii("""
+~~+r
++~r
~~r
+r
r
""")
RUNNING_CHAIN = chains_from_strings(["25143", "53142", "54132", "54321", "54321"])


def test_extremes():
    (P0,) = enumerate_pd(longest_element(4))
    assert P0.crosses == {(r, c) for r in range(1, 4) for c in range(1, 5 - r)}
    (Pid,) = enumerate_pd(identity(4))
    assert not Pid.crosses
    assert pd_double_weight(Pid) == 1
    w, wt, word = analyze_pd(P0)
    assert w == longest_element(4) and wt == (3, 2, 1)
    assert reduced_word_product(word, 4) == w


def test_running_example():
    assert RUNNING_PD in enumerate_pd((2, 5, 1, 4, 3))
    assert analyze_pd(RUNNING_PD) == ((2, 5, 1, 4, 3), (2, 2, 0, 1), (4, 1, 3, 2, 4))
    assert chain_pd(RUNNING_PD) == RUNNING_CHAIN
    assert chain_pd_inverse(RUNNING_CHAIN) == RUNNING_PD


def test_ascii_and_json():
    assert RUNNING_PD.ascii() == "+~~+r\n++~r\n~~r\n+r\nr"
    assert PdGrid.from_json(RUNNING_PD.to_json()) == RUNNING_PD
    assert RUNNING_PD.to_json()["tiles"][0] == ["Cross", "Bump", "Bump", "Cross", "ForcedElbow"]
    with pytest.raises(ValueError):
        PdGrid.from_json({"kind": "bpd", "tiles": []})
    with pytest.raises(ValueError):
        PdGrid(3, {(2, 2)})


def test_double_crossing_rejected():
    # word 2,2: pipes 2 and 3 would cross twice
    with pytest.raises(ValueError):
        analyze_pd(pd_from_ascii("~+r\n+r\nr"))


def test_double_crossing_agrees_with_reducedness():
    n = 4
    cells = [(r, c) for r in range(1, n) for c in range(1, n + 1 - r)]
    for mask in range(1 << len(cells)):
        cs = frozenset(cells[i] for i in range(len(cells)) if mask >> i & 1)
        P = PdGrid(n, cs)
        word = tuple(r + c - 1 for r, c in sorted(cs, key=lambda rc: (rc[0], -rc[1])))
        reduced = length(reduced_word_product(word, n)) == len(word)
        try:
            w, _, _ = analyze_pd(P)
            ok = True
        except ValueError:
            ok = False
        assert ok == reduced
        if ok:
            assert w == reduced_word_product(word, n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_pd_formula(n):
    for w in all_perms(n):
        s = Polynomial()
        for P in enumerate_pd(w):
            s = s + monomial(analyze_pd(P)[1])
        assert s == schubert(w)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_chain_bijection(n):
    inc = tuple(range(1, n))
    for w in all_perms(n):
        image = set()
        for P in enumerate_pd(w):
            ww, wt, word = analyze_pd(P)
            assert ww == w and len(word) == length(w)
            assert reduced_word_product(word, n) == w
            C = chain_pd(P)
            assert chain_weight(C) == tuple(n - 1 - i - wt[i] for i in range(n - 1))
            assert chain_pd_inverse(C) == P
            image.add(C)
        assert image == enumerate_compatible_chains(w, inc)


def test_inverse_rejects_bad_chain():
    with pytest.raises(ChainError):
        chain_pd_inverse(chains_from_strings(["2143", "2341", "2431", "4321"]))
    with pytest.raises(ChainError):
        chain_pd_inverse(chains_from_strings(["2143", "4321"]))
    w0 = longest_element(4)
    assert chain_pd_inverse(BruhatChain((w0,) * 4)) == next(iter(enumerate_pd(w0)))


def test_double_weight():
    (P,) = enumerate_pd((2, 1))
    assert pd_double_weight(P) == Polynomial.x(1, 1) - Polynomial.y(1, 1)
    for w in all_perms(4):
        s = Polynomial()
        for P in enumerate_pd(w):
            s = s + pd_double_weight(P)
        assert s == double_schubert_dd(w)


@given(st.permutations([1, 2, 3, 4, 5]))
def test_count_is_schubert_at_ones(w):
    assert len(enumerate_pd(tuple(w))) == schubert(tuple(w)).evaluate_ones()
