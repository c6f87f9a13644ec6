import os
import subprocess
import sys
from itertools import combinations

import pytest

from bruhatpipes import kernels
from bruhatpipes.chains import find_increasing_k_chain
from bruhatpipes.perm import all_perms, length, reduced_word_product

BACKENDS = kernels.available_backends()


def test_python_backend_always_available():
    assert "python" in BACKENDS
    assert kernels.BACKEND in BACKENDS


@pytest.mark.skipif("cython" not in BACKENDS, reason="extension not built")
def test_compiled_backend_is_default():
    assert kernels.BACKEND == "cython"


def test_env_var_forces_pure_python():
    env = dict(os.environ, BRUHATPIPES_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from bruhatpipes import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("name", sorted(BACKENDS))
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pd_cross_sets_brute_force(name, n):
    k = BACKENDS[name]
    cells = [(r, c) for r in range(1, n) for c in range(1, n + 1 - r)]
    want = {w: set() for w in all_perms(n)}
    for size in range(len(cells) + 1):
        for cs in combinations(cells, size):
            word = [r + c - 1 for r, c in sorted(cs, key=lambda rc: (rc[0], -rc[1]))]
            w = reduced_word_product(word, n)
            if length(w) == len(word):
                want[w].add(frozenset(cs))
    for w in all_perms(n):
        got = [frozenset(cs) for cs in k.pd_cross_sets(w)]
        assert len(got) == len(set(got))
        assert set(got) == want[w]


@pytest.mark.parametrize("name", sorted(BACKENDS))
@pytest.mark.parametrize("n", [2, 3, 4])
def test_increasing_chain_ends_brute_force(name, n):
    k = BACKENDS[name]
    for u in all_perms(n):
        for kk in range(1, n):
            got = sorted(k.increasing_chain_ends(u, kk))
            want = []
            for w in all_perms(n):
                C = find_increasing_k_chain(u, w, kk)
                if C is not None:
                    want.append((w, len(C) - 1))
            assert got == sorted(want)


@pytest.mark.skipif("cython" not in BACKENDS, reason="extension not built")
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_backends_agree(n):
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for w in all_perms(n):
        assert sorted(py.pd_cross_sets(w)) == sorted(cy.pd_cross_sets(w))
        assert sorted(py.bpd_grids(w)) == sorted(cy.bpd_grids(w))
        if n <= 5:
            assert sorted(py.bpd_grids(w, reduced=False)) == sorted(cy.bpd_grids(w, reduced=False))
        for kk in range(1, n):
            assert sorted(py.increasing_chain_ends(w, kk)) == sorted(cy.increasing_chain_ends(w, kk))


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_grid_shapes(name):
    k = BACKENDS[name]
    (g,) = k.bpd_grids((3, 2, 1))
    assert g == ("..r", ".r+", "r++")
    (g,) = k.bpd_grids((1, 2, 3))
    assert g == ("r--", "|r-", "||r")
    assert k.increasing_chain_ends((3, 2, 1), 1) == [((3, 2, 1), 0)]
