"""The compiled and pure kernels must be byte-for-byte interchangeable."""

import random
from array import array
from concurrent.futures import ThreadPoolExecutor

import pytest

import sepdec
from helpers import random_connected_graph, random_graph
from sepdec import _pycore
from sepdec._kernels import available_backends, backend_name, set_backend

fastcore = pytest.importorskip(
    "sepdec._fastcore", reason="compiled kernel extension not built"
)


def csr(g):
    return g.csr()


class TestKernelEquivalence:
    def test_all_four_kernels_agree(self):
        rng = random.Random(61)
        for _ in range(150):
            g = random_graph(rng, rng.randint(0, 12), rng.choice((0.15, 0.35, 0.6)))
            indptr, indices = csr(g)
            o_py = _pycore.mcs_order(g.n, indptr, indices)
            o_c = fastcore.mcs_order(g.n, indptr, indices)
            assert o_py == o_c
            assert _pycore.peo_ok(g.n, indptr, indices, o_py) == fastcore.peo_ok(
                g.n, indptr, indices, o_py
            )
            m_py = _pycore.mcs_m(g.n, indptr, indices)
            m_c = fastcore.mcs_m(g.n, indptr, indices)
            assert m_py[0] == m_c[0]
            assert [tuple(e) for e in m_py[1]] == [tuple(e) for e in m_c[1]]

    def test_umw_agrees(self):
        rng = random.Random(62)
        for _ in range(150):
            n = rng.randint(0, 9)
            edges = [
                (i, j, rng.randint(0, 5))
                for i in range(n)
                for j in range(i + 1, n)
                if rng.random() < 0.6
            ]
            ei = array("i", [e[0] for e in edges])
            ej = array("i", [e[1] for e in edges])
            ew = array("i", [e[2] for e in edges])
            k_py = _pycore.umw_select(n, ei, ej, ew)
            k_c = fastcore.umw_select(n, ei, ej, ew)
            assert list(map(bool, k_py)) == list(map(bool, k_c))


class TestBackendSwitch:
    def test_both_available_here(self):
        assert available_backends() == ("c", "python")

    def test_full_pipeline_identical(self):
        rng = random.Random(63)
        graphs = [random_connected_graph(rng, rng.randint(1, 10), 0.4) for _ in range(20)]
        results = {}
        previous = backend_name()
        try:
            for backend in ("python", "c"):
                set_backend(backend)
                results[backend] = [
                    (
                        sepdec.atom_tree(g),
                        sepdec.naive_atom_graph(g, sepdec.atoms(g)),
                        sepdec.is_chordal(g),
                    )
                    for g in graphs
                ]
        finally:
            set_backend(previous)
        assert results["python"] == results["c"]

    def test_unknown_backend_rejected(self):
        with pytest.raises(sepdec.InputError):
            set_backend("fortran")


class TestConcurrentUse:
    def test_component_decomposition_parallel_equals_sequential(self):
        rng = random.Random(64)
        parts = [random_connected_graph(rng, rng.randint(2, 8), 0.4) for _ in range(6)]
        sequential = [sepdec.atom_tree(g) for g in parts]
        with ThreadPoolExecutor(max_workers=4) as pool:
            parallel = list(pool.map(sepdec.atom_tree, parts))
        assert parallel == sequential
