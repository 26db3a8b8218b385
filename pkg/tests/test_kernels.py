import numpy as np
import pytest

from flagweak import GroupContext, enumerate_group, leq
from flagweak._kernel import BACKEND, pack_order_keys
from flagweak._kernel import pyimpl

cyimpl = pytest.importorskip(
    "flagweak._kernel.cyimpl", reason="compiled kernel not built"
)

IMPLS = [pyimpl, cyimpl]


def pack(r, n):
    elems = list(enumerate_group(GroupContext(r, n)))
    return elems, pack_order_keys(elems)


class TestPack:
    def test_shapes_and_content(self):
        elems, (pos, col) = pack(3, 2)
        assert pos.shape == col.shape == (18, 2)
        for e, g in enumerate(elems):
            for v in (1, 2):
                assert pos[e, v - 1] == g.position_of_value(v)
                assert col[e, v - 1] == g.color_of_value(v)


class TestLeqMatrix:
    @pytest.mark.parametrize("impl", IMPLS, ids=lambda m: m.__name__.split(".")[-1])
    @pytest.mark.parametrize("r,n", [(2, 2), (3, 2), (1, 3), (2, 3)])
    def test_matches_scalar(self, impl, r, n):
        elems, (pos, col) = pack(r, n)
        out = impl.leq_matrix(pos, col)
        for i, g in enumerate(elems):
            for j, h in enumerate(elems):
                assert bool(out[i, j]) == leq(g, h)

    def test_backends_agree(self):
        _, (pos, col) = pack(3, 3)
        assert np.array_equal(pyimpl.leq_matrix(pos, col), cyimpl.leq_matrix(pos, col))

    def test_selected_backend_reported(self):
        assert BACKEND in ("cython", "python")


class TestBfs:
    def path(self, k):
        indptr = [0]
        indices = []
        for v in range(k):
            nbrs = [w for w in (v - 1, v + 1) if 0 <= w < k]
            indices.extend(nbrs)
            indptr.append(len(indices))
        return np.array(indptr, dtype=np.int32), np.array(indices, dtype=np.int32)

    @pytest.mark.parametrize("impl", IMPLS, ids=lambda m: m.__name__.split(".")[-1])
    def test_path_graph(self, impl):
        indptr, indices = self.path(5)
        ecc = impl.bfs_eccentricities(indptr, indices)
        assert list(ecc) == [4, 3, 2, 3, 4]

    @pytest.mark.parametrize("impl", IMPLS, ids=lambda m: m.__name__.split(".")[-1])
    def test_disconnected(self, impl):
        indptr = np.array([0, 0, 0], dtype=np.int32)
        indices = np.array([], dtype=np.int32)
        ecc = impl.bfs_eccentricities(indptr, indices)
        assert list(ecc) == [-1, -1]

    @pytest.mark.parametrize("impl", IMPLS, ids=lambda m: m.__name__.split(".")[-1])
    def test_single_vertex(self, impl):
        indptr = np.array([0, 0], dtype=np.int32)
        indices = np.array([], dtype=np.int32)
        assert list(impl.bfs_eccentricities(indptr, indices)) == [0]

    def test_backends_agree_random(self):
        rng = np.random.default_rng(5)
        k = 40
        adj = [set() for _ in range(k)]
        for _ in range(70):
            u, v = rng.integers(0, k, size=2)
            if u != v:
                adj[u].add(int(v))
                adj[v].add(int(u))
        indptr = [0]
        indices = []
        for row in adj:
            indices.extend(sorted(row))
            indptr.append(len(indices))
        indptr = np.array(indptr, dtype=np.int32)
        indices = np.array(indices, dtype=np.int32)
        assert np.array_equal(
            pyimpl.bfs_eccentricities(indptr, indices),
            cyimpl.bfs_eccentricities(indptr, indices),
        )
