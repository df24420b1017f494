import numpy as np
import pytest

from chromablend._kernels import get_kernels
from chromablend.corpus import verification_corpus


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # Pay numba's one-time JIT/cache-load cost up front so timed sweeps
    # measure the algorithms, not compilation.
    kernels = get_kernels()
    adj = np.array([6, 5, 3], dtype=np.int64)  # triangle
    order = np.array([0, 1, 2], dtype=np.int64)
    out = np.empty(3, dtype=np.int64)
    kernels.greedy_clique_size(adj, order)
    kernels.greedy_colouring_size(adj, order)
    kernels.k_colourable(adj, order, 3, out)
    kernels.max_clique_size(adj, 1)
    yield


@pytest.fixture(scope="session")
def corpus():
    return verification_corpus()
