"""Random finite-dimensional modules given as cokernels of maps between projectives."""

import numpy as np

from quivkit import rep as R


def random_module(A, seed: int, max_summands: int = 2):
    rng = np.random.default_rng(seed)
    F, n = A.field, A.nvertices
    while True:
        P = R.direct_sum([R.projective(A, int(x)) for x in rng.integers(0, n, size=rng.integers(1, max_summands + 1))])
        Q = R.direct_sum([R.projective(A, int(x)) for x in rng.integers(0, n, size=rng.integers(1, max_summands + 1))])
        H = R.hom(Q, P)
        M = P if H.dim == 0 else R.cokernel_rep(H.combination([F.random(rng) for _ in range(H.dim)]), Q, P)[0]
        if M.total_dim:
            return M
