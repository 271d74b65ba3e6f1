"""Shared random-instance generators.

Every test seeds its own np.random.default_rng, so the suite is fully
deterministic; these helpers only shape the draws.
"""

import numpy as np
import pytest

import semirad as sr


def random_strict_context(rng, n, floor=0.05):
    """Random strictly positive weight G G* + floor*I."""
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return sr.make_context(g @ g.conj().T + floor * np.eye(n))


def random_operator(rng, ctx):
    """Random dense operator; valid for any strictly positive context."""
    n = ctx.dim
    t = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return sr.make_operator(ctx, t)


def singular_pair(rng, n, r):
    """A rank-r weight together with an operator compatible with it.

    The weight's kernel is spanned by the trailing eigenvectors of a
    random unitary; the operator maps that kernel into itself (block
    upper-right zero in the eigenbasis), which is exactly the condition
    for the adjointability range test to pass.
    """
    q, _ = np.linalg.qr(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
    lam = np.concatenate([rng.uniform(0.2, 2.0, size=r), np.zeros(n - r)])
    a = (q * lam) @ q.conj().T
    a = 0.5 * (a + a.conj().T)
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    blk = x.copy()
    blk[:r, r:] = 0.0
    t = q @ blk @ q.conj().T
    return sr.make_context(a), t


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
