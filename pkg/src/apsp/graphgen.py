"""Seeded random weighted digraph generator, G = f(v, rho, alpha).

Each ordered pair (i,j), i != j, gets its own inclusion probability
clamp(rho * u_ij, 0, 1) from a uniform draw u_ij, then an independent
Bernoulli draw decides the edge; included edges get an integer weight
uniform on [1, alpha].  The two-stage scheme makes the expected directed
density rho/2.

Reproducibility contract: the PRNG is numpy's Philox counter-based bit
generator keyed with the seed.  The stream is consumed as three full v x v
row-major blocks — probability uniforms, then presence uniforms, then
weights — with diagonal positions drawn and discarded.  Identical
(v, rho, alpha, seed) therefore yield an identical edge list on any
platform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Graph, ParameterError


@dataclass(frozen=True)
class GenParams:
    """Generator parameters; rho must already be normalized to [0,1]."""

    v: int
    rho: float
    alpha: int
    seed: int

    def __post_init__(self):
        if not isinstance(self.v, int) or self.v < 1:
            raise ParameterError(f"v must be an integer >= 1, got {self.v!r}")
        if not 0.0 <= self.rho <= 1.0:
            raise ParameterError(f"rho must lie in [0,1] after normalization, got {self.rho!r}")
        if not isinstance(self.alpha, int) or self.alpha < 1:
            raise ParameterError(f"alpha must be an integer >= 1, got {self.alpha!r}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise ParameterError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")


def normalize_rho(value: float) -> float:
    """Map a density scale given as a real in [0,1] or in percent to [0,1].

    Values in [0,1] pass through; values in (1,100] are read as percentage
    points.  Anything negative or above 100 is rejected.
    """
    v = float(value)
    if v < 0.0 or v > 100.0:
        raise ParameterError(f"rho must lie in [0,1] or (1,100] percent, got {value!r}")
    if v <= 1.0:
        return v
    return v / 100.0


def generate(params: GenParams) -> Graph:
    """Draw a graph; pure function of (v, rho, alpha, seed)."""
    v = params.v
    rng = np.random.Generator(np.random.Philox(params.seed))
    prob_u = rng.random((v, v))
    presence_u = rng.random((v, v))
    weights = rng.integers(1, params.alpha, size=(v, v), endpoint=True)
    include = presence_u < np.clip(params.rho * prob_u, 0.0, 1.0)
    np.fill_diagonal(include, False)
    rows, cols = np.nonzero(include)  # row-major, so the edge list is sorted
    edges = [(int(i), int(j), int(weights[i, j])) for i, j in zip(rows, cols)]
    return Graph(v, edges)


def density(g: Graph) -> float:
    """Directed density m / (n(n-1)); 0 for graphs that cannot have edges."""
    g.validate()
    if g.n < 2:
        return 0.0
    return g.n_edges / (g.n * (g.n - 1))
