# -*- coding: utf-8 -*-

"""Random samples from the four models, for synthetic corpora and validation.

Draws are made in fixed-size blocks. Block i always uses the i-th child of
``numpy.random.SeedSequence(seed)`` with a PCG64 generator, so a sample depends
only on the seed and the size, whether the blocks are generated serially or in
parallel.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import logging

import numpy as np

from . import distributions
from .errors import DomainError
from .ingest import CountDataset
from .zero_inflation import ZeroInflatedModel

logger = logging.getLogger(__name__)

BLOCK_SIZE = 65536
MAX_DRAW = 10**9


@dataclass(frozen=True)
class JournalStructure:
    """How a synthetic corpus is split into journals.

    The model draws are spread uniformly over ``n_journals`` ordinary journals.
    Each of the ``n_magazines`` magazines adds ``magazine_articles`` articles
    that are uncited with probability ``magazine_q`` and otherwise follow the
    base family.
    """

    n_journals: int = 1
    n_magazines: int = 0
    magazine_articles: int = 100
    magazine_q: float = 0.95

    def __post_init__(self):
        if self.n_journals < 1:
            raise DomainError("A corpus needs at least one ordinary journal.")
        if self.n_magazines < 0 or self.magazine_articles < 1:
            raise DomainError("The number and size of magazines must be positive.")
        if not 0.9 <= self.magazine_q <= 1.0:
            raise DomainError(
                f"The magazine probability of an uncited article must be in "
                f"[0.9, 1], not {self.magazine_q}."
            )


@dataclass(frozen=True)
class SyntheticSpec:
    """What to generate: a model, a sample size and a seed."""

    model: ZeroInflatedModel
    n: int
    seed: int = 0
    journals: JournalStructure = None

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"The sample size must be at least 1, not {self.n}.")
        if not 0 <= self.seed < 2**64:
            raise DomainError(f"The seed must fit in 64 unsigned bits: {self.seed}")


def inverse_cdf_draw(u, params):
    """The smallest n with CDF(n) >= u, for each u in (0, 1).

    An exponential search brackets the answer and a bisection finds it. Draws
    are capped at 10**9; any u beyond CDF(10**9) is returned as the cap and
    logged.

    Parameters
    ----------
    u : float or array of float
        Uniform variates in (0, 1).
    params : HookedParams or DlnParams
        The base family.

    Returns
    -------
    int or numpy.ndarray of int64
    """
    scalar = np.ndim(u) == 0
    u = np.atleast_1d(np.asarray(u, dtype=float))
    if np.any((u <= 0.0) | (u >= 1.0)):
        raise DomainError("Uniform variates must lie strictly between 0 and 1.")

    # Compare tails, 1 - u >= sf(n), which keeps precision for u close to 1.
    target = 1.0 - u
    hi = np.ones(u.shape, dtype=np.int64)
    while True:
        short = (distributions.sf(hi, params) > target) & (hi < MAX_DRAW)
        if not short.any():
            break
        hi[short] = np.minimum(hi[short] * 2, MAX_DRAW)

    capped = distributions.sf(hi, params) > target
    if capped.any():
        logger.warning(
            f"{int(capped.sum())} draws were beyond n={MAX_DRAW} and were truncated."
        )

    # Invariant: sf(lo) > target (or lo == 0) and sf(hi) <= target.
    lo = hi // 2
    while True:
        open_ = (hi - lo > 1) & ~capped
        if not open_.any():
            break
        mid = (lo + hi) // 2
        above = np.zeros(u.shape, dtype=bool)
        above[open_] = distributions.sf(mid[open_], params) <= target[open_]
        hi = np.where(open_ & above, mid, hi)
        lo = np.where(open_ & ~above, mid, lo)

    if scalar:
        return int(hi[0])
    return hi


def _draw_block(model, seed_sequence, size):
    """One block of zero-inflated draws from its own stream."""
    rng = np.random.Generator(np.random.PCG64(seed_sequence))
    inflate = rng.random(size)
    u = rng.random(size)
    # random() is in [0, 1); keep u away from 0
    u = np.where(u == 0.0, np.nextafter(0.0, 1.0), u)
    draws = inverse_cdf_draw(u, model.base)
    draws[inflate < float(model.p)] = 1
    return draws


def draw(model, n, seed, workers=1):
    """n shifted draws from a zero-inflated model.

    Parameters
    ----------
    model : ZeroInflatedModel
    n : int
        Number of draws.
    seed : int
        Unsigned 64-bit seed.
    workers : int
        Threads to generate blocks with; the result does not depend on it.

    Returns
    -------
    numpy.ndarray of int64
    """
    n_blocks = -(-n // BLOCK_SIZE)
    children = np.random.SeedSequence(seed).spawn(n_blocks)
    sizes = [min(BLOCK_SIZE, n - i * BLOCK_SIZE) for i in range(n_blocks)]

    if workers > 1 and n_blocks > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(_draw_block, [model] * n_blocks, children, sizes))
    else:
        blocks = [_draw_block(model, c, s) for c, s in zip(children, sizes)]
    return np.concatenate(blocks)


def sample(spec, workers=1):
    """Generate a synthetic dataset.

    Each draw is 1 with probability p and otherwise an inverse-CDF draw from the
    base family. With a journal structure the model draws are assigned to
    journals and the magazine articles are appended after them.

    Parameters
    ----------
    spec : SyntheticSpec
    workers : int
        Threads for block generation.

    Returns
    -------
    CountDataset
        Shifted counts (all >= 1), with journal labels when requested.
    """
    logger.debug(f"Sampling {spec.n} values from {spec.model} with seed {spec.seed}")
    counts = draw(spec.model, spec.n, spec.seed, workers=workers)
    if spec.journals is None:
        return CountDataset(counts=counts)

    structure = spec.journals
    # Journal assignment and magazines use streams after the model blocks.
    n_blocks = -(-spec.n // BLOCK_SIZE)
    extra = np.random.SeedSequence(spec.seed).spawn(n_blocks + 2)
    rng = np.random.Generator(np.random.PCG64(extra[n_blocks]))
    assignment = rng.integers(0, structure.n_journals, size=spec.n)
    width = len(str(structure.n_journals))
    labels = [f"journal-{i + 1:0{width}d}" for i in assignment]

    if structure.n_magazines > 0:
        size = structure.n_magazines * structure.magazine_articles
        magazine_rng = np.random.Generator(np.random.PCG64(extra[n_blocks + 1]))
        uncited = magazine_rng.random(size) < structure.magazine_q
        u = magazine_rng.random(size)
        u = np.where(u == 0.0, np.nextafter(0.0, 1.0), u)
        magazine = inverse_cdf_draw(u, spec.model.base)
        magazine[uncited] = 1
        counts = np.concatenate([counts, magazine])
        width = len(str(structure.n_magazines))
        for i in range(structure.n_magazines):
            labels.extend([f"magazine-{i + 1:0{width}d}"] * structure.magazine_articles)

    return CountDataset(counts=counts, labels=labels)
