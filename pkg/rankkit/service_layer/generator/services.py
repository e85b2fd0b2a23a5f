"""
Seeded random band matrices for tests and benchmarks.

Values come from small pools so that ties (and therefore nontrivial admissible
sets) are common. The same arguments always give the same matrix.
"""

import logging
import random
from fractions import Fraction

from rankkit.domain.generator.exceptions import BadParametersError
from rankkit.domain.matrices.models import BandMatrix, Rational
from rankkit.domain.semirings.models import SemiringKind
from rankkit.service_layer.matrices.services import from_triplets

logger = logging.getLogger(__name__)

NUMERATORS = (1, 2, 3, 4)
DENOMINATORS = (1, 2)
FUZZY_DENOMINATOR_MAX = 4


def _draw(rng: random.Random, kind: SemiringKind) -> Rational:
    if kind is SemiringKind.BOOLEAN:
        return Fraction(1)
    if kind is SemiringKind.FUZZY:
        q = rng.randint(1, FUZZY_DENOMINATOR_MAX)
        return Fraction(rng.randint(1, q), q)
    return Fraction(rng.choice(NUMERATORS), rng.choice(DENOMINATORS))


def generate(
    seed: int, n: int, k: int, density: float, semiring: SemiringKind | str
) -> BandMatrix:
    """
    Draw an n×n matrix of half-width k.

    Every band position is populated independently with probability
    ``density``; fuzzy values lie in (0, 1], Boolean values are 1.

    Args:
        seed: Seed of the private random generator
        n: Dimension
        k: Half-width of the band
        density: Probability that a band position is nonzero
        semiring: Kind or its command-line tag, selecting the value distribution

    Returns:
        The generated matrix; equal seeds and parameters give equal matrices

    Raises:
        BadParametersError: If a parameter is out of range or the semiring is unknown
    """
    if n < 0 or k < 0:
        raise BadParametersError(f"n and k must be nonnegative, got n={n}, k={k}")
    if not 0 <= density <= 1:
        raise BadParametersError(f"density must lie in [0, 1], got {density}")
    try:
        kind = SemiringKind(semiring)
    except ValueError as exc:
        raise BadParametersError(f"Unknown semiring {semiring!r}") from exc

    rng = random.Random(seed)
    triplets = []
    for i in range(1, n + 1):
        for j in range(max(1, i - k), min(n, i + k) + 1):
            present = rng.random() < density
            value = _draw(rng, kind)
            if present:
                triplets.append((i, j, value))
    logger.debug("Generated n=%d k=%d %s matrix with %d entries", n, k, kind.value, len(triplets))
    return from_triplets(n, k, triplets)
