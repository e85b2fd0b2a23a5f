from collections.abc import Sequence
from fractions import Fraction

from rankkit.domain.matrices.models import BandMatrix, dense
from rankkit.domain.semirings.models import SemiringKind
from rankkit.service_layer.generator.services import generate
from rankkit.service_layer.matrices.services import from_dense


def band(rows: Sequence[Sequence[int | str | Fraction]], k: int | None = None) -> BandMatrix:
    """BandMatrix from nested rows; the half-width defaults to the smallest that fits."""
    return from_dense(dense([list(row) for row in rows]), k)


def identity(n: int) -> BandMatrix:
    return band([[1 if i == j else 0 for j in range(n)] for i in range(n)], k=0)


def seeded_instances(
    count: int,
    sizes: Sequence[int],
    widths: Sequence[int],
    densities: Sequence[float],
    kind: SemiringKind,
    first_seed: int = 0,
) -> list[tuple[int, BandMatrix]]:
    """``count`` generated matrices cycling through the given sizes, widths and densities."""
    instances = []
    for offset in range(count):
        seed = first_seed + offset
        n = sizes[offset % len(sizes)]
        k = widths[(offset // len(sizes)) % len(widths)]
        density = densities[(offset // (len(sizes) * len(widths))) % len(densities)]
        instances.append((seed, generate(seed, n, k, density, kind)))
    return instances
