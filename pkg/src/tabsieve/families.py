"""SSYT families and their exhaustive enumeration.

Two generators: a generic backtracking search over arbitrary shape/content
pairs, which serves as the oracle everything else is checked against, and a
fast generator for hook-arm shapes that walks the free-entry multisets and
inverts each one.  Both return every tableau exactly once, in a
deterministic order, and treat infeasible families as ordinary empty
results.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .bijection import beta_profile, phi_inverse
from .tableaux import Composition, HookArmShape, Partition, Tableau, reading_word


@dataclass(frozen=True)
class SsytFamily:
    """The set of semistandard tableaux of a fixed shape and content.

    The alphabet is the length of the content tuple, zero parts included.
    A weight mismatch between shape and content makes the family empty,
    not invalid.
    """

    shape: Partition
    content: Composition

    def __post_init__(self) -> None:
        mu = tuple(int(c) for c in self.content)
        if not mu:
            raise ValueError("content must have at least one part")
        if any(c < 0 for c in mu):
            raise ValueError(f"content parts must be nonnegative: {mu}")
        object.__setattr__(self, "content", mu)

    @property
    def alphabet(self) -> int:
        return len(self.content)

    @classmethod
    def hook_arm(cls, shape: HookArmShape, content: Composition) -> "SsytFamily":
        return cls(shape.partition(), tuple(content))


def compositions(total: int, length: int, positive: bool = False) -> Iterator[Composition]:
    """All compositions of ``total`` into ``length`` ordered parts, in a
    fixed lexicographic-by-cut order; ``positive`` restricts to parts >= 1."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if positive:
        if total < length:
            return
        for cuts in combinations(range(1, total), length - 1):
            bounds = (0,) + cuts + (total,)
            yield tuple(bounds[i + 1] - bounds[i] for i in range(length))
    else:
        for cuts in combinations_with_replacement(range(total + 1), length - 1):
            bounds = (0,) + cuts + (total,)
            yield tuple(bounds[i + 1] - bounds[i] for i in range(length))


def enumerate_generic(family: SsytFamily) -> list[Tableau]:
    """Every semistandard tableau of the family, sorted by reading word.

    Row-major backtracking; each cell's candidates are clamped below by the
    left and upper neighbours and above by the headroom the rest of its
    column still needs, with letter multiplicities tracked throughout.
    """
    lam = family.shape.parts
    mu = family.content
    k = len(mu)
    if sum(lam) != sum(mu):
        return []
    if not lam:
        return [Tableau((), k)]
    col_len = list(family.shape.conjugate())
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]
    grid = [[0] * w for w in lam]
    counts = list(mu)
    out: list[Tableau] = []

    def fill(i: int) -> None:
        if i == len(cells):
            out.append(Tableau([tuple(row) for row in grid], k))
            return
        r, c = cells[i]
        lo = grid[r][c - 1] if c else 1
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        hi = k - (col_len[c] - 1 - r)
        for v in range(lo, hi + 1):
            if counts[v - 1]:
                counts[v - 1] -= 1
                grid[r][c] = v
                fill(i + 1)
                counts[v - 1] += 1
        grid[r][c] = 0

    fill(0)
    out.sort(key=reading_word)
    return out


def enumerate_hook_arm(shape: HookArmShape, content: Composition) -> list[Tableau]:
    """Every tableau of the hook-arm family, ordered lexicographically by
    free-entry multiset; produced by inverting each candidate multiset."""
    profile = beta_profile(shape, content)
    if profile.beta < 0:
        return []
    return [
        phi_inverse(shape, content, a)
        for a in combinations_with_replacement(range(2, shape.b + 3), profile.beta)
    ]


def hook_arm_families(
    max_cells: int,
    positive_parts: bool = True,
    m_range: tuple[int, int] | None = None,
    n_range: tuple[int, int] | None = None,
    b_range: tuple[int, int] | None = None,
) -> Iterator[tuple[HookArmShape, Composition]]:
    """All (shape, content) pairs with at most ``max_cells`` cells, smallest
    first; the optional ranges are inclusive bounds on m, n and b."""

    def clamp(lo: int, hi: int, rng: tuple[int, int] | None) -> range:
        if rng is not None:
            lo, hi = max(lo, rng[0]), min(hi, rng[1])
        return range(lo, hi + 1)

    for b in clamp(1, max_cells, b_range):
        for n in clamp(1, max_cells, n_range):
            if n * (b + 1) > max_cells:
                break
            for m in clamp(n, max_cells - n * b, m_range):
                shape = HookArmShape(m=m, n=n, b=b)
                for mu in compositions(shape.cells, b + 2, positive=positive_parts):
                    yield shape, mu
