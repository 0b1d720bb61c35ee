"""Jeu-de-taquin promotion, its powers and orbits.

One promotion step works on a tableau with alphabet k as follows.

1. Replace every entry equal to k by a dot.
2. While some dot is not *settled* -- i.e. not contained in the maximal
   top-left-justified sub-Young-diagram consisting of dotted cells -- take
   the westernmost unsettled dot (northernmost on ties) and slide it,
   one cell at a time, until it settles:

   * only an upper neighbour: swap with it;
   * only a left neighbour: swap with it;
   * both neighbours are entries: swap with the upper one when
     left <= upper, with the left one otherwise;
   * a dotted neighbour is never swapped with; the move takes the other
     direction (a dot beside a settled strip in its own row or column is
     already settled, so both neighbours dotted cannot occur unsettled).

3. Replace the dots by 1 and increase every other entry by one.

The operator is defined for every partition shape; it preserves the shape,
preserves semistandardness and rotates the content one step to the right.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from .families import SsytFamily, enumerate_generic
from .tableaux import Tableau, validate_ssyt

_DOT = 0


def _strip_widths(grid: list[list[int]]) -> list[int]:
    """Row widths of the maximal top-left-justified diagram of dots."""
    widths: list[int] = []
    cap = None
    for row in grid:
        lead = 0
        for v in row:
            if v != _DOT:
                break
            lead += 1
        cap = lead if cap is None else min(cap, lead)
        widths.append(cap)
        if cap == 0:
            widths.extend([0] * (len(grid) - len(widths)))
            break
    return widths


@lru_cache(maxsize=1 << 16)
def _promote_once(t: Tableau) -> Tableau:
    k = t.alphabet
    grid = [list(row) for row in t.rows]
    dots: set[tuple[int, int]] = set()
    for r, row in enumerate(grid):
        for c, v in enumerate(row):
            if v == k:
                grid[r][c] = _DOT
                dots.add((r, c))

    while True:
        widths = _strip_widths(grid)
        unsettled = [(c, r) for (r, c) in dots if c >= widths[r]]
        if not unsettled:
            break
        c, r = min(unsettled)
        while c >= _strip_widths(grid)[r]:
            above = grid[r - 1][c] if r > 0 else _DOT
            left = grid[r][c - 1] if c > 0 else _DOT
            if above != _DOT and left == _DOT:
                nr, nc = r - 1, c
            elif left != _DOT and above == _DOT:
                nr, nc = r, c - 1
            elif above != _DOT and left != _DOT:
                nr, nc = (r - 1, c) if left <= above else (r, c - 1)
            else:
                raise RuntimeError(
                    f"promotion slide wedged at {(r, c)}; input was not semistandard"
                )
            grid[r][c] = grid[nr][nc]
            grid[nr][nc] = _DOT
            dots.remove((r, c))
            dots.add((nr, nc))
            r, c = nr, nc

    rows = tuple(
        tuple(1 if v == _DOT else v + 1 for v in row) for row in grid
    )
    return Tableau(rows, k)


def promote(t: Tableau) -> Tableau:
    """One promotion step.  The input must be semistandard."""
    if not validate_ssyt(t):
        raise ValueError("promotion requires a semistandard tableau")
    return _promote_once(t)


def promote_power(t: Tableau, j: int) -> Tableau:
    """Promotion applied j times; j = 0 is the identity."""
    if j < 0:
        raise ValueError("promotion power must be nonnegative")
    if not validate_ssyt(t):
        raise ValueError("promotion requires a semistandard tableau")
    for _ in range(j):
        t = _promote_once(t)
    return t


@dataclass(frozen=True)
class PromotionOrbit:
    """The cycle of ``base`` under repeated application of promotion^step;
    ``members[i+1]`` is promotion^step of ``members[i]``, indices mod order."""

    base: Tableau
    step: int
    members: tuple[Tableau, ...]

    @property
    def order(self) -> int:
        return len(self.members)


def orbit(t: Tableau, step: int, max_size: int = 10**6) -> PromotionOrbit:
    """The orbit of t under promotion^step, starting at t.

    ``max_size`` guards against non-termination: promotion has finite order
    on every family, so exceeding the bound signals an implementation bug
    and fails loudly.
    """
    if step < 1:
        raise ValueError("orbit step must be >= 1")
    if not validate_ssyt(t):
        raise ValueError("orbit requires a semistandard tableau")
    members = [t]
    x = t
    while True:
        for _ in range(step):
            x = _promote_once(x)
        if x == t:
            return PromotionOrbit(base=t, step=step, members=tuple(members))
        members.append(x)
        if len(members) > max_size:
            raise RuntimeError(f"orbit exceeded {max_size} members; promotion is broken")


def promotion_order_on_family(family: SsytFamily, step: int) -> int:
    """Least r >= 1 such that promotion^(step*r) fixes every member of the
    family: the lcm of the members' orbit sizes."""
    tableaux = enumerate_generic(family)
    if not tableaux:
        raise ValueError("promotion order is undefined on an empty family")
    seen: set[Tableau] = set()
    order = 1
    for t in tableaux:
        if t in seen:
            continue
        o = orbit(t, step)
        seen.update(o.members)
        order = lcm(order, o.order)
    return order
