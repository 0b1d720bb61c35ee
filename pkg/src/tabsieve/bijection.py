"""Free entries of hook-arm tableaux and the multiset correspondence.

For shape (m, n^b) with a (b+2)-letter content, each of the first n columns
omits exactly one letter, and after discounting the omissions forced by the
content the leftover multiset pins the whole tableau down.  The maps here
convert between tableaux and those multisets in both directions; they are
inverse bijections, which the enumeration and sieving modules lean on.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .tableaux import (
    Composition,
    HookArmShape,
    Tableau,
    content as tableau_content,
    validate_ssyt,
)

Multiset = tuple[int, ...]


@dataclass(frozen=True)
class FreeEntryProfile:
    """Per-letter forced counts and the number of entries left free.

    ``gamma[i-1]`` is max(mu_i - n, 0): the copies of letter i that the
    content forces into the arm.  ``beta`` is the number of arm cells whose
    letter can still vary; it may be negative, which signals an infeasible
    family rather than an error.  ``free`` is filled per tableau by ``phi``.
    """

    beta: int
    gamma: tuple[int, ...]
    free: Multiset = ()


def beta_profile(shape: HookArmShape, content: Composition) -> FreeEntryProfile:
    """Forced/free entry counts for the family of the given shape and content.

    The free-entry count has two expressions, from the arm side
    (m - n - sum of the gammas) and from the body-column side
    (n - total column deficit); they must agree, and do whenever the content
    has the right length and total.
    """
    mu = tuple(int(c) for c in content)
    if len(mu) != shape.b + 2:
        raise ValueError(f"content must have length {shape.b + 2}, got {len(mu)}")
    if any(c < 0 for c in mu):
        raise ValueError(f"content parts must be nonnegative: {mu}")
    if sum(mu) != shape.cells:
        raise ValueError(
            f"content sums to {sum(mu)} but the shape has {shape.cells} cells"
        )
    gamma = tuple(max(c - shape.n, 0) for c in mu)
    beta_arm = shape.m - shape.n - sum(gamma)
    beta_body = shape.n - sum(shape.n - c for c in mu if c < shape.n)
    if beta_arm != beta_body:
        raise AssertionError(
            f"free-entry count mismatch: arm {beta_arm} vs body {beta_body}"
        )
    return FreeEntryProfile(beta=beta_arm, gamma=gamma)


def hook_arm_shape_of(t: Tableau) -> HookArmShape:
    """Read (m, n, b) off a tableau, requiring the matching alphabet b+2."""
    rows = t.rows
    if len(rows) < 2:
        raise ValueError("a hook-arm tableau needs at least two rows")
    body_lengths = {len(r) for r in rows[1:]}
    if len(body_lengths) != 1:
        raise ValueError(f"body rows must all have one length, got {sorted(body_lengths)}")
    n = body_lengths.pop()
    b = len(rows) - 1
    if t.alphabet != b + 2:
        raise ValueError(f"alphabet must be b+2 = {b + 2}, got {t.alphabet}")
    return HookArmShape(m=len(rows[0]), n=n, b=b)


def phi(t: Tableau) -> Multiset:
    """The free-entry multiset of a hook-arm tableau, sorted ascending.

    Computed from the letters missing from the first n columns, reduced by
    the omissions the content forces; cross-checked against the equivalent
    description as the arm entries minus the forced ones.
    """
    if not validate_ssyt(t):
        raise ValueError("tableau is not semistandard")
    sh = hook_arm_shape_of(t)
    mu = tableau_content(t)
    full = set(range(1, sh.b + 3))
    counts: Counter[int] = Counter()
    for c in range(sh.n):
        gap = full - {t.rows[r][c] for r in range(sh.b + 1)}
        if len(gap) != 1:
            raise AssertionError(f"column {c} omits {len(gap)} letters, expected 1")
        counts[gap.pop()] += 1
    for letter, count in enumerate(mu, start=1):
        if count < sh.n:
            counts[letter] -= sh.n - count
            if counts[letter] < 0:
                raise AssertionError(f"letter {letter} over-reduced in column multiset")
    result = tuple(sorted(counts.elements()))

    arm = Counter(t.rows[0][sh.n:])
    for letter, count in enumerate(mu, start=1):
        forced = max(count - sh.n, 0)
        arm[letter] -= forced
        assert arm[letter] >= 0, f"arm holds fewer than the forced copies of {letter}"
    assert result == tuple(sorted(arm.elements())), "free-entry descriptions disagree"
    assert all(2 <= x <= sh.b + 2 for x in result), f"free entries out of range: {result}"
    return result


def phi_inverse(shape: HookArmShape, content: Composition, free: Multiset) -> Tableau:
    """The unique semistandard tableau of the family with the given free
    entries.

    Construction: pad the multiset with the content's column deficits to an
    n-element multiset, sort it weakly decreasing, give column k every
    letter except the k-th element, then lay the remaining content weakly
    increasing along the arm.
    """
    profile = beta_profile(shape, content)
    if profile.beta < 0:
        raise ValueError("family is infeasible (negative free-entry count)")
    a = tuple(sorted(int(x) for x in free))
    if len(a) != profile.beta:
        raise ValueError(f"multiset has {len(a)} entries, expected {profile.beta}")
    if any(x < 2 or x > shape.b + 2 for x in a):
        raise ValueError(f"free entries must lie in 2..{shape.b + 2}: {a}")
    mu = tuple(int(c) for c in content)

    padded = list(a)
    for letter, count in enumerate(mu, start=1):
        if count < shape.n:
            padded.extend([letter] * (shape.n - count))
    padded.sort(reverse=True)
    assert len(padded) == shape.n

    columns = [
        [v for v in range(1, shape.b + 3) if v != missing] for missing in padded
    ]
    remaining = list(mu)
    for col in columns:
        for v in col:
            remaining[v - 1] -= 1
    if any(c < 0 for c in remaining):
        raise ValueError("multiset does not define a filling with this content")
    arm: list[int] = []
    for letter, count in enumerate(remaining, start=1):
        arm.extend([letter] * count)

    rows = [tuple(col[0] for col in columns) + tuple(arm)]
    rows.extend(tuple(col[r] for col in columns) for r in range(1, shape.b + 1))
    t = Tableau(rows, shape.alphabet)
    if not validate_ssyt(t) or tableau_content(t) != mu:
        raise ValueError("multiset does not define a semistandard filling")
    return t


def psi(t: Tableau) -> Multiset:
    """The free-entry multiset shifted down by one, over {1, ..., b+1}."""
    return tuple(x - 1 for x in phi(t))


def rotate_multiset(ms: Multiset, lo: int, hi: int, shift: int = 1) -> Multiset:
    """Rotate every element cyclically within the interval [lo, hi]."""
    span = hi - lo + 1
    if span < 1:
        raise ValueError("empty support interval")
    if any(x < lo or x > hi for x in ms):
        raise ValueError(f"elements outside [{lo}, {hi}]: {ms}")
    return tuple(sorted(lo + (x - lo + shift) % span for x in ms))
