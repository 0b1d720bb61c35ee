"""Core value types: partitions, tableaux, contents and reading words.

Conventions used throughout the package:

* diagrams are drawn in English notation, row 0 on top, rows left-justified,
  row lengths weakly decreasing going down;
* tableau entries are letters from a declared alphabet {1, ..., k}; the
  alphabet size is stored on the tableau because promotion and content
  length depend on k, not on the largest entry actually present;
* every type is an immutable value after construction, safe to share and
  to send between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

Composition = tuple[int, ...]


class ShapeError(ValueError):
    """Rows that do not form a left-justified Young diagram.

    A malformed shape is a construction error, deliberately distinct from a
    well-shaped filling that merely fails the semistandard conditions
    (``validate_ssyt`` returns False for the latter).
    """


class Partition:
    """Weakly decreasing tuple of nonnegative integers.

    Trailing zeros are stripped on construction, so ``Partition((3, 1, 0))``
    equals ``Partition((3, 1))``.  Indexing past the last part returns 0,
    which keeps row/column bookkeeping free of bounds checks.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Sequence[int] = ()) -> None:
        ps = tuple(int(p) for p in parts)
        for a, b in zip(ps, ps[1:]):
            if a < b:
                raise ValueError(f"parts are not weakly decreasing: {ps}")
        if ps and ps[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {ps}")
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        self.parts = ps

    def weight(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(
            tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0]))
        )

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative part index")
        return self.parts[i] if i < len(self.parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(("Partition", self.parts))

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"


@dataclass(frozen=True)
class HookArmShape:
    """The shape (m, n^b): one row of length m above b rows of length n.

    The first n columns ("body" columns) have b+1 cells each; the last
    m - n cells of row 0 form the "arm".
    """

    m: int
    n: int
    b: int

    def __post_init__(self) -> None:
        if self.b < 1 or self.n < 1:
            raise ValueError(f"need n >= 1 and b >= 1, got n={self.n}, b={self.b}")
        if self.m < self.n:
            raise ValueError(f"need m >= n for a partition shape, got m={self.m}, n={self.n}")

    @property
    def cells(self) -> int:
        return self.m + self.n * self.b

    @property
    def alphabet(self) -> int:
        return self.b + 2

    def partition(self) -> Partition:
        return Partition((self.m,) + (self.n,) * self.b)


class Tableau:
    """A filled Young diagram together with its alphabet size.

    The constructor enforces only the diagram shape (ragged rows raise
    ``ShapeError``); the order and alphabet conditions are checked by
    ``validate_ssyt`` so that invalid fillings can be represented and
    rejected explicitly.  Every generator in this package produces
    tableaux that validate.
    """

    __slots__ = ("rows", "alphabet", "_hash")

    def __init__(self, rows: Sequence[Sequence[int]], alphabet: int) -> None:
        rs = tuple(tuple(int(x) for x in row) for row in rows)
        for row in rs:
            if not row:
                raise ShapeError("empty rows are not allowed")
        for above, below in zip(rs, rs[1:]):
            if len(below) > len(above):
                raise ShapeError(
                    f"row lengths must weakly decrease, got {[len(r) for r in rs]}"
                )
        k = int(alphabet)
        if k < 1:
            raise ValueError(f"alphabet size must be >= 1, got {k}")
        self.rows = rs
        self.alphabet = k
        self._hash = hash((rs, k))

    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def to_json_dict(self) -> dict:
        return {"alphabet": self.alphabet, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Tableau":
        if not isinstance(data, dict) or "rows" not in data or "alphabet" not in data:
            raise ValueError('tableau JSON needs keys "alphabet" and "rows"')
        rows = data["rows"]
        if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
            raise ValueError('"rows" must be a list of lists of integers')
        return cls(rows, data["alphabet"])

    def pretty(self) -> str:
        width = max((len(str(x)) for row in self.rows for x in row), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Tableau)
            and self._hash == other._hash
            and self.alphabet == other.alphabet
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Tableau({[list(r) for r in self.rows]!r}, alphabet={self.alphabet})"


def validate_ssyt(t: Tableau) -> bool:
    """True iff rows weakly increase, columns strictly increase and every
    entry lies in {1, ..., alphabet}."""
    k = t.alphabet
    for row in t.rows:
        prev = 1
        for x in row:
            if x < prev or x > k:
                return False
            prev = x
    for above, below in zip(t.rows, t.rows[1:]):
        for c, x in enumerate(below):
            if x <= above[c]:
                return False
    return True


def content(t: Tableau) -> Composition:
    """Letter multiplicities as a tuple of length ``t.alphabet``."""
    counts = [0] * t.alphabet
    for row in t.rows:
        for x in row:
            if x < 1 or x > t.alphabet:
                raise ValueError(f"entry {x} outside alphabet 1..{t.alphabet}")
            counts[x - 1] += 1
    return tuple(counts)


def reading_word(t: Tableau) -> tuple[int, ...]:
    """Entries read row by row, bottom row first, each row left to right."""
    out: list[int] = []
    for row in reversed(t.rows):
        out.extend(row)
    return tuple(out)
