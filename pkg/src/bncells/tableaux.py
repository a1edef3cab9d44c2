"""Robinson-Schensted insertion: classic for permutations, signed for windows.

The signed correspondence sends a window to a pair of *bitableaux* — pairs of
standard Young tableaux whose entry sets partition ``{1, ..., n}``:

- the insertion pair ``A = (plus | minus)`` row-inserts the positive window
  values (in window order) into ``plus`` and the absolute values of the
  negative entries into ``minus``;
- the recording pair ``B`` stores the window *positions* at which the
  corresponding boxes were created.

Both maps are bijections (inverse provided), and ``B(w) = A(w^{-1})``.

Text formats: rows of a tableau are ``";"``-separated with space-separated
entries; the two tableaux of a bitableau are joined by ``" | "``; an empty
tableau renders as ``"-"``.

>>> A, B = rs_generalized(SignedPerm((-7, -5, 6, 4, 3, -2, 1)))
>>> A.to_text()
'1;3;4;6 | 2;5;7'
>>> B.to_text()
'3;4;5;7 | 1;2;6'
"""

from __future__ import annotations

import bisect
import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import FalsificationError, InvalidInputError
from .group import SignedPerm, longest_parabolic, mul

Partition = tuple[int, ...]


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------


def check_partition(parts: Sequence[int]) -> Partition:
    p = tuple(parts)
    if any(not isinstance(x, int) or x <= 0 for x in p):
        raise InvalidInputError(f"partition parts must be positive integers: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise InvalidInputError(f"partition parts must be weakly decreasing: {p}")
    return p


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in descending lexicographic order.

    >>> list(partitions(3))
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n == 0:
        yield ()
        return

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


def conjugate_partition(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for row in p if row > c) for c in range(p[0]))


def hook_lengths(p: Partition) -> list[list[int]]:
    conj = conjugate_partition(p)
    return [
        [(p[r] - c) + (conj[c] - r) - 1 for c in range(p[r])] for r in range(len(p))
    ]


def count_standard_tableaux(p: Partition) -> int:
    """Hook-length count of standard fillings of shape ``p``.

    >>> count_standard_tableaux((2, 1))
    2
    """
    total = sum(p)
    denom = 1
    for row in hook_lengths(p):
        for h in row:
            denom *= h
    return math.factorial(total) // denom


# ---------------------------------------------------------------------------
# bipartitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Bipartition:
    """An ordered pair of partitions; sizes add up to the rank.

    Conjugation transposes both components *and* swaps their order.

    >>> Bipartition((2, 1), (1,)).conjugate()
    Bipartition(plus_part=(1,), minus_part=(2, 1))
    """

    plus_part: Partition
    minus_part: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "plus_part", check_partition(self.plus_part))
        object.__setattr__(self, "minus_part", check_partition(self.minus_part))

    @property
    def size(self) -> int:
        return sum(self.plus_part) + sum(self.minus_part)

    def conjugate(self) -> "Bipartition":
        return Bipartition(
            conjugate_partition(self.minus_part), conjugate_partition(self.plus_part)
        )

    def to_text(self) -> str:
        left = ",".join(map(str, self.plus_part)) or "-"
        right = ",".join(map(str, self.minus_part)) or "-"
        return f"({left} | {right})"


def bipartitions(n: int) -> Iterator[Bipartition]:
    """All bipartitions of ``n``, larger positive component first.

    >>> [bp.to_text() for bp in bipartitions(1)]
    ['(1 | -)', '(- | 1)']
    """
    for k in range(n, -1, -1):
        for plus in partitions(k):
            for minus in partitions(n - k):
                yield Bipartition(plus, minus)


def hook_column_bipartition(n: int, q: int) -> Bipartition:
    """The two-column shape ``(1^{n-q} | 1^q)``."""
    if not 0 <= q <= n:
        raise InvalidInputError(f"need 0 <= q <= n, got q={q}, n={n}")
    return Bipartition((1,) * (n - q), (1,) * q)


def count_standard_bitableaux_of_shape(shape: Bipartition) -> int:
    n = shape.size
    k = sum(shape.plus_part)
    return (
        math.comb(n, k)
        * count_standard_tableaux(shape.plus_part)
        * count_standard_tableaux(shape.minus_part)
    )


@functools.lru_cache(maxsize=None)
def count_standard_bitableaux(n: int) -> int:
    """Number of standard bitableaux with ``n`` boxes (hook-length formula).

    >>> [count_standard_bitableaux(n) for n in range(1, 8)]
    [2, 6, 20, 76, 312, 1384, 6512]
    """
    return sum(count_standard_bitableaux_of_shape(bp) for bp in bipartitions(n))


# ---------------------------------------------------------------------------
# standard tableaux
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StandardTableau:
    """Rows strictly increase left-to-right and down each column; distinct entries."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        lengths = tuple(len(r) for r in rows)
        if any(length == 0 for length in lengths):
            raise InvalidInputError("tableau rows must be non-empty")
        check_partition(lengths) if lengths else None
        seen: set[int] = set()
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if x in seen:
                    raise InvalidInputError(f"repeated tableau entry {x}")
                seen.add(x)
                if c > 0 and row[c - 1] >= x:
                    raise InvalidInputError("rows must strictly increase")
                if r > 0 and rows[r - 1][c] >= x:
                    raise InvalidInputError("columns must strictly increase")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def entries(self) -> frozenset[int]:
        return frozenset(x for row in self.rows for x in row)

    def row_reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def to_text(self) -> str:
        if not self.rows:
            return "-"
        return ";".join(" ".join(str(x) for x in row) for row in self.rows)

    @classmethod
    def from_text(cls, text: str) -> "StandardTableau":
        text = text.strip()
        if text == "-" or not text:
            return cls(())
        try:
            rows = tuple(
                tuple(int(tok) for tok in chunk.split()) for chunk in text.split(";")
            )
        except ValueError as exc:
            raise InvalidInputError(f"malformed tableau text {text!r}") from exc
        return cls(rows)


EMPTY_TABLEAU = StandardTableau(())


def _removable_corners(shape: Sequence[int]) -> list[int]:
    return [
        r
        for r in range(len(shape))
        if r == len(shape) - 1 or shape[r] > shape[r + 1]
    ]


def standard_tableaux(
    shape: Partition, entries: Iterable[int] | None = None
) -> list[StandardTableau]:
    """All standard fillings of ``shape`` with the given entry set.

    Entries default to ``1..size``; any distinct integers work (the filling
    is standard relative to their order).

    >>> [t.to_text() for t in standard_tableaux((2, 1))]
    ['1 2;3', '1 3;2']
    """
    shape = check_partition(shape)
    total = sum(shape)
    ent = tuple(range(1, total + 1)) if entries is None else tuple(sorted(entries))
    if len(ent) != total or len(set(ent)) != total:
        raise InvalidInputError("entry set size must match the shape")

    def rec(sh: tuple[int, ...], upto: int) -> list[tuple[tuple[int, ...], ...]]:
        if not sh:
            return [()]
        out = []
        x = ent[upto - 1]
        for r in _removable_corners(sh):
            smaller = tuple(
                length - (1 if i == r else 0) for i, length in enumerate(sh)
            )
            if smaller and smaller[-1] == 0:
                smaller = smaller[:-1]
            for rows in rec(smaller, upto - 1):
                padded = list(rows) + [()] * (len(sh) - len(rows))
                padded[r] = padded[r] + (x,)
                out.append(tuple(padded))
        return out

    result = [StandardTableau(rows) for rows in rec(shape, total)]
    result.sort(key=lambda t: t.row_reading_word())
    return result


# ---------------------------------------------------------------------------
# bitableaux
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Bitableau:
    """A pair of standard tableaux whose entries partition ``{1, ..., size}``."""

    plus: StandardTableau
    minus: StandardTableau

    def __post_init__(self) -> None:
        both = self.plus.entries | self.minus.entries
        total = self.plus.size + self.minus.size
        if len(both) != total or both != frozenset(range(1, total + 1)):
            raise InvalidInputError(
                "bitableau entries must partition {1..size}: "
                f"{self.plus.to_text()} | {self.minus.to_text()}"
            )

    @property
    def shape(self) -> Bipartition:
        return Bipartition(self.plus.shape, self.minus.shape)

    @property
    def size(self) -> int:
        return self.plus.size + self.minus.size

    def row_reading_word(self) -> tuple[int, ...]:
        return self.plus.row_reading_word() + (0,) + self.minus.row_reading_word()

    def to_text(self) -> str:
        return f"{self.plus.to_text()} | {self.minus.to_text()}"

    @classmethod
    def from_text(cls, text: str) -> "Bitableau":
        parts = text.split("|")
        if len(parts) != 2:
            raise InvalidInputError(f"bitableau text needs one '|': {text!r}")
        return cls(
            StandardTableau.from_text(parts[0]), StandardTableau.from_text(parts[1])
        )


def standard_bitableaux(shape: Bipartition) -> list[Bitableau]:
    """All standard bitableaux of the given shape (entries ``1..size``)."""
    n = shape.size
    k = sum(shape.plus_part)
    out = []
    for plus_entries in itertools.combinations(range(1, n + 1), k):
        minus_entries = tuple(sorted(set(range(1, n + 1)) - set(plus_entries)))
        for tp in standard_tableaux(shape.plus_part, plus_entries):
            for tm in standard_tableaux(shape.minus_part, minus_entries):
                out.append(Bitableau(tp, tm))
    out.sort(key=lambda b: b.row_reading_word())
    return out


# ---------------------------------------------------------------------------
# insertion
# ---------------------------------------------------------------------------


def _insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Row-insert ``x``; return the (row, col) of the newly created box."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r, 0
        row = rows[r]
        c = bisect.bisect_left(row, x)
        if c == len(row):
            row.append(x)
            return r, c
        x, row[c] = row[c], x
        r += 1


def _reverse_insert(rows: list[list[int]], r: int) -> int:
    """Undo an insertion whose final box was at the end of row ``r``."""
    x = rows[r].pop()
    if not rows[r]:
        del rows[r]
    for rr in range(r - 1, -1, -1):
        row = rows[rr]
        c = bisect.bisect_left(row, x) - 1
        x, row[c] = row[c], x
    return x


def _freeze(rows: list[list[int]]) -> StandardTableau:
    return StandardTableau(tuple(tuple(r) for r in rows))


def rs_classic(u: Sequence[int]) -> tuple[StandardTableau, StandardTableau]:
    """Classic Robinson-Schensted: insertion and recording tableaux.

    >>> P, Q = rs_classic((3, 1, 2))
    >>> P.to_text(), Q.to_text()
    ('1 2;3', '1 3;2')
    """
    if any(x <= 0 for x in u):
        raise InvalidInputError("classic insertion expects a positive permutation")
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for i, x in enumerate(u, start=1):
        r, _ = _insert(p_rows, x)
        if r == len(q_rows):
            q_rows.append([])
        q_rows[r].append(i)
    return _freeze(p_rows), _freeze(q_rows)


def rs_classic_inverse(P: StandardTableau, Q: StandardTableau) -> tuple[int, ...]:
    """Inverse of :func:`rs_classic`; requires equal shapes."""
    if P.shape != Q.shape:
        raise InvalidInputError("insertion/recording shapes differ")
    p_rows = [list(r) for r in P.rows]
    where = {x: r for r, row in enumerate(Q.rows) for x in row}
    n = P.size
    out = [0] * n
    for j in range(n, 0, -1):
        out[j - 1] = _reverse_insert(p_rows, where[j])
    return tuple(out)


def rs_generalized(w: Sequence[int]) -> tuple[Bitableau, Bitableau]:
    """Signed-permutation insertion (see module docstring for the convention)."""
    pp: list[list[int]] = []
    pm: list[list[int]] = []
    qp: list[list[int]] = []
    qm: list[list[int]] = []
    for i, x in enumerate(w, start=1):
        if x > 0:
            r, _ = _insert(pp, x)
            if r == len(qp):
                qp.append([])
            qp[r].append(i)
        else:
            r, _ = _insert(pm, -x)
            if r == len(qm):
                qm.append([])
            qm[r].append(i)
    return (
        Bitableau(_freeze(pp), _freeze(pm)),
        Bitableau(_freeze(qp), _freeze(qm)),
    )


def rs_generalized_inverse(A: Bitableau, B: Bitableau) -> SignedPerm:
    """Inverse of :func:`rs_generalized`; requires componentwise equal shapes."""
    if A.shape != B.shape:
        raise InvalidInputError("insertion/recording shapes differ")
    ap = [list(r) for r in A.plus.rows]
    am = [list(r) for r in A.minus.rows]
    where_plus = {x: r for r, row in enumerate(B.plus.rows) for x in row}
    where_minus = {x: r for r, row in enumerate(B.minus.rows) for x in row}
    n = A.size
    out = [0] * n
    for j in range(n, 0, -1):
        if j in where_plus:
            out[j - 1] = _reverse_insert(ap, where_plus[j])
        else:
            out[j - 1] = -_reverse_insert(am, where_minus[j])
    return SignedPerm(out)


def shape(w: Sequence[int]) -> Bipartition:
    """Common shape of the insertion and recording bitableaux of ``w``.

    >>> shape((-7, -5, 6, 4, 3, -2, 1)).to_text()
    '(1,1,1,1 | 1,1,1)'
    """
    A, _ = rs_generalized(w)
    return A.shape


# ---------------------------------------------------------------------------
# canonical shape representatives
# ---------------------------------------------------------------------------


def canonical_element(shape_: Bipartition, n: int) -> SignedPerm:
    """A distinguished element whose insertion shape is the conjugate of ``shape_``.

    Constructed as the longest element of the swap-only parabolic whose block
    sizes are the concatenated parts (positive component first), multiplied by
    the longest element of the rank-``q`` sign-change subgroup, where ``q``
    is the size of the positive component.  The resulting shape is verified.

    >>> canonical_element(Bipartition((2,), (2,)), 4).window
    (-2, -1, 4, 3)
    """
    if shape_.size != n:
        raise InvalidInputError(f"bipartition of size {shape_.size} in rank {n}")
    q = sum(shape_.plus_part)
    cuts = set()
    acc = 0
    for part in shape_.plus_part + shape_.minus_part:
        acc += part
        if acc < n:
            cuts.add(acc)
    gens = [i for i in range(1, n) if i not in cuts]
    w_blocks = longest_parabolic(n, gens)
    w_signs = tuple(range(-1, -q - 1, -1)) + tuple(range(q + 1, n + 1))
    out = SignedPerm(mul(w_blocks, w_signs))
    got = shape(out)
    expected = shape_.conjugate()
    if got != expected:
        raise FalsificationError(
            f"canonical element shape mismatch: got {got.to_text()}, "
            f"expected {expected.to_text()}"
        )
    return out


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
