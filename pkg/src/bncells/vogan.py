"""Cell-cycling maps on parabolic subgroups and the classes they generate.

Two parabolic subsets carry a canonical "cycle the recording tableau" map:

- ``"J"`` (the swap generators): insertion on the all-positive window via the
  classic row bumping; the map keeps the insertion tableau and steps the
  recording tableau through the standard tableaux of its shape, cyclically,
  in a chosen total order.
- ``"K"`` (everything but the last swap): same construction one rank down
  using the signed insertion pair, valid once the weight is dominant enough
  for that rank (``b > (n-2) a``).

Each map extends to the whole group along minimal coset representatives:
``x * u  ->  x * map(u)``.  The two extended maps generate a permutation
group of the rank-``n`` elements; its orbits, and the partition-refinement
fixpoint seeded by the gated descent invariant, are the subject of this
module.
"""

from __future__ import annotations

import itertools
from array import array
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .area import in_area_reduced
from .descents import rxi_partition
from .errors import FalsificationError, InvalidInputError, RegimeError
from .group import (
    SignedPerm,
    WeightFunction,
    coset_decompose,
    element_index,
    fix_last_projection,
    group_elements,
    group_order,
    inverse,
    inverse_index_table,
    mul,
)
from .partition import GroupPartition, UnionFind, canonical_ids
from .tableaux import (
    bipartitions,
    canonical_element,
    partitions,
    rs_classic,
    rs_classic_inverse,
    rs_generalized,
    rs_generalized_inverse,
    shape,
    standard_bitableaux,
    standard_tableaux,
)

ORDER_POLICIES = ("rowword", "rowword_desc")
SCHEDULES = ("joint", "alternating")


def _ordered(items: Sequence, order_policy: str) -> tuple:
    """Apply a total-order policy to an enumeration of (bi)tableaux."""
    if order_policy == "rowword":
        return tuple(items)
    if order_policy == "rowword_desc":
        return tuple(reversed(items))
    raise InvalidInputError(
        f"unknown order policy {order_policy!r}; choose from {ORDER_POLICIES}"
    )


# ---------------------------------------------------------------------------
# parabolic index spaces
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def parabolic_elements(subset_id: str, n: int) -> tuple[tuple[int, ...], ...]:
    """The elements of the named parabolic, in its own canonical order.

    Subset "J" is enumerated as all-positive windows in lexicographic order;
    subset "K" reuses the canonical rank-``(n-1)`` enumeration (at ``n = 1``
    the parabolic is trivial).
    """
    if subset_id == "J":
        return tuple(itertools.permutations(range(1, n + 1)))
    if subset_id == "K":
        if n == 1:
            return ((),)
        return group_elements(n - 1)
    raise InvalidInputError(f"unsupported parabolic subset id {subset_id!r}")


@lru_cache(maxsize=None)
def _parabolic_index(subset_id: str, n: int) -> dict[tuple[int, ...], int]:
    return {u: i for i, u in enumerate(parabolic_elements(subset_id, n))}


@dataclass(frozen=True)
class CellularMap:
    """A permutation of a parabolic subgroup that cycles recording fibers.

    ``mapping`` is stored over the parabolic's own index space (see
    :func:`parabolic_elements`); ``cell_order`` names the total order used to
    cycle recording tableaux within each shape.
    """

    subset_id: str
    n: int
    mapping: tuple[int, ...]
    cell_order: str

    def __post_init__(self) -> None:
        if self.subset_id not in ("J", "K"):
            raise InvalidInputError(
                f"unsupported parabolic subset id {self.subset_id!r}"
            )
        if self.cell_order not in ORDER_POLICIES:
            raise InvalidInputError(f"unknown order policy {self.cell_order!r}")
        expected = len(parabolic_elements(self.subset_id, self.n))
        if len(self.mapping) != expected:
            raise InvalidInputError(
                f"mapping covers {len(self.mapping)} elements, parabolic has "
                f"{expected}"
            )
        if sorted(self.mapping) != list(range(expected)):
            raise InvalidInputError("mapping is not a bijection")

    @property
    def parabolic_size(self) -> int:
        return len(self.mapping)

    def apply_index(self, i: int) -> int:
        return self.mapping[i]

    def apply(self, u: Sequence[int]) -> tuple[int, ...]:
        """Image of a parabolic element given in the parabolic's own windows."""
        idx = _parabolic_index(self.subset_id, self.n)[tuple(u)]
        return parabolic_elements(self.subset_id, self.n)[self.mapping[idx]]


# ---------------------------------------------------------------------------
# the two concrete maps
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def build_epsilon(n: int, order_policy: str = "rowword") -> CellularMap:
    """Recording-cycling on the all-positive parabolic via classic insertion.

    For ``u`` with insertion pair ``(P, Q)`` the image has pair
    ``(P, next(Q))`` where ``next`` steps cyclically through the standard
    tableaux of the shape in ``order_policy`` order.
    """
    index = _parabolic_index("J", n)
    images = [0] * len(index)
    for lam in partitions(n):
        tabs = _ordered(standard_tableaux(lam), order_policy)
        succ = {tabs[i]: tabs[(i + 1) % len(tabs)] for i in range(len(tabs))}
        for p in tabs:
            for q in tabs:
                u = rs_classic_inverse(p, q)
                v = rs_classic_inverse(p, succ[q])
                images[index[u]] = index[v]
    return CellularMap("J", n, tuple(images), order_policy)


@lru_cache(maxsize=None)
def build_psi(
    n: int, weight: WeightFunction, order_policy: str = "rowword"
) -> CellularMap:
    """Recording-cycling on the rank-``(n-1)`` parabolic via signed insertion.

    Requires ``b > (n-2) a``: below that the one-rank-down cells are no
    longer the signed-insertion fibers and the construction loses its
    meaning.
    """
    if not weight.slope_exceeds(n - 2):
        raise RegimeError(
            f"recording-cycling on the rank-{n - 1} parabolic needs "
            f"b > {n - 2}*a; got (a, b) = ({weight.a}, {weight.b})"
        )
    elements = parabolic_elements("K", n)
    if len(elements) == 1:
        return CellularMap("K", n, (0,), order_policy)
    index = _parabolic_index("K", n)
    images = [0] * len(elements)
    for shp in bipartitions(n - 1):
        bitabs = _ordered(standard_bitableaux(shp), order_policy)
        succ = {bitabs[i]: bitabs[(i + 1) % len(bitabs)] for i in range(len(bitabs))}
        for a_tab in bitabs:
            for b_tab in bitabs:
                u = rs_generalized_inverse(a_tab, b_tab)
                v = rs_generalized_inverse(a_tab, succ[b_tab])
                images[index[u]] = index[v]
    return CellularMap("K", n, tuple(images), order_policy)


# ---------------------------------------------------------------------------
# left extension
# ---------------------------------------------------------------------------


def left_extend(cmap: CellularMap, w: Sequence[int]) -> SignedPerm:
    """Apply the map through the minimal-coset decomposition of ``w``.

    ``w = x * u`` with ``u`` in the parabolic maps to ``x * cmap(u)``; the
    representative ``x`` is preserved (checked), the length in general is
    not.
    """
    dec = coset_decompose(w, cmap.subset_id)
    if cmap.subset_id == "J":
        part_image = cmap.apply(tuple(dec.part))
    else:
        small = fix_last_projection(dec.part)
        part_image = cmap.apply(small) + (len(w),)
    out = mul(dec.rep, part_image)
    if coset_decompose(out, cmap.subset_id).rep != dec.rep:
        raise FalsificationError(
            f"extension of {cmap.subset_id}-map moved the coset representative "
            f"of {tuple(w)}"
        )
    return SignedPerm(out)


@lru_cache(maxsize=None)
def extended_image_table(cmap: CellularMap) -> array:
    """Index-to-index table of the left extension over the whole group.

    For "K" the canonical enumeration is block-structured along the coset
    representatives, so the table is pure index arithmetic; for "J" the
    representative is the sorted window, applied directly.
    """
    n = cmap.n
    total = group_order(n)
    out = array("i", bytes(4 * total))
    if cmap.subset_id == "K":
        m = cmap.parabolic_size
        for base in range(0, total, m):
            for j in range(m):
                out[base + j] = base + cmap.mapping[j]
        return out
    index = _parabolic_index("J", n)
    perms = parabolic_elements("J", n)
    mapping = cmap.mapping
    for i, w in enumerate(group_elements(n)):
        svals = sorted(w)
        rank = {v: j + 1 for j, v in enumerate(svals)}
        u = tuple(rank[x] for x in w)
        u_img = perms[mapping[index[u]]]
        out[i] = element_index(tuple(svals[j - 1] for j in u_img))
    return out


# ---------------------------------------------------------------------------
# orbits
# ---------------------------------------------------------------------------


def orbits_of_image_tables(
    n: int, tables: Sequence[array], side: str = "right"
) -> GroupPartition:
    """Orbit partition of the group generated by the tabled permutations.

    ``side="right"`` gives the orbits themselves; ``side="left"`` the
    inverse-conjugated partition (``y`` joins ``w`` when ``y^-1`` and
    ``w^-1`` share an orbit).
    """
    if side not in ("right", "left"):
        raise InvalidInputError(f"side must be 'right' or 'left', got {side!r}")
    total = group_order(n)
    uf = UnionFind(total)
    for table in tables:
        for i in range(total):
            uf.union(i, table[i])
    roots = [uf.find(i) for i in range(total)]
    if side == "left":
        inv = inverse_index_table(n)
        roots = [roots[inv[i]] for i in range(total)]
    return GroupPartition(n=n, class_id=canonical_ids(roots))


@lru_cache(maxsize=None)
def xi_orbits(
    n: int,
    weight: WeightFunction,
    side: str = "right",
    order_policy: str = "rowword",
) -> GroupPartition:
    """Orbits of the group generated by both extended cycling maps.

    Precondition ``b > (n-2) a`` (inherited from the rank-down map).
    """
    eps = extended_image_table(build_epsilon(n, order_policy))
    psi = extended_image_table(build_psi(n, weight, order_policy))
    return orbits_of_image_tables(n, (eps, psi), side=side)


# ---------------------------------------------------------------------------
# class refinement
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VoganRun:
    """A partition-refinement run: the seed, every distinct round, the fixpoint."""

    n: int
    weight: WeightFunction
    rounds: tuple[GroupPartition, ...]
    final: GroupPartition

    def __post_init__(self) -> None:
        if not self.rounds:
            raise InvalidInputError("a run records at least the seed partition")
        if not self.final.same_blocks(self.rounds[-1]):
            raise InvalidInputError("final partition must match the last round")

    @property
    def round_count(self) -> int:
        """Number of refinement steps applied after the seed."""
        return len(self.rounds) - 1


def _minimal_index_labels(ids: Sequence[int]) -> tuple[str, ...]:
    first: dict[int, int] = {}
    for i, cid in enumerate(ids):
        if cid not in first:
            first[cid] = i
    return tuple(str(first[c]) for c in range(len(first)))


@lru_cache(maxsize=None)
def vogan_classes(
    n: int,
    weight: WeightFunction,
    order_policy: str = "rowword",
    schedule: str = "joint",
) -> VoganRun:
    """Refine the gated-descent fibers until stable under both extended maps.

    Each joint round splits every class by the pair of classes its two
    images currently lie in; the alternating schedule splits by one map at a
    time (same fixpoint, more rounds).  Final classes are labeled by their
    minimal element index.
    """
    if schedule not in SCHEDULES:
        raise InvalidInputError(
            f"unknown schedule {schedule!r}; choose from {SCHEDULES}"
        )
    eps = extended_image_table(build_epsilon(n, order_policy))
    psi = extended_image_table(build_psi(n, weight, order_policy))
    seed = rxi_partition(n, weight)
    rounds = [seed]
    cur = seed.class_id
    total = group_order(n)
    if schedule == "joint":
        while True:
            keys = [(cur[i], cur[eps[i]], cur[psi[i]]) for i in range(total)]
            new = canonical_ids(keys)
            if list(new) == list(cur):
                break
            rounds.append(GroupPartition(n=n, class_id=new))
            cur = new
    else:
        changed = True
        while changed:
            changed = False
            for table in (eps, psi):
                keys = [(cur[i], cur[table[i]]) for i in range(total)]
                new = canonical_ids(keys)
                if list(new) != list(cur):
                    rounds.append(GroupPartition(n=n, class_id=new))
                    cur = new
                    changed = True
    final = GroupPartition(
        n=n, class_id=cur, labels=_minimal_index_labels(cur)
    )
    return VoganRun(n=n, weight=weight, rounds=tuple(rounds), final=final)


# ---------------------------------------------------------------------------
# admissibility checks
# ---------------------------------------------------------------------------


def _insertion_keys(cmap: CellularMap):
    """Default (right-fiber, left-fiber) keys: insertion and recording sides."""
    elements = parabolic_elements(cmap.subset_id, cmap.n)
    right_keys = []
    left_keys = []
    if cmap.subset_id == "J":
        for u in elements:
            p, q = rs_classic(u)
            right_keys.append(p)
            left_keys.append(q)
    else:
        for u in elements:
            a_tab, b_tab = rs_generalized(u)
            right_keys.append(a_tab)
            left_keys.append(b_tab)
    return right_keys, left_keys


def verify_admissible(
    cmap: CellularMap,
    right_keys: Sequence | None = None,
    left_keys: Sequence | None = None,
) -> tuple[str, ...]:
    """Check the three cell conditions; return violation messages (expect none).

    The map must send each left fiber onto a left fiber, keep every element
    in its right fiber, and walk each right fiber in one full cycle.  By
    default fibers are the insertion/recording fibers of the parabolic; an
    oracle's cell keys can be passed instead.
    """
    size = cmap.parabolic_size
    if size == 1:
        return ()
    if (right_keys is None) != (left_keys is None):
        raise InvalidInputError("pass both oracle key sequences or neither")
    if right_keys is None:
        right_keys, left_keys = _insertion_keys(cmap)
    if len(right_keys) != size or len(left_keys) != size:
        raise InvalidInputError("oracle key sequences must cover the parabolic")
    violations = []

    left_fibers: dict = {}
    for i, key in enumerate(left_keys):
        left_fibers.setdefault(key, set()).add(i)
    fiber_sets = {frozenset(v) for v in left_fibers.values()}
    for key, fiber in left_fibers.items():
        image = frozenset(cmap.mapping[i] for i in fiber)
        if image not in fiber_sets:
            violations.append(
                f"left fiber of {key!r} maps onto a non-fiber set of size "
                f"{len(image)}"
            )

    for i in range(size):
        if right_keys[i] != right_keys[cmap.mapping[i]]:
            violations.append(f"element {i} leaves its right fiber")

    right_fibers: dict = {}
    for i, key in enumerate(right_keys):
        right_fibers.setdefault(key, set()).add(i)
    for key, fiber in right_fibers.items():
        start = min(fiber)
        seen = {start}
        cursor = cmap.mapping[start]
        while cursor != start:
            if cursor in seen or cursor not in fiber:
                break
            seen.add(cursor)
            cursor = cmap.mapping[cursor]
        if seen != fiber:
            violations.append(
                f"right fiber of {key!r} (size {len(fiber)}) is not a single "
                f"cycle (walked {len(seen)})"
            )
    return tuple(violations)


# ---------------------------------------------------------------------------
# the canonical-shape meeting property
# ---------------------------------------------------------------------------


def star_closed_form(z: Sequence[int]) -> bool:
    """O(1) window test for the canonical-shape meeting property.

    Holds unless ``z`` lies in the reduced staircase-shape region with its
    last entry or its inverse's last entry negative.
    """
    if not in_area_reduced(z):
        return True
    return z[-1] > 0 and inverse(z)[-1] > 0


def orbit_meets_canonical(
    z: Sequence[int],
    right_orbits: GroupPartition,
    left_orbits: GroupPartition,
) -> bool:
    """Existential form: does the orbit of ``z`` meet the left orbit of the
    canonical element whose shape matches ``z``?

    ``right_orbits``/``left_orbits`` must be the two sides of
    :func:`xi_orbits` at the same weight.  Exponentially slower than
    :func:`star_closed_form`; used to cross-check it at tiny ranks.
    """
    n = len(z)
    target = canonical_element(shape(z).conjugate(), n)
    rc = right_orbits.class_of(element_index(z))
    lc = left_orbits.class_of(element_index(target))
    return any(
        r == rc and l == lc
        for r, l in zip(right_orbits.class_id, left_orbits.class_id)
    )


# ---------------------------------------------------------------------------
# dumps
# ---------------------------------------------------------------------------


def _window_text(w: Sequence[int]) -> str:
    return ",".join(str(x) for x in w)


def classes_to_tsv(partition: GroupPartition) -> tuple[str, ...]:
    """One ``window<TAB>label`` line per in-domain element, in canonical order."""
    elements = group_elements(partition.n)
    return tuple(
        f"{_window_text(w)}\t{partition.label_of(partition.class_of(i))}"
        for i, w in enumerate(elements)
        if partition.in_domain(i)
    )


def run_summary(run: VoganRun) -> dict:
    """The JSON-ready summary of a refinement run."""
    return {
        "n": run.n,
        "a": run.weight.a,
        "b": run.weight.b,
        "num_classes": run.final.num_classes,
        "round_count": run.round_count,
    }


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
