"""Finite posets with bit-vector subset internals.

Points carry string names for I/O; every algorithm works on dense integer
indices, and subsets of points are packed into Python ints (bit i = point i).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Optional

from .errors import BudgetExceeded, CycleError, EmptyPoset, ForeignPoint

DEFAULT_UPSET_BUDGET = 1 << 20
DEFAULT_TUPLE_BUDGET = 1 << 20


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """An immutable finite partial order over named points.

    up[i] is the bitmask of all j with i <= j (reflexive, so bit i is set);
    down[i] is the dual. Instances should be built through validate(), which
    closes and checks an arbitrary input relation; the constructor trusts
    its arguments.
    """

    __slots__ = ("points", "up", "down", "level_tags", "_index", "_upset_masks")

    def __init__(
        self,
        points: Iterable[str],
        up: Iterable[int],
        level_tags: Optional[Mapping[int, int]] = None,
    ):
        self.points = tuple(points)
        self.up = tuple(up)
        n = len(self.points)
        down = [0] * n
        for i in range(n):
            for j in iter_bits(self.up[i]):
                down[j] |= 1 << i
        self.down = tuple(down)
        self.level_tags = dict(level_tags) if level_tags is not None else None
        self._index = {name: i for i, name in enumerate(self.points)}
        self._upset_masks: Optional[tuple] = None

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.points)) - 1

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ForeignPoint(f"unknown point {name!r}") from None

    def mask_of_names(self, names: Iterable[str]) -> int:
        m = 0
        for name in names:
            m |= 1 << self.index(name)
        return m

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.points == other.points and self.up == other.up

    def __hash__(self) -> int:
        return hash((self.points, self.up))

    def __repr__(self) -> str:
        return f"Poset({len(self.points)} points)"


class Upset:
    """An up-closed subset of a poset, stored as a bitmask.

    The raw constructor trusts mask to be up-closed; use from_members() for
    checked construction. Comparing upsets over different posets raises
    PosetMismatch rather than silently returning False.
    """

    __slots__ = ("parent", "mask")

    def __init__(self, parent: Poset, mask: int):
        self.parent = parent
        self.mask = mask

    @classmethod
    def from_members(cls, parent: Poset, members: Iterable[int]) -> "Upset":
        mask = _mask_of(parent, members)
        if not is_upset_mask(parent, mask):
            raise ValueError("member set is not up-closed")
        return cls(parent, mask)

    @property
    def members(self) -> frozenset:
        return frozenset(iter_bits(self.mask))

    @property
    def names(self) -> tuple:
        return tuple(self.parent.points[i] for i in iter_bits(self.mask))

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Upset):
            return NotImplemented
        _check_same_parent(self, other)
        return self.mask == other.mask

    def __le__(self, other: "Upset") -> bool:
        _check_same_parent(self, other)
        return self.mask & ~other.mask == 0

    def __hash__(self) -> int:
        return hash((self.parent, self.mask))

    def __repr__(self) -> str:
        return "Upset{" + ",".join(self.names) + "}"


def _check_same_parent(u: Upset, v: Upset) -> None:
    from .errors import PosetMismatch

    if u.parent != v.parent:
        raise PosetMismatch("upsets belong to different posets")


def _mask_of(P: Poset, S: Iterable[int]) -> int:
    m = 0
    for i in S:
        if not isinstance(i, int) or i < 0 or i >= P.n:
            raise ForeignPoint(f"point index {i!r} not in poset")
        m |= 1 << i
    return m


def validate(
    points: Iterable[str],
    raw_leq: Iterable,
    level_tags: Optional[Mapping[int, int]] = None,
) -> Poset:
    """Build a Poset from any binary relation on the points.

    The input relation is closed reflexively and transitively, then checked
    for antisymmetry. Pairs are (i, j) meaning point i <= point j, with
    indices into the points list.
    """
    pts = list(points)
    if not pts:
        raise EmptyPoset("a poset needs at least one point")
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate point names")
    n = len(pts)
    up = [1 << i for i in range(n)]
    for i, j in raw_leq:
        if not (0 <= i < n and 0 <= j < n):
            raise ForeignPoint(f"relation pair ({i}, {j}) out of range")
        up[i] |= 1 << j
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if up[i] & bit:
                up[i] |= up[k]
    for i in range(n):
        for j in iter_bits(up[i]):
            if j != i and up[j] >> i & 1:
                raise CycleError(f"{pts[i]} <= {pts[j]} <= {pts[i]}")
    return Poset(pts, up, level_tags)


def up_closure(P: Poset, S: Iterable[int]) -> Upset:
    """Smallest up-closed superset of S."""
    m = 0
    for i in iter_bits(_mask_of(P, S)):
        m |= P.up[i]
    return Upset(P, m)


def down_closure(P: Poset, S: Iterable[int]) -> frozenset:
    """Smallest down-closed superset of S, as a set of point indices."""
    m = 0
    for i in iter_bits(_mask_of(P, S)):
        m |= P.down[i]
    return frozenset(iter_bits(m))


def down_closure_mask(P: Poset, mask: int) -> int:
    m = 0
    for i in iter_bits(mask):
        m |= P.down[i]
    return m


def is_upset_mask(P: Poset, mask: int) -> bool:
    for i in iter_bits(mask):
        if P.up[i] & ~mask:
            return False
    return True


def upset_masks(P: Poset, budget: Optional[int] = None) -> tuple:
    """All up-closed subsets of P as masks, sorted ascending.

    The canonical order is lexicographic on the bit-vector, i.e. plain
    integer order on masks; the empty upset comes first and the full set
    last. Results are cached on the poset.
    """
    cap = DEFAULT_UPSET_BUDGET if budget is None else budget
    if P._upset_masks is not None:
        if len(P._upset_masks) > cap:
            raise BudgetExceeded(
                f"{len(P._upset_masks)} upsets exceed the budget of {cap}"
            )
        return P._upset_masks
    n = P.n
    # decide membership from maximal points downward so that, when a point
    # is considered, everything strictly above it is already decided
    order = sorted(range(n), key=lambda i: (bin(P.up[i]).count("1"), i))
    out = []

    def walk(pos: int, cur: int) -> None:
        if pos == n:
            out.append(cur)
            if len(out) > cap:
                raise BudgetExceeded(f"more than {cap} upsets")
            return
        i = order[pos]
        walk(pos + 1, cur)
        if P.up[i] & ~(1 << i) & ~cur == 0:
            walk(pos + 1, cur | (1 << i))

    walk(0, 0)
    masks = tuple(sorted(out))
    P._upset_masks = masks
    return masks


def enumerate_upsets(P: Poset, budget: Optional[int] = None) -> list:
    """All upsets of P in canonical order, as Upset objects."""
    return [Upset(P, m) for m in upset_masks(P, budget)]


def maximal_points(P: Poset) -> frozenset:
    return frozenset(i for i in range(P.n) if P.up[i] == 1 << i)


def minimal_points(P: Poset) -> frozenset:
    return frozenset(i for i in range(P.n) if P.down[i] == 1 << i)


def covers(P: Poset) -> list:
    """Cover pairs (i, j): i < j with nothing strictly in between."""
    out = []
    for i in range(P.n):
        strict = P.up[i] & ~(1 << i)
        for j in iter_bits(strict):
            between = strict & P.down[j] & ~(1 << j)
            if between == 0:
                out.append((i, j))
    return out


def poset_to_json(P: Poset) -> dict:
    pairs = []
    for i in range(P.n):
        for j in iter_bits(P.up[i] & ~(1 << i)):
            pairs.append([i, j])
    data = {"points": list(P.points), "leq": sorted(pairs)}
    if P.level_tags is not None:
        data["levels"] = {P.points[i]: lvl for i, lvl in sorted(P.level_tags.items())}
    return data


def poset_from_json(data: dict) -> Poset:
    points = data["points"]
    pairs = [tuple(p) for p in data["leq"]]
    tags = None
    if "levels" in data:
        name_to_idx = {name: i for i, name in enumerate(points)}
        tags = {name_to_idx[name]: lvl for name, lvl in data["levels"].items()}
    return validate(points, pairs, tags)


def poset_to_dot(P: Poset) -> str:
    """Hasse diagram in DOT, edges drawn upward (cover relations only)."""
    lines = ["digraph poset {", "  rankdir=BT;"]
    for i, name in enumerate(P.points):
        label = name
        if P.level_tags is not None and i in P.level_tags:
            label = f"{name} (L{P.level_tags[i]})"
        lines.append(f'  "{name}" [label="{label}"];')
    for i, j in covers(P):
        lines.append(f'  "{P.points[i]}" -> "{P.points[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
