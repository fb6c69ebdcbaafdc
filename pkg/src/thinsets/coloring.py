"""Three-colourings of the square G×G with sparse colours on lines.

The goal is a colouring in which every horizontal line ``G×{g}`` has few
points of colour 1, every vertical line ``{g}×G`` few points of colour 2 and
every diagonal ``{(x, gx)}`` (g ≠ e) few points of colour 3.

* :func:`alternating_two_coloring` is the basic device: given two
  partitions (A_n) and (B_n) of a set with finite pairwise intersections it
  colours stage by stage so each A_n meets colour 1 and each B_n meets
  colour 2 in finitely many points.
* :func:`block_three_coloring` applies it to the three pieces of
  ``(H×H) \\ (K×K)`` for a subgroup K of H.
* :func:`chain_three_coloring` glues block colourings along a subgroup
  chain.

For groups of size at least ℵ₂ no such colouring exists (some line always
carries infinitely many points of its forbidden colour); that statement is a
cardinality argument and is recorded in :data:`LARGE_GROUP_NOTE` only.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import ChainNotCoveringError, IntersectionCapError, NotAPartitionError, NotASubgroupError
from .groups import Group
from .partition import SubgroupChain

__all__ = [
    "LARGE_GROUP_NOTE",
    "LineSpec",
    "ColoringTable",
    "LineCensus",
    "alternating_two_coloring",
    "block_three_coloring",
    "chain_three_coloring",
    "line_census",
    "chain_containments",
]

LARGE_GROUP_NOTE = (
    "For |G| >= aleph_2 every colouring of G×G in three colours has a line "
    "carrying infinitely many points of its own forbidden colour; only the "
    "countable-chain construction is computed here."
)

HORIZONTAL, VERTICAL, DIAGONAL = "horizontal", "vertical", "diagonal"
_SPARSE = {HORIZONTAL: 1, VERTICAL: 2, DIAGONAL: 3}


@dataclass(frozen=True)
class LineSpec:
    """``G×{g}``, ``{g}×G`` or ``{(x, gx)}`` according to ``kind``."""

    kind: str
    g: object

    def __post_init__(self):
        if self.kind not in _SPARSE:
            raise ValueError(f"unknown line kind {self.kind!r}")

    @property
    def sparse_color(self) -> int:
        return _SPARSE[self.kind]

    def points(self, G: Group, xs: Iterable) -> list:
        if self.kind == HORIZONTAL:
            return [(x, self.g) for x in xs]
        if self.kind == VERTICAL:
            return [(self.g, x) for x in xs]
        return [(x, G._mul(self.g, x)) for x in xs]


@dataclass
class ColoringTable:
    """Finite map point -> colour, with the stage/region that assigned it."""

    colors: dict = field(default_factory=dict)
    regions: dict = field(default_factory=dict)
    group: Group | None = None
    support: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, p) -> int:
        return self.colors[p]

    def __contains__(self, p) -> bool:
        return p in self.colors

    def assign(self, p, color: int, region: str) -> None:
        if p in self.colors:
            raise NotAPartitionError(f"point {p!r} coloured twice ({self.regions[p]}, {region})")
        self.colors[p] = color
        self.regions[p] = region

    def update(self, other: "ColoringTable") -> None:
        for p, c in other.colors.items():
            self.assign(p, c, other.regions[p])

    def palette(self, region_prefix: str = "") -> set:
        return {c for p, c in self.colors.items() if self.regions[p].startswith(region_prefix)}

    def class_of(self, color: int) -> set:
        return {p for p, c in self.colors.items() if c == color}

    def to_records(self) -> list[dict]:
        fmt = self.group.format_element if self.group is not None else repr
        if self.group is not None:
            key = lambda p: (self.group.index_of(p[0]), self.group.index_of(p[1]))
        else:
            key = repr
        return [
            {"x": fmt(p[0]), "y": fmt(p[1]), "color": self.colors[p], "region": self.regions[p]}
            for p in sorted(self.colors, key=key)
        ]


def _check_partition(X: list, family: Sequence, name: str) -> list[frozenset]:
    blocks = [frozenset(b) for b in family]
    seen: set = set()
    for i, b in enumerate(blocks):
        if seen & b:
            raise NotAPartitionError(f"{name}[{i}] overlaps an earlier block")
        seen |= b
    if seen != set(X):
        missing, extra = set(X) - seen, seen - set(X)
        raise NotAPartitionError(
            f"{name} does not partition the window: {len(missing)} missing, {len(extra)} extra"
        )
    return blocks


def alternating_two_coloring(
    X: Iterable,
    A_family: Sequence[Iterable],
    B_family: Sequence[Iterable],
    intersection_cap: int | None = None,
    region: str = "alt",
) -> ColoringTable:
    """Colour ``A_0`` 2, ``B_0 \\ A_0`` 1, ``A_1 \\ B_0`` 2, ``B_1 \\ (A_0 ∪ A_1)`` 1, ...

    Stage n colours ``A_n \\ (B_0 ∪ ... ∪ B_{n-1})`` with 2 and then
    ``B_n \\ (A_0 ∪ ... ∪ A_n)`` with 1.  Hence colour 1 meets ``A_n`` only
    inside ``B_0 ∪ ... ∪ B_{n-1}`` and colour 2 meets ``B_n`` only inside
    ``A_0 ∪ ... ∪ A_n``.  On a finite window every intersection is finite;
    ``intersection_cap`` optionally bounds ``|A_n ∩ B_m|``.
    """
    X = list(dict.fromkeys(X))
    A = _check_partition(X, A_family, "A_family")
    B = _check_partition(X, B_family, "B_family")
    if intersection_cap is not None:
        for i, a in enumerate(A):
            for j, b in enumerate(B):
                if len(a & b) > intersection_cap:
                    raise IntersectionCapError(
                        f"|A_{i} ∩ B_{j}| = {len(a & b)} exceeds cap {intersection_cap}"
                    )
    table = ColoringTable(support=X)
    A_union: set = set()
    B_union: set = set()
    for n in range(max(len(A), len(B))):
        if n < len(A):
            for p in A[n] - B_union:
                table.assign(p, 2, f"{region}:A{n}")
            A_union |= A[n]
        if n < len(B):
            for p in B[n] - A_union:
                table.assign(p, 1, f"{region}:B{n}")
            B_union |= B[n]
    if len(table) != len(X):
        raise NotAPartitionError("colouring is not total on the window")
    return table


def _window_subgroup_check(G: Group, H: list, K: set) -> None:
    """K is closed under ``x y⁻¹`` whenever the result stays in the window H."""
    H_set = set(H)
    if G.identity not in K:
        raise NotASubgroupError("K does not contain the identity")
    if not K <= H_set:
        raise NotASubgroupError("K is not contained in the window H")
    for x in K:
        for y in K:
            z = G._mul(x, G._inv(y))
            if z in H_set and z not in K:
                raise NotASubgroupError(
                    f"K is not a subgroup: {G.format_element(x)}·{G.format_element(y)}⁻¹ ∉ K"
                )


def block_three_coloring(
    G: Group, H: Sequence, K: Iterable | Callable, tag: str = ""
) -> ColoringTable:
    """Colour ``(H×H) \\ (K×K)`` in three regions.

    With ``H' = H \\ K``:

    * ``H'×H'``: horizontal vs vertical lines, colours {1, 2};
    * ``K×H'``: horizontal lines vs diagonals, colours {1, 3};
    * ``H'×K``: vertical lines vs diagonals, colours {2, 3}.

    Each region is coloured by :func:`alternating_two_coloring`, families
    ordered by the enumeration index of their parameter; the family whose
    lines must avoid a colour plays the role that leaves that colour sparse.
    H is a finite window (e.g. a finite subgroup or an interval of Z) and K is
    a set or predicate; K ∩ H must be closed under quotients inside H.
    """
    H = list(dict.fromkeys(H))
    for h in H:
        G.check(h)
    K_set = {h for h in H if K(h)} if callable(K) else set(K)
    _window_subgroup_check(G, H, K_set)
    Hp = [h for h in H if h not in K_set]
    Kl = [h for h in H if h in K_set]
    H_set = set(H)
    order = {h: i for i, h in enumerate(sorted(H, key=G.index_of))}
    table = ColoringTable(group=G, support=H)
    prefix = f"{tag}:" if tag else ""

    def diagonal_param(p):
        x, y = p
        return G._mul(y, G._inv(x))

    def families(points, key_a, key_b):
        fa: dict = {}
        fb: dict = {}
        for p in points:
            fa.setdefault(key_a(p), []).append(p)
            fb.setdefault(key_b(p), []).append(p)
        return (
            [fa[k] for k in sorted(fa, key=lambda k: (order.get(k, len(order)), G.index_of(k)))],
            [fb[k] for k in sorted(fb, key=lambda k: (order.get(k, len(order)), G.index_of(k)))],
        )

    regions = [
        # name, points, A-family key (sparse in B-colour), B-family key, colour map
        ("HH", [(x, y) for x in Hp for y in Hp], lambda p: p[1], lambda p: p[0], {2: 2, 1: 1}),
        ("KH", [(x, y) for x in Kl for y in Hp], lambda p: p[1], diagonal_param, {2: 3, 1: 1}),
        ("HK", [(x, y) for x in Hp for y in Kl], lambda p: p[0], diagonal_param, {2: 3, 1: 2}),
    ]
    for name, pts, ka, kb, cmap in regions:
        if not pts:
            continue
        fa, fb = families(pts, ka, kb)
        sub = alternating_two_coloring(pts, fa, fb, region=prefix + name)
        for p, c in sub.colors.items():
            table.assign(p, cmap[c], sub.regions[p])
    assert all(p[0] in H_set and p[1] in H_set for p in table.colors)
    return table


def chain_three_coloring(
    G: Group, chain: SubgroupChain | Sequence[Iterable], window: int | None = None
) -> ColoringTable:
    """Colour ``G_L × G_L`` by gluing block colourings of the annuli.

    ``(e, e)`` gets colour 1 and ``(G_{α+1}×G_{α+1}) \\ (G_α×G_α)`` is coloured
    by ``block_three_coloring(G_{α+1}, G_α)``.  ``window`` is an enumeration
    prefix length that the chain's top level must cover.
    """
    if not isinstance(chain, SubgroupChain):
        chain = SubgroupChain(G, chain)
    if chain.group != G:
        raise ChainNotCoveringError("chain belongs to a different group")
    if window is not None:
        chain.require_cover(G.enumerate_prefix(window))
    top = sorted(chain.top, key=G.index_of)
    table = ColoringTable(group=G, support=top)
    table.assign((G.identity, G.identity), 1, "base")
    for a in range(len(chain.levels) - 1):
        H = sorted(chain.levels[a + 1], key=G.index_of)
        table.update(block_three_coloring(G, H, chain.levels[a], tag=f"annulus{a}"))
    expected = len(top) ** 2
    if len(table) != expected:
        raise NotAPartitionError(f"coloured {len(table)} of {expected} pairs")
    return table


@dataclass
class LineCensus:
    line: LineSpec
    counts: dict
    points: dict
    total: int

    @property
    def sparse_points(self) -> list:
        """Points carrying the colour this kind of line should keep sparse."""
        return self.points.get(self.line.sparse_color, [])

    def summary(self, fmt=repr) -> str:
        cells = " ".join(f"c{c}={self.counts.get(c, 0)}" for c in (1, 2, 3))
        return f"{self.line.kind} {fmt(self.line.g)}: {cells} of {self.total}"


def line_census(table: ColoringTable, line: LineSpec, window: Iterable | None = None) -> LineCensus:
    """Exact per-colour counts of the line's points inside the table's domain."""
    G = table.group
    xs = table.support if window is None else list(window)
    pts = [p for p in line.points(G, xs) if p in table]
    counts = Counter(table[p] for p in pts)
    by_color: dict = {}
    for p in pts:
        by_color.setdefault(table[p], []).append(p)
    return LineCensus(line, dict(counts), by_color, len(pts))


def chain_containments(table: ColoringTable, chain: SubgroupChain) -> dict:
    """Exceptions to the three chain containments, for every g ≠ e in the top level.

    For ``g ∈ G_{α+1} \\ G_α``: colour-1 points of ``G×{g}`` lie in
    ``G_{α+1}×{g}``, colour-2 points of ``{g}×G`` in ``{g}×G_{α+1}``, and
    colour-3 points of ``{(x, gx)}`` have ``x ∈ G_{α+1}``.  Returns
    ``{kind: [(g, point), ...]}``; all lists empty means every containment holds.
    """
    G = chain.group
    out = {HORIZONTAL: [], VERTICAL: [], DIAGONAL: []}
    for g in sorted(chain.top - {G.identity}, key=G.index_of):
        block = chain.levels[chain.level_of(g)]
        for kind, coord in ((HORIZONTAL, 0), (VERTICAL, 1), (DIAGONAL, 0)):
            census = line_census(table, LineSpec(kind, g))
            for p in census.sparse_points:
                if p[coord] not in block:
                    out[kind].append((g, p))
    return out
