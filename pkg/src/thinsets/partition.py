"""Partitioning m-thin sets into thin pieces.

Three algorithms:

* :func:`greedy_thin_partition` colours A along the group enumeration with
  at most m colours so that every part is 1-thin at each scheduled radius
  outside an explicitly reported bounded prefix.
* :func:`uniform_discrete_partition` splits a (U, mu)-discrete set of a
  uniform space into at most mu U-discrete parts via a greedy colouring of
  the V-proximity graph, where V∘V ⊆ U.
* :func:`chain_partition` glues level-wise partitions along an increasing
  chain of finite subgroups, taking from each level only its new points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .ballean import Radius, ball, ball_of_set, compose_radii, ordinal_radius, symmetrize
from .errors import (
    ChainNotCoveringError,
    ChainError,
    InputNotThinError,
    NotASubgroupError,
    PartitionArityError,
    PreconditionError,
    ScheduleInfeasibleError,
)
from .groups import DirectSum, Group, is_subgroup
from .thinness import ThinnessReport, WindowedSubset, is_m_thin_window

__all__ = [
    "PartitionResult",
    "PartitionCheck",
    "SubgroupChain",
    "Entourage",
    "default_schedule",
    "greedy_thin_partition",
    "uniform_discrete_partition",
    "chain_partition",
    "chain_collisions",
    "verify_partition",
]


@dataclass
class PartitionResult:
    """Parts (pairwise disjoint, union = input on the window) plus trace.

    ``bounds`` maps the index of each scheduled radius to the prefix length
    outside of which every part is 1-thin at that radius.
    """

    parts: list
    group: Group | None = None
    reports: dict = field(default_factory=dict)
    bounds: dict = field(default_factory=dict)
    schedule: list = field(default_factory=list)
    trace: dict = field(default_factory=dict)

    @property
    def nonempty_parts(self) -> list:
        return [p for p in self.parts if p]

    def subsets(self, window=None) -> list[WindowedSubset]:
        return [
            WindowedSubset(self.group, window=window, elements=p, label=f"part {i}")
            for i, p in enumerate(self.parts)
        ]

    def bound_for(self, F: Radius) -> int | None:
        for i, R in enumerate(self.schedule):
            if R.elements == F.elements:
                return self.bounds.get(i)
        return None

    def to_records(self) -> list[dict]:
        fmt = self.group.format_element if self.group is not None else repr
        key = self.group.index_of if self.group is not None else repr
        recs = [
            {"color": i, "elements": [fmt(x) for x in sorted(p, key=key)]}
            for i, p in enumerate(self.parts)
        ]
        recs.append({"trace": _jsonable(self.trace, fmt)})
        return recs


def _jsonable(obj, fmt):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v, fmt) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v, fmt) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(_jsonable(v, fmt) for v in obj)
    if isinstance(obj, (int, str, bool, float)) or obj is None:
        return obj
    return fmt(obj)


def default_schedule(G: Group, K: int = 4) -> list[Radius]:
    """Ordinal radii ``F_{2^k}`` for k = 0..K (capped at |G| for finite G)."""
    sizes = sorted({2**k if G.order is None else min(2**k, G.order) for k in range(K + 1)})
    return [ordinal_radius(G, n) for n in sizes]


# -- greedy partition ----------------------------------------------------------


def greedy_thin_partition(
    A: WindowedSubset,
    m: int,
    radius_schedule: Sequence[Radius] | None = None,
    bound: int | None = None,
    window=None,
) -> PartitionResult:
    """Colour ``A ∩ window`` with at most m colours, part by part 1-thin.

    Scale k uses the cumulative symmetric radius ``S_k`` (union of the first k
    scheduled radii, symmetrized, with e) and ``β_k = S_k·S_k ∪ S_k``.  The
    exempt set ``E_k`` holds the A-points with more than m A-points in their
    ``β_k``-ball; it is bounded whenever A is m-thin.  A point's level is the
    largest k with the point outside ``E_k``, and it avoids the colours of
    earlier points inside its ``β_level``-ball.  That ball has at most m
    A-points, so a free colour always exists.  Two same-coloured points in
    one ``S_k``-ball force the later one into ``E_k``, so part violations at
    radius k lie in ``B(E_k, S_k)``; its covering prefix is the reported
    bound.

    ``bound`` is the exempt prefix for the input check.  ``None`` uses the
    smallest prefix that makes every scheduled check consistent on this
    window; an explicit bound that is too small raises
    :class:`InputNotThinError`.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    G = A.group
    schedule = list(radius_schedule) if radius_schedule is not None else default_schedule(G)
    if not schedule:
        raise ValueError("radius schedule is empty")
    pts = A.points(window)
    members = [x for x in pts if A.contains(x)]

    input_reports = []
    for F in schedule:
        rep = is_m_thin_window(A, F, m, window, bound if bound is not None else 0)
        input_reports.append(rep)
        if bound is not None and not rep.consistent:
            raise InputNotThinError(
                f"input is not {m}-thin beyond prefix {bound}: "
                f"|Fx ∩ A| > {m} at x={G.format_element(rep.witness)}",
                witness=rep.witness,
            )
    input_bound = bound if bound is not None else max(r.min_bound for r in input_reports)

    e = Radius(G, [G.identity])
    scales, betas = [], []
    acc = frozenset([G.identity])
    for F in schedule:
        acc = acc | F.elements
        S = symmetrize(Radius(G, acc))
        scales.append(S)
        betas.append(compose_radii(S, S))

    def crowded(a, beta):
        return sum(1 for y in ball(a, beta) if A.contains(y)) > m

    exempt: list[frozenset] = []
    prev: frozenset = frozenset()
    for beta in betas:
        prev = prev | frozenset(a for a in members if crowded(a, beta))
        exempt.append(prev)

    level = {}
    for a in members:
        lv = -1
        for k, E in enumerate(exempt):
            if a in E:
                break
            lv = k
        level[a] = lv

    color: dict = {}
    conflicts: dict = {}
    for a in members:
        lv = level[a]
        if lv < 0:
            forbidden = set()
            nbhd = frozenset([a])
        else:
            nbhd = ball(a, betas[lv])
            forbidden = {color[b] for b in nbhd if b in color}
        conflicts[a] = len(forbidden)
        free = [c for c in range(m) if c not in forbidden]
        if not free:
            raise ScheduleInfeasibleError(
                f"no free colour for {G.format_element(a)} at level {lv}",
                ball=sorted(b for b in nbhd if b in color),
            )
        color[a] = free[0]

    parts = [frozenset(a for a in members if color[a] == c) for c in range(m)]
    parts = [p for p in parts if p]

    bounds = {}
    for k, (S, E) in enumerate(zip(scales, exempt)):
        region = ball_of_set(E, S)
        bounds[k] = 1 + max((G.index_of(x) for x in region), default=-1)

    reports = {}
    for i, P in enumerate(parts):
        sub = WindowedSubset(G, window=A._window if window is None else window, elements=P)
        for k, F in enumerate(schedule):
            reports[i, k] = is_m_thin_window(sub, F, 1, window, min(bounds[k], len(pts)))

    trace = {
        "order": list(members),
        "colors": dict(color),
        "conflicts": conflicts,
        "levels": level,
        "exempt": {k: sorted(E, key=G.index_of) for k, E in enumerate(exempt)},
        "input_bound": input_bound,
        "window": len(pts),
    }
    return PartitionResult(parts, G, reports, bounds, schedule, trace)


# -- uniform-space partition ---------------------------------------------------


class Entourage:
    """A symmetric reflexive relation given by its neighbourhood map ``x -> V(x)``."""

    def __init__(self, neighbors: Callable[[Hashable], Iterable], name: str = ""):
        self._neighbors = neighbors
        self.name = name

    def __call__(self, x) -> frozenset:
        return frozenset(self._neighbors(x))

    def related(self, x, y) -> bool:
        return y in self(x)

    @classmethod
    def interval(cls, r: int) -> "Entourage":
        """``|x - y| <= r`` on the integers."""
        return cls(lambda x: range(x - r, x + r + 1), name=f"|x-y|<={r}")

    @classmethod
    def box(cls, r: int, d: int) -> "Entourage":
        """Sup-norm distance ``<= r`` on Z^d tuples."""
        import itertools

        def nb(x):
            return (
                tuple(a + o for a, o in zip(x, off))
                for off in itertools.product(range(-r, r + 1), repeat=d)
            )

        return cls(nb, name=f"linf<={r}")

    @classmethod
    def from_pairs(cls, points: Iterable, pairs: Iterable) -> "Entourage":
        """Symmetric reflexive closure of explicit pairs on a finite point set."""
        nb: dict = {x: {x} for x in points}
        for x, y in pairs:
            nb.setdefault(x, {x}).add(y)
            nb.setdefault(y, {y}).add(x)
        return cls(lambda x: nb.get(x, {x}), name="explicit")


def uniform_discrete_partition(
    A: Iterable, entourage_U: Entourage, entourage_V: Entourage, mu: int
) -> PartitionResult:
    """Split A into at most mu parts P with ``V(x) ∩ P = {x}`` for x in P.

    Preconditions checked exactly: ``V(V(x)) ⊆ U(x)`` for x in A ∪ V(A), and
    ``|U(x) ∩ A| <= mu`` for every x with ``U(x) ∩ A`` non-empty.  The
    proximity graph joins x, y in A when some z has x, y ∈ V(z); its closed
    neighbourhoods sit inside ``U(x) ∩ A``, so greedy colouring in the input
    order never needs more than mu colours.
    """
    pts = list(dict.fromkeys(A))
    A_set = set(pts)
    U, V = entourage_U, entourage_V

    near = set(pts)
    for x in pts:
        near |= V(x)
    for x in near:
        Ux = U(x)
        for z in V(x):
            for y in V(z):
                if y not in Ux:
                    raise PreconditionError(f"V∘V ⊄ U: ({x!r}, {y!r})", witness=(x, y))
    probe = set()
    for a in pts:
        probe |= U(a)
    for x in sorted(probe, key=repr):
        hit = U(x) & A_set
        if len(hit) > mu:
            raise PreconditionError(
                f"|U({x!r}) ∩ A| = {len(hit)} > {mu}", witness=(x, sorted(hit, key=repr))
            )

    edges: dict = {}
    for x in pts:
        nb = set()
        for z in V(x):
            nb |= V(z) & A_set
        nb.discard(x)
        edges[x] = nb

    color: dict = {}
    for x in pts:
        used = {color[y] for y in edges[x] if y in color}
        c = next(c for c in range(len(used) + 1) if c not in used)
        if c >= mu:
            raise ScheduleInfeasibleError(f"needed more than {mu} colours at {x!r}", ball=sorted(edges[x], key=repr))
        color[x] = c

    n_colors = 1 + max(color.values(), default=-1)
    parts = [frozenset(x for x in pts if color[x] == c) for c in range(n_colors)]
    trace = {
        "order": pts,
        "colors": color,
        "degrees": {x: len(edges[x]) for x in pts},
        "colors_used": n_colors,
    }
    return PartitionResult(parts, None, trace=trace)


# -- subgroup chains ------------------------------------------------------------


class SubgroupChain:
    """Strictly increasing finite subgroups ``{e} = H_0 ⊂ H_1 ⊂ ... ⊂ H_L``."""

    def __init__(self, group: Group, levels: Sequence[Iterable]):
        self.group = group
        self.levels = [frozenset(h) for h in levels]
        if not self.levels or self.levels[0] != {group.identity}:
            raise ChainError("a subgroup chain must start at {e}")
        for i, H in enumerate(self.levels):
            for x in H:
                group.check(x)
            if not is_subgroup(group, H):
                raise NotASubgroupError(f"level {i} ({len(H)} elements) is not a subgroup")
            if i and not self.levels[i - 1] < H:
                raise ChainError(f"level {i} does not strictly contain level {i - 1}")
        self._level_of = {}
        for i, H in enumerate(self.levels):
            for x in H:
                self._level_of.setdefault(x, i)

    @classmethod
    def coordinate_prefixes(cls, D: DirectSum, length: int) -> "SubgroupChain":
        """``G_k`` = elements supported on the first k coordinates, k = 0..length."""
        return cls(D, [D.coordinate_subgroup(k) for k in range(length + 1)])

    @classmethod
    def from_prefixes(cls, G: Group, sizes: Sequence[int]) -> "SubgroupChain":
        """Levels given as enumeration prefixes; rejected unless each is a subgroup."""
        return cls(G, [G.enumerate_prefix(n) for n in sizes])

    def __len__(self) -> int:
        return len(self.levels)

    @property
    def top(self) -> frozenset:
        return self.levels[-1]

    def level_of(self, x) -> int:
        """Least i with x in H_i."""
        try:
            return self._level_of[x]
        except KeyError:
            raise ChainNotCoveringError(
                f"{self.group.format_element(x)} lies outside the chain"
            ) from None

    def covers(self, points: Iterable) -> bool:
        return all(x in self._level_of for x in points)

    def require_cover(self, points: Iterable) -> None:
        for x in points:
            if x not in self._level_of:
                raise ChainNotCoveringError(
                    f"{self.group.format_element(x)} lies outside the top level "
                    f"({len(self.top)} elements)"
                )

    def annulus(self, i: int) -> frozenset:
        """``H_{i+1} \\ H_i``."""
        return self.levels[i + 1] - self.levels[i]


def _greedy_level_partitioner(m: int):
    def split(sub: WindowedSubset, chain: SubgroupChain, lvl: int) -> list:
        G = chain.group
        radii = [Radius(G, chain.levels[j]) for j in range(1, lvl)] or [Radius(G, [G.identity])]
        if not sub.elements:
            return []
        return greedy_thin_partition(sub, m, radii).parts

    return split


def chain_partition(
    A: WindowedSubset,
    chain: SubgroupChain,
    per_level_partitioner: Callable | None = None,
    m: int = 2,
    parts_target: int | None = None,
) -> PartitionResult:
    """Glue level partitions of ``A ∩ H_α`` along the chain.

    ``per_level_partitioner(subset, chain, level)`` returns at most
    ``parts_target`` disjoint sets covering ``A ∩ H_level``; shorter lists are
    padded with empty parts.  Part i collects, from every level α+1, the
    points of ``A_{α+1}(i)`` that are new at that level (outside ``H_α``);
    the identity, if in A, goes to part 0.  When consecutive level partitions
    are nested this is exactly ``A_{α+1}(i) \\ A_α(i)``; the trace records
    whether they were.

    The trace also carries, for every g ≠ e in the top level and every part,
    the collision set ``{x ∈ B_i : gx ∈ B_i}`` split into the part inside
    ``H_{α+1}`` (α = level of g minus one) and the exceptions outside it.
    """
    G = chain.group
    if A.group != G:
        raise ChainError("subset and chain live in different groups")
    parts_target = m if parts_target is None else parts_target
    split = per_level_partitioner or _greedy_level_partitioner(m)
    members = A.members()
    chain.require_cover(members)
    A_set = frozenset(members)

    level_parts: list[list[frozenset]] = []
    for lvl, H in enumerate(chain.levels):
        sub = WindowedSubset(G, window=sorted(H, key=G.index_of), elements=A_set & H)
        got = [frozenset(p) for p in split(sub, chain, lvl)] if sub.elements else []
        if len(got) > parts_target:
            raise PartitionArityError(
                f"level {lvl} split into {len(got)} parts, target is {parts_target}"
            )
        covered = frozenset().union(*got) if got else frozenset()
        if covered != sub.elements or sum(map(len, got)) != len(covered):
            raise PartitionArityError(f"level {lvl} partitioner did not partition A ∩ H_{lvl}")
        level_parts.append(got + [frozenset()] * (parts_target - len(got)))

    parts = [set() for _ in range(parts_target)]
    if G.identity in A_set:
        holder = next(i for i, p in enumerate(level_parts[0]) if G.identity in p)
        parts[holder].add(G.identity)
    nested = {}
    for a in range(len(chain.levels) - 1):
        H_a = chain.levels[a]
        for i in range(parts_target):
            upper, lower = level_parts[a + 1][i], level_parts[a][i]
            parts[i] |= upper - H_a
            nested[a, i] = (upper & H_a) == lower
    parts = [frozenset(p) for p in parts]

    collisions = chain_collisions(parts, chain)
    trace = {
        "level_parts": level_parts,
        "nested": nested,
        "all_nested": all(nested.values()),
        "collisions": collisions,
        "exceptions": sum(len(c["outside"]) for c in collisions.values()),
        "cross_level_pairs": _cross_level_pairs(level_parts, chain),
    }
    return PartitionResult(parts, G, trace=trace)


def chain_collisions(parts: Sequence[frozenset], chain: SubgroupChain) -> dict:
    """For g ≠ e in the top level and each part i: collisions inside/outside ``H_{level(g)}``."""
    G = chain.group
    out = {}
    for g in sorted(chain.top - {G.identity}, key=G.index_of):
        lvl = chain.level_of(g)
        H = chain.levels[lvl]
        for i, P in enumerate(parts):
            C = [x for x in P if G._mul(g, x) in P]
            if C:
                out[g, i] = {
                    "inside": [x for x in C if x in H],
                    "outside": [x for x in C if x not in H],
                }
    return out


def _cross_level_pairs(level_parts, chain) -> int:
    """Count distinct x, y new at level α+1 in part i with gx, gy in ``A_α(i)``.

    The argument for the chain gluing asserts such pairs cannot exist; the
    count is reported rather than assumed.
    """
    G = chain.group
    count = 0
    for a in range(len(chain.levels) - 1):
        for g in chain.annulus(a):
            for i, upper in enumerate(level_parts[a + 1]):
                lower = level_parts[a][i]
                new = [x for x in upper if x not in lower]
                hits = [x for x in new if G._mul(g, x) in lower]
                count += len(hits) * (len(hits) - 1) // 2
    return count


# -- verification ------------------------------------------------------------------


@dataclass
class PartitionCheck:
    disjoint: bool
    covering: bool
    part_reports: list
    problems: list

    @property
    def passed(self) -> bool:
        return self.disjoint and self.covering and all(r.consistent for r in self.part_reports)


def verify_partition(
    A: WindowedSubset,
    result: PartitionResult,
    F: Radius,
    m_part: int,
    window=None,
    bound: int | None = None,
) -> PartitionCheck:
    """Re-check disjointness, covering and per-part thinness, ignoring the trace."""
    problems = []
    seen: set = set()
    disjoint = True
    for i, P in enumerate(result.parts):
        overlap = seen & set(P)
        if overlap:
            disjoint = False
            problems.append(f"part {i} overlaps earlier parts in {len(overlap)} points")
        seen |= set(P)
    target = set(A.members(window))
    covering = seen == target
    if not covering:
        problems.append(f"missing {len(target - seen)}, extra {len(seen - target)}")
    if bound is None:
        bound = result.bound_for(F)
        bound = 0 if bound is None else bound
    w = A._window if window is None else window
    reports: list[ThinnessReport] = []
    for i, P in enumerate(result.parts):
        sub = WindowedSubset(A.group, window=w, elements=P)
        rep = is_m_thin_window(sub, F, m_part, window, min(bound, sub.window_size))
        reports.append(rep)
        if not rep.consistent:
            problems.append(f"part {i} violated at {rep.witness!r}")
    return PartitionCheck(disjoint, covering, reports, problems)
