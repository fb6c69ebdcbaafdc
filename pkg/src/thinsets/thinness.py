"""m-thinness on finite windows.

A subset A of a group is m-thin when every finite radius F admits a finite
exceptional set K with ``|Fx ∩ A| <= m`` for x outside K.  On a computer we
can only look at a finite window of the enumeration, so "bounded" here means
"inside the first ``bound`` enumerated elements" and every verdict carries its
``(window, bound)`` pair.  A window can refute thinness but never prove it,
hence the verdict vocabulary ``consistent`` / ``violated``.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .ballean import Radius, ball, ball_of_set, compose_radii, symmetrize
from .errors import CapExceededError, IdentityRadiusError, PreconditionError
from .groups import Group, generate_subgroup

__all__ = [
    "WindowedSubset",
    "ThinnessReport",
    "Lemma1Report",
    "IsolationResult",
    "collision_set",
    "exceptional_set",
    "is_m_thin_window",
    "lemma1_equivalence_check",
    "thin_isolating_subgroup",
    "CONSISTENT",
    "VIOLATED",
]

CONSISTENT = "consistent"
VIOLATED = "violated"


class WindowedSubset:
    """A subset A of ``group`` given by a membership predicate and a finite window.

    ``window`` is either a prefix length of the group's enumeration or an
    explicit list of points.  With ``elements`` the set is finite and explicit;
    the default window is then the shortest enumeration prefix covering it.
    """

    def __init__(
        self,
        group: Group,
        contains: Callable | None = None,
        window: int | Sequence | None = None,
        elements: Iterable | None = None,
        label: str = "",
    ):
        self.group = group
        self.label = label
        self.elements = None
        if elements is not None:
            self.elements = frozenset(elements)
            for x in self.elements:
                group.check(x)
            if contains is None:
                contains = self.elements.__contains__
        if contains is None:
            raise ValueError("need a membership predicate or an explicit element set")
        self._contains = contains
        if window is None:
            if self.elements is None:
                raise ValueError("a predicate-defined subset needs a window")
            window = 1 + max((group.index_of(x) for x in self.elements), default=-1)
        self._window = window

    def contains(self, x) -> bool:
        return bool(self._contains(x))

    __contains__ = contains

    @property
    def window_size(self) -> int:
        return self._window if isinstance(self._window, int) else len(self._window)

    def points(self, window: int | Sequence | None = None) -> list:
        """Window points in enumeration order (or the explicit order given)."""
        w = self._window if window is None else window
        return self.group.enumerate_prefix(w) if isinstance(w, int) else list(w)

    def members(self, window: int | Sequence | None = None) -> list:
        return [x for x in self.points(window) if self._contains(x)]

    def with_window(self, window) -> "WindowedSubset":
        return WindowedSubset(self.group, self._contains, window, self.elements, self.label)

    def restricted_to(self, elements: Iterable, label: str = "") -> "WindowedSubset":
        """Finite explicit subset sharing this window."""
        return WindowedSubset(self.group, None, self._window, elements, label or self.label)

    def __repr__(self) -> str:
        name = self.label or "subset"
        return f"<{name} of {self.group.spec}, window {self.window_size}>"


def _index(G: Group, x, pos: dict | None) -> int:
    if pos is not None and x in pos:
        return pos[x]
    return G.index_of(x)


@dataclass
class ThinnessReport:
    radius: Radius
    m: int
    violations: list
    exceptional: list
    verdict: str
    window: int
    bound: int
    min_bound: int = 0

    @property
    def consistent(self) -> bool:
        return self.verdict == CONSISTENT

    @property
    def witness(self):
        """First violator beyond the bound, if any."""
        G = self.radius.group
        for x in self.violations:
            if G.index_of(x) >= self.bound:
                return x
        return None

    def summary(self) -> str:
        return (
            f"{self.verdict}: m={self.m} |F|={len(self.radius)} window={self.window} "
            f"bound={self.bound} violators={len(self.violations)} "
            f"exceptional={len(self.exceptional)} min_bound={self.min_bound}"
        )


def collision_set(A: WindowedSubset, g, window=None) -> frozenset:
    """``{a ∈ A ∩ window : ga ∈ A}``."""
    G = A.group
    G.check(g)
    if g == G.identity:
        raise IdentityRadiusError("collision sets need g != e")
    return frozenset(a for a in A.members(window) if A.contains(G._mul(g, a)))


def exceptional_set(A: WindowedSubset, F: Radius, m: int, window=None) -> frozenset:
    """``{a ∈ A ∩ window : |B(a, F) ∩ A| > m}``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return frozenset(
        a for a in A.members(window) if sum(1 for y in ball(a, F) if A.contains(y)) > m
    )


def is_m_thin_window(
    A: WindowedSubset, F: Radius, m: int, window=None, bound: int = 0
) -> ThinnessReport:
    """Scan the window for x with ``|Fx ∩ A| > m``.

    The verdict is ``violated`` iff such an x sits at enumeration index
    ``>= bound``.  ``min_bound`` is the smallest bound that would make the
    verdict consistent on this window.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    G = A.group
    pts = A.points(window)
    if bound > len(pts) and isinstance(window if window is not None else A._window, int):
        raise PreconditionError(f"bound {bound} exceeds window {len(pts)}")
    pos = {x: i for i, x in enumerate(pts)} if isinstance(
        window if window is not None else A._window, int
    ) else None
    elems = tuple(F.elements)
    violations = []
    for x in pts:
        if sum(1 for f in elems if A.contains(G._mul(f, x))) > m:
            violations.append(x)
    exceptional = sorted(exceptional_set(A, F, m, window), key=lambda a: _index(G, a, pos))
    idx = [_index(G, x, pos) for x in violations]
    min_bound = 1 + max(idx) if idx else 0
    verdict = VIOLATED if any(i >= bound for i in idx) else CONSISTENT
    return ThinnessReport(F, m, violations, exceptional, verdict, len(pts), bound, min_bound)


@dataclass
class Lemma1Report:
    """Window-scale check of the bounded-exceptional-set criterion.

    ``inner`` is the symmetrized radius S, ``outer`` the composite radius
    S·S ∪ S; ``Y`` collects A-points with more than m neighbours at the outer
    radius and ``Z = B(Y, S)``.  ``naive_*`` fields repeat the computation
    with the original radius in both places, which is not sound in general.
    """

    radius: Radius
    m: int
    inner: Radius
    outer: Radius
    Y: frozenset
    Z: frozenset
    violators_outside: list
    naive_Y: frozenset
    naive_Z: frozenset
    naive_violators_outside: list
    window: int

    @property
    def agreement(self) -> bool:
        return not self.violators_outside


def lemma1_equivalence_check(A: WindowedSubset, F: Radius, m: int, window=None) -> Lemma1Report:
    G = A.group
    pts = A.points(window)
    S = symmetrize(F)
    beta = compose_radii(S, S)
    reach = ball_of_set(pts, S)
    Y = frozenset(
        a for a in reach if A.contains(a) and sum(1 for y in ball(a, beta) if A.contains(y)) > m
    )
    Z = ball_of_set(Y, S)

    def heavy(x):
        return sum(1 for y in ball(x, F) if A.contains(y)) > m

    outside = [x for x in pts if x not in Z and heavy(x)]
    naive_Y = exceptional_set(A, F, m, window)
    naive_Z = ball_of_set(naive_Y, F)
    naive_outside = [x for x in pts if x not in naive_Z and heavy(x)]
    return Lemma1Report(F, m, S, beta, Y, Z, outside, naive_Y, naive_Z, naive_outside, len(pts))


@dataclass
class IsolationResult:
    subgroup: frozenset
    chain: list = field(default_factory=list)
    evaluations: int = 0


def thin_isolating_subgroup(
    A: WindowedSubset,
    S: Iterable,
    m: int,
    cap: int = 2**12,
    subgroup_cap: int | None = None,
) -> IsolationResult:
    """Smallest subgroup H ⊇ S with ``|Hx ∩ A| <= m`` for every x outside H.

    Closure iteration: for each (m+1)-subset X of the current H add every g
    with ``Xg ⊆ A``, then close under the group operations; repeat until
    nothing new appears.  ``cap`` limits the (m+1)-subset evaluations of a
    single round and ``subgroup_cap`` the size of H.  Exceeding either raises
    :class:`CapExceededError` carrying the partial chain.
    """
    G = A.group
    if m < 1:
        raise ValueError("m must be >= 1")
    if G.order is None and subgroup_cap is None:
        raise PreconditionError("infinite groups need an explicit subgroup_cap")
    A_pts = A.members() if A.elements is None else sorted(A.elements, key=G.index_of)
    H = generate_subgroup(G, S, cap=subgroup_cap)
    chain = [H]
    evaluations = 0
    while True:
        rounds = math.comb(len(H), m + 1)
        if evaluations + rounds > cap:
            raise CapExceededError(
                f"{evaluations + rounds} subset evaluations exceed cap {cap}", chain
            )
        evaluations += rounds
        new = set()
        for X in itertools.combinations(sorted(H, key=G.index_of), m + 1):
            x0_inv = G._inv(X[0])
            for a in A_pts:
                g = G._mul(x0_inv, a)
                if g not in new and g not in H and all(A.contains(G._mul(x, g)) for x in X[1:]):
                    new.add(g)
        if not new:
            break
        try:
            H = generate_subgroup(G, H | new, cap=subgroup_cap)
        except CapExceededError as exc:
            raise CapExceededError(str(exc), chain) from None
        chain.append(H)
    if G.order is not None and len(H) == G.order:
        warnings.warn(f"isolating subgroup is all of {G.spec}", stacklevel=2)
    return IsolationResult(H, chain, evaluations)
