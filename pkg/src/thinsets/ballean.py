"""Ball structures, the group ballean at countable scale, and axiom checks.

For a group G and a finite radius F the ball around x is ``Fx ∪ {x}``.
Radii are finite sets; the ordinal radii ``F_n`` are prefixes of the
group's fixed enumeration and form the cofinal chain used by greedy
partitioning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .errors import ForeignElementError
from .groups import Group

__all__ = [
    "Radius",
    "BallStructure",
    "GroupBallean",
    "AxiomReport",
    "ball",
    "star_ball",
    "ball_of_set",
    "symmetrize",
    "compose_radii",
    "ordinal_radius",
    "minimal_ordinal_index",
    "radius_leq",
    "ballean_axioms_check",
]


@dataclass(frozen=True)
class Radius:
    """A finite subset of a group used as a ball radius."""

    group: Group
    elements: frozenset = field(default_factory=frozenset)

    def __init__(self, group: Group, elements: Iterable = ()):
        elements = frozenset(elements)
        for f in elements:
            group.check(f)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "elements", elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __le__(self, other: "Radius") -> bool:
        return self.elements <= other.elements

    def sorted(self) -> list:
        """Elements in enumeration order (deterministic output)."""
        return sorted(self.elements, key=self.group.index_of)

    def __repr__(self) -> str:
        body = ", ".join(self.group.format_element(x) for x in self.sorted())
        return f"Radius({self.group.spec}: {{{body}}})"


def _same_group(x, F: Radius) -> None:
    if not F.group.contains(x):
        raise ForeignElementError(f"{x!r} is not an element of {F.group.spec}")


def ball(x, F: Radius) -> frozenset:
    """``Fx ∪ {x}``."""
    _same_group(x, F)
    G = F.group
    return frozenset([x, *(G._mul(f, x) for f in F.elements)])


def star_ball(x, F: Radius) -> frozenset:
    """``{y : x ∈ B(y, F)} = F⁻¹x ∪ {x}``."""
    _same_group(x, F)
    G = F.group
    return frozenset([x, *(G._mul(G._inv(f), x) for f in F.elements)])


def ball_of_set(points: Iterable, F: Radius) -> frozenset:
    out: set = set()
    for x in points:
        out |= ball(x, F)
    return frozenset(out)


def symmetrize(F: Radius) -> Radius:
    G = F.group
    return Radius(G, F.elements | {G._inv(f) for f in F.elements})


def compose_radii(F1: Radius, F2: Radius) -> Radius:
    """A radius γ with ``B(B(x, F1), F2) ⊆ B(x, γ)`` for every x: ``F2·F1 ∪ F1 ∪ F2``."""
    if F1.group != F2.group:
        raise ForeignElementError("radii belong to different groups")
    G = F1.group
    prod = {G._mul(b, a) for b in F2.elements for a in F1.elements}
    return Radius(G, prod | F1.elements | F2.elements)


def ordinal_radius(G: Group, n: int) -> Radius:
    """``F_n``: the first n enumerated elements."""
    return Radius(G, G.enumerate_prefix(n))


def minimal_ordinal_index(F: Radius) -> int:
    """Smallest n with ``F ⊆ F_n``."""
    if not F.elements:
        return 0
    return 1 + max(F.group.index_of(f) for f in F.elements)


# -- abstract ball structures ------------------------------------------------


class BallStructure:
    """Support plus ball function ``(x, radius) -> finite set``.

    ``points`` is the (finite) support when known; group balleans leave it
    ``None`` because their support is the whole group.  Witness functions for
    the two ballean axioms are optional: without them the checker searches the
    supplied radii.
    """

    def __init__(
        self,
        ball_fn: Callable[[Hashable, object], Iterable],
        points: Sequence | None = None,
        star_witness: Callable | None = None,
        compose_witness: Callable | None = None,
        star_fn: Callable | None = None,
    ):
        self.ball_fn = ball_fn
        self.points = None if points is None else list(points)
        self.star_witness = star_witness
        self.compose_witness = compose_witness
        self._star_fn = star_fn

    def ball(self, x, radius) -> frozenset:
        return frozenset(self.ball_fn(x, radius))

    def star(self, x, radius) -> frozenset:
        if self._star_fn is not None:
            return frozenset(self._star_fn(x, radius))
        if self.points is None:
            raise ValueError("star balls of an abstract structure need a finite support")
        return frozenset(y for y in self.points if x in self.ball(y, radius))


class GroupBallean(BallStructure):
    """The ballean of a group with finite radii."""

    def __init__(self, G: Group):
        self.group = G
        super().__init__(
            ball_fn=ball,
            points=list(G.elements()) if G.order is not None else None,
            star_witness=symmetrize,
            compose_witness=compose_radii,
            star_fn=star_ball,
        )


@dataclass
class AxiomReport:
    passed: bool
    checks: dict
    violation: str | None = None
    connected_on_sample: bool | None = None
    scope: str = "window-verified"

    def __str__(self) -> str:
        status = "pass" if self.passed else f"FAIL: {self.violation}"
        return f"ballean axioms ({self.scope}, {self.checks}): {status}"


def radius_leq(B: BallStructure, r1, r2, sample: Iterable) -> bool:
    """The radius preorder ``r1 ≤ r2`` tested on a finite sample."""
    return all(B.ball(x, r1) <= B.ball(x, r2) for x in sample)


def ballean_axioms_check(B: BallStructure, sample: Iterable, radii: Sequence) -> AxiomReport:
    """Check membership, star interchange and composition on ``sample``.

    Stops at the first violation.  Balls are computed exactly; only the set of
    centres is restricted to the sample.
    """
    sample = list(sample)
    checks = {"membership": 0, "star_interchange": 0, "composition": 0}

    def fail(msg):
        return AxiomReport(False, checks, msg)

    balls = {}
    for r_i, r in enumerate(radii):
        for x in sample:
            b = B.ball(x, r)
            balls[x, r_i] = b
            checks["membership"] += 1
            if x not in b:
                return fail(f"membership: x={x!r} not in its ball of radius #{r_i}")

    def find_witness(pred, witness_fn, *args):
        if witness_fn is not None:
            w = witness_fn(*args)
            if pred(w):
                return w
        for w in radii:
            if pred(w):
                return w
        return None

    for r_i, r in enumerate(radii):
        # B(x, r) ⊆ B*(x, r') and B*(x, r) ⊆ B(x, r'')
        def covers_ball(w, r=r, r_i=r_i):
            return all(balls[x, r_i] <= B.star(x, w) for x in sample)

        def covers_star(w, r=r):
            return all(B.star(x, r) <= B.ball(x, w) for x in sample)

        checks["star_interchange"] += len(sample)
        if find_witness(covers_ball, B.star_witness, r) is None:
            return fail(f"star interchange: no radius r' with B(x,#{r_i}) ⊆ B*(x,r')")
        if find_witness(covers_star, B.star_witness, r) is None:
            return fail(f"star interchange: no radius r' with B*(x,#{r_i}) ⊆ B(x,r')")

    for a_i, a in enumerate(radii):
        for b_i, b in enumerate(radii):
            def contains_composite(w, a_i=a_i, b=b):
                for x in sample:
                    inner = balls[x, a_i]
                    outer = B.ball(x, w)
                    for y in inner:
                        if not B.ball(y, b) <= outer:
                            return False
                return True

            checks["composition"] += len(sample)
            if find_witness(contains_composite, B.compose_witness, a, b) is None:
                return fail(f"composition: no radius covers B(B(x,#{a_i}),#{b_i})")

    connected = None
    if B.points is not None and radii:
        pts = set(sample)
        connected = all(any(y in B.ball(x, r) for r in radii) for x in pts for y in pts)
    return AxiomReport(True, checks, None, connected)
