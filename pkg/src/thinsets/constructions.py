"""Finite-scale versions of three 2-thin sets built from pair-indexed elements.

* :func:`bergman_set` lives in ``H×K``: for each indexed pair (a, b) of H it
  takes the triple ``(e, x), (a, x), (b, x)`` with ``x = x_{a,b}`` in K.
* :func:`quadratic_thin_set` lives in ``K ⊕ Q^d``: for each indexed pair it
  takes ``x_{a,b} + k·a + k²·b`` for k = 0..m.
* :func:`direct_sum_set` embeds several such sets into the direct sum of
  their ambient groups.

The infinite constructions index a *thin* set X of K by pairs.  At finite
scale X is a seeded random choice certified by an audit: injective, avoiding
the identity, and Sidon-like (all quotients ``x_p x_q⁻¹``, p ≠ q, distinct),
so that no nontrivial translate of X meets X twice.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DegenerateArgumentError,
    GenericityError,
    IndexingCollisionError,
    RepeatedIndexError,
)
from .groups import Group, Product, RationalVectors
from .thinness import WindowedSubset

__all__ = [
    "PairIndexing",
    "ConstructionOutput",
    "TranslateCount",
    "CollisionReport",
    "nondegenerate_pairs",
    "generic_indexing",
    "genericity_audit",
    "bergman_set",
    "count_translates_in",
    "sample_rational_pairs",
    "quadratic_thin_set",
    "pair_collision_set",
    "explain_collisions",
    "vandermonde_solve",
    "difference_identity_check",
    "direct_sum_set",
    "summand_label",
]

ORDERED, UNORDERED = "ordered", "unordered"


@dataclass
class PairIndexing:
    """Injective map from pairs of H-elements to elements of K.

    In unordered mode ``key(a, b) == key(b, a)``; keys are stored with the
    members in enumeration order of H (or as given for infinite H).
    """

    H: Group
    K: Group
    mode: str
    values: dict
    seed: int | None = None
    strategy: str = "rejection"
    audit: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.mode not in (ORDERED, UNORDERED):
            raise ValueError(f"mode must be {ORDERED!r} or {UNORDERED!r}")
        seen: dict = {}
        for p, x in self.values.items():
            if x in seen:
                raise IndexingCollisionError(f"pairs {seen[x]!r} and {p!r} share the value {x!r}")
            seen[x] = p

    def key(self, a, b) -> tuple:
        if self.mode == ORDERED:
            return (a, b)
        return (a, b) if self._rank(a) <= self._rank(b) else (b, a)

    def _rank(self, x):
        if self.H.order is not None:
            return self.H.index_of(x)
        return repr(x)

    def __getitem__(self, pair) -> object:
        return self.values[self.key(*pair)]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def pairs(self) -> list:
        return list(self.values)

    def manifest(self) -> dict:
        return {
            "H": self.H.spec,
            "K": self.K.spec,
            "mode": self.mode,
            "seed": self.seed,
            "strategy": self.strategy,
            "pairs": len(self.values),
        }


@dataclass
class ConstructionOutput:
    """Elements of a constructed set with their provenance.

    ``provenance`` maps each element to the list of ``(pair, role)`` that
    produced it; a list longer than one records a coincidence.
    """

    group: Group
    elements: list
    provenance: dict
    manifest: dict = field(default_factory=dict)
    coincidences: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.provenance

    def as_subset(self, label: str = "") -> WindowedSubset:
        return WindowedSubset(self.group, window=list(self.elements), elements=self.elements, label=label)


def nondegenerate_pairs(H_elements: Sequence, identity, mode: str) -> list:
    """Pairs (a, b) with a ≠ b and both different from the identity."""
    pts = [h for h in H_elements if h != identity]
    if mode == ORDERED:
        return [(a, b) for a in pts for b in pts if a != b]
    return list(itertools.combinations(pts, 2))


def _sample_space(K: Group, space: int | None) -> list:
    if K.order is not None:
        return K.enumerate_prefix(K.order)
    return K.enumerate_prefix(space or 10**5)


def genericity_audit(K: Group, values: Iterable) -> dict:
    """Injectivity, identity avoidance and distinct quotients ``x y⁻¹`` (x ≠ y)."""
    vals = list(values)
    report = {
        "size": len(vals),
        "injective": len(set(vals)) == len(vals),
        "avoids_identity": K.identity not in vals,
        "quotient_collisions": [],
    }
    seen: dict = {}
    for x, y in itertools.permutations(vals, 2):
        q = K._mul(x, K._inv(y))
        if q in seen:
            report["quotient_collisions"].append((seen[q], (x, y)))
        else:
            seen[q] = (x, y)
    report["sidon"] = not report["quotient_collisions"]
    report["passed"] = report["injective"] and report["avoids_identity"] and report["sidon"]
    return report


def generic_indexing(
    H: Group,
    K: Group,
    mode: str = ORDERED,
    seed: int = 0,
    pairs: Sequence | None = None,
    strategy: str = "rejection",
    space: int | None = None,
) -> PairIndexing:
    """Seeded indexing of ``pairs`` (default: all nondegenerate pairs of finite H).

    ``rejection`` redraws any value that would break the audit, so it only
    fails when K is too small; ``plain`` draws a uniform injective sample and
    relies on the audit alone.  A failed audit raises :class:`GenericityError`.
    """
    if pairs is None:
        if H.order is None:
            raise ValueError("infinite H needs an explicit pair list")
        pairs = nondegenerate_pairs(H.enumerate_prefix(H.order), H.identity, mode)
    rng = random.Random(seed)
    pool = [k for k in _sample_space(K, space) if k != K.identity]
    probe = PairIndexing(H, K, mode, {}, seed, strategy)
    keys = list(dict.fromkeys(probe.key(*p) for p in pairs))
    if strategy == "plain":
        if len(keys) > len(pool):
            raise GenericityError(f"K window has {len(pool)} elements, need {len(keys)}")
        chosen = rng.sample(pool, len(keys))
    elif strategy == "rejection":
        chosen, used, quotients = [], set(), set()
        for _ in keys:
            for _attempt in range(10_000):
                x = pool[rng.randrange(len(pool))]
                if x in used:
                    continue
                new_q = []
                for y in chosen:
                    new_q += [K._mul(x, K._inv(y)), K._mul(y, K._inv(x))]
                if len(set(new_q)) == len(new_q) and not quotients.intersection(new_q):
                    break
            else:
                raise GenericityError(f"no generic value found after 10000 draws (seed {seed})")
            chosen.append(x)
            used.add(x)
            quotients.update(new_q)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    audit = genericity_audit(K, chosen)
    if not audit["passed"]:
        raise GenericityError(
            f"seed {seed} is not generic: {len(audit['quotient_collisions'])} quotient collisions",
            audit,
        )
    return PairIndexing(H, K, mode, dict(zip(keys, chosen)), seed, strategy, audit)


def _record(prov: dict, order: list, x, origin) -> None:
    if x in prov:
        prov[x].append(origin)
    else:
        prov[x] = [origin]
        order.append(x)


def bergman_set(H: Group, K: Group, indexing: PairIndexing) -> ConstructionOutput:
    """``{(e, x), (a, x), (b, x)}`` for every indexed pair, x = x_{a,b}, inside H×K."""
    if indexing.H != H or indexing.K != K:
        raise ValueError("indexing was built for different groups")
    G = Product(H, K)
    prov: dict = {}
    order: list = []
    for (a, b), x in indexing.values.items():
        if a == b or H.identity in (a, b):
            raise DegenerateArgumentError(f"degenerate pair {(a, b)!r}")
        for role, h in (("base", H.identity), ("a-shift", a), ("b-shift", b)):
            _record(prov, order, (h, x), ((a, b), role))
    clashes = [(x, o) for x, o in prov.items() if len(o) > 1]
    if clashes:
        raise IndexingCollisionError(f"{len(clashes)} elements have several origins: {clashes[:3]!r}")
    manifest = {"construction": "bergman", **indexing.manifest(), "exclusions": "a != b, a != e, b != e"}
    return ConstructionOutput(G, order, prov, manifest)


@dataclass
class TranslateCount:
    F: tuple
    count: int
    witnesses: list
    method: str


def count_translates_in(F: Iterable, A: ConstructionOutput, exhaustive: bool = False) -> TranslateCount:
    """All g with ``Fg ⊆ A``.

    With e ∈ F every such g lies in A, so scanning A is exact; ``exhaustive``
    scans every element of a finite ambient group instead (the brute-force
    oracle).
    """
    G = A.group
    F = tuple(dict.fromkeys(F))
    for f in F:
        G.check(f)
    if G.identity not in F:
        raise DegenerateArgumentError("F must contain the identity (translate it first)")
    if exhaustive:
        if G.order is None:
            raise ValueError("exhaustive scan needs a finite ambient group")
        if isinstance(G, Product):
            candidates = itertools.product(*(f.enumerate_prefix(f.order) for f in G.factors))
        else:
            candidates = G.elements()
        method = "exhaustive"
    else:
        candidates = A.elements
        method = "candidates"
    wit = [g for g in candidates if all(G._mul(f, g) in A.provenance for f in F)]
    return TranslateCount(F, len(wit), sorted(wit, key=repr), method)


# -- quadratic sets ---------------------------------------------------------------


def sample_rational_pairs(d: int, n: int, seed: int = 0, height: int = 3) -> list:
    """n distinct pairs (a, b) of vectors in Q^d, never both zero."""
    rng = random.Random(seed)
    Q = RationalVectors(d)

    def vec():
        return tuple(Fraction(rng.randint(-height, height), rng.randint(1, height)) for _ in range(d))

    out: list = []
    seen: set = set()
    while len(out) < n:
        a, b = vec(), vec()
        if a == Q.identity and b == Q.identity:
            continue
        if (a, b) not in seen:
            seen.add((a, b))
            out.append((a, b))
    return out


def _lin(Q: RationalVectors, a, b, s, t):
    """``s·a + t·b``."""
    return Q._mul(Q.scale(s, a), Q.scale(t, b))


def quadratic_thin_set(
    H: RationalVectors, K: Group, m: int, indexing: PairIndexing
) -> ConstructionOutput:
    """``{x_{a,b} + k·a + k²·b : k = 0..m}`` in ``K ⊕ H`` (elements ``(x, h)``)."""
    if m < 2:
        raise ValueError("m must be >= 2")
    if not isinstance(H, RationalVectors):
        raise TypeError("H must be a rational vector group")
    G = Product(K, H)
    prov: dict = {}
    order: list = []
    for (a, b), x in indexing.values.items():
        if a == H.identity and b == H.identity:
            raise DegenerateArgumentError("the pair (0, 0) is excluded")
        for k in range(m + 1):
            _record(prov, order, (x, _lin(H, a, b, k, k * k)), ((a, b), k))
    coincidences = [(x, o) for x, o in prov.items() if len(o) > 1]
    manifest = {"construction": "quadratic", "m": m, **indexing.manifest(), "exclusions": "(a,b) != (0,0)"}
    return ConstructionOutput(G, order, prov, manifest, coincidences)


def vandermonde_solve(i: int, j: int, k: int, x2, y2, m: int | None = None) -> tuple:
    """The unique (a, b) with ``(j-i)a + (j²-i²)b = x2`` and ``(k-i)a + (k²-i²)b = y2``.

    Works coordinatewise over Q; the determinant is ``(j-i)(k-i)(k-j)``.
    """
    if len({i, j, k}) < 3:
        raise RepeatedIndexError(f"indices {i}, {j}, {k} are not pairwise distinct")
    if m is not None and not all(0 <= t <= m for t in (i, j, k)):
        raise ValueError(f"indices must lie in 0..{m}")
    if len(x2) != len(y2):
        raise ValueError("x2 and y2 have different dimensions")
    det = (j - i) * (k - i) * (k - j)
    p, q = j * j - i * i, k * k - i * i
    a = tuple(Fraction(u * q - v * p, det) for u, v in zip(x2, y2))
    b = tuple(Fraction((j - i) * v - (k - i) * u, det) for u, v in zip(x2, y2))
    return a, b


def difference_identity_check(A: ConstructionOutput, pair: tuple, k: int, l: int) -> bool:
    """Check ``(x + ka + k²b) - (x + la + l²b) = (k-l)a + (k²-l²)b`` exactly."""
    if k == l:
        raise RepeatedIndexError("k and l must differ")
    G = A.group
    K, H = G.factors
    a, b = pair
    by_role = {}
    for elem, origins in A.provenance.items():
        for p, role in origins:
            if p == pair:
                by_role[role] = elem
    if k not in by_role or l not in by_role:
        raise KeyError(f"pair {pair!r} does not produce indices {k} and {l}")
    diff = G._mul(by_role[k], G._inv(by_role[l]))
    expected = (K.identity, _lin(H, a, b, k - l, k * k - l * l))
    return diff == expected


@dataclass
class CollisionReport:
    x: object
    y: object
    elements: list
    cap: int | None

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def within_cap(self) -> bool:
        return self.cap is None or self.size <= self.cap


def pair_collision_set(A: ConstructionOutput, x, y) -> CollisionReport:
    """``{a ∈ A : a·x ∈ A and a·y ∈ A}``, exact over the finite set A.

    For quadratic sets and arguments with zero K-component, each collision is
    pinned down by a distinct index triple, so the size is at most
    ``(m+1)m(m-1)``; that cap is reported.
    """
    G = A.group
    G.check(x)
    G.check(y)
    if x == y:
        raise DegenerateArgumentError("x and y must be distinct")
    if G.identity in (x, y):
        raise DegenerateArgumentError("x and y must be non-identity")
    hits = [a for a in A.elements if G._mul(a, x) in A.provenance and G._mul(a, y) in A.provenance]
    cap = None
    m = A.manifest.get("m")
    if A.manifest.get("construction") == "quadratic":
        K = G.factors[0]
        if x[0] == K.identity and y[0] == K.identity:
            cap = (m + 1) * m * (m - 1)
    return CollisionReport(x, y, hits, cap)


def explain_collisions(A: ConstructionOutput, x, y) -> tuple[list, list]:
    """Match every zero-K-component collision with an index triple (i, j, k).

    Returns ``(explained, unexplained)``: an element ``x_p + i·a + i²·b`` is
    explained when ``a·x`` and ``a·y`` come from the same pair p with indices
    j and k, and solving the 2×2 system for (i, j, k) returns p's (a, b).
    """
    G = A.group
    K, _ = G.factors
    if x[0] != K.identity or y[0] != K.identity:
        raise DegenerateArgumentError("arguments must have zero K-component")
    explained, unexplained = [], []
    for elem in pair_collision_set(A, x, y).elements:
        found = None
        for p, i in A.provenance[elem]:
            js = [r for q, r in A.provenance[G._mul(elem, x)] if q == p]
            ks = [r for q, r in A.provenance[G._mul(elem, y)] if q == p]
            for j in js:
                for k in ks:
                    if len({i, j, k}) == 3 and vandermonde_solve(i, j, k, x[1], y[1]) == p:
                        found = (p, (i, j, k))
        (explained if found else unexplained).append((elem, found))
    return explained, unexplained


# -- direct sums ----------------------------------------------------------------------


def summand_label(position: int) -> int:
    """Summand label n = m(m+1)/2 - 1 for the summand with parameter m = position + 2."""
    m = position + 2
    return m * (m + 1) // 2 - 1


def direct_sum_set(components: Sequence[tuple[Group, ConstructionOutput]]) -> ConstructionOutput:
    """Union of the component sets embedded into the direct sum of their groups."""
    if not components:
        raise ValueError("need at least one component")
    groups = [g for g, _ in components]
    for g, out in components:
        if out.group != g:
            raise ValueError(f"component set lives in {out.group.spec}, not {g.spec}")
    G = Product(*groups)
    prov: dict = {}
    order: list = []
    labels = []
    for pos, (g, out) in enumerate(components):
        n = summand_label(pos)
        labels.append(n)
        for a in out.elements:
            _record(prov, order, G.embed(pos, a), (n, a))
    clashes = [(x, o) for x, o in prov.items() if len(o) > 1]
    if clashes:
        raise IndexingCollisionError(f"{len(clashes)} embedded elements collide")
    manifest = {
        "construction": "direct-sum",
        "labels": labels,
        "components": [out.manifest for _, out in components],
    }
    return ConstructionOutput(G, order, prov, manifest)
