"""Computable groups: canonical elements, products, inverses and fixed enumerations.

Every group here is an immutable object with a canonical textual spec
(``Z^2``, ``Zmod 12``, ``Free 2`` ...) and a fixed injective enumeration
``g_0, g_1, ...`` with ``g_0`` the identity.  Elements are plain hashable
Python values:

==================  ==============================================
group               element
==================  ==============================================
``Z^1``             ``int``
``Z^d`` (d >= 2)    ``tuple[int, ...]`` of length d
``Zmod n``          ``int`` in ``range(n)``
``Sym n``           one-line permutation, a tuple of ``1..n``
``Free k``          reduced word, a tuple of nonzero ints in ``±1..±k``
``Q^d``             ``tuple[Fraction, ...]`` of length d
``DirectSum[C; r]`` tuple of C-elements with trailing identities stripped
``Product(G, H..)`` tuple with one component per factor
==================  ==============================================
"""

from __future__ import annotations

import itertools
import math
import re
from abc import ABC, abstractmethod
from fractions import Fraction
from numbers import Rational
from typing import Any, Hashable, Iterable, Iterator, Sequence

from .errors import (
    CapExceededError,
    ExhaustedEnumerationError,
    ForeignElementError,
    SpecParseError,
)

__all__ = [
    "Group",
    "Lattice",
    "Cyclic",
    "Symmetric",
    "FreeGroup",
    "DirectSum",
    "RationalVectors",
    "Product",
    "parse_group",
    "multiply",
    "invert",
    "enumerate_prefix",
    "generate_subgroup",
    "is_subgroup",
]

Element = Hashable


class Group(ABC):
    """A countable or finite group with a fixed enumeration.

    Subclasses implement the raw operations ``_mul``, ``_inv``, ``_contains``
    and ``_iter_elements``; the public methods validate membership first.
    """

    identity: Element
    order: int | None = None
    abelian: bool = False

    def __init__(self) -> None:
        self._prefix: list = []
        self._index: dict = {}
        self._source: Iterator | None = None

    # -- to implement ----------------------------------------------------
    @property
    @abstractmethod
    def spec(self) -> str: ...

    @abstractmethod
    def _mul(self, x, y): ...

    @abstractmethod
    def _inv(self, x): ...

    @abstractmethod
    def _contains(self, x) -> bool: ...

    @abstractmethod
    def _iter_elements(self) -> Iterator: ...

    @abstractmethod
    def _coerce(self, value): ...

    def format_element(self, x) -> str:
        return str(x)

    # -- public API -------------------------------------------------------
    def contains(self, x) -> bool:
        try:
            return self._contains(x)
        except TypeError:
            return False

    def check(self, x) -> None:
        if not self.contains(x):
            raise ForeignElementError(f"{x!r} is not an element of {self.spec}")

    def mul(self, x, y):
        self.check(x)
        self.check(y)
        return self._mul(x, y)

    def inv(self, x):
        self.check(x)
        return self._inv(x)

    def is_finite(self) -> bool:
        return self.order is not None

    def enumerate_prefix(self, n: int) -> list:
        """First ``n`` elements of the fixed enumeration (a fresh list)."""
        if n < 0:
            raise ValueError("prefix length must be non-negative")
        if self.order is not None and n > self.order:
            raise ExhaustedEnumerationError(
                f"{self.spec} has only {self.order} elements, asked for {n}"
            )
        self._extend_to(n)
        return self._prefix[:n]

    def elements(self) -> Iterator:
        """Iterate the whole enumeration (infinite for infinite groups)."""
        i = 0
        while self.order is None or i < self.order:
            self._extend_to(i + 1)
            yield self._prefix[i]
            i += 1

    def index_of(self, x, limit: int | None = None) -> int:
        """Position of ``x`` in the enumeration.

        Infinite groups are scanned up to ``limit`` elements (default 10**6);
        subclasses with closed forms override this.
        """
        self.check(x)
        if x in self._index:
            return self._index[x]
        limit = self.order if limit is None and self.order is not None else limit
        limit = 10**6 if limit is None else limit
        step = max(64, len(self._prefix))
        while len(self._prefix) < limit:
            self._extend_to(min(limit, len(self._prefix) + step))
            if x in self._index:
                return self._index[x]
            step *= 2
            if self.order is not None and len(self._prefix) >= self.order:
                break
        raise ExhaustedEnumerationError(
            f"{self.format_element(x)} not among the first {limit} elements of {self.spec}"
        )

    def parse_element(self, text: str):
        value = _LiteralParser(text).parse()
        try:
            x = self._coerce(value)
        except (TypeError, ValueError) as exc:
            raise ForeignElementError(f"{text!r} is not an element of {self.spec}: {exc}")
        self.check(x)
        return x

    def coerce(self, value):
        """Canonical element from a loose Python literal (lists, ints, strings)."""
        x = self._coerce(value)
        self.check(x)
        return x

    def power(self, x, k: int):
        self.check(x)
        base = x if k >= 0 else self._inv(x)
        result = self.identity
        for _ in range(abs(k)):
            result = self._mul(result, base)
        return result

    def _extend_to(self, n: int) -> None:
        if len(self._prefix) >= n:
            return
        if self._source is None:
            self._source = self._iter_elements()
        for x in self._source:
            self._index[x] = len(self._prefix)
            self._prefix.append(x)
            if len(self._prefix) >= n:
                return

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, Group) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"<group {self.spec}>"


# -- concrete groups ------------------------------------------------------


class Lattice(Group):
    """The integer lattice Z^d; Z^1 uses plain ints and the spiral order."""

    abelian = True

    def __init__(self, d: int = 1):
        if d < 1:
            raise ValueError("lattice dimension must be >= 1")
        super().__init__()
        self.d = d
        self.identity = 0 if d == 1 else (0,) * d

    @property
    def spec(self) -> str:
        return f"Z^{self.d}"

    def _mul(self, x, y):
        if self.d == 1:
            return x + y
        return tuple(a + b for a, b in zip(x, y))

    def _inv(self, x):
        return -x if self.d == 1 else tuple(-a for a in x)

    def _contains(self, x) -> bool:
        if self.d == 1:
            return type(x) is int
        return (
            type(x) is tuple and len(x) == self.d and all(type(a) is int for a in x)
        )

    def _iter_elements(self):
        if self.d == 1:
            yield 0
            for k in itertools.count(1):
                yield k
                yield -k
        yield (0,) * self.d
        for r in itertools.count(1):
            for v in itertools.product(range(-r, r + 1), repeat=self.d):
                if max(abs(a) for a in v) == r:
                    yield v

    def index_of(self, x, limit=None) -> int:
        self.check(x)
        if self.d == 1:
            return 0 if x == 0 else (2 * x - 1 if x > 0 else -2 * x)
        r = max(abs(a) for a in x)
        if r == 0:
            return 0
        pos = (2 * r - 1) ** self.d
        for v in itertools.product(range(-r, r + 1), repeat=self.d):
            if v == x:
                return pos
            if max(abs(a) for a in v) == r:
                pos += 1
        raise AssertionError("unreachable")

    def _coerce(self, value):
        if self.d == 1:
            if isinstance(value, tuple) and len(value) == 1:
                value = value[0]
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError("expected an integer")
            return int(value)
        return tuple(int(a) for a in value)

    def format_element(self, x) -> str:
        return str(x) if self.d == 1 else "(" + ",".join(map(str, x)) + ")"


class Cyclic(Group):
    """Z_n written additively on ``range(n)``."""

    abelian = True

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("cyclic group order must be >= 1")
        super().__init__()
        self.n = n
        self.order = n
        self.identity = 0

    @property
    def spec(self) -> str:
        return f"Zmod {self.n}"

    def _mul(self, x, y):
        return (x + y) % self.n

    def _inv(self, x):
        return (-x) % self.n

    def _contains(self, x) -> bool:
        return type(x) is int and 0 <= x < self.n

    def _iter_elements(self):
        return iter(range(self.n))

    def index_of(self, x, limit=None) -> int:
        self.check(x)
        return x

    def _coerce(self, value):
        if isinstance(value, tuple) and len(value) == 1:
            value = value[0]
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError("expected an integer")
        return int(value)


class Symmetric(Group):
    """S_n on one-line tuples; ``mul(s, t)`` is the composition s after t."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("symmetric group degree must be >= 1")
        super().__init__()
        self.n = n
        self.order = math.factorial(n)
        self.identity = tuple(range(1, n + 1))
        self.abelian = n <= 2

    @property
    def spec(self) -> str:
        return f"Sym {self.n}"

    def _mul(self, s, t):
        return tuple(s[i - 1] for i in t)

    def _inv(self, s):
        out = [0] * self.n
        for i, v in enumerate(s, start=1):
            out[v - 1] = i
        return tuple(out)

    def _contains(self, x) -> bool:
        return type(x) is tuple and sorted(x) == list(self.identity)

    def _iter_elements(self):
        return itertools.permutations(range(1, self.n + 1))

    def _coerce(self, value):
        return tuple(int(a) for a in value)

    def format_element(self, x) -> str:
        return "(" + ",".join(map(str, x)) + ")"


FREE_LETTERS = "abcdfghijklmnopqrstuvwxyz"  # 'e' is reserved for the identity


class FreeGroup(Group):
    """Free group on k generators; reduced words, length-then-lex order.

    Letters are ordered a < a^-1 < b < b^-1 < ...; words print as strings with
    upper case for inverses (``aB`` is a b^-1) and ``e`` for the empty word.
    """

    def __init__(self, k: int):
        if not 1 <= k <= len(FREE_LETTERS):
            raise ValueError(f"free group rank must be in 1..{len(FREE_LETTERS)}")
        super().__init__()
        self.k = k
        self.identity = ()
        self.abelian = False
        self._letters = [s * i for i in range(1, k + 1) for s in (1, -1)]

    @property
    def spec(self) -> str:
        return f"Free {self.k}"

    @staticmethod
    def _reduce(word) -> tuple:
        out: list[int] = []
        for letter in word:
            if out and out[-1] == -letter:
                out.pop()
            else:
                out.append(letter)
        return tuple(out)

    def _mul(self, x, y):
        # cancellation only happens at the seam
        i = 0
        while i < min(len(x), len(y)) and x[-1 - i] == -y[i]:
            i += 1
        return x[: len(x) - i] + y[i:]

    def _inv(self, x):
        return tuple(-a for a in reversed(x))

    def _contains(self, x) -> bool:
        if type(x) is not tuple:
            return False
        for i, a in enumerate(x):
            if type(a) is not int or a == 0 or abs(a) > self.k:
                return False
            if i and x[i - 1] == -a:
                return False
        return True

    def _iter_elements(self):
        level = [()]
        while True:
            yield from level
            level = [
                w + (a,) for w in level for a in self._letters if not (w and w[-1] == -a)
            ]

    def _coerce(self, value):
        if isinstance(value, str):
            if value == "e":
                return ()
            word = []
            for ch in value:
                j = FREE_LETTERS.find(ch.lower())
                if j < 0:
                    raise ValueError(f"unknown letter {ch!r}")
                word.append((j + 1) * (1 if ch.islower() else -1))
            return self._reduce(word)
        return self._reduce(int(a) for a in value)

    def format_element(self, x) -> str:
        if not x:
            return "e"
        return "".join(
            FREE_LETTERS[abs(a) - 1] if a > 0 else FREE_LETTERS[abs(a) - 1].upper()
            for a in x
        )


class DirectSum(Group):
    """Restricted direct sum of copies of ``component`` indexed by ``range(rank)``.

    ``rank=None`` means countably many copies.  Elements are finitely supported
    tuples with trailing identities stripped.  For a finite component of size
    c the enumeration lists elements by support length then lexicographically
    by component index, so the first c**k elements form the coordinate prefix
    subgroup on the first k coordinates.
    """

    def __init__(self, component: Group, rank: int | None = None):
        if rank is not None and rank < 0:
            raise ValueError("rank must be non-negative")
        super().__init__()
        self.component = component
        self.rank = rank
        self.identity = ()
        self.abelian = component.abelian
        if rank is not None and component.order is not None:
            self.order = component.order**rank
        elif rank == 0 or component.order == 1:
            self.order = 1

    @property
    def spec(self) -> str:
        r = "omega" if self.rank is None else str(self.rank)
        return f"DirectSum[{self.component.spec}; {r}]"

    def _strip(self, v) -> tuple:
        e = self.component.identity
        v = list(v)
        while v and v[-1] == e:
            v.pop()
        return tuple(v)

    def _mul(self, x, y):
        if len(x) < len(y):
            head = [self.component._mul(a, b) for a, b in zip(x, y)]
            return tuple(head) + y[len(x):]
        if len(y) < len(x):
            head = [self.component._mul(a, b) for a, b in zip(x, y)]
            return tuple(head) + x[len(y):]
        return self._strip(self.component._mul(a, b) for a, b in zip(x, y))

    def _inv(self, x):
        return tuple(self.component._inv(a) for a in x)

    def _contains(self, x) -> bool:
        if type(x) is not tuple:
            return False
        if self.rank is not None and len(x) > self.rank:
            return False
        if x and x[-1] == self.component.identity:
            return False
        return all(self.component.contains(a) for a in x)

    def _iter_elements(self):
        C = self.component
        if C.order is not None:
            if C.order == 1:
                yield ()
                return
            elems = C.enumerate_prefix(C.order)
            nonid = elems[1:]
            lengths = itertools.count(0) if self.rank is None else range(self.rank + 1)
            for L in lengths:
                if L == 0:
                    yield ()
                    continue
                for head in itertools.product(elems, repeat=L - 1):
                    for last in nonid:
                        yield head + (last,)
            return
        # infinite component: stage s uses lengths <= s and the first s components
        seen = set()
        for s in itertools.count(1):
            elems = C.enumerate_prefix(s)
            max_len = s if self.rank is None else min(s, self.rank)
            stage = []
            for L in range(0, max_len + 1):
                for v in itertools.product(elems, repeat=L):
                    if v and v[-1] == C.identity:
                        continue
                    if v not in seen:
                        stage.append(v)
            for v in stage:
                seen.add(v)
                yield v

    def coordinate_subgroup(self, k: int) -> list:
        """Elements supported on the first ``k`` coordinates (finite component)."""
        if self.component.order is None:
            raise ValueError("coordinate subgroups are finite only for finite components")
        if self.rank is not None and k > self.rank:
            raise ValueError(f"rank is {self.rank}, cannot take {k} coordinates")
        return self.enumerate_prefix(self.component.order**k)

    def _coerce(self, value):
        if not isinstance(value, tuple):
            value = (value,)
        return self._strip(self.component._coerce(a) for a in value)

    def format_element(self, x) -> str:
        return "(" + ",".join(self.component.format_element(a) for a in x) + ")"


def _height(q: Fraction) -> int:
    return max(abs(q.numerator), q.denominator)


class RationalVectors(Group):
    """Q^d with exact ``Fraction`` coordinates, enumerated by height shells.

    The height of a vector is the largest ``max(|numerator|, denominator)``
    over its coordinates; shells of equal height are sorted by the
    per-coordinate key ``(height, value)``.
    """

    abelian = True

    def __init__(self, d: int):
        if d < 1:
            raise ValueError("dimension must be >= 1")
        super().__init__()
        self.d = d
        self.identity = (Fraction(0),) * d

    @property
    def spec(self) -> str:
        return f"Q^{self.d}"

    def _mul(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def _inv(self, x):
        return tuple(-a for a in x)

    def _contains(self, x) -> bool:
        return (
            type(x) is tuple
            and len(x) == self.d
            and all(isinstance(a, Rational) and not isinstance(a, bool) for a in x)
        )

    @staticmethod
    def rationals_of_height(h: int) -> list[Fraction]:
        if h == 1:
            return [Fraction(-1), Fraction(0), Fraction(1)]
        out = set()
        for q in range(1, h + 1):
            for p in range(-h, h + 1):
                f = Fraction(p, q)
                if _height(f) == h:
                    out.add(f)
        return sorted(out)

    def _iter_elements(self):
        yield self.identity
        pool: list[Fraction] = []
        key = lambda v: tuple((_height(a), a) for a in v)  # noqa: E731
        for h in itertools.count(1):
            pool = sorted(pool + self.rationals_of_height(h), key=lambda q: (_height(q), q))
            shell = [
                v for v in itertools.product(pool, repeat=self.d)
                if max(_height(a) for a in v) == h and v != self.identity
            ]
            shell.sort(key=key)
            yield from shell

    def _coerce(self, value):
        if not isinstance(value, tuple):
            value = (value,)
        if len(value) != self.d:
            raise ValueError(f"expected {self.d} coordinates")
        return tuple(Fraction(a) for a in value)

    def vector(self, *coords) -> tuple:
        """Convenience constructor: ``Q.vector(1, '1/2', 0, 0)``."""
        return self.coerce(tuple(Fraction(c) for c in coords))

    def scale(self, c, x) -> tuple:
        c = Fraction(c)
        return tuple(c * a for a in x)

    def format_element(self, x) -> str:
        return "(" + ",".join(str(a) for a in x) + ")"


class Product(Group):
    """Direct product of finitely many groups, enumerated by dovetailing indices."""

    def __init__(self, *factors: Group):
        if len(factors) < 1:
            raise ValueError("a product needs at least one factor")
        super().__init__()
        self.factors = tuple(factors)
        self.identity = tuple(G.identity for G in factors)
        self.abelian = all(G.abelian for G in factors)
        if all(G.order is not None for G in factors):
            self.order = math.prod(G.order for G in factors)

    @property
    def spec(self) -> str:
        return "Product(" + ", ".join(G.spec for G in self.factors) + ")"

    def _mul(self, x, y):
        return tuple(G._mul(a, b) for G, a, b in zip(self.factors, x, y))

    def _inv(self, x):
        return tuple(G._inv(a) for G, a in zip(self.factors, x))

    def _contains(self, x) -> bool:
        return (
            type(x) is tuple
            and len(x) == len(self.factors)
            and all(G.contains(a) for G, a in zip(self.factors, x))
        )

    def _iter_elements(self):
        sizes = [G.order for G in self.factors]
        n = len(sizes)

        def fits(size, s):
            return size is None or s < size

        for s in itertools.count(0):
            if not any(fits(size, s) for size in sizes):
                return
            pools = [G.enumerate_prefix(s + 1 if fits(G.order, s) else G.order) for G in self.factors]

            def rec(pos, hit):
                if pos == n:
                    if hit:
                        yield ()
                    return
                later = any(fits(sizes[q], s) for q in range(pos + 1, n))
                if not hit and not later:
                    if fits(sizes[pos], s):
                        for rest in rec(pos + 1, True):
                            yield (pools[pos][s],) + rest
                    return
                for i in range(len(pools[pos])):
                    for rest in rec(pos + 1, hit or i == s):
                        yield (pools[pos][i],) + rest

            yield from rec(0, False)

    def embed(self, i: int, x) -> tuple:
        """Element with ``x`` in factor ``i`` and identities elsewhere."""
        self.factors[i].check(x)
        out = list(self.identity)
        out[i] = x
        return tuple(out)

    def _coerce(self, value):
        if not isinstance(value, tuple) or len(value) != len(self.factors):
            raise ValueError(f"expected a {len(self.factors)}-tuple")
        return tuple(G._coerce(a) for G, a in zip(self.factors, value))

    def format_element(self, x) -> str:
        return "(" + ", ".join(G.format_element(a) for G, a in zip(self.factors, x)) + ")"


# -- module-level operations ---------------------------------------------


def multiply(G: Group, x, y):
    return G.mul(x, y)


def invert(G: Group, x):
    return G.inv(x)


def enumerate_prefix(G: Group, n: int) -> list:
    return G.enumerate_prefix(n)


def generate_subgroup(G: Group, generators: Iterable, cap: int | None = None) -> frozenset:
    """Subgroup generated by ``generators`` (BFS); raises past ``cap`` elements."""
    gens = set()
    for g in generators:
        G.check(g)
        gens.add(g)
        gens.add(G._inv(g))
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G._mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if cap is not None and len(seen) > cap:
                        raise CapExceededError(
                            f"subgroup generated in {G.spec} exceeds {cap} elements",
                            chain=[frozenset(seen)],
                        )
        frontier = nxt
    return frozenset(seen)


def is_subgroup(G: Group, elements: Iterable) -> bool:
    """True iff a finite set contains e and is closed under x*y^-1."""
    S = set(elements)
    if G.identity not in S:
        return False
    return all(G._mul(x, G._inv(y)) in S for x in S for y in S)


# -- textual grammar -------------------------------------------------------
#
#   group   := 'Z' ['^' INT] | 'Q' ['^' INT] | 'Zmod' INT | 'Sym' INT
#            | 'Free' INT | 'DirectSum' '[' group ';' ('omega' | INT) ']'
#            | 'Product' '(' group {',' group} ')'

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<sym>[\^\[\];(),]))")


class _GroupParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _peek(self):
        m = _TOKEN.match(self.text, self.pos)
        if not m:
            return None, None, self.pos
        kind = m.lastgroup
        return kind, m.group(kind), m.end()

    def _next(self, expect_kind=None, expect_value=None):
        kind, value, end = self._peek()
        if kind is None or (expect_kind and kind != expect_kind) or (
            expect_value is not None and value != expect_value
        ):
            want = expect_value or expect_kind or "token"
            raise SpecParseError(f"expected {want}", self.text, self._skip_ws())
        self.pos = end
        return value

    def _skip_ws(self) -> int:
        p = self.pos
        while p < len(self.text) and self.text[p].isspace():
            p += 1
        return p

    def _int(self) -> int:
        return int(self._next("int"))

    def parse(self) -> Group:
        g = self.group()
        if self._skip_ws() != len(self.text):
            raise SpecParseError("trailing input", self.text, self._skip_ws())
        return g

    def group(self) -> Group:
        start = self._skip_ws()
        name = self._next("name")
        try:
            if name in ("Z", "Q"):
                d = 1
                if self._peek()[1] == "^":
                    self._next(expect_value="^")
                    d = self._int()
                return Lattice(d) if name == "Z" else RationalVectors(d)
            if name == "Zmod":
                return Cyclic(self._int())
            if name in ("Sym", "S"):
                return Symmetric(self._int())
            if name == "Free":
                return FreeGroup(self._int())
            if name == "DirectSum":
                self._next(expect_value="[")
                comp = self.group()
                self._next(expect_value=";")
                kind, value, _ = self._peek()
                if kind == "name" and value == "omega":
                    self._next()
                    rank = None
                else:
                    rank = self._int()
                self._next(expect_value="]")
                return DirectSum(comp, rank)
            if name == "Product":
                self._next(expect_value="(")
                factors = [self.group()]
                while self._peek()[1] == ",":
                    self._next()
                    factors.append(self.group())
                self._next(expect_value=")")
                return Product(*factors)
        except ValueError as exc:
            if isinstance(exc, SpecParseError):
                raise
            raise SpecParseError(str(exc), self.text, start) from None
        raise SpecParseError(f"unknown group {name!r}", self.text, start)


def parse_group(text: str) -> Group:
    """Parse a group spec such as ``Product(Z^1, Zmod 7)``."""
    return _GroupParser(text).parse()


# -- element literals --------------------------------------------------------

_LIT = re.compile(r"\s*(?:(?P<num>-?\d+(?:/\d+)?)|(?P<word>[A-Za-z]+)|(?P<sym>[(),]))")


class _LiteralParser:
    """Nested literal: ``value := INT | INT/INT | WORD | '(' [value {',' value}] ')'``."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.depth = 0
        self.item_starts: list[int] = []

    def _tok(self):
        m = _LIT.match(self.text, self.pos)
        if not m:
            raise SpecParseError("bad element literal", self.text, self.pos)
        return m

    def parse(self):
        v = self.value()
        rest = self.text[self.pos:]
        if rest.strip():
            raise SpecParseError("trailing input", self.text, self.pos + len(rest) - len(rest.lstrip()))
        return v

    def value(self):
        m = self._tok()
        self.pos = m.end()
        if m.lastgroup == "num":
            s = m.group("num")
            return Fraction(s) if "/" in s else int(s)
        if m.lastgroup == "word":
            return m.group("word")
        if m.group("sym") != "(":
            raise SpecParseError("unexpected symbol", self.text, m.start("sym"))
        items = []
        self.depth += 1
        while True:
            m = self._tok()
            if m.group("sym") == ")":  # empty tuple or trailing comma
                self.pos = m.end()
                self.depth -= 1
                return tuple(items)
            if self.depth == 1:
                self.item_starts.append(m.start(m.lastgroup))
            items.append(self.value())
            m = self._tok()
            self.pos = m.end()
            if m.group("sym") == ")":
                self.depth -= 1
                return tuple(items)
            if m.group("sym") != ",":
                raise SpecParseError("expected ',' or ')'", self.text, m.start())


def parse_elements(G: Group, texts: Sequence[str]) -> list:
    return [G.parse_element(t) for t in texts]
