"""Textual subset and radius specs.

Subsets::

    explicit {1, 2, 7}      finite set (``explicit`` may be omitted)
    {(1,0), (0,1)}          tuples for Z^d, products, direct sums
    evens                   x ≡ 0 mod 2 (integer groups; all coordinates for Z^d)
    all                     the whole group
    powers 10               {10^n : n >= 1}            (Z only)
    pairs 10^n              {10^n, 10^n + 1 : n >= 1}  (Z only)
    triples 10^n            {10^n, 10^n + 1, 10^n + 2 : n >= 1}

Radii::

    F8                      the first 8 enumerated elements
    {1, 2}                  explicit finite radius
"""

from __future__ import annotations

import re
from typing import Callable

from .ballean import Radius, ordinal_radius
from .errors import SpecParseError
from .groups import Cyclic, Group, Lattice, _LiteralParser
from .thinness import WindowedSubset

__all__ = ["parse_subset_spec", "parse_radius", "parse_element_set", "GENERATORS"]

GENERATORS = ("explicit", "evens", "all", "powers", "pairs", "triples")


def parse_element_set(G: Group, text: str, offset: int = 0, full: str | None = None) -> list:
    """``{a, b, ...}`` with group element literals; order preserved, duplicates dropped."""
    full = text if full is None else full
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise SpecParseError("expected a braced element list", full, offset)
    inner = body[1:-1]
    if not inner.strip():
        return []
    lead = offset + text.index("{") + 1
    parser = _LiteralParser("(" + inner + ")")
    try:
        values = parser.parse()
    except SpecParseError as exc:
        raise SpecParseError("bad element list", full, lead + max(exc.position - 1, 0)) from None
    out = []
    for v, at in zip(values, parser.item_starts):
        try:
            out.append(G.coerce(v))
        except (TypeError, ValueError) as exc:
            raise SpecParseError(f"{v!r} is not an element of {G.spec}: {exc}", full, lead + at - 1) from None
    return list(dict.fromkeys(out))


def _power_ladder(base: int, offsets: tuple) -> Callable[[object], bool]:
    def contains(x) -> bool:
        if not isinstance(x, int):
            return False
        for o in offsets:
            y = x - o
            if y < base:
                continue
            while y % base == 0 and y > 1:
                y //= base
            if y == 1:
                return True
        return False

    return contains


def parse_subset_spec(text: str, G: Group, window: int | None = None) -> WindowedSubset:
    """Build a :class:`WindowedSubset` of G from a spec string (see module doc)."""
    s = text.strip()
    lead = len(text) - len(text.lstrip())
    if s.startswith("{") or s.startswith("explicit"):
        rest = s[len("explicit"):] if s.startswith("explicit") else s
        at = lead + (len(s) - len(rest))
        elems = parse_element_set(G, rest, at, text)
        return WindowedSubset(G, window=window, elements=elems, label=s)
    m = re.fullmatch(r"(\w+)(?:\s+(\d+)(\^n)?)?", s)
    if not m:
        raise SpecParseError("unknown subset spec", text, lead)
    name, num, hat = m.group(1), m.group(2), m.group(3)
    if name not in GENERATORS:
        raise SpecParseError(f"unknown generator {name!r} (known: {', '.join(GENERATORS)})", text, lead)
    if window is None:
        raise SpecParseError(f"generator {name!r} needs a window", text, lead)
    if name == "all":
        if num:
            raise SpecParseError("'all' takes no argument", text, lead + m.start(2))
        return WindowedSubset(G, lambda x: True, window, label=s)
    if name == "evens":
        if num:
            raise SpecParseError("'evens' takes no argument", text, lead + m.start(2))
        if isinstance(G, Lattice) and G.d == 1 or isinstance(G, Cyclic):
            return WindowedSubset(G, lambda x: x % 2 == 0, window, label=s)
        if isinstance(G, Lattice):
            return WindowedSubset(G, lambda x: all(c % 2 == 0 for c in x), window, label=s)
        raise SpecParseError(f"'evens' needs an integer group, not {G.spec}", text, lead)
    if not (isinstance(G, Lattice) and G.d == 1):
        raise SpecParseError(f"{name!r} is defined on Z^1 only", text, lead)
    if num is None:
        raise SpecParseError(f"{name!r} needs a base, e.g. '{name} 10'", text, lead + len(s))
    base = int(num)
    if base < 2:
        raise SpecParseError("base must be at least 2", text, lead + m.start(2))
    if name == "powers":
        offsets = (0,)
    else:
        if not hat:
            raise SpecParseError(f"write '{name} {base}^n'", text, lead + m.end(2))
        offsets = (0, 1) if name == "pairs" else (0, 1, 2)
    return WindowedSubset(G, _power_ladder(base, offsets), window, label=s)


def parse_radius(text: str, G: Group) -> Radius:
    """``F<n>`` (ordinal radius) or an explicit braced element list."""
    s = text.strip()
    m = re.fullmatch(r"F(\d+)", s)
    if m:
        return ordinal_radius(G, int(m.group(1)))
    if s.startswith("{"):
        return Radius(G, parse_element_set(G, s, len(text) - len(text.lstrip()), text))
    raise SpecParseError("a radius is F<n> or {elements}", text, 0)
