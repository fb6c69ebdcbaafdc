"""Symbolic alephs over a small fragment of ordinal arithmetic.

Ordinal indices are finite sums ``ω_{k_1}·c_1 + ... + ω_{k_r}·c_r + n`` in
strictly descending ``k`` (``ω_0`` is ω), which covers every index needed
here: 0, 1, ω, ω·2+3, ω_1, ...  Anything outside the fragment is rejected
with :class:`UnsupportedOrdinalError`.

``mu_thin_partition_number`` evaluates the case formula for the least number
of κ-thin pieces that partition a group of a given size.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

from .errors import PreconditionError, SpecParseError, UnsupportedOrdinalError

__all__ = [
    "OrdinalExpr",
    "SymbolicCardinal",
    "aleph",
    "parse_ordinal",
    "parse_cardinal",
    "classify",
    "cofinality",
    "is_regular",
    "mu_thin_partition_number",
    "theorem4_predicate",
    "SUCCESSOR",
    "LIMIT",
]

SUCCESSOR, LIMIT = "successor", "limit"


@total_ordering
@dataclass(frozen=True)
class OrdinalExpr:
    """``sum(ω_k · c for k, c in terms) + finite`` with k strictly descending, c >= 1."""

    terms: tuple = ()
    finite: int = 0

    def __post_init__(self):
        if self.finite < 0:
            raise UnsupportedOrdinalError("negative finite part")
        prev = None
        for k, c in self.terms:
            if not (isinstance(k, int) and isinstance(c, int)) or k < 0 or c < 1:
                raise UnsupportedOrdinalError(f"bad term ω_{k}·{c}")
            if prev is not None and k >= prev:
                raise UnsupportedOrdinalError("terms must be in strictly descending order")
            prev = k

    @classmethod
    def of(cls, n: int) -> "OrdinalExpr":
        return cls((), n)

    @classmethod
    def omega(cls, k: int = 0, coeff: int = 1) -> "OrdinalExpr":
        return cls(((k, coeff),), 0)

    def __add__(self, other: "OrdinalExpr | int") -> "OrdinalExpr":
        if isinstance(other, int):
            other = OrdinalExpr.of(other)
        if not other.terms:
            return OrdinalExpr(self.terms, self.finite + other.finite)
        lead, c = other.terms[0]
        kept = [(k, cc) for k, cc in self.terms if k > lead]
        same = sum(cc for k, cc in self.terms if k == lead)
        return OrdinalExpr(tuple(kept) + ((lead, c + same),) + other.terms[1:], other.finite)

    def successor(self) -> "OrdinalExpr":
        return self + 1

    @property
    def is_zero(self) -> bool:
        return not self.terms and self.finite == 0

    @property
    def is_successor(self) -> bool:
        return self.finite > 0

    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and self.finite == 0

    def predecessor(self) -> "OrdinalExpr":
        if not self.is_successor:
            raise UnsupportedOrdinalError(f"{self} has no predecessor")
        return OrdinalExpr(self.terms, self.finite - 1)

    def cofinality_index(self) -> int:
        """k with ``cf(self) = ω_k``, for a limit ordinal."""
        if not self.is_limit:
            raise UnsupportedOrdinalError(f"{self} is not a limit ordinal")
        return self.terms[-1][0]

    def _key(self):
        # the finite tail sorts below every ω_k term
        return self.terms + ((-1, self.finite),)

    def __lt__(self, other: "OrdinalExpr") -> bool:
        return self._key() < other._key()

    def __str__(self) -> str:
        parts = []
        for k, c in self.terms:
            atom = "omega" if k == 0 else f"omega{k}"
            parts.append(atom if c == 1 else f"{atom}*{c}")
        if self.finite or not parts:
            parts.append(str(self.finite))
        return "+".join(parts)


@total_ordering
@dataclass(frozen=True)
class SymbolicCardinal:
    """``ℵ_index``."""

    index: OrdinalExpr

    def successor(self) -> "SymbolicCardinal":
        return SymbolicCardinal(self.index.successor())

    def plus(self, n: int) -> "SymbolicCardinal":
        """``κ^{+n}``."""
        return SymbolicCardinal(self.index + n)

    def predecessor(self) -> "SymbolicCardinal":
        return SymbolicCardinal(self.index.predecessor())

    def __lt__(self, other: "SymbolicCardinal") -> bool:
        return self.index < other.index

    def __str__(self) -> str:
        s = str(self.index)
        return f"aleph {s}" if re.fullmatch(r"\w+", s) else f"aleph ({s})"


def aleph(index: int | OrdinalExpr) -> SymbolicCardinal:
    return SymbolicCardinal(OrdinalExpr.of(index) if isinstance(index, int) else index)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<omega>omega|ω)(?:_?(?P<sub>\d+))?|(?P<op>[+*()]))")


def parse_ordinal(text: str) -> OrdinalExpr:
    """``3``, ``omega``, ``omega*2+3``, ``omega1``, ``omega_2*3+omega+1``, parentheses allowed."""
    pos = 0
    toks = []
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m or m.end() == pos:
            raise SpecParseError("unexpected character in ordinal", text, pos)
        toks.append((m, m.start(m.lastgroup)))
        pos = m.end()
    depth = 0
    for m, at in toks:
        depth += {"(": 1, ")": -1}.get(m.group("op"), 0)
        if depth < 0:
            raise SpecParseError("unbalanced ')'", text, at)
    if depth:
        raise SpecParseError("unbalanced '('", text, len(stripped))
    toks = [t for t in toks if t[0].group("op") not in ("(", ")")]
    if not toks:
        raise SpecParseError("empty ordinal", text, 0)
    result = OrdinalExpr()
    i = 0
    expect_term = True
    while i < len(toks):
        m, at = toks[i]
        if expect_term:
            if m.group("int") is not None:
                term = OrdinalExpr.of(int(m.group("int")))
            elif m.group("omega") is not None:
                k = int(m.group("sub") or 0)
                coeff = 1
                if i + 1 < len(toks) and toks[i + 1][0].group("op") == "*":
                    if i + 2 >= len(toks) or toks[i + 2][0].group("int") is None:
                        raise SpecParseError("expected a natural number after '*'", text, toks[i + 1][1] + 1)
                    coeff = int(toks[i + 2][0].group("int"))
                    if coeff == 0:
                        raise UnsupportedOrdinalError("coefficient 0")
                    i += 2
                term = OrdinalExpr.omega(k, coeff)
            else:
                raise SpecParseError("expected a term", text, at)
            result = result + term
            expect_term = False
        else:
            if m.group("op") != "+":
                raise SpecParseError("expected '+'", text, at)
            expect_term = True
        i += 1
    if expect_term:
        raise SpecParseError("dangling '+'", text, len(stripped))
    return result


def parse_cardinal(text: str) -> SymbolicCardinal:
    """``aleph 0``, ``aleph omega``, ``aleph omega1``, ``aleph (omega*2+3)``, ``aleph_2``."""
    m = re.match(r"\s*(?:aleph|ℵ)\s*_?\s*", text)
    if not m:
        raise SpecParseError("a cardinal starts with 'aleph'", text, 0)
    body = text[m.end():]
    if not body.strip():
        raise SpecParseError("missing aleph index", text, m.end())
    try:
        return SymbolicCardinal(parse_ordinal(body))
    except SpecParseError as exc:
        raise SpecParseError("bad aleph index", text, m.end() + exc.position) from None


def classify(c: SymbolicCardinal) -> str:
    """``successor`` iff the index is a successor ordinal; ℵ₀ counts as limit."""
    return SUCCESSOR if c.index.is_successor else LIMIT


def cofinality(c: SymbolicCardinal) -> SymbolicCardinal:
    """Successor alephs and ℵ₀ are regular; ``cf ℵ_α = ℵ_k`` when ``cf α = ω_k``."""
    if c.index.is_zero or c.index.is_successor:
        return c
    return aleph(c.index.cofinality_index())


def is_regular(c: SymbolicCardinal) -> bool:
    return cofinality(c) == c


def mu_thin_partition_number(
    sizeG: SymbolicCardinal, kappa: SymbolicCardinal
) -> SymbolicCardinal | frozenset:
    """Least μ such that a group of size ``sizeG`` splits into μ κ-thin sets.

    * ``|G| = γ⁺``: γ.
    * ``|G|`` limit and (κ < |G| or |G| regular): |G|.
    * ``|G|`` singular, κ = |G|, cf|G| limit: cf|G|.
    * ``|G|`` singular, κ = |G|, cf|G| = γ⁺: the set {γ, γ⁺} (undecided).
    """
    if kappa > sizeG:
        raise PreconditionError(f"κ = {kappa} exceeds |G| = {sizeG}")
    if classify(sizeG) == SUCCESSOR:
        return sizeG.predecessor()
    if kappa < sizeG or is_regular(sizeG):
        return sizeG
    cf = cofinality(sizeG)
    if classify(cf) == LIMIT:
        return cf
    return frozenset({cf.predecessor(), cf})


def theorem4_predicate(gamma: SymbolicCardinal, sizeG: SymbolicCardinal) -> bool:
    """Whether a group of size ``sizeG`` splits into γ pieces thin below γ⁺: iff |G| = γ⁺."""
    if sizeG < gamma:
        raise PreconditionError(f"|G| = {sizeG} is smaller than γ = {gamma}")
    return sizeG == gamma.successor()
