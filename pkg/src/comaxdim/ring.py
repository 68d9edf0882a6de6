"""Finite products of chain rings and their ideal lattices.

A finite ring with finitely many ideals splits as a product of local rings.
Only local components whose ideals form a chain are modelled (fields,
``Z/p^k``, ...); a component of chain length ``k`` has the ideals
``0 = m^k < m^(k-1) < ... < m < R_i``, which we encode by the *level*
``0..k``. Level ``k`` is the whole component, level ``k - 1`` its maximal
ideal (= nilradical), level 0 the zero ideal. An ideal of the product is
then a level vector, and the ideal lattice is the product of chains.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .config import DEFAULT_ENUM_CAP
from .errors import CapExceededError, EmptyGraphError, SpecMismatchError, SpecParseError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainComponent:
    length: int
    label: Optional[str] = None
    prime: Optional[int] = None  # only used for pretty-printing (p^j) generators

    def __post_init__(self):
        if self.length < 1:
            raise SpecParseError(f"chain length must be >= 1, got {self.length}")

    @property
    def is_field(self) -> bool:
        return self.length == 1

    def level_name(self, level: int, index: int) -> str:
        k = self.length
        if level == 0:
            return "0"
        if level == k:
            return self.label or f"R{index + 1}"
        if self.prime is not None:
            return f"({self.prime ** (k - level)})"
        return f"m{index + 1}^{k - level}"


@dataclass(frozen=True, order=True)
class Ideal:
    """An ideal of a product of chain rings, as a level vector.

    ``chain`` holds the chain lengths of the owning ring so that ideals of
    different rings are never silently combined.
    """

    levels: tuple[int, ...]
    chain: tuple[int, ...]

    def __post_init__(self):
        if len(self.levels) != len(self.chain):
            raise SpecMismatchError(
                f"ideal {self.levels} has {len(self.levels)} components, ring has {len(self.chain)}"
            )
        for l, k in zip(self.levels, self.chain):
            if not 0 <= l <= k:
                raise ValueError(f"level {l} outside 0..{k}")

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.levels)) + ")"

    @property
    def is_whole(self) -> bool:
        return self.levels == self.chain

    @property
    def is_zero(self) -> bool:
        return not any(self.levels)


@dataclass(frozen=True)
class NilClass:
    """Bit ``i`` is set iff component ``i`` of the ideal is the whole ``R_i``,
    i.e. not contained in the nilradical of ``R_i``."""

    mask: tuple[bool, ...]

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.mask)


@dataclass(frozen=True)
class RingSpec:
    components: tuple[ChainComponent, ...]

    def __post_init__(self):
        if not self.components:
            raise SpecParseError("a ring needs at least one component")

    @classmethod
    def from_lengths(cls, lengths: Sequence[int]) -> "RingSpec":
        return cls(tuple(ChainComponent(int(k)) for k in lengths))

    @property
    def chain(self) -> tuple[int, ...]:
        return tuple(c.length for c in self.components)

    @property
    def n_nonfields(self) -> int:
        return sum(1 for c in self.components if not c.is_field)

    @property
    def m_fields(self) -> int:
        return sum(1 for c in self.components if c.is_field)

    @property
    def is_reduced(self) -> bool:
        return self.n_nonfields == 0

    def __len__(self) -> int:
        return len(self.components)

    def __str__(self) -> str:
        return " x ".join(c.label or f"C{c.length}" for c in self.components)

    def ideal(self, levels: Sequence[int]) -> Ideal:
        return Ideal(tuple(levels), self.chain)

    @property
    def whole(self) -> Ideal:
        return self.ideal(self.chain)

    @property
    def zero(self) -> Ideal:
        return self.ideal((0,) * len(self))

    @property
    def jacobson(self) -> Ideal:
        return self.ideal(tuple(k - 1 for k in self.chain))

    def ideal_count(self) -> int:
        return math.prod(k + 1 for k in self.chain)

    def vertex_count(self) -> int:
        """Closed form for the number of vertices of the co-maximal ideal graph."""
        return self.ideal_count() - math.prod(self.chain) - 1

    def annihilator_class_size(self, i: int) -> int:
        """Number of ideals of component ``i`` with nonzero annihilator."""
        return self.components[i].length

    def format_ideal(self, ideal: Ideal) -> str:
        _check_chain(self, ideal)
        return "(" + ",".join(
            c.level_name(l, i) for i, (c, l) in enumerate(zip(self.components, ideal.levels))
        ) + ")"


def _check_same(a: Ideal, b: Ideal) -> None:
    if a.chain != b.chain:
        raise SpecMismatchError(f"ideals of different rings: {a.chain} vs {b.chain}")


def _check_chain(spec: RingSpec, ideal: Ideal) -> None:
    if ideal.chain != spec.chain:
        raise SpecMismatchError(f"ideal of ring {ideal.chain} used with ring {spec.chain}")


# --- parsing --------------------------------------------------------------

_SEPARATOR = re.compile(r"[x×]", re.IGNORECASE)
_FIELD = re.compile(r"^f(?:\((\d+)\))?$")
_CHAIN = re.compile(r"^c(\d+)$")
_ZPOW = re.compile(r"^z(\d+)\^(\d+)$")
_ZN = re.compile(r"^z(\d+)$")


def _prime_power(n: int) -> tuple[int, int]:
    if n < 2:
        raise SpecParseError(f"Z{n} is not a local ring")
    p = next((d for d in range(2, math.isqrt(n) + 1) if n % d == 0), n)
    k, m = 0, n
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise SpecParseError(f"Z{n} is not local: {n} is not a prime power")
    return p, k


def _parse_atom(token: str) -> ChainComponent:
    raw = token.strip()
    t = re.sub(r"\s+", "", raw).lower()
    if not t:
        raise SpecParseError("empty factor in ring spec")
    if m := _FIELD.match(t):
        if m.group(1) is not None:
            log.warning("field order %s ignored: every field has ideals {0, F}", m.group(1))
        return ChainComponent(1, label="F")
    if m := _CHAIN.match(t):
        k = int(m.group(1))
        if k < 1:
            raise SpecParseError(f"chain length must be >= 1 in {raw!r}")
        return ChainComponent(k, label=f"C{k}")
    if m := _ZPOW.match(t):
        p, k = int(m.group(1)), int(m.group(2))
        if k < 1:
            raise SpecParseError(f"exponent must be >= 1 in {raw!r}")
        return ChainComponent(k, label=f"Z{p**k}", prime=p)
    if m := _ZN.match(t):
        p, k = _prime_power(int(m.group(1)))
        return ChainComponent(k, label=f"Z{p**k}", prime=p)
    raise SpecParseError(f"malformed ring factor {raw!r}")


def parse_ring_spec(text: str) -> RingSpec:
    """Parse e.g. ``"Z4 x Z4 x Z8"``, ``"F x F(4)"`` or ``"C2 × C3"``."""
    if not text or not text.strip():
        raise SpecParseError("empty ring spec")
    return RingSpec(tuple(_parse_atom(tok) for tok in _SEPARATOR.split(text)))


# --- lattice --------------------------------------------------------------

def enumerate_ideals(spec: RingSpec, cap: int = DEFAULT_ENUM_CAP) -> list[Ideal]:
    total = spec.ideal_count()
    if total > cap:
        raise CapExceededError(f"{spec} has {total} ideals, enumeration cap is {cap}")
    chain = spec.chain
    return [Ideal(levels, chain) for levels in product(*(range(k + 1) for k in chain))]


def enumerate_vertices(spec: RingSpec, cap: int = DEFAULT_ENUM_CAP) -> list[Ideal]:
    """Proper ideals not contained in the Jacobson radical, lexicographic."""
    if len(spec) < 2:
        raise EmptyGraphError(f"{spec} is local: every proper ideal lies in J(R)")
    chain = spec.chain
    return [
        I
        for I in enumerate_ideals(spec, cap)
        if any(l == k for l, k in zip(I.levels, chain)) and any(l < k for l, k in zip(I.levels, chain))
    ]


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _check_same(I, J)
    return Ideal(tuple(map(max, I.levels, J.levels)), I.chain)


def ideal_meet(I: Ideal, J: Ideal) -> Ideal:
    _check_same(I, J)
    return Ideal(tuple(map(min, I.levels, J.levels)), I.chain)


def is_contained(I: Ideal, J: Ideal) -> bool:
    """``I ⊆ J``; the lattice is a product of chains, so this is level-wise."""
    _check_same(I, J)
    return all(a <= b for a, b in zip(I.levels, J.levels))


def is_comaximal(I: Ideal, J: Ideal) -> bool:
    if I == J:
        raise ValueError(f"co-maximality is tested on distinct vertices, got {I} twice")
    return ideal_sum(I, J).is_whole


def nzc(I: Ideal) -> int:
    """Number of nonzero components."""
    return sum(1 for l in I.levels if l > 0)


def nil_class(I: Ideal) -> NilClass:
    return NilClass(tuple(l == k for l, k in zip(I.levels, I.chain)))


def prime_reduction(I: Ideal) -> Ideal:
    """Zero out every nonzero component that lies in the nilradical."""
    return Ideal(tuple(l if l == k else 0 for l, k in zip(I.levels, I.chain)), I.chain)


def enumerate_maximal_ideals(spec: RingSpec) -> list[Ideal]:
    """Maximal ideals: one component at its maximal ideal, the rest whole."""
    chain = spec.chain
    out = []
    for i, k in enumerate(chain):
        levels = list(chain)
        levels[i] = k - 1
        out.append(Ideal(tuple(levels), chain))
    return sorted(out, key=lambda I: I.levels)
