"""Exact sets of lengths, with the derived invariants and the AAMP test.

``LengthEngine.length_set`` computes L(B) by the memoized recursion

    L(B) = union over atoms A | B of (1 + L(B / A)),        L(empty) = {0},

with the memo keyed on the canonical multiset key, so every distinct zero-sum
divisor is solved once regardless of how factorizations interleave.  Zeros are
stripped up front and re-added as a shift.  Length sets travel as sorted
tuples; internally they are small integer bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .atoms import enumerate_atoms
from .budget import NodeCounter
from .groups import Element, FiniteAbelianGroup
from .sequences import Sequence

Lengths = tuple[int, ...]

_ENGINES: dict[tuple[int, ...], "LengthEngine"] = {}


def engine_for(group: FiniteAbelianGroup) -> "LengthEngine":
    """Shared per-group engine so memo tables persist across callers."""
    eng = _ENGINES.get(group.invariant_factors)
    if eng is None:
        eng = LengthEngine(group)
        _ENGINES[group.invariant_factors] = eng
    return eng


def mask_to_lengths(mask: int) -> Lengths:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


class LengthEngine:
    def __init__(self, group: FiniteAbelianGroup, node_limit: int | None = None):
        self.group = group
        self.counter = NodeCounter(node_limit)
        self._memo: dict[tuple, int] = {(): 1}
        self._atom_items: dict[tuple, tuple[tuple, ...]] = {}

    @property
    def nodes(self) -> int:
        return self.counter.count

    def _atoms_for(self, support: tuple[Element, ...]) -> tuple[tuple, ...]:
        cached = self._atom_items.get(support)
        if cached is None:
            catalog = enumerate_atoms(self.group, support)
            cached = tuple(a.items for a in catalog)
            self._atom_items[support] = cached
        return cached

    def _mask(self, items: tuple) -> int:
        memo = self._memo
        found = memo.get(items)
        if found is not None:
            return found
        self.counter.tick()
        atoms = self._atoms_for(tuple(g for g, _ in items))
        mask = 0
        for aitems in atoms:
            rest = _subtract(items, aitems)
            if rest is not None:
                mask |= self._mask(rest) << 1
        memo[items] = mask
        return mask

    def length_set(self, seq: Sequence) -> Lengths:
        """Exact L(B) of a zero-sum sequence B."""
        if seq.group != self.group:
            raise ValueError("sequence belongs to a different group")
        if not seq.is_zero_sum:
            raise ValueError(f"L(B) requires a zero-sum sequence, sigma={seq.sigma}")
        zero = self.group.zero
        zeros = seq.multiplicity(zero)
        core = tuple(p for p in seq.items if p[0] != zero)
        mask = self._mask(core)
        return tuple(v + zeros for v in mask_to_lengths(mask))

    def max_length_with_length2_atom(self, seq: Sequence, atom2: Sequence) -> int:
        """max L(B) computed as 1 + max L(B / A1) for a dividing length-2 atom.

        The identity is checked against the direct computation and a mismatch
        raises, since it would mean the engine itself is inconsistent.
        """
        if atom2.length != 2 or not atom2.is_atom():
            raise ValueError("second argument must be an atom of length 2")
        if not atom2.divides(seq):
            raise ValueError("the length-2 atom must divide the sequence")
        via_removal = 1 + max(self.length_set(seq.divide(atom2)))
        direct = max(self.length_set(seq))
        if via_removal != direct:
            raise AssertionError(
                f"max-length identity failed: {via_removal} != {direct}"
            )
        return via_removal


def _subtract(items: tuple, sub: tuple) -> Optional[tuple]:
    """items - sub as sorted pair tuples, or None when sub does not divide."""
    out = []
    i = 0
    n = len(items)
    for g, m in sub:
        while i < n and items[i][0] != g:
            out.append(items[i])
            i += 1
        if i == n:
            return None
        have = items[i][1]
        if have < m:
            return None
        if have > m:
            out.append((g, have - m))
        i += 1
    out.extend(items[i:])
    return tuple(out)


# -- derived invariants -----------------------------------------------


def delta(lengths: Iterable[int]) -> tuple[int, ...]:
    """Set of successive gaps of a finite set of integers."""
    vals = sorted(set(lengths))
    return tuple(sorted({b - a for a, b in zip(vals, vals[1:])}))


def rho(lengths: Iterable[int]) -> Fraction:
    """Elasticity max/min; rho({0}) = 1 by convention."""
    vals = sorted(set(lengths))
    if not vals:
        raise ValueError("elasticity of an empty set is undefined")
    if vals == [0]:
        return Fraction(1)
    if vals[0] <= 0:
        raise ValueError(f"length set may contain 0 only as {{0}}, got {vals}")
    return Fraction(vals[-1], vals[0])


@dataclass(frozen=True)
class AampWitness:
    """Decomposition L = y + (L' u L* u L'') matching the AAMP shape."""

    y: int
    difference: int
    period: tuple[int, ...]
    bound: int
    l_prime: tuple[int, ...]
    l_star: tuple[int, ...]
    l_dprime: tuple[int, ...]


def is_aamp(lengths: Iterable[int], d: int, M: int) -> Optional[AampWitness]:
    """Witness that the set is an AAMP with difference d and bound M, if any.

    Searches all shifts y (anchored at members, since min L* = 0) and all
    central windows; the period is derived from the residues seen inside the
    window and must reproduce the window exactly.
    """
    if d < 1 or M < 0:
        raise ValueError("need difference >= 1 and bound >= 0")
    L = sorted(set(lengths))
    if not L:
        return None
    for y in L:
        lp = [x for x in L if x < y]
        if lp and y - lp[0] > M:
            continue
        for z in L:
            if z < y:
                continue
            ld = [x for x in L if x > z]
            if ld and ld[-1] - z > M:
                continue
            window = [x for x in L if y <= x <= z]
            period = tuple(sorted({(x - y) % d for x in window} | {d}))
            residues = {p % d for p in period}
            if any((x - y) % d not in residues for x in L):
                continue
            generated = {
                y + p + d * j
                for p in period
                for j in range((z - y) // d + 1)
            }
            if {v for v in generated if y <= v <= z} != set(window):
                continue
            return AampWitness(
                y=y,
                difference=d,
                period=period,
                bound=M,
                l_prime=tuple(x - y for x in lp),
                l_star=tuple(x - y for x in window),
                l_dprime=tuple(x - y for x in ld),
            )
    return None
