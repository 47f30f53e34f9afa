"""Bounded systems of sets of lengths and the system-level invariants.

The enumeration core is a forward dynamic program over multisets packed into
a single integer (one bit field per support element), walking sizes upward:
a state is a zero-sum multiset, its value the bitmask of factorization
lengths, and pushing an atom onto a finished state is one integer addition.
Every result at this level is a bounded certificate: it speaks about all
zero-sum sequences up to the stated length bound, never about the full
infinite system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .atoms import enumerate_atoms
from .budget import NodeCounter, ResourceLimitError
from .families import family_branches, intersection_witness
from .groups import Element, FiniteAbelianGroup
from .lengths import delta, engine_for, mask_to_lengths
from .sequences import Sequence

Lengths = tuple[int, ...]

_SWEEPS: dict[tuple, list[dict[int, int]]] = {}


def default_bound(group: FiniteAbelianGroup) -> int:
    """Default enumeration bound per group order (tunable by every caller)."""
    if group.order <= 5:
        return 20
    if group.order <= 9:
        return 16
    if group.order <= 16:
        return 12
    return 10


# ---------------------------------------------------------------------------
# packed forward sweep
# ---------------------------------------------------------------------------


def _pack_layout(bound: int, n_fields: int) -> int:
    bits = max(4, (bound + 1).bit_length())
    if bits * n_fields > 600:  # keeps keys to a few machine words
        raise ResourceLimitError("support too large for the packed sweep")
    return bits


def _sweep(
    group: FiniteAbelianGroup, support: tuple[Element, ...], bound: int
) -> list[dict[int, int]]:
    """levels[s] maps packed zero-sum multisets of size s to length bitmasks."""
    key = (group.invariant_factors, support, bound)
    cached = _SWEEPS.get(key)
    if cached is not None:
        return cached

    bits = _pack_layout(bound, len(support))
    pos = {g: i * bits for i, g in enumerate(support)}
    catalog = enumerate_atoms(group, support)
    atoms_by_len: dict[int, list[int]] = {}
    for atom in catalog:
        if atom.length <= bound:
            packed = sum(m << pos[g] for g, m in atom.items)
            atoms_by_len.setdefault(atom.length, []).append(packed)

    counter = NodeCounter()
    levels: list[dict[int, int]] = [dict() for _ in range(bound + 1)]
    levels[0][0] = 1
    for s in range(bound + 1):
        cur = levels[s]
        if not cur:
            continue
        pairs = [
            (ak, levels[s + alen])
            for alen, aks in atoms_by_len.items()
            if s + alen <= bound
            for ak in aks
        ]
        if not pairs:
            continue
        counter.tick(len(cur) * len(pairs))
        for state, mask in cur.items():
            shifted = mask << 1
            for ak, tgt in pairs:
                nk = state + ak
                tgt[nk] = tgt.get(nk, 0) | shifted

    _SWEEPS[key] = levels
    return levels


def _unpack(
    group: FiniteAbelianGroup,
    support: tuple[Element, ...],
    bits: int,
    state: int,
) -> Sequence:
    field = (1 << bits) - 1
    pairs = []
    for i, g in enumerate(support):
        m = (state >> (i * bits)) & field
        if m:
            pairs.append((g, m))
    return Sequence.build(group, pairs)


# ---------------------------------------------------------------------------
# bounded systems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SystemEntry:
    lengths: Lengths
    min_length: int
    witness: Sequence


@dataclass(frozen=True)
class BoundedSystem:
    group: FiniteAbelianGroup
    subset: tuple[Element, ...]
    bound: int
    entries: tuple[SystemEntry, ...]

    @cached_property
    def sets(self) -> dict[Lengths, SystemEntry]:
        return {e.lengths: e for e in self.entries}

    def __contains__(self, lengths: Iterable[int]) -> bool:
        return tuple(sorted(set(lengths))) in self.sets

    def length_sets(self) -> tuple[Lengths, ...]:
        return tuple(sorted(self.sets))

    def __len__(self) -> int:
        return len(self.entries)


def bounded_system(
    group: FiniteAbelianGroup,
    subset: Iterable[Element] | None = None,
    bound: int | None = None,
) -> BoundedSystem:
    """All distinct L(B) over zero-sum B with supp(B) in subset and |B| <= bound.

    The default subset is the nonzero elements.  When the subset contains 0,
    the zero element is handled by the shift rule L(0^y B) = y + L(B) rather
    than enumerated.
    """
    if bound is None:
        bound = default_bound(group)
    if bound < 0:
        raise ValueError("bound must be >= 0")
    elems = (
        group.nonzero_elements
        if subset is None
        else tuple(sorted({group.validate(g) for g in subset}, key=group.index))
    )
    with_zero = group.zero in elems
    support = tuple(g for g in elems if g != group.zero)
    levels = _sweep(group, support, bound)
    bits = _pack_layout(bound, len(support))

    best: dict[int, tuple[int, int]] = {}  # mask -> (size, state)
    for size, level in enumerate(levels):
        for state, mask in level.items():
            if mask not in best:
                best[mask] = (size, state)

    chosen: dict[Lengths, tuple[int, int, int]] = {}  # lengths -> (size, state, zeros)
    for mask, (size, state) in best.items():
        shifts = range(bound - size + 1) if with_zero else (0,)
        for y in shifts:
            lengths = tuple(v + y for v in mask_to_lengths(mask))
            old = chosen.get(lengths)
            if old is None or size + y < old[0] + old[2]:
                chosen[lengths] = (size, state, y)

    entries = tuple(
        SystemEntry(
            lengths,
            size + y,
            _unpack(group, support, bits, state).with_zeros(y),
        )
        for lengths, (size, state, y) in sorted(chosen.items())
    )
    return BoundedSystem(group, elems, bound, entries)


def observed_delta(system: BoundedSystem) -> tuple[int, ...]:
    """Union of the distance sets of every length set in the bounded system."""
    out: set[int] = set()
    for entry in system.entries:
        out.update(delta(entry.lengths))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# k-th elasticity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RhoKCertificate:
    k: int
    value: int
    exact: bool
    method: str  # "sweep" or "witness"
    bound: int
    witness: Optional[Sequence]
    witness_lengths: Optional[Lengths]


def _rho_k_from_system(system: BoundedSystem, k: int):
    best, best_entry, best_shift = k, None, k
    for entry in system.entries:
        top = entry.lengths[-1]
        for j in entry.lengths:
            if j > k:
                break
            cand = (k - j) + top
            if cand > best:
                best, best_entry, best_shift = cand, entry, k - j
    return best, best_entry, best_shift


def rho_k(
    group: FiniteAbelianGroup, k: int, bound: int | None = None
) -> RhoKCertificate:
    """Largest max L over bounded length sets containing k, as a certificate.

    When the complete sweep up to k*D(G) is affordable the value is exact by
    exhaustion.  Otherwise the value comes from engine-verified witness
    sequences out of the family tables and is certified exact whenever it
    meets the arithmetic cap floor(k*D/2) (every factorization of a product
    of k atoms has between |B|/D and |B|/2 factors).
    """
    if k < 2:
        raise ValueError("rho_k needs k >= 2")
    if group.order < 3:
        return RhoKCertificate(k, k, True, "sweep", 0, None, None)
    D = enumerate_atoms(group).davenport
    need = k * D
    if bound is not None and bound < need:
        raise ValueError(f"bound {bound} is below the exhaustive requirement {need}")
    m = len(group.nonzero_elements)
    est = math.comb(need + m, m) // group.order
    cap = (k * D) // 2

    if est <= 600_000:
        system = bounded_system(group, None, need)
        value, entry, shift = _rho_k_from_system(system, k)
        wit = entry.witness.with_zeros(shift) if entry else None
        wl = tuple(v + shift for v in entry.lengths) if entry else None
        return RhoKCertificate(k, value, True, "sweep", need, wit, wl)

    # witness route over the family tables
    engine = engine_for(group)
    best = (k, None, None)
    for br in family_branches(group):
        kk = 0
        while True:
            base = br.try_member(0, kk)
            if base is None:
                if kk > 3 * k + 8:
                    break
                kk += 1
                continue
            if min(base) > k:
                break
            top = max(base)
            for j in base:
                if j <= k and (k - j) + top > best[0]:
                    best = ((k - j) + top, br, (kk, k - j))
            kk += 1
    value, br, params = best
    wit = wl = None
    if br is not None:
        kk, shift = params
        wit = br.witness(0, kk).with_zeros(shift)
        verified = engine.length_set(wit)
        wl = verified
        if max(verified) != value or not any(j == k for j in verified):
            raise AssertionError(
                f"witness for rho_{k} over {group} realized {verified}, "
                f"expected max {value} containing {k}"
            )
    return RhoKCertificate(k, value, value == cap, "witness", need, wit, wl)


# ---------------------------------------------------------------------------
# distance invariants over all subsets
# ---------------------------------------------------------------------------


def _distance_mask(length_mask: int) -> int:
    """Bit d set iff d is a distance of the set encoded by length_mask."""
    vals = mask_to_lengths(length_mask)
    out = 0
    for a, b in zip(vals, vals[1:]):
        out |= 1 << (b - a)
    return out


def delta_star(group: FiniteAbelianGroup, bound: int | None = None) -> tuple[int, ...]:
    """Bounded certificate for {min Delta(G0) : G0 with observed distances}.

    One sweep over the full nonzero support records, per exact support, the
    union of observed distance sets; a subset-sum (zeta) transform then gives
    the observed Delta of every subset at once.
    """
    if group.order > 16:
        raise ValueError("delta_star enumerates subsets; needs |G| <= 16")
    if bound is None:
        bound = default_bound(group)
    support = group.nonzero_elements
    m = len(support)
    levels = _sweep(group, support, bound)
    bits = _pack_layout(bound, m)
    field = (1 << bits) - 1

    dist_of_mask: dict[int, int] = {}
    by_support = [0] * (1 << m)
    for level in levels:
        for state, mask in level.items():
            d = dist_of_mask.get(mask)
            if d is None:
                d = _distance_mask(mask)
                dist_of_mask[mask] = d
            if d == 0:
                continue
            smask = 0
            st = state
            i = 0
            while st:
                if st & field:
                    smask |= 1 << i
                st >>= bits
                i += 1
            by_support[smask] |= d

    for i in range(m):
        bit = 1 << i
        for s in range(1 << m):
            if s & bit:
                by_support[s] |= by_support[s ^ bit]

    mins: set[int] = set()
    for acc in by_support:
        if acc:
            mins.add((acc & -acc).bit_length() - 1)
    return tuple(sorted(mins))


def delta1_envelope(
    group: FiniteAbelianGroup, bound: int | None = None
) -> tuple[int, ...]:
    """Documented surrogate for the limit set Delta_1: Delta* plus the
    observed distances dividing some member of Delta*."""
    star = set(delta_star(group, bound))
    observed = observed_delta(bounded_system(group, None, bound))
    env = star | {d for d in observed if any(s % d == 0 for s in star)}
    return tuple(sorted(env))


# ---------------------------------------------------------------------------
# comparisons and the intersection
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InclusionVerdict:
    holds: Optional[bool]  # None when bounded data cannot certify the failure
    missing_certified: tuple[Lengths, ...]
    missing_uncertified: tuple[Lengths, ...]


@dataclass(frozen=True)
class ComparisonReport:
    margin: int
    a_in_b: InclusionVerdict
    b_in_a: InclusionVerdict

    @property
    def equal(self) -> bool:
        return bool(self.a_in_b.holds) and bool(self.b_in_a.holds)


def _one_sided(
    src: BoundedSystem, dst: BoundedSystem, margin: int, dst_davenport: int
) -> InclusionVerdict:
    certified, uncertified = [], []
    for lengths in src.length_sets():
        if lengths[-1] > margin or lengths in dst.sets:
            continue
        # absence is certified when every realization would fit the dst bound
        if dst.bound >= dst_davenport * lengths[0]:
            certified.append(lengths)
        else:
            uncertified.append(lengths)
    holds: Optional[bool]
    if certified:
        holds = False
    elif uncertified:
        holds = None
    else:
        holds = True
    return InclusionVerdict(holds, tuple(certified), tuple(uncertified))


def compare_systems(a: BoundedSystem, b: BoundedSystem) -> ComparisonReport:
    """Bounded inclusion verdicts both ways, restricted to a safe margin."""
    margin = min(a.bound, b.bound) // 2
    da = enumerate_atoms(a.group).davenport
    db = enumerate_atoms(b.group).davenport
    return ComparisonReport(
        margin,
        _one_sided(a, b, margin, db),
        _one_sided(b, a, margin, da),
    )


@dataclass(frozen=True)
class IntersectionReport:
    sets: tuple[Lengths, ...]
    base_group: FiniteAbelianGroup
    max_value: int
    witness_bounds: dict[tuple[int, ...], int]
    unconfirmed: tuple[tuple[Lengths, tuple[int, ...]], ...]


def bounded_intersection(
    groups: Iterable[FiniteAbelianGroup], max_value: int = 9
) -> IntersectionReport:
    """Sets of lengths present in every group's system, certified by witnesses.

    Candidates come from an exhaustive bounded system of the smallest group
    (whose closed form makes it the minimal system), so nothing outside it can
    lie in the intersection.  Membership in each remaining group is certified
    by an engine-verified realizing sequence; the reported per-group bound is
    the longest witness used.
    """
    gs = sorted(set(groups), key=lambda g: (g.order, g.invariant_factors))
    if not gs:
        raise ValueError("need at least one group")
    if any(g.order < 3 for g in gs):
        raise ValueError("the intersection statement needs |G| >= 3")
    base = gs[0]
    base_sys = bounded_system(base, base.elements, default_bound(base))
    candidates = [L for L in base_sys.length_sets() if L[-1] <= max_value]
    if len(gs) == 1:
        return IntersectionReport(
            tuple(candidates), base, max_value,
            {base.invariant_factors: base_sys.bound}, (),
        )

    confirmed: list[Lengths] = []
    unconfirmed: list[tuple[Lengths, tuple[int, ...]]] = []
    wit_bounds: dict[tuple[int, ...], int] = {g.invariant_factors: 0 for g in gs}
    for L in candidates:
        k = L[-1] - L[0]
        y = L[0] - 2 * k
        shape = tuple(range(L[0], L[-1] + 1))
        ok = y >= 0 and L == shape
        for g in gs:
            if not ok:
                break
            wit = intersection_witness(g, y, k)
            if engine_for(g).length_set(wit) != L:
                ok = False
                unconfirmed.append((L, g.invariant_factors))
                break
            key = g.invariant_factors
            wit_bounds[key] = max(wit_bounds[key], wit.length)
        if ok:
            confirmed.append(L)
        elif y < 0 or L != shape:
            unconfirmed.append((L, base.invariant_factors))
    return IntersectionReport(
        tuple(confirmed), base, max_value, wit_bounds, tuple(unconfirmed)
    )
