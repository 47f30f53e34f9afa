"""Numerical monoids: the same length-set questions in additive arithmetic.

A numerical monoid <n1, ..., nt> is a co-finite additive submonoid of the
nonnegative integers; its atoms are the generators.  These monoids are
strongly primary, which forces a gap: elasticities of length sets never fall
strictly between 1 and a computable beta > 1.  Products of such monoids
eventually cannot realize shifted copies of a fixed set, which separates their
length-set systems from every system coming from zero-sum sequences -- except
in the two small cases checked at the end.
"""

from zerolen import (
    NumericalMonoid,
    ProductMonoid,
    beta_gap,
    verify_elasticity_gap,
    verify_thm57_case,
    y_L_bound,
)

print("=== Length sets and invariants ===\n")
for gens in ([2, 3], [2, 5], [3, 4, 5]):
    H = NumericalMonoid(gens)
    rows = {a: list(H.length_set(a)) for a in (6, 10, 12, 30) if H.contains(a)}
    print(f"{H!r}: elasticity {H.elasticity()}, min distance {H.min_delta()}, "
          f"Frobenius number {H.frobenius}")
    for a, L in rows.items():
        print(f"    L({a}) = {L}")

print("\n=== The elasticity gap ===\n")
for gens in ([2, 3], [2, 5]):
    H = NumericalMonoid(gens)
    gap = beta_gap(H)
    rep = verify_elasticity_gap(H, 200)
    print(f"{H!r}: M({gap.b}) = {gap.m_b}, M({gap.u}) = {gap.m_u} "
          f"-> beta = min({gap.beta1}, {gap.beta2}) = {gap.beta}")
    print(f"    rho(L(a)) in {{1}} u [{gap.beta}, oo) for all a <= {rep.bound}: "
          f"{'confirmed' if rep.ok else rep.counterexamples[:3]}")

print("\n=== Products forget shifted sets ===\n")
H = NumericalMonoid([2, 3])
D = ProductMonoid([H, H])
rep = y_L_bound(D, [2, 3], search_bound=120, window=10)
print(f"in {H!r} x {H!r}, the set y + {{2,3}} stops being a length set:")
print(f"    bound y_L = {rep.y_l}; sweep over components <= {rep.search_bound} "
      f"found {len(rep.violations)} realizations for y in {list(rep.window)}")

print("\n=== When F(P) x D1 has a zero-sum system ===\n")
for gens, case in (([2, 3], "b2"), ([2, 5], "b2"), ([2, 3], "b3")):
    rep = verify_thm57_case(NumericalMonoid(gens), case, 20)
    label = f"F(P) x {NumericalMonoid(gens)!r} vs case {case}"
    if rep.status == "pass":
        print(f"{label}: bounded systems agree up to max {rep.bound}")
    else:
        print(f"{label}: {rep.status} ({'; '.join(rep.hypothesis_failures)})")
