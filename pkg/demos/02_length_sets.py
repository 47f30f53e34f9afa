"""Sets of lengths: how many atoms can a factorization use?

A zero-sum sequence B factors into atoms in many ways; L(B) collects the
possible counts.  The engine computes L(B) exactly by a memoized recursion
over atom divisors.  Derived invariants: the distance set Delta(L) (successive
gaps), the elasticity rho(L) = max/min, and the AAMP shape every length set
over a finite group eventually takes.
"""

from zerolen import delta, engine_for, is_aamp, parse_group, parse_sequence, rho

EXAMPLES = [
    ("5", "(1)^5*(4)^5", "a fifth power times its inverse"),
    ("5", "(1)^5*(4)^3*(3)", "mixed support over C5"),
    ("5", "(1)*(2)^7*(3)^10", "a long sequence with period-3 structure"),
    ("2x4", "(1,0)*(0,1)^3*(1,1)*(1,0)*(0,3)^3*(1,3)", "U(-U) for a longest atom"),
    ("2x2x2x2", "(1,1,1,1)^2*(1,0,0,0)^3*(0,1,0,0)^3*(0,0,1,0)^3*(0,0,0,1)^2*(1,1,1,0)",
     "U^2 V over the rank-four 2-group"),
]

print("=== Exact length sets with their invariants ===\n")
for spec, text, label in EXAMPLES:
    G = parse_group(spec)
    eng = engine_for(G)
    s = parse_sequence(G, text)
    L = eng.length_set(s)
    print(f"{label}  [{G.label}]")
    print(f"  B = {text}")
    print(f"  L(B) = {list(L)},  Delta = {list(delta(L))},  rho = {rho(L)}\n")

print("=== The AAMP shape ===\n")
L = (3, 5, 6, 8, 9)
for d in (1, 2, 3):
    w = is_aamp(L, d, 0)
    print(f"{list(L)} as an AAMP with difference {d}, bound 0:",
          f"period {list(w.period)}" if w else "no decomposition")

print()
L2 = (2, 4, 5)
w = is_aamp(L2, 1, 2)
print(f"{list(L2)} with difference 1 needs bound 2:",
      f"y={w.y}, central part {list(w.l_star)}, tail {list(w.l_dprime)}" if w else "none")

print("\n=== Zeros only shift ===\n")
G = parse_group("5")
eng = engine_for(G)
base = parse_sequence(G, "(1)^5*(4)^5")
for y in (0, 2, 4):
    print(f"L(0^{y} * g^5(-g)^5) = {list(eng.length_set(base.with_zeros(y)))}")
