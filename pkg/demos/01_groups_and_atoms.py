"""Groups, minimal zero-sum sequences, and Davenport constants.

A sequence over a finite abelian group is a finite multiset of elements; it is
a zero-sum sequence when its terms add to the identity, and an atom (a minimal
zero-sum sequence) when no proper nonempty sub-multiset already sums to zero.
The Davenport constant D(G) is the longest an atom can get.  This script walks
the enumeration machinery over the groups with small Davenport constant.
"""

from zerolen import (
    classify_c2c4,
    davenport_lower_bound,
    enumerate_atoms,
    parse_group,
    parse_sequence,
)

print("=== Davenport constants by complete atom enumeration ===\n")
for spec in ("3", "4", "2x2", "2x2x2", "5", "2x4", "3x3", "2x2x2x2"):
    G = parse_group(spec)
    catalog = enumerate_atoms(G)
    lb = davenport_lower_bound(G)
    print(
        f"{G.label:>12}: D = {catalog.davenport}  "
        f"(lower bound {lb.value}{', exact' if lb.exact else ''});  "
        f"atoms by length: {catalog.counts()}"
    )

print("\n=== Every minimal zero-sum sequence over C2xC4, classified ===\n")
G = parse_group("2x4")
report = classify_c2c4(enumerate_atoms(G))
e, g = report.basis
print(f"basis: e = {e} of order 2 outside 2G, g = {g} of order 4\n")
for name, seqs in sorted(report.classes.items()):
    shown = ", ".join(s.literal() for s in seqs[:2])
    more = "" if len(seqs) <= 2 else f", ... ({len(seqs)} total)"
    print(f"  {name:5s} ({len(seqs)}): {shown}{more}")
print(f"\nall {sum(len(v) for v in report.classes.values())} atoms classified,"
      f" none left over: {report.ok}")

print("\n=== Atom tests on individual sequences ===\n")
for spec, text in (("5", "(1)^5"), ("5", "(1)^2*(4)^2"), ("2x4", "(1,0)*(0,1)*(0,2)*(1,1)")):
    G = parse_group(spec)
    s = parse_sequence(G, text)
    print(f"over {G.label}: {text:28s} sum={s.sigma}  atom? {s.is_atom()}")
