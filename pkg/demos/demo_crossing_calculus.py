"""Tour of the crossing-change calculus on combinatorial diagrams.

Evaluates the invariant difference formulas on the six-crossing
generator, checks the order-2 alternating sum, and exercises the
immersion invariant with its jump rules.
"""

from fractions import Fraction

from haefliger import (
    HomotopyEvent,
    circle,
    delta_h_full,
    delta_h_reduced,
    e_invariant,
    e_jump,
    generator_diagram,
    i_x_dirac,
    jacobian_det,
    murai_ohba_certificate,
    smale_from_h,
    v_alternating,
)

print("=== The six-crossing generator diagram ===")
d = generator_diagram(1)
print("crossings:", d.m, " nonzero lk pairs:", len(d.lk))
for (a, b), value in sorted(d.lk.items()):
    print(f"  lk(L{a.crossing}^{a.level}, L{b.crossing}^{b.level}) = {value}")

print("\n=== Invariant differences ===")
for s in [{1}, {2}, {1, 2}, {1, 2, 3}, set(range(1, 7))]:
    full = delta_h_full(d, s)
    reduced = delta_h_reduced(d, s)
    assert full == reduced
    print(f"  delta H for S = {sorted(s) or '{}'}: {full}")

print("\n=== Finite-type behaviour ===")
print("alternating sum over subsets of {1}:      ", v_alternating(0, d, [1]))
print("alternating sum over subsets of {1, 4}:   ", v_alternating(0, d, [1, 4]))
print("alternating sum over subsets of {1, 2, 3}:", v_alternating(0, d, [1, 2, 3]))

print("\n=== Immersion invariant and Smale invariant ===")
print("I(X) of the generator diagram:", i_x_dirac(d))
print("E for h = 1:", e_invariant(1, d))
print("Smale invariant for h = 1:", smale_from_h(1))

print("\n=== Jump rules ===")
events = [
    HomotopyEvent("definite_tangency"),
    HomotopyEvent("indefinite_tangency", index=1, joins_components=True,
                  lk00=2, lk11=1),
    HomotopyEvent("indefinite_tangency", index=1, joins_components=False),
    HomotopyEvent("triple_point", pattern="all_distinct"),
    HomotopyEvent("triple_point", pattern="i_eq_j"),
]
for event in events:
    detail = event.pattern or f"index {event.index}, joins={event.joins_components}"
    print(f"  {event.kind} ({detail}): jump {e_jump(event, 1)}")

print("\n=== Single-crossing unknotting certificate ===")
l0 = circle((0, 0, 0), 2.0, (0, 0, 1), n=48, phase=0.13)
l1 = circle((2, 0, 0), 2.0, (0, 1, 0.2), n=48, phase=0.29)
cert, switched, delta = murai_ohba_certificate(l0, l1)
print("switch set:", sorted(switched), " delta H:", delta)

print("\n=== Coordinate-change Jacobian ===")
for k in (1, 2, 3, 4):
    print(f"  k = {k}: det = {jacobian_det(k)}")
