"""
Free actions and the regular representation
===========================================

When a group acts without fixed points, the action on k-fold differentials
for k >= 2 is a plain multiple of the regular representation: every
irreducible appears with multiplicity proportional to its degree. The
multiple is forced by dimension count: n_k = (2k - 1)(g - 1)/|G|. Branched
actions break the pattern, and regular_multiple reports that by returning
None.
"""

from cwmoduli import (BranchingData, HurwitzVector, build_cyclic,
                      build_from_permutations, character_table, cw_character,
                      enumerate_hurwitz_vectors, genus, regular_multiple)

# an unramified Z/2 cover of a genus-2 curve has genus 3
G = build_cyclic(2)
datum = BranchingData(2, ())
g = genus(datum, G)
T = character_table(G, k_max=8, g_max=g)
v = next(iter(enumerate_hurwitz_vectors(G, datum)))
print(f"Z/2 acting freely, cover genus {g}, vector {v}")
for k in range(2, 7):
    mv = cw_character(v, T, k)
    print(f"  k={k}: mults {mv.mults} = {regular_multiple(mv, T)} "
          f"x regular, expected n_k = {(2 * k - 1) * (g - 1) // G.order}")

# same law on a nonabelian group: A4 acting freely on a genus-13 curve
A4 = build_from_permutations(["(1,2,3)", "(2,3,4)"])
datum = BranchingData(2, ())
g = genus(datum, A4)
T = character_table(A4, k_max=4, g_max=g)
v = next(iter(enumerate_hurwitz_vectors(A4, datum)))
print(f"\nA4 acting freely, cover genus {g}")
print("  degrees:", tuple(T.degrees))
for k in (2, 3, 4):
    mv = cw_character(v, T, k)
    print(f"  k={k}: mults {mv.mults} = {regular_multiple(mv, T)} x regular")

# a branched action is not a regular multiple; at k = 1 even free actions
# carry one extra trivial summand
G3 = build_cyclic(3)
T3 = character_table(G3, k_max=3, g_max=6)
branched = HurwitzVector(2, (1, 0, 0, 2), (2, 1))
print("\nbranched Z/3 action, genus 6:")
for k in (1, 2, 3):
    mv = cw_character(branched, T3, k)
    print(f"  k={k}: mults {mv.mults}, regular multiple:",
          regular_multiple(mv, T3))
