"""
Census of group actions on a fixed genus
========================================

For a group G and a target genus g, first list the admissible branching
data (quotient genus plus branch orders compatible with Riemann-Hurwitz),
then enumerate every Hurwitz vector realizing each datum. Simultaneous
conjugation does not change the cover up to isomorphism, so the census can
also be taken one representative per orbit.
"""

from cwmoduli import (EnumerationOptions, build_cyclic, build_metacyclic,
                      MetacyclicParams, enumerate_branching_data,
                      enumerate_hurwitz_vectors)


def census(label, G, g):
    print(f"{label}, genus {g}")
    total = total_orbits = 0
    for d in enumerate_branching_data(G, g):
        raw = list(enumerate_hurwitz_vectors(G, d))
        orbits = list(enumerate_hurwitz_vectors(
            G, d, EnumerationOptions(up_to_conjugacy=True)))
        total += len(raw)
        total_orbits += len(orbits)
        print(f"  quotient genus {d.g_quot}, branch orders "
              f"{list(d.branch_orders)}: {len(raw)} vectors, "
              f"{len(orbits)} orbits")
    print(f"  total: {total} vectors, {total_orbits} orbits")
    print()


census("Z/3", build_cyclic(3), 6)
census("Z/2", build_cyclic(2), 3)
census("S3", build_metacyclic(MetacyclicParams(3, 2, 2)), 3)

# a small census in full: the lone Z/2 cover of genus 2 branched over six
# points of the sphere, then every vector over the torus
G = build_cyclic(2)
print("Z/2, genus 2, every vector:")
for d in enumerate_branching_data(G, 2):
    for v in enumerate_hurwitz_vectors(G, d):
        print("  ", v)
