"""
How many connected components a free metacyclic action pins down
================================================================

For a split metacyclic group <x, y | x^m = y^n = 1, y x y^-1 = x^r>, the
order of the Schur multiplier H2(G, Z) has a gcd closed form. For nonabelian
G, distinct multiplier classes of free actions land in distinct connected
components of the locus of curves whose higher differentials are regular
multiples, so the multiplier order is a lower bound on the component count.
"""

from cwmoduli import (MetacyclicParams, NoFreeAction, rr_component_lower_bound,
                      schur_multiplier_order)

print("dihedral family D_m = metacyclic(m, 2, m-1):")
for m in range(3, 13):
    res = schur_multiplier_order(MetacyclicParams(m, 2, m - 1))
    print(f"  |H2(D_{m})| = {res.d}")

print("\nsome non-dihedral cases:")
for m, n, r in [(5, 4, 2), (7, 3, 2), (3, 4, 2), (8, 2, 3), (12, 2, 5)]:
    res = schur_multiplier_order(MetacyclicParams(m, n, r))
    print(f"  metacyclic({m},{n},{r}): |H2| = {res.d}")

# the bound needs a free action: g - 1 must be a positive multiple of |G|
# and the quotient genus at least 2
print("\ncomponent lower bounds for D4 (order 8):")
D4 = MetacyclicParams(4, 2, 3)
for g in range(9, 34, 8):
    print(f"  genus {g}: >= {rr_component_lower_bound(D4, g)} components")

print("\ngenera where D4 admits no free action:")
for g in (8, 10, 1):
    try:
        rr_component_lower_bound(D4, g)
    except NoFreeAction as exc:
        print(f"  genus {g}: {exc}")
