"""From group actions to torsors: orbits, witnesses, and unique transport.

Run with: python demos/01_group_actions_and_torsors.py
"""

import torsorkit as tk

# A group is a validated Cayley table; the catalog carries the small ones.
s3 = tk.catalog_group("symmetric(3)")
print(f"symmetric(3): order {s3.order}, elements as one-line tuples:")
print(" ", tk.symmetric_elements(3))

# Acting on cosets is transitive but rarely free: the stabilizer of the
# identity coset is the whole subgroup.
H = tk.build_subgroup(s3, [0, 2])
cosets = tk.coset_action(s3, H)
print(f"\ncoset action on {cosets.set_size} cosets of a 2-element subgroup")
print("  orbit of coset 0:      ", tk.orbit(cosets, 0))
print("  stabilizer of coset 0: ", tk.stabilizer(cosets, 0))
free, witness = tk.is_free(cosets)
print(f"  free? {free}, witness (element, fixed point) = {witness}")

# Two disjoint swaps: free but not transitive, the complementary failure.
z2 = tk.catalog_group("cyclic(2)")
swaps = tk.build_action(z2, 4, [[0, 1, 2, 3], [1, 0, 3, 2]])
print("\ntwo disjoint swaps on 4 points:")
print("  free?      ", tk.is_free(swaps)[0])
print("  transitive?", tk.is_transitive(swaps), "(orbit of 0 misses point 2)")

# A torsor needs both at once; then every pair of points has a unique
# transporter, which behaves exactly like a difference.
z5 = tk.catalog_group("cyclic(5)")
torsor = tk.as_torsor(tk.left_translation_action(z5))
print("\ncyclic(5) acting on itself is a torsor; transporters compose:")
t_12 = tk.transporter(torsor, 1, 2)
t_24 = tk.transporter(torsor, 2, 4)
t_14 = tk.transporter(torsor, 1, 4)
print(f"  tr(1,2) = {t_12}, tr(2,4) = {t_24}, tr(1,4) = {t_14}")
print(f"  tr(2,4) * tr(1,2) = {z5.mul(t_24, t_12)}  (equals tr(1,4))")

# Choosing a basepoint identifies the torsor with the group, but the
# identification moves when the basepoint does.
for x0 in (0, 2):
    triv = tk.trivialization(torsor, x0)
    print(f"  basepoint {x0}: g -> g.x0 table = {triv.to_points}")
change = tk.basepoint_change(torsor, 0, 2)
print(f"  basepoint change 0 -> 2 is translation by h = {change.element}")

# Pushing the group law through the basepoint bijection makes the point
# set a group whose identity is the chosen basepoint, so different
# basepoints genuinely give different laws.
for x0 in (0, 2):
    law = tk.transported_group(torsor, x0)
    print(f"  transported law at basepoint {x0}: identity = {law.identity}, "
          f"3 * 4 = {law.cayley[3][4]}")
