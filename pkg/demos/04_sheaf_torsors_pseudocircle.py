"""Locally trivial, globally twisted: sheaf torsors on the pseudocircle.

Run with: python demos/04_sheaf_torsors_pseudocircle.py
"""

import torsorkit as tk

# The pseudocircle is the 4-point finite model of the circle: two open
# points, and two closed points whose minimal neighborhoods are the arcs.
psc = tk.pseudocircle()
print("pseudocircle opens:", psc.opens)
print("components of the arc overlap {0,1}:",
      tk.connected_components(psc, (0, 1)))

# Sections of the constant Z/2 sheaf are locally constant functions, so
# the connected arcs carry 2 sections while the 2-component overlap
# carries 4.
z2 = tk.catalog_group("cyclic(2)")
gs = tk.constant_group_sheaf(psc, z2)
print("constant Z/2 sheaf section counts per open:", gs.sets.sizes)

# Gluing the sheaf against itself along the two-arc cover, with transition
# data on the overlap. The twisted transition flips one overlap component:
# each arc still carries 2 local sections, but nothing glues globally.
u1, u2 = psc.index_of((0, 1, 2)), psc.index_of((0, 1, 3))
for twist, label in ((0, "trivial"), (1, "twisted")):
    datum = tk.pseudocircle_descent_datum(z2, twist)
    torsor = tk.glue_from_cocycle(datum)
    print(f"\n{label} transition data:")
    print(f"  sections over arc 1: {len(tk.sections(torsor, u1))}")
    print(f"  sections over arc 2: {len(tk.sections(torsor, u2))}")
    print(f"  global sections:     {len(tk.global_sections(torsor))}")

# Extracting transition data back from chosen local sections returns a
# cocycle equivalent to the one we glued with; for the twisted torsor the
# extracted transition is never constant on the overlap, whatever the
# choice of local sections.
datum = tk.pseudocircle_descent_datum(z2, 1)
torsor = tk.glue_from_cocycle(datum)
cover = datum.cover
print("\nextracted transitions for all choices of local sections:")
for s1 in tk.sections(torsor, cover[0]):
    for s2 in tk.sections(torsor, cover[1]):
        extracted = tk.extract_cocycle(torsor, cover, (s1, s2))
        values = tk.constant_section_tuple(z2, 2, extracted.value(0, 1))
        print(f"  sections ({s1},{s2}) -> transition {values} on the overlap")

# On a one-point space the whole sheaf story collapses to an ordinary
# torsor, and a broken action fails with an explicit witness.
lifted = tk.lift_point_torsor(tk.affine_torsor(3, 1))
print("\none-point lift of the 3-point affine torsor:",
      len(tk.global_sections(lifted)), "global sections")
broken = tk.build_action(z2, 2, [[0, 1], [0, 1]])
report = tk.is_sheaf_torsor(tk.lift_point_action(broken))
print("trivial action lifted:", report.verdict, "-", report.witnesses[0])
