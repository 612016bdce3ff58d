"""
Exhaustive check of the full-length behaviour
=============================================

Walk every sequence over a small group and list the ones whose weighted
sumset misses an element.
"""

from wodot import GroupSpec, classify_full_length, verify_main_theorem

G = GroupSpec.cyclic(7)
report = verify_main_theorem(G, G.order + 1)
print(f"{G}: {report.total} sequences, ok = {report.ok}")
print("exceptions at length |G|:", len(report.exceptions))
for S, c in report.exceptions[:5]:
    print(" ", S, "misses", c.predicted_missing)

# the classifier never computes the sumset
S = report.exceptions[0][0]
print(classify_full_length(G, S).to_json())

for mods in [(2, 2), (2, 4), (3, 3)]:
    rep = verify_main_theorem(GroupSpec(mods), GroupSpec(mods).order + 1)
    print(GroupSpec(mods), rep.total, "sequences,", len(rep.exceptions), "exceptional, ok =", rep.ok)
