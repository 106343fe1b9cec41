# The two-parameter family of twist groups, indexed by (blocks, handles).
#
# For each pair (n, k) the group generated by the 2k+1 chain twists repeated
# across n blocks is identified with a known group, except for one column
# that stays open.  The table below prints the identification for small n, k.

from twistkit import theta

TAGS = {
    theta.GroupTag.SL2Z: "SL(2,Z)",
    theta.GroupTag.BRAID_MOD_CENTER: "braid/center",
    theta.GroupTag.MOD_GENUS_TWO: "mod 2 surface",
    theta.GroupTag.SYMMETRIC_MCG: "symmetric mcg",
    theta.GroupTag.UNKNOWN: "?",
}

print("identification by (n, k):")
header = "  n\\k " + "".join(f"{k:>15}" for k in range(1, 5))
print(header)
for n in range(1, 7):
    row = f"{n:>5} "
    for k in range(1, 5):
        row += f"{TAGS[theta.lattice_tag(n, k)]:>15}"
    print(row)

# Candidate presentations.  The relator lists depend only on k except in the
# small-n columns, where extra relations appear.
for n, k in ((5, 2), (1, 3), (2, 2)):
    pres = theta.presentation_for(n, k)
    print()
    print(f"(n, k) = ({n}, {k})  tag {pres.tag.value}  generators {pres.generators}")
    print("  relators:", ", ".join(r.name for r in pres.relators))

# Machine checks: every candidate relator holds in the symplectic image, and
# for n >= 3 the relators of the braid group mod center hold on the nose.
print()
report = theta.check_relations("symplectic", 3, 2)
print(f"[{report.experiment}] engine={report.engine} status={report.status}")
for check in report.checks:
    print(f"  {check.name}: {check.status}  ({check.witness})")

print()
report = theta.check_relations("braid", 3, 1)
print(f"[{report.experiment}] engine={report.engine} status={report.status}")
for check in report.checks:
    print(f"  {check.name}: {check.status}  ({check.witness})")
