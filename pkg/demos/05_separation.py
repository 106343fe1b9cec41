"""Why the two-block column resists identification.

For n = 2 the long chain power (f1 ... f2k)^(4k+2) collapses in the
symplectic image, yet the same word is nontrivial in the braid group modulo
its center.  So the homology representation cannot see the difference
between the candidate quotients, and the braid-side computation shows the
collapse is a genuine extra relation if it holds at all.
"""

from twistkit import braid, symplectic, theta

for k in (1, 2, 3):
    report = theta.separation_evidence(k)
    print(f"[{report.experiment}] k={k} engine={report.engine} status={report.status}")
    for check in report.checks:
        print(f"  {check.name}: {check.status}  ({check.witness})")
    print()

# The k = 1 computation by hand.  Homology side: the word acts trivially.
model = symplectic.surface_model(2, 1)
word = braid.BraidWord(4, (1, 2)) ** 6
image = symplectic.evaluate_word(model, word)
print("(f1 f2)^6 acts as Id on homology:", symplectic.mats_equal(image, symplectic.identity_matrix(model)))

# Braid side: the normal form has no Delta power and four honest factors,
# so the word is not central and not trivial in B_4 / Z.
form = braid.left_normal_form(word)
print("normal form of (s1 s2)^6 in B_4:", form)
print("central:", form.is_central())
