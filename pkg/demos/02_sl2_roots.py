# Square and cubic roots of -Id inside SL(2, Z).
#
# An integer matrix with determinant 1 satisfies m^2 = -Id exactly when its
# trace is 0, and m^3 = -Id exactly when its trace is 1.  Both conditions
# force |trace| < 2, so every such root is elliptic and reduces, by conjugation
# in SL(2, Z), to one of finitely many canonical matrices.

from twistkit import sl2, words

# The two anchor roots come from short words in the generators
#   A = [[1, 1], [0, 1]]   and   B = [[1, 0], [-1, 1]].
aba = sl2.evaluate_generator_word(words.parse_word("s1 s2 s1", 3))
ab = sl2.evaluate_generator_word(words.parse_word("s1 s2", 3))
print("ABA =", aba, " order", sl2.classify(aba).order)
print("AB  =", ab, " order", sl2.classify(ab).order)
print("ABA is the quarter turn:", aba == sl2.QUARTER_TURN)
print("AB is the sixth turn:   ", ab == sl2.SIXTH_TURN)

# Enumerate all roots with entries bounded by 10 and sort them into
# conjugacy classes.
for power in (2, 3):
    roots = sl2.roots_of_minus_identity(power, 10)
    print()
    print(f"roots of -Id with m^{power} = -Id and entries in [-10, 10]: {len(roots)}")
    buckets = {}
    for root in roots:
        cert = sl2.reduce_elliptic(root)
        buckets.setdefault(cert.canonical, []).append(root)
    for canonical, members in sorted(buckets.items(), key=lambda kv: str(kv[0])):
        print(f"  class of {canonical}: {len(members)} members")

# A sample reduction with its certificate.  The conjugator g satisfies
# g m g^-1 = canonical, and the certificate re-checks this on construction.
m = sl2.conjugate_family(sl2.QUARTER_TURN, 3)
cert = sl2.reduce_elliptic(m)
print()
print("reduce", m)
print("  canonical: ", cert.canonical)
print("  conjugator:", cert.conjugator)

# Matrices translate back to words in A and B.
word = sl2.word_from_matrix(m)
print("  word for m:", words.format_word(word))
print("  word evaluates back to m:", sl2.evaluate_generator_word(word) == m)
