"""Left normal forms in the 4-strand braid group.

Every braid word factors uniquely as Delta^p A_1 ... A_k where Delta is the
half twist, each A_i is a permutation braid, and consecutive factors are
left weighted.  Two words represent the same braid exactly when the factors
agree, so the normal form decides the word problem.
"""

from twistkit import braid, words


def show(text):
    word = words.parse_word(text, 4)
    form = braid.left_normal_form(word)
    print(f"  {text:<18} ->  {form}")


print("normal forms of some 4-strand words")
show("a b a")
show("b a b")
show("a b c a b a")
show("(a b c)^2")
show("(c a b)^2")
show("(a b c)^4")
show("a A b B")

# The half twist itself, written out as a positive word.
delta = braid.half_twist_word(4)
print()
print("half twist word:", words.format_word(delta))
print("its normal form:", braid.left_normal_form(delta))

# Word problem: the braid relation holds, and the full twist is central
# but not trivial.
u = words.parse_word("a b a", 4)
v = words.parse_word("b a b", 4)
print()
print("a b a == b a b:", braid.equals(u, v))

full_twist = words.parse_word("(a b c)^4", 4)
empty = words.parse_word("", 4)
print("(a b c)^4 == 1:", braid.equals(full_twist, empty))
print("(a b c)^4 == 1 mod center:", braid.equals_mod_center(full_twist, empty))

# Conjugates of the half twist square to the full twist.  Written with c in
# front the square is exactly Delta; the other cyclic rotation is a proper
# conjugate of it.
square = words.parse_word("(a b c)^2", 4)
conj = words.parse_word("C", 4) * delta * words.parse_word("c", 4)
print()
print("(a b c)^2 == C Delta c:", braid.equals(square, conj))
print("(a b c)^2 == Delta:   ", braid.equals(square, delta))
print("(c a b)^2 == Delta:   ", braid.equals(words.parse_word("(c a b)^2", 4), delta))
