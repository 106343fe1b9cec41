"""Braid words and Garside left normal forms.

A braid on n strands is spelled as a word in the Artin generators s_1..s_{n-1},
stored as signed indices (-i is the inverse of s_i).  Words multiply by
concatenation, left to right, and the permutation of a word is the matching
right-to-left composition of adjacent transpositions.

Every braid has a unique left normal form delta^p A_1 ... A_k where delta is
the positive half twist, each A_i is a permutation braid other than the
identity or delta, and consecutive factors are left weighted: every letter
that can start A_{i+1} can also end A_i.  Normal forms are computed by
rewriting inverse letters as delta^-1 times a positive complement and then
running local left-weighting sweeps over the factor sequence; equality of
braids, and equality modulo the center <delta^2>, reduce to comparing forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import perms


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators; letters are signed indices."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a braid group needs at least 2 strands")
        for letter in self.letters:
            if not 1 <= abs(letter) < self.strands:
                raise ValueError(
                    f"letter {letter} out of range for {self.strands} strands"
                )

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise ValueError("strand count mismatch")
        return BraidWord(self.strands, self.letters + other.letters)

    def inv(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-t for t in reversed(self.letters)))

    def __pow__(self, m: int) -> BraidWord:
        base = self if m >= 0 else self.inv()
        return BraidWord(self.strands, base.letters * abs(m))

    def __len__(self) -> int:
        return len(self.letters)

    def exponent_sum(self) -> int:
        return sum(1 if t > 0 else -1 for t in self.letters)


def generator(strands: int, index: int) -> BraidWord:
    return BraidWord(strands, (index,))


def flip(word: BraidWord) -> BraidWord:
    """The mirror automorphism s_i -> s_{n-i}; conjugation by the half twist."""
    n = word.strands
    return BraidWord(n, tuple((n - abs(t)) * (1 if t > 0 else -1) for t in word.letters))


def permutation_of(word: BraidWord) -> tuple[int, ...]:
    """The underlying permutation, in one-line notation."""
    p = perms.identity(word.strands)
    for letter in word.letters:
        p = perms.compose(p, perms.transposition(word.strands, abs(letter)))
    return p


def half_twist_word(strands: int) -> BraidWord:
    """The positive half twist delta as the word s_1 (s_2 s_1) ... (s_{n-1} ... s_1)."""
    letters = []
    for i in range(1, strands):
        letters.extend(range(i, 0, -1))
    return BraidWord(strands, tuple(letters))


@dataclass(frozen=True)
class CanonicalForm:
    """Left normal form delta^power A_1 ... A_k, factors as permutations."""

    strands: int
    power: int
    factors: tuple[tuple[int, ...], ...]

    def is_trivial(self) -> bool:
        return self.power == 0 and not self.factors

    def is_central(self) -> bool:
        return not self.factors and self.power % 2 == 0

    def canonical_length(self) -> int:
        return len(self.factors)

    def to_word(self) -> BraidWord:
        """Re-expand the form as a braid word."""
        n = self.strands
        delta = half_twist_word(n)
        word = delta ** self.power
        for factor in self.factors:
            word = word * BraidWord(n, perms.reduced_word(factor))
        return word

    def __str__(self) -> str:
        parts = [f"Δ^{self.power}"]
        parts.extend("[" + " ".join(map(str, f)) + "]" for f in self.factors)
        return " · ".join(parts)


def _normalise_factors(n: int, factors: list[tuple[int, ...]]) -> tuple[int, list]:
    """Left-weighting sweeps; returns (leading delta count, factor list).

    Each transfer moves one starting letter of a factor onto the end of its
    left neighbour, so weight migrates leftward until every adjacent pair is
    left weighted.  Identity factors are dropped between sweeps and the deltas
    that pile up at the front are stripped into the power.
    """
    ident = perms.identity(n)
    w0 = perms.reversal(n)
    factors = [f for f in factors if f != ident]
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            x, y = factors[i], factors[i + 1]
            movable = perms.left_descents(y) - perms.right_descents(x)
            while movable:
                t = perms.transposition(n, min(movable))
                x = perms.compose(x, t)
                y = perms.compose(t, y)
                changed = True
                movable = perms.left_descents(y) - perms.right_descents(x)
            factors[i], factors[i + 1] = x, y
        if changed:
            factors = [f for f in factors if f != ident]
    power = 0
    while factors and factors[0] == w0:
        factors.pop(0)
        power += 1
    return power, factors


def left_normal_form(word: BraidWord) -> CanonicalForm:
    """The left normal form of a braid word."""
    n = word.strands
    w0 = perms.reversal(n)
    factors = []
    delta_powers = []
    for letter in word.letters:
        t = perms.transposition(n, abs(letter))
        if letter > 0:
            factors.append(t)
            delta_powers.append(0)
        else:
            # s_i^-1 = delta^-1 (w0 sigma_i), the complement being positive.
            factors.append(perms.compose(w0, t))
            delta_powers.append(-1)
    # Push the delta powers to the front; delta^-1 P delta has permutation
    # w0 p w0 and the conjugation has order two.
    total = 0
    for i in range(len(factors) - 1, -1, -1):
        if total % 2:
            factors[i] = perms.compose(w0, perms.compose(factors[i], w0))
        total += delta_powers[i]
    extra, factors = _normalise_factors(n, factors)
    return CanonicalForm(n, total + extra, tuple(factors))


def equals(u: BraidWord, v: BraidWord) -> bool:
    """Whether two words spell the same braid."""
    if u.strands != v.strands:
        raise ValueError("strand count mismatch")
    return left_normal_form(u) == left_normal_form(v)


def equals_mod_center(u: BraidWord, v: BraidWord) -> bool:
    """Whether two words agree up to a power of the central full twist."""
    if u.strands != v.strands:
        raise ValueError("strand count mismatch")
    return left_normal_form(u * v.inv()).is_central()
