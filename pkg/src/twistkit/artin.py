"""The action of braid words on a free group.

The strand action sends s_i to the automorphism

    x_i -> x_i x_{i+1} x_i^-1,    x_{i+1} -> x_i,

fixing the other generators.  It is faithful, so comparing images of the free
generators decides braid equality.  This module is the equality oracle for the
normal-form code and deliberately does not import it; free-group words are
tuples of nonzero ints, sign giving the exponent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord

Word = tuple[int, ...]


def free_reduce(letters) -> Word:
    """Cancel adjacent inverse pairs.

    >>> free_reduce((1, 2, -2, -1))
    ()
    """
    out: list[int] = []
    for t in letters:
        if out and out[-1] == -t:
            out.pop()
        else:
            out.append(t)
    return tuple(out)


def _inverse(word: Word) -> Word:
    return tuple(-t for t in reversed(word))


@dataclass(frozen=True)
class FreeGroupEndomorphism:
    """Images of the free generators x_1..x_rank, freely reduced."""

    rank: int
    images: tuple[Word, ...]

    def apply(self, word: Word) -> Word:
        """Substitute the images into a free-group word and reduce."""
        out: list[int] = []
        for t in word:
            image = self.images[abs(t) - 1]
            if t < 0:
                image = _inverse(image)
            for u in image:
                if out and out[-1] == -u:
                    out.pop()
                else:
                    out.append(u)
        return tuple(out)


def identity_endomorphism(rank: int) -> FreeGroupEndomorphism:
    return FreeGroupEndomorphism(rank, tuple((j,) for j in range(1, rank + 1)))


def compose(f: FreeGroupEndomorphism, g: FreeGroupEndomorphism) -> FreeGroupEndomorphism:
    """f o g, applying g first."""
    if f.rank != g.rank:
        raise ValueError("rank mismatch")
    return FreeGroupEndomorphism(f.rank, tuple(f.apply(w) for w in g.images))


def artin_action(word: BraidWord) -> FreeGroupEndomorphism:
    """The endomorphism of the rank-`strands` free group induced by `word`."""
    images = [(j,) for j in range(1, word.strands + 1)]
    for letter in word.letters:
        i = abs(letter) - 1
        xi, xj = images[i], images[i + 1]
        if letter > 0:
            images[i] = free_reduce(xi + xj + _inverse(xi))
            images[i + 1] = xi
        else:
            images[i] = xj
            images[i + 1] = free_reduce(_inverse(xj) + xi + xj)
    return FreeGroupEndomorphism(word.strands, tuple(images))
