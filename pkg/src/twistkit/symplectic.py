"""Integer symplectic action of twist products on a blocked surface.

The surface has genus n*k, viewed as n blocks of k handles.  Homology classes
are integer vectors over the basis a[1,1], b[1,1], ..., a[1,k], b[1,k],
a[2,1], ... (handle-major inside each block) and the intersection form pairs
a[l,j] with b[l,j].

Each block carries a chain of 2k+1 classes

    a[l,1], b[l,1], a[l,1]+a[l,2], b[l,2], ..., a[l,k]

with consecutive intersection +-1 and all other pairs zero.  A twist about a
class c acts by the transvection x -> x - <x, c> c (left) or its inverse
(right), and the i-th generator twists about the i-th chain class in every
block at once, right-handed in odd blocks and left-handed in even ones.  With
two blocks of one handle this calibrates to diag(A^-1, A) and diag(B^-1, B)
for the shears A, B.

Matrices are numpy object arrays over Python ints, so products stay exact.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SurfaceModel:
    """A genus blocks*handles surface split into identical blocks."""

    blocks: int
    handles: int

    def __post_init__(self):
        if self.blocks < 1 or self.handles < 1:
            raise ValueError("need at least one block and one handle")

    @property
    def genus(self) -> int:
        return self.blocks * self.handles

    @property
    def dim(self) -> int:
        return 2 * self.genus

    @property
    def chain_length(self) -> int:
        return 2 * self.handles + 1


def surface_model(blocks: int, handles: int) -> SurfaceModel:
    return SurfaceModel(blocks, handles)


def a_index(model: SurfaceModel, block: int, j: int) -> int:
    """Column of a[block, j] in the homology basis."""
    if not 1 <= block <= model.blocks or not 1 <= j <= model.handles:
        raise ValueError(f"no handle ({block}, {j}) in this model")
    return 2 * ((block - 1) * model.handles + (j - 1))


def b_index(model: SurfaceModel, block: int, j: int) -> int:
    return a_index(model, block, j) + 1


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def identity_matrix(model: SurfaceModel) -> np.ndarray:
    return _int_identity(model.dim)


def _int_identity(dim: int) -> np.ndarray:
    return np.array(
        [[1 if i == j else 0 for j in range(dim)] for i in range(dim)], dtype=object
    )


@functools.cache
def intersection_form(model: SurfaceModel) -> np.ndarray:
    J = np.array([[0] * model.dim for _ in range(model.dim)], dtype=object)
    for t in range(model.genus):
        J[2 * t][2 * t + 1] = 1
        J[2 * t + 1][2 * t] = -1
    return _frozen(J)


def pairing(model: SurfaceModel, x, y) -> int:
    """The algebraic intersection number <x, y>."""
    x = np.asarray(x, dtype=object)
    y = np.asarray(y, dtype=object)
    return int(x @ intersection_form(model) @ y)


@functools.cache
def chain_class(model: SurfaceModel, block: int, i: int) -> np.ndarray:
    """The i-th chain class of a block, 1 <= i <= 2*handles + 1."""
    if not 1 <= i <= model.chain_length:
        raise ValueError(f"chain index {i} out of range")
    k = model.handles
    v = [0] * model.dim
    if i == 1:
        v[a_index(model, block, 1)] = 1
    elif i == model.chain_length:
        v[a_index(model, block, k)] = 1
    elif i % 2 == 0:
        v[b_index(model, block, i // 2)] = 1
    else:
        j = (i - 1) // 2
        v[a_index(model, block, j)] = 1
        v[a_index(model, block, j + 1)] = 1
    return _frozen(np.array(v, dtype=object))


def twist_matrix(model: SurfaceModel, c, direction: str = "left") -> np.ndarray:
    """The transvection x -> x -+ <x, c> c about the class c."""
    c = np.asarray(c, dtype=object)
    if c.shape != (model.dim,):
        raise ValueError("class has the wrong length")
    if direction not in ("left", "right"):
        raise ValueError(f"unknown direction {direction!r}")
    skew = np.outer(c, c) @ intersection_form(model)
    return _int_identity(model.dim) + (skew if direction == "left" else -skew)


@functools.cache
def _generator_image(model: SurfaceModel, i: int, sign: int) -> np.ndarray:
    if not 1 <= i <= model.chain_length:
        raise ValueError(f"generator index {i} out of range")
    # Odd blocks twist right-handed; inverting swaps the handedness.
    out = _int_identity(model.dim)
    for block in range(1, model.blocks + 1):
        handed = 1 if block % 2 == 0 else -1
        direction = "left" if handed * sign > 0 else "right"
        out = out @ twist_matrix(model, chain_class(model, block, i), direction)
    return _frozen(out)


def generator_image(model: SurfaceModel, i: int) -> np.ndarray:
    """The homology image of the i-th alternating twist product."""
    return _generator_image(model, i, 1)


def evaluate_word(model: SurfaceModel, word) -> np.ndarray:
    """Evaluate a word over the twist generators, letters as signed indices."""
    out = _int_identity(model.dim)
    for letter in word.letters:
        if abs(letter) > model.chain_length:
            raise ValueError(f"letter {letter} out of range for this model")
        out = out @ _generator_image(model, abs(letter), 1 if letter > 0 else -1)
    return out


def mats_equal(x, y) -> bool:
    x = np.asarray(x)
    y = np.asarray(y)
    return x.shape == y.shape and bool((x == y).all())


def is_symplectic(model: SurfaceModel, m) -> bool:
    J = intersection_form(model)
    return mats_equal(np.asarray(m).T @ J @ np.asarray(m), J)


def is_hyperelliptic_image(model: SurfaceModel, m) -> bool:
    """Whether a matrix is -Id, the homology image of the hyperelliptic map."""
    return mats_equal(m, -identity_matrix(model))
