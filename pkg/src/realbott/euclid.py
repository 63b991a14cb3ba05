"""Exact Euclidean motions realizing the defining generators of a Bott group.

Each generator s_i acts on R^n as a diagonal sign matrix followed by a
half-step translation along coordinate i.  All translations live in
(1/2)Z, so they are stored doubled as integers and every composition is
exact; fixed-point questions on the torus reduce to sign patterns and
translation parities, with no floating point anywhere.

This module is the independent oracle against which the combinatorial
row-subset freeness test and the cocycle holonomy prediction are
cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bottcore import BottMatrix, bott_to_p, cocycles, free_at_subset

__all__ = [
    "EuclideanMotion",
    "compose",
    "square",
    "generators",
    "element_of",
    "acts_freely",
    "holonomy_matrix",
    "check_against_rows",
]


@dataclass(frozen=True)
class EuclideanMotion:
    """Affine map x -> D x + t with D = diag(signs) and t = trans2 / 2."""

    signs: tuple[int, ...]
    trans2: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.signs) != len(self.trans2):
            raise ValueError("signs and translation must have the same length")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @property
    def dim(self) -> int:
        return len(self.signs)

    @classmethod
    def identity(cls, n: int) -> EuclideanMotion:
        return cls((1,) * n, (0,) * n)

    def compose(self, other: EuclideanMotion) -> EuclideanMotion:
        """(self . other)(x) = self(other(x)), exact on doubled integers."""
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        signs = tuple(s * t for s, t in zip(self.signs, other.signs))
        trans2 = tuple(
            s * t2 + u2 for s, t2, u2 in zip(self.signs, other.trans2, self.trans2)
        )
        return EuclideanMotion(signs, trans2)

    def square(self) -> EuclideanMotion:
        return self.compose(self)

    def inverse(self) -> EuclideanMotion:
        # D^-1 = D for diagonal signs, so g^-1 = (D, -D t)
        return EuclideanMotion(
            self.signs, tuple(-s * t2 for s, t2 in zip(self.signs, self.trans2))
        )


def compose(g: EuclideanMotion, h: EuclideanMotion) -> EuclideanMotion:
    return g.compose(h)


def square(g: EuclideanMotion) -> EuclideanMotion:
    return g.square()


def generators(a: BottMatrix) -> tuple[EuclideanMotion, ...]:
    """The motions s_1..s_n: s_i flips coordinate j > i iff a_ij = 1 and
    translates coordinate i by one half; s_n is the pure half-step."""
    n = a.n
    out = []
    for i in range(n):
        signs = tuple(-1 if j > i and a.rows[i][j] else 1 for j in range(n))
        trans2 = tuple(1 if j == i else 0 for j in range(n))
        out.append(EuclideanMotion(signs, trans2))
    return tuple(out)


def element_of(a: BottMatrix, subset: Iterable[int]) -> EuclideanMotion:
    """Product of the selected generators (0-based indices) in increasing order.

    The freeness and holonomy verdicts below depend only on signs and on
    translation parities, which are order-independent.
    """
    gens = generators(a)
    g = EuclideanMotion.identity(a.n)
    for i in sorted(set(subset)):
        if not 0 <= i < a.n:
            raise ValueError(f"generator index {i} out of range for n={a.n}")
        g = g.compose(gens[i])
    return g


def acts_freely(a: BottMatrix, subset: Iterable[int]) -> bool:
    """Fixed-point oracle for one nonempty generator subset.

    The induced torus map D x + t has no fixed point exactly when some
    coordinate keeps sign +1 but is shifted by an odd half-step: then
    D x + t + z = x has no integer solution z.
    """
    chosen = sorted(set(subset))
    if not chosen:
        raise ValueError("subset must be nonempty")
    g = element_of(a, chosen)
    return any(s == 1 and t2 % 2 == 1 for s, t2 in zip(g.signs, g.trans2))


def holonomy_matrix(a: BottMatrix, subset: Iterable[int]) -> tuple[int, ...]:
    """Diagonal sign pattern of the product of the selected generators."""
    return element_of(a, subset).signs


def check_against_rows(a: BottMatrix) -> list[str]:
    """Cross-check the motion oracle against the row-calculus layer.

    For every nonempty generator subset the fixed-point verdict must
    equal the row-subset freeness predicate, and for every subset the
    sign pattern must match the cocycle prediction diag((-1)^(alpha_j +
    beta_j)).  Returns one message per disagreement (empty = all agree).
    Cost grows as 2^n; meant for small n.
    """
    n = a.n
    p = bott_to_p(a)
    alphas, betas = cocycles(p)
    sign_forms = [alphas[j] + betas[j] for j in range(n)]
    gens = generators(a)
    problems: list[str] = []
    for mask in range(1 << n):
        g = EuclideanMotion.identity(n)
        for i in range(n):
            if (mask >> i) & 1:
                g = g.compose(gens[i])
        predicted = tuple(-1 if f.evaluate(mask) else 1 for f in sign_forms)
        if g.signs != predicted:
            problems.append(
                f"holonomy mismatch on {a.to_line()} subset {mask:#x}: "
                f"motion {g.signs}, cocycle {predicted}"
            )
        if mask:
            free_euclid = any(
                s == 1 and t2 % 2 == 1 for s, t2 in zip(g.signs, g.trans2)
            )
            free_rows = free_at_subset(p, mask)
            if free_euclid != free_rows:
                problems.append(
                    f"freeness mismatch on {a.to_line()} subset {mask:#x}: "
                    f"motion {free_euclid}, rows {free_rows}"
                )
    return problems
