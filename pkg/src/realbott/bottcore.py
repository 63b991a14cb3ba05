"""Real Bott manifolds from their defining matrices.

A Bott matrix is a strictly upper-triangular 0/1 matrix A of size n.  It
determines a flat closed n-manifold M(A), the quotient of the n-torus by
a free (Z_2)^n action that acts on each circle coordinate through one of
the four automorphisms

    0: z -> z,    1: z -> -z,    2: z -> conj(z),    3: z -> -conj(z),

which form a Klein four-group under composition.  More generally a d x n
matrix with entries in {0, 1, 2, 3} (a "P-matrix") encodes a diagonal
action of (Z_2)^d on T^n.

Two coordinate functionals alpha, beta on the four-group (alpha is 1 on
{1, 2}, beta is 1 on {1, 3}) turn each column j of a P-matrix into
linear forms alpha_j, beta_j in GF(2)[x_1..x_d].  The quadratics
theta_j = alpha_j * beta_j span the degree-2 piece of the characteristic
ideal of the action, and the product of all (1 + alpha_j + beta_j) is a
lift of the total Stiefel-Whitney class of the quotient manifold.  Its
degree-1 part decides orientability and, together with ideal membership
of the degree-2 part, the existence of a Spin structure.

A real Bott manifold carries a Kahler structure exactly when the columns
of A partition into equal pairs (Ishida's criterion); in that case Spin
also has a closed form in terms of the row parities S_i over one
representative column per pair: M(A) is Spin iff for every row i either
S_i is even or column i of A is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from typing import Optional, Sequence

from .f2poly import (
    F2Matrix,
    GradedPolyF2,
    LinearFormF2,
    degree2_count,
    encode_degree2,
    truncated_product,
)

__all__ = [
    "DElement",
    "BottMatrix",
    "PMatrix",
    "IdealDegree2Basis",
    "KahlerPairing",
    "ManifoldReport",
    "MatrixParseError",
    "InconsistencyError",
    "parse_bott",
    "parse_pmatrix",
    "bott_to_p",
    "pmatrix_to_bott",
    "is_free",
    "free_at_subset",
    "has_full_holonomy",
    "cocycles",
    "characteristic_ideal",
    "sw_class",
    "is_orientable",
    "is_kahler",
    "spin_membership",
    "spin_general",
    "spin_kahler_closed_form",
    "analyze",
    "identical_columns_matrix",
]


class MatrixParseError(ValueError):
    """Raised for malformed matrix text or invalid entries."""


class InconsistencyError(RuntimeError):
    """Two routes that must agree disagreed; always an implementation bug."""


_ALPHA = (0, 1, 1, 0)
_BETA = (0, 1, 0, 1)


class DElement(IntEnum):
    """The four circle automorphisms, closed under composition.

    Composition is XOR of the (alpha, beta) pairs, so every element is
    an involution and HALF_TURN * CONJUGATION == NEG_CONJUGATION.
    """

    IDENTITY = 0  # z -> z
    HALF_TURN = 1  # z -> -z, i.e. t -> t + 1/2 on R/Z
    CONJUGATION = 2  # z -> conj(z), i.e. t -> -t
    NEG_CONJUGATION = 3  # z -> -conj(z), i.e. t -> -t + 1/2

    @property
    def alpha(self) -> int:
        return _ALPHA[self]

    @property
    def beta(self) -> int:
        return _BETA[self]

    def compose(self, other: DElement) -> DElement:
        pair = (self.alpha ^ other.alpha, self.beta ^ other.beta)
        return _FROM_PAIR[pair]

    def __mul__(self, other):  # type: ignore[override]
        if isinstance(other, DElement):
            return self.compose(other)
        return NotImplemented


_FROM_PAIR = {
    (_ALPHA[e], _BETA[e]): DElement(e) for e in range(4)
}


@dataclass(frozen=True)
class BottMatrix:
    """Strictly upper-triangular 0/1 matrix defining a real Bott manifold."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n == 0:
            raise MatrixParseError("empty matrix")
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise MatrixParseError(
                    f"row {i + 1} has {len(row)} entries, expected {n} (matrix must be square)"
                )
            for j, e in enumerate(row):
                if e not in (0, 1):
                    raise MatrixParseError(
                        f"entry {e!r} at row {i + 1}, column {j + 1} is not 0 or 1"
                    )
                if i >= j and e != 0:
                    raise MatrixParseError(
                        f"entry at row {i + 1}, column {j + 1} must be 0 "
                        "(matrix must be strictly upper triangular)"
                    )

    @property
    def n(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def row_parity(self, i: int) -> int:
        return sum(self.rows[i]) & 1

    def to_line(self) -> str:
        """Serialize row-major as 0/1 digits with rows joined by '/'."""
        return "/".join("".join(str(e) for e in row) for row in self.rows)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(e) for e in row) for row in self.rows)


@dataclass(frozen=True)
class PMatrix:
    """d x n matrix over {0,1,2,3} encoding a diagonal (Z_2)^d action on T^n."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise MatrixParseError("empty matrix")
        width = len(self.rows[0])
        if width == 0:
            raise MatrixParseError("empty matrix row")
        for i, row in enumerate(self.rows):
            if len(row) != width:
                raise MatrixParseError(
                    f"row {i + 1} has {len(row)} entries, expected {width}"
                )
            for j, e in enumerate(row):
                if e not in (0, 1, 2, 3):
                    raise MatrixParseError(
                        f"entry {e!r} at row {i + 1}, column {j + 1} is not in 0..3"
                    )

    @property
    def d(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @cached_property
    def alpha_masks(self) -> tuple[int, ...]:
        """Per row, bit j = alpha of the entry in column j."""
        return tuple(
            sum(_ALPHA[e] << j for j, e in enumerate(row)) for row in self.rows
        )

    @cached_property
    def beta_masks(self) -> tuple[int, ...]:
        """Per row, bit j = beta of the entry in column j."""
        return tuple(
            sum(_BETA[e] << j for j, e in enumerate(row)) for row in self.rows
        )

    def __str__(self) -> str:
        return "\n".join(" ".join(str(e) for e in row) for row in self.rows)


def _parse_matrix_text(text: str, alphabet: str) -> tuple[tuple[int, ...], ...]:
    """Shared digit-grid parser: '/' or newline ends a row, '#' starts a comment."""
    rows: list[tuple[int, ...]] = []
    current: list[int] = []

    def flush() -> None:
        if current:
            rows.append(tuple(current))
            current.clear()

    for line in text.splitlines():
        line = line.split("#", 1)[0]
        for ch in line:
            if ch.isspace():
                continue
            if ch == "/":
                flush()
            elif ch in alphabet:
                current.append(int(ch))
            else:
                raise MatrixParseError(
                    f"invalid entry {ch!r} at row {len(rows) + 1}, "
                    f"column {len(current) + 1} (expected one of {','.join(alphabet)})"
                )
        flush()
    flush()
    if not rows:
        raise MatrixParseError("no matrix entries found")
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise MatrixParseError(
                f"row {i + 1} has {len(row)} entries, expected {width} (ragged rows)"
            )
    return tuple(rows)


def parse_bott(text: str) -> BottMatrix:
    """Parse a Bott matrix from a 0/1 digit grid.

    Rows sit on separate lines or are separated by '/'; whitespace
    between digits is optional and '#' comments run to end of line.
    """
    return BottMatrix(_parse_matrix_text(text, "01"))


def parse_pmatrix(text: str) -> PMatrix:
    """Parse a P-matrix from a digit grid over the alphabet 0..3."""
    return PMatrix(_parse_matrix_text(text, "0123"))


def bott_to_p(a: BottMatrix) -> PMatrix:
    """P-matrix of a Bott matrix: 1 on the diagonal, 2 where a_ij = 1."""
    n = a.n
    rows = tuple(
        tuple(1 if i == j else (2 if j > i and a.rows[i][j] else 0) for j in range(n))
        for i in range(n)
    )
    return PMatrix(rows)


def pmatrix_to_bott(p: PMatrix) -> Optional[BottMatrix]:
    """Recover the Bott matrix when p has Bott shape, else None.

    Bott shape: square, diagonal entries 1, upper-triangular entries in
    {0, 2}, lower-triangular entries 0.
    """
    if p.d != p.n:
        return None
    n = p.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e = p.rows[i][j]
            if i == j:
                if e != 1:
                    return None
                row.append(0)
            elif i > j:
                if e != 0:
                    return None
                row.append(0)
            else:
                if e not in (0, 2):
                    return None
                row.append(1 if e == 2 else 0)
        rows.append(tuple(row))
    return BottMatrix(tuple(rows))


def free_at_subset(p: PMatrix, subset_mask: int) -> bool:
    """Whether the group element of one nonempty row subset acts freely.

    The XOR of the selected rows, read as (alpha, beta) pairs, must carry
    the pair (1, 1) somewhere: the element then shifts that circle
    coordinate by a half turn it cannot undo, so it has no fixed point.
    """
    if subset_mask <= 0 or subset_mask >> p.d:
        raise ValueError(f"subset mask {subset_mask:#x} out of range for {p.d} rows")
    a = b = 0
    for i in range(p.d):
        if (subset_mask >> i) & 1:
            a ^= p.alpha_masks[i]
            b ^= p.beta_masks[i]
    return (a & b) != 0


def is_free(p: PMatrix) -> bool:
    """Whether the encoded (Z_2)^d action on T^n is free.

    Checks all 2^d - 1 nonempty row subsets with Gray-code incremental
    XOR of the two bitplanes.
    """
    d = p.d
    a = b = 0
    prev = 0
    for k in range(1, 1 << d):
        gray = k ^ (k >> 1)
        i = (gray ^ prev).bit_length() - 1
        a ^= p.alpha_masks[i]
        b ^= p.beta_masks[i]
        prev = gray
        if (a & b) == 0:
            return False
    return True


def has_full_holonomy(p: PMatrix) -> bool:
    """Whether every row acts with a sign flip somewhere (entry 2 or 3)."""
    return all(am ^ bm for am, bm in zip(p.alpha_masks, p.beta_masks))


def cocycles(p: PMatrix) -> tuple[tuple[LinearFormF2, ...], tuple[LinearFormF2, ...]]:
    """Column-wise linear forms (alpha_j, beta_j) over x_1..x_d."""
    d = p.d
    alphas = []
    betas = []
    for j in range(p.n):
        am = bm = 0
        for i in range(d):
            e = p.rows[i][j]
            am |= _ALPHA[e] << i
            bm |= _BETA[e] << i
        alphas.append(LinearFormF2(d, am))
        betas.append(LinearFormF2(d, bm))
    return tuple(alphas), tuple(betas)


@dataclass(frozen=True)
class IdealDegree2Basis:
    """Degree-2 generators theta_j = alpha_j * beta_j and their reduced span."""

    thetas: tuple[GradedPolyF2, ...]
    reduced: F2Matrix

    @property
    def rank(self) -> int:
        return self.reduced.nrows

    def contains(self, quadratic: GradedPolyF2) -> bool:
        """Membership of a homogeneous degree-2 polynomial in the span."""
        return self.reduced.in_row_space(encode_degree2(quadratic))


def characteristic_ideal(p: PMatrix) -> IdealDegree2Basis:
    """The quadratics theta_j with the reduced basis of their GF(2) span.

    For a Bott-shaped P the formula collapses to
    theta_j = x_j^2 + sum_{i<j} a_ij * x_i * x_j.
    """
    alphas, betas = cocycles(p)
    thetas = tuple(a * b for a, b in zip(alphas, betas))
    m = F2Matrix((encode_degree2(t) for t in thetas), degree2_count(p.d))
    return IdealDegree2Basis(thetas=thetas, reduced=m.rref())


def sw_class(p: PMatrix, max_degree: int = 2) -> GradedPolyF2:
    """Total Stiefel-Whitney class lift: product of (1 + alpha_j + beta_j).

    Truncated to total degree <= max_degree and NOT reduced modulo the
    characteristic ideal; degrees 1 and 2 are what the orientability and
    Spin tests consume.
    """
    one = GradedPolyF2.one(p.d)
    alphas, betas = cocycles(p)
    factors = [one + (a + b).as_poly() for a, b in zip(alphas, betas)]
    return truncated_product(factors, max_degree)


def is_orientable(m: BottMatrix | PMatrix) -> tuple[bool, GradedPolyF2]:
    """Orientability verdict together with the w1 witness.

    w1 is the degree-1 part of the Stiefel-Whitney product; for a Bott
    matrix its x_i coefficient is the parity of row i.
    """
    p = bott_to_p(m) if isinstance(m, BottMatrix) else m
    w1 = sw_class(p, 1).graded_component(1)
    return w1.is_zero, w1


@dataclass(frozen=True)
class KahlerPairing:
    """A partition of the column indices (0-based) into equal pairs."""

    pairs: tuple[tuple[int, int], ...]
    representatives: tuple[int, ...]


def is_kahler(a: BottMatrix) -> Optional[KahlerPairing]:
    """Kahler decider: columns of A must partition into equal pairs.

    Absent for odd n.  The pairing returned is deterministic: equality
    classes sorted by their smallest member, consecutive indices paired
    within each class, the smaller index of each pair as representative.
    Any other pairing of equal columns is equivalent.
    """
    n = a.n
    if n % 2:
        return None
    groups: dict[tuple[int, ...], list[int]] = {}
    for j in range(n):
        groups.setdefault(a.column(j), []).append(j)
    classes = sorted(groups.values(), key=lambda g: g[0])
    if any(len(g) % 2 for g in classes):
        return None
    pairs = []
    reps = []
    for g in classes:
        for k in range(0, len(g), 2):
            pairs.append((g[k], g[k + 1]))
            reps.append(g[k])
    return KahlerPairing(pairs=tuple(pairs), representatives=tuple(reps))


def spin_membership(p: PMatrix) -> tuple[bool, GradedPolyF2, GradedPolyF2]:
    """General Spin test for any P-matrix: (verdict, w1, raw w2).

    Spin requires w1 = 0 (orientability) and the raw degree-2 part of
    the Stiefel-Whitney product to lie in the span of the theta_j.
    """
    w = sw_class(p, 2)
    w1 = w.graded_component(1)
    w2 = w.graded_component(2)
    spin = w1.is_zero and characteristic_ideal(p).contains(w2)
    return spin, w1, w2


def spin_general(a: BottMatrix) -> tuple[bool, GradedPolyF2, GradedPolyF2]:
    """Spin decider for any Bott matrix, Kahler or not."""
    return spin_membership(bott_to_p(a))


def _validate_pairing(a: BottMatrix, pairing: KahlerPairing) -> None:
    n = a.n
    seen: set[int] = set()
    for i, j in pairing.pairs:
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise ValueError(f"pair ({i}, {j}) is not a pair of distinct column indices")
        if i in seen or j in seen:
            raise ValueError(f"column index reused in pairing at pair ({i}, {j})")
        seen.update((i, j))
        if a.column(i) != a.column(j):
            raise ValueError(
                f"pairing inconsistent with matrix: columns {i + 1} and {j + 1} differ"
            )
    if len(seen) != n:
        raise ValueError("pairing does not cover every column exactly once")


def spin_kahler_closed_form(
    a: BottMatrix,
    pairing: KahlerPairing,
    representatives: Optional[Sequence[int]] = None,
) -> tuple[bool, tuple[int, ...]]:
    """Closed-form Spin test for a Kahler Bott matrix: (verdict, S-vector).

    S_i is the parity of row i summed over one representative column per
    pair; the manifold is Spin iff every row has S_i even or column i of
    A entirely zero (the latter puts x_i^2 in the characteristic ideal).
    The verdict does not depend on which representative is chosen, since
    paired columns are equal.
    """
    _validate_pairing(a, pairing)
    if representatives is None:
        reps = pairing.representatives
    else:
        reps = tuple(representatives)
        if len(reps) != len(pairing.pairs):
            raise ValueError("need exactly one representative per pair")
        for r, pair in zip(reps, pairing.pairs):
            if r not in pair:
                raise ValueError(f"representative {r} is not in its pair {pair}")
    n = a.n
    s_vector = tuple(sum(a.rows[i][r] for r in reps) & 1 for i in range(n))
    zero_col = tuple(not any(a.column(i)) for i in range(n))
    spin = all(s == 0 or zero_col[i] for i, s in enumerate(s_vector))
    return spin, s_vector


@dataclass(frozen=True)
class ManifoldReport:
    """All verdicts for one Bott matrix, with the w1/w2 witnesses."""

    n: int
    free: bool
    holonomy_full: bool
    w1: GradedPolyF2
    orientable: bool
    kahler: Optional[KahlerPairing]
    w2raw: GradedPolyF2
    spin: bool
    s_vector: Optional[tuple[int, ...]]


def analyze(a: BottMatrix) -> ManifoldReport:
    """Run every decider on one Bott matrix.

    On Kahler inputs the closed-form Spin verdict is cross-checked
    against the ideal-membership verdict; a mismatch can only mean an
    implementation bug and raises InconsistencyError.
    """
    p = bott_to_p(a)
    free = is_free(p)
    holonomy_full = has_full_holonomy(p)
    spin, w1, w2raw = spin_membership(p)
    orientable = w1.is_zero
    pairing = is_kahler(a)
    s_vector: Optional[tuple[int, ...]] = None
    if pairing is not None:
        if a.n % 2 or not orientable:
            raise InconsistencyError(
                f"Kahler pairing found on a non-orientable or odd-dimensional "
                f"matrix {a.to_line()}"
            )
        spin_cf, s_vector = spin_kahler_closed_form(a, pairing)
        if spin_cf != spin:
            raise InconsistencyError(
                f"Spin deciders disagree on {a.to_line()}: "
                f"closed-form={spin_cf}, membership={spin}"
            )
    if spin and not orientable:
        raise InconsistencyError(f"Spin without orientability on {a.to_line()}")
    return ManifoldReport(
        n=a.n,
        free=free,
        holonomy_full=holonomy_full,
        w1=w1,
        orientable=orientable,
        kahler=pairing,
        w2raw=w2raw,
        spin=spin,
        s_vector=s_vector,
    )


def identical_columns_matrix(n: int, k: int, value_row: int = 0) -> BottMatrix:
    """Bott matrix with 2k equal nonzero columns and all others zero.

    The last 2k columns carry a single 1 in row value_row (0-based); the
    construction needs 2k <= n - value_row - 1 so the nonzero columns sit
    strictly right of their supporting row.
    """
    if k < 1 or n < 1:
        raise ValueError("need n >= 1 and k >= 1")
    first = n - 2 * k
    if first <= value_row:
        raise ValueError(
            f"cannot place {2 * k} equal nonzero columns in an "
            f"n={n} strictly upper-triangular matrix"
        )
    rows = [[0] * n for _ in range(n)]
    for j in range(first, n):
        rows[value_row][j] = 1
    return BottMatrix(tuple(tuple(r) for r in rows))
