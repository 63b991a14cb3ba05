"""Exact polynomial arithmetic over GF(2), graded by total degree.

Coefficients live in the two-element field, so a polynomial is a finite
set of monomials: adding a monomial twice cancels it, and the zero
polynomial is the empty set.  Monomials are exponent tuples of a fixed
length (one slot per variable) and sort in graded lexicographic order,
degree first.

The module also carries the small amount of GF(2) linear algebra needed
on graded pieces: row reduction of bitmask matrices, row-space
membership, and a fixed coordinate system for the homogeneous degree-2
monomials (pairs x_i*x_j with i <= j in lex order, d*(d+1)/2 columns).

Bit conventions: an ``F2Matrix`` row is an int whose bit ``c`` is the
entry in column ``c``; a ``LinearFormF2`` coefficient mask has bit ``i``
for the variable ``x_{i+1}``.  Everything is immutable, so values can be
shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Monomial = tuple[int, ...]


def monomial_key(m: Monomial) -> tuple[int, tuple[int, ...]]:
    """Graded-lex sort key: total degree first, earlier variables first."""
    return (sum(m), tuple(-e for e in m))


def format_monomial(m: Monomial) -> str:
    """Render as juxtaposed powers, e.g. ``x1x3^2``; the unit is ``1``."""
    if not any(m):
        return "1"
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "".join(parts)


class GradedPolyF2:
    """Multivariate polynomial over GF(2) as a frozen set of monomials."""

    __slots__ = ("num_vars", "terms")

    num_vars: int
    terms: frozenset[Monomial]

    def __init__(self, num_vars: int, terms: Iterable[Monomial] = ()) -> None:
        if num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        acc: set[Monomial] = set()
        for m in terms:
            t = tuple(int(e) for e in m)
            if len(t) != num_vars:
                raise ValueError(
                    f"monomial {t} has {len(t)} exponents, expected {num_vars}"
                )
            if any(e < 0 for e in t):
                raise ValueError(f"negative exponent in monomial {t}")
            acc ^= {t}  # characteristic 2: repeated monomials cancel
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "terms", frozenset(acc))

    @classmethod
    def _make(cls, num_vars: int, terms: frozenset[Monomial]) -> GradedPolyF2:
        p = object.__new__(cls)
        object.__setattr__(p, "num_vars", num_vars)
        object.__setattr__(p, "terms", terms)
        return p

    @classmethod
    def zero(cls, num_vars: int) -> GradedPolyF2:
        return cls._make(num_vars, frozenset())

    @classmethod
    def one(cls, num_vars: int) -> GradedPolyF2:
        return cls._make(num_vars, frozenset({(0,) * num_vars}))

    @classmethod
    def variable(cls, num_vars: int, index: int) -> GradedPolyF2:
        """The single variable ``x_{index+1}`` (index is 0-based)."""
        if not 0 <= index < num_vars:
            raise ValueError(f"variable index {index} out of range for {num_vars} variables")
        e = [0] * num_vars
        e[index] = 1
        return cls._make(num_vars, frozenset({tuple(e)}))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def _check_vars(self, other: GradedPolyF2) -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(
                f"polynomials over different variable counts: {self.num_vars} vs {other.num_vars}"
            )

    def __add__(self, other: GradedPolyF2) -> GradedPolyF2:
        self._check_vars(other)
        return GradedPolyF2._make(self.num_vars, self.terms ^ other.terms)

    def __mul__(self, other: GradedPolyF2) -> GradedPolyF2:
        self._check_vars(other)
        acc: set[Monomial] = set()
        for m1 in self.terms:
            for m2 in other.terms:
                acc ^= {tuple(a + b for a, b in zip(m1, m2))}
        return GradedPolyF2._make(self.num_vars, frozenset(acc))

    def mul_truncated(self, other: GradedPolyF2, max_degree: int) -> GradedPolyF2:
        """Product with every monomial of total degree > max_degree dropped."""
        self._check_vars(other)
        acc: set[Monomial] = set()
        for m1 in self.terms:
            d1 = sum(m1)
            if d1 > max_degree:
                continue
            for m2 in other.terms:
                if d1 + sum(m2) > max_degree:
                    continue
                acc ^= {tuple(a + b for a, b in zip(m1, m2))}
        return GradedPolyF2._make(self.num_vars, frozenset(acc))

    def truncate(self, max_degree: int) -> GradedPolyF2:
        return GradedPolyF2._make(
            self.num_vars, frozenset(m for m in self.terms if sum(m) <= max_degree)
        )

    def graded_component(self, k: int) -> GradedPolyF2:
        """The homogeneous piece of total degree k."""
        if k < 0:
            raise ValueError("degree must be non-negative")
        return GradedPolyF2._make(
            self.num_vars, frozenset(m for m in self.terms if sum(m) == k)
        )

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, key=monomial_key)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedPolyF2):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.num_vars, self.terms))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(format_monomial(m) for m in self.sorted_terms())

    def __repr__(self) -> str:
        return f"GradedPolyF2({self.num_vars}, {sorted(self.terms, key=monomial_key)!r})"


def truncated_product(
    factors: Sequence[GradedPolyF2], max_degree: int
) -> GradedPolyF2:
    """Product of the factors, truncated to total degree <= max_degree.

    Truncation is applied after each pairwise multiplication, so the
    intermediate term count never exceeds the number of monomials of
    degree <= max_degree.  Since degrees only grow under multiplication,
    this equals the full product truncated once at the end.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    if not factors:
        raise ValueError("empty product: at least one factor required")
    acc = GradedPolyF2.one(factors[0].num_vars)
    for f in factors:
        acc = acc.mul_truncated(f, max_degree)
    return acc


@dataclass(frozen=True)
class LinearFormF2:
    """Homogeneous linear form over GF(2): bit i of coeffs is the x_{i+1} coefficient."""

    num_vars: int
    coeffs: int

    def __post_init__(self) -> None:
        if not 0 <= self.coeffs < (1 << self.num_vars):
            raise ValueError(
                f"coefficient mask {self.coeffs:#x} out of range for {self.num_vars} variables"
            )

    def _check_vars(self, other: LinearFormF2) -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(
                f"linear forms over different variable counts: {self.num_vars} vs {other.num_vars}"
            )

    def __add__(self, other: LinearFormF2) -> LinearFormF2:
        self._check_vars(other)
        return LinearFormF2(self.num_vars, self.coeffs ^ other.coeffs)

    def __mul__(self, other: LinearFormF2) -> GradedPolyF2:
        """Product as a (homogeneous degree-2 or zero) polynomial."""
        return self.as_poly() * other.as_poly()

    @property
    def is_zero(self) -> bool:
        return self.coeffs == 0

    def evaluate(self, point_mask: int) -> int:
        """Value at a GF(2) point given as a bitmask: parity of the overlap."""
        return (self.coeffs & point_mask).bit_count() & 1

    def as_poly(self) -> GradedPolyF2:
        terms = []
        for i in range(self.num_vars):
            if (self.coeffs >> i) & 1:
                e = [0] * self.num_vars
                e[i] = 1
                terms.append(tuple(e))
        return GradedPolyF2._make(self.num_vars, frozenset(terms))

    def __str__(self) -> str:
        return str(self.as_poly())


class F2Matrix:
    """GF(2) matrix with rows stored as int bitmasks (bit c = column c)."""

    __slots__ = ("ncols", "rows")

    ncols: int
    rows: tuple[int, ...]

    def __init__(self, rows: Iterable[int], ncols: int) -> None:
        if ncols < 0:
            raise ValueError("ncols must be non-negative")
        clean = []
        for r in rows:
            r = int(r)
            if r < 0 or r >> ncols:
                raise ValueError(f"row {r:#x} has bits beyond column {ncols - 1}")
            clean.append(r)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", tuple(clean))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def rref(self) -> F2Matrix:
        """Row-reduced echelon form; zero rows are dropped.

        Pivots are chosen leftmost-first with rows scanned in order, so
        the output is the canonical reduced basis of the row space and
        its row count is the rank.
        """
        pending = list(self.rows)
        reduced: list[int] = []
        for col in range(self.ncols):
            if not pending:
                break
            bit = 1 << col
            pivot = None
            for idx, r in enumerate(pending):
                if r & bit:
                    pivot = idx
                    break
            if pivot is None:
                continue
            prow = pending.pop(pivot)
            pending = [r ^ prow if r & bit else r for r in pending]
            reduced = [r ^ prow if r & bit else r for r in reduced]
            reduced.append(prow)
        return F2Matrix(reduced, self.ncols)

    def rank(self) -> int:
        return self._echelon_or_reduce().nrows

    def _is_echelon(self) -> bool:
        last = -1
        for r in self.rows:
            if r == 0:
                return False
            p = (r & -r).bit_length() - 1
            if p <= last:
                return False
            last = p
        return True

    def _echelon_or_reduce(self) -> F2Matrix:
        return self if self._is_echelon() else self.rref()

    def in_row_space(self, v: int) -> bool:
        """Whether v (bitmask) is a GF(2) combination of the rows."""
        if v < 0 or v >> self.ncols:
            raise ValueError(f"vector {v:#x} has bits beyond column {self.ncols - 1}")
        for row in self._echelon_or_reduce().rows:
            if v & (row & -row):
                v ^= row
        return v == 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.ncols, self.rows))

    def row_strings(self) -> list[str]:
        """Rows as 0/1 strings, column 0 leftmost."""
        return [
            "".join("1" if (r >> c) & 1 else "0" for c in range(self.ncols))
            for r in self.rows
        ]

    def __repr__(self) -> str:
        return f"F2Matrix({list(self.rows)!r}, ncols={self.ncols})"


def degree2_count(num_vars: int) -> int:
    """Number of degree-2 monomials in num_vars variables."""
    return num_vars * (num_vars + 1) // 2


def degree2_index(num_vars: int, i: int, j: int) -> int:
    """Column index of x_{i+1}*x_{j+1} (0-based, i <= j) in the fixed enumeration.

    Pairs (i, j) with i <= j are ordered lexicographically, giving
    d*(d+1)/2 stable coordinates for homogeneous quadratics.
    """
    if not 0 <= i <= j < num_vars:
        raise ValueError(f"bad variable pair ({i}, {j}) for {num_vars} variables")
    return i * num_vars - i * (i + 1) // 2 + j


def degree2_monomials(num_vars: int) -> list[Monomial]:
    """All degree-2 monomials in the column order of degree2_index."""
    out = []
    for i in range(num_vars):
        for j in range(i, num_vars):
            e = [0] * num_vars
            e[i] += 1
            e[j] += 1
            out.append(tuple(e))
    return out


def encode_degree2(p: GradedPolyF2) -> int:
    """Coordinates of a homogeneous degree-2 polynomial as a bitmask."""
    mask = 0
    for m in p.terms:
        if sum(m) != 2:
            raise ValueError(f"monomial {m} is not of degree 2")
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = j = support[0]
        else:
            i, j = support
        mask |= 1 << degree2_index(p.num_vars, i, j)
    return mask


def decode_degree2(num_vars: int, mask: int) -> GradedPolyF2:
    """Inverse of encode_degree2."""
    if mask < 0 or mask >> degree2_count(num_vars):
        raise ValueError(f"mask {mask:#x} out of range for {num_vars} variables")
    basis = degree2_monomials(num_vars)
    terms = [basis[c] for c in range(len(basis)) if (mask >> c) & 1]
    return GradedPolyF2._make(num_vars, frozenset(terms))
