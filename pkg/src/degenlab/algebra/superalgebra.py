"""
Core value types: SuperAlgebra, GradedBasisChange and PowerProfile.

A superalgebra of type (m, n) has basis e1..em (even) followed by f1..fn
(odd). Its multiplication is a dense (m+n, m+n, m+n) object array of
Fractions: table[i, j, k] is the coefficient of basis vector k in the
product of basis vectors i and j.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from degenlab.arith.laurent import LaurentPoly
from degenlab.arith.linalg import determinant, identity_matrix, inverse
from degenlab.arith.scalars import format_scalar, parse_scalar
from degenlab.errors import (
    DimensionMismatch,
    IndexOutOfRange,
    MalformedAlgebra,
    SingularMatrix,
)

_LABEL = re.compile(r"^\s*([ef])(\d+)\s*$")

ProductSpec = Mapping[str, Union[Sequence[Sequence[Any]], Mapping[str, Any]]]


def zeros(shape: Tuple[int, ...]) -> np.ndarray:
    """Object array of Fraction zeros."""
    array = np.empty(shape, dtype=object)
    array.fill(Fraction(0))
    return array


def basis_labels(m: int, n: int) -> List[str]:
    return [f"e{i + 1}" for i in range(m)] + [f"f{p + 1}" for p in range(n)]


def label_index(label: Union[str, int], m: int, n: int) -> int:
    """
    Translate a basis label ("e2", "f1") or a 0-based index into an index.

    Raises:
        IndexOutOfRange: If the label names no basis vector of type (m, n)
    """
    if isinstance(label, (int, np.integer)) and not isinstance(label, bool):
        if not 0 <= label < m + n:
            raise IndexOutOfRange(f"Basis index {label} outside 0..{m + n - 1}")
        return int(label)
    match = _LABEL.match(str(label))
    if not match:
        raise IndexOutOfRange(f"Not a basis label: {label!r}")
    kind, number = match.group(1), int(match.group(2))
    if kind == "e":
        if not 1 <= number <= m:
            raise IndexOutOfRange(f"{label} does not exist for m = {m}")
        return number - 1
    if not 1 <= number <= n:
        raise IndexOutOfRange(f"{label} does not exist for n = {n}")
    return m + number - 1


class SuperAlgebra:
    """
    Finite-dimensional Z2-graded algebra given by structure constants.

    Instances are immutable; the table is exposed read-only.
    """

    __slots__ = ("m", "n", "name", "_table", "_fingerprint", "_supercommutative")

    def __init__(self, m: int, n: int, table: Optional[np.ndarray] = None,
                 name: Optional[str] = None):
        if m < 0 or n < 0:
            raise DimensionMismatch(f"Negative dimensions ({m}, {n})")
        size = m + n
        if table is None:
            table = zeros((size, size, size))
        else:
            table = np.asarray(table, dtype=object)
            if table.shape != (size, size, size):
                raise DimensionMismatch(
                    f"Structure table has shape {table.shape}, expected {(size, size, size)}")
            table = table.copy()
            for index in np.ndindex(table.shape):
                table[index] = parse_scalar(table[index])
        self.m = m
        self.n = n
        self.name = name
        for i, j, k in np.ndindex(table.shape):
            if table[i, j, k] and (self.parity(i) ^ self.parity(j)) != self.parity(k):
                labels = basis_labels(m, n)
                raise MalformedAlgebra(
                    f"Product {labels[i]}{labels[j]} has a component along {labels[k]} "
                    f"of the wrong parity")
        table.flags.writeable = False
        self._table = table
        self._fingerprint = None
        self._supercommutative = None

    # construction helpers

    @classmethod
    def zero(cls, m: int, n: int, name: Optional[str] = None) -> "SuperAlgebra":
        return cls(m, n, name=name)

    @classmethod
    def from_blocks(cls, m: int, n: int, alpha, beta, gamma, delta,
                    name: Optional[str] = None) -> "SuperAlgebra":
        """Build from the blocks alpha (ee->e), beta (ef->f), gamma (fe->f), delta (ff->e)."""
        table = zeros((m + n, m + n, m + n))
        if m:
            table[:m, :m, :m] = np.asarray(alpha, dtype=object).reshape(m, m, m)
        if m and n:
            table[:m, m:, m:] = np.asarray(beta, dtype=object).reshape(m, n, n)
            table[m:, :m, m:] = np.asarray(gamma, dtype=object).reshape(n, m, n)
            table[m:, m:, :m] = np.asarray(delta, dtype=object).reshape(n, n, m)
        return cls(m, n, table, name=name)

    @classmethod
    def from_products(cls, m: int, n: int, products: ProductSpec,
                      name: Optional[str] = None, complete: bool = True) -> "SuperAlgebra":
        """
        Build from listed products such as {"e1.f1": [["f1", "1/2"]]}.

        With complete=True the supercommutative completion fills in the
        mirrored products: e_j e_i = e_i e_j, f_p e_i = e_i f_p and
        f_q f_p = -f_p f_q. A listed mirror that disagrees is an error.

        Raises:
            MalformedAlgebra: On bad keys or conflicting entries
        """
        size = m + n
        table = zeros((size, size, size))
        listed = {}
        for key, value in products.items():
            try:
                left, right = str(key).split(".")
                i, j = label_index(left, m, n), label_index(right, m, n)
            except (ValueError, IndexOutOfRange) as e:
                raise MalformedAlgebra(f"Bad product key {key!r}: {e}")
            items = value.items() if isinstance(value, Mapping) else value
            row = [Fraction(0)] * size
            for entry in items:
                try:
                    label, coefficient = entry
                    k = label_index(label, m, n)
                except (ValueError, TypeError, IndexOutOfRange) as e:
                    raise MalformedAlgebra(f"Bad product term {entry!r} in {key!r}: {e}")
                row[k] += parse_scalar(coefficient)
            if (i, j) in listed and listed[(i, j)] != row:
                raise MalformedAlgebra(f"Product {key!r} listed twice with different values")
            listed[(i, j)] = row
        for (i, j), row in listed.items():
            table[i, j, :] = row
        if complete:
            for (i, j), row in listed.items():
                sign = -1 if (i >= m and j >= m) else 1
                mirrored = [sign * x for x in row]
                if (j, i) in listed and listed[(j, i)] != mirrored:
                    labels = basis_labels(m, n)
                    raise MalformedAlgebra(
                        f"Products {labels[i]}.{labels[j]} and {labels[j]}.{labels[i]} "
                        f"violate supercommutativity")
                table[j, i, :] = mirrored
        return cls(m, n, table, name=name)

    # accessors

    @property
    def dim(self) -> int:
        return self.m + self.n

    @property
    def dims(self) -> Tuple[int, int]:
        return (self.m, self.n)

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def labels(self) -> List[str]:
        return basis_labels(self.m, self.n)

    def parity(self, index: int) -> int:
        return 0 if index < self.m else 1

    def index(self, label: Union[str, int]) -> int:
        return label_index(label, self.m, self.n)

    @property
    def alpha(self) -> np.ndarray:
        m = self.m
        return self._table[:m, :m, :m]

    @property
    def beta(self) -> np.ndarray:
        m = self.m
        return self._table[:m, m:, m:]

    @property
    def gamma(self) -> np.ndarray:
        m = self.m
        return self._table[m:, :m, m:]

    @property
    def delta(self) -> np.ndarray:
        m = self.m
        return self._table[m:, m:, :m]

    @property
    def structure_constant_count(self) -> int:
        return self.alpha.size + self.beta.size + self.gamma.size + self.delta.size

    @property
    def supercommutative(self) -> bool:
        if self._supercommutative is None:
            from degenlab.algebra.constructions import is_supercommutative
            self._supercommutative = is_supercommutative(self)
        return self._supercommutative

    def nonzero_entries(self) -> Iterator[Tuple[int, int, int, Fraction]]:
        for i, j, k in np.ndindex(self._table.shape):
            value = self._table[i, j, k]
            if value:
                yield i, j, k, value

    def is_zero(self) -> bool:
        return not any(True for _ in self.nonzero_entries())

    def with_name(self, name: Optional[str]) -> "SuperAlgebra":
        return SuperAlgebra(self.m, self.n, self._table, name=name)

    @property
    def fingerprint(self) -> Tuple:
        """Hashable structural key (names are ignored)."""
        if self._fingerprint is None:
            self._fingerprint = (self.m, self.n, tuple(
                (i, j, k, value.numerator, value.denominator)
                for i, j, k, value in self.nonzero_entries()))
        return self._fingerprint

    def products(self) -> Dict[str, List[List[str]]]:
        """
        Nonzero products in document form.

        Supercommutative algebras list only e_i e_j (i <= j), e_i f_p and
        f_p f_q (p < q); anything else lists every nonzero product.
        """
        labels = self.labels
        canonical = self.supercommutative
        result: Dict[str, List[List[str]]] = {}
        for i in range(self.dim):
            for j in range(self.dim):
                if canonical:
                    if self.parity(i) == self.parity(j) and j < i:
                        continue
                    if self.parity(i) == 1 and self.parity(j) == 0:
                        continue
                terms = [[labels[k], format_scalar(self._table[i, j, k])]
                         for k in range(self.dim) if self._table[i, j, k]]
                if terms:
                    result[f"{labels[i]}.{labels[j]}"] = terms
        return result

    def describe(self) -> str:
        """Human-readable multiplication table, e.g. "e1e1=e1, e1f1=1/2 f1"."""
        parts = []
        for key, terms in self.products().items():
            left, right = key.split(".")
            rhs = " + ".join(
                label if c == "1" else (f"-{label}" if c == "-1" else f"{c} {label}")
                for label, c in terms).replace("+ -", "- ")
            parts.append(f"{left}{right}={rhs}")
        return ", ".join(parts) if parts else "zero multiplication"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return self.fingerprint == other.fingerprint

    def __hash__(self) -> int:
        return hash(self.fingerprint)

    def __repr__(self) -> str:
        label = f"{self.name} " if self.name else ""
        return f"<SuperAlgebra {label}({self.m},{self.n}): {self.describe()}>"


def _coerce_entry(value: Any) -> Any:
    if isinstance(value, LaurentPoly):
        return value
    return parse_scalar(value)


def _square_block(block, label: str) -> np.ndarray:
    array = np.asarray(block, dtype=object)
    if array.size == 0:
        return np.empty((0, 0), dtype=object)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise DimensionMismatch(f"{label} block must be square, got shape {array.shape}")
    result = np.empty(array.shape, dtype=object)
    for index in np.ndindex(array.shape):
        result[index] = _coerce_entry(array[index])
    return result


class GradedBasisChange:
    """
    Element g of GL(V0) x GL(V1), given by its even and odd blocks.

    Column j of a block holds the coordinates of g applied to the j-th basis
    vector of that parity. Entries are Fractions, or LaurentPoly values for
    parametrized changes.
    """

    __slots__ = ("even_block", "odd_block")

    def __init__(self, even_block, odd_block):
        self.even_block = _square_block(even_block, "Even")
        self.odd_block = _square_block(odd_block, "Odd")

    @classmethod
    def identity(cls, m: int, n: int) -> "GradedBasisChange":
        return cls(identity_matrix(m), identity_matrix(n))

    @classmethod
    def from_matrix(cls, matrix, m: int) -> "GradedBasisChange":
        """Split a block-diagonal (m+n)x(m+n) matrix; off-diagonal blocks must vanish."""
        matrix = np.asarray(matrix, dtype=object)
        if matrix[:m, m:].any() or matrix[m:, :m].any():
            raise DimensionMismatch("Matrix does not preserve the grading")
        return cls(matrix[:m, :m], matrix[m:, m:])

    @property
    def m(self) -> int:
        return self.even_block.shape[0]

    @property
    def n(self) -> int:
        return self.odd_block.shape[0]

    @property
    def is_parametrized(self) -> bool:
        return any(isinstance(x, LaurentPoly)
                   for block in (self.even_block, self.odd_block) for x in block.flat)

    @property
    def matrix(self) -> np.ndarray:
        size = self.m + self.n
        full = zeros((size, size))
        full[:self.m, :self.m] = self.even_block
        full[self.m:, self.m:] = self.odd_block
        return full

    def determinants(self) -> Tuple[Any, Any]:
        return determinant(self.even_block), determinant(self.odd_block)

    def is_invertible(self) -> bool:
        return all(bool(d) for d in self.determinants())

    def inverse(self) -> "GradedBasisChange":
        """
        Raises:
            SingularMatrix: If either block is singular
        """
        if self.is_parametrized:
            raise TypeError("Only constant basis changes can be inverted here")
        even = inverse(self.even_block) if self.m else self.even_block
        odd = inverse(self.odd_block) if self.n else self.odd_block
        return GradedBasisChange(even, odd)

    def compose(self, other: "GradedBasisChange") -> "GradedBasisChange":
        """Return self o other (apply other first)."""
        if (self.m, self.n) != (other.m, other.n):
            raise DimensionMismatch(f"Cannot compose types {(self.m, self.n)} and {(other.m, other.n)}")
        even = self.even_block @ other.even_block if self.m else self.even_block
        odd = self.odd_block @ other.odd_block if self.n else self.odd_block
        return GradedBasisChange(even, odd)

    def evaluate(self, t0) -> "GradedBasisChange":
        """Substitute t = t0 into every Laurent entry."""
        def value(x):
            return x.evaluate(t0) if isinstance(x, LaurentPoly) else x
        even = np.vectorize(value, otypes=[object])(self.even_block) if self.m else self.even_block
        odd = np.vectorize(value, otypes=[object])(self.odd_block) if self.n else self.odd_block
        return GradedBasisChange(even, odd)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedBasisChange):
            return NotImplemented
        return (self.even_block.shape == other.even_block.shape
                and self.odd_block.shape == other.odd_block.shape
                and all(a == b for a, b in zip(self.even_block.flat, other.even_block.flat))
                and all(a == b for a, b in zip(self.odd_block.flat, other.odd_block.flat)))

    def __repr__(self) -> str:
        return f"GradedBasisChange(even={self.even_block.tolist()}, odd={self.odd_block.tolist()})"


@dataclass(frozen=True)
class PowerProfile:
    """Graded dimensions (dim (J^r)_0, dim (J^r)_1) for r = 1..r_max."""

    dims: Tuple[Tuple[int, int], ...]

    @property
    def r_max(self) -> int:
        return len(self.dims)

    def at(self, r: int) -> Tuple[int, int]:
        if not 1 <= r <= len(self.dims):
            raise IndexOutOfRange(f"Power r = {r} outside 1..{len(self.dims)}")
        return self.dims[r - 1]

    def dominates(self, other: "PowerProfile") -> bool:
        """Entrywise >= on the common range of r."""
        return all(a[0] >= b[0] and a[1] >= b[1] for a, b in zip(self.dims, other.dims))

    def to_list(self) -> List[List[int]]:
        return [list(d) for d in self.dims]

    def __iter__(self):
        return iter(self.dims)

    def __len__(self) -> int:
        return len(self.dims)
