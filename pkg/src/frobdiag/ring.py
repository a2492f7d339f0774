"""Graded-commutative rings presented by structure constants.

A ring is an ordered homogeneous basis together with the sparse tensor
``t[(i, j, k)]`` expanding basis products::

    x_i . x_j = sum_k t[(i, j, k)] x_k

Index 0 is conventionally the unit; the top index (the generator paired
with the fundamental class) is explicit so bases need not be sorted by
degree.  Ring elements are plain coefficient tuples over the basis.

Validation reports every violated axiom instead of stopping at the first,
so a bad input file can be diagnosed in one pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .linalg import Matrix, Vector, frac, invert, SingularMatrixError

SparseTensor = Mapping[tuple[int, int, int], Fraction]


class MissingTopClassError(ValueError):
    """Raised when an operation needs a top basis index and none is set."""


@dataclass(frozen=True)
class GradedBasis:
    """Ordered basis labels with degrees, a unit index, and a top index.

    ``unit_index`` is ``None`` for bases of modules, which carry no unit.
    """

    labels: tuple[str, ...]
    degrees: tuple[int, ...]
    formal_dimension: int
    unit_index: int | None = 0
    top_index: int | None = None

    def __post_init__(self):
        if len(self.labels) != len(self.degrees):
            raise ValueError("labels and degrees have different lengths")
        if not self.labels:
            raise ValueError("basis must be nonempty")
        if any(d < 0 for d in self.degrees):
            raise ValueError("degrees must be nonnegative")
        if self.formal_dimension < 0:
            raise ValueError("formal dimension must be nonnegative")
        if self.unit_index is not None:
            if not 0 <= self.unit_index < len(self.labels):
                raise ValueError("unit index out of range")
            if self.degrees[self.unit_index] != 0:
                raise ValueError("unit basis element must have degree 0")
        if self.top_index is not None:
            if not 0 <= self.top_index < len(self.labels):
                raise ValueError("top index out of range")
            if self.degrees[self.top_index] != self.formal_dimension:
                raise ValueError(
                    "top basis element must sit in the formal dimension")

    @property
    def size(self) -> int:
        return len(self.labels)

    def indices(self) -> range:
        return range(self.size)


RingElement = Vector


class RingStructure:
    """A graded basis plus the sparse multiplication tensor."""

    __slots__ = ("basis", "tensor", "_products")

    def __init__(self, basis: GradedBasis,
                 tensor: Mapping[tuple[int, int, int], int | str | Fraction]):
        if basis.unit_index is None:
            raise ValueError("a ring basis must carry a unit index")
        n = basis.size
        clean: dict[tuple[int, int, int], Fraction] = {}
        for (i, j, k), raw in tensor.items():
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise ValueError(f"tensor index {(i, j, k)} out of range")
            v = frac(raw)
            if v != 0:
                clean[(i, j, k)] = v
        self.basis = basis
        self.tensor = clean
        # (i, j) -> {k: coefficient}; the working form for products
        products: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j, k), v in clean.items():
            products.setdefault((i, j), {})[k] = v
        self._products = products

    @property
    def size(self) -> int:
        return self.basis.size

    def product_coefficients(self, i: int, j: int) -> Mapping[int, Fraction]:
        """Coefficients of ``x_i . x_j`` as a sparse map ``k -> value``."""
        return self._products.get((i, j), {})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingStructure):
            return NotImplemented
        return self.basis == other.basis and self.tensor == other.tensor

    def __repr__(self) -> str:
        return (f"RingStructure({self.basis.size} basis elements, "
                f"dim {self.basis.formal_dimension}, "
                f"{len(self.tensor)} tensor entries)")


# ---------------------------------------------------------------------------
# elements

def zero_element(ring: RingStructure) -> RingElement:
    return (Fraction(0),) * ring.size


def basis_element(ring: RingStructure, i: int) -> RingElement:
    return tuple(Fraction(int(j == i)) for j in range(ring.size))


def unit_element(ring: RingStructure) -> RingElement:
    return basis_element(ring, ring.basis.unit_index)


def add_elements(a: RingElement, b: RingElement) -> RingElement:
    if len(a) != len(b):
        raise ValueError("element length mismatch")
    return tuple(x + y for x, y in zip(a, b))


def scale_element(c: int | str | Fraction, a: RingElement) -> RingElement:
    c = frac(c)
    return tuple(c * x for x in a)


def multiply(ring: RingStructure, a: Sequence[Fraction],
             b: Sequence[Fraction]) -> RingElement:
    """Bilinear extension of the structure tensor to ring elements."""
    n = ring.size
    if len(a) != n or len(b) != n:
        raise ValueError(
            f"element length mismatch: {len(a)}, {len(b)} over basis of {n}")
    out = [Fraction(0)] * n
    for (i, j), coeffs in ring._products.items():
        c = a[i] * b[j]
        if c == 0:
            continue
        for k, v in coeffs.items():
            out[k] += c * v
    return tuple(out)


# ---------------------------------------------------------------------------
# validation

@dataclass(frozen=True)
class Violation:
    axiom: str
    indices: tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.axiom} at {self.indices}: {self.detail}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom: str, indices: tuple[int, ...], detail: str) -> None:
        self.violations.append(Violation(axiom, indices, detail))

    def __iter__(self) -> Iterator[Violation]:
        return iter(self.violations)

    def __len__(self) -> int:
        return len(self.violations)


def validate(ring: RingStructure,
             allow_noncommutative: bool = False) -> ValidationReport:
    """Check grading, unit, associativity, and graded commutativity.

    Violations are collected, not raised; an empty report means the tensor
    is a valid graded(-commutative) associative unital multiplication.
    ``allow_noncommutative`` skips only the graded-commutativity axiom.
    """
    report = ValidationReport()
    basis = ring.basis
    deg = basis.degrees
    n = ring.size
    u = basis.unit_index

    for (i, j, k), v in sorted(ring.tensor.items()):
        if deg[k] != deg[i] + deg[j]:
            report.add("grading", (i, j, k),
                       f"entry {v} has degree {deg[i]}+{deg[j]} -> {deg[k]}")

    for i in range(n):
        for side, coeffs in (("left", ring.product_coefficients(u, i)),
                             ("right", ring.product_coefficients(i, u))):
            for k in range(n):
                expected = Fraction(int(k == i))
                actual = coeffs.get(k, Fraction(0))
                if actual != expected:
                    report.add("unit", (i, k),
                               f"{side} unit product gives {actual}, "
                               f"expected {expected}")

    for i in range(n):
        xi = basis_element(ring, i)
        for j in range(n):
            xj = basis_element(ring, j)
            ij = multiply(ring, xi, xj)
            for k in range(n):
                xk = basis_element(ring, k)
                left = multiply(ring, ij, xk)
                right = multiply(ring, xi, multiply(ring, xj, xk))
                if left != right:
                    for s in range(n):
                        if left[s] != right[s]:
                            report.add("associativity", (i, j, k, s),
                                       f"{left[s]} != {right[s]}")

    if not allow_noncommutative:
        for i in range(n):
            for j in range(i, n):
                sign = -1 if (deg[i] % 2 and deg[j] % 2) else 1
                fwd = ring.product_coefficients(i, j)
                bwd = ring.product_coefficients(j, i)
                for k in set(fwd) | set(bwd):
                    a = fwd.get(k, Fraction(0))
                    b = bwd.get(k, Fraction(0))
                    if a != sign * b:
                        report.add("graded-commutativity", (i, j, k),
                                   f"{a} != {'-' if sign < 0 else ''}{b}")
    return report


# ---------------------------------------------------------------------------
# duality

def pairing_matrix(ring: RingStructure) -> Matrix:
    """Matrix ``(i, j) -> coefficient of the top class in x_i . x_j``.

    This is the intersection form of the underlying manifold when the top
    class is normalized against the fundamental class.
    """
    top = ring.basis.top_index
    if top is None:
        raise MissingTopClassError("ring has no top basis index")
    n = ring.size
    return Matrix([[ring.tensor.get((i, j, top), Fraction(0))
                    for j in range(n)] for i in range(n)])


def check_poincare_duality(ring: RingStructure) -> bool:
    """True iff the top-degree pairing matrix is invertible."""
    try:
        invert(pairing_matrix(ring))
    except SingularMatrixError:
        return False
    return True


def check_frobenius_chain(ring: RingStructure) -> bool:
    """Check ``<(x_a . x_b), x_c> = <x_a, (x_b . x_c)>`` for all triples.

    The identity contracts associativity against the top functional; it
    holds for every valid ring with a top class, and is the engine behind
    the inverse-pairing description of the diagonal class.
    """
    p = pairing_matrix(ring)
    n = ring.size
    for a in range(n):
        for b in range(n):
            ab = ring.product_coefficients(a, b)
            for c in range(n):
                bc = ring.product_coefficients(b, c)
                lhs = sum((v * p[j, c] for j, v in ab.items()), Fraction(0))
                rhs = sum((p[a, i] * v for i, v in bc.items()), Fraction(0))
                if lhs != rhs:
                    return False
    return True


def change_basis(ring: RingStructure, p: Matrix) -> RingStructure:
    """Transport the structure tensor to the basis ``x'_a = sum_i p[i,a] x_i``.

    ``p`` must be invertible; it should be degree-preserving (block
    diagonal over the degree components) for the result to pass grading
    validation, and should fix the unit and top columns to keep their
    normalizations.
    """
    n = ring.size
    if p.shape != (n, n):
        raise ValueError(f"basis-change matrix must be {n}x{n}, got {p.shape}")
    q = invert(p)
    tensor: dict[tuple[int, int, int], Fraction] = {}
    for a in range(n):
        va = p.column(a)
        for b in range(n):
            vb = p.column(b)
            prod_old = multiply(ring, va, vb)
            prod_new = q.apply(prod_old)
            for c, v in enumerate(prod_new):
                if v != 0:
                    tensor[(a, b, c)] = v
    return RingStructure(ring.basis, tensor)
