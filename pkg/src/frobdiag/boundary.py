"""Duality data for manifolds with boundary.

The relative cohomology of a pair carries no product of its own, but it is
a module over the absolute cohomology ring.  A :class:`ModulePair` holds
both: the ring with basis ``y_0..y_m`` (tensor ``nu``) and the module with
basis ``x_0..x_N`` acted on by ``y_i ^ x_j = sum_k action[(i,j,k)] x_k``.

The relative pairing sends ``(y_i, x_j)`` to the top coefficient of
``y_i ^ x_j``; when it is nondegenerate its inverse is again the unique
normalized symmetric class, now inside module (x) ring.  A closed ring
embeds as the pair with module = ring and action = multiplication, which
gives a regression path back to the absolute case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .diagonal import (NonUniqueSolutionError, NoSolutionError, ResidualEntry,
                       SignMode, SingularPairingError, SymmetryReport,
                       koszul_sign)
from .linalg import (Matrix, Vector, SingularMatrixError, frac, invert,
                     nullspace, rank, solve)
from .ring import (GradedBasis, MissingTopClassError, RingStructure,
                   ValidationReport, basis_element, multiply, validate)

ModuleElement = Vector


class ModulePair:
    """A ring acting on a graded module, with a relative top class."""

    __slots__ = ("ring", "module_basis", "action", "_action_products")

    def __init__(self, ring: RingStructure, module_basis: GradedBasis,
                 action: Mapping[tuple[int, int, int], int | str | Fraction]):
        nr = ring.size
        nm = module_basis.size
        clean: dict[tuple[int, int, int], Fraction] = {}
        for (i, j, k), raw in action.items():
            if not (0 <= i < nr and 0 <= j < nm and 0 <= k < nm):
                raise ValueError(f"action index {(i, j, k)} out of range")
            v = frac(raw)
            if v != 0:
                clean[(i, j, k)] = v
        self.ring = ring
        self.module_basis = module_basis
        self.action = clean
        products: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j, k), v in clean.items():
            products.setdefault((i, j), {})[k] = v
        self._action_products = products

    @property
    def formal_dimension(self) -> int:
        return self.module_basis.formal_dimension

    def action_coefficients(self, i: int, j: int) -> Mapping[int, Fraction]:
        """Sparse coefficients of ``y_i ^ x_j``."""
        return self._action_products.get((i, j), {})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModulePair):
            return NotImplemented
        return (self.ring == other.ring
                and self.module_basis == other.module_basis
                and self.action == other.action)

    def __repr__(self) -> str:
        return (f"ModulePair(ring of {self.ring.size} over module of "
                f"{self.module_basis.size}, dim {self.formal_dimension})")


def module_basis_element(mp: ModulePair, j: int) -> ModuleElement:
    return tuple(Fraction(int(i == j)) for i in range(mp.module_basis.size))


def act(mp: ModulePair, y: Sequence[Fraction],
        x: Sequence[Fraction]) -> ModuleElement:
    """Bilinear extension of the action tensor: ``y ^ x``."""
    if len(y) != mp.ring.size or len(x) != mp.module_basis.size:
        raise ValueError("element lengths do not match ring/module bases")
    out = [Fraction(0)] * mp.module_basis.size
    for (i, j), coeffs in mp._action_products.items():
        c = y[i] * x[j]
        if c == 0:
            continue
        for k, v in coeffs.items():
            out[k] += c * v
    return tuple(out)


def validate_module(mp: ModulePair,
                    allow_noncommutative: bool = False) -> ValidationReport:
    """Validate the ring axioms of ``nu`` plus the action axioms.

    Ring violations are reported with an ``nu-`` prefix; the action is
    checked for grading, the unit acting as identity, and associativity
    over the ring (``(y.y') ^ x = y ^ (y' ^ x)``).
    """
    report = ValidationReport()
    for v in validate(mp.ring, allow_noncommutative=allow_noncommutative):
        report.add(f"nu-{v.axiom}", v.indices, v.detail)

    ring_deg = mp.ring.basis.degrees
    mod_deg = mp.module_basis.degrees
    for (i, j, k), v in sorted(mp.action.items()):
        if mod_deg[k] != ring_deg[i] + mod_deg[j]:
            report.add("action-grading", (i, j, k),
                       f"entry {v} has degree {ring_deg[i]}+{mod_deg[j]} "
                       f"-> {mod_deg[k]}")

    unit = mp.ring.basis.unit_index
    for j in range(mp.module_basis.size):
        coeffs = mp.action_coefficients(unit, j)
        for k in range(mp.module_basis.size):
            expected = Fraction(int(k == j))
            actual = coeffs.get(k, Fraction(0))
            if actual != expected:
                report.add("unit-action", (j, k),
                           f"unit acts with {actual}, expected {expected}")

    for i in range(mp.ring.size):
        yi = basis_element(mp.ring, i)
        for j in range(mp.ring.size):
            yj = basis_element(mp.ring, j)
            yij = multiply(mp.ring, yi, yj)
            for k in range(mp.module_basis.size):
                xk = module_basis_element(mp, k)
                left = act(mp, yij, xk)
                right = act(mp, yi, act(mp, yj, xk))
                if left != right:
                    for s in range(mp.module_basis.size):
                        if left[s] != right[s]:
                            report.add("module-associativity", (i, j, k, s),
                                       f"{left[s]} != {right[s]}")
    return report


# ---------------------------------------------------------------------------
# the relative pairing and its inverse class

def relative_pairing_matrix(mp: ModulePair) -> Matrix:
    """Matrix ``(i, j) -> top coefficient of y_i ^ x_j``.

    Rows run over the ring basis, columns over the module basis.
    """
    top = mp.module_basis.top_index
    if top is None:
        raise MissingTopClassError("module has no top basis index")
    return Matrix([[mp.action.get((i, j, top), Fraction(0))
                    for j in range(mp.module_basis.size)]
                   for i in range(mp.ring.size)])


def check_relative_duality(mp: ModulePair) -> bool:
    """True iff the relative pairing matrix is square and invertible."""
    p = relative_pairing_matrix(mp)
    if not p.is_square():
        return False
    try:
        invert(p)
    except SingularMatrixError:
        return False
    return True


@dataclass(frozen=True)
class RelativeTensorClass:
    """Class in module (x) ring: ``mu[i, j]`` multiplies ``x_i (x) y_j``."""

    mu: Matrix
    module_basis: GradedBasis
    ring_basis: GradedBasis

    def __post_init__(self):
        if self.mu.shape != (self.module_basis.size, self.ring_basis.size):
            raise ValueError(
                f"coefficient matrix {self.mu.shape} does not match bases "
                f"({self.module_basis.size}, {self.ring_basis.size})")

    def is_zero(self) -> bool:
        return self.mu.is_zero()

    def flatten(self) -> Vector:
        return tuple(v for i in range(self.mu.rows) for v in self.mu.row(i))


def relative_class(mp: ModulePair, mu: Matrix) -> RelativeTensorClass:
    return RelativeTensorClass(mu, mp.module_basis, mp.ring.basis)


def relative_diagonal_class(mp: ModulePair,
                            mode: SignMode = SignMode.LITERAL
                            ) -> RelativeTensorClass:
    """The normalized symmetric class of the pair.

    LITERAL mode inverts the relative pairing matrix.  GRADED mode solves
    the relative symmetry system subject to the normalization that the
    top row of ``mu`` is the unit indicator, demanding uniqueness.
    """
    if mode is SignMode.LITERAL:
        p = relative_pairing_matrix(mp)
        try:
            return relative_class(mp, invert(p))
        except SingularMatrixError as exc:
            raise SingularPairingError(
                "relative pairing is degenerate; no diagonal class") from exc
        except ValueError as exc:
            raise SingularPairingError(
                f"relative pairing matrix {p.shape} is not square") from exc

    nm, nr = mp.module_basis.size, mp.ring.size
    top = mp.module_basis.top_index
    if top is None:
        raise MissingTopClassError("module has no top basis index")
    unit = mp.ring.basis.unit_index
    rows, rhs = _relative_symmetry_system(mp, mode)
    for j in range(nr):
        row = [Fraction(0)] * (nm * nr)
        row[top * nr + j] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(int(j == unit)))
    result = solve(Matrix(rows), rhs)
    if result is None:
        raise NoSolutionError(
            "normalized relative symmetry system is inconsistent")
    particular, kernel = result
    if kernel:
        raise NonUniqueSolutionError(
            f"normalized relative symmetry system has a {len(kernel)}-"
            "dimensional solution family")
    mu = Matrix([particular[i * nr:(i + 1) * nr] for i in range(nm)])
    return relative_class(mp, mu)


def check_relative_top_normalization(mp: ModulePair,
                                     w: RelativeTensorClass) -> bool:
    """True iff the top row of ``w.mu`` is the ring-unit indicator."""
    top = mp.module_basis.top_index
    if top is None:
        raise MissingTopClassError("module has no top basis index")
    unit = mp.ring.basis.unit_index
    return all(w.mu[top, j] == Fraction(int(j == unit))
               for j in range(mp.ring.size))


# ---------------------------------------------------------------------------
# the relative symmetry condition

def check_relative_symmetry(mp: ModulePair, mode: SignMode,
                            w: RelativeTensorClass) -> SymmetryReport:
    """Residuals of ``w.(1(x)y_k) - (y_k(x)1).w`` for every ring element.

    The right multiplication applies the ring product to the second tensor
    factor; the left multiplication applies the module action to the first
    factor.  Multiplying through a unit slot never crosses odd degrees, so
    the Koszul factor is trivial in either mode; it is still looked up per
    term to keep the convention explicit.
    """
    if (w.module_basis != mp.module_basis
            or w.ring_basis != mp.ring.basis):
        raise ValueError("class does not live over this module pair")
    nm, nr = mp.module_basis.size, mp.ring.size
    mod_deg = mp.module_basis.degrees
    entries: list[ResidualEntry] = []
    for k in range(nr):
        yk = basis_element(mp.ring, k)
        # w.(1 (x) y_k): each row of mu is a ring element on the right
        # factor; multiply it by y_k (only a unit crosses the left factor,
        # so no Koszul sign in either mode)
        lhs_rows = [multiply(mp.ring, w.mu.row(i), yk) for i in range(nm)]
        # (y_k (x) 1).w: each column of mu is a module element on the left
        # factor; act by y_k after the unit passes the module factor
        rhs_cols = []
        for j in range(nr):
            col = w.mu.column(j)
            signed = tuple(koszul_sign(mode, 0, mod_deg[l]) * col[l]
                           for l in range(nm))
            rhs_cols.append(act(mp, yk, signed))
        for i in range(nm):
            for s in range(nr):
                value = lhs_rows[i][s] - rhs_cols[s][i]
                if value != 0:
                    entries.append(ResidualEntry(k, i, s, value))
    return SymmetryReport(entries)


def _relative_symmetry_system(mp: ModulePair,
                              mode: SignMode) -> tuple[list[list[Fraction]],
                                                       list[Fraction]]:
    """Linear system in the flattened unknowns ``mu[i*nr + j]``.

    One equation per (probe k, module slot i, ring slot s), assembled
    straight from the two tensors.
    """
    nm, nr = mp.module_basis.size, mp.ring.size
    ring_deg = mp.ring.basis.degrees
    mod_deg = mp.module_basis.degrees
    rows: list[list[Fraction]] = []
    for k in range(nr):
        for i in range(nm):
            for s in range(nr):
                row = [Fraction(0)] * (nm * nr)
                for j in range(nr):
                    c = mp.ring.tensor.get((j, k, s))
                    if c is not None:
                        row[i * nr + j] += c * koszul_sign(mode, ring_deg[j],
                                                           0)
                for l in range(nm):
                    c = mp.action.get((k, l, i))
                    if c is not None:
                        row[l * nr + s] -= c * koszul_sign(mode, 0, mod_deg[l])
                if any(v != 0 for v in row):
                    rows.append(row)
    if not rows:
        rows.append([Fraction(0)] * (nm * nr))
    return rows, [Fraction(0)] * len(rows)


def solve_relative_symmetric_space(mp: ModulePair,
                                   mode: SignMode = SignMode.LITERAL
                                   ) -> list[RelativeTensorClass]:
    """Echelon-normalized basis of all relatively symmetric classes."""
    nm, nr = mp.module_basis.size, mp.ring.size
    rows, _ = _relative_symmetry_system(mp, mode)
    kernel = nullspace(Matrix(rows))
    return [relative_class(mp, Matrix([vec[i * nr:(i + 1) * nr]
                                       for i in range(nm)]))
            for vec in kernel]


def relative_class_in_span(space: Sequence[RelativeTensorClass],
                           w: RelativeTensorClass) -> bool:
    """Membership of ``w`` in the rational span of ``space``."""
    if not space:
        return w.is_zero()
    rows = [s.flatten() for s in space]
    base_rank = rank(Matrix.from_rows(rows))
    return rank(Matrix.from_rows(rows + [w.flatten()])) == base_rank
