"""Sparse bivariate polynomials over GF(p) and the grid machinery built on them.

The three nontrivial operations:

* `top_coefficient_interpolation` evaluates the weighted grid sum that
  recovers the coefficient of x^(|A|-1) y^(|B|-1) from values on A x B,
  valid whenever deg f <= |A| + |B| - 2.
* `vanishing_profile` lists the grid points where a polynomial does NOT
  vanish (the interesting points for a cover argument).
* `min_degree_feasibility` asks, by linear algebra, whether any polynomial
  of total degree <= D can vanish on a grid except at one prescribed point.
  Grids of shape |X| x |Y| admit such a polynomial exactly when
  D >= |X| + |Y| - 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import FieldElement, PrimeField

DEFAULT_DEGREE_CAP = 64


class BivariatePolynomial:
    """Polynomial in x, y over GF(p), stored as {(i, j): nonzero coeff}."""

    __slots__ = ("field", "terms")

    def __init__(self, field: PrimeField, terms=None):
        p = field.p
        clean: dict[tuple[int, int], int] = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for (i, j), coeff in items:
                c = int(coeff) % p
                if i < 0 or j < 0:
                    raise ValueError("exponents must be nonnegative")
                if c:
                    key = (int(i), int(j))
                    c = (clean.get(key, 0) + c) % p
                    if c:
                        clean[key] = c
                    else:
                        clean.pop(key, None)
        self.field = field
        self.terms = clean

    @classmethod
    def zero(cls, field: PrimeField) -> "BivariatePolynomial":
        return cls(field)

    @classmethod
    def constant(cls, field: PrimeField, c) -> "BivariatePolynomial":
        return cls(field, {(0, 0): int(field.element(c))})

    @classmethod
    def linear(cls, field: PrimeField, alpha, beta, gamma) -> "BivariatePolynomial":
        """alpha*x + beta*y + gamma; (alpha, beta) != (0, 0)."""
        a, b, g = (int(field.element(v)) for v in (alpha, beta, gamma))
        if a == 0 and b == 0:
            raise ValueError("a linear form needs a nonzero x or y coefficient")
        return cls(field, {(1, 0): a, (0, 1): b, (0, 0): g})

    def degree(self) -> int:
        """Total degree; -1 stands in for the zero polynomial."""
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def coefficient(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.terms.get((i, j), 0), self.field)

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, t, s) -> FieldElement:
        p = self.field.p
        tv = int(self.field.element(t))
        sv = int(self.field.element(s))
        if not self.terms:
            return self.field.zero()
        max_i = max(i for i, _ in self.terms)
        max_j = max(j for _, j in self.terms)
        t_pow = [1] * (max_i + 1)
        for k in range(1, max_i + 1):
            t_pow[k] = t_pow[k - 1] * tv % p
        s_pow = [1] * (max_j + 1)
        for k in range(1, max_j + 1):
            s_pow[k] = s_pow[k - 1] * sv % p
        total = 0
        for (i, j), c in self.terms.items():
            total += c * t_pow[i] % p * s_pow[j]
        return FieldElement(total % p, self.field)

    def add(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        self._check_field(other)
        out = dict(self.terms)
        p = self.field.p
        for key, c in other.terms.items():
            v = (out.get(key, 0) + c) % p
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return BivariatePolynomial(self.field, out)

    def scale(self, c) -> "BivariatePolynomial":
        cv = int(self.field.element(c))
        p = self.field.p
        return BivariatePolynomial(
            self.field, {k: v * cv % p for k, v in self.terms.items()}
        )

    def multiply(
        self, other: "BivariatePolynomial", degree_cap: int = DEFAULT_DEGREE_CAP
    ) -> "BivariatePolynomial":
        self._check_field(other)
        if self.is_zero() or other.is_zero():
            return BivariatePolynomial.zero(self.field)
        if self.degree() + other.degree() > degree_cap:
            raise ValueError(
                f"product degree {self.degree() + other.degree()} exceeds cap {degree_cap}"
            )
        p = self.field.p
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                v = (out.get(key, 0) + c1 * c2) % p
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return BivariatePolynomial(self.field, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BivariatePolynomial)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field.p, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (i, j), c in sorted(self.terms.items()):
            mono = "".join(
                [f"x^{i}" if i > 1 else "x" if i == 1 else "",
                 f"y^{j}" if j > 1 else "y" if j == 1 else ""]
            )
            bits.append(f"{c}{mono}" if mono else f"{c}")
        return " + ".join(bits)

    def to_triples(self) -> list[list[int]]:
        """[[i, j, coeff], ...] sorted by exponent pair; CLI/JSON format."""
        return [[i, j, c] for (i, j), c in sorted(self.terms.items())]

    @classmethod
    def from_triples(cls, field: PrimeField, triples) -> "BivariatePolynomial":
        return cls(field, {(int(i), int(j)): int(c) for i, j, c in triples})

    def _check_field(self, other: "BivariatePolynomial") -> None:
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")


def line_product(field: PrimeField, lines: Iterable) -> BivariatePolynomial:
    """Product of the linear forms alpha*x + beta*y + gamma.

    The empty product is the constant 1; the degree of the result equals the
    number of lines.
    """
    out = BivariatePolynomial.constant(field, 1)
    for alpha, beta, gamma in lines:
        out = out.multiply(BivariatePolynomial.linear(field, alpha, beta, gamma))
    return out


def _point_values(field: PrimeField, points) -> list[int]:
    values = [int(field.element(x)) for x in points]
    if len(set(values)) != len(values):
        raise ValueError("grid factors must consist of distinct elements")
    if not values:
        raise ValueError("grid factors must be nonempty")
    return values


def _pairwise_difference_products(values: Sequence[int], p: int) -> list[int]:
    """For each t in values, the product of (t - u) over the other entries."""
    out = []
    for t in values:
        prod = 1
        for u in values:
            if u != t:
                prod = prod * (t - u) % p
        out.append(prod)
    return out


def top_coefficient_interpolation(
    f: BivariatePolynomial, A, B
) -> FieldElement:
    """Weighted grid sum equal to the coefficient of x^(|A|-1) y^(|B|-1).

    Computes sum over (t, s) in A x B of
        f(t, s) / (prod_{u in A, u != t} (t - u) * prod_{v in B, v != s} (s - v)),
    which recovers the coefficient exactly when deg f <= |A| + |B| - 2.
    The difference products are tabulated once per row/column, so the double
    sum costs O(|A| |B|) evaluations after O((|A| + |B|)^2) setup.
    """
    field = f.field
    p = field.p
    avals = _point_values(field, A)
    bvals = _point_values(field, B)
    if f.degree() > len(avals) + len(bvals) - 2:
        raise ValueError(
            f"degree {f.degree()} exceeds |A|+|B|-2 = {len(avals) + len(bvals) - 2}"
        )
    wa = [pow(w, -1, p) for w in _pairwise_difference_products(avals, p)]
    wb = [pow(w, -1, p) for w in _pairwise_difference_products(bvals, p)]
    total = 0
    for t, inv_t in zip(avals, wa):
        row = 0
        for s, inv_s in zip(bvals, wb):
            row += int(f.evaluate(t, s)) * inv_s
        total = (total + row % p * inv_t) % p
    return FieldElement(total, field)


def interpolation_term(
    f: BivariatePolynomial, A, B, t, s
) -> FieldElement:
    """The single (t, s) summand of the grid sum above."""
    field = f.field
    p = field.p
    avals = _point_values(field, A)
    bvals = _point_values(field, B)
    tv = int(field.element(t))
    sv = int(field.element(s))
    if tv not in avals or sv not in bvals:
        raise ValueError("term point must lie on the grid")
    denom = 1
    for u in avals:
        if u != tv:
            denom = denom * (tv - u) % p
    for v in bvals:
        if v != sv:
            denom = denom * (sv - v) % p
    return FieldElement(int(f.evaluate(tv, sv)) * pow(denom, -1, p) % p, field)


def vanishing_profile(f: BivariatePolynomial, X, Y) -> list[tuple[FieldElement, FieldElement]]:
    """Grid points of X x Y where f does NOT vanish, in lexicographic order."""
    field = f.field
    xvals = sorted(_point_values(field, X))
    yvals = sorted(_point_values(field, Y))
    out = []
    for t in xvals:
        for s in yvals:
            if int(f.evaluate(t, s)) != 0:
                out.append((FieldElement(t, field), FieldElement(s, field)))
    return out


def solve_linear_system(
    rows: list[list[int]], rhs: list[int], p: int
) -> list[int] | None:
    """Particular solution of M x = rhs over GF(p), or None if inconsistent.

    Gaussian elimination with the pivot chosen as the first row holding a
    nonzero entry in the current column; free variables are set to 0.  The
    deterministic pivot rule keeps returned solutions reproducible.
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    aug = [[v % p for v in row] + [r % p] for row, r in zip(rows, rhs)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = pow(aug[r][c], -1, p)
        aug[r] = [v * inv % p for v in aug[r]]
        row_r = aug[r]
        for i in range(n_rows):
            if i != r and aug[i][c]:
                factor = aug[i][c]
                aug[i] = [(vi - factor * vr) % p for vi, vr in zip(aug[i], row_r)]
        pivot_cols.append(c)
        r += 1
        if r == n_rows:
            break
    for i in range(r, n_rows):
        if aug[i][n_cols]:
            return None
    x = [0] * n_cols
    for idx, c in enumerate(pivot_cols):
        x[c] = aug[idx][n_cols]
    return x


def nullspace_basis(rows: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {x : M x = 0} over GF(p) from the reduced row echelon form."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    m = [[v % p for v in row] for row in rows]
    pivot_cols: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [v * inv % p for v in m[r]]
        row_r = m[r]
        for i in range(n_rows):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [(vi - factor * vr) % p for vi, vr in zip(m[i], row_r)]
        pivot_cols.append(c)
        r += 1
        if r == n_rows:
            break
    basis = []
    pivot_set = set(pivot_cols)
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vec = [0] * n_cols
        vec[free] = 1
        for idx, c in enumerate(pivot_cols):
            vec[c] = (-m[idx][free]) % p
        basis.append(vec)
    return basis


def monomials_up_to(degree_bound: int) -> list[tuple[int, int]]:
    """Exponent pairs with i + j <= D, graded order: by total degree, then i."""
    return [
        (i, t - i) for t in range(degree_bound + 1) for i in range(t + 1)
    ]


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: BivariatePolynomial | None


def _grid_matrix(
    xvals: Sequence[int], yvals: Sequence[int], monos: Sequence[tuple[int, int]], p: int
) -> list[list[int]]:
    rows = []
    for t in xvals:
        for s in yvals:
            rows.append([pow(t, i, p) * pow(s, j, p) % p for i, j in monos])
    return rows


def min_degree_feasibility(
    X, Y, exceptional, degree_bound: int, field: PrimeField | None = None
) -> FeasibilityResult:
    """Can a polynomial of total degree <= D vanish on X x Y except one point?

    Solves, over the monomial basis {x^i y^j : i + j <= D}, the linear system
    requiring f = 0 on every grid point but `exceptional`, where f must take
    the value 1.  Returns the verdict plus a witness polynomial when feasible.
    Infeasible for every D < |X| + |Y| - 2 and feasible from
    D = (|X| - 1) + (|Y| - 1) on.
    """
    if field is None:
        field = getattr(X, "field", None) or getattr(Y, "field", None)
    if field is None:
        raise ValueError("a PrimeField is needed when X, Y are plain sequences")
    if degree_bound < 0:
        raise ValueError("degree bound must be >= 0")
    p = field.p
    xvals = sorted(_point_values(field, X))
    yvals = sorted(_point_values(field, Y))
    et = int(field.element(exceptional[0]))
    es = int(field.element(exceptional[1]))
    if et not in xvals or es not in yvals:
        raise ValueError(f"exceptional point ({et}, {es}) is outside the grid")
    monos = monomials_up_to(degree_bound)
    rows = _grid_matrix(xvals, yvals, monos, p)
    rhs = [
        1 if (t, s) == (et, es) else 0
        for t in xvals
        for s in yvals
    ]
    solution = solve_linear_system(rows, rhs, p)
    if solution is None:
        return FeasibilityResult(False, None)
    witness = BivariatePolynomial(
        field, {mono: c for mono, c in zip(monos, solution) if c}
    )
    return FeasibilityResult(True, witness)


def feasible_exceptional_points(
    X, Y, degree_bound: int, field: PrimeField | None = None
) -> set[tuple[int, int]]:
    """All grid points usable as the single non-vanishing point at degree <= D.

    Batch companion to `min_degree_feasibility`: a point e works exactly when
    its evaluation row is independent of the other rows, i.e. when no left
    null vector of the grid evaluation matrix touches e.  One elimination
    answers the question for every grid point at once.
    """
    if field is None:
        field = getattr(X, "field", None) or getattr(Y, "field", None)
    if field is None:
        raise ValueError("a PrimeField is needed when X, Y are plain sequences")
    p = field.p
    xvals = sorted(_point_values(field, X))
    yvals = sorted(_point_values(field, Y))
    monos = monomials_up_to(degree_bound)
    rows = _grid_matrix(xvals, yvals, monos, p)
    transpose = [[rows[i][c] for i in range(len(rows))] for c in range(len(monos))]
    dependent = set()
    for vec in nullspace_basis(transpose, p):
        for idx, v in enumerate(vec):
            if v:
                dependent.add(idx)
    points = [(t, s) for t in xvals for s in yvals]
    return {pt for idx, pt in enumerate(points) if idx not in dependent}
