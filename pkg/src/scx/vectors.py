"""Exact transforms between the f-, h- and e-vectors of a simplicial complex.

For a complex of dimension d-1 all three vectors have length d+1:

* ``f = (f_-1, f_0, ..., f_{d-1})``: face counts by dimension, where
  ``f_-1 = 1`` counts the empty face,
* ``h = (h_0, ..., h_d)``: numerator coefficients of the coarse ordinary
  Hilbert series of the face ring, ``sum_k h_k t^k / (1-t)^d``,
* ``e = (e_0, ..., e_d)``: coefficients of the coarse exponential Hilbert
  series read as a polynomial in ``y = exp(t)``.

Each vector determines the other two through invertible lower-triangular
integer systems. The six transforms below use the summation formulas
directly; the signed Pascal matrices realizing the same maps are available
from :func:`pascal_matrices` for cross-checking. Everything is exact: Python
big integers throughout, :class:`fractions.Fraction` where a rational value
is evaluated. No float ever enters a transform.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Union

from .errors import NotAnEVector, NotAnHVector

__all__ = [
    "FVector",
    "HVector",
    "EVector",
    "IntPolynomial",
    "f_to_e",
    "e_to_f",
    "f_to_h",
    "h_to_f",
    "h_to_e",
    "pascal_matrices",
    "f_polynomial",
    "e_polynomial",
    "h_polynomial",
    "shift_poly",
    "h_poly_from_f_poly",
    "vector_json",
]

Scalar = Union[int, Fraction]


def _sign(k: int) -> int:
    """(-1)**k, well defined for negative k too."""
    return -1 if k % 2 else 1


@dataclass(frozen=True)
class _IntVector:
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError(f"{type(self).__name__} cannot be empty")
        for x in entries:
            if not isinstance(x, int):
                raise ValueError(f"{type(self).__name__} entries must be int, got {x!r}")
        self._validate()

    def _validate(self) -> None:
        raise NotImplementedError

    @property
    def d(self) -> int:
        """Length minus one; equals dim(complex) + 1 for vectors of a complex."""
        return len(self.entries) - 1

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


@dataclass(frozen=True)
class FVector(_IntVector):
    """Face counts ``(f_-1, f_0, ..., f_{d-1})``; ``entries[i]`` holds ``f_{i-1}``."""

    def _validate(self) -> None:
        if self.entries[0] != 1:
            raise ValueError("f_-1 must be 1 (the empty face)")
        if any(x < 0 for x in self.entries):
            raise ValueError("face counts cannot be negative")
        if self.entries[-1] < 1:
            raise ValueError("top face count must be positive (the length is tight)")


@dataclass(frozen=True)
class EVector(_IntVector):
    """Coefficients ``(e_0, ..., e_d)`` of the coarse exponential series in y = exp(t).

    Always sums to 1 (the series value at t = 0 counts only the empty face)
    and has positive leading coefficient e_d = f_{d-1}. These two checks do
    not characterize e-vectors; full validity is decided by round-tripping
    through :func:`e_to_f`.
    """

    def _validate(self) -> None:
        if sum(self.entries) != 1:
            raise ValueError("e-vector entries must sum to 1")
        if self.entries[-1] < 1:
            raise ValueError("leading e-vector entry must be positive")


@dataclass(frozen=True)
class HVector(_IntVector):
    """Coefficients ``(h_0, ..., h_d)`` of the coarse Hilbert series numerator."""

    def _validate(self) -> None:
        if self.entries[0] != 1:
            raise ValueError("h_0 must be 1")
        if sum(self.entries) < 1:
            raise ValueError("h-vector entries must sum to f_{d-1} >= 1")


def _as_f(v) -> FVector:
    return v if isinstance(v, FVector) else FVector(tuple(v))


def _as_e(v) -> EVector:
    return v if isinstance(v, EVector) else EVector(tuple(v))


def _as_h(v) -> HVector:
    return v if isinstance(v, HVector) else HVector(tuple(v))


def f_to_e(f: FVector | Iterable[int]) -> EVector:
    """e_k = sum_{i=k..d} (-1)^(i-k) C(i,k) f_{i-1}.

    This is the coefficient of y^k after expanding sum_i f_{i-1} (y-1)^i,
    the coarse exponential series of the face ring.
    """
    f = _as_f(f)
    d = f.d
    return EVector(tuple(
        sum(_sign(i - k) * comb(i, k) * f[i] for i in range(k, d + 1))
        for k in range(d + 1)
    ))


def e_to_f(e: EVector | Iterable[int]) -> FVector:
    """Inverse transform: f_{i-1} = sum_{j=i..d} C(j,i) e_j.

    Raises NotAnEVector when the result is not a plausible f-vector (a
    negative count, or f_-1 != 1).
    """
    try:
        e = _as_e(e)
    except ValueError as exc:
        raise NotAnEVector(str(exc)) from exc
    d = e.d
    entries = tuple(
        sum(comb(j, i) * e[j] for j in range(i, d + 1))
        for i in range(d + 1)
    )
    try:
        return FVector(entries)
    except ValueError as exc:
        raise NotAnEVector(f"no complex has face counts {entries}: {exc}") from exc


def f_to_h(f: FVector | Iterable[int]) -> HVector:
    """h_k = sum_{i=0..k} (-1)^(k-i) C(d-i, k-i) f_{i-1}."""
    f = _as_f(f)
    d = f.d
    return HVector(tuple(
        sum(_sign(k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    ))


def h_to_f(h: HVector | Iterable[int]) -> FVector:
    """Inverse transform: f_{i-1} = sum_{j=0..i} C(d-j, i-j) h_j.

    Raises NotAnHVector when the round trip does not land on a valid f-vector.
    """
    try:
        h = _as_h(h)
    except ValueError as exc:
        raise NotAnHVector(str(exc)) from exc
    d = h.d
    entries = tuple(
        sum(comb(d - j, i - j) * h[j] for j in range(i + 1))
        for i in range(d + 1)
    )
    try:
        return FVector(entries)
    except ValueError as exc:
        raise NotAnHVector(f"no complex has face counts {entries}: {exc}") from exc


def h_to_e(h: HVector | Iterable[int]) -> EVector:
    """e_k = (-1)^(d-k) sum_{j=d-k..d} C(j, d-k) h_j.

    Obtained by extracting the t^k coefficient from
    e(t) = sum_j h_j (t-1)^j t^(d-j); it always agrees with the composite
    f_to_e(h_to_f(h)), which is how the input is validated.
    """
    h_to_f(h)  # validates, raising NotAnHVector on garbage
    h = _as_h(h)
    d = h.d
    return EVector(tuple(
        _sign(d - k) * sum(comb(j, d - k) * h[j] for j in range(d - k, d + 1))
        for k in range(d + 1)
    ))


def pascal_matrices(d: int):
    """The five (d+1)x(d+1) signed Pascal matrices tied to the transforms.

    Returns ``(A, A_inv, B, B_inv, D_hat)`` as plain lists of integer rows:

    * ``A[i][j] = (-1)^(i-j) C(i,j)``  -- row vector f maps to e via f^T A,
    * ``A_inv[i][j] = C(i,j)`` -- entrywise absolute value of A, its inverse,
    * ``B[i][j] = (-1)^(i-j) C(d-j, i-j)`` -- column vector f maps to h via B f,
    * ``B_inv[i][j] = C(d-j, i-j)`` -- again the absolute value,
    * ``D_hat[i][j] = (-1)^(d-j) C(i,j)`` -- a column-signed copy of A_inv,
      kept for inspection; the h-to-e transform itself uses the summation
      formula in :func:`h_to_e`.

    A * A_inv and B * B_inv are exactly the identity.
    """
    if d < 0:
        raise ValueError("matrix size parameter d must be >= 0")
    size = d + 1
    A = [[_sign(i - j) * comb(i, j) if j <= i else 0 for j in range(size)] for i in range(size)]
    A_inv = [[comb(i, j) if j <= i else 0 for j in range(size)] for i in range(size)]
    B = [[_sign(i - j) * comb(d - j, i - j) if j <= i else 0 for j in range(size)] for i in range(size)]
    B_inv = [[comb(d - j, i - j) if j <= i else 0 for j in range(size)] for i in range(size)]
    D_hat = [[_sign(d - j) * comb(i, j) if j <= i else 0 for j in range(size)] for i in range(size)]
    return A, A_inv, B, B_inv, D_hat


@dataclass(frozen=True)
class IntPolynomial:
    """Dense univariate polynomial over the integers, ascending degree.

    Normalized so the top coefficient is nonzero; the zero polynomial is the
    empty tuple. Addition, multiplication, differentiation, affine argument
    substitution and evaluation at integers or Fractions are all exact.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise ValueError(f"polynomial coefficients must be int, got {c!r}")
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return IntPolynomial(tuple(merged))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def compose_linear(self, a: int, b: int) -> "IntPolynomial":
        """Exact substitution t -> a*t + b."""
        result = IntPolynomial()
        power = IntPolynomial((1,))
        base = IntPolynomial((b, a))
        for c in self.coeffs:
            if c:
                result = result + c * power
            power = power * base
        return result

    def shift(self, c: int) -> "IntPolynomial":
        """Exact substitution t -> t + c via binomial expansion."""
        return self.compose_linear(1, c)

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            term = str(c) if i == 0 else (f"{c}*t" if i == 1 else f"{c}*t^{i}")
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


def _as_poly(p) -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial(tuple(p))


def f_polynomial(f: FVector | Iterable[int]) -> IntPolynomial:
    """sum_i f_{i-1} t^i."""
    return IntPolynomial(_as_f(f).entries)


def e_polynomial(e: EVector | Iterable[int]) -> IntPolynomial:
    """sum_k e_k t^k."""
    return IntPolynomial(_as_e(e).entries)


def h_polynomial(h: HVector | Iterable[int]) -> IntPolynomial:
    """sum_k h_k t^k."""
    return IntPolynomial(_as_h(h).entries)


def shift_poly(p: IntPolynomial | Iterable[int], c: int) -> IntPolynomial:
    """p(t + c), exactly. shift_poly(f_polynomial(f), -1) is the e-polynomial."""
    return _as_poly(p).shift(c)


def h_poly_from_f_poly(f: FVector | Iterable[int]) -> IntPolynomial:
    """Expand sum_i f_{i-1} t^i (1-t)^(d-i), the rational-substitution route
    (1-t)^d f(t/(1-t)) to the h-polynomial, without leaving integer arithmetic."""
    f = _as_f(f)
    d = f.d
    one_minus_t = IntPolynomial((1, -1))
    powers = [IntPolynomial((1,))]
    for _ in range(d):
        powers.append(powers[-1] * one_minus_t)
    total = IntPolynomial()
    for i in range(d + 1):
        if f[i]:
            t_i = IntPolynomial((0,) * i + (1,))
            total = total + f[i] * t_i * powers[d - i]
    return total


def vector_json(f: FVector | Iterable[int]) -> dict:
    """The f/h/e triple as a JSON-ready dict with exact decimal strings."""
    f = _as_f(f)
    return {
        "d": f.d,
        "f": [str(x) for x in f],
        "h": [str(x) for x in f_to_h(f)],
        "e": [str(x) for x in f_to_e(f)],
    }
