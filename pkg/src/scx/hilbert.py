"""Exponential Hilbert series data for the face ring of a complex.

The Stanley-Reisner (face) ring of a complex on vertices x_1..x_n is the
polynomial ring modulo the squarefree monomials supported on non-faces. A
monomial survives in the quotient exactly when its support is a face, so the
finely graded exponential series sum_a dim(M_a) x^a / a! collapses to the
finite closed form

    sum over faces sigma of prod_{i in sigma} (exp(x_i) - 1),

a polynomial in the exp(x_i). This module expands that product into its
exact subset-indexed coefficient table (:class:`FineEPolynomial`), recovers
the coarse e-vector by equating the variables, evaluates per-multidegree
graded dimensions with an independent divisibility cross-check, and provides
the numeric closed form for the series of a free module generated in a fixed
multidegree.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .complexes import SimplicialComplex, bit_indices
from .errors import DimensionMismatch, InternalInconsistency, InvalidParameter, VoidComplex
from .vectors import EVector

__all__ = [
    "FineEPolynomial",
    "minimal_nonfaces",
    "graded_dimension",
    "fine_e_polynomial",
    "coarse_from_fine",
    "taylor_coefficient",
    "free_module_series_eval",
    "evaluate_coarse",
    "evaluate_e_poly_exact",
]


class FineEPolynomial:
    """Coefficients c_tau of the fine series sum_tau c_tau prod_{i in tau} exp(x_i).

    Stored sparsely by face bitmask; only subsets of faces can carry a
    nonzero coefficient, and absent keys mean zero. The constant term
    c_empty equals e_0, and the superset sums recover face membership:
    sum of c_tau over tau containing rho is 1 when rho is a face, else 0.
    Immutable once built; construct through :func:`fine_e_polynomial`.
    """

    def __init__(self, labels: tuple[str, ...], d: int, terms: dict[int, int]):
        self.labels = labels
        self.d = d
        self._terms = terms
        self._index = {lab: i for i, lab in enumerate(labels)}

    @property
    def n(self) -> int:
        return len(self.labels)

    def _mask(self, subset: Iterable) -> int:
        mask = 0
        for raw in subset:
            lab = str(raw)
            index = self._index.get(lab)
            if index is None:
                raise InvalidParameter(f"unknown vertex label {lab!r}")
            mask |= 1 << index
        return mask

    def coefficient(self, subset: Iterable = ()) -> int:
        """Coefficient of the given vertex subset (0 when absent)."""
        return self._terms.get(self._mask(subset), 0)

    def superset_sum(self, subset: Iterable = ()) -> int:
        """Sum of coefficients over every superset of the given subset."""
        return self._superset_sum_mask(self._mask(subset))

    def _superset_sum_mask(self, mask: int) -> int:
        return sum(c for m, c in self._terms.items() if m & mask == mask)

    def sorted_terms(self) -> list[tuple[tuple[str, ...], int]]:
        """Nonzero terms as (label tuple, coefficient), smallest subsets first."""
        out = [(tuple(self.labels[i] for i in bit_indices(m)), c)
               for m, c in self._terms.items()]
        out.sort(key=lambda item: (len(item[0]), item[0]))
        return out

    def __repr__(self):
        return f"FineEPolynomial(n={self.n}, d={self.d}, terms={len(self._terms)})"


def _require_nonvoid(c: SimplicialComplex) -> None:
    if c.is_void:
        raise VoidComplex("the void complex has no face ring data")


@lru_cache(maxsize=None)
def _minimal_nonface_masks(c: SimplicialComplex) -> tuple[int, ...]:
    _require_nonvoid(c)
    faces = c.face_mask_set
    candidates = set()
    for face in faces:
        for v in range(c.n):
            bit = 1 << v
            if not face & bit and (face | bit) not in faces:
                candidates.add(face | bit)
    minimal = [cand for cand in candidates
               if all((cand ^ (1 << v)) in faces for v in bit_indices(cand))]
    return tuple(sorted(minimal))


def minimal_nonfaces(c: SimplicialComplex) -> tuple[tuple[str, ...], ...]:
    """Inclusion-minimal non-faces: supports of the ideal's squarefree generators.

    A subset of the vertices is a face exactly when it contains none of these.
    """
    out = [tuple(c.labels[i] for i in bit_indices(m)) for m in _minimal_nonface_masks(c)]
    out.sort(key=lambda t: (len(t), t))
    return tuple(out)


def _support_mask(c: SimplicialComplex, a: Sequence[int]) -> int:
    _require_nonvoid(c)
    if len(a) != c.n:
        raise DimensionMismatch(f"multidegree length {len(a)} != vertex count {c.n}")
    mask = 0
    for i, ai in enumerate(a):
        if not isinstance(ai, int) or ai < 0:
            raise InvalidParameter(f"multidegree entries must be nonnegative integers, got {ai!r}")
        if ai:
            mask |= 1 << i
    return mask


def graded_dimension(c: SimplicialComplex, a: Sequence[int]) -> int:
    """0/1 dimension of the degree-a graded piece of the face ring.

    Computed two ways, from face membership of the support and from
    divisibility by the minimal non-face monomials; disagreement would be a
    bug and raises InternalInconsistency.
    """
    support = _support_mask(c, a)
    by_support = support in c.face_mask_set
    by_divisibility = all(nf & support != nf for nf in _minimal_nonface_masks(c))
    if by_support != by_divisibility:
        raise InternalInconsistency(
            f"support test says {by_support} but divisibility says {by_divisibility} for {tuple(a)}")
    return 1 if by_support else 0


def fine_e_polynomial(c: SimplicialComplex) -> FineEPolynomial:
    """Expand sum over faces of prod (exp(x_i) - 1) into subset coefficients.

    The coefficient of subset tau is the signed count of faces above it:
    sum over faces sigma containing tau of (-1)^(|sigma| - |tau|).
    """
    _require_nonvoid(c)
    terms: dict[int, int] = {}
    for face in c.face_mask_set:
        size = face.bit_count()
        sub = face
        while True:
            terms[sub] = terms.get(sub, 0) + (-1 if (size - sub.bit_count()) % 2 else 1)
            if sub == 0:
                break
            sub = (sub - 1) & face
    terms = {m: coeff for m, coeff in terms.items() if coeff}
    return FineEPolynomial(c.labels, c.dimension() + 1, terms)


def coarse_from_fine(p: FineEPolynomial) -> EVector:
    """Equate all variables: e_k collects the coefficients of the size-k subsets."""
    entries = [0] * (p.d + 1)
    for m, coeff in p._terms.items():
        entries[m.bit_count()] += coeff
    return EVector(tuple(entries))


def taylor_coefficient(p: FineEPolynomial, a: Sequence[int]) -> int:
    """Coefficient of x^a / a! in the fine series.

    Each exponential monomial contributes that coefficient exactly when its
    subset contains the support of a, so this is the superset sum over
    supp(a); it must always equal :func:`graded_dimension` for the same a.
    """
    if len(a) != p.n:
        raise DimensionMismatch(f"multidegree length {len(a)} != vertex count {p.n}")
    mask = 0
    for i, ai in enumerate(a):
        if not isinstance(ai, int) or ai < 0:
            raise InvalidParameter(f"multidegree entries must be nonnegative integers, got {ai!r}")
        if ai:
            mask |= 1 << i
    return p._superset_sum_mask(mask)


def free_module_series_eval(a: Sequence[int], x: Sequence[float]) -> float:
    """Closed form of the exponential series of the free module generated in degree a.

    Evaluates prod_i (exp(x_i) - sum_{k < a_i} x_i^k / k!) numerically. An
    exp overflow is reported as infinity rather than raised.
    """
    if len(a) != len(x):
        raise DimensionMismatch(f"degree length {len(a)} != point length {len(x)}")
    value = 1.0
    for ai, xi in zip(a, x):
        if not isinstance(ai, int) or ai < 0:
            raise InvalidParameter(f"multidegree entries must be nonnegative integers, got {ai!r}")
        xi = float(xi)
        try:
            expo = math.exp(xi)
        except OverflowError:
            expo = math.inf
        value *= expo - sum(xi ** k / math.factorial(k) for k in range(ai))
    return value


def _as_evector(e) -> EVector:
    return e if isinstance(e, EVector) else EVector(tuple(e))


def evaluate_coarse(e, t: float) -> float:
    """Numeric value of the coarse exponential series sum_k e_k exp(k t)."""
    e = _as_evector(e)
    total = 0.0
    for k, ek in enumerate(e):
        try:
            total += ek * math.exp(k * t)
        except OverflowError:
            return math.inf if ek > 0 else -math.inf
    return total


def evaluate_e_poly_exact(e, q) -> Fraction:
    """Exact rational value of the e-polynomial sum_k e_k q^k."""
    e = _as_evector(e)
    q = Fraction(q)
    acc = Fraction(0)
    for ek in reversed(tuple(e)):
        acc = acc * q + ek
    return acc
