"""Structural property checks: Property E, Dehn-Sommerville conditions, Eulerian tests.

A (d-1)-dimensional complex has Property E when its e-vector is the
alternating mirror of its f-vector, e_k = (-1)^(d-k) f_{k-1} for every
0 <= k <= d; weak Property E only asks this for k >= 1. These conditions
turn out to coincide with the classical (h_k = h_{d-k}) and the general
Dehn-Sommerville conditions on the h-vector. :func:`classify` computes the
e-side and the h-side from first principles, separately, and treats any
disagreement as a bug (:class:`~scx.errors.InternalInconsistency`), never as
a result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple

from .complexes import SimplicialComplex, bit_indices
from .errors import HypothesisNotMet, InternalInconsistency, InvalidParameter, VoidComplex
from .hilbert import evaluate_coarse, evaluate_e_poly_exact
from .vectors import IntPolynomial, e_polynomial, f_polynomial, f_to_e, f_to_h

__all__ = [
    "Verdict",
    "PropertyReport",
    "HalfEvaluation",
    "LinkIdentityResult",
    "check_property_e",
    "check_weak_property_e",
    "check_classical_ds",
    "check_general_ds",
    "is_eulerian",
    "is_eulerian_sphere",
    "check_link_identity",
    "check_join_property_e",
    "check_half_evaluation",
    "classify",
    "is_connected",
]


def _sgn(k: int) -> int:
    return -1 if k % 2 else 1


@dataclass(frozen=True)
class Verdict:
    """Boolean outcome plus a witness describing the first failure, if any."""

    ok: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.ok


class HalfEvaluation(NamedTuple):
    """Outcomes of the t = 1/2 evaluations; both None when not Eulerian."""

    euler_value_ok: bool | None
    root_ok: bool | None


@dataclass(frozen=True)
class LinkIdentityResult:
    """Result of the vertex-link polynomial identity check."""

    ok: bool
    hypothesis_met: bool
    note: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class PropertyReport:
    property_e: bool
    weak_property_e: bool
    classical_ds: bool
    general_ds: bool
    eulerian: bool
    eulerian_sphere: bool
    pure: bool
    witness: str | None = None

    def to_dict(self) -> dict:
        return {
            "property_e": self.property_e,
            "weak_property_e": self.weak_property_e,
            "classical_ds": self.classical_ds,
            "general_ds": self.general_ds,
            "eulerian": self.eulerian,
            "eulerian_sphere": self.eulerian_sphere,
            "pure": self.pure,
            "witness": self.witness,
        }


def _require_nonvoid(c: SimplicialComplex) -> None:
    if c.is_void:
        raise VoidComplex("no properties are defined for the void complex")


def _property_e_from(c: SimplicialComplex, first_k: int) -> Verdict:
    f = c.f_vector()
    e = f_to_e(f)
    d = f.d
    for k in range(first_k, d + 1):
        want = _sgn(d - k) * f[k]
        if e[k] != want:
            return Verdict(False, f"k={k}: e_{k}={e[k]}, want (-1)^(d-k)*f_{k - 1}={want}")
    return Verdict(True)


def check_property_e(c: SimplicialComplex) -> Verdict:
    """Does e_k == (-1)^(d-k) f_{k-1} hold for every 0 <= k <= d?"""
    _require_nonvoid(c)
    return _property_e_from(c, 0)


def check_weak_property_e(c: SimplicialComplex) -> Verdict:
    """The same equalities restricted to 1 <= k <= d."""
    _require_nonvoid(c)
    return _property_e_from(c, 1)


def check_classical_ds(c: SimplicialComplex) -> Verdict:
    """Classical Dehn-Sommerville: the h-vector is symmetric, h_k == h_{d-k}."""
    _require_nonvoid(c)
    h = f_to_h(c.f_vector())
    d = h.d
    for k in range(d + 1):
        if h[k] != h[d - k]:
            return Verdict(False, f"k={k}: h_{k}={h[k]} != h_{d - k}={h[d - k]}")
    return Verdict(True)


def check_general_ds(c: SimplicialComplex) -> Verdict:
    """General Dehn-Sommerville: h_k - h_{d-k} == (-1)^k C(d,k) * defect for all k,
    where the defect is the (d-1)-sphere Euler characteristic 1 + (-1)^(d-1)
    minus the complex's own chi_top."""
    _require_nonvoid(c)
    h = f_to_h(c.f_vector())
    d = h.d
    _, chi_top = c.euler_characteristics()
    defect = (1 + _sgn(d - 1)) - chi_top
    for k in range(d + 1):
        lhs = h[k] - h[d - k]
        rhs = _sgn(k) * comb(d, k) * defect
        if lhs != rhs:
            return Verdict(False, f"k={k}: h_{k}-h_{d - k}={lhs}, want {rhs}")
    return Verdict(True)


def is_eulerian(c: SimplicialComplex) -> Verdict:
    """Pure, and every nonempty face's link has the Euler characteristic of a
    sphere of the complementary dimension: chi_top(link of sigma) must equal
    1 + (-1)^(d + dim sigma). Exhaustive over all nonempty faces; the witness
    names the first failing face."""
    _require_nonvoid(c)
    if not c.is_pure():
        return Verdict(False, "not pure")
    d = c.dimension() + 1
    faces = c.face_mask_set
    for sigma in sorted(faces, key=lambda m: (m.bit_count(), c._labels_of_mask(m))):
        if sigma == 0:
            continue
        size = sigma.bit_count()
        chi_top = 0
        for tau in faces:
            if tau != sigma and tau & sigma == sigma:
                chi_top += _sgn(tau.bit_count() - size - 1)
        want = 1 + _sgn(d + size - 1)
        if chi_top != want:
            lab = " ".join(c._labels_of_mask(sigma))
            return Verdict(False, f"face {{{lab}}}: link chi_top={chi_top}, want {want}")
    return Verdict(True)


def is_eulerian_sphere(c: SimplicialComplex) -> Verdict:
    """Eulerian, with the global Euler characteristic of a (d-1)-sphere."""
    eul = is_eulerian(c)
    if not eul.ok:
        return eul
    d = c.dimension() + 1
    _, chi_top = c.euler_characteristics()
    want = 1 + _sgn(d - 1)
    if chi_top != want:
        return Verdict(False, f"chi_top={chi_top}, want {want} for a sphere")
    return Verdict(True)


def check_link_identity(c: SimplicialComplex) -> LinkIdentityResult:
    """If every vertex link has Property E, then coefficientwise
    e(t) + (-1)^(d+1) f(-t) == e_0 + (-1)^(d+1).

    Vacuously true, with a note, when some link lacks Property E. A failure
    of the identity while the hypothesis holds returns False and would point
    at a bug (or a counterexample, which does not exist).
    """
    _require_nonvoid(c)
    d = c.dimension() + 1
    if d < 1:
        raise InvalidParameter("the identity needs at least one vertex")
    for lab in c.labels:
        if not check_property_e(c.link([lab])).ok:
            return LinkIdentityResult(True, False, f"link of vertex {lab!r} lacks Property E; nothing to check")
    f = c.f_vector()
    e = f_to_e(f)
    lhs = e_polynomial(e) + _sgn(d + 1) * f_polynomial(f).compose_linear(-1, 0)
    rhs = IntPolynomial((e[0] + _sgn(d + 1),))
    if lhs == rhs:
        return LinkIdentityResult(True, True)
    return LinkIdentityResult(False, True, f"identity fails: got {lhs}, want {rhs}")


def check_join_property_e(c1: SimplicialComplex, c2: SimplicialComplex) -> bool:
    """Join two Property E complexes and confirm the join has Property E and
    that its e-polynomial is the product of the factors' e-polynomials.

    Raises HypothesisNotMet when either factor lacks Property E.
    """
    pe1 = check_property_e(c1)
    if not pe1.ok:
        raise HypothesisNotMet(f"first factor lacks Property E ({pe1.witness})")
    pe2 = check_property_e(c2)
    if not pe2.ok:
        raise HypothesisNotMet(f"second factor lacks Property E ({pe2.witness})")
    joined = c1.join(c2)
    product_ok = (e_polynomial(f_to_e(joined.f_vector()))
                  == e_polynomial(f_to_e(c1.f_vector())) * e_polynomial(f_to_e(c2.f_vector())))
    return check_property_e(joined).ok and product_ok


def check_half_evaluation(c: SimplicialComplex) -> HalfEvaluation:
    """Evaluations at t = 1/2 for Eulerian complexes.

    euler_value_ok compares the exact value of the e-polynomial at 1/2 with
    chi_top; for even-dimensional complexes the two can legitimately differ,
    so callers should treat a False there as a flag, not a failure. For
    odd-dimensional Eulerian complexes root_ok additionally requires the
    exact value to vanish and -ln 2 to be a numeric root of the coarse
    exponential series. Non-Eulerian input yields (None, None).
    """
    _require_nonvoid(c)
    if not is_eulerian(c).ok:
        return HalfEvaluation(None, None)
    e = f_to_e(c.f_vector())
    _, chi_top = c.euler_characteristics()
    at_half = evaluate_e_poly_exact(e, Fraction(1, 2))
    euler_value_ok = at_half == chi_top
    root_ok = None
    if c.dimension() % 2 == 1:
        root_ok = at_half == 0 and abs(evaluate_coarse(e, -math.log(2.0))) < 1e-9
    return HalfEvaluation(euler_value_ok, root_ok)


def classify(c: SimplicialComplex) -> PropertyReport:
    """Full report over all checks, with the e-side and h-side conditions
    computed independently; a mismatch between the two raises
    InternalInconsistency instead of returning."""
    _require_nonvoid(c)
    pe = check_property_e(c)
    weak = check_weak_property_e(c)
    cds = check_classical_ds(c)
    gds = check_general_ds(c)
    eul = is_eulerian(c)
    sphere = is_eulerian_sphere(c)
    if weak.ok != gds.ok:
        raise InternalInconsistency(
            f"weak Property E is {weak.ok} but general Dehn-Sommerville is {gds.ok}")
    if pe.ok != cds.ok:
        raise InternalInconsistency(
            f"Property E is {pe.ok} but classical Dehn-Sommerville is {cds.ok}")
    if pe.ok and not weak.ok:
        raise InternalInconsistency("Property E without weak Property E")
    if sphere.ok and not eul.ok:
        raise InternalInconsistency("Eulerian sphere without Eulerian")
    witness = next((v.witness for v in (pe, weak, cds, gds, eul, sphere) if v.witness), None)
    return PropertyReport(pe.ok, weak.ok, cds.ok, gds.ok, eul.ok, sphere.ok, c.is_pure(), witness)


def is_connected(c: SimplicialComplex) -> bool:
    """Graph connectivity of the 1-skeleton (union-find over the edges)."""
    _require_nonvoid(c)
    n = c.n
    if n <= 1:
        return True
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for face in c.face_mask_set:
        if face.bit_count() == 2:
            i, j = bit_indices(face)
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    root = find(0)
    return all(find(i) == root for i in range(n))
