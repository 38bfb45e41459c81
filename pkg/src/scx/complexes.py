"""Abstract simplicial complexes stored by their facets over labeled vertices.

A complex is determined by its facets (inclusion-maximal faces). Vertex
labels are arbitrary whitespace-free tokens; internally they map to dense
indices 0..n-1 in sorted label order and every face is an integer bitmask
over those indices, so subset tests and power-set walks are single-word
operations at the sizes this library targets (a few dozen vertices).

Two degenerate complexes are kept apart deliberately: the *void* complex has
no faces at all, not even the empty one, and every counting operation rejects
it with :class:`~scx.errors.VoidComplex`; the complex ``{}`` whose only face
is the empty face is perfectly ordinary, with dimension -1 and face count
vector ``(1,)``.

All values are immutable after construction and every operation is a pure
function, so concurrent use needs no coordination.
"""

from __future__ import annotations

import random as _random
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator

from .errors import (
    DuplicateVertexInFacet,
    FaceNotInComplex,
    FacetFormatError,
    InvalidLabel,
    InvalidParameter,
    TooLarge,
    VoidComplex,
)
from .vectors import FVector

__all__ = [
    "SimplicialComplex",
    "from_facets",
    "parse_facet_text",
    "boundary_simplex",
    "full_simplex",
    "cycle",
    "cross_polytope",
    "whiskered_cycle",
    "make",
    "GENERATORS",
    "enumerate_all_complexes",
    "random_complex",
    "bit_indices",
]


def bit_indices(mask: int) -> Iterator[int]:
    """Indices of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _parity_sign(k: int) -> int:
    return -1 if k % 2 else 1


def _check_label(raw) -> str:
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise InvalidLabel(f"vertex labels must be strings or integers, got {raw!r}")
    if isinstance(raw, int):
        return str(raw)
    if not raw:
        raise InvalidLabel("empty vertex label")
    if any(ch.isspace() for ch in raw):
        raise InvalidLabel(f"label {raw!r} contains whitespace")
    return raw


class SimplicialComplex:
    """Immutable complex; build one with :func:`from_facets` or a generator below.

    ``labels`` maps dense vertex indices to their string labels (sorted), and
    ``facet_masks`` holds the maximal faces as bitmasks over those indices,
    an antichain by construction. Equality is structural.
    """

    def __init__(self, labels: tuple[str, ...], facet_masks: tuple[int, ...], *, void: bool = False):
        self.labels = labels
        self.facet_masks = facet_masks
        self.is_void = void

    # -- identity ---------------------------------------------------------

    @property
    def n(self) -> int:
        """Vertex count."""
        return len(self.labels)

    @property
    def kind(self) -> str:
        return "void" if self.is_void else "nonvoid"

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (self.is_void, self.labels, self.facet_masks) == \
               (other.is_void, other.labels, other.facet_masks)

    def __hash__(self):
        return hash((self.is_void, self.labels, self.facet_masks))

    def __repr__(self):
        if self.is_void:
            return "SimplicialComplex(void)"
        inside = ", ".join("{" + " ".join(f) + "}" for f in self.facets())
        return f"SimplicialComplex({inside})"

    def _require_faces(self) -> None:
        if self.is_void:
            raise VoidComplex("the void complex has no faces")

    # -- faces --------------------------------------------------------------

    @cached_property
    def face_mask_set(self) -> frozenset[int]:
        """Every face as a bitmask, the empty face included (empty for void)."""
        if self.is_void:
            return frozenset()
        faces: set[int] = set()
        for facet in self.facet_masks:
            sub = facet
            while True:  # standard submask walk over one facet's power set
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & facet
        return frozenset(faces)

    def faces(self) -> list[tuple[str, ...]]:
        """All faces as label tuples, ordered by size then labels."""
        self._require_faces()
        out = [self._labels_of_mask(m) for m in self.face_mask_set]
        out.sort(key=lambda t: (len(t), t))
        return out

    def facets(self) -> tuple[tuple[str, ...], ...]:
        """The maximal faces as sorted label tuples."""
        return tuple(sorted(self._labels_of_mask(m) for m in self.facet_masks))

    def has_face(self, face: Iterable) -> bool:
        self._require_faces()
        try:
            mask = self._mask_of_labels(face)
        except FaceNotInComplex:
            return False
        return mask in self.face_mask_set

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def _labels_of_mask(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bit_indices(mask))

    def _mask_of_labels(self, face: Iterable) -> int:
        mask = 0
        for raw in face:
            label = _check_label(raw)
            index = self._index.get(label)
            if index is None:
                raise FaceNotInComplex(f"no vertex labeled {label!r}")
            mask |= 1 << index
        return mask

    # -- counting -------------------------------------------------------------

    def dimension(self) -> int:
        """Largest facet dimension; -1 for the empty-face complex."""
        self._require_faces()
        return max(m.bit_count() for m in self.facet_masks) - 1

    def is_pure(self) -> bool:
        """True when all facets share the top dimension."""
        self._require_faces()
        return len({m.bit_count() for m in self.facet_masks}) == 1

    @cached_property
    def _face_counts(self) -> tuple[int, ...]:
        counts = [0] * (max(m.bit_count() for m in self.facet_masks) + 1)
        for m in self.face_mask_set:
            counts[m.bit_count()] += 1
        return tuple(counts)

    def f_vector(self) -> FVector:
        """Exact face counts (f_-1, ..., f_{d-1}), by enumerating every face."""
        self._require_faces()
        return FVector(self._face_counts)

    def euler_characteristics(self) -> tuple[int, int]:
        """(chi, chi_top), two alternating sums of the face counts.

        chi counts the empty face, so the constant coefficient of the coarse
        exponential series is -chi; chi_top = f_0 - f_1 + ... is the ordinary
        topological Euler characteristic. chi_top == chi + 1 always.
        """
        f = self.f_vector()
        chi = -sum(_parity_sign(i) * f[i] for i in range(len(f)))
        chi_top = sum(_parity_sign(i) * f[i + 1] for i in range(len(f) - 1))
        return chi, chi_top

    # -- constructions ----------------------------------------------------------

    def link(self, face: Iterable = ()) -> "SimplicialComplex":
        """Link of a face: faces disjoint from it whose union with it is a face.

        Returned as a canonical complex over the surviving vertex labels. The
        link of the empty face is the complex itself.
        """
        self._require_faces()
        mask = self._mask_of_labels(face)
        if mask not in self.face_mask_set:
            raise FaceNotInComplex(
                "{" + " ".join(self._labels_of_mask(mask)) + "} is not a face")
        residues = [fm & ~mask for fm in self.facet_masks if fm & mask == mask]
        return from_facets([self._labels_of_mask(m) for m in residues])

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """Join: faces are unions of one face from each side.

        Labels get 'L.'/'R.' prefixes to keep the vertex sets disjoint; the
        facets of the join are the pairwise unions of facets.
        """
        self._require_faces()
        other._require_faces()
        combined = []
        for a in self.facet_masks:
            left = tuple("L." + lab for lab in self._labels_of_mask(a))
            for b in other.facet_masks:
                combined.append(left + tuple("R." + lab for lab in other._labels_of_mask(b)))
        return from_facets(combined)

    def suspension(self) -> "SimplicialComplex":
        """Join with two isolated points."""
        self._require_faces()
        return from_facets([["1"], ["2"]]).join(self)

    # -- serialization -------------------------------------------------------------

    def to_facet_text(self) -> str:
        """Facet-list format: one 'facet <label> ...' line per facet."""
        if self.is_void:
            return "# void complex (no faces)\n"
        lines = []
        for face in self.facets():
            lines.append(("facet " + " ".join(face)) if face else "facet")
        return "\n".join(lines) + "\n"


def from_facets(facets: Iterable[Iterable]) -> SimplicialComplex:
    """Build the canonical complex with the given facets.

    Duplicate facets merge, dominated facets drop, and labels sort into a
    deterministic index order (lexicographic). ``[[]]`` yields the complex
    whose only face is the empty face; an empty outer list yields the void
    complex. Integer labels are accepted and stored as their decimal strings.
    """
    normalized: list[list[str]] = []
    for facet in facets:
        seen: list[str] = []
        for raw in facet:
            label = _check_label(raw)
            if label in seen:
                raise DuplicateVertexInFacet(f"vertex {label!r} repeats within a facet")
            seen.append(label)
        normalized.append(seen)
    if not normalized:
        return SimplicialComplex((), (), void=True)
    labels = tuple(sorted({lab for f in normalized for lab in f}))
    index = {lab: i for i, lab in enumerate(labels)}
    masks = set()
    for f in normalized:
        m = 0
        for lab in f:
            m |= 1 << index[lab]
        masks.add(m)
    maximal = tuple(sorted(
        m for m in masks if not any(m != o and m & o == m for o in masks)))
    return SimplicialComplex(labels, maximal)


def parse_facet_text(text: str) -> SimplicialComplex:
    """Parse the facet-list format.

    Lines are '#' comments or 'facet <label> <label> ...'; blank lines are
    skipped. A lone 'facet' line denotes the empty face, so a file containing
    only that line is the complex {}; a file with no facet lines at all is
    the void complex.
    """
    facet_lists: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "facet":
            raise FacetFormatError(f"line {lineno}: expected a 'facet' line, got {line!r}")
        facet_lists.append(parts[1:])
    return from_facets(facet_lists)


# -- generators ----------------------------------------------------------------


def boundary_simplex(d: int) -> SimplicialComplex:
    """Boundary of the d-simplex: all proper subsets of a (d+1)-point set."""
    if d < 1:
        raise InvalidParameter("boundary_simplex needs d >= 1")
    verts = [str(i) for i in range(1, d + 2)]
    return from_facets(combinations(verts, d))


def full_simplex(d: int) -> SimplicialComplex:
    """The full d-simplex: one facet on d+1 vertices."""
    if d < 1:
        raise InvalidParameter("full_simplex needs d >= 1")
    return from_facets([[str(i) for i in range(1, d + 2)]])


def cycle(n: int) -> SimplicialComplex:
    """The n-gon graph: vertices 1..n, edges between cyclic neighbors."""
    if n < 3:
        raise InvalidParameter("cycle needs n >= 3")
    return from_facets([[str(i), str(i % n + 1)] for i in range(1, n + 1)])


def cross_polytope(d: int) -> SimplicialComplex:
    """Boundary of the d-dimensional cross-polytope.

    d antipodal vertex pairs ('i+', 'i-'); the facets pick one vertex from
    each pair. Equivalent to the d-fold join of two-point complexes, without
    the nested label prefixes that iterated joins would produce.
    """
    if d < 1:
        raise InvalidParameter("cross_polytope needs d >= 1")
    pairs = [(f"{i}+", f"{i}-") for i in range(1, d + 1)]
    return from_facets(product(*pairs))


def whiskered_cycle(n: int, k: int) -> SimplicialComplex:
    """An n-cycle with k pendant edges attached to vertex 1.

    Where the whiskers attach does not matter for any property this library
    decides, so one canonical representative suffices.
    """
    if n < 3:
        raise InvalidParameter("whiskered_cycle needs n >= 3")
    if k < 0:
        raise InvalidParameter("whiskered_cycle needs k >= 0")
    edges = [[str(i), str(i % n + 1)] for i in range(1, n + 1)]
    edges.extend(["1", str(n + j)] for j in range(1, k + 1))
    return from_facets(edges)


GENERATORS = {
    "boundary_simplex": (boundary_simplex, 1),
    "full_simplex": (full_simplex, 1),
    "cycle": (cycle, 1),
    "cross_polytope": (cross_polytope, 1),
    "whiskered_cycle": (whiskered_cycle, 2),
}


def make(kind: str, *params: int) -> SimplicialComplex:
    """Dispatch to a named generator; '-' and '_' both accepted in the name."""
    key = kind.replace("-", "_")
    entry = GENERATORS.get(key)
    if entry is None:
        known = ", ".join(sorted(GENERATORS))
        raise InvalidParameter(f"unknown kind {kind!r} (known: {known})")
    fn, arity = entry
    if len(params) != arity:
        raise InvalidParameter(f"{kind} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*params)


def enumerate_all_complexes(n: int) -> Iterator[SimplicialComplex]:
    """Every non-void complex whose vertices come from {1, ..., n}, exactly once.

    The empty-face complex comes first; after that, one complex per antichain
    of nonempty subsets of {1..n} (the possible facet sets), produced in
    lexicographic order of the sorted facet masks. Complexes on different
    vertex subsets are distinct even when isomorphic. n > 5 is refused since
    the count grows like the Dedekind numbers.
    """
    if n < 1:
        raise InvalidParameter("enumeration needs n >= 1")
    if n > 5:
        raise TooLarge("refusing to enumerate beyond 5 vertices")
    yield from_facets([[]])
    top = 1 << n
    labels = [str(i + 1) for i in range(n)]

    def to_facet(mask: int) -> list[str]:
        return [labels[i] for i in bit_indices(mask)]

    def grow(start: int, chosen: tuple[int, ...]) -> Iterator[SimplicialComplex]:
        for m in range(start, top):
            # m > c for every chosen c, so only containment c within m can occur
            if any(c & m == c for c in chosen):
                continue
            picked = chosen + (m,)
            yield from_facets([to_facet(x) for x in picked])
            yield from grow(m + 1, picked)

    yield from grow(1, ())


def random_complex(seed: int, n: int, facet_count: int, max_facet_size: int) -> SimplicialComplex:
    """Seed-deterministic complex: draw facets uniformly, then canonicalize.

    Facet sizes are uniform on 1..min(max_facet_size, n) and the vertices of
    each facet are sampled without replacement from 1..n; vertices that end up
    in no facet simply do not occur in the complex.
    """
    if n < 1 or facet_count < 1 or max_facet_size < 1:
        raise InvalidParameter("n, facet_count and max_facet_size must all be >= 1")
    rng = _random.Random(seed)
    cap = min(max_facet_size, n)
    facets = []
    for _ in range(facet_count):
        size = rng.randint(1, cap)
        facets.append([str(v) for v in rng.sample(range(1, n + 1), size)])
    return from_facets(facets)
