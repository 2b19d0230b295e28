"""Finite simplicial complexes with rational vertex values and their homology.

A complex carries one exact rational value per vertex (the function being
studied).  Sublevel subcomplexes keep the simplices whose maximum vertex value
clears a threshold; superlevel subcomplexes use the minimum.  Homology is
unreduced simplicial homology over the complex's prime field, with cycle
representatives retained so that inclusion-induced maps can be expressed in
coordinates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .gfp import FieldSpec, Mat, Subspace, complement_in, kernel_basis, mat_rank, solve

Simplex = tuple[int, ...]

DEFAULT_DIMENSION_CAP = 16


class ParseError(ValueError):
    """Invalid complex document: schema, number, or face-closure violation."""


class Level:
    """An exact rational threshold, or one of the symbols -inf / +inf.

    Total order and equality are exact; construction from strings accepts
    "3/2", "2", "-0.25" and the infinity spellings below.
    """

    __slots__ = ("_kind", "_value")

    def __init__(self, value):
        if isinstance(value, Level):
            object.__setattr__(self, "_kind", value._kind)
            object.__setattr__(self, "_value", value._value)
            return
        if isinstance(value, bool) or isinstance(value, float):
            raise ValueError(f"level values must be exact (int, Fraction or string), got {value!r}")
        object.__setattr__(self, "_kind", 0)
        object.__setattr__(self, "_value", Fraction(value))

    def __setattr__(self, name, value):
        raise AttributeError("Level is immutable")

    @classmethod
    def _symbol(cls, kind: int) -> "Level":
        lvl = object.__new__(cls)
        object.__setattr__(lvl, "_kind", kind)
        object.__setattr__(lvl, "_value", None)
        return lvl

    @classmethod
    def parse(cls, text) -> "Level":
        if isinstance(text, str):
            stripped = text.strip()
            if stripped in ("inf", "+inf", "oo", "+oo"):
                return POS_INF
            if stripped in ("-inf", "-oo"):
                return NEG_INF
            try:
                return cls(Fraction(stripped))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"malformed number {text!r}") from exc
        if isinstance(text, int) and not isinstance(text, bool):
            return cls(text)
        raise ParseError(f"level must be an integer or a string, got {text!r}")

    @property
    def is_finite(self) -> bool:
        return self._kind == 0

    @property
    def finite_value(self) -> Fraction:
        if self._kind != 0:
            raise ValueError("infinite level has no rational value")
        return self._value

    def _key(self):
        return (self._kind, self._value if self._kind == 0 else 0)

    def __eq__(self, other):
        if not isinstance(other, Level):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        if not isinstance(other, Level):
            return NotImplemented
        return self._key() < other._key()

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        return isinstance(other, Level) and other < self

    def __ge__(self, other):
        return self == other or self > other

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        if self._kind < 0:
            return "-inf"
        if self._kind > 0:
            return "inf"
        return str(self._value)

    def __repr__(self):
        return f"Level({str(self)!r})"


NEG_INF = Level._symbol(-1)
POS_INF = Level._symbol(1)


@dataclass(frozen=True)
class FilteredComplex:
    """A finite simplicial complex together with a rational value per vertex.

    ``by_dim[d]`` lists the d-simplices as sorted vertex tuples, in a fixed
    canonical order; that order indexes every chain space built from the
    complex.
    """

    vertex_values: tuple[tuple[int, Level], ...]
    by_dim: tuple[tuple[Simplex, ...], ...]
    field: FieldSpec

    @classmethod
    def from_simplices(cls, values, simplices, field: FieldSpec, dimension_cap: int = DEFAULT_DIMENSION_CAP):
        """Validated construction from a vertex-value mapping and a simplex list.

        The simplex list must be explicitly face-closed (faces are checked,
        never inferred).
        """
        vals: dict[int, Level] = {}
        for vid, lvl in dict(values).items():
            if not isinstance(vid, int) or isinstance(vid, bool):
                raise ParseError(f"vertex id must be an integer, got {vid!r}")
            lvl = lvl if isinstance(lvl, Level) else Level.parse(lvl)
            if not lvl.is_finite:
                raise ParseError(f"vertex {vid} has a non-finite value")
            vals[vid] = lvl

        seen: set[Simplex] = set()
        listed: list[Simplex] = []
        for raw in simplices:
            verts = tuple(raw)
            if len(verts) == 0:
                raise ParseError("empty simplex")
            if len(set(verts)) != len(verts):
                raise ParseError(f"repeated vertex in simplex {list(verts)}")
            simplex = tuple(sorted(verts))
            if simplex in seen:
                raise ParseError(f"duplicate simplex {list(simplex)}")
            if len(simplex) - 1 > dimension_cap:
                raise ParseError(
                    f"simplex {list(simplex)} exceeds the dimension cap {dimension_cap}"
                )
            seen.add(simplex)
            listed.append(simplex)

        for simplex in listed:
            if len(simplex) > 1:
                for i in range(len(simplex)):
                    face = simplex[:i] + simplex[i + 1 :]
                    if face not in seen:
                        raise ParseError(
                            f"face missing: {list(face)} (required by {list(simplex)})"
                        )
            for v in simplex:
                if v not in vals:
                    raise ParseError(f"simplex {list(simplex)} uses unknown vertex {v}")

        max_dim = max((len(s) - 1 for s in listed), default=-1)
        by_dim = tuple(
            tuple(sorted(s for s in listed if len(s) - 1 == d)) for d in range(max_dim + 1)
        )
        return cls(
            vertex_values=tuple(sorted(vals.items())),
            by_dim=by_dim,
            field=field,
        )

    @property
    def dim(self) -> int:
        return len(self.by_dim) - 1

    @property
    def values(self) -> dict[int, Level]:
        d = self.__dict__.get("_values")
        if d is None:
            d = dict(self.vertex_values)
            self.__dict__["_values"] = d
        return d

    @property
    def levels(self) -> tuple[Level, ...]:
        """Distinct vertex values in increasing order."""
        t = self.__dict__.get("_levels")
        if t is None:
            t = tuple(sorted({lvl for _, lvl in self.vertex_values}))
            self.__dict__["_levels"] = t
        return t

    def simplex_count(self) -> int:
        return sum(len(group) for group in self.by_dim)

    @property
    def full(self) -> "Subcomplex":
        sub = self.__dict__.get("_full")
        if sub is None:
            sub = Subcomplex(self, self.by_dim)
            self.__dict__["_full"] = sub
        return sub

    def simplex_min(self, simplex: Simplex) -> Level:
        return min(self.values[v] for v in simplex)

    def simplex_max(self, simplex: Simplex) -> Level:
        return max(self.values[v] for v in simplex)


@dataclass(frozen=True)
class Subcomplex:
    """A face-closed selection of a parent complex's simplices (parent order kept)."""

    parent: FilteredComplex
    by_dim: tuple[tuple[Simplex, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.by_dim) - 1

    def simplices(self, r: int) -> tuple[Simplex, ...]:
        if 0 <= r < len(self.by_dim):
            return self.by_dim[r]
        return ()

    def simplex_count(self) -> int:
        return sum(len(group) for group in self.by_dim)

    def contains(self, other: "Subcomplex") -> bool:
        if other.parent != self.parent:
            return False
        mine = {s for group in self.by_dim for s in group}
        return all(s in mine for group in other.by_dim for s in group)


def parse_filtered_complex(document, field_char: int | None = None,
                           dimension_cap: int = DEFAULT_DIMENSION_CAP) -> FilteredComplex:
    """Decode and validate the JSON complex document.

    Schema: {"field_char": p, "vertices": [{"id": n, "value": "r"}],
    "simplices": [[ids...]]}.  Vertex values must be exact: integers or
    rational/decimal strings; JSON floats are rejected.  ``field_char``
    overrides the document's field when given.
    """
    if isinstance(document, (str, bytes)):
        try:
            doc = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    else:
        doc = document
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")

    char = field_char if field_char is not None else doc.get("field_char")
    if char is None:
        raise ParseError("missing field_char")
    try:
        field = FieldSpec(char)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc

    vertices = doc.get("vertices")
    simplices = doc.get("simplices")
    if not isinstance(vertices, list) or not isinstance(simplices, list):
        raise ParseError("document must contain 'vertices' and 'simplices' lists")

    values: dict[int, Level] = {}
    for entry in vertices:
        if not isinstance(entry, dict) or "id" not in entry or "value" not in entry:
            raise ParseError(f"vertex entry must have 'id' and 'value': {entry!r}")
        vid = entry["id"]
        if not isinstance(vid, int) or isinstance(vid, bool):
            raise ParseError(f"vertex id must be an integer, got {vid!r}")
        if vid in values:
            raise ParseError(f"duplicate vertex id {vid}")
        raw = entry["value"]
        if isinstance(raw, float):
            raise ParseError(
                f"vertex {vid}: floating-point values are not exact; quote it as a string"
            )
        lvl = Level.parse(raw)
        if not lvl.is_finite:
            raise ParseError(f"vertex {vid}: value must be finite")
        values[vid] = lvl

    for s in simplices:
        if not isinstance(s, list):
            raise ParseError(f"simplex must be a list of vertex ids: {s!r}")

    return FilteredComplex.from_simplices(values, simplices, field, dimension_cap=dimension_cap)


def level_subcomplex(k: FilteredComplex, a: Level, side: str, strict: bool = False) -> Subcomplex:
    """Sub/superlevel subcomplex at threshold ``a``.

    side="below": keep simplices with max vertex value <= a (< a if strict);
    side="above": keep simplices with min vertex value >= a (> a if strict).
    Both rules are face-closed by construction.
    """
    if side == "below":
        if strict:
            keep = lambda s: k.simplex_max(s) < a
        else:
            keep = lambda s: k.simplex_max(s) <= a
    elif side == "above":
        if strict:
            keep = lambda s: k.simplex_min(s) > a
        else:
            keep = lambda s: k.simplex_min(s) >= a
    else:
        raise ValueError(f"side must be 'below' or 'above', got {side!r}")
    by_dim = [tuple(s for s in group if keep(s)) for group in k.by_dim]
    while by_dim and not by_dim[-1]:
        by_dim.pop()
    return Subcomplex(k, tuple(by_dim))


def _face_sign_pairs(simplex: Simplex):
    for i in range(len(simplex)):
        yield simplex[:i] + simplex[i + 1 :], (-1) ** i


def boundary_matrix(s: Subcomplex, r: int) -> Mat:
    """Matrix of the degree-r boundary map of ``s`` over the parent's field.

    Rows are indexed by the (r-1)-simplices, columns by the r-simplices, both
    in the subcomplex's canonical order.  Degree 0 maps to the zero chain
    space (no augmentation).
    """
    if r < 0:
        raise ValueError("degree must be nonnegative")
    field = s.parent.field
    cols = s.simplices(r)
    rows = s.simplices(r - 1) if r >= 1 else ()
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    if rows and cols:
        row_index = {simplex: i for i, simplex in enumerate(rows)}
        for j, simplex in enumerate(cols):
            for face, sign in _face_sign_pairs(simplex):
                mat[row_index[face], j] = sign % field.char
    return Mat(mat, field)


@dataclass(frozen=True)
class HomologyBasis:
    """Basis data for H_r of a subcomplex.

    ``cycle_reps`` columns are chains (in the subcomplex's degree-r simplex
    order) whose classes form a basis; ``boundary_space`` is the image of the
    degree r+1 boundary map.
    """

    degree: int
    simplices: tuple[Simplex, ...]
    cycle_reps: Mat
    boundary_space: Subspace
    dim: int

    def class_coords(self, chains: Mat) -> Mat:
        """Coordinates of cycle columns in this basis, modulo boundaries.

        Raises ValueError when a column is not a cycle-plus-boundary
        combination, which signals an internal inconsistency.
        """
        stacked = self.cycle_reps.hstack(self.boundary_space.basis)
        sol = solve(stacked, chains)
        return Mat(sol.entries[: self.dim, :], sol.field)


@lru_cache(maxsize=None)
def homology_basis(s: Subcomplex, r: int) -> HomologyBasis:
    """Unreduced simplicial homology of ``s`` in degree ``r`` with representatives."""
    d_r = boundary_matrix(s, r)
    d_next = boundary_matrix(s, r + 1)
    cycles = kernel_basis(d_r)
    boundaries = Subspace.spanned_by(d_next)
    reps = complement_in(cycles, boundaries)
    return HomologyBasis(
        degree=r,
        simplices=s.simplices(r),
        cycle_reps=reps,
        boundary_space=boundaries,
        dim=cycles.dim - boundaries.dim,
    )


def _require_contained(l: Subcomplex, k: Subcomplex):
    if not k.contains(l):
        raise ValueError("subcomplex containment violation")


@lru_cache(maxsize=None)
def induced_map(l: Subcomplex, k: Subcomplex, r: int) -> Mat:
    """Matrix of the inclusion-induced map H_r(L) -> H_r(K) in the chosen bases."""
    _require_contained(l, k)
    hl = homology_basis(l, r)
    hk = homology_basis(k, r)
    field = k.parent.field
    lifted = np.zeros((len(hk.simplices), hl.dim), dtype=np.int64)
    if hl.dim:
        index_k = {simplex: i for i, simplex in enumerate(hk.simplices)}
        rows = [index_k[simplex] for simplex in hl.simplices]
        lifted[rows, :] = hl.cycle_reps.entries
    return hk.class_coords(Mat(lifted, field))


@lru_cache(maxsize=None)
def relative_homology_dim(k: Subcomplex, l: Subcomplex, r: int) -> int:
    """dim H_r(K, L): homology of K's chains with L's chains collapsed."""
    _require_contained(l, k)
    if r < 0:
        return 0

    in_l = {s for group in l.by_dim for s in group}

    def rel_boundary(q: int) -> Mat:
        cols = [s for s in k.simplices(q) if s not in in_l]
        rows = [s for s in k.simplices(q - 1) if s not in in_l] if q >= 1 else []
        mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
        if rows and cols:
            row_index = {simplex: i for i, simplex in enumerate(rows)}
            for j, simplex in enumerate(cols):
                for face, sign in _face_sign_pairs(simplex):
                    if face in row_index:
                        mat[row_index[face], j] = sign % k.parent.field.char
        return Mat(mat, k.parent.field)

    d_r = rel_boundary(r)
    d_next = rel_boundary(r + 1)
    return d_r.cols - mat_rank(d_r) - mat_rank(d_next)
