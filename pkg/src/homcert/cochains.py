"""Mod-2 cochains on Hom complexes and their quotients by a free involution.

A cochain is identified with its support; addition is symmetric difference.
Orbit cochains live on the quotient and are stored by canonical
representatives (the smaller member of each orbit in the canonical order).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import FreeActionError, InvalidArgumentError
from .graphs import Involution
from .hom import Cell, ComplexSlice, HomComplex, _parse_header, cell_dim, cell_key, format_cell, parse_cell


def involution_image(c: Cell, psi: Involution) -> Cell:
    """The cell whose entry at v is the entry of ``c`` at ``psi(v)``."""
    p = psi.permutation
    return tuple(c[p[v]] for v in range(len(c)))


def _toggle(acc: set, item) -> None:
    if item in acc:
        acc.remove(item)
    else:
        acc.add(item)


@dataclass(frozen=True)
class Cochain:
    space: HomComplex
    dimension: int
    support: frozenset[Cell]

    @classmethod
    def of(cls, space: HomComplex, dimension: int, cells: Iterable[Cell]) -> Cochain:
        """Build a cochain from cells, with mod-2 cancellation of repeats."""
        acc: set[Cell] = set()
        for c in cells:
            _toggle(acc, c)
        return cls(space, dimension, frozenset(acc))

    def __len__(self) -> int:
        return len(self.support)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.support)

    def __contains__(self, c: object) -> bool:
        return c in self.support

    def __xor__(self, other: Cochain) -> Cochain:
        return cochain_add(self, other)

    def __bool__(self) -> bool:
        return bool(self.support)

    def sorted_cells(self) -> list[Cell]:
        return self.space.sort_cells(self.support)

    def check(self) -> None:
        for c in self.support:
            if not self.space.is_valid(c) or cell_dim(c) != self.dimension:
                raise InvalidArgumentError(f"cell {format_cell(c)} is not a valid {self.dimension}-cell")

    def to_text(self) -> str:
        cells = self.sorted_cells()
        header = f"cochain dim={self.dimension} count={len(cells)}"
        return "\n".join([header, *map(format_cell, cells)]) + "\n"

    @classmethod
    def from_text(cls, space: HomComplex, text: str) -> Cochain:
        dim, cells = _read_body(text, "cochain")
        out = cls(space, dim, frozenset(cells))
        out.check()
        return out


@dataclass(frozen=True)
class Orbit:
    representative: Cell

    def members(self, psi: Involution) -> tuple[Cell, Cell]:
        return self.representative, involution_image(self.representative, psi)


def orbit_rep(space: HomComplex, c: Cell, psi: Involution) -> Cell:
    img = involution_image(c, psi)
    if img == c:
        raise FreeActionError(f"involution fixes the cell {format_cell(c)}")
    return c if space.key(c) < space.key(img) else img


def orbit_of(c: Cell, psi: Involution, space: HomComplex | None = None) -> Orbit:
    if space is None:
        img = involution_image(c, psi)
        if img == c:
            raise FreeActionError(f"involution fixes the cell {format_cell(c)}")
        return Orbit(min(c, img, key=cell_key))
    return Orbit(orbit_rep(space, c, psi))


@dataclass(frozen=True)
class OrbitCochain:
    space: HomComplex
    involution: Involution
    dimension: int
    support: frozenset[Cell]

    def __len__(self) -> int:
        return len(self.support)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.support)

    def __contains__(self, c: object) -> bool:
        return c in self.support

    def __bool__(self) -> bool:
        return bool(self.support)

    def __xor__(self, other: OrbitCochain) -> OrbitCochain:
        if (self.space, self.involution, self.dimension) != (other.space, other.involution, other.dimension):
            raise InvalidArgumentError("orbit cochains live on different complexes or dimensions")
        return OrbitCochain(self.space, self.involution, self.dimension, self.support ^ other.support)

    @property
    def orbits(self) -> list[Orbit]:
        return [Orbit(c) for c in self.sorted_cells()]

    def sorted_cells(self) -> list[Cell]:
        return self.space.sort_cells(self.support)

    def lift(self) -> Cochain:
        """Both members of every orbit, as an upstairs cochain."""
        cells = set(self.support)
        cells.update(involution_image(c, self.involution) for c in self.support)
        return Cochain(self.space, self.dimension, frozenset(cells))

    def check(self) -> None:
        for c in self.support:
            if not self.space.is_valid(c) or cell_dim(c) != self.dimension:
                raise InvalidArgumentError(f"cell {format_cell(c)} is not a valid {self.dimension}-cell")
            if orbit_rep(self.space, c, self.involution) != c:
                raise InvalidArgumentError(f"{format_cell(c)} is not a canonical orbit representative")

    def to_text(self) -> str:
        cells = self.sorted_cells()
        header = f"orbit-cochain dim={self.dimension} count={len(cells)}"
        return "\n".join([header, *map(format_cell, cells)]) + "\n"

    @classmethod
    def from_text(cls, space: HomComplex, involution: Involution, text: str) -> OrbitCochain:
        dim, cells = _read_body(text, "orbit-cochain")
        out = cls(space, involution, dim, frozenset(cells))
        out.check()
        return out


def _read_body(text: str, tag: str) -> tuple[int, list[Cell]]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InvalidArgumentError(f"empty {tag} text")
    fields = _parse_header(lines[0], tag)
    cells = [parse_cell(ln) for ln in lines[1:]]
    if len(cells) != int(fields["count"]) or len(set(cells)) != len(cells):
        raise InvalidArgumentError("count in header does not match body")
    return int(fields["dim"]), cells


def cochain_add(a: Cochain, b: Cochain) -> Cochain:
    if a.dimension != b.dimension:
        raise InvalidArgumentError(f"cannot add a {a.dimension}-cochain and a {b.dimension}-cochain")
    if a.space != b.space:
        raise InvalidArgumentError("cochains live on different complexes")
    return Cochain(a.space, a.dimension, a.support ^ b.support)


def coboundary(S: Cochain) -> Cochain:
    acc: set[Cell] = set()
    cof = S.space.cofacets
    for sigma in S.support:
        for tau in cof(sigma):
            _toggle(acc, tau)
    return Cochain(S.space, S.dimension + 1, frozenset(acc))


def quotient_map_q(S: Cochain, psi: Involution) -> OrbitCochain:
    """An orbit survives iff an odd number of its members lie in S."""
    acc: set[Cell] = set()
    for sigma in S.support:
        _toggle(acc, orbit_rep(S.space, sigma, psi))
    return OrbitCochain(S.space, psi, S.dimension, frozenset(acc))


def orbit_coboundary(Q: OrbitCochain) -> OrbitCochain:
    """Coboundary on the quotient, computed from representatives only."""
    space, psi = Q.space, Q.involution
    acc: set[Cell] = set()
    for sigma in Q.support:
        for tau in space.cofacets(sigma):
            _toggle(acc, orbit_rep(space, tau, psi))
    return OrbitCochain(space, psi, Q.dimension + 1, frozenset(acc))


@dataclass(frozen=True)
class OrbitSlice:
    """Sorted canonical representatives of all d-orbits; the basis of quotient matrices."""

    space: HomComplex
    involution: Involution
    dimension: int
    cells: tuple[Cell, ...]

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    @property
    def index(self) -> dict[Cell, int]:
        idx = self.__dict__.get("_index")
        if idx is None:
            idx = {c: i for i, c in enumerate(self.cells)}
            object.__setattr__(self, "_index", idx)
        return idx


def orbit_slice(cells: ComplexSlice, psi: Involution) -> OrbitSlice:
    """Representatives of the orbits of a slice; raises on a fixed cell."""
    space = cells.space
    if len(psi) != space.n_vertices or not psi.is_automorphism_of(space.T):
        raise InvalidArgumentError("involution is not an automorphism of T")
    reps = [c for c in cells if orbit_rep(space, c, psi) == c]
    return OrbitSlice(space, psi, cells.dimension, tuple(reps))
