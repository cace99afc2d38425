"""Finitely generated abelian groups: canonical forms, colimits, coinvariants.

A group is presented as Z^rank modulo the row span of a relation matrix and
canonicalized to (free_rank, invariant factors) via Smith normal form.  The
colimit operation realizes a finite diagram's coequalizer presentation; the
coinvariants operation is the special case of quotienting by x - g.x.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .snf import (
    SNFSolver,
    diagonal_of,
    hermite_row_basis,
    identity_matrix,
    lattice_contains,
    mat_mul,
    mat_shape,
    mat_vec,
    smith_normal_form,
)


class ActionNotAutomorphism(ValueError):
    """An action matrix fails to define an automorphism of the group."""


@dataclass(frozen=True)
class FgAbelianGroup:
    """Canonical form: free rank plus invariant factor chain d1 | d2 | ..."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"invariant factors must form a chain: {self.torsion}")
        if any(d < 2 for d in self.torsion):
            raise ValueError("invariant factors must be >= 2")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def is_elementary_2(self) -> bool:
        return self.free_rank == 0 and all(d == 2 for d in self.torsion)

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @staticmethod
    def from_json(data) -> "FgAbelianGroup":
        return FgAbelianGroup(data["free_rank"], tuple(data["torsion"]))

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def quotient_group(generators_rank: int, relations: list) -> FgAbelianGroup:
    """Canonical form of Z^rank modulo the row span of ``relations``."""
    for row in relations:
        if len(row) != generators_rank:
            raise ValueError("relation width does not match generator count")
    _, D, _ = smith_normal_form(relations, ncols=generators_rank)
    diag = diagonal_of(D, generators_rank)
    torsion = tuple(d for d in diag if d > 1)
    nonzero = sum(1 for d in diag if d)
    return FgAbelianGroup(generators_rank - nonzero, torsion)


@dataclass
class Presentation:
    """A presented abelian group: Z^gens modulo the row span of relations."""

    gens: int
    relations: list = field(default_factory=list)

    def canonical(self) -> FgAbelianGroup:
        return quotient_group(self.gens, self.relations)

    def relation_lattice(self) -> list:
        return hermite_row_basis(self.relations, self.gens)

    @staticmethod
    def of(group: FgAbelianGroup) -> "Presentation":
        gens = group.free_rank + len(group.torsion)
        rels = []
        for i, d in enumerate(group.torsion):
            row = [0] * gens
            row[group.free_rank + i] = d
            rels.append(row)
        return Presentation(gens, rels)


def map_is_well_defined(f: list, source: Presentation, target: Presentation) -> bool:
    """Does the gens(target) x gens(source) matrix f send relations to relations?"""
    basis = target.relation_lattice()
    for rel in source.relations:
        image = mat_vec(f, rel) if f else [0] * target.gens
        if not lattice_contains(basis, image, target.gens):
            return False
    return True


def _is_automorphism(f: list, pres: Presentation) -> bool:
    """f induces an automorphism of the presented group.

    Well-definedness plus surjectivity; surjectivity suffices because
    finitely generated abelian groups are Hopfian.
    """
    if not map_is_well_defined(f, pres, pres):
        return False
    rows = [list(col) for col in zip(*f)] if f else []
    combined = rows + [r[:] for r in pres.relations]
    return quotient_group(pres.gens, combined).is_trivial


@dataclass
class AbelianDiagram:
    """Finite diagram of presented abelian groups and integer-matrix arrows."""

    objects: list  # list[Presentation]
    arrows: list = field(default_factory=list)  # (src_index, tgt_index, matrix)

    def validate(self):
        for src, tgt, f in self.arrows:
            source, target = self.objects[src], self.objects[tgt]
            m, n = mat_shape(f, source.gens)
            if (m, n) != (target.gens, source.gens):
                raise ValueError(
                    f"arrow {src}->{tgt} has shape {m}x{n}, "
                    f"expected {target.gens}x{source.gens}"
                )
            if not map_is_well_defined(f, source, target):
                raise ValueError(f"arrow {src}->{tgt} does not preserve relations")


def colimit(diagram: AbelianDiagram) -> FgAbelianGroup:
    """Coequalizer of the diagram: (+) objects / <x - arrow(x)>, canonicalized."""
    diagram.validate()
    offsets = []
    total = 0
    for obj in diagram.objects:
        offsets.append(total)
        total += obj.gens
    relations = []
    for idx, obj in enumerate(diagram.objects):
        base = offsets[idx]
        for rel in obj.relations:
            row = [0] * total
            row[base:base + obj.gens] = rel
            relations.append(row)
    for src, tgt, f in diagram.arrows:
        sbase, tbase = offsets[src], offsets[tgt]
        sgens = diagram.objects[src].gens
        for i in range(sgens):
            row = [0] * total
            row[sbase + i] += 1
            for j in range(diagram.objects[tgt].gens):
                row[tbase + j] -= f[j][i]
            relations.append(row)
    return quotient_group(total, relations)


def coinvariants(module: Presentation, action: list) -> FgAbelianGroup:
    """Quotient of the presented group by all x - g.x for the given generators.

    ``action`` is a list of gens x gens integer matrices, one per acting
    group generator; each must induce an automorphism of the group.
    """
    for g in action:
        m, n = mat_shape(g, module.gens)
        if (m, n) != (module.gens, module.gens):
            raise ActionNotAutomorphism(f"action matrix has shape {m}x{n}")
        if not _is_automorphism(g, module):
            raise ActionNotAutomorphism("matrix does not act as an automorphism")
    relations = [r[:] for r in module.relations]
    for g in action:
        for i in range(module.gens):
            row = [(1 if i == j else 0) - g[j][i] for j in range(module.gens)]
            relations.append(row)
    return quotient_group(module.gens, relations)
