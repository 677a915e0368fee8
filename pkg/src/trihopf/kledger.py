"""Grothendieck-group bookkeeping for distinguished triangles.

A triangle ``S -> Y -> F`` over an open/closed pair becomes the additive
relation ``[Y] = [S] + [F]``. Strata are opaque string labels; no splittings
are ever recorded, only sums.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import DomainError
from .hopf import orbit_coefficient
from .laurent import ONE, ZERO, LaurentPoly, lp_add, lp_mul
from .parabolic import quadruples
from .qcomb import q_binomial

__all__ = [
    "KClass",
    "KRelation",
    "OctahedronReport",
    "triangle_relation",
    "octahedron_relations",
    "solve_octahedron",
    "orbit_label",
    "total_label",
    "orbit_decomposition",
    "filtration_chain",
    "telescope",
]

ORIGINS = ("triangle", "octahedron-face", "decomposition")


@dataclass(frozen=True)
class KClass:
    """Formal ``Z[q, q^-1]``-combination of stratum labels."""

    combo: tuple[tuple[str, LaurentPoly], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[str, LaurentPoly]) -> "KClass":
        return cls(tuple(sorted((k, v) for k, v in d.items() if not v.is_zero())))

    @classmethod
    def of(cls, *labels: str) -> "KClass":
        acc: dict[str, LaurentPoly] = {}
        for lab in labels:
            acc[lab] = lp_add(acc.get(lab, ZERO), ONE)
        return cls.from_dict(acc)

    def as_dict(self) -> dict[str, LaurentPoly]:
        return dict(self.combo)

    def labels(self) -> set[str]:
        return {k for k, _ in self.combo}

    def __add__(self, other: "KClass") -> "KClass":
        acc = self.as_dict()
        for k, v in other.combo:
            acc[k] = lp_add(acc.get(k, ZERO), v)
        return KClass.from_dict(acc)

    def scale(self, c: LaurentPoly) -> "KClass":
        return KClass.from_dict({k: lp_mul(c, v) for k, v in self.combo})

    def substitute(self, label: str, value: "KClass") -> "KClass":
        d = self.as_dict()
        c = d.pop(label, None)
        if c is None:
            return self
        return KClass.from_dict(d) + value.scale(c)

    def evaluate(self, assignment: Mapping[str, LaurentPoly]) -> LaurentPoly:
        total = ZERO
        for k, v in self.combo:
            if k not in assignment:
                raise KeyError("no value assigned to %r" % k)
            total = lp_add(total, lp_mul(v, assignment[k]))
        return total

    def to_json(self) -> dict:
        return {k: v.to_json() for k, v in self.combo}

    @classmethod
    def from_json(cls, obj) -> "KClass":
        return cls.from_dict({k: LaurentPoly.from_json(v) for k, v in obj.items()})

    def __str__(self):
        if not self.combo:
            return "0"
        return " + ".join("[%s]" % k if v == ONE else "(%s)[%s]" % (v, k) for k, v in self.combo)


@dataclass(frozen=True)
class KRelation:
    lhs: KClass
    rhs: KClass
    origin: str

    def __post_init__(self):
        if self.origin not in ORIGINS:
            raise DomainError("unknown relation origin %r" % self.origin)

    def satisfied(self, assignment: Mapping[str, LaurentPoly]) -> bool:
        return self.lhs.evaluate(assignment) == self.rhs.evaluate(assignment)

    def to_json(self) -> dict:
        return {"lhs": self.lhs.to_json(), "rhs": self.rhs.to_json(), "origin": self.origin}

    @classmethod
    def from_json(cls, obj) -> "KRelation":
        return cls(KClass.from_json(obj["lhs"]), KClass.from_json(obj["rhs"]), obj["origin"])

    def __str__(self):
        return "%s = %s" % (self.lhs, self.rhs)


def _distinct(*labels: str):
    if len(set(labels)) != len(labels):
        raise DomainError("labels must be distinct: %r" % (labels,))


def triangle_relation(s_label: str, y_label: str, f_label: str, origin: str = "triangle") -> KRelation:
    """``[Y] = [S] + [F]`` for ``F`` closed in ``Y`` with open complement ``S``."""
    _distinct(s_label, y_label, f_label)
    return KRelation(KClass.of(y_label), KClass.of(s_label, f_label), origin)


@dataclass(frozen=True)
class OctahedronReport:
    relations: tuple[KRelation, ...]
    via_z: KClass
    via_s: KClass

    @property
    def consistent(self) -> bool:
        return self.via_z == self.via_s


def octahedron_relations(f: str = "F", z: str = "Z", y: str = "Y",
                         s: str = "S", q: str = "Q", r: str = "R") -> OctahedronReport:
    """The four faces for ``F ⊂ Z ⊂ Y`` with ``S = Y-F``, ``Q = Z-F``, ``R = Y-Z``.

    Also reduces ``[Y]`` to the pieces ``R, Q, F`` once through ``Z`` and once
    through ``S``; the report is consistent when both agree.
    """
    _distinct(f, z, y, s, q, r)
    face = "octahedron-face"
    rels = (
        triangle_relation(r, y, z, face),
        triangle_relation(q, z, f, face),
        triangle_relation(r, s, q, face),
        triangle_relation(s, y, f, face),
    )
    y_rz, z_qf, s_rq, y_sf = rels
    via_z = y_rz.rhs.substitute(z, z_qf.rhs)
    via_s = y_sf.rhs.substitute(s, s_rq.rhs)
    return OctahedronReport(rels, via_z, via_s)


def solve_octahedron(values: Mapping[str, LaurentPoly], f="F", z="Z", y="Y", s="S", q="Q", r="R") -> dict:
    """Extend values on the pieces ``R, Q, F`` to ``Z, S, Y``."""
    out = {r: values[r], q: values[q], f: values[f]}
    out[z] = lp_add(out[q], out[f])
    out[s] = lp_add(out[r], out[q])
    out[y] = lp_add(out[r], out[z])
    return out


def orbit_label(quad: Sequence[int]) -> str:
    return "O(%s)" % ",".join(str(x) for x in quad)


def total_label(n: int, m: int, p: int, q: int) -> str:
    return "GL%d-op(%d,%d;%d,%d)" % (n + m, n, m, p, q)


def orbit_decomposition(n: int, m: int, p: int, q: int) -> tuple[KRelation, bool]:
    """``[full operation] = sum over orbits`` with each label valued by its coefficient."""
    quads = quadruples(n, m, p, q)
    total = total_label(n, m, p, q)
    rel = KRelation(KClass.of(total), KClass.of(*(orbit_label(x) for x in quads)), "decomposition")
    assignment = {orbit_label(x): orbit_coefficient(*x) for x in quads}
    assignment[total] = q_binomial(n + m, n)
    return rel, rel.satisfied(assignment)


def filtration_chain(labels: Sequence[str], prefix: str = "Y") -> list[KRelation]:
    """Triangles ``[Y_t] = [Y_{t-1}] + [o_t]`` along a linear order; ``Y_0 = 0``."""
    labels = list(labels)
    if not labels:
        raise DomainError("filtration needs at least one label")
    steps = ["%s_%d" % (prefix, t) for t in range(1, len(labels) + 1)]
    _distinct(*labels, *steps)
    rels = [KRelation(KClass.of(steps[0]), KClass.of(labels[0]), "triangle")]
    for t in range(1, len(labels)):
        rels.append(triangle_relation(steps[t - 1], steps[t], labels[t]))
    return rels


def telescope(chain: Sequence[KRelation]) -> KRelation:
    """Eliminate the intermediate steps of a filtration chain."""
    rhs = chain[-1].rhs
    for rel in reversed(chain[:-1]):
        (step,) = rel.lhs.labels()
        rhs = rhs.substitute(step, rel.rhs)
    return KRelation(chain[-1].lhs, rhs, "decomposition")
