"""Decision procedure for Fourier-Mukai partnership of two fibers.

A derived equivalence forces the two curves to share every invariant in
the profile; any mismatch therefore certifies that the curves are not
partners, with the differing invariant as witness. When every computed
invariant agrees and both curves are reduced catalog members, the types
coincide and the curves are isomorphic (a reduced fiber has no partner
but itself). For non-reduced or multiple fibers no converse is known, so
agreement only yields "possibly equivalent".
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .catalog import KodairaType, Subclass, build, classify
from .curves import CurveConfiguration
from .invariants import InvariantProfile, invariant_profile


class VerdictKind(str, Enum):
    NOT_EQUIVALENT = "NotEquivalent"
    ISOMORPHIC = "Isomorphic"
    POSSIBLY_EQUIVALENT = "PossiblyEquivalent"


@dataclass(frozen=True)
class Witness:
    """One invariant whose two computed values differ."""

    invariant: str
    left: str
    right: str

    def __str__(self) -> str:
        return f"{self.invariant}: {self.left} vs {self.right}"


@dataclass(frozen=True)
class PartnerVerdict:
    kind: VerdictKind
    witnesses: tuple[Witness, ...] = ()
    note: str | None = None


_SMOOTH_ELLIPTIC_NOTE = (
    "isomorphism holds at the catalog level; smooth elliptic curves are "
    "identified through their Jacobians and no j-invariant is modelled"
)
_NO_CONVERSE_NOTE = "all computed necessary conditions agree; no converse is known"


def _check_order(
    left: InvariantProfile, right: InvariantProfile
) -> list[tuple[str, object, object]]:
    return [
        ("arithmetic genus", left.arithmetic_genus, right.arithmetic_genus),
        ("G0 rank", left.g0_rank, right.g0_rank),
        ("K^-1 rank", left.k_minus_one_rank, right.k_minus_one_rank),
        (
            "Picard identity component",
            left.picard.identity_component_label(),
            right.picard.identity_component_label(),
        ),
        ("Picard discrete rank", left.picard.discrete_rank, right.picard.discrete_rank),
        (
            "isolated singularities",
            "yes" if left.reduced else "no",
            "yes" if right.reduced else "no",
        ),
    ]


def compare(x: CurveConfiguration, y: CurveConfiguration) -> PartnerVerdict:
    """Compare every invariant, in a fixed order, and issue a verdict."""
    px = invariant_profile(x)
    py = invariant_profile(y)

    witnesses = [
        Witness(name, str(a), str(b))
        for name, a, b in _check_order(px, py)
        if a != b
    ]
    if px.reduced and py.reduced and px.singular_point_count != py.singular_point_count:
        witnesses.append(
            Witness(
                "singular point count",
                str(px.singular_point_count),
                str(py.singular_point_count),
            )
        )
    sx = px.subclass.value if px.subclass else "unclassified"
    sy = py.subclass.value if py.subclass else "unclassified"
    if sx != sy:
        witnesses.append(Witness("subclass", sx, sy))
    if witnesses:
        return PartnerVerdict(VerdictKind.NOT_EQUIVALENT, tuple(witnesses))

    if px.subclass is Subclass.L1 and py.subclass is Subclass.L1:
        # matching profiles separate the reduced types, so the types agree
        tx, ty = classify(x), classify(y)
        assert tx == ty, (tx, ty)
        note = _SMOOTH_ELLIPTIC_NOTE if tx == KodairaType("I", 0) else None
        return PartnerVerdict(VerdictKind.ISOMORPHIC, note=note)
    note = "the two configurations are identical" if x == y else _NO_CONVERSE_NOTE
    return PartnerVerdict(VerdictKind.POSSIBLY_EQUIVALENT, note=note)


def partner_matrix(types: Sequence[KodairaType]) -> list[list[PartnerVerdict]]:
    """Verdict for every ordered pair of catalog types."""
    configs = [build(t) for t in types]
    return [[compare(a, b) for b in configs] for a in configs]
