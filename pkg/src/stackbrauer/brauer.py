"""Brauer classes of cyclic-cover sectors and character-twist arithmetic.

For an admissible genus-0 datum ``A = (0, N, d1..d_{N-1})`` the sector of
the moduli of cyclic covers sits as a ``mu_2``-gerbe-like stack over a
rigidified base stack ``N_A`` of branch-divisor configurations.  The two
facts computed here are parity laws in the branch degrees:

* ``H^2(N_A, Gm)`` is ``Z/2`` when every ``d_i`` is even and vanishes when
  any ``d_i`` is odd (an odd ``d_i`` forces the would-be class to restrict
  trivially on a symmetric-power factor, killing it);

* when every ``d_i`` is even, the class of the sector itself is the
  ``(d/N)``-th power of the order-2 generator with ``d = sum_i i * d_i``,
  so it is nontrivial exactly when ``d/N`` is odd.  Restriction from the
  compactified to the open sector is injective on these classes, so one
  verdict serves both.

The supporting character arithmetic is general: a projectivized
representation ``[P(V)/G~] -> B(G~)/twist`` has Brauer class ``chi^{-1}``
for the central character ``chi`` of ``V``, pushforwards of sums of
character twists add up accordingly, and the degree-``d`` symmetric power
of the universal genus-0 conic contributes ``d mod 2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import FiniteAbelianGroup, GroupElement
from .covers import AdmissibleDatum, is_admissible, total_genus

__all__ = [
    "BrauerReport",
    "base_brauer_group",
    "sector_brauer_class",
    "symmetric_power_class",
    "projective_bundle_class",
    "pushforward_class",
    "brauer_report",
    "ORDER_TWO",
]

#: The ambient group of all sector classes.
ORDER_TWO = FiniteAbelianGroup((2,))

_TRIVIAL = FiniteAbelianGroup(())


def _require_classifiable(a: AdmissibleDatum) -> None:
    if a.quotient_genus != 0:
        raise ValueError(
            f"datum has quotient genus {a.quotient_genus}; the Brauer classification "
            "applies to genus-0 quotients only"
        )
    genus = total_genus(a)
    if genus.denominator != 1 or genus < 2 or not is_admissible(a, int(genus)):
        raise ValueError(f"datum {a} is not admissible for any genus >= 2")


def base_brauer_group(a: AdmissibleDatum) -> FiniteAbelianGroup:
    """``H^2`` with multiplicative coefficients of the sector's base stack.

    ``Z/2`` when all branch degrees are even, trivial otherwise.

    >>> str(base_brauer_group(AdmissibleDatum(0, 2, (6,))))
    'Z/2'
    """
    _require_classifiable(a)
    if all(d % 2 == 0 for d in a.branch_degrees):
        return FiniteAbelianGroup((2,))
    return _TRIVIAL


def sector_brauer_class(a: AdmissibleDatum) -> GroupElement:
    """The sector's Brauer class inside :func:`base_brauer_group`.

    Nontrivial exactly when every ``d_i`` is even and ``d/N`` is odd,
    ``d = sum_i i * d_i`` (the structural congruence makes ``d/N`` an
    integer).  The same element classifies the open sector, since
    restriction is injective here.

    >>> sector_brauer_class(AdmissibleDatum(0, 2, (6,))).coords
    (1,)
    """
    group = base_brauer_group(a)
    if group.is_trivial:
        return group.identity()
    d_over_n = a.weighted_degree_sum // a.order
    return GroupElement(group, (d_over_n % 2,))


def symmetric_power_class(degree: int) -> GroupElement:
    """Class of the degree-``d`` symmetric power gerbe of the universal conic.

    Lives in ``Z/2`` and equals ``d mod 2``; additivity in ``d`` is what
    makes the sector parity law a finite computation.
    """
    degree = int(degree)
    if degree < 0:
        raise ValueError(f"symmetric power degree {degree} is negative")
    return GroupElement(ORDER_TWO, (degree % 2,))


def projective_bundle_class(chi: GroupElement) -> GroupElement:
    """Brauer class of the projectivization of a ``chi``-twisted bundle.

    The projectivized bundle is the pullback of the canonical gerbe along
    the character, with one inversion: the class is ``chi^{-1}``, i.e.
    ``-chi`` written additively.
    """
    if not isinstance(chi, GroupElement):
        raise TypeError("projective_bundle_class expects a GroupElement character")
    return -chi


def pushforward_class(chis, exponents) -> GroupElement:
    """Class of a pushforward of a sum of character twists.

    For characters ``chi_1..chi_r`` with multiplicities ``a_1..a_r`` the
    resulting class is ``sum_j a_j * (-chi_j)``; all characters must live in
    the same (dual) group and the two lists must have equal length.

    >>> b = FiniteAbelianGroup((4,))
    >>> pushforward_class([b.element([1]), b.element([2])], [1, 1]).coords
    (1,)
    """
    chis = list(chis)
    exponents = [int(e) for e in exponents]
    if len(chis) != len(exponents):
        raise ValueError(
            f"{len(chis)} characters but {len(exponents)} exponents; lists must align"
        )
    if not chis:
        raise ValueError("pushforward needs at least one character to fix the group")
    total = chis[0].group.identity()
    for chi, e in zip(chis, exponents):
        total = total + e * projective_bundle_class(chi)
    return total


@dataclass(frozen=True)
class BrauerReport:
    """Brauer verdict for one admissible genus-0 datum."""

    h2_group: FiniteAbelianGroup
    sector_class: GroupElement
    d_over_n: int
    all_degrees_even: bool

    @property
    def class_nontrivial(self) -> bool:
        return not self.sector_class.is_identity

    def to_json(self) -> dict:
        return {
            "h2": self.h2_group.to_json(),
            "class_nontrivial": self.class_nontrivial,
            "d_over_N": self.d_over_n,
            "all_di_even": self.all_degrees_even,
        }


def brauer_report(a: AdmissibleDatum) -> BrauerReport:
    """Bundle the parity data for one datum into a report."""
    group = base_brauer_group(a)
    return BrauerReport(
        h2_group=group,
        sector_class=sector_brauer_class(a),
        d_over_n=a.weighted_degree_sum // a.order,
        all_degrees_even=all(d % 2 == 0 for d in a.branch_degrees),
    )
