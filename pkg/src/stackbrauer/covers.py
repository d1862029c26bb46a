"""Cyclic covers of curves: admissible data, enumeration, inertia sectors.

A degree-``N`` cyclic cover of a smooth curve of genus ``g'`` with smooth
total space of genus ``g`` is encoded by a datum ``(g', N, d1..d_{N-1})``,
where ``d_i`` counts branch points whose local monodromy is the ``i``-th
power of the chosen generator of ``Z/N``.  Two constraints make a datum
admissible for genus ``g >= 2``:

* Riemann-Hurwitz:  ``2g - 2 = N(2g' - 2) + sum_i d_i (N - gcd(i, N))``,
* existence of the cover's eigen-line bundle: ``sum_i i * d_i = 0 (mod N)``,

together with ``g' <= g``.  These data label the connected components of
the moduli of cyclic covers, equivalently the twisted sectors of the
inertia of the moduli stack of genus-``g`` curves along the ``Z/N`` locus.

Connectedness of the covering curve is controlled by
``k = gcd(N, {i : d_i > 0})`` (with ``k = N`` when the cover is
unramified): the cover is connected iff a certain line bundle has exact
order ``k`` in the Picard group of the base.  For ``k = 1`` that bundle is
trivialized by the datum itself, so the cover is always connected; for
``g' = 0`` the Picard group forces order one, so ``k > 1`` means
disconnected; for ``g' > 0`` with ``k > 1`` the verdict varies over the
moduli and is reported as undetermined.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

__all__ = [
    "AdmissibleDatum",
    "Admissibility",
    "SectorReport",
    "NonIntegralGenusError",
    "total_genus",
    "is_admissible",
    "enumerate_admissible",
    "connectedness_k",
    "is_connected_genus0",
    "sector_report",
    "decompose_inertia",
    "CONNECTED",
    "DISCONNECTED",
    "UNDETERMINED",
    "REASON_NON_INTEGRAL_GENUS",
    "REASON_GENUS_MISMATCH",
    "REASON_GENUS_BELOW_TWO",
    "REASON_STRUCTURAL_EQUATION",
    "REASON_QUOTIENT_GENUS_TOO_LARGE",
]

CONNECTED = "connected"
DISCONNECTED = "disconnected"
UNDETERMINED = "undetermined"

REASON_NON_INTEGRAL_GENUS = "non_integral_genus"
REASON_GENUS_MISMATCH = "genus_mismatch"
REASON_GENUS_BELOW_TWO = "genus_below_two"
REASON_STRUCTURAL_EQUATION = "structural_equation"
REASON_QUOTIENT_GENUS_TOO_LARGE = "quotient_genus_too_large"


class NonIntegralGenusError(ValueError):
    """The Riemann-Hurwitz genus of a datum is a half-integer."""

    def __init__(self, datum: "AdmissibleDatum", genus: Fraction):
        super().__init__(f"datum {datum} has non-integral total genus {genus}")
        self.datum = datum
        self.genus = genus


@dataclass(frozen=True)
class AdmissibleDatum:
    """A candidate cover datum ``(g', N, d1..d_{N-1})``.

    Construction checks only shape (``g' >= 0``, ``N >= 2``, exactly
    ``N - 1`` nonnegative branch degrees); admissibility for a target genus
    is a separate question answered by :func:`is_admissible`.
    """

    quotient_genus: int
    order: int
    branch_degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        gq = int(self.quotient_genus)
        n = int(self.order)
        degs = tuple(int(d) for d in self.branch_degrees)
        object.__setattr__(self, "quotient_genus", gq)
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "branch_degrees", degs)
        if gq < 0:
            raise ValueError(f"quotient genus {gq} is negative")
        if n < 2:
            raise ValueError(f"cover order {n} must be at least 2")
        if len(degs) != n - 1:
            raise ValueError(f"expected {n - 1} branch degrees for order {n}, got {len(degs)}")
        if any(d < 0 for d in degs):
            raise ValueError("branch degrees must be nonnegative")

    @property
    def weighted_degree_sum(self) -> int:
        """``d = sum_i i * d_i``, the total monodromy weight."""
        return sum(i * d for i, d in enumerate(self.branch_degrees, start=1))

    @property
    def total_branch_points(self) -> int:
        return sum(self.branch_degrees)

    @classmethod
    def parse(cls, text: str) -> "AdmissibleDatum":
        """Parse the flat comma form ``"gq,N,d1,...,d_{N-1}"``.

        The token count must be exactly ``2 + (N - 1)``.

        >>> AdmissibleDatum.parse("0,2,6")
        AdmissibleDatum(quotient_genus=0, order=2, branch_degrees=(6,))
        """
        parts = [p.strip() for p in str(text).split(",")]
        try:
            numbers = [int(p) for p in parts]
        except ValueError as exc:
            raise ValueError(f"datum {text!r} contains a non-integer token") from exc
        if len(numbers) < 2:
            raise ValueError(f"datum {text!r} needs at least 'gq,N'")
        gq, n = numbers[0], numbers[1]
        degs = numbers[2:]
        if n >= 2 and len(degs) != n - 1:
            raise ValueError(
                f"datum {text!r}: order {n} needs exactly {n - 1} branch degrees, got {len(degs)}"
            )
        return cls(gq, n, tuple(degs))

    def to_json(self) -> dict:
        return {"gq": self.quotient_genus, "N": self.order, "d": list(self.branch_degrees)}

    @classmethod
    def from_json(cls, data) -> "AdmissibleDatum":
        return cls(int(data["gq"]), int(data["N"]), tuple(int(x) for x in data["d"]))

    def __str__(self) -> str:
        degs = ", ".join(str(d) for d in self.branch_degrees)
        return f"(g'={self.quotient_genus}, N={self.order}, d=[{degs}])"


def total_genus(a: AdmissibleDatum) -> Fraction:
    """Riemann-Hurwitz genus of the covering curve, as an exact rational.

    ``g = 1 + (N(2g' - 2) + sum_i d_i (N - gcd(i, N))) / 2``; returning a
    Fraction (denominator 1 or 2) lets callers flag half-integral genus as
    its own failure mode instead of silently rounding.

    >>> total_genus(AdmissibleDatum(0, 2, (6,)))
    Fraction(2, 1)
    """
    n = a.order
    ram = sum(d * (n - gcd(i, n)) for i, d in enumerate(a.branch_degrees, start=1))
    return 1 + Fraction(n * (2 * a.quotient_genus - 2) + ram, 2)


@dataclass(frozen=True)
class Admissibility:
    """Verdict of :func:`is_admissible` with machine-readable reasons."""

    ok: bool
    reasons: tuple[str, ...]
    genus: Fraction

    def __bool__(self) -> bool:
        return self.ok


def is_admissible(a: AdmissibleDatum, g: int) -> Admissibility:
    """Check a datum against a target genus ``g >= 2``.

    All failed conditions are reported, not just the first: the genus
    equation (with half-integral genus flagged separately), the structural
    congruence ``sum_i i*d_i = 0 (mod N)``, and ``g' <= g``.

    >>> is_admissible(AdmissibleDatum(0, 2, (5,)), 2).reasons
    ('non_integral_genus', 'structural_equation')
    """
    g = int(g)
    if g < 2:
        raise ValueError(f"target genus {g} < 2; only genus >= 2 is classified")
    reasons: list[str] = []
    genus = total_genus(a)
    if genus.denominator != 1:
        reasons.append(REASON_NON_INTEGRAL_GENUS)
    elif genus != g:
        reasons.append(REASON_GENUS_MISMATCH)
    if a.weighted_degree_sum % a.order != 0:
        reasons.append(REASON_STRUCTURAL_EQUATION)
    if a.quotient_genus > g:
        reasons.append(REASON_QUOTIENT_GENUS_TOO_LARGE)
    return Admissibility(not reasons, tuple(reasons), genus)


def enumerate_admissible(g: int, n: int,
                         quotient_genus: Optional[int] = None) -> list[AdmissibleDatum]:
    """All admissible data for genus ``g`` and cover order ``n``.

    Search space: ``g'`` runs while ``N(2g' - 2) <= 2g - 2`` (so
    ``g' <= (2g-2)/(2N) + 1``), and for each ``g'`` the branch degrees are
    the exact solutions of ``sum_i d_i (N - gcd(i, N)) = 2g - 2 - N(2g'-2)``
    with nonnegative ``d_i``, filtered by the structural congruence.  Output
    is in lexicographic order of ``(g', d1, ..., d_{N-1})``.

    >>> [str(a) for a in enumerate_admissible(2, 2)]
    ["(g'=0, N=2, d=[6])", "(g'=1, N=2, d=[2])"]
    """
    g = int(g)
    n = int(n)
    if g < 2:
        raise ValueError(f"target genus {g} < 2; only genus >= 2 is classified")
    if n < 2:
        raise ValueError(f"cover order {n} must be at least 2")
    if quotient_genus is not None and quotient_genus < 0:
        raise ValueError("quotient genus filter must be nonnegative")

    weights = [n - gcd(i, n) for i in range(1, n)]
    found: list[AdmissibleDatum] = []

    def branch_tuples(budget: int):
        """All d with sum(d_i * weights[i]) == budget, lexicographically."""
        def rec(idx: int, remaining: int, prefix: tuple[int, ...]):
            if idx == len(weights):
                if remaining == 0:
                    yield prefix
                return
            w = weights[idx]
            for d in range(remaining // w + 1):
                yield from rec(idx + 1, remaining - d * w, prefix + (d,))
        yield from rec(0, budget, ())

    gq = 0
    while n * (2 * gq - 2) <= 2 * g - 2:
        if quotient_genus is None or gq == quotient_genus:
            budget = 2 * g - 2 - n * (2 * gq - 2)
            for degs in branch_tuples(budget):
                candidate = AdmissibleDatum(gq, n, degs)
                if is_admissible(candidate, g):
                    found.append(candidate)
        gq += 1
    return found


def connectedness_k(a: AdmissibleDatum) -> int:
    """``gcd(N, {i : d_i > 0})``; the unramified case gives ``k = N``.

    >>> connectedness_k(AdmissibleDatum(0, 4, (0, 2, 0)))
    2
    """
    k = a.order
    for i, d in enumerate(a.branch_degrees, start=1):
        if d > 0:
            k = gcd(k, i)
    return k


def is_connected_genus0(a: AdmissibleDatum) -> bool:
    """Connectedness of the covers for a genus-0 base: ``k == 1``.

    Over a genus-0 base the relevant line bundle cannot have order above 1,
    so the gcd criterion is decisive.  Positive quotient genus is rejected
    here because connectedness then needs the order of a line bundle in a
    nontrivial Picard group (out of scope); see :func:`sector_report` for
    the partial verdicts that are still free.
    """
    if a.quotient_genus != 0:
        raise ValueError(
            f"datum has quotient genus {a.quotient_genus}; this verdict is genus-0 only"
        )
    return connectedness_k(a) == 1


@dataclass(frozen=True)
class SectorReport:
    """Classification of one inertia sector (one cover datum).

    ``connected`` is one of the module constants ``CONNECTED``,
    ``DISCONNECTED``, ``UNDETERMINED``; ``brauer`` is present exactly when
    the datum is admissible with genus-0 quotient, since that is when the
    sector carries the order-2 Brauer classification.
    """

    datum: AdmissibleDatum
    total_genus: int
    admissible: bool
    reasons: tuple[str, ...]
    gcd_k: int
    connected: str
    brauer: Optional["BrauerReport"]  # noqa: F821 - imported lazily below

    def to_json(self) -> dict:
        out = self.datum.to_json()
        out.update(
            {
                "total_genus": self.total_genus,
                "admissible": self.admissible,
                "reasons": list(self.reasons),
                "gcd_k": self.gcd_k,
                "connected": self.connected,
                "brauer": self.brauer.to_json() if self.brauer is not None else None,
            }
        )
        return out


def _connect_verdict(a: AdmissibleDatum, k: int) -> str:
    if k == 1:
        # the datum's structure isomorphism trivializes the order-k bundle,
        # so every cover is connected regardless of the base genus
        return CONNECTED
    return DISCONNECTED if a.quotient_genus == 0 else UNDETERMINED


def sector_report(a: AdmissibleDatum, genus: Optional[int] = None) -> SectorReport:
    """Full report for one datum.

    With ``genus=None`` the datum is judged against its own Riemann-Hurwitz
    genus; a half-integral genus raises :class:`NonIntegralGenusError`
    because no integer target makes sense.  Genus below 2 is reported as an
    inadmissibility reason rather than an exception.
    """
    from .brauer import brauer_report  # circular at module level by design

    genus_fraction = total_genus(a)
    if genus is None:
        if genus_fraction.denominator != 1:
            raise NonIntegralGenusError(a, genus_fraction)
        genus = int(genus_fraction)

    if genus < 2:
        reasons = [REASON_GENUS_BELOW_TWO]
        if genus_fraction != genus:
            reasons.insert(0, REASON_GENUS_MISMATCH)
        if a.weighted_degree_sum % a.order != 0:
            reasons.append(REASON_STRUCTURAL_EQUATION)
        verdict = Admissibility(False, tuple(reasons), genus_fraction)
    else:
        verdict = is_admissible(a, genus)

    k = connectedness_k(a)
    brauer = brauer_report(a) if (verdict.ok and a.quotient_genus == 0) else None
    return SectorReport(
        datum=a,
        total_genus=genus,
        admissible=verdict.ok,
        reasons=verdict.reasons,
        gcd_k=k,
        connected=_connect_verdict(a, k),
        brauer=brauer,
    )


def decompose_inertia(g: int, n: int) -> list[SectorReport]:
    """Reports for every admissible datum of genus ``g`` and order ``n``.

    Same deterministic order as :func:`enumerate_admissible`.  The listing
    may legitimately be empty (no sector for that ``(g, N)``).
    """
    return [sector_report(a, genus=g) for a in enumerate_admissible(g, n)]
