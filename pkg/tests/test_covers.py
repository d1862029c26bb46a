"""Tests for cyclic-cover data: admissibility, enumeration, sector reports.

The enumeration oracle below is a plain bounding-box scan (every branch
vector inside the box allowed by the ramification budget, filtered by a
from-scratch Riemann-Hurwitz recomputation), as opposed to the library's
budgeted recursion, so agreement checks the search strategy and not just
the formula.
"""

import itertools
from fractions import Fraction
from math import gcd

import pytest

from stackbrauer.covers import (
    CONNECTED,
    DISCONNECTED,
    REASON_GENUS_BELOW_TWO,
    REASON_GENUS_MISMATCH,
    REASON_NON_INTEGRAL_GENUS,
    REASON_QUOTIENT_GENUS_TOO_LARGE,
    REASON_STRUCTURAL_EQUATION,
    UNDETERMINED,
    AdmissibleDatum,
    NonIntegralGenusError,
    connectedness_k,
    decompose_inertia,
    enumerate_admissible,
    is_admissible,
    is_connected_genus0,
    sector_report,
    total_genus,
)


def oracle_enumerate(g: int, n: int) -> list[tuple[int, int, tuple[int, ...]]]:
    """Brute-force admissible data by scanning a bounding box of branch vectors."""
    weights = [n - gcd(i, n) for i in range(1, n)]
    out = []
    gq = 0
    while n * (2 * gq - 2) <= 2 * g - 2 and gq <= g:
        budget = 2 * g - 2 - n * (2 * gq - 2)
        for degs in itertools.product(*(range(budget // w + 1) for w in weights)):
            genus = 1 + Fraction(
                n * (2 * gq - 2) + sum(d * w for d, w in zip(degs, weights)), 2
            )
            if genus != g:
                continue
            if sum(i * d for i, d in enumerate(degs, start=1)) % n:
                continue
            out.append((gq, n, degs))
        gq += 1
    return sorted(out)


# ---------------------------------------------------------------------------
# datum construction and parsing
# ---------------------------------------------------------------------------


class TestAdmissibleDatum:
    def test_shape_validation(self):
        AdmissibleDatum(0, 2, (6,))
        with pytest.raises(ValueError):
            AdmissibleDatum(-1, 2, (6,))
        with pytest.raises(ValueError):
            AdmissibleDatum(0, 1, ())
        with pytest.raises(ValueError):
            AdmissibleDatum(0, 3, (1,))  # order 3 needs two degrees
        with pytest.raises(ValueError):
            AdmissibleDatum(0, 2, (-1,))

    def test_parse_pinned(self):
        a = AdmissibleDatum.parse("0,2,6")
        assert (a.quotient_genus, a.order, a.branch_degrees) == (0, 2, (6,))
        b = AdmissibleDatum.parse(" 1 , 3 , 0 , 2 ")
        assert (b.quotient_genus, b.order, b.branch_degrees) == (1, 3, (0, 2))

    def test_parse_rejects_malformed(self):
        for bad in ["", "0", "0,2,x", "0,3,1", "0,3,1,2,3", "0,2,6,0"]:
            with pytest.raises(ValueError):
                AdmissibleDatum.parse(bad)

    def test_derived_quantities(self):
        a = AdmissibleDatum(0, 4, (1, 2, 3))
        assert a.weighted_degree_sum == 1 * 1 + 2 * 2 + 3 * 3
        assert a.total_branch_points == 6

    def test_json_round_trip(self):
        a = AdmissibleDatum(1, 3, (0, 3))
        assert a.to_json() == {"gq": 1, "N": 3, "d": [0, 3]}
        assert AdmissibleDatum.from_json(a.to_json()) == a

    def test_str_form(self):
        assert str(AdmissibleDatum(0, 2, (6,))) == "(g'=0, N=2, d=[6])"


# ---------------------------------------------------------------------------
# genus and admissibility
# ---------------------------------------------------------------------------


class TestTotalGenus:
    def test_pinned_values(self):
        assert total_genus(AdmissibleDatum(1, 2, (0,))) == 1
        assert total_genus(AdmissibleDatum(0, 2, (6,))) == 2
        assert total_genus(AdmissibleDatum(0, 2, (5,))) == Fraction(3, 2)

    def test_unramified_multiplies_euler_characteristic(self):
        for gq in range(4):
            for n in range(2, 6):
                a = AdmissibleDatum(gq, n, (0,) * (n - 1))
                assert total_genus(a) == 1 + n * (gq - 1)

    def test_returns_exact_fraction(self):
        g = total_genus(AdmissibleDatum(0, 2, (7,)))
        assert isinstance(g, Fraction) and g == Fraction(5, 2)


class TestIsAdmissible:
    def test_pinned_failures(self):
        v = is_admissible(AdmissibleDatum(0, 2, (5,)), 2)
        assert not v
        assert v.reasons == (REASON_NON_INTEGRAL_GENUS, REASON_STRUCTURAL_EQUATION)
        assert v.genus == Fraction(3, 2)

    def test_genus_mismatch_alone(self):
        v = is_admissible(AdmissibleDatum(0, 2, (8,)), 2)
        assert v.reasons == (REASON_GENUS_MISMATCH,)
        assert v.genus == 3

    def test_quotient_genus_bound(self):
        v = is_admissible(AdmissibleDatum(3, 2, (0,)), 2)
        assert REASON_QUOTIENT_GENUS_TOO_LARGE in v.reasons
        assert REASON_GENUS_MISMATCH in v.reasons

    def test_admissible_case_is_truthy(self):
        v = is_admissible(AdmissibleDatum(0, 2, (6,)), 2)
        assert v and v.ok and v.reasons == () and v.genus == 2

    def test_target_genus_below_two_rejected(self):
        with pytest.raises(ValueError):
            is_admissible(AdmissibleDatum(0, 2, (6,)), 1)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


class TestEnumerateAdmissible:
    def test_pinned_listings(self):
        assert [str(a) for a in enumerate_admissible(2, 2)] == [
            "(g'=0, N=2, d=[6])",
            "(g'=1, N=2, d=[2])",
        ]
        assert [str(a) for a in enumerate_admissible(2, 3)] == ["(g'=0, N=3, d=[2, 2])"]

    def test_quotient_genus_filter(self):
        assert [a.quotient_genus for a in enumerate_admissible(2, 2, quotient_genus=0)] == [0]
        assert enumerate_admissible(2, 2, quotient_genus=5) == []

    def test_matches_bounding_box_oracle(self):
        for g in range(2, 6):
            for n in range(2, 6):
                ours = [(a.quotient_genus, a.order, a.branch_degrees)
                        for a in enumerate_admissible(g, n)]
                assert ours == oracle_enumerate(g, n), (g, n)

    def test_output_is_lexicographic(self):
        listing = enumerate_admissible(5, 4)
        keys = [(a.quotient_genus, a.branch_degrees) for a in listing]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)

    def test_all_outputs_admissible(self):
        for a in enumerate_admissible(4, 3):
            verdict = is_admissible(a, 4)
            assert verdict.ok and verdict.genus == 4

    def test_hyperelliptic_family(self):
        # genus-0 quotients of order 2: exactly one datum, 2g+2 branch points
        for g in range(2, 11):
            listing = enumerate_admissible(g, 2, quotient_genus=0)
            assert listing == [AdmissibleDatum(0, 2, (2 * g + 2,))]

    def test_argument_validation(self):
        with pytest.raises(ValueError):
            enumerate_admissible(1, 2)
        with pytest.raises(ValueError):
            enumerate_admissible(2, 1)
        with pytest.raises(ValueError):
            enumerate_admissible(2, 2, quotient_genus=-1)


# ---------------------------------------------------------------------------
# connectedness
# ---------------------------------------------------------------------------


class TestConnectedness:
    def test_gcd_pinned(self):
        assert connectedness_k(AdmissibleDatum(0, 4, (0, 2, 0))) == 2
        assert connectedness_k(AdmissibleDatum(0, 2, (6,))) == 1
        assert connectedness_k(AdmissibleDatum(0, 6, (0, 1, 0, 1, 0))) == 2

    def test_unramified_gives_full_order(self):
        for n in range(2, 7):
            assert connectedness_k(AdmissibleDatum(2, n, (0,) * (n - 1))) == n

    def test_first_degree_positive_forces_one(self):
        assert connectedness_k(AdmissibleDatum(0, 5, (1, 0, 0, 3))) == 1

    def test_genus0_verdict(self):
        assert is_connected_genus0(AdmissibleDatum(0, 2, (6,)))
        assert not is_connected_genus0(AdmissibleDatum(0, 4, (0, 6, 0)))

    def test_genus0_verdict_rejects_positive_quotient_genus(self):
        with pytest.raises(ValueError):
            is_connected_genus0(AdmissibleDatum(1, 2, (2,)))


# ---------------------------------------------------------------------------
# sector reports
# ---------------------------------------------------------------------------


class TestSectorReport:
    def test_connected_sector_with_brauer(self):
        r = sector_report(AdmissibleDatum(0, 2, (6,)))
        assert r.admissible and r.total_genus == 2 and r.reasons == ()
        assert r.gcd_k == 1 and r.connected == CONNECTED
        assert r.brauer is not None and r.brauer.class_nontrivial

    def test_positive_quotient_genus_has_no_brauer_report(self):
        r = sector_report(AdmissibleDatum(1, 2, (2,)), genus=2)
        assert r.admissible and r.connected == CONNECTED
        assert r.brauer is None

    def test_disconnected_sector(self):
        # (0, 4, [0, 6, 0]) has genus 3 and every branch index even
        r = sector_report(AdmissibleDatum(0, 4, (0, 6, 0)))
        assert r.admissible and r.total_genus == 3
        assert r.gcd_k == 2 and r.connected == DISCONNECTED

    def test_undetermined_sector(self):
        # unramified double cover of a genus-2 curve: k = 2 but g' > 0
        r = sector_report(AdmissibleDatum(2, 2, (0,)))
        assert r.admissible and r.total_genus == 3
        assert r.gcd_k == 2 and r.connected == UNDETERMINED
        assert r.brauer is None

    def test_half_integral_genus_raises_without_target(self):
        bad = AdmissibleDatum(0, 2, (5,))
        with pytest.raises(NonIntegralGenusError) as exc:
            sector_report(bad)
        assert exc.value.datum == bad
        assert exc.value.genus == Fraction(3, 2)

    def test_half_integral_genus_reported_against_target(self):
        r = sector_report(AdmissibleDatum(0, 2, (5,)), genus=2)
        assert not r.admissible
        assert r.reasons == (REASON_NON_INTEGRAL_GENUS, REASON_STRUCTURAL_EQUATION)
        assert r.brauer is None

    def test_genus_below_two_is_a_reason_not_an_error(self):
        r = sector_report(AdmissibleDatum(0, 2, (4,)))
        assert not r.admissible
        assert r.reasons == (REASON_GENUS_BELOW_TWO,)
        assert r.total_genus == 1

    def test_json_shape(self):
        out = sector_report(AdmissibleDatum(0, 2, (6,))).to_json()
        assert set(out) == {
            "gq", "N", "d", "total_genus", "admissible", "reasons",
            "gcd_k", "connected", "brauer",
        }
        assert out["gq"] == 0 and out["N"] == 2 and out["d"] == [6]
        assert out["brauer"]["class_nontrivial"] is True
        none_case = sector_report(AdmissibleDatum(1, 2, (2,)), genus=2).to_json()
        assert none_case["brauer"] is None


class TestDecomposeInertia:
    def test_pinned_decomposition(self):
        reports = decompose_inertia(2, 2)
        assert [str(r.datum) for r in reports] == [
            "(g'=0, N=2, d=[6])",
            "(g'=1, N=2, d=[2])",
        ]
        assert reports[0].brauer is not None and reports[0].brauer.class_nontrivial
        assert reports[1].brauer is None
        assert all(r.admissible and r.total_genus == 2 for r in reports)

    def test_empty_decomposition_is_legitimate(self):
        assert decompose_inertia(2, 7) == []

    def test_order_matches_enumeration(self):
        data = [r.datum for r in decompose_inertia(3, 4)]
        assert data == enumerate_admissible(3, 4)


def test_docstring_examples():
    import doctest

    import stackbrauer.covers as mod

    results = doctest.testmod(mod)
    assert results.failed == 0
