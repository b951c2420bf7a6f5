import pytest
from hypothesis import given, settings

from conftest import partitions
from schurid.errors import HeightTooSmall, InvalidRange, InvalidStripSpec, NegativePart
from schurid.identities import (
    GPS_DEFAULT_ORIENTATION,
    GPS_ORIENTATIONS,
    Identity,
    Term,
    barred_identity,
    bracket_lower,
    bracket_upper,
    conjugate_identity,
    fulmek_kleber_identity,
    fulmek_kleber_via_main,
    gps_identity,
    main_identity,
    square_identity,
    square_identity_via_nu,
    term,
)
from schurid.oracle import verify_identity
from schurid.partition import EMPTY, conjugate, inner_corners, partitions_up_to
from schurid.strips import StripSpec, enumerate_specs


def ident(lhs, rhs):
    return Identity(tuple(term(*t) for t in lhs), tuple(term(*t) for t in rhs))


CASE_211 = ((2, 1, 1), [StripSpec(2, 1, 1)])
CASE_421 = ((4, 2, 1), [StripSpec(2, 2, 1)])


def test_main_identity_211():
    got = main_identity(*CASE_211)
    assert got == ident([((2, 1, 1), (1,))], [((2, 2, 1), ()), ((2,), (1, 1, 1))])
    assert got.to_latex() == "s_{(2,1,1)}s_{(1)} = s_{(2,2,1)} + s_{(2)}s_{(1,1,1)}"


def test_main_identity_421():
    got = main_identity(*CASE_421)
    assert got.to_latex() == "s_{(4,2,1)}s_{(2,2)} = s_{(4,3,3)}s_{(1)} + s_{(4,2)}s_{(2,2,1)}"


@pytest.mark.parametrize("case, axis, latex", [
    (CASE_211, "row", "s_{(1,1)}s_{(1)} = s_{(2,1)} + s_{(1,1,1)}"),
    (CASE_211, "column", "s_{(1)}s_{(1)} = s_{(1,1)} + s_{(2)}"),
    (CASE_421, "row", "s_{(2,1)}s_{(2,2)} = s_{(3,3)}s_{(1)} + s_{(2)}s_{(2,2,1)}"),
    (CASE_421, "column", "s_{(3,1)}s_{(2,2)} = s_{(3,2,2)}s_{(1)} + s_{(4,2)}s_{(1,1)}"),
])
def test_barred_examples(case, axis, latex):
    got = barred_identity(*case, axis)
    assert got.to_latex() == latex
    assert verify_identity(got).verified


def test_two_strips_on_321():
    got = main_identity((3, 2, 1), [StripSpec(2, 1, 1), StripSpec(3, 1, 1)])
    assert len(got.rhs) == 3
    assert verify_identity(got, m=5).verified


def test_invalid_specs_propagate():
    with pytest.raises(InvalidStripSpec):
        main_identity((2, 1, 1), [StripSpec(1, 1, 1)])
    with pytest.raises(InvalidStripSpec):
        barred_identity((2, 2), [StripSpec(2, 1, 1)], "row")


def test_conjugate_of_211():
    got = conjugate_identity(main_identity(*CASE_211))
    assert got == ident([((3, 1), (1,))], [((3, 2), ()), ((1, 1), (3,))])
    assert verify_identity(got).verified
    assert conjugate_identity(got) == main_identity(*CASE_211)


def test_self_conjugate_fixed_point():
    sq = square_identity((2, 1))
    assert all(conjugate(p) == p for p in sq.lhs[0].factors)
    assert conjugate_identity(sq) == sq


def test_square_three_two_one():
    got = square_identity((3, 2, 1))
    expected = [((4, 3, 2), (2, 1)), ((4, 3), (2, 1, 1, 1)),
                ((4, 1), (2, 2, 2, 1)), ((3, 3, 2, 1), (2, 1))]
    assert [set(t.factors) for t in got.rhs] == [set(map(tuple, p)) for p in expected]
    assert all(t.coeff == 1 for t in got.rhs)
    assert verify_identity(got, m=5).verified


def test_square_small():
    assert square_identity((2, 2)) == ident([((2, 2), (2, 2))],
                                            [((2,), (2, 2, 2)), ((3, 3), (1, 1))])
    assert square_identity(()) == ident([((), ())], [((), ())])
    assert square_identity_via_nu((1,)) == ident([((1,), (1,))], [((1, 1), ()), ((2,), ())])


def test_square_term_count_is_corner_count():
    for lam in partitions_up_to(10):
        assert len(square_identity(lam).rhs) == len(inner_corners(lam))


def test_square_via_nu_exhaustive():
    for lam in partitions_up_to(8):
        if lam:
            assert square_identity_via_nu(lam) == square_identity(lam), lam


def test_square_rectangles():
    for m in range(1, 5):
        for n in range(1, 5):
            got = square_identity((m,) * n)
            assert got == ident([((m,) * n, (m,) * n)],
                                [((m,) * (n - 1), (m,) * (n + 1)),
                                 ((m - 1,) * n, (m + 1,) * n)])


@pytest.mark.parametrize("lam, expected", [
    ((2, 1, 1), ([((1, 1), (2, 1))], [((3, 2), ()), ((1,), (2, 1, 1))])),
    ((3, 1), ([((1,), (3,))], [((4,), ()), ((), (3, 1))])),
])
def test_fulmek_kleber_examples(lam, expected):
    got = fulmek_kleber_identity(lam)
    assert got == ident(*expected)
    assert verify_identity(got).verified


def test_fulmek_kleber_rejects_negative_labels():
    # a zero last component would put -1 into the shifted label; never clamped
    with pytest.raises(NegativePart):
        fulmek_kleber_identity((2, 1, 0))
    with pytest.raises(HeightTooSmall):
        fulmek_kleber_identity((3,))


def test_fulmek_kleber_matches_its_derivation():
    for lam in partitions_up_to(10):
        if 2 <= lam.height <= 4:
            assert fulmek_kleber_identity(lam) == fulmek_kleber_via_main(lam), lam


def test_brackets():
    assert bracket_upper(3, 2, 1) == (3, 2, 2)
    assert bracket_lower(2, 3, 1) == (3, 3, 1)
    assert bracket_lower(0, 0, 0) == EMPTY


def test_gps_smallest():
    assert gps_identity(1, 1, 1, 1) == ident([((1,), (1,))], [((2,), ()), ((1, 1), ())])
    with pytest.raises(InvalidRange):
        gps_identity(2, 1, 1, 1)


def test_gps_orientation_is_forced():
    # only the default orientation survives the oracle
    assert GPS_DEFAULT_ORIENTATION == "power"
    cases = [(a, b, m, n) for m in range(1, 4) for n in range(1, 4)
             for a in range(1, m + 1) for b in range(1, n + 1)]
    for o in GPS_ORIENTATIONS:
        ok = [verify_identity(gps_identity(*c, orientation=o)).verified for c in cases]
        assert all(ok) == (o == GPS_DEFAULT_ORIENTATION)


def test_homogeneity_enforced():
    with pytest.raises(ValueError):
        ident([((2,), (1,))], [((2,), ())])
    with pytest.raises(ValueError):
        Term(0, ((1,), ()))


def test_canonical_form():
    a = ident([((1,), (2,))], [((1, 1), (1,)), ((2,), (1,))])
    b = ident([((2,), (1,))], [((1,), (2,)), ((1,), (1, 1))])
    assert a == b and hash(a) == hash(b)
    merged = Identity((term((2,), (1,)),),
                      (term((2,), (1,)), term((1,), (2,)), term((2,), (1,), -1)))
    assert merged.canonical()[1] == ((((2,), (1,)), 1),)


def test_latex_signs_and_coefficients():
    got = Identity((term((1,), (1,)),), (term((2,), (), 2), term((1, 1), (), -1)))
    assert got.to_latex() == "s_{(1)}s_{(1)} = 2s_{(2)} - s_{(1,1)}"


@settings(max_examples=60, deadline=None)
@given(partitions(max_weight=9, min_weight=1))
def test_json_round_trip(lam):
    for specs in enumerate_specs(lam, 2):
        got = main_identity(lam, specs)
        back = Identity.from_json(got.to_json())
        assert back == got
        assert back.to_dict() == got.to_dict()
    sq = square_identity(lam)
    assert Identity.from_json(sq.to_json()).to_dict() == sq.to_dict()


def test_oracle_sweep_main_and_bars():
    for lam in partitions_up_to(10):
        for specs in enumerate_specs(lam, 3):
            for got in (main_identity(lam, specs),
                        barred_identity(lam, specs, "row"),
                        barred_identity(lam, specs, "column")):
                assert verify_identity(got, trials=1).verified, (lam, specs)
                assert verify_identity(conjugate_identity(got), trials=1).verified


def test_oracle_sweep_fulmek_kleber():
    for lam in partitions_up_to(10):
        if 2 <= lam.height <= 4:
            fk = fulmek_kleber_identity(lam)
            assert verify_identity(fk).verified, lam
            assert verify_identity(conjugate_identity(fk)).verified, lam


def test_oracle_sweep_squares():
    for lam in partitions_up_to(10):
        sq = square_identity(lam)
        assert verify_identity(sq, trials=1).verified, lam
        assert verify_identity(conjugate_identity(sq), trials=1).verified, lam
