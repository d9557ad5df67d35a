import pytest

from qcliff import (
    AlgebraPresentation,
    LambdaPattern,
    MonomialMatrix,
    complete,
    quaternion_presentation,
    sylvester,
)
from qcliff.serialize import (
    bundle_from_dict,
    bundle_to_dict,
    dense_from_rows,
    dense_to_rows,
    lambda_from_dict,
    lambda_to_dict,
    monomial_from_dict,
    monomial_to_dict,
    presentation_from_dict,
    presentation_to_dict,
    sign_matrix_from_text_rows,
    sign_text_rows,
)


class TestPresentationFormat:
    def test_round_trip(self):
        P = AlgebraPresentation((1, -1, -1), [(0, 2), (1, 2)])
        again = presentation_from_dict(presentation_to_dict(P))
        assert again == P

    def test_canonical_output_is_stable(self):
        P = quaternion_presentation()
        d = presentation_to_dict(P)
        assert d == {"m": 2, "kappa": [-1, -1], "delta": [[1, 2, 1]]}
        assert presentation_to_dict(presentation_from_dict(d)) == d

    def test_omitted_pairs_commute(self):
        P = presentation_from_dict({"m": 3, "kappa": [1, 1, 1]})
        assert P.anticommuting_pairs() == []

    def test_explicit_zero_bits_allowed(self):
        P = presentation_from_dict(
            {"m": 2, "kappa": [1, 1], "delta": [[1, 2, 0]]}
        )
        assert P.delta(0, 1) == 0

    def test_unknown_fields_rejected(self):
        with pytest.raises(ValueError):
            presentation_from_dict({"m": 1, "kappa": [1], "extra": 0})

    def test_bad_kappa_value(self):
        with pytest.raises(ValueError):
            presentation_from_dict({"m": 1, "kappa": [2]})

    def test_indices_one_based_and_ordered(self):
        with pytest.raises(ValueError):
            presentation_from_dict({"m": 2, "kappa": [1, 1], "delta": [[2, 1, 1]]})
        with pytest.raises(ValueError):
            presentation_from_dict({"m": 2, "kappa": [1, 1], "delta": [[0, 1, 1]]})

    def test_conflicting_delta_rejected(self):
        with pytest.raises(ValueError):
            presentation_from_dict(
                {"m": 2, "kappa": [1, 1], "delta": [[1, 2, 1], [1, 2, 0]]}
            )


class TestMatrixFormats:
    def test_monomial_round_trip(self):
        mat = MonomialMatrix([2, 0, 1], [1, -1, 1])
        assert monomial_from_dict(monomial_to_dict(mat)) == mat

    def test_monomial_order_checked(self):
        with pytest.raises(ValueError):
            monomial_from_dict({"order": 4, "perm": [0, 1], "signs": [1, 1]})

    def test_dense_round_trip(self):
        s = sylvester(4)
        assert dense_from_rows(dense_to_rows(s)) == s

    def test_sign_text_round_trip(self):
        s = sylvester(4)
        rows = sign_text_rows(s)
        assert rows[0] == "++++"
        assert sign_matrix_from_text_rows(rows) == s

    def test_bad_sign_text(self):
        with pytest.raises(ValueError):
            sign_matrix_from_text_rows(["+x"])


class TestLambdaFormat:
    def test_round_trip(self):
        lam = LambdaPattern.from_pairs(3, {(0, 1): -1, (0, 2): 1, (1, 2): -1})
        assert lambda_from_dict(lambda_to_dict(lam)) == lam

    def test_symmetric_completion(self):
        lam = lambda_from_dict({"n": 2, "entries": [[2, 1, -1]]})
        assert lam.get(0, 1) == -1

    def test_missing_pairs_rejected(self):
        with pytest.raises(ValueError):
            lambda_from_dict({"n": 3, "entries": [[1, 2, -1]]})

    def test_conflicting_entries_rejected(self):
        with pytest.raises(ValueError):
            lambda_from_dict({"n": 2, "entries": [[1, 2, -1], [2, 1, 1]]})

    def test_unknown_fields_rejected(self):
        with pytest.raises(ValueError):
            lambda_from_dict({"n": 2, "entries": [[1, 2, 1]], "note": "hi"})


class TestBundleFormat:
    def test_round_trip_and_reverify(self):
        bundle = complete(2)
        d = bundle_to_dict(bundle)
        again = bundle_from_dict(d)
        assert again.H == bundle.H
        assert again.lam == bundle.lam
        assert all(a == b for a, b in zip(again.A, bundle.A))
        assert all(a == b for a, b in zip(again.B, bundle.B))
        assert bundle_to_dict(again) == d

    def test_inconsistent_sizes_rejected(self):
        bundle = complete(1)
        d = bundle_to_dict(bundle)
        d["n"] = 3
        with pytest.raises(ValueError):
            bundle_from_dict(d)
