from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cwmat import (
    CirculantRow,
    Olp,
    OlpPair,
    SearchSpec,
    are_equivalent,
    base_orders,
    canonical_form,
    class_contractible,
    classify,
    contract,
    exhaustive_search,
    from_sets,
    full_classification,
    lift,
    multiplier_shift,
    olp_of_set,
    verify_cw,
)
from cwmat.orbits import ModulusContext
from golden import (
    BASE_ORDER_CASES,
    BASE_SEARCH_COUNTS,
    KNOWN_CW_7_4,
    W0_21_N,
    W0_21_P,
    W1_31_N,
    W1_31_P,
    W1_63_N,
    W1_63_P,
    W2_31_N,
    W2_31_P,
)

W1 = from_sets(31, W1_31_P, W1_31_N)
W2 = from_sets(31, W2_31_P, W2_31_N)
W0_21 = from_sets(21, W0_21_P, W0_21_N)
W1_63 = from_sets(63, W1_63_P, W1_63_N)


def _pair(p: str, n: str) -> OlpPair:
    return OlpPair(Olp.from_string(p), Olp.from_string(n))


def _spec(n: int, p: str, np_: str) -> SearchSpec:
    return SearchSpec(n, 16, 2, _pair(p, np_))


def test_search_spec_validates():
    with pytest.raises(ValueError, match="not a unit"):
        SearchSpec(6, 16, 2, _pair("5^2", "1^1 5^1"))
    with pytest.raises(ValueError, match="order must be positive"):
        SearchSpec(0, 16, 2, _pair("5^2", "1^1 5^1"))
    with pytest.raises(ValueError, match="olp sums must be"):
        SearchSpec(31, 16, 2, _pair("5^2", "6^1 1^1"))
    with pytest.raises(ValueError, match="perfect square"):
        SearchSpec(31, 15, 2, _pair("5^2", "1^1 5^1"))


@pytest.mark.parametrize(
    "n,p,np_",
    [
        (31, "5^2", "1^1 5^1"),
        (63, "1^1 3^1 6^1", "6^1"),
        (21, "1^1 3^1 6^1", "6^1"),
        (315, "4^1 6^1", "2^1 4^1"),
    ],
)
def test_search_counts_match_table(n, p, np_):
    report = exhaustive_search(_spec(n, p, np_))
    assert (
        report.candidates_tested,
        len(report.solutions),
        len(report.classes),
    ) == BASE_SEARCH_COUNTS[n]


def test_search_at_31():
    report = exhaustive_search(_spec(31, "5^2", "1^1 5^1"))
    assert report.candidates_tested == 60
    assert len(report.solutions) == 12
    assert len(report.classes) == 2
    for row in report.solutions:
        assert verify_cw(row) == 16
        assert multiplier_shift(row, 2) == 0
        sets = row.support
        assert olp_of_set(set(sets), ModulusContext(31, 2)) == Olp.from_string("1^1 5^1 5^2")
    reps = [c.representative for c in report.classes]
    assert are_equivalent(reps[0], reps[1]) is None
    matches = {i for r in (W1, W2) for i, rep in enumerate(reps) if are_equivalent(rep, r)}
    assert matches == {0, 1}


def test_search_at_31_solutions_include_known_rows():
    report = exhaustive_search(_spec(31, "5^2", "1^1 5^1"))
    assert W1 in report.solutions
    assert W2 in report.solutions


def test_search_class_members_partition_solutions():
    report = exhaustive_search(_spec(31, "5^2", "1^1 5^1"))
    members = [m for c in report.classes for m in c.members]
    assert sorted(members, key=lambda r: r.coeffs) == sorted(
        report.solutions, key=lambda r: r.coeffs
    )
    for c in report.classes:
        assert c.representative == canonical_form(c.members[0])
        assert c.size == len(c.members)
        for m in c.members:
            assert are_equivalent(c.representative, m) is not None


def test_search_at_63():
    report = exhaustive_search(_spec(63, "1^1 3^1 6^1", "6^1"))
    assert report.candidates_tested == 144
    assert len(report.solutions) == 8
    assert len(report.classes) == 2


def test_search_at_21():
    report = exhaustive_search(_spec(21, "1^1 3^1 6^1", "6^1"))
    assert report.candidates_tested == 4
    assert len(report.solutions) == 2
    assert len(report.classes) == 1
    assert are_equivalent(report.classes[0].representative, W0_21) is not None


def test_search_infeasible_order_returns_empty():
    # 35 has no orbits of length 5 or 6 under doubling
    report = exhaustive_search(_spec(35, "5^2", "1^1 5^1"))
    assert report.candidates_tested == 0
    assert report.solutions == ()


def test_search_jobs_deterministic():
    a = exhaustive_search(_spec(31, "5^2", "1^1 5^1"), jobs=1)
    b = exhaustive_search(_spec(31, "5^2", "1^1 5^1"), jobs=2)
    assert a == b


def test_classify_groups_by_equivalence():
    rows = [W1, W2, canonical_form(W1)]
    classes = classify(rows)
    assert len(classes) == 2
    sizes = sorted(c.size for c in classes)
    assert sizes == [1, 2]
    assert classify([]) == ()
    with pytest.raises(ValueError, match="mixed orders"):
        classify([W1, W0_21])


def test_classify_up_to_negation():
    assert len(classify([W1, -W1])) == 2
    assert len(classify([W1, -W1], up_to_negation=True)) == 1


def test_base_orders_examples():
    for (p, n), expected in BASE_ORDER_CASES:
        assert base_orders(_pair(p, n)) == list(expected)


def test_base_orders_rejects_large_lengths():
    with pytest.raises(ValueError, match="above 10"):
        base_orders(OlpPair(Olp((11,)), Olp((6,))))


def test_lift_examples():
    r = CirculantRow.from_string(KNOWN_CW_7_4)
    lifted = lift(r, 5)
    assert lifted.n == 35
    assert verify_cw(lifted) == 4
    assert set(lifted.support) == {5 * s for s in r.support}
    assert lift(r, 1) == r
    with pytest.raises(ValueError, match="positive"):
        lift(r, 0)


def test_lift_of_21_class_lands_in_63_search():
    report = exhaustive_search(_spec(63, "1^1 3^1 6^1", "6^1"))
    lifted = lift(W0_21, 3)
    assert lifted in report.solutions
    # and the final class at 63 is genuinely new
    assert are_equivalent(W1_63, lifted) is None


def test_contract_examples():
    base, m = contract(lift(W0_21, 3))
    assert (base, m) == (W0_21, 3)
    base, m = contract(W1)
    assert (base, m) == (W1, 1)
    with pytest.raises(ValueError, match="zero row"):
        contract(CirculantRow.from_string("000"))


@given(
    st.integers(min_value=1, max_value=15).flatmap(
        lambda n: st.lists(
            st.sampled_from((-1, 0, 1)), min_size=n, max_size=n
        ).map(lambda cs: CirculantRow(n, tuple(cs)))
    ),
    st.integers(min_value=1, max_value=5),
)
def test_lift_preserves_weight_and_contracts_back(r, m):
    lifted = lift(r, m)
    assert verify_cw(lifted) == verify_cw(r)
    if any(r.coeffs):
        base, k = contract(lifted)
        assert lift(base, k) == lifted


def test_class_contractible_examples():
    assert class_contractible(lift(W0_21, 3), 3)
    assert class_contractible(canonical_form(lift(W0_21, 3)), 3)
    assert not class_contractible(W1_63, 3)
    assert class_contractible(W1, 1)
    with pytest.raises(ValueError, match="divide"):
        class_contractible(W1, 2)


def test_full_classification_counts():
    assert full_classification(16, 35).count == 0
    res = full_classification(16, 21)
    assert res.count == 1
    assert res.cross_checked
    assert are_equivalent(res.classes[0], W0_21) is not None


def test_full_classification_by_rule_only():
    res = full_classification(16, 651)  # 651 = 3 * 7 * 31 = lcm(21, 93)
    assert res.count == 3
    assert not res.cross_checked
    assert full_classification(16, 1953).count == 4
    reps = list(res.classes)
    assert all(verify_cw(r) == 16 for r in reps)
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            assert are_equivalent(reps[i], reps[j]) is None


def test_full_classification_validates():
    with pytest.raises(ValueError, match="weight 16"):
        full_classification(9, 21)
    with pytest.raises(ValueError, match="odd"):
        full_classification(16, 14)
