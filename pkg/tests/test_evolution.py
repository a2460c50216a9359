from decimal import Decimal
import math

import pytest

from ntet.errors import NotCoprimeError, UndefinedInputError
from ntet.evolution import (
    W_0,
    attractor_constants,
    auxiliary_U,
    auxiliary_V,
    closed_form_U,
    closed_form_V,
    closed_form_W,
    constants_summary,
    convergence_report,
    evolution_chain,
    evolution_table,
    evolve_pair,
    ratio_row,
    round_half_up,
    w_sequence,
)
from ntet.render import format_ratio

EVOLUTION_ROWS = [
    (1, 2, 3, 1), (2, 5, 3, 2), (3, 7, 7, 4), (4, 12, 8, 5), (5, 19, 18, 11),
    (6, 31, 21, 13), (7, 50, 47, 29), (8, 81, 55, 34), (9, 131, 123, 76), (10, 212, 144, 89),
]

# (n, n_w, dominant, ratio)
DOMINANT_RATIOS = [
    (12, 7, 7, '1.498'), (13, 8, 5, '1.306'), (13, 7, 2, '1.113'), (14, 9, 11, '1.724'),
    (15, 8, 2, '1.097'), (16, 9, 9, '1.477'),
    (17, 11, 14, '1.770'), (17, 10, 12, '1.631'), (17, 9, 2, '1.085'),
    (18, 11, 5, '1.212'), (19, 12, 8, '1.339'), (19, 11, 7, '1.291'), (19, 10, 2, '1.076'),
]

EVOLVED_RATIOS = ['1.346', '1.498', '1.339', '1.496', '1.338', '1.495', '1.338', '1.495', '1.338']


@pytest.mark.parametrize('pair, expected', [((7, 5), (12, 7)), ((12, 7), (19, 12)), ((1, 1), (2, 1))])
def test_evolve_pair(pair, expected):
    assert evolve_pair(*pair) == expected


def test_evolve_pair_rejects_zero():
    with pytest.raises(UndefinedInputError):
        evolve_pair(0, 1)


def test_evolution_table_rows():
    rows = evolution_table(10)
    assert [(r.k, r.W, r.V, r.U) for r in rows] == EVOLUTION_ROWS
    assert evolution_table(1)[0].to_dict() == {'k': 1, 'W': 2, 'V': 3, 'U': 1}


def test_evolution_identities():
    rows = evolution_table(20)
    for row in rows:
        assert row.W * row.V - row.U * row.W_next == 1
        assert math.gcd(row.W, row.W_next) == 1
        assert 0 < row.V < row.W_next
        assert 0 < row.U < row.W_next
    assert w_sequence(5) == [2, 5, 7, 12, 19]


def test_evolution_table_rejects_empty():
    with pytest.raises(UndefinedInputError):
        evolution_table(0)


def test_closed_forms_match_integers():
    assert abs(closed_form_W(0) - W_0) < 1e-9
    assert abs(closed_form_W(4) - 12) < 1e-9
    assert abs(closed_form_V(5) - 18) < 1e-9
    assert abs(closed_form_V(10) - 144) < 1e-9
    for row in evolution_table(20):
        for value, exact in ((closed_form_W(row.k), row.W),
                             (closed_form_V(row.k), row.V),
                             (closed_form_U(row.k), row.U)):
            assert abs(value - exact) < 1e-6
            assert round(value) == exact


def test_auxiliary_recurrences_agree():
    for row in evolution_table(20):
        assert auxiliary_V(row.k) == row.V
        assert auxiliary_U(row.k) == row.U


def test_attractor_constants():
    fifth, fourth = attractor_constants()
    assert abs(fifth - 1.49503444953) < 1e-11
    assert abs(fourth - 1.33776181588) < 1e-11
    assert abs(fifth * fourth - 2) < 1e-12
    assert constants_summary()['product'] == 2.0


@pytest.mark.parametrize('n, n_w, dominant, ratio', DOMINANT_RATIOS)
def test_ratio_rows(n, n_w, dominant, ratio):
    row = ratio_row(n, n_w)
    assert row.dominant == dominant
    assert (row.dominant * n_w) % n == 1
    assert 1 < row.ratio < 2
    assert format_ratio(row.ratio) == ratio


def test_ratio_row_evolved_system():
    row = ratio_row(31, 19)
    assert (row.dominant, format_ratio(row.ratio)) == (18, '1.496')
    assert row.to_dict()['ratio'] == 1.496


def test_ratio_row_not_coprime():
    with pytest.raises(NotCoprimeError):
        ratio_row(12, 8)


def test_evolution_chain():
    rows = evolution_chain(5, 2, 9)
    assert [(r.n, r.n_w, r.n_b) for r in rows[:3]] == [(7, 5, 2), (12, 7, 5), (19, 12, 7)]
    assert [r.dominant for r in rows[:4]] == [3, 7, 8, 18]
    assert [format_ratio(r.ratio) for r in rows] == EVOLVED_RATIOS


def test_convergence_alternates_and_shrinks():
    report = convergence_report(evolution_table(10))
    assert [r.attractor for r in report[:4]] == ['fifth', 'fourth', 'fifth', 'fourth']
    for parity in (0, 1):
        branch = [r.deviation for r in report if r.k % 2 == parity]
        assert all(a > b for a, b in zip(branch, branch[1:]))
    assert all(r.deviation < 1e-3 for r in report if r.k >= 5)


def test_convergence_needs_two_rows():
    with pytest.raises(UndefinedInputError):
        convergence_report(evolution_table(1))


def test_round_half_up():
    assert round_half_up(1.4985) == Decimal('1.499')
    assert round_half_up(0.0000125, 6) == Decimal('0.000013')
