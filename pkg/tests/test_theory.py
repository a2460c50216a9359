import pytest
from hypothesis import given, settings, strategies as st

from conftest import IONIAN, SOLUTION_COUNTS, VARIANT_PAIRS
from ntet.config import config_from_whites, enumerate_valid, is_maximally_even
from ntet.errors import NoGeneratorError, NotCoprimeError, NTETError, VariantNotFoundError, VariantOutOfRangeError
from ntet.signature import key_signature
from ntet.theory import (
    binary_value,
    canonical_generator,
    circle,
    degrees,
    extended_gen_seq,
    gen_seq,
    get_variant,
    inversion,
    prime_axiom2_witness,
    prime_form,
    reverse_generator,
    structural_report,
    variant_row,
    transposition_equal,
    variant_label,
    window_shift,
)

# descending leading tone s0 of variants 1, 2, ... and the generator step k
VARIANT_GENERATORS = {
    (12, 7): (7, [10, 5, 0]),
    (17, 11): (14, [15, 12, 9, 6, 3, 0]),
    (17, 10): (12, [15, 10, 5, 0]),
    (17, 9): (2, [15, 0]),
    (19, 12): (8, [17, 6, 14, 3, 11, 0]),
    (19, 11): (7, [17, 5, 12, 0]),
    (19, 10): (2, [17, 0]),
}

NINETEEN_FIRST_VARIANT = (0, 2, 3, 5, 6, 8, 10, 11, 13, 14, 16, 17)

SOLUTION_PAIRS = [(r[0], r[1]) for r in SOLUTION_COUNTS]


def test_gen_seq_examples():
    assert gen_seq(5, 7, 7, 12).elements == (5, 0, 7, 2, 9, 4, 11)
    assert gen_seq(4, 7, 21, 12).elements == (
        4, 11, 6, 1, 8, 3, 10, 5, 0, 7, 2, 9, 4, 11, 6, 1, 8, 3, 10, 5, 0)
    with pytest.raises(NTETError):
        gen_seq(0, 7, 0, 12)


def test_canonical_generator_ionian(ionian):
    g = canonical_generator(ionian)
    assert g.as_pair() == (5, 7)
    assert reverse_generator(ionian).as_pair() == (11, 5)
    assert extended_gen_seq(ionian).elements == gen_seq(4, 7, 21, 12).elements


def test_reverse_generator_reads_same_set(ionian):
    r = reverse_generator(ionian)
    assert sorted(gen_seq(r.s0, r.k, 7, 12).elements) == list(IONIAN)


def test_window_shift_adds_one_sharp(ionian):
    shifted = window_shift(ionian, 5)
    assert shifted == (0, 2, 4, 6, 7, 9, 11)
    assert len(set(shifted) - set(IONIAN)) == 1
    assert key_signature(ionian, 7).norm == 1


@pytest.mark.parametrize('n, n_w', SOLUTION_PAIRS)
def test_generator_pair_reads_whites_backwards(n, n_w, valid_cache):
    for c in valid_cache(n, n_w):
        g = canonical_generator(c)
        r = reverse_generator(c)
        forward = gen_seq(g.s0, g.k, n_w, n).elements
        assert r.k == n - g.k
        assert gen_seq(r.s0, r.k, n_w, n).elements == forward[::-1]
        assert sorted(forward) == list(c.white_set)


@pytest.mark.parametrize('n, n_w', SOLUTION_PAIRS)
def test_window_shift_changes_one_element(n, n_w, valid_cache):
    for c in valid_cache(n, n_w):
        k = canonical_generator(c).k
        for s in range(n):
            window = set(gen_seq(s, k, n_w, n).elements)
            shifted = set(window_shift(c, s))
            assert shifted - window == {(s + 1) % n}
            assert window - shifted == {s % n}


@pytest.mark.parametrize('n, n_w', SOLUTION_PAIRS)
def test_only_leading_tones_leave_the_scale(n, n_w, valid_cache):
    for c in valid_cache(n, n_w):
        g = canonical_generator(c)
        seq = gen_seq(g.s0, g.k, n_w, n).elements
        whites = set(c.white_set)
        assert (seq[-1] + g.k) % n not in whites
        assert all((x + g.k) % n in whites for x in seq[:-1])
        assert (seq[0] - g.k) % n not in whites
        assert all((x - g.k) % n in whites for x in seq[1:])
        d = degrees(c)
        assert (d.ascending_leading, d.descending_leading) == (seq[-1], seq[0])


def test_canonical_generator_errors():
    with pytest.raises(NotCoprimeError):
        canonical_generator(config_from_whites(12, (0, 2, 4, 6, 8, 10)))
    with pytest.raises(NoGeneratorError):
        canonical_generator(config_from_whites(12, (0, 2, 3, 5, 7, 9, 11)))


@pytest.mark.parametrize('pair', sorted(VARIANT_GENERATORS))
def test_variant_generators(pair):
    n, n_w = pair
    k, starts = VARIANT_GENERATORS[pair]
    variants = enumerate_valid(n, n_w)
    assert [canonical_generator(c).as_pair() for c in variants] == [(s0, k) for s0 in starts]


def test_variant_white_sets():
    assert [c.white_set for c in enumerate_valid(12, 7)] == [
        (0, 2, 4, 5, 7, 9, 10),
        (0, 2, 4, 5, 7, 9, 11),
        (0, 2, 4, 6, 7, 9, 11),
    ]
    nineteen = enumerate_valid(19, 12)
    assert nineteen[0].white_set == NINETEEN_FIRST_VARIANT
    assert nineteen[1].white_set == (0, 2, 3, 5, 6, 8, 10, 11, 13, 14, 16, 18)


@pytest.mark.parametrize('n, n_w, variant, expected', [
    (12, 7, 2, (7, 5, 11, 5)),
    (19, 12, 2, (8, 11, 18, 6)),
    (17, 9, 1, (2, 15, 14, 15)),
])
def test_degrees(n, n_w, variant, expected):
    d = degrees(get_variant(n, n_w, variant))
    assert d.tonic == 0
    assert (d.dominant, d.subdominant, d.ascending_leading, d.descending_leading) == expected


def test_circle_ionian(ionian):
    entries = circle(ionian)
    assert [e.tonic for e in entries] == [0, 7, 2, 9, 4, 11, 6, 1, 8, 3, 10, 5]
    assert [e.norm for e in entries] == [0, 1, 2, 3, 4, 5, 6, -5, -4, -3, -2, -1]


@pytest.mark.parametrize('n, n_w', VARIANT_PAIRS)
def test_circle_steps_add_one_sharp(n, n_w, valid_cache):
    for c in valid_cache(n, n_w):
        values = [e.norm for e in circle(c)]
        steps = [values[(i + 1) % n] - values[i] for i in range(n)]
        assert steps.count(1) == n - 1
        assert steps.count(-(n - 1)) == 1


def test_prime_form_diatonic():
    assert prime_form(IONIAN, 12) == (0, 1, 3, 5, 6, 8, 10)
    assert prime_form((0,), 12) == (0,)
    with pytest.raises(NTETError):
        prime_form((), 12)


def _forte_oracle(pcs, n):
    best = None
    for sign in (1, -1):
        image = sorted({(sign * x) % n for x in pcs})
        for a in image:
            order = sorted((x - a) % n for x in image)
            key = (order[-1],) + tuple(order[j] for j in range(len(order) - 2, 0, -1)) + tuple(order)
            if best is None or key < best[0]:
                best = (key, tuple(order))
    return best[1]


pitch_sets = st.integers(min_value=2, max_value=24).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(min_value=0, max_value=n - 1), min_size=1)))


@settings(max_examples=200)
@given(pitch_sets, st.integers(min_value=0, max_value=23))
def test_prime_form_invariance(case, t):
    n, pcs = case
    pf = prime_form(pcs, n)
    assert pf == _forte_oracle(pcs, n)
    assert prime_form({(x + t) % n for x in pcs}, n) == pf
    assert prime_form(inversion(pcs, n), n) == pf
    assert pf[0] == 0


@given(pitch_sets)
def test_inversion_involution(case):
    n, pcs = case
    assert inversion(inversion(pcs, n), n) == tuple(sorted(pcs))


def test_transposition_equal():
    assert transposition_equal((0, 4, 7), (2, 6, 9), 12)
    assert not transposition_equal((0, 4, 7), (0, 3, 7), 12)


def test_variant_labels():
    variants = enumerate_valid(12, 7)
    assert [binary_value(c) for c in variants] == [1321, 1322, 1354]
    label = variant_label(variants[1])
    assert (label.index, label.binary_value) == (2, 1322)
    with pytest.raises(VariantNotFoundError):
        variant_label(config_from_whites(12, (0, 2, 3, 5, 7, 9, 11)))


def test_get_variant_errors():
    with pytest.raises(VariantOutOfRangeError):
        get_variant(12, 7, 4)
    with pytest.raises(VariantNotFoundError):
        get_variant(10, 6, 1)


def test_variant_row(ionian):
    row = variant_row(ionian)
    assert row['variant'] == 2
    assert row['bits'] == '010100101010'
    assert row['white_set'] == list(IONIAN)
    assert (row['s0'], row['k']) == (5, 7)
    assert (row['dominant'], row['subdominant']) == (7, 5)


@pytest.mark.parametrize('n, n_w', VARIANT_PAIRS + [(3, 2), (2, 1), (8, 5), (14, 9)])
def test_structural_properties(n, n_w):
    report = structural_report(n, n_w)
    assert report.holds, report.properties
    assert report.variants[-1].s0 == 0
    assert report.to_dict()['holds'] is True


def test_structural_report_nineteen():
    report = structural_report(19, 12)
    assert report.properties['variant2_ascending_is_last']
    assert report.variants[1].ascending_leading == 18
    assert report.variants[0].window == (-6, 12)
    assert report.variants[-1].window == (-11, 7)


def test_structural_report_without_solutions():
    with pytest.raises(VariantNotFoundError):
        structural_report(10, 6)


def test_prime_witness_diatonic():
    w = prime_axiom2_witness(12, 7)
    assert w.prime_form == (0, 1, 3, 5, 6, 8, 10)
    assert w.tonic == 10
    assert w.offsets == (1, 2, 1, 1, 2, 2, 1)
    assert w.index == 1
    assert not w.among_variants


def test_prime_witness_needs_three_whites():
    assert prime_form(enumerate_valid(3, 2)[0].white_set, 3) == (0, 1)
    with pytest.raises(NTETError):
        prime_axiom2_witness(3, 2)


@pytest.mark.parametrize('n, n_w', [(r[0], r[1]) for r in SOLUTION_COUNTS if r[1] >= 3])
def test_prime_form_properties(n, n_w, valid_cache):
    variants = valid_cache(n, n_w)
    pf = prime_form(variants[0].white_set, n)
    assert pf[:3] == (0, 1, 3)
    assert all(c.white_set != pf for c in variants)
    w = prime_axiom2_witness(n, n_w)
    assert 2 in w.offsets
    assert w.offsets[w.index] == 2
    assert not w.among_variants
    assert is_maximally_even(pf, n)
