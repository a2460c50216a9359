import os
import sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from ntet.config import config_from_whites, enumerate_valid  # noqa: E402

# (n, n_w, n_b, number of valid configurations)
SOLUTION_COUNTS = [
    (3, 2, 1, 2), (5, 3, 2, 2), (7, 4, 3, 2), (8, 5, 3, 3), (9, 5, 4, 2),
    (11, 7, 4, 4), (11, 6, 5, 2), (12, 7, 5, 3), (13, 8, 5, 4), (13, 7, 6, 2),
    (14, 9, 5, 5), (15, 8, 7, 2), (16, 9, 7, 3),
    (17, 11, 6, 6), (17, 10, 7, 4), (17, 9, 8, 2), (18, 11, 7, 5),
    (19, 12, 7, 6), (19, 11, 8, 4), (19, 10, 9, 2),
    (20, 13, 7, 7), (20, 11, 9, 3), (21, 13, 8, 6), (21, 11, 10, 2), (22, 13, 9, 5),
    (23, 15, 8, 8), (23, 14, 9, 6), (23, 13, 10, 4), (23, 12, 11, 2), (24, 13, 11, 3),
]

VARIANT_PAIRS = [(12, 7), (17, 11), (17, 10), (17, 9), (19, 12), (19, 11), (19, 10)]

IONIAN = (0, 2, 4, 5, 7, 9, 11)


@pytest.fixture
def ionian():
    return config_from_whites(12, IONIAN)


@pytest.fixture(scope='session')
def valid_cache():
    cache = {}

    def get(n, n_w):
        if (n, n_w) not in cache:
            cache[(n, n_w)] = enumerate_valid(n, n_w)
        return cache[(n, n_w)]
    return get


def brute_valid(n, n_w):
    """All first-key-white bit strings passing Axioms I-III, by exhaustive search."""
    from ntet.config import KeyboardConfig, check_axioms
    from ntet.errors import InvalidConfigError
    found = []
    for mask in range(2 ** (n - 1)):
        bits = tuple([0] + [(mask >> (n - 2 - i)) & 1 for i in range(n - 1)])
        if bits.count(0) != n_w:
            continue
        try:
            c = KeyboardConfig(n, bits)
        except InvalidConfigError:
            continue
        if check_axioms(c).passed:
            found.append(c)
    return found
