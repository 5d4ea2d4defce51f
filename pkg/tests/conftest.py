import pytest

from signedspread.families import gen_random_connected


def _corpus(count, seed0, n_lo, n_hi):
    out = []
    for i in range(count):
        n = n_lo + i % (n_hi - n_lo + 1)
        out.append(gen_random_connected(seed0 + i, n, 0.5, 0.5))
    return out


@pytest.fixture(scope="session")
def corpus50():
    """Fixed seeded corpus: 50 random connected signed graphs, n <= 7."""
    return _corpus(50, 1000, 3, 7)


@pytest.fixture(scope="session")
def corpus25():
    """Fixed seeded corpus: 25 random connected signed graphs, n <= 8."""
    return _corpus(25, 2000, 3, 8)


@pytest.fixture(scope="session")
def corpus_bounds():
    """Connected corpus with max degree >= 3, n <= 10, for bound checks."""
    out = []
    seed = 3000
    while len(out) < 20 and seed < 3200:
        n = 5 + seed % 6  # 5..10
        g = gen_random_connected(seed, n, 0.5, 0.5)
        seed += 1
        if g.max_degree() >= 3:
            out.append(g)
    return out
