import pytest

from steinitz import finring


class LatticeCache:
    """Session-wide cache of brute-force gf lattices.

    The acceptance tests share enumerations (the gf(2,12) lattice alone
    backs four criteria); the ``cache`` dict uses the same (family, p, n)
    keys that verify.run_verify accepts.
    """

    def __init__(self):
        self.cache = {}

    def get(self, p, n):
        key = ("gf", p, n)
        if key not in self.cache:
            ring = finring.make_gf(p, n)
            self.cache[key] = finring.enumerate_subrings(ring)
        return self.cache[key]


@pytest.fixture(scope="session")
def gf_lattices():
    return LatticeCache()
