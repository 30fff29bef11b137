import numpy as np
import pytest

from stridesaber.ring import RingElem

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def rand_poly(rng, bits=13, n=256):
    return RingElem(rng.integers(0, 1 << bits, n), bits)


def rand_secret(rng, n=256):
    return RingElem(rng.integers(-4, 5, n), 16)


def kronecker_negacyclic(a, b, mod_bits):
    """Independent oracle: multiply via big-integer Kronecker substitution.

    Inputs are signed integer sequences; the product of the two packed
    integers is unpacked digit by digit, then folded mod x^n + 1.
    """
    n = len(a)
    shift = 64
    off = 1 << (shift - 2)

    def pack(cs):
        return sum(int(c) << (shift * i) for i, c in enumerate(cs))

    prod = pack(a) * pack(b)
    digits = []
    for _ in range(2 * n - 1):
        d = (prod + off) & ((1 << shift) - 1)
        d -= off
        digits.append(d)
        prod = (prod - d) >> shift
    m = 1 << mod_bits
    return [(digits[k] - (digits[k + n] if k + n < 2 * n - 1 else 0)) % m
            for k in range(n)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
