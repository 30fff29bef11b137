from hypothesis import given
from hypothesis import strategies as st

from stridesaber.hashes import XofStream, sha3_256, sha3_512, shake128


def test_fips202_empty_vectors():
    assert sha3_256(b"").hex() == (
        "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a")
    assert sha3_512(b"").hex() == (
        "a69f73cca23a9ac5c8b567dc185a756e97c982164fe25859e0d1dcc1475c80a6"
        "15b2123af1f5f94c11e3e9402c3ac558f500199d95b6d3e301758586281dcd26")
    assert shake128(b"", 4).hex() == "7f9c2ba4"


def test_lengths_and_determinism():
    assert len(sha3_256(b"x")) == 32
    assert len(sha3_512(b"x")) == 64
    assert sha3_256(b"abc") == sha3_256(b"abc")
    assert sha3_256(b"abc") != sha3_256(b"abd")
    assert shake128(b"s", 100) == shake128(b"s", 100)


@given(st.binary(max_size=64), st.integers(0, 300), st.integers(0, 300))
def test_xof_prefix_and_stream(seed, k, j):
    lo, hi = sorted((k, j))
    assert shake128(seed, hi)[:lo] == shake128(seed, lo)
    xof = XofStream(seed)
    assert xof.squeeze(k) + xof.squeeze(j) == shake128(seed, k + j)
    assert xof.position == k + j
