import hashlib

import pytest

from stridesaber import kem
from stridesaber.kem import OpCounter, cmov, verify
from stridesaber.selftest import (FIXTURE_ENCAPS_ENTROPY, FIXTURE_KEYGEN_ENTROPY,
                                  FIXTURES)


def h(x):
    return hashlib.sha3_256(x).digest()


def test_keygen_deterministic_and_pkh(rng):
    ent = rng.bytes(96)
    pk1, sk1 = kem.kem_keygen(ent)
    pk2, sk2 = kem.kem_keygen(ent)
    assert pk1 == pk2 and sk1 == sk2
    assert sk1.pkh == h(pk1.to_bytes())
    assert sk1.z == ent[64:96]


def test_sk_roundtrip(rng):
    _, sk = kem.kem_keygen(rng.bytes(96))
    data = sk.to_bytes()
    assert len(data) == 2304
    assert kem.KemSecretKey.from_bytes(data).to_bytes() == data


def test_insufficient_entropy():
    with pytest.raises(ValueError):
        kem.kem_keygen(bytes(95))
    pk, _ = kem.kem_keygen(bytes(96))
    with pytest.raises(ValueError):
        kem.encaps(pk, bytes(31))


def test_fo_roundtrip(rng):
    pk, sk = kem.kem_keygen(rng.bytes(96))
    for _ in range(50):
        ct, key = kem.encaps(pk, rng.bytes(32))
        assert len(key) == 32
        assert kem.decaps(sk, ct) == key
        assert kem.decaps(sk, ct.to_bytes()) == key


def test_encaps_trace(rng):
    # independent recomputation of the encapsulation key schedule
    pk, _ = kem.kem_keygen(rng.bytes(96))
    ent = rng.bytes(32)
    ct, key = kem.encaps(pk, ent)
    m = h(ent)
    g = hashlib.sha3_512(h(pk.to_bytes()) + m).digest()
    assert key == h(h(ct.to_bytes()) + g[:32])


def test_distinct_entropy_distinct_ciphertexts(rng):
    pk, _ = kem.kem_keygen(rng.bytes(96))
    seen = {kem.encaps(pk, rng.bytes(32))[0].to_bytes() for _ in range(200)}
    assert len(seen) == 200


def test_fixed_entropy_fixture():
    pk, sk = kem.kem_keygen(FIXTURE_KEYGEN_ENTROPY)
    ct, key = kem.encaps(pk, FIXTURE_ENCAPS_ENTROPY)
    assert h(ct.to_bytes()).hex() == FIXTURES["ct"]
    assert key.hex() == FIXTURES["key"]


def test_tampered_ciphertext_rejected_implicitly(rng):
    pk, sk = kem.kem_keygen(rng.bytes(96))
    ct, key = kem.encaps(pk, rng.bytes(32))
    bad = bytearray(ct.to_bytes())
    bad[-1] ^= 0x80
    k1 = kem.decaps(sk, bytes(bad))
    assert k1 != key
    assert k1 == h(h(bytes(bad)) + sk.z)
    assert kem.decaps(sk, bytes(bad)) == k1


def test_decaps_structural_errors(rng):
    _, sk = kem.kem_keygen(rng.bytes(96))
    with pytest.raises(ValueError):
        kem.decaps(sk, bytes(1000))
    with pytest.raises(ValueError):
        kem.decaps(bytes(10), bytes(1088))


def test_verify():
    a = bytes(range(64))
    assert verify(a, a) == 0
    assert verify(a, b"\xff" + a[1:]) == 1
    assert verify(a, a[:-1] + b"\x00") == 1
    with pytest.raises(ValueError):
        verify(a, a[:-1])


def test_verify_counts_input_independent():
    a = bytes(100)
    counts = []
    for b in (bytes(100), b"\x01" + bytes(99), bytes(99) + b"\x01", b"\xff" * 100):
        c = OpCounter()
        verify(a, b, c)
        counts.append(c.counts)
    assert all(x == counts[0] for x in counts)


def test_cmov(rng):
    d, s = rng.bytes(32), rng.bytes(32)
    assert cmov(d, s, 0) == d
    assert cmov(d, s, 1) == s
    assert cmov(d, s, 7) == s
    for _ in range(50):
        d, s, f = rng.bytes(32), rng.bytes(32), int(rng.integers(0, 2))
        lhs = bytes(x ^ y for x, y in zip(cmov(d, s, f), cmov(s, d, f)))
        assert lhs == bytes(x ^ y for x, y in zip(d, s))
    with pytest.raises(ValueError):
        cmov(d, s[:-1], 0)


def test_cmov_counts_flag_independent(rng):
    d, s = rng.bytes(32), rng.bytes(32)
    c0, c1 = OpCounter(), OpCounter()
    cmov(d, s, 0, c0)
    cmov(d, s, 1, c1)
    assert c0.counts == c1.counts and c0.total > 0
