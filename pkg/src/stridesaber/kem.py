"""Saber.KEM: Fujisaki-Okamoto transform over Saber.PKE.

Conventions fixed by this package:

* ``encaps`` hashes caller entropy with SHA3-256 before using it as ``m``.
* G's 64-byte output splits as ``K_hat = G[:32]``, ``r = G[32:]``.
* sk bytes = packed s (13-bit) || pk || pkh || z.

The library never draws randomness itself; callers pass entropy in.
"""

from dataclasses import dataclass

from . import codec
from .hashes import sha3_256, sha3_512
from .params import default_saber
from .pke import PkeCiphertext, PkePublicKey, pke_dec, pke_enc, pke_keygen

KEYGEN_ENTROPY_BYTES = 96


class OpCounter:
    """Tallies primitive byte operations for the constant-time contract."""

    def __init__(self):
        self.counts = {}

    def tick(self, op, k=1):
        self.counts[op] = self.counts.get(op, 0) + k

    @property
    def total(self):
        return sum(self.counts.values())


def verify(a: bytes, b: bytes, counter: OpCounter | None = None) -> int:
    """Return 0 iff ``a == b``; every byte is examined."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    acc = 0
    for x, y in zip(a, b):
        acc |= x ^ y
        if counter is not None:
            counter.tick("xor")
            counter.tick("or")
    # collapse to 0/1 without branching on acc
    return ((-acc) >> 63) & 1


def cmov(dst: bytes, src: bytes, flag: int, counter: OpCounter | None = None) -> bytes:
    """Select ``src`` when ``flag`` is nonzero, else ``dst``, via masking."""
    if len(dst) != len(src):
        raise ValueError(f"length mismatch: {len(dst)} vs {len(src)}")
    f = ((-abs(flag)) >> 63) & 1
    m = (-f) & 0xFF
    out = bytearray(len(dst))
    for i, (d, s) in enumerate(zip(dst, src)):
        out[i] = d ^ (m & (d ^ s))
        if counter is not None:
            counter.tick("xor", 2)
            counter.tick("and")
    return bytes(out)


@dataclass(frozen=True, eq=False)
class KemSecretKey:
    z: bytes
    pkh: bytes
    pk: PkePublicKey
    s: list

    def to_bytes(self, params=None) -> bytes:
        params = params or default_saber()
        return codec.pack_secret_vec(self.s) + self.pk.to_bytes(params) + self.pkh + self.z

    @classmethod
    def from_bytes(cls, data: bytes, params=None):
        params = params or default_saber()
        if len(data) != params.kem_sk_bytes:
            raise ValueError(
                f"secret key must be {params.kem_sk_bytes} bytes, got {len(data)}")
        i = params.indcpa_sk_bytes
        j = i + params.pk_bytes
        s = codec.unpack_secret_vec(data[:i], params.l)
        pk = PkePublicKey.from_bytes(data[i:j], params)
        return cls(bytes(data[j + 32:j + 64]), bytes(data[j:j + 32]), pk, s)

    def __eq__(self, other):
        return isinstance(other, KemSecretKey) and self.to_bytes() == other.to_bytes()


def kem_keygen(entropy: bytes, params=None):
    """``entropy`` = seed_A || r || z (96 bytes)."""
    params = params or default_saber()
    if len(entropy) < KEYGEN_ENTROPY_BYTES:
        raise ValueError(f"need {KEYGEN_ENTROPY_BYTES} bytes of entropy, got {len(entropy)}")
    seed_A, r, z = entropy[:32], entropy[32:64], entropy[64:96]
    pk, s = pke_keygen(seed_A, r, params)
    pkh = sha3_256(pk.to_bytes(params))
    return pk, KemSecretKey(bytes(z), pkh, pk, s)


def _as_pk(pk, params):
    return PkePublicKey.from_bytes(pk, params) if isinstance(pk, (bytes, bytearray)) else pk


def _as_ct(ct, params):
    if isinstance(ct, (bytes, bytearray)):
        return PkeCiphertext.from_bytes(ct, params)
    return ct


def encaps(pk, m_entropy: bytes, params=None):
    params = params or default_saber()
    pk = _as_pk(pk, params)
    if len(m_entropy) != 32:
        raise ValueError(f"encapsulation entropy must be 32 bytes, got {len(m_entropy)}")
    m = sha3_256(m_entropy)
    pkh = sha3_256(pk.to_bytes(params))
    g = sha3_512(pkh + m)
    k_hat, r = g[:32], g[32:]
    ct = pke_enc(pk, m, r, params)
    key = sha3_256(sha3_256(ct.to_bytes(params)) + k_hat)
    return ct, key


def decaps(sk: KemSecretKey, ct, params=None) -> bytes:
    """Always returns a key; invalid ciphertexts get the z-derived one."""
    params = params or default_saber()
    if isinstance(sk, (bytes, bytearray)):
        sk = KemSecretKey.from_bytes(sk, params)
    ct = _as_ct(ct, params)
    c = ct.to_bytes(params)
    m = pke_dec(sk.s, ct, params)
    g = sha3_512(sk.pkh + m)
    k_hat, r = g[:32], g[32:]
    c_prime = pke_enc(sk.pk, m, r, params).to_bytes(params)
    fail = verify(c, c_prime)
    k_sel = cmov(k_hat, sk.z, fail)
    return sha3_256(sha3_256(c) + k_sel)
