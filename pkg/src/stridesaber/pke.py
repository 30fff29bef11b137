"""Saber.PKE: CPA-secure key generation, encryption and decryption.

Byte layouts (little-endian-bit-first packing throughout):

    pk = b (l x 10-bit polys) || seed_A
    ct = b' (l x 10-bit polys) || c_m (4-bit poly)
"""

from dataclasses import dataclass

import numpy as np

from . import codec
from .params import default_saber
from .ring import RingElem, poly_const_add, shift_round
from .sampler import gen_matrix, gen_secret
from .toom import inner_product_lazy, matvec_lazy


def _ensure_len(data, expected, what):
    if len(data) != expected:
        raise ValueError(f"{what} must be {expected} bytes, got {len(data)}")


@dataclass(frozen=True, eq=False)
class PkePublicKey:
    seed_A: bytes
    b: list

    def to_bytes(self, params=None) -> bytes:
        params = params or default_saber()
        return codec.pack_vec(self.b, params.eps_p) + bytes(self.seed_A)

    @classmethod
    def from_bytes(cls, data: bytes, params=None):
        params = params or default_saber()
        _ensure_len(data, params.pk_bytes, "public key")
        split = params.l * params.poly_p_bytes
        b = codec.unpack_vec(data[:split], params.eps_p, params.l, params.n)
        return cls(bytes(data[split:]), b)

    def __eq__(self, other):
        return isinstance(other, PkePublicKey) and self.to_bytes() == other.to_bytes()


@dataclass(frozen=True, eq=False)
class PkeCiphertext:
    c_m: RingElem
    b_prime: list

    def to_bytes(self, params=None) -> bytes:
        params = params or default_saber()
        return (codec.pack_vec(self.b_prime, params.eps_p)
                + codec.pack_bytes(self.c_m, params.eps_T))

    @classmethod
    def from_bytes(cls, data: bytes, params=None):
        params = params or default_saber()
        _ensure_len(data, params.ct_bytes, "ciphertext")
        split = params.l * params.poly_p_bytes
        b_prime = codec.unpack_vec(data[:split], params.eps_p, params.l, params.n)
        c_m = codec.unpack_bytes(data[split:], params.eps_T, params.n)
        return cls(c_m, b_prime)

    def __eq__(self, other):
        return isinstance(other, PkeCiphertext) and self.to_bytes() == other.to_bytes()


def round_matvec(A, s, transpose, params=None):
    """AddRound over a matrix-vector product: ((A s + h1) mod q) >> (eq - ep)."""
    params = params or default_saber()
    prods = matvec_lazy(A, s, transpose=transpose, mod_bits=params.eps_q)
    return [shift_round(poly_const_add(x, params.h1_coeff), params.eps_q, params.eps_p)
            for x in prods]


def keygen_from(A, s, seed_A, params=None):
    params = params or default_saber()
    return PkePublicKey(bytes(seed_A), round_matvec(A, s, True, params))


def pke_keygen(seed_A: bytes, r: bytes, params=None):
    params = params or default_saber()
    A = gen_matrix(seed_A, params)
    s = gen_secret(r, params)
    return keygen_from(A, s, seed_A, params), s


def add_pack(v_prime: RingElem, m: RingElem, params=None) -> RingElem:
    """c_m = (v' + h1 - 2^(ep-1) m mod p) >> (ep - eT)."""
    params = params or default_saber()
    ep = params.eps_p
    c = (v_prime.coeffs.astype(np.int64) + params.h1_coeff
         - (m.coeffs.astype(np.int64) << (ep - 1)))
    return shift_round(RingElem(c, ep), ep, params.eps_T)


def unpack_message(v: RingElem, c_m: RingElem, params=None) -> RingElem:
    """m' = ((v - 2^(ep-eT) c_m + h2) mod p) >> (ep - 1)."""
    params = params or default_saber()
    ep = params.eps_p
    c = (v.coeffs.astype(np.int64)
         - (c_m.coeffs.astype(np.int64) << (ep - params.eps_T))
         + params.h2_coeff)
    return shift_round(RingElem(c, ep), ep, 1)


def enc_from(A, pk: PkePublicKey, m: bytes, s_prime, params=None) -> PkeCiphertext:
    params = params or default_saber()
    _ensure_len(m, params.msg_bytes, "message")
    b_prime = round_matvec(A, s_prime, False, params)
    sp = [x.reduce(params.eps_p) for x in s_prime]
    v_prime = inner_product_lazy(pk.b, sp, params.eps_p)
    c_m = add_pack(v_prime, codec.msg_to_poly(m), params)
    return PkeCiphertext(c_m, b_prime)


def pke_enc(pk: PkePublicKey, m: bytes, r: bytes, params=None) -> PkeCiphertext:
    params = params or default_saber()
    if isinstance(pk, (bytes, bytearray)):
        pk = PkePublicKey.from_bytes(pk, params)
    _ensure_len(pk.seed_A, params.seed_bytes, "matrix seed")
    A = gen_matrix(pk.seed_A, params)
    return enc_from(A, pk, m, gen_secret(r, params), params)


def pke_dec(s, ct: PkeCiphertext, params=None) -> bytes:
    params = params or default_saber()
    if isinstance(ct, (bytes, bytearray)):
        ct = PkeCiphertext.from_bytes(ct, params)
    sp = [x.reduce(params.eps_p) for x in s]
    v = inner_product_lazy(ct.b_prime, sp, params.eps_p)
    return codec.poly_to_msg(unpack_message(v, ct.c_m, params))
