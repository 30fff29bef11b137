"""Secret sampling and public-matrix expansion."""

import numpy as np

from .codec import unpack_vec
from .hashes import XofStream
from .params import default_saber
from .ring import RingElem

_POPCOUNT4 = np.array([bin(x).count("1") for x in range(16)], dtype=np.int64)


def _require_seed(seed, name):
    if len(seed) != 32:
        raise ValueError(f"{name} must be 32 bytes, got {len(seed)}")


def cbd_from_bytes(buf: bytes, params=None) -> RingElem:
    """One secret polynomial: HW(low nibble) - HW(high nibble) per byte."""
    params = params or default_saber()
    if len(buf) != params.cbd_bytes:
        raise ValueError(f"expected {params.cbd_bytes} bytes, got {len(buf)}")
    b = np.frombuffer(bytes(buf), dtype=np.uint8)
    coeffs = _POPCOUNT4[b & 0x0F] - _POPCOUNT4[b >> 4]
    return RingElem(coeffs, 16)


def gen_secret(r: bytes, params=None):
    params = params or default_saber()
    _require_seed(r, "noise seed")
    xof = XofStream(r)
    return [cbd_from_bytes(xof.squeeze(params.cbd_bytes), params)
            for _ in range(params.l)]


def gen_matrix(seed: bytes, params=None):
    """Row-major l x l matrix of 13-bit polynomials from one XOF stream."""
    params = params or default_saber()
    _require_seed(seed, "matrix seed")
    buf = XofStream(seed).squeeze(params.matrix_bytes)
    polys = unpack_vec(buf, params.eps_q, params.l * params.l, params.n)
    return [polys[i * params.l:(i + 1) * params.l] for i in range(params.l)]
