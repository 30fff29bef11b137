"""Little-endian-bit-first packing of polynomial coefficients.

Coefficient ``i`` of width ``w`` occupies stream bits ``[i*w, (i+1)*w)``;
stream bit ``j`` lives in byte ``j // 8`` at bit ``j % 8``. These layouts are
the on-disk format of keys and ciphertexts.
"""

from dataclasses import dataclass

import numpy as np

from .ring import RingElem

WIDTHS = (1, 4, 10, 13, 16)


@dataclass(frozen=True)
class PackedPoly:
    data: bytes
    width: int
    n: int = 256

    def __post_init__(self):
        if self.width not in WIDTHS:
            raise ValueError(f"unsupported width {self.width}")
        expected = self.n * self.width // 8
        if len(self.data) != expected:
            raise ValueError(
                f"packed length {len(self.data)} != {expected} for width {self.width}")


def pack(a, width: int) -> PackedPoly:
    c = np.asarray(a.coeffs if isinstance(a, RingElem) else a, dtype=np.int64)
    if width not in WIDTHS:
        raise ValueError(f"unsupported width {width}")
    if c.size and (c.min() < 0 or c.max() >= (1 << width)):
        raise ValueError(f"coefficients not normalized to {width} bits")
    bits = (c[:, None] >> np.arange(width)) & 1
    data = np.packbits(bits.astype(np.uint8).reshape(-1), bitorder="little")
    return PackedPoly(data.tobytes(), width, len(c))


def unpack(p: PackedPoly) -> RingElem:
    bits = np.unpackbits(np.frombuffer(p.data, dtype=np.uint8), bitorder="little")
    bits = bits.reshape(p.n, p.width).astype(np.int64)
    coeffs = (bits << np.arange(p.width)).sum(axis=1)
    return RingElem(coeffs, min(p.width, 16))


def pack_bytes(a, width: int) -> bytes:
    return pack(a, width).data


def unpack_bytes(data: bytes, width: int, n: int = 256) -> RingElem:
    return unpack(PackedPoly(bytes(data), width, n))


def pack_vec(polys, width: int) -> bytes:
    return b"".join(pack_bytes(x, width) for x in polys)


def unpack_vec(data: bytes, width: int, count: int, n: int = 256):
    step = n * width // 8
    if len(data) != count * step:
        raise ValueError(f"expected {count * step} bytes, got {len(data)}")
    return [unpack_bytes(data[i * step:(i + 1) * step], width, n) for i in range(count)]


def pack_secret_vec(s) -> bytes:
    """Secrets are stored as their 13-bit two's-complement residues."""
    return pack_vec([x.reduce(13) for x in s], 13)


def unpack_secret_vec(data: bytes, count: int = 3):
    """Inverse of :func:`pack_secret_vec`, re-sign-extending into the carrier."""
    return [RingElem(x.signed(), 16) for x in unpack_vec(data, 13, count)]


def bs2polvecp(data: bytes, count: int = 3, eps_p: int = 10):
    """Repack a 13-bit secret vector as polynomials mod p."""
    return [x.reduce(eps_p) for x in unpack_vec(data, 13, count)]


def msg_to_poly(m: bytes) -> RingElem:
    bits = np.unpackbits(np.frombuffer(bytes(m), dtype=np.uint8), bitorder="little")
    return RingElem(bits, 1)


def poly_to_msg(a: RingElem) -> bytes:
    return pack_bytes(a.reduce(1), 1)
