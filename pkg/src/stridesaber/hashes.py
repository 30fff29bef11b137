"""Keccak-family primitives used by Saber, backed by :mod:`hashlib`.

H = SHA3-256, G = SHA3-512, and SHAKE-128 as the XOF for matrix and secret
expansion. Nothing outside this module imports hashlib directly.
"""

import hashlib


def sha3_256(msg: bytes) -> bytes:
    return hashlib.sha3_256(msg).digest()


def sha3_512(msg: bytes) -> bytes:
    return hashlib.sha3_512(msg).digest()


def shake128(seed: bytes, out_len: int) -> bytes:
    if out_len < 0:
        raise ValueError("out_len must be non-negative")
    return hashlib.shake_128(seed).digest(out_len)


class XofStream:
    """Incremental SHAKE-128 squeezing over a fixed absorbed seed.

    hashlib has no native squeeze-continue, so each call re-derives the
    prefix; squeezing k then j bytes equals squeezing k + j at once.
    """

    def __init__(self, seed: bytes):
        self._state = hashlib.shake_128(bytes(seed))
        self.position = 0

    def squeeze(self, k: int) -> bytes:
        if k < 0:
            raise ValueError("cannot squeeze a negative length")
        end = self.position + k
        out = self._state.copy().digest(end)[self.position:]
        self.position = end
        return out
