"""Polynomials in Z_{2^k}[x]/(x^n + 1) held in a 16-bit coefficient carrier.

All coefficient arrays are ``numpy.uint16``; arithmetic wraps mod 2^16 and
reduction to a smaller power-of-two modulus is an explicit mask.
"""

from dataclasses import dataclass

import numpy as np

CARRIER_BITS = 16


def mask(bits):
    return (1 << bits) - 1


@dataclass(frozen=True, eq=False)
class RingElem:
    """One polynomial with its active modulus exponent.

    ``mod_bits == 16`` means "raw carrier"; secrets live there sign-extended.
    """

    coeffs: np.ndarray
    mod_bits: int = CARRIER_BITS

    def __post_init__(self):
        c = np.asarray(self.coeffs)
        if c.ndim != 1:
            raise ValueError("coefficients must be one-dimensional")
        if not 1 <= self.mod_bits <= CARRIER_BITS:
            raise ValueError(f"mod_bits out of range: {self.mod_bits}")
        c = (c.astype(np.int64) & mask(self.mod_bits)).astype(np.uint16)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, n=256, mod_bits=CARRIER_BITS):
        return cls(np.zeros(n, dtype=np.uint16), mod_bits)

    @classmethod
    def monomial(cls, k, n=256, mod_bits=CARRIER_BITS, value=1):
        c = np.zeros(n, dtype=np.int64)
        c[k] = value
        return cls(c, mod_bits)

    @classmethod
    def one(cls, n=256, mod_bits=CARRIER_BITS):
        return cls.monomial(0, n, mod_bits)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, RingElem):
            return NotImplemented
        return (self.mod_bits == other.mod_bits
                and np.array_equal(self.coeffs, other.coeffs))

    def __repr__(self):
        head = ", ".join(str(int(x)) for x in self.coeffs[:4])
        return f"RingElem(n={len(self)}, mod_bits={self.mod_bits}, [{head}, ...])"

    def reduce(self, bits):
        """Reinterpret modulo 2^bits (a pure mask; valid for any bits <= mod_bits)."""
        if bits > self.mod_bits:
            raise ValueError("cannot widen a reduced polynomial")
        return RingElem(self.coeffs, bits)

    def signed(self):
        """Centered integer representatives in [-2^(k-1), 2^(k-1))."""
        c = self.coeffs.astype(np.int64)
        half = 1 << (self.mod_bits - 1)
        return np.where(c >= half, c - (1 << self.mod_bits), c)


def secret_poly(values):
    """Store small signed coefficients sign-extended in the 16-bit carrier."""
    v = np.asarray(values, dtype=np.int64)
    if v.size and (v.min() < -4 or v.max() > 4):
        raise ValueError("secret coefficients must lie in [-4, 4]")
    return RingElem(v, CARRIER_BITS)


def _check_pair(a, b):
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    if a.mod_bits != b.mod_bits:
        raise ValueError(f"modulus mismatch: 2^{a.mod_bits} vs 2^{b.mod_bits}")


def poly_add(a: RingElem, b: RingElem) -> RingElem:
    _check_pair(a, b)
    return RingElem(a.coeffs.astype(np.int64) + b.coeffs, a.mod_bits)


def poly_sub(a: RingElem, b: RingElem) -> RingElem:
    _check_pair(a, b)
    return RingElem(a.coeffs.astype(np.int64) - b.coeffs, a.mod_bits)


def poly_const_add(a: RingElem, c: int) -> RingElem:
    if not 0 <= c < (1 << a.mod_bits):
        raise ValueError(f"constant {c} does not fit in {a.mod_bits} bits")
    return RingElem(a.coeffs.astype(np.int64) + c, a.mod_bits)


def shift_left(a: RingElem, k: int, to_bits: int) -> RingElem:
    return RingElem(a.coeffs.astype(np.int64) << k, to_bits)


def shift_round(a: RingElem, from_bits: int, to_bits: int) -> RingElem:
    """Drop the low ``from_bits - to_bits`` bits.

    The rounding constant is not added here; callers add it beforehand with
    :func:`poly_const_add`.
    """
    if from_bits <= to_bits:
        raise ValueError("shift_round needs from_bits > to_bits")
    if a.mod_bits < from_bits:
        raise ValueError(f"input is only defined mod 2^{a.mod_bits}")
    c = a.coeffs.astype(np.int64) & mask(from_bits)
    return RingElem(c >> (from_bits - to_bits), to_bits)


def vec_add(u, v):
    return [poly_add(x, y) for x, y in zip(u, v, strict=True)]


def schoolbook_negacyclic(a, b, mod_bits: int) -> RingElem:
    """Quadratic reference product in Z_{2^mod_bits}[x]/(x^n + 1).

    Works for any common length ``n`` (256 for ring elements, 64 for the
    Toom-Cook limbs). Signed representatives are used so that sign-extended
    secrets multiply correctly at every ``mod_bits``.
    """
    ca = a.signed() if isinstance(a, RingElem) else np.asarray(a, dtype=np.int64)
    cb = b.signed() if isinstance(b, RingElem) else np.asarray(b, dtype=np.int64)
    n = len(ca)
    if len(cb) != n:
        raise ValueError(f"length mismatch: {n} vs {len(cb)}")
    # np.convolve is the direct O(n^2) sum, not an FFT
    full = np.zeros(2 * n, dtype=np.int64)
    full[:2 * n - 1] = np.convolve(ca, cb)
    c = full[:n] - full[n:]
    return RingElem(c & mask(mod_bits), mod_bits)
