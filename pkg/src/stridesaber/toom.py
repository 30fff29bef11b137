"""Toom-Cook 4-way multiplication over Z_{2^13}[x]/(x^256 + 1).

Two variants share the same evaluation points {inf, 2, 1, -1, 1/2, -1/2, 0}
and the same interpolation core:

* classical: limbs are the four contiguous 64-coefficient quarters of the
  operand; the seven limb products are full 127-coefficient products and the
  511-coefficient result is folded mod x^256 + 1 at the end.
* striding: limb ``t`` holds the coefficients ``a[4j + t]``. With ``y = x^4``
  the limb ring is Z[y]/(y^64 + 1), itself negacyclic, so limb products wrap
  and the interpolated result is already reduced.

Limb ``i`` of an evaluated operand (0-based) corresponds to point
``(inf, 2, 1, -1, 1/2, -1/2, 0)[i]``; the half-points are pre-scaled by 8 so
everything stays integral. All arithmetic is done in ``uint16`` and the three
bits lost to the exact divisions are the carrier's headroom above 13 bits.
"""

from dataclasses import dataclass

import numpy as np

from .ring import RingElem, mask

N = 256
K = 4
LIMB = N // K
POINTS = 7
EXACT_BITS = 13

_U16 = np.uint16
_INV_MOD = 1 << 16


@dataclass(frozen=True, eq=False)
class EvalOperand:
    """Seven evaluated limbs, shape (7, L) uint16.

    L is 64 for both variants' operands; accumulators of the striding variant
    share this type.
    """

    ws: np.ndarray

    def __post_init__(self):
        ws = np.asarray(self.ws)
        if ws.ndim != 2 or ws.shape[0] != POINTS:
            raise ValueError(f"expected {POINTS} limbs, got shape {ws.shape}")
        ws = ws.astype(_U16, copy=True)
        ws.setflags(write=False)
        object.__setattr__(self, "ws", ws)

    def __eq__(self, other):
        if not isinstance(other, EvalOperand):
            return NotImplemented
        return np.array_equal(self.ws, other.ws)

    def __add__(self, other):
        return type(self)(self.ws + other.ws)


class EvalAccumulator(EvalOperand):
    """Lazy-interpolation accumulator in the evaluated domain."""

    @classmethod
    def zeros(cls, limb=LIMB):
        return cls(np.zeros((POINTS, limb), dtype=_U16))


# --- strided view --------------------------------------------------------

def to_strided(coeffs):
    """Regroup 256 coefficients as A_t[j] = a[4j + t]; shape (4, 64)."""
    c = np.asarray(coeffs)
    if c.shape != (N,):
        raise ValueError(f"expected {N} coefficients, got {c.shape}")
    return c.reshape(LIMB, K).T.copy()


def from_strided(groups):
    g = np.asarray(groups)
    if g.shape != (K, LIMB):
        raise ValueError(f"expected shape {(K, LIMB)}, got {g.shape}")
    return g.T.reshape(N).copy()


def to_blocks(coeffs):
    """Classical split: A_t[j] = a[j + 64 t]; shape (4, 64)."""
    c = np.asarray(coeffs)
    if c.shape != (N,):
        raise ValueError(f"expected {N} coefficients, got {c.shape}")
    return c.reshape(K, LIMB).copy()


# --- evaluation ----------------------------------------------------------

def _carrier(a):
    c = a.coeffs if isinstance(a, RingElem) else np.asarray(a)
    return (np.asarray(c, dtype=np.int64) & 0xFFFF).astype(_U16)


def _evaluate_limbs(r0, r1, r2, r3):
    """Vertical-scanning evaluation of four limbs, all limbs at once."""
    out = np.empty((POINTS, r0.shape[-1]), dtype=_U16)
    r4 = r0 + r2
    r5 = r1 + r3
    out[2] = r4 + r5                                # x = 1
    out[3] = r4 - r5                                # x = -1
    r4 = ((r0 << 2) + r2) << 1
    r5 = (r1 << 2) + r3
    out[4] = r4 + r5                                # 8 * a(1/2)
    out[5] = r4 - r5                                # 8 * a(-1/2)
    out[1] = (r3 << 3) + (r2 << 2) + (r1 << 1) + r0  # x = 2
    out[6] = r0                                     # x = 0
    out[0] = r3                                     # x = inf
    return out


def evaluate_striding(a) -> EvalOperand:
    """Evaluate with consecutive loads r_t = a[4j + t]."""
    r = to_strided(_carrier(a))
    return EvalOperand(_evaluate_limbs(r[0], r[1], r[2], r[3]))


def evaluate_classical(a) -> EvalOperand:
    """Evaluate with offset-64 loads r_t = a[j + 64 t]."""
    r = to_blocks(_carrier(a))
    return EvalOperand(_evaluate_limbs(r[0], r[1], r[2], r[3]))


# --- point multiplication ------------------------------------------------

def _negacyclic_tables(n):
    k = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    return (k - j) % n, np.where(j <= k, 1, -1).astype(np.int64)


_NEG_IDX, _NEG_SIGN = _negacyclic_tables(LIMB)


def limb_products_negacyclic(a: EvalOperand, b: EvalOperand) -> np.ndarray:
    """Seven 64x64 products in Z_{2^16}[y]/(y^64 + 1); shape (7, 64)."""
    if a.ws.shape != (POINTS, LIMB) or b.ws.shape != (POINTS, LIMB):
        raise ValueError("negacyclic limb products need 7x64 operands")
    # rows of toep[i] are the negacyclic rotations of a.ws[i]
    toep = a.ws.astype(np.int64)[:, _NEG_IDX] * _NEG_SIGN
    prod = np.einsum("ikj,ij->ik", toep, b.ws.astype(np.int64))
    return (prod & 0xFFFF).astype(_U16)


def pointwise_mac_negacyclic(acc: EvalAccumulator, a: EvalOperand,
                             b: EvalOperand) -> EvalAccumulator:
    return EvalAccumulator(acc.ws + limb_products_negacyclic(a, b))


def pointwise_full(a: EvalOperand, b: EvalOperand) -> np.ndarray:
    """Seven plain 64x64 -> 127 coefficient products mod 2^16; shape (7, 127)."""
    wa = a.ws.astype(np.int64)
    wb = b.ws.astype(np.int64)
    out = np.empty((POINTS, 2 * LIMB - 1), dtype=np.int64)
    for i in range(POINTS):
        out[i] = np.convolve(wa[i], wb[i])
    return (out & 0xFFFF).astype(_U16)


# --- interpolation -------------------------------------------------------

def exact_div(v, d: int):
    """Divide by ``d`` in the 16-bit carrier, assuming the division is exact.

    ``d = 2^s * odd``: shift out ``s`` known-zero bits, then multiply by the
    odd part's inverse mod 2^16. The top ``s`` bits of the result are junk,
    which the interpolation's bit budget tolerates.
    """
    s = (d & -d).bit_length() - 1
    odd = d >> s
    v = np.asarray(v, dtype=_U16)
    flat = v.reshape(-1)  # keeps 0-d inputs in array arithmetic (wraps silently)
    assert not np.any(flat & _U16((1 << s) - 1)), f"inexact division by {d}"
    return ((flat >> _U16(s)) * _U16(pow(odd, -1, _INV_MOD))).reshape(v.shape)


def _interpolate_core(w):
    """Shared interpolation sequence; returns (c0, c1, ..., c6) low to high."""
    r0, r1, r2, r3, r4, r5, r6 = (np.array(x, dtype=_U16) for x in w)
    r1 = r1 + r4
    r5 = r5 - r4
    r3 = exact_div(r3 - r2, 2)
    r4 = r4 - r0
    # the 64*c0 term must be removed before doubling; a scratch value is used
    # so the striding carry registers stay untouched
    r4 = r4 - (r6 << _U16(6))
    r4 = (r4 << _U16(1)) + r5
    r2 = r2 + r3
    r1 = r1 - _U16(65) * r2
    r2 = r2 - r6
    r2 = r2 - r0
    r1 = r1 + _U16(45) * r2
    r4 = exact_div(r4 - (r2 << _U16(3)), 24)
    r5 = r5 + r1
    r1 = exact_div(r1 + (r3 << _U16(4)), 18)
    r3 = _U16(0) - (r3 + r1)
    r5 = exact_div(_U16(30) * r1 - r5, 60)
    r2 = r2 - r4
    r1 = r1 - r5
    return r6, r5, r4, r3, r2, r1, r0


def _check_bits(mod_bits):
    if not 1 <= mod_bits <= EXACT_BITS:
        raise ValueError(f"interpolation is exact only up to 2^{EXACT_BITS}")


def interpolate_striding(acc: EvalOperand, mod_bits: int = EXACT_BITS) -> RingElem:
    """Interpolate a striding accumulator straight into the ring.

    Coefficients c4..c6 of limb ``i`` belong to output positions
    4(i+1)..4(i+1)+2, i.e. they are carried into the next iteration. The
    carry out of the last iteration wraps through x^256 = -1 onto C[0..2].
    """
    _check_bits(mod_bits)
    if acc.ws.shape != (POINTS, LIMB):
        raise ValueError("striding interpolation needs a 7x64 accumulator")
    c0, c1, c2, c3, c4, c5, c6 = _interpolate_core(acc.ws)

    def carried(x):
        # carry register seen at iteration i is x[i-1]; iteration 0 sees the
        # negated final carry
        prev = np.empty_like(x)
        prev[1:] = x[:-1]
        prev[0] = -int(x[-1]) & 0xFFFF
        return prev

    out = np.empty((LIMB, K), dtype=_U16)
    out[:, 0] = c0 + carried(c4)
    out[:, 1] = c1 + carried(c5)
    out[:, 2] = c2 + carried(c6)
    out[:, 3] = c3
    return RingElem(out.reshape(N), mod_bits)


def interpolate_classical(ws, mod_bits: int = EXACT_BITS) -> RingElem:
    """Interpolate 7x127 full products, then fold mod x^256 + 1."""
    _check_bits(mod_bits)
    ws = np.asarray(ws)
    if ws.shape != (POINTS, 2 * LIMB - 1):
        raise ValueError(f"expected shape (7, 127), got {ws.shape}")
    parts = _interpolate_core(ws)
    c = np.zeros(2 * N - 1, dtype=np.int64)
    span = 2 * LIMB - 1
    for t, part in enumerate(parts):
        c[LIMB * t:LIMB * t + span] += part
    folded = c[:N].copy()
    folded[:N - 1] -= c[N:]
    return RingElem(folded & mask(mod_bits), mod_bits)


# --- full multipliers ----------------------------------------------------

def multiply_striding(a, b, mod_bits: int = EXACT_BITS) -> RingElem:
    acc = pointwise_mac_negacyclic(EvalAccumulator.zeros(),
                                   evaluate_striding(a), evaluate_striding(b))
    return interpolate_striding(acc, mod_bits)


def multiply_classical(a, b, mod_bits: int = EXACT_BITS) -> RingElem:
    ws = pointwise_full(evaluate_classical(a), evaluate_classical(b))
    return interpolate_classical(ws, mod_bits)


def matvec_lazy(A, s, transpose: bool = False, mod_bits: int = EXACT_BITS):
    """Row-column products with one interpolation per output row.

    Computes ``A s`` (or ``A^T s``). Secret evaluations are done once and
    reused by every row.
    """
    l = len(s)
    if len(A) != l or any(len(row) != l for row in A):
        raise ValueError(f"matrix must be {l}x{l} to match the vector")
    s_eval = [evaluate_striding(x) for x in s]
    out = []
    for i in range(l):
        acc = EvalAccumulator.zeros()
        for j in range(l):
            entry = A[j][i] if transpose else A[i][j]
            acc = pointwise_mac_negacyclic(acc, evaluate_striding(entry), s_eval[j])
        out.append(interpolate_striding(acc, mod_bits))
    return out


def inner_product_lazy(b, s, mod_bits: int = EXACT_BITS) -> RingElem:
    if len(b) != len(s):
        raise ValueError("vector length mismatch")
    acc = EvalAccumulator.zeros()
    for x, y in zip(b, s):
        acc = pointwise_mac_negacyclic(acc, evaluate_striding(x), evaluate_striding(y))
    return interpolate_striding(acc, mod_bits)
