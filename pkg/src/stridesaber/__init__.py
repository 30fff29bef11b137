"""Saber KEM built on a striding Toom-Cook 4-way multiplier with lazy
interpolation, plus a cycle model of the multiplier datapath."""

from .kem import KemSecretKey, decaps, encaps, kem_keygen
from .params import SaberParams, default_saber
from .pke import PkeCiphertext, PkePublicKey
from .ring import RingElem

__all__ = [
    "KemSecretKey",
    "PkeCiphertext",
    "PkePublicKey",
    "RingElem",
    "SaberParams",
    "decaps",
    "default_saber",
    "encaps",
    "kem_keygen",
]
__version__ = "0.1.0"
