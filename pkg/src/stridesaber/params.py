"""Saber (security level 3) parameter set and derived sizes."""

from dataclasses import dataclass


@dataclass(frozen=True)
class SaberParams:
    n: int = 256
    l: int = 3
    eps_q: int = 13
    eps_p: int = 10
    eps_T: int = 4
    mu: int = 8
    seed_bytes: int = 32
    noise_seed_bytes: int = 32
    shared_key_bytes: int = 32

    def __post_init__(self):
        if not (self.eps_T < self.eps_p < self.eps_q):
            raise ValueError("moduli must satisfy T < p < q")
        if self.n % 8 or self.mu % 2:
            raise ValueError("n must be a multiple of 8 and mu even")

    @property
    def q(self) -> int:
        return 1 << self.eps_q

    @property
    def p(self) -> int:
        return 1 << self.eps_p

    @property
    def T(self) -> int:
        return 1 << self.eps_T

    @property
    def h1_coeff(self) -> int:
        # rounding constant added before dropping eps_q - eps_p bits
        return 1 << (self.eps_q - self.eps_p - 1)

    @property
    def h2_coeff(self) -> int:
        return ((1 << (self.eps_p - 2))
                - (1 << (self.eps_p - self.eps_T - 1))
                + (1 << (self.eps_q - self.eps_p - 1)))

    @property
    def poly_q_bytes(self) -> int:
        return self.n * self.eps_q // 8

    @property
    def poly_p_bytes(self) -> int:
        return self.n * self.eps_p // 8

    @property
    def poly_T_bytes(self) -> int:
        return self.n * self.eps_T // 8

    @property
    def msg_bytes(self) -> int:
        return self.n // 8

    @property
    def cbd_bytes(self) -> int:
        """Uniform bytes consumed per sampled secret polynomial."""
        return self.n * self.mu // 8

    @property
    def matrix_bytes(self) -> int:
        return self.l * self.l * self.poly_q_bytes

    @property
    def pk_bytes(self) -> int:
        return self.l * self.poly_p_bytes + self.seed_bytes

    @property
    def indcpa_sk_bytes(self) -> int:
        return self.l * self.poly_q_bytes

    @property
    def ct_bytes(self) -> int:
        return self.l * self.poly_p_bytes + self.poly_T_bytes

    @property
    def kem_sk_bytes(self) -> int:
        # z || pkh || pk || packed s
        return 32 + 32 + self.pk_bytes + self.indcpa_sk_bytes

    def sizes(self) -> dict:
        return {
            "pk": self.pk_bytes,
            "indcpa_sk_packed": self.indcpa_sk_bytes,
            "kem_sk": self.kem_sk_bytes,
            "ct": self.ct_bytes,
            "shared_key": self.shared_key_bytes,
            "seed": self.seed_bytes,
            "noise_seed": self.noise_seed_bytes,
        }


_SABER = SaberParams()


def default_saber() -> SaberParams:
    return _SABER
