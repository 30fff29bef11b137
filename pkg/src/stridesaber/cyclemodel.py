"""Analytical clock-cycle model of the striding Toom-Cook multiplier.

Covers the multiplier subsystem only: per-polynomial evaluation, the seven
parallel 64x64 MAC units, interpolation, and the lazy matrix-vector schedule.
Full-chip totals are carried as reference values and never derived.
"""

from dataclasses import dataclass, asdict

EVAL_CYCLES = 64        # one operand, 7 evaluated limbs in parallel
EVAL_EXTRA_CYCLES = 60  # additional evaluation overhead per multiplication
INTERP_CYCLES = 70
LIMB = 64
MEMORY_PORTS = 2

# published chip-level figures, kept for side-by-side reporting only
REFERENCE_TOTAL_CYCLES = {"keygen": 14642, "encaps": 18984, "decaps": 23388}
REFERENCE_TOTAL_US_AT_160MHZ = {"keygen": 89, "encaps": 117, "decaps": 146}


def _check_parallel(n_parallel, ports=MEMORY_PORTS):
    if (not isinstance(n_parallel, int) or n_parallel < ports
            or LIMB % n_parallel or n_parallel % ports):
        raise ValueError(f"n_parallel must be a divisor of {LIMB} and a "
                         f"multiple of {ports} ports, got {n_parallel!r}")


def mac_latency(n_parallel: int, ports: int = MEMORY_PORTS) -> int:
    """Cycles for one 64x64 point multiplication with ``n_parallel`` multipliers.

    Each of the 64/n passes fetches n operand words over ``ports`` memory
    ports, fills an n-deep datapath, streams 64 coefficients and drains n-1.
    """
    _check_parallel(n_parallel, ports)
    fetch = n_parallel // ports
    per_pass = fetch + n_parallel + LIMB + (n_parallel - 1)
    return (LIMB // n_parallel) * per_pass


@dataclass(frozen=True)
class CycleReport:
    n_parallel: int
    eval_cycles: int
    eval_extra_cycles: int
    pointmul_cycles: int
    interp_cycles: int
    per_256mul_cycles: int
    matvec_cycles: int
    rank: int = 3

    @property
    def interp_amortized(self) -> float:
        """Interpolation cost per multiplication under lazy interpolation."""
        return self.interp_cycles / self.rank

    def as_dict(self):
        d = asdict(self)
        d["interp_amortized"] = self.interp_amortized
        return d


@dataclass(frozen=True)
class Phase:
    kind: str      # "eval_extra", "eval", "mac" or "interp"
    row: int       # -1 for matrix-level bookkeeping
    col: int       # -1 where not tied to a column
    start: int
    cycles: int

    @property
    def end(self):
        return self.start + self.cycles


def schedule_matvec(l: int = 3, n_parallel: int = 4, lazy: bool = True):
    """Ordered phase trace for an l x l matrix times an l-vector.

    Lazy mode interpolates once per output row; eager mode interpolates after
    every point multiplication. A single ``eval_extra`` phase leads the trace.
    """
    if not isinstance(l, int) or l < 1:
        raise ValueError(f"rank must be a positive integer, got {l!r}")
    mac = mac_latency(n_parallel)
    trace = []
    t = 0

    def emit(kind, row, col, cycles):
        nonlocal t
        trace.append(Phase(kind, row, col, t, cycles))
        t += cycles

    emit("eval_extra", -1, -1, EVAL_EXTRA_CYCLES)
    for row in range(l):
        for col in range(l):
            emit("eval", row, col, EVAL_CYCLES)
            emit("mac", row, col, mac)
            if not lazy:
                emit("interp", row, col, INTERP_CYCLES)
        if lazy:
            emit("interp", row, -1, INTERP_CYCLES)
    return trace


def trace_total(trace) -> int:
    return trace[-1].end if trace else 0


def count_phases(trace, kind, row=None) -> int:
    return sum(1 for p in trace if p.kind == kind and (row is None or p.row == row))


def multiplier_latency(n_parallel: int = 4, rank: int = 3) -> CycleReport:
    pointmul = mac_latency(n_parallel)
    return CycleReport(
        n_parallel=n_parallel,
        eval_cycles=EVAL_CYCLES,
        eval_extra_cycles=EVAL_EXTRA_CYCLES,
        pointmul_cycles=pointmul,
        interp_cycles=INTERP_CYCLES,
        per_256mul_cycles=pointmul + EVAL_EXTRA_CYCLES + INTERP_CYCLES,
        matvec_cycles=trace_total(schedule_matvec(rank, n_parallel)),
        rank=rank,
    )


def valid_parallelism():
    return [n for n in range(MEMORY_PORTS, LIMB + 1, 2) if LIMB % n == 0]
