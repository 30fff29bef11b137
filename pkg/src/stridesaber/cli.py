"""Command-line front end: keygen / encaps / decaps / selftest / bench."""

import argparse
import csv
import os
import statistics
import sys
import time

import numpy as np

from . import cyclemodel, kem, selftest, toom
from .hashes import shake128
from .params import default_saber
from .ring import RingElem


class CliError(Exception):
    pass


def _entropy(args, label: bytes, n: int) -> bytes:
    if args.test_seed is None:
        try:
            return os.urandom(n)
        except NotImplementedError as exc:
            raise CliError(f"no OS entropy source: {exc}") from exc
    return shake128(args.test_seed + b"/" + label, n)


def _read(path, expected, what, as_hex):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {what} file {path}: {exc.strerror}") from exc
    if as_hex:
        try:
            data = bytes.fromhex(data.decode("ascii").strip())
        except ValueError as exc:
            raise CliError(f"{what} file {path} is not valid hex") from exc
    if len(data) != expected:
        raise CliError(f"{what} file {path} has {len(data)} bytes, expected {expected}")
    return data


def _write(path, data, as_hex):
    payload = (data.hex() + "\n").encode() if as_hex else data
    try:
        with open(path, "wb") as fh:
            fh.write(payload)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}") from exc


def cmd_keygen(args):
    P = default_saber()
    pk, sk = kem.kem_keygen(_entropy(args, b"keygen", kem.KEYGEN_ENTROPY_BYTES))
    _write(args.pk, pk.to_bytes(P), args.hex)
    _write(args.sk, sk.to_bytes(P), args.hex)
    print(f"wrote {args.pk} ({P.pk_bytes} B) and {args.sk} ({P.kem_sk_bytes} B)")
    return 0


def cmd_encaps(args):
    P = default_saber()
    pk = _read(args.pk, P.pk_bytes, "public key", args.hex)
    ct, key = kem.encaps(pk, _entropy(args, b"encaps", 32))
    _write(args.ct, ct.to_bytes(P), args.hex)
    _write(args.out, key, args.hex)
    print(f"wrote {args.ct} ({P.ct_bytes} B) and {args.out} ({len(key)} B)")
    return 0


def cmd_decaps(args):
    P = default_saber()
    sk = _read(args.sk, P.kem_sk_bytes, "secret key", args.hex)
    ct = _read(args.ct, P.ct_bytes, "ciphertext", args.hex)
    key = kem.decaps(sk, ct)
    _write(args.out, key, args.hex)
    print(f"wrote {args.out} ({len(key)} B)")
    return 0


def cmd_selftest(args):
    return 0 if selftest.run_all() else 1


def _median_seconds(fn, reps):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def bench_rows(reps, n_parallel=4, rng=None):
    """Measured medians plus modeled and reference cycle counts.

    Each row: (metric, value, unit, source).
    """
    rng = rng or np.random.default_rng()
    pk, sk = kem.kem_keygen(rng.bytes(96))
    ct, _ = kem.encaps(pk, rng.bytes(32))
    a = RingElem(rng.integers(0, 8192, 256), 13)
    s = RingElem(rng.integers(-4, 5, 256), 16)
    rows = []
    timed = {
        "keygen": lambda: kem.kem_keygen(rng.bytes(96)),
        "encaps": lambda: kem.encaps(pk, rng.bytes(32)),
        "decaps": lambda: kem.decaps(sk, ct),
        "poly_mul_striding": lambda: toom.multiply_striding(a, s),
        "poly_mul_classical": lambda: toom.multiply_classical(a, s),
    }
    for name, fn in timed.items():
        rows.append((f"wall_{name}", _median_seconds(fn, reps) * 1e6, "us", "measured"))

    rep = cyclemodel.multiplier_latency(n_parallel)
    eager = cyclemodel.trace_total(cyclemodel.schedule_matvec(3, n_parallel, lazy=False))
    rows += [
        ("model_n_parallel", rep.n_parallel, "multipliers", "model"),
        ("model_eval_cycles", rep.eval_cycles, "cycles", "model"),
        ("model_eval_extra_cycles", rep.eval_extra_cycles, "cycles", "model"),
        ("model_pointmul_cycles", rep.pointmul_cycles, "cycles", "model"),
        ("model_interp_cycles", rep.interp_cycles, "cycles", "model"),
        ("model_interp_amortized_cycles", round(rep.interp_amortized, 2), "cycles", "model"),
        ("model_per_256mul_cycles", rep.per_256mul_cycles, "cycles", "model"),
        ("model_matvec_lazy_cycles", rep.matvec_cycles, "cycles", "model"),
        ("model_matvec_eager_cycles", eager, "cycles", "model"),
    ]
    for op, cyc in cyclemodel.REFERENCE_TOTAL_CYCLES.items():
        rows.append((f"chip_{op}_cycles", cyc, "cycles", "reference, not reproduced"))
    for op, us in cyclemodel.REFERENCE_TOTAL_US_AT_160MHZ.items():
        rows.append((f"chip_{op}_time_160MHz", us, "us", "reference, not reproduced"))
    return rows


def _fmt(v):
    return f"{v:.1f}" if isinstance(v, float) else str(v)


def cmd_bench(args):
    if args.reps < 1:
        raise CliError("--reps must be at least 1")
    rows = bench_rows(args.reps, args.n_parallel)
    if args.format == "rows":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(("metric", "value", "unit", "source"))
        w.writerows((m, _fmt(v), u, s) for m, v, u, s in rows)
    else:
        width = max(len(r[0]) for r in rows)
        print(f"{'metric':<{width}}  {'value':>10}  {'unit':<11}  source")
        for m, v, u, s in rows:
            print(f"{m:<{width}}  {_fmt(v):>10}  {u:<11}  {s}")
    if args.plot_dir:
        from .plotting import render_report_figures

        for path in render_report_figures(args.plot_dir, args.n_parallel):
            print(f"figure: {path}", file=sys.stderr)
    return 0


def _hex_seed(text):
    try:
        return bytes.fromhex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError("test seed must be hex") from exc


def build_parser():
    p = argparse.ArgumentParser(prog="stridesaber", description=__doc__)
    p.add_argument("--test-seed", type=_hex_seed, default=None,
                   help="deterministic entropy (hex); requires --insecure-test")
    p.add_argument("--insecure-test", action="store_true",
                   help="acknowledge that --test-seed makes keys predictable")
    p.add_argument("--hex", action="store_true", help="read/write files as hex text")
    sub = p.add_subparsers(dest="command", required=True)

    k = sub.add_parser("keygen", help="generate a key pair")
    k.add_argument("--pk", required=True)
    k.add_argument("--sk", required=True)
    k.set_defaults(func=cmd_keygen)

    e = sub.add_parser("encaps", help="encapsulate a shared key to a public key")
    e.add_argument("--pk", required=True)
    e.add_argument("--ct", required=True)
    e.add_argument("--out", required=True)
    e.set_defaults(func=cmd_encaps)

    d = sub.add_parser("decaps", help="recover the shared key from a ciphertext")
    d.add_argument("--sk", required=True)
    d.add_argument("--ct", required=True)
    d.add_argument("--out", required=True)
    d.set_defaults(func=cmd_decaps)

    t = sub.add_parser("selftest", help="run the embedded correctness checks")
    t.set_defaults(func=cmd_selftest)

    b = sub.add_parser("bench", help="timings alongside the multiplier cycle model")
    b.add_argument("--reps", type=int, default=10)
    b.add_argument("--format", choices=("text", "rows"), default="text")
    b.add_argument("--n-parallel", type=int, default=4)
    b.add_argument("--plot-dir", default=None, help="write report figures here")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.test_seed is not None and not args.insecure_test:
        print("error: --test-seed requires --insecure-test", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
