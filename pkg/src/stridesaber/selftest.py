"""Embedded checks run by ``stridesaber selftest``.

Each suite returns ``(ok, detail)``. Suites look up library functions at call
time so that a mutated build (patched constants or sampler) is caught.
"""

import time

import numpy as np

from . import codec, cyclemodel, kem, pke, sampler, toom
from .hashes import sha3_256
from .params import default_saber
from .ring import RingElem, schoolbook_negacyclic

# canonical outputs for fixed seeds; any change is a wire-format break
FIXTURES = {
    "secret": "84b0bfacdfc10fe5a8620c35ca8880623cd7bfce3aba15267fa10ea9f7ea5721",
    "matrix": "8c69772acde520e0366694ef397a1828bb3da7b5b327697c22fcaf20ca2d076a",
    "pk": "76b4978ed0a2e67e949e850d57a6a2dcd9f2d610461db4bd3535d3c915e9a03e",
    "sk": "dd811bcb001c05af1951756eeb7453160f1c3b139831e5d366dc3ee532889e8f",
    "ct": "fa42bbf75759874010183c49e5c181d71282e65db90b26b5554f425786959ced",
    "key": "10ca63e5610ba60d15ad9ec4216e2d2fb59711ff0a23f9084772a9a09e189317",
}
FIXTURE_SECRET_SEED = bytes(range(32))
FIXTURE_MATRIX_SEED = bytes(32)
FIXTURE_KEYGEN_ENTROPY = bytes(range(96))
FIXTURE_ENCAPS_ENTROPY = bytes(range(96, 128))


def fixture_digests(params=None):
    params = params or default_saber()
    s = sampler.gen_secret(FIXTURE_SECRET_SEED, params)
    A = sampler.gen_matrix(FIXTURE_MATRIX_SEED, params)
    pk, sk = kem.kem_keygen(FIXTURE_KEYGEN_ENTROPY, params)
    ct, key = kem.encaps(pk, FIXTURE_ENCAPS_ENTROPY, params)
    return {
        "secret": sha3_256(codec.pack_secret_vec(s)).hex(),
        "matrix": sha3_256(codec.pack_vec([x for row in A for x in row], 13)).hex(),
        "pk": sha3_256(pk.to_bytes(params)).hex(),
        "sk": sha3_256(sk.to_bytes(params)).hex(),
        "ct": sha3_256(ct.to_bytes(params)).hex(),
        "key": key.hex(),
    }


def _structured_polys():
    yield RingElem.one(mod_bits=13)
    yield RingElem.monomial(255, mod_bits=13)
    yield RingElem(np.full(256, 8191), 13)
    yield RingElem(np.ones(256, dtype=np.int64), 13)
    for k in (1, 3, 4, 63, 64, 128, 191, 252):
        yield RingElem.monomial(k, mod_bits=13)


def check_multiplier(trials=200, seed=0):
    rng = np.random.default_rng(seed)
    cases = [(a, b) for a in _structured_polys() for b in _structured_polys()]
    cases += [(RingElem(rng.integers(0, 8192, 256), 13),
               RingElem(rng.integers(0, 8192, 256), 13)) for _ in range(trials)]
    for a, b in cases:
        ref = schoolbook_negacyclic(a, b, 13)
        if toom.multiply_striding(a, b) != ref:
            return False, "striding product differs from schoolbook"
        if toom.multiply_classical(a, b) != ref:
            return False, "classical product differs from schoolbook"
    return True, f"{len(cases)} products"


def check_lazy(trials=50, seed=1):
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        A = [[RingElem(rng.integers(0, 8192, 256), 13) for _ in range(3)] for _ in range(3)]
        s = [RingElem(rng.integers(-4, 5, 256), 16) for _ in range(3)]
        for transpose in (False, True):
            got = toom.matvec_lazy(A, s, transpose)
            for i in range(3):
                acc = np.zeros(256, dtype=np.int64)
                for j in range(3):
                    e = A[j][i] if transpose else A[i][j]
                    acc += toom.multiply_striding(e, s[j]).coeffs
                if got[i] != RingElem(acc, 13):
                    return False, "lazy row differs from eager sum"
    return True, f"{trials} matrices"


def check_decryption_threshold(params=None):
    """Bit decisions must flip exactly at the h2-determined boundaries."""
    params = params or default_saber()
    zero_cm = RingElem.zero(mod_bits=params.eps_T)
    half = 1 << (params.eps_p - 1)
    for base in range(0, params.p, 256):
        vv = np.arange(base, base + 256)
        got = pke.unpack_message(RingElem(vv, params.eps_p), zero_cm, params)
        # 228 is the constant the scheme was built with; compare against it
        want = (((vv + 228) % params.p) >= half).astype(np.int64)
        if not np.array_equal(got.coeffs.astype(np.int64), want):
            return False, "decision threshold moved"
    return True, f"{params.p} boundary probes"


def check_roundtrip(trials=20, seed=2, params=None):
    params = params or default_saber()
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        ent = rng.bytes(96)
        pk, sk = kem.kem_keygen(ent, params)
        msg = rng.bytes(32)
        ct = pke.pke_enc(pk, msg, rng.bytes(32), params)
        if pke.pke_dec(sk.s, ct, params) != msg:
            return False, "PKE roundtrip failed"
        c, key = kem.encaps(pk, rng.bytes(32), params)
        if kem.decaps(sk, c, params) != key:
            return False, "KEM roundtrip failed"
        bad = bytearray(c.to_bytes(params))
        bad[int(rng.integers(len(bad)))] ^= 1 << int(rng.integers(8))
        expect = sha3_256(sha3_256(bytes(bad)) + sk.z)
        if kem.decaps(sk, bytes(bad), params) != expect:
            return False, "implicit rejection key mismatch"
    return True, f"{trials} key pairs"


def check_fixtures(params=None):
    got = fixture_digests(params)
    bad = [k for k, v in FIXTURES.items() if got[k] != v]
    return (not bad), ("all match" if not bad else "changed: " + ", ".join(bad))


def check_cycle_model():
    rep = cyclemodel.multiplier_latency(4)
    trace = cyclemodel.schedule_matvec(3, 4)
    ok = (cyclemodel.mac_latency(4) == 1168 and rep.per_256mul_cycles == 1298
          and rep.eval_cycles == 64
          and all(cyclemodel.count_phases(trace, "interp", r) == 1 for r in range(3))
          and cyclemodel.count_phases(trace, "mac") == 9)
    return ok, f"mac={rep.pointmul_cycles} per_mul={rep.per_256mul_cycles}"


SUITES = {
    "multiplier": check_multiplier,
    "lazy-interpolation": check_lazy,
    "decryption-threshold": check_decryption_threshold,
    "roundtrip": check_roundtrip,
    "fixtures": check_fixtures,
    "cycle-model": check_cycle_model,
}


def run_all(report=print):
    all_ok = True
    for name, fn in SUITES.items():
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crashing suite is a failing suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        dt = time.perf_counter() - t0
        report(f"{'PASS' if ok else 'FAIL'} {name:<22} {detail} ({dt:.2f}s)")
        all_ok &= ok
    return all_ok
