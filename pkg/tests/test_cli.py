import csv
import io

import pytest

from stridesaber.cli import main

SEED = ["--insecure-test", "--test-seed", "00112233"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def keygen(tmp_path, capsys, *extra):
    pk, sk = tmp_path / "pk", tmp_path / "sk"
    code, _, _ = run(capsys, *extra, "keygen", "--pk", str(pk), "--sk", str(sk))
    assert code == 0
    return pk, sk


def test_pipeline(tmp_path, capsys):
    pk, sk = keygen(tmp_path, capsys)
    assert pk.stat().st_size == 992 and sk.stat().st_size == 2304
    ct, k1, k2 = tmp_path / "ct", tmp_path / "k1", tmp_path / "k2"
    assert main(["encaps", "--pk", str(pk), "--ct", str(ct), "--out", str(k1)]) == 0
    assert main(["decaps", "--sk", str(sk), "--ct", str(ct), "--out", str(k2)]) == 0
    assert ct.stat().st_size == 1088 and k1.stat().st_size == 32
    assert k1.read_bytes() == k2.read_bytes()


def test_keygen_randomized(tmp_path, capsys):
    (tmp_path / "a").mkdir()
    (tmp_path / "b").mkdir()
    a = keygen(tmp_path / "a", capsys)
    b = keygen(tmp_path / "b", capsys)
    assert a[0].read_bytes() != b[0].read_bytes()


def test_test_seed_deterministic(tmp_path, capsys):
    (tmp_path / "a").mkdir()
    (tmp_path / "b").mkdir()
    a = keygen(tmp_path / "a", capsys, *SEED)
    b = keygen(tmp_path / "b", capsys, *SEED)
    assert a[0].read_bytes() == b[0].read_bytes()


def test_test_seed_requires_flag(tmp_path, capsys):
    code, _, err = run(capsys, "--test-seed", "00", "keygen",
                       "--pk", str(tmp_path / "p"), "--sk", str(tmp_path / "s"))
    assert code != 0 and "--insecure-test" in err
    assert not (tmp_path / "p").exists()


def test_truncated_ct(tmp_path, capsys):
    pk, sk = keygen(tmp_path, capsys)
    ct = tmp_path / "ct"
    ct.write_bytes(bytes(1000))
    code, _, err = run(capsys, "decaps", "--sk", str(sk), "--ct", str(ct),
                       "--out", str(tmp_path / "k"))
    assert code != 0 and "1088" in err


def test_flipped_ct_is_not_an_error(tmp_path, capsys):
    pk, sk = keygen(tmp_path, capsys)
    ct, k1, k2 = tmp_path / "ct", tmp_path / "k1", tmp_path / "k2"
    main(["encaps", "--pk", str(pk), "--ct", str(ct), "--out", str(k1)])
    data = bytearray(ct.read_bytes())
    data[100] ^= 4
    ct.write_bytes(bytes(data))
    assert main(["decaps", "--sk", str(sk), "--ct", str(ct), "--out", str(k2)]) == 0
    assert k1.read_bytes() != k2.read_bytes()


def test_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "encaps", "--pk", str(tmp_path / "nope"),
                       "--ct", str(tmp_path / "c"), "--out", str(tmp_path / "k"))
    assert code == 1 and "cannot read" in err


def test_hex_mode(tmp_path, capsys):
    pk, sk = keygen(tmp_path, capsys, "--hex")
    assert len(bytes.fromhex(pk.read_text().strip())) == 992
    ct, k1, k2 = tmp_path / "ct", tmp_path / "k1", tmp_path / "k2"
    assert main(["--hex", "encaps", "--pk", str(pk), "--ct", str(ct), "--out", str(k1)]) == 0
    assert main(["--hex", "decaps", "--sk", str(sk), "--ct", str(ct), "--out", str(k2)]) == 0
    assert k1.read_text() == k2.read_text()


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert out.count("PASS") == 6 and "FAIL" not in out


def test_bench_text(capsys):
    code, out, _ = run(capsys, "bench", "--reps", "1")
    assert code == 0
    line = next(x for x in out.splitlines() if x.startswith("model_per_256mul_cycles"))
    assert "1298" in line
    assert "reference, not reproduced" in out


def test_bench_rows(tmp_path, capsys):
    code, out, err = run(capsys, "bench", "--reps", "2", "--format", "rows",
                         "--plot-dir", str(tmp_path / "figs"))
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    metrics = {r["metric"]: r for r in rows}
    assert len(metrics) == len(rows)
    assert metrics["model_pointmul_cycles"]["value"] == "1168"
    assert metrics["model_per_256mul_cycles"]["value"] == "1298"
    assert metrics["chip_decaps_cycles"]["source"] == "reference, not reproduced"
    assert (tmp_path / "figs" / "mac_latency.png").stat().st_size > 0
    assert (tmp_path / "figs" / "matvec_schedule.png").exists()


def test_bench_rejects_zero_reps(capsys):
    code, _, err = run(capsys, "bench", "--reps", "0")
    assert code == 1 and "reps" in err


def test_bench_invalid_parallelism(capsys):
    code, _, err = run(capsys, "bench", "--reps", "1", "--n-parallel", "3")
    assert code == 1


@pytest.mark.parametrize("argv", [[], ["nosuch"]])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code != 0
