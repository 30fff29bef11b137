"""Mutated builds must be caught by the embedded checks."""

from stridesaber import sampler, selftest
from stridesaber.params import SaberParams


def test_clean_build_passes():
    lines = []
    assert selftest.run_all(lines.append)
    assert len(lines) == len(selftest.SUITES)


def test_fixture_digests_current():
    assert selftest.fixture_digests() == selftest.FIXTURES


def _mutate_h2(monkeypatch, delta):
    base = SaberParams.h2_coeff.fget
    monkeypatch.setattr(SaberParams, "h2_coeff", property(lambda self: base(self) + delta))


def test_h2_plus_one_detected(monkeypatch):
    _mutate_h2(monkeypatch, 1)
    ok, _ = selftest.check_decryption_threshold()
    assert not ok
    assert not selftest.run_all(lambda line: None)


def test_h2_minus_one_detected(monkeypatch):
    _mutate_h2(monkeypatch, -1)
    ok, _ = selftest.check_decryption_threshold()
    assert not ok


def test_swapped_nibble_detected(monkeypatch):
    orig = sampler.cbd_from_bytes

    def swapped(buf, params=None):
        return orig(bytes(((b << 4) | (b >> 4)) & 0xFF for b in buf), params)

    monkeypatch.setattr(sampler, "cbd_from_bytes", swapped)
    ok, detail = selftest.check_fixtures()
    assert not ok and "secret" in detail
