import logging
import math

import pytest

from zetalab.errors import DomainError
from zetalab.zeros import (
    ZeroRecord,
    golden_section,
    region_sigma_bound,
    scan_critical_line,
    verify_region,
    verify_symmetry,
)

# Frozen output of scripts/zero_oracle.py (sign changes of the theta-rotated
# eta route, bisected to 1e-9); agrees with mpmath.zetazero to < 1e-7.
ORACLE_ZEROS = [
    14.134725162, 21.022039617, 25.01085761, 30.424876102, 32.935061558,
    37.586178144, 40.918719042, 43.327073247, 48.00515088, 49.773832471,
    52.970321486, 56.446247693, 59.347043986, 60.831778513, 65.112544101,
    67.079810563, 69.54640167, 72.067157711, 75.704690645, 77.144840016,
    79.337374979, 82.910380824, 84.735492991, 87.42527463, 88.809111285,
    92.491899272, 94.651344006, 95.870634268, 98.831194236,
]


@pytest.fixture(scope="module")
def zeros_to_100():
    return scan_critical_line(0.05, 100.0, 0.05, 1e-6)


def test_golden_section_parabola():
    a, b = golden_section(lambda x: (x - 0.3) ** 2, 0.0, 1.0, 1e-8)
    assert b - a < 1e-8
    assert 0.5 * (a + b) == pytest.approx(0.3, abs=1e-7)


def test_first_three_zeros():
    recs = scan_critical_line(10, 30, 0.05, 1e-6)
    assert [r.index for r in recs] == [1, 2, 3]
    for r, t in zip(recs, (14.134725, 21.022040, 25.010858)):
        assert r.t == pytest.approx(t, abs=1e-6)
        assert r.residual < 1e-6 and r.bracket_width < 1e-9


def test_no_zeros_below_first():
    assert scan_critical_line(2, 12, 0.05, 1e-6) == []


def test_zero_tolerance_gives_nothing():
    assert scan_critical_line(10, 30, 0.05, 0.0) == []


def test_count_and_positions_to_100(zeros_to_100):
    assert len(zeros_to_100) == len(ORACLE_ZEROS) == 29
    for rec, t in zip(zeros_to_100, ORACLE_ZEROS):
        assert rec.t == pytest.approx(t, abs=1e-6)


def test_records_well_formed(zeros_to_100):
    ts = [r.t for r in zeros_to_100]
    assert ts == sorted(ts) and len(set(ts)) == len(ts) and ts[0] > 0
    assert [r.index for r in zeros_to_100] == list(range(1, 30))
    assert all(isinstance(r.t, float) and r.residual < 1e-6 for r in zeros_to_100)


def test_grid_independence(zeros_to_100):
    finer = scan_critical_line(0.05, 100.0, 0.025, 1e-6)
    assert len(finer) == len(zeros_to_100)
    for a, b in zip(finer, zeros_to_100):
        assert a.t == pytest.approx(b.t, abs=1e-7)


def test_threads_do_not_change_result(zeros_to_100):
    assert scan_critical_line(0.05, 100.0, 0.05, 1e-6, threads=4) == zeros_to_100


def test_near_misses_are_warned_not_recorded(caplog):
    # with a tolerance just under the true residuals every zero becomes a near miss
    with caplog.at_level(logging.WARNING, logger="zetalab.zeros"):
        recs = scan_critical_line(13, 15, 0.05, 1e-12)
    assert recs == []
    assert any("near-miss" in m for m in caplog.messages)


def test_no_records_off_the_line_inside_region():
    # sigma = 0.96 is inside the zero-free shape for every t in [3, 50]
    assert region_sigma_bound(50) < 0.96
    assert scan_critical_line(3, 50, 0.05, 1e-6, sigma=0.96) == []


@pytest.mark.parametrize("args", [(0, 10, 0.05, 1e-6), (10, 5, 0.05, 1e-6), (1, 10, 0.6, 1e-6),
                                  (1, 10, 0.05, -1.0)])
def test_scan_validation(args):
    with pytest.raises(DomainError):
        scan_critical_line(*args)


def test_symmetry(zeros_to_100):
    assert verify_symmetry(zeros_to_100[0], 1e-5)
    assert all(verify_symmetry(z, 1e-8) for z in zeros_to_100)
    fake = ZeroRecord(1, 15.0, 0.0, 0.0)
    assert not verify_symmetry(fake, 1e-5)
    assert verify_symmetry(fake, 1e9)


def test_region_bound_values():
    assert region_sigma_bound(math.e) == pytest.approx(1 - 1 / 5.573412, abs=1e-12)
    assert region_sigma_bound(math.e) == pytest.approx(0.82058, abs=1e-5)
    assert region_sigma_bound(2) == pytest.approx(1 - 1 / (5.573412 * math.log(2)), abs=1e-12)
    assert region_sigma_bound(2) == pytest.approx(0.74113, abs=5e-5)
    assert region_sigma_bound(-10) == region_sigma_bound(10)
    values = [region_sigma_bound(t) for t in (3, 10, 100, 1e6)]
    assert values == sorted(values)
    with pytest.raises(DomainError):
        region_sigma_bound(1.5)


def test_region_grid():
    rep = verify_region(3, 50, 20, 200)
    assert rep.samples == 4000
    assert rep.min_abs_zeta > 0.01
    # the minimum sits on the left edge of the sampled region
    assert rep.argmin_point.real == pytest.approx(region_sigma_bound(rep.argmin_point.imag), abs=1e-12)


def test_region_single_point_on_line_one():
    rep = verify_region(10, 10, 1, 1)
    assert rep.argmin_point == complex(1, 10)
    assert rep.min_abs_zeta > 0
    assert rep.sigma_bound_range[0] == pytest.approx(0.92206, abs=5e-5)


@pytest.mark.parametrize("args", [(1, 10), (10, 5), (3, 500)])
def test_region_validation(args):
    with pytest.raises(DomainError):
        verify_region(*args)
