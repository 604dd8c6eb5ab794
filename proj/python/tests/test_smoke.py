import math

import pytest

import sunbeam as sb


def test_known_permanents():
    values = {2: None, 3: "-3", 4: None, 5: "-5", 6: None, 7: "-105", 8: None, 9: "81"}
    for N, expected in values.items():
        perm = sb.permanent(N, sb.build_sn(N))
        if expected is None:
            assert perm.is_zero()
        else:
            assert perm.as_constant() == expected


def test_hom_amplitude():
    assert sb.amplitude(2, [1, 1], [1, 1]).is_zero()
    assert abs(sb.amplitude_numeric(2, [1, 1], [2, 0])) == pytest.approx(1 / math.sqrt(2))


def test_ring_basics():
    w = sb.CycloPoly.from_power(4, 1)
    assert (w * w * w * w).as_constant() == "1"
    assert sb.fsr(5).is_zero()
    assert sb.afsr(12, 2).is_zero()


def test_scan_counts():
    summary = sb.scan(4, 4)
    assert summary["zero_count"] == 4
    assert summary["nonzero_count"] == 1
    assert summary["p_sym_nonzero"] == [2]
    assert summary["delta_perm_nonzero_count"] == 1


def test_kmatrix_routes():
    assert sb.count_k(3, [0, 1, 2], [1, 1, 1]) == 3
    assert sb.ksum(3, [0, 1, 2], [1, 1, 1]).is_zero()
    report = sb.group_report(3, [2, 3, 4], [3, 3, 3])
    assert report["valid_count"] == 45
    assert len(report["groups"]) == 6
    assert report["total_is_zero"]


def test_jkn():
    assert sb.jkn(4, [0, 0, 14, 14], [7, 7, 7, 7]) == (213, 345, 279)


def test_predict_and_cnl():
    verdict = sb.predict(12, [0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 4])
    assert verdict["status"] == "Inconclusive"
    assert verdict["p_tilde"] == 0

    family = sb.cnl_family(3, 4)
    assert all(e["verdict"]["status"] == "ProvenZero" for e in family)

    c = 1 / math.sqrt(3)
    terms = [(c, [3 * k, 1, 2]) for k in range(3)]
    passed, violations, diagonal = sb.cnl_check(3, terms, 3)
    assert passed and not violations


def test_distribution():
    dist = sb.output_distribution(2, [(1.0, [1, 1])], total_cap=4)
    assert dist[(1, 1)] == 0.0
    assert dist[(2, 0)] == pytest.approx(0.5)


def test_guard():
    with pytest.raises(RuntimeError):
        sb.amplitude(2, [15, 15], [15, 15])
