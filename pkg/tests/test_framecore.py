import json
import math

import numpy as np
import pytest

from sparkframe.exactalg import Cyclotomic, ExactMatrix
from sparkframe.framecore import (
    DiagonalShiftFamily,
    FrameMatrix,
    GeneratingVector,
    SparkCertificate,
    analysis,
    convolution_full_spark_test,
    frame_bounds,
    frame_operator,
    full_spark_exact,
    full_spark_numeric,
    is_tight,
    jacobi_eigenvalues,
    orbit_frame,
    orthogonal_probe,
    spark,
    synthesis,
    zero_count_check,
)
from sparkframe.genfamily import ExponentFamily
from sparkframe.groups import SemidirectGroup, induced_rep

Z5 = induced_rep(SemidirectGroup.of(5), 1)
Z6 = induced_rep(SemidirectGroup.of(6, [1, 5]), 1)
Z9 = induced_rep(SemidirectGroup.of(9, [1, 8]), 1)
S3 = induced_rep(SemidirectGroup.of(3), 1)
SQRT2 = ExponentFamily((1, 2, 3, 4), range(7))


def test_orbit_shapes():
    f = orbit_frame(Z5, GeneratingVector.monomial_squares(4))
    assert (f.dim, f.count, f.mode) == (4, 20, "exact")
    assert f.provenance["h_enumeration"] == [1, 2, 4, 3]
    g = orbit_frame(SQRT2, GeneratingVector.numeric([1, 2, 3, 4]), "numeric")
    assert (g.dim, g.count, g.mode) == (4, 28, "numeric")
    one = orbit_frame(ExponentFamily((0,), (0, 1, 2)), GeneratingVector.exact([1]))
    assert (one.dim, one.count) == (1, 3)


def test_exact_and_numeric_orbits_agree():
    v = GeneratingVector.monomial_squares(4)
    ex = orbit_frame(Z5, v)
    nu = orbit_frame(Z5, v, "numeric")
    assert np.allclose(ex.numeric_array(), nu.array)


def test_orbit_columns_are_group_action():
    v = GeneratingVector.random(5)
    f = orbit_frame(Z5, v, "numeric")
    phi = v.numeric_entries(4, 0)
    for i, g in enumerate(Z5.group.elements()):
        assert np.allclose(f.array[:, i], Z5.numeric_matrix(g) @ phi)


def test_analysis_synthesis():
    basis = np.eye(3)
    assert np.allclose(analysis(basis, [1, 0, 0]), [1, 0, 0])
    rng = np.random.default_rng(0)
    phi = rng.standard_normal((4, 20)) + 1j * rng.standard_normal((4, 20))
    w = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    c = rng.standard_normal(20) + 1j * rng.standard_normal(20)
    assert np.isclose(np.vdot(c, analysis(phi, w)), np.vdot(synthesis(phi, c), w))
    tight = orbit_frame(Z5, GeneratingVector.random(1), "numeric")
    a, _ = frame_bounds(tight)
    assert np.allclose(synthesis(tight, analysis(tight, w)), a * w)


def test_jacobi_against_numpy():
    rng = np.random.default_rng(3)
    for d in range(1, 7):
        x = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        h = x @ x.conj().T
        assert np.allclose(np.sort(jacobi_eigenvalues(h)), np.linalg.eigvalsh(h), atol=1e-9)


def test_frame_bounds_examples():
    assert np.allclose(frame_bounds(np.eye(3)), (1, 1))
    a, b = frame_bounds(orbit_frame(SQRT2, GeneratingVector.numeric([1, 2, 3, 4]), "numeric"))
    assert 170 <= a <= 180 and 252 <= b <= 264
    assert not is_tight(orbit_frame(SQRT2, GeneratingVector.numeric([1, 2, 3, 4]), "numeric"))


@pytest.mark.parametrize("rep", [Z5, Z6, Z9, S3, induced_rep(SemidirectGroup.of(7), 1),
                                 induced_rep(SemidirectGroup.of(8, [1, 3]), 1)], ids=lambda r: str(r.group))
def test_irreducible_orbits_are_tight(rep):
    for seed in range(5):
        v = GeneratingVector.random(seed)
        f = orbit_frame(rep, v, "numeric")
        norm2 = float(np.linalg.norm(v.numeric_entries(rep.dim, 0)) ** 2)
        a, b = frame_bounds(f)
        expected = rep.group.order * norm2 / rep.dim
        assert is_tight(f, 1e-9)
        assert abs(a - expected) <= 1e-9 * expected and abs(b - expected) <= 1e-9 * expected


def test_full_spark_exact_examples():
    cert = full_spark_exact(orbit_frame(Z5, GeneratingVector.monomial_squares(4)), threads=1)
    assert cert.verdict == "FullSpark" and cert.minors_checked == 4845
    for seed in range(3):
        c6 = full_spark_exact(orbit_frame(Z6, GeneratingVector.random(seed)), threads=1)
        assert c6.verdict == "Deficient" and c6.failing_subset == (0, 6)
    row = FrameMatrix.from_exact_columns([[Cyclotomic.zeta(3, k)] for k in range(3)])
    assert full_spark_exact(row).full_spark


def test_numeric_examples():
    rep = np.array([[1, 1, 0], [0, 0, 1]], dtype=complex)
    assert full_spark_numeric(rep, threads=1).verdict == "Deficient"
    rng = np.random.default_rng(12)
    g = rng.standard_normal((4, 8)) + 1j * rng.standard_normal((4, 8))
    cert = full_spark_numeric(g, threads=1)
    assert cert.verdict == "FullSpark" and cert.minors_checked == 70
    s2 = full_spark_numeric(orbit_frame(SQRT2, GeneratingVector.numeric([1, 2, 3, 4]), "numeric"),
                            tol=1e-8, threads=1)
    assert s2.verdict == "FullSpark" and s2.minors_checked == 20475


def test_certificate_invariants():
    with pytest.raises(ValueError):
        SparkCertificate("Deficient", "exact", 3)
    with pytest.raises(ValueError):
        SparkCertificate("FullSpark", "exact", 3, failing_subset=(0, 1))


def test_spark_examples():
    assert spark(orbit_frame(Z5, GeneratingVector.monomial_squares(4))) == 5
    assert spark(orbit_frame(Z6, GeneratingVector.random(2))) == 2
    assert spark(FrameMatrix.from_exact_columns([[1, 0], [0, 1]])) == 3


@pytest.mark.parametrize("rep", [Z6, Z9, S3, induced_rep(SemidirectGroup.of(8, [1, 5]), 1)],
                         ids=lambda r: str(r.group))
def test_exact_numeric_and_spark_consistency(rep):
    for seed in range(3):
        f = orbit_frame(rep, GeneratingVector.random(seed))
        ex = full_spark_exact(f, threads=1)
        assert ex.full_spark == (spark(f) == f.dim + 1)
        if ex.full_spark:
            assert full_spark_numeric(f.to_numeric(), tol=1e-8, threads=1).full_spark


def test_zero_count():
    f = orbit_frame(Z5, GeneratingVector.random(4), "numeric")
    psi = orthogonal_probe(f, [0, 5, 11])
    assert zero_count_check(f, trials=0, probes=[psi]) == 3
    assert zero_count_check(f, trials=50, seed=1) == 0
    line = FrameMatrix.from_array([[1, 2, 3j]])
    assert zero_count_check(line, trials=20) == 0


@pytest.mark.parametrize("rep", [S3, Z6, induced_rep(SemidirectGroup.of(5, [1, 4]), 1),
                                 induced_rep(SemidirectGroup.of(4, [1, 3]), 1)], ids=lambda r: str(r.group))
def test_convolution_matches_direct(rep):
    rng = np.random.default_rng(rep.group.n)
    for _ in range(10):
        v = rng.standard_normal(rep.dim) + 1j * rng.standard_normal(rep.dim)
        direct = full_spark_numeric(orbit_frame(rep, GeneratingVector.numeric(v), "numeric"),
                                    threads=1).full_spark
        assert convolution_full_spark_test(rep, v) == direct


def test_convolution_z5_and_errors():
    assert convolution_full_spark_test(Z5, GeneratingVector.monomial_squares(4))
    with pytest.raises(ValueError):
        convolution_full_spark_test(S3, [0, 0])


def _canonical(cert):
    return json.dumps(cert.to_dict(), sort_keys=True).encode()


def test_determinism_across_workers():
    frames = [
        orbit_frame(Z6, GeneratingVector.random(0)),
        orbit_frame(Z9, GeneratingVector.monomial_squares(2)),
    ]
    for f in frames:
        ref = _canonical(full_spark_exact(f, threads=1))
        for k in (2, 8):
            assert _canonical(full_spark_exact(f, threads=k)) == ref
    num = orbit_frame(SQRT2, GeneratingVector.numeric([1, 2, 3, 4]), "numeric")
    ref = _canonical(full_spark_numeric(num, threads=1))
    assert _canonical(full_spark_numeric(num, threads=2)) == ref


def test_family_validation():
    with pytest.raises(ValueError):
        FrameMatrix.from_array([[1, 0], [0, 0]])
    with pytest.raises(ValueError):
        orbit_frame(Z5, GeneratingVector.monomial([0, 1]))
    fam = DiagonalShiftFamily(ExactMatrix([[1, 1], [1, -1]]))
    assert orbit_frame(fam, GeneratingVector.exact([1, 0])).count == 4
