"""Smoke tests for the python bindings against the CMake-built module."""

import math
import os
import sys

MODULE_DIR = os.environ.get("ISOCUBIC_MODULE_DIR")
if MODULE_DIR:
    sys.path.insert(0, MODULE_DIR)

import _isocubic as iso  # noqa: E402


def test_supported_dims():
    assert iso.supported_dims() == [5, 8, 14, 26]


def test_identities_pass_in_dimension_five():
    report = iso.verify_identities(5)
    assert report["all_pass"] is True
    assert len(report["checks"]) == 5


def test_upsilon_entries():
    data = iso.build_upsilon(5)
    assert data["n"] == 5
    assert data["normalization"] == "iii-exact"
    entries = {tuple(e["ijk"]): e["value"] for e in data["entries"]}
    assert entries[(1, 2, 3)] == {"p": "0", "q": "1/2"}
    assert entries[(5, 5, 5)] == {"p": "-1", "q": "0"}


def test_cubic_evaluation():
    value = iso.evaluate_cubic(5, [0.0, 0.0, 0.0, 0.0, 1.0])
    assert math.isclose(value, -1.0, abs_tol=1e-12)


def test_stabilizer_dims():
    assert iso.stabilizer_dim(5) == 3
    assert iso.stabilizer_dim(8) == 8
    assert iso.stabilizer_dim(5, mode="exact") == 3


def test_isotypic_dimension_five():
    report = iso.isotypic(5, module="lambda3")
    dims = sorted(c["dim"] for c in report["components"])
    assert dims == [3, 7]


def test_counts():
    counts = iso.restricted_component_counts(8)
    assert counts["total"] == 224
    assert counts["restricted"] == 118
    assert counts["intersection_dim"] == 1


def test_split_roundtrip():
    conn = {
        "n": 5,
        "comps": [{"pair": [1, 2], "frame": 1, "value": 1.0}],
    }
    result = iso.split(conn)
    assert result["ambiguity_dim"] == 0
    # reconstruct the input from the three parts
    comps = {}

    def add(entries, scale):
        for e in entries:
            key = (tuple(e["pair"]), e["frame"])
            comps[key] = comps.get(key, 0.0) + scale * e["value"]

    add(result["gamma"]["comps"], 1.0)
    add(result["residual"]["comps"], 1.0)
    for e in result["torsion"]["entries"]:
        i, j, k = e["ijk"]
        v = 0.5 * e["value"]
        for (pair, frame, sign) in (((i, j), k, 1.0), ((i, k), j, -1.0), ((j, k), i, 1.0)):
            comps[(pair, frame)] = comps.get((pair, frame), 0.0) + sign * v

    expected = {((1, 2), 1): 1.0}
    for key, value in comps.items():
        assert abs(value - expected.get(key, 0.0)) < 1e-9
    # the residual is orthogonal to the algebraic sum, so it cannot exceed
    # the input norm
    assert result["norms"]["residual"] <= 1.0 + 1e-9


def test_isoparametric():
    report = iso.isoparametric(5, level=0.0, samples=5, seed=0)
    assert report["pass"] is True
    assert len(report["clusters"]) == 3


def test_magic_square():
    table = iso.magic_square()
    assert len(table) == 14
    dims = [row["space_dim"] for row in table]
    assert dims == [5, 8, 14, 26, 12, 18, 30, 54, 28, 40, 64, 112, 8, 32]
