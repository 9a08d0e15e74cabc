import json
import math
import subprocess
import sys

import numpy as np
import pytest

from entropy_profile import BlockStructure, Partition, SequenceMap, build_profile, make_density, spectrum_of
from entropy_profile import io as eio
from entropy_profile.cli import main

from randstates import random_density


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.fixture
def three(tmp_path):
    return write(tmp_path, "three.json", {"kind": "distribution", "weights": [0.5, 0.25, 0.25]})


@pytest.fixture
def pure(tmp_path):
    return write(tmp_path, "pure.json", {"kind": "density", "re": [[0.5, 0.5], [0.5, 0.5]], "im": [[0, 0], [0, 0]]})


class TestEntropyCommand:
    @pytest.mark.parametrize(
        "weights,expected",
        [([0.25] * 4, math.log(4)), ([1.0], 0.0), ([0.5, 0.25, 0.25], 1.5 * math.log(2))],
    )
    def test_values(self, tmp_path, capsys, weights, expected):
        path = write(tmp_path, "s.json", {"kind": "distribution", "weights": weights})
        code, out = run(capsys, "entropy", path)
        doc = json.loads(out)
        assert code == 0
        for key in ("direct", "boundary", "quadrature"):
            assert doc[key] == pytest.approx(expected, abs=1e-9)
        assert doc["max_discrepancy"] <= 1e-8

    def test_density(self, capsys, pure):
        code, out = run(capsys, "entropy", pure)
        assert code == 0 and json.loads(out)["direct"] == pytest.approx(0, abs=1e-12)

    def test_invalid_state(self, tmp_path, capsys):
        path = write(tmp_path, "bad.json", {"kind": "distribution", "weights": [0.5, 0.6]})
        assert main(["entropy", path]) == 2
        (tmp_path / "junk.json").write_text("{not json")
        assert main(["entropy", str(tmp_path / "junk.json")]) == 2
        assert main(["entropy", str(tmp_path / "missing.json")]) == 2
        path = write(tmp_path, "kind.json", {"kind": "banana"})
        assert main(["entropy", path]) == 2

    def test_bad_flags(self, capsys):
        assert main(["entropy"]) == 2
        assert main(["nonsense"]) == 2


class TestProfileCommand:
    @pytest.mark.parametrize(
        "weights,rows",
        [([1.0], [(0, 1), (1, 0)]), ([0.5, 0.25, 0.25], [(0, 0.5), (0.25, 0.25), (1, 0)]), ([0.5, 0.5], [(0, 0.5), (1, 0)])],
    )
    def test_rows(self, tmp_path, capsys, weights, rows):
        path = write(tmp_path, "s.json", {"kind": "distribution", "weights": weights})
        out = tmp_path / "p.csv"
        assert main(["profile", path, "--out", str(out)]) == 0
        text = out.read_text()
        assert text.splitlines()[0] == "r1,rinf"
        assert eio.read_profile_csv(text) == rows

    def test_write_failure(self, capsys, three, tmp_path):
        assert main(["profile", three, "--out", str(tmp_path / "no" / "such" / "dir.csv")]) == 4

    def test_round_trip_is_bit_exact(self):
        rho = random_density(np.random.default_rng(80), 6)
        p = build_profile(spectrum_of(rho))
        assert eio.read_profile_csv(eio.profile_to_csv(p)) == p.breakpoints


class TestCheckMonotone:
    def test_pinch_pure(self, tmp_path, capsys, pure):
        t = write(tmp_path, "t.json", {"kind": "blockstructure", "sizes": [1, 1]})
        code, out = run(capsys, "check-monotone", pure, t)
        trial = json.loads(out)["trials"][0]
        assert code == 0 and trial["verdict"]
        assert trial["entropy_before"] == pytest.approx(0, abs=1e-12)
        assert trial["entropy_after"] == pytest.approx(math.log(2), abs=1e-12)

    def test_identity(self, tmp_path, capsys, three):
        t = write(tmp_path, "t.json", {"kind": "matrix", "rows": np.eye(3).tolist()})
        code, out = run(capsys, "check-monotone", three, t)
        trial = json.loads(out)["trials"][0]
        assert code == 0 and trial["entropy_before"] == trial["entropy_after"]

    def test_partition(self, tmp_path, capsys, three):
        t = write(tmp_path, "t.json", {"kind": "partition", "blocks": [[0, 1], [2]]})
        assert run(capsys, "check-monotone", three, t)[0] == 0

    def test_random(self, capsys):
        code, out = run(capsys, "check-monotone", "--random", "8", "4", "--seed", "42", "--trials", "100")
        doc = json.loads(out)
        assert code == 0 and len(doc["trials"]) == 100 and doc["all_verdicts"]

    def test_not_contractive(self, tmp_path, capsys, three):
        t = write(tmp_path, "t.json", {"kind": "matrix", "rows": [[1, 1, 1], [0, 0, 0], [0, 0, 0]]})
        assert main(["check-monotone", three, t]) == 5

    def test_missing_transform(self, capsys, three):
        assert main(["check-monotone", three]) == 2

    def test_parallel_output_identical(self, capsys, monkeypatch):
        argv = ["check-monotone", "--random", "6", "3", "--seed", "7", "--trials", "40"]
        _, serial = run(capsys, *argv)
        monkeypatch.setenv("ENTROPY_PROFILE_THREADS", "4")
        _, parallel = run(capsys, *argv)
        assert serial == parallel


class TestOracleCommand:
    def test_verdicts(self, capsys, three):
        assert json.loads(run(capsys, "oracle", three, "0", "0.3")[1])["intersects"] is False
        code, out = run(capsys, "oracle", three, "0.25", "0.3", "--samples", "1000")
        assert code == 0 and json.loads(out)["intersects"] is True
        doc = json.loads(run(capsys, "oracle", three, "0.1", "0.3", "--samples", "1000")[1])
        assert doc["intersects"] is False and doc["best_found_norm1"] >= 0.2 - 1e-9

    def test_reproducible(self, capsys, pure):
        a = run(capsys, "oracle", pure, "0.7", "0.45", "--seed", "3")[1]
        b = run(capsys, "oracle", pure, "0.7", "0.45", "--seed", "3")[1]
        assert a == b


class TestFormats:
    def test_state_round_trip(self, tmp_path):
        rho = random_density(np.random.default_rng(81), 3)
        path = tmp_path / "rho.json"
        path.write_text(eio.dumps(eio.state_to_dict(rho)))
        back = eio.load_state(path)
        np.testing.assert_array_equal(back.re, rho.re)
        np.testing.assert_array_equal(back.im, rho.im)

    def test_transform_round_trip(self):
        for t in (SequenceMap([[0.25, 0.75], [0.75, 0.25]]), Partition([[1], [0, 2]]), BlockStructure((2, 1))):
            back = eio.transform_from_dict(json.loads(eio.dumps(eio.transform_to_dict(t))))
            assert eio.transform_to_dict(back) == eio.transform_to_dict(t)

    def test_dumps_17_digits(self):
        assert eio.dumps({"x": 0.1, "y": [1, True, None], "z": float("inf")}) == (
            '{"x": 0.10000000000000001, "y": [1, true, null], "z": null}'
        )
        assert json.loads(eio.dumps(1 / 3)) == 1 / 3

    def test_density_without_im(self):
        rho = eio.state_from_dict({"kind": "density", "re": [[1.0]]})
        assert rho.dim == 1 and isinstance(rho, type(make_density([[1.0]])))


def test_module_entry_point(tmp_path, three):
    proc = subprocess.run([sys.executable, "-m", "entropy_profile", "profile", three], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["r1,rinf", "0,0.5", "0.25,0.25", "1,0"]
