import csv
import json

import pytest

from loghankel.cli import SAMPLE_HEADER, evaluate_named, main
from loghankel.families import Named


def read_csv(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    return rows[0], [[float(v) for v in r] for r in rows[1:]]


class TestVerify:
    def test_ss_default_samples(self, tmp_path, capsys):
        out = tmp_path / "r.json"
        assert main(["verify", "--family", "ss", "--samples", "100000", "--seed", "7", "--json", str(out)]) == 0
        text = capsys.readouterr().out
        assert "maxF=12" in text
        data = json.loads(out.read_text())
        assert data["schema_version"] == 1
        assert data["overall"] == "pass"
        ids = {c["claim_id"] for c in data["claims"]}
        assert {"ss.max_F", "ss.sharp_f1", "ss.stress"} <= ids
        assert not any(i.startswith("ks.") for i in ids)

    def test_prefix_only(self, capsys):
        assert main(["verify", "--family", "all", "--samples", "2"]) == 0
        assert "overall: PASS" in capsys.readouterr().out

    def test_deterministic_json(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for p in (a, b):
            main(["verify", "--samples", "500", "--json", str(p)])
        assert a.read_bytes() == b.read_bytes()

    def test_report_invariants(self, tmp_path):
        out = tmp_path / "r.json"
        code = main(["verify", "--samples", "300", "--json", str(out)])
        data = json.loads(out.read_text())
        assert (code == 0) == (data["overall"] == "pass")
        assert all(c["anchor"] for c in data["claims"])
        sharp = next(c for c in data["claims"] if c["claim_id"] == "ks.sharp_f3")
        assert sharp["expected"] == "1/36" and sharp["computed"] == "1/36"

    def test_bad_flags(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--family", "xx"])
        assert exc.value.code != 0
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--samples", "0"])
        assert exc.value.code != 0


class TestEval:
    def test_f1(self, capsys):
        assert main(["eval", "--function", "f1"]) == 0
        assert "|H21| = 1/4" in capsys.readouterr().out

    def test_koebe(self):
        assert evaluate_named(Named.KOEBE, 32)["gammas"] == ["1/1", "1/2", "1/3"]

    def test_f4_note(self, tmp_path):
        out = tmp_path / "f4.json"
        main(["eval", "--function", "f4", "--json", str(out)])
        data = json.loads(out.read_text())
        assert data["h21"] == "11/2304"
        assert "11/576" in data["note"]
        assert data["membership_residual"]["ks"] > 0

    def test_unknown_function(self):
        with pytest.raises(SystemExit):
            main(["eval", "--function", "f9"])


class TestSurface:
    def test_grid3(self, tmp_path):
        out = tmp_path / "s.csv"
        main(["surface", "--family", "ss", "--grid", "3", "--out", str(out)])
        header, rows = read_csv(out)
        assert header == ["x", "y", "value"]
        assert len(rows) == 9
        assert [0.0, 1.0, 12.0] in rows

    def test_ks_origin(self, tmp_path):
        out = tmp_path / "s.csv"
        main(["surface", "--family", "ks", "--grid", "2", "--out", str(out)])
        _, rows = read_csv(out)
        assert rows[0] == [0.0, 0.0, 0.0]

    def test_grid101_max(self, tmp_path):
        out = tmp_path / "s.csv"
        main(["surface", "--family", "ss", "--grid", "101", "--out", str(out)])
        _, rows = read_csv(out)
        assert abs(max(r[2] for r in rows) - 12) <= 1e-9

    def test_lf_endings_and_precision(self, tmp_path):
        out = tmp_path / "s.csv"
        main(["surface", "--family", "ss", "--grid", "7", "--out", str(out)])
        raw = out.read_bytes()
        assert b"\r" not in raw
        _, rows = read_csv(out)
        assert any(len(repr(r[0])) > 10 for r in rows)  # 1/6 etc. keep full precision

    def test_unwritable(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["surface", "--family", "ss", "--grid", "3", "--out", str(tmp_path / "no" / "x.csv")])
        assert exc.value.code != 0


class TestSample:
    def test_single_row(self, tmp_path):
        out = tmp_path / "x.csv"
        main(["sample", "--family", "ss", "--count", "1", "--out", str(out)])
        header, rows = read_csv(out)
        assert header == SAMPLE_HEADER
        assert len(rows) == 1 and rows[0][-1] == 0.25

    def test_ks_second_row(self, tmp_path):
        out = tmp_path / "x.csv"
        main(["sample", "--family", "ks", "--count", "2", "--out", str(out)])
        _, rows = read_csv(out)
        assert rows[1][:6] == [1, 0, 0, 0, 0, 0]
        assert rows[1][-1] == pytest.approx(11 / 2304, rel=1e-15)

    def test_deterministic(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for p in (a, b):
            main(["sample", "--family", "ks", "--count", "200", "--seed", "3", "--out", str(p)])
        assert a.read_bytes() == b.read_bytes()
