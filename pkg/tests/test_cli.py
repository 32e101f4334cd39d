"""End-to-end command-line behavior: formats, exit codes, determinism."""

import csv
import json
import math
import re

import pytest

from zonet.cli import main, parse_theta


def run(argv):
    return main(argv)


class TestParseTheta:
    def test_bare_number_is_degrees(self):
        assert parse_theta("50") == pytest.approx(math.radians(50.0), abs=1e-15)

    def test_rad_suffix(self):
        assert parse_theta("0.5rad") == 0.5

    def test_deg_suffix(self):
        assert parse_theta("20deg") == pytest.approx(math.radians(20.0), abs=1e-15)

    def test_whitespace_tolerated(self):
        assert parse_theta(" 0.5 rad ".replace(" rad ", "rad")) == 0.5

    def test_garbage_rejected(self):
        with pytest.raises(ValueError):
            parse_theta("fifty")


class TestBuild:
    def test_obj_counts_n8(self, tmp_path):
        out = tmp_path / "p.obj"
        assert run(["build", "-n", "8", "--theta", "50", "--obj", str(out)]) == 0
        text = out.read_text()
        assert len(re.findall(r"^v ", text, re.M)) == 58
        assert len(re.findall(r"^f ", text, re.M)) == 56

    def test_obj_counts_n3(self, tmp_path):
        out = tmp_path / "p.obj"
        assert run(["build", "-n", "3", "--theta", "30", "--obj", str(out)]) == 0
        text = out.read_text()
        assert len(re.findall(r"^v ", text, re.M)) == 8
        assert len(re.findall(r"^f ", text, re.M)) == 6

    def test_faces_reference_valid_vertices(self, tmp_path):
        out = tmp_path / "p.obj"
        run(["build", "-n", "6", "--theta", "40", "--obj", str(out)])
        nv = 0
        for line in out.read_text().splitlines():
            if line.startswith("v "):
                nv += 1
            elif line.startswith("f "):
                ids = [int(t) for t in line.split()[1:]]
                assert len(ids) == 4
                assert all(1 <= i <= nv for i in ids)

    def test_json_mesh(self, tmp_path):
        out = tmp_path / "p.json"
        assert run(["build", "-n", "5", "--theta", "0.5rad", "--json", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["schema"] == 1
        assert len(doc["vertices"]) == 22
        assert len(doc["faces"]) == 20
        assert doc["theta_rad"] == 0.5

    def test_n_below_3_exits_2(self, capsys):
        assert run(["build", "-n", "2", "--theta", "20"]) == 2
        assert "n must be" in capsys.readouterr().err

    def test_theta_zero_exits_2(self):
        assert run(["build", "-n", "8", "--theta", "0"]) == 2


class TestNet:
    def test_polygon_count_full_net(self, tmp_path):
        out = tmp_path / "n.svg"
        assert run(["net", "-n", "8", "--theta", "50", "--svg", str(out)]) == 0
        text = out.read_text()
        assert text.count("<polygon") == 56
        assert text.count("<circle") == 1  # o is marked

    def test_zone_subset(self, tmp_path):
        out = tmp_path / "z.svg"
        assert run(
            ["net", "-n", "16", "--theta", "20", "--svg", str(out), "--zone", "0"]
        ) == 0
        assert out.read_text().count("<polygon") == 15

    def test_theta_zero_net_renders(self, tmp_path):
        out = tmp_path / "s.svg"
        assert run(["net", "-n", "16", "--theta", "0", "--svg", str(out)]) == 0
        assert out.read_text().count("<polygon") == 16 * 15

    def test_zone_zero_is_red_hue(self, tmp_path):
        out = tmp_path / "n.svg"
        run(["net", "-n", "6", "--theta", "30", "--svg", str(out)])
        assert "hsl(0, 85%, 55%)" in out.read_text()

    def test_viewbox_present(self, tmp_path):
        out = tmp_path / "n.svg"
        run(["net", "-n", "6", "--theta", "30", "--svg", str(out)])
        assert re.search(r'viewBox="0 0 [\d.]+ [\d.]+"', out.read_text())

    def test_deterministic_bytes(self, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        run(["net", "-n", "12", "--theta", "35", "--svg", str(a)])
        run(["net", "-n", "12", "--theta", "35", "--svg", str(b)])
        assert a.read_bytes() == b.read_bytes()


class TestVerify:
    def test_pass_exit_zero_and_schema(self, tmp_path):
        out = tmp_path / "v.json"
        assert run(["verify", "-n", "16", "--theta", "20", "--json", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["schema"] == 1
        assert doc["pass"] is True
        assert json.loads(json.dumps(doc)) == doc

    def test_theta_zero_suite(self):
        assert run(["verify", "-n", "16", "--theta", "0"]) == 0

    def test_margins_reported_per_check(self, tmp_path):
        out = tmp_path / "v.json"
        run(["verify", "-n", "8", "--theta", "50", "--json", str(out)])
        doc = json.loads(out.read_text())
        for body in doc["checks"].values():
            assert set(body) == {"pass", "margin", "detail"}


class TestSweep:
    def test_single_row_matches_verify(self, tmp_path):
        out = tmp_path / "s.csv"
        code = run(
            ["sweep", "--n-min", "16", "--n-max", "16", "--thetas", "20", "--csv", str(out)]
        )
        assert code == 0
        rows = list(csv.DictReader(out.read_text().splitlines()))
        assert len(rows) == 1
        row = rows[0]
        assert row["n"] == "16"
        assert float(row["alpha_deg"]) == pytest.approx(21.126976323, abs=1e-9)
        assert float(row["max_beta_deg"]) == pytest.approx(21.126976323, abs=1e-9)
        assert row["overlap_pairs"] == "0"
        assert row["pass"] == "pass"

    def test_rows_sorted_by_n_then_theta(self, tmp_path):
        out = tmp_path / "s.csv"
        run(
            [
                "sweep", "--n-min", "3", "--n-max", "5",
                "--thetas", "20,0.5rad,5", "--csv", str(out),
            ]
        )
        rows = list(csv.DictReader(out.read_text().splitlines()))
        keys = [(int(r["n"]), parse_theta(r["theta_deg"])) for r in rows]
        assert keys == sorted(keys)

    def test_jobs_do_not_change_bytes(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        grid = ["--n-min", "3", "--n-max", "6", "--thetas", "0,1,50"]
        assert run(["sweep", *grid, "--jobs", "1", "--csv", str(a)]) == 0
        assert run(["sweep", *grid, "--jobs", "4", "--csv", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()


class TestCrescentCommand:
    def test_table_shape_and_bounds(self, tmp_path):
        out = tmp_path / "c.csv"
        assert run(["crescent", "--steps", "40", "--csv", str(out)]) == 0
        rows = list(csv.DictReader(out.read_text().splitlines()))
        assert len(rows) == 40
        assert float(rows[0]["n"]) == pytest.approx(3.0)
        assert float(rows[-1]["n"]) == pytest.approx(1e4)
        for row in rows:
            assert 1.0 / 3.0 - 1e-6 < float(row["ratio"]) <= 0.5
        assert float(rows[-1]["ratio"]) == pytest.approx(1.0 / 3.0, abs=1e-3)

    def test_n3_row_uses_obtuse_branch(self, tmp_path):
        out = tmp_path / "c.csv"
        run(["crescent", "--steps", "10", "--csv", str(out)])
        row = list(csv.DictReader(out.read_text().splitlines()))[0]
        assert float(row["alpha_rad"]) == pytest.approx(math.radians(120.0), abs=1e-9)


class TestSubtendedCommand:
    def test_16_20_table(self, tmp_path):
        out = tmp_path / "b.csv"
        assert run(["subtended", "-n", "16", "--theta", "20", "--csv", str(out)]) == 0
        rows = list(csv.DictReader(out.read_text().splitlines()))
        assert len(rows) == 15
        betas = [float(r["beta_deg"]) for r in rows]
        assert betas[0] == pytest.approx(21.126976323, abs=1e-8)
        assert all(b <= betas[0] for b in betas[1:])

    def test_24_40_first_value(self, tmp_path):
        out = tmp_path / "b.csv"
        run(["subtended", "-n", "24", "--theta", "40", "--csv", str(out)])
        rows = list(csv.DictReader(out.read_text().splitlines()))
        assert float(rows[0]["beta_deg"]) == pytest.approx(11.48, abs=0.01)
