import json
import math
from pathlib import Path

import pytest

from platforge.cli import main
from platforge.errors import DomainError
from platforge.scan import CSV_COLUMNS, SCHEMA_VERSION, scaling_scan

GOLDEN = Path(__file__).parent / "data" / "scan_golden.csv"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestScan:
    def test_single_row(self):
        r = scaling_scan(2, 2)
        assert len(r.rows) == 1 and r.rows[0].lambda_hom > 1

    def test_prefix_of_golden(self):
        golden = GOLDEN.read_text(encoding="utf-8").splitlines(keepends=True)
        assert scaling_scan(2, 8).to_csv() == "".join(golden[:8])

    def test_parallel_matches_serial(self):
        assert scaling_scan(2, 7, jobs=2).to_csv() == scaling_scan(2, 7).to_csv()

    def test_rows(self):
        r = scaling_scan(2, 9)
        assert [row.g for row in r.rows] == list(range(2, 10))
        for row in r.rows:
            assert row.lambda_hom >= 1 and row.g_log_lambda > 0
            assert row.g_log_lambda == pytest.approx(row.g * math.log(row.lambda_hom), rel=1e-15)
            assert row.millis is None and row.lower_bound

    def test_timing_fills_millis(self):
        row = scaling_scan(2, 2, timing=True).rows[0]
        assert row.millis is not None and row.millis >= 0

    def test_header(self):
        assert scaling_scan(2, 2).to_csv().splitlines()[0] == ",".join(CSV_COLUMNS)

    @pytest.mark.parametrize("lo,hi", [(1, 3), (0, 2), (5, 4)])
    def test_domain(self, lo, hi):
        with pytest.raises(DomainError):
            scaling_scan(lo, hi)


class TestCliBraid:
    def test_tilde(self, capsys):
        assert run(capsys, "braid", "tilde", "--n", "4", "s3")[:2] == (0, "s1 s3\n")

    def test_family(self, capsys):
        assert run(capsys, "braid", "family", "--g", "2")[1] == "s3 s4 s5\n"

    def test_skew_out_of_range(self, capsys):
        code, out, err = run(capsys, "braid", "skew", "--n", "4", "s5")
        assert code == 2 and out == "" and "s5" in err

    def test_parse_error(self, capsys):
        assert run(capsys, "braid", "skew", "--n", "4", "s1 x2")[0] == 2

    def test_palindromic_equal_perm(self, capsys):
        assert run(capsys, "braid", "palindromic", "--n", "4", "s1 s2 s3")[1] == "true\n"
        assert run(capsys, "braid", "equal", "--n", "3", "s1 s2 s1", "s2 s1 s2")[1] == "true\n"
        assert run(capsys, "braid", "perm", "--n", "6", "s3 s4 s5")[1] == "(3 4 5 6)\n"

    def test_json(self, capsys):
        out = run(capsys, "braid", "tilde", "--n", "4", "s3", "--format", "json")[1]
        assert json.loads(out) == {"n": 4, "word": "s1 s3"}

    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["braid", "tilde", "--n", "4", "s3", "--bogus"])
        assert exc.value.code == 2


class TestCliLink:
    def test_plat_certify(self, capsys):
        code, out, _ = run(capsys, "link", "plat", "--g", "1", "s3", "--certify-unknot")
        r = json.loads(out)
        assert code == 0 and r["determinant"] == 1 and r["unknot_certificate"] == "certified_unknot"
        assert r["schema"] == "platforge.report/1" and r["config"]["word"] == "s3"

    def test_closure_trefoil(self, capsys):
        r = json.loads(run(capsys, "link", "closure", "--n", "2", "s1 s1 s1", "invariants")[1])
        assert r["determinant"] == 3 and r["alexander"] == "t^2 - t + 1"

    def test_plat_empty(self, capsys):
        r = json.loads(run(capsys, "link", "plat", "--g", "1", "")[1])
        assert r["components"] == 2 and r["crossings"] == 0

    def test_odd_plat(self, capsys):
        assert run(capsys, "link", "plat", "--n", "5", "s1")[0] == 2

    def test_bracket_limit(self, capsys):
        word = " ".join(["s1"] * 15)
        assert run(capsys, "link", "closure", "--n", "2", word, "--bracket")[0] == 3

    def test_pd_roundtrip(self, capsys, tmp_path):
        pd = tmp_path / "k.pd"
        code, _, _ = run(capsys, "link", "closure", "--n", "3", "s1 S2 s1 S2", "export-pd", "--out", str(pd))
        assert code == 0
        r = json.loads(run(capsys, "link", "import-pd", str(pd))[1])
        assert r["alexander"] == "t^2 - 3*t + 1"
        assert run(capsys, "link", "simplify", str(pd))[1] == pd.read_text(encoding="utf-8")

    def test_simplify_plat(self, capsys):
        assert run(capsys, "link", "plat", "--g", "3", "s3 s4 s5 s6 s7", "simplify")[1] == "O\n"

    def test_missing_file(self, capsys):
        assert run(capsys, "link", "invariants", "/nonexistent/x.pd")[0] == 2

    def test_budget_env(self, capsys, monkeypatch):
        monkeypatch.setenv("PLATFORGE_BUDGET", "bad")
        assert run(capsys, "link", "plat", "--g", "1", "s3", "--certify-unknot")[0] == 2


class TestCliScan:
    def test_bad_range(self, capsys):
        assert run(capsys, "scan", "--gmin", "1", "--gmax", "3")[0] == 2

    def test_json(self, capsys):
        code, out, _ = run(capsys, "scan", "--gmin", "2", "--gmax", "2", "--format", "json")
        r = json.loads(out)
        assert code == 0 and r["schema"] == SCHEMA_VERSION and len(r["rows"]) == 1
        assert r["config"]["g_range"] == [2, 2] and r["rows"][0]["lower_bound"] is True

    def test_window(self, capsys, tmp_path):
        out = tmp_path / "s.csv"
        assert run(capsys, "scan", "--gmin", "2", "--gmax", "4", "--out", str(out),
                   "--assert-window", "1.9", "2.2")[0] == 0
        assert run(capsys, "scan", "--gmin", "2", "--gmax", "4", "--assert-window", "2.0", "2.2")[0] == 1

    def test_byte_stable(self, capsys):
        a = run(capsys, "scan", "--gmin", "2", "--gmax", "5")[1]
        b = run(capsys, "scan", "--gmin", "2", "--gmax", "5", "--jobs", "2")[1]
        assert a == b
