import json

from horncone.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestTables:
    def test_sigma_row(self, capsys):
        code, out, _ = run(capsys, "tables", "--rmax", "6", "--sigma", "3")
        assert code == 0
        counts = [int(line.split()[1]) for line in out.strip().split("\n")[1:]]
        assert counts == [2, 3, 4, 7, 10, 10]

    def test_plain_rows_csv(self, capsys):
        code, out, _ = run(capsys, "tables", "--rmax", "4", "--format", "csv")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "r,l0,l_min"
        assert lines[1:] == ["1,2,2", "2,8,5", "3,20,20", "4,52,52"]

    def test_json(self, capsys):
        code, out, _ = run(capsys, "tables", "--rmax", "2", "--format", "json")
        rows = json.loads(out)
        assert rows == [{"r": 1, "l0": 2, "l_min": 2}, {"r": 2, "l0": 8, "l_min": 5}]


class TestTuples:
    def test_orbit_listing(self, capsys):
        code, out, _ = run(capsys, "tuples", "--d", "1", "--r", "2",
                           "--level", "00", "--orbits")
        assert code == 0
        assert out == "{1} {2} {2}  x3\n"

    def test_sigma_stable_marker(self, capsys):
        code, out, _ = run(capsys, "tuples", "--d", "1", "--r", "4",
                           "--level", "00", "--orbits")
        lines = out.strip().split("\n")
        assert lines == ["{1} {4} {4}  x3", "{2} {3} {4}  x6", "{3} {3} {3}  x1 *"]

    def test_full_listing_counts(self, capsys):
        code, out, _ = run(capsys, "tuples", "--d", "1", "--r", "2",
                           "--level", "00")
        assert len(out.strip().split("\n")) == 3

    def test_orbit_sizes_partition_level(self, capsys):
        _, flat, _ = run(capsys, "tuples", "--d", "2", "--r", "4", "--level", "0")
        total = len(flat.strip().split("\n"))
        _, grouped, _ = run(capsys, "tuples", "--d", "2", "--r", "4",
                            "--level", "0", "--orbits")
        sizes = [int(line.split("x")[-1].split()[0])
                 for line in grouped.strip().split("\n")]
        assert sum(sizes) == total

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "tuples", "--d", "1", "--r", "3",
                           "--level", "00", "--orbits", "--format", "json")
        rows = json.loads(out)
        assert {"tuple": [[1], [3], [3]], "sigma_stable": False,
                "orbit_size": 3} in rows

    def test_bad_level(self, capsys):
        code, _, err = run(capsys, "tuples", "--d", "1", "--r", "2",
                           "--level", "min00")
        assert code == 2 and "level" in err

    def test_bad_shape(self, capsys):
        code, _, _ = run(capsys, "tuples", "--d", "3", "--r", "2")
        assert code == 2


class TestSystemAndMember:
    def test_system_json(self, capsys):
        code, out, _ = run(capsys, "system", "--r", "6", "--sigma", "3",
                           "--format", "json")
        data = json.loads(out)
        assert data["counts"]["total"] == 10
        tuples = {tuple(h["tuple"][0]) for h in data["horn"]}
        assert tuples == {(1, 5, 6), (2, 4, 6), (3, 4, 5)}

    def test_system_csv_golden_stability(self, capsys):
        _, first, _ = run(capsys, "system", "--r", "3", "--format", "csv")
        _, second, _ = run(capsys, "system", "--r", "3", "--format", "csv")
        assert first == second

    def test_member_verdict(self, capsys, tmp_path):
        path = tmp_path / "fam.json"
        path.write_text(json.dumps(
            {"spectra": [["1", "-1"], ["1", "-1"], ["1", "-1"]], "t": "0"}
        ))
        code, out, _ = run(capsys, "member", "--input", str(path))
        assert code == 0 and out == "member\n"

    def test_member_violation(self, capsys, tmp_path):
        path = tmp_path / "fam.json"
        path.write_text(json.dumps(
            {"spectra": [["0", "0", "0"], ["0", "0", "0"], ["1", "0", "-1"]],
             "t": "0"}
        ))
        code, out, _ = run(capsys, "member", "--input", str(path),
                           "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["member"] is False
        assert "{3}" in data["violated"] and "{1}" in data["violated"]

    def test_member_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "member", "--input", str(tmp_path / "nope.json"))
        assert code == 2


class TestRedundancyCommand:
    def test_sigma_rank6_slice(self, capsys):
        code, out, _ = run(capsys, "redundancy", "--r", "6", "--sigma", "3",
                           "--slice-t")
        data = json.loads(out)
        verdicts = {row["index"]: row["verdict"] for row in data["rows"]}
        redundant = [i for i, v in verdicts.items() if v == "redundant"]
        assert len(redundant) == 1

    def test_minimize_rank2(self, capsys):
        code, out, _ = run(capsys, "redundancy", "--r", "2", "--minimize")
        data = json.loads(out)
        assert data["retained"] == 5


class TestWitnessCommand:
    def test_witness_json(self, capsys, tmp_path):
        path = tmp_path / "fam.json"
        path.write_text(json.dumps(
            {"spectra": [["1", "-1"], ["1", "-1"], ["1", "-1"]], "t": "0"}
        ))
        code, out, _ = run(capsys, "witness", "--input", str(path), "--seed", "2")
        data = json.loads(out)
        assert code == 0 and data["converged"] is True

    def test_residual_csv(self, capsys, tmp_path):
        path = tmp_path / "fam.json"
        path.write_text(json.dumps(
            {"spectra": [["1", "-1"], ["1", "-1"], ["1", "-1"]], "t": "0"}
        ))
        log = tmp_path / "trace.csv"
        code, _, _ = run(capsys, "witness", "--input", str(path),
                         "--seed", "2", "--residual-csv", str(log))
        assert code == 0
        assert log.read_text().startswith("attempt,iteration,residual")


class TestCrosscheck:
    def test_clean(self, capsys):
        code, out, _ = run(capsys, "crosscheck", "--r", "2", "--n", "4")
        data = json.loads(out)
        assert code == 0 and data["mismatches"] == 0 and data["tuples"] == 216

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        from horncone import cli as cli_mod
        from horncone.horn import CrossCheckReport

        monkeypatch.setattr(
            cli_mod.horn, "cross_check",
            lambda r, n, store: CrossCheckReport(r, n, 1, [("fake", 0, 1)]),
        )
        code, out, _ = run(capsys, "crosscheck", "--r", "1", "--n", "2")
        assert code == 1
        assert json.loads(out)["mismatches"] == 1


class TestCache:
    def test_cache_dir_roundtrip(self, capsys, tmp_path):
        code1, out1, _ = run(capsys, "tables", "--rmax", "3",
                             "--cache-dir", str(tmp_path))
        code2, out2, _ = run(capsys, "tables", "--rmax", "3",
                             "--cache-dir", str(tmp_path))
        assert code1 == code2 == 0 and out1 == out2
        assert any(tmp_path.rglob("*.json"))

    def test_no_cache_flag(self, capsys, tmp_path):
        code, _, _ = run(capsys, "tables", "--rmax", "2",
                         "--cache-dir", str(tmp_path), "--no-cache")
        assert code == 0
        assert not any(tmp_path.rglob("*.json"))


class TestOutputFile:
    def test_output_golden_bytes(self, capsys, tmp_path):
        out1 = tmp_path / "a.txt"
        out2 = tmp_path / "b.txt"
        run(capsys, "tuples", "--d", "2", "--r", "5", "--level", "00",
            "--orbits", "-o", str(out1))
        run(capsys, "tuples", "--d", "2", "--r", "5", "--level", "00",
            "--orbits", "-o", str(out2))
        assert out1.read_bytes() == out2.read_bytes()
