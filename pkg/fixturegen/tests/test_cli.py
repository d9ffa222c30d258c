import importlib.util
import json

import pytest

from fixturegen import cli

from fake_backend import FakeBackend

SNAPPY_PRESENT = importlib.util.find_spec("snappy") is not None


def run_cli(capsys, argv, backend):
    rc = cli.main([str(a) for a in argv], backend=backend)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestExportCommand:
    def test_export_writes_file(self, tmp_path, capsys):
        out = tmp_path / "t23.json"
        rc, stdout, _ = run_cli(
            capsys, ["export", "T(2,3)", "-o", out], FakeBackend())
        assert rc == 0
        assert "wrote %s (T(2,3))" % out in stdout
        assert json.loads(out.read_text())["name"] == "T(2,3)"

    def test_complex_flag(self, tmp_path, capsys):
        out = tmp_path / "t25.json"
        rc, _, _ = run_cli(
            capsys, ["export", "T(2,5)", "-o", out, "--complex"],
            FakeBackend())
        assert rc == 0
        assert "complex" in json.loads(out.read_text())

    def test_selftest_runs_before_export(self, tmp_path, capsys):
        backend = FakeBackend()
        rc, _, _ = run_cli(
            capsys, ["export", "4_1", "-o", tmp_path / "f.json"], backend)
        assert rc == 0
        assert backend.calls == [("T(2,3)", False), ("4_1", False)]

    def test_no_selftest_skips_the_guard(self, tmp_path, capsys):
        backend = FakeBackend()
        rc, _, _ = run_cli(
            capsys,
            ["export", "4_1", "-o", tmp_path / "f.json", "--no-selftest"],
            backend)
        assert rc == 0
        assert backend.calls == [("4_1", False)]

    def test_symmetry_failure_exits_one(self, tmp_path, capsys):
        rc, _, err = run_cli(
            capsys, ["export", "asym", "-o", tmp_path / "a.json"],
            FakeBackend())
        assert rc == 1
        assert "symmetry" in err

    def test_unknown_knot_exits_one(self, tmp_path, capsys):
        rc, _, err = run_cli(
            capsys, ["export", "nonsense", "-o", tmp_path / "n.json"],
            FakeBackend())
        assert rc == 1
        assert "unknown knot" in err

    def test_unwritable_output_exits_one(self, tmp_path, capsys):
        rc, _, err = run_cli(
            capsys,
            ["export", "4_1", "-o", tmp_path / "missing" / "f.json"],
            FakeBackend())
        assert rc == 1
        assert "error:" in err


class TestSelftestCommand:
    def test_passes(self, capsys):
        rc, out, _ = run_cli(capsys, ["selftest"], FakeBackend())
        assert rc == 0
        assert "conventions match" in out

    def test_drifted_tool_fails(self, capsys):
        from fake_backend import RAW
        rc, _, err = run_cli(
            capsys, ["selftest"], FakeBackend({"T(2,3)": RAW["4_1"]}))
        assert rc == 1
        assert "convention self-test" in err


class TestUsage:
    def test_no_command(self, capsys):
        rc, _, err = run_cli(capsys, [], FakeBackend())
        assert rc == 1
        assert "usage:" in err

    def test_missing_output_flag(self, tmp_path, capsys):
        rc, _, err = run_cli(capsys, ["export", "4_1"], FakeBackend())
        assert rc == 1
        assert "usage:" in err

    def test_help_exits_zero(self, capsys):
        rc, out, _ = run_cli(capsys, ["--help"], FakeBackend())
        assert rc == 0
        assert "export" in out and "selftest" in out


@pytest.mark.skipif(SNAPPY_PRESENT, reason="external calculator installed")
class TestMissingTool:
    def test_actionable_error(self, capsys):
        rc = cli.main(["selftest"])
        captured = capsys.readouterr()
        assert rc == 1
        assert "pip install snappy" in captured.err
