"""Test the kv command-line interface."""

import json

import pytest

from koszulx import __version__
from koszulx.cli import build_parser, main


class TestParser:
    """Test the argument parser."""

    def test_common_options(self):
        """Test options shared by every command."""
        args = build_parser().parse_args(["check", "x*y", "--p", "101", "--json", "-v"])
        assert args.command == "check"
        assert args.p == 101
        assert args.json and args.verbose
        assert args.degree_cap == 120
        assert args.workers == 1

    def test_missing_command(self):
        """Test that a command is required."""
        with pytest.raises(SystemExit):
            build_parser().parse_args([])

    def test_version(self, capsys):
        """Test the version flag."""
        with pytest.raises(SystemExit):
            main(["--version"])
        assert __version__ in capsys.readouterr().out


class TestCommands:
    """Test the commands of kv."""

    def test_gb(self, capsys):
        """Test the Gröbner basis command."""
        assert main(["gb", "x, y, x^2"]) == 0
        assert capsys.readouterr().out.split() == ["x", "y"]

    def test_syz(self, capsys):
        """Test the syzygy command in JSON."""
        assert main(["syz", "xy, xz, yz", "--json"]) == 0
        document = json.loads(capsys.readouterr().out)
        assert document["command"] == "syz"
        assert document["degrees"] == [3, 3]
        assert len(document["syzygies"]) == 2

    def test_saturate(self, capsys):
        """Test the saturation command."""
        assert main(["saturate", "x^2, x*y, x*z"]) == 0
        assert capsys.readouterr().out.strip() == "x"

    def test_hilbert(self, capsys):
        """Test the Hilbert command on a quotient."""
        assert main(["hilbert", "--quotient", "xy, xz, yz"]) == 0
        out = capsys.readouterr().out
        assert "Hilbert polynomial: 3" in out
        assert "values: 1 3 3" in out

    def test_check_text(self, capsys):
        """Test the text report of three reduced points."""
        assert main(["check", "xy, xz, yz"]) == 0
        out = capsys.readouterr().out
        assert "deg Z: 3" in out
        assert "K=V: true" in out
        assert "consistent: true" in out

    def test_check_json(self, capsys):
        """Test the JSON report of a fat point."""
        assert main(["check", "x^2, x*y, y^2", "--json"]) == 0
        document = json.loads(capsys.readouterr().out)
        assert document["schema"] == "kv-report/1"
        assert document["deg_Z"] == 3
        assert document["herzog_slack"] == 1
        assert document["verdicts"] == {"k_eq_v": False, "lci": False, "consistent": True}

    def test_check_file(self, capsys, tmp_path):
        """Test reading generators from a file."""
        path = tmp_path / "ideal.txt"
        path.write_text("x*y\nx*z\ny*z\n")
        assert main(["check", "--file", str(path), "--p", "101"]) == 0
        assert "K=V: true" in capsys.readouterr().out

    def test_verbose(self, capsys):
        """Test progress messages on stderr."""
        assert main(["check", "xy, xz, yz", "-v"]) == 0
        assert "[kv]" in capsys.readouterr().err


class TestErrors:
    """Test exit codes of failing commands."""

    @pytest.mark.parametrize(
        "argv",
        [
            ["check", "x, y"],
            ["check", "x^2, y^2, z^2"],
            ["check", "x*y, x*z, x^2"],
            ["gb", "x + w"],
            ["gb", "x + y^2"],
            ["gb"],
            ["gb", "x", "--p", "4"],
            ["gb", "--file", "/nonexistent/ideal.txt"],
            ["verify", "no-such-suite"],
        ],
    )
    def test_input_errors(self, capsys, argv):
        """Test that input and precondition errors exit with status 1."""
        assert main(argv) == 1
        assert capsys.readouterr().err.startswith("kv: error:")


class TestVerify:
    """Test the verify command."""

    def test_sym2(self, capsys):
        """Test the Sym_2 suite."""
        assert main(["verify", "sym2"]) == 0
        out = capsys.readouterr().out
        assert "sym2: 5/5 passed" in out

    def test_oracle_json(self, capsys):
        """Test the oracle suite with one random case in JSON."""
        assert main(["verify", "oracle", "--trials", "1", "--json"]) == 0
        document = json.loads(capsys.readouterr().out)
        assert document["suite"] == "oracle"
        assert document["passed"] == document["total"] == 8
