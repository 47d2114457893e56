"""End-to-end command-line tests.

Everything runs in-process through main(argv) so exit codes, stdout
documents, and stderr diagnostics can be asserted exactly.  One subprocess
test at the end confirms the installed entry point works outside this
interpreter.
"""

from __future__ import annotations

import subprocess
import sys

import pytest

from detours import build_digraph, build_undirected, dumps_graph
from detours.cli import main
from detours.fileio import parse_witness

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


def _write(tmp_path, name, g, comments=()):
    path = tmp_path / name
    path.write_text(dumps_graph(g, comments=comments))
    return str(path)


@pytest.fixture
def detour_yes_file(tmp_path):
    # dist(0,5) = 1 via the direct arc; 0-1-2-3-4-5 beats it by 4.
    g = build_digraph(6, [(0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)])
    return _write(tmp_path, "yes.dg", g)


@pytest.fixture
def path3_file(tmp_path):
    return _write(tmp_path, "p3.dg", build_digraph(3, [(0, 1), (1, 2)]))


@pytest.fixture
def c6_file(tmp_path):
    g = build_undirected(6, [(i, (i + 1) % 6) for i in range(6)])
    return _write(tmp_path, "c6.ug", g)


class TestDetourCommand:
    def test_yes_includes_one_indexed_witness(self, detour_yes_file, capsys):
        code = main(
            ["detour", "--graph", detour_yes_file,
             "--source", "1", "--target", "6", "--k", "2"]
        )
        assert code == EXIT_YES
        doc = parse_witness(capsys.readouterr().out)
        assert doc.found
        assert doc.length == 5
        assert doc.baseline_kind == "dist"
        assert doc.baseline_value == 1
        assert doc.meta == "exact"
        # parse_witness returns 0-indexed vertices; the text is 1-indexed.
        assert doc.path == (0, 1, 2, 3, 4, 5)

    def test_no_exit_code(self, path3_file, capsys):
        code = main(
            ["detour", "--graph", path3_file,
             "--source", "1", "--target", "3", "--k", "1"]
        )
        assert code == EXIT_NO
        doc = parse_witness(capsys.readouterr().out)
        assert not doc.found
        assert doc.meta == "exact"
        assert doc.path == ()

    def test_tight_budget_is_inconclusive(self, detour_yes_file, capsys):
        code = main(
            ["detour", "--graph", detour_yes_file,
             "--source", "1", "--target", "6", "--k", "2",
             "--strategy", "bnb", "--budget", "1"]
        )
        assert code == EXIT_INCONCLUSIVE
        doc = parse_witness(capsys.readouterr().out)
        assert not doc.found
        assert doc.meta == "inconclusive"
        assert doc.notes

    def test_rejects_color_coding(self, detour_yes_file, capsys):
        code = main(
            ["detour", "--graph", detour_yes_file,
             "--source", "1", "--target", "6", "--k", "2",
             "--strategy", "color-coding"]
        )
        assert code == EXIT_USAGE
        err = capsys.readouterr().err
        assert "error:" in err and "needs an exact strategy" in err

    @pytest.mark.parametrize(
        "argv_patch,fragment",
        [
            (("--source", "0"), "--source 0 out of range 1..6"),
            (("--target", "7"), "--target 7 out of range 1..6"),
            (("--source", "6", "--target", "6"), "must differ"),
        ],
    )
    def test_vertex_validation(self, detour_yes_file, capsys, argv_patch, fragment):
        argv = ["detour", "--graph", detour_yes_file,
                "--source", "1", "--target", "6", "--k", "2"]
        for i in range(0, len(argv_patch), 2):
            idx = argv.index(argv_patch[i]) + 1
            argv[idx] = argv_patch[i + 1]
        assert main(argv) == EXIT_USAGE
        assert fragment in capsys.readouterr().err

    def test_undirected_flag_rejects_directed_file(self, path3_file, capsys):
        code = main(
            ["detour", "--graph", path3_file, "--undirected",
             "--source", "1", "--target", "3", "--k", "1"]
        )
        assert code == EXIT_USAGE
        assert "directed header" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        code = main(
            ["detour", "--graph", str(tmp_path / "absent.dg"),
             "--source", "1", "--target", "2", "--k", "1"]
        )
        assert code == EXIT_USAGE
        assert "error:" in capsys.readouterr().err

    def test_malformed_file(self, tmp_path, capsys):
        bad = tmp_path / "bad.dg"
        bad.write_text("a 1 2\n")
        code = main(
            ["detour", "--graph", str(bad),
             "--source", "1", "--target", "2", "--k", "1"]
        )
        assert code == EXIT_USAGE
        assert "arc before the problem line" in capsys.readouterr().err


class TestLpadCommand:
    def test_cycle_progression(self, c6_file, capsys):
        expectations = [
            (0, EXIT_YES, "diametral-shortest"),
            (1, EXIT_YES, "cycle-subpath"),
            (2, EXIT_YES, "cycle-subpath"),
            (3, EXIT_NO, "exact-search"),
        ]
        for k, want_code, want_stage in expectations:
            code = main(
                ["lpad", "--graph", c6_file, "--k", str(k),
                 "--mode", "undirected2c"]
            )
            assert code == want_code, f"k={k}"
            doc = parse_witness(capsys.readouterr().out)
            assert doc.stage == want_stage
            assert doc.baseline_kind == "diameter"
            assert doc.baseline_value == 3
            if want_code == EXIT_YES:
                assert doc.length == 3 + k

    def test_directed_mode_on_wrong_kind(self, c6_file, capsys):
        code = main(
            ["lpad", "--graph", c6_file, "--k", "1", "--mode", "directed2sc"]
        )
        assert code == EXIT_USAGE
        assert "needs a directed graph" in capsys.readouterr().err

    def test_undirected_mode_on_wrong_kind(self, path3_file, capsys):
        code = main(
            ["lpad", "--graph", path3_file, "--k", "1", "--mode", "undirected2c"]
        )
        assert code == EXIT_USAGE
        assert "needs an undirected graph" in capsys.readouterr().err

    def test_directed_mode_yes(self, tmp_path, capsys):
        # Squared cycle on 8 vertices: 2-strongly-connected by construction.
        arcs = sorted(
            {(i, (i + 1) % 8) for i in range(8)} | {(i, (i + 2) % 8) for i in range(8)}
        )
        path = _write(tmp_path, "sq8.dg", build_digraph(8, arcs))
        code = main(["lpad", "--graph", path, "--k", "3", "--mode", "directed2sc"])
        out = capsys.readouterr().out
        assert code == EXIT_YES
        doc = parse_witness(out)
        assert doc.found and doc.length >= doc.baseline_value + 3

    def test_oracle_mode(self, c6_file, capsys):
        code = main(["lpad", "--graph", c6_file, "--k", "2", "--mode", "oracle"])
        assert code == EXIT_YES
        doc = parse_witness(capsys.readouterr().out)
        assert doc.length == 5


class TestGenerateAndVerify:
    def test_hat_chain_roundtrip(self, tmp_path, capsys):
        out = str(tmp_path / "chain.dg")
        bp = str(tmp_path / "chain.bp")
        code = main(["gen", "hat-chain", "--ell", "2", "-o", out, "--blueprint", bp])
        assert code == EXIT_YES
        assert "n=52, m=108, diameter 26" in capsys.readouterr().out

        code = main(["verify", "hat-chain", "--graph", out, "--blueprint", bp])
        report = capsys.readouterr().out
        assert code == EXIT_YES
        assert report.count("pass  ") == 6
        assert "all clauses pass" in report

    def test_verify_flags_tampering(self, tmp_path, capsys):
        out = str(tmp_path / "chain.dg")
        bp = str(tmp_path / "chain.bp")
        main(["gen", "hat-chain", "--ell", "1", "-o", out, "--blueprint", bp])
        capsys.readouterr()
        text = (tmp_path / "chain.dg").read_text()
        # Splice in a shortcut arc from s (vertex 1) to t (vertex 24, 1-indexed)
        # and fix the header arc count.
        text = text.replace("p dg 36 76", "p dg 36 77") + "a 1 24\n"
        (tmp_path / "chain.dg").write_text(text)
        code = main(["verify", "hat-chain", "--graph", out, "--blueprint", bp])
        report = capsys.readouterr().out
        assert code == EXIT_NO
        assert "FAIL  diameter" in report
        assert "failing: diameter" in report

    def test_reduce_k1(self, tmp_path, capsys):
        src = _write(tmp_path, "k3.ug", build_undirected(3, [(0, 1), (1, 2), (0, 2)]))
        out = str(tmp_path / "k3r.ug")
        bp = str(tmp_path / "k3r.bp")
        code = main(["gen", "reduce-k1", "--graph", src, "-o", out, "--blueprint", bp])
        assert code == EXIT_YES
        assert "n=8, m=10, claimed diameter 4" in capsys.readouterr().out
        assert (tmp_path / "k3r.ug").read_text().splitlines()[1] == "p ug 8 10"
        manifest = (tmp_path / "k3r.bp").read_text()
        assert manifest.startswith("p reduction undirected-k1 8\n")
        assert "r universal" in manifest

    def test_reduce_2sc_and_admissibility_hint(self, tmp_path, capsys):
        c75 = _write(
            tmp_path, "c75.ug",
            build_undirected(75, [(i, (i + 1) % 75) for i in range(75)]),
        )
        code = main(
            ["gen", "reduce-2sc", "--graph", c75, "--k", "5", "--w", "1",
             "-o", str(tmp_path / "bad.dg")]
        )
        assert code == EXIT_USAGE
        assert "nearest admissible size is 76" in capsys.readouterr().err

        c76 = _write(
            tmp_path, "c76.ug",
            build_undirected(76, [(i, (i + 1) % 76) for i in range(76)]),
        )
        out = str(tmp_path / "c76r.dg")
        code = main(
            ["gen", "reduce-2sc", "--graph", c76, "--k", "5", "--w", "1", "-o", out]
        )
        assert code == EXIT_YES
        assert "n=400, m=808, claimed diameter 162" in capsys.readouterr().out

    def test_reduce_2sc_needs_undirected_source(self, path3_file, tmp_path, capsys):
        code = main(
            ["gen", "reduce-2sc", "--graph", path3_file, "--k", "5", "--w", "1",
             "-o", str(tmp_path / "x.dg")]
        )
        assert code == EXIT_USAGE
        assert "takes an undirected graph" in capsys.readouterr().err


class TestOracleCommands:
    def test_longest_path(self, path3_file, capsys):
        code = main(["oracle", "longest-path", "--graph", path3_file])
        assert code == EXIT_YES
        out = capsys.readouterr().out
        assert "value 2" in out
        assert "witness 1 2 3" in out
        assert "exact yes" in out

    def test_longest_st_path_unreachable(self, tmp_path, capsys):
        path = _write(tmp_path, "iso.dg", build_digraph(3, [(0, 1)]))
        code = main(
            ["oracle", "longest-st-path", "--graph", path,
             "--source", "3", "--target", "1"]
        )
        assert code == EXIT_YES
        out = capsys.readouterr().out
        assert "value none" in out
        assert "exact yes" in out

    def test_detour_oracle(self, detour_yes_file, capsys):
        code = main(
            ["oracle", "detour", "--graph", detour_yes_file,
             "--source", "1", "--target", "6"]
        )
        assert code == EXIT_YES
        out = capsys.readouterr().out
        assert "dist 1" in out
        assert "k-star 4" in out
        assert "exact yes" in out

    def test_detour_oracle_unreachable(self, path3_file, capsys):
        code = main(
            ["oracle", "detour", "--graph", path3_file,
             "--source", "3", "--target", "1"]
        )
        assert code == EXIT_USAGE
        assert "unreachable" in capsys.readouterr().err

    def test_diameter(self, c6_file, capsys):
        code = main(["oracle", "diameter", "--graph", c6_file])
        assert code == EXIT_YES
        out = capsys.readouterr().out
        assert "diameter 3" in out
        assert out.splitlines()[1].startswith("between ")

    def test_tight_budget_reports_inexact(self, tmp_path, capsys):
        g = build_digraph(6, [(i, j) for i in range(6) for j in range(6) if i != j])
        path = _write(tmp_path, "k6.dg", g)
        code = main(
            ["oracle", "longest-path", "--graph", path,
             "--oracle-cap", "1", "--budget", "1"]
        )
        assert code == EXIT_INCONCLUSIVE
        assert "exact no" in capsys.readouterr().out


class TestBenchCommand:
    @pytest.mark.parametrize("suite", ("detour-vs-oracle", "lpad-vs-oracle"))
    def test_fast_suites_agree(self, suite, capsys):
        code = main(["bench", "--suite", suite, "--seed", "7"])
        assert code == EXIT_YES
        out = capsys.readouterr().out
        assert "agreement" in out


def test_console_entry_point_subprocess(tmp_path):
    out = tmp_path / "chain.dg"
    proc = subprocess.run(
        [sys.executable, "-c",
         "from detours.cli import main; raise SystemExit(main())",
         "gen", "hat-chain", "--ell", "1", "-o", str(out)],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    assert "n=36, m=76, diameter 18" in proc.stdout
    assert out.read_text().splitlines()[1] == "p dg 36 76"
