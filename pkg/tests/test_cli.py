"""End-to-end tests for the command line interface."""

import pytest

from etaq import claims, cli
from etaq.claims import ProgressionClaim
from etaq.series import parse_series, coeff


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_series(capsys):
    code, out, err = run(capsys, "expand", "--series", "j6s", "--prec", "8")
    assert code == 0
    s = parse_series(out)
    assert (s.valuation, s.precision) == (-1, 8)
    assert "5\t13015" in out.splitlines()


def test_expand_expr_mod(capsys):
    code, out, _ = run(capsys, "expand", "--expr", "poch(1,1)", "--prec", "6",
                       "--mod", "2")
    assert code == 0
    s = parse_series(out)
    assert [coeff(s, n) for n in range(6)] == [1, 1, 1, 0, 0, 1]


def test_expand_usage_errors(capsys):
    code, _, err = run(capsys, "expand", "--series", "j6", "--expr", "q",
                       "--prec", "5")
    assert code == 2
    code, _, err = run(capsys, "expand", "--series", "nosuch", "--prec", "5")
    assert code == 2
    assert "nosuch" in err
    code, _, _ = run(capsys, "expand", "--series", "j6")
    assert code == 2
    code, _, err = run(capsys, "expand", "--expr", "eta(", "--prec", "5")
    assert code == 2


def test_expand_beyond_cap(capsys):
    code, _, err = run(capsys, "expand", "--series", "j6", "--prec", "200000")
    assert code == 3
    assert "150000" in err


def test_coeff(capsys):
    code, out, _ = run(capsys, "coeff", "--series", "j6s", "--n", "5")
    assert (code, out) == (0, "13015\n")
    code, out, _ = run(capsys, "coeff", "--expr", "eta(8)*eta(16)", "--n", "9")
    assert (code, out) == (0, "-1\n")
    code, out, _ = run(capsys, "coeff", "--expr", "eta(8)*eta(16)", "--n", "9",
                       "--mod", "2")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(capsys, "coeff", "--series", "j6", "--n", "-1")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(capsys, "coeff", "--series", "j6", "--n", "-5")
    assert (code, out) == (0, "0\n")


def test_verify_single(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "c031")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1
    assert "status=verified" in lines[0]
    assert "c031" in lines[0]


def test_verify_nmax_override(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "c001", "--nmax", "50")
    assert code == 0
    assert "nMax=50" in out


def test_verify_unknown_claim(capsys):
    code, _, err = run(capsys, "verify", "--claim", "zzz")
    assert code == 2
    assert "zzz" in err


def test_verify_refuted_exit(capsys, monkeypatch):
    fake = [ProgressionClaim("c001", "vanishing", "j6", 1, 0,
                             None, None, None, 2, 10, "demo")]
    monkeypatch.setattr(claims, "builtin_claims", lambda: fake)
    code, out, _ = run(capsys, "verify", "--all")
    assert code == 1
    assert "status=refuted at_n=3" in out


def test_verify_insufficient_exit(capsys, monkeypatch):
    fake = [ProgressionClaim("c001", "vanishing", "expr:q", 2, 0,
                             None, None, None, None, 100000, "demo")]
    monkeypatch.setattr(claims, "builtin_claims", lambda: fake)
    code, out, _ = run(capsys, "verify", "--all")
    assert code == 3
    assert "status=insufficientPrecision" in out


def test_dissect_all(capsys):
    code, out, _ = run(capsys, "dissect", "--all", "--prec", "60")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 12
    assert all("status=ok" in line for line in lines)
    assert lines[0].startswith("D1_f1_over_f3cubed ")


def test_dissect_single_and_unknown(capsys):
    code, out, _ = run(capsys, "dissect", "--id", "D7_rr_five_dissection",
                       "--prec", "80")
    assert code == 0
    assert len(out.splitlines()) == 1
    code, _, err = run(capsys, "dissect", "--id", "D99", "--prec", "80")
    assert code == 2


def test_density_rows(capsys):
    code, out, _ = run(capsys, "density", "--series", "j6", "--A", "24",
                       "--B", "3", "--mod", "2", "--X", "100,10000")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "100\t87/100\t0.870000"
    assert lines[1] == "10000\t493/500\t0.986000"


def test_cusps(capsys):
    code, out, _ = run(capsys, "cusps", "--eta", "N=128; 8^1 * 16^1")
    assert code == 0
    assert "weight=1" in out
    assert "character_kernel=-2" in out
    orders = [line for line in out.splitlines() if line.startswith("cusp ")]
    assert len(orders) == 8
    assert all(line.endswith("order=1") for line in orders)
    assert "cuspidal=True" in out


def test_cusps_bad_text(capsys):
    code, _, err = run(capsys, "cusps", "--eta", "junk")
    assert code == 2


def test_hecke_transform_vanishes(capsys):
    code, out, _ = run(capsys, "hecke", "--eta", "N=128; 8^1 * 16^1",
                       "--p", "3", "--prec", "300")
    assert code == 0
    assert out == "v=1 P=101\n"


def test_hecke_check_eigen(capsys):
    code, out, _ = run(capsys, "hecke", "--eta", "N=128; 8^1 * 16^1",
                       "--p", "17", "--prec", "2000", "--check-eigen")
    assert code == 0
    assert out == "p=17 lambda=-2 residuals=0 checked_below=118\n"


def test_hecke_not_prime(capsys):
    code, _, err = run(capsys, "hecke", "--eta", "N=128; 8^1 * 16^1",
                       "--p", "4")
    assert code == 2


def test_scan_deterministic(capsys):
    argv = ["scan", "--series", "j10s", "--mod", "2", "--Amod", "8",
            "--Bmod", "3", "--Amax", "80", "--nmax", "200"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    for line in out1.splitlines():
        assert line.startswith("j10s ")
        a, b = int(line.split()[1]), int(line.split()[2])
        assert a % 8 == 0 and b % 8 == 3
    assert not any(line.startswith("j10s 8 3 ") for line in out1.splitlines())


def test_scan_plain(capsys):
    code, out, _ = run(capsys, "scan", "--series", "j10s", "--mod", "2",
                       "--Amax", "4", "--nmax", "300")
    assert code == 0
    pairs = [tuple(map(int, line.split()[1:3])) for line in out.splitlines()]
    assert (4, 0) in pairs and (2, 0) in pairs
    assert (4, 3) not in pairs


def test_out_mirrors_stdout(capsys, tmp_path):
    target = tmp_path / "rows.txt"
    code, out, _ = run(capsys, "density", "--series", "j10", "--A", "4",
                       "--B", "1", "--mod", "2", "--X", "100",
                       "--out", str(target))
    assert code == 0
    assert target.read_text() == out


def test_unknown_subcommand(capsys):
    assert cli.main(["frobnicate"]) == 2
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert cli.main(["--help"]) == 0
    capsys.readouterr()
