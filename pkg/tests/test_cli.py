import pytest

from sqdisc.cli import UsageError, dispatch, parse_coeff_set, sorted_roots
from sqdisc.poly import IntPolynomial as P


def run(capsys, *argv):
    code = dispatch(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_disc_output(capsys):
    code, out, _ = run(capsys, "disc", "--poly", "1,1,1")
    assert code == 0
    assert out.splitlines() == ["-3", "square: false", "zero: false"]
    code, out, _ = run(capsys, "disc", "--poly", "1,1,1,1,1,1")
    assert out.splitlines()[:2] == ["1296", "square: true"]


def test_disc_of_constant_and_repeated(capsys):
    _, out, _ = run(capsys, "disc", "--poly", "1,2,1")
    assert out.splitlines() == ["0", "square: true", "zero: true"]
    _, out, _ = run(capsys, "disc", "--poly", "2")
    assert out.splitlines()[0] == "1/4"


def test_resultant(capsys):
    code, out, _ = run(capsys, "resultant", "--f=-1,0,1", "--g=-2,1")
    assert code == 0 and out.strip() == "3"


@pytest.mark.parametrize(
    "argv",
    [
        ["disc", "--poly", "0"],
        ["disc", "--poly", "1,x"],
        ["frobnicate"],
        [],
        ["approx", "--poly", "1,-1,-1", "--root-index", "9", "--eps", "0.01", "--set", "pm1"],
        ["approx", "--poly", "1,-1,-1", "--root-index", "0", "--eps", "0.01", "--set", "pm1", "--case", "iv"],
        ["render", "--set", "0", "--max-degree", "3", "--out", "x.ppm"],
        ["render", "--set", "pm1", "--max-degree", "0", "--out", "x.ppm"],
        ["render", "--set", "pm1", "--max-degree", "3", "--out", "x.ppm", "--center", "1"],
        ["verify", "--cert", "/nonexistent/cert.txt"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_computation_errors(capsys):
    # golden root but a set where no case applies
    code, _, err = run(capsys, "approx", "--poly", "1,2,1,1", "--root-index", "0", "--eps", "0.01", "--set", "0,1,2")
    assert code == 3 and "coefficient set" in err
    # root on the unit circle
    code, _, _ = run(capsys, "approx", "--poly", "1,1,1", "--root-index", "0", "--eps", "0.01", "--set", "pm1")
    assert code == 3


def test_parse_coeff_set():
    assert parse_coeff_set("pm1").elements == frozenset({-1, 1})
    assert parse_coeff_set("zo").elements == frozenset({0, 1})
    assert parse_coeff_set("zpm1").elements == frozenset({-1, 0, 1})
    assert parse_coeff_set("-2,1,2").elements == frozenset({-2, 1, 2})
    for bad in ("", "a,b", "0", "pm2"):
        with pytest.raises(UsageError):
            parse_coeff_set(bad)


def test_sorted_roots_order():
    roots = sorted_roots(P((1, -1, -1)))
    assert abs(roots[0] - 0.6180339887498949) < 1e-12
    assert abs(roots[1] + 1.618033988749895) < 1e-12


def test_approx_verify_round_trip(capsys, tmp_path):
    cert = tmp_path / "c.txt"
    code, out, _ = run(capsys, "approx", "--poly", "1,-1,-1", "--root-index", "0", "--eps", "1e-3", "--set", "pm1", "--out", str(cert))
    assert code == 0 and "case=negation" in out
    code, out, _ = run(capsys, "verify", "--cert", str(cert))
    assert code == 0
    assert out and all(line.startswith("PASS") for line in out.splitlines())


def test_approx_inverted(capsys, tmp_path):
    cert = tmp_path / "c.txt"
    code, _, _ = run(capsys, "approx", "--poly", "1,-1,-1", "--root-index", "1", "--eps", "1e-2", "--set", "pm1", "--out", str(cert))
    assert code == 0
    assert "inverted = true" in cert.read_text()
    assert run(capsys, "verify", "--cert", str(cert))[0] == 0


def test_approx_to_stdout(capsys):
    code, out, err = run(capsys, "approx", "--poly", "1,1,0,1", "--root-index", "0", "--eps", "1e-2", "--set", "zo")
    assert code == 0
    assert "case_used = multiplicative" in out
    assert "k=" in err


def test_tampered_certificate_exit_code(capsys, tmp_path):
    cert = tmp_path / "c.txt"
    run(capsys, "approx", "--poly", "1,-1,-1", "--root-index", "0", "--eps", "1e-2", "--set", "pm1", "--out", str(cert))
    text = cert.read_text().replace("disc_is_square = true", "disc_is_square = false")
    cert.write_text(text)
    code, out, _ = run(capsys, "verify", "--cert", str(cert))
    assert code == 1 and "FAIL" in out


def test_approx_is_deterministic(capsys, tmp_path):
    paths = [tmp_path / f"c{i}.txt" for i in range(2)]
    for p in paths:
        run(capsys, "approx", "--poly", "1,1,-1,1,-1,-1", "--root-index", "0", "--eps", "1e-3", "--set", "pm1", "--out", str(p))
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_render(capsys, tmp_path):
    out_img, out_csv = tmp_path / "a.ppm", tmp_path / "a.csv"
    code, out, _ = run(capsys, "render", "--set", "pm1", "--max-degree", "5", "--out", str(out_img), "--csv", str(out_csv), "--width", "32", "--height", "16")
    assert code == 0
    assert out.strip() == f"roots={sum(d * 2**d for d in range(1, 6))} " + out.split()[1] + " skipped=0"
    assert out_img.read_bytes().startswith(b"P6\n32 16\n255\n")
    assert out_csv.read_text().startswith("re,im,degree,disc_square,disc_zero\n")


def test_render_unwritable(capsys, tmp_path):
    code, _, _ = run(capsys, "render", "--set", "pm1", "--max-degree", "2", "--out", str(tmp_path / "no" / "a.ppm"))
    assert code == 3


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--seed", "3")
    assert code == 0 and "FAIL" not in out


def test_verbose_logs_config(capsys, caplog):
    caplog.set_level("INFO", logger="sqdisc")
    code, _, _ = run(capsys, "-v", "disc", "--poly", "1,1")
    assert code == 0 and "config" in caplog.text
