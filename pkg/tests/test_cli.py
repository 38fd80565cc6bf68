import csv
import json

import pytest

from drumspec import cli

CIRCLE = '{"kind": "square_to_disk"}'
BOX = '{"kind": "polynomial", "coeffs": [0, 1]}'


def run(argv):
    return cli.main(argv)


def read_csv(path):
    with open(path) as fh:
        return list(csv.reader(fh))


def test_spectrum_circle_galerkin(tmp_path):
    out = tmp_path / "spec.csv"
    code = run(["spectrum", "--domain", CIRCLE, "--method", "cmm",
                "--n", "10", "--count", "3", "--out", str(out)])
    assert code == 0
    rows = read_csv(out)
    assert rows[0] == ["level_index", "label", "eigenvalue", "degeneracy",
                       "method", "N", "N_int"]
    assert float(rows[1][2]) == pytest.approx(5.7831903186, abs=1e-9)
    assert float(rows[2][2]) == pytest.approx(14.682015349, abs=1e-9)


def test_spectrum_output_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for out in (a, b):
        run(["spectrum", "--domain", BOX, "--method", "ccm", "--n", "16",
             "--count", "4", "--out", str(out)])
    assert a.read_bytes() == b.read_bytes()


def test_spectrum_box_collocation(tmp_path):
    out = tmp_path / "box.csv"
    code = run(["spectrum", "--domain", BOX, "--method", "ccm", "--n", "40",
                "--count", "3", "--out", str(out)])
    assert code == 0
    rows = read_csv(out)
    import math
    assert float(rows[1][2]) == pytest.approx(math.pi ** 2 / 2, rel=1e-12)


def test_spectrum_json_format(tmp_path):
    out = tmp_path / "spec.json"
    run(["spectrum", "--domain", BOX, "--method", "pt", "--count", "2",
        "--nint", "6", "--out", str(out), "--format", "json"])
    payload = json.loads(out.read_text())
    assert payload["method"] == "pt"
    assert len(payload["levels"]) == 2


def test_domain_file_input(tmp_path):
    domain_file = tmp_path / "dom.json"
    domain_file.write_text('{"kind": "robnik", "lambda": 0.01}')
    out = tmp_path / "rob.csv"
    code = run(["spectrum", "--domain", str(domain_file), "--method", "pt",
                "--count", "3", "--out", str(out)])
    assert code == 0
    rows = read_csv(out)
    assert float(rows[1][2]) == pytest.approx(5.78319, abs=1e-4)


def test_usage_errors_exit_2(tmp_path, capsys):
    assert run(["spectrum", "--domain", "{bad json", "--method", "cmm"]) == 2
    assert run(["spectrum", "--domain", '{"kind": "nope"}', "--method", "cmm"]) == 2
    assert run(["spectrum", "--domain", CIRCLE, "--method", "power",
                "--count", "3"]) == 2
    assert run(["tables", "--table", "zzz"]) == 2


def test_compute_failures_exit_1():
    # polygon has no polynomial square form, so the Galerkin method fails
    assert run(["spectrum", "--domain", '{"kind": "polygon", "sides": 8}',
                "--method", "cmm", "--count", "2"]) == 1


def test_compare_same_config_gives_zero_xi(tmp_path):
    out = tmp_path / "cmp.csv"
    code = run(["compare", "--domain", BOX, "--method-a", "ccm", "--n-a", "16",
                "--method-b", "ccm", "--n-b", "16", "--count", "4",
                "--out", str(out)])
    assert code == 0
    rows = [r for r in read_csv(out) if r]
    for row in rows[1:-1]:
        assert float(row[3]) == 0.0
    assert rows[-1][0] == "max_xi"
    assert float(rows[-1][1]) == 0.0


def test_compare_methods_deformed_square(tmp_path):
    out = tmp_path / "cmp.csv"
    dom = '{"kind": "polynomial", "coeffs": [0, 1, 0.01]}'
    code = run(["compare", "--domain", dom, "--method-a", "ccm", "--n-a", "40",
                "--method-b", "pt", "--nint-b", "12", "--count", "12",
                "--out", str(out)])
    assert code == 0
    rows = [r for r in read_csv(out) if r]
    assert float(rows[-1][1]) < 1e-3  # max xi over the first dozen levels


def test_tables_subcommand(tmp_path):
    out = tmp_path / "t4.csv"
    assert run(["tables", "--table", "t4", "--out", str(out)]) == 0
    rows = read_csv(out)
    assert rows[0][0] == "cell"
    assert all(r[5] == "1" for r in rows[1:])


def test_tables_tpt(tmp_path):
    out = tmp_path / "tpt.csv"
    assert run(["tables", "--table", "tpt-column", "--out", str(out)]) == 0


def test_pdem_subcommand(tmp_path):
    out = tmp_path / "pdem.json"
    cfg = json.dumps({"reference": "oscillator", "n_max": 20, "level": 0,
                      "sigma": {"kind": "gaussian", "amplitude": 0.2, "width": 1.0},
                      "order": 2})
    assert run(["pdem", "--config", cfg, "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["e0"] == pytest.approx(1.0)
    assert len(payload["corrections"]) == 2
