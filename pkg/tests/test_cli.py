import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blaschke.cli import format_complex, main, parse_complex


@pytest.mark.parametrize("text,value", [
    ("0.5i", 0.5j),
    ("1e-6", 1e-6),
    ("-1.9e-6+3.15e-5i", -1.9e-6 + 3.15e-5j),
    ("0.3+0.4i", 0.3 + 0.4j),
    ("2", 2.0),
    ("-0.5", -0.5),
    ("1E-6-2E-7j", 1e-6 - 2e-7j),
    ("i", 1j),
])
def test_parse_complex(text, value):
    assert parse_complex(text) == value


def test_parse_complex_rejects_garbage():
    for bad in ("", "abc", "1+2", "1i+2i3"):
        with pytest.raises(Exception):
            parse_complex(bad)


@given(st.complex_numbers(allow_nan=False, allow_infinity=False,
                          min_magnitude=1e-12, max_magnitude=1e6))
def test_parse_format_roundtrip(z):
    assert parse_complex(format_complex(z)) == pytest.approx(z, rel=1e-5, abs=1e-9)


def test_classify_command(capsys):
    rc = main(["classify", "--a", "0.5i", "--lambda", "1e-6", "--z", "0.2+0.1i"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "escape-through-t0"
    assert doc["provenance"]["engine"].startswith("blaschke-dynamics/")


def test_negative_lambda_value_is_accepted(capsys, tmp_path):
    out = tmp_path / "t.ppm"
    meta = tmp_path / "t.json"
    rc = main(["render-dyn", "--a", "0.5i", "--lambda", "-1.9e-6+3.15e-5i",
               "--center", "0", "--width", "3", "--res", "64",
               "--maxiter", "300", "--out", str(out), "--meta", str(meta)])
    assert rc == 0
    assert out.read_bytes().startswith(b"P6\n64 64\n255\n")
    doc = json.loads(meta.read_text())
    assert doc["spec"]["lambda"] == [-1.9e-6, 3.15e-5]


def test_domain_error_exit_code():
    rc = main(["classify", "--a", "0.5i", "--lambda", "0.1", "--z", "0"])
    assert rc == 1


def test_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "blaschke.cli", "no-such-command"],
                          capture_output=True)
    assert proc.returncode == 2


def test_render_byte_determinism(tmp_path):
    out = tmp_path / "t.ppm"
    meta = tmp_path / "t.json"
    outs = []
    for workers in ("1", "2"):
        rc = main(["--workers", workers, "render-dyn", "--a", "0.5i",
                   "--lambda", "1e-6", "--width", "3", "--res", "64",
                   "--maxiter", "300", "--out", str(out), "--meta", str(meta)])
        assert rc == 0
        outs.append(out.read_bytes() + meta.read_bytes())
    assert outs[0] == outs[1]


def test_verify_only_riemann_hurwitz(capsys):
    rc = main(["verify", "--only", "riemann"])
    out = capsys.readouterr().out
    doc = json.loads(out)
    by_name = {c["criterion"]: c for c in doc["criteria"]}
    assert by_name["riemann-hurwitz"]["status"] == "pass"
    assert rc == 0
    skipped = [c for c in doc["criteria"] if c["status"] == "skipped"]
    assert len(skipped) == len(doc["criteria"]) - 1


def test_verify_report_bytes_deterministic(capsys):
    main(["--seed", "7", "verify", "--only", "vieta"])
    first = capsys.readouterr().out
    main(["--seed", "7", "verify", "--only", "vieta"])
    second = capsys.readouterr().out
    assert first == second
