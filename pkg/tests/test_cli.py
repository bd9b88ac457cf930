import subprocess
import sys

import pytest

from tern2jw import (
    circuit_parse,
    conjugate_circuit,
    full_ternary,
    jw_chain,
    tree_format,
    tree_generators,
    tree_parse,
)
from tern2jw.cli import run_cli
from tern2jw.pauli import PauliString

from conftest import BINARY3, TRIPLE_FORK

JW4 = "(q1 :z (q2 :z (q3 :z (q4))))"


def _run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generators_golden(capsys):
    code, out, err = _run(capsys, "generators", "-e", BINARY3)
    assert code == 0 and err == ""
    assert out == (
        "e1 +XXI\n"
        "e2 +XYI\n"
        "e3 +XZI\n"
        "e4 +YIX\n"
        "e5 +YIY\n"
        "e6 +YIZ\n"
        "e7 +ZII\n"
        "product -iIII\n"
    )


def test_generators_from_file(tmp_path, capsys):
    f = tmp_path / "tree.txt"
    f.write_text(BINARY3)
    code, out, _ = _run(capsys, "generators", str(f))
    assert code == 0
    assert out.endswith("product -iIII\n")


def test_straighten_fixed_point_golden(capsys):
    code, out, err = _run(capsys, "straighten", "-e", JW4)
    assert code == 0 and err == ""
    assert out == "QUBITS 4\nPERM 1 2 3 4\nSIGNS + + + + + + + + +\n"


def test_straighten_output_feeds_verify(tmp_path, capsys):
    code, cert, _ = _run(capsys, "straighten", "-e", TRIPLE_FORK)
    assert code == 0
    cert_file = tmp_path / "cert.txt"
    cert_file.write_text(cert)
    code, out, err = _run(capsys, "verify", "-e", TRIPLE_FORK, str(cert_file))
    assert code == 0, err
    assert out == "engine pass\noracle pass\n"


@pytest.mark.parametrize("flags", [("--fix-signs",), ("--swaps",), ("--fix-signs", "--swaps")])
def test_straighten_flag_variants_verify(tmp_path, capsys, flags):
    code, cert, _ = _run(capsys, "straighten", *flags, "-e", TRIPLE_FORK)
    assert code == 0
    cert_file = tmp_path / "cert.txt"
    cert_file.write_text(cert)
    code, out, _ = _run(capsys, "verify", "-e", TRIPLE_FORK, str(cert_file))
    assert code == 0
    assert "engine pass" in out and "oracle pass" in out


def test_straighten_fix_signs_clears_movable_ranks(capsys):
    from tern2jw import fix_signs, straighten

    code, cert, _ = _run(capsys, "straighten", "--fix-signs", "-e", TRIPLE_FORK)
    assert code == 0
    signs_line = next(l for l in cert.splitlines() if l.startswith("SIGNS"))
    tokens = signs_line.split()[1:]
    # token j belongs to generator j, whose chain rank straighten records;
    # every rank up to 2m must come out positive
    ranks = fix_signs(straighten(tree_parse(TRIPLE_FORK))).ranks
    assert len(tokens) == 15
    assert all(tok == "+" for tok, rank in zip(tokens, ranks) if rank <= 14)


def test_straighten_swaps_identity_perm(capsys):
    code, cert, _ = _run(capsys, "straighten", "--swaps", "-e", TRIPLE_FORK)
    assert code == 0
    assert "PERM 1 2 3 4 5 6 7\n" in cert
    assert "SWAP" in cert


def test_verify_rejects_corrupted_certificate(tmp_path, capsys):
    code, cert, _ = _run(capsys, "straighten", "-e", TRIPLE_FORK)
    assert code == 0
    signs_line = next(l for l in cert.splitlines() if l.startswith("SIGNS"))
    tokens = signs_line.split()
    tokens[1] = "-" if tokens[1] == "+" else "+"
    bad = cert.replace(signs_line, " ".join(tokens))
    cert_file = tmp_path / "bad.txt"
    cert_file.write_text(bad)
    code, out, _ = _run(capsys, "verify", "-e", TRIPLE_FORK, str(cert_file))
    assert code == 1
    assert "engine fail e1" in out
    assert "oracle fail e1" in out


def test_verify_oracle_skip(tmp_path, capsys):
    code, cert, _ = _run(capsys, "straighten", "-e", TRIPLE_FORK)
    cert_file = tmp_path / "cert.txt"
    cert_file.write_text(cert)
    code, out, _ = _run(
        capsys, "verify", "--oracle-cap", "5", "-e", TRIPLE_FORK, str(cert_file)
    )
    assert code == 0
    assert out == "engine pass\noracle skip m=7 cap=5\n"


def test_verify_malformed_certificate(tmp_path, capsys):
    cert_file = tmp_path / "nonsense.txt"
    cert_file.write_text("PERM 1 2\n")
    code, out, err = _run(capsys, "verify", "-e", "(q1 :z (q2))", str(cert_file))
    assert code == 2
    assert err.startswith("error:")
    assert "SIGNS" in err


def test_map_self_is_empty(capsys):
    code, out, _ = _run(capsys, "map", "-e", TRIPLE_FORK, "-e", TRIPLE_FORK)
    assert code == 0
    assert out == "QUBITS 7\n"


def test_map_semantics(capsys):
    a = jw_chain(3)
    code, out, _ = _run(
        capsys, "map", "-e", "(q1 :z (q2 :z (q3)))", "-e", BINARY3
    )
    assert code == 0
    circuit, _ = circuit_parse(out)
    b_letters = {p.letters for p in tree_generators(tree_parse(BINARY3)).strings}
    for p in tree_generators(a).strings:
        img = conjugate_circuit(circuit, p)
        assert img.phase in (0, 2)
        assert img.letters in b_letters


def test_stats_full_ternary_golden(capsys):
    text = tree_format(full_ternary(2))
    code, out, _ = _run(capsys, "stats", "-e", text)
    assert code == 0
    assert out == "weight 3 27\nmax 3\nmean 3.0000\n"


def test_stats_binary_tree_golden(capsys):
    code, out, _ = _run(capsys, "stats", "-e", BINARY3)
    assert code == 0
    assert out == "weight 1 1\nweight 2 6\nmax 2\nmean 1.8571\n"


def test_augment_canonicalizes(capsys):
    code, out, _ = _run(capsys, "augment", "-e", "(q1 :y (q3) :x (q2))")
    assert code == 0
    assert out == "(q1 :x (q2) :y (q3))\n"
    assert tree_parse(out) == tree_parse(BINARY3)


def test_missing_file(capsys):
    code, _, err = _run(capsys, "generators", "/nonexistent/tree.txt")
    assert code == 2
    assert err.startswith("error:")


def test_wrong_input_count(capsys):
    code, _, err = _run(capsys, "map", "-e", BINARY3)
    assert code == 2
    assert "map needs 2 input(s)" in err
    code, _, err = _run(capsys, "generators", "-e", BINARY3, "-e", BINARY3)
    assert code == 2
    assert "generators needs 1 input(s)" in err


def test_unknown_subcommand(capsys):
    code, _, _ = _run(capsys, "shuffle", "-e", BINARY3)
    assert code == 2


def test_tree_parse_error_reports_position(capsys):
    code, _, err = _run(capsys, "generators", "-e", "(q1 :w (q2))")
    assert code == 2
    assert err.startswith("error: <inline>:")
    assert "position" in err


def test_inline_text_fills_first_slot(tmp_path, capsys):
    # -e gives the tree, the file the certificate, regardless of argv order
    code, cert, _ = _run(capsys, "straighten", "-e", JW4)
    cert_file = tmp_path / "cert.txt"
    cert_file.write_text(cert)
    code, out, _ = _run(capsys, "verify", str(cert_file), "-e", JW4)
    assert code == 0
    assert "engine pass" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tern2jw", "generators", "-e", BINARY3],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.endswith("product -iIII\n")


def test_console_script_entry_point():
    proc = subprocess.run(
        ["tern2jw", "stats", "-e", BINARY3],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("weight 1 1\n")
