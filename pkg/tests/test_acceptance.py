"""Exit criteria for the package. Each test is one criterion; the terminal
summary prints a PASS/FAIL line per criterion (see conftest.py)."""
import io
import json
import subprocess
import sys
import time

from nonoverlap.bitstrings import gen_V_family, gen_V_level, is_factor
from nonoverlap.cli import main
from nonoverlap.counting import CORRECTED, PUBLISHED, card_D_matrices, card_V_bounds, card_V_matrices, r_count
from nonoverlap.dyck import gen_D_family
from nonoverlap.matrices import OverlapMode, build_D_matrix_family, build_V_matrix_family, matrix_overlap
from nonoverlap.verify import (
    brute_r_oracle,
    matrix_expansion_witnesses,
    string_expansion_witnesses,
    verify_matrix_family,
    verify_string_set,
)

from fixtures import C_MATRIX, D_MATRIX, DIAGONAL_PAIR, HORIZONTAL_PAIR, VERTICAL_PAIR, V13_LISTING

V_GRID = [(m, n, k) for k in (3, 4) for m in range(2, 6) for n in range(1, 15)]
D_GRID = [(m, n) for m in range(2, 5) for n in range(0, 13)]


def test_criterion_1_V13_listing_reproduction():
    start = time.perf_counter()
    family = gen_V_family(13, 3)
    levels = {i: gen_V_level(i, 3) for i in range(8, 14)}
    elapsed = time.perf_counter() - start
    assert len(family) == 26
    assert [len(levels[i]) for i in range(8, 14)] == [1, 2, 2, 4, 7, 10]
    for i in (8, 9, 10, 11, 13):
        assert sorted(levels[i]) == sorted(V13_LISTING[i])
    printed = set(V13_LISTING[12])
    assert len(V13_LISTING[12]) == 7 and len(printed) == 6
    assert len(set(levels[12])) == 7
    assert printed < set(levels[12])
    assert set(levels[12]) - printed == {"111001011000"}
    assert elapsed < 1.0


def test_criterion_2_formula_oracle_agreement():
    start = time.perf_counter()
    mismatches = [
        (k, ell) for k in (3, 4, 5) for ell in range(0, 19) if r_count(k, ell) != brute_r_oracle(ell, k)
    ]
    assert mismatches == []
    assert time.perf_counter() - start < 30.0


def test_criterion_3_string_family_non_overlap():
    for k in (3, 4, 5):
        for n in range(2 * k + 2, 17):
            family = gen_V_family(n, k)
            assert verify_string_set(family) == []
            assert not any(is_factor(u, v) for u in family for v in family if u != v)
    for n in range(2, 17):
        assert verify_string_set(gen_D_family(n)) == []
    u, v = "11101000", "1110011101000100"
    d16 = set(gen_D_family(16))
    assert u in d16 and v in d16 and is_factor(u, v)


def test_criterion_4_matrix_count_formula():
    start = time.perf_counter()
    for m, n, k in V_GRID:
        assert len(build_V_matrix_family(m, n, k)) == card_V_matrices(m, n, k), (m, n, k)
    assert len(build_V_matrix_family(4, 13, 3)) == card_V_matrices(4, 13, 3) == 113
    assert time.perf_counter() - start < 60.0


def test_criterion_5_matrix_non_overlap():
    start = time.perf_counter()
    v_family = build_V_matrix_family(4, 13, 3)
    assert len(v_family) == 113
    assert verify_matrix_family(v_family, OverlapMode.STRICT) == []
    d_family = build_D_matrix_family(4, 12)
    assert verify_matrix_family(d_family, OverlapMode.FACTOR_TOLERANT) == []
    kinds = [matrix_overlap(*pair).kind for pair in (HORIZONTAL_PAIR, DIAGONAL_PAIR, VERTICAL_PAIR)]
    assert kinds == ["horizontal", "diagonal", "vertical"]
    report = matrix_overlap(C_MATRIX, D_MATRIX, OverlapMode.STRICT)
    assert (report.row_offset, report.col_offset) == (2, 0)
    assert time.perf_counter() - start < 120.0


def test_criterion_6_bounds_bracket_count():
    errata = []
    for m, n, k in V_GRID:
        bounds, count = card_V_bounds(m, n, k), card_V_matrices(m, n, k)
        if not bounds.brackets(count):
            errata.append((m, n, k, bounds, count))
    assert errata == []
    b = card_V_bounds(4, 13, 3)
    assert float(b.lower) == 100.75 and float(b.upper) == 135.75


def test_criterion_7_D_cardinality_arbitration():
    for m, n in D_GRID:
        assert len(build_D_matrix_family(m, n)) == card_D_matrices(m, n, CORRECTED), (m, n)
    assert card_D_matrices(3, 8, CORRECTED) == len(build_D_matrix_family(3, 8)) == 5
    # erratum: the printed formula does not count the family
    assert card_D_matrices(3, 8, PUBLISHED) == 36


def test_criterion_8_non_expandability_witnesses():
    strings = string_expansion_witnesses(13, 3)
    matrices = matrix_expansion_witnesses(4, 13, 3)
    assert len(strings) == 8 and all(o.set_ok for o in strings)
    assert len(matrices) == 5 and all(o.set_ok for o in matrices)


def _main(*argv):
    out = io.StringIO()
    return main(list(argv), out), out.getvalue()


def _round_trip(gen_argv, verify_argv):
    code, produced = _main(*gen_argv)
    assert code == 0
    sys_stdin = sys.stdin
    sys.stdin = io.StringIO(produced)
    try:
        return _main("verify", "--input", "-", *verify_argv)
    finally:
        sys.stdin = sys_stdin


def test_criterion_9_cli_contract():
    codes = set()
    for k in (3, 4, 5):
        for n in range(2 * k + 2, 17):
            code, out = _round_trip(
                ("gen", "strings", "--family", "v", "--k", str(k), "--n", str(n), "--format", "json"), ()
            )
            codes.add(code)
            assert (code, out) == (0, "OK\n")
    for n in range(2, 17):
        code, out = _round_trip(("gen", "strings", "--family", "d", "--n", str(n), "--format", "json"), ())
        codes.add(code)
        assert code == 0
    for m, n, k in V_GRID:
        if n < 2 * k + 3:
            continue
        fam = ("--family", "v", "--k", str(k), "--m", str(m), "--n", str(n))
        code, out = _round_trip(("gen", "matrices", *fam, "--format", "json"), ("--mode", "strict"))
        codes.add(code)
        assert code == 0, fam
    for m, n in D_GRID:
        if n < 6:
            continue
        fam = ("--family", "d", "--m", str(m), "--n", str(n))
        code, out = _round_trip(("gen", "matrices", *fam, "--format", "json"), ("--mode", "factor-tolerant"))
        codes.add(code)
        assert code == 0, fam

    # real process pipeline, byte-identical reruns, and the exit-code alphabet
    def proc(argv, stdin=None):
        return subprocess.run([sys.executable, "-m", "nonoverlap", *argv], input=stdin, capture_output=True)

    gen = ["gen", "matrices", "--family", "d", "--m", "4", "--n", "12", "--format", "json"]
    first, second = proc(gen), proc(gen)
    assert first.returncode == 0 and first.stdout == second.stdout
    piped = proc(["verify", "--input", "-", "--mode", "factor-tolerant"], stdin=first.stdout)
    assert (piped.returncode, piped.stdout) == (0, b"OK\n")
    for argv, stdin in [
        (["count", "--family", "d", "--m", "3", "--n", "8", "--compare"], None),
        (["verify", "--input", "-"], b"101\n"),
        (["witness", "--family", "v", "--k", "3", "--n", "13"], None),
    ]:
        a, b = proc(argv, stdin), proc(argv, stdin)
        assert a.stdout == b.stdout and a.returncode == b.returncode
        codes.add(a.returncode)
    codes.add(proc(["verify", "--input", "-"], stdin=b"101\n").returncode)
    codes.add(proc(["witness", "--family", "v", "--k", "3", "--n", "5"]).returncode)
    codes.add(proc(["gen", "nothing"]).returncode)
    assert codes == {0, 1, 2}
    report = json.loads(proc(["verify", "--input", "-"], stdin=b"101\n").stdout)
    assert set(report) == {"family", "params", "violations", "cells"}
