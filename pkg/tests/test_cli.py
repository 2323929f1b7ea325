"""File format round-trips and the command line surface, exit codes included."""

import string
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from skewlat.census import enumerate_skew_lattices
from skewlat.cli import ParseError, StructureFile, emit, main, parse
from skewlat.core import FiniteSkewLattice
from skewlat.models import diamond_m3, om_window

NON_NORMAL_TABLES = (((0, 0, 0), (0, 1, 2), (2, 2, 2)), ((0, 1, 2), (1, 1, 1), (0, 1, 2)))

CHAIN2_TEXT = "skewlat 1\nn 2\nzero 0\nmeet\n0 0\n0 1\njoin\n0 1\n1 1\n"


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- parsing ----------------------------------------------------------------

def test_parse_reads_every_section():
    sf = parse(CHAIN2_TEXT + 'labels\n"lo"  "hi"\n')
    assert sf == StructureFile(2, ((0, 0), (0, 1)), ((0, 1), (1, 1)), zero=0, labels=("lo", "hi"))


def test_comments_and_layout_are_free():
    wild = "# header\n  skewlat   1 n 2 # inline\nmeet 0 0 0 1\njoin\n0 1 1 1"
    assert parse(wild) == parse("skewlat 1\nn 2\nmeet\n0 0\n0 1\njoin\n0 1\n1 1\n")


@pytest.mark.parametrize(
    "text, fragment, line, col",
    [
        ("skewlon 1", "expected 'skewlat'", 1, 1),
        ("skewlat 2", "unsupported format version", 1, 9),
        ("skewlat 1\nmeet", "expected 'n'", 2, 1),
        ("skewlat 1\nn 0", "order 0 out of range", 2, 3),
        ("skewlat 1\nn 2\nzero 5", "zero id 5 out of range [0, 1]", 3, 6),
        ("skewlat 1\nn 2\nmeet\n0 0\n0 5", "meet entry 5 out of range", 5, 3),
        ("skewlat 1\nn 2\nmeet\n0 0\n0 x", "expected meet entry, got 'x'", 5, 3),
        ("skewlat 1\nn 2\nmeet\n0 0\n0", "expected meet entry, got end of file", 5, 1),
        (CHAIN2_TEXT + "labels\n\"a\" oops", "labels must be quoted", 11, 5),
        (CHAIN2_TEXT + 'labels\n"a\n"b"', "unterminated quoted string", 11, 1),
        (CHAIN2_TEXT + 'labels\n"a\\qb" "c"', "unknown escape", 11, 3),
        (CHAIN2_TEXT + "extra", "unexpected token 'extra'", 10, 1),
    ],
)
def test_rejections_carry_positions(text, fragment, line, col):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert fragment in str(err.value)
    assert (err.value.line, err.value.col) == (line, col)


def test_emit_round_trips_the_census():
    for n in (1, 2, 3):
        for S in enumerate_skew_lattices(n):
            back = parse(emit(S))
            assert back == StructureFile.from_structure(S)
            assert emit(back) == emit(S)


_LABEL_ALPHABET = sorted(set(string.ascii_letters + string.digits + string.punctuation + " \n"))


@settings(max_examples=80, deadline=None)
@given(st.tuples(st.text(_LABEL_ALPHABET), st.text(_LABEL_ALPHABET)))
def test_labels_survive_quoting(labels):
    S = FiniteSkewLattice(2, ((0, 0), (0, 1)), ((0, 1), (1, 1)), labels=labels)
    assert parse(emit(S)).labels == labels


# --- check and classify ----------------------------------------------------

def test_check_accepts_a_valid_file(tmp_path, capsys):
    code, out, _ = _run(capsys, "check", _write(tmp_path, "c.skl", CHAIN2_TEXT))
    assert code == 0
    assert out == "valid skew lattice (order 2, zero 0)\n"


def test_check_names_the_broken_law(tmp_path, capsys):
    # min for both operations parses fine but cannot absorb
    bad = "skewlat 1\nn 2\nmeet\n0 0\n0 1\njoin\n0 0\n0 1\n"
    code, out, _ = _run(capsys, "check", _write(tmp_path, "bad.skl", bad))
    assert code == 1
    assert out.startswith("not a skew lattice: absorption")


def test_classify_prints_the_full_table(tmp_path, capsys):
    code, out, _ = _run(capsys, "classify", _write(tmp_path, "c.skl", CHAIN2_TEXT))
    assert code == 0
    assert out.splitlines() == [
        "order 2",
        "zero 0",
        "commutative yes",
        "regular yes",
        "normal yes",
        "distributive yes",
        "strongly-distributive yes",
        "left-handed yes",
        "right-handed yes",
        "symmetric yes",
        "join-complete yes",
        "bounded-above yes",
        "extends-to-sections yes",
        "lattice-section-exists yes",
    ]


def test_classify_marks_unguarded_checks(tmp_path, capsys):
    S = FiniteSkewLattice(3, *NON_NORMAL_TABLES)
    code, out, _ = _run(capsys, "classify", _write(tmp_path, "nn.skl", emit(S)))
    assert code == 0
    assert "normal no" in out.splitlines()
    assert out.count("n/a (needs normal and symmetric)") == 4


def test_reports_are_reproducible(tmp_path, capsys):
    path = _write(tmp_path, "c.skl", CHAIN2_TEXT)
    first = _run(capsys, "classify", path)
    assert _run(capsys, "classify", path) == first


# --- quotient, sup, sections ------------------------------------------------

def test_quotient_collapses_to_the_boolean_image(tmp_path, capsys, p22):
    path = _write(tmp_path, "p22.skl", emit(p22))
    code, out, _ = _run(capsys, "quotient", path)
    assert code == 0
    shadow = parse(out).to_structure()
    assert shadow.order == 4 and shadow.validity.ok
    assert shadow.labels == ("{{}}", "{{1:0},{1:1}}", "{{0:0},{0:1}}", "{{0:0,1:0},{0:0,1:1},{0:1,1:0},{0:1,1:1}}")


def test_quotient_writes_to_a_file(tmp_path, capsys, p22):
    path = _write(tmp_path, "p22.skl", emit(p22))
    dest = tmp_path / "shadow.skl"
    code, out, _ = _run(capsys, "quotient", path, "-o", str(dest))
    assert code == 0 and out == ""
    assert parse(dest.read_text()).order == 4


def test_sup_reports_the_witnessing_element(tmp_path, capsys, p22):
    path = _write(tmp_path, "p22.skl", emit(p22))
    code, out, _ = _run(capsys, "sup", path, "--elements", "1,3")
    assert code == 0
    assert out == 'sup 4 "{0:0,1:0}"\n'


def test_sup_explains_a_missing_least_upper_bound(tmp_path, capsys):
    path = _write(tmp_path, "w1.skl", emit(om_window(1)))
    code, out, _ = _run(capsys, "sup", path, "--elements", "2,3")
    assert code == 1
    assert out == "no supremum of {2, 3}; upper bounds {} have no least element\n"


def test_sup_rejects_ids_out_of_range(tmp_path, capsys):
    path = _write(tmp_path, "c.skl", CHAIN2_TEXT)
    code, _, err = _run(capsys, "sup", path, "--elements", "0,9")
    assert code == 2
    assert "out of range" in err


def test_sections_lists_every_transversal(tmp_path, capsys, p22):
    path = _write(tmp_path, "p22.skl", emit(p22))
    code, out, _ = _run(capsys, "sections", path)
    assert code == 0
    assert out.splitlines() == [
        "section 0 1 3 4",
        "section 0 1 6 7",
        "section 0 2 3 5",
        "section 0 2 6 8",
    ]


# --- census ------------------------------------------------------------------

def test_census_count_only(capsys):
    code, out, _ = _run(capsys, "census", "--order", "2", "--count-only")
    assert (code, out) == (0, "3\n")


def test_census_emits_numbered_parseable_structures(capsys):
    code, out, _ = _run(capsys, "census", "--order", "2")
    assert code == 0
    blocks = out.split("# structure ")[1:]
    assert [b.splitlines()[0] for b in blocks] == ["1 of 3, order 2", "2 of 3, order 2", "3 of 3, order 2"]
    for block in blocks:
        body = "\n".join(block.splitlines()[1:]) + "\n"
        assert parse(body).to_structure().validity.ok


def test_census_filters_compose(capsys):
    args = ("census", "--order", "2", "--count-only", "--filter")
    assert _run(capsys, *args, "left-handed=yes,commutative=no")[:2] == (0, "1\n")
    code, out, _ = _run(capsys, *args, "left-handed=yes", "--filter", "commutative=no")
    assert (code, out) == (0, "1\n")


@pytest.mark.parametrize(
    "filt, fragment",
    [
        ("frobnicates=yes", "bad filter"),
        ("left-handed", "bad filter"),
        ("left-handed=maybe", "bad filter value"),
    ],
)
def test_census_rejects_bad_filters(capsys, filt, fragment):
    code, _, err = _run(capsys, "census", "--order", "2", "--filter", filt)
    assert code == 2 and fragment in err


def test_census_respects_the_order_cap(capsys):
    code, _, err = _run(capsys, "census", "--order", "5")
    assert code == 2 and "pass order_cap to override" in err


# --- the worked example families ----------------------------------------------

def test_paper_pfn_emits_the_nine_element_algebra(capsys, p22):
    code, out, _ = _run(capsys, "paper", "pfn")
    assert code == 0
    assert parse(out).labels == p22.labels


def test_paper_pfn_verifies(capsys):
    code, out, _ = _run(capsys, "paper", "pfn", "--verify", "--sizes", "3,2")
    assert code == 0
    assert "partial functions 3 -> 2: order 27" in out
    assert "FAILED" not in out
    assert "commutative image boolean of size 8 ok" in out


def test_paper_omega_emits_a_window(capsys):
    code, out, _ = _run(capsys, "paper", "omega", "--window", "2")
    assert code == 0
    assert parse(out).to_structure().order == 5


def test_paper_omega_verifies_the_missing_bounds(capsys):
    code, out, _ = _run(capsys, "paper", "omega", "--verify", "--window", "3")
    assert code == 0
    assert "window axioms ok" in out
    assert "the chain of naturals has no least upper bound: ok" in out
    assert "the two tops have no greatest lower bound: ok" in out


def test_paper_finimg_traces_image_growth(capsys):
    code, out, _ = _run(capsys, "paper", "finimg", "--window", "4", "--verify")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "one-point joins, chain length 4"
    assert lines[1:5] == [f"step {i} image-size {i + 1}" for i in range(4)]
    assert lines[5].endswith("ok")


# --- theorem -------------------------------------------------------------------

def test_theorem_confirms_the_equivalence(tmp_path, capsys, p22):
    path = _write(tmp_path, "p22.skl", emit(p22))
    code, out, _ = _run(capsys, "theorem", path)
    assert code == 0
    assert out.splitlines()[0] == "noncommutative frame: yes"
    assert out.splitlines()[-1] == "verdict: equivalence holds"


def test_theorem_refuses_structures_outside_its_scope(tmp_path, capsys):
    path = _write(tmp_path, "m3.skl", emit(diamond_m3()))
    code, _, err = _run(capsys, "theorem", path)
    assert code == 2 and "error:" in err


# --- process level -----------------------------------------------------------

def test_missing_file_is_a_usage_error(capsys):
    code, _, err = _run(capsys, "check", "/no/such/file.skl")
    assert code == 2 and "error:" in err


def test_bare_invocation_is_a_usage_error(capsys):
    assert _run(capsys, )[0] == 2


def test_help_exits_cleanly(capsys):
    assert _run(capsys, "--help")[0] == 0


def test_console_script_is_wired():
    proc = subprocess.run(
        ["skewlat", "census", "--order", "2", "--count-only"],
        capture_output=True,
        text=True,
    )
    assert (proc.returncode, proc.stdout) == (0, "3\n")
