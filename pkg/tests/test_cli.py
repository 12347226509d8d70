import json
import subprocess
import sys

import pytest

from xalg import XModAlg
from xalg.cli import EXIT_AXIOM, EXIT_BOUND, EXIT_JSON, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE, main
from xalg.io import dumps, loads


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_census_csv(capsys):
    code, out, _ = run(capsys, "census", "--rows", "1,1", "--fields", "GF(2)", "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines() == ["field,gap_id,group,size_fg,end,ie,cat1,flags", 'GF(2),"[1,1]",I,2,2,2,1,']


def test_census_markdown_and_json(capsys):
    code, out, _ = run(capsys, "census", "--rows", "2,1", "--fields", "GF(3)")
    assert code == EXIT_OK and "| GF(3) | [2,1] | C2 | 9 | 9 | 6 | 3 |" in out
    code, out, _ = run(capsys, "census", "--rows", "2,1", "3,1", "--fields", "GF(4)", "--format", "json", "--jobs", "2")
    rows = json.loads(out)
    assert [(r["end_count"], r["ie_count"], r["cat1_count"]) for r in rows] == [(5, 3, 2), (64, 23, 7)]


def test_census_bound_exit(capsys):
    code, out, _ = run(capsys, "census", "--rows", "4,2", "--fields", "GF(2)", "--max-elements", "4", "--format", "csv")
    assert code == EXIT_BOUND and out.splitlines()[1].endswith("SKIPPED")


def test_homs(capsys):
    code, out, _ = run(capsys, "homs", "--group", "4,2")
    assert code == EXIT_OK and out.startswith("65 homomorphisms")
    code, out, _ = run(capsys, "homs", "--group", "2,1", "--list")
    assert out.splitlines()[1:] == ["1: [ a ] -> [ 0 ]", "2: [ a ] -> [ 1 ]", "3: [ a ] -> [ a ]"]
    code, out, _ = run(capsys, "homs", "--group", "4,1", "--target-group", "2,1")
    assert code == EXIT_OK and out.startswith("3 homomorphisms")


def test_homs_bound(capsys):
    code, _, err = run(capsys, "homs", "--group", "4,2", "--max-elements", "2")
    assert code == EXIT_BOUND and err.startswith("error:")


def test_usage_errors(capsys):
    assert run(capsys, "homs", "--field", "GF(6)")[0] == EXIT_USAGE
    assert run(capsys, "cat1", "by-endomorphisms", "--group", "2,1", "--tail", "1")[0] == EXIT_USAGE
    assert run(capsys, "check")[0] == EXIT_USAGE
    assert run(capsys, "xmod", "by-ideal", "--ideal", "gens")[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["cat1", "by-endomorphisms"])
    assert exc.value.code == EXIT_USAGE


def test_unknown_group(capsys):
    code, _, err = run(capsys, "homs", "--group", "99,1")
    assert code == EXIT_UNKNOWN and "not in the catalog" in err
    # unparseable ids and unknown names are reported the same way
    assert run(capsys, "homs", "--group", "2,1,3")[0] == EXIT_UNKNOWN
    assert run(capsys, "homs", "--group", "Q99")[0] == EXIT_UNKNOWN


def test_xmod_verbs(capsys, tmp_path):
    out_file = tmp_path / "cm.json"
    code, out, _ = run(capsys, "xmod", "by-ideal", "--field", "GF(5)", "--group", "4,2", "--output", str(out_file))
    assert code == EXIT_OK
    assert "Size: [125, 625]" in out and "IsXModAlg: true" in out
    x = loads(out_file.read_text())
    assert isinstance(x, XModAlg) and x.size == (125, 625)
    for how, extra in [
        ("by-central-extension", []),
        ("by-multiplier", ["--ideal", "whole"]),
        ("by-ideal", ["--ideal", "gens", "--gens", "1,1,1"]),
    ]:
        code, out, _ = run(capsys, "xmod", how, "--field", "GF(3)", "--group", "3,1", *extra)
        assert code == EXIT_OK and "IsXModAlg: true" in out, how
    # the augmentation ideal of GF(2)C2 squares to zero, so it is a module with zero boundary
    code, out, _ = run(capsys, "xmod", "by-module", "--group", "2,1")
    assert code == EXIT_OK and "Size: [2, 4]" in out
    # over GF(3)C3 it does not, and the module condition fails
    code, _, err = run(capsys, "xmod", "by-module", "--field", "GF(3)", "--group", "3,1")
    assert code == EXIT_AXIOM and "M M = 0" in err


def test_xmod_by_module_whole_fails(capsys):
    # the whole algebra is not square-zero
    code, _, err = run(capsys, "xmod", "by-module", "--group", "2,1", "--module", "gens", "--gens", "1,0")
    assert code == EXIT_AXIOM and err.startswith("axiom failure")


def test_cat1_verbs(capsys, tmp_path):
    code, out, _ = run(capsys, "cat1", "enumerate", "--group", "2,1", "--list")
    assert code == EXIT_OK and out.splitlines()[0] == "2 cat1-structures on GF(2)[C2]"
    code, out, _ = run(capsys, "cat1", "identity", "--field", "GF(4)", "--group", "4,2")
    assert code == EXIT_OK and "Size: [256, 256]" in out
    f = tmp_path / "c.json"
    code, out, _ = run(capsys, "cat1", "by-endomorphisms", "--group", "2,1", "--tail", "1,0", "--output", str(f))
    assert code == EXIT_OK and "Size: [4, 2]" in out and "IsCat1Alg: true" in out
    code, _, err = run(capsys, "cat1", "by-endomorphisms", "--group", "2,1", "--tail", "1,0", "--head", "0,1")
    assert code == EXIT_AXIOM and err.startswith("axiom failure")


def test_convert_roundtrip(capsys, tmp_path):
    f = tmp_path / "cm.json"
    run(capsys, "xmod", "by-ideal", "--field", "GF(3)", "--group", "2,1", "--output", str(f))
    code, out, err = run(capsys, "convert", "--to", "cat1", str(f))
    assert code == EXIT_OK and "roundtrip: OK" in err
    c = loads(out)
    assert c.size == (27, 9)
    g = tmp_path / "c.json"
    g.write_text(out)
    code, out, err = run(capsys, "convert", "--to", "xmod", str(g))
    assert code == EXIT_OK and "roundtrip: OK" in err
    assert loads(out).size == (3, 9)
    assert run(capsys, "convert", "--to", "xmod", str(f))[0] == EXIT_USAGE
    assert run(capsys, "convert", "--to", "cat1", str(tmp_path / "missing.json"))[0] == EXIT_USAGE


def test_convert_zero_source(capsys, tmp_path):
    f = tmp_path / "z.json"
    run(capsys, "xmod", "by-ideal", "--ideal", "zero", "--group", "4,2", "--output", str(f))
    code, out, err = run(capsys, "convert", "--to", "cat1", str(f))
    assert code == EXIT_OK and loads(out).size == (16, 16)


def test_check(capsys, tmp_path):
    from xalg import catalog, field_make, group_algebra
    from xalg.algebra import multiplication_action
    from xalg.homs import zero_hom

    A = group_algebra(field_make(2), catalog((2, 1)))
    bad = tmp_path / "bad.json"
    bad.write_text(dumps(XModAlg(zero_hom(A, A), multiplication_action(A), check=False)))
    code, out, _ = run(capsys, "check", str(bad))
    assert code == EXIT_AXIOM
    assert "IsXModAlg: false" in out and "violation: XModAlg2" in out
    good = tmp_path / "good.json"
    run(capsys, "xmod", "by-ideal", "--output", str(good))
    assert run(capsys, "check", str(good))[0] == EXIT_OK
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    assert run(capsys, "check", str(broken))[0] == EXIT_JSON
    unknown = tmp_path / "unknown.json"
    unknown.write_text(json.dumps({"type": "algebra", "field": "GF(2)", "group": "64,1"}))
    assert run(capsys, "check", str(unknown))[0] == EXIT_UNKNOWN


def test_check_sessions(capsys):
    code, out, _ = run(capsys, "check", "--sessions")
    assert code == EXIT_OK and "FAIL" not in out


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "xalg.cli", "homs", "--group", "3,1"], capture_output=True, text=True)
    assert r.returncode == EXIT_OK and r.stdout.startswith("8 homomorphisms")
