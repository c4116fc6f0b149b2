import json

import pytest

from toricdual.cli import main, read_matrix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_segre2(tmp_path, as_json=True):
    path = tmp_path / ("segre2.json" if as_json else "segre2.txt")
    if as_json:
        path.write_text(
            json.dumps(
                {
                    "rows": 3,
                    "cols": 4,
                    "entries": [[1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 1]],
                }
            )
        )
    else:
        path.write_text("1 0 1 0\n0 1 0 1\n0 0 1 1\n")
    return str(path)


def test_gale_command_json(tmp_path, capsys):
    code, out, _ = run(capsys, "gale", write_segre2(tmp_path))
    assert code == 0
    doc = json.loads(out)
    assert doc["gale_matrix"]["cols"] == 1
    assert [row[0] for row in doc["gale_matrix"]["entries"]] in (
        [1, -1, -1, 1],
        [-1, 1, 1, -1],
    )
    assert doc["affine_dim"] == 2
    assert "total_ms" in doc["timings"]


def test_gale_command_text_input(tmp_path, capsys):
    code, out, _ = run(capsys, "--format", "text", "gale", write_segre2(tmp_path, as_json=False))
    assert code == 0
    assert "gale_matrix" in out


def test_check_self_dual(tmp_path, capsys):
    code, out, _ = run(capsys, "check", "self-dual", write_segre2(tmp_path), "--verify")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] is True
    assert doc["criterion"] == "gale-line-sums"
    assert doc["oracle"]["status"] == "ok"


def test_check_strong(tmp_path, capsys):
    code, out, _ = run(capsys, "check", "strong", write_segre2(tmp_path), "--verify")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] is True


def test_check_facial(tmp_path, capsys):
    code, out, _ = run(
        capsys, "check", "facial", write_segre2(tmp_path), "--subset", "0,2", "--verify"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] is True
    code, out, _ = run(capsys, "check", "facial", write_segre2(tmp_path))
    assert code == 1  # --subset missing


def test_decompose_and_enumerations(tmp_path, capsys):
    path = write_segre2(tmp_path)
    for cmd in ("decompose", "circuits", "flats", "smooth-certificate", "classify-hypersurface"):
        code, out, _ = run(capsys, cmd, path)
        assert code == 0, cmd
        json.loads(out)


def test_classify_hypersurface_value(tmp_path, capsys):
    _, out, _ = run(capsys, "classify-hypersurface", write_segre2(tmp_path))
    assert json.loads(out)["hypersurface_class"] == "segre_quadric"


def test_generate_lawrence_with_parity(tmp_path, capsys):
    out_file = tmp_path / "law.json"
    code, out, _ = run(
        capsys, "generate", "lawrence", "--rows", "1 1 1", "--output", str(out_file)
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["parity_verdict"] is True
    saved = json.loads(out_file.read_text())
    assert saved["rows"] == 4 and saved["cols"] == 6
    # the written file round-trips through the reader
    assert read_matrix(str(out_file)).tolist() == saved["entries"]


def test_generate_family_alpha(tmp_path, capsys):
    code, out, _ = run(capsys, "generate", "family-alpha", "--alpha", "2")
    assert code == 0
    assert json.loads(out)["affine_dim"] == 4


def test_generate_family_dim(capsys):
    code, out, _ = run(capsys, "generate", "family-dim", "--r", "2", "--alphas", "2,-2")
    assert code == 0
    assert json.loads(out)["affine_dim"] == 3


def test_oracle_crosscheck(capsys):
    code, out, _ = run(capsys, "oracle", "crosscheck", "--seed", "3", "--count", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["agreements"] == 5
    assert doc["disagreements"] == []


def test_error_paths(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "gale", str(bad))
    assert code == 1 and "error" in err

    pyramid = tmp_path / "pyr.txt"
    pyramid.write_text("1 1 1 1\n0 1 2 0\n0 0 0 1\n")
    code, _, err = run(capsys, "check", "strong", str(pyramid))
    assert code == 1
    assert "non-pyramidal" in err

    missing = tmp_path / "nope.json"
    code, _, err = run(capsys, "gale", str(missing))
    assert code == 1


def test_inconsistent_json_header(tmp_path, capsys):
    path = tmp_path / "bad_dims.json"
    path.write_text(json.dumps({"rows": 5, "cols": 4, "entries": [[1, 0], [0, 1]]}))
    code, _, err = run(capsys, "gale", str(path))
    assert code == 1 and "disagrees" in err


def test_enumeration_guard_surfaces_as_error(tmp_path, capsys):
    wide = tmp_path / "wide.txt"
    wide.write_text(" ".join(str(i) for i in range(13)) + "\n")
    code, _, err = run(capsys, "circuits", str(wide))
    assert code == 1 and "guard" in err


def test_format_flag_after_subcommand(tmp_path, capsys):
    code, out, _ = run(capsys, "gale", write_segre2(tmp_path), "--format", "text")
    assert code == 0
    assert out.startswith("gale_matrix") or "gale_matrix" in out
