import json

import pytest

from braid3.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestNormalize:
    def test_garside_display(self, capsys):
        code, out, _ = run(capsys, "normalize", "a^3 B a^-3 B")
        assert code == 0 and out.strip() == "D^-3 a^7"

    def test_murasugi_display(self, capsys):
        code, out, _ = run(capsys, "normalize", "--form", "murasugi", "a^3 b A^2 b^2")
        assert code == 0 and out.strip() == "D^2 A b A^3 b"

    def test_identity(self, capsys):
        code, out, _ = run(capsys, "normalize", "")
        assert code == 0
        assert out.strip() == "identity (case A, ℓ=0, p=0)"

    def test_certificate_flag(self, capsys):
        code, out, _ = run(capsys, "normalize", "--certificate", "b a^3 b a^-3")
        assert code == 0
        assert "verified: yes" in out

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, "normalize", "a^3 q")
        assert code == 2 and "parse error" in err

    def test_json(self, capsys):
        code, out, _ = run(capsys, "normalize", "--json", "--certificate", "abababab")
        data = json.loads(out)
        assert data["form"]["case"] == "B"
        assert data["form"]["ell"] == 1 and data["form"]["p"] == 1
        assert data["certificate"]["verified"] is True


class TestInvariants:
    def test_torus_report(self, capsys):
        code, out, _ = run(capsys, "invariants", "--json", "abababab")
        data = json.loads(out)
        assert code == 0
        assert data["upsilon"] == -2 and data["signature"] == -6
        assert data["genus3"] == 3 and data["alt"] == {"lo": 1, "hi": 1, "exact": True}
        assert data["fdtc"] == "4/3"

    def test_unknot_closure(self, capsys):
        _, out, _ = run(capsys, "invariants", "--json", "A b")
        data = json.loads(out)
        assert data["upsilon"] == 0 and data["signature"] == 0

    def test_link_report(self, capsys):
        _, out, _ = run(capsys, "invariants", "--json", "a^3")
        data = json.loads(out)
        assert data["is_knot"] is False and data["components"] == 2
        assert data["upsilon"] is None
        assert data["fdtc"] == "0/1"
        assert data["garside_form"]["case"] == "A"

    def test_fixed_key_set(self, capsys):
        _, out, _ = run(capsys, "invariants", "--json", "a^3 b A^2 b^2")
        data = json.loads(out)
        assert set(data) == {
            "word", "components", "is_knot", "upsilon", "signature", "s",
            "genus3", "genus4", "tau", "alt", "dalt", "turaev", "minimal_r",
            "ballinger_t", "fdtc", "homogenized_upsilon", "gamma4_lower",
            "garside_form", "murasugi_form", "flags",
        }

    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "invariants", "a^3 B a^-3 B")
        assert code == 0
        assert "upsilon: 0" in out
        assert "alt: [0, 1]" in out

    def test_report_round_trips_through_display(self, capsys):
        _, out1, _ = run(capsys, "invariants", "--json", "a^3 b A^2 b^2")
        first = json.loads(out1)
        _, out2, _ = run(capsys, "invariants", "--json", first["garside_form"]["display"])
        second = json.loads(out2)
        first.pop("word")
        second.pop("word")
        assert first == second


class TestCertify:
    def test_torus_sum(self, capsys):
        code, out, _ = run(capsys, "certify", "a^2 b^2 a^3 b^3", "--kind", "torus-sum")
        data = json.loads(out)
        assert code == 0 and data["verified"] is True
        assert data["genus"] == "1/1"
        assert data["end"] == "T(2,5) # T(2,3) # T(2,3)"

    def test_twist(self, capsys):
        code, out, _ = run(capsys, "certify", "a b", "--kind", "twist", "--n", "1")
        data = json.loads(out)
        assert code == 0 and data["verified"] is True and data["genus"] == "1/1"

    def test_precondition_exit_code(self, capsys):
        code, _, err = run(capsys, "certify", "a^3", "--kind", "torus-sum")
        assert code == 3 and "not a knot" in err


class TestVerify:
    def test_equal_words(self, capsys):
        code, out, _ = run(capsys, "verify", "aba", "bab")
        assert code == 0 and json.loads(out)["equal_in_b3"] is True

    def test_unequal_words(self, capsys):
        code, out, _ = run(capsys, "verify", "ab", "ba")
        data = json.loads(out)
        assert code == 1 and data["equal_in_b3"] is False
        assert data["conjugacy_fingerprints_match"] is True

    def test_certificate_file_round_trip(self, capsys, tmp_path):
        code, out, _ = run(capsys, "certify", "a^3 b^3", "--kind", "torus-sum")
        path = tmp_path / "cert.json"
        path.write_text(out)
        code, out, _ = run(capsys, "verify", "--cert", str(path))
        assert code == 0 and json.loads(out)["verified"] is True

    def test_tampered_certificate_file(self, capsys, tmp_path):
        _, out, _ = run(capsys, "certify", "a^3 b^3", "--kind", "torus-sum")
        data = json.loads(out)
        data["genus"] = "1/1"
        data["euler_char"] = -2
        path = tmp_path / "cert.json"
        path.write_text(json.dumps(data))
        code, out, _ = run(capsys, "verify", "--cert", str(path))
        assert code == 1
        assert json.loads(out)["reasons"]


class TestBatch:
    def test_worked_examples(self, capsys, tmp_path):
        src = tmp_path / "in.csv"
        src.write_text("name,word\neight20,a^3 B a^-3 B\neight21,a^3 b A^2 b^2\n")
        code, out, err = run(capsys, "batch", "--csv", str(src))
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        assert [r["name"] for r in rows] == ["eight20", "eight21"]
        assert [r["upsilon"] for r in rows] == [0, -1]
        assert [r["signature"] for r in rows] == [0, -2]
        assert [r["s"] for r in rows] == [0, -2]
        assert "2 processed, 0 errors" in err

    def test_empty_file(self, capsys, tmp_path):
        src = tmp_path / "in.csv"
        src.write_text("name,word\n")
        code, out, err = run(capsys, "batch", "--csv", str(src))
        assert code == 0 and out == ""
        assert "0 processed" in err

    def test_bad_row_continues(self, capsys, tmp_path):
        src = tmp_path / "in.csv"
        src.write_text("name,word\nbad,xyz\ngood,ab\n")
        code, out, err = run(capsys, "batch", "--csv", str(src))
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        assert "parse error at 1" in rows[0]["error"]
        assert rows[1]["upsilon"] == 0
        assert "2 processed, 1 errors" in err

    def test_output_file(self, capsys, tmp_path):
        src = tmp_path / "in.csv"
        src.write_text("name,word\nk,ab\n")
        dst = tmp_path / "out.jsonl"
        code, _, _ = run(capsys, "batch", "--csv", str(src), "--out", str(dst))
        assert code == 0
        assert json.loads(dst.read_text().splitlines()[0])["name"] == "k"

    def test_unreadable_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "batch", "--csv", str(tmp_path / "missing.csv"))
        assert code == 2 and "cannot read" in err


class TestWordLengthGuard:
    def test_env_guard(self, capsys, monkeypatch):
        monkeypatch.setenv("BRAID3_MAX_WORD_LEN", "8")
        code, _, err = run(capsys, "invariants", "a^9")
        assert code == 2 and "BRAID3_MAX_WORD_LEN" in err
        code, _, _ = run(capsys, "invariants", "a^8")
        assert code == 0
