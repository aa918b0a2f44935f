import io
import json

from equilib.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_descent():
    code, text = run("descent", "1", "2", "0")
    assert code == 0
    (rec,) = lines(text)
    assert rec == {"vector": [1, 2, 0], "word": "ty r2", "normal_form": "c b c", "replay": [1, 2, 0], "ok": True}


def test_descent_rejects_non_root(capsys):
    code, _ = run("descent", "1", "1", "1")
    assert code == 2
    assert "not a real root" in capsys.readouterr().err


def test_roots_by_height_and_box():
    code, text = run("roots", "--height", "1")
    assert code == 0
    recs = lines(text)
    assert {tuple(r["vector"]) for r in recs} >= {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    code, text = run("roots", "--box", "2", "--no-word")
    assert code == 0
    vecs = [tuple(r["vector"]) for r in lines(text)]
    assert vecs == sorted(vecs)
    assert all(max(map(abs, v)) <= 2 for v in vecs)
    assert all("word" not in r for r in lines(text))


def test_isotropic():
    code, text = run("isotropic", "--box", "1")
    assert code == 0
    assert len(lines(text)) == 6
    code, text = run("isotropic", "--box", "9")
    assert {"k": 1, "m": 2, "n": 3, "vector": [-1, -4, -9], "abc": [1, 2, 3], "pythagorean": [12, 5, 13]} in lines(text)


def test_pythagorean():
    code, text = run("pythagorean", "--max-c", "3")
    assert code == 0
    recs = lines(text)
    assert any(r["pythagorean"] == [12, 5, 13] for r in recs)
    assert any(r["degenerate"] for r in recs)
    assert run("pythagorean", "--max-c", "0")[0] == 2


def test_rep():
    code, text = run("rep", "--dim", "1", "--elem", "x*", "--exp")
    assert code == 0
    assert lines(text)[0]["matrix"] == [["2", "-1"], ["1", "0"]]
    code, text = run("rep", "--dim", "3", "--check")
    assert code == 0
    assert all(r["status"] == "pass" for r in json.loads(text))
    assert run("rep", "--dim", "2", "--elem", "h", "--exp")[0] == 2
    assert run("rep", "--dim", "2")[0] == 2


def test_verify():
    code, text = run("verify", "--suite", "core", "--suite", "isometry")
    assert code == 0
    summary = json.loads(text)
    assert summary["ok"] and set(summary["suites"]) == {"core", "isometry"}
    assert run("verify")[0] == 2


def test_verify_all():
    code, text = run("verify", "--all")
    assert code == 0
    summary = json.loads(text)
    assert summary["ok"]
    assert set(summary["suites"]) == {"core", "psl2", "roots", "isometry", "isotropic", "rep", "disk"}


def test_verify_failure_exit_code(monkeypatch):
    from equilib import verify

    monkeypatch.setitem(verify.SUITES, "core", lambda: [{"check": "broken", "status": "fail", "witness": None}])
    code, text = run("verify", "--suite", "core")
    assert code == 1
    assert not json.loads(text)["ok"]


def test_disk(tmp_path):
    target = tmp_path / "d.svg"
    assert run("disk", "--depth", "1", "-o", str(target))[0] == 0
    assert target.read_text(encoding="utf-8").count('class="wall"') == 9
    code, text = run("disk", "--depth", "0", "--json")
    assert code == 0 and len(json.loads(text)["walls"]) == 3
    assert run("disk", "--depth", "-1")[0] == 2


def test_bad_usage():
    assert run()[0] == 2
    assert run("nonsense")[0] == 2
    assert run("descent", "a", "b", "c")[0] == 2
    assert run("--version")[0] == 0
