import io
import json
import subprocess
import sys

import pytest

from weylchar.characters import GradedCharacter
from weylchar.cli import run
from weylchar.series import Series


def call(*argv):
    out = io.StringIO()
    status = run(list(argv), stdout=out)
    return status, out.getvalue()


def test_kostka_json_default():
    status, out = call("kostka", "--shape", "2,2", "--content", "1,1,1,1")
    assert status == 0
    assert json.loads(out) == {"min_deg": 2, "coeffs": [1, 0, 1]}


def test_kostka_text_and_weight_indexing():
    assert call("kostka", "--shape", "2,1", "--content", "1,1,1", "--text") == (0, "u + u^2\n")
    status, out = call("kostka", "--weight", "4", "--xi", "2,2")
    assert status == 0 and json.loads(out) == {"min_deg": 2, "coeffs": [1, 0, 1]}


def test_char_local_json():
    status, out = call("char", "local", "--rank", "1", "--weight", "4", "--json")
    assert status == 0
    data = json.loads(out)
    decomposition = {tuple(e["weight"]): Series.from_dict(e["series"]) for e in data["decomposition"]}
    assert decomposition == {(4,): Series([1]), (2,): Series([1, 1, 1], 1), (0,): Series([1, 0, 1], 2)}
    assert GradedCharacter.from_dict(data).to_dict() == {k: v for k, v in data.items() if k != "decomposition"}


def test_char_kinds():
    assert call("char", "global", "--weight", "2", "--degree", "3")[0] == 0
    assert call("char", "projective", "--weight", "1,0", "--degree", "2")[0] == 0
    status, out = call("char", "symalg", "--rank", "1", "--degree", "3")
    assert status == 0 and "(0): 1 + u + 3*u^2 + 6*u^3 + O(u^4)" in out


def test_hilbert():
    assert call("hilbert", "--weight", "2", "--degree", "4") == (0, "1 + u + 2*u^2 + 2*u^3 + 3*u^4 + O(u^5)\n")


def test_verify_symmetric_algebra_identity():
    status, out = call("verify", "theorem2", "--degree", "12")
    assert status == 0
    assert "pass, cutoff m <= 12" in out.splitlines()[0]


def test_verify_reciprocity_json():
    status, out = call("verify", "reciprocity", "--m", "1", "--degree", "6", "--json")
    assert status == 0 and json.loads(out)["pass"] is True


def test_oracle_commands():
    assert call("oracle", "local-weyl", "--ell", "2")[0] == 0
    status, out = call("oracle", "m-module", "--k", "1", "--ell", "2", "--degree", "4", "--json")
    assert json.loads(out) == {"min_deg": 1, "coeffs": [1, 1, 2, 2], "trunc": 4}
    assert call("oracle", "theta", "--degree", "3")[0] == 0


def test_usage_errors():
    assert call("nonsense")[0] == 2
    assert call("kostka", "--shape", "1,2", "--content", "3")[0] == 2
    assert call("kostka", "--shape", "x", "--content", "3")[0] == 2
    assert call("oracle", "tensor-char", "--ell", "9", "--degree", "2")[0] == 2
    assert call("oracle", "tensor-char", "--ell", "2")[0] == 2
    assert call("char", "local", "--rank", "2", "--weight", "1")[0] == 2
    assert call("char", "local", "--weight", "-1")[0] == 2


def test_force_unlocks_bounds():
    status, _ = call("oracle", "tensor-char", "--ell", "1", "--degree", "9", "--force")
    assert status == 0


def test_diff(tmp_path):
    a, b, c, s = (tmp_path / n for n in ("a.json", "b.json", "c.json", "s.json"))
    assert run(["oracle", "tensor-char", "--ell", "2", "--degree", "6", "--json", "-o", str(a)]) == 0
    assert run(["char", "global", "--rank", "1", "--weight", "2", "--degree", "6", "--json", "-o", str(b)]) == 0
    assert call("diff", str(a), str(b)) == (0, "equal; compared up to u^6\n")
    assert call("diff", str(a), str(a))[0] == 0
    assert run(["char", "global", "--weight", "2", "--degree", "4", "--json", "-o", str(c)]) == 0
    status, out = call("diff", str(a), str(c))
    assert status == 0 and "up to u^4 (truncations 6 and 4)" in out
    assert run(["char", "global", "--weight", "4", "--degree", "4", "--json", "-o", str(c)]) == 0
    status, out = call("diff", str(b), str(c), "--json")
    assert status == 1 and json.loads(out)["equal"] is False
    assert run(["hilbert", "--weight", "1", "--degree", "3", "--json", "-o", str(s)]) == 0
    assert call("diff", str(a), str(s))[0] == 2


@pytest.mark.parametrize("argv", [
    ["char", "local", "--weight", "1,1", "--json"],
    ["verify", "conjecture", "--weight", "1,0", "--degree", "2", "--json"],
    ["oracle", "theta", "--degree", "2", "--json"],
])
def test_deterministic_and_round_trip(argv):
    first, second = call(*argv), call(*argv)
    assert first == second
    data = json.loads(first[1])
    assert json.loads(json.dumps(data, sort_keys=True)) == data
    if data.get("kind") == "graded_character":
        again = GradedCharacter.from_dict(data).to_dict()
        assert again == {k: v for k, v in data.items() if k != "decomposition"}


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "weylchar.cli", "kostka", "--shape", "1", "--content", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"min_deg": 0, "coeffs": [1]}
