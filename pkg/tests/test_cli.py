import json
import subprocess
import sys


from ordspace.cli import main
from ordspace.groups import group_from_json
from ordspace.orders import ordering_from_json

F1 = '{"family":"f1","r":"2"}'
C1 = '{"kind":"conrad","signs":[1,1]}'
KLEIN = '{"family":"tower","n":2,"signs":{"1,2":-1}}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.splitlines(), err


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "--group", F1, "--word", "b a b^-1")
    assert code == 0 and out == ['{"k":0,"s":"2"}']


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--series", '{"n":2,"scalars":{"1,2":"-1"}}')
    assert out == ['{"c_count":4,"lo_count":4,"verdict":"tararin"}']
    code, out, _ = run(capsys, "classify", "--series", "[1]")
    assert json.loads(out[0]) == {"c_count": "infinite", "lo_count": "infinite", "verdict": "infinite_c"}
    code, out, err = run(capsys, "classify", "--series", '{"n":3,"scalars":{"1,2":"2","2,3":"3"}}')
    assert code == 1 and json.loads(out[0])["triple"] == [1, 2, 3]


def test_dist(capsys):
    smirnov = '{"kind":"smirnov","eps":{"value":"11","side":"above"}}'
    code, out, _ = run(capsys, "dist", "--group", F1, "--o1", C1, "--o2", smirnov, "--max-radius", "8")
    assert out == ['{"agreement_radius":6,"dist":"1/64","witness":"b^2 a^-3 b^-1"}']


def test_cmp_and_sign(capsys):
    _, out, _ = run(capsys, "cmp", "--group", F1, "--ordering", C1, "--x", "a", "--y", "b")
    assert out == ['{"cmp":"less"}']
    _, out, _ = run(capsys, "sign", "--group", F1, "--ordering", C1, "--word", "b^-1 a^9")
    assert out == ['{"sign":"negative"}']


def test_ball(capsys):
    _, out, _ = run(capsys, "ball", "--group", F1, "--radius", "2")
    assert len(out) == 18
    assert json.loads(out[-1]) == {"radius": 2, "size": 17}
    assert json.loads(out[0]) == {"elem": {"k": 0, "s": "0"}, "length": 0, "word": "id"}


def test_enum_round_trips(capsys):
    code, out, _ = run(capsys, "enum", "--group", KLEIN, "--kind", "left")
    assert code == 0 and len(out) == 4
    group = group_from_json(json.loads(KLEIN))
    for line in out:
        assert ordering_from_json(group, json.loads(line)).descriptor() == json.loads(line)


def test_checkers(capsys):
    _, out, _ = run(capsys, "check", "--group", F1, "--ordering", C1, "--radius", "3")
    assert json.loads(out[0])["ok"] is True
    _, out, _ = run(capsys, "conradian", "--group", F1, "--ordering", '{"kind":"smirnov","eps":"0"}', "--radius", "3")
    assert json.loads(out[0])["ok"] is False
    _, out, _ = run(capsys, "cofinal", "--group", F1, "--ordering", C1, "--radius", "1", "--exp-bound", "4")
    assert json.loads(out[0])["ok"] is False


def test_converge(capsys):
    params = json.dumps([{"value": str(2 ** j), "side": "above"} for j in (1, 10)])
    _, out, _ = run(capsys, "converge", "--group", F1, "--params", params, "--target", C1, "--max-radius", "6")
    rows = [json.loads(line) for line in out]
    assert rows[0]["eps"] == {"side": "above", "value": "2"}
    assert rows[1]["agreement_radius"] == ">=6"


def test_probe(capsys):
    smirnov = '{"kind":"smirnov","eps":{"value":"3","side":"above"}}'
    _, out, _ = run(capsys, "probe", "--group", F1, "--ordering", smirnov, "--positive", "a", "--positive", "b")
    rec = json.loads(out[0])
    assert rec["isolated"] is False and rec["ordering"]["eps"] == {"side": "above", "value": "7/2"}
    tararin = '{"kind":"tararin","signs":[1,1]}'
    _, out, _ = run(capsys, "probe", "--group", KLEIN, "--ordering", tararin, "--positive", "a1", "--positive", "a2")
    assert json.loads(out[0])["isolated"] is True


def test_dynreal(capsys):
    _, out, _ = run(capsys, "dynreal", "--group", F1, "--ordering", C1, "--words", "id,a,b,a^-1")
    assert [json.loads(line)["t"] for line in out[:4]] == ["0", "1", "2", "-1"]
    assert json.loads(out[-1])["ok"] is True


def test_exit_codes(capsys):
    code, _, err = run(capsys, "nf", "--group", F1)
    assert code == 2 and "--word" in err
    code, _, err = run(capsys, "nf", "--group", "{bad", "--word", "a")
    assert code == 2 and "--group" in err
    code, _, _ = run(capsys, "nf", "--group", F1, "--word", "a^")
    assert code == 1
    code, _, err = run(capsys, "enum", "--group", F1, "--kind", "left")
    assert code == 1 and "bi-orderable" in err
    nonconvex = json.dumps({"kind": "quotient", "group": json.loads(F1), "of": {"kind": "smirnov", "eps": "0"}})
    code, _, err = run(capsys, "sign", "--group", '{"family":"z"}', "--ordering", nonconvex, "--word", "b")
    assert code == 1 and "not convex" in err
    code, _, _ = run(capsys, "bogus")
    assert code == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ordspace.cli", "nf", "--group", F1, "--word", "a^{1/2} b"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == '{"k":1,"s":"1/4"}'
