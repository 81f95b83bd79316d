import os
import subprocess
import sys

import pytest

from mixed.calculus import check_derivation, is_cut_free, read_derivation, write_derivation
from mixed.cli import main
from mixed.corpus import cut_corpus, imp3_fixture
from mixed.embeddings import check_lj, check_lk, read_lj, read_lk, write_proof
from mixed.formula import BotOnly, ClassicalVars, parse_formula
from mixed.linear import check_ll, read_ll, translate_sequent
from mixed.oracle import lj_prove_bounded, lk_decide

F = parse_formula
CORPUS = {fx.name: fx for fx in cut_corpus()}


@pytest.fixture
def files(tmp_path):
    def put(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    put.dir = tmp_path
    return put


def run(*argv):
    return main([str(a) for a in argv])


def test_check_accepts_a_valid_proof(files, capsys):
    path = files("proof.mlp", write_derivation(imp3_fixture().derivation))
    assert run("check", path, "--policy", "cvars") == 0
    assert capsys.readouterr().out.strip() == "ok"


def test_check_reports_failures_with_paths(files, capsys):
    path = files("bad.mlp", '(w_l "p, r |- ; q" :principal "r" (ax "p |- ; q"))')
    assert run("check", path) == 1
    assert "root/0" in capsys.readouterr().err


def test_check_dispatches_on_tag_prefix(files):
    lk = files("a.lk", write_proof(lk_decide([], [F("x_c | (x_c -> bot)")])))
    lj = files("a.lj", write_proof(lj_prove_bounded([], F("p -> q -> p"))))
    assert run("check", lk) == 0 and run("check", lj) == 0


def test_normalize_writes_a_cut_free_checkable_proof(files):
    source = CORPUS["k0/imp1"].derivation
    assert check_derivation(source, BotOnly()).ok
    src = files("proof.mlp", write_derivation(source))
    out = files.dir / "out.mlp"
    assert run("normalize", src, "--policy", "bot", "-o", out) == 0
    text = out.read_text()
    assert "cut1" not in text and "cut2" not in text
    assert run("check", out, "--policy", "bot") == 0
    assert is_cut_free(read_derivation(text))


def test_normalize_trace_goes_to_stderr(files, capsys):
    src = files("proof.mlp", write_derivation(CORPUS["k0/imp3"].derivation))
    assert run("normalize", src, "--trace") == 0
    captured = capsys.readouterr()
    assert captured.err.startswith("root: {(3,0)}")
    assert captured.out.startswith("(")


def test_translate_ll_output_checks_and_has_translated_root(files):
    fx = imp3_fixture()
    src = files("proof.mlp", write_derivation(fx.derivation))
    out = files.dir / "out.llp"
    assert run("translate-ll", src, "--policy", "cvars", "-o", out) == 0
    ll = read_ll(out.read_text())
    assert check_ll(ll).ok
    assert ll.conclusion == translate_sequent(fx.derivation.conclusion, ClassicalVars())
    assert run("check", out) == 0


def test_translate_ll_refuses_invalid_input(files):
    src = files("bad.mlp", '(ax "p |- ; q")')
    out = files.dir / "out.llp"
    assert run("translate-ll", src, "-o", out) == 1
    assert not out.exists()


def test_lk_embedding_and_extraction(files):
    d = lk_decide([], [F("((x_c -> y_c) -> x_c) -> x_c")])
    src = files("peirce.lk", write_proof(d))
    mid, back = files.dir / "peirce.mlp", files.dir / "back.lk"
    assert run("embed-lk", src, "-o", mid) == 0
    assert run("check", mid, "--policy", "cvars") == 0
    assert run("extract-lk", mid, "-o", back) == 0
    again = read_lk(back.read_text())
    assert check_lk(again).ok and again.conclusion == d.conclusion


def test_lj_embedding_and_extraction(files):
    d = lj_prove_bounded([F("p & q")], F("q & p"))
    src = files("swap.lj", write_proof(d))
    mid, back = files.dir / "swap.mlp", files.dir / "back.lj"
    assert run("embed-lj", src, "-o", mid) == 0
    assert run("check", mid, "--policy", "bot") == 0
    assert run("extract-lj", mid, "-o", back) == 0
    again = read_lj(back.read_text())
    assert check_lj(again).ok and again.conclusion == d.conclusion


def test_embedding_precondition_failure_exits_2(files, capsys):
    src = files("p.lk", '(lk.ax "p |- p" :principal "p")')
    assert run("embed-lk", src, "--policy", "cvars") == 2
    assert "K ⊄ P" in capsys.readouterr().err
    src = files("x.lj", '(lj.ax "x_c |- x_c" :principal "x_c")')
    assert run("embed-lj", src, "--policy", "cvars") == 2


def test_prove_finds_or_reports_unknown(files, capsys):
    found = files("goal.txt", "p -> q -> p\n")
    assert run("prove", found, "--policy", "bot") == 0
    proof = read_derivation(capsys.readouterr().out)
    assert check_derivation(proof, BotOnly()).ok
    missing = files("lem.txt", "# excluded middle\np | (p -> bot)\n")
    assert run("prove", missing, "--policy", "bot", "--depth", "6") == 1
    assert capsys.readouterr().out.strip() == "unknown (bound reached)"


def test_prove_accepts_full_sequents(files, capsys):
    goal = files("goal.txt", "x_c | y_c |- y_c, x_c ;")
    assert run("prove", goal, "--policy", "cvars") == 0


def test_policy_check(files, capsys):
    sets = files("set.txt", "p\nq\np -> q\n")
    assert run("policy-check", sets, "--policy", "bot", "--embedding", "lj") == 0
    assert run("policy-check", sets, "--policy", "bot", "--embedding", "lk") == 2
    assert run("policy-check", sets, "--policy", "all") == 0
    unstable = files("unstable.txt", "p & q\n")
    assert run("policy-check", unstable, "--policy", "bot") == 2
    out = capsys.readouterr().out
    assert "not stable" in out


def test_policy_file(files):
    members = files("p.txt", "x_c\n")
    src = files("d.mlp", write_derivation(CORPUS["k3/der-der"].derivation))
    assert run("check", src, "--policy", f"file:{members}") == 0
    assert run("check", src, "--policy", "bot") == 1


@pytest.mark.parametrize("argv", [
    ["check", "does-not-exist.mlp"],
    ["check", "{bad}"],
    ["check", "{ok}", "--policy", "classical"],
    ["check", "{ok}", "--policy", "file:missing.txt"],
    ["prove", "{badgoal}"],
])
def test_io_and_parse_errors_exit_3(files, argv):
    paths = {"bad": files("bad.mlp", "(ax "), "ok": files("ok.mlp", '(ax "p |- ; p")'),
             "badgoal": files("g.txt", "p &")}
    argv = [a.format(**paths) for a in argv]
    assert run(*argv) == 3


def test_usage_errors_exit_3(files):
    with pytest.raises(SystemExit) as caught:
        run("frobnicate", files("ok.mlp", '(ax "p |- ; p")'))
    assert caught.value.code == 3


def test_console_script_output_is_byte_identical_across_hash_seeds(files):
    src = files("proof.mlp", write_derivation(CORPUS["k2/or1_l"].derivation))
    outputs = []
    for seed in ("1", "2", "3"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        res = subprocess.run([sys.executable, "-m", "mixed.cli", "normalize", src],
                             capture_output=True, env=env, check=True)
        outputs.append(res.stdout)
        res = subprocess.run([sys.executable, "-m", "mixed.cli", "translate-ll", src],
                             capture_output=True, env=env, check=True)
        outputs.append(res.stdout)
    assert outputs[0::2] == [outputs[0]] * 3
    assert outputs[1::2] == [outputs[1]] * 3
