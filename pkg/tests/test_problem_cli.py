import io
import json
import os
import subprocess
import sys

import pytest

from cartan_forge.cli import run
from cartan_forge.corpus import WAVE2D, names, problems
from cartan_forge.parser import parse
from cartan_forge.problem import ENV_MAX_ORDER, ProblemError, loads, resolve_max_order
from cartan_forge.variational import euler


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def wave_file(tmp_path):
    path = tmp_path / "wave.cf"
    path.write_text(WAVE2D + "\n[form bad]\nu*dx&dt\n")
    return str(path)


class TestProblemFiles:
    def test_wave(self):
        prob = loads(WAVE2D, "wave")
        assert prob.space.independent == ("x", "t")
        assert prob.system.describe() == ["u_{tt} = u_{xx}"]
        assert prob.lagrangian.to_text() == "(1/2*u_{t}^2 - 1/2*u_{x}^2)*dx&dt"

    def test_forms_and_comments(self):
        prob = loads("[vars]\nindependent = x\ndependent = u  # field\n\n"
                     "[form l]\nu_x*th[u]\n+ u*dx\n")
        assert prob.system is None or prob.system.relations == ()
        assert prob.form("l").to_text() == "u*dx + u_{x}*th[u]"
        with pytest.raises(ProblemError):
            prob.form("missing")

    @pytest.mark.parametrize("text,fragment,line", [
        ("[vars]\nindependent = x\n", "needs both", 1),
        ("u = 1\n[vars]\n", "content before", 1),
        ("[vars]\nindependent = x\ndependent = u\n[bogus]\n", "unknown section", 4),
        ("[vars]\nindependent = x\ndependent = u\n[equations]\nu_x u\n", "exactly one '='", 5),
        ("[vars]\nindependent = x\ndependent = u\n[equations]\nu_x = w\n", "unknown variable", 5),
        ("[vars]\nindependent = x\ndependent = u\n[lagrangian]\nu*th[u]&dx\n", "degree 1", 4),
        ("[vars]\nindependent = x\ndependent = u\n[options]\ncolour = red\n", "unknown option", 5),
        ("[vars]\nindependent = x, x\ndependent = u\n", "duplicate", 2),
        ("[vars]\nindependent = x\ndependent = x\n", "both independent and dependent", 1),
    ])
    def test_errors_report_lines(self, text, fragment, line):
        with pytest.raises(ProblemError) as info:
            loads(text)
        assert fragment in str(info.value)
        assert info.value.line == line

    def test_format_option(self):
        with pytest.raises(ProblemError):
            loads("[vars]\nindependent = x\ndependent = u\n[options]\nformat = xml\n")


class TestMaxOrderPrecedence:
    def test_default(self, monkeypatch):
        monkeypatch.delenv(ENV_MAX_ORDER, raising=False)
        assert resolve_max_order(None) == 12

    def test_file_beats_default(self, monkeypatch):
        monkeypatch.delenv(ENV_MAX_ORDER, raising=False)
        assert resolve_max_order(None, "7") == 7

    def test_env_beats_file(self, monkeypatch):
        monkeypatch.setenv(ENV_MAX_ORDER, "9")
        assert resolve_max_order(None, "7") == 9

    def test_flag_beats_env(self, monkeypatch):
        monkeypatch.setenv(ENV_MAX_ORDER, "9")
        assert resolve_max_order(5, "7") == 5

    def test_invalid(self, monkeypatch):
        monkeypatch.setenv(ENV_MAX_ORDER, "many")
        with pytest.raises(ProblemError):
            resolve_max_order(None)
        with pytest.raises(ProblemError):
            resolve_max_order(0)

    def test_applied_to_system(self, monkeypatch):
        monkeypatch.delenv(ENV_MAX_ORDER, raising=False)
        prob = loads(WAVE2D + "\n[options]\nmax_order = 6\n")
        assert prob.system.max_order == 6


class TestCorpus:
    def test_names(self):
        assert names() == ["wave2d", "pkdv", "scalar_field_nd", "maxwell3d", "maxwell4d"]

    def test_unknown(self):
        with pytest.raises(KeyError):
            problems("nope")

    def test_maxwell4d_euler_matches_hand_formula(self):
        prob = problems("maxwell4d")[0]
        sp = prob.space
        space = ["x", "y", "z"]
        comps = euler(prob.lagrangian).components
        # hand: E_0 = sum_k (a_k,kt - a0,kk);  E_k = -a_k,tt + a0,kt + sum_{j!=k} (a_k,jj - a_j,jk)
        e0 = " + ".join(f"a{k}_{s}t - a0_{s}{s}" for k, s in enumerate(space, 1))
        assert comps[0] == parse(sp, e0)
        for k, s in enumerate(space, 1):
            terms = [f"-a{k}_tt + a0_{s}t"]
            for j, s2 in enumerate(space, 1):
                if j != k:
                    terms.append(f"a{k}_{s2}{s2} - a{j}_{s}{s2}")
            assert comps[k] == parse(sp, " + ".join(terms)), k


class TestCli:
    def test_euler(self, wave_file):
        code, out, _ = cli("euler", wave_file)
        assert code == 0
        assert "E[u] = -u_{tt} + u_{xx}" in out

    def test_internal(self, wave_file):
        code, out, _ = cli("internal", wave_file)
        assert code == 0
        assert "presymplectic: dx&th[u]&th[u;t] + dt&th[u]&th[u;x]" in out
        assert "hidden: not hidden" in out

    def test_failed_precondition_exits_one(self, wave_file):
        code, out, _ = cli("roundtrip", wave_file, "--form", "bad")
        assert code == 1
        assert "dx&dt&th[u]" in out

    def test_json(self, wave_file):
        code, out, _ = cli("internal", wave_file, "--json")
        assert code == 0
        data = json.loads(out)
        report = data[0] if isinstance(data, list) else data
        assert report["command"] == "internal"
        verdicts = {c["check"]: c["verdict"] for c in report["checks"]}
        assert verdicts and all(v == "PASS" for v in verdicts.values())

    def test_file_format_option(self, tmp_path):
        path = tmp_path / "w.cf"
        path.write_text(WAVE2D + "\n[options]\nformat = json\n")
        code, out, _ = cli("euler", str(path))
        assert code == 0
        json.loads(out)

    @pytest.mark.parametrize("argv", [
        ("euler", "/nonexistent/problem.cf"),
        ("corpus", "nope"),
        ("euler",),
    ])
    def test_input_errors_exit_two(self, argv):
        code, _, err = cli(*argv)
        assert code == 2
        assert err.startswith("cartan-forge:")

    def test_parse_error_exit_two(self, tmp_path):
        path = tmp_path / "bad.cf"
        path.write_text("[vars]\nindependent = x\ndependent = u\n[lagrangian]\nu_x +\n")
        code, _, err = cli("euler", str(path))
        assert code == 2
        assert "line 5" in err

    def test_reduce(self, wave_file):
        code, out, _ = cli("reduce", wave_file)
        assert code == 0
        assert "[PASS] rewrite routes agree" in out

    def test_deterministic(self, wave_file):
        assert cli("internal", wave_file)[1] == cli("internal", wave_file)[1]

    def test_corpus_entry(self):
        code, out, _ = cli("corpus", "wave2d")
        assert code == 0
        assert "[FAIL]" not in out

    def test_console_script(self, wave_file):
        env = dict(os.environ)
        proc = subprocess.run([sys.executable, "-m", "cartan_forge", "roundtrip", wave_file, "--form", "bad"],
                              capture_output=True, text=True, env=env)
        assert proc.returncode == 1
        proc = subprocess.run([sys.executable, "-m", "cartan_forge", "euler", wave_file],
                              capture_output=True, text=True, env=env)
        assert proc.returncode == 0
