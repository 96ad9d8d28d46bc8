import io
import json

import jsonschema
import pytest

from qsym.cli import OUTPUT_SCHEMAS, InputError, parse_entry, parse_scalar, run
from qsym.latgroup import MultElement


def call(argv, config=None, tmp_path=None):
    if config is not None:
        path = tmp_path / "cfg.toml"
        path.write_text(config)
        argv = list(argv) + ["--config", str(path)]
    out = io.StringIO()
    code = run(argv, stdout=out)
    return code, out.getvalue()


def doc_of(text):
    doc = json.loads(text)
    schema = OUTPUT_SCHEMAS["error" if "error" in doc else doc["command"]]
    jsonschema.validate(doc, schema)
    assert json.loads(json.dumps(doc)) == doc
    return doc


EX43 = 'd = 2\n[algebra]\nkind = "qpoly"\nn = 2\nq = { "1,2" = "-1" }\n'
FREE = 'd = 7\n[algebra]\nkind = "qpoly"\nn = 2\nfree = ["q"]\nq = { "1,2" = "q" }\n'
Z5 = 'd = 4\ntheorem = "thm-5.2"\n[algebra]\nn = 2\nq = { "1,2" = "zeta5" }\n'


def test_entry_syntax():
    assert parse_entry("-1") == MultElement.root(2)
    assert parse_entry("zeta5^2") == MultElement.root(5, 2)
    assert parse_entry("q^-1", ["q"]) == MultElement.generator(0, -1)
    assert parse_entry("-1*zeta3*q", ["q"]) == MultElement.root(6, 5) * MultElement.generator(0)
    from fractions import Fraction
    assert parse_scalar("3/2*zeta4") == (Fraction(3, 2), MultElement.root(4))
    assert parse_scalar("-2") == (Fraction(2), MultElement.root(2))
    for bad in ["2", "r", "zeta", "", "1+q"]:
        with pytest.raises(InputError):
            parse_entry(bad, ["q"])


def test_check_theorem_examples(tmp_path):
    code, out = call(["check-theorem"], EX43, tmp_path)
    d = doc_of(out)
    assert code == 0 and d["verdict"] == "INCONCLUSIVE" and d["hypotheses"]["ell"] == 2
    code, out = call(["check-theorem"], FREE, tmp_path)
    d = doc_of(out)
    assert d["verdict"] == "APPLIES" and d["hypotheses"]["ell"] == 1
    code, out = call(["check-theorem"], 'theorem = "cor-4.2"\n' + FREE, tmp_path)
    assert doc_of(out)["verdict"] == "APPLIES"
    code, out = call(["check-theorem"], Z5, tmp_path)
    d = doc_of(out)
    assert d["verdict"] == "INCONCLUSIVE"
    assert d["hypotheses"]["ell"] == 5 and d["hypotheses"]["ell_coprime_to_d_factorial"]
    assert d["hypotheses"]["nondegenerate"] is False


def test_check_theorem_deterministic(tmp_path):
    outs = {call(["check-theorem"], cfg, tmp_path)[1] for cfg in [EX43] * 3}
    assert len(outs) == 1


def test_check_theorem_sklyanin(tmp_path):
    cfg = 'd = 3\n[algebra]\nkind = "sklyanin"\na = "1"\nb = "2"\nc = "3"\n'
    d = doc_of(call(["check-theorem"], cfg, tmp_path)[1])
    assert d["theorem"] == "thm-6.7" and d["verdict"] == "APPLIES"
    assert d["hypotheses"]["sigma_order"] == "infinite (certified)"


def test_thm52_applies_for_nondegenerate(tmp_path):
    cfg = 'd = 5\ntheorem = "thm-5.2"\n[algebra]\nn = 2\nfree = ["q"]\nq = { "1,2" = "q" }\n'
    assert doc_of(call(["check-theorem"], cfg, tmp_path)[1])["verdict"] == "APPLIES"


@pytest.mark.parametrize("cfg,err", [
    ("d = 2\n[algebra]\nn = 2\nq = { \"1,2\" = \"2\" }\n", "InputError"),
    ("d = 2\n[algebra]\nn = 2\nq = { \"1,2\" = \"q\" }\n", "InputError"),
    ("d = 2\n[algebra\n", "InputError"),
    ("d = 2\ntheorem = \"thm-9\"\n[algebra]\nn = 2\n", "InputError"),
    ("d = 2\n[algebra]\nn = 2\nexponents = [[1, 0], [0, 0]]\nfree = [\"q\"]\n", "InvalidBicharacter"),
    ("d = 2\n[algebra]\nkind = \"sklyanin\"\na = \"1\"\nb = \"1\"\nc = \"1\"\n", "DegenerateCurve"),
])
def test_input_errors(tmp_path, cfg, err):
    code, out = call(["check-theorem"], cfg, tmp_path)
    assert code == 2 and doc_of(out)["error"] == err


def test_bichar(tmp_path):
    cfg = '[algebra]\nn = 3\nq = { "1,2" = "zeta4", "1,3" = "zeta6", "2,3" = "zeta3" }\n'
    d = doc_of(call(["bichar"], cfg, tmp_path)[1])
    assert d["ell"] == 12 and d["pi_degree_bound"] == 1728
    cfg = '[algebra]\nn = 3\nfree = ["q"]\nexponents = [[0, 1, 1], [-1, 0, 1], [-1, -1, 0]]\n'
    d = doc_of(call(["bichar"], cfg, tmp_path)[1])
    assert d["radical"] in ([[1, -1, 1]], [[-1, 1, -1]]) and d["pi_degree"] is None


def test_verify_action_examples(tmp_path):
    cfg = 'max_degree = 6\n[action]\nbuiltin = "sweedler-qpoly"\norder = 3\n'
    d = doc_of(call(["verify-action"], cfg, tmp_path)[1])
    assert d["hopf_axioms"]["pass"] and d["module_algebra"]["pass"] and d["inner_faithful"]["value"]
    assert d["z"] == "x^3" and d["hopf"]["semisimple"] is False
    cfg = '[action]\nbuiltin = "sweedler-qtorus"\nn = 3\n'
    d = doc_of(call(["verify-action", "--max-degree", "4"], cfg, tmp_path)[1])
    assert d["module_algebra"]["pass"] and d["z"] == "x1*x2^-1*x3"
    cfg = '[action]\nbuiltin = "sweedler-qpoly"\norder = 3\n[action.images]\n"u:x" = "x"\n'
    d = doc_of(call(["verify-action"], cfg, tmp_path)[1])
    assert not d["module_algebra"]["pass"]
    assert {"axiom": "relation", "witness": ["u", [1, 2]]} in d["module_algebra"]["violations"]


def test_verify_action_custom_group(tmp_path):
    cfg = ('[algebra]\nn = 2\nq = { "1,2" = "-1" }\n[action]\nbuiltin = "custom"\nhopf = "group:Z/4"\n'
           '[action.images]\n"1:x1" = "x1"\n"1:x2" = "x2"\n"g:x1" = "-1*x1"\n"g:x2" = "-1*x2"\n'
           '"g^2:x1" = "x1"\n"g^2:x2" = "x2"\n"g^3:x1" = "-1*x1"\n"g^3:x2" = "-1*x2"\n')
    d = doc_of(call(["verify-action", "--max-degree", "3"], cfg, tmp_path)[1])
    assert d["module_algebra"]["pass"] and not d["inner_faithful"]["value"]
    assert len(d["inner_faithful"]["ideal"]) == 2


def test_verify_action_torus_n2(tmp_path):
    code, out = call(["verify-action"], '[action]\nbuiltin = "sweedler-qtorus"\nn = 2\n', tmp_path)
    assert code == 2 and doc_of(out)["error"] == "NoCentralOddElement"


def test_prime_search(tmp_path):
    d = doc_of(call(["prime-search"], '[search]\ng = ["2"]\nr = 2\nbound = 100\n', tmp_path)[1])
    primes = {p for p, _ in d["good"]}
    assert {7, 23} <= primes and d["estimate"]["fraction"] > 0
    d = doc_of(call(["prime-search"], '[search]\ng = ["-1"]\nr = 2\n', tmp_path)[1])
    assert d["estimate"]["good_count"] == 0
    d = doc_of(call(["prime-search", "--bound", "200"], '[search]\ng = ["zeta3"]\nr = 2\n', tmp_path)[1])
    assert d["estimate"]["good_count"] == 45


def test_prime_search_csv_and_free(tmp_path):
    code, out = call(["prime-search", "--csv"], '[search]\ng = ["2"]\nr = 2\nbound = 30\n', tmp_path)
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("prime,") and lines[3].startswith("7,")
    cfg = '[search]\nfree = ["t"]\ng = ["t*zeta3"]\nr = 2\nbound = 50\n'
    assert call(["prime-search"], cfg, tmp_path)[0] == 2
    cfg += 'free_values = ["5"]\n'
    assert doc_of(call(["prime-search"], cfg, tmp_path)[1])["estimate"]["good_count"] > 0


def test_sklyanin_command(tmp_path):
    cfg = 'd = 2\n[algebra]\na = "1"\nb = "1"\nc = "2"\n'
    d = doc_of(call(["sklyanin", "--max-degree", "5"], cfg, tmp_path)[1])
    assert d["hilbert"] == [1, 3, 6, 10, 15, 21] == d["expected_hilbert"]
    assert len(d["central_deg3"]) >= 1 and d["sigma_order"] == 2
    assert d["theorem"]["verdict"] == "INCONCLUSIVE"
    a = call(["sklyanin", "--seed", "5"], "d = 1\n", tmp_path)[1]
    b = call(["sklyanin", "--seed", "5"], "d = 1\n", tmp_path)[1]
    assert a == b and doc_of(a)["seed"] == 5


def test_csv_only_for_prime_search(tmp_path):
    assert call(["bichar", "--csv"], EX43, tmp_path)[0] == 2


def test_stdin_config(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(EX43))
    out = io.StringIO()
    assert run(["check-theorem"], stdout=out) == 0
    assert json.loads(out.getvalue())["verdict"] == "INCONCLUSIVE"


def test_internal_error_exit_code(tmp_path, monkeypatch):
    import qsym.cli as cli

    def boom(cfg, args=None):
        raise AssertionError("invariant broken")
    monkeypatch.setitem(cli.COMMANDS, "bichar", boom)
    code, out = call(["bichar"], EX43, tmp_path)
    assert code == 3 and doc_of(out)["error"] == "internal"
