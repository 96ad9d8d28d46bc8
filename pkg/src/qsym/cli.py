"""Command-line front end.

    qsym check-theorem --config cfg.toml
    qsym bichar        --config cfg.toml
    qsym verify-action --config cfg.toml [--max-degree D]
    qsym prime-search  --config cfg.toml [--bound X] [--csv]
    qsym sklyanin      --config cfg.toml [--max-degree D] [--seed n]

Configs are TOML, read from a file or from standard input (``--config -``,
the default).  The grammar is documented in docs/cli.md.  Output is one JSON
document carrying ``schema_version`` (or CSV for ``prime-search --csv``).

Exit codes: 0 computed, 2 input error, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
from bisect import bisect_right
import csv
import io
import json
import random
import re
import sys
from fractions import Fraction
from typing import Sequence

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from . import hopfcore, latgroup, qalg, redmodp, sklyanin
from .exactnum import BadPrime, primes_up_to
from .latgroup import Bicharacter, InvalidBicharacter, MultElement

SCHEMA_VERSION = "1"
THEOREMS = ("thm-4.1", "thm-5.2", "thm-6.7", "cor-4.2")


# JSON Schema (draft 2020-12) of every document the CLI prints.
_BASE = {"schema_version": {"const": SCHEMA_VERSION}, "command": {"type": "string"}}
_VERDICT = {"enum": ["APPLIES", "INCONCLUSIVE"]}
_ORDER = {"anyOf": [{"type": "integer", "minimum": 1}, {"enum": ["infinite (certified)", "exceeds bound"]}]}
OUTPUT_SCHEMAS = {
    "error": {
        "type": "object", "required": ["schema_version", "command", "error", "message"],
        "properties": {**_BASE, "error": {"type": "string"}, "message": {"type": "string"}},
    },
    "check-theorem": {
        "type": "object", "required": ["schema_version", "command", "theorem", "kind", "hypotheses", "verdict",
                                       "explanation"],
        "properties": {**_BASE, "theorem": {"enum": list(THEOREMS)}, "kind": {"enum": ["qpoly", "qtorus", "sklyanin"]},
                       "hypotheses": {"type": "object", "required": ["d"]}, "verdict": _VERDICT,
                       "explanation": {"type": "string"}},
    },
    "bichar": {
        "type": "object", "required": ["schema_version", "command", "n", "q", "ell", "radical", "nondegenerate",
                                       "conductor", "pi_degree", "pi_degree_bound"],
        "properties": {**_BASE, "n": {"type": "integer"}, "q": {"type": "object"}, "ell": {"type": "integer"},
                       "radical": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
                       "nondegenerate": {"type": "boolean"}, "pi_degree": {"type": ["integer", "null"]}},
    },
    "verify-action": {
        "type": "object", "required": ["schema_version", "command", "hopf", "target", "max_degree", "hopf_axioms",
                                       "module_algebra", "inner_faithful"],
        "properties": {**_BASE,
                       "hopf_axioms": {"type": "object", "required": ["pass", "violations"]},
                       "module_algebra": {"type": "object", "required": ["pass", "violations"]},
                       "inner_faithful": {"type": "object", "required": ["value", "status", "ideal"],
                                          "properties": {"status": {"enum": ["exact", "truncated"]}}}},
    },
    "prime-search": {
        "type": "object", "required": ["schema_version", "command", "r", "estimate", "good", "reports"],
        "properties": {**_BASE,
                       "estimate": {"type": "object", "required": ["bound", "primes_total", "primes_examined",
                                                                   "good_count", "good_all_count", "fraction"],
                                    "properties": {"fraction": {"type": "number", "minimum": 0, "maximum": 1}}},
                       "reports": {"type": "array", "items": {"type": "object", "required": [
                           "prime", "character", "orders", "order", "coprime_to_r"]}}},
    },
    "sklyanin": {
        "type": "object", "required": ["schema_version", "command", "a", "b", "c", "hilbert", "central_deg3",
                                       "sigma_order", "theorem"],
        "properties": {**_BASE, "hilbert": {"type": "array", "items": {"type": "integer"}},
                       "central_deg3": {"type": "array", "items": {"type": "string"}}, "sigma_order": _ORDER},
    },
}


class InputError(ValueError):
    pass


# --------------------------------------------------------------------------
# scalar syntax: factors joined by "*": integers, fractions, -1, zetaN[^k], name[^k]

_FACTOR = re.compile(r"^(?:(?P<num>-?\d+(?:/\d+)?)|zeta(?P<n>\d+)(?:\^(?P<k>-?\d+))?|(?P<var>[A-Za-z_]\w*)(?:\^(?P<e>-?\d+))?)$")


def parse_scalar(text: str, free_names: Sequence[str] = ()) -> tuple[Fraction, MultElement]:
    """Split a product like ``-2*zeta5^2*q^-1`` into (rational part, multiplicative part)."""
    rat, mult = Fraction(1), MultElement()
    text = str(text).strip()
    if not text:
        raise InputError("empty scalar")
    for raw in text.split("*"):
        tok = raw.strip().replace(" ", "")
        m = _FACTOR.match(tok)
        if not m:
            raise InputError(f"cannot parse factor {raw!r} in {text!r}")
        if m["num"]:
            v = Fraction(m["num"])
            if v == 0:
                raise InputError("scalars must be nonzero")
            if v < 0:
                mult = mult * MultElement.root(2)
                v = -v
            rat *= v
        elif m["n"]:
            n = int(m["n"])
            if n < 1:
                raise InputError("zeta conductor must be positive")
            mult = mult * MultElement.root(n, int(m["k"] or 1))
        else:
            name = m["var"]
            if name not in free_names:
                raise InputError(f"undeclared free generator {name!r}; list it under 'free'")
            mult = mult * MultElement.generator(list(free_names).index(name), int(m["e"] or 1))
    return rat, mult


def parse_entry(text: str, free_names: Sequence[str] = ()) -> MultElement:
    rat, mult = parse_scalar(text, free_names)
    if rat != 1:
        raise InputError(f"bicharacter entry {text!r} must be a root of unity times free generators")
    return mult


# --------------------------------------------------------------------------
# config handling


def load_config(path: str | None) -> dict:
    try:
        if path in (None, "-"):
            return tomllib.loads(sys.stdin.read())
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read config: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise InputError(f"config is not valid TOML: {exc}") from exc


def _section(cfg: dict, name: str) -> dict:
    sec = cfg.get(name)
    if not isinstance(sec, dict):
        raise InputError(f"config needs a [{name}] section")
    return sec


def _int(value, what: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{what} must be an integer")
    if minimum is not None and value < minimum:
        raise InputError(f"{what} must be >= {minimum}")
    return value


def bicharacter_from(alg: dict) -> Bicharacter:
    """Bicharacter from an [algebra] section.

    Either ``q = { "1,2" = "-1", ... }`` (1-based upper entries, unlisted ones
    are 1) or ``exponents = [[...]]`` with ``base = "<scalar>"``.
    """
    free = tuple(alg.get("free", ()))
    n = _int(alg.get("n"), "algebra.n", 1)
    if "exponents" in alg:
        m = alg["exponents"]
        if len(m) != n or any(len(r) != n for r in m):
            raise InputError("exponents must be an n x n matrix")
        base = parse_entry(alg.get("base", free[0] if free else "1"), free)
        return Bicharacter.from_exponents(m, base, free)
    upper = {}
    for key, val in alg.get("q", {}).items():
        mt = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*", key)
        if not mt:
            raise InputError(f"bad q key {key!r}; use \"i,j\"")
        i, j = int(mt[1]) - 1, int(mt[2]) - 1
        if i > j:
            i, j = j, i
            upper[(i, j)] = parse_entry(val, free).inverse()
        else:
            upper[(i, j)] = parse_entry(val, free)
    return Bicharacter.from_upper(n, upper, free)


def bichar_text(q: Bicharacter) -> dict:
    n = q.n
    return {f"{i + 1},{j + 1}": q[i, j].to_text(q.free_names) for i in range(n) for j in range(i + 1, n)}


def _dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, default=str)


def _doc(command: str, **body) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, **body}


# --------------------------------------------------------------------------
# commands


def lattice_data(q: Bicharacter) -> dict:
    ell = latgroup.component_group_order(q)
    rad = latgroup.radical(q)
    out = {
        "n": q.n,
        "q": bichar_text(q),
        "free": list(q.free_names),
        "ell": ell,
        "radical": rad,
        "nondegenerate": not rad,
    }
    if q.is_torsion:
        pi, bound = qalg.pi_degree(q)
        out.update(conductor=q.conductor, pi_degree=pi, pi_degree_bound=bound)
    else:
        out.update(conductor=q.conductor, pi_degree=None, pi_degree_bound=None)
    return out


def cmd_bichar(cfg: dict, args=None) -> dict:
    alg = _section(cfg, "algebra")
    return _doc("bichar", **lattice_data(bicharacter_from(alg)))


def cmd_check_theorem(cfg: dict, args=None) -> dict:
    alg = _section(cfg, "algebra")
    kind = alg.get("kind", "qpoly")
    if kind not in ("qpoly", "qtorus", "sklyanin"):
        raise InputError(f"unknown algebra kind {kind!r}")
    theorem = cfg.get("theorem", "thm-6.7" if kind == "sklyanin" else "thm-4.1")
    if theorem not in THEOREMS:
        raise InputError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    d = _int(cfg.get("d"), "d", 1)
    if (theorem == "thm-6.7") != (kind == "sklyanin"):
        raise InputError(f"{theorem} does not apply to algebra kind {kind!r}")

    if kind == "sklyanin":
        a, b, c = (_fraction(alg, k) for k in "abc")
        bound = _int(cfg.get("bound", 200), "bound", 1)
        v = sklyanin.check_theorem_sklyanin(a, b, c, d, bound)
        hyp = {"a": v.a, "b": v.b, "c": v.c, "d": d, "sigma_order": v.sigma_order, "pi_degree": v.pi_degree}
        return _doc("check-theorem", theorem=theorem, kind=kind, hypotheses=hyp,
                    verdict=v.verdict, explanation=v.explanation)

    q = bicharacter_from(alg)
    data = lattice_data(q)
    ell = data["ell"]
    coprime = redmodp.coprime_to_factorial(ell, d)
    hyp = {"d": d, "ell": ell, "ell_coprime_to_d_factorial": coprime,
           "nondegenerate": data["nondegenerate"], "radical": data["radical"], "q": data["q"]}
    why = []
    if theorem == "cor-4.2":
        if q.n != 2:
            raise InputError("cor-4.2 concerns a single parameter q (n = 2)")
        order = q[0, 1].order
        ok = order is None or redmodp.coprime_to_factorial(order, d)
        hyp["q_order"] = "infinite" if order is None else order
        why.append("order of q is infinite" if order is None else
                   f"order of q is {order}, {'coprime' if ok else 'not coprime'} to {d}!")
    else:
        ok = coprime
        why.append(f"ell = {ell} is {'coprime' if coprime else 'not coprime'} to {d}!")
        if theorem == "thm-5.2":
            ok = ok and data["nondegenerate"]
            why.append("q is nondegenerate" if data["nondegenerate"] else
                       f"q is degenerate (radical basis {data['radical']})")
    verdict = "APPLIES" if ok else "INCONCLUSIVE"
    return _doc("check-theorem", theorem=theorem, kind=kind, hypotheses=hyp,
                verdict=verdict, explanation="; ".join(why))


def _fraction(sec: dict, key: str) -> Fraction:
    if key not in sec:
        raise InputError(f"missing parameter {key!r}")
    try:
        return Fraction(str(sec[key]))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"parameter {key} = {sec[key]!r} is not a rational number") from exc


def _vec_text(v: Sequence) -> list[str]:
    return [str(x) for x in v]


def _target_algebra(cfg: dict, act: dict) -> qalg.QAlgebra:
    builtin = act.get("builtin")
    if builtin == "sweedler-qpoly":
        return qalg.quantum_plane(_int(act.get("order", 3), "action.order", 2), _int(act.get("exponent", 1), "action.exponent"))
    if builtin == "sweedler-qtorus":
        return qalg.sign_torus(_int(act.get("n", 3), "action.n", 1))
    alg = _section(cfg, "algebra")
    variant = "torus" if alg.get("kind", "qpoly") == "qtorus" else "poly"
    return qalg.QAlgebra(bicharacter_from(alg), variant=variant, names=alg.get("names"))


def _hopf_from(act: dict) -> hopfcore.FinDimHopf:
    if "hopf_file" in act:
        try:
            with open(act["hopf_file"]) as fh:
                return hopfcore.parse_hopf(fh.read())
        except OSError as exc:
            raise InputError(f"cannot read hopf_file: {exc}") from exc
    return hopfcore.preset(act.get("hopf", "sweedler"))


def build_action(cfg: dict) -> hopfcore.HopfAction:
    """Action from an [action] section.

    builtin = "sweedler-qpoly" (order, exponent) | "sweedler-qtorus" (n) |
    "custom" (hopf preset or hopf_file, images over [algebra]).  An
    [action.images] table maps "label:generator" to element text and
    overrides or supplies generator images.
    """
    act = _section(cfg, "action")
    builtin = act.get("builtin", "custom")
    if builtin not in ("sweedler-qpoly", "sweedler-qtorus", "custom"):
        raise InputError(f"unknown builtin action {builtin!r}")
    A = _target_algebra(cfg, act)
    images = act.get("images", {})
    if builtin == "sweedler-qtorus":
        if images:
            raise InputError("the torus action is defined by the grading rule; images are not accepted")
        return hopfcore.sweedler_graded_action(A)
    z = None
    if builtin == "sweedler-qpoly":
        z = qalg.sweedler_action_data(A)
        base = hopfcore.sweedler_generator_action(A, z)
        H, imgs = base.hopf, dict(base.images)
    else:
        H, imgs = _hopf_from(act), {}
    for key, text in images.items():
        mt = re.fullmatch(r"\s*([^:]+?)\s*:\s*(\w+)\s*", key)
        if not mt or mt[1] not in H.labels or mt[2] not in A.names:
            raise InputError(f"bad image key {key!r}; use \"<hopf label>:<generator>\"")
        imgs[(H.labels.index(mt[1]), A.names.index(mt[2]))] = qalg.parse_element(A, str(text))
    try:
        action = hopfcore.GeneratorAction(H, A, imgs)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    action.z = z
    return action


def cmd_verify_action(cfg: dict, args=None) -> dict:
    D = getattr(args, "max_degree", None) or cfg.get("max_degree", 4)
    D = _int(D, "max_degree", 2)
    action = build_action(cfg)
    H = action.hopf
    hopf_bad = hopfcore.verify_hopf_axioms(H)
    mod_bad = hopfcore.verify_module_algebra(action, D)
    inner = hopfcore.inner_faithful(action, D)
    semi, integral = hopfcore.is_semisimple(H)
    z = getattr(action, "z", None)
    return _doc(
        "verify-action",
        hopf={"labels": list(H.labels), "dimension": H.dim, "semisimple": semi, "integral": _vec_text(integral)},
        target={"n": action.target.n, "variant": action.target.variant, "names": list(action.target.names),
                "q": bichar_text(action.target.q)},
        z=None if z is None else qalg.format_element(z),
        max_degree=D,
        hopf_axioms={"pass": not hopf_bad, "violations": [_violation(v) for v in hopf_bad]},
        module_algebra={"pass": not mod_bad, "violations": [_violation(v) for v in mod_bad]},
        inner_faithful={"value": inner.inner_faithful, "status": inner.status,
                        "annihilator_dims": inner.annihilator_dims,
                        "ideal": [_vec_text(v) for v in inner.ideal]},
    )


def _violation(v: hopfcore.Violation) -> dict:
    def conv(w):
        return list(conv(x) for x in w) if isinstance(w, tuple) else w
    return {"axiom": v.axiom, "witness": conv(v.witness)}


def search_inputs(cfg: dict, args=None) -> tuple[list, int, int, list | None, int | None]:
    sec = _section(cfg, "search")
    free = list(sec.get("free", ()))
    free_values = [Fraction(str(v)) for v in sec["free_values"]] if "free_values" in sec else None
    g = []
    for text in sec.get("g", ()):
        rat, mult = parse_scalar(str(text), free)
        g.append(redmodp.instantiate(mult, free_values) * rat if rat != 1 else mult)
    if not g:
        raise InputError("search.g must list at least one entry")
    r = _int(sec.get("r", 1), "search.r", 1)
    bound = getattr(args, "bound", None) or sec.get("bound", 1000)
    bound = _int(bound, "bound", 2)
    workers = sec.get("workers")
    return g, r, bound, free_values, workers


def cmd_prime_search(cfg: dict, args=None) -> dict:
    g, r, bound, free_values, workers = search_inputs(cfg, args)
    try:
        res = redmodp.prime_search(g, r, bound, free_values, workers)
    except redmodp.UninstantiatedFreeGenerator as exc:
        raise InputError(str(exc)) from exc
    mode = _section(cfg, "search").get("mode", "existential")
    if mode not in ("existential", "universal"):
        raise InputError("search.mode must be 'existential' or 'universal'")
    est = res.estimate.as_dict()
    est["mode"] = mode
    est["selected_fraction"] = est["fraction"] if mode == "existential" else est["fraction_all"]
    return _doc("prime-search", r=r, estimate=est,
                good=[list(x) for x in res.good],
                reports=[rep.as_dict() for rep in res.reports])


def prime_search_csv(doc: dict) -> str:
    """Per-report rows with the running good-prime fraction, for external tools."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["prime", "character", "residue_degree", "orders", "order", "coprime_to_r", "running_fraction"])
    reports = doc["reports"]
    primes = primes_up_to(reports[-1]["prime"]) if reports else []
    good: set[int] = set()
    seen = 0
    for rep in reports:
        if rep["coprime_to_r"]:
            good.add(rep["prime"])
        seen = bisect_right(primes, rep["prime"], lo=seen)
        w.writerow([rep["prime"], rep["character"], rep["residue_degree"], " ".join(map(str, rep["orders"])),
                    rep["order"], int(rep["coprime_to_r"]), f"{len(good) / seen:.6f}"])
    return buf.getvalue()


def _random_triple(seed: int) -> tuple[int, int, int]:
    rng = random.Random(seed)
    while True:
        a, b, c = (rng.choice([k for k in range(-9, 10) if k]) for _ in range(3))
        try:
            sklyanin.HesseCurve(a, b, c)
            return a, b, c
        except sklyanin.DegenerateCurve:
            continue


def cmd_sklyanin(cfg: dict, args=None) -> dict:
    alg = cfg.get("algebra", {})
    seed = getattr(args, "seed", None)
    if all(k in alg for k in "abc"):
        a, b, c = (_fraction(alg, k) for k in "abc")
    else:
        seed = 0 if seed is None else seed
        a, b, c = map(Fraction, _random_triple(seed))
    D = getattr(args, "max_degree", None) or cfg.get("max_degree", 4)
    D = _int(D, "max_degree", 0)
    if D > 6:
        raise InputError("max_degree above 6 is out of range for exact Hilbert dimensions")
    d = _int(cfg.get("d", 1), "d", 1)
    bound = _int(cfg.get("bound", 200), "bound", 1)
    hilb = sklyanin.sklyanin_hilbert(a, b, c, D)
    center = sklyanin.sklyanin_central_deg3(a, b, c)
    v = sklyanin.check_theorem_sklyanin(a, b, c, d, bound)
    return _doc("sklyanin", a=str(a), b=str(b), c=str(c), seed=seed, max_degree=D,
                hilbert=list(hilb),
                expected_hilbert=[(m + 1) * (m + 2) // 2 for m in range(D + 1)],
                central_deg3=[sklyanin.element_text(T, 3) for T in center],
                sigma_order=v.sigma_order,
                theorem={"theorem": "thm-6.7", "d": d, "verdict": v.verdict, "pi_degree": v.pi_degree,
                         "explanation": v.explanation})


COMMANDS = {
    "check-theorem": cmd_check_theorem,
    "bichar": cmd_bichar,
    "verify-action": cmd_verify_action,
    "prime-search": cmd_prime_search,
    "sklyanin": cmd_sklyanin,
}

INPUT_ERRORS = (InputError, InvalidBicharacter, qalg.ParseError, qalg.NoCentralOddElement, qalg.NotTorsion,
                sklyanin.DegenerateCurve, hopfcore.HopfFormatError, hopfcore.UndefinedOnInverse, BadPrime,
                KeyError, ValueError)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qsym", description="Hypothesis checks for finite quantum symmetry.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--config", default="-", help="TOML config path, or - for stdin (default)")
        fmt = s.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="JSON output (default)")
        fmt.add_argument("--csv", action="store_true", help="CSV report rows (prime-search only)")
        s.add_argument("--max-degree", type=int, default=None)
        s.add_argument("--bound", type=int, default=None)
        s.add_argument("--seed", type=int, default=None)
    return p


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    out = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.csv and args.command != "prime-search":
            raise InputError("--csv is only available for prime-search")
        cfg = load_config(args.config)
        doc = COMMANDS[args.command](cfg, args)
    except AssertionError as exc:
        out.write(_dumps(_doc(args.command, error="internal", message=str(exc))) + "\n")
        return 3
    except INPUT_ERRORS as exc:
        out.write(_dumps(_doc(args.command, error=type(exc).__name__, message=str(exc))) + "\n")
        return 2
    out.write(prime_search_csv(doc) if args.csv else _dumps(doc) + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
