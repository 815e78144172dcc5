"""Command-line front end.

Usage: ``jordantype COMMAND [FILE] [options]``.  ``FILE`` is a JSON algebra
description (see the README); ``dominance``, ``jdt-dominance`` and
``cod2-enum`` take no file.  Exit status: 0 success, 1 user error, 2 failed
internal consistency check.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .algebra import ArtinianAlgebra, associated_graded, from_description
from .errors import InvariantViolation, JordanTypeError
from .hessian import cod2_jordan_types, hessian_rank_at, mixed_hessian, rank_theorem_table, slp_certificate
from .jordan import (
    DEFAULT_SEED,
    dsjt,
    generic_element,
    generic_jordan_type,
    is_strong_lefschetz,
    is_weak_lefschetz,
    jdt_from_strings,
    jordan_degree_type,
    jordan_string_basis,
    jordan_type,
    lsjt,
    sjt,
)
from .linalg import QQ, field_to_spec
from .partition import HilbertFunction, JordanDegreeType, Partition, dominates, jdt_dominates
from .poly import format_polynomial
from .symdecomp import n_invariant, symmetric_decomposition



@dataclass
class RunConfig:
    command: str
    input: str | None = None
    ell: str | None = None
    trials: int = 8
    seed: int = DEFAULT_SEED
    format: str = "text"
    params: dict = field(default_factory=dict)
    options: dict = field(default_factory=dict)


class UserError(Exception):
    pass


def _parse_params(items) -> dict:
    out = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise UserError(f"--param expects NAME=VALUE, got {item!r}")
        out[name.strip()] = QQ.parse(value)
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jordantype", description="Jordan types of multiplication maps on Artinian algebras.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_file=True):
        if with_file:
            sp.add_argument("input", help="JSON algebra description")
            sp.add_argument("--param", action="append", metavar="NAME=VALUE", help="rational value for a declared parameter")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        sp.add_argument("--trials", type=int, default=8)
        sp.add_argument("--compact", action="store_true", help="run notation for Jordan degree types")
        return sp

    common(sub.add_parser("hilbert", help="Hilbert function"))
    for name in ("jt", "jdt", "sjt", "lsjt", "dsjt"):
        common(sub.add_parser(name)).add_argument("--ell", required=True)
    sp = common(sub.add_parser("strings", help="pre-Jordan or Jordan string basis"))
    sp.add_argument("--ell", required=True)
    sp.add_argument("--full", action="store_true", help="Jordan basis instead of pre-Jordan basis")
    common(sub.add_parser("generic-jt", help="Jordan type of a generic linear form"))
    common(sub.add_parser("lefschetz", help="weak and strong Lefschetz tests")).add_argument("--ell")
    sp = common(sub.add_parser("hessian", help="higher or mixed Hessian of the dual generator"))
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--u", type=int)
    sp.add_argument("--at", help="comma-separated point")
    sp.add_argument("--rank-theorem", action="store_true", help="check all Hessian ranks against multiplication ranks at --at")
    common(sub.add_parser("slp", help="strong Lefschetz certificate from Hessian determinants"))
    common(sub.add_parser("symdecomp", help="symmetric decomposition of the Hilbert function"))
    sp = common(sub.add_parser("n-invariant"))
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    common(sub.add_parser("agrade", help="description of the associated graded algebra"))
    sp = common(sub.add_parser("dominance", help="compare two partitions"), with_file=False)
    sp.add_argument("P")
    sp.add_argument("Q")
    sp = common(sub.add_parser("jdt-dominance", help="compare two Jordan degree types"), with_file=False)
    sp.add_argument("S")
    sp.add_argument("T")
    sp = common(sub.add_parser("cod2-enum", help="Jordan types on codimension-two complete intersections"), with_file=False)
    sp.add_argument("--H", required=True)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    skip = {"command", "input", "ell", "trials", "seed", "format", "param"}
    return RunConfig(
        command=ns.command,
        input=getattr(ns, "input", None),
        ell=getattr(ns, "ell", None),
        trials=ns.trials,
        seed=ns.seed,
        format=ns.format,
        params=_parse_params(getattr(ns, "param", None)),
        options={k: v for k, v in vars(ns).items() if k not in skip},
    )


# -- rendering -------------------------------------------------------------------

def _jdt_json(S) -> list:
    return [[p, nu] for p, nu in S]


def _partition_list_text(label: str, seq) -> str:
    return "\n".join(f"{label}={i}: {P}" for i, P in seq)


# -- commands --------------------------------------------------------------------

def _load(cfg: RunConfig) -> tuple[ArtinianAlgebra, dict]:
    try:
        with open(cfg.input, encoding="utf-8") as fh:
            desc = json.load(fh)
    except OSError as exc:
        raise UserError(f"cannot read {cfg.input}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UserError(f"{cfg.input} is not valid JSON: {exc}") from exc
    if not isinstance(desc, dict):
        raise UserError("an algebra description must be a JSON object")
    return from_description(desc, cfg.params), desc


def _dual_generator(A: ArtinianAlgebra, desc: dict, params: dict):
    if "dual" not in desc:
        raise UserError("this command needs a description with a 'dual' generator")
    return A.ring.dual_ring().parse(desc["dual"], params)


def _point(text: str) -> tuple:
    return tuple(QQ.parse(x) for x in text.split(","))


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns ``(exit code, rendered output)``."""
    try:
        data, text = _dispatch(cfg)
    except InvariantViolation as exc:
        return 2, f"internal consistency check failed: {exc}"
    except (UserError, JordanTypeError, ValueError, ZeroDivisionError) as exc:
        return 1, f"error: {exc}"
    if cfg.format == "json":
        return 0, json.dumps(data, ensure_ascii=False, sort_keys=True)
    return 0, text


def _dispatch(cfg: RunConfig):
    c = cfg.command
    o = cfg.options
    if c == "dominance":
        cmp = dominates(Partition.parse(o["P"]), Partition.parse(o["Q"]))
        return {"comparison": cmp.value}, cmp.value
    if c == "jdt-dominance":
        cmp = jdt_dominates(JordanDegreeType.parse(o["S"]), JordanDegreeType.parse(o["T"]))
        return {"comparison": cmp.value}, cmp.value
    if c == "cod2-enum":
        types = cod2_jordan_types(HilbertFunction.parse(o["H"]))
        return {"partitions": [list(P) for P in types]}, "\n".join(P.text() for P in types)

    A, desc = _load(cfg)
    params = dict(desc.get("params", {}))
    params.update(cfg.params)

    def ell_arg():
        return A.ring.parse(cfg.ell, params)

    if c == "hilbert":
        H = A.hilbert_function
        return {"hilbert_function": list(H), "dim": A.dim}, ",".join(map(str, H))
    if c == "jt":
        P = jordan_type(A, ell_arg())
        return {"partition": list(P)}, P.text()
    if c == "generic-jt":
        P = generic_jordan_type(A, cfg.trials, cfg.seed)
        return {"partition": list(P)}, P.text()
    if c == "jdt":
        ell = ell_arg()
        S = jordan_degree_type(A, ell)
        if S != jdt_from_strings(A, ell):
            raise InvariantViolation("rank formula and string basis give different Jordan degree types")
        return {"jdt": _jdt_json(S)}, S.text(compact=o["compact"])
    if c == "strings":
        B = jordan_string_basis(A, ell_arg(), full=o["full"])
        if not B.is_basis() or (o["full"] and not B.is_jordan()):
            raise InvariantViolation("string basis check failed")
        rows = []
        for s, g in zip(B.strings, B.generators()):
            rows.append({"generator": format_polynomial(g), "length": s.length, "degree": s.degree})
        text = "\n".join(
            f"{r['generator']}  length {r['length']}" + (f"  degree {r['degree']}" if r["degree"] is not None else "")
            for r in rows
        )
        return {"strings": rows, "partition": list(B.lengths())}, text
    if c == "lefschetz":
        ell = ell_arg() if cfg.ell else generic_element(A, cfg.trials, cfg.seed)
        data = {
            "ell": format_polynomial(ell),
            "weak": is_weak_lefschetz(A, ell),
            "strong": is_strong_lefschetz(A, ell),
            "jordan_type": list(jordan_type(A, ell)),
            "hilbert_function": list(A.hilbert_function),
        }
        text = f"ell = {data['ell']}\nweak Lefschetz: {_yes(data['weak'])}\nstrong Lefschetz: {_yes(data['strong'])}"
        return data, text
    if c == "sjt":
        seq = sjt(A, ell_arg())
        return {"sjt": [list(P) for P in seq]}, _partition_list_text("i", enumerate(seq, 1))
    if c == "lsjt":
        seq = lsjt(A, ell_arg())
        return {"lsjt": [list(P) for P in seq]}, _partition_list_text("k", enumerate(seq))
    if c == "dsjt":
        T = dsjt(A, ell_arg())
        return T.to_json(), T.text()
    if c == "hessian":
        F = _dual_generator(A, desc, params)
        k = o["k"]
        u = o["u"] if o["u"] is not None else k
        Hm = mixed_hessian(F, k, u)
        data = Hm.to_json()
        text = Hm.text()
        if o["at"]:
            pt = _point(o["at"])
            data["rank_at"] = hessian_rank_at(Hm, pt)
            text += f"\nrank at ({o['at']}): {data['rank_at']}"
            if o["rank_theorem"]:
                reports = rank_theorem_table(F, pt)
                data["rank_theorem"] = [r.to_json() for r in reports]
                bad = [r for r in reports if not r.passed]
                text += "\nrank theorem: " + ("all ranks agree" if not bad else f"{len(bad)} mismatches")
                if bad:
                    raise InvariantViolation(
                        "Hessian and multiplication ranks differ at "
                        + ", ".join(f"(k={r.k},u={r.u}): {r.hessian_rank} vs {r.multiplication_rank}" for r in bad)
                    )
        elif o["rank_theorem"]:
            raise UserError("--rank-theorem needs --at")
        return data, text
    if c == "slp":
        cert = slp_certificate(_dual_generator(A, desc, params), cfg.trials, cfg.seed)
        return cert.to_json(), cert.text()
    if c == "symdecomp":
        D = symmetric_decomposition(A)
        return D.to_json(), D.text()
    if c == "n-invariant":
        N = n_invariant(A, o["i"], o["b"])
        return {"i": o["i"], "b": o["b"], "n": N}, str(N)
    if c == "agrade":
        G = associated_graded(A)
        out = {
            "field": field_to_spec(A.field),
            "vars": list(A.ring.names),
            "ideal": [format_polynomial(g) for g in G.ideal_generators()],
            "mode": "graded",
        }
        return out, json.dumps(out, ensure_ascii=False)
    raise UserError(f"unknown command {c!r}")


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except (UserError, JordanTypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    code, out = run(cfg)
    stream = sys.stdout if code == 0 else sys.stderr
    print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
