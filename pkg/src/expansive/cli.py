"""Command-line front end: run analyses on JSON-described systems.

Every subcommand prints a single JSON object (or its CSV flattening) with a
stable field order, so identical inputs give byte-identical output.  Exit
codes: 0 = analysis completed, 2 = negative verdict (refutation, witness
found, finite separation), 1 = usage or input error, reported as a JSON error
object on stderr.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import germ as germ_mod
from .analysis import (SEPARATES_FINITELY, SftLanguage, asymptotic_verdict,
                       nonstandard_expansive_pair, nonstandard_expansive_sft,
                       separation_report, transport_bound, uniform_window_step,
                       window_sequence, _frac_str)
from .iet import FieldElem, IetMap, check_commutation, is_regular, itinerary
from .sequences import Alphabet, sequence_from_json, sequence_to_json
from .systems import Sft


class InputError(ValueError):
    pass


def _load_json_arg(text: str):
    """Inline JSON when the argument starts with '{', otherwise a file path."""
    if text.lstrip().startswith("{"):
        return json.loads(text)
    return json.loads(Path(text).read_text())


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {text!r}: {exc}") from None


def _sequence_arg(text: str):
    return sequence_from_json(_load_json_arg(text))


def _point_arg(text: str) -> FieldElem:
    if text.lstrip().startswith("{"):
        return FieldElem.from_json(json.loads(text))
    return FieldElem.rational(_parse_rational(text))


# -- subcommand handlers; each returns (result_dict, exit_code) --------------


def _cmd_sep(args):
    x = _sequence_arg(args.x)
    y = _sequence_arg(args.y)
    rep = separation_report(x, y, _parse_rational(args.c), args.horizon)
    return rep.to_json(), 0


def _cmd_nse_pair(args):
    x = _sequence_arg(args.x)
    y = _sequence_arg(args.y)
    verdict = nonstandard_expansive_pair(x, y, _parse_rational(args.c))
    return {"verdict": verdict}, (2 if verdict == SEPARATES_FINITELY else 0)


def _cmd_asym(args):
    x = _sequence_arg(args.x)
    y = _sequence_arg(args.y)
    return asymptotic_verdict(x, y).to_json(), 0


def _cmd_sft_check(args):
    s = Sft.from_json(_load_json_arg(args.sft))
    res = nonstandard_expansive_sft(s, _parse_rational(args.c))
    out = {"nonstandard_expansive": res.nonstandard_expansive}
    if res.witness is not None:
        out["witness"] = [sequence_to_json(res.witness[0]),
                          sequence_to_json(res.witness[1])]
        out["witness_separates_finitely"] = res.witness_separates_finitely
    return out, (0 if res.nonstandard_expansive else 2)


def _cmd_window(args):
    lang = SftLanguage(Sft.from_json(_load_json_arg(args.sft)))
    eps = _parse_rational(args.epsilon)
    c = _parse_rational(args.c)
    if args.mode == "step":
        cert = uniform_window_step(lang, eps, args.n, c, args.m_max)
    else:
        cert = window_sequence(lang, eps, c, args.steps, args.m_max)
    return cert.to_json(), (2 if cert.kind == "refuted" else 0)


def _cmd_iti(args):
    t = IetMap.from_json(_load_json_arg(args.iet))
    x = _point_arg(args.x)
    result = itinerary(t, x, args.radius)
    out = result.to_json()
    out["rationally_independent"] = t.is_rationally_independent()
    if not out["rationally_independent"]:
        out["warning"] = "breakpoints are rationally dependent with 1"
    if args.commutation:
        reg = is_regular(t, x, args.radius + 1)
        out["commutation"] = (check_commutation(t, x, args.radius)
                              if reg.regular else None)
    return out, 0


def _cmd_germ(args):
    value = germ_mod.evaluate_expression(args.expression)
    if isinstance(value, bool):
        rendered = "true" if value else "false"
    else:
        rendered = str(value)
    return {"expression": args.expression, "result": rendered}, 0


def _cmd_transport(args):
    tb = transport_bound(_parse_rational(args.alpha), args.inverse_radius,
                         Alphabet(args.alphabet_size))
    return {"alpha": _frac_str(tb.alpha), "inverse_radius": tb.inverse_radius,
            "window": tb.window, "delta": _frac_str(tb.delta)}, 0


# -- CSV flattening -----------------------------------------------------------


def _to_csv(command: str, result: dict) -> str:
    buf = io.StringIO()

    def row(*cells):
        buf.write(",".join(str(c) for c in cells) + "\n")

    if command == "sep" and "times" in result:
        row("n", "distance", "classification")
        for n in sorted(result["times"], key=int):
            row(n, result["distances"][n], result["times"][n])
    elif command == "iti":
        radius = result["radius"]
        row("k", "label")
        for k, ch in enumerate(result["window"]):
            row(k - radius, ch)
    elif command == "window" and result.get("sequence") is not None:
        row("k", "n")
        for k, n in enumerate(result["sequence"], start=1):
            row(k, n)
    else:
        row("key", "value")
        for k, v in result.items():
            row(k, json.dumps(v) if isinstance(v, (dict, list)) else v)
    return buf.getvalue()


# -- argument plumbing --------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="expansive",
        description="Exact separation analyses for symbolic dynamical systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON file of defaults; flags win")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("sep", help="per-shift separation report for a pair")
    p.add_argument("--x", required=True, help="sequence JSON (inline or path)")
    p.add_argument("--y", required=True)
    p.add_argument("--c", default=None, help="separation constant, e.g. 1/2")
    p.add_argument("--horizon", type=int, default=None)
    common(p)

    p = sub.add_parser("nse-pair", help="pairwise infinite-separation verdict")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--c", default=None)
    common(p)

    p = sub.add_parser("asym", help="asymptotic-pair verdict")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    common(p)

    p = sub.add_parser("sft-check", help="vertex-shift verdict with witness")
    p.add_argument("--sft", required=True, help="SFT JSON (inline or path)")
    p.add_argument("--c", default=None)
    common(p)

    p = sub.add_parser("window", help="uniform-window certificates")
    p.add_argument("--sft", required=True)
    p.add_argument("--epsilon", default=None)
    p.add_argument("--c", default=None)
    p.add_argument("--mode", choices=("step", "sequence"), default="step")
    p.add_argument("--n", type=int, default=None, help="lower window bound (step mode)")
    p.add_argument("--steps", type=int, default=None, help="sequence length (sequence mode)")
    p.add_argument("--m-max", type=int, default=None)
    common(p)

    p = sub.add_parser("iti", help="interval-exchange itinerary and regularity")
    p.add_argument("--iet", required=True, help="IET JSON (inline or path)")
    p.add_argument("--x", required=True, help="point: rational or field JSON")
    p.add_argument("--radius", type=int, default=None)
    p.add_argument("--commutation", action="store_true",
                   help="also check the shift-commutation window")
    common(p)

    p = sub.add_parser("germ", help="germ calculator")
    p.add_argument("expression", help='e.g. "st((3n+2)/(n+1))"')
    common(p)

    p = sub.add_parser("transport", help="continuity constant for inverse codes")
    p.add_argument("--alpha", default=None)
    p.add_argument("--inverse-radius", type=int, default=None)
    p.add_argument("--alphabet-size", type=int, default=None)
    common(p)

    return parser


_DEFAULTS = {
    "sep": {"c": "1/2", "horizon": 20},
    "nse-pair": {"c": "1/2"},
    "asym": {},
    "sft-check": {"c": "1/2"},
    "window": {"epsilon": "1/2", "c": "1/2", "n": 1, "steps": 5, "m_max": 30},
    "iti": {"radius": 20},
    "germ": {},
    "transport": {"alpha": "1", "inverse_radius": 0, "alphabet_size": 3},
}

_HANDLERS = {
    "sep": _cmd_sep,
    "nse-pair": _cmd_nse_pair,
    "asym": _cmd_asym,
    "sft-check": _cmd_sft_check,
    "window": _cmd_window,
    "iti": _cmd_iti,
    "germ": _cmd_germ,
    "transport": _cmd_transport,
}


def _merge_config(args) -> None:
    """Fill unset options from --config (flags win); reject unknown fields."""
    defaults = dict(_DEFAULTS[args.command])
    if args.config:
        loaded = json.loads(Path(args.config).read_text())
        known = set(defaults) | {k.replace("-", "_") for k in vars(args)}
        for key, value in loaded.items():
            dest = key.replace("-", "_")
            if dest not in known:
                raise InputError(f"unknown config field {key!r}")
            if getattr(args, dest, None) is None:
                setattr(args, dest, value)
    for key, value in defaults.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _merge_config(args)
        result, code = _HANDLERS[args.command](args)
    except (InputError, ValueError, KeyError, OSError,
            json.JSONDecodeError) as exc:
        error = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        print(json.dumps(error, indent=2), file=sys.stderr)
        return 1
    payload = {"command": args.command, "result": result}
    if args.format == "csv":
        text = _to_csv(args.command, result)
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
