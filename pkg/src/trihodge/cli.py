"""Command-line interface.

One binary with subcommands; a diagram comes from a JSON file, a builtin
name, or the seeded random generator. Output is byte-deterministic: fixed
line order, plain decimal integers, torsion rendered as Z/d tokens. The
--json flag switches to a machine format with the same values.

Exit codes: 0 success (and diagram valid), 1 invalid diagram or refused
computation, 2 unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .complexes import (
    cech_complex,
    dual_middle_homology,
    hodge_diamond,
    homology,
    homology_groups,
    serre_duality_holds,
)
from .diagram import (
    InvalidDiagramError,
    TrisectionDiagram,
    builtin,
    builtin_names,
    diagram_from_curves,
    ensure_valid,
    euler_characteristic,
    random_diagram,
)
from .pairings import CycleConditionError, H2DualRep, h2_basis_cocycles, intersection_form
from .spin import enumerate_spin
from .spinc import act, base_ledger, c1_difference, is_admissible

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2


class CliInputError(Exception):
    """Unreadable or malformed input; maps to exit code 2."""


@dataclass
class Report:
    command: str
    label: str
    payload: dict
    lines: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK

    def render_text(self) -> str:
        head = [f"command: {self.command}", f"diagram: {self.label}"]
        return "\n".join(head + self.lines)

    def render_json(self) -> str:
        doc = {"command": self.command, "diagram": self.label, "result": self.payload}
        return json.dumps(doc, sort_keys=True, indent=2)


def _fmt_vec(v) -> str:
    return "[" + ", ".join(str(int(x)) for x in v) + "]"


def _group_doc(h) -> dict:
    return {"rank": h.rank, "torsion": list(h.torsion), "text": str(h)}


def _read_json_file(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliInputError(
            f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc


def _curve_list(data, key: str, source: str):
    curves = data.get(key)
    if not isinstance(curves, list) or not all(
        isinstance(c, list) and all(isinstance(e, int) for e in c) for c in curves
    ):
        raise CliInputError(f"{source}: field {key!r} must be a list of integer vectors")
    return curves


def _diagram_from_file(path: str) -> TrisectionDiagram:
    data = _read_json_file(path)
    if not isinstance(data, dict):
        raise CliInputError(f"{path}: expected a JSON object")
    missing = [k for k in ("genus", "alpha", "beta", "gamma") if k not in data]
    if missing:
        raise CliInputError(f"{path}: missing fields {', '.join(missing)}")
    if not isinstance(data["genus"], int):
        raise CliInputError(f"{path}: field 'genus' must be an integer")
    label = data.get("label")
    if label is not None and not isinstance(label, str):
        raise CliInputError(f"{path}: field 'label' must be a string")
    try:
        return diagram_from_curves(
            data["genus"],
            _curve_list(data, "alpha", path),
            _curve_list(data, "beta", path),
            _curve_list(data, "gamma", path),
            label=label,
        )
    except ValueError as exc:
        raise CliInputError(f"{path}: {exc}") from exc


def _load_diagram(args) -> TrisectionDiagram:
    have_path = args.path is not None
    have_builtin = args.builtin is not None
    have_random = args.genus is not None or args.seed is not None
    if sum((have_path, have_builtin, have_random)) != 1:
        raise CliInputError(
            "choose exactly one diagram source: a file path, --builtin, or --genus with --seed"
        )
    if have_path:
        return _diagram_from_file(args.path)
    if have_builtin:
        try:
            return builtin(args.builtin)
        except KeyError as exc:
            raise CliInputError(exc.args[0]) from exc
    if args.genus is None or args.seed is None:
        raise CliInputError("random diagrams need both --genus and --seed")
    if args.genus < 0:
        raise CliInputError("--genus must be nonnegative")
    return random_diagram(args.genus, args.seed)


def cmd_validate(d: TrisectionDiagram, args) -> Report:
    report = d.validation
    payload = {
        "genus": d.genus,
        "valid": report.is_valid,
        "checks": [{"name": name, "ok": ok} for name, ok in report.checks],
        "k_values": list(report.k_values) if report.k_values is not None else None,
        "euler_characteristic": euler_characteristic(d) if report.is_valid else None,
    }
    lines = [f"genus: {d.genus}"]
    lines += [f"check {name}: {'pass' if ok else 'FAIL'}" for name, ok in report.checks]
    if report.k_values is not None:
        lines.append(f"k-values: {_fmt_vec(report.k_values)}")
        lines.append(f"euler characteristic: {euler_characteristic(d)}")
    lines.append(f"verdict: {'valid' if report.is_valid else 'invalid'}")
    return Report(
        command="validate",
        label=d.describe(),
        payload=payload,
        lines=lines,
        exit_code=EXIT_OK if report.is_valid else EXIT_INVALID,
    )


def cmd_homology(d: TrisectionDiagram, args) -> Report:
    ensure_valid(d)
    groups = homology_groups(d)
    fm_middle = groups[2]
    dual_middle = dual_middle_homology(d)
    cech_middle = homology(cech_complex(d, 1), 1)
    agreed = fm_middle == dual_middle == cech_middle
    payload = {
        "groups": {f"H_{k}": _group_doc(h) for k, h in enumerate(groups)},
        "betti": [h.rank for h in groups],
        "three_way_h2_check": "pass" if agreed else "fail",
    }
    lines = [f"H_{k}: {h}" for k, h in enumerate(groups)]
    lines.append(f"three-way H2 check: {'pass' if agreed else 'fail'}")
    return Report(
        command="homology",
        label=d.describe(),
        payload=payload,
        lines=lines,
        exit_code=EXIT_OK if agreed else EXIT_INVALID,
    )


def cmd_diamond(d: TrisectionDiagram, args) -> Report:
    ensure_valid(d)
    diamond = hodge_diamond(d)
    serre = serre_duality_holds(diamond)
    cohomology = [diamond.cohomology(k) for k in range(5)]
    payload = {
        "grid": [[_group_doc(h) for h in row] for row in diamond.grid],
        "cohomology": {f"H^{k}": _group_doc(h) for k, h in enumerate(cohomology)},
        "serre_duality": "pass" if serre else "fail",
    }
    lines = []
    for i, row in enumerate(diamond.grid):
        cells = " | ".join(f"{h}" for h in row)
        lines.append(f"cech degree {i}: {cells}")
    lines += [f"H^{k}: {h}" for k, h in enumerate(cohomology)]
    lines.append(f"serre duality: {'pass' if serre else 'fail'}")
    return Report(
        command="diamond",
        label=d.describe(),
        payload=payload,
        lines=lines,
        exit_code=EXIT_OK if serre else EXIT_INVALID,
    )


def cmd_form(d: TrisectionDiagram, args) -> Report:
    ensure_valid(d)
    form = intersection_form(d)
    basis = h2_basis_cocycles(d)
    payload = {
        "rank": form.rank,
        "gram": [list(row) for row in form.gram],
        "signature": list(form.signature),
        "parity": form.parity,
        "unimodular": form.unimodular,
        "basis": [
            {"b1": list(c.b1), "b2": list(c.b2), "b3": list(c.b3)} for c in basis
        ],
    }
    lines = [f"rank: {form.rank}"]
    for row in form.gram:
        lines.append(f"gram: {_fmt_vec(row)}")
    lines.append(f"signature: ({form.signature[0]}, {form.signature[1]})")
    lines.append(f"parity: {form.parity}")
    lines.append(f"unimodular: {'yes' if form.unimodular else 'no'}")
    for c in basis:
        lines.append(
            f"basis cocycle: b1={_fmt_vec(c.b1)} b2={_fmt_vec(c.b2)} b3={_fmt_vec(c.b3)}"
        )
    return Report(command="form", label=d.describe(), payload=payload, lines=lines)


def cmd_spin(d: TrisectionDiagram, args) -> Report:
    ensure_valid(d)
    structures = enumerate_spin(d)
    payload = {
        "count": len(structures),
        "structures": [list(q.basis_values) for q in structures],
    }
    lines = [f"spin structures: {len(structures)}"]
    lines += [f"q-values: {_fmt_vec(q.basis_values)}" for q in structures]
    return Report(command="spin", label=d.describe(), payload=payload, lines=lines)


def _rep_from_file(d: TrisectionDiagram, path: str) -> H2DualRep:
    data = _read_json_file(path)
    if not isinstance(data, dict):
        raise CliInputError(f"{path}: expected a JSON object")
    lifts = []
    for key in ("a1", "a2", "a3"):
        vec = data.get(key)
        if not isinstance(vec, list) or not all(isinstance(e, int) for e in vec):
            raise CliInputError(f"{path}: field {key!r} must be an integer vector")
        if len(vec) != 2 * d.genus:
            raise CliInputError(
                f"{path}: field {key!r} must have length {2 * d.genus} for this diagram"
            )
        lifts.append(tuple(vec))
    return H2DualRep.from_lifts(d, tuple(lifts))


def cmd_spinc(d: TrisectionDiagram, args) -> Report:
    ensure_valid(d)
    ledger = base_ledger(d)
    payload = {
        "base_euler": [list(e) for e in ledger.euler],
        "admissible": is_admissible(ledger),
        "action": None,
    }
    lines = ["base euler: " + " ".join(_fmt_vec(e) for e in ledger.euler)]
    if args.act is not None:
        rep = _rep_from_file(d, args.act)
        moved = act(ledger, rep)
        diff = c1_difference(moved, ledger)
        payload["action"] = {
            "rep_coords": [list(c) for c in rep.coords],
            "euler": [list(e) for e in moved.euler],
            "admissible": is_admissible(moved),
            "c1_difference": {"b1": list(diff.b1), "b2": list(diff.b2), "b3": list(diff.b3)},
        }
        lines.append("rep coords: " + " ".join(_fmt_vec(c) for c in rep.coords))
        lines.append("euler after action: " + " ".join(_fmt_vec(e) for e in moved.euler))
        lines.append(f"admissible after action: {'yes' if is_admissible(moved) else 'no'}")
        lines.append(
            "c1 difference: "
            f"b1={_fmt_vec(diff.b1)} b2={_fmt_vec(diff.b2)} b3={_fmt_vec(diff.b3)}"
        )
    else:
        lines.append(f"admissible: {'yes' if is_admissible(ledger) else 'no'}")
    return Report(command="spinc", label=d.describe(), payload=payload, lines=lines)


_HANDLERS = {
    "validate": cmd_validate,
    "homology": cmd_homology,
    "diamond": cmd_diamond,
    "form": cmd_form,
    "spin": cmd_spin,
    "spinc": cmd_spinc,
}

_DESCRIPTIONS = {
    "validate": "check the three cut systems and report k-values",
    "homology": "integral homology H_0..H_4 with the three-way H2 cross-check",
    "diamond": "3x3 cohomology diamond, assembled H^k and the Serre rank check",
    "form": "intersection form: Gram matrix, signature, parity, unimodularity",
    "spin": "enumerate spin structures as quadratic enhancements",
    "spinc": "Spin^C ledger: base Euler classes, optional homology action",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trihodge",
        description="Exact integer invariants of closed 4-manifolds from trisection diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, handler in _HANDLERS.items():
        p = sub.add_parser(name, help=_DESCRIPTIONS[name])
        p.add_argument("path", nargs="?", help="diagram JSON file")
        p.add_argument("--builtin", help="builtin diagram name, e.g. CP2 or CP2#CP2bar")
        p.add_argument("--genus", type=int, help="genus for a random diagram")
        p.add_argument("--seed", type=int, help="seed for a random diagram")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if name == "spinc":
            p.add_argument("--act", help="JSON file with ambient lifts a1, a2, a3")
        p.set_defaults(handler=handler)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        d = _load_diagram(args)
        report = args.handler(d, args)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidDiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CycleConditionError as exc:
        print(f"error: rep rejected: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(report.render_json() if args.json else report.render_text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
