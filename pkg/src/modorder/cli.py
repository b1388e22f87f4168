"""Command-line front end.

Subcommands: ring, module, order, verify, hasse.  Exit codes follow a stable
contract: 0 = success / relation holds, 1 = relation does not hold (or a law
failed), 2 = usage, parse or not-applicable.  Identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import hasse as hasse_mod
from . import laws, orders
from .homs import ModuleContext
from .modules import FiniteModule, build_ring_as_module, build_zm_over_zn, module_from_spec
from .rings import (FiniteRing, AxiomError, SpecError, build_matrix_ring, build_product,
                    build_zn, hartwig_minus_le, is_proper_star, is_rickart,
                    is_rickart_star, ring_from_spec, ring_minus_le_annih)
from .verdicts import witness_to_json

RING_RELATIONS = ("hartwig", "ring-annih")


class Workspace:
    """Named rings/modules with per-module caches of the derived structures."""

    def __init__(self):
        self.rings: dict[str, FiniteRing] = {}
        self.modules: dict[str, FiniteModule] = {}
        self._contexts: dict[int, ModuleContext] = {}

    def context(self, module: FiniteModule) -> ModuleContext:
        key = id(module)
        if key not in self._contexts:
            self._contexts[key] = ModuleContext(module)
        return self._contexts[key]


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: "
                        f"{exc.msg}") from None


def parse_ring_arg(token: str) -> FiniteRing:
    """A builtin token (Z10, Z2xZ3, M2(3)) or a path to a ring definition file."""
    if os.path.exists(token) or token.endswith(".json"):
        return ring_from_spec(_load_json(token))
    if token.startswith("M2(") and token.endswith(")"):
        return build_matrix_ring(int(token[3:-1]))
    if "x" in token:
        parts = token.split("x")
        ring = parse_ring_arg(parts[0])
        for part in parts[1:]:
            ring = build_product(ring, parse_ring_arg(part))
        return ring
    if token.startswith("Z") and token[1:].isdigit():
        return build_zn(int(token[1:]))
    raise SpecError(f"cannot interpret ring {token!r} (no such file, not a builtin)")


def parse_module_arg(token: str) -> FiniteModule:
    """A builtin token (Z6/Z30, RR:Z10, RR:M2(2)) or a module definition file."""
    if os.path.exists(token) or token.endswith(".json"):
        return module_from_spec(_load_json(token))
    if token.startswith("RR:"):
        return build_ring_as_module(parse_ring_arg(token[3:]))
    if "/" in token:
        m_part, n_part = token.split("/", 1)
        if m_part.startswith("Z") and n_part.startswith("Z"):
            return build_zm_over_zn(int(m_part[1:]), int(n_part[1:]))
    raise SpecError(f"cannot interpret module {token!r} (no such file, not a builtin)")


def _fmt_set(values) -> str:
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}"


def _emit(payload, out):
    print(json.dumps(payload, separators=(", ", ": ")), file=out)


# -- subcommands ---------------------------------------------------------------


def cmd_ring(args, out=None) -> int:
    out = out or sys.stdout
    ring = parse_ring_arg(args.ring)
    rick = is_rickart(ring)
    info = {
        "name": ring.name,
        "size": ring.size,
        "commutative": ring.is_commutative(),
        "idempotents": sorted(ring.idempotents()),
        "units": sorted(ring.units()),
        "involution": ring.involution is not None,
        "rickart": rick.holds,
    }
    if ring.involution is not None:
        info["projections"] = sorted(ring.projections())
        info["proper_star"] = is_proper_star(ring)
        info["rickart_star"] = is_rickart_star(ring).holds
    if args.json:
        _emit(info, out)
        return 0
    print(f"ring {info['name']}: size {info['size']}", file=out)
    print(f"commutative: {str(info['commutative']).lower()}", file=out)
    print(f"idempotents: {_fmt_set(info['idempotents'])}", file=out)
    print(f"units: {_fmt_set(info['units'])}", file=out)
    if ring.involution is not None:
        print(f"projections: {_fmt_set(info['projections'])}", file=out)
        print(f"proper-star: {str(info['proper_star']).lower()}", file=out)
    else:
        print("involution: absent", file=out)
    print(f"rickart: {str(info['rickart']).lower()}", file=out)
    if ring.involution is not None:
        print(f"rickart-star: {str(info['rickart_star']).lower()}", file=out)
    return 0


def cmd_module(args, ws: Workspace, out=None) -> int:
    out = out or sys.stdout
    module = parse_module_arg(args.module)
    ctx = ws.context(module)
    regular, first_bad = orders.is_regular_module(ctx)
    info = {
        "name": module.name,
        "size": module.size,
        "ring": module.ring.name,
        "dual_size": len(ctx.dual),
        "endo_size": ctx.endos.size,
        "regular": regular,
    }
    if not regular:
        info["first_non_regular"] = first_bad
    if args.json:
        _emit(info, out)
        return 0
    print(f"module {info['name']} over {info['ring']}: size {info['size']}", file=out)
    print(f"|M*| = {info['dual_size']}, |S| = {info['endo_size']}", file=out)
    if regular:
        print("regular: true", file=out)
    else:
        print(f"regular: false at {first_bad}", file=out)
    return 0


def cmd_order(args, ws: Workspace, out=None) -> int:
    out = out or sys.stdout
    if args.rel in RING_RELATIONS:
        if not args.ring:
            raise SpecError(f"relation {args.rel} needs --ring")
        ring = parse_ring_arg(args.ring)
        for m in (args.m1, args.m2):
            if not (0 <= m < ring.size):
                raise SpecError(f"element {m} out of range for {ring.name}")
        fn = hartwig_minus_le if args.rel == "hartwig" else ring_minus_le_annih
        verdict = fn(ring, args.m1, args.m2)
    else:
        if not args.module:
            raise SpecError(f"relation {args.rel} needs --module")
        ctx = ws.context(parse_module_arg(args.module))
        verdict = orders.evaluate(ctx, args.rel, args.m1, args.m2)

    if args.json:
        _emit(verdict.to_json(), out)
    else:
        if not verdict.applicable:
            print(f"{verdict.relation}({args.m1}, {args.m2}): not applicable "
                  "(required involution is absent)", file=out)
        else:
            word = "holds" if verdict.holds else "does not hold"
            print(f"{verdict.relation}({args.m1}, {args.m2}): {word}", file=out)
            if verdict.witness is not None:
                print(f"witness: {json.dumps(witness_to_json(verdict.witness))}", file=out)
            if not verdict.hypothesis_ok:
                print("note: hypothesis violated (operand outside the regular domain)",
                      file=out)
    if not verdict.applicable:
        return 2
    return 0 if verdict.holds else 1


def _load_corpus(token: str):
    if token in laws.CORPORA:
        return laws.CORPORA[token]()
    spec = _load_json(token)
    if not isinstance(spec, list):
        raise SpecError("corpus file must be a JSON list of {id, module} entries")
    corpus = []
    for entry in spec:
        module = module_from_spec(entry["module"])
        corpus.append(ModuleContext(module, entry.get("id", module.name)))
    return corpus


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    corpus = _load_corpus(args.corpus)
    reports = laws.run_suite(corpus, args.laws)
    failed = 0
    if args.json:
        for r in reports:
            _emit(r.to_json(), out)
            failed += r.outcome == "fail"
    else:
        width = max((len(r.law) for r in reports), default=10) + 2
        for r in reports:
            line = f"{r.member:<10} {r.law:<{width}} {r.outcome}"
            if r.outcome == "fail":
                line += f"  {json.dumps(r.counterexample)}"
            print(line, file=out)
            failed += r.outcome == "fail"
        total = len(reports)
        passed = sum(r.outcome == "pass" for r in reports)
        na = sum(r.outcome == "not-applicable" for r in reports)
        print(f"summary: {passed}/{total} passed, {na} not-applicable, {failed} failed",
              file=out)
    return 1 if failed else 0


def cmd_hasse(args, ws: Workspace, out=None) -> int:
    out = out or sys.stdout
    ctx = ws.context(parse_module_arg(args.module))
    try:
        poset = hasse_mod.build_poset(ctx, args.rel)
    except hasse_mod.NotAPartialOrder as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        _emit(hasse_mod.to_json_dict(poset), out)
        return 0
    dot = hasse_mod.to_dot(poset)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dot)
        print(f"wrote {args.out}: {len(poset.elements)} nodes, "
              f"{len(poset.covers)} edges", file=out)
    else:
        out.write(dot)
        print(f"{len(poset.elements)} nodes, {len(poset.covers)} edges", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modorder",
        description="Minus-type partial orders on finite modules, with witnesses")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ring", help="inspect a ring")
    p.add_argument("--ring", required=True, help="builtin token (Z10, Z2xZ3, M2(2)) or file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("module", help="inspect a module")
    p.add_argument("--module", required=True, help="builtin token (Z6/Z30, RR:Z10) or file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("order", help="decide one relation on a pair")
    p.add_argument("--module", help="module for module-level relations")
    p.add_argument("--ring", help="ring for hartwig / ring-annih")
    p.add_argument("--rel", required=True,
                   choices=sorted(orders.RELATIONS) + list(RING_RELATIONS))
    p.add_argument("m1", type=int)
    p.add_argument("m2", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run the law suite over a corpus")
    p.add_argument("--corpus", default="default", help="corpus name (paper, default) or file")
    p.add_argument("--laws", help="only run laws whose id contains this substring")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("hasse", help="emit the Hasse diagram of a verified order")
    p.add_argument("--module", required=True)
    p.add_argument("--rel", required=True, choices=sorted(orders.RELATIONS))
    p.add_argument("--out", help="write DOT here instead of stdout")
    p.add_argument("--json", action="store_true")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    ws = Workspace()
    try:
        if args.command == "ring":
            return cmd_ring(args)
        if args.command == "module":
            return cmd_module(args, ws)
        if args.command == "order":
            return cmd_order(args, ws)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "hasse":
            return cmd_hasse(args, ws)
    except (SpecError, AxiomError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
