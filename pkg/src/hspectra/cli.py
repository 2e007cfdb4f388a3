"""Command-line front end.

    hspectra spectrum <graph6>
    hspectra classify <graph6> [--scan-forbidden]
    hspectra family make <id> [params...]
    hspectra family list --n <k>
    hspectra cospectral <graph6>
    hspectra verify --max-n <k> [--input <file>] [--long]
    hspectra enumerate --n <k> [--in-h-only] [--long]

Any graph6 argument may be ``@path`` to read records from a file.  Add
``--json`` or ``--text`` to pick the output format (``verify`` defaults to
JSON, everything else to text).  Exit codes: 0 ok, 1 usage or input error,
2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .classifier import membership
from .cospectral import cospectral_mates, is_ds
from .exact import graph_char_poly, poly_str, real_roots, spectrum_shape
from .families import (FamilyError, FamilyInstance, catalog_instances, construct, from_shape,
                       symbolic_spectrum)
from .graph import Graph6Error, from_graph6, to_graph6
from .harness import IngestError, enumerate_nonisomorphic, ingest_graph6, verify_classification
from .classifier import in_h
from .numeric import graph_eigenvalues


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _num(x: float) -> str:
    return f"{x:.12g}"


def _graphs(arg: str):
    """Graphs named by a graph6 argument or an ``@path`` file reference."""
    if arg.startswith("@"):
        path = arg[1:]
        try:
            graphs = [g for _, g in ingest_graph6(path)]
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
        if not graphs:
            raise UsageError(f"{path} contains no graph6 records")
        return graphs
    return [from_graph6(arg)]


def _emit(items: list[dict], texts: list[str], as_json: bool, out):
    if as_json:
        payload = items[0] if len(items) == 1 else items
        print(json.dumps(payload, sort_keys=True, ensure_ascii=False), file=out)
    else:
        print("\n\n".join(texts), file=out)


def _spectrum_facts(g):
    p = graph_char_poly(g)
    shape = spectrum_shape(p)
    sym = from_shape(shape.mult_minus2, shape.mult_zero, shape.residual)
    eig = graph_eigenvalues(g)
    d = {
        "graph6": to_graph6(g),
        "n": g.n,
        "char_poly": list(p.coeffs),
        "char_poly_text": str(p),
        "mult_minus2": shape.mult_minus2,
        "mult_zero": shape.mult_zero,
        "residual": list(shape.residual),
        "residual_degree": shape.residual_degree,
        "symbolic": sym.text() if sym else None,
        "eigenvalues": [float(_num(x)) for x in eig],
        "exact_roots": [float(_num(x)) for x in real_roots(p)],
    }
    text = "\n".join([
        f"graph6: {d['graph6']}",
        f"char_poly: {p}",
        f"shape: (x+2)^{shape.mult_minus2} x^{shape.mult_zero} ({poly_str(shape.residual)})",
        f"residual_degree: {shape.residual_degree}",
        f"symbolic: {d['symbolic'] or '-'}",
        "eigenvalues: " + " ".join(_num(x) for x in eig),
    ])
    return d, text


def _cmd_spectrum(args, out):
    facts = [_spectrum_facts(g) for g in _graphs(args.graph6)]
    _emit([f[0] for f in facts], [f[1] for f in facts], args.json, out)
    return 0


def _cmd_classify(args, out):
    reports = [membership(g, scan_forbidden=args.scan_forbidden) for g in _graphs(args.graph6)]
    _emit([r.to_dict() for r in reports], [r.to_text() for r in reports], args.json, out)
    return 0


def _family_arg(fid: str, params: Sequence[str]) -> FamilyInstance:
    try:
        values = tuple(int(p) for p in params)
    except ValueError as exc:
        raise UsageError(f"family parameters must be integers: {' '.join(params)}") from exc
    if "(" in fid:
        return FamilyInstance.parse(fid)
    return FamilyInstance(fid.upper(), values)


def _cmd_family_make(args, out):
    f = _family_arg(args.id, args.params)
    g = construct(f)
    spec = symbolic_spectrum(f)
    d = {"family": f.id, "params": list(f.params), "name": str(f), "n": g.n,
         "graph6": to_graph6(g), "spectrum": spec.to_dict(),
         "numeric": [float(_num(x)) for x in spec.values()]}
    text = "\n".join([
        f"family: {f}",
        f"graph6: {d['graph6']}",
        f"spectrum: {spec.text()}",
        "numeric: " + " ".join(_num(x) for x in spec.values()),
    ])
    _emit([d], [text], args.json, out)
    return 0


def _cmd_family_list(args, out):
    if args.n < 0:
        raise UsageError(f"--n must be non-negative, got {args.n}")
    items = []
    for f in catalog_instances(args.n):
        items.append({"family": f.id, "params": list(f.params), "name": str(f),
                      "graph6": to_graph6(construct(f)), "spectrum": symbolic_spectrum(f).text()})
    if args.json:
        print(json.dumps(items, sort_keys=True, ensure_ascii=False), file=out)
    else:
        for d in items:
            print(f"{d['name']}\t{d['graph6']}\t{d['spectrum']}", file=out)
    return 0


def _cmd_cospectral(args, out):
    items, texts = [], []
    for g in _graphs(args.graph6):
        if not in_h(g):
            raise UsageError(f"{to_graph6(g)} is not in H (more than two eigenvalues outside {{-2, 0}})")
        mates = cospectral_mates(g)
        if g.isolated_vertices():
            # verdict for padded graphs follows from the mates of the core
            d = {"is_ds": not mates, "reason": "unique-in-class" if not mates else "theorem6-class"}
        else:
            d = is_ds(g).to_dict()
        d["graph6"] = to_graph6(g)
        d["mates"] = [{"family": m.family.id, "params": list(m.family.params), "padding": m.padding,
                       "description": m.description, "graph6": to_graph6(m.graph)} for m in mates]
        items.append(d)
        lines = [f"graph6: {d['graph6']}", f"ds: {str(d['is_ds']).lower()} ({d['reason']})"]
        lines += [f"mate: {m['description']}\t{m['graph6']}" for m in d["mates"]] or ["mates: none"]
        texts.append("\n".join(lines))
    _emit(items, texts, args.json, out)
    return 0


def _cmd_verify(args, out):
    if args.max_n < 1:
        raise UsageError(f"--max-n must be at least 1, got {args.max_n}")
    if args.input is None and args.max_n > (8 if args.long else 7):
        raise UsageError(f"--max-n {args.max_n} needs --input (built-in stops at 7, or 8 with --long)")
    summary = verify_classification(args.max_n, input_path=args.input, allow_long=args.long)
    if args.text:
        for lv in summary.levels:
            print(f"n={lv.n} scanned={lv.scanned} in_h={lv.in_h} in_h_prime={lv.in_h_prime} "
                  f"cospectral_pairs={lv.cospectral_pairs} failures={lv.failures}", file=out)
            for detail in lv.failure_details:
                print(f"  {detail}", file=out)
        print(f"failures: {summary.failures}", file=out)
    else:
        print(json.dumps(summary.to_dict(), sort_keys=True), file=out)
    return 2 if summary.failures else 0


def _cmd_enumerate(args, out):
    if not 0 <= args.n <= (8 if args.long else 7):
        raise UsageError(f"--n {args.n} out of range (0..7, or 8 with --long)")
    graphs = enumerate_nonisomorphic(args.n, allow_long=args.long)
    if args.in_h_only:
        graphs = (g for g in graphs if in_h(g))
    codes = [to_graph6(g) for g in graphs]
    if args.json:
        print(json.dumps(codes), file=out)
    else:
        for c in codes:
            print(c, file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    group = fmt.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="JSON output")
    group.add_argument("--text", action="store_true", help="plain text output")

    parser = _Parser(prog="hspectra", description="Graphs with at most two eigenvalues outside {-2, 0}.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", parents=[fmt], help="exact and numeric spectrum")
    p.add_argument("graph6")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("classify", parents=[fmt], help="membership report")
    p.add_argument("graph6")
    p.add_argument("--scan-forbidden", action="store_true", help="search forbidden induced subgraphs")
    p.set_defaults(func=_cmd_classify)

    fam = sub.add_parser("family", help="catalog graphs")
    fsub = fam.add_subparsers(dest="family_command", required=True, parser_class=_Parser)
    p = fsub.add_parser("make", parents=[fmt], help="build one catalog instance")
    p.add_argument("id")
    p.add_argument("params", nargs="*")
    p.set_defaults(func=_cmd_family_make)
    p = fsub.add_parser("list", parents=[fmt], help="catalog instances on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_family_list)

    p = sub.add_parser("cospectral", parents=[fmt], help="cospectral mates and DS verdict")
    p.add_argument("graph6")
    p.set_defaults(func=_cmd_cospectral)

    p = sub.add_parser("verify", parents=[fmt], help="exhaustive classification check")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--input", help="graph6 line file instead of built-in enumeration")
    p.add_argument("--long", action="store_true", help="allow n = 8 built-in enumeration")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", parents=[fmt], help="non-isomorphic graphs as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--in-h-only", action="store_true")
    p.add_argument("--long", action="store_true", help="allow n = 8")
    p.set_defaults(func=_cmd_enumerate)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"hspectra: usage error: {exc}", file=err)
        return 1
    except Graph6Error as exc:
        print(f"hspectra: graph6 parse error: {exc}", file=err)
        return 1
    except IngestError as exc:
        print(f"hspectra: input error: {exc}", file=err)
        return 1
    except FamilyError as exc:
        print(f"hspectra: {exc}", file=err)
        return 1
    except ValueError as exc:
        print(f"hspectra: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
