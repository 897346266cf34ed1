"""Command-line interface.

Subcommands: decompose, complete, verify, catalog, unit-order. Every command
prints a human-readable report; --json PATH additionally writes the machine
report to a file, and --json - emits only the JSON document on stdout. All
randomness is behind --seed (default 0) and reports are byte-identical across
reruns with the same inputs and seed.

Exit codes: 0 success (a not_found search result is a success), 1 internal
invariant or verification mismatch, 2 not semisimple, 3 parse or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import algebra, cyclo, inverse
from .catalog import load_catalog, resolve_group
from .errors import (
    InternalInvariant,
    NotAPrimePower,
    NotSemisimple,
    WedderburnError,
)
from .gf import factor_prime_power, is_prime
from .group import Group, commutator_subgroup, conjugacy_classes, quotient


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); route to exit code 3
        raise _CliError(message)


def _parse_q(text: str) -> tuple[int, int]:
    text = text.strip()
    try:
        if "^" in text:
            base, _, exp = text.partition("^")
            p, k = int(base), int(exp)
            if k < 1 or not is_prime(p):
                raise NotAPrimePower(f"{text} is not a prime power")
            return p, k
        return factor_prime_power(int(text))
    except ValueError:
        raise NotAPrimePower(f"cannot read q from {text!r}") from None


def _emit(args, human: str, payload: dict) -> None:
    doc = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.json == "-":
        sys.stdout.write(doc)
        return
    sys.stdout.write(human)
    if args.json:
        with open(args.json, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(doc)


def _components_text(q: int, components) -> str:
    if not components:
        return "(none)"
    dec = algebra.Decomposition(0, 0, "", tuple(sorted(components)))
    parts = []
    for comp, mult in dec.grouped():
        label = algebra.field_label(q, comp.d)
        term = label if comp.n == 1 else f"M{comp.n}({label})"
        if mult > 1:
            term += f"^{mult}"
        parts.append(term)
    return " + ".join(parts)


def _resolve(args) -> Group:
    return resolve_group(args.group, trusted=getattr(args, "trusted", False))


def _cmd_decompose(args) -> int:
    p, k = _parse_q(args.q)
    group = _resolve(args)
    dec = algebra.wedderburn(group, p, k, seed=args.seed)
    unit = algebra.unit_group_order(dec)
    lines = [
        f"group: {dec.group}  (order {group.order})",
        f"field: {algebra.field_label(dec.q, 1)}  (q = {p}^{k})",
        dec.text(),
        "components (n, d, mult, dim):",
    ]
    for comp, mult in dec.grouped():
        lines.append(f"  {comp.n:>2}  {comp.d:>2}  {mult:>3}  {comp.dim * mult:>5}")
    lines.append(f"total dimension {dec.total_dimension()}")
    lines.append(f"unit group order {unit}")
    _emit(args, "\n".join(lines) + "\n", dec.json_dict())
    return 0


def _cmd_complete(args) -> int:
    spec = inverse.parse_ring_spec(args.spec)
    common = dict(
        max_order=args.max_order,
        max_k=args.max_k,
        seed=args.seed,
        prefilter_degree_divides=args.prefilter_degree_divides,
    )
    lines = [
        f"target: {spec.render()}  (characteristic {spec.p})",
        f"bounds: max_order={args.max_order}, max_k={args.max_k}"
        "  (candidates by |G| ascending, then catalog index, then k)",
    ]
    if args.prefilter_degree_divides:
        lines.append("prefilter: skipping groups whose order some matrix degree does not divide")
    if args.all:
        results = inverse.find_all_completions(spec, **common)
        if not results:
            lines.append("status: not_found")
            lines.append(
                f"no witness within bounds (max_order={args.max_order}, "
                f"max_k={args.max_k}); absence here refutes nothing"
            )
            payload = {
                "status": "not_found",
                "p": spec.p,
                "bounds": {"max_order": args.max_order, "max_k": args.max_k},
                "witnesses": [],
            }
        else:
            lines.append(f"witnesses within bounds: {len(results)}")
            for res in results:
                lines.append(
                    f"  {res.status}: {res.group} over "
                    f"{algebra.field_label(res.decomposition.q, 1)} (k = {res.k}), "
                    f"added {_components_text(res.decomposition.q, res.added)}"
                )
            payload = {
                "status": results[0].status,
                "p": spec.p,
                "bounds": {"max_order": args.max_order, "max_k": args.max_k},
                "witnesses": [r.json_dict() for r in results],
            }
        _emit(args, "\n".join(lines) + "\n", payload)
        return 0

    res = inverse.find_completion(spec, **common)
    lines.append(f"status: {res.status}")
    if res.status == "not_found":
        lines.append(
            f"no witness within bounds (max_order={args.max_order}, "
            f"max_k={args.max_k}); absence here refutes nothing"
        )
    else:
        q = res.decomposition.q
        lines.append(f"witness: {res.group} over {algebra.field_label(q, 1)} (k = {res.k})")
        lines.append(f"decomposition: {res.decomposition.text()}")
        lines.append(f"added: {_components_text(q, res.added)}")
    _emit(args, "\n".join(lines) + "\n", res.json_dict())
    return 0


def _cmd_verify(args) -> int:
    p, k = _parse_q(args.q)
    group = _resolve(args)
    dec = algebra.wedderburn(group, p, k, seed=args.seed)
    q = dec.q
    cyc = cyclo.cyclotomic_classes(group, q, p)
    predicted_j = len(cyc)
    predicted_degrees = list(cyclo.predicted_degree_multiset(cyc))
    engine_degrees = sorted(c.d for c in dec.components)
    ab = cyclo.abelian_decomposition(
        quotient(group, commutator_subgroup(group)), q, p
    )
    predicted_comm = ab.degree_counter()
    engine_comm: dict[int, int] = {}
    for c in dec.components:
        if c.n == 1:
            engine_comm[c.d] = engine_comm.get(c.d, 0) + 1

    rows = [
        ("component count", str(dec.j), str(predicted_j), dec.j == predicted_j),
        (
            "field degree multiset",
            str(engine_degrees),
            str(predicted_degrees),
            engine_degrees == predicted_degrees,
        ),
        (
            "commutative part {degree: count}",
            str(dict(sorted(engine_comm.items()))),
            str(dict(sorted(predicted_comm.items()))),
            engine_comm == predicted_comm,
        ),
        ("component fields extend F_q", "yes", "yes (by representation)", True),
    ]
    lines = [
        f"group: {dec.group}  (order {group.order}), field F_{q} (q = {p}^{k})",
        f"decomposition: {dec.text()}",
        f"{'check':<34}{'engine':<22}{'predicted':<24}status",
    ]
    ok = True
    for name, engine, predicted, passed in rows:
        ok = ok and passed
        lines.append(
            f"{name:<34}{engine:<22}{predicted:<24}{'ok' if passed else 'MISMATCH'}"
        )
    lines.append(f"all checks passed (j = {dec.j})" if ok else "checks FAILED")
    payload = {
        "group": dec.group,
        "p": p,
        "k": k,
        "checks": [
            {"name": name, "engine": engine, "predicted": predicted, "ok": passed}
            for name, engine, predicted, passed in rows
        ],
        "ok": ok,
    }
    _emit(args, "\n".join(lines) + "\n", payload)
    return 0 if ok else 1


def _cmd_catalog(args) -> int:
    entries = load_catalog()
    lines = [f"{'name':<14}{'order':>6}  {'abelian':<8}{'exponent':>8}"]
    rows = []
    for entry in entries:
        if args.max_order is not None and entry.order > args.max_order:
            continue
        lines.append(
            f"{entry.name:<14}{entry.order:>6}  "
            f"{'yes' if entry.is_abelian() else 'no':<8}{entry.exponent():>8}"
        )
        rows.append(
            {
                "name": entry.name,
                "order": entry.order,
                "abelian": entry.is_abelian(),
                "exponent": entry.exponent(),
            }
        )
    _emit(args, "\n".join(lines) + "\n", {"groups": rows})
    return 0


def _cmd_unit_order(args) -> int:
    if args.spec and args.group:
        raise _CliError("give either --spec or --group, not both")
    if args.spec:
        spec = inverse.parse_ring_spec(args.spec)
        ks = inverse.admissible_base_degrees(spec, 10**6)
        k = ks[-1] if ks else 1
        total = inverse.unit_order_of_spec(spec, 1)
        lines = [f"ring: {spec.render()}  (characteristic {spec.p})"]
        factors = []
        for n, m in spec.targets:
            term = f"F{spec.p ** m}" if n == 1 else f"M{n}(F{spec.p ** m})"
            order = algebra.gl_order(n, spec.p**m)
            lines.append(f"  {term:<16} {order}")
            factors.append({"n": n, "m": m, "order": order})
        lines.append(f"unit group order {total}")
        payload = {"spec": spec.render(), "p": spec.p, "factors": factors, "order": total}
        _emit(args, "\n".join(lines) + "\n", payload)
        return 0
    if not args.group or not args.q:
        raise _CliError("unit-order needs --spec, or --group with --q")
    p, k = _parse_q(args.q)
    group = _resolve(args)
    dec = algebra.wedderburn(group, p, k, seed=args.seed)
    total = algebra.unit_group_order(dec)
    lines = [
        f"group: {dec.group}  (order {group.order}), field F_{dec.q}",
        f"decomposition: {dec.text()}",
    ]
    factors = []
    for comp, mult in dec.grouped():
        label = algebra.field_label(dec.q, comp.d)
        term = label if comp.n == 1 else f"M{comp.n}({label})"
        order = algebra.gl_order(comp.n, dec.q**comp.d)
        lines.append(f"  {term:<16} {order}" + (f"  (x{mult})" if mult > 1 else ""))
        factors.append({"n": comp.n, "d": comp.d, "mult": mult, "order": order})
    lines.append(f"unit group order {total}")
    payload = dec.json_dict() | {"factors": factors, "order": total}
    _emit(args, "\n".join(lines) + "\n", payload)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="wedderburn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group=True, q=True):
        p.add_argument("--seed", type=int, default=0, help="randomness seed (default 0)")
        p.add_argument("--json", metavar="PATH", help="write the JSON report to PATH ('-' for stdout only)")
        if group:
            p.add_argument("--group", required=q, help="catalog name or @file.json")
            p.add_argument("--trusted", action="store_true",
                           help="skip full associativity validation for large ingested tables")
        if q:
            p.add_argument("--q", required=True, help="field size, as p^k or a prime power integer")

    p_dec = sub.add_parser("decompose", help="decompose a group algebra")
    common(p_dec)
    p_dec.set_defaults(func=_cmd_decompose)

    p_comp = sub.add_parser("complete", help="search for a group algebra containing a target ring")
    p_comp.add_argument("--spec", required=True, help='target ring, e.g. "M2(F7)^3 + M3(F7)"')
    p_comp.add_argument("--max-order", type=int, default=31, help="largest group order to try (default 31)")
    p_comp.add_argument("--max-k", type=int, default=1, help="largest base-field degree to try (default 1)")
    p_comp.add_argument("--all", action="store_true", help="list every witness within bounds")
    p_comp.add_argument("--prefilter-degree-divides", action="store_true",
                        help="skip groups whose order some target matrix degree does not divide")
    p_comp.add_argument("--seed", type=int, default=0, help="randomness seed (default 0)")
    p_comp.add_argument("--json", metavar="PATH", help="write the JSON report to PATH ('-' for stdout only)")
    p_comp.set_defaults(func=_cmd_complete)

    p_ver = sub.add_parser("verify", help="run the dual-path structural checks")
    common(p_ver)
    p_ver.set_defaults(func=_cmd_verify)

    p_cat = sub.add_parser("catalog", help="list the built-in groups")
    p_cat.add_argument("--max-order", type=int, default=None)
    p_cat.add_argument("--json", metavar="PATH", help="write the JSON report to PATH ('-' for stdout only)")
    p_cat.set_defaults(func=_cmd_catalog)

    p_unit = sub.add_parser("unit-order", help="order of the unit group")
    p_unit.add_argument("--spec", help="target ring spec")
    p_unit.add_argument("--group", help="catalog name or @file.json")
    p_unit.add_argument("--q", help="field size for --group mode")
    p_unit.add_argument("--trusted", action="store_true")
    p_unit.add_argument("--seed", type=int, default=0)
    p_unit.add_argument("--json", metavar="PATH", help="write the JSON report to PATH ('-' for stdout only)")
    p_unit.set_defaults(func=_cmd_unit_order)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotSemisimple as exc:
        print(f"error: not semisimple: {exc}", file=sys.stderr)
        return 2
    except InternalInvariant as exc:
        print(f"error: internal invariant violated: {exc}", file=sys.stderr)
        return 1
    except (WedderburnError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
