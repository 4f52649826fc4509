"""Command line front end: dimensions, bases, mesh decompositions, verification.

Exit codes: 0 on success, 1 when a verification fails, 2 for usage or
input errors.  All output is deterministic for fixed arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from .assemble import assemble_basis, assembled_dimension, verify_direct_sum, verify_single_valued
from .extension import extend_full_generator, extend_minus_generator
from .forms import FaceRef
from .mesh import MeshFormatError, load
from .render import format_form, format_generator
from .spaces import Family, SpaceKind, dim_space, enumerate_basis
from .verify import SUITES, run_suites

FORMATS = ("plain", "json", "latex")


def _family(value: str) -> Family:
    try:
        return Family(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown family {value!r} (use full or minus)")


def _formula(kind: SpaceKind, n: int, r: int, k: int) -> str:
    if kind.family is Family.FULL and not kind.zero_trace:
        return f"C({r + n},{n})*C({n},{k})"
    if kind.family is Family.MINUS and not kind.zero_trace:
        return f"C({r + k - 1},{k})*C({n + r},{n - k})"
    if kind.family is Family.FULL:
        return f"C({r - 1},{n - k})*C({r + k},{r})"
    return f"C({n},{k})*C({r + k - 1},{n})"


def dim_payload(family: Family, n: int, r: int, k: int, zero_trace: bool) -> dict:
    kind = SpaceKind(family, zero_trace)
    return {
        "command": "dim",
        "family": family.value,
        "n": n,
        "r": r,
        "k": k,
        "zero_trace": zero_trace,
        "dim": dim_space(kind, n, r, k),
        "formula": _formula(kind, n, r, k),
    }


def basis_payload(family: Family, n: int, r: int, k: int) -> dict:
    zero_kind = SpaceKind(family, zero_trace=True)
    T = FaceRef.full(n)
    groups = []
    for face in T.all_subfaces():
        if face.dim < k:
            continue
        gens = []
        for desc in enumerate_basis(zero_kind, face, r, k):
            alpha = list(desc.alpha.entries)
            sigma = list(desc.sigma.values)
            if family is Family.MINUS:
                w = extend_minus_generator(desc.alpha.entries, desc.sigma.values, T)
            else:
                w = extend_full_generator(desc.alpha.entries, desc.sigma.values, face, T)
            gens.append(
                {
                    "alpha": alpha,
                    "sigma": sigma,
                    "generator": format_generator(desc.alpha.entries, desc.sigma.values, family.value),
                    "expression": format_form(w),
                    "latex": format_form(w, "latex"),
                }
            )
        if gens:
            groups.append({"face": list(face.indices), "dim": face.dim, "generators": gens})
    return {
        "command": "basis",
        "family": family.value,
        "n": n,
        "r": r,
        "k": k,
        "total": sum(len(g["generators"]) for g in groups),
        "groups": groups,
    }


def decompose_payload(mesh_path: str, family: Family, r: int, k: int) -> tuple[dict, bool, str]:
    t = load(mesh_path)
    elements = assemble_basis(t, family, r, k)
    witness = verify_single_valued(t, elements, k)
    report = verify_direct_sum(t, family, r, k)
    counts_by_dim: dict[int, int] = {}
    groups = []
    current = None
    for el in elements:
        counts_by_dim[el.face.dim] = counts_by_dim.get(el.face.dim, 0) + 1
        if current is None or current["face"] != list(el.face.vertices):
            current = {"face": list(el.face.vertices), "dim": el.face.dim, "generators": []}
            groups.append(current)
        # descriptor indices are positions within the face; label with the
        # global vertex ids instead
        verts = el.face.vertices
        alpha_global = [0] * (max(verts) + 1)
        for p, e in enumerate(el.descriptor.alpha.entries):
            alpha_global[verts[p]] = e
        sigma_global = tuple(verts[s] for s in el.descriptor.sigma.values)
        current["generators"].append(
            {
                "alpha": list(el.descriptor.alpha.entries),
                "sigma": list(el.descriptor.sigma.values),
                "generator": format_generator(tuple(alpha_global), sigma_global, family.value),
            }
        )
    ok = witness is None and report.ok
    detail = ""
    if witness is not None:
        detail = f"multivalued trace on face {witness.face.vertices}"
    elif not report.ok:
        detail = (
            f"direct sum failed: {report.count} elements, expected {report.expected}, "
            f"constrained dimension {report.constrained_dimension}"
        )
    payload = {
        "command": "decompose",
        "family": family.value,
        "r": r,
        "k": k,
        "mesh": {"dim": t.n, "vertices": t.num_vertices, "cells": len(t.cells)},
        "total": len(elements),
        "expected": assembled_dimension(t, family, r, k),
        "counts_by_dim": {str(d): c for d, c in sorted(counts_by_dim.items())},
        "groups": groups,
        "verified": {"single_valued": witness is None, "direct_sum": report.ok},
    }
    return payload, ok, detail


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def render_dim(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return render_json(payload)
    name = ("P{r}-Lambda{k}" if payload["family"] == "minus" else "P{r} Lambda{k}").format(
        r=payload["r"], k=payload["k"]
    )
    ring = "zero-trace " if payload["zero_trace"] else ""
    if fmt == "latex":
        zero = "\\mathaccent23 " if payload["zero_trace"] else ""
        minus = "^-" if payload["family"] == "minus" else ""
        return (
            f"\\dim {zero}\\mathcal P{minus}_{{{payload['r']}}}"
            f"\\Lambda^{{{payload['k']}}} = {payload['dim']}"
        )
    return f"dim {ring}{name} on a {payload['n']}-simplex = {payload['dim']}  [{payload['formula']}]"


def render_basis(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return render_json(payload)
    lines = [
        f"basis of {'P-' if payload['family'] == 'minus' else 'P'}_{payload['r']} "
        f"Lambda^{payload['k']} on the {payload['n']}-simplex "
        f"({payload['total']} elements)"
    ]
    for group in payload["groups"]:
        verts = ",".join(f"x{i}" for i in group["face"])
        lines.append(f"face [{verts}]:")
        for gen in group["generators"]:
            body = gen["latex"] if fmt == "latex" else gen["expression"]
            lines.append(f"  {gen['generator']}  ->  {body}" if fmt == "plain" else f"  {body}")
    return "\n".join(lines)


def render_decompose(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return render_json(payload)
    lines = [
        f"{payload['total']} basis elements on {payload['mesh']['cells']} cells "
        f"(expected {payload['expected']})"
    ]
    for d, c in payload["counts_by_dim"].items():
        lines.append(f"  dimension {d}: {c}")
    for group in payload["groups"]:
        gens = ", ".join(g["generator"] for g in group["generators"])
        lines.append(f"face {tuple(group['face'])}: {gens}")
    v = payload["verified"]
    lines.append(
        f"single-valued: {'yes' if v['single_valued'] else 'NO'}; "
        f"direct sum: {'yes' if v['direct_sum'] else 'NO'}"
    )
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="feec",
        description="Exact bases and geometric decompositions of simplicial form spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dim = sub.add_parser("dim", help="dimension of a form space")
    p_dim.add_argument("--family", type=_family, required=True)
    p_dim.add_argument("-n", type=int, required=True, help="simplex dimension")
    p_dim.add_argument("-r", type=int, required=True, help="polynomial degree")
    p_dim.add_argument("-k", type=int, required=True, help="form order")
    p_dim.add_argument("--zero-trace", action="store_true")
    p_dim.add_argument("--format", choices=FORMATS, default="plain")

    p_basis = sub.add_parser("basis", help="face-grouped basis of a form space")
    p_basis.add_argument("--family", type=_family, required=True)
    p_basis.add_argument("-n", type=int, required=True)
    p_basis.add_argument("-r", type=int, required=True)
    p_basis.add_argument("-k", type=int, required=True)
    p_basis.add_argument("--format", choices=FORMATS, default="plain")

    p_dec = sub.add_parser("decompose", help="assembled basis over a mesh file")
    p_dec.add_argument("--mesh", required=True, help="mesh file path")
    p_dec.add_argument("--family", type=_family, required=True)
    p_dec.add_argument("-r", type=int, required=True)
    p_dec.add_argument("-k", type=int, required=True)
    p_dec.add_argument("--format", choices=FORMATS, default="plain")

    p_ver = sub.add_parser("verify", help="run the property suites")
    p_ver.add_argument("-n", type=int, default=3, help="largest simplex dimension")
    p_ver.add_argument("-r", type=int, default=3, help="largest polynomial degree")
    p_ver.add_argument(
        "--suite",
        action="append",
        choices=sorted(SUITES),
        help="run only this suite (repeatable)",
    )
    p_ver.add_argument("--format", choices=("plain", "json"), default="plain")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "dim":
        if not (0 <= args.k <= args.n):
            parser.error(f"need 0 <= k <= n, got k={args.k} n={args.n}")
        payload = dim_payload(args.family, args.n, args.r, args.k, args.zero_trace)
        print(render_dim(payload, args.format))
        return 0

    if args.command == "basis":
        if args.n < 1 or args.n > 4:
            parser.error("basis listing supports 1 <= n <= 4")
        if args.r < 1:
            parser.error("basis listing needs r >= 1")
        if not (0 <= args.k <= args.n):
            parser.error(f"need 0 <= k <= n, got k={args.k} n={args.n}")
        payload = basis_payload(args.family, args.n, args.r, args.k)
        print(render_basis(payload, args.format))
        return 0

    if args.command == "decompose":
        try:
            payload, ok, detail = decompose_payload(args.mesh, args.family, args.r, args.k)
        except MeshFormatError as err:
            print(f"mesh error: {err}", file=sys.stderr)
            return 2
        except OSError as err:
            print(f"cannot read mesh: {err}", file=sys.stderr)
            return 2
        except ValueError as err:
            print(f"invalid request: {err}", file=sys.stderr)
            return 2
        print(render_decompose(payload, args.format))
        if not ok:
            print(detail, file=sys.stderr)
            return 1
        return 0

    if args.command == "verify":
        if args.n < 1 or args.n > 4 or args.r < 1:
            parser.error("verification sweeps support 1 <= n <= 4 and r >= 1")
        results = run_suites(args.suite, max_n=args.n, max_r=args.r)
        failed = [res for res in results if not res.passed]
        if args.format == "json":
            print(
                render_json(
                    {
                        "command": "verify",
                        "results": [
                            {
                                "suite": res.suite,
                                "case": res.label,
                                "passed": res.passed,
                                "detail": res.detail,
                            }
                            for res in results
                        ],
                        "failed": len(failed),
                    }
                )
            )
        else:
            for res in results:
                mark = "PASS" if res.passed else "FAIL"
                tail = f"  ({res.detail})" if res.detail and not res.passed else ""
                print(f"{mark} {res.suite:16s} {res.label}{tail}")
            print(f"{len(results) - len(failed)}/{len(results)} checks passed")
        if failed:
            first = failed[0]
            print(
                f"first failure: {first.suite} {first.label}: {first.detail}",
                file=sys.stderr,
            )
            return 1
        return 0

    parser.error("unknown command")
    return 2


if __name__ == "__main__":
    sys.exit(main())
