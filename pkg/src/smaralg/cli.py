"""Batch command-line front door.

Every subcommand emits one CommandReport as JSON on stdout:
{"status": "ok"|"error", "payload": ..., "citations": [...]}, with stable
key order so output is byte-deterministic.  Exit codes: 0 ok, 1 domain
error, 2 usage error.  --pretty adds a human-readable rendering instead
of the compact JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import econ, golden, linalg, polylab, ratmat, ringcore, semigroup, semivector
from .ringcore import SubfieldRejection
from .semigroup import Side, TableError

CITATIONS = {
    "subfields": ["Def 2.4.1", "Thm 2.9.9"],
    "certify": ["Def 2.4.1"],
    "poly": ["Results 1.6.1", "Thm 1.6.1", "Thm 1.6.3", "Thm 1.6.4"],
    "spectral": ["Def 2.4.4", "Thm 1.6.6", "S-Spectral Theorem (2.4)"],
    "classify-roots": ["3.1 (three-valued root classification)"],
    "semigroup": ["2.6 (S-semigroup subgroups)"],
    "rep": ["1.8 (regular representations)", "2.6 (S-representations)", "Thm 2.6.1"],
    "semivec": ["Def 1.9.5-1.9.9", "Thm 1.9.10", "Thm 1.9.13", "Thm 1.9.15"],
    "markov": ["1.10 (transition matrices)", "3.2 (S-transition matrices)"],
    "leontief": ["3.3 (Leontief closed/open models)"],
    "golden": [],
}


class DomainError(Exception):
    def __init__(self, reason: str, message: str):
        self.reason = reason
        super().__init__(message)


def _print_report(args, payload, citations, pretty_text=None) -> None:
    report = {"status": "ok", "payload": payload, "citations": citations}
    if getattr(args, "pretty", False) and pretty_text is not None:
        print(pretty_text)
    else:
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))


def _parse_int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]


def _parse_rat_matrix(text: str) -> ratmat.Matrix:
    rows = [row for row in text.strip().split(";") if row.strip()]
    return ratmat.mat(
        [[ratmat.frac_from_json(tok.strip()) for tok in row.split(",")] for row in rows]
    )


def _parse_rat_vector(text: str) -> ratmat.Vector:
    return ratmat.vec([ratmat.frac_from_json(tok.strip()) for tok in text.split(",")])


def _load_json(path: str):
    return json.loads(Path(path).read_text())


def _matrix_from_args(args) -> ratmat.Matrix:
    if getattr(args, "file", None):
        data = _load_json(args.file) if args.file.endswith(".json") else None
        if data is None:
            raise DomainError("bad_file", "matrix files must be .json")
        return ratmat.matrix_from_json(data["entries"] if "entries" in data else data)
    if getattr(args, "matrix", None):
        return _parse_rat_matrix(args.matrix)
    raise DomainError("missing_input", "provide --matrix or --file")


def _subfield_matrix_from_args(args) -> linalg.SubfieldMatrix:
    if args.file:
        data = _load_json(args.file)
    else:
        data = json.loads(args.matrix)
    k = ringcore.subfield_from_elements(data["n"], data["subfield"])
    return linalg.SubfieldMatrix(
        k=k, rows=data["rows"], cols=data["cols"], entries=tuple(data["entries"])
    )


def _semigroup_table_from_args(args) -> semigroup.SemigroupTable:
    path = Path(args.file)
    if path.suffix == ".csv":
        rows = [
            [int(tok) for tok in line.split(",")]
            for line in path.read_text().strip().splitlines()
            if line.strip()
        ]
        return semigroup.validate_table(rows)
    data = _load_json(args.file)
    return semigroup.validate_table(data["table"])


# --- subcommand handlers ---


def cmd_subfields(args):
    fields = ringcore.find_subfields(args.n)
    payload = [s.to_json() for s in fields]
    pretty = "\n".join(
        f"Z_{args.n}: elements {s.elements} identity {s.identity} ~ Z_{s.prime_order}"
        for s in fields
    ) or f"Z_{args.n}: no proper subfields"
    _print_report(args, payload, CITATIONS["subfields"], pretty)
    return 0


def cmd_certify(args):
    try:
        sf = ringcore.certify_subfield(args.n, _parse_int_list(args.elements))
    except SubfieldRejection as exc:
        raise DomainError(exc.reason, exc.detail) from exc
    payload = sf.to_json()
    payload["to_prime"] = {str(a): sf.to_prime(a) for a in sf.elements}
    _print_report(args, payload, CITATIONS["certify"],
                  f"field with identity {sf.identity}, isomorphic to Z_{sf.prime_order}")
    return 0


def cmd_poly(args):
    p = polylab.parse_poly(args.expr, args.mod)
    payload = {"polynomial": p.to_json(), "roots": polylab.roots_in(p, range(p.n))}
    if ringcore._is_prime(p.n):
        payload["reducibility"] = polylab.reducibility_report(p).to_json()
        payload["coefficient_sum"] = polylab.coeff_sum_hom(p)
    pretty = f"{p} over Z_{p.n}: roots {payload['roots']}"
    _print_report(args, payload, CITATIONS["poly"], pretty)
    return 0


def cmd_spectral(args):
    a = _subfield_matrix_from_args(args)
    es = linalg.eigen_system(a)
    payload = {"eigen_system": es.to_json(), "self_adjoint": linalg.self_adjoint_check(a)}
    if payload["self_adjoint"]:
        result = linalg.spectral_decompose(a)
        if isinstance(result, linalg.SpectralDiagnostic):
            raise DomainError("not_diagonalizable", json.dumps(result.to_json(), sort_keys=True))
        payload["spectral"] = result.to_json()
    svals = ", ".join(
        f"{ev.value} (x{ev.algebraic_multiplicity})" for ev in es.s_values
    )
    _print_report(args, payload, CITATIONS["spectral"], f"s-values: {svals}")
    return 0


def cmd_classify_roots(args):
    k = ringcore.subfield_from_elements(args.mod, _parse_int_list(args.subfield))
    p = polylab.parse_poly(args.expr, args.mod)
    cls = polylab.neutrosophic_classify(p, k)
    _print_report(args, cls.to_json(), CITATIONS["classify-roots"],
                  f"{p} over Z_{p.n} rel {k.elements}: {cls.truth.value}")
    return 0


def cmd_semigroup(args):
    try:
        table = _semigroup_table_from_args(args)
    except TableError as exc:
        raise DomainError("invalid_table", str(exc)) from exc
    subs = semigroup.find_subgroups(table, all_subgroups=args.all_subgroups)
    payload = {
        "order": table.order,
        "idempotents": table.idempotents(),
        "subgroups": [s.to_json() for s in subs],
    }
    pretty = "\n".join(
        f"subgroup at {s.identity}: {s.elements}" for s in subs
    )
    _print_report(args, payload, CITATIONS["semigroup"], pretty)
    return 0


def cmd_rep(args):
    try:
        table = _semigroup_table_from_args(args)
    except TableError as exc:
        raise DomainError("invalid_table", str(exc)) from exc
    subs = semigroup.find_subgroups(table)
    record = next((s for s in subs if s.identity == args.identity), None)
    if record is None:
        raise DomainError("no_subgroup", f"no maximal subgroup at idempotent {args.identity}")
    side = Side.LEFT if args.side == "left" else Side.RIGHT
    rep = semigroup.regular_representation(record, side)
    payload = {"representation": rep.to_json(), "side": args.side}
    if args.check_lr:
        other = semigroup.regular_representation(
            record, Side.RIGHT if side is Side.LEFT else Side.LEFT
        )
        payload["left_right_isomorphic"] = semigroup.rep_isomorphic(rep, other).to_json()
        payload["inversion_intertwiner"] = ratmat.matrix_to_json(
            semigroup.left_right_intertwiner(record)
        )
    if args.decompose:
        blocks = semigroup.decompose_invariants(rep)
        payload["invariant_blocks"] = [
            {
                "dimension": b.dimension,
                "irreducible": b.irreducible,
                "certificate": b.certificate,
                "basis": [[ratmat.frac_to_json(x) for x in v] for v in b.basis],
            }
            for b in blocks
        ]
    pretty = f"regular {args.side} representation of degree {rep.degree}"
    if args.decompose:
        dims = sorted(b.dimension for b in semigroup.decompose_invariants(rep))
        pretty += f", invariant block dims {dims}"
    _print_report(args, payload, CITATIONS["rep"], pretty)
    return 0


def _semifield_from_args(args):
    name = args.semifield
    if name == "nonneg":
        return semivector.NonNegIntegers()
    if name.startswith("chain:"):
        return semivector.ChainLattice(int(name.split(":", 1)[1]))
    raise DomainError("bad_semifield", f"unknown semifield {name!r} (nonneg or chain:M)")


def _tuples_from_text(sf, text: str):
    return [
        semivector.SemivectorTuple(sf, tuple(_parse_int_list(chunk)))
        for chunk in text.split(";")
        if chunk.strip()
    ]


def cmd_semivec(args):
    if args.action == "lattice-check":
        if not args.lattice:
            raise DomainError("missing_input", "lattice-check needs --lattice")
        raw = args.lattice
        data = _load_json(raw) if raw.endswith(".json") else json.loads(raw)
        join, meet = semivector.lattice_tables_from_json(data)
        result = semivector.lattice_semivector_check(join, meet)
        pretty = "semivector space over C_2" if result.ok else f"fails {result.axiom}"
        _print_report(args, result.to_json(), CITATIONS["semivec"], pretty)
        return 0
    if not args.vectors:
        raise DomainError("missing_input", f"{args.action} needs --vectors")
    sf = _semifield_from_args(args)
    vectors = _tuples_from_text(sf, args.vectors)
    scalars = _parse_int_list(args.scalars) if args.scalars else None
    if args.action == "independent":
        payload = semivector.independence_check(vectors, scalars).to_json()
        pretty = "independent" if payload["independent"] else "dependent"
    elif args.action == "span":
        if not args.target:
            raise DomainError("missing_input", "span needs --target")
        target = semivector.SemivectorTuple(sf, tuple(_parse_int_list(args.target)))
        payload = semivector.span_membership(target, vectors, scalars).to_json()
        pretty = "member" if payload["member"] else "not a member"
    elif args.action == "spans":
        if args.space == "carrier":
            space = "carrier"
        elif args.space and args.space.startswith("dim:"):
            space = int(args.space.split(":", 1)[1])
        else:
            raise DomainError("missing_input", "spans needs --space dim:N or carrier")
        payload = semivector.spans_space(vectors, space, scalars).to_json()
        pretty = "spans" if payload["spans"] else f"missing {payload['missing']}"
    elif args.action == "enumerate":
        if not args.target:
            raise DomainError("missing_input", "enumerate needs --target")
        target = semivector.SemivectorTuple(sf, tuple(_parse_int_list(args.target)))
        reps = semivector.enumerate_representations(target, vectors, scalars)
        payload = {"count": len(reps), "representations": [list(r) for r in reps]}
        pretty = f"{len(reps)} representation(s)"
    else:
        raise DomainError("bad_action", f"unknown action {args.action!r}")
    _print_report(args, payload, CITATIONS["semivec"], pretty)
    return 0


def cmd_markov(args):
    p = _matrix_from_args(args)
    state = _parse_rat_vector(args.state)
    trajectory = econ.markov_step(p, state, args.steps)
    payload = trajectory.to_json()
    pretty = "\n".join(
        "step {}: ({})".format(i + 1, ", ".join(map(str, s)))
        for i, s in enumerate(trajectory.states)
    )
    _print_report(args, payload, CITATIONS["markov"], pretty)
    return 0


def cmd_leontief(args):
    if args.file and args.file.endswith(".csv"):
        names, matrix = econ.parse_consumption_csv(Path(args.file).read_text())
    else:
        names, matrix = None, _matrix_from_args(args)
    if args.model == "closed":
        solution = econ.closed_solve(matrix)
    else:
        if not args.demand:
            raise DomainError("missing_input", "open model needs --demand")
        solution = econ.open_solve(matrix, _parse_rat_vector(args.demand))
    payload = solution.to_json()
    if names:
        payload["industries"] = names
    pretty = json.dumps(payload, sort_keys=True, indent=2)
    _print_report(args, payload, CITATIONS["leontief"], pretty)
    return 0


def cmd_golden(args):
    results = golden.run_golden()
    payload = [
        {"anchor": r.anchor, "description": r.description, "passed": r.passed,
         "detail": r.detail}
        for r in results
    ]
    pretty = "\n".join(
        f"[{'PASS' if r.passed else 'FAIL'}] {r.anchor}: {r.description}"
        + (f" ({r.detail})" if r.detail else "")
        for r in results
    )
    failed = [r for r in results if not r.passed]
    if failed:
        report = {"status": "error", "payload": payload,
                  "citations": [r.anchor for r in results]}
        print(pretty if args.pretty else json.dumps(report, sort_keys=True, separators=(",", ":")))
        return 1
    _print_report(args, payload, [r.anchor for r in results], pretty)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smaralg",
        description="Workbench for Smarandache algebraic structures over Z_n, "
        "semifields, S-semigroups, and relaxed economic models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_pretty(p):
        p.add_argument("--pretty", action="store_true", help="human-readable output")
        return p

    p = with_pretty(sub.add_parser("subfields", help="list the subfields of Z_n"))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_subfields)

    p = with_pretty(sub.add_parser("certify", help="certify a subset as a subfield"))
    p.add_argument("n", type=int)
    p.add_argument("--elements", required=True, help="comma list, e.g. 0,2,4")
    p.set_defaults(func=cmd_certify)

    p = with_pretty(sub.add_parser("poly", help="roots and root criteria of a polynomial"))
    p.add_argument("expr", help='e.g. "x^2+1" or "x^2+1 mod 5"')
    p.add_argument("--mod", type=int, default=None)
    p.set_defaults(func=cmd_poly)

    p = with_pretty(sub.add_parser("spectral", help="eigen system and spectral decomposition"))
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--file", help="matrix JSON file")
    group.add_argument("--matrix", help="inline matrix JSON")
    p.set_defaults(func=cmd_spectral)

    p = with_pretty(sub.add_parser("classify-roots", help="three-valued root classification"))
    p.add_argument("expr")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--subfield", required=True, help="comma list, e.g. 0,3")
    p.set_defaults(func=cmd_classify_roots)

    p = with_pretty(sub.add_parser("semigroup", help="validate a table and list subgroups"))
    p.add_argument("--file", required=True, help="table as .json or .csv")
    p.add_argument("--all-subgroups", action="store_true")
    p.set_defaults(func=cmd_semigroup)

    p = with_pretty(sub.add_parser("rep", help="regular representation of a subgroup"))
    p.add_argument("--file", required=True, help="table as .json or .csv")
    p.add_argument("--identity", type=int, required=True, help="idempotent anchoring the subgroup")
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.add_argument("--check-lr", action="store_true", help="verify left ~ right isomorphism")
    p.add_argument("--decompose", action="store_true", help="split into invariant blocks")
    p.set_defaults(func=cmd_rep)

    p = with_pretty(sub.add_parser("semivec", help="semivector-space checks"))
    p.add_argument(
        "--action",
        choices=["independent", "span", "spans", "enumerate", "lattice-check"],
        required=True,
    )
    p.add_argument("--semifield", default="nonneg", help="nonneg or chain:M")
    p.add_argument("--vectors", help='tuples, e.g. "1,1;2,1;3,0"')
    p.add_argument("--target", help='tuple, e.g. "1,3"')
    p.add_argument("--scalars", help="scalar subset, e.g. 0,3")
    p.add_argument("--space", help="dim:N or carrier (for --action spans)")
    p.add_argument(
        "--lattice",
        help='lattice JSON ({"kind":"chain","size":4} or join/meet tables) '
        "inline or as a .json file",
    )
    p.set_defaults(func=cmd_semivec)

    p = with_pretty(sub.add_parser("markov", help="exact transition iteration"))
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--matrix", help='rows ; entries , e.g. "1/2,3/10;1/2,7/10"')
    group.add_argument("--file", help="matrix JSON file")
    p.add_argument("--state", required=True, help='e.g. "1,0"')
    p.add_argument("--steps", type=int, default=1)
    p.set_defaults(func=cmd_markov)

    p = with_pretty(sub.add_parser("leontief", help="closed/open input-output models"))
    p.add_argument("--model", choices=["closed", "open"], required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--matrix", help="inline matrix")
    group.add_argument("--file", help="matrix JSON or consumption CSV")
    p.add_argument("--demand", help="demand vector for the open model")
    p.set_defaults(func=cmd_leontief)

    p = with_pretty(sub.add_parser("golden", help="replay the book's worked examples"))
    p.set_defaults(func=cmd_golden)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        report = {
            "status": "error",
            "payload": {"reason": exc.reason, "message": str(exc)},
            "citations": CITATIONS.get(args.command, []),
        }
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))
        return 1
    except (ValueError, AssertionError, KeyError, OSError, json.JSONDecodeError) as exc:
        report = {
            "status": "error",
            "payload": {"reason": "domain_error", "message": f"{type(exc).__name__}: {exc}"},
            "citations": CITATIONS.get(args.command, []),
        }
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))
        return 1


if __name__ == "__main__":
    sys.exit(main())
