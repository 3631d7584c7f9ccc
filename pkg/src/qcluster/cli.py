"""Command-line interface: mutate seeds, enumerate cluster variables,
evaluate characters, and run the verification suites.

Exit codes: 0 success, 1 a checked identity failed, 2 usage or unsupported
input, 3 an enumeration budget was exceeded.  Failures print one line to
stderr of the form ``qcluster: <reason>``.
"""

from __future__ import annotations

import argparse
import json
import sys

from .characters import CCObject, FramedData, cc_character, frame_quiver, framed_linear
from .errors import BudgetExceededError, UnsupportedQuiverError, VerificationError
from .quiverrep import FingerprintTable, Quiver, Rep, direct_sum, ext_dim
from .seeds import enumerate_cluster_variables, mutate_seed
from .verify import (
    ExpressionEngine,
    verify_extension_drop,
    verify_generation,
    verify_injective_shift_expansion,
    verify_product_expansion,
)

_TYPES = {"A1": 1, "A2": 2, "A3": 3}
_PRIMES = (2, 3, 5)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(ValueError):
    """Invalid input that argparse alone cannot catch."""


def _add_quiver_options(sp: argparse.ArgumentParser) -> None:
    group = sp.add_mutually_exclusive_group()
    group.add_argument(
        "--type", choices=sorted(_TYPES), default="A2", help="built-in linear quiver"
    )
    group.add_argument(
        "--quiver",
        metavar="FILE",
        help="JSON file {vertices, arrows (1-based pairs)}; the frame is added here",
    )


def _add_output_options(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcluster",
        description="Quantum cluster algebras of small type A, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    mutate = sub.add_parser("mutate", help="mutate the initial seed along a direction word")
    _add_quiver_options(mutate)
    _add_output_options(mutate)
    mutate.add_argument(
        "--dirs",
        nargs="+",
        type=int,
        required=True,
        metavar="K",
        help="1-based mutation directions, applied left to right",
    )

    enum = sub.add_parser("enumerate", help="close the initial seed under mutation")
    _add_quiver_options(enum)
    _add_output_options(enum)
    enum.add_argument("--budget-seeds", type=int, default=10_000)

    cc = sub.add_parser("cc-char", help="character of a module plus shifted injectives")
    _add_quiver_options(cc)
    _add_output_options(cc)
    cc.add_argument("--p", type=int, choices=_PRIMES, default=2, help="field size")
    cc.add_argument(
        "--module",
        action="append",
        default=[],
        metavar="D1,D2,...",
        help="dimension vector of one indecomposable summand; repeatable",
    )
    cc.add_argument(
        "--shift-injective",
        action="append",
        type=int,
        default=[],
        metavar="K",
        help="add the shift of the K-th injective (1-based); repeatable",
    )
    cc.add_argument("--budget-subspaces", type=int, default=200_000)

    verify = sub.add_parser("verify", help="run one verification suite")
    _add_quiver_options(verify)
    _add_output_options(verify)
    verify.add_argument(
        "check",
        choices=("product", "injective", "extension", "generation"),
        help="which family of identities to check",
    )
    verify.add_argument("--p", type=int, choices=_PRIMES, default=2, help="field size")
    verify.add_argument(
        "--budget", type=int, default=None, help="override every budget below"
    )
    verify.add_argument("--budget-seeds", type=int, default=10_000)
    verify.add_argument("--budget-subspaces", type=int, default=200_000)
    verify.add_argument("--budget-hom", type=int, default=200_000)
    verify.add_argument("--budget-ext", type=int, default=100_000)
    verify.add_argument("--max-summands", type=int, default=3)
    verify.add_argument("--max-mult", type=int, default=2)
    verify.add_argument("--max-shifts", type=int, default=2)
    return parser


def _framed_data(args: argparse.Namespace) -> FramedData:
    if args.quiver:
        try:
            with open(args.quiver, encoding="utf-8") as fh:
                data = json.load(fh)
            quiver = Quiver.from_json(data)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read quiver file {args.quiver}: {exc}") from exc
        if quiver.principal != quiver.vertices:
            raise UsageError(
                "quiver file must be entirely mutable; frozen vertices are added here"
            )
        try:
            return frame_quiver(quiver)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    return framed_linear(_TYPES[args.type])


def _principal_table(fd: FramedData, p: int) -> FingerprintTable:
    return FingerprintTable(fd.quiver, p, support=tuple(range(fd.n)))


def _run_mutate(args: argparse.Namespace) -> tuple[dict, int]:
    fd = _framed_data(args)
    seed = fd.initial_seed()
    for d in args.dirs:
        if not 1 <= d <= fd.n:
            raise UsageError(f"mutation direction {d} out of range 1..{fd.n}")
        seed = mutate_seed(seed, d - 1)
    return {"command": "mutate", "dirs": list(args.dirs), "seed": seed.to_json()}, EXIT_OK


def _run_enumerate(args: argparse.Namespace) -> tuple[dict, int]:
    fd = _framed_data(args)
    variables, seen = enumerate_cluster_variables(
        fd.initial_seed(), budget_seeds=args.budget_seeds
    )
    payload = {
        "command": "enumerate",
        "count": len(variables),
        "seeds_visited": seen,
        "variables": [x.to_json() for x in variables],
    }
    return payload, EXIT_OK


def _parse_dims(text: str, n: int) -> tuple[int, ...]:
    try:
        dims = tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError as exc:
        raise UsageError(f"bad dimension vector {text!r}") from exc
    if len(dims) != n:
        raise UsageError(f"dimension vector {text!r} must have {n} entries")
    return dims


def _run_cc_char(args: argparse.Namespace) -> tuple[dict, int]:
    fd = _framed_data(args)
    table = _principal_table(fd, args.p)
    by_dims = {x.dims[: fd.n]: x for x in table.catalog}
    module = Rep.zero(fd.quiver, args.p)
    for text in args.module:
        dims = _parse_dims(text, fd.n)
        if dims not in by_dims:
            raise UsageError(
                f"{list(dims)} is not an indecomposable dimension vector; "
                f"valid ones: {sorted(list(d) for d in by_dims)}"
            )
        module = direct_sum(module, by_dims[dims])
    shifts = []
    for k in args.shift_injective:
        if not 1 <= k <= fd.m:
            raise UsageError(f"injective index {k} out of range 1..{fd.m}")
        shifts.append(k - 1)
    x = cc_character(fd, CCObject(module, tuple(shifts)), args.budget_subspaces)
    payload = {
        "command": "cc-char",
        "p": args.p,
        "module": [list(_parse_dims(t, fd.n)) for t in args.module],
        "shifted_injectives": sorted(k for k in args.shift_injective),
        "character": x.to_json(),
    }
    return payload, EXIT_OK


def _run_verify(args: argparse.Namespace) -> tuple[dict, int]:
    fd = _framed_data(args)
    p = args.p
    b_seeds = args.budget if args.budget is not None else args.budget_seeds
    b_sub = args.budget if args.budget is not None else args.budget_subspaces
    b_hom = args.budget if args.budget is not None else args.budget_hom
    b_ext = args.budget if args.budget is not None else args.budget_ext
    if args.check == "product":
        table = _principal_table(fd, p)
        instances = [
            verify_product_expansion(
                fd, p, m_rep, n_rep, table, budget_subspaces=b_sub, budget_ext=b_ext
            )
            for m_rep in table.catalog
            for n_rep in table.catalog
        ]
    elif args.check == "injective":
        engine = ExpressionEngine(
            fd, p, budget_subspaces=b_sub, budget_hom=b_hom, budget_ext=b_ext
        )
        instances = [
            verify_injective_shift_expansion(fd, p, m_rep, (i,), engine)
            for m_rep in engine.table.catalog
            for i in range(fd.m)
        ]
    elif args.check == "extension":
        table = _principal_table(fd, p)
        instances = [
            verify_extension_drop(m_rep, n_rep, table, b_ext)
            for m_rep in table.catalog
            for n_rep in table.catalog
            if ext_dim(m_rep, n_rep) > 0
        ]
    else:
        instances = [
            verify_generation(
                fd,
                p,
                max_summands=args.max_summands,
                max_mult=args.max_mult,
                max_shifts=args.max_shifts,
                budget_seeds=b_seeds,
                budget_subspaces=b_sub,
                budget_hom=b_hom,
                budget_ext=b_ext,
            )
        ]
    ok = all(r["status"] == "ok" for r in instances)
    payload = {
        "command": "verify",
        "check": args.check,
        "p": p,
        "instances": instances,
        "status": "ok" if ok else "fail",
    }
    return payload, EXIT_OK if ok else EXIT_VERIFICATION


def _render_text(payload: dict) -> str:
    command = payload["command"]
    if command == "mutate":
        seed = payload["seed"]
        lines = [f"seed after mutations {payload['dirs']}:"]
        for i, var in enumerate(seed["vars"]):
            terms = " + ".join(f"({t['coeff']})*X^{t['exp']}" for t in var["terms"])
            lines.append(f"  x{i + 1} = {terms}")
        return "\n".join(lines)
    if command == "enumerate":
        lines = [
            f"{payload['count']} cluster variables "
            f"({payload['seeds_visited']} seeds visited)"
        ]
        for var in payload["variables"]:
            lines.append(
                "  " + " + ".join(f"({t['coeff']})*X^{t['exp']}" for t in var["terms"])
            )
        return "\n".join(lines)
    if command == "cc-char":
        terms = " + ".join(
            f"({t['coeff']})*X^{t['exp']}" for t in payload["character"]["terms"]
        )
        return f"character = {terms}"
    lines = [
        f"{payload['check']}: {payload['status']} "
        f"({len(payload['instances'])} instances, p={payload['p']})"
    ]
    for inst in payload["instances"]:
        if inst["status"] != "ok":
            lines.append("  failing instance: " + json.dumps(inst, sort_keys=True))
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    runners = {
        "mutate": _run_mutate,
        "enumerate": _run_enumerate,
        "cc-char": _run_cc_char,
        "verify": _run_verify,
    }
    try:
        payload, code = runners[args.command](args)
    except UsageError as exc:
        print(f"qcluster: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedQuiverError as exc:
        print(f"qcluster: unsupported quiver: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"qcluster: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationError as exc:
        print(f"qcluster: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    if args.format == "json":
        rendered = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        rendered = _render_text(payload) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return code


if __name__ == "__main__":
    sys.exit(main())
