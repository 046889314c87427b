"""Command-line front end.

Exit status: 0 success, 1 invalid input or usage, 2 a verification check
failed, 3 a --deadline ran out.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import adjoint, oracle, output
from .errors import DeadlineExceeded, MonoreesError, ValidationError
from .euclid import InputPair, coprime_pairs, euclid_data, sers_data, validate
from .reesfamilies import PairContext, build_resolution, verify_resolution

EXIT_OK, EXIT_INVALID, EXIT_FAILED, EXIT_DEADLINE = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "cas-script"), default="text")
    common.add_argument("--allow-swap", action="store_true",
                        help="accept d/2 < u < d by replacing u with d-u")

    parser = _Parser(prog="monorees", description="Rees algebra resolutions of monomial plane curves")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pair_command(name, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("d", type=int)
        p.add_argument("u", type=int)
        return p

    pair_command("euclid", "remainder sequences and their extended forms")
    pair_command("generators", "minimal generators of the kernel")
    p = pair_command("syzygies", "first or second syzygies")
    p.add_argument("--level", type=int, choices=(1, 2), default=1)
    pair_command("resolution", "twists and maps of the minimal resolution")
    pair_command("betti", "bigraded Betti numbers")
    p = pair_command("verify", "check the resolution, optionally against the oracle")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--deadline", type=float, default=None, metavar="SECS")
    p = pair_command("adjoint", "adjoint pencil counts (needs u > 1)")
    p.add_argument("--ell", type=int, default=None)
    p = sub.add_parser("sweep", parents=[common], help="verify every pair up to dmax")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _context(args) -> PairContext:
    pair = validate(args.d, args.u, allow_swap=args.allow_swap)
    return PairContext(pair, sers_data(pair, euclid_data(pair)))


def check_pair(pair: InputPair, with_oracle: bool, deadline: float | None = None) -> dict:
    """Run every check for one pair; returns flags and an overall verdict."""
    report = verify_resolution(pair, deadline)
    result = {"report": report.flags(), "oracle": None}
    ok = report.ok
    if with_oracle:
        ctx = PairContext(pair, sers_data(pair, euclid_data(pair)))
        _, f0, f1, f2 = build_resolution(ctx)
        orep = oracle.cross_check(pair, list(f0.elements), list(f1.elements),
                                  list(f2.elements), deadline)
        result["oracle"] = orep.flags()
        ok = ok and orep.ok
    result["ok"] = ok
    return result


def _sweep_one(job):
    pair, with_oracle = job
    started = time.perf_counter()
    result = check_pair(pair, with_oracle)
    failed = sorted(k for part in ("report", "oracle") if result[part]
                    for k, v in result[part].items() if not v)
    return {"d": pair.d, "u": pair.u, "ok": result["ok"], "failed": failed,
            "seconds": round(time.perf_counter() - started, 3)}


def _emit(args, doc: output.OutputDocument, text: str, script, out) -> None:
    if args.format == "json":
        out.write(doc.to_json())
    elif args.format == "cas-script":
        out.write(script())
    else:
        out.write(text)


def _families_script(ctx):
    def make():
        _, f0, f1, f2 = build_resolution(ctx)
        return output.export_cas_script(ctx, f0, f1, f2)
    return make


def _dispatch(args, out) -> int:
    if args.command == "sweep":
        if args.dmax < 3:
            raise ValidationError("--dmax must be at least 3")
        if args.format == "cas-script":
            raise ValidationError("sweep has no cas-script output")
        jobs = [(p, args.oracle) for p in coprime_pairs(args.dmax)]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                rows = list(pool.map(_sweep_one, jobs))
        else:
            rows = [_sweep_one(j) for j in jobs]
        failures = sum(not r["ok"] for r in rows)
        payload = {"dmax": args.dmax, "oracle": args.oracle, "pairs": rows, "failures": failures}
        doc = output.OutputDocument("sweep", {"dmax": args.dmax}, payload)
        text = "".join(
            f"({r['d']},{r['u']}) {'ok' if r['ok'] else 'FAILED ' + ','.join(r['failed'])}\n"
            for r in rows
        ) + f"{len(rows)} pairs, {failures} failures\n"
        _emit(args, doc, text, None, out)
        return EXIT_OK if failures == 0 else EXIT_FAILED

    ctx = _context(args)
    inp = output.pair_input(ctx.pair)
    script = _families_script(ctx)
    cmd = args.command
    if cmd == "euclid":
        payload = output.euclid_payload(euclid_data(ctx.pair), ctx.sers)
        text = output.euclid_text(payload)
    elif cmd == "generators":
        _, f0, _, _ = build_resolution(ctx)
        payload = output.generators_payload(ctx, f0)
        text = "".join(g["polynomial"] + "\n" for g in payload["generators"])
    elif cmd == "syzygies":
        _, f0, f1, f2 = build_resolution(ctx)
        payload = output.syzygies_payload(ctx, f0, f1, f2, args.level)
        text = "".join(e["element"] + "\n" for e in payload["elements"])
    elif cmd == "resolution":
        res, *_ = build_resolution(ctx)
        payload = output.resolution_payload(ctx, res)
        text = output.betti_text(output.betti_payload(res)) + "".join(
            f"phi{k}: " + " | ".join(payload[f"phi{k}"]) + "\n" for k in (1, 2, 3))
    elif cmd == "betti":
        res, *_ = build_resolution(ctx)
        payload = output.betti_payload(res)
        text = output.betti_text(payload)
    elif cmd == "verify":
        deadline = None if args.deadline is None else time.monotonic() + args.deadline
        payload = check_pair(ctx.pair, args.oracle, deadline)
        text = output.flags_text(payload["report"])
        if payload["oracle"] is not None:
            text += output.flags_text({f"oracle.{k}": v for k, v in payload["oracle"].items()})
        doc = output.OutputDocument(cmd, inp, payload)
        _emit(args, doc, text, script, out)
        return EXIT_OK if payload["ok"] else EXIT_FAILED
    elif cmd == "adjoint":
        payload = output.adjoint_payload(adjoint.adjoint_report(ctx.pair, args.ell))
        text = output.adjoint_text(payload)
    else:  # pragma: no cover - argparse restricts the choices
        raise ValidationError(f"unknown command {cmd}")
    _emit(args, output.OutputDocument(cmd, inp, payload), text, script, out)
    return EXIT_OK


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        err.write(str(exc))
        return EXIT_INVALID
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_INVALID
    try:
        return _dispatch(args, out)
    except DeadlineExceeded as exc:
        err.write(f"deadline exceeded: {exc}\n")
        return EXIT_DEADLINE
    except ValidationError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except MonoreesError as exc:
        err.write(f"verification error: {type(exc).__name__}: {exc}\n")
        return EXIT_FAILED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
