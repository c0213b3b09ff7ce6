"""Command-line front end: spectrum, build, analyze, verify, simulate.

Exit codes: 0 success/verified, 1 usage error, 2 verification or
simulation failure, 3 guard exceeded.  With --json each command prints a
single machine-readable object instead of the human rendering.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .centralizer import TwistSpec, centralizer_code
from .channel import exhaustive_stats, monte_carlo
from .code import analyze, code_from_basis
from .comb import (
    EIGEN_SCAN_MAX_P,
    CombParams,
    comb_matrix,
    comb_spectrum,
    eigen_scan,
)
from .linalg import (
    Felt,
    GuardExceededError,
    MatrixFormatError,
    Prime,
    is_prime,
    parse_matrix_text,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2
EXIT_GUARD = 3

# Hard sweep caps keep the full verification desk-scale.
VERIFY_MAX_PRIME = 13
VERIFY_MAX_ORDER = 6


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class VerifyRow:
    """One sweep tuple: observed dimension, plus the theorem check when it applies."""

    p: int
    n: int
    x: int
    y: int
    a: int
    hypotheses_met: bool
    dim: int
    min_distance: int | None = None
    mds: bool | None = None
    matches_theorem: bool | None = None

    def to_json(self) -> dict:
        out = {
            "p": self.p,
            "n": self.n,
            "x": self.x,
            "y": self.y,
            "a": self.a,
            "hypotheses_met": self.hypotheses_met,
            "dim": self.dim,
        }
        if self.min_distance is not None:
            out["min_distance"] = self.min_distance
        if self.mds is not None:
            out["mds"] = self.mds
        if self.matches_theorem is not None:
            out["matches_theorem"] = self.matches_theorem
        return out


def build_parser() -> _Parser:
    parser = _Parser(prog="tcc", description="Twisted centralizer codes over GF(p).")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    sp = sub.add_parser("spectrum", help="eigenvalues and diagonalizability of x*J + y*I")
    _add_comb_flags(sp, required=True)
    sp.set_defaults(func=cmd_spectrum)

    bp = sub.add_parser("build", help="dimension and generator of the code C(A, a)")
    _add_matrix_source_flags(bp)
    bp.set_defaults(func=cmd_build)

    ap = sub.add_parser("analyze", help="[N, k, d] parameters, MDS flag and capacities")
    _add_matrix_source_flags(ap)
    ap.set_defaults(func=cmd_analyze)

    vp = sub.add_parser("verify", help="sweep small fields and check the MDS construction")
    vp.add_argument("--p-max", type=int, default=7, help=f"largest prime, at most {VERIFY_MAX_PRIME} (default 7)")
    vp.add_argument("--n-max", type=int, default=5, help=f"largest order, at most {VERIFY_MAX_ORDER} (default 5)")
    vp.add_argument("--json", action="store_true", help="machine-readable output")
    vp.set_defaults(func=cmd_verify)

    mp = sub.add_parser("simulate", help="decode under a fixed-weight symbol-error channel")
    _add_comb_flags(mp, required=True)
    mp.add_argument("--a", type=int, required=True, help="twist constant")
    mp.add_argument("--t", type=int, required=True, help="number of corrupted symbols per trial")
    mp.add_argument("--trials", type=int, default=1000, help="Monte Carlo trials (default 1000)")
    mp.add_argument("--seed", type=int, default=0, help="random seed (default 0, fixed)")
    mp.add_argument("--exhaustive", action="store_true", help="sweep every weight-t pattern instead")
    mp.set_defaults(func=cmd_simulate)

    return parser


def _add_comb_flags(sp, required: bool):
    sp.add_argument("--n", type=int, required=required, help="matrix order (at least 2)")
    sp.add_argument("--p", type=int, required=required, help="field characteristic (prime)")
    sp.add_argument("--x", type=int, required=required, help="all-ones coefficient")
    sp.add_argument("--y", type=int, required=required, help="identity coefficient")
    sp.add_argument("--json", action="store_true", help="machine-readable output")


def _add_matrix_source_flags(sp):
    _add_comb_flags(sp, required=False)
    sp.add_argument("--matrix-file", help="read A from a file instead of building x*J + y*I")
    sp.add_argument("--a", type=int, required=True, help="twist constant")


def _comb_params(args) -> CombParams:
    prime = Prime(args.p)
    return CombParams(args.n, Felt(args.x, prime), Felt(args.y, prime))


def _twist_inputs(args) -> tuple[TwistSpec, dict]:
    """Resolve A from flags or file; returns the spec and the JSON header fields."""
    if args.matrix_file is not None:
        try:
            text = Path(args.matrix_file).read_text()
        except OSError as exc:
            raise ValueError(f"cannot read matrix file: {exc}") from None
        matrix = parse_matrix_text(text)
        if not matrix.is_square:
            raise ValueError(f"matrix file holds a {matrix.rows}x{matrix.cols} matrix, need square")
        spec = TwistSpec(matrix, Felt(args.a, matrix.prime))
        header = {"p": matrix.prime.p, "n": matrix.rows, "a": spec.twist.value}
        return spec, header
    if None in (args.n, args.p, args.x, args.y):
        raise ValueError("either --matrix-file or all of --n --p --x --y must be given")
    params = _comb_params(args)
    spec = TwistSpec(comb_matrix(params), Felt(args.a, params.prime))
    header = {
        "p": params.prime.p,
        "n": params.n,
        "x": params.x.value,
        "y": params.y.value,
        "a": spec.twist.value,
    }
    return spec, header


def _hypotheses_met(p: int, n: int, x: int, y: int, a: int) -> bool:
    """The MDS construction needs p | x n + y, x != 0, y != 0 and a outside {0, 1}."""
    return (x * n + y) % p == 0 and x % p != 0 and y % p != 0 and a % p not in (0, 1)


def _rate_str(rate: tuple[int, int]) -> str:
    return f"{rate[0]}/{rate[1]}"


def cmd_spectrum(args) -> int:
    params = _comb_params(args)
    matrix = comb_matrix(params)
    spectrum = comb_spectrum(params)
    scan_agrees = None
    if params.prime.p <= EIGEN_SCAN_MAX_P:
        scan_agrees = eigen_scan(matrix) == spectrum
    diagonalizable = spectrum.total_multiplicity == params.n
    diagonal = None
    if diagonalizable:
        if params.x.value != 0:
            lam_ones = (params.x.value * params.n + params.y.value) % params.prime.p
            diagonal = [lam_ones] + [params.y.value] * (params.n - 1)
        else:
            diagonal = [params.y.value] * params.n

    if args.json:
        out = {
            "p": params.prime.p,
            "n": params.n,
            "x": params.x.value,
            "y": params.y.value,
            "eigenvalues": [[lam, mult] for lam, mult in spectrum.pairs],
            "diagonalizable": diagonalizable,
        }
        if diagonal is not None:
            out["diagonal"] = diagonal
        if scan_agrees is not None:
            out["scan_agrees"] = scan_agrees
        print(json.dumps(out))
    else:
        print(f"A = {params.x.value}*J + {params.y.value}*I over GF({params.prime.p}), n = {params.n}")
        print(matrix)
        print("spectrum: " + "; ".join(f"eigenvalue {lam} with multiplicity {m}" for lam, m in spectrum.pairs))
        if scan_agrees is None:
            print(f"eigen scan cross-check: skipped (p > {EIGEN_SCAN_MAX_P})")
        else:
            print(f"eigen scan cross-check: {'agrees' if scan_agrees else 'DISAGREES'}")
        if diagonalizable:
            print(f"diagonalizable: yes, D = diag({', '.join(str(v) for v in diagonal)})")
        else:
            print(
                f"diagonalizable: no (eigenspaces span {spectrum.total_multiplicity} "
                f"of {params.n} dimensions)"
            )
    if scan_agrees is False:
        print("tcc: spectrum formula and eigen scan disagree", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_build(args) -> int:
    spec, header = _twist_inputs(args)
    basis = centralizer_code(spec)
    code = code_from_basis(basis)
    if args.json:
        out = dict(header)
        out["length"] = code.length
        out["dimension"] = code.dim
        print(json.dumps(out))
        return EXIT_OK
    print(f"C(A, {spec.twist.value}) over GF({spec.prime.p}), n = {spec.n}")
    print(f"dim = {basis.dim}")
    if code.generator is not None:
        print("generator (RREF):")
        print(code.generator)
    else:
        print("generator: (zero code)")
    return EXIT_OK


def cmd_analyze(args) -> int:
    spec, header = _twist_inputs(args)
    code = code_from_basis(centralizer_code(spec))
    if code.dim == 0:
        print("tcc: zero code: C(A, a) contains only the zero matrix, nothing to analyze", file=sys.stderr)
        return EXIT_USAGE
    report = analyze(code)
    if args.json:
        out = dict(header)
        out["length"] = report.length
        out["dimension"] = report.dim
        out["min_distance"] = report.min_distance
        out["mds"] = report.mds
        out["detect"] = report.detect
        out["correct"] = report.correct
        out["rate"] = _rate_str(report.rate)
        print(json.dumps(out))
        return EXIT_OK
    print(f"code parameters [{report.length}, {report.dim}, {report.min_distance}] over GF({spec.prime.p})")
    print(f"MDS: {'yes' if report.mds else 'no'}")
    print(f"detects up to {report.detect} errors; corrects up to {report.correct}")
    print(f"rate: {_rate_str(report.rate)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if not 2 <= args.p_max <= VERIFY_MAX_PRIME:
        raise ValueError(f"--p-max must lie in [2, {VERIFY_MAX_PRIME}], got {args.p_max}")
    if not 2 <= args.n_max <= VERIFY_MAX_ORDER:
        raise ValueError(f"--n-max must lie in [2, {VERIFY_MAX_ORDER}], got {args.n_max}")

    rows = []
    for p in (q for q in range(2, args.p_max + 1) if is_prime(q)):
        prime = Prime(p)
        for n in range(2, args.n_max + 1):
            for x in range(p):
                for y in range(p):
                    matrix = comb_matrix(CombParams(n, Felt(x, prime), Felt(y, prime)))
                    for a in range(p):
                        spec = TwistSpec(matrix, Felt(a, prime))
                        basis = centralizer_code(spec)
                        if not _hypotheses_met(p, n, x, y, a):
                            rows.append(VerifyRow(p, n, x, y, a, False, basis.dim))
                            continue
                        rows.append(_check_theorem_row(p, n, x, y, a, basis))

    mismatches = [row for row in rows if row.hypotheses_met and not row.matches_theorem]
    hypothesis_count = sum(1 for row in rows if row.hypotheses_met)
    ok = not mismatches

    if args.json:
        print(
            json.dumps(
                {
                    "p_max": args.p_max,
                    "n_max": args.n_max,
                    "tuples": len(rows),
                    "hypothesis_tuples": hypothesis_count,
                    "ok": ok,
                    "rows": [row.to_json() for row in rows],
                }
            )
        )
    else:
        print(f"{'p':>3} {'n':>2} {'x':>3} {'y':>3} {'a':>3}  {'hyp':<3} {'dim':>4} {'d':>4}  {'mds':<3} {'ok':<3}")
        for row in rows:
            d = "-" if row.min_distance is None else str(row.min_distance)
            mds = "-" if row.mds is None else ("yes" if row.mds else "no")
            okc = "-" if row.matches_theorem is None else ("yes" if row.matches_theorem else "NO")
            hyp = "yes" if row.hypotheses_met else "no"
            print(f"{row.p:>3} {row.n:>2} {row.x:>3} {row.y:>3} {row.a:>3}  {hyp:<3} {row.dim:>4} {d:>4}  {mds:<3} {okc:<3}")
        print(
            f"summary: {len(rows)} tuples, {hypothesis_count} met the hypotheses, "
            f"{len(mismatches)} mismatches"
        )
        for row in mismatches:
            print(f"MISMATCH: p={row.p} n={row.n} x={row.x} y={row.y} a={row.a} dim={row.dim}")
    return EXIT_OK if ok else EXIT_FAILURE


def _check_theorem_row(p, n, x, y, a, basis) -> VerifyRow:
    code = code_from_basis(basis)
    if code.dim == 0:
        return VerifyRow(p, n, x, y, a, True, 0, matches_theorem=False)
    report = analyze(code)
    generator_is_all_ones = bool((code.generator.array == 1).all())
    matches = (
        basis.dim == 1
        and generator_is_all_ones
        and report.min_distance == n * n
        and report.mds
        and report.detect == n * n - 1
        and report.correct == (n * n - 1) // 2
        and report.rate == (1, n * n)
    )
    return VerifyRow(
        p, n, x, y, a, True, basis.dim,
        min_distance=report.min_distance, mds=report.mds, matches_theorem=matches,
    )


def cmd_simulate(args) -> int:
    params = _comb_params(args)
    prime = params.prime
    twist = Felt(args.a, prime)
    hyp = _hypotheses_met(prime.p, params.n, params.x.value, params.y.value, twist.value)
    if not hyp:
        print(
            "tcc: note: these parameters miss the MDS construction hypotheses "
            "(need p | x*n + y, x != 0, y != 0, a outside {0, 1}); no guarantee applies",
            file=sys.stderr,
        )
    code = code_from_basis(centralizer_code(TwistSpec(comb_matrix(params), twist)))
    if code.dim == 0:
        print("tcc: zero code: C(A, a) contains only the zero matrix, nothing to simulate", file=sys.stderr)
        return EXIT_USAGE
    if not 0 <= args.t <= code.length:
        raise ValueError(f"--t must lie in [0, {code.length}], got {args.t}")
    report = analyze(code)
    capacity = report.correct

    if args.exhaustive:
        mode = "exhaustive"
        stats = exhaustive_stats(code, args.t)
    else:
        mode = "monte-carlo"
        stats = monte_carlo(code, args.t, args.trials, args.seed)

    failures = stats.trials - stats.successes
    within = args.t <= capacity
    verdict = "PASS" if within and failures == 0 else "FAIL"

    if args.json:
        out = {
            "p": prime.p,
            "n": params.n,
            "x": params.x.value,
            "y": params.y.value,
            "a": twist.value,
            "t": args.t,
            "length": report.length,
            "dimension": report.dim,
            "min_distance": report.min_distance,
            "capacity": capacity,
            "hypotheses_met": hyp,
            "mode": mode,
        }
        if mode == "monte-carlo":
            out["seed"] = args.seed
        out.update(
            {
                "trials": stats.trials,
                "successes": stats.successes,
                "ambiguous": stats.ambiguous,
                "miscorrected": stats.miscorrected,
                "within_capacity": within,
                "verdict": verdict,
            }
        )
        print(json.dumps(out))
    else:
        print(
            f"code [{report.length}, {report.dim}, {report.min_distance}] over GF({prime.p}), "
            f"correction capacity {capacity}"
        )
        print(f"mode: {mode}" + (f" (seed {args.seed})" if mode == "monte-carlo" else ""))
        print(
            f"trials {stats.trials}: {stats.successes} success, "
            f"{stats.ambiguous} ambiguous, {stats.miscorrected} miscorrected"
        )
        if within:
            print(f"{verdict}: {failures} failures at t={args.t} (within capacity {capacity})")
        else:
            print(f"FAIL: t={args.t} exceeds correction capacity {capacity} ({failures} failures)")
    return EXIT_OK if verdict == "PASS" else EXIT_FAILURE


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GuardExceededError as exc:
        print(f"tcc: guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except MatrixFormatError as exc:
        print(f"tcc: matrix file error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, TypeError) as exc:
        print(f"tcc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
