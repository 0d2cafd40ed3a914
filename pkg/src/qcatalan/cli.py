"""Command-line front end: print q-objects and character tables, evaluate
expressions, and run verification suites over parameter sweeps with
JSON-lines reporting.

Exit codes: 0 when every executed check passes, 1 when any check fails,
2 on usage errors.  Report streams are deterministic: tasks are generated
in sorted parameter order and the writer preserves that order regardless
of worker completion order, so reruns are byte-identical apart from the
elapsed_ms timing field.
"""

from __future__ import annotations

import argparse
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Optional, TextIO

from . import charsum, congruence, qcomb, qdsl, rootid
from .cyclotomic import cyclotomic_poly
from .congruence import VerificationReport

SUITES = (
    "tauraso-phi",
    "liu-phi2",
    "main-phi2",
    "liu-petrov",
    "tauraso13",
    "lucas",
    "central-binom",
    "row-binom",
    "main3n",
    "main3n-new",
    "mid",
    "extan",
    "explicit",
    "even",
    "odd",
    "aux",
    "pfd",
    "trig",
    "sawtooth",
    "taoconj",
    "maj-oracle",
    "dsl-corpus",
)

FLOAT_SUITES = ("trig", "taoconj")

# default upper sweep bounds, chosen so `verify all` stays comfortably
# inside a coffee break; --n/--n-max override per run
DEFAULT_MAX = {
    "tauraso-phi": 60,
    "liu-phi2": 60,
    "main-phi2": 60,
    "liu-petrov": 40,
    "tauraso13": 15,
    "lucas": 30,
    "central-binom": 20,
    "row-binom": 25,
    "main3n": 10,
    "main3n-new": 8,
    "mid": 8,
    "extan": 20,
    "explicit": 12,
    "even": 8,
    "odd": 8,
    "aux": 8,
    "trig": 100,
    "sawtooth": 8,
    "taoconj": 13,  # modulus 2N-1 <= 25
}

LUCAS_COUNT = 500
LUCAS_SEED = 20240801
EXTAN_SEED = 777
EXTAN_SAMPLES = 5


@dataclass
class RunConfig:
    suites: list[str]
    n: Optional[int] = None
    n_max: Optional[int] = None
    j: str = "all"
    mode: str = "exact"
    tol: float = 1e-9
    jobs: int = 1
    out: Optional[str] = None
    as_json: bool = False


# ---------------------------------------------------------------------------
# task generation (deterministic, sorted parameter order)

Task = tuple[str, dict]


def _bounds(config: RunConfig, suite: str, lo: int) -> range:
    if config.n is not None:
        return range(max(lo, config.n), config.n + 1)
    hi = config.n_max if config.n_max is not None else DEFAULT_MAX[suite]
    return range(lo, hi + 1)


def _j_values(config: RunConfig, m: int) -> list[int]:
    if config.j == "all":
        return rootid.galois_orbit(m)
    j = int(config.j)
    if gcd(j, m) != 1:
        return []
    return [j]


def _extan_samples(m: int) -> list[Fraction]:
    rng = random.Random(EXTAN_SEED + m)
    out: list[Fraction] = []
    while len(out) < EXTAN_SAMPLES:
        z = Fraction(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice((1, -1))
        if z == 0 or z**m == 1 or z in out:
            continue
        out.append(z)
    return out


def generate_tasks(config: RunConfig, suite: str) -> Iterator[Task]:
    if suite == "tauraso-phi":
        for n in _bounds(config, suite, 2):
            yield (suite, {"n": n})
    elif suite == "liu-phi2":
        for n in _bounds(config, suite, 2):
            if n % 3 != 0:
                yield (suite, {"n": n})
    elif suite == "main-phi2":
        for n in _bounds(config, suite, 3):
            if n % 3 == 0:
                yield (suite, {"n": n})
    elif suite == "liu-petrov":
        for n in _bounds(config, suite, 2):
            yield (suite, {"n": n})
    elif suite == "tauraso13":
        for n in _bounds(config, suite, 1):
            yield (suite, {"n": n})
    elif suite == "lucas":
        rng = random.Random(LUCAS_SEED)
        hi = config.n_max if config.n_max is not None else DEFAULT_MAX[suite]
        for _ in range(LUCAS_COUNT):
            n = rng.randint(2, max(2, hi))
            yield (
                suite,
                {
                    "a": rng.randint(0, 4),
                    "b": rng.randint(0, n - 1),
                    "c": rng.randint(0, 4),
                    "d": rng.randint(0, n - 1),
                    "n": n,
                },
            )
    elif suite in ("central-binom", "row-binom"):
        for n in _bounds(config, suite, 2):
            for k in range(1, n):
                yield (suite, {"n": n, "k": k})
    elif suite in ("main3n", "main3n-new", "explicit"):
        for n in _bounds(config, suite, 1):
            for j in _j_values(config, 3 * n):
                yield (suite, {"n": n, "j": j})
    elif suite == "mid":
        for n in _bounds(config, suite, 2):
            yield (suite, {"n": n})
    elif suite == "extan":
        for m in _bounds(config, suite, 1):
            for z in _extan_samples(m):
                yield (suite, {"m": m, "z_num": z.numerator, "z_den": z.denominator})
    elif suite in ("even", "odd"):
        for N in _bounds(config, suite, 1):
            m = 6 * N if suite == "even" else 6 * N - 3
            for j in _j_values(config, m):
                yield (suite, {"N": N, "j": j})
    elif suite == "aux":
        for N in _bounds(config, suite, 1):
            for j in _j_values(config, 6 * N):
                yield (suite, {"N": N, "j": j, "even": 1})
            for j in _j_values(config, 6 * N - 3):
                yield (suite, {"N": N, "j": j, "even": 0})
    elif suite == "pfd":
        for code in (3, 6, 0):
            yield (suite, {"kind": code})
    elif suite == "trig":
        for N in _bounds(config, suite, 2):
            yield (suite, {"N": N})
    elif suite == "sawtooth":
        for N in _bounds(config, suite, 2):
            js = _j_values(config, 6 * N - 3)
            j = js[0] if js else None
            if j is None:
                continue
            for k in range(1, 2 * N - 1):
                yield (suite, {"N": N, "j": j, "k": k})
    elif suite == "taoconj":
        for N in _bounds(config, suite, 2):
            m = 2 * N - 1
            if m % 3 == 0:
                continue
            for idx, chi in enumerate(charsum.character_group(m)):
                if not chi.is_principal():
                    yield (suite, {"N": N, "m": m, "chi": idx})
    elif suite == "maj-oracle":
        hi = config.n_max if config.n_max is not None else 8
        for k in range(0, min(hi, qcomb.MAJ_ORACLE_BOUND) + 1):
            yield (suite, {"k": k})
    elif suite == "dsl-corpus":
        for entry in qdsl.shipped_corpus():
            yield (suite, {"line": entry.line_no})
    else:
        raise ValueError(f"unknown suite: {suite}")


# ---------------------------------------------------------------------------
# task execution (top-level function so process pools can pickle it)

_PFD_KIND = {3: "pfd3", 6: "pfd6", 0: "cube"}


def execute_task(task: tuple[str, dict, str, float]) -> VerificationReport:
    suite, p, mode, tol = task
    if suite == "tauraso-phi":
        return congruence.verify_tauraso_mod_phi(p["n"])
    if suite == "liu-phi2":
        return congruence.verify_liu_mod_phi2(p["n"])
    if suite == "main-phi2":
        return congruence.verify_main_theorem(p["n"])
    if suite == "liu-petrov":
        return congruence.verify_liu_petrov(p["n"])
    if suite == "tauraso13":
        return congruence.verify_tauraso13_identity(p["n"])
    if suite == "lucas":
        return congruence.verify_lucas_qbinom(p["a"], p["b"], p["c"], p["d"], p["n"])
    if suite == "central-binom":
        return congruence.verify_central_qbinom_congruence(p["n"], p["k"])
    if suite == "row-binom":
        return congruence.verify_row_qbinom_congruence(p["n"], p["k"])
    if suite == "main3n":
        return rootid.verify_main3n(p["n"], p["j"])
    if suite == "main3n-new":
        return rootid.verify_main3n_new(p["n"], p["j"])
    if suite == "mid":
        return rootid.verify_mid_identity(p["n"])
    if suite == "extan":
        return rootid.verify_extan(p["m"], Fraction(p["z_num"], p["z_den"]))
    if suite == "explicit":
        return rootid.verify_explicit(p["n"], p["j"])
    if suite == "even":
        return rootid.verify_even_case(p["N"], p["j"])
    if suite == "odd":
        return rootid.verify_odd_case(p["N"], p["j"])
    if suite == "aux":
        return rootid.verify_aux_properties(
            p["N"], p["j"], "even" if p["even"] else "odd"
        )
    if suite == "pfd":
        return rootid.verify_pfd(_PFD_KIND[p["kind"]])
    if suite == "trig":
        return rootid.verify_trig_identity(p["N"], tol)
    if suite == "sawtooth":
        return rootid.verify_sawtooth(p["N"], p["j"], p["k"])
    if suite == "taoconj":
        chi = charsum.character_group(p["m"])[p["chi"]]
        return charsum.verify_taoconj(p["N"], chi, mode, tol)
    if suite == "maj-oracle":
        return congruence.verify_maj_oracle(p["k"])
    if suite == "dsl-corpus":
        entry = next(
            e for e in qdsl.shipped_corpus() if e.line_no == p["line"]
        )
        return qdsl.run_corpus_entry(entry)
    raise ValueError(f"unknown suite: {suite}")


# ---------------------------------------------------------------------------
# the verify command


def run_verify(config: RunConfig, stdout: TextIO) -> int:
    if config.mode == "float":
        bad = [s for s in config.suites if s not in FLOAT_SUITES]
        if bad:
            print(
                f"float mode is only defined for {', '.join(FLOAT_SUITES)}; "
                f"not for {', '.join(bad)}",
                file=sys.stderr,
            )
            return 2
    tasks: list[tuple[str, dict, str, float]] = []
    for suite in config.suites:
        for sid, params in generate_tasks(config, suite):
            tasks.append((sid, params, config.mode, config.tol))

    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(execute_task, tasks, chunksize=8))
    else:
        reports = [execute_task(t) for t in tasks]

    out_file = open(config.out, "w", encoding="utf-8") if config.out else None
    try:
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for rep in reports:
            counts[rep.status] += 1
            if config.as_json:
                stdout.write(rep.to_json() + "\n")
            else:
                stdout.write(rep.summary() + "\n")
            if out_file is not None:
                out_file.write(rep.to_json() + "\n")
        if not config.as_json:
            stdout.write(
                f"total: {counts['pass']} passed, {counts['fail']} failed, "
                f"{counts['skipped']} skipped\n"
            )
    finally:
        if out_file is not None:
            out_file.close()
    return 0 if counts["fail"] == 0 else 1


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcatalan",
        description="Exact verification of q-Catalan congruences, "
        "root-of-unity identities and character sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_phi = sub.add_parser("phi", help="print the n-th cyclotomic polynomial")
    p_phi.add_argument("n", type=int)

    p_qbin = sub.add_parser("qbin", help="print the Gaussian binomial [n, k]")
    p_qbin.add_argument("n", type=int)
    p_qbin.add_argument("k", type=int)

    p_qcat = sub.add_parser("qcat", help="print the q-Catalan polynomial C_k")
    p_qcat.add_argument("k", type=int)

    p_csum = sub.add_parser(
        "catalan-sum", help="print the partial sum of q^k C_k over k < n"
    )
    p_csum.add_argument("n", type=int)

    p_chars = sub.add_parser("chars", help="list the Dirichlet characters mod m")
    p_chars.add_argument("--modulus", type=int, required=True)

    p_eval = sub.add_parser("eval", help="evaluate an identity-language expression")
    p_eval.add_argument("expr")
    target = p_eval.add_mutually_exclusive_group(required=True)
    target.add_argument(
        "--poly", action="store_true", help="evaluate to a polynomial in q"
    )
    target.add_argument(
        "--root",
        nargs=2,
        type=int,
        metavar=("M", "J"),
        help="evaluate in Q(zeta_M) with q = zeta_M^J",
    )
    p_eval.add_argument(
        "--bind",
        action="append",
        default=[],
        metavar="NAME=INT",
        help="bind an integer variable (repeatable)",
    )

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("suites", nargs="+", metavar="suite")
    p_verify.add_argument("--n", type=int, default=None, help="single parameter value")
    p_verify.add_argument("--n-max", type=int, default=None, help="sweep upper bound")
    p_verify.add_argument("--j", default="all", help="root exponent: all or an integer")
    p_verify.add_argument("--mode", choices=("exact", "float"), default="exact")
    p_verify.add_argument("--tol", type=float, default=1e-9)
    p_verify.add_argument("--json", action="store_true", help="JSON-lines to stdout")
    p_verify.add_argument("--out", default=None, help="write JSON-lines to a file")
    p_verify.add_argument("--jobs", type=int, default=1, help="parallel workers")
    return parser


def _cmd_chars(modulus: int, stdout: TextIO) -> int:
    chars = charsum.character_group(modulus)
    for idx, chi in enumerate(chars):
        e = chi.order
        values = []
        for a in range(1, modulus):
            t = chi.value_exponent(a)
            if t is None:
                values.append("0")
            elif t == 0:
                values.append("1")
            elif 2 * t == e:
                values.append("-1")
            else:
                values.append(f"zeta{e}^{t}")
        stdout.write(
            f"chi[{idx}] exponents={list(chi.exponents)} order={e} "
            f"conductor={chi.conductor()} values on 1..{modulus - 1}: "
            + " ".join(values)
            + "\n"
        )
    return 0


def _cmd_eval(args, stdout: TextIO) -> int:
    try:
        expr = qdsl.parse(args.expr)
        bindings: dict[str, int] = {}
        for spec in args.bind:
            name, _, value = spec.partition("=")
            if not name or not value.lstrip("+-").isdigit():
                print(f"bad binding: {spec!r}", file=sys.stderr)
                return 2
            bindings[name.strip()] = int(value)
        if args.poly:
            stdout.write(qdsl.eval_poly(expr, bindings).render() + "\n")
        else:
            m, j = args.root
            stdout.write(qdsl.eval_cyclo(expr, m, j, bindings).render() + "\n")
        return 0
    except (qdsl.ParseError, qdsl.EvalError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors already print a message
        return exc.code if isinstance(exc.code, int) else 2
    stdout = sys.stdout
    try:
        if args.command == "phi":
            stdout.write(cyclotomic_poly(args.n).render() + "\n")
            return 0
        if args.command == "qbin":
            stdout.write(qcomb.gaussian_binomial(args.n, args.k).render() + "\n")
            return 0
        if args.command == "qcat":
            stdout.write(qcomb.q_catalan(args.k).render() + "\n")
            return 0
        if args.command == "catalan-sum":
            stdout.write(qcomb.catalan_sum(args.n).render() + "\n")
            return 0
        if args.command == "chars":
            return _cmd_chars(args.modulus, stdout)
        if args.command == "eval":
            return _cmd_eval(args, stdout)
        if args.command == "verify":
            suites = list(args.suites)
            if "all" in suites:
                suites = list(SUITES)
            unknown = [s for s in suites if s not in SUITES]
            if unknown:
                print(
                    f"unknown suite(s): {', '.join(unknown)}; "
                    f"choose from {', '.join(SUITES)} or all",
                    file=sys.stderr,
                )
                return 2
            config = RunConfig(
                suites=suites,
                n=args.n,
                n_max=args.n_max,
                j=args.j,
                mode=args.mode,
                tol=args.tol,
                jobs=args.jobs,
                out=args.out,
                as_json=args.json,
            )
            return run_verify(config, stdout)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    parser.error("no command")
    return 2


if __name__ == "__main__":
    sys.exit(main())
