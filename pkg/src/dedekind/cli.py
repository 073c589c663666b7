"""Command-line front end.

Subcommands:
    sum     evaluate S(a, c) for a chosen context and formula
    verify  run a verification suite and report per-case residuals
    sweep   second-moment growth sweep, CSV on stdout or to a file
    chars   list the characters mod q with conductor/parity/primitivity

Exit codes: 0 success, 1 verification failure, 2 configuration error,
3 arithmetic precondition failure (e.g. gcd(a, c) > 1).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from random import Random

from . import analytic, chargroup, moments, sums

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_PRECONDITION = 3


class SelectorError(Exception):
    """A character index or other selector did not resolve."""


@dataclass
class RunConfig:
    """Parsed invocation: one subcommand plus its knobs."""

    subcommand: str
    q1: int = 1
    q2: int = 1
    c: int = 0
    chi1: int | None = None
    chi2: int | None = None
    a: str = "1"
    formula: str = "direct"
    fmt: str = "text"
    tol: float | None = None
    seed: int = 0
    trials: int = 100
    suite: str = ""
    cmax: int = 0
    pmax: int = 101
    nmax: int = 100
    q: int = 1
    out: str = ""
    method: str = "brute"


def _round15(obj):
    """Clamp every float in a JSON-ready structure to 15 significant digits."""
    if isinstance(obj, float):
        return float(f"{obj:.15g}")
    if isinstance(obj, dict):
        return {k: _round15(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round15(v) for v in obj]
    return obj


def _fmt_value(z) -> str:
    z = complex(z)
    if abs(z.imag) < 1e-12:
        return f"{z.real:.6g}"
    return f"{z.real:.6g}{z.imag:+.6g}j"


def _resolve_char(q: int, index: int) -> chargroup.DirichletCharacter:
    chars = chargroup.characters(q)
    if not 0 <= index < len(chars):
        raise SelectorError(f"character index {index} out of range for modulus {q} (phi = {len(chars)})")
    return chars[index]


def _resolve_pair(cfg: RunConfig) -> tuple[chargroup.DirichletCharacter, chargroup.DirichletCharacter]:
    """Explicit indices if given; otherwise the first nontrivial primitive pair
    with even product parity, falling back to the principal characters."""
    if cfg.chi1 is not None and cfg.chi2 is not None:
        return _resolve_char(cfg.q1, cfg.chi1), _resolve_char(cfg.q2, cfg.chi2)
    pairs = _primitive_pairs(cfg.q1, cfg.q2, cfg.chi1, cfg.chi2)
    if pairs:
        return pairs[0]
    return _resolve_char(cfg.q1, cfg.chi1 or 0), _resolve_char(cfg.q2, cfg.chi2 or 0)


def _context_from(cfg: RunConfig) -> sums.DedekindContext:
    chi1, chi2 = _resolve_pair(cfg)
    if cfg.c % (cfg.q1 * cfg.q2):
        raise SelectorError(f"c = {cfg.c} must be a multiple of q1*q2 = {cfg.q1 * cfg.q2}")
    return sums.make_context(chi1, chi2, cfg.c)


_FORMULAS = {
    "direct": sums.s_direct,
    "b1chi": sums.s_b1chi,
    "single": sums.s_single_b1,
    "cotangent": sums.s_cotangent,
}


def cmd_sum(cfg: RunConfig) -> int:
    ctx = _context_from(cfg)
    func = _FORMULAS[cfg.formula]
    if cfg.a == "all":
        a_list = ctx.units()
    else:
        a = int(cfg.a)
        if math.gcd(a, ctx.c) != 1:
            print(f"error: gcd(a, c) must be 1 (a = {a}, c = {ctx.c})", file=sys.stderr)
            return EXIT_PRECONDITION
        a_list = [a]
    values = [(a, complex(func(ctx, a))) for a in a_list]
    if cfg.fmt == "json":
        payload = {
            "context": {"q1": cfg.q1, "q2": cfg.q2, "chi1": list(ctx.chi1.exponents), "chi2": list(ctx.chi2.exponents), "c": ctx.c},
            "formula": cfg.formula,
            "values": [{"a": a, "re": z.real, "im": z.imag} for a, z in values],
        }
        print(json.dumps(_round15(payload)))
    elif cfg.fmt == "csv":
        print("a,re,im")
        for a, z in values:
            print(f"{a},{z.real:.15g},{z.imag:.15g}")
    else:
        for a, z in values:
            prefix = f"a={a}: " if cfg.a == "all" else ""
            print(f"{prefix}{_fmt_value(z)}")
    return EXIT_OK


def cmd_chars(cfg: RunConfig) -> int:
    rows = []
    for i, chi in enumerate(chargroup.characters(cfg.q)):
        rows.append(
            {
                "index": i,
                "exponents": list(chi.exponents),
                "conductor": chi.conductor(),
                "parity": chi.parity(),
                "primitive": chi.is_primitive,
            }
        )
    if cfg.fmt == "json":
        print(json.dumps({"q": cfg.q, "characters": rows}))
    elif cfg.fmt == "csv":
        print("index,exponents,conductor,parity,primitive")
        for r in rows:
            exps = ";".join(map(str, r["exponents"]))
            print(f"{r['index']},{exps},{r['conductor']},{r['parity']},{int(r['primitive'])}")
    else:
        print(f"characters mod {cfg.q} (phi = {len(rows)}):")
        for r in rows:
            exps = ",".join(map(str, r["exponents"]))
            tag = "primitive" if r["primitive"] else f"induced (conductor {r['conductor']})"
            par = "even" if r["parity"] == 1 else "odd"
            print(f"  [{r['index']}] exps=({exps}) {par}, {tag}")
    return EXIT_OK


def cmd_sweep(cfg: RunConfig) -> int:
    chi1, chi2 = _resolve_pair(cfg)
    level = cfg.q1 * cfg.q2
    c_list = [level * k for k in range(1, cfg.cmax // level + 1)] if cfg.cmax >= level else []
    rows, slope = moments.bounds_sweep(chi1, chi2, c_list, method=cfg.method)
    csv_text = moments.sweep_csv(rows)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    print(f"slope: {slope:.6g}", file=sys.stderr)
    return EXIT_OK


# -- verification suites ----------------------------------------------------


def _primitive_pairs(q1: int, q2: int, chi1: int | None, chi2: int | None):
    """Nontrivial primitive pairs with even product parity for the given moduli."""
    cands1 = [_resolve_char(q1, chi1)] if chi1 is not None else [
        ch for ch in chargroup.characters(q1) if ch.is_primitive and not ch.is_principal
    ]
    cands2 = [_resolve_char(q2, chi2)] if chi2 is not None else [
        ch for ch in chargroup.characters(q2) if ch.is_primitive and not ch.is_principal
    ]
    return [(a, b) for a in cands1 for b in cands2 if a.parity() * b.parity() == 1]


class _Report:
    def __init__(self):
        self.failures = 0
        self.cases = 0

    def check(self, name: str, residual: float, tol: float) -> None:
        self.cases += 1
        ok = residual < tol
        if not ok:
            self.failures += 1
        print(f"{'ok  ' if ok else 'FAIL'} {name}: residual={residual:.3e} tol={tol:.1e}")

    def finish(self) -> int:
        status = "pass" if self.failures == 0 else "fail"
        print(f"{self.cases} checks, {self.failures} failures: {status}")
        return EXIT_OK if self.failures == 0 else EXIT_VERIFY_FAILED


def _suite_walum(cfg: RunConfig, rep: _Report) -> None:
    tol = cfg.tol or 1e-8
    for p in range(3, cfg.pmax + 1, 2):
        if not chargroup.factorize(p).factors == ((p, 1),):
            continue
        lhs = float(moments.walum_lhs(p))
        rhs = moments.walum_rhs(p)
        rep.check(f"walum p={p}", abs(lhs - rhs) / lhs, tol)


def _suite_moment(cfg: RunConfig, rep: _Report) -> None:
    tol = cfg.tol or 1e-7
    level = cfg.q1 * cfg.q2
    cmax = cfg.cmax or 3 * level
    pairs = _primitive_pairs(cfg.q1, cfg.q2, cfg.chi1, cfg.chi2)
    if not pairs:
        raise SelectorError(f"no valid primitive pairs for q1={cfg.q1}, q2={cfg.q2}")
    for chi1, chi2 in pairs:
        for c in range(level, cmax + 1, level):
            r = moments.second_moment_closed(sums.make_context(chi1, chi2, c))
            rep.check(f"moment {chi1!r} {chi2!r} c={c}", r.residual, tol)


def _suite_fourier(cfg: RunConfig, rep: _Report) -> None:
    tol = cfg.tol or 1e-7
    level = cfg.q1 * cfg.q2
    cmax = cfg.cmax or 2 * level
    for chi1, chi2 in _primitive_pairs(cfg.q1, cfg.q2, cfg.chi1, cfg.chi2):
        for c in range(level, cmax + 1, level):
            ctx = sums.make_context(chi1, chi2, c)
            worst = 0.0
            worst_zero = 0.0
            for xi in chargroup.characters(c):
                diff = abs(moments.fourier_brute(ctx, xi) - moments.fourier_closed(ctx, xi))
                worst = max(worst, diff)
                if xi.parity() * chi1.parity() == 1:
                    worst_zero = max(worst_zero, abs(moments.fourier_brute(ctx, xi)))
            rep.check(f"fourier {chi1!r} {chi2!r} c={c}", worst, tol * chargroup.euler_phi(c))
            rep.check(f"fourier-zero-branch {chi1!r} {chi2!r} c={c}", worst_zero, 1e-8)


def _suite_cotangent(cfg: RunConfig, rep: _Report) -> None:
    tol = cfg.tol or 1e-8
    ctx = _context_from(cfg) if cfg.c else None
    level = cfg.q1 * cfg.q2
    contexts = [ctx] if ctx else [
        sums.make_context(a, b, level) for a, b in _primitive_pairs(cfg.q1, cfg.q2, cfg.chi1, cfg.chi2)
    ]
    for ctx in contexts:
        for a in ctx.units():
            ref = complex(sums.s_direct(ctx, a))
            worst = max(
                abs(ref - complex(sums.s_b1chi(ctx, a))),
                abs(ref - complex(sums.s_single_b1(ctx, a))),
                abs(ref - complex(sums.s_cotangent(ctx, a))),
            )
            rep.check(f"four-form c={ctx.c} a={a}", worst, tol)


def _suite_symmetry(cfg: RunConfig, rep: _Report) -> None:
    tol = cfg.tol or 1e-9
    ctx = _context_from(cfg)
    parity_product = ctx.chi1.parity() * ctx.chi2.parity()
    for a in ctx.units():
        if parity_product == -1:
            rep.check(f"vanishing c={ctx.c} a={a}", abs(complex(sums.s_direct(ctx, a))), tol)
            continue
        rep.check(f"negate c={ctx.c} a={a}", abs(sums.negate_residual(ctx, a)), tol)
        rep.check(f"invert c={ctx.c} a={a}", abs(sums.invert_residual(ctx, a)), tol)
        for alpha in (2, 3):
            rep.check(f"scale c={ctx.c} a={a} alpha={alpha}", abs(sums.scale_residual(ctx, a, alpha)), tol)


def _suite_crossed(cfg: RunConfig, rep: _Report) -> None:
    tol = cfg.tol or 1e-8
    ctx = _context_from(cfg)
    rng = Random(cfg.seed)
    for i in range(cfg.trials):
        g1 = sums.random_gamma0(ctx.level, rng)
        g2 = sums.random_gamma0(ctx.level, rng)
        rep.check(f"crossed trial={i}", abs(sums.crossed_hom_residual(ctx, g1, g2)), tol)


def _suite_counts(cfg: RunConfig, rep: _Report) -> None:
    for n in range(1, cfg.nmax + 1):
        enumerated = sum(1 for ch in chargroup.characters(n) if ch.is_primitive)
        rep.check(f"phi-star n={n}", abs(enumerated - chargroup.phi_star(n)), 0.5)
    for pe in (3, 5, 7, 9, 11, 13, 25, 27, 49, 81, 125, 243):
        bound = chargroup.phi_star(pe) / 2 - 1
        for sign in (1, -1):
            size = chargroup.count_primitive_with_parity(pe, sign)
            rep.check(f"parity-class p^n={pe} sign={sign:+d}", max(0.0, bound - size), 0.5)


_SUITES = {
    "walum": _suite_walum,
    "moment": _suite_moment,
    "fourier": _suite_fourier,
    "cotangent": _suite_cotangent,
    "symmetry": _suite_symmetry,
    "crossed": _suite_crossed,
    "counts": _suite_counts,
}


def cmd_verify(cfg: RunConfig) -> int:
    rep = _Report()
    _SUITES[cfg.suite](cfg, rep)
    return rep.finish()


# -- argument parsing --------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dedekind", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    subs = parser.add_subparsers(dest="subcommand", required=True)

    def add_context_args(p):
        p.add_argument("--q1", type=int, default=1, help="modulus of chi1")
        p.add_argument("--q2", type=int, default=1, help="modulus of chi2")
        p.add_argument("--chi1", type=int, default=None, help="index of chi1 (see `chars`); default: first valid primitive")
        p.add_argument("--chi2", type=int, default=None, help="index of chi2")
        p.add_argument("--c", type=int, default=0, help="modulus c (multiple of q1*q2)")

    p_sum = subs.add_parser("sum", help="evaluate S(a, c)")
    add_context_args(p_sum)
    p_sum.add_argument("--a", default="1", help="integer a coprime to c, or 'all'")
    p_sum.add_argument("--formula", choices=sorted(_FORMULAS), default="direct")
    p_sum.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")

    p_verify = subs.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=sorted(_SUITES), required=True)
    add_context_args(p_verify)
    p_verify.add_argument("--cmax", type=int, default=0)
    p_verify.add_argument("--pmax", type=int, default=101)
    p_verify.add_argument("--nmax", type=int, default=100)
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--tol", type=float, default=None)

    p_sweep = subs.add_parser("sweep", help="second-moment growth sweep (CSV)")
    add_context_args(p_sweep)
    p_sweep.add_argument("--cmax", type=int, required=True)
    p_sweep.add_argument("--method", choices=("brute", "closed"), default="brute")
    p_sweep.add_argument("--out", default="")

    p_chars = subs.add_parser("chars", help="list characters mod q")
    p_chars.add_argument("--q", type=int, required=True)
    p_chars.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    return parser


def _config_from(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(subcommand=ns.subcommand)
    for name in vars(cfg):
        if hasattr(ns, name):
            setattr(cfg, name, getattr(ns, name))
    if cfg.subcommand == "sum" and not cfg.c:
        cfg.c = cfg.q1 * cfg.q2
    if cfg.tol is not None and cfg.tol <= 0:
        raise SelectorError("tolerance must be positive")
    return cfg


_COMMANDS = {"sum": cmd_sum, "verify": cmd_verify, "sweep": cmd_sweep, "chars": cmd_chars}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = _config_from(ns)
        return _COMMANDS[cfg.subcommand](cfg)
    except (SelectorError, moments.HypothesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        if "gcd" in str(exc):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PRECONDITION
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
