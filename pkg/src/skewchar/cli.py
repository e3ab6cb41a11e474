"""Command-line interface.

Partitions are comma-separated integers (``--lambda 2,1,0``; ``--lambda=`` is
empty).  With ``--doubled`` every part is read as twice its value, which is
how half-integers are entered.  Polynomials print in a readable form, or in
the canonical JSON schema with ``--json``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import characters, fock, interp, partitions, verify
from .genseries import Kind, SeriesFamily
from .ring import LaurentPoly, determinant, exact_div, ring_arith

MAX_N = 4
MAX_DEG = 12
MAX_SIZE = 12


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _parts(text, doubled=False):
    if text is None:
        return None
    text = text.strip()
    if text in ("", "-", "()"):
        return ()
    try:
        raw = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse partition {text!r}") from None
    if doubled:
        vals = [Fraction(v, 2) for v in raw]
        vals = tuple(int(v) if v.denominator == 1 else v for v in vals)
    else:
        vals = tuple(raw)
    if any(v < 0 for v in vals) or any(vals[i] < vals[i + 1] for i in range(len(vals) - 1)):
        raise UsageError(f"not a partition: {text!r}")
    if sum(vals) > MAX_SIZE:
        raise UsageError(f"partition size {sum(vals)} exceeds the bound {MAX_SIZE}")
    return vals


def _ints_only(lam, flag="--lambda"):
    if lam is None:
        return None
    if any(isinstance(v, Fraction) for v in lam):
        raise UsageError(f"{flag} must have integer parts here")
    return lam


def _words(text):
    if text is None:
        return ()
    text = text.strip()
    if text in ("", "-"):
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse word {text!r}") from None


def _bound(name, value, hi, lo=0):
    if value is not None and not lo <= value <= hi:
        raise UsageError(f"{name}={value} outside the allowed range [{lo}, {hi}]")
    return value


def _emit(value, as_json: bool, out):
    if as_json:
        if hasattr(value, "canonical_json"):
            out.write(value.canonical_json() + "\n")
        else:
            out.write(_dump(value) + "\n")
    else:
        out.write(f"{value}\n")


# handlers -----------------------------------------------------------------

def cmd_char(a, out):
    lam = _ints_only(_parts(a.lam, a.doubled))
    mu = _ints_only(_parts(a.mu, a.doubled), "--mu")
    _bound("--n", a.n, MAX_N, 1)
    if a.method == "weyl":
        fn = {"sp": characters.sp_weyl, "o": characters.o_weyl}.get(a.family)
        if fn is None:
            raise UsageError("the weyl method is available for sp and o")
        value = fn(lam, a.n)
    else:
        value = characters.character(a.family, a.method, lam, a.n, mu=mu, s=a.s)
    _emit(value, a.json, out)
    return 0


def cmd_gt(a, out):
    lam = _ints_only(_parts(a.lam, a.doubled))
    mu = _ints_only(_parts(a.mu, a.doubled), "--mu") or ()
    _bound("--n", a.n, MAX_N, 1)
    chains = list(partitions.gt_chains(lam, mu, a.n))
    if a.count:
        out.write(f"{len(chains)}\n")
    elif a.json:
        for c in chains:
            out.write(_dump(c.to_json()) + "\n")
    else:
        for c in chains:
            out.write(" > ".join(str(r) for r in reversed(c.rows)) + "\n")
    return 0


def cmd_straighten(a, out):
    m = fock.ModeMonomial(a.side, _words(a.modes))
    el = fock.straighten_rewrite(m) if a.engine == "rewrite" else fock.straighten(m)
    out.write(_dump(el.to_json()) + "\n")
    return 0


def cmd_pair(a, out):
    mu, lam = _words(a.bra), _words(a.ket)
    if a.mode == "labels":
        value = fock.pair(fock.straighten(fock.bra(mu)), fock.straighten(fock.ket(lam)))
    elif a.mode == "words":
        value = fock.pair_words(mu, lam) if a.engine == "algebra" else fock.vacuum_expectation(mu, lam)
    elif a.mode == "dual":
        value = (fock.dual_conjugate_closed_form(mu, lam) if a.engine == "closed"
                 else fock.dual_conjugate_pair(mu, lam))
    else:
        raise UsageError(f"unknown pairing mode {a.mode!r}")
    out.write(f"{value}\n")
    return 0


def cmd_interp(a, out):
    lam = _ints_only(_parts(a.lam, a.doubled))
    _bound("--n", a.n, MAX_N, 1)
    if a.alpha == "formal":
        alpha = None
    else:
        try:
            alpha = int(a.alpha)
        except ValueError:
            raise UsageError("--alpha must be 'formal' or an integer") from None
    if a.family == "BD_eps":
        value = interp.bd_epsilon_expansion(lam, a.n, alpha)
    else:
        value = interp.interpolating(a.family, lam, a.n, alpha)
    _emit(value, a.json, out)
    return 0


def cmd_dual(a, out):
    mu = _ints_only(_parts(a.mu, a.doubled), "--mu")
    nu = _ints_only(_parts(a.nu, a.doubled), "--nu")
    _bound("--k", a.k, MAX_N, 1)
    _bound("--deg", a.deg, MAX_DEG)
    value = characters.dual_skew_fn(a.kind, mu, nu, a.k, a.deg)
    _emit(value, a.json, out)
    return 0


def cmd_series(a, out):
    _bound("--n", a.n, MAX_N, 1)
    if a.deg is not None:
        _bound("--deg", a.deg, MAX_DEG)
    if abs(a.index) > MAX_SIZE:
        raise UsageError(f"--index outside [-{MAX_SIZE}, {MAX_SIZE}]")
    fam = SeriesFamily(Kind(a.kind), a.n, a.deg)
    _emit(fam.coeff(a.index), a.json, out)
    return 0


def cmd_partitions(a, out):
    lam = _parts(a.lam, a.doubled)
    if a.op == "list":
        _bound("--size", a.size, MAX_SIZE)
        if a.length is not None:
            rows = [list(p) for p in partitions.generalized_partitions(a.length, a.size)]
        else:
            rows = [list(p) for p in partitions.partitions(a.size, a.max_len)]
        out.write(_dump(rows) + "\n")
    elif a.op == "conjugate":
        out.write(_dump(partitions.conjugate(lam).to_json()) + "\n")
    elif a.op == "interlacings":
        res = partitions.interlacings(lam, half_last=a.half_last)
        out.write(_dump([p.to_json() for p in res]) + "\n")
    elif a.op == "interlacing-below":
        out.write(_dump([list(p) for p in characters.interlacing_below(_ints_only(lam))]) + "\n")
    elif a.op == "epsilon":
        out.write(_dump([[p.to_json(), k] for p, k in partitions.epsilon_subtractions(lam)]) + "\n")
    elif a.op == "contains":
        mu = _parts(a.mu, a.doubled)
        out.write(_dump(partitions.contains(lam, mu)) + "\n")
    else:
        raise UsageError(f"unknown partitions op {a.op!r}")
    return 0


def _load_poly(text):
    try:
        return LaurentPoly.from_json(json.loads(text))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read polynomial JSON: {exc}") from None


def cmd_ring(a, out):
    if a.op == "det":
        try:
            rows = [[LaurentPoly.from_json(c) for c in row] for row in json.loads(a.matrix)]
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read matrix JSON: {exc}") from None
        if not rows:
            raise UsageError("empty matrix; its determinant needs a variable count")
        value = determinant(rows, method=a.method, one=LaurentPoly.const(rows[0][0].nvars, 1))
    else:
        x = _load_poly(a.a)
        if a.op == "div":
            value = exact_div(x, _load_poly(a.b))
        elif a.op == "neg":
            value = ring_arith(x, None, "neg")
        else:
            value = ring_arith(x, _load_poly(a.b), a.op)
    _emit(value, a.json, out)
    return 0


def cmd_verify(a, out):
    _bound("--n", a.n, MAX_N, 1)
    _bound("--k", a.k, MAX_N, 1)
    _bound("--deg", a.deg, MAX_DEG)
    _bound("--threads", a.threads, 64, 1)
    if a.list:
        for name in sorted(verify.SUITES):
            out.write(f"{name}\t{verify.SUITES[name].doc}\n")
        return 0
    if not a.suite:
        raise UsageError("--suite is required")
    lam = _ints_only(_parts(a.lam, a.doubled))
    mu = _ints_only(_parts(a.mu, a.doubled), "--mu")
    overrides = dict(n=a.n, k=a.k, deg=a.deg, lam=lam, mu=mu, l=a.l, kind=a.kind,
                     case=a.case, which=a.which, length=a.length)
    try:
        reports = verify.run_suite(a.suite, mutate=a.mutate, threads=a.threads, **overrides)
    except TypeError as exc:
        raise UsageError(f"bad parameters for suite {a.suite}: {exc}") from None
    failed = 0
    for r in reports:
        failed += not r.passed
        if a.json:
            out.write(_dump(r.to_json(timing=a.timing)) + "\n")
        else:
            line = f"{r.status.upper():4s} {r.suite} {_dump(r.params)}"
            if a.timing:
                line += f" {r.wall_time:.3f}s"
            out.write(line + "\n")
    if not a.json:
        out.write(f"{len(reports) - failed}/{len(reports)} instances passed\n")
    return 1 if failed else 0


# parser -------------------------------------------------------------------

# command -> library operations it exposes
REGISTRY = {
    "char": ["characters.character", "characters.so_bialternant", "characters.so_jt", "characters.so_skew_jt",
             "characters.so_skew_dual_jt", "characters.so_skew_gt", "characters.schur", "characters.skew_schur",
             "characters.sp_char", "characters.o_char", "characters.sp_weyl", "characters.o_weyl"],
    "gt": ["partitions.gt_chains"],
    "straighten": ["fock.straighten", "fock.straighten_rewrite", "fock.ket", "fock.bra", "fock.zero"],
    "pair": ["fock.pair", "fock.pair_words", "fock.vacuum_expectation", "fock.dual_conjugate_pair",
             "fock.dual_conjugate_closed_form"],
    "interp": ["interp.interpolating", "interp.s_BD", "interp.s_BC", "interp.s_CD", "interp.bd_epsilon_expansion"],
    "dual-skew": ["characters.dual_skew_fn"],
    "series": ["genseries.coeff"],
    "partitions": ["partitions.partitions", "partitions.partitions_upto", "partitions.generalized_partitions",
                   "partitions.conjugate", "partitions.conjugate_parts", "partitions.interlacings",
                   "characters.interlacing_below", "partitions.epsilon_subtractions", "partitions.contains",
                   "partitions.as_partition", "partitions.as_ints", "partitions.pad", "partitions.strip"],
    "ring": ["ring.ring_arith", "ring.exact_div", "ring.determinant"],
    "verify": ["verify.run_suite", "verify.run_instance", "verify.grid"] + [f"verify.{n}" for n in verify.SUITES],
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_partition_flags(p, mu=False):
    p.add_argument("--lambda", dest="lam", default="", help="outer partition, e.g. 2,1")
    if mu:
        p.add_argument("--mu", default=None, help="inner partition")
    p.add_argument("--doubled", action="store_true", help="parts are given doubled")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="skewchar", description="Exact classical-group characters and identity checks.")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("char", help="evaluate a character")
    p.add_argument("--family", choices=characters.FAMILIES, required=True)
    p.add_argument("--method", default="jt",
                   choices=["bialternant", "jt", "jacobi_trudi", "skew_jt", "dual_jt", "gt_sum", "transition", "weyl"])
    _add_partition_flags(p, mu=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=None, help="column bound for dual_jt")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("gt", help="enumerate odd-orthogonal GT chains")
    _add_partition_flags(p, mu=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gt)

    p = sub.add_parser("straighten", help="normal form of a mode monomial")
    p.add_argument("--side", choices=[fock.KET, fock.BRA], required=True)
    p.add_argument("--modes", default="")
    p.add_argument("--engine", choices=["closed", "rewrite"], default="closed")
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("pair", help="pairings of bra and ket words")
    p.add_argument("--bra", default="")
    p.add_argument("--ket", default="")
    p.add_argument("--mode", choices=["labels", "words", "dual"], default="words")
    p.add_argument("--engine", choices=["algebra", "direct", "straighten", "closed"], default="algebra")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("interp", help="interpolating Schur polynomials")
    p.add_argument("--family", choices=["BD", "BC", "CD", "BD_eps"], required=True)
    _add_partition_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", default="formal")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("dual-skew", help="SO*/SP*/O* dual skew functions")
    p.add_argument("--kind", choices=characters.DUAL_KINDS, required=True)
    p.add_argument("--mu", default="")
    p.add_argument("--nu", default="")
    p.add_argument("--doubled", action="store_true")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("series", help="one coefficient of a generating function")
    p.add_argument("--kind", choices=[k.value for k in Kind], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--deg", type=int, default=None, help="degree cap (kind f only)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("partitions", help="partition utilities")
    p.add_argument("--op", choices=["list", "conjugate", "interlacings", "interlacing-below", "epsilon", "contains"],
                   required=True)
    _add_partition_flags(p, mu=True)
    p.add_argument("--size", type=int, default=0)
    p.add_argument("--length", type=int, default=None)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--half-last", action="store_true")
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("ring", help="arithmetic on polynomial JSON")
    p.add_argument("--op", choices=["add", "sub", "mul", "neg", "div", "det"], required=True)
    p.add_argument("--a", default=None)
    p.add_argument("--b", default=None)
    p.add_argument("--matrix", default=None, help="JSON array of rows of polynomials")
    p.add_argument("--method", choices=["auto", "cofactor", "bareiss"], default="auto")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("--suite", choices=sorted(verify.SUITES))
    p.add_argument("--list", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--deg", type=int)
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--mu", default=None)
    p.add_argument("--doubled", action="store_true")
    p.add_argument("--l", type=int)
    p.add_argument("--kind")
    p.add_argument("--case")
    p.add_argument("--which", type=int)
    p.add_argument("--length", type=int)
    p.add_argument("--mutate", action="store_true", help="perturb every right-hand side")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall times (output no longer reproducible)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("a subcommand is required")
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"skewchar: error: {exc}\n")
        return 2
    except ValueError as exc:
        err.write(f"skewchar: error: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
