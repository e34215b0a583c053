"""Command-line front end: ``skewdna <command> [options]``.

Exit status is 0 when every requested check passes, 1 when a check fails
and 2 on input errors.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import codes, worked
from .dna import build_codebook, encode_codeword, write_fasta
from .gf import build_field, format_bitpoly, parse_bitpoly
from .ring import Ring, RingElement, build_ring
from .skewpoly import SkewPoly, right_divmod
from .text import format_message, format_poly, parse_poly_expr, parse_ring_expr
from .worked import Check

COMMANDS = (
    "field-table",
    "ring-info",
    "check-divisor",
    "verify-example",
    "search",
    "export",
    "verify-reversible",
    "codebook",
)

# key = value config entries; anything given on the command line wins
_CONFIG_KEYS = {
    "k": int,
    "s": int,
    "modulus": str,
    "n": int,
    "g": str,
    "seed": int,
    "mode": str,
    "trials": int,
    "budget": int,
    "cap": int,
    "codebook": str,
}
_DEFAULTS = {
    "k": 1,
    "s": 1,
    "seed": 0,
    "mode": "sampled",
    "trials": 1000,
    "budget": 1 << 20,
    "cap": 1 << 20,
    "codebook": "generated",
}


@dataclass
class JobConfig:
    command: str
    k: int = 1
    s: int = 1
    modulus: str | None = None
    n: int | None = None
    g: str | None = None
    seed: int = 0
    mode: str = "sampled"
    trials: int = 1000
    budget: int = 1 << 20
    cap: int = 1 << 20
    codebook: str = "generated"


def load_config(path: str | Path) -> dict:
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (p.strip() for p in line.split("=", 1))
        if key not in _CONFIG_KEYS:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = _CONFIG_KEYS[key](value)
    return out


def _common(p: argparse.ArgumentParser, code: bool = False) -> None:
    p.add_argument("--k", type=int, help="field is GF(4^(2k)) (default 1)")
    p.add_argument("--s", type=int, help="number of u variables (default 1)")
    p.add_argument("--modulus", help="field modulus, e.g. 'y^4+y+1' or 0x13")
    p.add_argument("--config", help="key = value job file")
    p.add_argument("--csv", help="write check,name,status,counterexample rows here")
    if code:
        p.add_argument("--n", type=int, help="even code length")
        p.add_argument("--g", help="generator polynomial expression")
        p.add_argument("--seed", type=int)
        p.add_argument("--codebook", choices=("generated", "reference"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skewdna", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-table", help="list field elements with their theta images")
    _common(p)

    p = sub.add_parser("ring-info", help="tuple table, monomials and idempotents of R_{k,s}")
    _common(p)

    p = sub.add_parser("check-divisor", help="test whether g right-divides x^n - 1")
    _common(p, code=True)

    p = sub.add_parser("verify-example", help="re-derive a worked example")
    _common(p)
    p.add_argument("name", choices=worked.NAMES)
    p.add_argument("--modulus-sweep", action="store_true", help="repeat under every primitive modulus")

    p = sub.add_parser("search", help="search monic symmetric right divisors of x^n - 1")
    _common(p)
    p.add_argument("--n", type=int)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--symmetry", choices=("palindromic", "theta-palindromic", "any"), default="any")
    p.add_argument(
        "--coeffs",
        default="all",
        help="'all' ring elements, 'field' constants, 'fixed' theta-fixed constants, "
        "or ';'-separated expressions",
    )
    p.add_argument("--budget", type=int)

    p = sub.add_parser("export", help="write every (or sampled) codeword as FASTA")
    _common(p, code=True)
    p.add_argument("--fasta", required=True)
    p.add_argument("--cap", type=int)
    p.add_argument("--sample", type=int, help="export this many random codewords instead")

    p = sub.add_parser("verify-reversible", help="check DNA reverse-closure of a code")
    _common(p, code=True)
    p.add_argument("--mode", choices=("exhaustive", "sampled"))
    p.add_argument("--trials", type=int)
    p.add_argument("--cap", type=int)

    p = sub.add_parser("codebook", help="dump the element -> k-mer table")
    _common(p)
    p.add_argument("--source", choices=("generated", "reference"), default="generated")
    p.add_argument("--out", help="write the dump to this file instead of stdout")
    return ap


def resolve(args: argparse.Namespace) -> JobConfig:
    cfg = load_config(args.config) if getattr(args, "config", None) else {}
    values = {}
    for key in _CONFIG_KEYS:
        v = getattr(args, key, None)
        if v is None:
            v = cfg.get(key, _DEFAULTS.get(key))
        values[key] = v
    job = JobConfig(command=args.command, **values)
    if args.command in ("check-divisor", "export", "verify-reversible", "search"):
        if job.n is None:
            raise ValueError("--n is required")
        if job.n % 2:
            raise ValueError(f"code length must be even, got n={job.n}")
    if args.command in ("check-divisor", "export", "verify-reversible") and not job.g:
        raise ValueError("--g is required")
    return job


def _ring(job: JobConfig) -> Ring:
    mod = parse_bitpoly(job.modulus) if job.modulus else None
    return build_ring(build_field(job.k, mod), job.s)


def _coeff_set(spec: str, ring: Ring) -> list[RingElement]:
    if spec == "all":
        return list(ring.elements())
    if spec == "field":
        return [ring.constant(a) for a in ring.field.elements()]
    if spec == "fixed":
        return [ring.constant(a) for a in ring.field.fixed_subfield()]
    if not spec.strip():
        return []
    return [parse_ring_expr(part, ring) for part in spec.split(";")]


def _emit(rows: Sequence[Check], csv_path: str | None, out) -> bool:
    for c in rows:
        line = f"[{c.status.upper():4}] {c.check}:{c.name}"
        if c.detail:
            line += f"  {c.detail}"
        print(line, file=out)
    if csv_path:
        with open(csv_path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["check", "name", "status", "counterexample"])
            w.writerows(c.row() for c in rows)
    return all(c.ok for c in rows)


def run(args: argparse.Namespace, out=None) -> int:
    out = out or sys.stdout
    job = resolve(args)
    cmd = job.command
    ring = _ring(job)
    fld = ring.field

    if cmd == "field-table":
        print("element\tbits\ttheta", file=out)
        for a in fld.elements():
            print(f"{fld.format(a)}\t{a:0{fld.degree}b}\t{fld.format(fld.theta(a))}", file=out)
        return 0

    if cmd == "ring-info":
        print(f"R_{{{job.k},{job.s}}} over GF(2^{fld.degree}), modulus {format_bitpoly(fld.modulus)}", file=out)
        print(f"cardinality 4^{2 * job.k * ring.size} = {ring.cardinality}", file=out)
        print("i\tT_i\tU_i\tI_i", file=out)
        for i, t in enumerate(ring.tuples):
            mono = "*".join(f"u{e + 1}" for e, r in enumerate(t) if r) or "1"
            print(f"{i}\t{t}\t{mono}\t{ring.render_idempotent(i)}", file=out)
        return 0

    if cmd == "verify-example":
        rows = worked.sweep_example(args.name, job.k) if args.modulus_sweep else worked.run_example(args.name, fld)
        return 0 if _emit(rows, args.csv, out) else 1

    if cmd == "codebook":
        book = build_codebook(fld, args.source)
        text = "\n".join(book.dump()) + "\n"
        if args.out:
            Path(args.out).write_text(text)
        else:
            out.write(text)
        return 0

    if cmd == "search":
        found = codes.search_divisors(
            ring, job.n, args.deg, args.symmetry, _coeff_set(args.coeffs, ring), job.budget
        )
        for g in found:
            print(format_poly(g), file=out)
        print(f"# {len(found)} right divisors", file=out)
        return 0

    g = parse_poly_expr(job.g, ring)

    if cmd == "check-divisor":
        if not g.is_monic():
            raise ValueError("generator must be monic")
        q, r = right_divmod(SkewPoly.xn_minus_1(ring, job.n), g)
        ok = not r and 1 <= g.degree < job.n
        rows = [Check("divisor", f"x^{job.n}-1", "pass" if ok else "fail", f"remainder {format_poly(r)}")]
        if ok:
            rows.append(Check("divisor", "quotient", "info", format_poly(q)))
            rows.append(Check("divisor", "symmetry", "info", codes.classify_symmetry(g)))
        return 0 if _emit(rows, args.csv, out) else 1

    code = codes.build_code(g, job.n)
    book = build_codebook(fld, job.codebook)

    if cmd == "export":
        stream = codes.enumerate_codewords(code, job.cap, sample=args.sample, seed=job.seed)
        records = (
            (f"cw{i} msg={format_message(cw.msg)}", encode_codeword(book, ring, cw.word))
            for i, cw in enumerate(stream)
        )
        with open(args.fasta, "w") as fh:
            count = write_fasta(fh, records)
        print(f"wrote {count} records to {args.fasta}", file=out)
        return 0

    if cmd == "verify-reversible":
        print(code, file=out)
        rep = codes.verify_reversible(code, book, job.mode, job.trials, job.seed, job.cap)
        rows = [Check("reversible", job.mode, "pass" if rep.passed else "fail", rep.counterexample or "")]
        if rep.seed is not None:
            rows.append(Check("reversible", "seed", "info", str(rep.seed)))
        return 0 if _emit(rows, args.csv, out) else 1

    raise ValueError(f"unknown command {cmd!r}")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
