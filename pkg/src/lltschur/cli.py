"""Command-line interface: expansions and verification sweeps."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass

from .combinat import parse_partition
from .kschur import NotInSpanError, hall_littlewood, kschur2, two_schur_expand
from .llt import DEFAULT_MAX_N, BoundExceeded, L, ShapeTuple, TwoDiagTuple, llt_schur
from .symfunc import format_expansion, omega, schur_to_fund, schur_to_monomial
from . import verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3
BASES = ("schur", "two-schur", "fundamental", "monomial")


class UsageError(ValueError):
    pass


@dataclass
class CommandConfig:
    subcommand: str
    n: int | None = None
    partitions: tuple = ()
    tuple_text: str | None = None
    shape_file: str | None = None
    basis: str = "schur"
    q: int | None = None
    conjugate: bool = False
    max_n: int | None = None
    fmt: str = "text"
    jobs: int = 1
    seed: int = verify.DEFAULT_SEED
    samples: int = verify.DEFAULT_SAMPLES
    theorem: str = "all"
    timing: bool = True

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "CommandConfig":
        cfg = cls(subcommand=ns.command)
        for name in ("n", "basis", "q", "max_n", "jobs", "seed", "samples", "theorem", "conjugate"):
            if getattr(ns, name, None) is not None:
                setattr(cfg, name, getattr(ns, name))
        cfg.fmt = ns.format
        cfg.tuple_text = getattr(ns, "tuple", None)
        cfg.shape_file = getattr(ns, "shape", None)
        cfg.timing = not getattr(ns, "no_timing", False)
        lam = getattr(ns, "lam", None)
        if lam is not None:
            try:
                cfg.partitions = tuple(parse_partition(p) for p in lam.split("|"))
            except ValueError as exc:
                raise UsageError(f"bad partition {lam!r}: {exc}") from None
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.n is not None and self.n < 1:
            raise UsageError("--n must be positive")
        if self.max_n is not None and self.max_n < 1:
            raise UsageError("--max-n must be positive")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")
        if self.tuple_text is not None and set(self.tuple_text.upper()) - set("HV01"):
            raise UsageError("--tuple must be a string over H, V, 0, 1")


# -- output -----------------------------------------------------------------------

def in_basis(f, basis: str):
    if basis == "schur":
        return f
    if basis == "two-schur":
        return two_schur_expand(f)
    if basis == "fundamental":
        return schur_to_fund(f)
    if basis == "monomial":
        return schur_to_monomial(f)
    raise UsageError(f"unknown basis {basis!r}")


def _emit(cfg: CommandConfig, records: list[dict], lines: list[str]) -> None:
    if cfg.fmt == "json":
        out = records[0] if len(records) == 1 else records
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _expansion_record(cfg: CommandConfig, label: dict, f) -> tuple[dict, str]:
    g = in_basis(f, cfg.basis)
    if cfg.q is not None:
        g = g.specialize(cfg.q)
    rec = dict(label)
    rec["expansion"] = g.to_json()
    if cfg.q is not None:
        rec["q"] = cfg.q
    return rec, format_expansion(g)


def _bound(cfg: CommandConfig) -> int:
    return cfg.max_n if cfg.max_n is not None else DEFAULT_MAX_N


def _need_partitions(cfg: CommandConfig) -> tuple:
    if not cfg.partitions:
        raise UsageError("--lambda is required")
    return cfg.partitions


# -- subcommands --------------------------------------------------------------------

def _load_tuple(cfg: CommandConfig):
    if (cfg.tuple_text is None) == (cfg.shape_file is None):
        raise UsageError("give exactly one of --tuple and --shape")
    if cfg.tuple_text is not None:
        return TwoDiagTuple.parse(cfg.tuple_text), cfg.tuple_text.upper()
    try:
        with open(cfg.shape_file) as fh:
            st = ShapeTuple.from_json(json.load(fh))
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read shape file: {exc}") from None
    return st, cfg.shape_file


def cmd_llt(cfg: CommandConfig) -> int:
    from .theorems import q_one_sides

    t, name = _load_tuple(cfg)
    f = llt_schur(t, max_n=_bound(cfg))
    if cfg.conjugate:
        f = omega(f)
    rec, line = _expansion_record(cfg, {"command": "llt", "tuple": name, "conjugate": cfg.conjugate}, f)
    lines = [line]
    status = EXIT_OK
    if cfg.q == 1:
        lhs, rhs = q_one_sides(t)
        ok = lhs == rhs
        rec["product_of_skew_schur"] = {"equal": ok, "product": rhs.to_json()}
        lines.append(f"product of skew Schur functions: {format_expansion(rhs)}")
        lines.append("q=1 check: " + ("equal" if ok else "DIFFERENT"))
        status = EXIT_OK if ok else EXIT_FAIL
    _emit(cfg, [rec], lines)
    return status


def cmd_unicellular(cfg: CommandConfig) -> int:
    if cfg.n is None:
        raise UsageError("--n is required")
    if cfg.n > _bound(cfg):
        raise BoundExceeded(f"n={cfg.n} exceeds --max-n {_bound(cfg)}")
    records, lines = [], []
    for lam in _need_partitions(cfg):
        rec, line = _expansion_record(cfg, {"command": "unicellular", "n": cfg.n, "lambda": list(lam)}, L(cfg.n, lam))
        records.append(rec)
        lines.append(line)
    _emit(cfg, records, lines)
    return EXIT_OK


def _per_partition(cfg: CommandConfig, command: str, fn) -> int:
    records, lines = [], []
    for lam in _need_partitions(cfg):
        if lam.size > _bound(cfg):
            raise BoundExceeded(f"|lambda|={lam.size} exceeds --max-n {_bound(cfg)}")
        rec, line = _expansion_record(cfg, {"command": command, "lambda": list(lam)}, fn(lam))
        records.append(rec)
        lines.append(line)
    _emit(cfg, records, lines)
    return EXIT_OK


def cmd_kschur(cfg: CommandConfig) -> int:
    return _per_partition(cfg, "kschur", kschur2)


def cmd_hl(cfg: CommandConfig) -> int:
    return _per_partition(cfg, "hall-littlewood", hall_littlewood)


def cmd_verify(cfg: CommandConfig) -> int:
    names = verify.THEOREMS if cfg.theorem == "all" else (cfg.theorem,)
    reports = []
    for name in names:
        rep = verify.run(name, max_n=cfg.max_n, jobs=cfg.jobs, seed=cfg.seed, samples=cfg.samples)
        if not cfg.timing:
            rep["elapsed_ms"] = 0
        reports.append(rep)
    lines = []
    for rep in reports:
        status = "ok" if not rep["failures"] else "FAILED"
        head = f"{rep['theorem']}: {rep['cases']} cases, {len(rep['failures'])} failures"
        if cfg.timing:
            head += f", {rep['elapsed_ms']} ms"
        lines.append(f"{head} [{status}]")
        for note in rep.get("notes", []):
            lines.append(f"  note: {note}")
        for fail in rep["failures"]:
            lines.append("  case " + json.dumps(fail["case"]))
            lines.append("    lhs " + json.dumps(fail["lhs"], sort_keys=True))
            lines.append("    rhs " + json.dumps(fail["rhs"], sort_keys=True))
    _emit(cfg, reports, lines)
    return EXIT_FAIL if any(rep["failures"] for rep in reports) else EXIT_OK


COMMANDS = {
    "llt": cmd_llt,
    "unicellular": cmd_unicellular,
    "kschur": cmd_kschur,
    "hall-littlewood": cmd_hl,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-n", type=int, dest="max_n", help="size bound (sweep bound for verify)")
    common.add_argument("-v", "--verbose", action="store_true")

    expansion = argparse.ArgumentParser(add_help=False)
    expansion.add_argument("--basis", choices=BASES, default="schur")
    expansion.add_argument("--q", type=int, help="specialize q to this integer")

    p = argparse.ArgumentParser(prog="lltschur", description="LLT polynomials and 2-Schur expansions.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("llt", parents=[common, expansion], help="LLT polynomial of a tuple")
    s.add_argument("--tuple", help="string over H, V, 0, 1 (dominoes and single cells)")
    s.add_argument("--shape", help="JSON file describing a tuple of skew shapes")
    s.add_argument("--conjugate", action="store_true", help="apply omega first")

    s = sub.add_parser("unicellular", parents=[common, expansion], help="L(n, lambda)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--lambda", dest="lam", required=True, help="partition(s), e.g. 2,1 or 1,1|2,1")

    for name, text in (("kschur", "2-Schur function"), ("hall-littlewood", "Hall-Littlewood polynomial H_lambda")):
        s = sub.add_parser(name, parents=[common, expansion], help=text)
        s.add_argument("--lambda", dest="lam", required=True)

    s = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    s.add_argument("--theorem", default="all", choices=("all",) + verify.THEOREMS)
    s.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    s.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    s.add_argument("--samples", type=int, default=verify.DEFAULT_SAMPLES, help="random tuples for haiman2")
    s.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for reproducible output")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = CommandConfig.from_args(ns)
        return COMMANDS[cfg.subcommand](cfg)
    except UsageError as exc:
        parser.error(str(exc))
    except BoundExceeded as exc:
        print(f"error: bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except NotInSpanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
