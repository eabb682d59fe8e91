"""Command-line front end: ``analyze``, ``verify``, ``pencil`` and ``corpus``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .algebra import DEFAULT_SEED
from .parser import ParseError, load_fixture
from .verify import FAIL, SCHEMA_VERSION, analyze_fixture, run_pencil

FIXTURE_SUFFIX = ".poly"
CSV_FIELDS = ("source", "status", "is_cone", "g_F", "g_F_plus", "g_F_times",
              "max_nilpotent_rank", "sebastiani_thom", "quasi_vertices", "exactness",
              "passed", "failed", "skipped", "failures", "error")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def cmd_analyze(args) -> int:
    try:
        report = analyze_fixture(load_fixture(args.file), seed=args.seed)
    except (ParseError, ValueError, OSError) as exc:
        return _fail(str(exc))
    _emit(dumps(report.as_dict()), args.json)
    return 0 if report.ok else 1


def cmd_verify(args) -> int:
    try:
        report = analyze_fixture(load_fixture(args.file), seed=args.seed)
    except (ParseError, ValueError, OSError) as exc:
        return _fail(str(exc))
    width = max(len(k) for k in report.theorem_checks)
    for name, check in report.theorem_checks.items():
        line = f"{check.status.upper():8} {name:{width}}"
        if check.reason:
            line += f"  {check.reason}"
        print(line.rstrip())
    c = report.counts()
    print(f"{report.source}: {c['pass']} passed, {c['fail']} failed, {c['skipped']} skipped")
    return 0 if report.ok else 1


def _parse_samples(text: str) -> list[Fraction]:
    try:
        return [Fraction(s.strip()) for s in text.split(",") if s.strip()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad sample list {text!r}") from None


def cmd_pencil(args) -> int:
    try:
        exp = run_pencil(load_fixture(args.file_a), load_fixture(args.file_b), args.samples)
    except (ParseError, ValueError, OSError) as exc:
        return _fail(str(exc))
    sys.stdout.write(dumps(exp.as_dict()))
    return 0 if exp.semicontinuous else 1


def corpus_row(path: str, seed: int = DEFAULT_SEED) -> dict:
    """Analysis of one fixture file as a report dict; errors become data."""
    name = Path(path).stem
    try:
        report = analyze_fixture(load_fixture(path), seed=seed)
    except (ParseError, ValueError, OSError) as exc:
        return {"source": name, "file": Path(path).name, "error": str(exc)}
    row = report.as_dict()
    row["file"] = Path(path).name
    return row


def _corpus_rows(directory: Path, seed: int, jobs: int) -> list[dict]:
    files = sorted(str(p) for p in directory.iterdir() if p.suffix == FIXTURE_SUFFIX)
    if jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(corpus_row, files, [seed] * len(files)))
    return [corpus_row(f, seed) for f in files]


def _row_failed(row: dict) -> bool:
    if "error" in row:
        return True
    return any(c["status"] == FAIL for c in row["theorem_checks"].values())


def corpus_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for row in rows:
        if "error" in row:
            w.writerow({"source": row["source"], "status": "error", "error": row["error"]})
            continue
        checks = row["theorem_checks"]
        statuses = [c["status"] for c in checks.values()]
        qv = row["quasi_vertices"]
        w.writerow({
            "source": row["source"],
            "status": "fail" if _row_failed(row) else "ok",
            "is_cone": str(row["is_cone"]).lower(),
            "g_F": row["dims"].get("g_F"),
            "g_F_plus": row["dims"].get("g_F_plus"),
            "g_F_times": row["dims"].get("g_F_times"),
            "max_nilpotent_rank": row["max_nilpotent_rank"],
            "sebastiani_thom": "" if row["sebastiani_thom"] is None else str(row["sebastiani_thom"]).lower(),
            "quasi_vertices": ";".join("(" + ":".join(p) + ")" for p in qv["points"]),
            "exactness": qv["exactness"],
            "passed": statuses.count("pass"),
            "failed": statuses.count("fail"),
            "skipped": statuses.count("skipped"),
            "failures": ";".join(k for k, c in checks.items() if c["status"] == FAIL),
            "error": "",
        })
    return buf.getvalue()


def cmd_corpus(args) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        return _fail(f"{directory} is not a directory")
    rows = _corpus_rows(directory, args.seed, args.jobs)
    failed = [r["source"] for r in rows if _row_failed(r)]
    doc = {"schema": SCHEMA_VERSION, "seed": args.seed, "rows": rows,
           "summary": {"fixtures": len(rows), "failed": failed}}
    _emit(dumps(doc), args.json)
    if args.csv:
        Path(args.csv).write_text(corpus_csv(rows), encoding="utf-8")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symmetrizer", description="Symmetrizer algebras of homogeneous forms.")
    sub = p.add_subparsers(dest="command", required=True)

    def seed_arg(sp):
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help=f"seed for heuristic scans (default {DEFAULT_SEED})")

    a = sub.add_parser("analyze", help="full analysis report as JSON")
    a.add_argument("file")
    a.add_argument("--json", metavar="OUT", help="write the report here instead of stdout")
    seed_arg(a)
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="theorem-check table")
    v.add_argument("file")
    seed_arg(v)
    v.set_defaults(func=cmd_verify)

    pe = sub.add_parser("pencil", help="dim g_F_plus along the pencil (1-t)A + tB")
    pe.add_argument("file_a")
    pe.add_argument("file_b")
    pe.add_argument("--samples", type=_parse_samples, default=[Fraction(1, 3), Fraction(2, 5), Fraction(7, 11)],
                    help="comma-separated rationals, e.g. 1/3,2/5,7/11")
    pe.set_defaults(func=cmd_pencil)

    c = sub.add_parser("corpus", help="analyze every *.poly file in a directory")
    c.add_argument("directory")
    c.add_argument("--csv", metavar="OUT", help="also write a CSV summary")
    c.add_argument("--json", metavar="OUT", help="write the JSON table here instead of stdout")
    c.add_argument("--jobs", type=int, default=1, help="worker processes")
    seed_arg(c)
    c.set_defaults(func=cmd_corpus)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
