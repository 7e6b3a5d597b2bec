"""Command line front end and the two ideal serialization formats.

Text grammar, one ideal per line:   n=5; x1*x4, x2*x5, x1*x2*x3
JSON record, one object per line:   {"n": 5, "generators": [[1,4],[2,5],[1,2,3]]}

Census files are text-grammar lines under '#'-prefixed summary headers.
Exit codes: 0 success, 1 negative verdict under --strict, 2 input errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .census import (
    DEFAULT_WITNESS_CAP,
    CensusRecord,
    enumerate_all_fideals,
    enumerate_equigenerated,
    search_degree_gap,
    verify_duality_pairing,
)
from .complexes import f_vector, facet_complex, nonface_complex
from .duality import newton_dual
from .fideal import certify, degree_partition
from .ideals import MonomialIdeal, minimal_primes
from .kruskal_katona import (
    complement_fvector,
    exists_complex,
    kk_valid,
    kk_valid_dual,
    macaulay_expansion,
)


class IdealParseError(ValueError):
    """Syntax or range error in an ideal document, with position."""

    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class IdealDocument:
    """An ideal as given in the input, before minimalization."""

    n: int
    generators: tuple[tuple[int, ...], ...]
    label: str | None = None

    def to_ideal(self, *, allow_unit: bool = False) -> MonomialIdeal:
        return MonomialIdeal.generated_by(self.n, self.generators, allow_unit=allow_unit)

    def minimalization_changed(self, ideal: MonomialIdeal) -> bool:
        given = {tuple(sorted(g)) for g in self.generators}
        kept = {g.indices() for g in ideal.generators}
        return given != kept


_TOKEN = re.compile(r"\s*(?:(n)|(x)(\d+)|(\d+)|(=)|(;)|(,)|(\*)|(.))", re.DOTALL)


def _positions(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    last = text.rfind("\n", 0, offset)
    return line, offset - last


def parse_document_text(text: str) -> IdealDocument:
    """Parse the text grammar: n=<int>; followed by comma separated monomials."""
    tokens: list[tuple[str, str, int]] = []
    for m in _TOKEN.finditer(text):
        off = m.start() + len(m.group(0)) - len(m.group(0).lstrip())
        if m.group(1):
            tokens.append(("n", "n", off))
        elif m.group(2):
            tokens.append(("var", m.group(3), off))
        elif m.group(4):
            tokens.append(("int", m.group(4), off))
        elif m.group(5):
            tokens.append(("=", "=", off))
        elif m.group(6):
            tokens.append((";", ";", off))
        elif m.group(7):
            tokens.append((",", ",", off))
        elif m.group(8):
            tokens.append(("*", "*", off))
        elif m.group(9) and m.group(9).strip():
            line, col = _positions(text, m.start(9))
            raise IdealParseError(f"unexpected character {m.group(9)!r}", line, col)

    pos = 0

    def fail(msg: str, off: int | None = None) -> IdealParseError:
        offset = off if off is not None else (tokens[pos][2] if pos < len(tokens) else len(text))
        line, col = _positions(text, offset)
        return IdealParseError(msg, line, col)

    def expect(kind: str) -> tuple[str, str, int]:
        nonlocal pos
        if pos >= len(tokens) or tokens[pos][0] != kind:
            raise fail(f"expected {kind!r}")
        tok = tokens[pos]
        pos += 1
        return tok

    expect("n")
    expect("=")
    n = int(expect("int")[1])
    expect(";")

    generators: list[tuple[int, ...]] = []
    while pos < len(tokens):
        factors: list[int] = []
        while True:
            kind, val, off = tokens[pos] if pos < len(tokens) else ("", "", len(text))
            if kind == "var":
                idx = int(val)
                if not 1 <= idx <= n:
                    raise fail(f"variable index {idx} outside 1..{n}", off)
                factors.append(idx)
                pos += 1
            elif kind == "int" and val == "1" and not factors:
                pos += 1  # the unit monomial
                break
            else:
                raise fail("expected a variable like x3")
            if pos < len(tokens) and tokens[pos][0] == "*":
                pos += 1
                continue
            break
        generators.append(tuple(factors))
        if pos < len(tokens):
            if tokens[pos][0] != ",":
                raise fail("expected ',' between monomials")
            pos += 1
            if pos >= len(tokens):
                raise fail("trailing ','")
    return IdealDocument(n, tuple(generators))


def parse_document_record(text: str) -> IdealDocument:
    """Parse one JSON record {"n": ..., "generators": [[...], ...], "label"?: ...}."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise IdealParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
    if not isinstance(obj, dict):
        raise IdealParseError("record must be a JSON object")
    if not isinstance(obj.get("n"), int):
        raise IdealParseError("record needs an integer field 'n'")
    gens = obj.get("generators")
    if not isinstance(gens, list) or not all(
        isinstance(g, list) and all(isinstance(i, int) for i in g) for g in gens
    ):
        raise IdealParseError("'generators' must be a list of integer lists")
    n = obj["n"]
    for g in gens:
        for i in g:
            if not 1 <= i <= n:
                raise IdealParseError(f"variable index {i} outside 1..{n}")
    label = obj.get("label")
    if label is not None and not isinstance(label, str):
        raise IdealParseError("'label' must be a string")
    return IdealDocument(n, tuple(tuple(g) for g in gens), label)


def parse_document(text: str) -> IdealDocument:
    """Auto-detect the format: JSON records start with '{'."""
    stripped = text.strip()
    if not stripped:
        raise IdealParseError("empty input")
    if stripped.startswith("{"):
        return parse_document_record(stripped)
    return parse_document_text(text)


def render_ideal_text(ideal: MonomialIdeal) -> str:
    gens = ", ".join(str(g) for g in ideal.generators)
    return f"n={ideal.n};" + (f" {gens}" if gens else "")


def render_ideal_record(ideal: MonomialIdeal, label: str | None = None) -> str:
    obj: dict = {"n": ideal.n, "generators": [list(g.indices()) for g in ideal.generators]}
    if label is not None:
        obj["label"] = label
    return json.dumps(obj)


def write_census_file(fp: TextIO, record: CensusRecord) -> None:
    fp.write(
        f"# n={record.n} d={record.degree} count={record.count}"
        f" examined={record.examined} budget_exhausted={str(record.budget_exhausted).lower()}\n"
    )
    for w in record.witnesses:
        fp.write(render_ideal_text(w) + "\n")


def read_census_file(fp: TextIO) -> tuple[dict[str, str], list[MonomialIdeal]]:
    header: dict[str, str] = {}
    ideals: list[MonomialIdeal] = []
    for raw in fp:
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for part in line[1:].split():
                if "=" in part:
                    k, v = part.split("=", 1)
                    header[k] = v
            continue
        ideals.append(parse_document_text(line).to_ideal())
    return header, ideals


def _fvec(f: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in f) + ")"


def _parse_vector(text: str) -> tuple[int, ...]:
    body = text.strip().strip("()")
    if not body:
        return ()
    try:
        return tuple(int(p) for p in re.split(r"[,\s]+", body.strip()) if p)
    except ValueError:
        raise IdealParseError(f"not an integer vector: {text!r}") from None


def _read_ideal(args) -> MonomialIdeal:
    if getattr(args, "file", None):
        with open(args.file) as fp:
            text = fp.read()
    elif args.ideal and args.ideal != "-":
        text = args.ideal
    else:
        text = sys.stdin.read()
    doc = parse_document(text)
    ideal = doc.to_ideal(allow_unit=args.allow_unit)
    if doc.minimalization_changed(ideal):
        print(f"note: generators were not minimal; kept {render_ideal_text(ideal)}", file=sys.stderr)
    return ideal


def _emit(args, lines: Iterable[str], record: dict) -> None:
    if args.format == "records":
        print(json.dumps(record))
    else:
        for line in lines:
            print(line)


def _ideal_lists(ideal: MonomialIdeal) -> list[list[int]]:
    return [list(g.indices()) for g in ideal.generators]


def cmd_fvector(args) -> int:
    ideal = _read_ideal(args)
    fF = f_vector(facet_complex(ideal))
    fN = f_vector(nonface_complex(ideal))
    _emit(
        args,
        [f"f_facet = {_fvec(fF)}", f"f_nonface = {_fvec(fN)}"],
        {"op": "fvector", "n": ideal.n, "f_facet": list(fF), "f_nonface": list(fN)},
    )
    return 0


def cmd_complexes(args) -> int:
    ideal = _read_ideal(args)
    dF = facet_complex(ideal)
    dN = nonface_complex(ideal)
    lines = [
        f"facet complex: facets {dF} on vertices {list(dF.vertices())}",
        f"non-face complex: facets {dN} on vertices {list(dN.vertices())}",
    ]
    record = {
        "op": "complexes",
        "n": ideal.n,
        "facet_complex": [list(f) for f in dF.facet_sets()],
        "nonface_complex": [list(f) for f in dN.facet_sets()],
    }
    _emit(args, lines, record)
    return 0


def cmd_dual(args) -> int:
    ideal = _read_ideal(args)
    dual = newton_dual(ideal, allow_unit=args.allow_unit)
    _emit(
        args,
        [render_ideal_text(dual)],
        {"op": "dual", "n": dual.n, "generators": _ideal_lists(dual)},
    )
    return 0


def cmd_check(args) -> int:
    ideal = _read_ideal(args)
    cert = certify(ideal)
    if cert.is_f_ideal:
        lines = [f"f-ideal: true; f = {_fvec(cert.f_facet)}"]
    else:
        lines = [f"f-ideal: false; f_facet = {_fvec(cert.f_facet)}; f_nonface = {_fvec(cert.f_nonface)}"]
    record = {
        "op": "check",
        "n": ideal.n,
        "is_f_ideal": cert.is_f_ideal,
        "f_facet": list(cert.f_facet),
        "f_nonface": list(cert.f_nonface),
    }
    _emit(args, lines, record)
    return 0 if cert.is_f_ideal or not args.strict else 1


def cmd_certify(args) -> int:
    ideal = _read_ideal(args)
    cert = certify(ideal)
    lines = [
        f"f-ideal: {str(cert.is_f_ideal).lower()}",
        f"f_facet = {_fvec(cert.f_facet)}",
        f"f_nonface = {_fvec(cert.f_nonface)}",
        "degree  free  divisors  generators  multiples",
    ]
    for d, (a, b, c, m) in enumerate(cert.partition_sizes):
        lines.append(f"{d:>6}  {a:>4}  {b:>8}  {c:>10}  {m:>9}")
    if cert.first_failure:
        d, a, c = cert.first_failure
        lines.append(f"first failure: degree {d} has {a} free vs {c} generators")
    for w in cert.warnings:
        lines.append(f"warning: {w}")
    record = {
        "op": "certify",
        "n": ideal.n,
        "is_f_ideal": cert.is_f_ideal,
        "f_facet": list(cert.f_facet),
        "f_nonface": list(cert.f_nonface),
        "partition_sizes": [list(s) for s in cert.partition_sizes],
        "first_failure": list(cert.first_failure) if cert.first_failure else None,
        "warnings": list(cert.warnings),
    }
    _emit(args, lines, record)
    return 0 if cert.is_f_ideal or not args.strict else 1


def cmd_partition(args) -> int:
    ideal = _read_ideal(args)
    degrees = [args.degree] if args.degree is not None else list(range(ideal.n + 1))
    lines = ["degree  free  divisors  generators  multiples"]
    recs = []
    for d in degrees:
        part = degree_partition(ideal, d)
        a, b, c, m = part.sizes
        lines.append(f"{d:>6}  {a:>4}  {b:>8}  {c:>10}  {m:>9}")
        recs.append(
            {
                "degree": d,
                "free": [list(x.indices()) for x in part.free],
                "divisors": [list(x.indices()) for x in part.divisors],
                "generators": [list(x.indices()) for x in part.generators],
                "multiples": [list(x.indices()) for x in part.multiples],
            }
        )
    if args.degree is not None:
        part = degree_partition(ideal, args.degree)
        for name, members in (
            ("free", part.free),
            ("divisors", part.divisors),
            ("generators", part.generators),
            ("multiples", part.multiples),
        ):
            lines.append(f"{name}: " + (", ".join(str(m) for m in members) if members else "(none)"))
    _emit(args, lines, {"op": "partition", "n": ideal.n, "partitions": recs})
    return 0


def cmd_primes(args) -> int:
    ideal = _read_ideal(args)
    mp = minimal_primes(ideal)
    lines = [f"({', '.join(f'x{i}' for i in p)})" for p in mp.primes]
    lines.append(f"height = {mp.height}; unmixed = {str(mp.unmixed).lower()}")
    record = {
        "op": "primes",
        "n": ideal.n,
        "primes": [list(p) for p in mp.primes],
        "height": mp.height,
        "unmixed": mp.unmixed,
    }
    _emit(args, lines, record)
    return 0


def cmd_kk(args) -> int:
    f = _parse_vector(args.vector)
    valid = kk_valid(f)
    lines = [f"kk-valid: {str(valid).lower()}"]
    record = {"op": "kk", "f": list(f), "valid": valid}
    if args.ambient is not None:
        dual_ok = kk_valid_dual(f, args.ambient)
        comp = complement_fvector(f, args.ambient)
        lines.append(f"kk-valid-dual (n={args.ambient}): {str(dual_ok).lower()}")
        lines.append(f"complement (n={args.ambient}): {_fvec(comp)}")
        record["ambient"] = args.ambient
        record["valid_dual"] = dual_ok
        record["complement"] = list(comp)
    if args.oracle:
        witnessed = exists_complex(f)
        lines.append(f"witness oracle: {str(witnessed).lower()}")
        record["oracle"] = witnessed
    _emit(args, lines, record)
    return 0 if valid or not args.strict else 1


def cmd_kk_expand(args) -> int:
    exp = macaulay_expansion(args.a, args.j)
    terms = " + ".join(f"C({t},{i})" for t, i in exp.terms)
    _emit(
        args,
        [f"{args.a} = {terms}", f"bound = {exp.bound()}"],
        {"op": "kk-expand", "a": args.a, "j": args.j, "terms": [list(t) for t in exp.terms], "bound": exp.bound()},
    )
    return 0


def cmd_complement(args) -> int:
    f = _parse_vector(args.vector)
    comp = complement_fvector(f, args.n)
    _emit(
        args,
        [_fvec(comp)],
        {"op": "complement", "f": list(f), "n": args.n, "complement": list(comp)},
    )
    return 0


def _census_lines(record: CensusRecord, annotate_degrees: bool = False) -> list[str]:
    lines = [
        f"count = {record.count} (examined {record.examined},"
        f" budget_exhausted = {str(record.budget_exhausted).lower()}, elapsed {record.elapsed:.2f}s)"
    ]
    for w in record.witnesses:
        if annotate_degrees:
            a, o = w.degree_extremes()
            lines.append(f"{render_ideal_text(w)}  (alpha={a}, omega={o})")
        else:
            lines.append(render_ideal_text(w))
    return lines


def _census_record(record: CensusRecord, op: str) -> dict:
    return {
        "op": op,
        "n": record.n,
        "d": record.degree,
        "count": record.count,
        "examined": record.examined,
        "budget_exhausted": record.budget_exhausted,
        "witnesses": [[list(g.indices()) for g in w.generators] for w in record.witnesses],
    }


def cmd_enumerate(args) -> int:
    if args.d is not None:
        record = enumerate_equigenerated(
            args.n, args.d, args.budget, witness_cap=args.witness_cap, workers=args.workers
        )
    else:
        record = enumerate_all_fideals(
            args.n, args.budget, witness_cap=args.witness_cap, seed=args.seed
        )
    if args.out:
        with open(args.out, "w") as fp:
            write_census_file(fp, record)
        print(f"census written to {args.out}", file=sys.stderr)
    _emit(args, _census_lines(record, annotate_degrees=args.d is None), _census_record(record, "enumerate"))
    return 0


def cmd_pair(args) -> int:
    rep = verify_duality_pairing(
        args.n, args.d, args.budget, witness_cap=args.witness_cap, workers=args.workers
    )
    lines = [
        f"count(d={args.d}) = {rep.count}; count(d={args.n - args.d}) = {rep.dual_count};"
        f" equal = {str(rep.equal).lower()};"
        f" bijection_checked = {str(rep.bijection_checked).lower()};"
        f" conclusive = {str(rep.conclusive).lower()}"
    ]
    record = {
        "op": "pair",
        "n": rep.n,
        "d": rep.d,
        "count": rep.count,
        "dual_count": rep.dual_count,
        "equal": rep.equal,
        "bijection_checked": rep.bijection_checked,
        "conclusive": rep.conclusive,
    }
    _emit(args, lines, record)
    return 0 if rep.bijection_checked or not args.strict else 1


def cmd_gap_search(args) -> int:
    record = search_degree_gap(
        args.n, args.gap, args.budget, witness_cap=args.witness_cap, seed=args.seed
    )
    if args.out:
        with open(args.out, "w") as fp:
            write_census_file(fp, record)
        print(f"census written to {args.out}", file=sys.stderr)
    _emit(args, _census_lines(record, annotate_degrees=True), _census_record(record, "gap-search"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fideals",
        description="Square-free monomial ideals: complexes, duals, f-ideal checks and censuses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "records"), default="table")
    common.add_argument("--strict", action="store_true", help="exit 1 on a negative verdict")

    ideal_in = argparse.ArgumentParser(add_help=False, parents=[common])
    ideal_in.add_argument("ideal", nargs="?", help="ideal document; '-' or absent reads stdin")
    ideal_in.add_argument("--file", help="read the ideal document from a file")
    ideal_in.add_argument("--allow-unit", action="store_true", help="accept the unit monomial as a generator")

    for name, fn in (
        ("fvector", cmd_fvector),
        ("complexes", cmd_complexes),
        ("dual", cmd_dual),
        ("check", cmd_check),
        ("certify", cmd_certify),
        ("primes", cmd_primes),
    ):
        p = sub.add_parser(name, parents=[ideal_in])
        p.set_defaults(func=fn)

    p = sub.add_parser("partition", parents=[ideal_in])
    p.add_argument("--degree", type=int, default=None)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("kk", parents=[common])
    p.add_argument("vector", help="candidate f-vector, e.g. 1,5,8,2")
    p.add_argument("--ambient", type=int, default=None, help="also run the complement-form test")
    p.add_argument("--oracle", action="store_true", help="also run the witness oracle (f_0 <= 7)")
    p.set_defaults(func=cmd_kk)

    p = sub.add_parser("kk-expand", parents=[common])
    p.add_argument("a", type=int)
    p.add_argument("j", type=int)
    p.set_defaults(func=cmd_kk_expand)

    p = sub.add_parser("complement", parents=[common])
    p.add_argument("vector")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_complement)

    census = argparse.ArgumentParser(add_help=False, parents=[common])
    census.add_argument("--n", type=int, required=True)
    census.add_argument("--budget", type=int, default=None)
    census.add_argument("--witness-cap", type=int, default=DEFAULT_WITNESS_CAP)
    census.add_argument("--workers", type=int, default=1)
    census.add_argument("--seed", type=int, default=0)
    census.add_argument("--out", help="write witnesses to a census file")

    p = sub.add_parser("enumerate", parents=[census])
    p.add_argument("--d", type=int, default=None, help="equigenerated degree; omit for all f-ideals")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("pair", parents=[census])
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("gap-search", parents=[census])
    p.add_argument("--gap", type=int, required=True)
    p.set_defaults(func=cmd_gap_search)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except IdealParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
