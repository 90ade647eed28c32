"""Command-line front end.

Every subcommand accepts ``--format text|json`` and ``--degree-cap N``.
Exit status is 0 on success, 2 on a usage error and 1 on a domain error; in
JSON mode a domain error prints ``{"error": {...}}`` on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import symfunc
from .errors import InvalidInput, ValidationFailed, WreathSFError
from .groups import BUILTIN_NAMES, builtin, load_group, validate
from .lr import lr_coeff, lr_coeff_oracle, pieri
from .partitions import (
    SkewShape,
    colored_partitions_of,
    conjugate,
    format_colored,
    format_partition,
    parse_colored,
    parse_partition,
    partitions_of,
)
from .symfunc import SymFunc, gen_basis_poly, hall_inner, skew_schur_poly, to_basis, transition
from .tableaux import Tableau, is_lattice, kostka, word
from .wreath import (
    WREATH_BASES,
    WreathSymFunc,
    character_table,
    dimension,
    sesqui_inner,
    wreath_schur,
)

__all__ = ["main", "run", "build_parser"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # raise instead of exiting so run() can be used in-process
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        if message:
            sys.stderr.write(message)
        raise SystemExit(status)


def _frac(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _group(args):
    if args.file:
        return load_group(args.file)
    return builtin(args.group)


def _add_group_flags(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--group", help=f"built-in group: {', '.join(BUILTIN_NAMES)}")
    g.add_argument("--file", help="path to a group-spec JSON document")


# -- handlers ----------------------------------------------------------------
# each returns (text, payload)

def _cmd_conjugate(args):
    lam = conjugate(parse_partition(args.partition))
    return format_partition(lam), format_partition(lam)


def _cmd_partitions(args):
    if args.colors is None:
        items = [format_partition(x) for x in partitions_of(args.n)]
    else:
        items = [format_colored(x) for x in colored_partitions_of(args.n, args.colors)]
    return "\n".join(items), items


def _cmd_kostka(args):
    shape = SkewShape(parse_partition(args.shape), parse_partition(args.inner))
    content = [int(t) for t in args.content.split(",") if t.strip()] if args.content not in ("", "-") else []
    k = kostka(shape, content)
    return str(k), k


def _cmd_word(args):
    rows = [[int(t) for t in row.split(",") if t.strip()] if row.strip() not in ("", "-") else []
            for row in args.rows.split(";")]
    T = Tableau.from_rows(parse_partition(args.shape), rows, inner=parse_partition(args.inner))
    if not T.is_semistandard():
        raise InvalidInput("the filling is not semistandard")
    w = word(T)
    sep = "" if all(v < 10 for v in w) else " "
    return sep.join(map(str, w)), list(w)


def _cmd_lattice(args):
    w = [int(t) for t in args.word.split(",") if t.strip()]
    ok = is_lattice(w)
    return str(ok).lower(), ok


def _cmd_schur_poly(args):
    shape = SkewShape(parse_partition(args.shape), parse_partition(args.inner))
    strict = not args.lenient
    if args.basis == "s":
        poly = skew_schur_poly(shape, args.vars, strict=strict)
    else:
        if shape.inner:
            raise InvalidInput("--inner only applies to the Schur basis")
        poly = gen_basis_poly(args.basis, shape.outer, args.vars, strict=strict)
    return str(poly), str(poly)


def _cmd_convert(args):
    if args.matrix is not None:
        M = transition(args.source, args.to, args.matrix)
        labels = [format_partition(x) for x in M.index]
        rows = [[_frac(v) for v in row] for row in M.rows]
        text = "\n".join(
            f"{lab}: " + " ".join(str(v) for v in row) for lab, row in zip(labels, rows)
        )
        return text, {"from": args.source, "to": args.to, "n": args.matrix, "index": labels, "rows": rows}
    if args.shape is None:
        raise _UsageError("convert: one of --shape or --matrix is required")
    f = SymFunc.basis_element(args.source, parse_partition(args.shape))
    g = to_basis(f, args.to)
    terms = [[format_partition(lam), _frac(c)] for lam, c in g.items()]
    return str(g), {"basis": args.to, "terms": terms}


def _element(G, basis, text):
    if G is None:
        return SymFunc.basis_element(basis, parse_partition(text))
    lam = parse_colored(text, r=G.r)
    return WreathSymFunc(G, basis, {lam: 1}, lam.weight)


def _cmd_inner(args):
    wreath = args.left_basis in WREATH_BASES
    if wreath != (args.right_basis in WREATH_BASES):
        raise InvalidInput("both sides must be classical or both wreath bases")
    if not wreath:
        if args.group or args.file:
            raise InvalidInput("--group/--file only apply to wreath bases")
        v = hall_inner(_element(None, args.left_basis, args.left), _element(None, args.right_basis, args.right))
        return str(v), _frac(v)
    if not (args.group or args.file):
        raise _UsageError("inner: wreath bases need --group or --file")
    G = _group(args)
    v = sesqui_inner(_element(G, args.left_basis, args.left), _element(G, args.right_basis, args.right))
    return str(v), v.to_json()


def _cmd_lr(args):
    lam, mu, nu = (parse_partition(x) for x in (args.outer, args.inner, args.content))
    c = lr_coeff_oracle(lam, mu, nu) if args.oracle else lr_coeff(lam, mu, nu)
    return str(c), c


def _cmd_pieri(args):
    if ";" in args.shape:
        lam = parse_colored(args.shape)
        m = [int(t) for t in args.m.split(",")]
        out = [format_colored(x) for x in pieri(lam, m, args.mode)]
    else:
        try:
            m = int(args.m)
        except ValueError as exc:
            raise InvalidInput(f"--m must be an integer for an uncolored shape, got {args.m!r}") from exc
        out = [format_partition(x) for x in pieri(parse_partition(args.shape), m, args.mode)]
    return "\n".join(out), out


def _cmd_group_validate(args):
    G = _group(args)
    rep = validate(G)
    if not rep.ok:
        raise ValidationFailed(rep)
    return f"{G.name}: valid (order {G.order}, {G.r} classes)", rep.to_json()


def _cmd_chartable(args):
    T = character_table(_group(args), args.n)
    return T.to_text(), T.to_json()


def _cmd_dim(args):
    G = _group(args)
    d = dimension(G, parse_colored(args.shape, r=G.r))
    return str(d), d


def _cmd_schur_p(args):
    G = _group(args)
    f = wreath_schur(G, parse_colored(args.shape, r=G.r)).to(args.basis)
    return str(f), f.to_json()


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False, allow_abbrev=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    common.add_argument(
        "--degree-cap", type=int, default=None,
        help="largest degree for polynomial-engine work (default: $WREATHSF_DEGREE_CAP or 8)",
    )

    parser = _Parser(
        prog="wreathsf",
        description="Symmetric functions, tableaux and wreath-product character tables.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, handler, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text, allow_abbrev=False)
        p.set_defaults(handler=handler)
        return p

    p = add("conjugate", _cmd_conjugate, "conjugate partition")
    p.add_argument("partition", help='comma separated parts, "-" for empty')

    p = add("partitions", _cmd_partitions, "list partitions of n (colored with --colors)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--colors", type=int, default=None)

    p = add("kostka", _cmd_kostka, "number of SSYT of a (skew) shape with given content")
    p.add_argument("--shape", required=True)
    p.add_argument("--inner", default="-")
    p.add_argument("--content", required=True)

    p = add("word", _cmd_word, "reading word of a tableau")
    p.add_argument("--shape", required=True, help="outer shape")
    p.add_argument("--inner", default="-")
    p.add_argument("--rows", required=True, help='skew-cell entries per row, rows joined by ";"')

    p = add("lattice", _cmd_lattice, "test whether a word is a lattice permutation")
    p.add_argument("--word", required=True, help="comma separated letters")

    p = add("schur-poly", _cmd_schur_poly, "explicit polynomial of a basis element in K variables")
    p.add_argument("--shape", required=True)
    p.add_argument("--inner", default="-")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--basis", choices=symfunc.BASES, default="s")
    p.add_argument("--lenient", action="store_true", help="allow fewer variables than the degree")

    p = add("convert", _cmd_convert, "change of basis for a basis element, or a full transition matrix")
    p.add_argument("--from", dest="source", choices=symfunc.BASES, required=True)
    p.add_argument("--to", choices=symfunc.BASES, required=True)
    p.add_argument("--shape", default=None)
    p.add_argument("--matrix", type=int, default=None, metavar="N", help="print the degree-N matrix instead")

    p = add("inner", _cmd_inner, "Hall inner product, or the wreath form with --group/--file")
    bases = symfunc.BASES + WREATH_BASES
    p.add_argument("--left-basis", choices=bases, required=True)
    p.add_argument("--left", required=True)
    p.add_argument("--right-basis", choices=bases, required=True)
    p.add_argument("--right", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--group")
    g.add_argument("--file")

    p = add("lr", _cmd_lr, "Littlewood-Richardson coefficient c^outer_{inner,content}")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", required=True)
    p.add_argument("--content", required=True)
    p.add_argument("--oracle", action="store_true", help="use the polynomial-product oracle")

    p = add("pieri", _cmd_pieri, "shapes obtained by adding a horizontal (row) or vertical (column) strip")
    p.add_argument("--shape", required=True, help='partition, or colored partition with ";"')
    p.add_argument("--m", required=True, help="strip size, one per color for colored shapes")
    p.add_argument("--mode", choices=("row", "column"), default="row")

    p = add("group-validate", _cmd_group_validate, "check a group's character table")
    _add_group_flags(p)

    p = add("chartable", _cmd_chartable, "character table of the wreath product G wr S_n")
    _add_group_flags(p)
    p.add_argument("--n", type=int, required=True)

    p = add("dim", _cmd_dim, "dimension of an irreducible of G wr S_n")
    _add_group_flags(p)
    p.add_argument("--shape", required=True, help='colored partition, e.g. "1;1"')

    p = add("schur-p", _cmd_schur_p, "wreath Schur function in a power-sum basis")
    _add_group_flags(p)
    p.add_argument("--shape", required=True)
    p.add_argument("--basis", choices=WREATH_BASES, default="p_char")

    return parser


def _error_payload(exc: Exception) -> dict:
    err = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ValidationFailed):
        err["violations"] = list(exc.report.violations)
    return {"error": err}


def _glue_dash_values(argv: list[str]) -> list[str]:
    # "-" marks an empty partition, so "--shape -;2" must not read as a flag
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (tok.startswith("--") and "=" not in tok and nxt is not None
                and nxt.startswith("-") and not nxt.startswith("--") and nxt not in ("-h",)):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv=None, stdout=None, stderr=None) -> int:
    """Run one command; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = _glue_dash_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        stderr.write(parser.format_usage())
        stderr.write(f"{exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    as_json = args.format == "json"
    old_cap = symfunc.get_degree_cap()
    try:
        if args.degree_cap is not None:
            symfunc.set_degree_cap(args.degree_cap)
        text, payload = args.handler(args)
    except _UsageError as exc:
        stderr.write(f"{exc}\n")
        return 2
    except (WreathSFError, ValueError) as exc:
        if as_json:
            stdout.write(json.dumps(_error_payload(exc)) + "\n")
        else:
            stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    finally:
        symfunc.set_degree_cap(old_cap)

    stdout.write((json.dumps(payload) if as_json else text) + "\n")
    return 0


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
