"""Command-line interface.

Subcommands:
  count               self-dual count for any length (or --kind at p-power)
  table               length/count rows up to a bound
  enumerate           all cyclic / self-dual codes of length p^a
  dual                canonical dual of a code literal
  normalize           canonical form of an ideal given by generators
  decompose           transform components of a composite-length code
  selfdual-composite  all Euclidean self-dual codes of composite length
  verify              run the built-in check suite

Output is plain text by default; --structured switches every subcommand to
tab-separated key=value records.  Exit codes: 0 success, 1 domain error,
2 usage error, 3 verify failure.
"""

from __future__ import annotations

import argparse
import sys

from . import checks
from .gring import DomainError
from .cyclic import (enumerate_ideals, format_code, make_params, normalize,
                     parse_code, parse_qpoly)
from .duality import enumerate_self_dual, euclidean_dual, hermitian_dual
from .counting import (count_all, count_E_composite, count_E_prime_power,
                       count_H_prime_power, emit_table)
from .dft import (decompose_code, enumerate_self_dual_composite,
                  format_decomposed, make_composite)


def _split_prime_power(p, n):
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return (a, n == 1)


def _parse_gens(ring, n, text):
    gens = []
    for part in text.split(";"):
        part = part.strip()
        if part:
            gens.append(parse_qpoly(ring, n, part))
    return gens


def _cmd_count(args):
    kind = args.kind or "euclidean"
    if kind == "euclidean":
        value = count_E_composite(args.p, args.s, args.n)
    else:
        a, is_pp = _split_prime_power(args.p, args.n)
        if not is_pp:
            raise DomainError("--kind %s needs a prime-power length: n=%d is "
                              "not a power of p=%d" % (kind, args.n, args.p))
        params = make_params(args.p, args.s, a)
        if kind == "cyclic":
            value = count_all(params)
        else:
            value = count_H_prime_power(params)
    if args.structured:
        print("op=count\tp=%d\ts=%d\tn=%d\tkind=%s\tcount=%d"
              % (args.p, args.s, args.n, kind, value))
    else:
        print(value)
    return 0


def _cmd_table(args):
    for n, count in emit_table(args.p, args.s, args.max):
        if args.structured:
            print("op=table\tp=%d\ts=%d\tn=%d\tcount=%d"
                  % (args.p, args.s, n, count))
        else:
            print("%d %d" % (n, count))
    return 0


def _cmd_enumerate(args):
    params = make_params(args.p, args.s, args.a)
    if args.kind == "cyclic":
        codes = enumerate_ideals(params)
    else:
        codes = enumerate_self_dual(params, args.kind)
    for idx, code in enumerate(codes):
        if args.structured:
            print("op=enumerate\tkind=%s\tindex=%d\tcode=%s"
                  % (args.kind, idx, format_code(code)))
        else:
            print(format_code(code))
    return 0


def _cmd_dual(args):
    code = parse_code(args.code)
    if args.kind == "euclidean":
        dual = euclidean_dual(code)
    else:
        dual = hermitian_dual(code)
    if args.structured:
        print("op=dual\tkind=%s\tcode=%s\tdual=%s"
              % (args.kind, format_code(code), format_code(dual)))
    else:
        print(format_code(dual))
    return 0


def _cmd_normalize(args):
    params = make_params(args.p, args.s, args.a)
    code = normalize(params, _parse_gens(params.ring, params.n, args.gens))
    if args.structured:
        print("op=normalize\tcode=%s" % format_code(code))
    else:
        print(format_code(code))
    return 0


def _cmd_decompose(args):
    cp = make_composite(args.p, args.s, args.n)
    dc = decompose_code(cp, _parse_gens(cp.ring, cp.n, args.gens))
    if args.structured:
        print("op=decompose\tn=%d\tcode=%s" % (cp.n, format_decomposed(dc)))
    else:
        print(format_decomposed(dc))
    return 0


def _cmd_selfdual_composite(args):
    cp = make_composite(args.p, args.s, args.n)
    for idx, dc in enumerate(enumerate_self_dual_composite(cp)):
        if args.structured:
            print("op=selfdual-composite\tindex=%d\tcode=%s"
                  % (idx, format_decomposed(dc)))
        else:
            print(format_decomposed(dc))
    return 0


def _cmd_verify(args):
    ok = checks.run(level=args.level, structured=args.structured)
    return 0 if ok else 3


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--structured", action="store_true",
                        help="emit tab-separated key=value records")
    top = argparse.ArgumentParser(
        prog="grcyclic",
        description="cyclic codes over GR(p^2, s): counts, duals, transforms")
    sub = top.add_subparsers(dest="command", required=True)

    cnt = sub.add_parser("count", parents=[common],
                         help="self-dual code count at length n")
    cnt.add_argument("--p", type=int, required=True)
    cnt.add_argument("--s", type=int, required=True)
    cnt.add_argument("--n", type=int, required=True)
    cnt.add_argument("--kind", choices=("cyclic", "euclidean", "hermitian"),
                     help="count at prime-power length (default: Euclidean "
                          "self-dual, any length)")
    cnt.set_defaults(func=_cmd_count)

    tab = sub.add_parser("table", parents=[common],
                         help="Euclidean self-dual counts for n = 1..max")
    tab.add_argument("--p", type=int, required=True)
    tab.add_argument("--s", type=int, required=True)
    tab.add_argument("--max", type=int, required=True)
    tab.set_defaults(func=_cmd_table)

    enu = sub.add_parser("enumerate", parents=[common],
                         help="list codes of length p^a, one literal per line")
    enu.add_argument("--p", type=int, required=True)
    enu.add_argument("--s", type=int, required=True)
    enu.add_argument("--a", type=int, required=True)
    enu.add_argument("--kind", choices=("cyclic", "euclidean", "hermitian"),
                     required=True)
    enu.set_defaults(func=_cmd_enumerate)

    dua = sub.add_parser("dual", parents=[common],
                         help="dual of a code literal")
    dua.add_argument("--kind", choices=("euclidean", "hermitian"), required=True)
    dua.add_argument("--code", required=True, metavar="LITERAL")
    dua.set_defaults(func=_cmd_dual)

    nor = sub.add_parser("normalize", parents=[common],
                         help="canonical form of the ideal <gens>")
    nor.add_argument("--p", type=int, required=True)
    nor.add_argument("--s", type=int, required=True)
    nor.add_argument("--a", type=int, required=True)
    nor.add_argument("--gens", required=True, metavar="POLY;POLY;...")
    nor.set_defaults(func=_cmd_normalize)

    dec = sub.add_parser("decompose", parents=[common],
                         help="transform decomposition of <gens> at length n")
    dec.add_argument("--p", type=int, required=True)
    dec.add_argument("--s", type=int, required=True)
    dec.add_argument("--n", type=int, required=True)
    dec.add_argument("--gens", required=True, metavar="POLY;POLY;...")
    dec.set_defaults(func=_cmd_decompose)

    sdc = sub.add_parser("selfdual-composite", parents=[common],
                         help="all Euclidean self-dual codes of length n")
    sdc.add_argument("--p", type=int, required=True)
    sdc.add_argument("--s", type=int, required=True)
    sdc.add_argument("--n", type=int, required=True)
    sdc.set_defaults(func=_cmd_selfdual_composite)

    ver = sub.add_parser("verify", parents=[common],
                         help="run the self-check suite")
    ver.add_argument("--level", choices=("quick", "full"), default="quick")
    ver.set_defaults(func=_cmd_verify)
    return top


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
