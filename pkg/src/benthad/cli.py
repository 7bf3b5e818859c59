"""Command-line interface: ``benthad <command> ...`` or ``python3 -m benthad``.

Every command prints a JSON run report. ``--out`` sends it to a file instead,
except for ``construct`` and ``kron`` where ``--out`` is the ``.had`` file to write.
Exit codes: 0 success, 1 usage error, 2 domain error.
"""
from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .affine import orth_group, orth_group_order, saut_transforms
from .bent import (
    EXHAUST_LIMIT,
    K_LIMIT,
    covering_distance,
    default_threads,
    dual,
    kron_seq,
    search_eigenspace,
    search_exhaustive,
)
from .errors import BentHadError
from .groebner import GROEBNER_LIMIT, search_groebner
from .io import RunReport, resolve_matrix, write_matrix_file, write_report
from .matrix import (
    bush_check,
    kronecker,
    paley,
    regularity,
    signs_to_str,
    str_to_signs,
    sylvester,
    sylvester_form,
    symplectic_form,
)
from .symmetry import c_group, factor_order, full_aut, polarities, saut, strong_equivalent

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _add_common(p, matrix=True):
    if matrix:
        p.add_argument("--matrix", required=True,
                       help="alias (s4, s16, s64, paley2-17, symp16, sylvester-H, paley1-Q, paley2-Q) or .had path")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.add_argument("--format", choices=["json"], default="json")


def build_parser():
    parser = _Parser(prog="benthad", description="Hadamard matrices, self-dual bent sequences and their symmetry groups.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build a Hadamard matrix and write it as .had")
    kinds = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    k = kinds.add_parser("sylvester")
    k.add_argument("h", type=int, help="number of doubling steps; order 2^h")
    k = kinds.add_parser("paley")
    k.add_argument("q", type=int)
    k.add_argument("--kind", choices=["I", "II"], default="I")
    k = kinds.add_parser("symplectic")
    k.add_argument("m", type=int, help="even m; order 2^m")
    k = kinds.add_parser("kronecker")
    k.add_argument("a")
    k.add_argument("b")
    for k in kinds.choices.values():
        k.add_argument("--out", help=".had file to write")
        k.add_argument("--format", choices=["json"], default="json")

    p = sub.add_parser("search", help="self-dual (or all) bent sequences")
    _add_common(p)
    p.add_argument("--method", choices=["exhaust", "eigen", "groebner"], default="eigen")
    p.add_argument("--mode", choices=["self_dual", "bent"], default="self_dual",
                   help="bent mode is available with --method exhaust only")
    p.add_argument("--k-limit", type=int, default=K_LIMIT)
    p.add_argument("--exhaust-limit", type=int, default=EXHAUST_LIMIT)
    p.add_argument("--groebner-limit", type=int, default=GROEBNER_LIMIT)
    p.add_argument("--order", choices=["lex", "degrevlex"], default="lex", help="Groebner monomial order")
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: $BENTHAD_THREADS or 1)")

    for name, text in [("saut", "strong automorphism group"), ("aut", "full automorphism group"),
                       ("cgroup", "permutation part of SAut")]:
        _add_common(sub.add_parser(name, help=text))
    p = sub.add_parser("polarities", help="polarities of a symmetric matrix")
    _add_common(p)
    p.add_argument("--limit", type=int, default=None, help="largest |C(H)| to enumerate")

    p = sub.add_parser("equiv", help="strong equivalence K = P H P^t")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--strong", action="store_true", help="strong equivalence (the only kind supported)")
    _add_common(p, matrix=False)

    p = sub.add_parser("verify", help="structural checks on a matrix, optionally a sequence")
    _add_common(p)
    p.add_argument("--sequence", help="sign string such as ++-+")

    p = sub.add_parser("kron", help="Kronecker product of two matrices and optionally two sequences")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--seq-a")
    p.add_argument("--seq-b")
    p.add_argument("--out", help=".had file for the product matrix")
    p.add_argument("--format", choices=["json"], default="json")

    p = sub.add_parser("orth", help="orthogonal group O_m over GF(2) and the transforms it yields")
    p.add_argument("m", type=int)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--out")
    p.add_argument("--format", choices=["json"], default="json")
    return parser


def _cmd_construct(a):
    if a.family == "sylvester":
        h = sylvester(a.h)
    elif a.family == "paley":
        h = paley(a.q, a.kind)
    elif a.family == "symplectic":
        h = sylvester_form(symplectic_form(a.m))
    else:
        h = kronecker(resolve_matrix(a.a), resolve_matrix(a.b))
    if a.out:
        write_matrix_file(h, a.out)
    return h.content_hash, {"v": h.v, "written": a.out, "symmetric": h.symmetric, "regular_sigma": h.sigma}


def _cmd_search(a):
    h = resolve_matrix(a.matrix)
    threads = a.threads if a.threads is not None else default_threads()
    if a.mode == "bent" and a.method != "exhaust":
        raise BentHadError("--mode bent requires --method exhaust")
    if a.method == "exhaust":
        res = search_exhaustive(h, a.mode, a.exhaust_limit, threads)
    elif a.method == "eigen":
        res = search_eigenspace(h, a.k_limit, threads)
    else:
        res = search_groebner(h, a.groebner_limit, a.order)
    out = res.to_json(h.content_hash)
    out["mode"] = a.mode
    if res.extra:
        out["extra"] = {k: v for k, v in sorted(res.extra.items()) if isinstance(v, (int, str, bool, float))}
    return h.content_hash, out


def _cmd_group(a):
    h = resolve_matrix(a.matrix)
    fn = {"saut": saut, "aut": full_aut, "cgroup": c_group}[a.command]
    return h.content_hash, fn(h).to_json()


def _cmd_polarities(a):
    h = resolve_matrix(a.matrix)
    pols = polarities(h, a.limit)
    return h.content_hash, {"count": len(pols), "polarities": [list(p) for p in pols]}


def _cmd_equiv(a):
    h, k = resolve_matrix(a.a), resolve_matrix(a.b)
    p = strong_equivalent(h, k)
    out = {"kind": "strong", "equivalent": p is not None}
    if p is not None:
        out["witness"] = p.to_json()
    return f"{h.content_hash}:{k.content_hash}", out


def _cmd_verify(a):
    h = resolve_matrix(a.matrix)
    out = {"v": h.v, "hadamard": True, "u": h.u, "symmetric": h.symmetric, "regular_sigma": regularity(h)}
    try:
        out["bush"] = bush_check(h)
    except BentHadError as e:
        out["bush"] = None
        out["bush_note"] = str(e)
    if a.sequence:
        x = str_to_signs(a.sequence)
        d = dual(h, x)
        out["sequence"] = {
            "bent": d.bent,
            "self_dual": d.self_dual,
            "dual": signs_to_str(d.dual) if d.bent else None,
            "covering_distance": covering_distance(h, x) if h.u else None,
        }
    return h.content_hash, out


def _cmd_kron(a):
    left, right = resolve_matrix(a.a), resolve_matrix(a.b)
    h = kronecker(left, right)
    out = {"v": h.v, "written": a.out}
    if (a.seq_a is None) != (a.seq_b is None):
        raise BentHadError("give both --seq-a and --seq-b or neither")
    if a.seq_a is not None:
        x = kron_seq(str_to_signs(a.seq_a), str_to_signs(a.seq_b), left, right)
        out["sequence"] = signs_to_str(x)
        out["self_dual"] = True
    if a.out:
        write_matrix_file(h, a.out)
    return h.content_hash, out


def _cmd_orth(a):
    _, count = orth_group(a.m, a.limit)
    transforms = saut_transforms(a.m, a.limit)
    out = {
        "m": a.m,
        "order": count,
        "order_formula": orth_group_order(a.m),
        "order_factored": factor_order(count),
        "saut_transforms": len(transforms),
    }
    return None, out


_DISPATCH = {
    "construct": _cmd_construct,
    "search": _cmd_search,
    "saut": _cmd_group,
    "aut": _cmd_group,
    "cgroup": _cmd_group,
    "polarities": _cmd_polarities,
    "equiv": _cmd_equiv,
    "verify": _cmd_verify,
    "kron": _cmd_kron,
    "orth": _cmd_orth,
}

_FILE_OUT = {"construct", "kron"}


def dispatch(argv) -> RunReport:
    """Parse argv and run one command. Raises _UsageError or BentHadError."""
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    matrix_id, results = _DISPATCH[args.command](args)
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "format", "out")}
    report = RunReport(args.command, params, results, matrix_id, (time.perf_counter() - t0) * 1e3)
    report.extra["out"] = None if args.command in _FILE_OUT else args.out
    return report


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        report = dispatch(argv)
    except _UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except (BentHadError, OSError) as e:
        print(f"benthad: error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    text = write_report(report, report.extra["out"])
    if not report.extra["out"]:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
