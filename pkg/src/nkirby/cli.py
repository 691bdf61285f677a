"""Command-line interface: ``nkirby <verb> ...``.

Exit status is 0 on success, 1 on a domain error (one ``Name: message``
line on stderr) and 2 on a usage error.
"""

import argparse
import sys
from pathlib import Path

from . import io
from .errors import KirbyError
from .invariants import equivalent, homology, pi_1_presentation
from .moves import apply
from .recognize import recognize, recognize_diagram
from .reduce import reduce_general


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _params(tokens):
    out = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep:
            raise _UsageError(f"expected key=value, got {tok!r}")
        out[key] = value
    return out


def records(d):
    """Stable ``key=value`` lines describing ``d``."""
    k = d.dim.k
    h = homology(d)
    nf, _ = reduce_general(d)
    hk = h[k - 1]
    lines = [
        f"h.0={h[0]}",
        f"h.k-1.rank={hk.rank}",
        f"h.k-1.torsion={','.join(str(t) for t in hk.torsion)}",
    ]
    # at k = 2 the fundamental group is cyclic, hence abelian, with one generator
    if k >= 3 or len(d.dotted) <= 1:
        lines.append(f"pi.k-1={hk}")
    lines.append(f"normal_form={nf}")
    lines.append(f"name={recognize(nf, d.dim)}")
    return "".join(line + "\n" for line in lines)


def _invariants_text(d):
    k = d.dim.k
    h = homology(d)
    out = [f"dim ({d.dim.n},{k}), framing group {d.group.value}"]
    out += [f"H_{deg} = {g}" for deg, g in sorted(h.items()) if not g.is_trivial or deg == 0]
    if k >= 3:
        out.append(f"pi_{k - 1} = {h[k - 1]}")
    else:
        out.append(f"pi_1 = {pi_1_presentation(d)}")
    return "\n".join(out) + "\n"


def _cmd_validate(args, out):
    d = io.parse(args.file)
    out.write(f"ok: dim ({d.dim.n},{d.dim.k}), {len(d.dotted)} dotted, {len(d.framed)} framed\n")


def _cmd_reduce(args, out):
    d = io.parse(args.file)
    nf, cert = reduce_general(d)
    if args.emit_cert:
        Path(args.emit_cert).write_text(io.print_certificate(cert), encoding="utf-8")
    out.write(f"# normal form {nf}\n# {len(cert)} moves\n")
    out.write(io.print_diagram(nf.diagram))


def _cmd_invariants(args, out):
    d = io.parse(args.file)
    out.write(records(d) if args.format == "records" else _invariants_text(d))


def _cmd_equiv(args, out):
    d1, d2 = io.parse(args.a), io.parse(args.b)
    v = equivalent(d1, d2)
    out.write(f"verdict={v.verdict}\n")
    if v.verdict == "diffeomorphic":
        out.write(f"normal_form={v.normal_form}\nname={v.name}\n")
    elif v.verdict == "distinguished":
        out.write(f"invariant={v.invariant}\nvalues={v.values[0]} | {v.values[1]}\n")
    else:
        for key, (x, y) in sorted(v.report.items()):
            out.write(f"{key}={x} | {y}\n")


def _cmd_induce(args, out):
    d = io.parse(args.file)
    out.write(io.print_diagram(io.induce(d, args.n, args.k)))


def _cmd_recognize(args, out):
    d = io.parse(args.file)
    name = recognize_diagram(d)
    out.write(f"{name}\n{name.latex()}\n")


def _cmd_replay(args, out):
    d = io.parse(args.file)
    cert = io.parse_certificate(args.cert)
    out.write(io.print_diagram(apply(d, cert)))


def _cmd_examples(args, out):
    if args.name is None:
        if args.out:
            for name, text in io.examples().items():
                Path(args.out, f"{name}.kd").write_text(text, encoding="utf-8")
        out.write("".join(name + "\n" for name in io.EXAMPLES))
        return
    text = io.examples(args.name, **_params(args.params))
    if args.out:
        Path(args.out, f"{args.name}.kd").write_text(text, encoding="utf-8")
    else:
        out.write(text)


def build_parser():
    p = _Parser(prog="nkirby", description="(n,k)-Kirby diagram calculus")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="parse and check a diagram file")
    s.add_argument("file")
    s.set_defaults(run=_cmd_validate)

    s = sub.add_parser("reduce", help="reduce to normal form")
    s.add_argument("file")
    s.add_argument("--emit-cert", metavar="PATH")
    s.set_defaults(run=_cmd_reduce)

    s = sub.add_parser("invariants", help="homology and homotopy data")
    s.add_argument("file")
    s.add_argument("--format", choices=("text", "records"), default="text")
    s.set_defaults(run=_cmd_invariants)

    s = sub.add_parser("equiv", help="decide diffeomorphism of two diagrams")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(run=_cmd_equiv)

    s = sub.add_parser("induce", help="(n,k) diagram induced by a source (4,2) diagram")
    s.add_argument("file")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(run=_cmd_induce)

    s = sub.add_parser("recognize", help="name the handlebody")
    s.add_argument("file")
    s.set_defaults(run=_cmd_recognize)

    s = sub.add_parser("replay", help="apply a certificate")
    s.add_argument("file")
    s.add_argument("--cert", required=True)
    s.set_defaults(run=_cmd_replay)

    s = sub.add_parser("examples", help="list or print bundled examples")
    s.add_argument("name", nargs="?")
    s.add_argument("params", nargs="*", help="key=value overrides, e.g. p=4")
    s.add_argument("--out", metavar="DIR")
    s.set_defaults(run=_cmd_examples)
    return p


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        args.run(args, out)
    except _UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except KirbyError as exc:
        err.write(f"{exc.code}: {exc}\n")
        return 1
    except OSError as exc:
        err.write(f"IOError: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
