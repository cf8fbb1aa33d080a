"""Command-line interface: ``sweeplab <command> ...``.

Exit codes: 0 success / all pass, 1 a verification failed, 2 malformed
input, 3 domain, parameter or not-in-image error, 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from itertools import islice
from typing import Any

from . import harness
from .classical import (
    enumerate_trapezoid, generator_data, gm_column_length, gorsky_mazin, phi_hl, phi_lw,
    phi_prime_trapezoid, phi_trapezoid, schroder_sweep, zeta,
)
from .errors import AlphabetError, BudgetError, NotInImageError, SweepLabError
from .inversion import (
    DEFAULT_BUDGET, brute_force_inverse, gm_labels, gm_sign, haglund_labels, invert_gm_word,
    invert_haglund, invert_phi, invert_square, invert_trapezoid, square_labels, trapezoid_labels,
    word_domain_size,
)
from .paths import (
    check_word, enumerate_dyck, enumerate_multiset, enumerate_words, format_partition, levels,
    parse_partition,
)
from .polys import LaurentPoly2, q_binomial, q_int
from .stats import MINUS, PLUS_REV, hl_catalan, qt_catalan, qt_square
from .sweeps import VARIANTS, BELOW, ABOVE, sweep_general, sweep_perturbed, sweep_variant, variant_order
from .sweeps import directed_order, EN, DECREASING, LEFT

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN, EXIT_BUDGET = 0, 1, 2, 3, 4
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


def parse_weights(text: str) -> dict[str, int]:
    """``"N=1,D=0,E=-1"`` -> {"N": 1, "D": 0, "E": -1}."""
    out: dict[str, int] = {}
    for item in text.split(","):
        letter, sep, val = item.partition("=")
        letter = letter.strip()
        if not sep or len(letter) != 1:
            raise UsageError(f"bad weight {item!r}; expected LETTER=INT")
        try:
            out[letter] = int(val)
        except ValueError:
            raise UsageError(f"weight of {letter!r} is not an integer") from None
    return out


def read_config(path: str) -> dict[str, str]:
    """key=value lines; blank lines and ``#`` comments ignored."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, val = line.partition("=")
            if not sep:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            out[key.strip().replace("-", "_")] = val.strip()
    return out


# -- output ---------------------------------------------------------------

def emit(fmt: str, text: str, data: Any, rows: list[list] | None = None) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(data, sort_keys=True) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows or [])
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(text + "\n")


def emit_poly(fmt: str, p: LaurentPoly2) -> None:
    emit(fmt, p.format(), p.to_json(), [["q", "t", "c"]] + [list(r) for r in p.to_csv_rows()])


# -- commands -------------------------------------------------------------

def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required here")


def cmd_sweep(args) -> int:
    _need(args, "r", "s", "word")
    w, params = args.word, (args.r, args.s)
    check_word(w)
    if args.perturb:
        image = sweep_perturbed(w, params, args.perturb)
        order = variant_order(w, params, "minus" if args.perturb == BELOW else "plus")
    else:
        image = sweep_variant(w, params, args.variant)
        order = variant_order(w, params, args.variant)
    lv = levels(w, params)
    data = {"word": w, "r": args.r, "s": args.s, "variant": args.variant, "perturb": args.perturb,
            "image": image, "levels": lv, "order": [i + 1 for i in order]}
    text = image
    if args.trace:
        text += "\nlevels: " + " ".join(map(str, lv))
        text += "\norder: " + " ".join(str(i + 1) for i in order)
    emit(args.format, text, data, [["word", "image"], [w, image]])
    return EXIT_OK


def cmd_sweep_general(args) -> int:
    _need(args, "weights", "word")
    wt = parse_weights(args.weights)
    w = args.word
    check_word(w, wt)
    image = sweep_general(w, wt)
    lv = levels(w, wt)
    order = directed_order(w, wt, EN, DECREASING, LEFT, -1)
    data = {"word": w, "weights": wt, "image": image, "levels": lv, "order": [i + 1 for i in order]}
    text = image
    if args.trace:
        text += "\nlevels: " + " ".join(map(str, lv))
        text += "\norder: " + " ".join(str(i + 1) for i in order)
    emit(args.format, text, data, [["word", "image"], [w, image]])
    return EXIT_OK


def cmd_invert(args) -> int:
    _need(args, "word")
    Q = args.word
    check_word(Q)
    n = Q.count("N")
    labels = None
    if args.method == "haglund":
        labels, pre = haglund_labels(Q), [invert_haglund(Q)]
    elif args.method == "square":
        labels, pre = square_labels(Q), [invert_square(Q)]
    elif args.method in ("trapezoid", "phi"):
        _need(args, "k", "m")
        if args.method == "trapezoid":
            labels, pre = trapezoid_labels(Q, n, args.k, args.m), [invert_trapezoid(Q, n, args.k, args.m)]
        else:
            pre = [invert_phi(Q, n, args.k, args.m)]
    elif args.method == "gm":
        _need(args, "b")
        m, sign = gm_sign(n, args.b)
        labels, pre = gm_labels(Q, n, m, sign), [invert_gm_word(Q, n, args.b)]
    else:
        _need(args, "r", "s")
        a, b = n, len(Q) - n
        params, variant = (args.r, args.s), args.variant
        pre = brute_force_inverse(Q, lambda P: sweep_variant(P, params, variant), enumerate_words(a, b),
                                  args.budget, word_domain_size(a, b))
    data = {"method": args.method, "word": Q, "preimages": pre}
    if labels is not None:
        data["labels"] = labels
    text = "\n".join(pre)
    if labels is not None and args.trace:
        text += "\nlabels: " + " ".join(map(str, labels))
    emit(args.format, text, data, [["preimage"]] + [[p] for p in pre])
    if not pre:
        raise NotInImageError(f"{Q!r} has no preimage")
    return EXIT_OK if len(pre) == 1 else EXIT_FAIL


def cmd_map(args) -> int:
    name = args.name
    extra: dict[str, Any] = {}
    if name in ("zeta", "gm"):
        _need(args, "a", "b", "partition")
        pi = parse_partition(args.partition)
        if name == "zeta":
            out = zeta(pi, args.a, args.b, args.route)
        else:
            out = gorsky_mazin(pi, args.a, args.b)
            gd = generator_data(pi, args.a, args.b)
            extra = {"generators": list(gd.generators),
                     "column_lengths": [gm_column_length(g, args.a, gd.delta_complement) for g in gd.generators]}
        text = format_partition(out)
        data = dict(extra, map=name, a=args.a, b=args.b, partition=format_partition(pi), image=text)
        if args.trace and extra:
            text += "\ngenerators: " + ",".join(map(str, extra["generators"]))
            text += "\ncolumns: " + ",".join(map(str, extra["column_lengths"]))
        emit(args.format, text, data, [["partition", "image"], [format_partition(pi), data["image"]]])
        return EXIT_OK
    _need(args, "word")
    w = args.word
    if name in ("phi", "phi-prime"):
        _need(args, "k", "m")
        fn = phi_trapezoid if name == "phi" else phi_prime_trapezoid
        image = fn(w, w.count("N"), args.k, args.m)
    elif name == "phi-hl":
        image = phi_hl(w)
    elif name == "phi-lw":
        image = phi_lw(w)
    else:
        image = schroder_sweep(w, dyck=args.dyck)
    emit(args.format, image, {"map": name, "word": w, "image": image}, [["word", "image"], [w, image]])
    return EXIT_OK


def cmd_poly(args) -> int:
    kind = args.kind
    if kind == "catalan":
        _need(args, "r", "s", "a", "b")
        p = qt_catalan((args.r, args.s), (args.a, args.b), args.pairing, args.budget)
    elif kind == "square":
        _need(args, "a", "b")
        p = qt_square((args.a, args.b), args.budget)
    elif kind == "hl":
        _need(args, "n")
        p = hl_catalan(args.n, args.budget)
    elif kind == "qbin":
        _need(args, "a", "b")
        p = q_binomial(args.a, args.b)
    else:
        _need(args, "n")
        p = q_int(args.n)
    emit_poly(args.format, p)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    kind = args.kind
    if kind == "words":
        _need(args, "a", "b")
        it = enumerate_words(args.a, args.b)
    elif kind == "dyck":
        _need(args, "a", "b", "r", "s")
        it = enumerate_dyck(args.a, args.b, (args.r, args.s))
    elif kind == "trapezoid":
        _need(args, "n", "k", "m")
        it = enumerate_trapezoid(args.n, args.k, args.m)
    else:
        _need(args, "counts")
        counts = parse_weights(args.counts)
        it = enumerate_multiset(counts, "".join(counts))
    words = list(islice(it, args.limit) if args.limit else it)
    emit(args.format, "\n".join(words), {"kind": kind, "count": len(words), "words": words},
         [["word"]] + [[w] for w in words])
    return EXIT_OK


_CONFIG_FIELDS = [f for f in harness.CampaignConfig.__dataclass_fields__]


def cmd_verify(args) -> int:
    cfg = harness.CampaignConfig(**{f: getattr(args, f) for f in _CONFIG_FIELDS})
    only = harness.parse_point(args.point) if args.point else None

    def progress(res):
        if not args.quiet:
            print(f"[{res.status}] {json.dumps(res.params, sort_keys=True)} checked={res.checked}",
                  file=sys.stderr)

    report = harness.run_campaign(args.suite, cfg, progress, timing=args.timing, only=only)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(harness.dumps(report))
    if args.format == "json":
        sys.stdout.write(harness.dumps(report))
    elif args.format == "csv":
        rows = [["params", "status", "checked", "counterexample"]]
        for p in report["points"]:
            rows.append([json.dumps(p["params"], sort_keys=True), p["status"], p["checked"],
                         json.dumps(p["counterexample"], sort_keys=True) if p["counterexample"] else ""])
        emit("csv", "", None, rows)
    else:
        t = report["totals"]
        lines = [f"{report['campaign']}: {report['status']} "
                 f"({t['pass']} pass, {t['fail']} fail, {t['skipped-budget']} skipped; {t['checked']} checked)"]
        for p in report["points"]:
            if p["status"] == harness.FAIL:
                lines.append(f"  FAIL {json.dumps(p['params'], sort_keys=True)}: "
                             f"{json.dumps(p['counterexample'], sort_keys=True)}")
        if "wall_time_s" in report:
            lines.append(f"  wall time {report['wall_time_s']:.3f}s")
        sys.stdout.write("\n".join(lines) + "\n")
    return harness.exit_code(report)


# -- parser ---------------------------------------------------------------

# built-in defaults, applied after the config file for options left unset
DEFAULTS: dict[str, Any] = dict(
    format="text", variant="minus", budget=DEFAULT_BUDGET, route="hook", pairing=MINUS,
    **{f: getattr(harness.CampaignConfig, f) for f in _CONFIG_FIELDS if f not in ("variant", "budget", "jobs")},
)


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--config", metavar="FILE", help="key=value defaults; flags override them")

    parser = argparse.ArgumentParser(prog="sweeplab", description="Sweep maps on lattice words.")
    sub = parser.add_subparsers(dest="command", required=True)
    subs = {}

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_, description=help_)
        p.set_defaults(func=fn)
        subs[name] = p
        return p

    p = add("sweep", cmd_sweep, "apply a sweep variant to a word over {N, E}")
    p.add_argument("--r", type=int, help="weight of N")
    p.add_argument("--s", type=int, help="weight of E")
    p.add_argument("--variant", choices=list(VARIANTS))
    p.add_argument("--perturb", choices=[BELOW, ABOVE], help="slope just below or above -s/r (r > 0 > s)")
    p.add_argument("--word")
    p.add_argument("--trace", action="store_true", help="also print levels and the sweep order")

    p = add("sweep-general", cmd_sweep_general, "weighted sweep over an arbitrary alphabet")
    p.add_argument("--weights", help="e.g. N=1,D=0,E=-1")
    p.add_argument("--word")
    p.add_argument("--trace", action="store_true")

    p = add("invert", cmd_invert, "invert a sweep by a bounce path or by exhaustive search")
    p.add_argument("--method", choices=["haglund", "trapezoid", "phi", "square", "gm", "brute"], required=True)
    p.add_argument("--word")
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--b", type=int, help="gm: width, must be n*m +/- 1")
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--variant", choices=list(VARIANTS))
    p.add_argument("--budget", type=int)
    p.add_argument("--trace", action="store_true", help="also print the reconstructed labels")

    p = add("map", cmd_map, "apply one of the classical bijections")
    p.add_argument("name", choices=["phi", "phi-prime", "phi-hl", "phi-lw", "schroder", "zeta", "gm"])
    p.add_argument("--word")
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--partition", help="comma-separated parts, e.g. 4,4,4,2,2,1")
    p.add_argument("--route", choices=["hook", "frontier"])
    p.add_argument("--dyck", action="store_true", help="schroder: reject non-Schroder inputs")
    p.add_argument("--trace", action="store_true")

    p = add("poly", cmd_poly, "compute a q,t-polynomial")
    p.add_argument("kind", choices=["catalan", "square", "hl", "qbin", "qint"])
    for flag in ("r", "s", "a", "b", "n"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--pairing", choices=[MINUS, PLUS_REV])
    p.add_argument("--budget", type=int)

    p = add("enumerate", cmd_enumerate, "list words of a domain")
    p.add_argument("kind", choices=["words", "dyck", "trapezoid", "multiset"])
    for flag in ("a", "b", "r", "s", "n", "k", "m"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--counts", help="multiset letter counts, e.g. N=2,D=1,E=2")
    p.add_argument("--limit", type=int)

    p = add("verify", cmd_verify, "run a verification campaign")
    p.add_argument("suite", choices=sorted(harness.SUITES))
    for f in _CONFIG_FIELDS:
        if f == "variant":
            p.add_argument("--variant", choices=["minus", "plus"])
        else:
            p.add_argument(f"--{f}", type=int)
    p.add_argument("--point", help="run a single grid point, e.g. r=2,s=-1")
    p.add_argument("--output", metavar="FILE", help="also write the JSON report here")
    p.add_argument("--timing", action="store_true", help="record wall time in the report")
    p.add_argument("--quiet", action="store_true", help="no progress lines on stderr")
    return parser, subs


def _apply_config(args, sub: argparse.ArgumentParser) -> None:
    values = read_config(args.config) if args.config else {}
    actions = {a.dest: a for a in sub._actions}
    for key, raw in values.items():
        if key not in actions or key in ("config", "help", "func"):
            raise UsageError(f"unknown config key {key!r} for {args.command}")
        if getattr(args, key) is not None and getattr(args, key) is not False:
            continue
        act = actions[key]
        if act.nargs == 0:
            val = raw.lower() in ("1", "true", "yes", "on")
        else:
            try:
                val = act.type(raw) if act.type else raw
            except ValueError:
                raise UsageError(f"config value for {key!r} has the wrong type") from None
            if act.choices and val not in act.choices:
                raise UsageError(f"config value {val!r} not allowed for {key!r}")
        setattr(args, key, val)
    if "jobs" in actions and args.jobs is None:
        args.jobs = harness.default_jobs()
    for key, val in DEFAULTS.items():
        if key in actions and getattr(args, key) is None:
            setattr(args, key, val)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, subs = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, subs[args.command])
        return args.func(args)
    except (UsageError, AlphabetError, OSError) as exc:
        print(f"sweeplab: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetError as exc:
        print(f"sweeplab: budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (SweepLabError, ValueError) as exc:
        print(f"sweeplab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
