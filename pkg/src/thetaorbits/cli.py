"""Command-line front end.

    thetaorbits orbits --group A5 --u "(1,2)(3,4)"
    thetaorbits orbits --group Sz:8 --restrict involutions --json
    thetaorbits radical --group "prod(A5,S4)"
    thetaorbits verify suzuki.q8

Exit codes: 0 success, 1 a claim failed, 2 usage or parse error,
3 resource cap exceeded, 4 internal invariant breach.
"""
from __future__ import annotations

import argparse
import datetime as dt
import json
import logging
import sys
from dataclasses import asdict, dataclass, field

from . import __version__
from .cache import load_or_build
from .elements import ElementError
from .families import SpecError, make_group, order_formula, parse_spec
from .field import FieldError
from .orbits import RESTRICTIONS, orbit_report, restriction_mask
from .table import DEFAULT_CAP, CapExceeded

FORMAT_VERSION = 1

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3, 4

log = logging.getLogger("thetaorbits")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    group: str | None = None
    u: str | None = None
    restrict: str | None = None
    map: str = "theta"
    cap: int = DEFAULT_CAP
    cache_dir: str | None = None
    no_cache: bool = False
    json: bool = False
    workers: int = 1
    members: bool = False
    selector: str | None = None
    big: bool = False
    element: str | None = None
    q: int | None = None

    def __post_init__(self):
        if self.cap <= 0:
            raise UsageError("--cap must be positive")
        if self.workers <= 0:
            raise UsageError("--workers must be positive")
        if self.group is not None:
            parse_spec(self.group)


@dataclass
class ReportEnvelope:
    payload: dict
    config: dict
    tool: str = "thetaorbits"
    version: str = __version__
    format: int = FORMAT_VERSION
    timestamp: str = field(default_factory=lambda: dt.datetime.now(dt.timezone.utc).isoformat(timespec="seconds"))

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


class Writer:
    """Single output sink: JSON lines or plain text."""

    def __init__(self, cfg: RunConfig, out=None):
        self.cfg = cfg
        self.out = out or sys.stdout
        self._echo = {k: v for k, v in asdict(cfg).items() if v not in (None, False)}

    def emit(self, payload: dict, text: str):
        if self.cfg.json:
            print(ReportEnvelope(payload, self._echo).to_json(), file=self.out)
        else:
            print(text, file=self.out)
        self.out.flush()


def _group(cfg: RunConfig):
    if cfg.no_cache:
        return make_group(cfg.group, cfg.cap)
    return load_or_build(cfg.group, cfg.cap, cfg.cache_dir)


def _need_group(cfg):
    if not cfg.group:
        raise UsageError("--group is required")


def _targets(G, cfg: RunConfig) -> list[int]:
    from .verify import class_reps
    if cfg.u is not None and cfg.restrict is not None:
        raise UsageError("give either --u or --restrict, not both")
    if cfg.u is not None:
        return [G.parse(cfg.u)]
    mask = restriction_mask(G.orders, cfg.restrict or "two_elements")
    return [r for r, _ in class_reps(G, mask)]


def _report_text(rep, G, members: bool) -> str:
    hist = ", ".join(f"{k}:{v}" for k, v in rep.histogram.items()) or "-"
    lines = [f"{rep.group}  {rep.kind}  u = {rep.u_text}",
             f"  beta = {rep.beta}   |Theta| = {rep.theta_set_size}   max preperiod = {rep.preperiod_max}",
             f"  cycle lengths: {hist}"]
    for c in rep.nontrivial():
        body = " -> ".join(G.format(i) for i in c.members) if members else G.format(c.rep)
        lines.append(f"    [{c.length}] {body}")
    return "\n".join(lines)


def cmd_orbits(cfg: RunConfig, w: Writer) -> int:
    _need_group(cfg)
    G = _group(cfg)
    for u in _targets(G, cfg):
        rep = orbit_report(G, u, cfg.map, cfg.workers)
        w.emit(rep.to_record(G, cfg.members), _report_text(rep, G, cfg.members))
    return EXIT_OK


def cmd_beta(cfg: RunConfig, w: Writer) -> int:
    _need_group(cfg)
    G = _group(cfg)
    orders = G.orders
    for u in _targets(G, cfg):
        rep = orbit_report(G, u, cfg.map, cfg.workers)
        rec = {"group": G.spec, "map": cfg.map, "u": G.format(u), "order": int(orders[u]), "beta": rep.beta}
        w.emit(rec, f"{G.format(u):>30}  order {int(orders[u]):>4}  beta {rep.beta}")
    return EXIT_OK


def cmd_radical(cfg: RunConfig, w: Writer) -> int:
    from .subgroups import soluble_radical
    _need_group(cfg)
    G = _group(cfg)
    R = soluble_radical(G)
    rec = {"group": G.spec, "order": len(G), "radical_order": R.radical.order, "index": R.index,
           "generators": [G.format(g) for g in R.radical.generators],
           "certificate": {"normal": R.normal, "soluble": R.soluble, "maximal": R.maximal,
                           "class_reps_checked": len(R.class_reps)}}
    text = (f"{G.spec}: |G| = {len(G)}  |R| = {R.radical.order}  index = {R.index}\n"
            f"  generators: {', '.join(rec['generators']) or '-'}\n"
            f"  certificate: normal={R.normal} soluble={R.soluble} maximal={R.maximal}")
    w.emit(rec, text)
    if not R.certified:
        log.error("radical certificate failed")
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_soluble(cfg: RunConfig, w: Writer) -> int:
    from .subgroups import derived_series, lower_central_series
    _need_group(cfg)
    G = _group(cfg)
    ds = [H.order for H in derived_series(G)]
    lcs = [H.order for H in lower_central_series(G)]
    kappa, _ = _kappa(G, "theta", "two_elements")
    ekappa, _ = _kappa(G, "engel", "all")
    soluble, nilpotent = ds[-1] == 1, lcs[-1] == 1
    rec = {"group": G.spec, "derived_series": ds, "lower_central_series": lcs, "soluble": soluble,
           "nilpotent": nilpotent, "theta_kappa_two_elements": kappa, "engel_kappa": ekappa}
    text = (f"{G.spec}: soluble={soluble} (derived {ds}), nilpotent={nilpotent} (lower central {lcs})\n"
            f"  max theta-beta over 2-elements = {kappa}, max engel-beta = {ekappa}")
    w.emit(rec, text)
    if soluble != (kappa == 0) or nilpotent != (ekappa == 0):
        log.error("orbit criterion disagrees with the series")
        return EXIT_INTERNAL
    return EXIT_OK


def _kappa(G, kind, restrict):
    from .verify import class_reps
    reps = class_reps(G, restriction_mask(G.orders, restrict))
    betas = [orbit_report(G, r, kind).beta for r, _ in reps]
    return max(betas, default=0), betas


def cmd_classes(cfg: RunConfig, w: Writer) -> int:
    from .subgroups import conjugacy_classes
    _need_group(cfg)
    G = _group(cfg)
    orders = G.orders
    for r, size in conjugacy_classes(G):
        rec = {"group": G.spec, "rep": G.format(r), "size": size, "order": int(orders[r])}
        w.emit(rec, f"{G.format(r):>30}  size {size:>6}  order {int(orders[r])}")
    return EXIT_OK


def cmd_decompose(cfg: RunConfig, w: Writer) -> int:
    from .elements import MatrixElt
    from .suzuki import SuzukiParams, in_borel, suzuki_compose, suzuki_decompose
    if cfg.q is None or cfg.element is None:
        raise UsageError("decompose needs --q and --element")
    P = SuzukiParams.from_q(cfg.q)
    F = P.field
    E = MatrixElt.parse(cfg.element, F, 4)
    if in_borel(E):
        rec = {"q": cfg.q, "element": str(E), "in_borel": True}
        w.emit(rec, "element lies in the Borel subgroup (no h1 d z h2 factorization)")
        return EXIT_OK
    a, b, k, c, d = suzuki_decompose(E, P)
    if suzuki_compose(a, b, k, c, d, P) != E:
        rec = {"q": cfg.q, "element": str(E), "in_borel": False, "in_group": False}
        w.emit(rec, "matrix is not in Sz(q): recomposition differs")
        return EXIT_USAGE
    names = dict(a=a, b=b, k=k, c=c, d=d)
    rec = {"q": cfg.q, "element": str(E), "in_borel": False, **{n: F.format(v) for n, v in names.items()}}
    w.emit(rec, "T({a},{b}) D({k}) z T({c},{d})".format(**{n: F.format(v) for n, v in names.items()}))
    return EXIT_OK


def cmd_order(cfg: RunConfig, w: Writer) -> int:
    _need_group(cfg)
    formula = order_formula(cfg.group)
    G = _group(cfg)
    rec = {"group": G.spec, "formula": formula, "enumerated": len(G),
           "agree": formula is None or formula == len(G)}
    w.emit(rec, f"{G.spec}: formula {formula}  enumerated {len(G)}")
    return EXIT_OK if rec["agree"] else EXIT_INTERNAL


def cmd_verify(cfg: RunConfig, w: Writer) -> int:
    from . import verify
    sel = cfg.selector or "all"
    ids = verify.select(sel, cfg.big)
    if not ids:
        raise UsageError(f"no claim matches {sel!r}")
    worst = EXIT_OK
    for cid in ids:
        res = verify.run_claim(cid, cfg.big)
        text = f"{res.status.upper():7s} {cid}  ({res.seconds:.2f}s)"
        if res.reason:
            text += f"  {res.reason}"
        w.emit(res.to_record(), text)
        if res.status == "fail":
            worst = EXIT_FAIL
    return worst


COMMANDS = {
    "orbits": cmd_orbits, "beta": cmd_beta, "radical": cmd_radical, "soluble": cmd_soluble,
    "classes": cmd_classes, "decompose": cmd_decompose, "order": cmd_order, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON document per line")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum group order")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--cache-dir", default=None, help="overrides $THETAORBITS_CACHE")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="thetaorbits", description="Eventual orbits of theta_u(g) = [g^-u, g].")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def grouped(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("--group", "-g", required=False)
        return sp

    for name, help_ in (("orbits", "eventual orbits for u or a class restriction"),
                        ("beta", "beta per u")):
        sp = grouped(name, help_)
        sp.add_argument("--u")
        sp.add_argument("--restrict", choices=RESTRICTIONS)
        sp.add_argument("--map", choices=("theta", "engel"), default="theta")
        if name == "orbits":
            sp.add_argument("--members", action="store_true", help="list every cycle in full")
    grouped("radical", "soluble radical with certificate")
    grouped("soluble", "derived and lower central series against the orbit criteria")
    grouped("classes", "conjugacy classes")
    grouped("order", "order formula against enumeration")
    sp = sub.add_parser("decompose", parents=[common], help="Suzuki h1 d z h2 factorization")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--element", required=True)
    sp = sub.add_parser("verify", parents=[common], help="run claim checks by id prefix")
    sp.add_argument("selector", nargs="?", default="all")
    sp.add_argument("--big", action="store_true", help="allow large enumerations")
    sp.add_argument("--list", action="store_true", help="list matching claim ids and exit")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    if args.command == "verify" and args.list:
        from . import verify
        ids = verify.select(args.selector, args.big)
        print("\n".join(ids))
        return EXIT_OK if ids else EXIT_USAGE
    opts = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__}
    try:
        cfg = RunConfig(**opts)
        return COMMANDS[cfg.command](cfg, Writer(cfg))
    except (UsageError, SpecError, FieldError, ElementError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (CapExceeded, MemoryError) as e:
        print(f"resource cap: {e}", file=sys.stderr)
        return EXIT_CAP
    except AssertionError as e:
        print(f"internal invariant breach: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the shutdown flush
        import os
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
