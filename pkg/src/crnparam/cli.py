"""
Command-line interface for crnparam
"""

import argparse
import json
import logging
import sys

from .analysis import emit, numeric_verify, to_document
from .analysis.parametrization import ParametrizationAnalyzer
from .errors import CrnError, ParseError, SchemeError
from .fileio import network_document, parse_scheme, read_network, render_network
from .network import condense, default_vstar, redirect, structure_report
from .translation import certify, translate
from .utils.config import load_config, update_config

logger = logging.getLogger(__name__)


def _vstar(text):
    try:
        ids = frozenset(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}") from None
    if not ids:
        raise argparse.ArgumentTypeError("empty vertex list")
    return ids


def build_parser():
    parser = argparse.ArgumentParser(
        prog="crnparam",
        description="Exact equilibrium parametrization of (generalized) mass-action networks",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="INFO with -v, DEBUG with -vv")
    parser.add_argument("--config", default=None, help="JSON configuration file")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name, help_text):
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("file", help="network file (@mas or @gcrn)")
        sub.add_argument("--json", action="store_true", help="machine-readable output")
        return sub

    command("analyze", "deficiencies, linkage classes and weak reversibility")
    command("condense", "network on classes of equal stoichiometric complexes")

    sub = command("redirect", "V*-directed network and merged rate symbols")
    sub.add_argument("--vstar", type=_vstar, default=None, help="representative ids, e.g. 1,2,4")

    sub = command("translate", "translated network and equivalence certificate")
    sub.add_argument("--scheme", required=True, help="translation scheme file")
    sub.add_argument("--auto-phantom", action="store_true", help="add phantom edges from default representatives")

    sub = command("parametrize", "symbolic parametrization of the equilibria")
    sub.add_argument("--scheme", default=None, help="translate with this scheme first")
    sub.add_argument("--auto-phantom", action="store_true", help="add phantom edges from default representatives")
    sub.add_argument("--vstar", type=_vstar, default=None, help="representative ids, e.g. 1,2,4")
    sub.add_argument("--latex", action="store_true", help="display-math output")

    sub = command("verify", "check a parametrization at seeded random parameter values")
    sub.add_argument("--scheme", default=None, help="translate with this scheme first")
    sub.add_argument("--auto-phantom", action="store_true", help="add phantom edges from default representatives")
    sub.add_argument("--vstar", type=_vstar, default=None, help="representative ids, e.g. 1,2,4")
    sub.add_argument("--samples", type=int, default=None, help="number of samples (default from config)")
    sub.add_argument("--seed", type=int, default=42)
    sub.add_argument("--tol", type=float, default=1e-8)
    return parser


def _read(path):
    try:
        with open(path, "rb") as f:
            data = f.read()
    except OSError as e:
        raise CrnError(f"cannot read {path}: {e.strerror}") from e
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        column = e.start - (data.rfind(b"\n", 0, e.start) + 1) + 1
        raise ParseError(f"{path} is not valid UTF-8 (byte offset {e.start})", line, column) from e


def _load(path):
    return read_network(_read(path))


def _translated(network_file, args):
    """Translate when a scheme is given; returns (network, certificate or None)"""
    if not getattr(args, "scheme", None):
        return network_file.network, None
    text = _read(args.scheme)
    try:
        scheme = parse_scheme(text, network_file)
        translated, edge_map = translate(network_file.network, scheme, auto_phantom=args.auto_phantom)
    except SchemeError as e:
        raise ParseError(f"{args.scheme}: {e.message}") from e
    return translated, certify(network_file.network, translated, edge_map)


def _output_format(args, config):
    """--json and --latex win over the configured default; latex only applies to parametrize"""
    if args.json:
        return "json"
    if getattr(args, "latex", False):
        return "latex"
    fmt = config["output"]["format"]
    if fmt == "latex" and args.command != "parametrize":
        return "text"
    return fmt


def _dump(document, indent=2):
    return json.dumps(document, indent=indent, sort_keys=True)


def _analyze(args, config):
    report = structure_report(_load(args.file).network)
    return _dump(report.to_dict(), args.indent) if args.format == "json" else report.format()


def _condense(args, config):
    net = _load(args.file).network
    condensed = condense(net)
    if args.format == "json":
        return _dump(
            {
                "classes": [list(members) for members in condensed.classes],
                "network": network_document(condensed.to_gcrn()),
            },
            args.indent,
        )
    return condensed.format()


def _redirect(args, config):
    net = _load(args.file).network
    vstar = args.vstar if args.vstar is not None else default_vstar(net)
    directed, substitutions = redirect(net, vstar)
    if args.format == "json":
        return _dump(
            {
                "vstar": sorted(vstar),
                "network": network_document(directed),
                "substitutions": {name: str(expr) for name, expr in substitutions.items()},
            },
            args.indent,
        )
    lines = [f"# V* = {{{', '.join(map(str, sorted(vstar)))}}}"]
    lines += [f"# {name} = {expr}" for name, expr in sorted(substitutions.items())]
    return "\n".join(lines) + "\n" + render_network(directed).rstrip("\n")


def _translate(args, config):
    network_file = _load(args.file)
    translated, certificate = _translated(network_file, args)
    if args.format == "json":
        return _dump({"network": network_document(translated), "certificate": certificate.to_dict()}, args.indent)
    status = "valid" if certificate.valid else "INVALID: " + "; ".join(certificate.failures())
    return render_network(translated).rstrip("\n") + f"\n# certificate: {status}"


def _parametrize(args, config):
    network_file = _load(args.file)
    net, _ = _translated(network_file, args)
    result = ParametrizationAnalyzer(config).analyze(net, args.vstar)
    p = result["parametrization"]
    if args.format == "json":
        return _dump(
            {
                "structure": result["structure"].to_dict(),
                "vstar": list(result["vstar"]),
                "parametrization": to_document(p),
            },
            args.indent,
        )
    if args.format == "latex":
        return emit(p, "latex")
    header = [
        result["structure"].format(),
        f"V* = {{{', '.join(map(str, result['vstar']))}}}",
    ]
    return "\n".join(header) + "\n" + emit(p, "text")


def _verify(args, config):
    network_file = _load(args.file)
    net, _ = _translated(network_file, args)
    p = ParametrizationAnalyzer(config).analyze(net, args.vstar)["parametrization"]
    if args.samples is not None:
        config = update_config(config, {"verify": {"samples": args.samples}})
    settings = config["verify"]
    report = numeric_verify(
        network_file.network,
        p,
        samples=settings["samples"],
        seed=args.seed,
        tol=args.tol,
        low=settings["low"],
        high=settings["high"],
        fixed=network_file.values,
    )
    args.failed = not report.passed
    return _dump(report.to_dict(), args.indent) if args.format == "json" else report.format()


COMMANDS = {
    "analyze": _analyze,
    "condense": _condense,
    "redirect": _redirect,
    "translate": _translate,
    "parametrize": _parametrize,
    "verify": _verify,
}


def main(argv=None, stdout=None):
    """
    Run one subcommand

    Returns:
        0 on success, 1 on analysis refusal or failed verification,
        2 on parse errors
    """
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    config = load_config(args.config)
    args.format = _output_format(args, config)
    args.indent = config["output"]["indent"]
    try:
        output = COMMANDS[args.command](args, config)
    except CrnError as e:
        if args.format == "json":
            print(_dump(e.to_dict(), args.indent), file=stdout)
        else:
            logger.error("%s", e)
        return e.exit_status

    print(output, file=stdout)
    return 1 if getattr(args, "failed", False) else 0
