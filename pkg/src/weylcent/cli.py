"""Command line interface.

Exit codes:
    0  success (commutative centralizer slice, COMMUTE, witness found)
    1  NOT_COMMUTE
    2  usage, parse or domain error
    3  noncommutative centralizer slice
    4  INCONCLUSIVE
    5  no fraction witness within the degree bound

stdout carries only the report; diagnostics go to stderr.
"""

import argparse
import logging
import os
import sys
from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .engine.centralizer_solver import CentralizerBasis, LemmaReport, LemmaSuiteReport
from .engine.errors import WeylError, WitnessNotFound
from .engine.exact_arith import is_prime
from .engine.modp_certifier import CertificateReport, Verdict
from .engine.models import OutputMode
from .engine.runtime import WeylRuntime

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_COMMUTE = 1
EXIT_ERROR = 2
EXIT_NONCOMMUTATIVE = 3
EXIT_INCONCLUSIVE = 4
EXIT_NOT_FOUND = 5

VERDICT_EXIT_CODES = {
    Verdict.COMMUTE: EXIT_OK,
    Verdict.NOT_COMMUTE: EXIT_NOT_COMMUTE,
    Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}

# subcommand -> number of positional operator arguments
OPERATOR_ARITY = {
    "mul": 2,
    "comm": 2,
    "reduce": 1,
    "centralizer": 1,
    "decompose": 1,
    "fraction-witness": 2,
    "lemma": 1,
    "lemma-check": 0,
    "certify": 2,
    "theorem": 3,
}

# subcommand -> common option dests it reads; any other option given is rejected
_MODP = {"mod", "vars"}
_CERTIFICATE = {"max_primes", "no_cross_check", "workers"}
SUBCOMMAND_OPTIONS = {
    "mul": _MODP,
    "comm": _MODP,
    "reduce": _MODP,
    "centralizer": {"mod", "vars", "degree"},
    "decompose": {"mod"},
    "fraction-witness": {"mod", "degree"},
    "lemma": {"mod", "vars", "degree"},
    "lemma-check": {"mod", "degree"},
    "certify": _CERTIFICATE,
    "theorem": _CERTIFICATE,
}

OPTION_FLAGS = {
    "mod": "--mod",
    "vars": "--vars",
    "degree": "--degree",
    "max_primes": "--max-primes",
    "no_cross_check": "--no-cross-check",
    "workers": "--workers",
}


class CliConfig(BaseModel):
    """Validated command line options."""

    model_config = ConfigDict(frozen=True)

    subcommand: str
    operators: list[str] = Field(default_factory=list)
    nvars: int = Field(1, ge=1)
    modulus: int | None = None
    degree: int | None = Field(None, ge=0)
    output: OutputMode = OutputMode.TEXT
    cross_check: bool | None = None
    max_primes: int | None = Field(None, ge=1)
    workers: int | None = Field(None, ge=1)
    samples: int | None = Field(None, ge=0)
    seed: int | None = None

    @field_validator("modulus")
    @classmethod
    def _modulus_is_prime(cls, value: int | None) -> int | None:
        if value is not None and not is_prime(value):
            raise ValueError(f"--mod {value} is not a prime")
        return value

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        return cls(
            subcommand=args.command,
            operators=list(getattr(args, "operators", [])),
            nvars=1 if args.vars is None else args.vars,
            modulus=args.mod,
            degree=args.degree,
            output=OutputMode.JSON if args.json else OutputMode.TEXT,
            cross_check=False if args.no_cross_check else None,
            max_primes=args.max_primes,
            workers=args.workers,
            samples=getattr(args, "samples", None),
            seed=getattr(args, "seed", None),
        )


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mod", type=int, default=None, help="Work over F_p instead of QQ")
    common.add_argument("--vars", type=int, default=None, help="Number of variables n (default 1)")
    common.add_argument("--degree", type=int, default=None, help="Degree bound D (default 2p)")
    common.add_argument("--json", action="store_true", help="Emit JSON")
    common.add_argument(
        "--no-cross-check", action="store_true", help="Skip the direct rational computation"
    )
    common.add_argument("--max-primes", type=int, default=None, help="Prime cap for certificates")
    common.add_argument("--workers", type=int, default=None, help="Threads for per-prime checks")
    common.add_argument("--config-dir", default=None, help="Path to configuration directory")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="weylcent",
        description="Centralizers and commutativity certificates in Weyl algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    helps = {
        "mul": "Product of two operators",
        "comm": "Commutator [A, B]",
        "reduce": "Reduce a rational operator mod p",
        "centralizer": "Degree-truncated centralizer in A_n(F_p)",
        "decompose": "Coordinates over the center of A_1(F_p)",
        "fraction-witness": "Write b as z1/z2 with z1, z2 in Z[a]",
        "lemma": "Centralizer, Z[a] containment and witnesses for one operator",
        "lemma-check": "Centralizer commutativity for random operators",
        "certify": "Certify [P, Q] = 0 over QQ by reduction mod primes",
        "theorem": "Certify [P, Q] = 0 for P, Q commuting with a",
    }
    for name, arity in OPERATOR_ARITY.items():
        cmd = sub.add_parser(name, parents=[common], help=helps[name])
        if arity:
            cmd.add_argument("operators", nargs=arity, metavar="OPERATOR")
        if name == "lemma-check":
            cmd.add_argument("--samples", type=int, default=None, help="Number of random operators")
            cmd.add_argument("--seed", type=int, default=None, help="Random seed")

    serve = sub.add_parser("serve", help="Run the MCP server")
    serve.add_argument("--config-dir", default=None, help="Path to configuration directory")
    serve.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    return parser


def unused_options(args: argparse.Namespace) -> list[str]:
    """Flags given on the command line that the subcommand does not read."""
    allowed = SUBCOMMAND_OPTIONS[args.command]
    return [
        flag
        for dest, flag in OPTION_FLAGS.items()
        if dest not in allowed and getattr(args, dest) not in (None, False)
    ]


def _configure_logging(runtime: WeylRuntime, verbose: bool) -> None:
    level = "DEBUG" if verbose else (runtime.settings.log_level if runtime.settings else "WARNING")
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("weylcent").setLevel(getattr(logging, str(level).upper(), logging.WARNING))


def dispatch(runtime: WeylRuntime, config: CliConfig):
    """Run the operation named by config and return its report."""
    ops = config.operators
    match config.subcommand:
        case "mul":
            return runtime.mul(ops[0], ops[1], config.nvars, config.modulus)
        case "comm":
            return runtime.commutator(ops[0], ops[1], config.nvars, config.modulus)
        case "reduce":
            return runtime.reduce(ops[0], config.modulus, config.nvars)
        case "centralizer":
            return runtime.centralizer(ops[0], config.modulus, config.degree, config.nvars)
        case "decompose":
            return runtime.decompose(ops[0], config.modulus)
        case "fraction-witness":
            return runtime.fraction_witness(ops[0], ops[1], config.modulus, config.degree)
        case "lemma":
            return runtime.lemma(ops[0], config.modulus, config.degree, config.nvars)
        case "lemma-check":
            return runtime.lemma_check(config.modulus, config.samples, config.seed, config.degree)
        case "certify":
            return runtime.certify(
                ops[0], ops[1], config.max_primes, config.cross_check, config.workers
            )
        case "theorem":
            return runtime.theorem(
                ops[0], ops[1], ops[2], config.max_primes, config.cross_check, config.workers
            )
    raise ValueError(f"unknown subcommand {config.subcommand!r}")


def exit_code_for(report: object) -> int:
    """Exit code of a successfully computed report."""
    if isinstance(report, CertificateReport):
        return VERDICT_EXIT_CODES[report.verdict]
    if isinstance(report, CentralizerBasis):
        return EXIT_OK if report.commutative else EXIT_NONCOMMUTATIVE
    if isinstance(report, LemmaReport):
        return EXIT_OK if report.centralizer.commutative else EXIT_NONCOMMUTATIVE
    if isinstance(report, LemmaSuiteReport):
        return EXIT_OK if report.all_commutative else EXIT_NONCOMMUTATIVE
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        if args.config_dir:
            os.environ["WEYLCENT_CONFIG_DIR"] = os.path.abspath(args.config_dir)
        from .server import mcp

        logging.basicConfig(
            stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.INFO
        )
        config_dir = os.environ.get("WEYLCENT_CONFIG_DIR")
        logger.info(f"Starting weylcent MCP server with config: {config_dir}")
        mcp.run()
        return EXIT_OK

    unused = unused_options(args)
    if unused:
        print(f"error: {args.command} does not accept {', '.join(unused)}", file=sys.stderr)
        return EXIT_ERROR

    runtime = WeylRuntime(args.config_dir)
    try:
        runtime.initialize()
        _configure_logging(runtime, args.verbose)
        config = CliConfig.from_args(args)
        report = dispatch(runtime, config)
    except WitnessNotFound as e:
        print(f"not found: {e}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except ValidationError as e:
        for err in e.errors():
            print(f"error: {err['msg']}", file=sys.stderr)
        return EXIT_ERROR
    except (WeylError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR

    print(runtime.render(report, config.output).content)
    return exit_code_for(report)


def run() -> None:
    """Console script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
