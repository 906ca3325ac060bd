import argparse

from app.constants import OutputFormat, ScalarMode
from app.core.config import settings
from app.core.exceptions import UsageException


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser raise UsageException thay vì tự thoát."""

    def error(self, message):
        raise UsageException(f"{self.prog}: {message}")


def _add_matrix_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", default="-", help="matrix JSON file, or - for stdin (default: -)")
    parser.add_argument(
        "--mode",
        choices=[m.value for m in ScalarMode],
        default=None,
        help="scalar mode (default: inferred from input)",
    )
    parser.add_argument(
        "--tolerance",
        type=float,
        default=settings.CH_EIGEN_TOLERANCE,
        help="float-mode zero threshold (default: CH_EIGEN_TOLERANCE or 1e-9)",
    )
    parser.add_argument(
        "--cluster-eps",
        type=float,
        default=settings.CH_EIGEN_CLUSTER_EPS,
        help="float root clustering radius (default: 1e-6)",
    )


def _add_format(parser: argparse.ArgumentParser, *choices: OutputFormat) -> None:
    parser.add_argument(
        "--format",
        choices=[c.value for c in choices],
        default=OutputFormat.TEXT.value,
        help="output format (default: text)",
    )


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog="ch-eigen",
        description="Eigenvectors and Jordan chains of 2x2 / 3x3 matrices from columns of shifted-matrix products.",
    )
    parser.add_argument("--version", action="version", version=f"{settings.APP_NAME} {settings.APP_VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)

    analyze = subparsers.add_parser("analyze", help="eigenvalues, eigenspaces and chains")
    _add_matrix_options(analyze)
    _add_format(analyze, OutputFormat.TEXT, OutputFormat.JSON)

    charpoly = subparsers.add_parser("charpoly", help="characteristic polynomial")
    _add_matrix_options(charpoly)
    _add_format(charpoly, OutputFormat.TEXT, OutputFormat.JSON)

    verify = subparsers.add_parser("verify", help="analyze, then check residuals and oracle spans")
    _add_matrix_options(verify)
    _add_format(verify, OutputFormat.TEXT, OutputFormat.JSON)

    gen = subparsers.add_parser("gen", help="generate matrices with a prescribed Jordan structure")
    target = gen.add_mutually_exclusive_group(required=True)
    target.add_argument("--spec", help="JordanSpec JSON, inline or a file path")
    target.add_argument("--class", dest="matrix_class", help="matrix class name, e.g. triple-geo2")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--count", type=int, default=1)

    bench = subparsers.add_parser("bench", help="column method vs null-space oracle")
    bench.add_argument("--count", type=int, default=settings.BENCH_COUNT)
    bench.add_argument("--classes", default=None, help="comma-separated matrix classes (default: all)")
    bench.add_argument("--seed", type=int, default=0)
    _add_format(bench, OutputFormat.TEXT, OutputFormat.JSON, OutputFormat.CSV)

    return parser
