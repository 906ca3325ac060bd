"""
Command-line: analyze, charpoly, verify, gen, bench.
"""

from typing import List, Optional, TextIO
import logging
import sys

from .commands import COMMANDS, CommandContext
from .documents import parse_matrix, parse_jordan_spec, serialize_matrix
from .errors import handle_exception
from .parser import build_parser

logger = logging.getLogger(__name__)


def run_command(
    argv: Optional[List[str]] = None,
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Chạy một subcommand; kết quả ra stdout, chẩn đoán ra stderr.

    Returns:
        Exit code: 0 thành công, 1 lỗi miền, 2 lỗi usage / parse.
    """
    ctx = CommandContext(
        stdin=stdin or sys.stdin,
        stdout=stdout or sys.stdout,
        stderr=stderr or sys.stderr,
    )
    try:
        args = build_parser().parse_args(argv)
        logger.debug(f"Running {args.command}")
        return COMMANDS[args.command](args, ctx)
    except SystemExit as e:
        # --help / --version
        return int(e.code or 0)
    except Exception as exc:
        return handle_exception(exc, ctx.stderr)
