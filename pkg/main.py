import logging
import sys

from app.core import settings
from app.cli import run_command


def configure_logging() -> None:
    # stdout dành cho kết quả, log ra stderr
    logging.basicConfig(
        level=logging.DEBUG if settings.DEBUG else settings.LOG_LEVEL,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


if __name__ == "__main__":
    configure_logging()
    sys.exit(run_command(sys.argv[1:]))
