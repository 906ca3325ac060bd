from typing import TextIO
import logging

from pydantic import ValidationError

from app.constants import ExitCode
from app.core.exceptions import (
    EigenException,
    InputValidationException,
    ParseException,
    UsageException,
)

logger = logging.getLogger(__name__)


def _label(exc: Exception) -> str:
    return type(exc).__name__.removesuffix("Exception")


def domain_error_handler(exc: EigenException, stderr: TextIO) -> int:
    """
    Xử lý lỗi miền (spectrum vô tỉ / phức, B^2 != 0, ...).
    """
    stderr.write(f"error: {_label(exc)}: {exc.detail}\n")
    return exc.exit_code


def input_error_handler(exc: EigenException, stderr: TextIO) -> int:
    """
    Xử lý lỗi parse và validation của tài liệu đầu vào.
    """
    stderr.write(f"input error: {_label(exc)}: {exc.detail}\n")
    return exc.exit_code


def usage_error_handler(exc: UsageException, stderr: TextIO) -> int:
    stderr.write(f"usage error: {exc.detail}\n")
    return exc.exit_code


def pydantic_error_handler(exc: ValidationError, stderr: TextIO) -> int:
    """
    Xử lý lỗi validation từ Pydantic (cấu hình, tolerance, JordanSpec).
    """
    for error in exc.errors():
        location = ".".join(str(part) for part in error.get("loc", ()))
        stderr.write(f"validation error: {location}: {error.get('msg')}\n")
    return int(ExitCode.USAGE_ERROR)


def unexpected_error_handler(exc: Exception, stderr: TextIO) -> int:
    logger.error(f"Unexpected failure: {exc!r}")
    stderr.write(f"error: {exc}\n")
    return int(ExitCode.DOMAIN_ERROR)


# Thứ tự quan trọng: lớp con trước lớp cha
EXCEPTION_HANDLERS = [
    (UsageException, usage_error_handler),
    (ParseException, input_error_handler),
    (InputValidationException, input_error_handler),
    (EigenException, domain_error_handler),
    (ValidationError, pydantic_error_handler),
]


def handle_exception(exc: Exception, stderr: TextIO) -> int:
    for exc_type, handler in EXCEPTION_HANDLERS:
        if isinstance(exc, exc_type):
            return handler(exc, stderr)
    return unexpected_error_handler(exc, stderr)
