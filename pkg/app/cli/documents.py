"""
Đọc / ghi tài liệu JSON: MatrixDocument và JordanSpec.
"""

from typing import Any, Dict, Optional, Union
import json
import math

from pydantic import ValidationError

from app.constants import ScalarMode
from app.core.exceptions import InputValidationException, ParseException
from app.core.matrix import SmallMatrix
from app.core.scalar import Scalar
from app.schemas import JordanSpec, MatrixDocument
from app.utils import dumps_canonical, serialize_domain_value


def _load_json(data: Union[bytes, str]) -> Any:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseException(f"Input is not valid UTF-8: {e.reason}")
    try:
        return json.loads(data)
    except json.JSONDecodeError as e:
        raise ParseException(f"Malformed JSON: {e.msg}", line=e.lineno, column=e.colno)


def _parse_entry(value: Any, location: str) -> Scalar:
    """Chuỗi "p" / "p/q" -> exact; số JSON -> float."""
    if isinstance(value, str):
        try:
            return Scalar.parse(value)
        except (ValueError, ZeroDivisionError):
            raise InputValidationException(f"Invalid exact scalar {value!r}", location)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputValidationException(f"Scalar must be a number or a string, got {value!r}", location)
    try:
        number = float(value)
    except OverflowError:
        number = math.inf
    if not math.isfinite(number):
        raise InputValidationException(f"Scalar must be finite, got {value!r}", location)
    return Scalar(number)


def parse_matrix(data: Union[bytes, str]) -> MatrixDocument:
    """
    Parse {"matrix": [[scalar, ...], ...], "name": tùy chọn}.

    Raises:
        ParseException: JSON hỏng (kèm dòng / cột).
        InputValidationException: Sai hình dạng hoặc trộn exact với float (kèm vị trí).
    """
    payload = _load_json(data)
    if not isinstance(payload, dict) or "matrix" not in payload:
        raise InputValidationException("Document must be an object with a 'matrix' field", "$")
    rows = payload["matrix"]
    if not isinstance(rows, list) or len(rows) not in (2, 3):
        raise InputValidationException("'matrix' must be a list of 2 or 3 rows", "$.matrix")
    dim = len(rows)
    parsed = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise InputValidationException(f"Row must have {dim} entries", f"$.matrix[{i}]")
        parsed.append([_parse_entry(v, f"$.matrix[{i}][{j}]") for j, v in enumerate(row)])

    modes = {e.mode for row in parsed for e in row}
    if len(modes) > 1:
        raise InputValidationException(
            "Mixed exact strings and float numbers in one matrix", "$.matrix"
        )
    name = payload.get("name")
    if name is not None and not isinstance(name, str):
        raise InputValidationException("'name' must be a string", "$.name")
    return MatrixDocument(matrix=SmallMatrix(parsed), name=name)


def convert_mode(document: MatrixDocument, mode: Optional[ScalarMode]) -> MatrixDocument:
    if mode is None or mode == document.mode:
        return document
    return MatrixDocument(matrix=document.matrix.to_mode(mode), name=document.name)


def matrix_payload(document: MatrixDocument) -> Dict[str, Any]:
    payload = {"matrix": serialize_domain_value(document.matrix)}
    if document.name is not None:
        payload["name"] = document.name
    return payload


def serialize_matrix(document: MatrixDocument) -> str:
    """JSON canonical (sort keys, không khoảng trắng)."""
    return dumps_canonical(matrix_payload(document))


def parse_jordan_spec(data: Union[bytes, str]) -> JordanSpec:
    """
    Parse {"dim": 3, "blocks": [["3", 2], ["1", 1]]}; dim được suy ra nếu thiếu.
    """
    payload = _load_json(data)
    if not isinstance(payload, dict) or not isinstance(payload.get("blocks"), list):
        raise InputValidationException("Jordan spec must be an object with a 'blocks' list", "$")
    try:
        if "dim" not in payload:
            sizes = [b[1] if isinstance(b, list) else b["size"] for b in payload["blocks"]]
            payload = {**payload, "dim": sum(int(s) for s in sizes)}
        return JordanSpec.model_validate(payload)
    except (ValidationError, KeyError, IndexError, TypeError, ValueError, ZeroDivisionError) as e:
        raise InputValidationException(f"Invalid Jordan spec: {e}", "$.blocks")
