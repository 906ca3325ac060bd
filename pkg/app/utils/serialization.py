from enum import Enum
from fractions import Fraction
from typing import Any, Union
import json

from pydantic import BaseModel

from app.core.matrix import SmallMatrix, SmallVector
from app.core.scalar import Scalar


def serialize_scalar(value: Union[Scalar, Fraction, float, int]) -> Union[str, float]:
    """
    Exact scalar -> chuỗi canonical "p" hoặc "p/q"; float -> số JSON.
    """
    if isinstance(value, Scalar):
        return str(value) if value.is_exact else value.value
    if isinstance(value, Fraction):
        return str(Scalar(value))
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    return float(value)


def serialize_domain_value(obj: Any) -> Any:
    """
    Chuyển đổi Scalar / SmallVector / SmallMatrix và các cấu trúc lồng nhau
    thành giá trị JSON-serializable.
    """
    if obj is None:
        return None

    if isinstance(obj, BaseModel):
        return serialize_domain_value(obj.model_dump(by_alias=True))

    if isinstance(obj, (Scalar, Fraction)):
        return serialize_scalar(obj)

    if isinstance(obj, SmallVector):
        return [serialize_scalar(e) for e in obj]

    if isinstance(obj, SmallMatrix):
        return [[serialize_scalar(e) for e in row] for row in obj.rows]

    if isinstance(obj, (list, tuple)):
        return [serialize_domain_value(item) for item in obj]

    if isinstance(obj, dict):
        return {str(k): serialize_domain_value(v) for k, v in obj.items()}

    if isinstance(obj, Enum):
        return obj.value

    # Các kiểu dữ liệu khác (int, bool, string, float) trả về nguyên bản
    return obj


class EigenJSONEncoder(json.JSONEncoder):
    """
    JSON Encoder xử lý Scalar, SmallVector, SmallMatrix.
    """

    def default(self, obj):
        if isinstance(obj, (Scalar, Fraction, SmallVector, SmallMatrix, BaseModel)):
            return serialize_domain_value(obj)
        return super().default(obj)


def convert_domain_value(data: Any) -> Any:
    """
    Chuyển đổi dữ liệu miền để sử dụng trong output JSON.

    Hỗ trợ:
    - Scalar, Fraction
    - SmallVector, SmallMatrix
    - pydantic model, list, dict lồng nhau

    Args:
        data: Dữ liệu cần chuyển đổi

    Returns:
        Dữ liệu đã được chuyển đổi
    """
    if data is None:
        return None

    return serialize_domain_value(data)


def dumps_canonical(content: Any) -> str:
    """JSON byte-stable: sort keys, không khoảng trắng thừa."""
    return json.dumps(
        content,
        ensure_ascii=False,
        allow_nan=False,
        indent=None,
        separators=(",", ":"),
        sort_keys=True,
        cls=EigenJSONEncoder,
    )
