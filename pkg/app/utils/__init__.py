"""
Module tiện ích cho ứng dụng.
"""

# Export các hàm xử lý serialization
from .serialization import (
    convert_domain_value,
    serialize_domain_value,
    serialize_scalar,
    dumps_canonical,
    EigenJSONEncoder,
)

# Export các hàm xử lý export
from .export import ExportUtil

from .models import DomainModel

from .string import to_lower_strip, split_csv_list
