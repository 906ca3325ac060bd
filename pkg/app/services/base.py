from typing import Any, List, Optional
import logging

from app.core.tolerance import TolerancePolicy
from app.utils import convert_domain_value

# Logger
logger = logging.getLogger(__name__)


class BaseService:
    """Base service cho các service tính toán khác kế thừa."""

    def __init__(self, policy: Optional[TolerancePolicy] = None):
        """
        Khởi tạo BaseService.

        Args:
            policy: TolerancePolicy dùng cho zero-test ở float mode (mặc định lấy từ settings).
        """
        self.policy = policy or TolerancePolicy.from_settings()

    def _prepare_data(self, data: Any) -> Any:
        """
        Chuẩn bị dữ liệu để serialize JSON.
        Chuyển Scalar, SmallVector, SmallMatrix thành giá trị JSON-serializable.

        Args:
            data: Dữ liệu miền (có thể lồng trong list, dict).

        Returns:
            Dữ liệu đã sẵn sàng cho json.dumps.
        """
        if data is None:
            return None

        return convert_domain_value(data)

    def prepare_list_data(self, data_list: List[Any]) -> List[Any]:
        """
        Chuẩn bị danh sách dữ liệu để serialize.

        Args:
            data_list: Danh sách giá trị miền.

        Returns:
            Danh sách đã được chuẩn bị.
        """
        if not data_list:
            return []

        return [self._prepare_data(item) for item in data_list]


class TraceRecorder:
    """Ghi lại các quyết định trích xuất; đồng thời log ở mức DEBUG."""

    def __init__(self, name: str):
        self._entries: List[str] = []
        self._logger = logging.getLogger(name)

    def add(self, message: str) -> None:
        self._entries.append(message)
        self._logger.debug(message)

    def extend(self, messages) -> None:
        for message in messages:
            self.add(message)

    @property
    def entries(self) -> List[str]:
        return list(self._entries)
