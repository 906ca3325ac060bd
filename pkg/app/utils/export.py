from typing import List, Dict, Any, TextIO
import io
import csv

from app.utils.serialization import dumps_canonical


class ExportUtil:
    def __init__(self, stream: TextIO):
        self.stream = stream

    def export_dataset_to_jsonl(self, data: List[Any]) -> str:
        """
        Xuất dữ liệu thành JSON Lines (mỗi record một dòng).

        Args:
            data: Danh sách record (dict hoặc giá trị miền).

        Returns:
            Nội dung đã ghi.
        """
        jsonl_output = ""
        for item in data:
            jsonl_output += dumps_canonical(item) + "\n"

        self.stream.write(jsonl_output)
        return jsonl_output

    def export_dataset_to_csv(self, data: List[Dict[str, Any]]) -> str:
        """
        Xuất dữ liệu thành CSV.

        Args:
            data: Danh sách dict có cùng tập key.

        Returns:
            Nội dung đã ghi.
        """
        output = io.StringIO()
        writer = csv.writer(output, lineterminator="\n")

        # Viết header
        if data:
            writer.writerow(data[0].keys())

        # Viết dữ liệu
        for item in data:
            writer.writerow(item.values())

        self.stream.write(output.getvalue())
        return output.getvalue()

    def export_document(self, content: Any) -> str:
        """Xuất một document JSON canonical (sort keys) kết thúc bằng newline."""
        text = dumps_canonical(content) + "\n"
        self.stream.write(text)
        return text

    def export_lines(self, lines: List[str]) -> str:
        text = "".join(line + "\n" for line in lines)
        self.stream.write(text)
        return text
