from typing import List


def to_lower_strip(value: str | None) -> str | None:
    if value is None:
        return None
    return value.lower().strip()


def split_csv_list(value: str | None) -> List[str]:
    """"a, B,c" -> ["a", "b", "c"]."""
    if not value:
        return []
    return [to_lower_strip(part) for part in value.split(",") if part.strip()]
