from pydantic import BaseModel, ConfigDict


class DomainModel(BaseModel):
    """
    Base model cho các bản ghi miền (spectrum, eigenstructure, ...).

    Cho phép các kiểu tùy ý (Scalar, SmallVector, SmallMatrix) và bất biến sau khi tạo.
    """

    model_config = ConfigDict(
        arbitrary_types_allowed=True,
        populate_by_name=True,
        frozen=True,
    )
