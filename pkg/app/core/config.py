from typing import List
from pydantic_settings import BaseSettings
from pydantic import field_validator, Field


class Settings(BaseSettings):
    APP_NAME: str = "CH Eigen"
    APP_VERSION: str = "0.1.0"
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"

    # Tolerance settings (chỉ dùng cho float mode)
    CH_EIGEN_TOLERANCE: float = Field(1e-9, ge=0)
    CH_EIGEN_RELATIVE: bool = True
    CH_EIGEN_CLUSTER_EPS: float = Field(1e-6, ge=0)
    CH_EIGEN_VERIFY_RTOL: float = Field(1e-8, ge=0)

    # Generator settings
    GENERATOR_ENTRY_BOUND: int = Field(9, ge=1)
    GENERATOR_MAX_ATTEMPTS: int = Field(64, ge=1)

    # Bench settings
    BENCH_COUNT: int = Field(10000, ge=1)
    BENCH_CLASSES: List[str] = []

    @field_validator("BENCH_CLASSES", mode="before")
    @classmethod
    def assemble_bench_classes(cls, v):
        """Cho phép truyền danh sách class dạng "a,b,c" qua environment."""
        if isinstance(v, str):
            return [i.strip() for i in v.split(",") if i.strip()]
        return v

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def normalize_log_level(cls, v):
        if isinstance(v, str):
            return v.strip().upper()
        return v

    model_config = {
        "env_file": ".env",
        "case_sensitive": True,
        "extra": "ignore",
    }


settings = Settings()
