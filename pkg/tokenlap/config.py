from functools import lru_cache

from pydantic import BaseSettings, Field, validator


class Settings(BaseSettings):
    """defaults for tolerances, caps and the worker count, overridable by TOKENLAP_* env vars"""

    jobs: int = Field(1, ge=1)
    conjecture_tol: float = 1e-7
    containment_tol: float = 1e-7
    eig_tol: float = 1e-10
    pairing_tol: float = 1e-6
    int_tol: float = 1e-6
    null_projection_tol: float = 1e-9
    token_cap: int = 20000
    eig_cap: int = 4000
    float_digits: int = 12

    class Config:
        env_prefix = "TOKENLAP_"

    @validator(
        "conjecture_tol", "containment_tol", "eig_tol", "pairing_tol", "int_tol"
    )
    def positive_tolerance(cls, value: float) -> float:
        if value <= 0:
            raise ValueError("tolerance must be positive")
        return value


@lru_cache()
def get_settings() -> Settings:
    return Settings()
