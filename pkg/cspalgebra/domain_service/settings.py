"""Domain service settings."""

from pydantic_settings import BaseSettings, SettingsConfigDict


class ClassifierSettings(BaseSettings):
    """Classifier and solver front-end configuration."""

    model_config = SettingsConfigDict(
        env_prefix="SERVICE_",
        env_file=".env",
        extra="ignore",
    )

    # Evidence collected next to the verdict
    collect_cyclic_evidence: bool = False
    cyclic_max_prime: int = 7
    wnu_arities: list[int] = []

    # Verdict assembly
    check_workers: int = 3


settings = ClassifierSettings()
