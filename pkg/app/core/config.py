import os
from fractions import Fraction
from typing import List, Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Input files used by the CLI when --kb / --schema are not given
    KB_PATH: str = os.getenv("KB_PATH", "data/machines.kb")
    SCHEMA_PATH: str = os.getenv("SCHEMA_PATH", "data/machines.schema")

    # Logging settings
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    # Reasoning settings
    DEFAULT_CHANGE_SPLIT: str = "1/2"
    MAX_ENUMERATION_ATOMS: int = 20
    VALIDATION_LENGTHS: str = "1,2,5,10,30"
    DECIMAL_DIGITS: Optional[int] = None

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True, extra="ignore")

    @property
    def change_split(self) -> Fraction:
        return Fraction(self.DEFAULT_CHANGE_SPLIT)

    @property
    def validation_lengths(self) -> List[Fraction]:
        return [
            Fraction(item.strip())
            for item in self.VALIDATION_LENGTHS.split(",")
            if item.strip()
        ]


settings = Settings()
