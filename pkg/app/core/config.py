import logging
import os
from typing import List

from dotenv import load_dotenv

load_dotenv()


class Settings:
    def __init__(self):
        self.EDGE_CAP: int = int(os.getenv("ANTIMAGIC_EDGE_CAP", 14))
        self.SEARCH_WORKERS: int = int(os.getenv("ANTIMAGIC_SEARCH_WORKERS", 1))
        self.LOG_LEVEL: str = os.getenv("ANTIMAGIC_LOG_LEVEL", "WARNING").upper()
        self.ALLOWED_ORIGINS: List[str] = [
            origin.strip()
            for origin in os.getenv("ANTIMAGIC_ALLOWED_ORIGINS", "http://localhost:5173").split(",")
            if origin.strip()
        ]


settings = Settings()


def get_settings() -> Settings:
    global settings
    settings = Settings()
    return settings


def configure_logging(level: str = None):
    logging.basicConfig(
        level=level or settings.LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
