import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _env(name: str, default: str) -> str:
    return os.getenv(f"PHYLOLAB_{name}", default)


class Settings:
    """Application settings"""

    # App settings
    PROJECT_NAME: str = "phylolab"
    VERSION: str = "1.0.0"
    DEBUG: bool = _env("DEBUG", "False").lower() == "true"
    LOG_LEVEL: str = _env("LOG_LEVEL", "WARNING").upper()

    # Search caps
    MAX_VERTICES: int = int(_env("MAX_VERTICES", "4096"))
    ENUM_CAP: int = int(_env("ENUM_CAP", "7"))
    ISOMORPHISM_CAP: int = int(_env("ISOMORPHISM_CAP", "12"))
    PATTERN_CAP: int = int(_env("PATTERN_CAP", "12"))
    CLIQUE_CAP: int = int(_env("CLIQUE_CAP", "40"))
    HOLE_LIMIT: int = int(_env("HOLE_LIMIT", "5000"))

    # Verification runs
    WORKERS: int = int(_env("WORKERS", "1"))
    PARTITION_DEPTH: int = int(_env("PARTITION_DEPTH", "6"))
    ARC_PROBABILITY: float = float(_env("ARC_PROBABILITY", "0.5"))


settings = Settings()
