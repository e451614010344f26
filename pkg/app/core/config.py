from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application Settings

    Same conventions as the AtamsBaseSettings family:
    - LOGGING_ENABLED, LOG_LEVEL, LOG_TO_FILE, LOG_FILE_PATH (read by atams logging)
    - DEBUG

    All settings can be overridden via .env file or environment variables.
    CLI flags override them again for a single invocation.
    """
    model_config = SettingsConfigDict(env_file=".env", extra="ignore")

    APP_NAME: str = "reflexive_h1"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False

    # Logging (stderr only by default, reports own stdout)
    LOGGING_ENABLED: bool = True
    LOG_LEVEL: str = "WARNING"
    LOG_TO_FILE: bool = False
    LOG_FILE_PATH: str = "logs/reflexive_h1.log"

    # Definitional oracle
    MAX_SIMPLICES: int = 5_000_000  # Simplex2 enumeration budget
    GRAPH_CACHE_SIZE: int = 16  # graphs whose matrices and lattices stay cached per service

    # Witness cycle search
    CYCLE_CAP: Optional[int] = None  # None = exhaustive for small graphs
    EXHAUSTIVE_CYCLE_VERTEX_LIMIT: int = 12
    LARGE_GRAPH_CYCLE_CAP: int = 10

    # Basis pipeline
    DEFAULT_CYCLE_TYPE: int = 1

    # Corpus screening
    CORPUS_NMAX_CEILING: int = 10
    CORPUS_CHORD_PROBABILITY: float = 0.5
    CORPUS_ORACLE_BUDGET: int = 200_000
    CORPUS_WORKERS: int = 1

    # Reports
    REPORT_TIMINGS: bool = False  # timings break byte-identical reports
    REPORT_SCHEMA_VERSION: int = 1

    def effective_cycle_cap(self, vertex_count: int, cap: Optional[int] = None) -> Optional[int]:
        """
        Resolve the witness length cap for a graph

        Args:
            vertex_count: Number of vertices of the graph
            cap: Explicit cap (wins when given)

        Returns:
            Length bound, or None for exhaustive search
        """
        if cap is not None:
            return cap
        if self.CYCLE_CAP is not None:
            return self.CYCLE_CAP
        if vertex_count <= self.EXHAUSTIVE_CYCLE_VERTEX_LIMIT:
            return None
        return self.LARGE_GRAPH_CYCLE_CAP


settings = Settings()
