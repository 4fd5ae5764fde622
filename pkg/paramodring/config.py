from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Data
    paramod_data: str = "data"

    # Run history
    db_path: str = "paramodring.db"
    record_runs: bool = False

    # Execution
    max_workers: int = 4
    random_seed: int = 20240229
    property_instances: int = 200
    embedding_samples: int = 100
    point_samples: int = 6

    # Windows (q-exponent bounds used by the verification suites)
    deghilb_window: int = 8
    rank_window_margin: int = 1
    p4_lift_window: int = 4

    # Logging
    log_level: str = "INFO"

    model_config = {"env_file": ".env", "env_file_encoding": "utf-8"}


settings = Settings()
