"""SQLite run history: engine, session factory and schema creation."""

from sqlalchemy import create_engine, event
from sqlalchemy.engine import Engine
from sqlalchemy.orm import DeclarativeBase, sessionmaker

from paramodring.config import settings


def _set_sqlite_pragma(dbapi_connection, connection_record):
    cursor = dbapi_connection.cursor()
    cursor.execute("PRAGMA journal_mode=WAL")
    cursor.execute("PRAGMA foreign_keys=ON")
    cursor.execute("PRAGMA busy_timeout=30000")
    cursor.close()


def make_engine(db_path: str) -> Engine:
    """Engine shared by the runner's worker threads."""
    engine = create_engine(
        f"sqlite:///{db_path}",
        connect_args={"check_same_thread": False},
        echo=False,
    )
    event.listen(engine, "connect", _set_sqlite_pragma)
    return engine


def make_session_factory(bind: Engine) -> sessionmaker:
    return sessionmaker(autocommit=False, autoflush=False, bind=bind)


engine = make_engine(settings.db_path)
SessionLocal = make_session_factory(engine)


class Base(DeclarativeBase):
    pass


def init_db():
    # models must be imported so their tables are registered on Base.metadata
    from paramodring import models  # noqa: F401
    Base.metadata.create_all(bind=engine)
