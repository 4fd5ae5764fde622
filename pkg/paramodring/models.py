from datetime import datetime, timezone
from sqlalchemy import Column, Integer, Text, Float, ForeignKey
from sqlalchemy.orm import relationship

from paramodring.database import Base


def _utcnow():
    return datetime.now(timezone.utc).replace(tzinfo=None)


class VerificationRun(Base):
    __tablename__ = "verification_runs"

    id = Column(Integer, primary_key=True, autoincrement=True)
    suite = Column(Text, nullable=False)
    started_at = Column(Text, nullable=False, default=lambda: _utcnow().isoformat(sep=" ", timespec="seconds"))
    finished_at = Column(Text)
    status = Column(Text, nullable=False, default="running")
    passed = Column(Integer, default=0)
    failed = Column(Integer, default=0)
    undecided = Column(Integer, default=0)
    error_message = Column(Text)
    duration_seconds = Column(Float)

    checks = relationship("CheckRecord", back_populates="run", cascade="all, delete-orphan")


class CheckRecord(Base):
    __tablename__ = "check_records"

    id = Column(Integer, primary_key=True, autoincrement=True)
    run_id = Column(Integer, ForeignKey("verification_runs.id", ondelete="CASCADE"), nullable=False)
    check_id = Column(Text, nullable=False)
    status = Column(Text, nullable=False)
    witness = Column(Text)
    created_at = Column(Text, nullable=False, default=lambda: _utcnow().isoformat(sep=" ", timespec="seconds"))

    run = relationship("VerificationRun", back_populates="checks")
