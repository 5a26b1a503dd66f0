"""Database models for the chromatic polynomial cache."""
from datetime import datetime

from sqlalchemy import DateTime, Integer, Text, func
from sqlalchemy.orm import DeclarativeBase, Mapped, mapped_column


class Base(DeclarativeBase):
    """Base class for all models."""

    pass


class PolynomialCacheEntry(Base):
    """P(H, k) keyed by the canonical form of H, coefficients ascending as JSON."""

    __tablename__ = "polynomial_cache"

    id: Mapped[int] = mapped_column(Integer, primary_key=True, autoincrement=True)
    key: Mapped[str] = mapped_column(Text, unique=True, nullable=False, index=True)
    coefficients: Mapped[str] = mapped_column(Text, nullable=False)
    created_at: Mapped[datetime] = mapped_column(
        DateTime(timezone=True), server_default=func.now(), nullable=False
    )

    def __repr__(self) -> str:
        return f"<PolynomialCacheEntry(key={self.key!r})>"
