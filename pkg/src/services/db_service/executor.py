# src/services/db_service/executor.py
# coding: utf-8
"""
Чтение и запись кэша подсчётов точек.

Ошибки базы не прерывают вычисление: они логируются, а подсчёт
выполняется заново (чтение) или просто не сохраняется (запись).
"""

import logging
from typing import Optional

from sqlalchemy import insert, select
from sqlalchemy.engine import Engine
from sqlalchemy.exc import IntegrityError, OperationalError, SQLAlchemyError

from src.services.db_service.schema import POINT_COUNTS, ensure_schema

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())


def fetch_count(engine: Engine, ideal_key: str, prime: int) -> Optional[int]:
    """Сохранённое число точек или None."""
    try:
        ensure_schema(engine)
        stmt = select(POINT_COUNTS.c["count"]).where(
            POINT_COUNTS.c.ideal_key == ideal_key, POINT_COUNTS.c.prime == prime
        )
        with engine.connect() as conn:
            value = conn.execute(stmt).scalar()
    except OperationalError as oe:
        LOG.error("Ошибка чтения кэша подсчётов: %s", oe)
        return None
    except SQLAlchemyError as e:
        LOG.exception("Unexpected SQLAlchemy error: %s", e)
        return None
    return None if value is None else int(value)


def store_count(engine: Engine, ideal_key: str, prime: int, count: int) -> bool:
    """Записывает подсчёт; повторная запись того же ключа игнорируется."""
    try:
        ensure_schema(engine)
        with engine.begin() as conn:
            conn.execute(insert(POINT_COUNTS).values(ideal_key=ideal_key, prime=prime, count=str(count)))
        return True
    except IntegrityError:
        LOG.debug("Подсчёт для p=%d уже в кэше", prime)
        return False
    except OperationalError as oe:
        LOG.error("Ошибка записи кэша подсчётов: %s", oe)
        return False
    except SQLAlchemyError as e:
        LOG.exception("Unexpected SQLAlchemy error: %s", e)
        return False
