# src/services/db_service/schema.py
# coding: utf-8
"""
Схема кэша подсчётов точек: одна таблица point_counts,
ключ — (каноническая запись идеала, простое p).
"""

import logging
from typing import Any, Dict

from sqlalchemy import Column, Integer, MetaData, String, Table, Text, inspect
from sqlalchemy.engine import Engine

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())

METADATA = MetaData()

POINT_COUNTS = Table(
    "point_counts",
    METADATA,
    Column("ideal_key", Text, primary_key=True),
    Column("prime", Integer, primary_key=True),
    # число точек может не помещаться в 64 бита
    Column("count", String, nullable=False),
)


def ensure_schema(engine: Engine) -> None:
    """Создаёт таблицу point_counts, если её ещё нет."""
    METADATA.create_all(engine, checkfirst=True)


def describe_schema(engine: Engine) -> Dict[str, Any]:
    """Колонки и первичный ключ таблицы point_counts (пусто, если таблицы нет)."""
    inspector = inspect(engine)
    try:
        cols = inspector.get_columns(POINT_COUNTS.name)
        pk = inspector.get_pk_constraint(POINT_COUNTS.name).get("constrained_columns") or []
    except Exception as e:
        LOG.warning("Таблица '%s' не найдена или ошибка инспекции: %s", POINT_COUNTS.name, e)
        return {"columns": [], "pk": []}
    normalized_cols = [{"name": c.get("name"), "type": str(c.get("type")), "nullable": bool(c.get("nullable"))} for c in cols]
    return {"columns": normalized_cols, "pk": pk}
