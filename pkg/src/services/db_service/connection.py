# src/services/db_service/connection.py
# coding: utf-8
"""
Подключение к базе кэша подсчётов точек.

get_engine(dsn) создаёт SQLAlchemy engine один раз на URL. Для файлового
SQLite создаётся родительский каталог, для sqlite:///:memory: все соединения
делят одну базу (StaticPool).
"""

import logging
from pathlib import Path
from typing import Dict

from sqlalchemy import create_engine
from sqlalchemy.engine import Engine, make_url
from sqlalchemy.pool import StaticPool

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())

_ENGINE_CACHE: Dict[str, Engine] = {}


def get_engine(db_uri: str) -> Engine:
    """Engine кэша по URL (из кэша, если уже создавался)."""
    if db_uri in _ENGINE_CACHE:
        return _ENGINE_CACHE[db_uri]

    url = make_url(db_uri)
    if url.get_backend_name() == "sqlite":
        database = url.database or ""
        if database in ("", ":memory:"):
            engine = create_engine(
                db_uri, future=True, poolclass=StaticPool, connect_args={"check_same_thread": False},
            )
        else:
            Path(database).expanduser().resolve().parent.mkdir(parents=True, exist_ok=True)
            engine = create_engine(db_uri, future=True)
    else:
        engine = create_engine(db_uri, future=True, pool_pre_ping=True)

    _ENGINE_CACHE[db_uri] = engine
    LOG.debug("Создан engine кэша подсчётов: %s", url.render_as_string(hide_password=True))
    return engine
