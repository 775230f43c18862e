# tests/services/db_service/test_schema.py
# coding: utf-8
from sqlalchemy import create_engine

from src.services.db_service.schema import describe_schema, ensure_schema


def test_point_counts_table_created():
    engine = create_engine("sqlite:///:memory:", future=True)
    assert describe_schema(engine)["columns"] == []
    ensure_schema(engine)
    schema = describe_schema(engine)
    assert [c["name"] for c in schema["columns"]] == ["ideal_key", "prime", "count"]
    assert schema["pk"] == ["ideal_key", "prime"]
