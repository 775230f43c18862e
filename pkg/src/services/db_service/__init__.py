# src/services/db_service/__init__.py
"""
Кэш подсчётов точек над конечными полями (SQLAlchemy).
"""
