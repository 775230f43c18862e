# conftest.py
# coding: utf-8
"""
Корневой conftest: делает пакет src импортируемым из тестов и задаёт
общий уровень логирования.
"""
import logging

logging.getLogger("src").setLevel(logging.DEBUG)
