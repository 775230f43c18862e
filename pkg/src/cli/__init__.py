"""
Командная строка: разбор флагов в JobSpec, запуск через реестр движков, вывод JSON или текста.
"""
from src.cli.parser import build_job, build_parser
from src.cli.runner import main, run_job

__all__ = ["build_job", "build_parser", "main", "run_job"]
