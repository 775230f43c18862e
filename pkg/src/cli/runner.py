# src/cli/runner.py
# coding: utf-8
"""
Выполнение задания: JobSpec -> движок из реестра -> EngineResult -> вывод.

Коды выхода: 0 — успех; 2 — ошибка разбора; 3 — математическое предусловие;
4 — бюджет; 5 — провал verify; 1 — непредвиденная ошибка.
stdout — только результат команды; ошибка пишется в stderr как
{"error": {"code", "message", "details"}}.
"""

from __future__ import annotations
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from src.cli.parser import build_job
from src.cli.render import render
from src.engines.registry import EngineRegistry
from src.model.engine_result import EngineResult
from src.model.errors import ArcMotivesError
from src.model.jobs import JobSpec

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())


def run_job(job: JobSpec, registry: Optional[EngineRegistry] = None) -> EngineResult:
    registry = registry or EngineRegistry()
    if job.command == "describe":
        return EngineResult.ok(
            stage="describe",
            output=registry.describe(),
            engine="EngineRegistry",
            operation="describe",
        )
    engine = registry.engine_for_operation(job.command)
    LOG.info("Команда %s -> %s", job.command, engine.name)
    return engine.execute_operation(job.command, job.model_dump(mode="json"))


def _emit(job: JobSpec, result: EngineResult, stdout: TextIO) -> None:
    if result.output is None:
        return
    text = render(job.command, result.output, job.format)
    if job.output:
        Path(job.output).write_text(text + "\n", encoding="utf-8")
        LOG.info("Результат записан в %s", job.output)
    else:
        stdout.write(text + "\n")


def _error(payload: dict, stderr: TextIO) -> None:
    stderr.write(json.dumps(payload, sort_keys=True, ensure_ascii=False) + "\n")


def main(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
    registry: Optional[EngineRegistry] = None,
) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        job = build_job(argv)
    except ArcMotivesError as exc:
        _error({"error": exc.to_dict()}, stderr)
        return exc.exit_code

    try:
        result = run_job(job, registry)
    except Exception as exc:
        LOG.exception("Команда %s завершилась непредвиденной ошибкой", job.command)
        _error({"error": {"code": "internal_error", "message": str(exc), "details": {}}}, stderr)
        return 1

    _emit(job, result, stdout)
    if not result.ok_status:
        _error(result.error_payload(), stderr)
    LOG.debug("Команда %s: %s за %.3f с", job.command, result.status, result.metadata.get("elapsed_s", 0.0))
    return result.exit_code
