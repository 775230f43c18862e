# src/model/engine_result.py
"""
Универсальный результат выполнения операции движка.

Основные поля:
  - status: 'ok' | 'error'
  - stage: этап (construction, reduction, counting, assembly, verification)
  - engine: имя движка, выполнившего операцию (например, "ArcEngine")
  - operation: имя операции (совпадает с командой CLI)
  - input_params: исходные параметры (JobSpec в виде словаря)
  - output: JSON-совместимый результат; именно он печатается CLI
  - summary: краткое человекочитаемое резюме
  - metadata: elapsed_s, exit_code, details ошибки и т.д.
  - error / code: текст и машиночитаемый код ошибки при status='error'
  - ts: временная метка выполнения
"""

from __future__ import annotations
from dataclasses import dataclass, field
from typing import Any, Dict, Optional
import time


@dataclass
class EngineResult:
    status: str  # "ok" или "error"

    stage: Optional[str] = None
    engine: Optional[str] = None
    operation: Optional[str] = None

    input_params: Optional[Dict[str, Any]] = None
    output: Optional[Any] = None
    summary: Optional[str] = None

    metadata: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None
    code: Optional[str] = None
    ts: float = field(default_factory=time.time)

    @property
    def ok_status(self) -> bool:
        return self.status == "ok"

    @property
    def exit_code(self) -> int:
        if self.status == "ok":
            return 0
        return int(self.metadata.get("exit_code", 1))

    @classmethod
    def ok(
        cls,
        stage: str,
        output: Any = None,
        summary: Optional[str] = None,
        input_params: Optional[Dict[str, Any]] = None,
        engine: Optional[str] = None,
        operation: Optional[str] = None,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> "EngineResult":
        """Успешный результат.

        Пример:
            >>> result = EngineResult.ok(stage="construction", output={"length": 7}, summary="Струя длины 7")
            >>> result.status
            'ok'
        """
        return cls(
            status="ok",
            stage=stage,
            engine=engine,
            operation=operation,
            input_params=input_params,
            output=output,
            summary=summary,
            metadata=metadata or {},
        )

    @classmethod
    def error(
        cls,
        message: str,
        stage: str,
        code: str = "internal_error",
        exit_code: int = 1,
        details: Optional[Dict[str, Any]] = None,
        output: Any = None,
        input_params: Optional[Dict[str, Any]] = None,
        engine: Optional[str] = None,
        operation: Optional[str] = None,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> "EngineResult":
        """Результат с ошибкой; код выхода и детали кладутся в metadata.

        output заполняется только там, где частичный результат полезен
        (отчёт verify с проваленными критериями).
        """
        meta = dict(metadata or {})
        meta["exit_code"] = exit_code
        meta["details"] = dict(details or {})
        return cls(
            status="error",
            stage=stage,
            engine=engine,
            operation=operation,
            input_params=input_params,
            output=output,
            summary=message[:200] if message else None,
            metadata=meta,
            error=message,
            code=code,
        )

    def error_payload(self) -> Dict[str, Any]:
        """Тело {"error": {...}} для потока ошибок CLI."""
        return {
            "error": {
                "code": self.code or "internal_error",
                "message": self.error or "",
                "details": self.metadata.get("details", {}),
            }
        }

    def to_dict(self) -> Dict[str, Any]:
        """Словарь без None-значений."""
        result = {
            "status": self.status,
            "stage": self.stage,
            "engine": self.engine,
            "operation": self.operation,
            "input_params": self.input_params,
            "output": self.output,
            "summary": self.summary,
            "metadata": self.metadata,
            "error": self.error,
            "code": self.code,
            "ts": self.ts,
        }
        return {k: v for k, v in result.items() if v is not None}
