# src/engines/VerifyEngine/golden.py
# coding: utf-8
"""
Эталонные таблицы уравнений пространств автодуг.

Файл <golden_dir>/<name>.json:
  - preset, order: какая схема и какой порядок n;
  - equations: напечатанные уравнения в плоской нумерации a0, a1, ...;
  - missing_from_print: уравнения, пропущенные в печати (участвуют в проверке равенства идеалов);
  - reduced: killed (плоские имена), residual, free — редуцированная форма;
  - known_discrepancy: описание известного расхождения; несовпадение тогда
    даёт статус discrepancy, а не fail.

Перевод плоской нумерации в переменные сетки — ArcPresentation.flat_ideal.
"""

from __future__ import annotations
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, ValidationError

from src.model.errors import ParseError
from src.model.jobs import Budgets
from src.services.arc_service.arcs import ArcPresentation, auto_arc
from src.services.arc_service.scheme import preset
from src.services.reduction_service.heuristic import heuristic_reduce

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())


class GoldenReduced(BaseModel):
    killed: List[str] = Field(default_factory=list)
    residual: List[str] = Field(default_factory=list)
    free: int = Field(ge=0)


class GoldenTable(BaseModel):
    name: str
    preset: str
    order: int = Field(ge=1)
    equations: List[str] = Field(default_factory=list)
    missing_from_print: List[str] = Field(default_factory=list)
    note: Optional[str] = None
    reduced: Optional[GoldenReduced] = None
    known_discrepancy: Optional[str] = None


def load_golden(path: Path) -> GoldenTable:
    try:
        return GoldenTable.model_validate(json.loads(Path(path).read_text(encoding="utf-8")))
    except (OSError, json.JSONDecodeError, ValidationError) as exc:
        raise ParseError(f"Не удалось прочитать эталон {path}: {exc}", details={"path": str(path)}) from exc


def list_golden(golden_dir: Path) -> List[GoldenTable]:
    tables = [load_golden(p) for p in sorted(Path(golden_dir).glob("*.json"))]
    LOG.debug("Эталоны в %s: %s", golden_dir, [t.name for t in tables])
    return tables


def _flat(arc: ArcPresentation, names) -> List[str]:
    index = arc.flat_index
    return sorted((f"a{index[v]}" for v in names), key=lambda s: int(s[1:]))


def check_golden(table: GoldenTable, budgets: Optional[Budgets] = None) -> List[Dict[str, Any]]:
    """
    Критерии для одной таблицы:
      <name>/equations — равенство идеалов (напечатанные + пропущенные);
      <name>/printed   — каждое напечатанное уравнение лежит в идеале;
      <name>/reduced   — убитые переменные (с сертификатами), остаток (как идеал)
                         и число свободных.
    """
    budgets = budgets or Budgets()
    arc = auto_arc(preset(table.preset), None, table.order, budgets.groebner)
    failed_status = "discrepancy" if table.known_discrepancy else "fail"
    criteria: List[Dict[str, Any]] = []

    if table.equations:
        printed = arc.flat_ideal(table.equations)
        full = arc.flat_ideal(table.equations + table.missing_from_print)
        equal = arc.ideal.equals(full, budgets.groebner)
        criteria.append({
            "name": f"{table.name}/equations",
            "status": "pass" if equal else failed_status,
            "expected": len(table.equations) + len(table.missing_from_print),
            "computed": len(arc.generators),
            "details": {"missing_from_print": table.missing_from_print, "note": table.note},
        })
        outside = [
            text for text, g in zip(table.equations, printed.generators)
            if not arc.ideal.contains(g, budgets.groebner)
        ]
        criteria.append({
            "name": f"{table.name}/printed",
            "status": "pass" if not outside else failed_status,
            "expected": [],
            "computed": outside,
            "details": {},
        })

    if table.reduced is not None:
        R = heuristic_reduce(arc, budgets.groebner)
        killed = _flat(arc, R.killed)
        residual_equal = R.residual_ideal.equals(arc.flat_ideal(table.reduced.residual), budgets.groebner)
        ok = (
            killed == sorted(table.reduced.killed, key=lambda s: int(s[1:]))
            and residual_equal
            and len(R.free) == table.reduced.free
            and R.kills_certified
        )
        criteria.append({
            "name": f"{table.name}/reduced",
            "status": "pass" if ok else failed_status,
            "expected": table.reduced.model_dump(),
            "computed": {
                "killed": killed,
                "residual_grid": R.residual_strings(),
                "free": len(R.free),
                "residual_equal": residual_equal,
                "kill_certificates": {f"a{arc.flat_index[v]}": e for v, e in R.kill_certificates.items()},
            },
            "details": {"known_discrepancy": table.known_discrepancy} if table.known_discrepancy else {},
        })
    return criteria
