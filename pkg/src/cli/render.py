# src/cli/render.py
# coding: utf-8
"""
Текстовое представление результатов команд (--format text).

JSON-вывод строится в runner.py: json.dumps(output, sort_keys=True), чтобы
одинаковые задания давали побайтно одинаковый результат.
"""

from __future__ import annotations
import json
from typing import Any, Callable, Dict, List


def to_json_text(output: Any) -> str:
    return json.dumps(output, sort_keys=True, ensure_ascii=False, indent=2)


def _presentation(output: Dict[str, Any]) -> str:
    grid = output.get("grid", [])
    lines = [
        f"переменных: {sum(len(row) for row in grid)}, уравнений: {len(output.get('generators', []))}",
        f"толстая точка: длина {output.get('fat', {}).get('length')}",
    ]
    lines += [f"  {g}" for g in output.get("generators", [])]
    index = output.get("provenance", {}).get("flat_index")
    if index:
        lines.append("плоская нумерация: " + ", ".join(f"{k}=a{v}" for k, v in sorted(index.items(), key=lambda kv: kv[1])))
    return "\n".join(lines)


def _jet(output: Dict[str, Any]) -> str:
    return "\n".join([
        f"длина: {output.get('length')}",
        "базис: " + ", ".join(output.get("basis", [])),
        "образующие: " + ", ".join(output.get("generators", [])),
    ])


def _reduce(output: Dict[str, Any]) -> str:
    reduced = output["reduced"]
    decomposition = output["decomposition"]
    lines = [
        f"флаг: {reduced['flag']}",
        "убиты: " + (", ".join(reduced["killed"]) or "-"),
        f"подстановок: {len(reduced['substitutions'])}",
        f"свободных: {len(reduced['free'])}",
        "остаток: " + (", ".join(reduced["residual"]) or "-"),
        f"аффинный ранг: {decomposition['affine_rank']}, факторов: {len(decomposition['factors'])}",
    ]
    if output.get("affine_space") is not None:
        lines.append(f"аффинное пространство размерности {output['affine_space']}")
    if output.get("confirmed") is not None:
        lines.append(f"подсчёт точек: {'совпадает' if output['confirmed'] else 'НЕ совпадает'}")
    return "\n".join(lines)


def _count(output: Dict[str, Any]) -> str:
    if "count" in output:
        return f"|X(F_{output['prime']})| = {output['count']}"
    return f"[X] = {output['class']} (размерность {output['dimension']})"


def _series(output: Dict[str, Any]) -> str:
    lines: List[str] = []
    if "normalization" in output:
        lines.append(f"нормировка: {output['normalization']}")
    for n, (c, level) in enumerate(zip(output["coefficients"], output.get("levels", []))):
        lines.append(f"t^{n}: {c}    [класс {level['class']}, размерность {level['dimension']}]")
    rationality = output.get("rationality")
    if rationality:
        lines.append(f"рациональная функция: ({' | '.join(rationality['num'])}) / ({' | '.join(rationality['den'])})")
    defect = output.get("defect")
    if defect and defect.get("estimate") is not None:
        line = f"асимптотический дефект: {defect['estimate']}"
        if defect.get("limit") is not None:
            line += f", предел {defect['limit']}"
        if defect.get("printed") is not None:
            line += f", напечатано {defect['printed']}"
            if defect.get("discrepancy"):
                line += " (расхождение)"
        lines.append(line)
    if output.get("table"):
        lines.append(output["table"])
    return "\n".join(lines)


def _verify(output: Dict[str, Any]) -> str:
    lines = [
        f"{output['suite']}: pass {output['passed']}, fail {output['failed']}, discrepancy {output['discrepancies']}"
    ]
    width = max((len(c["status"]) for c in output["criteria"]), default=0)
    lines += [f"  {c['status'].ljust(width)}  {c['name']}" for c in output["criteria"]]
    return "\n".join(lines)


def _describe(output: Dict[str, Any]) -> str:
    lines = []
    for name, entry in output.items():
        role = " (контрольный)" if entry.get("control") else ""
        lines.append(f"{name}{role}: {entry.get('title')}")
        for op_name, op in sorted(entry.get("operations", {}).items()):
            lines.append(f"  {op_name}: {op.get('description')}")
    return "\n".join(lines)


RENDERERS: Dict[str, Callable[[Dict[str, Any]], str]] = {
    "arc": _presentation,
    "auto": _presentation,
    "jet": _jet,
    "reduce": _reduce,
    "count": _count,
    "zeta": _series,
    "theta": _series,
    "verify": _verify,
    "describe": _describe,
}


def render(command: str, output: Any, fmt: str = "json") -> str:
    if fmt == "text" and command in RENDERERS and isinstance(output, dict):
        return RENDERERS[command](output)
    return to_json_text(output)
