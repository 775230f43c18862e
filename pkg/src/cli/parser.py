# src/cli/parser.py
# coding: utf-8
"""
Разбор аргументов командной строки в JobSpec.

Списки передаются через запятую (--vars x,y; --point 0,0; --exclude-chars 2,3);
--gens и --supplied можно повторять. С --script задание читается из JSON-файла,
а явно переданные --format/--output перекрывают значения из файла.

Ошибки argparse не завершают процесс: они превращаются в ParseError (код 2),
чтобы CLI вывел машиночитаемую ошибку.
"""

from __future__ import annotations
import argparse
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from src.model.errors import ParseError
from src.model.jobs import COMMANDS, SUITES, JobSpec

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise ParseError(f"Ошибка аргументов: {message}", details={"usage": self.format_usage().strip()})


def _split(values: Optional[Sequence[str]]) -> List[str]:
    items: List[str] = []
    for value in values or []:
        items += [part.strip() for part in value.split(",") if part.strip()]
    return items


def _ints(text: Optional[str], flag: str) -> List[int]:
    try:
        return [int(x) for x in _split([text])] if text else []
    except ValueError:
        raise ParseError(f"{flag}: ожидается список целых через запятую", details={flag: text}) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="arc-motives", description="Пространства дуг, автодуг и их мотивные ряды.")
    parser.add_argument("command", nargs="?", choices=COMMANDS, help="Команда")
    parser.add_argument("suite", nargs="?", choices=SUITES, help="Набор проверок для verify")

    scheme = parser.add_argument_group("схема")
    scheme.add_argument("--preset", help="Предустановка: cusp, cusp+, node, nodal-cubic, A1..A3, point, cusp(m,l), node(m,l)")
    scheme.add_argument("--vars", help="Переменные через запятую")
    scheme.add_argument("--gens", action="append", help="Образующие через запятую (флаг можно повторять)")
    scheme.add_argument("--point", help="Координаты точки через запятую (целые или p/q)")
    scheme.add_argument("--field", default="QQ", help="QQ или GF(p)")

    fat = parser.add_argument_group("толстая точка")
    fat.add_argument("--n", type=int, dest="order", help="Порядок n (струи, автодуги, ряды)")
    fat.add_argument("--fat-length", type=int, help="Линейная толстая точка l_m")
    fat.add_argument("--fat-vars", help="Переменные толстой точки")
    fat.add_argument("--fat-gens", action="append", help="Образующие толстой точки")

    compute = parser.add_argument_group("вычисления")
    compute.add_argument("--prime", type=int, help="Простое p для count")
    compute.add_argument("--budget-points", type=int, help="Лимит перебора точек")
    compute.add_argument("--budget-groebner", type=int, help="Лимит шагов редукции")
    compute.add_argument("--workers", type=int, help="Процессы подсчёта точек")
    compute.add_argument("--exclude-chars", help="Исключённые характеристики через запятую")
    compute.add_argument("--normalization", choices=("definition", "codim"), help="Нормировка авто-ряда")
    compute.add_argument("--strategy", choices=("interpolate", "supplied"), help="Назначение классов")
    compute.add_argument("--supplied", action="append", help="Готовые классы по степеням t")
    compute.add_argument("--degree-bound", type=int, help="Граница степени интерполяции")
    compute.add_argument("--require-confirmed", action="store_true", help="Сверять редукции подсчётом точек и при наличии сертификатов")
    compute.add_argument("--closed-form", help="Напечатанная замкнутая форма для сверки")
    compute.add_argument("--no-certify", action="store_true", help="Не подтверждать убитые переменные сертификатами v^e ∈ I")

    out = parser.add_argument_group("вывод")
    out.add_argument("--format", choices=("json", "text"), help="Формат вывода (по умолчанию json)")
    out.add_argument("--output", help="Файл для результата вместо stdout")
    out.add_argument("--script", help="JSON-файл с JobSpec")
    return parser


def _from_script(path: str) -> Dict[str, Any]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"Не удалось прочитать {path}: {exc}", details={"script": path}) from exc
    if not isinstance(data, dict):
        raise ParseError("Файл задания должен содержать JSON-объект", details={"script": path})
    return data


def _from_flags(args: argparse.Namespace) -> Dict[str, Any]:
    if args.command is None:
        raise ParseError("Не указана команда", details={"commands": list(COMMANDS)})
    data: Dict[str, Any] = {"command": args.command}

    if args.preset or args.vars or args.gens:
        data["scheme"] = {
            "preset": args.preset,
            "variables": _split([args.vars] if args.vars else []),
            "generators": _split(args.gens),
            "point": _split([args.point]) if args.point else None,
            "field": args.field,
        }
    if args.fat_length is not None:
        data["fat"] = {"length": args.fat_length}
    elif args.fat_vars:
        data["fat"] = {"variables": _split([args.fat_vars]), "generators": _split(args.fat_gens)}

    budgets: Dict[str, Any] = {}
    if args.budget_points is not None:
        budgets["points"] = args.budget_points
    if args.budget_groebner is not None:
        budgets["groebner"] = args.budget_groebner
    if args.workers is not None:
        budgets["workers"] = args.workers
    if budgets:
        data["budgets"] = budgets

    strategy: Dict[str, Any] = {"excluded_primes": _ints(args.exclude_chars, "--exclude-chars")}
    if args.strategy:
        strategy["kind"] = args.strategy
    if args.supplied:
        strategy["supplied"] = _split(args.supplied)
        strategy.setdefault("kind", "supplied")
    if args.degree_bound is not None:
        strategy["degree_bound"] = args.degree_bound
    if args.require_confirmed:
        strategy["require_confirmed"] = True
    data["strategy"] = strategy

    for key in ("order", "prime", "normalization", "closed_form", "suite"):
        value = getattr(args, key)
        if value is not None:
            data[key] = value
    if args.no_certify:
        data["certify"] = False
    return data


def build_job(argv: Optional[Sequence[str]] = None) -> JobSpec:
    """Аргументы -> JobSpec; ParseError при любой ошибке ввода."""
    args = build_parser().parse_args(argv)
    if args.script:
        data = _from_script(args.script)
        if args.command is not None and data.get("command", args.command) != args.command:
            raise ParseError(
                "Команда в файле задания не совпадает с командой в аргументах",
                details={"script": data.get("command"), "argument": args.command},
            )
        data.setdefault("command", args.command)
    else:
        data = _from_flags(args)
    if args.format is not None:
        data["format"] = args.format
    if args.output is not None:
        data["output"] = args.output
    job = JobSpec.parse(data)
    LOG.debug("Задание: %s", job.model_dump(mode="json", exclude_defaults=True))
    return job
