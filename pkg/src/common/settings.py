# src/common/settings.py
# coding: utf-8
"""
Централизованные настройки проекта.

Конвенции:
- все значения читаются из окружения один раз при импорте;
- бюджеты — значения по умолчанию; флаги CLI (--budget-points, --budget-groebner)
  перекрывают их для одного задания через модель Budgets (src/model/jobs.py).
"""

import os
from pathlib import Path

# Окружение и режим работы
APP_ENV = os.environ.get("APP_ENV", "development")
DEBUG = APP_ENV != "production"
LOG_LEVEL = os.environ.get("LOG_LEVEL", "INFO")

# --------------------------
# Бюджеты вычислений
# --------------------------
# Максимальное число перебираемых наборов значений при подсчёте точек над F_p
BUDGET_POINTS = int(os.environ.get("ARCMOT_BUDGET_POINTS", str(2 ** 30)))

# Максимальное число шагов редукции в одном вычислении базиса Грёбнера,
# интерредукции или нормальной формы
BUDGET_GROEBNER = int(os.environ.get("ARCMOT_BUDGET_GROEBNER", "200000"))

# Поиск переименования переменных и размерность Крулля
RENAMING_MAX_VARS = int(os.environ.get("ARCMOT_RENAMING_MAX_VARS", "12"))
RENAMING_MAX_CANDIDATES = int(os.environ.get("ARCMOT_RENAMING_MAX_CANDIDATES", "50000"))
KRULL_SUBSET_CAP = int(os.environ.get("ARCMOT_KRULL_SUBSET_CAP", str(2 ** 20)))

# Максимальная степень знаменателя при распознавании рациональности
RATIONALITY_MAX_DEGREE = int(os.environ.get("ARCMOT_RATIONALITY_MAX_DEGREE", "8"))

# --------------------------
# Подсчёт точек
# --------------------------
# >1 включает пул процессов для верхнего уровня перебора
COUNT_WORKERS = int(os.environ.get("ARCMOT_COUNT_WORKERS", "1"))

# SQLAlchemy URL кэша подсчётов; пустая строка отключает кэш
COUNT_CACHE_DSN = os.environ.get("ARCMOT_COUNT_CACHE_DSN", "")

# --------------------------
# Данные
# --------------------------
GOLDEN_DIR = Path(os.environ.get(
    "ARCMOT_GOLDEN_DIR",
    str(Path(__file__).resolve().parent.parent / "data" / "golden"),
))
