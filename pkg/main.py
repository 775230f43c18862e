# main.py
# coding: utf-8
"""
Точка входа CLI.

Примеры:
    python main.py jet --preset cusp --n 4
    python main.py auto --vars x,y --gens "x*y" --point 0,0 --n 2 --format json
    python main.py count --vars a,b,c,d --gens "a*c" --prime 3
    python main.py zeta --preset node --n 8 --normalization codim --closed-form zeta_node --format text
    python main.py verify paper-tables
    python main.py describe
"""
import logging
import sys

from src.common import settings
from src.cli.runner import main

logging.basicConfig(level=settings.LOG_LEVEL, stream=sys.stderr)

if __name__ == "__main__":
    sys.exit(main())
