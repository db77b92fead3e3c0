#!/usr/bin/env python3
"""
LinClonoid - вычисления с клоноидами, замкнутыми относительно (F,K)-линейных операций

Модульная структура:
- modules/models/     - типы данных (поля, функции, подпространства, решётки)
- modules/ffield.py   - конечные поля и их произведения
- modules/funcspace.py - функции K^n → F, подстановка, маски
- modules/absorbing.py - разложение на 0-поглощающие слагаемые
- modules/clonoid.py  - замыкание по арностям, t_k / r_k, прямые
- modules/modlattice.py - подмодули F_p[K^×] и решётка клоноидов
- modules/cli.py      - команды

Запуск:
    python3 app.py bound --K 3 --F 2
    python3 app.py enumerate --K 3 --F 2 --dot lattice.dot
"""

import sys

from dotenv import load_dotenv

# Загрузка переменных окружения
load_dotenv()

from modules.core import setup_logging
from modules.cli import main


if __name__ == '__main__':
    setup_logging()
    sys.exit(main())
