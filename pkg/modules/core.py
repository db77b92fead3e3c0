"""
Центральный модуль: конфигурация и логирование.

Настройки читаются из переменных окружения (и файла .env), флаги командной
строки передаются в init_config() как переопределения.
"""

import logging
import os
from dataclasses import dataclass, replace
from logging.handlers import RotatingFileHandler
from typing import Optional

from dotenv import load_dotenv

from modules.errors import ConfigError

# Загрузка переменных окружения
load_dotenv()

STRATEGIES = ('join-closure', 'brute-force', 'both')

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


@dataclass(frozen=True)
class Settings:
    """Параметры вычислений"""
    budget: int = 100_000             # |K|^k элементов таблицы на одну функцию
    enum_budget: int = 65_536         # затравочных векторов / подпространств при перечислении
    subst_chunk: int = 4096           # кортежей подстановок в одном векторизованном пакете
    strategy: str = 'join-closure'
    seed: int = 0
    max_field_order: int = 1024
    log_level: str = 'INFO'
    log_file: Optional[str] = None


# Текущие настройки (инициализируются в init_config)
settings = None


def _env_int(name, default):
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw.strip())
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")


def _validate(cfg):
    if cfg.budget <= 0:
        raise ConfigError("budget must be positive")
    if cfg.enum_budget <= 0:
        raise ConfigError("enumeration budget must be positive")
    if cfg.subst_chunk <= 0:
        raise ConfigError("substitution chunk must be positive")
    if cfg.strategy not in STRATEGIES:
        raise ConfigError(f"unknown strategy {cfg.strategy!r}, expected one of {', '.join(STRATEGIES)}")
    if cfg.max_field_order < 2:
        raise ConfigError("max field order must be at least 2")
    return cfg


def load_settings_from_env():
    """Собрать настройки из окружения"""
    return _validate(Settings(
        budget=_env_int("CLONOID_BUDGET", Settings.budget),
        enum_budget=_env_int("CLONOID_ENUM_BUDGET", Settings.enum_budget),
        subst_chunk=_env_int("CLONOID_SUBST_CHUNK", Settings.subst_chunk),
        strategy=os.getenv("CLONOID_STRATEGY", Settings.strategy).strip().lower(),
        seed=_env_int("CLONOID_SEED", Settings.seed),
        max_field_order=_env_int("CLONOID_MAX_FIELD_ORDER", Settings.max_field_order),
        log_level=os.getenv("CLONOID_LOG_LEVEL", Settings.log_level).strip().upper(),
        log_file=os.getenv("CLONOID_LOG_FILE") or None,
    ))


def init_config(**overrides):
    """
    Инициализация настроек.

    Args:
        **overrides: значения, перекрывающие окружение (None игнорируется)

    Returns:
        Settings
    """
    global settings
    base = load_settings_from_env()
    overrides = {key: value for key, value in overrides.items() if value is not None}
    settings = _validate(replace(base, **overrides))
    return settings


def get_config():
    """Возвращает текущие настройки (инициализирует по окружению при первом вызове)"""
    if settings is None:
        return init_config()
    return settings


def setup_logging(level=None, log_file=None):
    """
    Настройка логирования: stderr и, если задан файл, RotatingFileHandler.
    stdout остаётся под артефакты.
    """
    cfg = get_config()
    level = (level or cfg.log_level or 'INFO').upper()
    log_file = log_file or cfg.log_file

    handlers = [logging.StreamHandler()]
    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        handlers.append(RotatingFileHandler(log_file, maxBytes=10485760, backupCount=5))

    logging.basicConfig(level=getattr(logging, level, logging.INFO), format=LOG_FORMAT,
                        handlers=handlers, force=True)
    return logging.getLogger('linclonoid')
