"""
Командная строка: воспроизводимые пакетные команды с JSON на входе и выходе.

Коды выхода: 0 - успех, 2 - нарушена взаимная простота, 3 - некорректный ввод,
4 - превышен бюджет, 5 - нарушен внутренний инвариант.
"""
import argparse
import json
import logging
import os
import sys
import tempfile
from dataclasses import dataclass
from typing import Optional

import numpy as np

from modules.absorbing import METHODS, decompose, is_absorbing, reconstruct
from modules.clonoid import (
    build_r_k, build_t_k, closure_slice, interpolate_on_lines, line_component, lines_enumerate,
    r_k_factor, unary_generation_check,
)
from modules.core import STRATEGIES, init_config
from modules.errors import ClonoidError, MalformedInput, TheoremViolation
from modules.ffield import prime_moduli, require_coprime, ring_from_dict
from modules.funcspace import function_from_dict, make_function
from modules.modlattice import (
    clonoid_count, clonoid_count_bound, enumerate_submodules, lattice_assemble,
)
from modules.models.function import FiniteFunction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    """Параметры одного запуска"""
    K: object
    F: object
    budget: int
    enum_budget: int
    strategy: str
    seed: int
    output: Optional[str] = None
    dot: Optional[str] = None


# ============================================================================
# ВВОД / ВЫВОД
# ============================================================================

def load_json(value):
    """Встроенный JSON или @путь к файлу"""
    try:
        if value.startswith('@'):
            with open(value[1:], 'r', encoding='utf-8') as f:
                return json.load(f)
        return json.loads(value)
    except (OSError, ValueError) as e:
        raise MalformedInput(f"cannot read JSON from {value!r}: {e}")


def parse_function(data, K, F):
    """Функция из JSON; domain/codomain можно опустить - тогда берутся --K/--F"""
    if not isinstance(data, dict):
        raise MalformedInput(f"a function must be a JSON object, got {type(data).__name__}")
    if "domain" in data and "codomain" in data:
        return function_from_dict(data)
    if K is None or F is None:
        raise MalformedInput("function has no domain/codomain and --K/--F are not given")
    try:
        return make_function(K, F, int(data["arity"]), data["table"])
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedInput(f"bad function description: {e}")


def parse_generators(data, K, F):
    if isinstance(data, dict):
        data = data.get("generators", [])
    if not isinstance(data, list):
        raise MalformedInput("generators must be a JSON list")
    return [parse_function(item, K, F) for item in data]


def render_json(payload):
    return json.dumps(payload, indent=2, ensure_ascii=False, sort_keys=False) + '\n'


def write_output(text, path):
    """Записать артефакт один раз: stdout или атомарно через временный файл"""
    if not path or path == '-':
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix='.tmp-', suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, 'w', encoding='utf-8') as f:
            f.write(text)
        os.replace(tmp_path, path)
    except OSError:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise
    logger.info(f"[CLI] записан {path}")


def _rings(cfg):
    if cfg.K is None or cfg.F is None:
        raise MalformedInput("--K and --F are required")
    return cfg.K, cfg.F


# ============================================================================
# КОМАНДЫ
# ============================================================================

def cmd_closure(cfg, args):
    K, F = _rings(cfg)
    require_coprime(K, F)
    generators = parse_generators(load_json(args.generators), K, F)
    slice_ = closure_slice(generators, args.arity, domain=K, codomain=F, budget=cfg.budget)
    write_output(render_json({"command": "closure", "ranks": slice_.ranks, "slice": slice_.to_dict()}),
                 cfg.output)
    return 0


def cmd_unary_check(cfg, args):
    K, F = _rings(cfg)
    require_coprime(K, F)
    generators = parse_generators(load_json(args.generators), K, F)
    verdicts = unary_generation_check(generators, args.k_max, domain=K, codomain=F, budget=cfg.budget)
    equal = all(v.equal for v in verdicts)
    write_output(render_json({"command": "unary-check", "equal": equal,
                              "verdicts": [v.to_dict() for v in verdicts]}), cfg.output)
    if not equal:
        raise TheoremViolation("a clonoid is not generated by its unary part")
    return 0


def cmd_enumerate(cfg, args):
    K, F = _rings(cfg)
    require_coprime(K, F)
    lattices = [enumerate_submodules(p, K, cfg.strategy, cfg.enum_budget) for p in prime_moduli(F)]
    payload = {
        "command": "enumerate",
        "strategy": cfg.strategy,
        "bound": clonoid_count_bound(F, K),
        "count": int(np.prod([len(lattice) for lattice in lattices])),
        "lattices": [lattice.to_dict() for lattice in lattices],
    }
    write_output(render_json(payload), cfg.output)
    if cfg.dot:
        write_output(''.join(lattice.to_dot(name=f'lattice_p{lattice.p}') for lattice in lattices), cfg.dot)
    return 0


def cmd_bound(cfg, args):
    K, F = _rings(cfg)
    bound = clonoid_count_bound(F, K)
    payload = {"command": "bound", "K": K.to_dict(), "F": F.to_dict(), "bound": bound}
    if args.exact:
        payload["count"] = clonoid_count(F, K, cfg.strategy, cfg.enum_budget)
    write_output(render_json(payload), cfg.output)
    return 0


def cmd_decompose(cfg, args):
    f = parse_function(load_json(args.function), cfg.K, cfg.F)
    require_coprime(f.domain, f.codomain)
    components = decompose(f, args.method)
    if reconstruct(components) != f:
        raise TheoremViolation("components do not sum to the function")
    write_output(render_json({
        "command": "decompose",
        "method": args.method,
        "components": [c.to_dict() for c in components],
        "nonzero": [sorted(c.I) for c in components if not c.f_I.is_zero()],
    }), cfg.output)
    return 0


def cmd_tk(cfg, args):
    g = parse_function(load_json(args.function), cfg.K, cfg.F)
    require_coprime(g.domain, g.codomain)
    t_k = build_t_k(g, args.arity)
    factor = r_k_factor(g.domain, g.codomain)
    payload = {"command": "tk", "k": args.arity, "factor": list(factor), "t_k": t_k.to_dict()}
    if args.arity >= 2:
        r_k = build_r_k(g, args.arity)
        expected = (t_k.table * np.asarray(factor, dtype=np.int64)) % g.codomain.moduli
        payload["r_k"] = r_k.to_dict()
        payload["r_k_equals_factor_times_t_k"] = bool(np.array_equal(r_k.table, expected))
        write_output(render_json(payload), cfg.output)
        if not payload["r_k_equals_factor_times_t_k"]:
            raise TheoremViolation("r_k differs from (Π q_i)·t_k")
        return 0
    write_output(render_json(payload), cfg.output)
    return 0


def cmd_assemble(cfg, args):
    K, F = _rings(cfg)
    require_coprime(K, F)
    product = lattice_assemble(enumerate_submodules(p, K, cfg.strategy, cfg.enum_budget)
                               for p in prime_moduli(F))
    roundtrip = all(product.rho(product.psi(t)) == t for t in product.elements())
    if not roundtrip:
        raise TheoremViolation("rho∘psi is not the identity")
    payload = product.to_dict()
    payload.update({"command": "assemble", "rho_psi_identity": roundtrip})
    write_output(render_json(payload), cfg.output)
    return 0


def _random_function(rng, K, F, n):
    table = rng.integers(0, F.moduli, size=(K.order ** n, F.m))
    return FiniteFunction(K, F, n, table)


def cmd_verify(cfg, args):
    """Выборочная проверка разложения, тождества r_k и интерполяции по прямым"""
    K, F = _rings(cfg)
    require_coprime(K, F)
    rng = np.random.default_rng(cfg.seed)
    everything = range(1, K.m + 1)
    checks = {"decomposition": 0, "r_k": 0, "lines": 0}
    for _ in range(args.samples):
        n = int(rng.integers(1, args.max_arity + 1))
        f = _random_function(rng, K, F, n)
        components = decompose(f)
        if reconstruct(components) != f or components != decompose(f, 'recursive'):
            raise TheoremViolation("decomposition check failed")
        if not all(is_absorbing(c.f_I, c.I) for c in components):
            raise TheoremViolation("a component is not absorbing")
        checks["decomposition"] += 1

        g = decompose(_random_function(rng, K, F, 1))[-1].f_I
        k = n + 1
        factor = np.asarray(r_k_factor(K, F), dtype=np.int64)
        if not np.array_equal(build_r_k(g, k).table, (build_t_k(g, k).table * factor) % F.moduli):
            raise TheoremViolation("r_k differs from (Π q_i)·t_k")
        checks["r_k"] += 1

        absorbing = components[-1].f_I
        total = sum(line_component(absorbing, line).table for line in lines_enumerate(K, n)) % F.moduli
        if not np.array_equal(total, absorbing.table) or not is_absorbing(absorbing, everything):
            raise TheoremViolation("line decomposition does not reconstruct the function")
        interpolate_on_lines(absorbing)
        checks["lines"] += 1
    write_output(render_json({"command": "verify", "seed": cfg.seed, "samples": args.samples,
                              "passed": checks}), cfg.output)
    return 0


COMMANDS = {
    'closure': cmd_closure,
    'unary-check': cmd_unary_check,
    'enumerate': cmd_enumerate,
    'bound': cmd_bound,
    'decompose': cmd_decompose,
    'tk': cmd_tk,
    'assemble': cmd_assemble,
    'verify': cmd_verify,
}


# ============================================================================
# РАЗБОР АРГУМЕНТОВ
# ============================================================================

class CliArgumentParser(argparse.ArgumentParser):
    """Ошибки разбора аргументов - некорректный ввод (код 3), а не SystemExit(2)"""

    def error(self, message):
        raise MalformedInput(f"{self.prog}: {message}")


def build_parser():
    common = CliArgumentParser(add_help=False)
    common.add_argument('--K', help='domain ring: JSON object/list or @file')
    common.add_argument('--F', help='codomain ring: JSON object/list or @file')
    common.add_argument('--budget', type=int, help='max table entries |K|^k per function')
    common.add_argument('--enum-budget', type=int, help='max seed vectors / subspaces when enumerating')
    common.add_argument('--strategy', choices=STRATEGIES, help='submodule enumeration strategy')
    common.add_argument('--seed', type=int, help='seed of sampled checks')
    common.add_argument('--out', help='output file (default: stdout)')
    common.add_argument('--dot', help='DOT output file for Hasse diagrams')

    parser = CliArgumentParser(prog='linclonoid',
                                     description='Linearly closed clonoids between finite fields')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('closure', parents=[common], help='closure slice of a generator set')
    p.add_argument('--generators', required=True)
    p.add_argument('--arity', type=int, default=1)

    p = sub.add_parser('unary-check', parents=[common], help='compare C^[k] with the closure of C^[1]')
    p.add_argument('--generators', required=True)
    p.add_argument('--k-max', type=int, default=2)

    sub.add_parser('enumerate', parents=[common], help='submodule lattices per prime of F')

    p = sub.add_parser('bound', parents=[common], help='upper bound on the number of clonoids')
    p.add_argument('--exact', action='store_true', help='also enumerate and report the exact count')

    p = sub.add_parser('decompose', parents=[common], help='0-absorbing decomposition of a function')
    p.add_argument('--function', required=True)
    p.add_argument('--method', choices=METHODS, default='inclusion-exclusion')

    p = sub.add_parser('tk', parents=[common], help='t_k and r_k of a unary 0-absorbing function')
    p.add_argument('--function', required=True)
    p.add_argument('--arity', type=int, default=2)

    sub.add_parser('assemble', parents=[common], help='direct product of the per-prime lattices')

    p = sub.add_parser('verify', parents=[common], help='seeded sampled property checks')
    p.add_argument('--samples', type=int, default=20)
    p.add_argument('--max-arity', type=int, default=2)
    return parser


def make_run_config(args):
    settings = init_config(budget=args.budget, enum_budget=args.enum_budget,
                           strategy=args.strategy, seed=args.seed)
    return RunConfig(
        K=ring_from_dict(load_json(args.K)) if args.K else None,
        F=ring_from_dict(load_json(args.F)) if args.F else None,
        budget=settings.budget,
        enum_budget=settings.enum_budget,
        strategy=settings.strategy,
        seed=settings.seed,
        output=args.out,
        dot=args.dot,
    )


def main(argv=None):
    """Точка входа; возвращает код выхода"""
    try:
        args = build_parser().parse_args(argv)
        cfg = make_run_config(args)
        logger.info(f"[CLI] {args.command}: K={cfg.K!r}, F={cfg.F!r}")
        return COMMANDS[args.command](cfg, args)
    except ClonoidError as e:
        logger.error(f"[CLI] {type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
