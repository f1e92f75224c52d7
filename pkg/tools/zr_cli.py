#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
零速率列表恢复工具箱命令行
支持阈值、系数、半径、构造、折中表、判定、丰度统计和性质套件

退出码：0 正常；1 判定为 FAIL、性质失败或残差增长；2 参数或解析错误；3 超出枚举预算
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import numpy as np

from data.codebook_repository import FileCodebookRepository
from models.codebook import Codebook
from models.simplex_point import SimplexPoint
from services.exporters.result_exporter import ResultExporter
from services.exporters.serialization import (
    abundance_to_json,
    decimal_value,
    exact_field,
    fraction_text,
    property_results_to_json,
    radius_report_to_json,
)
from utils.config import get_config
from utils.exceptions import BudgetExceededError, ResidualGrowthError, ZeroRateError, handle_exceptions
from utils.logger import get_logger, setup_logging

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_logger = get_logger("CLI")


# ------------------------------------------------------------------ parsing --

def parse_fraction(text: str) -> Fraction:
    """"1/3"、"0.25"、"2" → Fraction；argparse 的 type 回调"""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"无法解析为有理数: {text!r}") from exc


def parse_int_list(text: str) -> List[int]:
    """"1,2,3" → [1, 2, 3]"""
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"无法解析为整数列表: {text!r}") from exc


def parse_omega(text: str) -> SimplexPoint:
    """"1/2,1/4,1/4" → 有理单纯形点"""
    try:
        entries = [Fraction(x.strip()) for x in text.split(",") if x.strip()]
        return SimplexPoint.rational(entries)
    except (ValueError, ZeroDivisionError, ZeroRateError) as exc:
        raise argparse.ArgumentTypeError(f"ω 不是合法的概率向量: {text!r} ({exc})") from exc


def _show(name: str, value) -> str:
    return f"{name} = {fraction_text(value)} ({decimal_value(value)})"


def _load_code(path: str) -> Codebook:
    return FileCodebookRepository().load(path)


def _out_target(path: str):
    """--out 路径拆成 (目录, 不含扩展名的文件名)"""
    directory, filename = os.path.split(path)
    return directory or ".", os.path.splitext(filename)[0]


# ----------------------------------------------------------------- commands --

@handle_exceptions("CLI", reraise=True)
def cmd_threshold(args, exporter: ResultExporter) -> int:
    from services.thresholds import threshold_table, zero_rate_threshold

    if args.csv:
        L_values = range(args.L, (args.L_max or args.L) + 1)
        sys.stdout.write(exporter.render("csv", threshold_table(args.q, args.ell, L_values)))
        return EXIT_OK

    value = zero_rate_threshold(args.q, args.ell, args.L)
    if args.json:
        payload = {"q": args.q, "ell": args.ell, "L": args.L, **exact_field("p_star", value)}
        sys.stdout.write(exporter.render("json", payload))
    else:
        print(_show(f"p*({args.q},{args.ell},{args.L})", value))
    return EXIT_OK


@handle_exceptions("CLI", reraise=True)
def cmd_coefficient(args, exporter: ResultExporter) -> int:
    from services.construction import c_coefficient, coefficient_verified

    value = c_coefficient(args.q, args.ell, args.L)
    if args.json:
        payload = {
            "q": args.q, "ell": args.ell, "L": args.L,
            **exact_field("c", value),
            "verified": coefficient_verified(args.ell, args.L),
        }
        sys.stdout.write(exporter.render("json", payload))
    else:
        print(_show(f"c_{{{args.q},{args.ell},{args.L}}}", value))
    return EXIT_OK


@handle_exceptions("CLI", reraise=True)
def cmd_radius(args, exporter: ResultExporter) -> int:
    from services.radii import radius_report

    code = _load_code(args.codefile)
    rows = code.select(args.list) if args.list else list(code.rows)
    omegas: Dict[str, SimplexPoint] = {
        f"omega_{k}": omega for k, omega in enumerate(args.omega or [], start=1)
    }
    if args.dump_lp:
        from services.lp.relaxation import relaxed_problem
        from services.lp.solver import dump_tsv

        _logger.info(f"松弛线性规划已写入 {dump_tsv(relaxed_problem(rows, code.q, args.ell), args.dump_lp)}")
    report = radius_report(rows, code.q, args.ell, omegas, workers=args.threads)
    sys.stdout.write(exporter.render("json", radius_report_to_json(report)))
    return EXIT_OK if report.complete else EXIT_BUDGET


@handle_exceptions("CLI", reraise=True)
def cmd_construct(args, exporter: ResultExporter) -> int:
    from services.construction import generate, spec_for

    code = generate(spec_for(args.q, args.ell, args.L, args.m))
    if args.out:
        path = FileCodebookRepository().save(code, args.out)
        print(f"✓ 码本已保存: {path} (q={code.q}, n={code.n}, M={code.size})")
    else:
        sys.stdout.write(exporter.render("codebook", code))
    return EXIT_OK


@handle_exceptions("CLI", reraise=True)
def cmd_tradeoff(args, exporter: ResultExporter) -> int:
    from services.construction import tradeoff_frame, tradeoff_table

    frame = tradeoff_frame(tradeoff_table(args.q, args.ell, args.L, args.m_list))
    if args.out:
        directory, base = _out_target(args.out)
        saved = exporter.export(frame, ["csv"], directory, base, lambda text: _logger.error(text.strip()))
        if not saved:
            return EXIT_FAILURE
        print(f"✓ 折中表已保存: {saved[0]}")
    else:
        sys.stdout.write(exporter.render("csv", frame))
    return EXIT_OK


@handle_exceptions("CLI", reraise=True)
def cmd_verify(args, exporter: ResultExporter) -> int:
    from services.verifier import is_list_recoverable, is_list_recoverable_via_radius, verdict_to_json

    code = _load_code(args.codefile)
    if args.method == "radius":
        verdict = is_list_recoverable_via_radius(code, args.p, args.ell, args.L)
    else:
        verdict = is_list_recoverable(code, args.p, args.ell, args.L, workers=args.threads)
    sys.stdout.write(exporter.render("json", verdict_to_json(verdict)))
    return EXIT_OK if verdict.passed else EXIT_FAILURE


@handle_exceptions("CLI", reraise=True)
def cmd_abundance(args, exporter: ResultExporter) -> int:
    from services.verifier import abundance_statistics

    code = _load_code(args.codefile)
    report = abundance_statistics(
        code, args.ell, args.L, epsilon=args.epsilon, delta=args.delta,
        rng=np.random.default_rng(args.seed),
    )
    sys.stdout.write(exporter.render("json", abundance_to_json(report)))
    return EXIT_OK


@handle_exceptions("CLI", reraise=True)
def cmd_propsuite(args, exporter: ResultExporter) -> int:
    from services.property_suite import default_suite

    suite = default_suite()
    if args.list:
        print(suite.get_help_text())
        return EXIT_OK

    results = suite.run(seed=args.seed, trials=args.trials)
    if args.json:
        sys.stdout.write(exporter.render("json", property_results_to_json(results)))
    else:
        for result in results:
            mark = "PASS" if result.passed else "FAIL"
            print(f"{mark}  {result.name}  {result.detail}")
        failed = sum(1 for r in results if not r.passed)
        print(f"{len(results) - failed}/{len(results)} 项通过")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILURE


COMMANDS = {
    "threshold": cmd_threshold,
    "coefficient": cmd_coefficient,
    "radius": cmd_radius,
    "construct": cmd_construct,
    "tradeoff": cmd_tradeoff,
    "verify": cmd_verify,
    "abundance": cmd_abundance,
    "propsuite": cmd_propsuite,
}


def build_parser() -> argparse.ArgumentParser:
    config = get_config()
    parser = argparse.ArgumentParser(prog="zr", description="零速率列表恢复码计算工具")
    parser.add_argument("--verbose", action="store_true", help="输出调试日志")
    parser.add_argument("--threads", type=int, default=None, help="并行工作线程数上限")
    parser.add_argument("--seed", type=int, default=config.DEFAULT_SEED, help="随机种子")

    subparsers = parser.add_subparsers(dest="command", help="命令")

    threshold_parser = subparsers.add_parser("threshold", help="零速率阈值 p*(q,ℓ,L)")
    threshold_parser.add_argument("q", type=int)
    threshold_parser.add_argument("ell", type=int)
    threshold_parser.add_argument("L", type=int)
    threshold_format = threshold_parser.add_mutually_exclusive_group()
    threshold_format.add_argument("--json", action="store_true", help="输出 JSON")
    threshold_format.add_argument("--csv", action="store_true", help="输出 CSV 表")
    threshold_parser.add_argument("--L-max", dest="L_max", type=int, help="CSV 表中 L 的上界")

    coefficient_parser = subparsers.add_parser("coefficient", help="一阶系数 c_{q,ℓ,L}")
    coefficient_parser.add_argument("q", type=int)
    coefficient_parser.add_argument("ell", type=int)
    coefficient_parser.add_argument("L", type=int)
    coefficient_parser.add_argument("--json", action="store_true", help="输出 JSON")

    radius_parser = subparsers.add_parser("radius", help="列表的四种半径")
    radius_parser.add_argument("codefile", help="码本文件")
    radius_parser.add_argument("--list", type=parse_int_list, help="行号列表（0 起），如 0,2,5")
    radius_parser.add_argument("--ell", type=int, default=1)
    radius_parser.add_argument("--omega", type=parse_omega, action="append", help="附加权重，如 1/2,1/4,1/4")
    radius_parser.add_argument("--dump-lp", dest="dump_lp", metavar="PATH", help="把松弛线性规划写成 TSV")

    construct_parser = subparsers.add_parser("construct", help="生成平衡列构造码")
    for name in ("q", "ell", "L", "m"):
        construct_parser.add_argument(name, type=int)
    construct_parser.add_argument("--out", help="输出码本文件路径")

    tradeoff_parser = subparsers.add_parser("tradeoff", help="构造码的折中表")
    for name in ("q", "ell", "L"):
        tradeoff_parser.add_argument(name, type=int)
    tradeoff_parser.add_argument("--m-list", dest="m_list", type=parse_int_list, default=[1, 2, 3])
    tradeoff_parser.add_argument("--out", help="输出 CSV 文件路径")

    verify_parser = subparsers.add_parser("verify", help="判定 (p,ℓ,L)-列表可恢复性")
    verify_parser.add_argument("codefile", help="码本文件")
    verify_parser.add_argument("p", type=parse_fraction)
    verify_parser.add_argument("ell", type=int, nargs="?", default=1)
    verify_parser.add_argument("L", type=int, nargs="?", default=2)
    verify_parser.add_argument("--method", choices=["ball", "radius"], default="ball")

    abundance_parser = subparsers.add_parser("abundance", help="近均匀类型元组的比例")
    abundance_parser.add_argument("codefile", help="码本文件")
    abundance_parser.add_argument("--ell", type=int, default=1)
    abundance_parser.add_argument("--L", type=int, default=2)
    abundance_parser.add_argument("--epsilon", type=parse_fraction, default=Fraction(1, 10))
    abundance_parser.add_argument("--delta", type=parse_fraction, default=Fraction(0))

    propsuite_parser = subparsers.add_parser("propsuite", help="运行性质检查套件")
    propsuite_parser.add_argument("--trials", type=int, default=20)
    propsuite_parser.add_argument("--json", action="store_true", help="输出 JSON")
    propsuite_parser.add_argument("--list", action="store_true", help="只列出已注册的性质")
    propsuite_parser.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="随机种子（同全局 --seed）")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """命令行入口，返回退出码"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    setup_logging(logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)

    if not args.command:
        parser.print_help()
        return EXIT_USAGE
    if args.threads is not None and args.threads < 1:
        print("✗ --threads 必须 ≥ 1", file=sys.stderr)
        return EXIT_USAGE

    try:
        return COMMANDS[args.command](args, ResultExporter())
    except BudgetExceededError:
        return EXIT_BUDGET
    except ResidualGrowthError:
        return EXIT_FAILURE
    except ZeroRateError:
        return EXIT_USAGE
    except Exception:
        # 已由 handle_exceptions 记录
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
