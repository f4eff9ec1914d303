#!/usr/bin/env python3
"""
旋转椭球调和工具包 - 主程序
Spheroidal Harmonics Toolkit Main Program
"""

import sys
import json
import logging
import argparse
from pathlib import Path
from typing import List, Optional

# 添加项目根目录到Python路径
project_root = Path(__file__).parent.absolute()
sys.path.insert(0, str(project_root))

from commands.commands import COMMANDS, EXIT_USAGE, RunConfig
from core.basis import BasisManager
from core.errors import ConfigError, ToolkitError
from core.harmonics import SpheroidParam
from utils.formatting import parse_rational_list
from utils.logger import setup_logger

DEFAULT_CONFIG = {
    "max_degree": None,
    "t_values": ["0", "1/4", "9/16", "-1", "-3"],
    "format": "json",
    "out": None,
    "log_level": "WARNING",
    "log_dir": None,
    "plot_grid": 41,
    "coords": "cartesian",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="main.py", description="旋转椭球上的调和、单演与反演多项式基")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--t", dest="t", help="参数 t = μ² 的列表，逗号分隔，如 0,1/4,-3")
    common.add_argument("--max-degree", dest="max_degree", type=int)
    common.add_argument("--format", dest="format", choices=("json", "csv"))
    common.add_argument("--out", dest="out")
    common.add_argument("--config", dest="config", help="配置文件路径，默认使用 config.json")
    common.add_argument("--log-level", dest="log_level", choices=("DEBUG", "INFO", "WARNING", "ERROR"))

    sub = parser.add_subparsers(dest="command", required=True)

    basis = sub.add_parser("basis", parents=[common], help="输出基函数多项式")
    basis.add_argument("--family", required=True)

    coeffs = sub.add_parser("coeffs", parents=[common], help="输出变换系数表")
    coeffs.add_argument("--family", required=True)
    coeffs.add_argument("--t-target", dest="t_target")
    coeffs.add_argument("--t-source", dest="t_source")

    gram = sub.add_parser("gram", parents=[common], help="输出 Gram 矩阵")
    gram.add_argument("--family", required=True)

    convert = sub.add_parser("convert", parents=[common], help="输出元素在另一参数上的展开")
    convert.add_argument("--family", required=True)
    convert.add_argument("--n", type=int, required=True)
    convert.add_argument("--m", type=int, required=True)
    convert.add_argument("--parity", choices=("+", "-"), default="+")
    convert.add_argument("--t-source", dest="t_source", required=True)
    convert.add_argument("--t-target", dest="t_target", required=True)

    verify = sub.add_parser("verify", parents=[common], help="运行验证套件")
    verify.add_argument("--suite", default="all")
    verify.add_argument("--n", type=int, help="intersection 套件只检查该次数")

    plot = sub.add_parser("plotdata", parents=[common], help="输出浮点采样")
    plot.add_argument("--family", required=True)
    plot.add_argument("--n", type=int, required=True)
    plot.add_argument("--m", type=int, default=0)
    plot.add_argument("--parity", choices=("+", "-"), default="+")
    plot.add_argument("--coords", choices=("cartesian", "spheroidal"))
    plot.add_argument("--grid", dest="plot_grid", type=int)
    plot.add_argument("--png", help="同时保存灰度预览图")
    return parser


class SpheroidToolkit:
    def __init__(self, args: argparse.Namespace):
        """初始化工具包"""
        self.args = args
        self.project_root = project_root
        self.config = self.load_config(args.config)
        # 设置日志
        self.logger = setup_logger('spheroid_toolkit', self.config["log_level"],
                                   self.config.get("log_dir"))
        for name in ("core", "checks", "commands", "render", "utils"):
            setup_logger(name, self.config["log_level"], self.config.get("log_dir"))

        # 基函数缓存在各子命令间共享
        self.manager = BasisManager()

    def load_config(self, path: Optional[str] = None) -> dict:
        """加载配置文件，命令行参数优先"""
        config_path = Path(path) if path else self.project_root / "config.json"

        # 从默认配置开始
        config = dict(DEFAULT_CONFIG)
        if config_path.exists():
            try:
                with open(config_path, 'r', encoding='utf-8') as f:
                    loaded = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                raise ConfigError(f"加载配置失败 {config_path}: {e}") from e
            if not isinstance(loaded, dict):
                raise ConfigError(f"配置文件必须是 JSON 对象: {config_path}")
            config.update(loaded)
        elif path:
            raise ConfigError(f"配置文件不存在: {config_path}")

        # 命令行参数覆盖配置文件
        for key in ("max_degree", "format", "out", "log_level", "plot_grid", "coords"):
            value = getattr(self.args, key, None)
            if value is not None:
                config[key] = value
        if getattr(self.args, "t", None) is not None:
            config["t_values"] = self.args.t
        return config

    def build_run_config(self) -> RunConfig:
        """由合并后的配置生成运行配置并校验"""
        # t 列表可以是字符串或 JSON 数组
        t_values = parse_rational_list(self.config["t_values"])
        run_config = RunConfig(
            max_degree=self.config.get("max_degree"),
            t_values=t_values,
            format=self.config.get("format", "json"),
            out=self.config.get("out"),
            plot_grid=int(self.config.get("plot_grid", 41)),
            coords=self.config.get("coords", "cartesian"),
        )
        run_config.validate()
        return run_config

    def run(self) -> int:
        """执行子命令，返回退出码"""
        command = self.args.command
        self.logger.info(f"执行命令: {command}")

        # 源参数与目标参数同样要求 t < 1
        for key in ("t_source", "t_target"):
            if getattr(self.args, key, None) is not None:
                setattr(self.args, key, SpheroidParam.of(getattr(self.args, key)).t)

        # 合并配置并校验
        run_config = self.build_run_config()

        # 分派到子命令
        return COMMANDS[command](run_config, self.args, self.manager).run()


def main(argv: Optional[List[str]] = None) -> int:
    """主函数"""
    # 解析命令行参数
    args = build_parser().parse_args(argv)

    # 初始化
    try:
        toolkit = SpheroidToolkit(args)
    except ToolkitError as e:
        logging.getLogger('spheroid_toolkit').error(f"初始化失败: {e}", exc_info=True)
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_USAGE

    # 运行
    try:
        return toolkit.run()
    except ToolkitError as e:
        toolkit.logger.error(f"执行失败: {e}", exc_info=True)
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        toolkit.logger.info("收到键盘中断信号")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
