#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Shi 区域极小元计算工具 主程序
"""

import argparse
import logging
import sys

from cli import CommandHandler
from config import Config, setup_logging
from error_handler import EXIT_PARSE, ParseError, ShiMinError
from oracle import NEIGHBOR_MODES
from rootsys import FAMILIES

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """参数错误按解析错误处理（退出码 1），不使用 argparse 默认的 2"""

    def error(self, message):
        raise ParseError(f"参数错误: {message}")


class ShiMinApp:
    """主应用程序类"""

    FORMATS = {
        'min': ('text', 'json'),
        'regions': ('text', 'json'),
        'verify': ('text', 'json'),
        'diagram': ('text', 'svg', 'json'),
    }

    def build_parser(self):
        parser = _Parser(prog='shimin', description='Shi 区域的极小元、停车函数与弧图')
        parser.add_argument('--log', help='日志级别（默认取 SHIMIN_LOG）')
        commands = parser.add_subparsers(dest='command', parser_class=_Parser)

        for name, formats in self.FORMATS.items():
            sub = commands.add_parser(name)
            sub.add_argument('family_pos', nargs='?', metavar='FAMILY', type=str.upper, choices=FAMILIES)
            sub.add_argument('rank_pos', nargs='?', metavar='RANK', type=int)
            sub.add_argument('--family', type=str.upper, choices=FAMILIES)
            sub.add_argument('--rank', type=int)
            sub.add_argument('--format', dest='fmt', choices=formats, default='text')
            sub.add_argument('--output', help='输出文件路径（默认标准输出）')
            sub.add_argument('--max-depth', type=int)
            sub.add_argument('--max-alcoves', type=int)

        commands.choices['min'].add_argument('--sign', help='规范顺序的符号类型，如 "+,+,-"')
        commands.choices['min'].add_argument('--pyramid', action='store_true', help='--sign 使用 A 型金字塔写法')
        commands.choices['min'].add_argument('--pf', help="停车函数 JSON、文件路径，或 '-' 表示标准输入")
        commands.choices['diagram'].add_argument('--pf', help='停车函数 JSON 或文件路径')

        verify = commands.choices['verify']
        verify.add_argument('--patience', type=int)
        verify.add_argument('--workers', type=int)
        verify.add_argument('--neighbors', choices=NEIGHBOR_MODES, default='facets')
        verify.add_argument('--stream', help='把每个 alcove 的 K 向量按 JSON 行写入该文件')
        return parser

    def run(self, argv=None, stdout=None):
        """解析参数并执行命令，返回退出码"""
        try:
            args = self.build_parser().parse_args(argv)
            setup_logging(args.log)
            Config.validate_config()

            if not args.command:
                raise ParseError("需要指定命令: min / regions / verify / diagram")

            limits = Config.limits(
                max_depth=args.max_depth,
                max_alcoves=args.max_alcoves,
                patience=getattr(args, 'patience', None),
                workers=getattr(args, 'workers', None),
            )
        except ShiMinError as e:
            logger.error(f"❌ {e}")
            return e.error_code

        handler = CommandHandler(limits, stdout=stdout)
        family = args.family or args.family_pos
        rank = args.rank if args.rank is not None else args.rank_pos
        common = {'fmt': args.fmt, 'output': args.output}

        if args.command == 'min':
            return handler.cmd_min(family, rank, sign=args.sign, pf=args.pf, pyramid=args.pyramid, **common)
        if args.command == 'regions':
            return handler.cmd_regions(family, rank, **common)
        if args.command == 'verify':
            return handler.cmd_verify(family, rank, neighbors=args.neighbors, stream=args.stream, **common)
        if args.command == 'diagram':
            return handler.cmd_diagram(family, rank, pf=args.pf, **common)
        return EXIT_PARSE


def main():
    """主函数"""
    try:
        app = ShiMinApp()
        sys.exit(app.run())
    except KeyboardInterrupt:
        logger.info("👋 程序已停止")
        sys.exit(1)


if __name__ == "__main__":
    main()
