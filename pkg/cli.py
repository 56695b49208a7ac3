"""
命令处理器：min / regions / verify / diagram
每个命令返回退出码，异常由 error_handler 统一转换
"""

import logging
import sys

from config import Config
from diagram_render import render_svg, render_text
from diagrams import arcs_from_partition
from error_handler import (EXIT_OK, ErrorReporter, InadmissibleError,
                          ParseError, ResourceLimitError, VerificationError,
                          error_handler)
from formatter import ResultFormatter
from oracle import (enumerate_alcoves, oracle_minimal, region_summaries,
                    regions_by_sign, stream_records)
from rootsys import build_root_system, coxeter_number
from shimin import (al_forward, arr_forward, check_shi_relations,
                    minimal_element, minimal_from_sign, parking_functions,
                    sign_of)
from utils import (format_pyramid, load_json, parse_parking_function,
                   parse_pyramid, parse_sign_csv)

logger = logging.getLogger(__name__)


class CommandHandler:
    """命令处理器"""

    def __init__(self, limits=None, stdout=None):
        self.limits = limits or Config.limits()
        self.stdout = stdout or sys.stdout

    def _emit(self, text, output=None):
        if output:
            with open(output, 'w', encoding='utf-8') as f:
                f.write(text + "\n")
            logger.info(f"结果已写入 {output}")
        else:
            self.stdout.write(text + "\n")

    def _system(self, family, rank, max_rank):
        if family is None or rank is None:
            raise ParseError("需要指定根系族与秩（位置参数或 --family/--rank）")
        rs = build_root_system((family, rank))
        if rs.rank > max_rank:
            raise ResourceLimitError(f"{rs.kind} 的秩超过上限 {max_rank}")
        return rs

    @error_handler
    def cmd_min(self, family, rank, sign=None, pf=None, pyramid=False, fmt='text', output=None):
        """由符号类型或停车函数计算极小元"""
        rs = self._system(family, rank, self.limits.max_formula_rank)
        logger.info(f"min {rs.kind} 开始")

        if (sign is None) == (pf is None):
            raise ParseError("--sign 与 --pf 必须且只能给出一个")

        records = []
        if sign is not None:
            v = parse_pyramid(rs, sign) if pyramid else parse_sign_csv(rs, sign)
            try:
                found = al_forward(v) if rs.family == 'A' else arr_forward(rs, v)
                m = minimal_from_sign(rs, v)
            except InadmissibleError:
                self._emit(f"inadmissible: {rs.kind} 符号类型 ({v}) 不对应任何 Shi 区域", output)
                raise
            records.append((v, m, found))
        else:
            for text in self._pf_inputs(pf):
                found = parse_parking_function(rs, text)
                m = minimal_element(rs, found)
                records.append((sign_of(m), m, found))

        # --pyramid 时符号类型也按金字塔写法输出
        shapes = [format_pyramid(rs, v) if pyramid else None for v, _, _ in records]
        if fmt == 'json':
            text = "\n".join(ResultFormatter.to_json(ResultFormatter.min_record(v, m, found, shape))
                             for (v, m, found), shape in zip(records, shapes))
        else:
            text = "\n".join(ResultFormatter.format_min_text(v, m, found, shape)
                             for (v, m, found), shape in zip(records, shapes))
        self._emit(text, output)
        return EXIT_OK

    @staticmethod
    def _pf_inputs(pf):
        """'-' 从标准输入逐行读取（每行一个停车函数或 regions 的一行输出）"""
        lines = [line for line in sys.stdin.read().splitlines() if line.strip()] if pf == '-' else [pf]
        for line in lines:
            data = load_json(line)
            if isinstance(data, dict) and 'pf' in data:
                data = data['pf']
            yield ResultFormatter.to_json(data)

    @error_handler
    def cmd_regions(self, family, rank, fmt='text', output=None):
        """列出全部停车函数及其符号类型与极小元"""
        rs = self._system(family, rank, self.limits.max_formula_rank)
        expected = (coxeter_number(rs) + 1) ** rs.rank
        if expected > self.limits.max_alcoves:
            raise ResourceLimitError(f"{rs.kind} 有 {expected} 个区域，超过上限 {self.limits.max_alcoves}")

        rows = []
        for found in parking_functions(rs):
            m = minimal_element(rs, found)
            rows.append((sign_of(m), found, m))
        logger.info(f"regions {rs.kind}: {len(rows)} 行")

        if fmt == 'json':
            text = "\n".join(ResultFormatter.to_json(ResultFormatter.region_row(*row)) for row in rows)
        else:
            text = ResultFormatter.format_regions_text(rs, rows)
        self._emit(text, output)
        return EXIT_OK

    @error_handler
    def cmd_verify(self, family, rank, fmt='text', output=None, neighbors='facets', stream=None):
        """
        枚举 alcove，逐个区域比较公式极小元与枚举极小元

        Args:
            stream: 若给出路径，把每个 alcove 的 K 向量与层数按 JSON 行写入该文件
        """
        rs = self._system(family, rank, self.limits.max_oracle_rank)
        logger.info(f"verify {rs.kind} 开始")
        census = enumerate_alcoves(
            rs, until_regions=True,
            max_alcoves=self.limits.max_alcoves, max_depth=self.limits.max_depth,
            patience=self.limits.patience, workers=self.limits.workers, neighbors=neighbors,
        )
        regions = regions_by_sign(census.alcoves)
        reporter = ErrorReporter()

        if stream:
            with open(stream, 'w', encoding='utf-8') as f:
                for line in stream_records(census.alcoves):
                    f.write(line + "\n")
            logger.info(f"{len(census)} 个 alcove 已写入 {stream}")

        for alcove in census.alcoves:
            violations = check_shi_relations(rs, alcove.kvec)
            if violations:
                reporter.report_error('shi_relation', f"K 向量 {alcove.kvec}: {violations[0]}")

        checked = 0
        for sign, group in regions.items():
            expected = oracle_minimal(group)
            try:
                formula = minimal_from_sign(rs, sign)
            except InadmissibleError as e:
                reporter.report_error('inadmissible', f"({sign}): {e}")
                continue
            if formula != expected:
                reporter.report_error('mismatch', f"({sign}): 公式 {formula}，枚举 {expected}")
                continue
            checked += 1

        count = len(parking_functions(rs))
        if count != len(regions):
            reporter.report_error('count', f"停车函数 {count} 个，区域 {len(regions)} 个")

        stats = reporter.get_error_stats()
        if fmt == 'json':
            text = ResultFormatter.to_json({
                'family': rs.family, 'rank': rs.rank, 'regions': len(regions),
                'alcoves': len(census), 'layers': census.layers, 'matched': checked,
                'passed': not reporter.has_errors(), 'errors': stats,
                'summaries': region_summaries(regions),
            })
        else:
            text = ResultFormatter.format_verify_text(rs, checked, len(regions), stats)
        self._emit(text, output)

        if reporter.has_errors():
            raise VerificationError(f"{rs.kind} 验证失败: {stats['total_errors']} 处不一致")
        logger.info(f"verify {rs.kind}: {checked}/{len(regions)} 个区域一致")
        return EXIT_OK

    @error_handler
    def cmd_diagram(self, family, rank, pf=None, fmt='text', output=None):
        """渲染停车函数的弧图"""
        rs = self._system(family, rank, self.limits.max_formula_rank)
        if pf is None:
            raise ParseError("diagram 需要 --pf")
        found = parse_parking_function(rs, pf)
        diagram = arcs_from_partition(rs, found.w, found.P)

        if fmt == 'svg':
            text = render_svg(diagram)
        elif fmt == 'json':
            text = ResultFormatter.to_json(ResultFormatter.diagram_record(diagram))
        else:
            text = render_text(diagram)
        self._emit(text, output)
        return EXIT_OK
