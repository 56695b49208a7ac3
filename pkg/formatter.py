import json

from shimin import (parking_function_to_json, shi_vector_to_json,
                    sign_type_to_json)
from weyl import window


class ResultFormatter:
    """结果格式化器：文本与 JSON 两种输出"""

    @staticmethod
    def to_json(data):
        """单行 JSON，键顺序固定"""
        return json.dumps(data, ensure_ascii=False)

    @staticmethod
    def format_partition(pf):
        if not len(pf.P):
            return "∅"
        return "{" + ", ".join(str(alpha) for alpha in pf.P) + "}"

    @staticmethod
    def min_record(sign, m, pf=None, pyramid=None):
        """min 命令的 JSON 记录"""
        record = sign_type_to_json(sign)
        record['min'] = shi_vector_to_json(m)['entries']
        if pf is not None:
            record['pf'] = parking_function_to_json(pf)
        if pyramid is not None:
            record['pyramid'] = pyramid
        return record

    @staticmethod
    def format_min_text(sign, m, pf=None, pyramid=None):
        """
        格式化极小元

        第一行为规范顺序下的极小元，随后是说明与 JSON 记录
        """
        lines = [str(m), f"# {sign.kind} 符号类型 ({pyramid or sign})"]
        if pf is not None:
            lines.append(f"# w = {window(pf.w)}, P = {ResultFormatter.format_partition(pf)}")
        lines.append(ResultFormatter.to_json(ResultFormatter.min_record(sign, m, pf, pyramid)))
        return "\n".join(lines)

    @staticmethod
    def region_row(sign, pf, m):
        return {
            'sign': list(sign.signs),
            'pf': parking_function_to_json(pf),
            'min': list(m.entries),
        }

    @staticmethod
    def format_regions_text(rs, rows):
        """区域表：符号类型 | w | P | 极小元"""
        header = f"{'符号类型':<{max(8, 2 * len(rs))}}  w  |  P  |  极小元"
        lines = [f"📋 {rs.kind} 的 Shi 区域", header]
        for sign, pf, m in rows:
            lines.append(f"{str(sign):<{max(8, 2 * len(rs))}}  {window(pf.w)}  |  "
                         f"{ResultFormatter.format_partition(pf)}  |  {m}")
        lines.append(f"共 {len(rows)} 行")
        return "\n".join(lines)

    @staticmethod
    def format_verify_text(rs, checked, total, stats):
        """验证报告：通过时给出区域数，失败时列出反例"""
        if not stats['total_errors']:
            return f"✅ PASS {rs.kind}: {checked}/{total} 个区域"

        lines = [f"❌ FAIL {rs.kind}: {checked}/{total} 个区域一致"]
        for error_type, count in stats['error_counts'].items():
            lines.append(f"  {error_type}: {count} 个")
            for example in stats['examples'].get(error_type, []):
                lines.append(f"    - {example['message']}")
        return "\n".join(lines)

    @staticmethod
    def diagram_record(d):
        lay = d.layout
        return {
            'slots': list(lay.slots),
            'values': [d.value_at(slot) for slot in lay.slots],
            'fork': list(lay.fork) if lay.fork else None,
            'arcs': [list(arc.endpoints) for arc in d.arcs],
        }
