import json
import os
import re

from error_handler import ParseError
from rootsys import Root
from shimin import SignType, parking_function_from_json

# 允许的符号写法
_SIGN_ALIASES = {'-': '-', '−': '-', '0': '0', '+': '+'}


def normalize_sign(symbol):
    """把单个符号规范化为 '-', '0', '+'"""
    try:
        return _SIGN_ALIASES[symbol.strip()]
    except KeyError:
        raise ParseError(f"无效的符号: {symbol!r}")


def _split_signs(text):
    text = text.strip()
    if ',' in text:
        return [normalize_sign(s) for s in text.split(',')]
    return [normalize_sign(s) for s in re.sub(r'\s+', '', text)]


def parse_sign_csv(rs, text):
    """按正根规范顺序读入符号类型，例如 "+,+,-" 或 "++-" """
    if not text or not text.strip():
        raise ParseError("符号类型为空")
    return SignType(rs.kind, tuple(_split_signs(text)))


def parse_pyramid(rs, text):
    """A 型金字塔写法：第 k 行（以 ';'、'/' 或换行分隔）列出 v_{i,i+k}，i 从左到右

    即 v_{i,j} 是第 j-i 行从左数第 i 个符号。
    """
    if rs.family != 'A':
        raise ParseError(f"金字塔写法只适用于 A 型，得到 {rs.kind}")
    rows = [row for row in re.split(r'[;/\n]', text.strip()) if row.strip()]
    size = rs.ambient_dim
    if len(rows) != size - 1:
        raise ParseError(f"{rs.kind} 的金字塔需要 {size - 1} 行，得到 {len(rows)} 行")

    signs = {}
    for k, row in enumerate(rows, 1):
        values = _split_signs(row)
        if len(values) != size - k:
            raise ParseError(f"第 {k} 行需要 {size - k} 个符号，得到 {len(values)} 个")
        for i, symbol in enumerate(values, 1):
            signs[Root.from_terms(size, (i, 1), (i + k, -1))] = symbol

    return SignType(rs.kind, tuple(signs[alpha] for alpha in rs.positive_roots))


def format_pyramid(rs, v):
    """parse_pyramid 的逆：第 k 行写出 v_{i,i+k}，行之间用 '/' 分隔"""
    if rs.family != 'A':
        raise ParseError(f"金字塔写法只适用于 A 型，得到 {rs.kind}")
    size = rs.ambient_dim
    rows = []
    for k in range(1, size):
        row = [v.signs[rs.index(Root.from_terms(size, (i, 1), (i + k, -1)))] for i in range(1, size - k + 1)]
        rows.append(''.join(row))
    return '/'.join(rows)


def load_json(text_or_path):
    """读入 JSON：参数可以是 JSON 文本，也可以是文件路径"""
    text = text_or_path
    if os.path.isfile(text_or_path):
        with open(text_or_path, 'r', encoding='utf-8') as f:
            text = f.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"无法解析 JSON: {e}", original_error=e)


def parse_parking_function(rs, text_or_path):
    """读入停车函数 {"w": [...], "P": [[...], ...]}"""
    data = load_json(text_or_path)
    if not isinstance(data, dict):
        raise ParseError(f"停车函数必须是 JSON 对象，得到 {type(data).__name__}")
    return parking_function_from_json(rs, data)
