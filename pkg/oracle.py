"""
基准枚举器：用精确有理数反射对仿射 Weyl 群的 alcove 做广度优先搜索，
按符号类型分组得到 Shi 区域，并在每个区域中找出真正的极小元
"""

import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from sympy import Matrix, Rational

from config import Config
from error_handler import (ConfigurationError, DomainError, OracleError,
                           ResourceLimitError, SaturationError)
from rootsys import build_root_system, cartan_integer, highest_root, height
from shimin import ShiVector, sign_of

logger = logging.getLogger(__name__)

NEIGHBOR_MODES = ('facets', 'all')


@dataclass(frozen=True)
class Alcove:
    """point 为 alcove 内部的精确有理点，kvec_α = floor(<point, α>)"""
    point: Tuple[Fraction, ...]
    kvec: ShiVector
    depth: int
    # D·<point, α>，按正根规范顺序
    pairings: Tuple[int, ...] = field(default=(), compare=False, repr=False)


@dataclass
class AlcoveCensus:
    """一次枚举的结果：alcoves 按 BFS 顺序排列，layers 为已完成的层数"""
    alcoves: List[Alcove]
    layers: int
    complete: bool = False

    def __len__(self):
        return len(self.alcoves)


def _denominator(rs):
    # c + 2，c 为最高根的高度
    return height(rs, highest_root(rs)) + 2


def _pair(point, alpha):
    return sum((Fraction(x) * c for x, c in zip(point, alpha.coords)), Fraction(0))


def fundamental_alcove(rs):
    """A_e 内的点 p：对每个单根 <p, α_i> = 1/(c+2)；A 型另加 Σp = 0"""
    denominator = _denominator(rs)
    rows = [list(alpha.coords) for alpha in rs.simple_roots]
    rhs = [Rational(1, denominator)] * len(rows)
    if rs.family == 'A':
        rows.append([1] * rs.ambient_dim)
        rhs.append(Rational(0))

    solution, params = Matrix(rows).gauss_jordan_solve(Matrix(rhs))
    if params.shape[0] != 0:
        raise OracleError(f"{rs.kind} 的基本 alcove 点不唯一")
    point = tuple(Fraction(int(v.p), int(v.q)) for v in solution)

    pairings = []
    for alpha in rs.positive_roots:
        scaled = _pair(point, alpha) * denominator
        if scaled.denominator != 1:
            raise OracleError(f"基本点与 {alpha} 的配对不在 1/{denominator} 的格上")
        pairings.append(int(scaled))

    logger.debug(f"{rs.kind} 基本点: {[str(x) for x in point]}")
    return Alcove(point, k_vector(rs, point), 0, tuple(pairings))


def reflect(p, alpha, k):
    """仿射反射 s_{α,k}: p - 2(<p,α> - k)·α/<α,α>"""
    offset = _pair(p, alpha) - k
    if offset == 0:
        raise DomainError(f"点在超平面 H_{{{alpha},{k}}} 上")
    scale = 2 * offset / alpha.norm2
    return tuple(Fraction(x) - scale * c for x, c in zip(p, alpha.coords))


def k_vector(rs, p):
    """精确配对逐项取 floor"""
    if len(p) != rs.ambient_dim:
        raise DomainError(f"点的维数应为 {rs.ambient_dim}")
    entries = []
    for alpha in rs.positive_roots:
        value = _pair(p, alpha)
        if value.denominator == 1:
            raise OracleError(f"退化点: <p, {alpha}> = {value} 是整数")
        entries.append(math.floor(value))
    return ShiVector(rs.kind, tuple(entries))


@lru_cache(maxsize=None)
def _context(family, rank):
    rs = build_root_system((family, rank))
    roots = rs.positive_roots
    # cartan[a][b] = <b, a^∨>
    cartan = tuple(tuple(cartan_integer(b, a) for b in roots) for a in roots)
    return rs, _denominator(rs), cartan


def _expand_chunk(job):
    """对一批 alcove 生成邻居：对每个正根跨过 H_{α,k} 与 H_{α,k+1}"""
    family, rank, neighbors, chunk = job
    rs, denominator, cartan = _context(family, rank)
    found = []
    for point, pairings in chunk:
        kvec = tuple(x // denominator for x in pairings)
        for a, alpha in enumerate(rs.positive_roots):
            for level in (kvec[a], kvec[a] + 1):
                delta = pairings[a] - level * denominator
                moved = tuple(x - delta * c for x, c in zip(pairings, cartan[a]))
                if neighbors == 'facets':
                    changed = sum(1 for x, k in zip(moved, kvec) if x // denominator != k)
                    if changed != 1:
                        continue
                if any(x % denominator == 0 for x in moved):
                    raise OracleError(f"反射后得到退化点（{alpha}, k={level}）")
                scale = Fraction(2 * delta, denominator * alpha.norm2)
                image = tuple(x - scale * c for x, c in zip(point, alpha.coords))
                found.append((image, moved))
    return found


def _chunks(items, count):
    size = max(1, -(-len(items) // count))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _expand_layer(rs, frontier, neighbors, workers):
    payload = [(a.point, a.pairings) for a in frontier]
    if workers <= 1 or len(payload) < 2 * workers:
        return _expand_chunk((rs.family, rs.rank, neighbors, payload))

    jobs = [(rs.family, rs.rank, neighbors, chunk) for chunk in _chunks(payload, workers)]
    found = []
    with ProcessPoolExecutor(max_workers=workers) as executor:
        for part in executor.map(_expand_chunk, jobs):
            found.extend(part)
    return found


def _saturated(alcoves):
    try:
        for group in regions_by_sign(alcoves).values():
            oracle_minimal(group)
    except SaturationError:
        return False
    return True


def enumerate_alcoves(rs, radius=None, until_regions=False, target=None, max_alcoves=None,
                      max_depth=None, patience=None, workers=None, neighbors='facets'):
    """从基本 alcove 出发逐层 BFS

    Args:
        radius: 枚举到第 radius 层为止
        until_regions: 一直枚举，直到连续 patience 层没有新的符号类型
            且每个区域都有支配其他成员的元素
        target: 与 until_regions 一起使用，区域数达到 target 且饱和时提前停止
        neighbors: 'facets' 只保留跨过一个面的邻居（层数 = 长度），'all' 保留全部

    Returns:
        AlcoveCensus: 同一参数下结果与 workers 无关
    """
    if (radius is None) == (not until_regions):
        raise ConfigurationError("radius 与 until_regions 必须且只能指定一个")
    if neighbors not in NEIGHBOR_MODES:
        raise ConfigurationError(f"未知的邻居模式: {neighbors!r}")
    limits = Config.limits(max_alcoves=max_alcoves, max_depth=max_depth,
                           patience=patience, workers=workers)
    if radius is not None and radius > limits.max_depth:
        raise ResourceLimitError(f"半径 {radius} 超过最大层数 {limits.max_depth}")

    start = fundamental_alcove(rs)
    denominator = _denominator(rs)
    seen_points = {start.point}
    seen_kvecs = {start.kvec.entries}
    census = AlcoveCensus([start], 0)
    frontier = [start]
    signs = {sign_of(start.kvec)}
    quiet = 0

    while True:
        depth = census.layers
        if radius is not None and depth >= radius:
            break
        if until_regions and depth > 0:
            enough = quiet >= limits.patience or (target is not None and len(signs) >= target)
            if enough and _saturated(census.alcoves):
                break
        if depth >= limits.max_depth:
            logger.warning(f"{rs.kind}: 达到最大层数 {limits.max_depth}")
            raise ResourceLimitError(f"{rs.kind} 在 {depth} 层内没有稳定", partial=census)

        layer = []
        for point, pairings in _expand_layer(rs, frontier, neighbors, limits.workers):
            if point in seen_points:
                continue
            kvec = ShiVector(rs.kind, tuple(x // denominator for x in pairings))
            if kvec.entries in seen_kvecs:
                raise OracleError(f"两个不同的 alcove 有相同的 K 向量 {kvec}")
            seen_points.add(point)
            seen_kvecs.add(kvec.entries)
            layer.append(Alcove(point, kvec, depth + 1, pairings))

        layer.sort(key=lambda a: a.kvec.entries)
        census.alcoves.extend(layer)
        census.layers = depth + 1
        frontier = layer

        new_signs = {sign_of(a.kvec) for a in layer} - signs
        signs |= new_signs
        quiet = 0 if new_signs else quiet + 1
        logger.debug(f"{rs.kind} 第 {depth + 1} 层: {len(layer)} 个 alcove, 新符号类型 {len(new_signs)} 个")

        if len(census.alcoves) > limits.max_alcoves:
            logger.warning(f"{rs.kind}: alcove 数超过上限 {limits.max_alcoves}")
            raise ResourceLimitError(f"alcove 数超过上限 {limits.max_alcoves}", partial=census)

    census.complete = True
    logger.info(f"{rs.kind}: {census.layers} 层, {len(census)} 个 alcove, {len(signs)} 个符号类型")
    return census


def regions_by_sign(alcoves):
    """按 sign_of(kvec) 分组，组的顺序为首次出现的顺序"""
    regions = {}
    for alcove in alcoves:
        regions.setdefault(sign_of(alcove.kvec), []).append(alcove)
    return regions


def oracle_minimal(group):
    """组内按分量绝对值支配所有成员的 K 向量"""
    if not group:
        raise DomainError("空的区域没有极小元")
    best = min(group, key=lambda a: (sum(abs(x) for x in a.kvec.entries), a.kvec.entries))
    for member in group:
        if any(abs(m) > abs(k) for m, k in zip(best.kvec.entries, member.kvec.entries)):
            raise SaturationError(
                f"区域 {sign_of(best.kvec)} 中没有支配所有成员的元素，需要扩大半径"
            )
    return best.kvec


def region_summaries(regions):
    return [
        {'sign': list(sign.signs), 'size': len(group), 'min': list(oracle_minimal(group).entries)}
        for sign, group in regions.items()
    ]


def stream_records(alcoves):
    """每个 alcove 一行 JSON"""
    for alcove in alcoves:
        yield json.dumps({'kvec': list(alcove.kvec.entries), 'depth': alcove.depth})
