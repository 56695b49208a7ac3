"""
弧图：由停车函数 (w, P) 画弧，判断交叉/嵌套，计算弧计数统计量 η
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Optional, Tuple

from error_handler import DomainError, ResourceLimitError
from rootsys import NonNestingPartition, RootSystemKind, make_partition
from weyl import SignedPermutation, act, inverse, is_positive

logger = logging.getLogger(__name__)

# 穷举法允许的最大弧数
MAX_BRUTEFORCE_ARCS = 20


@dataclass(frozen=True)
class LineLayout:
    """槽位（位置标签）按显示顺序排列；D 型中间两个槽位构成分叉，线性坐标相同"""
    kind: RootSystemKind
    slots: Tuple[int, ...]
    fork: Optional[Tuple[int, int]] = None
    _coordinate: Dict[int, int] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        x = 0
        for slot in self.slots:
            # 分叉的第二个槽位与第一个共用坐标
            if not (self.fork and slot == self.fork[1]):
                x += 1
            self._coordinate[slot] = x

    def coordinate(self, slot):
        try:
            return self._coordinate[slot]
        except KeyError:
            raise DomainError(f"{self.kind} 的线上没有位置 {slot}")

    def __contains__(self, slot):
        return slot in self._coordinate


@dataclass(frozen=True)
class Arc:
    """endpoints 为两个位置，按线性坐标从左到右；value_pair 为对应位置上的值"""
    endpoints: Tuple[int, int]
    value_pair: Tuple[int, int] = field(compare=False)


@dataclass(frozen=True)
class ArcDiagram:
    layout: LineLayout
    permutation: SignedPermutation
    arcs: Tuple[Arc, ...]

    def value_at(self, slot):
        if slot not in self.layout:
            raise DomainError(f"{self.layout.kind} 的线上没有位置 {slot}")
        return self.permutation(slot)

    def slot_of_value(self, value):
        if self.layout.kind.family == 'A' and value <= 0:
            raise DomainError(f"A 型弧图中没有值 {value}")
        if value == 0 and 0 not in self.layout:
            raise DomainError(f"{self.layout.kind} 的弧图中没有值 0")
        if abs(value) > len(self.permutation.images):
            raise DomainError(f"弧图中没有值 {value}")
        return inverse(self.permutation)(value)


def layout(kind):
    """规范线布局

    A: 1..n+1；B/C: 1..n, 0, -n..-1；D: 1..n-1, 分叉 {n, -n}, -(n-1)..-1
    """
    n = kind.rank
    if kind.family == 'A':
        return LineLayout(kind, tuple(range(1, n + 2)))
    negatives = tuple(-i for i in range(n, 0, -1))
    if kind.family in ('B', 'C'):
        return LineLayout(kind, tuple(range(1, n + 1)) + (0,) + negatives)
    return LineLayout(kind, tuple(range(1, n + 1)) + negatives, fork=(n, -n))


def _classify(rs, alpha):
    """正根在表格中的行：('minus', i, j) / ('plus', i, j) / ('double', i) / ('single', i)"""
    rs.index(alpha)
    support = [(k, c) for k, c in enumerate(alpha.coords, 1) if c]
    if len(support) == 2:
        (i, a), (j, b) = support
        return ('minus', i, j) if b < 0 else ('plus', i, j)
    (i, c), = support
    return ('double', i, None) if c == 2 else ('single', i, None)


def arc_positions(rs, alpha):
    """表格“Roots and corresponding arcs”给出的弧端点位置"""
    row, i, j = _classify(rs, alpha)
    if row == 'minus':
        return [(i, j)] if rs.family == 'A' else [(i, j), (-j, -i)]
    if row == 'plus':
        return [(i, -j), (j, -i)]
    if row == 'double':
        return [(i, -i)]
    return [(i, 0), (0, -i)]


def value_pair(rs, alpha):
    """计算极小 Shi 向量时该根对应的值对"""
    row, i, j = _classify(rs, alpha)
    if row == 'minus':
        return (i, j)
    if row == 'plus':
        return (i, -j)
    if row == 'double':
        return (i, -i)
    return (i, 0)


def _make_arc(lay, w, p, q):
    if lay.coordinate(p) > lay.coordinate(q):
        p, q = q, p
    return Arc((p, q), (w(p), w(q)))


def arcs_from_partition(rs, w, P):
    """按表格在位置上画弧，返回弧图"""
    if w.kind != rs.kind:
        raise DomainError(f"{w.kind} 的元素不能用于 {rs.kind}")
    if not isinstance(P, NonNestingPartition):
        P = make_partition(rs, P)
    else:
        make_partition(rs, P.roots)

    for alpha in P:
        if not is_positive(rs, act(w, alpha)):
            raise DomainError(f"({w}, P) 不是停车函数: w({alpha}) 不是正根")

    lay = layout(rs.kind)
    arcs = {}
    for alpha in P:
        for p, q in arc_positions(rs, alpha):
            arc = _make_arc(lay, w, p, q)
            arcs[arc.endpoints] = arc

    ordered = sorted(arcs.values(), key=lambda a: (lay.coordinate(a.endpoints[0]), lay.coordinate(a.endpoints[1]), a.endpoints))
    return ArcDiagram(lay, w, tuple(ordered))


def _span(lay, arc):
    return lay.coordinate(arc.endpoints[0]), lay.coordinate(arc.endpoints[1])


def _relative(d, a1, a2):
    """返回 (a, b, c, d)，保证 a ≤ c；共享端点时返回 None"""
    if set(a1.endpoints) & set(a2.endpoints):
        return None
    (a, b), (c, e) = _span(d.layout, a1), _span(d.layout, a2)
    if a > c:
        a, b, c, e = c, e, a, b
    return a, b, c, e


def crossing(d, a1, a2):
    """a < c < b < d"""
    rel = _relative(d, a1, a2)
    if rel is None:
        return False
    a, b, c, e = rel
    return a < c < b < e


def nesting(d, a1, a2):
    """a < c < d < b"""
    rel = _relative(d, a1, a2)
    if rel is None:
        return False
    a, b, c, e = rel
    return a < c < e < b


def is_non_nesting(d):
    return not any(nesting(d, a1, a2) for a1, a2 in combinations(d.arcs, 2))


def _variants(d, s, t):
    """η 的计算变体：D 型分别删去分叉的下槽位（η+）与上槽位（η-）"""
    fork = d.layout.fork
    if fork is None:
        return [None]
    top, bottom = fork
    return [removed for removed in (bottom, top) if removed not in (s, t)]


def _candidate_spans(d, s, t, removed):
    lo, hi = sorted((d.layout.coordinate(s), d.layout.coordinate(t)))
    spans = []
    for arc in d.arcs:
        if removed is not None and removed in arc.endpoints:
            continue
        x, y = _span(d.layout, arc)
        if lo <= x and y <= hi:
            spans.append((x, y))
    return spans


def _schedule(spans):
    """区间调度：按右端点排序贪心选取内部互不相交的弧"""
    count, last = 0, None
    for x, y in sorted(spans, key=lambda span: (span[1], span[0])):
        if last is None or x >= last:
            count += 1
            last = y
    return count


def _query_slots(d, i, j):
    if i == j:
        raise DomainError(f"η 需要两个不同的值，得到 ({i}, {j})")
    return d.slot_of_value(i), d.slot_of_value(j)


def eta(d, i, j):
    """值 i 与 j 之间互不交叉、互不嵌套的弧的最大个数"""
    s, t = _query_slots(d, i, j)
    counts = [_schedule(_candidate_spans(d, s, t, removed)) for removed in _variants(d, s, t)]
    if not counts:
        raise DomainError(f"值 {i} 与 {j} 分处分叉两侧，η 无定义")
    return max(counts)


def _compatible(u, v):
    return u[1] <= v[0] or v[1] <= u[0]


def eta_bruteforce(d, i, j):
    """同 eta，穷举子集计算（测试用）"""
    s, t = _query_slots(d, i, j)
    counts = []
    for removed in _variants(d, s, t):
        spans = _candidate_spans(d, s, t, removed)
        if len(spans) > MAX_BRUTEFORCE_ARCS:
            raise ResourceLimitError(f"弧数 {len(spans)} 超过穷举上限 {MAX_BRUTEFORCE_ARCS}")
        best = 0
        for size in range(len(spans), 0, -1):
            if any(all(_compatible(u, v) for u, v in combinations(subset, 2))
                   for subset in combinations(spans, size)):
                best = size
                break
        counts.append(best)
    if not counts:
        raise DomainError(f"值 {i} 与 {j} 分处分叉两侧，η 无定义")
    return max(counts)


def root_eta(rs, d, alpha):
    """正根 α 按表格取值对后的 η"""
    i, j = value_pair(rs, alpha)
    return eta(d, i, j)
