"""
经典根系 A/B/C/D
构造正根、单根、根偏序、高度、加法三元组以及反链（非嵌套划分）
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Tuple

from sympy import Matrix

from error_handler import ConfigurationError, DomainError

logger = logging.getLogger(__name__)

FAMILIES = ('A', 'B', 'C', 'D')
MIN_RANK = {'A': 1, 'B': 2, 'C': 2, 'D': 3}

# 正根的类别序：e_i-e_j 在前，e_i+e_j 其次，e_i / 2e_i 最后
_CLASS_MINUS, _CLASS_PLUS, _CLASS_SINGLE = 0, 1, 2


@dataclass(frozen=True)
class RootSystemKind:
    """根系类型：族 + 秩"""
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ConfigurationError(f"未知的根系族: {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < MIN_RANK[self.family]:
            raise ConfigurationError(
                f"{self.family} 型要求秩 ≥ {MIN_RANK[self.family]}，当前为 {self.rank}"
            )

    @property
    def ambient_dim(self):
        # A_n 的根生活在 R^{n+1} 中
        return self.rank + 1 if self.family == 'A' else self.rank

    @property
    def signed(self):
        return self.family != 'A'

    def __str__(self):
        return f"{self.family}_{self.rank}"


@dataclass(frozen=True, order=True)
class Root:
    """整数坐标的向量；正根、负根以及差向量都用它表示"""
    coords: Tuple[int, ...]

    def __add__(self, other):
        return Root(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Root(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Root(tuple(-a for a in self.coords))

    def dot(self, other):
        return sum(a * b for a, b in zip(self.coords, other.coords))

    @property
    def norm2(self):
        return self.dot(self)

    @property
    def dim(self):
        return len(self.coords)

    @classmethod
    def from_terms(cls, dim, *terms):
        """由 (下标, 系数) 构造，下标从 1 开始"""
        coords = [0] * dim
        for index, coefficient in terms:
            coords[index - 1] += coefficient
        return cls(tuple(coords))

    def __str__(self):
        parts = []
        for index, c in enumerate(self.coords, 1):
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            magnitude = '' if abs(c) == 1 else str(abs(c))
            parts.append(f"{sign}{magnitude}e{index}")
        if not parts:
            return '0'
        text = ''.join(parts)
        return text[1:] if text.startswith('+') else text


@dataclass(frozen=True)
class NonNestingPartition:
    """根偏序中的反链，按正根的规范顺序存放"""
    roots: Tuple[Root, ...] = ()

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def __contains__(self, root):
        return root in self.roots


def _classical_roots(kind):
    """按表格“Classical root systems”生成正根与单根"""
    n, dim, family = kind.rank, kind.ambient_dim, kind.family
    labelled = []

    size = n + 1 if family == 'A' else n
    for i in range(1, size + 1):
        for j in range(i + 1, size + 1):
            labelled.append(((_CLASS_MINUS, i, j), Root.from_terms(dim, (i, 1), (j, -1))))

    if family != 'A':
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                labelled.append(((_CLASS_PLUS, i, j), Root.from_terms(dim, (i, 1), (j, 1))))

    if family in ('B', 'C'):
        coefficient = 1 if family == 'B' else 2
        for i in range(1, n + 1):
            labelled.append(((_CLASS_SINGLE, i, 0), Root.from_terms(dim, (i, coefficient))))

    labelled.sort(key=lambda item: item[0])
    positive = tuple(root for _, root in labelled)

    last = n if family == 'A' else n - 1
    simple = [Root.from_terms(dim, (i, 1), (i + 1, -1)) for i in range(1, last + 1)]
    if family == 'B':
        simple.append(Root.from_terms(dim, (n, 1)))
    elif family == 'C':
        simple.append(Root.from_terms(dim, (n, 2)))
    elif family == 'D':
        simple.append(Root.from_terms(dim, (n - 1, 1), (n, 1)))

    return positive, tuple(simple)


@dataclass(frozen=True)
class RootSystem:
    """根系：正根按规范顺序（类别, i, j）字典序排列"""
    kind: RootSystemKind
    positive_roots: Tuple[Root, ...]
    simple_roots: Tuple[Root, ...]
    ambient_dim: int
    _index: Dict[Root, int] = field(default_factory=dict, init=False, repr=False, compare=False)
    _simple_coords: Dict[Root, Tuple[int, ...]] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        self._index.update({root: i for i, root in enumerate(self.positive_roots)})

        # 在单根基底下精确求解所有正根的坐标
        basis = Matrix([list(root.coords) for root in self.simple_roots]).T
        targets = Matrix([list(root.coords) for root in self.positive_roots]).T
        solution, params = basis.gauss_jordan_solve(targets)
        if params.shape[0] != 0:
            raise ConfigurationError(f"{self.kind} 的单根不线性无关")

        for column, root in enumerate(self.positive_roots):
            coords = []
            for value in solution[:, column]:
                if not value.is_integer or value < 0:
                    raise ConfigurationError(f"正根 {root} 不在 NΔ 中")
                coords.append(int(value))
            self._simple_coords[root] = tuple(coords)

    @property
    def rank(self):
        return self.kind.rank

    @property
    def family(self):
        return self.kind.family

    def index(self, root):
        """正根在规范顺序中的位置"""
        try:
            return self._index[root]
        except KeyError:
            raise DomainError(f"{root} 不是 {self.kind} 的正根")

    def is_root(self, root):
        return root in self._index or -root in self._index

    def __len__(self):
        return len(self.positive_roots)


@lru_cache(maxsize=None)
def _build(family, rank):
    kind = RootSystemKind(family, rank)
    positive, simple = _classical_roots(kind)
    logger.debug(f"构造根系 {kind}: {len(positive)} 个正根")
    return RootSystem(kind, positive, simple, kind.ambient_dim)


def build_root_system(kind):
    """构造经典根系

    Args:
        kind: RootSystemKind，或 (族, 秩) 二元组

    Returns:
        RootSystem: 同一类型多次调用返回同一个对象
    """
    if not isinstance(kind, RootSystemKind):
        family, rank = kind
        kind = RootSystemKind(str(family).upper(), int(rank))
    return _build(kind.family, kind.rank)


def simple_coordinates(rs, r):
    """正根在单根基底下的系数"""
    try:
        return rs._simple_coords[r]
    except KeyError:
        raise DomainError(f"{r} 不是 {rs.kind} 的正根")


def height(rs, r):
    """正根的高度：单根系数之和"""
    return sum(simple_coordinates(rs, r))


def poset_leq(rs, a, b):
    """a ≤ b 当且仅当 b - a ∈ NΔ"""
    ca, cb = simple_coordinates(rs, a), simple_coordinates(rs, b)
    return all(x <= y for x, y in zip(ca, cb))


def comparable(rs, a, b):
    """a 与 b 在根偏序中可比"""
    return poset_leq(rs, a, b) or poset_leq(rs, b, a)


def highest_root(rs):
    """根偏序的唯一最大元 α_0"""
    top = max(rs.positive_roots, key=lambda r: height(rs, r))
    if not all(poset_leq(rs, r, top) for r in rs.positive_roots):
        raise DomainError(f"{rs.kind} 的根偏序没有唯一最大元")
    return top


def coxeter_number(rs):
    """Coxeter 数 h = ht(α_0) + 1"""
    return height(rs, highest_root(rs)) + 1


def addition_triples(rs):
    """所有满足 a + b = c 的正根三元组，{a, b} 无序，每组只列一次"""
    triples = []
    roots = rs.positive_roots
    for i, a in enumerate(roots):
        for b in roots[i + 1:]:
            c = a + b
            if c in rs._index:
                triples.append((a, b, c))
    return triples


def cartan_integer(a, b):
    """2<a,b>/<b,b>，对晶体根系总是整数"""
    numerator = 2 * a.dot(b)
    if numerator % b.norm2:
        raise DomainError(f"<{a}, {b}^∨> 不是整数")
    return numerator // b.norm2


def make_partition(rs, roots):
    """校验并构造反链"""
    unique = sorted(set(roots), key=rs.index)
    for i, a in enumerate(unique):
        for b in unique[i + 1:]:
            if comparable(rs, a, b):
                raise DomainError(f"{a} 与 {b} 可比较，不是反链")
    return NonNestingPartition(tuple(unique))


def antichains(rs):
    """按规范顺序回溯枚举所有反链（含空反链）"""
    roots = rs.positive_roots
    count = len(roots)
    incomparable = [
        [not comparable(rs, roots[i], roots[j]) for j in range(count)]
        for i in range(count)
    ]
    result = []

    def extend(chosen, start):
        result.append(NonNestingPartition(tuple(roots[i] for i in chosen)))
        for i in range(start, count):
            if all(incomparable[i][j] for j in chosen):
                chosen.append(i)
                extend(chosen, i + 1)
                chosen.pop()

    extend([], 0)
    logger.debug(f"{rs.kind}: {len(result)} 个反链")
    return result


def basis_vector(rs, value):
    """带符号下标的坐标向量：x_0 = 0，x_{-i} = -x_i"""
    dim = rs.ambient_dim
    if value == 0:
        return Root((0,) * dim)
    if abs(value) > dim:
        raise DomainError(f"下标 {value} 超出 {rs.kind} 的范围")
    if value < 0 and not rs.kind.signed:
        raise DomainError(f"A 型没有负下标: {value}")
    return Root.from_terms(dim, (abs(value), 1 if value > 0 else -1))


def root_of_values(rs, a, b):
    """值对 (a, b) 对应的根 x_a - x_b（可能是负根）"""
    r = basis_vector(rs, a) - basis_vector(rs, b)
    if not rs.is_root(r):
        raise DomainError(f"值对 ({a}, {b}) 不对应 {rs.kind} 的根")
    return r


def eta_by_roots(rs, P, beta):
    """把 beta 写成正根之和时，P 中元素最多能出现几次

    这是弧计数 η 的纯根论表述，用来独立核对弧图上的计算。
    """
    target = simple_coordinates(rs, beta)
    pieces = [simple_coordinates(rs, p) for p in P]

    @lru_cache(maxsize=None)
    def best(rest):
        value = 0
        for piece in pieces:
            if all(p <= r for p, r in zip(piece, rest)):
                value = max(value, 1 + best(tuple(r - p for p, r in zip(piece, rest))))
        return value

    return best(target)


def root_to_json(r):
    """根的坐标列表"""
    return list(r.coords)


def root_from_json(rs, data):
    """
    从坐标列表读入正根

    Args:
        rs: 根系
        data: 坐标列表，长度须等于环境维数

    Returns:
        Root: 不是正根时抛出 DomainError
    """
    try:
        coords = tuple(int(x) for x in data)
    except (TypeError, ValueError) as e:
        raise DomainError(f"无法解析根坐标: {data!r}", original_error=e)
    if len(coords) != rs.ambient_dim:
        raise DomainError(f"根 {list(coords)} 的维数应为 {rs.ambient_dim}")
    return Root(coords)


def system_to_json(rs):
    """根系的 JSON 描述：族、秩、正根与单根"""
    return {
        'family': rs.family,
        'rank': rs.rank,
        'positive_roots': [root_to_json(r) for r in rs.positive_roots],
        'simple_roots': [root_to_json(r) for r in rs.simple_roots],
    }
