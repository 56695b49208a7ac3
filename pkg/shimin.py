"""
符号类型、Shi 向量、停车函数双射与极小元公式
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from diagrams import arcs_from_partition, root_eta
from error_handler import DomainError, InadmissibleError, ParseError
from rootsys import (NonNestingPartition, Root, RootSystemKind,
                     addition_triples, antichains, build_root_system,
                     make_partition, poset_leq, root_from_json, root_to_json)
from weyl import (SignedPermutation, act, decode_inversion_vector, elements,
                  from_negative_set, inverse, inversion_set, is_positive,
                  permutation_from_json)

logger = logging.getLogger(__name__)

SIGNS = ('-', '0', '+')


@dataclass(frozen=True)
class SignType:
    """按正根规范顺序排列的 {-, 0, +}"""
    kind: RootSystemKind
    signs: Tuple[str, ...]

    def __post_init__(self):
        bad = [s for s in self.signs if s not in SIGNS]
        if bad:
            raise ParseError(f"无效的符号: {bad}")
        expected = len(build_root_system(self.kind))
        if len(self.signs) != expected:
            raise ParseError(f"{self.kind} 的符号类型需要 {expected} 个分量，得到 {len(self.signs)} 个")

    def __str__(self):
        return ','.join(self.signs)


@dataclass(frozen=True)
class ShiVector:
    kind: RootSystemKind
    entries: Tuple[int, ...]

    def __post_init__(self):
        expected = len(build_root_system(self.kind))
        if len(self.entries) != expected:
            raise DomainError(f"{self.kind} 的 Shi 向量需要 {expected} 个分量，得到 {len(self.entries)} 个")

    def __str__(self):
        return ','.join(str(x) for x in self.entries)


@dataclass(frozen=True)
class ParkingFunction:
    """(w, P)：P 为反链，且对所有 α ∈ P 有 w(α) ∈ Φ+"""
    w: SignedPermutation
    P: NonNestingPartition

    def __post_init__(self):
        rs = build_root_system(self.w.kind)
        for alpha in self.P:
            if not is_positive(rs, act(self.w, alpha)):
                raise DomainError(f"不是停车函数: w({alpha}) 不是正根")


@dataclass(frozen=True)
class ShiViolation:
    """违反的 Shi 关系：v_c - v_a - v_b 不在 {0, 1} 中"""
    triple: Tuple[Root, Root, Root]
    residual: int

    def __str__(self):
        a, b, c = self.triple
        return f"{c} = {a} + {b}: 余项 {self.residual}"


def _sign(x):
    return '-' if x < 0 else ('+' if x > 0 else '0')


def check_shi_relations(rs, v):
    """逐个检查加法三元组，返回违反的关系（空表示合法）"""
    if v.kind != rs.kind:
        raise DomainError(f"{v.kind} 的向量不能在 {rs.kind} 中检查")
    violations = []
    for a, b, c in addition_triples(rs):
        residual = v.entries[rs.index(c)] - v.entries[rs.index(a)] - v.entries[rs.index(b)]
        if residual not in (0, 1):
            violations.append(ShiViolation((a, b, c), residual))
    return violations


def shi_epsilons(rs, v):
    """合法 Shi 向量的见证 ε_{α,β}"""
    violations = check_shi_relations(rs, v)
    if violations:
        raise DomainError(f"不是 Shi 向量: {violations[0]}")
    return {
        (a, b, c): v.entries[rs.index(c)] - v.entries[rs.index(a)] - v.entries[rs.index(b)]
        for a, b, c in addition_triples(rs)
    }


def sign_of(v):
    """逐项取符号"""
    return SignType(v.kind, tuple(_sign(x) for x in v.entries))


def floors(pf):
    """区域的地板 fl(R) = w(P)"""
    return tuple(act(pf.w, alpha) for alpha in pf.P)


def minimal_element(rs, pf):
    """m_α = η(i, j)（w⁻¹α > 0）或 -(η(i, j) + 1)（w⁻¹α < 0）"""
    diagram = arcs_from_partition(rs, pf.w, pf.P)
    w_inv = inverse(pf.w)
    entries = []
    for alpha in rs.positive_roots:
        count = root_eta(rs, diagram, alpha)
        entries.append(count if is_positive(rs, act(w_inv, alpha)) else -(count + 1))
    return ShiVector(rs.kind, tuple(entries))


def sign_type_of_pf(rs, pf):
    """停车函数对应区域的符号类型"""
    return sign_of(minimal_element(rs, pf))


def _type_a_sign(rs, v, i, j):
    return v.signs[rs.index(Root.from_terms(rs.ambient_dim, (i, 1), (j, -1)))]


def al_forward(v):
    """A 型逆序向量双射：符号类型 → (π, 非嵌套弧图)"""
    if v.kind.family != 'A':
        raise DomainError(f"逆序向量双射只适用于 A 型，得到 {v.kind}")
    rs = build_root_system(v.kind)
    size = rs.ambient_dim

    # I_j = (j-1) - #{i < j : v_{i,j} ∈ {0,+}}
    I = [
        (j - 1) - sum(1 for i in range(1, j) if _type_a_sign(rs, v, i, j) in ('0', '+'))
        for j in range(1, size + 1)
    ]
    pi = decode_inversion_vector(I)
    negatives = {a for a, s in zip(rs.positive_roots, v.signs) if s == '-'}
    if set(inversion_set(rs, pi)) != negatives:
        raise InadmissibleError(f"符号类型 {v} 的负号集合不是逆序集")

    position = inverse(pi)
    spans = [
        (position(i), position(j))
        for i in range(1, size + 1)
        for j in range(i + 1, size + 1)
        if _type_a_sign(rs, v, i, j) == '+'
    ]
    # 删去严格包含另一条弧的弧
    kept = [
        (p, q) for p, q in spans
        if not any((x, y) != (p, q) and p <= x and y <= q for x, y in spans)
    ]

    try:
        P = make_partition(rs, [Root.from_terms(size, (p, 1), (q, -1)) for p, q in kept])
        pf = ParkingFunction(pi, P)
    except DomainError as e:
        raise InadmissibleError(f"符号类型 {v} 不可实现", original_error=e)

    if sign_type_of_pf(rs, pf) != v:
        raise InadmissibleError(f"符号类型 {v} 不可实现")
    return pf


@lru_cache(maxsize=None)
def _antichains(rs):
    return tuple(antichains(rs))


def _quick_signs(rs, w, P):
    # η ≥ 1 当且仅当 P 中有元素 ≤ |w⁻¹α|
    w_inv = inverse(w)
    signs = []
    for alpha in rs.positive_roots:
        beta = act(w_inv, alpha)
        if not is_positive(rs, beta):
            signs.append('-')
        else:
            signs.append('+' if any(poset_leq(rs, p, beta) for p in P) else '0')
    return tuple(signs)


def arr_forward(rs, v):
    """一般型 floor 双射：符号类型 → (w, w⁻¹fl(R))，在反链中搜索 P"""
    if v.kind != rs.kind:
        raise DomainError(f"{v.kind} 的符号类型不能用于 {rs.kind}")
    negatives = [a for a, s in zip(rs.positive_roots, v.signs) if s == '-']
    w = from_negative_set(rs, negatives)

    candidates = [
        P for P in _antichains(rs)
        if all(is_positive(rs, act(w, alpha)) for alpha in P)
        and _quick_signs(rs, w, P) == v.signs
    ]
    matches = [P for P in candidates if sign_type_of_pf(rs, ParkingFunction(w, P)) == v]
    if not matches:
        raise InadmissibleError(f"符号类型 {v} 没有对应的停车函数")
    if len(matches) > 1:
        raise InadmissibleError(f"符号类型 {v} 对应 {len(matches)} 个停车函数，双射不成立")
    return ParkingFunction(w, matches[0])


def is_admissible(rs, v):
    """符号类型是否对应某个 Shi 区域"""
    try:
        arr_forward(rs, v)
        return True
    except InadmissibleError:
        return False


def minimal_from_sign(rs, v):
    """
    由符号类型计算区域的极小元

    Args:
        rs: 根系
        v: 符号类型

    Returns:
        ShiVector: 极小元；符号类型不对应任何区域时抛出 InadmissibleError
    """
    m = minimal_element(rs, arr_forward(rs, v))
    if sign_of(m) != v:
        raise InadmissibleError(f"极小元的符号 {sign_of(m)} 与 {v} 不符")
    return m


def pattern(signs3):
    """把 (v_ab, v_ac, v_bc) 当作 A_2 符号类型时的排列模式"""
    v_ab, v_ac, v_bc = signs3
    I = [0, int(v_ab == '-'), int(v_ac == '-') + int(v_bc == '-')]
    return decode_inversion_vector(I).images


def region_contains(rs, v, point):
    """区域的不等式描述：- 时 <x,α> < 0，0 时 0 < <x,α> < 1，+ 时 <x,α> > 1"""
    if len(point) != rs.ambient_dim:
        raise DomainError(f"点的维数应为 {rs.ambient_dim}")
    for alpha, s in zip(rs.positive_roots, v.signs):
        value = sum(Fraction(x) * c for x, c in zip(point, alpha.coords))
        if s == '-' and not value < 0:
            return False
        if s == '0' and not 0 < value < 1:
            return False
        if s == '+' and not value > 1:
            return False
    return True


def parking_functions(rs):
    """所有停车函数 (w, P)，按 Weyl 群广度优先顺序、反链规范顺序"""
    result = []
    for w in elements(rs):
        for P in _antichains(rs):
            if all(is_positive(rs, act(w, alpha)) for alpha in P):
                result.append(ParkingFunction(w, P))
    logger.info(f"{rs.kind}: 共 {len(result)} 个停车函数")
    return result


def local_improvement(rs, m):
    """把某一分量向 0 移动一步（符号不变）后仍满足 Shi 关系的向量；没有则返回 None"""
    for index, x in enumerate(m.entries):
        if x in (0, 1, -1):
            continue
        step = -1 if x > 0 else 1
        entries = list(m.entries)
        entries[index] = x + step
        candidate = ShiVector(m.kind, tuple(entries))
        if not check_shi_relations(rs, candidate):
            return candidate
    return None


def sign_type_to_json(v):
    """符号类型的 JSON 记录"""
    return {'family': v.kind.family, 'rank': v.kind.rank, 'signs': list(v.signs)}


def sign_type_from_json(data):
    """读入 {family, rank, signs} 记录"""
    try:
        rs = build_root_system((data['family'], data['rank']))
        return SignType(rs.kind, tuple(str(s) for s in data['signs']))
    except (KeyError, TypeError) as e:
        raise ParseError(f"无法解析符号类型: {data!r}", original_error=e)


def shi_vector_to_json(v):
    return {'entries': list(v.entries)}


def parking_function_to_json(pf):
    """{"w": 一行表示, "P": 反链中各根的坐标}"""
    return {'w': list(pf.w.images), 'P': [root_to_json(alpha) for alpha in pf.P]}


def parking_function_from_json(rs, data):
    """读入 parking_function_to_json 的输出"""
    try:
        w = permutation_from_json(rs, data['w'])
        P = make_partition(rs, [root_from_json(rs, r) for r in data.get('P', [])])
    except (KeyError, TypeError, AttributeError) as e:
        raise ParseError(f"无法解析停车函数: {data!r}", original_error=e)
    return ParkingFunction(w, P)
