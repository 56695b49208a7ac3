"""
经典 Weyl 群元素的（带符号）置换实现
A 型为 [1..n+1] 上的置换，B/C/D 型为满足 w(-i) = -w(i) 的带符号置换
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Tuple

from error_handler import DomainError, InadmissibleError
from rootsys import Root, RootSystemKind, build_root_system

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignedPermutation:
    """images[i-1] = w(i)；隐含 w(0) = 0，w(-i) = -w(i)"""
    kind: RootSystemKind
    images: Tuple[int, ...]

    def __post_init__(self):
        size = self.kind.ambient_dim
        if len(self.images) != size:
            raise DomainError(f"{self.kind} 的元素需要 {size} 个像，得到 {len(self.images)} 个")
        if sorted(abs(x) for x in self.images) != list(range(1, size + 1)):
            raise DomainError(f"{list(self.images)} 不是 [1..{size}] 上的带符号置换")
        negatives = sum(1 for x in self.images if x < 0)
        if self.kind.family == 'A' and negatives:
            raise DomainError(f"A 型元素不能有负的像: {list(self.images)}")
        if self.kind.family == 'D' and negatives % 2:
            raise DomainError(f"D 型元素的负像个数必须为偶数: {list(self.images)}")

    def __call__(self, i):
        if i == 0:
            return 0
        image = self.images[abs(i) - 1]
        return image if i > 0 else -image

    def __str__(self):
        return window(self)


def identity(kind):
    """单位元"""
    return SignedPermutation(kind, tuple(range(1, kind.ambient_dim + 1)))


def compose(u, v):
    """(u∘v)(i) = u(v(i))"""
    if u.kind != v.kind:
        raise DomainError(f"不能复合 {u.kind} 与 {v.kind} 的元素")
    return SignedPermutation(u.kind, tuple(u(v(i)) for i in range(1, len(v.images) + 1)))


def inverse(w):
    """逆元：w(i) = j 时 w⁻¹(j) = i，符号随之翻转"""
    images = [0] * len(w.images)
    for i, image in enumerate(w.images, 1):
        images[abs(image) - 1] = i if image > 0 else -i
    return SignedPermutation(w.kind, tuple(images))


def act(w, r):
    """e_i ↦ sign(w(i))·e_{|w(i)|}，线性延拓"""
    if r.dim != len(w.images):
        raise DomainError(f"维数不符: {r} 与 {w.kind}")
    coords = [0] * r.dim
    for i, c in enumerate(r.coords, 1):
        image = w(i)
        coords[abs(image) - 1] += c if image > 0 else -c
    return Root(tuple(coords))


def is_positive(rs, r):
    """
    判断根的正负

    Args:
        rs: 根系
        r: 根（正根或负根）

    Returns:
        bool: 正根返回 True，负根返回 False；不是根时抛出 DomainError
    """
    if r in rs._index:
        return True
    if -r in rs._index:
        return False
    raise DomainError(f"{r} 不是 {rs.kind} 的根")


def reflection(rs, alpha):
    """正交反射 s_α，写成带符号置换"""
    if not rs.is_root(alpha):
        raise DomainError(f"{alpha} 不是 {rs.kind} 的根")
    dim = rs.ambient_dim
    images = []
    for i in range(1, dim + 1):
        e_i = Root.from_terms(dim, (i, 1))
        numerator = 2 * e_i.dot(alpha)
        image = e_i if numerator == 0 else e_i - Root(tuple(numerator * c // alpha.norm2 for c in alpha.coords))
        support = [(k, c) for k, c in enumerate(image.coords, 1) if c]
        if len(support) != 1 or abs(support[0][1]) != 1:
            raise DomainError(f"s_{alpha} 不是带符号置换")
        k, c = support[0]
        images.append(k if c > 0 else -k)
    return SignedPermutation(rs.kind, tuple(images))


def simple_reflection(rs, alpha):
    if alpha not in rs.simple_roots:
        raise DomainError(f"{alpha} 不是 {rs.kind} 的单根")
    return reflection(rs, alpha)


def elements(rs):
    """在单反射下做闭包，按广度优先顺序列出整个 Weyl 群"""
    start = identity(rs.kind)
    generators = [simple_reflection(rs, a) for a in rs.simple_roots]
    seen = {start}
    ordered = [start]
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in generators:
            u = compose(w, s)
            if u not in seen:
                seen.add(u)
                ordered.append(u)
                queue.append(u)
    logger.debug(f"{rs.kind}: Weyl 群共 {len(ordered)} 个元素")
    return ordered


def inversion_set(rs, w):
    """{α ∈ Φ+ : w⁻¹(α) ∈ Φ-}，按规范顺序"""
    w_inv = inverse(w)
    return tuple(a for a in rs.positive_roots if not is_positive(rs, act(w_inv, a)))


def from_negative_set(rs, N):
    """由负根集合恢复 w：每次剥掉集合中的一个单根

    若 α_s 属于 w 的负根集合，则 s·w 的负根集合为 s(N \\ {α_s})。
    """
    target = set(N)
    for r in target:
        rs.index(r)

    remaining = set(target)
    word = []
    while remaining:
        simple = next((a for a in rs.simple_roots if a in remaining), None)
        if simple is None:
            raise InadmissibleError(f"{sorted(map(str, target))} 不是任何 w 的负根集合")
        s = simple_reflection(rs, simple)
        remaining = {act(s, b) for b in remaining if b != simple}
        word.append(s)

    w = identity(rs.kind)
    for s in word:
        w = compose(w, s)

    if set(inversion_set(rs, w)) != target:
        raise InadmissibleError(f"{sorted(map(str, target))} 不是任何 w 的负根集合")
    return w


def longest_element(rs):
    return from_negative_set(rs, rs.positive_roots)


def encode_inversion_vector(pi):
    """按值编号的逆序向量：I_j = 位于 j 右侧且小于 j 的值的个数"""
    position = {value: p for p, value in enumerate(pi)}
    if sorted(position) != list(range(1, len(pi) + 1)):
        raise DomainError(f"{list(pi)} 不是置换")
    return [
        sum(1 for smaller in range(1, j) if position[smaller] > position[j])
        for j in range(1, len(pi) + 1)
    ]


def decode_inversion_vector(I):
    """逆序向量 → A 型置换（值 j 依次插入，使其右侧恰有 I_j 个更小的值）"""
    if len(I) < 2:
        raise DomainError("逆序向量至少需要两个分量")
    line = []
    for j, count in enumerate(I, 1):
        if not isinstance(count, int) or not 0 <= count <= j - 1:
            raise DomainError(f"I_{j} = {count} 超出范围 [0, {j - 1}]")
        line.insert(len(line) - count, j)
    rs = build_root_system(('A', len(I) - 1))
    return SignedPermutation(rs.kind, tuple(line))


def window(w):
    """单行记号：B/C 为 w(1)…w(n) | 0 | w(-n)…w(-1)，D 型中间为分叉 [w(n)/w(-n)]"""
    n = len(w.images)
    family = w.kind.family
    if family == 'A':
        return ' '.join(str(x) for x in w.images)

    left = [str(w(i)) for i in range(1, n + 1)]
    right = [str(w(-i)) for i in range(n, 0, -1)]
    if family == 'D':
        fork = f"[{w(n)}/{w(-n)}]"
        return ' '.join(left[:-1] + [fork] + right[1:])
    return ' '.join(left) + ' | 0 | ' + ' '.join(right)


def permutation_from_json(rs, data):
    """从一行表示 [w(1), ..., w(n)] 读入 Weyl 群元素"""
    try:
        images = tuple(int(x) for x in data)
    except (TypeError, ValueError) as e:
        raise DomainError(f"无法解析置换: {data!r}", original_error=e)
    return SignedPermutation(rs.kind, images)
