import logging

logger = logging.getLogger(__name__)

SPACING = 40
MARGIN = 20
DOT_RADIUS = 3
FORK_OFFSET = 8


class SvgCanvas:
    """逐段拼接 SVG 文本"""

    def __init__(self):
        self.svg = ""

    def header(self, width, height):
        self.svg += (
            '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
            f'<svg version="1.1" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}" xmlns="http://www.w3.org/2000/svg">\n'
        )

    def line(self, x1, y1, x2, y2, stroke="#888888"):
        self.svg += f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{stroke}" stroke-width="1"/>\n'

    def dot(self, x, y, fill="#000000"):
        self.svg += f'<circle cx="{x}" cy="{y}" r="{DOT_RADIUS}" fill="{fill}"/>\n'

    def arc(self, x1, y1, x2, y2, stroke="#1f5fbf"):
        radius = max(abs(x2 - x1), abs(y2 - y1)) / 2
        self.svg += (
            f'<path d="M {x1} {y1} A {radius:.1f} {radius:.1f} 0 0 1 {x2} {y2}" '
            f'fill="none" stroke="{stroke}" stroke-width="1.5"/>\n'
        )

    def text(self, x, y, string, size=12):
        self.svg += f'<text x="{x}" y="{y}" font-size="{size}" text-anchor="middle">{string}</text>\n'

    def get_svg(self):
        return f"{self.svg}</svg>\n"


def _columns(d):
    """线性坐标 → 该列显示的值；分叉列显示为 上/下"""
    lay = d.layout
    labels = {}
    for slot in lay.slots:
        x = lay.coordinate(slot)
        text = str(d.value_at(slot))
        labels[x] = f"{labels[x]}/{text}" if x in labels else text
    return labels


def _endpoint_mark(d, slot):
    fork = d.layout.fork
    if fork and slot == fork[0]:
        return '^'
    if fork and slot == fork[1]:
        return 'v'
    return '+'


def render_text(d):
    """每条弧一行（越长越靠上），最下面是数值行"""
    labels = _columns(d)
    width = max(3, max(len(label) for label in labels.values()) + 1)
    center = {x: (x - 1) * width + width // 2 for x in labels}
    total = width * len(labels)

    def span_length(arc):
        return d.layout.coordinate(arc.endpoints[1]) - d.layout.coordinate(arc.endpoints[0])

    rows = []
    for arc in sorted(d.arcs, key=lambda a: -span_length(a)):
        left, right = (center[d.layout.coordinate(slot)] for slot in arc.endpoints)
        cells = [' '] * total
        for k in range(left + 1, right):
            cells[k] = '-'
        cells[left] = _endpoint_mark(d, arc.endpoints[0])
        cells[right] = _endpoint_mark(d, arc.endpoints[1])
        rows.append(''.join(cells).rstrip())

    value_line = ''.join(labels[x].center(width) for x in sorted(labels)).rstrip()
    rows.append(value_line)
    return '\n'.join(rows)


def render_svg(d):
    """半圆弧 + 数值点；D 型分叉的两个槽位上下错开"""
    lay = d.layout
    columns = len({lay.coordinate(slot) for slot in lay.slots})
    spans = [lay.coordinate(a.endpoints[1]) - lay.coordinate(a.endpoints[0]) for a in d.arcs]
    arc_height = (max(spans) * SPACING // 2) if spans else 0

    width = 2 * MARGIN + (columns - 1) * SPACING
    baseline = MARGIN + arc_height + FORK_OFFSET
    height = baseline + FORK_OFFSET + 2 * MARGIN

    def position(slot):
        x = MARGIN + (lay.coordinate(slot) - 1) * SPACING
        if lay.fork and slot == lay.fork[0]:
            return x, baseline - FORK_OFFSET
        if lay.fork and slot == lay.fork[1]:
            return x, baseline + FORK_OFFSET
        return x, baseline

    canvas = SvgCanvas()
    canvas.header(width, height)
    canvas.line(MARGIN, baseline, width - MARGIN, baseline)
    for arc in d.arcs:
        (x1, y1), (x2, y2) = position(arc.endpoints[0]), position(arc.endpoints[1])
        canvas.arc(x1, y1, x2, y2)
    for slot in lay.slots:
        x, y = position(slot)
        canvas.dot(x, y)
        label_y = y + MARGIN if not (lay.fork and slot == lay.fork[0]) else y - MARGIN // 2
        canvas.text(x, label_y, d.value_at(slot))

    logger.debug(f"渲染 SVG: {len(d.arcs)} 条弧, {columns} 列")
    return canvas.get_svg()
