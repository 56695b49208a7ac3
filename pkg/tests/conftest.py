#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import os
import sys

import pytest

# 添加项目根目录到路径
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from rootsys import build_root_system  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: 耗时较长的枚举，设置 SHIMIN_SLOW=1 时运行")


def pytest_collection_modifyitems(config, items):
    if os.getenv('SHIMIN_SLOW') == '1':
        return
    skip_slow = pytest.mark.skip(reason="设置 SHIMIN_SLOW=1 运行")
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def a2():
    return build_root_system(('A', 2))


@pytest.fixture
def b2():
    return build_root_system(('B', 2))


@pytest.fixture
def c2():
    return build_root_system(('C', 2))


@pytest.fixture
def d3():
    return build_root_system(('D', 3))


# A_2 的 16 个符号类型及其极小元（规范顺序 α12, α13, α23）
A2_MINIMA = {
    '+,+,+': (1, 2, 1),
    '+,+,-': (1, 1, -1),
    '-,-,+': (-2, -1, 1),
    '+,+,0': (1, 1, 0),
    '+,0,-': (1, 0, -1),
    '-,-,0': (-1, -1, 0),
    '0,+,0': (0, 1, 0),
    '-,0,0': (-1, 0, 0),
    '-,-,-': (-1, -1, -1),
    '-,+,+': (-1, 1, 1),
    '+,-,-': (1, -1, -2),
    '0,+,+': (0, 1, 1),
    '-,0,+': (-1, 0, 1),
    '0,-,-': (0, -1, -1),
    '0,0,-': (0, 0, -1),
    '0,0,0': (0, 0, 0),
}


@pytest.fixture
def a2_minima():
    return dict(A2_MINIMA)
