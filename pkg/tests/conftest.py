import numpy as np
import pytest

from socdisj import ConeSpec, normalize
from socdisj.disjunction import basic_report

K3 = ConeSpec.second_order(3)


def single_instance():
    """x3 >= 1 or x1 + x3 >= 1."""
    return normalize(K3, [0, 0, 1], 1, [1, 0, 1], 1)


def multiple_instance():
    """-x3 >= -1 or -x2 >= 0, stored with the sides exchanged."""
    return normalize(K3, [0, 0, -1], -1, [0, -1, 0], 0)


def split_instance():
    return normalize(K3, [1, 0, 0], 1, [-1, 0, 0], 1)


def random_instances(count, rng, sizes=(3, 4, 5), allow_trivial=True, prefer_nontrivial=False):
    """Random preflight-passing second-order instances."""
    out = []
    while len(out) < count:
        n = int(rng.choice(sizes))
        d = normalize(ConeSpec.second_order(n), rng.normal(size=n), int(rng.integers(-1, 2)),
                      rng.normal(size=n), int(rng.integers(-1, 2)))
        rep = basic_report(d)
        if not rep.passed or (rep.hull_is_K and not allow_trivial):
            continue
        out.append(d)
    return out


def random_split(rng, n=None):
    """Split-type instance t1 c.x >= 1 or -t2 c.x >= 1 with c outside both K and -K."""
    while True:
        n = int(rng.choice((3, 4, 5))) if n is None else n
        c = rng.normal(size=n)
        c[-1] *= 0.5
        if np.linalg.norm(c[:-1]) > abs(c[-1]) + 0.1:
            t1, t2 = rng.uniform(0.5, 2.0, 2)
            return normalize(ConeSpec.second_order(n), t1 * c, 1, -t2 * c, 1)


@pytest.fixture
def d_single():
    return single_instance()


@pytest.fixture
def d_multi():
    return multiple_instance()


@pytest.fixture
def d_split():
    return split_instance()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
