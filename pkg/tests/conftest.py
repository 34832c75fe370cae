import itertools

import pytest

from mobius_hosoya.graph_core import Graph

# Upper triangles of the distance matrices printed for M(4,3) and M(5,3),
# vertices ordered column by column.
M43_UPPER = """
0 1 2 1 2 2 2 2 1
  0 1 2 1 2 2 1 2
    0 2 2 1 1 2 2
      0 1 2 1 2 2
        0 1 2 1 2
          0 2 2 1
            0 1 2
              0 1
                0
"""

M53_UPPER = """
0 1 2 1 2 3 2 3 2 3 2 1
  0 1 2 1 2 3 2 3 2 1 2
    0 3 2 1 2 3 2 1 2 2
      0 1 2 1 2 3 2 3 2
        0 1 2 1 2 3 2 3
          0 3 2 1 2 3 2
            0 1 2 1 2 3
              0 1 2 1 2
                0 3 2 1
                  0 1 2
                    0 1
                      0
"""


def full_from_upper(text):
    rows = [list(map(int, line.split())) for line in text.strip().splitlines()]
    n = len(rows)
    full = [[0] * n for _ in range(n)]
    for i, row in enumerate(rows):
        assert len(row) == n - i
        for off, d in enumerate(row):
            full[i][i + off] = full[i + off][i] = d
    return full


def floyd_warshall(g: Graph):
    """Independent all-pairs oracle; None marks unreachable pairs."""
    n = g.vertex_count
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for k, i, j in itertools.product(range(n), repeat=3):
        if d[i][k] + d[k][j] < d[i][j]:
            d[i][j] = d[i][k] + d[k][j]
    return [[None if x == inf else int(x) for x in row] for row in d]


@pytest.fixture
def m43_matrix():
    return full_from_upper(M43_UPPER)


@pytest.fixture
def m53_matrix():
    return full_from_upper(M53_UPPER)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
