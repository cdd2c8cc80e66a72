import pytest

from qcluster.quiver import IceQuiver, Vertex


@pytest.fixture
def golden4():
    """A small golden quiver: V = {a,b,c,d}, frozen {c,d}, eps_ab = -1,
    eps_bc = -1, eps_bd = 1, eps_cd = -1/2.  The half-integer entry sits
    between the two frozen vertices."""
    vertices = [
        Vertex("a", False),
        Vertex("b", False),
        Vertex("c", True),
        Vertex("d", True),
    ]
    eps2 = [
        [0, -2, 0, 0],
        [2, 0, -2, 2],
        [0, 2, 0, -1],
        [0, -2, 1, 0],
    ]
    return IceQuiver(vertices, eps2)
