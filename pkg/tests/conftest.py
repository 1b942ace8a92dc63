import pytest

from delibcheck import Basis, arg, framework


def fw(nodes=(), edges=()):
    return framework(nodes, edges)


def basis(views, extra=()):
    return Basis(views, extra)


def args(*names):
    return frozenset(arg(n) for n in names)


def edge(x, y):
    return (arg(x), arg(y))


@pytest.fixture
def mutual_attack():
    """p and q attack each other."""
    return fw(edges=[("p", "q"), ("q", "p")])


@pytest.fixture
def worked_basis():
    """Both agents see the mutual attack; each adds a self-attack on one side."""
    return basis(
        {
            "a": [("p", "p"), ("p", "q"), ("q", "p")],
            "b": [("q", "q"), ("p", "q"), ("q", "p")],
        }
    )


@pytest.fixture
def crossing_basis():
    """One agent sees p attacking q, the other the reverse."""
    return basis({"a": [("p", "q")], "b": [("q", "p")]})


SIX_TRUE_FORMULAS = (
    "<p>[[p]]",
    "E*[[p]]",
    "[p]E*[[q]]",
    "~[p]E*<<p>>",
    "<p>E*[[~p]]",
    "E* E* (<<p>> & <<q>>)",
)
