import pytest

from tern2jw import tree_parse

# 7-qubit triple fork: two-node branches on all three slots of the root
TRIPLE_FORK = "(q1 :x (q2 :z (q3)) :y (q4 :z (q5)) :z (q6 :z (q7)))"

# 3-qubit augmented binary tree: x and y children, bare z
BINARY3 = "(q1 :x (q2) :y (q3))"


@pytest.fixture
def triple_fork():
    return tree_parse(TRIPLE_FORK)


@pytest.fixture
def binary3():
    return tree_parse(BINARY3)
