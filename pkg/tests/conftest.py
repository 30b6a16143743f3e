import pytest
from hypothesis import strategies as st

from coxjsj.core import new_system
from coxjsj.fixtures import figure1, figure2, figure3
from coxjsj.formats import generator_names, random_corpus

from acceptance_log import LINES as ACCEPTANCE_LINES


@pytest.fixture
def fig1():
    return figure1()


@pytest.fixture
def fig2():
    return figure2()


@pytest.fixture
def fig3():
    return figure3()


# fixed corpora for the acceptance criteria
def oracle_corpus():
    return random_corpus(200, 9, seed=4)


def twist_corpus():
    return random_corpus(50, 7, seed=5, probabilities=(0.3, 0.4, 0.5, 0.6),
                         labels={2: 2, 3: 3, 4: 1})


def chordal_corpus():
    return random_corpus(500, 10, seed=6)


def side_separator_corpus():
    return random_corpus(200, 8, seed=8)


@st.composite
def systems(draw, min_rank=1, max_rank=7, labels=(2, 3, 4, 5)):
    n = draw(st.integers(min_rank, max_rank))
    gens = generator_names(n)
    orders = []
    for i in range(n):
        for j in range(i + 1, n):
            m = draw(st.sampled_from(labels + (None, None)))
            if m is not None:
                orders.append((gens[i], gens[j], m))
    return new_system(gens, orders)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
