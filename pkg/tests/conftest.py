import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from groupresp import figures


@pytest.fixture
def deer():
    return figures.fig1a(0.3)


@pytest.fixture
def testing_chain():
    return figures.fig1b()


@pytest.fixture
def coordination():
    return figures.fig2()


@pytest.fixture
def machine():
    return figures.fig3()


@pytest.fixture
def nature_coordination():
    return figures.fig4()


@pytest.fixture
def all_builtins():
    return {
        "fig1a": figures.fig1a(0.3),
        "fig1b": figures.fig1b(),
        "fig2": figures.fig2(),
        "fig3": figures.fig3(),
        "fig4": figures.fig4(),
    }
