import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import modorder as mo


@pytest.fixture(scope="session")
def corpus():
    """The default corpus, keyed by member name; contexts are shared."""
    return {ctx.name: ctx for ctx in mo.default_corpus()}


@pytest.fixture(scope="session")
def z6_over_z30(corpus):
    return corpus["Z6/Z30"]


@pytest.fixture(scope="session")
def z10_over_z10(corpus):
    return corpus["Z10/Z10"]


@pytest.fixture(scope="session")
def z6_over_z6(corpus):
    return corpus["Z6/Z6"]


@pytest.fixture(scope="session")
def z4_over_z4():
    return mo.ModuleContext(mo.build_zm_over_zn(4, 4), "Z4/Z4")


@pytest.fixture(scope="session")
def klein_four():
    """F2 x F2 over Z2: smallest module whose endomorphism ring is noncommutative."""
    from oracles import klein_four_tables
    add, action = klein_four_tables()
    module = mo.build_module_from_tables(mo.build_zn(2), add, action, name="F2^2")
    return mo.ModuleContext(module, "F2^2")
