import pytest
from hypothesis import settings

from uxh.configs import catalog
from uxh.field import FieldSpec, default_field_specs, make_field
from uxh.unexpected import solve_bihom

settings.register_profile("suite", deadline=None, max_examples=25)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def fq():
    return make_field(FieldSpec(p=10007))


@pytest.fixture(scope="session")
def fgold():
    return make_field(default_field_specs(golden=True)[0])


@pytest.fixture(scope="session")
def fzeta4():
    return make_field(default_field_specs(zeta_order=4)[0])


@pytest.fixture(scope="session")
def fzeta5():
    return make_field(default_field_specs(zeta_order=5)[0])


@pytest.fixture(scope="session")
def b4_solved(fq):
    return solve_bihom(catalog("b4", fq), 4, 4)


@pytest.fixture(scope="session")
def h3_solved(fgold):
    return solve_bihom(catalog("h3", fgold), 6, 5)


@pytest.fixture(scope="session")
def fermat4_solved(fzeta4):
    return solve_bihom(catalog("fermat3:4", fzeta4), 6, 5)
