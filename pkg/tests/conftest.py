import pytest

import altstar as st


@pytest.fixture(scope="session")
def m2():
    return st.matrix_algebra(2)


@pytest.fixture(scope="session")
def m3():
    return st.matrix_algebra(3)


@pytest.fixture(scope="session")
def zorn():
    return st.zorn_algebra()


@pytest.fixture(scope="session")
def m2_peirce(m2):
    return st.PeirceSystem(m2, m2.basis_element(0))


@pytest.fixture(scope="session")
def m3_peirce(m3):
    return st.PeirceSystem(m3, m3.basis_element(0))


@pytest.fixture(scope="session")
def zorn_peirce(zorn):
    return st.PeirceSystem(zorn, zorn.basis_element(0))


@pytest.fixture(scope="session")
def dsum_m2_m2():
    a = st.matrix_algebra(2)
    return st.direct_sum(a, st.matrix_algebra(2))
