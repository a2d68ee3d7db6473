import pytest

from latmodal import (
    DEDUCTIVE_EQ1,
    MATERIAL,
    belnap_four,
    boolean_algebra,
    build_implication,
    chain,
    antichain_k5,
    matrix_from_names,
    validate_lattice,
)


@pytest.fixture
def b2():
    return boolean_algebra(1)


@pytest.fixture
def c3():
    return chain(3, "flip")


@pytest.fixture
def m2():
    """Four-element diamond with complement negation."""
    return boolean_algebra(2)


@pytest.fixture
def diamond():
    """Bare four-element diamond, no negation."""
    return validate_lattice(
        ["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")], name="M2"
    )


@pytest.fixture
def m3():
    """Three incomparable middles: the smallest non-distributive lattice."""
    return validate_lattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        name="M3",
    )


@pytest.fixture
def four():
    return belnap_four()


@pytest.fixture
def k5():
    return antichain_k5()


@pytest.fixture
def c3_material_lp(c3):
    """Three-valued chain, material implication, middle-and-top designated."""
    return matrix_from_names(c3.with_imp(build_implication(c3, MATERIAL)), ["h", "1"])


@pytest.fixture
def c3_eq1(c3):
    return matrix_from_names(c3.with_imp(build_implication(c3, DEDUCTIVE_EQ1)), ["h", "1"])
