import pytest

from wythoffkit import E_WYTHOFF, R_WYTHOFF, WYTHOFF, build_table

RULES = {"wythoff": WYTHOFF, "r-wythoff": R_WYTHOFF, "e-wythoff": E_WYTHOFF}


@pytest.fixture(scope="session")
def tables():
    """Complete tables to 300 for the three named games."""
    return {name: build_table(rule, 300) for name, rule in RULES.items()}
