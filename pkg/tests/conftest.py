import pytest

from tracecodes import make_field


@pytest.fixture(scope="session")
def fields():
    """Session-wide cache of field contexts; construction is deterministic
    so sharing them across tests is safe."""
    cache = {}

    def get(p, m, modulus=None):
        key = (p, m, modulus)
        if key not in cache:
            cache[key] = make_field(p, m, modulus=modulus)
        return cache[key]

    return get
