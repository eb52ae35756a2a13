import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from horncone import HornStore


@pytest.fixture(scope="session")
def store():
    """Levels through ambient 6, plain and three-cycle."""
    st = HornStore(arity=3)
    st.build_through(6, 6)
    st.build_through(6, 6, sigma=(3,))
    return st
