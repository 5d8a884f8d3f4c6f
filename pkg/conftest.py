"""
Shared fixtures: the seven rank-2 matroids on four elements
"""

import pytest

from valuta.models import parse_descriptor
from valuta.services import family_service
from valuta.services.verification import M42


@pytest.fixture(scope="session")
def m42():
    """name -> Matroid, one per isomorphism class of M_{4,2}"""
    return {name: family_service.realize(parse_descriptor(text)) for name, text in M42.items()}


@pytest.fixture
def client():
    from valuta import create_app

    app = create_app("testing")
    return app.test_client()
