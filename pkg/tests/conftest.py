import functools

import pytest

from reflconn.connection import build_system, connection_in_z, jacobian, scaled_connection
from reflconn.groups import close_group, parse_matrix, validate_reflection_group
from reflconn.invariants import InvariantTuple, catalog_lookup
from reflconn.parsing import parse_expr


def px(s, nvars=2, conductor=12):
    return parse_expr(s, alphabet="x", nvars=nvars, conductor=conductor)


def pz(s, nvars=2, conductor=12):
    return parse_expr(s, alphabet="z", nvars=nvars, conductor=conductor)


@functools.lru_cache(maxsize=None)
def catalog(name):
    return catalog_lookup(name)


@functools.lru_cache(maxsize=None)
def pipeline(name):
    """(group, phi, jacobian data, scaled connection, z-system), cached."""
    group, phi = catalog(name)
    jd = jacobian(phi, det_char_order=group.det_char_order)
    sc = scaled_connection(jd, group=group)
    cs = connection_in_z(sc, phi)
    return group, phi, jd, sc, cs


@functools.lru_cache(maxsize=None)
def sign_group():
    """The rank-1 group {(1), (-1)} with invariant x^2, a handy oracle."""
    g = validate_reflection_group(
        close_group([parse_matrix([["-1"]], 12)])
    )
    phi = InvariantTuple(
        phis=(px("x1^2", nvars=1),), degrees=(2,), source="catalog"
    )
    return g, phi


@pytest.fixture(scope="session")
def d8():
    return catalog("G(2,1,2)")


@pytest.fixture(scope="session")
def g4():
    return catalog("G4")


@pytest.fixture(scope="session")
def d8_pipeline():
    return pipeline("G(2,1,2)")


@pytest.fixture(scope="session")
def g4_pipeline():
    return pipeline("G4")
