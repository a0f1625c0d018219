"""Shared fixtures"""

import json
import math

import pytest

from core import AppConfig, get_named_amplitudes, new_state

R = 1 / math.sqrt(2)


@pytest.fixture(autouse=True)
def fresh_config():
    """Each test sees the environment as it is when the test runs"""
    AppConfig.reset()
    yield
    AppConfig.reset()


@pytest.fixture
def named_state():
    def _make(name, dim_b=2):
        return new_state(dim_b, get_named_amplitudes(name, dim_b))
    return _make


@pytest.fixture
def phi_plus(named_state):
    return named_state("phi_plus")


@pytest.fixture
def phi_minus(named_state):
    return named_state("phi_minus")


@pytest.fixture
def write_state_file(tmp_path):
    """Write {"dimB": d, "amplitudes": [[re, im], ...]} and return the path"""
    def _write(name, dim_b, amplitudes):
        path = tmp_path / name
        payload = {
            "dimB": dim_b,
            "amplitudes": [[complex(a).real, complex(a).imag] for a in amplitudes],
        }
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)
    return _write


@pytest.fixture
def write_json_file(tmp_path):
    def _write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)
    return _write
