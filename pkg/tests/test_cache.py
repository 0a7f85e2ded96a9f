import warnings

import numpy as np
import pytest

from thetaorbits import cache
from thetaorbits.families import make_group


@pytest.mark.parametrize("spec", ["A5", "PSL2:7", "Sz:8", "prod(A5,S4)", "Aff:9", "perm{(1,2,3);(1,2)}"])
def test_round_trip(tmp_path, spec):
    G = make_group(spec)
    cache.store(G, tmp_path)
    H = cache.load(spec, tmp_path)
    assert np.array_equal(G.rows, H.rows)
    assert np.array_equal(G.keys, H.keys)
    assert G.generators == H.generators
    assert np.array_equal(G.orders, H.orders)


def test_a10_round_trip(tmp_path):
    G = make_group("A10")
    cache.store(G, tmp_path)
    H = cache.load("A10", tmp_path)
    assert np.array_equal(G.rows, H.rows)


def test_missing_key_builds_and_stores(tmp_path):
    assert cache.load("S4", tmp_path) is None
    G = cache.load_or_build("S4", directory=tmp_path)
    assert len(G) == 24
    assert cache.cache_path("S4", tmp_path).exists()


def test_corrupt_file_rebuilds(tmp_path):
    cache.load_or_build("A5", directory=tmp_path)
    p = cache.cache_path("A5", tmp_path)
    p.write_bytes(b"not an npz file")
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        G = cache.load_or_build("A5", directory=tmp_path)
    assert len(G) == 60
    assert any(issubclass(x.category, cache.CacheWarning) for x in w)
    assert cache.load("A5", tmp_path) is not None


def test_version_changes_key():
    assert cache.cache_key("A5", 1) != cache.cache_key("A5", 2)
    assert cache.cache_key(" A5") == cache.cache_key("A5")


def test_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    assert cache.default_dir() == tmp_path
