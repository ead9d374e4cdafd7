import json

import pytest

from jmsym.algebra import Element
from jmsym.cache import ENV_VAR, IdempotentCache, default_cache_dir
from jmsym.errors import CacheIntegrityError
from jmsym.seminormal import idempotent_E_lambda_fast


def test_roundtrip(tmp_path):
    cache = IdempotentCache(tmp_path)
    E = idempotent_E_lambda_fast((2, 1))
    assert cache.get(3, "lambda_2-1", "QQ") is None
    got, hit = cache.get_or_compute(3, "lambda_2-1", "QQ", lambda: E)
    assert not hit and got == E
    got, hit = cache.get_or_compute(3, "lambda_2-1", "QQ", lambda: pytest.fail("recomputed"))
    assert hit and got == E


def test_fp_roundtrip(tmp_path):
    cache = IdempotentCache(tmp_path)
    a = Element.sigma(2, 3, 5) * 3
    cache.put(3, "x", "F5", a)
    assert cache.get(3, "x", "F5") == a


def test_corruption_detected(tmp_path):
    cache = IdempotentCache(tmp_path)
    path = cache.put(2, "e", "QQ", (Element.one(2) + Element.sigma(2, 2)) / 2)
    rec = json.loads(path.read_text())
    rec["element"] = rec["element"].replace("1/2", "1/3", 1)
    path.write_text(json.dumps(rec))
    with pytest.raises(CacheIntegrityError):
        cache.get(2, "e", "QQ")
    path.write_text("{not json")
    with pytest.raises(CacheIntegrityError):
        cache.get(2, "e", "QQ")


def test_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv(ENV_VAR, str(tmp_path))
    assert default_cache_dir() == tmp_path
    assert IdempotentCache().directory == tmp_path
