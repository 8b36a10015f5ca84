from pathlib import Path

import pytest
from pydantic import ValidationError

from srreg.config import POWER_CACHE_SIZE, Settings, load_settings_sync
from srreg.utils import ParallelRunner, power_cache
from srreg.utils.power_cache import PowerCache

TEMPLATE = Path(__file__).resolve().parent.parent / "srreg_config.template.yaml"


def test_template_matches_defaults():
    assert load_settings_sync(str(TEMPLATE)) == Settings()


def test_settings_file(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("field: q\njobs: 2\nallow_s4: true\n")
    settings = load_settings_sync(str(path))
    assert (settings.field, settings.jobs, settings.allow_s4) == ("q", 2, True)
    assert settings.sample_count == Settings().sample_count


def test_settings_reject_unknown_keys_and_bad_values(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("colour: blue\n")
    with pytest.raises(ValidationError):
        load_settings_sync(str(path))
    path.write_text("jobs: 0\n")
    with pytest.raises(ValidationError):
        load_settings_sync(str(path))


def test_missing_default_file_gives_defaults(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert load_settings_sync() == Settings()
    with pytest.raises(OSError):
        load_settings_sync(str(tmp_path / "absent.yaml"))


def test_power_cache_is_a_singleton():
    assert PowerCache() is power_cache


def test_power_cache_highest():
    power_cache.clear()
    power_cache.store("power", "k", 2, "two")
    power_cache.store("power", "k", 4, "four")
    power_cache.store("power", "k", 4, "other")
    assert power_cache.get("power", "k", 4) == "four"
    assert power_cache.highest("power", "k", 3) == (2, "two")
    assert power_cache.highest("power", "k", 1) == (0, None)
    assert power_cache.get("symbolic", "k", 2) is None
    assert power_cache.size() == 2
    power_cache.clear()
    assert power_cache.size() == 0


def test_power_cache_evicts_least_recently_used():
    power_cache.clear()
    try:
        power_cache.resize(2)
        power_cache.store("power", "a", 2, "a2")
        power_cache.store("power", "b", 2, "b2")
        assert power_cache.get("power", "a", 2) == "a2"
        power_cache.store("power", "c", 2, "c2")
        assert power_cache.size() == 2
        assert power_cache.get("power", "b", 2) is None
        assert power_cache.get("power", "a", 2) == "a2"
        power_cache.resize(1)
        assert power_cache.size() == 1
        assert power_cache.get("power", "a", 2) == "a2"
        with pytest.raises(ValueError):
            power_cache.resize(0)
    finally:
        power_cache.resize(POWER_CACHE_SIZE)
        power_cache.clear()


def test_cache_size_setting(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("power_cache_size: 16\n")
    assert load_settings_sync(str(path)).power_cache_size == 16
    path.write_text("power_cache_size: 0\n")
    with pytest.raises(ValidationError):
        load_settings_sync(str(path))


def test_runner_keeps_input_order():
    assert ParallelRunner(1).map(abs, [-3, 1, -2]) == [3, 1, 2]
    assert ParallelRunner(2).map(abs, [-3, 1, -2, -7]) == [3, 1, 2, 7]
    with pytest.raises(ValueError):
        ParallelRunner(0)
