import pytest

import paleyclique.config as pconf
import paleyclique.errors as pe


def test_defaults():
    settings = pconf.Settings.from_env({})
    assert settings.max_field_bits == 20
    assert settings.max_field_size == 2 ** 20
    assert settings.seed == 12345
    assert settings.jobs >= 1


def test_environment_overrides():
    settings = pconf.Settings.from_env({
        'CAYLEY_MAX_FIELD_BITS': '12',
        'CAYLEY_SEED': '7',
        'CAYLEY_JOBS': '3',
    })
    assert settings == pconf.Settings(max_field_bits=12, seed=7, jobs=3)


@pytest.mark.parametrize('name,value', [
    ('CAYLEY_MAX_FIELD_BITS', 'many'),
    ('CAYLEY_MAX_FIELD_BITS', '0'),
    ('CAYLEY_SEED', '-1'),
    ('CAYLEY_JOBS', '1.5'),
])
def test_malformed_environment(name, value):
    with pytest.raises(pe.UsageError):
        pconf.Settings.from_env({name: value})


def test_replace_ignores_unset_flags():
    settings = pconf.Settings(seed=1, jobs=2)
    assert settings.replace(seed=None, jobs=4) == pconf.Settings(seed=1, jobs=4)


def test_process_wide_settings():
    previous = pconf.get_settings()
    try:
        pconf.set_settings(pconf.Settings(seed=99))
        assert pconf.get_settings().seed == 99
    finally:
        pconf.set_settings(previous)
