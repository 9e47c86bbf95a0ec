"""
paleyclique.config
~~~~~~~~~~~~~~~~~~

Settings read from the environment.

    * ``CAYLEY_MAX_FIELD_BITS`` - fields have at most ``2 ** bits`` elements
      (default 20, enough for the F_{q^4} tower up to q = 31),
    * ``CAYLEY_SEED`` - seed of the random set samplers (default 12345),
    * ``CAYLEY_JOBS`` - worker processes for grids and clique searches
      (default: number of processors).

Command line flags override the environment via `Settings.replace`.
"""

import os
import dataclasses

from . import errors

DEFAULT_MAX_FIELD_BITS = 20
DEFAULT_SEED = 12345


def _int_from_env(environ, name, default, minimum):
    raw = environ.get(name)
    if raw is None or raw == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        raise errors.UsageError(
            '{} must be an integer, got {!r}'.format(name, raw)
        ) from None
    if value < minimum:
        raise errors.UsageError(
            '{} must be >= {}, got {}'.format(name, minimum, value)
        )
    return value


@dataclasses.dataclass(frozen=True)
class Settings:
    max_field_bits: int = DEFAULT_MAX_FIELD_BITS
    seed: int = DEFAULT_SEED
    jobs: int = 1

    @property
    def max_field_size(self):
        return 1 << self.max_field_bits

    @classmethod
    def from_env(cls, environ=None):
        if environ is None:
            environ = os.environ
        return cls(
            max_field_bits=_int_from_env(environ, 'CAYLEY_MAX_FIELD_BITS',
                                         DEFAULT_MAX_FIELD_BITS, 1),
            seed=_int_from_env(environ, 'CAYLEY_SEED', DEFAULT_SEED, 0),
            jobs=_int_from_env(environ, 'CAYLEY_JOBS', os.cpu_count() or 1, 1),
        )

    def replace(self, **changes):
        changes = {k: v for k, v in changes.items() if v is not None}
        return dataclasses.replace(self, **changes)


_settings = None


def get_settings():
    """Process-wide settings, read from the environment on first use."""
    global _settings  # pylint: disable=global-statement
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def set_settings(settings):
    global _settings  # pylint: disable=global-statement
    _settings = settings
