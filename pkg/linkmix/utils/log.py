import logging
import os

_LEVELS = {
    'error': logging.ERROR,
    'warning': logging.WARNING,
    'info': logging.INFO,
    'debug': logging.DEBUG,
}

#: Environment variable controlling the kernel diagnostics level.
LOG_ENV = 'LINKMIX_LOG'


def get_log_level(verbose: bool = False) -> int:
    if verbose:
        return logging.DEBUG

    name = os.environ.get(LOG_ENV, 'info').strip().lower()
    if name not in _LEVELS:
        raise ValueError(f'Unknown {LOG_ENV} level - {name!r}, '
                         f'one of {sorted(_LEVELS)!r} expected.')
    return _LEVELS[name]


def configure_logging(verbose: bool = False) -> int:
    """
    Configure the root logger from ``LINKMIX_LOG`` (``error``, ``info`` or ``debug``).

    :param verbose: Force ``debug`` level regardless of the environment.
    :return: The level which is applied.
    """
    level = get_log_level(verbose)
    logging.basicConfig(level=level, format='%(asctime)s %(levelname)s %(message)s')
    logging.getLogger().setLevel(level)
    return level
