import math


def db_to_linear(value_db: float) -> float:
    """
    Power ratio in dB to linear scale, ``10 ** (x / 10)``.

    >>> db_to_linear(0.0)
    1.0
    >>> db_to_linear(30.0)
    1000.0
    """
    return 10.0 ** (float(value_db) / 10.0)


def linear_to_db(value: float) -> float:
    if value <= 0:
        raise ValueError(f'Linear power ratio should be positive, but {value!r} found.')
    return 10.0 * math.log10(value)
