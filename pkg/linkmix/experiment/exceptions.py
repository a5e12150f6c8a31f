from typing import Optional


class ConfigError(ValueError):
    """
    Invalid experiment configuration.

    :param message: What is wrong.
    :param section: INI section of the offending entry.
    :param key: Key of the offending entry.
    :param line: Line number, when the parser knows it.
    """

    def __init__(self, message: str, section: Optional[str] = None, key: Optional[str] = None,
                 line: Optional[int] = None):
        location = []
        if section is not None:
            location.append(f'[{section}]' + (f' {key}' if key is not None else ''))
        if line is not None:
            location.append(f'line {line}')
        ValueError.__init__(self, f'{", ".join(location)}: {message}' if location else message)
        self.section = section
        self.key = key
        self.line = line
