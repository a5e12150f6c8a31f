import csv
import io
import logging
import math
import os
import subprocess
from dataclasses import dataclass, field
from typing import List, Optional

from hbutils.string import plural_word

REASON_COLUMN = 'reason'


@dataclass
class ResultTable:
    """
    Sweep result.

    :param columns: Column names of the numeric cells, the sweep axis first.
    :param rows: Numeric cells, ``NaN`` where an evaluation failed.
    :param reasons: One failure description per row, empty when the whole row succeeded.
    :param provenance: Comment lines written ahead of the header.
    """
    columns: List[str]
    rows: List[List[float]] = field(default_factory=list)
    reasons: List[str] = field(default_factory=list)
    provenance: List[str] = field(default_factory=list)

    def column(self, name: str) -> List[float]:
        """
        Values of one column.

        Examples::
            >>> table = ResultTable(['x', 'y'], [[1.0, 2.0], [3.0, 4.0]], ['', ''])
            >>> table.column('y')
            [2.0, 4.0]
        """
        index = self.columns.index(name)
        return [row[index] for row in self.rows]

    def append(self, row: List[float], reason: str = ''):
        if len(row) != len(self.columns):
            raise ValueError(f'{plural_word(len(self.columns), "cell")} expected in a row, but {len(row)} found.')
        self.rows.append([float(x) for x in row])
        self.reasons.append(reason)

    @property
    def failed_rows(self) -> int:
        return sum(1 for reason in self.reasons if reason)


def git_describe(path: Optional[str] = None) -> str:
    """
    ``git describe`` of the source tree, ``unknown`` outside of a git checkout.
    """
    path = path or os.path.dirname(os.path.abspath(__file__))
    try:
        output = subprocess.run(['git', 'describe', '--always', '--dirty', '--tags'], cwd=path,
                                capture_output=True, text=True, timeout=10)
    except (OSError, subprocess.SubprocessError):
        return 'unknown'
    return output.stdout.strip() if output.returncode == 0 and output.stdout.strip() else 'unknown'


def _format_cell(value: float) -> str:
    if math.isnan(value):
        return 'nan'
    return '%.17g' % value


def write_csv(table: ResultTable, path: str):
    """
    Write ``table`` as CSV, provenance as leading ``#`` lines, reals with 17 significant digits.

    :raise OSError: When ``path`` is not writable, the message names the path.
    """
    buffer = io.StringIO()
    for line in table.provenance:
        buffer.write(f'# {line}\r\n' if line else '#\r\n')
    writer = csv.writer(buffer, lineterminator='\r\n')
    writer.writerow([*table.columns, REASON_COLUMN])
    for row, reason in zip(table.rows, table.reasons):
        writer.writerow([*map(_format_cell, row), reason])

    try:
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(buffer.getvalue())
    except OSError as err:
        raise OSError(err.errno, f'Unable to write result table to {path!r}: {err.strerror}', path) from err
    logging.info(f'{plural_word(len(table.rows), "row")} written to {path!r}.')


def read_csv(path: str) -> ResultTable:
    """
    Read a table written by :func:`write_csv`.
    """
    with open(path, 'r', encoding='utf-8', newline='') as f:
        lines = f.read().split('\r\n')

    provenance = []
    while lines and lines[0].startswith('#'):
        provenance.append(lines.pop(0)[2:])
    records = list(csv.reader(line for line in lines if line))
    if not records:
        raise ValueError(f'No header found in {path!r}.')

    header = records[0]
    has_reason = bool(header) and header[-1] == REASON_COLUMN
    columns = header[:-1] if has_reason else header
    table = ResultTable(list(columns), provenance=provenance)
    for record in records[1:]:
        cells = record[:len(columns)]
        table.append([float(x) for x in cells], record[-1] if has_reason else '')
    return table
