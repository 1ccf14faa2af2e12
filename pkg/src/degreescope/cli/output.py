'''Result tables and reports, each stamped with the tool version and the configuration hash.'''

from ..arithmetic import Arithmetic

from dataclasses import dataclass
from enum import StrEnum
from pathlib import Path
import csv
import io
import json
import logging

logger = logging.getLogger(__name__)


class OutputFormat(StrEnum):
    CSV = 'csv'
    JSON = 'json'


@dataclass(frozen=True)
class Provenance:
    command: str
    version: str
    config_sha256: str
    arithmetic: Arithmetic

    def header_lines(self) -> list[str]:
        return [
            f'# degreescope {self.version}',
            f'# command: {self.command}',
            f'# config sha256: {self.config_sha256}',
            f'# arithmetic: {self.arithmetic.value}',
        ]

    def to_dict(self) -> dict:
        return {
            'tool': 'degreescope',
            'version': self.version,
            'command': self.command,
            'config_sha256': self.config_sha256,
            'arithmetic': self.arithmetic.value,
        }


def format_table(columns: list[str], rows: list[list], provenance: Provenance) -> str:
    '''CSV text preceded by `#` provenance lines.'''
    buffer = io.StringIO()
    for line in provenance.header_lines():
        buffer.write(line + '\n')
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(columns)
    writer.writerows(rows)
    return buffer.getvalue()


def format_document(body: dict, provenance: Provenance) -> str:
    return json.dumps({'provenance': provenance.to_dict(), **body}, indent=2) + '\n'


def write_result(out_dir: str,
                 name: str,
                 fmt: OutputFormat,
                 provenance: Provenance,
                 columns: list[str],
                 rows: list[list],
                 extra: dict | None = None) -> Path:
    '''
        Writes `name.csv` or `name.json` into `out_dir`.

        The JSON variant holds the same rows keyed by column plus `extra`; the CSV variant
        holds the rows only.
    '''

    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)

    if OutputFormat(fmt) == OutputFormat.CSV:
        path = directory / f'{name}.csv'
        text = format_table(columns, rows, provenance)
    else:
        path = directory / f'{name}.json'
        body = {'rows': [dict(zip(columns, row)) for row in rows], **(extra or {})}
        text = format_document(body, provenance)

    path.write_text(text, encoding='utf-8')
    logger.info('Wrote %s', path)
    return path


def write_report(out_dir: str, name: str, provenance: Provenance, report: dict) -> Path:
    '''Writes a JSON report into `out_dir`.'''
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f'{name}.json'
    path.write_text(format_document(report, provenance), encoding='utf-8')
    logger.info('Wrote %s', path)
    return path
