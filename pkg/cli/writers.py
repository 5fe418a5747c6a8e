import csv
import json
import sys
from contextlib import contextmanager
from typing import Any, Iterable, Iterator, TextIO

import click

from config import GlobalConfig


@contextmanager
def open_output(path: str | None) -> Iterator[TextIO]:
    """Yield a text handle for path, standard output for None or "-"."""
    if path in (None, "-"):
        yield sys.stdout
        sys.stdout.flush()
        return
    with open(path, "w", newline="") as handle:
        yield handle


def write_csv(
    path: str | None,
    description: str,
    columns: list[str],
    rows: Iterable[Iterable[Any]],
):
    """
    CSV with a version header line: "# pa-secdeg v1 <description>", then the
    column names, then one line per row.
    """
    with open_output(path) as handle:
        handle.write(f"# {GlobalConfig.VERSION_TAG} {description}\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)


def write_json(path: str | None, payload: dict[str, Any]):
    """JSON document carrying "version", terminated by a newline."""
    document = {"version": GlobalConfig.VERSION_TAG, **payload}
    with open_output(path) as handle:
        handle.write(json.dumps(document, indent=2, default=str) + "\n")


def emit(level: str, event: str, **fields):
    """One diagnostic JSON line on standard error."""
    click.echo(json.dumps({"level": level, "event": event, **fields}, default=str), err=True)
