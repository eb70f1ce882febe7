"""Exact-arithmetic weak Hopf algebra kernel."""

import json
from dataclasses import dataclass

from ._whopf import WhopfError, catalog_text, identities, task_ops
from . import _whopf

__all__ = ["Result", "WhopfError", "catalog_text", "identities", "run", "run_file", "task_ops"]


@dataclass
class Result:
    exit_code: int
    report: dict
    text: str

    @property
    def ok(self) -> bool:
        return self.exit_code == 0


def run(document, op=None, task=None, max_enum=10_000_000, threads=1) -> Result:
    """Runs a task document given as a dict or JSON string."""
    text = document if isinstance(document, str) else json.dumps(document)
    code, report, out = _whopf.run_json(text, op, task, max_enum, threads)
    return Result(code, json.loads(report), out)


def run_file(path, op=None, task=None, max_enum=10_000_000, threads=1) -> Result:
    code, report, out = _whopf.run_file(str(path), op, task, max_enum, threads)
    return Result(code, json.loads(report), out)
