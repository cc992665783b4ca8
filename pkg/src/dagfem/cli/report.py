from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from typing import Any

from .inputs import jsonable

PASS, FAIL, ERROR = "pass", "fail", "error"
EXIT = {PASS: 0, FAIL: 1, ERROR: 2}


@dataclass
class Report:
    command: str
    inputs: list = field(default_factory=list)
    verdict: str = PASS
    witnesses: list = field(default_factory=list)
    result: Any = None
    timing: dict = field(default_factory=dict)

    def to_dict(self, with_timing: bool = True) -> dict:
        d = {
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "witnesses": jsonable(self.witnesses),
            "result": jsonable(self.result),
        }
        if with_timing:
            d["timing"] = self.timing
        return d

    def to_json(self, with_timing: bool = True) -> str:
        return json.dumps(self.to_dict(with_timing), indent=2, ensure_ascii=False) + "\n"

    @property
    def exit_code(self) -> int:
        return EXIT[self.verdict]

    def summary(self) -> str:
        line = f"{self.command}: {self.verdict.upper()}"
        if self.witnesses:
            w = self.witnesses[0]
            line += f" ({w.get('check', '')}: {w.get('detail', '')})"
        return line


def witness(check: str, detail: str, cells: Any) -> dict:
    """A failure witness; ``cells`` names the offending cells by id."""
    if cells is None or cells == () or cells == []:
        cells = [detail]
    return {"check": check, "detail": detail, "cells": cells}


def emit(report: Report, out=None, err=None) -> None:
    out = out or sys.stdout
    err = err or sys.stderr
    out.write(report.to_json())
    err.write(report.summary() + "\n")
