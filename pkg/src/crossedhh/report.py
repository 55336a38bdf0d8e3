"""Pass/fail reports with witnesses, shared by every verifier."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .field import Residue


def to_plain(value):
    """Convert witness payloads into JSON-ready values (scalars as exact strings)."""
    if isinstance(value, (Fraction, Residue)):
        return str(value)
    if isinstance(value, np.ndarray):
        return [to_plain(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (np.integer,)):
        return int(value)
    return value


@dataclass
class Check:
    name: str
    passed: bool
    witness: dict | None = None
    detail: str = ""
    seconds: float = 0.0

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self, timing: bool = False) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = to_plain(self.witness)
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "Check":
        return cls(d["name"], d["status"] == "pass", d.get("witness"), d.get("detail", ""), d.get("seconds", 0.0))


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, witness=None, detail="", seconds=0.0) -> Check:
        check = Check(name, bool(passed), witness, detail, seconds)
        self.checks.append(check)
        return check

    @contextmanager
    def timed(self, name, detail=""):
        """Run a block that sets ``box['witness']`` on the first failure."""
        box = {"witness": None}
        start = time.perf_counter()
        yield box
        self.add(name, box["witness"] is None, box["witness"], detail, time.perf_counter() - start)

    def __getitem__(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list:
        return [c.name for c in self.checks]

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [c.to_dict(timing) for c in self.checks],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(d["title"], [Check.from_dict(c) for c in d["checks"]])

    def render(self) -> str:
        width = max((len(c.name) for c in self.checks), default=0)
        lines = [f"== {self.title}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            line = f"  {c.name:<{width}}  {c.status.upper()}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
            if c.witness is not None:
                lines.append(f"  {'':<{width}}  witness: {to_plain(c.witness)}")
        return "\n".join(lines)
