"""Pass/fail records shared by the verification suite and the CLI."""
from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass


@dataclass
class CheckResult:
    check: str
    passed: bool
    witness: str | None = None
    elapsed_ms: float = 0.0
    summary: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {"check": self.check, "status": self.status, "elapsed_ms": round(self.elapsed_ms, 3)}
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def line(self) -> str:
        text = f"[{self.status.upper()}] {self.check} ({self.elapsed_ms / 1000:.2f}s)"
        if self.summary:
            text += f": {self.summary}"
        if not self.passed and self.witness:
            text += f" -- witness: {self.witness}"
        return text


@contextmanager
def timed():
    box = {}
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        box["ms"] = (time.perf_counter() - t0) * 1000
