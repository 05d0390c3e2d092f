"""Bookkeeping for the acceptance criteria: one result line per criterion."""

from __future__ import annotations

import functools
import time

RESULTS: dict[int, tuple[str, str, float, str]] = {}


def criterion(number: int, label: str, budget: float):
    """Time the wrapped test, enforce its budget, and record the outcome."""

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                fn(*args, **kwargs)
                elapsed = time.perf_counter() - start
                assert elapsed < budget, f"took {elapsed:.2f} s, budget {budget} s"
            except BaseException as exc:
                elapsed = time.perf_counter() - start
                note = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
                RESULTS[number] = ("FAIL", label, elapsed, note)
                raise
            RESULTS[number] = ("PASS", label, elapsed, "")

        return run

    return wrap


def summary_lines() -> list[str]:
    lines = []
    for number in sorted(RESULTS):
        verdict, label, elapsed, note = RESULTS[number]
        line = f"criterion {number}: {verdict}  {label}  ({elapsed:.2f} s)"
        if note:
            line += f"  -- {note}"
        lines.append(line)
    return lines
