"""Outcome record for the acceptance criteria, reported at the end of the run."""
import time
from contextlib import contextmanager

RESULTS = {}


@contextmanager
def criterion(number, name):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        seconds = time.perf_counter() - start
        RESULTS[number] = (name, ok, seconds)
        print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {name} ({seconds:.2f}s)")
