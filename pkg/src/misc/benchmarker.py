import json
import sys
from collections import defaultdict
from contextlib import contextmanager
from pathlib import Path
from time import perf_counter


class Benchmarker:
    """Wall-clock timings per phase of a run (model, automaton, distribution)."""

    def __init__(self):
        self.execution_times = defaultdict(list)

    @contextmanager
    def time(self, tag: str, num_calls: int = 1):
        try:
            start_time = perf_counter()
            yield
        finally:
            end_time = perf_counter()
            for _ in range(num_calls):
                self.execution_times[tag].append((end_time - start_time) / num_calls)

    def dump(self, path: Path) -> None:
        path.parent.mkdir(exist_ok=True, parents=True)
        with path.open("w") as f:
            json.dump(dict(self.execution_times), f)

    def summarize(self) -> None:
        for tag, times in self.execution_times.items():
            average = sum(times) / len(times)
            print(
                f"{tag}: {len(times)} calls, avg. {average:.6f} seconds per call",
                file=sys.stderr,
            )

