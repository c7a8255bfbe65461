"""Worker pool for parameter sweeps."""

import sys
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, List, Optional, Sequence, TypeVar

from tqdm import tqdm

from qrabi.config import settings
from qrabi.logging import logger

T = TypeVar("T")
R = TypeVar("R")


def run_sweep(
    task: Callable[[int, T], R],
    items: Sequence[T],
    desc: str,
    quiet: bool = False,
    threads: Optional[int] = None,
) -> List[R]:
    """
    Apply task(index, item) to every item on a bounded thread pool.

    Results come back in input order, so the pool size never changes the output.
    The first exception raised by a task cancels the points still queued and is
    re-raised once the running ones finish.
    """
    threads = max(1, threads or settings.runtime.threads)
    workers = min(threads, len(items)) or 1
    logger.info(f"{desc}: {len(items)} points on {workers} worker(s)")

    results: List[Optional[R]] = [None] * len(items)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(task, index, item): index for index, item in enumerate(items)}
        with tqdm(total=len(items), desc=desc, file=sys.stderr, disable=quiet, leave=False) as progress:
            for future in as_completed(futures):
                try:
                    results[futures[future]] = future.result()
                except Exception as e:
                    logger.error(f"{desc}: point {futures[future]} failed ({type(e).__name__}), cancelling the rest")
                    executor.shutdown(wait=False, cancel_futures=True)
                    raise
                progress.update(1)
    return results
