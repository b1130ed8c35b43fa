"""
Sample orchestration utilities.

Functions:
    map_samples: Run a per-index task over a sample range, optionally on threads
        and with a progress bar, returning results in index order.

Requirements:
    tqdm: Install with `pip install rotcocycle[progress]` for progress bars.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ThreadPoolExecutor
from typing import Any, TypeVar

from .logging_config import get_logger


__all__ = ["map_samples"]

T = TypeVar("T")

logger = get_logger(__name__)

_TQDM_MISSING_MSG = "tqdm is required for progress bars. Install with: pip install tqdm or pip install rotcocycle[progress]"


def _require_tqdm() -> Any:
    try:
        import tqdm
    except ImportError as exc:  # pragma: no cover - exercised via map_samples(progress=True)
        raise RuntimeError(_TQDM_MISSING_MSG) from exc
    return tqdm


def _with_progress(results: Iterable[T], total: int, desc: str) -> Iterator[T]:
    tqdm = _require_tqdm()
    return iter(tqdm.tqdm(results, total=total, desc=desc, leave=False))


def map_samples(
    task: Callable[[int], T],
    count: int,
    workers: int = 1,
    progress: bool = False,
    desc: str = "",
) -> list[T]:
    """Evaluate ``task(0..count-1)`` and return results in index order.

    Args:
        task: Pure function of the sample index.
        count: Number of samples.
        workers: Thread count; 1 runs inline.
        progress: Show a tqdm progress bar.
        desc: Progress-bar label.

    Returns:
        list: ``[task(0), ..., task(count - 1)]`` regardless of ``workers``.

    Raises:
        RuntimeError: If ``progress`` is requested and tqdm is not installed.
    """
    if workers <= 1:
        results: Iterable[T] = map(task, range(count))
        if progress:
            results = _with_progress(results, count, desc)
        return list(results)
    logger.debug(f"{desc}: {count} samples on {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        results = executor.map(task, range(count))
        if progress:
            results = _with_progress(results, count, desc)
        return list(results)
