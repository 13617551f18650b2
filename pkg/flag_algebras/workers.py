"""Batching of large search spaces, optionally across worker processes."""
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
Result = TypeVar("Result")

CHUNK_SIZE = 4096


def chunks(
    iterable: Iterable[T], n: int  # pylint: disable=invalid-name
) -> Iterable[list[T]]:
    """Iters in batches of a maximum of `n` elements."""
    iterator = iter(iterable)

    while True:
        chunk = list(x for _, x in zip(range(n), iterator))

        if not chunk:
            return

        yield chunk


def map_chunks(
    function: Callable[[list[T]], Result],
    items: Iterable[T],
    jobs: int = 1,
    size: int = CHUNK_SIZE,
) -> list[Result]:
    """
    Applies `function` to consecutive batches of `items`. Results keep the batch
    order whatever the number of workers. `function` must be picklable when
    `jobs > 1`.
    """
    batches = chunks(items, size)
    if jobs <= 1:
        return [function(batch) for batch in batches]

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(function, batches))
