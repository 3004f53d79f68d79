"""
Quantification Engine
Ordered, optionally threaded evaluation of law and lemma instances

Points are evaluated in chunks on a thread pool; results (and any
exception) are handed back strictly in enumeration order, so the first
counterexample reported never depends on scheduling or worker count.
"""

import sys
from concurrent.futures import ThreadPoolExecutor
from itertools import islice
from typing import Any, Callable, Dict, Iterable, Iterator, Optional, Tuple, TypeVar

from tqdm import tqdm

from config.settings import ENGINE_SETTINGS, RUNTIME, get_worker_count

P = TypeVar('P')
R = TypeVar('R')


def resolve_workers(workers: Optional[int] = None) -> int:
    if workers is None:
        workers = get_worker_count()
    return max(1, int(workers))


def scan(points: Iterable[P], evaluate: Callable[[P], R], workers: Optional[int] = None,
         desc: Optional[str] = None) -> Iterator[Tuple[P, R]]:
    """
    Evaluate setiap titik dan yield (point, result) sesuai urutan enumerasi

    Args:
        points: Titik kuantifikasi (boleh generator)
        evaluate: Fungsi murni per titik
        workers: Jumlah thread; None berarti dari NONDET_AGG_THREADS
        desc: Label progress bar (--progress)
    """
    workers = resolve_workers(workers)
    chunk_size = ENGINE_SETTINGS['chunk_size']
    iterator = iter(points)
    progress = tqdm(desc=desc, unit='pt', file=sys.stderr, leave=False,
                    disable=not RUNTIME['progress'])
    try:
        if workers == 1:
            for point in iterator:
                result = evaluate(point)
                progress.update(1)
                yield point, result
            return
        with ThreadPoolExecutor(max_workers=workers) as pool:
            while True:
                chunk = list(islice(iterator, chunk_size))
                if not chunk:
                    break
                futures = [pool.submit(evaluate, point) for point in chunk]
                for point, future in zip(chunk, futures):
                    result = future.result()
                    progress.update(1)
                    yield point, result
    finally:
        progress.close()


def find_counterexample(points: Iterable[P], check: Callable[[P], Optional[Dict[str, Any]]],
                        workers: Optional[int] = None,
                        desc: Optional[str] = None) -> Tuple[int, Optional[Dict[str, Any]]]:
    """
    Cari counterexample pertama (urutan enumerasi)

    Args:
        points: Titik kuantifikasi
        check: Mengembalikan None bila titik lolos, atau witness dict

    Returns:
        (jumlah titik yang diperiksa, witness atau None)
    """
    checked = 0
    for _, found in scan(points, check, workers, desc):
        checked += 1
        if found is not None:
            return checked, found
    return checked, None
