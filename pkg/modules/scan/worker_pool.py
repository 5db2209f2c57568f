import logging
import os
from concurrent.futures import ThreadPoolExecutor

logger = logging.getLogger(__name__)

THREADS_ENV = "CAVITY_TANGLE_THREADS"


class WorkerPool:
    """Process-wide executor for independent scan columns.

    The first construction fixes the worker count; later ones return the
    same instance, with a warning when they ask for a different count.
    """

    _instance = None

    def __new__(cls, max_workers=None):
        if cls._instance is None:
            cls._instance = super(WorkerPool, cls).__new__(cls)
            cls._instance.executor = None
            cls._instance.max_workers = max_workers or _threads_from_env()
        elif max_workers and max_workers != cls._instance.max_workers:
            logger.warning(
                "scan worker pool already runs %d threads, ignoring request for %d",
                cls._instance.max_workers, max_workers,
            )
        return cls._instance

    def get_executor(self):
        if self.executor is None:
            try:
                self.executor = ThreadPoolExecutor(max_workers=self.max_workers)
                logger.info("scan worker pool started with %d threads", self.max_workers)
            except (RuntimeError, ValueError) as e:
                logger.warning("scan worker pool unavailable, running serially: %s", e)
                self.executor = None
        return self.executor

    def map(self, fn, items):
        items = list(items)
        executor = self.get_executor() if self.max_workers > 1 else None
        if executor is None:
            return [fn(item) for item in items]
        return list(executor.map(fn, items))

    @classmethod
    def reset(cls):
        if cls._instance is not None and cls._instance.executor is not None:
            cls._instance.executor.shutdown(wait=True)
        cls._instance = None


def _threads_from_env():
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return min(8, os.cpu_count() or 1)
    try:
        return max(1, int(raw))
    except ValueError:
        logger.warning("ignoring %s=%r, expected an integer", THREADS_ENV, raw)
        return 1
