#!/usr/bin/env python3

# Copyright (c) Facebook, Inc. and its affiliates.
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from queue import Queue
from threading import Thread
from typing import Any, Callable, List, Optional, Sequence, Tuple

from kodaira.core.logging import logger

RUN_COMMAND = "run"
CLOSE_COMMAND = "close"


class _WorkerFailure:
    def __init__(self, error: BaseException) -> None:
        self.error = error


class ThreadedGridRunner:
    r"""Fans the points of a sweep grid out over worker threads and gathers
    the results back in grid order.

    Every grid point is an independent pure computation, so the threads share
    nothing but their command and result queues. Exceptions raised by
    :p:`job_fn` are carried back to the calling thread and re-raised there.
    """

    def __init__(
        self, job_fn: Callable[[Any], Any], num_workers: int = 1
    ) -> None:
        r"""..

        :param job_fn: function evaluated on every grid point.
        :param num_workers: number of worker threads.
        """
        assert num_workers > 0, "number of workers should be greater than 0"
        self._num_workers = num_workers
        self._is_closed = True
        (
            self._connection_read_fns,
            self._connection_write_fns,
        ) = self._spawn_workers(job_fn)
        self._is_closed = False

    @property
    def num_workers(self) -> int:
        return self._num_workers

    @staticmethod
    def _worker(
        connection_read_fn: Callable,
        connection_write_fn: Callable,
        job_fn: Callable[[Any], Any],
    ) -> None:
        r"""thread worker evaluating grid points."""
        command, data = connection_read_fn()
        while command != CLOSE_COMMAND:
            if command == RUN_COMMAND:
                try:
                    connection_write_fn(job_fn(data))
                except Exception as e:  # noqa: B902
                    connection_write_fn(_WorkerFailure(e))
            else:
                raise NotImplementedError
            command, data = connection_read_fn()

    def _spawn_workers(
        self, job_fn: Callable[[Any], Any]
    ) -> Tuple[List[Callable[[], Any]], List[Callable[[Any], None]]]:
        parent_read_queues, parent_write_queues = zip(
            *[(Queue(), Queue()) for _ in range(self._num_workers)]
        )
        self._workers = []
        for parent_read_queue, parent_write_queue in zip(
            parent_read_queues, parent_write_queues
        ):
            thread = Thread(
                target=self._worker,
                args=(parent_write_queue.get, parent_read_queue.put, job_fn),
            )
            self._workers.append(thread)
            thread.daemon = True
            thread.start()
        return (
            [q.get for q in parent_read_queues],
            [q.put for q in parent_write_queues],
        )

    def map(
        self,
        points: Sequence[Any],
        progress: Optional[Callable[[int], Any]] = None,
    ) -> List[Any]:
        r"""Evaluate the job on every point; results keep the order of
        :p:`points`. :p:`progress` receives the size of every finished batch.
        """
        results = []
        for start in range(0, len(points), self._num_workers):
            batch = points[start : start + self._num_workers]
            for write_fn, point in zip(self._connection_write_fns, batch):
                write_fn((RUN_COMMAND, point))
            for read_fn, _ in zip(self._connection_read_fns, batch):
                results.append(read_fn())
            if progress is not None:
                progress(len(batch))
        for point, result in zip(points, results):
            if isinstance(result, _WorkerFailure):
                logger.info("grid point {} failed".format(point))
                raise result.error
        return results

    def close(self) -> None:
        if self._is_closed:
            return
        for write_fn in self._connection_write_fns:
            write_fn((CLOSE_COMMAND, None))
        for thread in self._workers:
            thread.join()
        self._is_closed = True

    def __del__(self):
        self.close()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()
