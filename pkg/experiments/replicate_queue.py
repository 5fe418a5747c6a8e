import time

from rq.job import Job

from logger import Logger
from queue_controller import QueueController
from .config import ExperimentsConfig
from .errors import ReplicateJobError
from .models import ExperimentConfig
from .replicates import ReplicateStatistics, compute_batch


class ReplicateQueue:

    def __init__(self):
        logger_instance = Logger()
        self.logger = logger_instance.get_logger(name=self.__class__.__name__)

        self.queue_controller = QueueController()
        self.replicate_queue = self.queue_controller.get_queue("replicates")
        self.replicate_worker = self.queue_controller.get_worker("replicates")

    def enqueue_batch(self, cfg: ExperimentConfig, start: int, stop: int) -> Job:
        """
        Add the replicates start .. stop - 1 of cfg to the queue

        Args:
            cfg (ExperimentConfig): experiment the replicates belong to
            start (int): first replicate index
            stop (int): one past the last replicate index

        Returns:
            Job: rq job whose return value is the list of ReplicateStatistics
        """
        return self.replicate_queue.enqueue(
            compute_batch,
            cfg,
            start,
            stop,
            job_timeout=ExperimentsConfig.JOB_TIMEOUT,
        )

    def run_batches(
        self, cfg: ExperimentConfig, start: int, stop: int
    ) -> list[ReplicateStatistics]:
        """
        Enqueue the replicates in batches and wait for all of them; results
        come back in replicate order whatever order the workers finish in.
        """
        size = ExperimentsConfig.BATCH_SIZE
        jobs = [
            self.enqueue_batch(cfg, first, min(first + size, stop))
            for first in range(start, stop, size)
        ]
        self.logger.info(f"Enqueued {len(jobs)} replicate batches")

        replicates = []
        for job in jobs:
            replicates.extend(self._wait(job))
        return replicates

    def _wait(self, job: Job) -> list[ReplicateStatistics]:
        deadline = time.monotonic() + ExperimentsConfig.JOB_TIMEOUT
        while not job.is_finished:
            if job.is_failed:
                message = f"Replicate job {job.id} failed"
                self.logger.error(message)
                raise ReplicateJobError(message)
            if time.monotonic() > deadline:
                raise ReplicateJobError(f"Replicate job {job.id} timed out")
            time.sleep(ExperimentsConfig.POLL_INTERVAL)
            job.refresh()
        return job.return_value()

    def run_worker(self):
        """
        Run a worker to process batches in the replicate queue
        """
        self.replicate_worker.work()
