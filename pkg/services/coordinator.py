import asyncio
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, TypeVar

from models.pydantic_models import CheckResult, RunConfig, VerificationSummary
from services import verification
from store.reference_tables import reference_store

logger = logging.getLogger(__name__)

T = TypeVar("T")

ROW_WORKERS = {
    "inert": verification.inert_row,
    "split": verification.split_row,
}


class TableCoordinator:
    """Fans per-prime work out over a process pool and collects rows in prime order."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.timings: Dict[str, float] = {}

    async def map_primes(self, worker: Callable[[int], T], primes: List[int]) -> List[T]:
        """Apply worker to each prime; results keep the order of primes."""
        if self.config.jobs == 1 or len(primes) <= 1:
            return [worker(p) for p in primes]
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=self.config.jobs) as pool:
            futures = [loop.run_in_executor(pool, worker, p) for p in primes]
            return list(await asyncio.gather(*futures))

    async def build_table(self, which: str, pmax: int) -> List:
        if which not in ROW_WORKERS:
            raise ValueError(f"Unknown table {which!r}")
        primes = verification.primes_in_range(7, pmax, which)
        logger.info("Building %s table for %d primes up to %d", which, len(primes), pmax)
        start = time.perf_counter()
        rows = await self.map_primes(ROW_WORKERS[which], primes)
        self.timings[f"table:{which}"] = time.perf_counter() - start
        for row in rows:
            if reference_store.matches(which, row) is False:
                logger.warning(
                    "Computed %s row for p=%d differs from the reference: %s vs %s",
                    which,
                    row.p,
                    row.dict(),
                    reference_store.get_row(which, row.p).dict(),
                )
        return rows

    async def run_verification(self, check: str, pmin: int, pmax: int) -> Dict:
        if check not in verification.CHECKS:
            raise ValueError(f"Unknown check {check!r}")
        primes = [
            p for p in verification.primes_in_range(pmin, pmax) if verification.applicable(check, p)
        ]
        logger.info("Running %s check over %d primes in [%d, %d]", check, len(primes), pmin, pmax)
        start = time.perf_counter()
        results: List[CheckResult] = await self.map_primes(verification.CHECKS[check], primes)
        self.timings[f"verify:{check}"] = time.perf_counter() - start
        for result in results:
            if not result.passed:
                logger.info("%s check did not hold at p=%d", check, result.p)
        summary: VerificationSummary = verification.summarize(check, pmin, pmax, results)
        return {"summary": summary, "results": results}
