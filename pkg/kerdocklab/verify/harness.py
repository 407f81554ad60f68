#!/usr/bin/env python3

# std
import json
import multiprocessing
import os
import time
from typing import Dict, Iterable, List, Optional

# 3rd party
import pandas as pd
import tqdm.auto

# ours
from kerdocklab.result import AbstractResult
from kerdocklab.util.metadata import failsafe_serialize
from kerdocklab.util.testing import is_testing_mode
from kerdocklab.verify.claim import (
    Claim,
    ClaimResult,
    EFFORTS,
    FAIL,
    FULL,
    PASS,
    QUICK,
    SKIPPED,
)
from kerdocklab.verify.factory import CodeFactory
from kerdocklab.verify.registry import default_claims
from kerdocklab.worker import AbstractWorker

#: Environment variable with the default number of worker processes
KERDOCKLAB_THREADS_ENV = "KERDOCKLAB_THREADS"


def _evaluate(job) -> ClaimResult:
    """ Worker function, has to be global to be sent to the pool. """
    claim, factory = job
    start = time.perf_counter()
    result = claim.evaluate(factory)
    result.runtime_ms = round((time.perf_counter() - start) * 1000, 3)
    return result


class VerificationReport(AbstractResult):
    """ Outcome of :meth:`VerificationHarness.run`. """

    def __init__(self, results: List[ClaimResult], md):
        super().__init__()
        self.results = results
        self.md = md

    def __getitem__(self, claim_id: str) -> ClaimResult:
        for result in self.results:
            if result.id == claim_id:
                return result
        raise KeyError(claim_id)

    @property
    def df(self) -> pd.DataFrame:
        """ One row per claim: status, mode and runtime. """
        return pd.DataFrame(
            [
                {
                    "id": r.id,
                    "status": r.status,
                    "mode": r.mode,
                    "runtime_ms": r.runtime_ms,
                }
                for r in self.results
            ]
        ).set_index("id")

    @property
    def counts(self) -> Dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for r in self.results:
            out[r.status] += 1
        return out

    @property
    def passed(self) -> bool:
        return not any(r.failed for r in self.results)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_dict(self, include_timing: bool = True) -> dict:
        meta = {
            "effort": self.md["effort"],
            "counts": self.counts,
            "version": self.md["git"]["version"],
        }
        if include_timing:
            meta["time"] = self.md["time"]
            meta["run_time"] = self.md["run_time"]
            meta["git"] = dict(self.md["git"])
        return {
            "claims": [r.to_dict(include_timing=include_timing) for r in self.results],
            "meta": meta,
        }

    def to_json(self, include_timing: bool = True, **kwargs) -> str:
        """ Without timing, the report of a given claim set is identical
        between runs. """
        kwargs.setdefault("indent", 2)
        kwargs.setdefault("sort_keys", True)
        return json.dumps(
            failsafe_serialize(self.to_dict(include_timing=include_timing)),
            **kwargs
        )


class VerificationHarness(AbstractWorker):
    """ Runs the registered claims and reports pass, fail or skip for each.

    Usage example:

    .. code-block:: python

        import kerdocklab as kl

        h = kl.verify.VerificationHarness()
        h.set_effort("quick")
        h.set_scope({"kerdock": [4]})
        r = h.run()
        r.df
        r.write("report.json")

    Claims of effort ``"full"`` are reported as skipped when running with
    effort ``"quick"``; so are claims whose family and ``m`` are not in the
    scope.
    """

    def __init__(self, claims: Optional[List[Claim]] = None):
        super().__init__()
        self._claims = default_claims() if claims is None else list(claims)
        self._factory = CodeFactory()
        self._no_workers = None  # type: Optional[int]
        self._progress_bar = False
        self._tqdm_kwargs = {}
        self.set_effort(QUICK)
        self.set_scope(None)
        self.set_claims(None)

    @property
    def claims(self) -> List[Claim]:
        return list(self._claims)

    # **************************************************************************
    # Settings
    # **************************************************************************

    def set_effort(self, effort: str) -> None:
        """ ``"quick"`` or ``"full"``. """
        if effort not in EFFORTS:
            raise ValueError(
                "Effort must be one of {}, got {!r}.".format(EFFORTS, effort)
            )
        self.md["effort"] = effort

    def set_scope(self, scope: Optional[Dict[str, Iterable[int]]]) -> None:
        """ Restrict the claims to families and values of ``m``, e.g.
        ``{"kerdock": [4, 6]}``. Claims without a family are always in
        scope. None for no restriction. """
        if scope is None:
            self.md["scope"] = None
        else:
            self.md["scope"] = {
                family: sorted(int(m) for m in ms) for family, ms in scope.items()
            }

    def set_claims(self, ids: Optional[Iterable[str]]) -> None:
        """ Only run the claims with these ids, reported in this order (None
        for all, in registry order). """
        if ids is None:
            self.md["claims"] = None
            return
        ids = list(ids)
        known = {c.id for c in self._claims}
        unknown = [i for i in ids if i not in known]
        if unknown:
            raise ValueError("Unknown claim(s): {}.".format(", ".join(unknown)))
        self.md["claims"] = ids

    def set_factory(self, factory: CodeFactory) -> None:
        """ Source of the codes, e.g. with overrides for fault injection. """
        self._factory = factory

    def set_no_workers(self, no_workers: Optional[int]) -> None:
        """ Set the number of worker processes. Defaults to the environment
        variable ``KERDOCKLAB_THREADS`` and then to the number of CPUs (to 1
        in testing mode). 1 runs everything in the current process. """
        self._no_workers = no_workers

    def set_progress_bar(self, show: bool, **kwargs) -> None:
        """ Settings for progress bar

        Args:
            show: Show progress bar?
            **kwargs: Keyword arguments for tqdm progress bar
        """
        self._progress_bar = show
        self._tqdm_kwargs = kwargs

    # **************************************************************************
    # Run
    # **************************************************************************

    def _skip_reason(self, claim: Claim) -> Optional[str]:
        if claim.skip_reason:
            return claim.skip_reason
        if claim.effort == FULL and self.md["effort"] == QUICK:
            return "needs full effort"
        scope = self.md["scope"]
        if scope is not None and claim.family is not None:
            if claim.m not in scope.get(claim.family, []):
                return "out of scope"
        return None

    def _resolve_no_workers(self) -> int:
        no_workers = self._no_workers
        if not no_workers:
            env = os.environ.get(KERDOCKLAB_THREADS_ENV)
            if env:
                no_workers = int(env)
        if not no_workers and is_testing_mode():
            no_workers = 1
        if not no_workers:
            no_workers = os.cpu_count()
        if not no_workers:
            self.log.warning(
                "os.cpu_count() could not determine number of cores. Falling "
                "back to single core mode."
            )
            no_workers = 1
        return no_workers

    def run(self) -> VerificationReport:
        self._stamp()
        selected = self.md["claims"]
        if selected is None:
            claims = list(self._claims)
        else:
            # in the order of set_claims, duplicates dropped
            by_id = {c.id: c for c in self._claims}
            claims = [by_id[i] for i in dict.fromkeys(selected)]

        results = {}  # type: Dict[str, ClaimResult]
        jobs = []
        for claim in claims:
            reason = self._skip_reason(claim)
            if reason:
                results[claim.id] = claim.skipped(reason)
            else:
                jobs.append((claim, self._factory))

        start_time = time.time()
        no_workers = min(self._resolve_no_workers(), max(len(jobs), 1))
        if no_workers >= 2:
            evaluated = self._run_multicore(jobs, no_workers)
        else:
            evaluated = self._run_singlecore(jobs)
        for result in evaluated:
            results[result.id] = result
        self.md["run_time"] = time.time() - start_time

        ordered = [results[c.id] for c in claims]
        for result in ordered:
            if result.failed:
                self.log.error("Claim {} failed: {}".format(result.id, result.diff()))
        report = VerificationReport(ordered, self.md)
        self.log.info("Claims: {}.".format(report.counts))
        return report

    def _iterate(self, results, total: int):
        if not self._progress_bar:
            return results
        tqdm_kwargs = dict(desc="Verifying: ", unit=" claim", total=total)
        tqdm_kwargs.update(self._tqdm_kwargs)
        return tqdm.auto.tqdm(results, **tqdm_kwargs)

    def _run_multicore(self, jobs, no_workers: int) -> List[ClaimResult]:
        pool = multiprocessing.Pool(processes=no_workers)
        results = pool.imap(_evaluate, jobs)
        pool.close()
        self.log.info(
            "Started queue with {} claim(s) distributed over up to {} "
            "worker(s).".format(len(jobs), no_workers)
        )
        out = list(self._iterate(results, len(jobs)))
        pool.join()
        return out

    def _run_singlecore(self, jobs) -> List[ClaimResult]:
        self.log.info(
            "Started queue with {} claim(s) in single core mode.".format(len(jobs))
        )
        return [_evaluate(job) for job in self._iterate(jobs, len(jobs))]
