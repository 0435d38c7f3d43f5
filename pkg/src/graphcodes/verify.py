"""Certification engine: is a family pairwise good (or dual) for a predicate?

Pairwise checks walk index pairs (i, j), i < j, in lexicographic order and
report the first failing pair as a deterministic witness; parallel runs
reduce worker-local minima so the witness never depends on the worker count.
"""

from __future__ import annotations

import multiprocessing
import random
from dataclasses import dataclass

from .core import LabeledGraph
from .errors import CapabilityError, DomainError
from .family import GraphFamily, ImplicitFamily
from .linalg import LinearFamily
from .predicates import Predicate

PAIR_PARALLEL_THRESHOLD = 200_000
CROSS_PRODUCT_BUDGET = 1 << 24


@dataclass(frozen=True, slots=True)
class VerifyReport:
    """Outcome of a verification run.

    ``witness`` is the lexicographically first failing index pair together
    with the offending symmetric difference; on failure ``pairs_checked``
    counts the pairs up to and including the witness."""

    passed: bool
    mode: str
    pairs_checked: int
    witness: tuple[tuple[int, int], LabeledGraph] | None

    def __post_init__(self) -> None:
        if self.passed != (self.witness is None):
            raise DomainError("pass verdict and witness disagree")


def _pair_rank(i: int, j: int, m: int) -> int:
    """1-based position of (i, j) in lexicographic pair order."""
    return i * (2 * m - i - 1) // 2 + (j - i)


def _scan_chunk(args) -> tuple[int, int] | None:
    n, masks, pred, expect, i_lo, i_hi = args
    test = pred.test_mask
    m = len(masks)
    for i in range(i_lo, i_hi):
        mi = masks[i]
        for j in range(i + 1, m):
            if test(n, mi ^ masks[j]) != expect:
                return i, j
    return None


def _chunk_rows(m: int, chunks: int) -> list[tuple[int, int]]:
    """Split rows 0..m-2 into ranges of roughly equal pair counts."""
    total = m * (m - 1) // 2
    target = max(1, total // chunks)
    ranges = []
    start = 0
    acc = 0
    for i in range(m - 1):
        acc += m - 1 - i
        if acc >= target or i == m - 2:
            ranges.append((start, i + 1))
            start = i + 1
            acc = 0
    return ranges


def _scan_pairs(
    n: int, masks: list[int], pred: Predicate, expect: bool, workers: int
) -> tuple[int, int] | None:
    m = len(masks)
    total = m * (m - 1) // 2
    if workers > 1 and total >= PAIR_PARALLEL_THRESHOLD:
        ranges = _chunk_rows(m, workers * 8)
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(workers) as pool:
            jobs = ((n, masks, pred, expect, lo, hi) for lo, hi in ranges)
            for result in pool.imap(_scan_chunk, jobs):
                if result is not None:
                    pool.terminate()
                    return result
        return None
    test = pred.test_mask
    for i in range(m - 1):
        mi = masks[i]
        for j in range(i + 1, m):
            if test(n, mi ^ masks[j]) != expect:
                return i, j
    return None


def _run_pairwise(
    fam: GraphFamily, pred: Predicate, expect: bool, mode: str, workers: int
) -> VerifyReport:
    if len(fam) < 2:
        raise DomainError("need at least 2 graphs to verify")
    masks = fam.masks()
    m = len(masks)
    try:
        failure = _scan_pairs(fam.n, masks, pred, expect, workers)
    except CapabilityError as exc:
        raise CapabilityError(f"{exc} (while verifying {m} graphs)") from exc
    if failure is None:
        return VerifyReport(True, mode, m * (m - 1) // 2, None)
    i, j = failure
    return VerifyReport(
        False, mode, _pair_rank(i, j, m),
        ((i, j), LabeledGraph(fam.n, masks[i] ^ masks[j])),
    )


def verify_family(fam: GraphFamily, pred: Predicate, workers: int = 1) -> VerifyReport:
    """Check that every pairwise symmetric difference satisfies the predicate."""
    return _run_pairwise(fam, pred, True, "pairwise", workers)


def verify_dual_family(
    fam: GraphFamily, pred: Predicate, workers: int = 1
) -> VerifyReport:
    """Check that no pairwise symmetric difference satisfies the predicate."""
    return _run_pairwise(fam, pred, False, "dual", workers)


def verify_linear_family(fam: LinearFamily, pred: Predicate) -> VerifyReport:
    """Check every nonzero span member; equivalent to pairwise verification
    because differences of span elements range over the whole span.

    A failing member at span index i is witnessed as the pair (0, i): the
    sorted span always places the empty graph at index 0."""
    masks = fam.span_masks()
    test = pred.test_mask
    for idx in range(1, len(masks)):
        if not test(fam.n, masks[idx]):
            return VerifyReport(
                False, "linear", idx, ((0, idx), LabeledGraph(fam.n, masks[idx]))
            )
    return VerifyReport(True, "linear", len(masks) - 1, None)


def verify_dual_sampled(
    fam: ImplicitFamily | GraphFamily,
    pred: Predicate,
    pairs: int = 1000,
    seed: int = 0,
) -> VerifyReport:
    """Spot-check a (possibly implicit) dual family on seeded random pairs.

    Samples ``pairs`` distinct member pairs; sampled pair t is reported with
    indices (2t, 2t+1).  A pass is evidence, not a certificate."""
    if pairs < 1:
        raise DomainError("need at least one sampled pair")
    rng = random.Random(seed)
    if isinstance(fam, GraphFamily):
        if len(fam) < 2:
            raise DomainError("need at least 2 graphs to verify")
        draw = lambda: rng.choice(fam.graphs)  # noqa: E731
    else:
        if fam.log2_size < 1:
            raise DomainError("need at least 2 graphs to verify")
        draw = lambda: fam.sample(rng)  # noqa: E731
    test = pred.test_mask
    for t in range(pairs):
        a = draw()
        b = draw()
        while b.bits == a.bits:
            b = draw()
        diff = a.bits ^ b.bits
        if test(fam.n, diff):
            return VerifyReport(
                False, "dual-sampled", t + 1,
                ((2 * t, 2 * t + 1), LabeledGraph(fam.n, diff)),
            )
    return VerifyReport(True, "dual-sampled", pairs, None)


def cross_difference_distinct(
    a: GraphFamily, b: GraphFamily, budget: int = CROSS_PRODUCT_BUDGET
) -> bool:
    """Whether all |A| * |B| differences G xor T (G in A, T in B) are distinct.

    Callers pair a good family with a dual family for the same predicate;
    overlapping families violate that premise and are rejected."""
    if a.n != b.n:
        raise DomainError("families live on different vertex counts")
    a_masks = a.masks()
    b_masks = b.masks()
    if len(a_masks) * len(b_masks) > budget:
        raise CapabilityError(
            f"{len(a_masks)} * {len(b_masks)} differences exceed the budget {budget}"
        )
    if len(set(a_masks) & set(b_masks)) >= 2:
        raise DomainError(
            "families share two or more graphs; good/dual premise violated"
        )
    seen: set[int] = set()
    for ma in a_masks:
        for mb in b_masks:
            seen.add(ma ^ mb)
    return len(seen) == len(a_masks) * len(b_masks)
