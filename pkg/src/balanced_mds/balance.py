"""Column balancing by entry swaps.

Starting from a matrix satisfying (P1) and (P3), repeatedly move a one
from a heaviest column to a lightest column within a single row, picking
a row for which the move preserves (P3).  Such a row always exists while
the weight spread exceeds one, so the loop terminates in at most
(k-1) * floor(n/2) iterations with a matrix that also satisfies (P2).

Tie-breaking is fixed (smallest column index, then smallest row index)
so the whole construction is a pure function of (n, k).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .support import (
    SupportMatrix,
    check_p1,
    check_p3_matching,
    column_weights,
    initial_cyclic_matrix,
)

__all__ = ["SwapRecord", "BalanceTrace", "find_swap_row", "balance", "construct_balanced_support"]


@dataclass(frozen=True)
class SwapRecord:
    """One iteration: the one at (i_s, j_max) moved to (i_s, j_min)."""

    iteration: int
    j_max: int
    j_min: int
    i_s: int
    spread_before: int


@dataclass
class BalanceTrace:
    initial_weights: list[int]
    final_weights: list[int]
    records: list[SwapRecord] = field(default_factory=list)

    def __len__(self):
        return len(self.records)

    def to_log_text(self) -> str:
        """Line-oriented log, one swap per line: "iter j_max j_min i_s spread".

        Indices are 1-based in the log (display convention).
        """
        lines = [
            f"{r.iteration} {r.j_max + 1} {r.j_min + 1} {r.i_s + 1} {r.spread_before}"
            for r in self.records
        ]
        return "\n".join(lines) + ("\n" if lines else "")


def find_swap_row(m: SupportMatrix, j_max: int, j_min: int) -> int:
    """Smallest row index i_s with a one at j_max and a zero at j_min whose
    swap keeps (P3).  (P1) is preserved automatically (row weight unchanged).

    Requires weight(j_max) - weight(j_min) >= 2.  Candidate exhaustion is a
    hard internal error: a legitimate row is guaranteed to exist.
    """
    weights = column_weights(m)
    if weights[j_max] - weights[j_min] < 2:
        raise ValueError(
            f"columns {j_max}/{j_min} have weight gap "
            f"{weights[j_max] - weights[j_min]}, need >= 2"
        )
    ok, witness = check_p3_matching(m)
    if not ok:
        raise ValueError(f"input violates (P3): witness rows {witness.violating_rows}")
    candidates = [
        i for i in range(m.k) if m.bit(i, j_max) and not m.bit(i, j_min)
    ]
    for i in candidates:
        swapped = m.with_swap(i, j_max, j_min)
        ok, _ = check_p3_matching(swapped)
        if ok:
            return i
    raise RuntimeError(
        "internal error: no row preserves (P3) after the swap, which is "
        "provably impossible; please report this as a bug"
    )


def balance(m0: SupportMatrix) -> tuple[SupportMatrix, BalanceTrace]:
    """Run the swap loop until the column-weight spread is at most one.

    The input must satisfy (P1) and (P3); the output satisfies (P1), (P2),
    and (P3), with all column weights in {floor(w), ceil(w)} for
    w = k(n-k+1)/n.
    """
    if not check_p1(m0):
        raise ValueError("input violates (P1): every row weight must be n-k+1")
    ok, witness = check_p3_matching(m0)
    if not ok:
        raise ValueError(f"input violates (P3): witness rows {witness.violating_rows}")

    m = m0
    initial = column_weights(m0)
    trace = BalanceTrace(initial_weights=initial, final_weights=list(initial))
    iteration = 0
    bound = (m.k - 1) * (m.n // 2)
    while True:
        weights = column_weights(m)
        w_max, w_min = max(weights), min(weights)
        if w_max - w_min <= 1:
            break
        iteration += 1
        if iteration > bound:
            raise RuntimeError(
                f"exceeded the iteration bound (k-1)*floor(n/2) = {bound}; "
                "this should be impossible"
            )
        j_max = weights.index(w_max)
        j_min = weights.index(w_min)
        i_s = find_swap_row(m, j_max, j_min)
        m = m.with_swap(i_s, j_max, j_min)
        trace.records.append(SwapRecord(iteration, j_max, j_min, i_s, w_max - w_min))
    trace.final_weights = column_weights(m)
    return m, trace


def construct_balanced_support(n: int, k: int) -> tuple[SupportMatrix, BalanceTrace]:
    """Build the cyclic start matrix and balance it: the result satisfies
    (P1), (P2), and (P3) for any 1 <= k <= n."""
    return balance(initial_cyclic_matrix(n, k))
