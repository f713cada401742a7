"""Order-k transition statistics built from circular corpus windows."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True)
class TransitionTable:
    """Per-state successor counts.

    Counts stay exact integers end to end: the code-tree construction
    downstream consumes integer weights, so no float ever enters the
    pipeline and identical corpora always produce identical tables.
    """

    order: int
    rows: Mapping[str, Mapping[str, int]]

    @property
    def state_count(self) -> int:
        return len(self.rows)

    def total_transitions(self) -> int:
        return sum(sum(dist.values()) for dist in self.rows.values())


def build_table(windows: Iterable[tuple[str, str]], k: int) -> TransitionTable:
    """Tally exact multiset counts of (state, next) pairs.

    No smoothing and no pruning: a transition seen once is a legitimate
    outcome and gets a real (if long) codeword.
    """
    rows: dict[str, dict[str, int]] = {}
    for state, nxt in windows:
        if len(state) != k:
            raise ValueError(f"window state {state!r} does not match order {k}")
        row = rows.get(state)
        if row is None:
            row = rows[state] = {}
        row[nxt] = row.get(nxt, 0) + 1
    return TransitionTable(order=k, rows=rows)


def state_closure_check(table: TransitionTable) -> bool:
    """True iff every transition lands on a state that is itself a key.

    Tables built from circular windows always pass; a table that fails
    could strand the generator in a state with no code tree.
    """
    rows = table.rows
    for state, dist in rows.items():
        tail = state[1:]
        for nxt in dist:
            if tail + nxt not in rows:
                return False
    return True
