"""Brute-force ground truth for the word problem and for block length.

Nothing here uses normal forms. Equality is decided by breadth-first
search through the defining relations, and the minimum number of
complete blocks by trying every shuffle and every way of cutting it.
Both are exponential and meant for tiny inputs only.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import BudgetExceeded
from .normalform import Letter, check_word


@dataclass(frozen=True)
class ClosureConfig:
    max_word_length: int = 8
    max_visited: int = 2_000_000

    def __post_init__(self):
        if self.max_word_length < 1 or self.max_visited < 1:
            raise ValueError("closure bounds must be positive")


@lru_cache(maxsize=64)
def _relation_data(spec):
    splits = {}
    unit_pairs = []
    for v, m in enumerate(spec.monoids):
        for x in m.non_identity():
            for y in m.non_identity():
                p = m.table[x][y]
                if p == m.identity:
                    unit_pairs.append((Letter(v, x), Letter(v, y)))
                else:
                    splits.setdefault(Letter(v, p), []).append((Letter(v, x), Letter(v, y)))
    return splits, tuple(unit_pairs)


def _strip(spec, word):
    return tuple(x for x in word if x[1] != spec.monoids[x[0]].identity)


def _neighbours(spec, w, max_len, splits, unit_pairs):
    adjacency = spec.graph.adjacency
    n = len(w)
    for i in range(n - 1):
        (a, x), (b, y) = w[i], w[i + 1]
        if a == b:
            m = spec.monoids[a]
            p = m.table[x][y]
            if p == m.identity:
                yield w[:i] + w[i + 2:]
            else:
                yield w[:i] + (Letter(a, p),) + w[i + 2:]
        elif adjacency[a][b]:
            yield w[:i] + (w[i + 1], w[i]) + w[i + 2:]
    if n + 1 <= max_len:
        for i, z in enumerate(w):
            for pair in splits.get(z, ()):
                yield w[:i] + pair + w[i + 1:]
    if n + 2 <= max_len:
        for i in range(n + 1):
            for pair in unit_pairs:
                yield w[:i] + pair + w[i:]


def closure_class(spec, word: Iterable, config: ClosureConfig = ClosureConfig()) -> frozenset:
    """All identity-free words of length at most ``config.max_word_length``
    reachable from ``word`` through the defining relations.

    Identity letters are deleted up front and never reinserted on their
    own. A relation step that creates an identity, like x∘y with xy = 1,
    deletes it in the same move, and its reverse inserts x∘y directly.
    Any path through words containing identities maps onto a path of
    identity-free words that is no longer, so this search is at least as
    complete as one that carries identity letters around.
    """
    start = _strip(spec, check_word(spec, word))
    if len(start) > config.max_word_length:
        raise BudgetExceeded(f"word of length {len(start)} exceeds max_word_length")
    splits, unit_pairs = _relation_data(spec)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for nxt in _neighbours(spec, w, config.max_word_length, splits, unit_pairs):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > config.max_visited:
                    raise BudgetExceeded(f"visited more than {config.max_visited} words")
                queue.append(nxt)
    return frozenset(seen)


def closure_equal(spec, u: Iterable, v: Iterable, config: ClosureConfig = ClosureConfig()) -> bool:
    """Decide [u] = [v] by search; raises BudgetExceeded rather than guess."""
    target = _strip(spec, check_word(spec, v))
    if len(target) > config.max_word_length:
        raise BudgetExceeded(f"word of length {len(target)} exceeds max_word_length")
    return target in closure_class(spec, u, config)


def shuffle_class(spec, word: Iterable, max_visited: int = 1_000_000) -> frozenset:
    word = check_word(spec, word)
    adjacency = spec.graph.adjacency
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            if adjacency[w[i][0]][w[i + 1][0]]:
                nxt = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > max_visited:
                        raise BudgetExceeded(f"shuffle class larger than {max_visited}")
                    queue.append(nxt)
    return frozenset(seen)


def is_reduced(spec, word: Iterable) -> bool:
    """No shuffle of the word admits an identity deletion or a same-vertex merge."""
    word = check_word(spec, word)
    if any(e == spec.monoids[v].identity for v, e in word):
        return False
    return not any(w[i][0] == w[i + 1][0]
                   for w in shuffle_class(spec, word) for i in range(len(w) - 1))


def _min_cuts(spec, w) -> int:
    adjacency = spec.graph.adjacency
    n = len(w)
    best = [0] + [n + 1] * n
    for j in range(1, n + 1):
        # w[i:j] is a complete block iff w[i] commutes with all of w[i+1:j]
        # and w[i+1:j] is one; so stop at the first failure
        for i in range(j - 1, -1, -1):
            if not all(adjacency[w[i][0]][b] for b, _ in w[i + 1:j]):
                break
            best[j] = min(best[j], best[i] + 1)
    return best[n]


def min_blocks(spec, reduced_word: Iterable, max_visited: int = 1_000_000) -> int:
    """Fewest complete blocks whose concatenation is shuffle equivalent to the word."""
    word = check_word(spec, reduced_word)
    if not is_reduced(spec, word):
        raise ValueError("min_blocks needs a reduced word")
    return min((_min_cuts(spec, w) for w in shuffle_class(spec, word, max_visited)), default=0)
