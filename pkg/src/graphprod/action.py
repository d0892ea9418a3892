"""The bounded-block-length action of a graph product on F_k.

F_k is the finite set of elements whose normal form has at most k blocks.
A letter acts on an element by right multiplication, except that an
element is left where it is when the product would need k + 1 blocks.
Extending this letter by letter gives a monoid morphism from the graph
product into the full transformation monoid on F_k.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .errors import SpecMismatch, StateLimitExceeded
from .normalform import Letter, NormalForm, append_letter, check_letter, flatten
from .product import GPElement, GraphProductSpec

DEFAULT_STATE_LIMIT = 1_000_000

Transformation = tuple  # tuple[int, ...]; images[s] is where state s goes


@dataclass(frozen=True)
class FkTable:
    spec: GraphProductSpec
    k: int
    states: tuple[NormalForm, ...] = field(repr=False)
    index: dict = field(repr=False, compare=False)
    letters: tuple[Letter, ...] = field(repr=False)
    # moves[s][j] is the state reached from s by letters[j]
    moves: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    def __len__(self):
        return len(self.states)

    def element(self, state_id: int) -> GPElement:
        return GPElement(self.spec, self.states[state_id])

    def state_of(self, u: GPElement) -> Optional[int]:
        return self.index.get(u.nf)


def _sort_key(nf: NormalForm):
    return len(nf), flatten(nf)


def enumerate_fk(spec: GraphProductSpec, k: int,
                 state_limit: int = DEFAULT_STATE_LIMIT) -> FkTable:
    """Breadth-first closure of the identity under appending letters, keeping
    only normal forms with at most ``k`` blocks.

    States are numbered by block count, then by flattened letter sequence,
    so state 0 is always the identity.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if state_limit < 1:
        raise ValueError("state_limit must be at least 1")
    letters = tuple(spec.letters())
    seen = {(): None}
    queue = deque([()])
    while queue:
        nf = queue.popleft()
        for x in letters:
            nxt = append_letter(spec, nf, x)
            if len(nxt) <= k and nxt not in seen:
                seen[nxt] = None
                queue.append(nxt)
                if len(seen) > state_limit:
                    raise StateLimitExceeded(state_limit, len(queue))
    states = tuple(sorted(seen, key=_sort_key))
    index = {nf: i for i, nf in enumerate(states)}
    moves = []
    for nf in states:
        row = []
        for x in letters:
            nxt = append_letter(spec, nf, x)
            row.append(index[nxt] if len(nxt) <= k else index[nf])
        moves.append(tuple(row))
    return FkTable(spec, k, states, index, letters, tuple(moves))


def act_letter(table: FkTable, state_id: int, letter) -> int:
    """Apply one letter to a state, freezing when the result leaves F_k."""
    x = check_letter(table.spec, letter)
    nf = table.states[state_id]
    nxt = append_letter(table.spec, nf, x)
    if len(nxt) <= table.k:
        return table.index[nxt]
    return state_id


def identity_transformation(table: FkTable) -> Transformation:
    return tuple(range(len(table)))


def compose(f: Transformation, g: Transformation) -> Transformation:
    """``f`` then ``g`` (maps act on the right)."""
    return tuple(g[s] for s in f)


def theta(table: FkTable, u: GPElement) -> Transformation:
    if u.spec.digest != table.spec.digest:
        raise SpecMismatch("element is not in the product this table was built for")
    position = {x: j for j, x in enumerate(table.letters)}
    images = list(range(len(table)))
    for x in u.word:
        j = position[x]
        images = [table.moves[s][j] for s in images]
    return tuple(images)


@dataclass
class WellDefinedReport:
    ok: bool
    checked: dict
    counterexample: Optional[dict] = None

    def __bool__(self):
        return self.ok


def check_well_defined(table: FkTable) -> WellDefinedReport:
    """Verify exhaustively that the letter actions respect every defining relation.

    Three families are checked on every state: identity letters act
    trivially, a product xy at one vertex acts as x then y, and letters at
    adjacent vertices commute.
    """
    spec = table.spec
    n = len(table)
    checked = {"R_id": 0, "R_v": 0, "R_e": 0}
    act = {}

    def step(s, x):
        key = (s, x)
        if key not in act:
            act[key] = act_letter(table, s, x)
        return act[key]

    def fail(family, **detail):
        return WellDefinedReport(False, checked, {"relation": family, **detail})

    for v, m in enumerate(spec.monoids):
        one = Letter(v, m.identity)
        for s in range(n):
            checked["R_id"] += 1
            if step(s, one) != s:
                return fail("R_id", state=s, letter=one)
    for v, m in enumerate(spec.monoids):
        for x in range(m.size):
            for y in range(m.size):
                xy = Letter(v, m.table[x][y])
                for s in range(n):
                    checked["R_v"] += 1
                    lhs = step(step(s, Letter(v, x)), Letter(v, y))
                    if lhs != step(s, xy):
                        return fail("R_v", state=s, letters=(Letter(v, x), Letter(v, y)))
    for a, b in spec.graph.edges():
        for x in range(spec.monoids[a].size):
            for y in range(spec.monoids[b].size):
                xa, yb = Letter(a, x), Letter(b, y)
                for s in range(n):
                    checked["R_e"] += 1
                    if step(step(s, xa), yb) != step(step(s, yb), xa):
                        return fail("R_e", state=s, letters=(xa, yb))
    return WellDefinedReport(True, checked)
