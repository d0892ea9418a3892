"""Words over the disjoint union of vertex monoids and their left Foata normal forms.

A letter is a ``(vertex, element)`` pair. A block is a tuple of letters
with pairwise distinct, pairwise adjacent vertices, none of them an
identity, sorted by vertex. A normal form is a tuple of blocks such that
every vertex of a block fails to commute with some vertex of the block
before it. Two words are equal in the graph product exactly when their
normal forms are equal as tuples.

Normal forms are built one letter at a time with :func:`append_letter`;
each append touches at most one block, so normalising a word of length n
costs O(n * blocks).
"""
from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, NamedTuple, Sequence

from .errors import InvalidLetter

if TYPE_CHECKING:
    from .product import GraphProductSpec


class Letter(NamedTuple):
    vertex: int
    element: int


Word = tuple  # tuple[Letter, ...]
Block = tuple  # tuple[Letter, ...], sorted by vertex
NormalForm = tuple  # tuple[Block, ...]

EMPTY: NormalForm = ()


def check_letter(spec: "GraphProductSpec", x) -> Letter:
    try:
        v, e = x
    except (TypeError, ValueError):
        raise InvalidLetter(f"{x!r} is not a (vertex, element) pair") from None
    if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < len(spec.monoids):
        raise InvalidLetter(f"vertex {v!r} out of range")
    if isinstance(e, bool) or not isinstance(e, int) or not 0 <= e < spec.monoids[v].size:
        raise InvalidLetter(f"element {e!r} out of range at vertex {v}")
    return Letter(v, e)


def check_word(spec: "GraphProductSpec", word: Iterable) -> Word:
    return tuple(check_letter(spec, x) for x in word)


def support(word: Iterable) -> frozenset:
    return frozenset(x[0] for x in word)


def flatten(nf: NormalForm) -> Word:
    return tuple(x for block in nf for x in block)


def is_identity_letter(spec: "GraphProductSpec", x: Letter) -> bool:
    return x[1] == spec.monoids[x[0]].identity


def _push(spec, blocks: list, x: Letter, opposite: bool) -> int:
    """Fold ``x`` into ``blocks`` in place and return the index touched.

    ``blocks`` is in LFNF order and ``x`` goes on the right. With
    ``opposite`` the vertex products are taken in reverse, which turns the
    same procedure into prepending onto a right normal form stored
    back to front.
    """
    alpha, elt = x
    monoid = spec.monoids[alpha]
    adj = spec.graph.adjacency[alpha]
    insert_at = None
    for i in range(len(blocks) - 1, -1, -1):
        block = blocks[i]
        for pos, (beta, y) in enumerate(block):
            if beta == alpha:
                # every block after i commutes with alpha, so x slides onto y
                p = monoid.table[elt][y] if opposite else monoid.table[y][elt]
                if p == monoid.identity:
                    shrunk = block[:pos] + block[pos + 1:]
                    if shrunk:
                        blocks[i] = shrunk
                    else:
                        assert i == len(blocks) - 1, "emptied a block that is not the last"
                        del blocks[i]
                else:
                    blocks[i] = block[:pos] + (Letter(alpha, p),) + block[pos + 1:]
                return i
        if all(adj[beta] for beta, _ in block):
            insert_at = i
        else:
            break
    if insert_at is None:
        blocks.append((Letter(alpha, elt),))
        return len(blocks) - 1
    blocks[insert_at] = tuple(sorted(blocks[insert_at] + (Letter(alpha, elt),)))
    return insert_at


def _blocked(adjacency, earlier: Block, later: Block) -> bool:
    """Every vertex of ``later`` misses some vertex of ``earlier``."""
    return all(any(not adjacency[a][b] for b, _ in earlier) for a, _ in later)


def _assert_local(spec, blocks: list, i: int) -> None:
    adjacency = spec.graph.adjacency
    for j in (i - 1, i):
        if 0 <= j and j + 1 < len(blocks):
            assert _blocked(adjacency, blocks[j], blocks[j + 1]), \
                f"blocks {j} and {j + 1} violate the Foata condition"


def append_letter(spec: "GraphProductSpec", nf: NormalForm, x) -> NormalForm:
    """Return the normal form of ``nf`` followed by the letter ``x``."""
    x = check_letter(spec, x)
    if is_identity_letter(spec, x):
        return nf
    blocks = list(nf)
    i = _push(spec, blocks, x, opposite=False)
    _assert_local(spec, blocks, min(i, len(blocks) - 1))
    return tuple(blocks)


def lfnf(spec: "GraphProductSpec", word: Iterable) -> NormalForm:
    word = check_word(spec, word)
    blocks: list = []
    for x in word:
        if not is_identity_letter(spec, x):
            _push(spec, blocks, x, opposite=False)
    return tuple(blocks)


def reduce(spec: "GraphProductSpec", word: Iterable) -> Word:
    return flatten(lfnf(spec, word))


def block_length(spec: "GraphProductSpec", word: Iterable) -> int:
    return len(lfnf(spec, word))


def rfnf(spec: "GraphProductSpec", word: Iterable) -> NormalForm:
    """Right Foata normal form: built by prepending letters from the right end."""
    word = check_word(spec, word)
    backwards: list = []
    for x in reversed(word):
        if not is_identity_letter(spec, x):
            _push(spec, backwards, x, opposite=True)
    return tuple(reversed(backwards))


def rfnf_block_count(spec: "GraphProductSpec", word: Iterable) -> int:
    return len(rfnf(spec, word))


def is_normal_form(spec: "GraphProductSpec", nf: Sequence) -> bool:
    """True iff ``nf`` is exactly the canonical normal form of its flattening."""
    try:
        nf = tuple(tuple(check_letter(spec, x) for x in block) for block in nf)
    except InvalidLetter:
        return False
    return lfnf(spec, flatten(nf)) == nf


def is_lfnf_shape(spec: "GraphProductSpec", nf: NormalForm) -> bool:
    """Check the block and Foata conditions directly, without renormalising."""
    adjacency = spec.graph.adjacency
    for block in nf:
        if not block:
            return False
        vs = [v for v, _ in block]
        if vs != sorted(set(vs)):
            return False
        if any(is_identity_letter(spec, x) for x in block):
            return False
        if not all(adjacency[a][b] for i, a in enumerate(vs) for b in vs[i + 1:]):
            return False
    return all(_blocked(adjacency, nf[i], nf[i + 1]) for i in range(len(nf) - 1))


def format_normal_form(spec: "GraphProductSpec", nf: NormalForm) -> str:
    if not nf:
        return "ε"
    return "".join(
        "[" + " ".join(spec.letter_label(x) for x in block) + "]" for block in nf)


def format_word(spec: "GraphProductSpec", word: Iterable) -> str:
    word = tuple(word)
    if not word:
        return "ε"
    return " ".join(spec.letter_label(x) for x in word)
