"""Odd words and the Macdonald tree of the Young-Fibonacci lattice.

A word is odd when its chain count is odd; equivalently, every 2 in it has
an even number of 1s to its right, so the word splits uniquely into blocks
2 / 11 after an optional leading 1 (present exactly at odd rank).  The odd
words induce a binary tree: an even-rank node has the single child 1w, an
odd-rank node w = 1v has the two children 11v and 2v.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .core import Word, rank, word_text

TWO: Word = (2,)
ONE_ONE: Word = (1, 1)


def is_odd_word(w: Word) -> bool:
    """True iff the chain count of w is odd.

    Checked structurally: every 2 must see an even number of 1s to its
    right, which makes every factor of the product form odd.
    """
    ones = 0
    for x in reversed(w):
        if x == 1:
            ones += 1
        elif ones % 2:
            return False
    return True


def _violating_two(w: Word) -> int:
    """1-based position of a 2 with oddly many 1s to its right."""
    ones = 0
    for i in range(len(w) - 1, -1, -1):
        if w[i] == 1:
            ones += 1
        elif ones % 2:
            return i + 1
    raise ValueError("word has no violating 2")


@dataclass(frozen=True)
class BlockForm:
    """Decomposition of an odd word: optional leading 1, then 2/11 blocks.

    Blocks are indexed right to left, so blocks[0] is the rightmost block;
    the chain count is the product of 2i+1 over the 2-block indices i.
    """

    leading_one: bool
    blocks: tuple[Word, ...]

    def reassemble(self) -> Word:
        word: Word = (1,) if self.leading_one else ()
        for block in reversed(self.blocks):
            word += block
        return word


def block_decompose(w: Word) -> BlockForm:
    """Split an odd word into its unique block form.

    The leading 1 is forced by rank parity and the block boundaries are
    forced left to right.  Non-odd words are rejected, naming a 2 with an
    odd number of 1s to its right.
    """
    if not is_odd_word(w):
        raise ValueError(
            f"{word_text(w)} is not an odd word: the 2 at position "
            f"{_violating_two(w)} has an odd number of 1s to its right"
        )
    i = rank(w) % 2
    blocks: list[Word] = []
    while i < len(w):
        if w[i] == 2:
            blocks.append(TWO)
            i += 1
        else:
            blocks.append(ONE_ONE)
            i += 2
    blocks.reverse()
    return BlockForm(rank(w) % 2 == 1, tuple(blocks))


def f_odd_product(form: BlockForm) -> int:
    """Chain count of an odd word from its block form.

    One factor 2i+1 per 2-block at right-to-left index i; 11-blocks and the
    leading 1 contribute nothing.
    """
    f = 1
    for i, block in enumerate(form.blocks):
        if block == TWO:
            f *= 2 * i + 1
    return f


def macdonald_children(w: Word) -> list[Word]:
    """The odd upper covers of an odd word, in tree order.

    Even rank: the single child 1w.  Odd rank: w = 1v, children [11v, 2v];
    the 11v branch keeps the parent's chain count, 2v scales it by rank(w).
    """
    if not is_odd_word(w):
        raise ValueError(f"{word_text(w)} is not an odd word")
    if rank(w) % 2 == 0:
        return [(1,) + w]
    v = w[1:]  # odd words of odd rank start with 1
    return [(1, 1) + v, (2,) + v]


@dataclass
class MacdonaldNode:
    word: Word
    f: int
    children: list["MacdonaldNode"] = field(default_factory=list)


@dataclass
class MacdonaldTree:
    root: MacdonaldNode
    max_rank: int

    def rows(self) -> list[list[MacdonaldNode]]:
        """Nodes grouped by rank, each row in breadth-first layout order."""
        rows = [[self.root]]
        while len(rows) <= self.max_rank:
            rows.append([child for node in rows[-1] for child in node.children])
        return rows

    def find(self, w: Word) -> MacdonaldNode:
        for row in self.rows():
            for node in row:
                if node.word == w:
                    return node
        raise ValueError(f"{word_text(w)} is not a node of this tree (odd words up to rank {self.max_rank})")


def build_tree(max_rank: int) -> MacdonaldTree:
    """Materialize the Macdonald tree of odd words up to the given rank.

    Breadth-first from the empty word; row n holds 2^(n//2) nodes, each
    carrying its chain count.
    """
    if max_rank < 0:
        raise ValueError("max_rank must be nonnegative")
    root = MacdonaldNode((), 1)
    frontier = [root]
    for _ in range(max_rank):
        grown: list[MacdonaldNode] = []
        for node in frontier:
            for cw in macdonald_children(node.word):
                child = MacdonaldNode(cw, f_odd_product(block_decompose(cw)))
                node.children.append(child)
                grown.append(child)
        frontier = grown
    return MacdonaldTree(root, max_rank)


def odd_row_words(n: int) -> list[Word]:
    """All odd words of rank n (there are 2^(n//2)), in lexicographic order."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    words: list[Word] = [(1,) if n % 2 else ()]
    for _ in range(n // 2):
        # appending 11 before 2 preserves lexicographic order
        words = [w + block for w in words for block in (ONE_ONE, TWO)]
    return words


def f_valued_row(n: int) -> Counter[int]:
    """Multiset of chain counts over the odd words of rank n.

    Enumerates the 2^(n//2) block-tag masks directly; the value depends
    only on which indices carry a 2-block, so rows 2m and 2m+1 agree.
    """
    if n < 0:
        raise ValueError("rank must be nonnegative")
    prods = [1]
    for i in range(n // 2):
        c = 2 * i + 1
        prods += [p * c for p in prods]
    return Counter(prods)


def verify_subtree_self_similarity(tree: MacdonaldTree, w: Word) -> bool:
    """Check the recursive self-similarity of the tree below w, rank(w) = 2m.

    To the depth the tree affords: w has the single child 1w (same chain
    count), whose children are 11w and 2w with chain counts f_w and
    (2m+1) f_w; both grandchild branches replicate the shape of the
    depth-truncated Macdonald tree under v -> v·11w and v -> v·2w; and
    every label in the 2w branch is exactly (2m+1) times its mirror in the
    11w branch.  Rejects non-odd or odd-rank roots.
    """
    if not is_odd_word(w):
        raise ValueError(f"{word_text(w)} is not an odd word")
    if rank(w) % 2:
        raise ValueError(f"{word_text(w)} has odd rank; self-similarity roots at even rank")
    node = tree.find(w)
    m = rank(w) // 2
    fw = node.f
    if tree.max_rank < rank(w) + 1:
        return True  # nothing below w to compare
    if len(node.children) != 1:
        return False
    child = node.children[0]
    if child.word != (1,) + w or child.f != fw:
        return False
    if tree.max_rank < rank(w) + 2:
        return True
    if len(child.children) != 2:
        return False
    left, right = child.children
    if left.word != ONE_ONE + w or right.word != TWO + w:
        return False
    if left.f != fw or right.f != (2 * m + 1) * fw:
        return False

    reference = build_tree(tree.max_rank - rank(w) - 2)

    def shape_matches(branch: MacdonaldNode, ref: MacdonaldNode, tag: Word) -> bool:
        if branch.word != ref.word + tag:
            return False
        if len(branch.children) != len(ref.children):
            return False
        return all(shape_matches(b, r, tag) for b, r in zip(branch.children, ref.children))

    def scaled_labels(a: MacdonaldNode, b: MacdonaldNode, scale: int) -> bool:
        if b.f != scale * a.f:
            return False
        return all(scaled_labels(x, y, scale) for x, y in zip(a.children, b.children))

    return (
        shape_matches(left, reference.root, ONE_ONE + w)
        and shape_matches(right, reference.root, TWO + w)
        and scaled_labels(left, right, 2 * m + 1)
    )
