"""Deterministic prefix-code trees over next-character counts.

Classic minimum-redundancy construction with one addition: the priority
queue orders nodes by (weight, smallest symbol in the subtree), and of the
two nodes removed the first becomes the left child, reached by bit 0.
Weight ties are therefore broken identically on every platform and every
run, which matters because encode and decode sessions must agree on the
exact bit-to-character mapping, not merely on codeword lengths.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Protocol, Union


class BitSource(Protocol):
    def read(self) -> int: ...


@dataclass(frozen=True, slots=True)
class Leaf:
    symbol: str
    weight: int


@dataclass(frozen=True, slots=True)
class Branch:
    left: "Node"
    right: "Node"
    weight: int


Node = Union[Leaf, Branch]


class CodeTree:
    """A prefix-code tree; left edges are bit 0, right edges bit 1."""

    __slots__ = ("root", "_codewords")

    def __init__(self, root: Node) -> None:
        self.root = root
        self._codewords: dict[str, str] | None = None

    def leaves(self) -> Iterator[tuple[str, int, int]]:
        """Yield (symbol, weight, depth) for every leaf."""
        stack: list[tuple[Node, int]] = [(self.root, 0)]
        while stack:
            node, depth = stack.pop()
            if isinstance(node, Leaf):
                yield node.symbol, node.weight, depth
            else:
                stack.append((node.right, depth + 1))
                stack.append((node.left, depth + 1))

    @property
    def codewords(self) -> Mapping[str, str]:
        """Symbol-to-bit-path table, built once and cached."""
        if self._codewords is None:
            table: dict[str, str] = {}
            stack: list[tuple[Node, str]] = [(self.root, "")]
            while stack:
                node, prefix = stack.pop()
                if isinstance(node, Leaf):
                    table[node.symbol] = prefix
                else:
                    stack.append((node.right, prefix + "1"))
                    stack.append((node.left, prefix + "0"))
            self._codewords = table
        return self._codewords


def build_tree(dist: Mapping[str, int]) -> CodeTree:
    """Build the optimal prefix-code tree for a {symbol: count} distribution.

    A single-symbol distribution yields a lone leaf whose codeword is
    empty: a forced transition costs zero bits.
    """
    if not dist:
        raise ValueError("cannot build a code tree from an empty distribution")
    for symbol, count in dist.items():
        if count < 1:
            raise ValueError(f"count for {symbol!r} must be >= 1, got {count}")
    # Heap keys are (weight, min symbol in subtree). Live nodes hold
    # disjoint symbol sets, so no two keys ever tie and the node in the
    # third slot is never compared.
    heap: list[tuple[int, str, Node]] = [(w, s, Leaf(s, w)) for s, w in dist.items()]
    heapq.heapify(heap)
    while len(heap) > 1:
        w1, m1, first = heapq.heappop(heap)
        w2, m2, second = heapq.heappop(heap)
        heapq.heappush(heap, (w1 + w2, min(m1, m2), Branch(first, second, w1 + w2)))
    return CodeTree(heap[0][2])


def traverse(tree: CodeTree, bits: BitSource) -> tuple[str, int]:
    """Walk from the root (0 = left, 1 = right) until a leaf.

    Returns the leaf symbol and the number of bits read; a single-leaf
    tree reads nothing.
    """
    node = tree.root
    consumed = 0
    while isinstance(node, Branch):
        node = node.right if bits.read() else node.left
        consumed += 1
    return node.symbol, consumed


def codeword(tree: CodeTree, symbol: str) -> str:
    """Root-to-leaf bit path for a symbol; empty for a single-leaf tree."""
    try:
        return tree.codewords[symbol]
    except KeyError:
        raise KeyError(f"symbol {symbol!r} is not a leaf of this tree") from None


def kraft_sum(tree: CodeTree) -> Fraction:
    """Sum of 2**(-depth) over leaves; exactly 1 for a complete prefix code."""
    return sum((Fraction(1, 2**depth) for _, _, depth in tree.leaves()), Fraction(0))


def format_tree(tree: CodeTree) -> str:
    """Indented text rendering of a tree, for debugging one state's code."""
    lines: list[str] = []

    def walk(node: Node, depth: int, edge: str) -> None:
        pad = "  " * depth
        if isinstance(node, Leaf):
            lines.append(f"{pad}{edge}leaf {node.symbol!r} weight={node.weight}")
        else:
            lines.append(f"{pad}{edge}branch weight={node.weight}")
            walk(node.left, depth + 1, "0: ")
            walk(node.right, depth + 1, "1: ")

    walk(tree.root, 0, "")
    return "\n".join(lines)
