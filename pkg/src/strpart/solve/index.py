"""Incremental, reference-counted collision index over selected pieces."""
from __future__ import annotations

from collections import Counter

from ..strcore import CollisionKind


class CountingTrie:
    """Trie storing a multiset of strings.

    Every node counts how many stored strings pass through it, so removal
    restores the exact prior shape (empty branches are pruned).
    """

    __slots__ = ("root", "size")

    def __init__(self):
        # node = [pass_count, end_count, children]
        self.root = [0, 0, {}]
        self.size = 0

    def insert(self, s: str) -> None:
        node = self.root
        node[0] += 1
        for ch in s:
            child = node[2].get(ch)
            if child is None:
                child = node[2][ch] = [0, 0, {}]
            node = child
            node[0] += 1
        node[1] += 1
        self.size += 1

    def remove(self, s: str) -> None:
        path = [self.root]
        node = self.root
        for ch in s:
            node = node[2].get(ch)
            if node is None:
                raise KeyError(s)
            path.append(node)
        if node[1] == 0:
            raise KeyError(s)
        node[1] -= 1
        for n in path:
            n[0] -= 1
        for depth in range(len(s), 0, -1):
            if path[depth][0] == 0:
                del path[depth - 1][2][s[depth - 1]]
            else:
                break
        self.size -= 1

    def count(self, s: str) -> int:
        node = self._walk(s)
        return 0 if node is None else node[1]

    def has_extension(self, s: str) -> bool:
        """Some stored string has ``s`` as a prefix (equality included)."""
        node = self._walk(s)
        return node is not None and node[0] > 0

    def has_prefix_of(self, s: str) -> bool:
        """Some stored string is a prefix of ``s`` (equality included)."""
        node = self.root
        for ch in s:
            node = node[2].get(ch)
            if node is None:
                return False
            if node[1]:
                return True
        return False

    def _walk(self, s: str):
        node = self.root
        for ch in s:
            node = node[2].get(ch)
            if node is None:
                return None
        return node

    def __len__(self) -> int:
        return self.size

    def __bool__(self) -> bool:
        return self.size > 0


class CollisionIndex:
    """Multiset of selected pieces answering "would this piece collide?".

    * equality: exact piece counter
    * prefix / suffix: forward / reversed counting trie
    * factor: piece counter plus the multiset of all substrings of every piece
    """

    def __init__(self, kind: CollisionKind):
        self.kind = CollisionKind.parse(kind)
        self.pieces: Counter = Counter()
        if self.kind in (CollisionKind.PREFIX, CollisionKind.SUFFIX):
            self._trie = CountingTrie()
        if self.kind is CollisionKind.FACTOR:
            self._closure: Counter = Counter()

    def __len__(self) -> int:
        return sum(self.pieces.values())

    def would_collide(self, p: str) -> bool:
        kind = self.kind
        if kind is CollisionKind.EQUALITY:
            return p in self.pieces
        if kind is CollisionKind.PREFIX:
            return self._trie.has_extension(p) or self._trie.has_prefix_of(p)
        if kind is CollisionKind.SUFFIX:
            r = p[::-1]
            return self._trie.has_extension(r) or self._trie.has_prefix_of(r)
        # factor
        if p in self._closure:
            return True
        pieces = self.pieces
        if not pieces:
            return False
        n = len(p)
        for i in range(n):
            for j in range(i + 1, n + 1):
                if p[i:j] in pieces:
                    return True
        return False

    def add(self, p: str) -> None:
        self.pieces[p] += 1
        kind = self.kind
        if kind is CollisionKind.PREFIX:
            self._trie.insert(p)
        elif kind is CollisionKind.SUFFIX:
            self._trie.insert(p[::-1])
        elif kind is CollisionKind.FACTOR:
            n = len(p)
            closure = self._closure
            for i in range(n):
                for j in range(i + 1, n + 1):
                    closure[p[i:j]] += 1

    def remove(self, p: str) -> None:
        c = self.pieces[p]
        if c <= 0:
            raise KeyError(p)
        if c == 1:
            del self.pieces[p]
        else:
            self.pieces[p] = c - 1
        kind = self.kind
        if kind is CollisionKind.PREFIX:
            self._trie.remove(p)
        elif kind is CollisionKind.SUFFIX:
            self._trie.remove(p[::-1])
        elif kind is CollisionKind.FACTOR:
            n = len(p)
            closure = self._closure
            for i in range(n):
                for j in range(i + 1, n + 1):
                    s = p[i:j]
                    k = closure[s] - 1
                    if k:
                        closure[s] = k
                    else:
                        del closure[s]

    def state(self) -> tuple:
        """Comparable snapshot, used to check add/remove round trips."""
        snap = [tuple(sorted(self.pieces.items()))]
        if self.kind is CollisionKind.FACTOR:
            snap.append(tuple(sorted(self._closure.items())))
        if self.kind in (CollisionKind.PREFIX, CollisionKind.SUFFIX):
            snap.append(_freeze(self._trie.root))
        return tuple(snap)


def _freeze(node):
    return (node[0], node[1], tuple(sorted((k, _freeze(v)) for k, v in node[2].items())))
