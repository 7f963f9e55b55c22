"""Hall bases of the free Lie ring on an ordered alphabet.

Words are binary bracket trees built from :class:`Leaf` and :class:`Bracket`.
A basis is enumerated length by length with the rank-function rule: a new
word ``[x_i, x_j]`` is admitted when ``r(x_j) <= i < j`` and it receives rank
``i``.  The same words can be produced one head at a time by
:func:`split_step`, which peels ``x_r = min L_{r-1}`` off the current list
and replaces the rest by all ``ad(x_r)^k(x)``.
"""
from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .errors import DomainError, ParseError

_NAME_RE = re.compile(r"[A-Za-z0-9_]+")


@dataclass(frozen=True)
class Generator:
    index: int
    name: str


@dataclass(frozen=True)
class Leaf:
    index: int

    @property
    def length(self) -> int:
        return 1

    def leaves(self) -> Iterator[int]:
        yield self.index


@dataclass(frozen=True)
class Bracket:
    left: "Word"
    right: "Word"
    length: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "length", self.left.length + self.right.length)

    def leaves(self) -> Iterator[int]:
        yield from self.left.leaves()
        yield from self.right.leaves()


Word = Leaf | Bracket


def default_names(n: int) -> tuple[str, ...]:
    if n <= 3:
        return tuple("xyz"[:n])
    return tuple(f"x{i}" for i in range(1, n + 1))


def make_alphabet(names: Sequence[str]) -> tuple[Generator, ...]:
    """Validate generator names and attach 1-based indices."""
    if not names:
        raise DomainError("alphabet must contain at least one generator")
    seen = set()
    for name in names:
        if not _NAME_RE.fullmatch(name):
            raise DomainError(f"invalid generator name {name!r}")
        if name in seen:
            raise DomainError(f"duplicate generator name {name!r}")
        seen.add(name)
    return tuple(Generator(i, name) for i, name in enumerate(names, start=1))


def multidegree(w: Word, n: int) -> tuple[int, ...]:
    counts = [0] * n
    for i in w.leaves():
        if not 1 <= i <= n:
            raise DomainError(f"generator index {i} outside 1..{n}")
        counts[i - 1] += 1
    return tuple(counts)


def ad_power(x: Word, k: int, y: Word) -> Word:
    """``[x, [x, ..., [x, y]]]`` with ``k`` copies of ``x``."""
    for _ in range(k):
        y = Bracket(x, y)
    return y


# -- text format ---------------------------------------------------------------

def format_word(w: Word, names: Sequence[str]) -> str:
    if isinstance(w, Leaf):
        return names[w.index - 1]
    return f"[{format_word(w.left, names)},{format_word(w.right, names)}]"


class _Parser:
    def __init__(self, text, names):
        self.text = text
        self.pos = 0
        self.lookup = {name: i for i, name in enumerate(names, start=1)}

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch):
        self.skip()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise ParseError(f"expected {ch!r}", self.text, self.pos)
        self.pos += 1

    def word(self):
        self.skip()
        if self.pos >= len(self.text):
            raise ParseError("expected a word", self.text, self.pos)
        if self.text[self.pos] == "[":
            self.pos += 1
            left = self.word()
            self.expect(",")
            right = self.word()
            self.expect("]")
            return Bracket(left, right)
        m = _NAME_RE.match(self.text, self.pos)
        if m is None:
            raise ParseError("expected a generator name or '['", self.text, self.pos)
        if m.group() not in self.lookup:
            raise ParseError(f"unknown generator {m.group()!r}", self.text, self.pos)
        self.pos = m.end()
        return Leaf(self.lookup[m.group()])


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse ``word := name | "[" word "," word "]"``; whitespace is ignored."""
    p = _Parser(text, names)
    w = p.word()
    p.skip()
    if p.pos != len(text):
        raise ParseError("trailing input", text, p.pos)
    return w


# -- ordering ------------------------------------------------------------------

class OrderPolicy(enum.Enum):
    """Tie-break among words of equal length."""

    CREATION = "creation-order"
    LEX = "lex-on-serialized-tree"

    def sort_key(self, w: Word, names: Sequence[str]):
        if self is OrderPolicy.LEX:
            return (w.length, format_word(w, names))
        return _creation_key(w)


def _creation_key(w):
    # Lexicographic on (length, left, right) reproduces the ascending (i, j)
    # generation order of the enumeration, serials being ordered the same way.
    if isinstance(w, Leaf):
        return (1, w.index)
    return (w.length, _creation_key(w.left), _creation_key(w.right))


# -- tables --------------------------------------------------------------------

@dataclass(frozen=True)
class RankedWord:
    word: Word
    rank: int
    serial: int

    @property
    def length(self) -> int:
        return self.word.length


@dataclass(frozen=True)
class HallBasisTable:
    n: int
    max_len: int
    policy: OrderPolicy
    names: tuple[str, ...]
    words: tuple[RankedWord, ...]

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __getitem__(self, serial: int) -> RankedWord:
        """1-based access, matching serial numbers."""
        if serial < 1:
            raise IndexError(serial)
        return self.words[serial - 1]

    @cached_property
    def serial_of(self) -> dict:
        return {rw.word: rw.serial for rw in self.words}

    def __contains__(self, w) -> bool:
        return w in self.serial_of

    def of_length(self, length: int) -> list[RankedWord]:
        return [rw for rw in self.words if rw.length == length]

    def counts(self) -> list[int]:
        out = [0] * self.max_len
        for rw in self.words:
            out[rw.length - 1] += 1
        return out

    def multidegree(self, w: Word) -> tuple[int, ...]:
        return multidegree(w, self.n)

    def residual(self, r: int) -> list[Word]:
        """Words of rank <= r sitting after position r: the list L_r."""
        return [rw.word for rw in self.words if rw.rank <= r < rw.serial]

    def format(self, w: Word) -> str:
        return format_word(w, self.names)

    def to_text(self) -> str:
        lines = ["serial\tword\tlength\trank"]
        for rw in self.words:
            lines.append(f"{rw.serial}\t{self.format(rw.word)}\t{rw.length}\t{rw.rank}")
        return "\n".join(lines) + "\n"

    def to_records(self) -> list[dict]:
        return [
            {
                "serial": rw.serial,
                "word": self.format(rw.word),
                "length": rw.length,
                "rank": rw.rank,
                "multidegree": list(self.multidegree(rw.word)),
            }
            for rw in self.words
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_records(), indent=2) + "\n"


def enumerate_hall_basis(
    n: int,
    max_len: int,
    policy: OrderPolicy = OrderPolicy.CREATION,
    names: Sequence[str] | None = None,
) -> HallBasisTable:
    if n < 1 or max_len < 1:
        raise DomainError(f"need n >= 1 and max_len >= 1, got n={n}, max_len={max_len}")
    names = tuple(names) if names is not None else default_names(n)
    if len(names) != n:
        raise DomainError(f"{len(names)} names given for an alphabet of size {n}")
    make_alphabet(names)

    words: list[Word] = [Leaf(i) for i in range(1, n + 1)]
    ranks = [0] * n
    by_length: dict[int, list[int]] = {1: list(range(1, n + 1))}

    for length in range(2, max_len + 1):
        new = []
        for i in range(1, len(words) + 1):
            xi = words[i - 1]
            for j in by_length.get(length - xi.length, ()):
                if j > i and ranks[j - 1] <= i:
                    new.append((Bracket(xi, words[j - 1]), i))
        if policy is OrderPolicy.LEX:
            new.sort(key=lambda pair: policy.sort_key(pair[0], names))
        by_length[length] = []
        for w, r in new:
            words.append(w)
            ranks.append(r)
            by_length[length].append(len(words))

    ranked = tuple(RankedWord(w, r, s) for s, (w, r) in enumerate(zip(words, ranks), start=1))
    return HallBasisTable(n, max_len, policy, names, ranked)


def split_step(
    current: Sequence[Word],
    max_len: int,
    policy: OrderPolicy = OrderPolicy.CREATION,
    names: Sequence[str] | None = None,
) -> tuple[Word, list[Word]]:
    """Take the head of an ordered list and form the next list.

    Returns ``(x_r, L_r)`` where ``x_r = current[0]`` and ``L_r`` holds every
    ``ad(x_r)^k(x)`` (``k >= 0``, ``x`` in ``current`` other than the head)
    of length at most ``max_len``, sorted by ``policy``.
    """
    if not current:
        raise DomainError("split_step needs a nonempty word list")
    head = current[0]
    out = []
    for x in current[1:]:
        w = x
        while w.length <= max_len:
            out.append(w)
            w = Bracket(head, w)
    if policy is OrderPolicy.LEX and names is None:
        n = max(i for w in current for i in w.leaves())
        names = default_names(n)
    out.sort(key=lambda w: policy.sort_key(w, names))
    return head, out


def split_tower(
    n: int,
    max_len: int,
    steps: int,
    policy: OrderPolicy = OrderPolicy.CREATION,
    names: Sequence[str] | None = None,
) -> tuple[list[Word], list[Word]]:
    """Run ``steps`` iterations of :func:`split_step` from the generators.

    Returns the heads collected so far and the residual list.  Stops early
    once the list is exhausted.
    """
    names = tuple(names) if names is not None else default_names(n)
    current: list[Word] = [Leaf(i) for i in range(1, n + 1)]
    heads = []
    for _ in range(steps):
        if not current:
            break
        head, current = split_step(current, max_len, policy, names)
        heads.append(head)
    return heads, current
