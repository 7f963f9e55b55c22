"""Exact arithmetic in the free Lie ring over the integers.

Every Lie element is checked against its image in the tensor algebra under
``[a, b] -> ab - ba``.  Rewriting into a Hall basis works per multidegree:
the target is embedded, then solved for against the embedded basis words of
the same multidegree.  Hall's theorem guarantees a unique integral solution.
"""
from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import BoundError, DomainError, LieShadowError
from .exact import RationalSolver, bareiss_rank
from .hall_words import Bracket, HallBasisTable, Leaf, Word, default_names, multidegree


class TensorElement:
    """Sparse noncommutative polynomial: generator sequences -> integers."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TensorElement(out)

    def __neg__(self):
        return TensorElement({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TensorElement({k: v * other for k, v in self.terms.items()})
        out: dict = defaultdict(int)
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                out[k1 + k2] += v1 * v2
        return TensorElement(out)

    def __rmul__(self, c: int):
        return self * c

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"TensorElement({self.terms!r})"

    def homogeneous(self, length: int) -> "TensorElement":
        return TensorElement({k: v for k, v in self.terms.items() if len(k) == length})

    def to_records(self, names: Sequence[str] | None = None) -> list[dict]:
        out = []
        for seq in sorted(self.terms):
            shown = [names[i - 1] for i in seq] if names else list(seq)
            out.append({"sequence": shown, "coefficient": self.terms[seq]})
        return out


@lru_cache(maxsize=None)
def _embed_word(w: Word) -> TensorElement:
    if isinstance(w, Leaf):
        return TensorElement({(w.index,): 1})
    a, b = _embed_word(w.left), _embed_word(w.right)
    return a * b - b * a


def _linear_terms(e) -> dict:
    if isinstance(e, (Leaf, Bracket)):
        return {e: 1}
    if isinstance(e, LieElement):
        return e.terms
    return dict(e)


def embed_tensor(e) -> TensorElement:
    """Image of a bracket tree, a word combination or a :class:`LieElement`."""
    out = TensorElement()
    for w, c in _linear_terms(e).items():
        out = out + _embed_word(w) * c
    return out


class LieElement:
    """Integer combination of words from one :class:`HallBasisTable`."""

    __slots__ = ("terms", "table")

    def __init__(self, terms: Mapping[Word, int], table: HallBasisTable):
        for w in terms:
            if w not in table:
                raise DomainError(f"{w!r} is not a word of the basis table")
        self.terms = {w: c for w, c in terms.items() if c != 0}
        self.table = table

    @classmethod
    def word(cls, w: Word, table: HallBasisTable) -> "LieElement":
        return cls({w: 1}, table)

    def _combine(self, other, sign):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + sign * c
        return LieElement(out, self.table)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return LieElement({w: -c for w, c in self.terms.items()}, self.table)

    def __rmul__(self, c: int):
        return LieElement({w: c * v for w, v in self.terms.items()}, self.table)

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        """Terms in basis order."""
        serial = self.table.serial_of
        return sorted(self.terms.items(), key=lambda kv: serial[kv[0]])

    def format(self) -> str:
        parts = []
        for k, (w, c) in enumerate(self.items()):
            text = self.table.format(w)
            if k == 0:
                parts.append(f"{c}·{text}")
            elif c < 0:
                parts.append(f" - {-c}·{text}")
            else:
                parts.append(f" + {c}·{text}")
        return "".join(parts) or "0"

    __str__ = format

    def __repr__(self):
        return f"LieElement({self.format()!r})"

    def to_records(self) -> list[dict]:
        return [{"word": self.table.format(w), "coefficient": c} for w, c in self.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_records()) + "\n"


def _solver(table: HallBasisTable, mdeg: tuple[int, ...]):
    cache = table.__dict__.setdefault("_rewrite_solvers", {})
    if mdeg not in cache:
        words = [rw.word for rw in table if multidegree(rw.word, table.n) == mdeg]
        cols = [_embed_word(w).terms for w in words]
        cache[mdeg] = (words, RationalSolver(cols))
    return cache[mdeg]


def rewrite_to_hall(e, table: HallBasisTable) -> LieElement:
    """Express a bracket expression as an integer combination of table words."""
    by_mdeg: dict = defaultdict(TensorElement)
    direct: dict = defaultdict(int)
    for w, c in _linear_terms(e).items():
        if w.length > table.max_len:
            raise BoundError(w.length, table.max_len)
        if w in table:
            direct[w] += c
            continue
        md = multidegree(w, table.n)
        by_mdeg[md] = by_mdeg[md] + _embed_word(w) * c

    out = dict(direct)
    for md, target in by_mdeg.items():
        if not target:
            continue
        words, solver = _solver(table, md)
        x = solver.solve(target.terms)
        if x is None or any(v.denominator != 1 for v in x):
            raise LieShadowError(f"no integral Hall expansion found in multidegree {md}")
        for w, v in zip(words, x):
            if v:
                out[w] = out.get(w, 0) + int(v)
    return LieElement(out, table)


def lie_bracket(a: LieElement, b: LieElement, table: HallBasisTable) -> LieElement:
    formal: dict = defaultdict(int)
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            if u.length + v.length > table.max_len:
                raise BoundError(u.length + v.length, table.max_len)
            formal[Bracket(u, v)] += cu * cv
    return rewrite_to_hall(formal, table)


def mobius(n: int) -> int:
    if n < 1:
        raise DomainError("mobius is defined for n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def witt_dimension(n: int, length: int) -> int:
    """Rank of the degree-``length`` part of the free Lie ring on ``n`` letters."""
    if n < 1 or length < 1:
        raise DomainError("witt_dimension needs n >= 1 and length >= 1")
    total = sum(mobius(d) * n ** (length // d) for d in range(1, length + 1) if length % d == 0)
    assert total % length == 0
    return total // length


def left_normed(seq: Sequence[int]) -> Word:
    """``[[[x_a, x_b], x_c], ...]`` for the index sequence ``seq``."""
    w: Word = Leaf(seq[0])
    for i in seq[1:]:
        w = Bracket(w, Leaf(i))
    return w


@dataclass
class BasisReport:
    independent: bool
    spans: bool
    ranks: list[int]
    counts: list[int]
    lie_dims: list[int]

    def __bool__(self):
        return self.independent and self.spans

    def to_dict(self) -> dict:
        return {
            "independent": self.independent,
            "spans": self.spans,
            "ranks": self.ranks,
            "counts": self.counts,
            "lie_dims": self.lie_dims,
        }


def verify_hall_basis(n: int, degree: int, table: HallBasisTable) -> BasisReport:
    """Brute-force check that the table words of each length form a Z-basis.

    Independence: the embedded words have full rank.  Spanning: every
    left-normed bracket of that length is an integral combination of them,
    and the two families have the same rank.  Work is split by multidegree,
    on which everything is block diagonal.
    """
    if table.max_len < degree:
        raise DomainError(f"table max_len {table.max_len} < degree {degree}")
    if table.n != n:
        raise DomainError(f"table is on {table.n} generators, not {n}")
    independent = spans = True
    ranks, counts, lie_dims = [], [], []
    for length in range(1, degree + 1):
        hall_blocks: dict = defaultdict(list)
        for rw in table.of_length(length):
            hall_blocks[multidegree(rw.word, n)].append(rw.word)
        span_blocks: dict = defaultdict(list)
        for seq in itertools.product(range(1, n + 1), repeat=length):
            w = left_normed(seq)
            span_blocks[multidegree(w, n)].append(w)

        rank_l = count_l = dim_l = 0
        for md in set(hall_blocks) | set(span_blocks):
            hall = [_embed_word(w) for w in hall_blocks.get(md, [])]
            span = [_embed_word(w) for w in span_blocks.get(md, [])]
            keys = sorted({k for t in hall + span for k in t.terms})
            h_rows = [[t.terms.get(k, 0) for k in keys] for t in hall]
            s_rows = [[t.terms.get(k, 0) for k in keys] for t in span]
            r_h = bareiss_rank(h_rows)
            r_s = bareiss_rank(s_rows)
            r_joint = bareiss_rank(h_rows + s_rows)
            rank_l += r_h
            count_l += len(hall)
            dim_l += r_s
            if r_h != len(hall):
                independent = False
            if not (r_h == r_s == r_joint):
                spans = False
            elif hall:
                solver = RationalSolver([t.terms for t in hall])
                for t in span:
                    x = solver.solve(t.terms)
                    if x is None or any(v.denominator != 1 for v in x):
                        spans = False
                        break
        ranks.append(rank_l)
        counts.append(count_l)
        lie_dims.append(dim_l)
    return BasisReport(independent, spans, ranks, counts, lie_dims)


def random_bracket(rng, n: int, length: int) -> Word:
    """Uniform-ish random bracket tree with ``length`` leaves."""
    if length == 1:
        return Leaf(rng.randint(1, n))
    k = rng.randint(1, length - 1)
    return Bracket(random_bracket(rng, n, k), random_bracket(rng, n, length - k))


__all__ = [
    "BasisReport",
    "LieElement",
    "TensorElement",
    "default_names",
    "embed_tensor",
    "left_normed",
    "lie_bracket",
    "mobius",
    "random_bracket",
    "rewrite_to_hall",
    "verify_hall_basis",
    "witt_dimension",
]
