"""Truncated power series shadows of pointed objects, and connectivity bounds.

A :class:`MultiSeries` lives in ``Z[[s, t_1, ..., t_n]]``.  ``t_i`` tracks the
generator ``X_i``; ``s`` counts suspensions.  Terms are kept while their total
``t``-degree and their ``s``-exponent are both at most the truncation ``N``.
Exponent vectors are stored as ``(s, t_1, ..., t_n)``.

The rules: wedge is ``a + b``, smash is ``a * b``, product is
``(1 + a)(1 + b) - 1``, suspension multiplies by ``s`` and ``J = Omega Sigma``
is the geometric sum ``f + f^2 + ...``.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import DomainError
from .hall_words import Leaf, Word, multidegree

DEFAULT_TRUNCATION = 8


class MultiSeries:
    __slots__ = ("n", "N", "coeffs")

    def __init__(self, n: int, N: int, coeffs: Mapping[tuple[int, ...], int] | None = None):
        if n < 0 or N < 0:
            raise DomainError(f"bad series shape n={n}, N={N}")
        self.n = n
        self.N = N
        self.coeffs = {}
        for e, c in (coeffs or {}).items():
            e = tuple(e)
            if len(e) != n + 1:
                raise DomainError(f"exponent {e} has wrong arity for n={n}")
            if c and e[0] <= N and sum(e[1:]) <= N:
                self.coeffs[e] = self.coeffs.get(e, 0) + c
        self.coeffs = {e: c for e, c in self.coeffs.items() if c}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n, N=DEFAULT_TRUNCATION):
        return cls(n, N)

    @classmethod
    def one(cls, n, N=DEFAULT_TRUNCATION):
        return cls(n, N, {(0,) * (n + 1): 1})

    @classmethod
    def monomial(cls, n, N, t=None, s=0, coeff=1):
        t = tuple(t) if t is not None else (0,) * n
        return cls(n, N, {(s, *t): coeff})

    @classmethod
    def gen(cls, i, n, N=DEFAULT_TRUNCATION, power=1):
        """``t_i ** power`` (1-based ``i``)."""
        t = [0] * n
        t[i - 1] = power
        return cls.monomial(n, N, t)

    @classmethod
    def s(cls, n, N=DEFAULT_TRUNCATION):
        return cls.monomial(n, N, s=1)

    # -- ring structure -----------------------------------------------------

    def _check(self, other):
        if not isinstance(other, MultiSeries):
            raise TypeError(f"expected MultiSeries, got {type(other).__name__}")
        if other.n != self.n:
            raise DomainError(f"arity mismatch: {self.n} vs {other.n} generator variables")
        return min(self.N, other.N)

    def __add__(self, other):
        N = self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return MultiSeries(self.n, N, out)

    def __neg__(self):
        return MultiSeries(self.n, self.N, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiSeries(self.n, self.N, {e: c * other for e, c in self.coeffs.items()})
        N = self._check(other)
        out: dict = defaultdict(int)
        right = [(e, sum(e[1:]), c) for e, c in other.coeffs.items()]
        for e1, c1 in self.coeffs.items():
            d1 = sum(e1[1:])
            for e2, d2, c2 in right:
                if d1 + d2 > N or e1[0] + e2[0] > N:
                    continue
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return MultiSeries(self.n, N, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative powers are not defined")
        out = MultiSeries.one(self.n, self.N)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return series_eq(self, other)

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"MultiSeries(n={self.n}, N={self.N}, {self.coeffs!r})"

    # -- inspection ---------------------------------------------------------

    def truncate(self, N: int) -> "MultiSeries":
        return MultiSeries(self.n, min(N, self.N), self.coeffs)

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self.coeffs.get(tuple(exponents), 0)

    def constant_term(self) -> int:
        return self.coeffs.get((0,) * (self.n + 1), 0)

    def order(self) -> int | None:
        """Lowest total ``t``-degree of a nonzero term; ``None`` for zero."""
        if not self.coeffs:
            return None
        return min(sum(e[1:]) for e in self.coeffs)

    def to_records(self) -> list[dict]:
        return [{"exponents": list(e), "coefficient": self.coeffs[e]} for e in sorted(self.coeffs)]

    def to_json(self) -> str:
        return json.dumps(self.to_records())

    @classmethod
    def from_records(cls, n, N, records: Iterable[Mapping]):
        return cls(n, N, {tuple(r["exponents"]): r["coefficient"] for r in records})


def series_add(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    return a + b


def series_mul(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    return a * b


def first_mismatch(a: MultiSeries, b: MultiSeries):
    """First exponent vector (sorted order) where ``a`` and ``b`` differ up to
    their common truncation, as ``(exponents, a_coeff, b_coeff)``; else ``None``."""
    N = a._check(b)
    a, b = a.truncate(N), b.truncate(N)
    for e in sorted(set(a.coeffs) | set(b.coeffs)):
        ca, cb = a.coeffs.get(e, 0), b.coeffs.get(e, 0)
        if ca != cb:
            return e, ca, cb
    return None


def series_eq(a: MultiSeries, b: MultiSeries) -> bool:
    return first_mismatch(a, b) is None


def _require_reduced(*series):
    for f in series:
        if f.constant_term():
            raise DomainError("series must have zero constant term (object must be connected)")


def geom_sum(f: MultiSeries) -> MultiSeries:
    """``f + f^2 + f^3 + ...``, the reduced series of ``J X``."""
    _require_reduced(f)
    total = MultiSeries.zero(f.n, f.N)
    power = f
    # every term of f has s- plus t-degree >= 1, so powers vanish past 2N
    while power:
        total = total + power
        power = power * f
    return total


def wedge_series(a, b):
    return a + b


def product_series(a, b):
    return a + b + a * b


def smash_series(a, b):
    return a * b


def suspend_series(a):
    return MultiSeries.s(a.n, a.N) * a


def join_series(a, b):
    return suspend_series(a * b)


def half_smash_series(a, b):
    """``(1 + a) * b``: a half-smash collapses only the copy of ``a`` at the base point."""
    return b + a * b


def cof_null_series(a, b):
    """Cofiber of a null map ``X -> Y``: ``Sigma X v Y``."""
    return suspend_series(a) + b


# -- connectivity lower bounds -------------------------------------------------
# Every combinator below returns a lower bound, never an exact connectivity.

def _check_conn(*ks):
    for k in ks:
        if k < -1:
            raise DomainError(f"connectivity bound {k} < -1")


def conn_susp(k: int) -> int:
    _check_conn(k)
    return k + 1


def conn_loop(k: int) -> int:
    _check_conn(k)
    if k < 0:
        raise DomainError("loops of a (-1)-connected object have no connectivity bound")
    return k - 1


def conn_smash(k: int, l: int) -> int:
    _check_conn(k, l)
    return k + l + 1


def conn_smash_power(k: int, m: int) -> int:
    _check_conn(k)
    if m < 0:
        raise DomainError("smash power exponent must be >= 0")
    return m * (k + 1) - 1


def conn_wedge(k: int, l: int) -> int:
    _check_conn(k, l)
    return min(k, l)


conn_product = conn_wedge


def word_connectivity(w: Word, conns: Sequence[int]) -> int:
    """Lower bound on the connectivity of the smash word ``w(X_1, ..., X_n)``.

    Equal to ``sum_i m_i (c_i + 1) - 1`` for multidegree ``m``; the same bound
    holds for ``J w(...)`` since looping undoes the suspension.
    """
    if any(c < 0 for c in conns):
        raise DomainError("all objects must be connected (connectivity >= 0)")
    m = multidegree(w, len(conns))
    return sum(mi * (ci + 1) for mi, ci in zip(m, conns)) - 1


def fold_connectivity(w: Word, conns: Sequence[int]) -> int:
    """Same bound obtained by folding :func:`conn_smash` over the tree."""
    if isinstance(w, Leaf):
        return conns[w.index - 1]
    return conn_smash(fold_connectivity(w.left, conns), fold_connectivity(w.right, conns))


@dataclass
class FormalObject:
    name: str
    connectivity: int
    reduced_series: MultiSeries = field(repr=False)

    def __post_init__(self):
        if self.connectivity < 0:
            raise DomainError(
                f"{self.name}: connectivity {self.connectivity} < 0; only pointed connected objects are allowed"
            )
        if self.reduced_series.constant_term():
            raise DomainError(f"{self.name}: reduced series has a constant term")
        order = self.reduced_series.order()
        if order is not None and order < self.connectivity + 1:
            raise DomainError(
                f"{self.name}: series order {order} is below connectivity + 1 = {self.connectivity + 1}"
            )

    @classmethod
    def sphere_like(cls, name, index, n, connectivity=0, N=DEFAULT_TRUNCATION):
        """Object with series ``t_i^(c+1)``: a single cell just above its connectivity."""
        return cls(name, connectivity, MultiSeries.gen(index, n, N, power=connectivity + 1))


def smash_word_series(w: Word, series: Sequence[MultiSeries]) -> MultiSeries:
    """Series of ``w(X_1, ..., X_n)``: the product of the leaf series."""
    if isinstance(w, Leaf):
        return series[w.index - 1]
    return smash_word_series(w.left, series) * smash_word_series(w.right, series)


def word_series_order(w: Word, orders: Sequence[int]) -> int:
    return sum(orders[i - 1] for i in w.leaves())


__all__ = [
    "DEFAULT_TRUNCATION",
    "FormalObject",
    "MultiSeries",
    "cof_null_series",
    "conn_loop",
    "conn_product",
    "conn_smash",
    "conn_smash_power",
    "conn_susp",
    "conn_wedge",
    "first_mismatch",
    "fold_connectivity",
    "geom_sum",
    "half_smash_series",
    "join_series",
    "product_series",
    "series_add",
    "series_eq",
    "series_mul",
    "smash_series",
    "smash_word_series",
    "suspend_series",
    "wedge_series",
    "word_connectivity",
    "word_series_order",
]
