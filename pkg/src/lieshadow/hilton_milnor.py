"""Hilton-Milnor factor lists and their power-series shadow.

For connected ``X_1, ..., X_n`` the loop space ``Omega Sigma (X_1 v ... v X_n)``
splits as a weak product of ``Omega Sigma w(X_1, ..., X_n)`` over a Hall basis.
The infinite product is represented by the factors up to a bound together
with ``residual_conn``, a lower bound on the connectivity of every factor left
out.  Series checks compare both sides coefficient by coefficient.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import DomainError
from .hall_words import HallBasisTable, OrderPolicy, RankedWord, enumerate_hall_basis
from .homotopy_series import (
    DEFAULT_TRUNCATION,
    FormalObject,
    MultiSeries,
    first_mismatch,
    geom_sum,
    half_smash_series,
    product_series,
    smash_word_series,
    suspend_series,
    word_connectivity,
    word_series_order,
)


@dataclass(frozen=True)
class DecompositionFactor:
    word: RankedWord
    multidegree: tuple[int, ...]
    conn_bound: int
    factor_series: MultiSeries


@dataclass
class Decomposition:
    inputs: list[FormalObject]
    max_len: int | None
    min_conn: int | None
    factors: list[DecompositionFactor]
    residual_conn: int
    table: HallBasisTable | None

    @property
    def names(self):
        return [o.name for o in self.inputs]

    def format_word(self, rw: RankedWord) -> str:
        return self.table.format(rw.word)

    def to_text(self) -> str:
        lines = ["serial\tword\tmultidegree\tconn_bound"]
        for f in self.factors:
            md = "(" + ",".join(map(str, f.multidegree)) + ")"
            lines.append(f"{f.word.serial}\t{self.format_word(f.word)}\t{md}\t{f.conn_bound}")
        lines.append(f"# omitted factors are at least {self.residual_conn}-connected")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "inputs": [{"name": o.name, "connectivity": o.connectivity} for o in self.inputs],
            "max_len": self.max_len,
            "min_conn": self.min_conn,
            "residual_conn": self.residual_conn,
            "factors": [
                {
                    "serial": f.word.serial,
                    "word": self.format_word(f.word),
                    "rank": f.word.rank,
                    "multidegree": list(f.multidegree),
                    "conn_bound": f.conn_bound,
                    "factor_series": f.factor_series.to_records(),
                }
                for f in self.factors
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _names(objects):
    return [o.name for o in objects]


def decompose(
    objects: Sequence[FormalObject],
    max_len: int | None = None,
    min_conn: int | None = None,
    policy: OrderPolicy = OrderPolicy.CREATION,
) -> Decomposition:
    """Factor list of the splitting, cut off by word length or by connectivity.

    With ``max_len=L`` the factors are the basis words of length <= L.  With
    ``min_conn=C`` they are the words whose connectivity bound is below C, so
    every omitted factor is at least C-connected.
    """
    if not objects:
        raise DomainError("need at least one object")
    if (max_len is None) == (min_conn is None):
        raise DomainError("give exactly one of max_len and min_conn")
    for o in objects:
        if o.connectivity < 0:
            raise DomainError(
                f"{o.name} has connectivity {o.connectivity}; the splitting needs pointed connected objects"
            )
    n = len(objects)
    conns = [o.connectivity for o in objects]
    series = [o.reduced_series for o in objects]
    if any(f.n != n for f in series):
        raise DomainError(f"every reduced series must have {n} generator variables")
    step = min(conns) + 1

    if max_len is not None:
        if max_len < 1:
            raise DomainError("max_len must be positive")
        table_len = max_len
        residual = (max_len + 1) * step - 1
    else:
        if min_conn < 1:
            raise DomainError("min_conn must be positive")
        # conn(w) >= len(w) * step - 1, so longer words all clear the bar
        table_len = min_conn // step
        residual = min_conn

    table = enumerate_hall_basis(n, table_len, policy, _names(objects)) if table_len >= 1 else None
    factors = []
    for rw in table or ():
        c = word_connectivity(rw.word, conns)
        if min_conn is not None and c >= min_conn:
            continue
        factors.append(
            DecompositionFactor(
                word=rw,
                multidegree=table.multidegree(rw.word),
                conn_bound=c,
                factor_series=geom_sum(smash_word_series(rw.word, series)),
            )
        )
    if table is None:
        table = enumerate_hall_basis(n, 1, policy, _names(objects))
    return Decomposition(list(objects), max_len, min_conn, factors, residual, table)


class Check(NamedTuple):
    label: str
    lhs: MultiSeries
    rhs: MultiSeries

    @property
    def mismatch(self):
        return first_mismatch(self.lhs, self.rhs)

    @property
    def ok(self) -> bool:
        return self.mismatch is None


def hm_series_checks(objects: Sequence[FormalObject], N: int) -> list[Check]:
    """Both sides of the series identity ``J(f_1 + ... + f_n) = prod_w J(w(f))``.

    Only words whose smash series can reach degree ``N`` contribute; that set
    is finite because every object has order >= 1.
    """
    series = [o.reduced_series.truncate(N) for o in objects]
    n = len(series)
    lhs = geom_sum(sum(series[1:], series[0]))
    orders = [f.order() for f in series]
    live = [o for o in orders if o is not None]
    rhs = MultiSeries.zero(n, min(f.N for f in series))
    if live:
        if min(live) < 1:
            raise DomainError("every object needs a series of order >= 1")
        # zero series get an order past N so words containing them drop out
        orders = [o if o is not None else N + 1 for o in orders]
        table = enumerate_hall_basis(n, max(1, N // min(live)), names=_names(objects))
        for rw in table:
            if word_series_order(rw.word, orders) <= N:
                rhs = product_series(rhs, geom_sum(smash_word_series(rw.word, series)))
    return [Check("hilton-milnor", lhs, rhs)]


def verify_hm_series(objects: Sequence[FormalObject], N: int = DEFAULT_TRUNCATION) -> bool:
    return all(c.ok for c in hm_series_checks(objects, N))


def fundamental_split_checks(f_x: MultiSeries, f_y: MultiSeries, N: int) -> list[Check]:
    f_x, f_y = f_x.truncate(N), f_y.truncate(N)
    lhs = geom_sum(f_x + f_y)
    jx = geom_sum(f_x)
    split = product_series(jx, geom_sum(f_y + f_y * jx))
    wedge = MultiSeries.zero(f_x.n, f_x.N)
    power = MultiSeries.one(f_x.n, f_x.N)
    for _ in range(N + 1):
        wedge = wedge + f_y * power
        power = power * f_x
    return [
        Check("split", lhs, split),
        Check("fundamental", lhs, product_series(jx, geom_sum(wedge))),
    ]


def verify_fundamental_split(f_x: MultiSeries, f_y: MultiSeries, N: int = DEFAULT_TRUNCATION) -> bool:
    return all(c.ok for c in fundamental_split_checks(f_x, f_y, N))


def james_checks(f: MultiSeries, N: int) -> list[Check]:
    f = f.truncate(N)
    rhs = MultiSeries.zero(f.n, f.N)
    power = f
    for _ in range(N):
        rhs = rhs + suspend_series(power)
        power = power * f
    return [Check("james", suspend_series(geom_sum(f)), rhs)]


def verify_james(f: MultiSeries, N: int = DEFAULT_TRUNCATION) -> bool:
    return all(c.ok for c in james_checks(f, N))


def half2_checks(f_x: MultiSeries, f_y: MultiSeries, N: int) -> list[Check]:
    f_x, f_y = f_x.truncate(N), f_y.truncate(N)
    lhs = half_smash_series(f_y, suspend_series(f_x))
    return [Check("half2", lhs, suspend_series(f_x + f_x * f_y))]


def verify_half2(f_x: MultiSeries, f_y: MultiSeries, N: int = DEFAULT_TRUNCATION) -> bool:
    return all(c.ok for c in half2_checks(f_x, f_y, N))


def random_series(rng, n: int, N: int, terms: int = 4, max_coeff: int = 3, with_s: bool = True) -> MultiSeries:
    """Sparse random series with t-order >= 1 and small integer coefficients."""
    coeffs = {}
    for _ in range(terms):
        deg = rng.randint(1, N)
        t = [0] * n
        for _ in range(deg):
            t[rng.randrange(n)] += 1
        s = rng.randint(0, 2) if with_s else 0
        c = rng.choice([k for k in range(-max_coeff, max_coeff + 1) if k])
        coeffs[(s, *t)] = c
    return MultiSeries(n, N, coeffs)
