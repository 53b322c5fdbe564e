"""
Odd pretzel knots: closed-form Alexander data and homologically fibered censuses.

For a pretzel knot with odd parameters the Alexander polynomial has the
closed form

    (1/4) * (e2 * (t^2 - 2t + 1) + t^2 + 2t + 1)        three strands
    leading coefficient (1 + e2 + e4) / 16              five strands

with e2, e4 the elementary symmetric functions of the parameters. For these
genus-minimal surfaces the knot is homologically fibered exactly when the
leading coefficient is ±1.

Author: Robert Torres
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import prod
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np

from ..algebra.laurent import LaurentPoly, NormalizedAlexander, normalize_alexander
from ..config import thread_count
from ..exceptions import DomainError
from .seifert import SeifertMatrix

logger = logging.getLogger(__name__)

ORDERS = ("published", "lex")


def _check_odd(values: Iterable[int], kind: str) -> None:
    even = [v for v in values if v % 2 == 0]
    if even:
        raise DomainError(f"{kind} parameters must all be odd, got even value(s) {even}")


def _elementary(values: Tuple[int, ...], k: int) -> int:
    return sum(prod(c) for c in combinations(values, k))


@dataclass(frozen=True)
class Pretzel3:
    p: int
    q: int
    r: int

    def __post_init__(self):
        _check_odd(self.params, "Pretzel3")

    @property
    def params(self) -> Tuple[int, int, int]:
        return (self.p, self.q, self.r)

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.params) + "}"


@dataclass(frozen=True)
class Pretzel5:
    p: int
    q: int
    r: int
    s: int
    u: int

    def __post_init__(self):
        _check_odd(self.params, "Pretzel5")

    @property
    def params(self) -> Tuple[int, int, int, int, int]:
        return (self.p, self.q, self.r, self.s, self.u)

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.params) + "}"


def alexander3(k: Pretzel3) -> NormalizedAlexander:
    """Normalized Alexander polynomial of the three-strand odd pretzel knot."""
    t = LaurentPoly.variable(('t',), 't')
    e2 = _elementary(k.params, 2)
    raw = (t * t - t * 2 + 1) * e2 + t * t + t * 2 + 1
    poly = raw.scale(Fraction(1, 4))
    if not poly.is_integral():
        raise DomainError(f"Alexander polynomial of {k} is not integral: {poly}")
    return normalize_alexander(poly)


def leading3(k: Pretzel3) -> Fraction:
    return Fraction(_elementary(k.params, 2) + 1, 4)


def leading5(k: Pretzel5) -> Fraction:
    """(1 + e2 + e4) / 16 for the five parameters."""
    return Fraction(1 + _elementary(k.params, 2) + _elementary(k.params, 4), 16)


def seifert_matrix3(k: Pretzel3) -> SeifertMatrix:
    """Standard genus-one Seifert matrix of the three-strand odd pretzel knot."""
    p, q, r = k.params
    return SeifertMatrix.from_rows(1, 1, [[(p + q) // 2, (q + 1) // 2],
                                          [(q - 1) // 2, (q + r) // 2]])


def _odd_range(low: int, high: int) -> range:
    """Odd integers in [low, high]."""
    start = low if low % 2 else low + 1
    return range(start, high + 1, 2)


def _published_key(params: Tuple[int, ...], leading: Fraction) -> Tuple:
    negatives = sorted(abs(v) for v in params if v < 0)
    positives = sorted(v for v in params if v > 0)
    return (0 if leading > 0 else 1, tuple(negatives), tuple(positives))


def _ordered(hits: List[Tuple[Tuple[int, ...], Fraction]], order: str) -> List[Tuple[int, ...]]:
    if order not in ORDERS:
        raise DomainError(f"Invalid order: {order}. Must be one of: {', '.join(ORDERS)}")
    if order == "lex":
        return sorted(params for params, _ in hits)
    return [params for params, lead in sorted(hits, key=lambda h: _published_key(*h))]


def census3(p_min: int = -99, p_max: int = -3, qr_min: int = 3, qr_max: int = 99,
            order: str = "published") -> List[Pretzel3]:
    """
    Homologically fibered three-strand pretzel knots with p_min <= p <= p_max
    and qr_min <= q <= r <= qr_max (odd values only).

    The condition is e2 = pq + qr + rp in {3, -5}; for fixed (p, q) that is linear in r.
    """
    hits = []
    for p in _odd_range(p_min, p_max):
        for q in _odd_range(qr_min, qr_max):
            a, b = p + q, p * q
            for target in (3, -5):
                if a == 0:
                    if b == target:
                        hits.extend(((p, q, r), leading3(Pretzel3(p, q, r)))
                                    for r in _odd_range(q, qr_max))
                    continue
                r, remainder = divmod(target - b, a)
                if remainder == 0 and r % 2 and q <= r <= qr_max:
                    hits.append(((p, q, r), Fraction(target + 1, 4)))
    result = [Pretzel3(*params) for params in _ordered(hits, order)]
    logger.info(f"census3 found {len(result)} types in p=[{p_min},{p_max}], q,r=[{qr_min},{qr_max}]")
    return result


@lru_cache(maxsize=16)
def _triangle(values: Tuple[int, ...]) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pairs r <= s drawn from values, sorted by r; also the first index for each r position."""
    arr = np.array(values, dtype=np.int64)
    rows, cols = np.triu_indices(len(arr))
    starts = np.searchsorted(rows, np.arange(len(arr)))
    return arr[rows], arr[cols], starts


def _scan_outer(p: int, qs: List[int], positives: Tuple[int, ...], upper: int,
                inner_from_q: bool) -> List[Tuple[Tuple[int, ...], Fraction]]:
    r_all, s_all, starts = _triangle(positives)
    index_of = {v: i for i, v in enumerate(positives)}
    hits = []
    for q in qs:
        if inner_from_q:
            position = index_of.get(q)
            if position is None:
                continue
            r, s = r_all[starts[position]:], s_all[starts[position]:]
        else:
            r, s = r_all, s_all
        if not len(r):
            continue
        a, b = p + q, p * q
        big_r = r + s
        big_p = r * s
        alpha = 1 + b + a * big_r + big_p + b * big_p
        beta = a + big_r + b * big_r + a * big_p
        for target in (16, -16):
            numerator = target - alpha
            nonzero = beta != 0
            safe_beta = np.where(nonzero, beta, 1)
            divisible = nonzero & (numerator % safe_beta == 0)
            u = np.where(divisible, numerator // safe_beta, 0)
            ok = divisible & (u % 2 == 1) & (u >= s) & (u <= upper)
            for idx in np.nonzero(ok)[0]:
                hits.append(((p, q, int(r[idx]), int(s[idx]), int(u[idx])),
                             Fraction(target, 16)))
            flat = (~nonzero) & (alpha == target)
            for idx in np.nonzero(flat)[0]:
                for u_value in _odd_range(int(s[idx]), upper):
                    hits.append(((p, q, int(r[idx]), int(s[idx]), u_value), Fraction(target, 16)))
    return hits


def census5(negatives: int = 1, p_min: int = -499, p_max: int = -3, qr_min: int = 3,
            qr_max: int = 499, order: str = "published",
            threads: Optional[int] = None) -> List[Pretzel5]:
    """
    Homologically fibered five-strand pretzel knots, |leading5| = 1.

    negatives=1 scans p_min <= p <= p_max, qr_min <= q <= r <= s <= u <= qr_max.
    negatives=2 scans p_min <= p <= q <= p_max, qr_min <= r <= s <= u <= qr_max.
    For every outer pair (p, q) the (r, s) triangle is handled with numpy and u
    is solved from the linear equation 1 + e2 + e4 = ±16.
    """
    if negatives not in (1, 2):
        raise DomainError(f"Invalid negatives: {negatives}. Must be one of: 1, 2")
    negative_values = list(_odd_range(p_min, p_max))
    positives = tuple(_odd_range(qr_min, qr_max))
    if not negative_values or not positives:
        return []
    jobs = []
    for p in negative_values:
        if negatives == 1:
            jobs.append((p, list(positives), True))
        else:
            jobs.append((p, [q for q in negative_values if q >= p], False))
    workers = threads or thread_count()
    logger.info(f"census5 scanning {len(jobs)} outer values with {workers} worker(s)")
    try:
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                chunks = list(pool.map(
                    lambda job: _scan_outer(job[0], job[1], positives, qr_max, job[2]), jobs))
        else:
            chunks = [_scan_outer(p, qs, positives, qr_max, from_q) for p, qs, from_q in jobs]
    except Exception as e:
        logger.error(f"Error in census5 scan: {e}")
        raise
    hits = [hit for chunk in chunks for hit in chunk]
    result = [Pretzel5(*params) for params in _ordered(hits, order)]
    logger.info(f"census5 found {len(result)} types")
    return result


def census_summary(types: List[Any], strands: int, ranges: Dict[str, Any]) -> Dict[str, Any]:
    """JSON-ready summary of a census run."""
    return {
        "strands": strands,
        "ranges": ranges,
        "count": len(types),
        "types": [list(k.params) for k in types],
    }
