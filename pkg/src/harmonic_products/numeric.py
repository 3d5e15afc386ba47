"""Exact rational arithmetic and harmonic numbers.

Every centrality value in the package is a :class:`fractions.Fraction`,
re-exported here as ``Rational``. Fractions are always kept in lowest terms
with a positive denominator, and arithmetic on them never rounds.
"""

from __future__ import annotations

import threading
from fractions import Fraction

__all__ = [
    "Rational",
    "harmonic_number",
    "format_rational",
    "parse_rational",
    "compare",
]

Rational = Fraction

_memo: list[Fraction] = [Fraction(0)]
_memo_lock = threading.Lock()


def harmonic_number(n: int) -> Fraction:
    """Return ``H_n = 1 + 1/2 + ... + 1/n`` exactly; ``H_0`` is 0.

    Values are memoized up to the largest ``n`` requested so far. Reads are
    lock-free; extending the table is serialized.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"harmonic_number expects an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"harmonic_number requires n >= 0, got {n}")
    if n < len(_memo):
        return _memo[n]
    with _memo_lock:
        k = len(_memo)
        acc = _memo[-1]
        while k <= n:
            acc += Fraction(1, k)
            _memo.append(acc)
            k += 1
    return _memo[n]


def compare(a: Fraction, b: Fraction) -> int:
    """Three-way comparison: -1, 0 or 1."""
    return (a > b) - (a < b)


def format_rational(x: Fraction) -> str:
    """Serialize as ``p/q`` in lowest terms, or ``p`` when integral."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`.

    Only ``p`` or ``p/q`` with integer ``p`` and positive ``q`` are accepted;
    decimal or exponent notation is rejected.
    """
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if q <= 0:
        raise ValueError(f"denominator must be positive: {text!r}")
    return Fraction(p, q)
