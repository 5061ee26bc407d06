"""Canonical row bases for Z_q-submodules of Z_q^N, q = p^s.

Z_q is a chain ring, so every submodule has a Howell basis: a staircase of
rows whose pivots are exact p-powers, closed under the annihilator multiples
p^{s-e} * row.  The fully reduced form is unique per submodule, which makes
it usable as an element-set fingerprint.  It also yields exact span sizes,
membership tests, and a bijective mixed-radix enumeration of the span.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def pval(x: int, p: int, s: int) -> int:
    """p-adic valuation of x mod p^s (the value s stands for zero)."""
    if x == 0:
        return s
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def _first_nonzero(row: Sequence[int]) -> int:
    for c, x in enumerate(row):
        if x:
            return c
    return -1


class _Builder:
    def __init__(self, p: int, s: int, ncols: int):
        self.p = p
        self.s = s
        self.q = p**s
        self.ncols = ncols
        self.piv: dict[int, tuple[int, list[int]]] = {}  # col -> (val, row)

    def reduce(self, v: list[int]) -> list[int]:
        q = self.q
        p = self.p
        for c in sorted(self.piv):
            x = v[c]
            if x == 0:
                continue
            e, row = self.piv[c]
            if pval(x, p, self.s) >= e:
                m = x // p**e
                for i in range(c, self.ncols):
                    v[i] = (v[i] - m * row[i]) % q
        return v

    def insert_all(self, rows: Iterable[Sequence[int]]) -> None:
        q = self.q
        p = self.p
        s = self.s
        work = [[x % q for x in r] for r in rows]
        while work:
            v = self.reduce(work.pop())
            c = _first_nonzero(v)
            if c < 0:
                continue
            e = pval(v[c], p, s)
            inv = pow(v[c] // p**e, -1, q)
            v = [(inv * x) % q for x in v]  # pivot becomes exactly p^e
            if c in self.piv:
                old_e, old_row = self.piv[c]
                if e >= old_e:  # would have been eliminated above
                    raise AssertionError("howell invariant violated")
                self.piv[c] = (e, v)
                work.append(old_row)
            else:
                self.piv[c] = (e, v)
            if e:
                work.append([(x * p ** (s - e)) % q for x in v])

    def close(self) -> None:
        # Howell criterion: every annihilator multiple reduces to zero.
        p, s, q = self.p, self.s, self.q
        while True:
            pending = []
            for _, (e, row) in sorted(self.piv.items()):
                if e == 0:
                    continue
                ann = self.reduce([(x * p ** (s - e)) % q for x in row])
                if _first_nonzero(ann) >= 0:
                    pending.append(ann)
            if not pending:
                return
            self.insert_all(pending)

    def normalized_rows(self) -> list[tuple[int, int, tuple[int, ...]]]:
        # Reduce entries at other pivot columns, left to right, to land on
        # the unique fully reduced form.
        p, q = self.p, self.q
        cols = sorted(self.piv)
        for c in cols:
            e_c, row_c = self.piv[c]
            mod = p**e_c
            for c2 in cols:
                if c2 == c:
                    continue
                e2, row2 = self.piv[c2]
                m = row2[c] // mod
                if m == 0:
                    continue
                new = list(row2)
                for i in range(c, self.ncols):
                    new[i] = (new[i] - m * row_c[i]) % q
                self.piv[c2] = (e2, new)
        return [(c, self.piv[c][0], tuple(self.piv[c][1])) for c in cols]


@dataclass(frozen=True)
class ZqSpan:
    """Immutable Howell basis of the Z_q-span of a set of integer rows."""

    p: int
    s: int
    ncols: int
    rows: tuple[tuple[int, int, tuple[int, ...]], ...]  # (pivot col, val, row)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], p: int, s: int, ncols: int) -> "ZqSpan":
        b = _Builder(p, s, ncols)
        b.insert_all(rows)
        b.close()
        return cls(p, s, ncols, tuple(b.normalized_rows()))

    @property
    def q(self) -> int:
        return self.p**self.s

    def size_exponent(self) -> int:
        """log_p of the number of elements in the span."""
        return sum(self.s - e for _, e, _ in self.rows)

    def size(self) -> int:
        return self.p ** self.size_exponent()

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        q = self.q
        v = [x % q for x in vec]
        for c, e, row in self.rows:
            x = v[c]
            if x and pval(x, self.p, self.s) >= e:
                m = x // self.p**e
                for i in range(c, self.ncols):
                    v[i] = (v[i] - m * row[i]) % q
        return tuple(v)

    def contains(self, vec: Sequence[int]) -> bool:
        return not any(self.reduce(vec))

    def fingerprint(self) -> tuple:
        return (self.p, self.s, self.ncols, self.rows)

    def enumeration_basis(self) -> tuple[list[tuple[int, ...]], list[int]]:
        """Rows and coefficient ranges giving each span element exactly once.

        The span is { sum t_i * row_i : 0 <= t_i < range_i } with distinct
        tuples giving distinct elements.
        """
        basis = [row for _, _, row in self.rows]
        ranges = [self.p ** (self.s - e) for _, e, _ in self.rows]
        return basis, ranges

    def elements(self) -> Iterator[tuple[int, ...]]:
        """Yield every span element (caller is responsible for size guards)."""
        q = self.q
        basis, ranges = self.enumeration_basis()
        word = [0] * self.ncols
        digits = [0] * len(basis)
        yield tuple(word)
        total = 1
        for r in ranges:
            total *= r
        for _ in range(total - 1):
            i = 0
            while True:
                digits[i] += 1
                if digits[i] < ranges[i]:
                    row = basis[i]
                    for j in range(self.ncols):
                        word[j] = (word[j] + row[j]) % q
                    break
                digits[i] = 0
                row = basis[i]
                back = ranges[i] - 1
                for j in range(self.ncols):
                    word[j] = (word[j] - back * row[j]) % q
                i += 1
            yield tuple(word)
