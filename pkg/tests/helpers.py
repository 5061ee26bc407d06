"""Independent oracles shared by the tests.

Everything here deliberately avoids the library's Howell-basis machinery:
element sets come from breadth-first additive closure over explicitly rotated
coefficient vectors, so library results are checked against a second route.
"""

from __future__ import annotations


def additive_closure(vectors, q):
    """BFS closure of integer vectors under addition mod q."""
    vectors = [tuple(v % q for v in vec) for vec in vectors]
    if not vectors:
        return frozenset()
    zero = (0,) * len(vectors[0])
    gens = set(vectors) - {zero}
    seen = {zero}
    frontier = [zero]
    while frontier:
        new = []
        for v in frontier:
            for g in gens:
                w = tuple((a + b) % q for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    new.append(w)
        frontier = new
    return frozenset(seen)


def rotate(row, i):
    i %= len(row)
    return tuple(row[-i:] + row[:-i]) if i else tuple(row)


def code_generator_rows(code):
    """Shift/u-multiple rows of a code's generators via plain list rotation."""
    n, q = code.n, code.params.q
    rows = []
    for g in code.generators:
        a = [g[k][0] for k in range(n)]
        b = [g[k][1] for k in range(n)]
        for i in range(n):
            row = list(rotate(a, i)) + list(rotate(b, i))
            rows.append(tuple(row))
            if code.closure_mode == "ideal":
                rows.append(tuple([0] * n + list(rotate(a, i))))
    return rows


def code_element_set(code):
    rows = code_generator_rows(code)
    if not rows:
        return frozenset({(0,) * (2 * code.n)})
    return additive_closure(rows, code.params.q)


def brute_min_weight(code, weight_fn):
    """Minimum weight over the BFS element set; weight_fn sees (a, b) pairs."""
    n = code.n
    best = None
    for vec in code_element_set(code):
        if not any(vec):
            continue
        pairs = [(vec[i], vec[n + i]) for i in range(n)]
        w = weight_fn(pairs)
        if best is None or w < best:
            best = w
    return best


def hamming_pairs(pairs):
    return sum(1 for a, b in pairs if a or b)


def lee_pairs(pairs):
    table = (0, 1, 2, 1)
    return sum(table[b % 4] + table[(a + b) % 4] for a, b in pairs)
