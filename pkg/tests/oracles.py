"""Independent reference computations used by the tests.

Nothing here imports the package: each function counts objects directly
so a shared bug cannot make both sides agree.
"""

from itertools import combinations, product


def poly_dict(pairs):
    out = {}
    for e, c in pairs:
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def naive_mul(a: dict, b: dict) -> dict:
    return poly_dict((ea + eb, ca * cb) for ea, ca in a.items() for eb, cb in b.items())


def box_partitions(rows: int, cols: int) -> dict:
    """Partitions with at most ``rows`` parts, each at most ``cols``, counted by size."""
    counts = {}

    def rec(left, cap, size):
        counts[size] = counts.get(size, 0) + 1
        if left == 0:
            return
        for part in range(1, cap + 1):
            rec(left - 1, part, size + part)

    rec(rows, cols, 0)
    return counts


def gaussian_by_subsets(top: int, bottom: int) -> dict:
    """``[top choose bottom]`` as the inversion count over 0/1 words."""
    if bottom < 0 or bottom > top:
        return {}
    counts = {}
    for ones in combinations(range(top), bottom):
        word = [0] * top
        for i in ones:
            word[i] = 1
        inv = sum(1 for i in range(top) for j in range(i + 1, top) if word[i] > word[j])
        counts[inv] = counts.get(inv, 0) + 1
    return counts


def partitions_with_parts(allowed, limit: int) -> list:
    """Number of partitions of n into parts from ``allowed``, for n < limit."""
    counts = [1] + [0] * (limit - 1)
    for part in sorted(set(allowed)):
        if part <= 0 or part >= limit:
            continue
        for n in range(part, limit):
            counts[n] += counts[n - part]
    return counts


def residue_parts(modulus: int, excluded, limit: int) -> list:
    excluded = {r % modulus for r in excluded}
    return [n for n in range(1, limit) if n % modulus not in excluded]


def rr_difference_partitions(a: int, limit: int) -> list:
    """Partitions with parts differing by at least 2 (and smallest part > a), by size."""
    counts = [0] * limit

    def rec(smallest, size):
        counts[size] += 1
        for part in range(smallest, limit - size):
            rec(part + 2, size + part)

    rec(1 + a, 0)
    return counts


def admissible_words(n: int):
    """All 0/1 tuples of length ``n`` with no two adjacent ones."""
    for word in product((0, 1), repeat=n):
        if all(not (x and y) for x, y in zip(word, word[1:])):
            yield word


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def gordon_partitions(nu: int, s: int, limit: int) -> list:
    """Partitions with f_1 <= s - 1 and f_j + f_(j+1) <= nu, counted by size.

    ``f_j`` is the number of times ``j`` appears.  By Gordon's theorem these
    are equinumerous with partitions avoiding parts 0, +-s mod 2nu+3.
    """
    counts = [0] * limit

    def rec(j, prev, size):
        # choose f_j given f_(j-1) = prev
        if j >= limit - size + 1 or j >= limit:
            counts[size] += 1
            return
        cap = nu - prev
        if j == 1:
            cap = min(cap, s - 1)
        for f in range(cap + 1):
            if size + f * j >= limit:
                break
            rec(j + 1, f, size + f * j)

    rec(1, 0, 0)
    return counts

