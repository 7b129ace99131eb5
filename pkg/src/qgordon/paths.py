"""Admissible lattice paths: the brute-force oracle for the shifted RR sums.

A path on ``[i, f]`` is a 0/1 sequence ``sigma_i .. sigma_f`` with no two
adjacent ones.  Interior positions holding a one are *peaks*, and a path
weighs ``q`` to the sum of its peak coordinates.  Everything here is plain
enumeration and never touches a Gaussian binomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .qalgebra import ZERO, LaurentPoly, invert_variable, q_binomial
from .report import Verification, VerificationReport
from .rrpoly import f_shifted


@dataclass(frozen=True)
class AdmissiblePath:
    start: int
    values: tuple

    def __post_init__(self):
        if not self.values:
            raise ValueError("a path needs at least one point")
        if any(v not in (0, 1) for v in self.values):
            raise ValueError("path values must be 0 or 1")
        if any(a and b for a, b in zip(self.values, self.values[1:])):
            raise ValueError("adjacent ones are not admissible")

    @classmethod
    def from_peaks(cls, start: int, end: int, peaks, s: int = 0, b: int = 0) -> "AdmissiblePath":
        values = [0] * (end - start + 1)
        values[0], values[-1] = s, b
        for p in peaks:
            if not start < p < end:
                raise ValueError(f"peak {p} is not interior to [{start}, {end}]")
            values[p - start] = 1
        return cls(start, tuple(values))

    @property
    def end(self) -> int:
        return self.start + len(self.values) - 1

    @property
    def peaks(self) -> tuple:
        i = self.start
        return tuple(i + k for k, v in enumerate(self.values[1:-1], 1) if v)

    @property
    def weight(self) -> int:
        return sum(self.peaks)


def _sequences(n: int, s: int, b: int, t: int | None) -> Iterator[tuple]:
    # sigma_0 = s, sigma_n = b; interior chosen 0 before 1 (lexicographic)
    if n == 0:
        if s == b:
            yield (s,)
        return
    seq = [s] + [0] * n

    def rec(k: int, used: int):
        if t is not None and used > t:
            return
        if k == n:
            if b and seq[k - 1]:
                return
            if t is None or used == t:
                seq[n] = b
                yield tuple(seq)
            return
        seq[k] = 0
        yield from rec(k + 1, used)
        if not seq[k - 1]:
            seq[k] = 1
            yield from rec(k + 1, used + 1)
            seq[k] = 0

    yield from rec(1, 0)


def enumerate_paths(i: int, f: int, s: int, b: int, t: int | None = None) -> list[AdmissiblePath]:
    """All admissible paths on ``[i, f]`` with ``sigma_i = s`` and ``sigma_f = b``.

    With ``t`` given only paths with exactly ``t`` peaks are kept.  The
    order is lexicographic in the value sequence.
    """
    if i > f:
        raise ValueError(f"empty interval: i={i} > f={f}")
    if s not in (0, 1) or b not in (0, 1):
        raise ValueError("endpoint values must be 0 or 1")
    return [AdmissiblePath(i, seq) for seq in _sequences(f - i, s, b, t)]


@lru_cache(maxsize=None)
def _gf_by_peaks(i: int, f: int, s: int, b: int) -> dict:
    buckets: dict[int, dict[int, int]] = {}
    for seq in _sequences(f - i, s, b, None):
        inner = seq[1:-1]
        w = 0
        t = 0
        for k, v in enumerate(inner, i + 1):
            if v:
                w += k
                t += 1
        bucket = buckets.setdefault(t, {})
        bucket[w] = bucket.get(w, 0) + 1
    return {t: LaurentPoly(d) for t, d in buckets.items()}


def path_gf(i: int, f: int, s: int, b: int, t: int | None = None) -> LaurentPoly:
    """Generating function of admissible paths weighted by peak positions."""
    if i > f:
        raise ValueError(f"empty interval: i={i} > f={f}")
    table = _gf_by_peaks(i, f, s, b)
    if t is not None:
        return table.get(t, ZERO)
    total = ZERO
    for poly in table.values():
        total = total + poly
    return total


def verify_path_lemma(L_max: int = 16) -> list[VerificationReport]:
    """Single-peak-count lemma (eq-2.1), its shift (eq-2.2) and the general form (eq-2.5)."""
    v1 = Verification("eq-2.1", {"L": [0, L_max], "t": [0, "L/2"]})
    v2 = Verification("eq-2.2", {"L": [0, L_max], "t": [0, "L/2"], "M": [0, "L"]})
    v5 = Verification("eq-2.5", {"L": [0, L_max], "M": [0, "L"], "s": [0, 1], "b": [0, 1]})
    for L in range(L_max + 1):
        for t in range(L // 2 + 1):
            term = q_binomial(t, L - 2 * t)
            v1.check({"L": L, "t": t}, term.shift(t * t), path_gf(0, L, 0, 0, t))
            for M in range(L + 1):
                v2.check({"L": L, "t": t, "M": M}, term.shift(t * t - M * t),
                         path_gf(-M, L - M, 0, 0, t))
        for M in range(L + 1):
            for s in (0, 1):
                for b in (0, 1):
                    v5.check({"L": L, "M": M, "s": s, "b": b},
                             f_shifted(s, b, L, M), path_gf(-M, L - M, s, b))
    return [v1.report(), v2.report(), v5.report()]


def verify_decompositions(L_max: int = 16) -> list[VerificationReport]:
    """Concatenation at the origin (eq-2.8) and reflection (eq-2.10), both by enumeration."""
    v8 = Verification("eq-2.8", {"L": [0, L_max], "M": [0, "L"], "s": [0, 1], "b": [0, 1]})
    v10 = Verification("eq-2.10", {"M": [0, L_max], "s": [0, 1], "s'": [0, 1]})
    for L in range(L_max + 1):
        for M in range(L + 1):
            for s in (0, 1):
                for b in (0, 1):
                    rhs = ZERO
                    for sp in (0, 1):
                        rhs = rhs + path_gf(-M, 0, s, sp) * path_gf(0, L - M, sp, b)
                    v8.check({"L": L, "M": M, "s": s, "b": b}, path_gf(-M, L - M, s, b), rhs)
    for M in range(L_max + 1):
        for s in (0, 1):
            for sp in (0, 1):
                v10.check({"M": M, "s": s, "s'": sp}, path_gf(-M, 0, s, sp),
                          invert_variable(path_gf(0, M, sp, s)))
    return [v8.report(), v10.report()]


def render_path(p: AdmissiblePath) -> str:
    """ASCII drawing: one column per unit segment.

    Column ``c`` holds the segment from ``start + c`` to ``start + c + 1``;
    rises and falls go on the upper row, flat runs on the lower row, so a
    peak at ``j`` shows as ``/\\`` in columns ``j-1-start`` and ``j-start``.
    The last row labels both ends of the interval.
    """
    vals = p.values
    n = len(vals) - 1
    top, bottom = [], []
    for a, b in zip(vals, vals[1:]):
        if a == 0 and b == 1:
            top.append("/"), bottom.append(" ")
        elif a == 1 and b == 0:
            top.append("\\"), bottom.append(" ")
        else:
            top.append(" "), bottom.append("_")
    if n == 0:
        # a single point: mark its height
        top, bottom = (["."], [" "]) if vals[0] else ([" "], ["."])
    left, right = str(p.start), str(p.end)
    labels = left + " " * max(1, n - len(left) - len(right) + 1) + right if n else left
    lines = ["1 |" + "".join(top).rstrip(), "0 |" + "".join(bottom).rstrip(), "   " + labels]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def render_path_svg(p: AdmissiblePath, unit: int = 40, margin: int = 20) -> str:
    """SVG drawing: point ``(j, sigma_j)`` maps to pixel
    ``(margin + unit*(j - start), margin + unit*(1 - sigma_j))``."""
    n = len(p.values) - 1
    width = 2 * margin + unit * n
    height = 2 * margin + unit
    pts = " ".join(f"{margin + unit * k},{margin + unit * (1 - v)}" for k, v in enumerate(p.values))
    axis_y = margin + unit
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height + margin}">',
        f'<line x1="{margin}" y1="{axis_y}" x2="{margin + unit * n}" y2="{axis_y}" stroke="gray"/>',
        f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="2"/>',
    ]
    for k in range(n + 1):
        x = margin + unit * k
        parts.append(f'<circle cx="{x}" cy="{axis_y}" r="2"/>')
        parts.append(f'<text x="{x}" y="{axis_y + margin - 4}" font-size="10" '
                     f'text-anchor="middle">{p.start + k}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
