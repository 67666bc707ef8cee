"""Permutations in one-line notation (0-indexed) with 1-indexed cycle I/O.

Products compose right to left, as functions: ``(s * t)(i) == s(t(i))``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import SpecError

_CYCLE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise SpecError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, degree):
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, text, degree):
        return cls(parse_cycles(text, degree))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        if other.degree != self.degree:
            raise SpecError("degree mismatch")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self):
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycles(self):
        return cycle_decomposition(self.images)

    def sign(self):
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __str__(self):
        return format_cycles(self.images)


def cycle_decomposition(images):
    """Non-trivial cycles, each starting at its smallest point, ordered by that point."""
    seen = set()
    out = []
    for start in range(len(images)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        j = int(images[start])
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = int(images[j])
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def format_cycles(images):
    cyc = cycle_decomposition(images)
    if not cyc:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cyc)


def parse_cycles(text, degree):
    """Parse ``"(1 2)(3 4)"`` (commas also accepted) into 0-indexed one-line images."""
    stripped = text.strip()
    if _CYCLE.sub("", stripped).strip():
        raise SpecError(f"bad cycle notation: {text!r}")
    images = list(range(degree))
    for body in _CYCLE.findall(stripped):
        pts = [int(t) - 1 for t in body.replace(",", " ").split()]
        if not pts:
            continue
        if len(set(pts)) != len(pts) or min(pts) < 0 or max(pts) >= degree:
            raise SpecError(f"bad cycle {body!r} for degree {degree}")
        # disjoint cycles commute, so reading order is irrelevant
        for a, b in zip(pts, pts[1:] + pts[:1]):
            if images[a] != a:
                raise SpecError(f"cycles in {text!r} are not disjoint")
            images[a] = b
    if sorted(images) != list(range(degree)):
        raise SpecError(f"cycles in {text!r} are not disjoint")
    return tuple(images)
