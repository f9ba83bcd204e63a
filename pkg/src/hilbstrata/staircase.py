"""Standard sets (staircases) in N^n and their combinatorics.

An exponent is a plain tuple of non-negative ints.  A standard set is a finite
subset of N^n closed under taking coordinatewise-smaller exponents; its
complement is then a monomial ideal whose minimal generators are the corners.

Everything here is canonically ordered by degree-lex so that outputs are
reproducible byte-for-byte.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

Exponent = tuple[int, ...]

MAX_DIMENSION = 16
DEFAULT_ENUMERATION_CAP = 10**6


class StaircaseError(ValueError):
    """Raised for malformed exponents or sets that are not standard."""


def deglex_key(alpha: Exponent) -> tuple:
    """Administrative sort key: total degree first, then lexicographic."""
    return (sum(alpha), alpha)


def canonical(exponents: Iterable[Exponent]) -> list[Exponent]:
    return sorted(set(exponents), key=deglex_key)


def unit(n: int, i: int) -> Exponent:
    return tuple(1 if k == i else 0 for k in range(n))


def add(alpha: Exponent, beta: Exponent) -> Exponent:
    return tuple(a + b for a, b in zip(alpha, beta))


def sub(alpha: Exponent, beta: Exponent) -> Exponent | None:
    """alpha - beta, or None when the difference leaves N^n."""
    diff = tuple(a - b for a, b in zip(alpha, beta))
    if any(d < 0 for d in diff):
        return None
    return diff


def shift(alpha: Exponent, i: int, step: int = 1) -> Exponent | None:
    """alpha + step*e_i, or None when the result leaves N^n."""
    value = alpha[i] + step
    if value < 0:
        return None
    return alpha[:i] + (value,) + alpha[i + 1:]


def divides(alpha: Exponent, beta: Exponent) -> bool:
    """True iff x^alpha divides x^beta, i.e. alpha <= beta coordinatewise."""
    return all(a <= b for a, b in zip(alpha, beta))


def degree(alpha: Exponent) -> int:
    return sum(alpha)


def _check_exponents(elements: Iterable[Exponent], n: int) -> list[Exponent]:
    if not 1 <= n <= MAX_DIMENSION:
        raise StaircaseError(f"dimension {n} outside 1..{MAX_DIMENSION}")
    out = []
    for e in elements:
        e = tuple(int(c) for c in e)
        if len(e) != n:
            raise StaircaseError(f"exponent {e} does not have length {n}")
        if any(c < 0 for c in e):
            raise StaircaseError(f"exponent {e} has a negative coordinate")
        out.append(e)
    return out


def is_standard_set(elements: Iterable[Exponent], n: int) -> bool:
    """Check downward closure: beta in the set and beta - e_i >= 0 imply beta - e_i in the set."""
    members = set(_check_exponents(elements, n))
    for beta in members:
        for i in range(n):
            lower = shift(beta, i, -1)
            if lower is not None and lower not in members:
                return False
    return True


def border_of(members: frozenset[Exponent] | set[Exponent], n: int) -> list[Exponent]:
    """Union of members + e_i, minus the members themselves."""
    out = set()
    for beta in members:
        for i in range(n):
            up = shift(beta, i)
            if up not in members:
                out.add(up)
    return canonical(out)


@dataclass(frozen=True)
class StandardSet:
    """A finite staircase delta in N^n, stored as a deglex-sorted tuple."""

    n: int
    elements: tuple[Exponent, ...]
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        elems = _check_exponents(self.elements, self.n)
        if not elems:
            raise StaircaseError("a standard set must be non-empty")
        if not is_standard_set(elems, self.n):
            raise StaircaseError(f"not a standard set: {sorted(elems)}")
        object.__setattr__(self, "elements", tuple(canonical(elems)))
        object.__setattr__(self, "_members", frozenset(self.elements))

    @classmethod
    def of(cls, elements: Iterable[Iterable[int]], n: int | None = None) -> "StandardSet":
        elems = [tuple(e) for e in elements]
        if n is None:
            if not elems:
                raise StaircaseError("cannot infer dimension of an empty set")
            n = len(elems[0])
        return cls(n, tuple(elems))

    @classmethod
    def axis(cls, n: int, r: int, i: int = 0) -> "StandardSet":
        """The segment {0, e_i, ..., (r-1) e_i}."""
        return cls(n, tuple(tuple(k if j == i else 0 for j in range(n)) for k in range(r)))

    @classmethod
    def box(cls, sides: Iterable[int]) -> "StandardSet":
        sides = tuple(sides)
        return cls(len(sides), tuple(itertools.product(*(range(s) for s in sides))))

    def __contains__(self, alpha) -> bool:
        return tuple(alpha) in self._members

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Exponent]:
        return iter(self.elements)

    @property
    def members(self) -> frozenset[Exponent]:
        return self._members

    def bounding_box(self) -> tuple[int, ...]:
        """Componentwise max over delta plus 2; all corner/border/edge phenomena live inside."""
        return tuple(max(e[i] for e in self.elements) + 2 for i in range(self.n))

    @cached_property
    def border(self) -> tuple[Exponent, ...]:
        return tuple(border_of(self._members, self.n))

    @cached_property
    def corners(self) -> tuple[Exponent, ...]:
        out = []
        for alpha in self.border:
            if all(alpha[i] == 0 or shift(alpha, i, -1) in self._members for i in range(self.n)):
                out.append(alpha)
        return tuple(out)

    @cached_property
    def edge_planes(self) -> tuple[tuple[Exponent, int, int], ...]:
        """Triples (eps, i, j), i < j, with eps in N e_i + N e_j and eps+e_i, eps+e_j outside delta.

        A point with two nonzero coordinates lives in exactly one plane; points on an
        axis (or the origin) are listed once for every plane that passes the test.
        """
        out = []
        for eps in self.elements:
            support = [k for k in range(self.n) if eps[k]]
            if len(support) > 2:
                continue
            for i, j in itertools.combinations(range(self.n), 2):
                if not set(support) <= {i, j}:
                    continue
                if shift(eps, i) not in self._members and shift(eps, j) not in self._members:
                    out.append((eps, i, j))
        return tuple(out)

    @cached_property
    def edge_points(self) -> tuple[Exponent, ...]:
        return tuple(canonical(eps for eps, _, _ in self.edge_planes))

    def iterated_border(self, i: int) -> tuple[Exponent, ...]:
        return tuple(iterated_border(self, i))

    def union_with_borders(self, i: int) -> frozenset[Exponent]:
        """N u N^(1) u ... u N^(i)."""
        members = set(self._members)
        for _ in range(i):
            members.update(border_of(members, self.n))
        return frozenset(members)

    def to_json(self) -> dict:
        return {"n": self.n, "elements": [list(e) for e in self.elements]}

    @classmethod
    def from_json(cls, data: dict) -> "StandardSet":
        return cls(int(data["n"]), tuple(tuple(e) for e in data["elements"]))

    def __str__(self) -> str:
        return "{" + ", ".join(str(e) for e in self.elements) + "}"


def corners(delta: StandardSet) -> set[Exponent]:
    return set(delta.corners)


def border(delta: StandardSet) -> set[Exponent]:
    return set(delta.border)


def iterated_border(N: StandardSet, i: int) -> set[Exponent]:
    """N^(1) = border(N) and N^(i+1) = border(N u N^(1) u ... u N^(i))."""
    if i < 1:
        raise StaircaseError("iterated border index must be positive")
    return set(border_of(N.union_with_borders(i - 1), N.n))


def edge_points(delta: StandardSet) -> set[Exponent]:
    return set(delta.edge_points)


def union(a: StandardSet, b: StandardSet) -> StandardSet:
    if a.n != b.n:
        raise StaircaseError("dimension mismatch")
    return StandardSet(a.n, tuple(a.members | b.members))


def enumerate_standard_sets(n: int, r: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[StandardSet]:
    """All standard sets of size r in N^n, each exactly once.

    Every prefix of the deglex-sorted element list of a standard set is again
    standard, so each set is grown uniquely by appending corners in increasing
    deglex order.
    """
    if n < 1 or r < 1:
        raise StaircaseError("need n >= 1 and r >= 1")
    results: list[tuple[Exponent, ...]] = []
    origin = (0,) * n

    def grow(members: set[Exponent], last: Exponent):
        if len(members) == r:
            results.append(tuple(sorted(members, key=deglex_key)))
            if len(results) > cap:
                raise StaircaseError(f"more than {cap} standard sets of size {r} in dimension {n}")
            return
        last_key = deglex_key(last)
        for c in border_of(members, n):
            if deglex_key(c) <= last_key:
                continue
            if all(c[i] == 0 or shift(c, i, -1) in members for i in range(n)):
                members.add(c)
                grow(members, c)
                members.remove(c)

    grow({origin}, origin)
    return [StandardSet(n, elems) for elems in results]
