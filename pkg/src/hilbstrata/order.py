"""Term orders on exponents and separating integer weight vectors."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .staircase import Exponent

LESS, EQUAL, GREATER = -1, 0, 1

KINDS = ("lex", "grlex", "grevlex", "weighted")


class OrderError(ValueError):
    pass


class InfeasibleWeightError(OrderError):
    """No integer weight vector separates the given pairs."""


@dataclass(frozen=True)
class TermOrder:
    """A monomial order on N^n.

    ``perm`` lists variable indices from most to least significant, so the
    default ``(0, 1, ..., n-1)`` means x1 > x2 > ... > xn.  A weighted order
    compares ``weights . alpha`` first and falls back on ``tiebreak``.
    """

    kind: str
    n: int
    perm: tuple[int, ...] | None = None
    weights: tuple[int, ...] | None = None
    tiebreak: "TermOrder | None" = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise OrderError(f"unknown order kind {self.kind!r}")
        if self.n < 1:
            raise OrderError("order dimension must be positive")
        perm = tuple(range(self.n)) if self.perm is None else tuple(self.perm)
        if sorted(perm) != list(range(self.n)):
            raise OrderError(f"{perm} is not a permutation of 0..{self.n - 1}")
        object.__setattr__(self, "perm", perm)
        if self.kind == "weighted":
            if self.weights is None or len(self.weights) != self.n:
                raise OrderError("weighted order needs a weight vector of length n")
            if any(w < 0 for w in self.weights):
                raise OrderError("weights must be non-negative for a term order")
            tb = self.tiebreak if self.tiebreak is not None else TermOrder("lex", self.n)
            if tb.n != self.n:
                raise OrderError("tiebreak order has the wrong dimension")
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
            object.__setattr__(self, "tiebreak", tb)

    @classmethod
    def lex(cls, n: int, perm: Sequence[int] | None = None) -> "TermOrder":
        return cls("lex", n, perm)

    @classmethod
    def grlex(cls, n: int, perm: Sequence[int] | None = None) -> "TermOrder":
        return cls("grlex", n, perm)

    @classmethod
    def grevlex(cls, n: int, perm: Sequence[int] | None = None) -> "TermOrder":
        return cls("grevlex", n, perm)

    @classmethod
    def weighted(cls, weights: Sequence[int], tiebreak: "TermOrder | None" = None) -> "TermOrder":
        return cls("weighted", len(weights), None, tuple(weights), tiebreak)

    def key(self, alpha: Exponent) -> tuple:
        """Sort key: alpha < beta in this order iff key(alpha) < key(beta)."""
        if len(alpha) != self.n:
            raise OrderError(f"exponent {alpha} does not have length {self.n}")
        if self.kind == "lex":
            return tuple(alpha[p] for p in self.perm)
        if self.kind == "grlex":
            return (sum(alpha),) + tuple(alpha[p] for p in self.perm)
        if self.kind == "grevlex":
            return (sum(alpha),) + tuple(-alpha[p] for p in reversed(self.perm))
        return (sum(w * a for w, a in zip(self.weights, alpha)),) + self.tiebreak.key(alpha)

    def less(self, alpha: Exponent, beta: Exponent) -> bool:
        return self.key(alpha) < self.key(beta)

    def greater(self, alpha: Exponent, beta: Exponent) -> bool:
        return self.key(alpha) > self.key(beta)

    def max(self, exponents: Iterable[Exponent]) -> Exponent:
        return max(exponents, key=self.key)

    def sorted(self, exponents: Iterable[Exponent], reverse: bool = False) -> list[Exponent]:
        return sorted(exponents, key=self.key, reverse=reverse)

    def spec(self) -> str:
        """Round-trippable text form, as accepted by :func:`parse_order`."""
        if self.kind == "weighted":
            return "w:" + ",".join(map(str, self.weights)) + ":" + self.tiebreak.spec()
        base = self.kind
        if self.perm != tuple(range(self.n)):
            base += "[" + ",".join(str(p + 1) for p in self.perm) + "]"
        return base


def compare(order: TermOrder, alpha: Exponent, beta: Exponent) -> int:
    """Return LESS, EQUAL or GREATER."""
    if len(alpha) != len(beta):
        raise OrderError("dimension mismatch")
    ka, kb = order.key(alpha), order.key(beta)
    if ka == kb:
        return EQUAL
    return LESS if ka < kb else GREATER


def parse_vars(text: str, n: int) -> tuple[int, ...]:
    """Parse a variable priority list like ``2,1`` or ``x2,x1`` (1-based)."""
    items = [s.strip().lstrip("x") for s in text.split(",") if s.strip()]
    perm = tuple(int(s) - 1 for s in items)
    if sorted(perm) != list(range(n)):
        raise OrderError(f"--vars {text!r} is not a permutation of 1..{n}")
    return perm


def parse_order(text: str, n: int, perm: Sequence[int] | None = None) -> TermOrder:
    """Parse ``lex``, ``grlex``, ``grevlex``, ``w:<c1,..,cn>:<tiebreak>``.

    A bracketed suffix such as ``lex[2,1]`` sets the variable priority inline.
    """
    text = text.strip()
    if text.startswith("w:"):
        rest = text[2:]
        weights_text, _, tb_text = rest.partition(":")
        weights = tuple(int(c) for c in weights_text.split(","))
        if len(weights) != n:
            raise OrderError(f"weight vector {weights} does not have length {n}")
        tiebreak = parse_order(tb_text or "lex", n, perm)
        return TermOrder.weighted(weights, tiebreak)
    name, _, bracket = text.partition("[")
    if bracket:
        perm = parse_vars(bracket.rstrip("]"), n)
    if name not in ("lex", "grlex", "grevlex"):
        raise OrderError(f"unknown order {text!r}")
    return TermOrder(name, n, perm)


def _separates(weights: Sequence[int], diffs: list[tuple[int, ...]]) -> bool:
    return all(sum(w * d for w, d in zip(weights, diff)) > 0 for diff in diffs)


def _structured_candidates(n: int, bound: int):
    """Weight vectors M*(1,..,1) +/- lex-like perturbations, for growing M."""
    yield (1,) * n
    for base in range(2, bound + 1):
        for perm in itertools.permutations(range(n)):
            lexlike = [0] * n
            for rank, var in enumerate(perm):
                lexlike[var] = base ** (n - 1 - rank)
            yield tuple(lexlike)
            for m in (base ** n, base ** (n + 1)):
                yield tuple(m + p for p in lexlike)
                yield tuple(m - p for p in lexlike)


def find_separating_weight(pairs: Iterable[tuple[Exponent, Exponent]],
                           n: int | None = None, box: int = 8) -> tuple[int, ...]:
    """Find integer weights w with w.alpha > w.beta for every pair (alpha, beta).

    Tries structured candidates first, then an exhaustive scan of small
    non-negative boxes in a deterministic order.  The answer is re-checked
    against every pair before it is returned.
    """
    pairs = [(tuple(a), tuple(b)) for a, b in pairs]
    if n is None:
        if not pairs:
            raise OrderError("cannot infer dimension from an empty pair set")
        n = len(pairs[0][0])
    if any(len(a) != n or len(b) != n for a, b in pairs):
        raise OrderError("dimension mismatch among pairs")
    diffs = sorted({tuple(x - y for x, y in zip(a, b)) for a, b in pairs})
    if any(all(d <= 0 for d in diff) for diff in diffs):
        raise InfeasibleWeightError("some pair has alpha <= beta coordinatewise; no weight can separate it")

    spread = max((max(abs(d) for d in diff) for diff in diffs), default=1)
    found = None
    for cand in _structured_candidates(n, max(spread + 2, 3)):
        if _separates(cand, diffs):
            found = cand
            break
    if found is None:
        for b in range(1, box + 1):
            grid = sorted(itertools.product(range(b + 1), repeat=n), key=lambda w: (sum(w), w))
            for cand in grid:
                if max(cand) == b and _separates(cand, diffs):
                    found = cand
                    break
            if found is not None:
                break
    if found is None:
        raise InfeasibleWeightError(f"no separating weight found with entries up to {box}")
    if not _separates(found, diffs):  # pragma: no cover - guarded by construction
        raise InfeasibleWeightError("candidate failed re-validation")
    return tuple(found)
