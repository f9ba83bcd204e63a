"""Defining equations of border-basis schemes and Groebner strata.

Every generator lives in Q[T_{alpha,beta}] where alpha runs over a row set and
beta over the standard set delta.  By default ("substitution mode") rows
inside delta are not variables at all: T_{alpha,beta} is rewritten to the
Kronecker delta for alpha in delta, and generators that become identically
zero are dropped.  With ``substitute=False`` those rows stay symbolic and the
I1 generators are emitted instead.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .order import TermOrder
from .poly import Poly, TPoly, TVar
from .staircase import Exponent, StandardSet, deglex_key, shift, unit

LABELS = ("I1", "I2", "I3", "I3e", "STRATUM", "MINIMAL", "UNIVERSAL", "HOMOG")
WHICH = ("full", "fewer", "stratum", "minimal", "universal", "homog")


class EquationError(ValueError):
    pass


Provenance = tuple[Exponent, ...]


def _prov_key(prov: Provenance) -> tuple:
    return tuple(deglex_key(p) for p in prov)


@dataclass(frozen=True)
class Generator:
    label: str
    provenance: Provenance
    poly: TPoly | Poly

    def sort_key(self) -> tuple:
        return (LABELS.index(self.label), _prov_key(self.provenance))

    def to_json(self) -> dict:
        return {"label": self.label, "provenance": [list(p) for p in self.provenance],
                "poly": str(self.poly)}


def normalize(p: TPoly) -> TPoly:
    """Scale by +-1 so the largest term (administrative order) is positive."""
    terms = p.sorted_terms()
    if terms and terms[0][1] < 0:
        return -p
    return p


@dataclass
class EquationSet:
    delta: StandardSet
    row_set: StandardSet
    generators: list[Generator]
    mode: str = "full"
    order: TermOrder | None = None
    substitute: bool = True
    rewrites: dict[TVar, TPoly] = field(default_factory=dict)
    ambient: tuple[TVar, ...] | None = None

    def __post_init__(self):
        seen = {}
        for g in self.generators:
            key = (g.label, g.provenance)
            if key in seen:
                raise EquationError(f"duplicate generator {key}")
            seen[key] = g
        self.generators = sorted(self.generators, key=Generator.sort_key)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def by_label(self, label: str) -> list[Generator]:
        return [g for g in self.generators if g.label == label]

    def polys(self, label: str | None = None) -> list[TPoly]:
        return [g.poly for g in self.generators if label is None or g.label == label]

    def classes(self, label: str) -> list[Provenance]:
        """Distinct provenance tuples with the trailing beta dropped."""
        return sorted({g.provenance[:-1] for g in self.by_label(label)}, key=_prov_key)

    def killed_variables(self) -> set[TVar]:
        out = set()
        for g in self.generators:
            if g.label in ("STRATUM", "HOMOG"):
                out |= g.poly.variables()
        return out

    def variables(self) -> list[TVar]:
        """Ambient variables: explicit list if set, otherwise those occurring."""
        if self.ambient is not None:
            return list(self.ambient)
        vs = set()
        for g in self.generators:
            vs |= g.poly.variables()
        return sorted(vs, key=lambda v: v.key)

    def merged(self, other: "EquationSet", mode: str | None = None) -> "EquationSet":
        if other.delta != self.delta:
            raise EquationError("cannot merge equation sets for different standard sets")
        gens = {(g.label, g.provenance): g for g in self.generators}
        for g in other.generators:
            gens.setdefault((g.label, g.provenance), g)
        return EquationSet(self.delta, self.row_set, list(gens.values()), mode or self.mode,
                           self.order or other.order, self.substitute and other.substitute,
                           {**self.rewrites, **other.rewrites}, self.ambient or other.ambient)

    def to_json(self) -> dict:
        out = {
            "delta": self.delta.to_json(),
            "order": self.order.spec() if self.order is not None else None,
            "mode": self.mode,
            "generators": [g.to_json() for g in self.generators],
        }
        if self.ambient is not None:
            out["variables"] = [str(v) for v in self.ambient]
        if self.rewrites:
            out["rewrites"] = [{"var": str(v), "expression": str(p)}
                               for v, p in sorted(self.rewrites.items(), key=lambda kv: kv[0].key)]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    def to_cas(self) -> str:
        """Macaulay2-style script: a ring in the T-variables and the ideal."""
        vs = self.variables()
        lines = [f"-- standard set {self.delta}", f"-- mode {self.mode}"]
        if self.order is not None:
            lines.append(f"-- order {self.order.spec()}")
        names = [v.cas_name() for v in vs]
        if any(isinstance(g.poly, Poly) for g in self.generators):
            names += [f"x{i + 1}" for i in range(self.delta.n)]
        if names:
            lines.append("R = QQ[" + ", ".join(names) + "];")
        else:
            lines.append("R = QQ;")
        body = [cas_string(g.poly) for g in self.generators]
        if body:
            lines.append("I = ideal(\n  " + ",\n  ".join(body) + "\n);")
        else:
            lines.append("I = ideal(0_R);")
        return "\n".join(lines) + "\n"


def cas_string(p: TPoly | Poly) -> str:
    """Polynomial text with T[(a)|(b)] replaced by identifier names."""
    text = str(p)
    for v in sorted(p.variables(), key=lambda v: -len(str(v))):
        text = text.replace(str(v), v.cas_name())
    return text


# ----------------------------------------------------------------- helpers

def _check_rows(delta: StandardSet, N: StandardSet | None) -> StandardSet:
    if N is None:
        return delta
    if N.n != delta.n:
        raise EquationError("row set and standard set have different dimensions")
    if not delta.members <= N.members:
        raise EquationError("the row set N must contain delta")
    return N


class _TTable:
    """T_{alpha,beta} lookup honoring substitution mode."""

    def __init__(self, delta: StandardSet, substitute: bool):
        self.delta = delta
        self.substitute = substitute
        self._cache: dict = {}

    def __call__(self, alpha: Exponent, beta: Exponent) -> TPoly:
        key = (alpha, beta)
        hit = self._cache.get(key)
        if hit is None:
            if self.substitute and alpha in self.delta:
                hit = TPoly.const(1 if alpha == beta else 0)
            else:
                hit = TPoly.var(TVar(alpha, beta))
            self._cache[key] = hit
        return hit


def _product_sum(T, delta: StandardSet, alpha: Exponent, lam_index: int, beta: Exponent) -> TPoly:
    """sum over gamma in delta of T_{alpha,gamma} T_{gamma+lambda,beta}."""
    total = TPoly()
    for gamma in delta:
        left = T(alpha, gamma)
        if not left:
            continue
        right = T(shift(gamma, lam_index), beta)
        if right:
            total = total + left * right
    return total


# ---------------------------------------------------------------- generators

def gen_I1(delta: StandardSet, N: StandardSet | None = None, substitute: bool = False) -> EquationSet:
    """T_{alpha,beta} - delta_{alpha,beta} for alpha, beta in delta.

    With ``substitute=True`` nothing is emitted and the rewrite table holds
    the Kronecker values instead.
    """
    N = _check_rows(delta, N)
    rewrites = {TVar(a, b): TPoly.const(1 if a == b else 0) for a in delta for b in delta}
    if substitute:
        return EquationSet(delta, N, [], "I1", substitute=True, rewrites=rewrites)
    gens = [Generator("I1", (v.row, v.col), TPoly.var(v) - c) for v, c in rewrites.items()]
    return EquationSet(delta, N, gens, "I1", substitute=False)


def gen_I2(delta: StandardSet, N: StandardSet | None = None, substitute: bool = True) -> EquationSet:
    """T_{alpha+lambda,beta} - sum_gamma T_{alpha,gamma} T_{gamma+lambda,beta}."""
    N = _check_rows(delta, N)
    rows = N.union_with_borders(1)
    T = _TTable(delta, substitute)
    gens = []
    for alpha in sorted(rows, key=deglex_key):
        if substitute and alpha in delta:
            continue
        for i in range(delta.n):
            target = shift(alpha, i)
            if target not in rows:
                continue
            lam = unit(delta.n, i)
            for beta in delta:
                poly = T(target, beta) - _product_sum(T, delta, alpha, i, beta)
                if poly:
                    gens.append(Generator("I2", (alpha, lam, beta), poly))
    return EquationSet(delta, N, gens, "I2", substitute=substitute)


def collisions(N: StandardSet) -> list[tuple[Exponent, int, Exponent, int]]:
    """Unordered pairs (alpha, i), (alpha', j) with alpha+e_i = alpha'+e_j in N^(2).

    Each pair is oriented so that alpha is deglex-smaller than alpha'.
    """
    b1 = set(N.iterated_border(1))
    out = []
    for tau in N.iterated_border(2):
        parts = [(shift(tau, i, -1), i) for i in range(N.n)
                 if tau[i] > 0 and shift(tau, i, -1) in b1]
        parts.sort(key=lambda p: deglex_key(p[0]))
        for (a, i), (a2, j) in itertools.combinations(parts, 2):
            out.append((a, i, a2, j))
    return out


def gen_I3(delta: StandardSet, N: StandardSet | None = None, substitute: bool = True) -> EquationSet:
    """Commutation relations for every collision in N^(2)."""
    N = _check_rows(delta, N)
    T = _TTable(delta, substitute)
    gens = []
    n = delta.n
    for a, i, a2, j in collisions(N):
        for beta in delta:
            poly = _product_sum(T, delta, a, i, beta) - _product_sum(T, delta, a2, j, beta)
            if poly:
                gens.append(Generator("I3", (a, unit(n, i), a2, unit(n, j), beta), poly))
    return EquationSet(delta, N, gens, "I3", substitute=substitute)


def gen_I3e(delta: StandardSet, substitute: bool = True) -> EquationSet:
    """Commutation relations only at the edge points (row set fixed to delta)."""
    T = _TTable(delta, substitute)
    gens = []
    n = delta.n
    for eps, i, j in delta.edge_planes:
        a, a2 = shift(eps, j), shift(eps, i)  # eps + lambda', eps + lambda
        for beta in delta:
            poly = _product_sum(T, delta, a, i, beta) - _product_sum(T, delta, a2, j, beta)
            if poly:
                gens.append(Generator("I3e", (eps, unit(n, i), unit(n, j), beta), poly))
    return EquationSet(delta, delta, gens, "I3e", substitute=substitute)


def gen_full(delta: StandardSet, N: StandardSet | None = None, substitute: bool = True) -> EquationSet:
    """I1 + I2 + I3 (I1 only when not substituted)."""
    N = _check_rows(delta, N)
    out = gen_I2(delta, N, substitute).merged(gen_I3(delta, N, substitute), "full")
    return out.merged(gen_I1(delta, N, substitute), "full")


def gen_fewer(delta: StandardSet, substitute: bool = True) -> EquationSet:
    """I1 + I2 + I3e with row set delta."""
    out = gen_I2(delta, delta, substitute).merged(gen_I3e(delta, substitute), "fewer")
    return out.merged(gen_I1(delta, delta, substitute), "fewer")


def stratum_pairs(delta: StandardSet, order: TermOrder, rows: Iterable[Exponent]) -> list[tuple[Exponent, Exponent]]:
    return [(a, b) for a in sorted(rows, key=deglex_key) for b in delta if order.less(a, b)]


def gen_stratum(delta: StandardSet, order: TermOrder, N: StandardSet | None = None,
                corners_only: bool = False, base: str | None = "fewer",
                substitute: bool = True) -> EquationSet:
    """The Groebner stratum: base equations plus T_{alpha,beta} = 0 for alpha < beta.

    ``corners_only`` restricts the vanishing conditions to corner rows; the
    resulting ideal is the same.  ``base`` is "fewer", "full" or None (kills only).
    """
    N = _check_rows(delta, N)
    if order.n != delta.n:
        raise EquationError("order dimension does not match the standard set")
    if corners_only:
        rows = delta.corners
    else:
        rows = [a for a in N.union_with_borders(1) if not (substitute and a in delta)]
    gens = [Generator("STRATUM", (a, b), TPoly.var(TVar(a, b))) for a, b in stratum_pairs(delta, order, rows)]
    out = EquationSet(delta, N, gens, "stratum", order=order, substitute=substitute)
    if base == "fewer":
        if N != delta:
            raise EquationError("the edge-point presentation needs N = delta")
        out = out.merged(gen_fewer(delta, substitute), "stratum")
    elif base == "full":
        out = out.merged(gen_full(delta, N, substitute), "stratum")
    elif base is not None:
        raise EquationError(f"unknown base presentation {base!r}")
    return out


def minimal_coordinates(delta: StandardSet, order: TermOrder, nu_choice: str = "smallest"):
    """Corner variables and the recursion for non-corner border rows.

    Returns (variables, derived, value) where value(alpha, beta) is the
    element of the minimal ring standing for T_{alpha,beta}, for alpha in
    delta or in the border.
    """
    corners = set(delta.corners)
    border = set(delta.border)
    variables = tuple(TVar(a, b) for a in delta.corners for b in delta if order.greater(a, b))
    derived: dict[tuple[Exponent, Exponent], TPoly] = {}

    def value(alpha: Exponent, beta: Exponent) -> TPoly:
        if alpha in delta:
            return TPoly.const(1 if alpha == beta else 0)
        if not order.greater(alpha, beta):
            return TPoly()
        if alpha in corners:
            return TPoly.var(TVar(alpha, beta))
        if (alpha, beta) in derived:
            return derived[(alpha, beta)]
        raise EquationError(f"T_{alpha},{beta} requested before it was derived")

    scan = range(delta.n) if nu_choice == "smallest" else range(delta.n - 1, -1, -1)
    for alpha in order.sorted(border - corners):
        nu = next(i for i in scan if alpha[i] > 0 and shift(alpha, i, -1) in border)
        base = shift(alpha, nu, -1)
        for beta in delta:
            if not order.greater(alpha, beta):
                continue
            total = TPoly()
            for gamma in delta:
                target = shift(gamma, nu)
                if not order.greater(base, gamma) or order.less(target, beta):
                    continue
                total = total + value(base, gamma) * value(target, beta)
            derived[(alpha, beta)] = total
    return variables, {TVar(a, b): p for (a, b), p in derived.items()}, value


def gen_minimal(delta: StandardSet, order: TermOrder, nu_choice: str = "smallest") -> EquationSet:
    """Relations of the minimal embedding, in the corner variables alpha > beta only.

    The I2 and edge-point I3 generators are rewritten with the Kronecker
    delta on delta-rows, zero for alpha < beta, corner variables, and the
    recursively derived expressions for the other border rows.  Generators
    that vanish identically are dropped; ``rewrites`` holds the derived
    expressions and ``ambient`` the corner variables.
    """
    if order.n != delta.n:
        raise EquationError("order dimension does not match the standard set")
    variables, derived, value = minimal_coordinates(delta, order, nu_choice)
    gens = []
    for g in gen_fewer(delta, substitute=False).generators:
        if g.label == "I1":
            continue
        mapping = {v: value(v.row, v.col) for v in g.poly.variables()}
        poly = g.poly.substitute(mapping)
        if poly:
            gens.append(Generator("MINIMAL", g.provenance, poly))
    return EquationSet(delta, delta, gens, "minimal", order=order, substitute=True,
                       rewrites=derived, ambient=variables)


def universal_family(delta: StandardSet, N: StandardSet | None = None, mode: str = "border",
                     order: TermOrder | None = None) -> dict[Exponent, Poly]:
    """x^alpha - sum_beta T_{alpha,beta} x^beta, indexed by alpha."""
    N = _check_rows(delta, N)
    out: dict[Exponent, Poly] = {}
    if mode == "border":
        for alpha in sorted(N.union_with_borders(1) - delta.members, key=deglex_key):
            terms = {alpha: TPoly.const(1)}
            for beta in delta:
                terms[beta] = -TPoly.var(TVar(alpha, beta))
            out[alpha] = Poly(delta.n, terms)
    elif mode == "groebner":
        if order is None:
            raise EquationError("groebner mode needs a term order")
        for alpha in delta.corners:
            terms = {alpha: TPoly.const(1)}
            for beta in delta:
                if order.less(beta, alpha):
                    terms[beta] = -TPoly.var(TVar(alpha, beta))
            out[alpha] = Poly(delta.n, terms)
    else:
        raise EquationError(f"unknown universal mode {mode!r}")
    return out


def gen_universal(delta: StandardSet, N: StandardSet | None = None, mode: str = "border",
                  order: TermOrder | None = None) -> list[Poly]:
    return list(universal_family(delta, N, mode, order).values())


def gen_homogeneous_restriction(delta: StandardSet, weights: Sequence[int]) -> EquationSet:
    """T_{alpha,beta} = 0 whenever l(alpha) != l(beta), alpha a border row."""
    if len(weights) != delta.n:
        raise EquationError("weight vector has the wrong length")

    def ell(a):
        return sum(w * x for w, x in zip(weights, a))

    gens = [Generator("HOMOG", (a, b), TPoly.var(TVar(a, b)))
            for a in delta.border for b in delta if ell(a) != ell(b)]
    return EquationSet(delta, delta, gens, "homog")


def generate(delta: StandardSet, which: str, order: TermOrder | None = None,
             weights: Sequence[int] | None = None) -> EquationSet:
    """Dispatch used by the command line."""
    if which == "full":
        return gen_full(delta)
    if which == "fewer":
        return gen_fewer(delta)
    if which in ("stratum", "minimal", "universal") and order is None:
        order = TermOrder.lex(delta.n)
    if which == "stratum":
        return gen_stratum(delta, order)
    if which == "minimal":
        return gen_minimal(delta, order)
    if which == "universal":
        fam = universal_family(delta, delta, "groebner", order)
        gens = [Generator("UNIVERSAL", (a,), f) for a, f in fam.items()]
        return EquationSet(delta, delta, gens, "universal", order=order)
    if which == "homog":
        return gen_homogeneous_restriction(delta, weights or (1,) * delta.n)
    raise EquationError(f"unknown mode {which!r}; expected one of {', '.join(WHICH)}")
