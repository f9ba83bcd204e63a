"""Weighted one-parameter degeneration of a Groebner stratum to its monomial point.

A weight vector l with l(alpha) > l(beta) for every variable T_{alpha,beta}
of the stratum gives the substitution T_{alpha,beta} -> t^(l(alpha)-l(beta)) T_{alpha,beta}.
Every generator of the stratum is homogeneous for this grading, so it is
mapped to t^w times itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .equations import EquationSet, Generator, universal_family
from .order import TermOrder, find_separating_weight
from .poly import MarkedFamily, Poly, TPoly, TVar
from .staircase import Exponent, StandardSet


class DeformationError(ValueError):
    """A generator is not weighted-homogeneous, or a variable has no weight."""


def _ell(weights: Sequence[int], alpha: Exponent) -> int:
    return sum(w * a for w, a in zip(weights, alpha))


def deformation_pairs(delta: StandardSet, order: TermOrder) -> list[tuple[Exponent, Exponent]]:
    """(alpha, beta) with alpha in the border, beta in delta and alpha > beta."""
    return [(a, b) for a in delta.border for b in delta if order.greater(a, b)]


@dataclass(frozen=True)
class DeformationData:
    delta: StandardSet
    order: TermOrder
    weights: tuple[int, ...]
    pairs: tuple[tuple[Exponent, Exponent], ...]

    def exponent(self, v: TVar) -> int:
        return _ell(self.weights, v.row) - _ell(self.weights, v.col)

    def substitution(self, variables=None) -> dict[TVar, TPoly]:
        """T_{alpha,beta} -> t^(l(alpha)-l(beta)) T_{alpha,beta}."""
        if variables is None:
            variables = [TVar(a, b) for a, b in self.pairs]
        out = {}
        for v in variables:
            e = self.exponent(v)
            if e <= 0:
                raise DeformationError(f"{v} has non-positive weight {e} under l={self.weights}")
            out[v] = TPoly.t(e) * TPoly.var(v)
        return out

    def corner_family(self, t_value=None) -> dict[Exponent, Poly]:
        """The deformed universal Groebner family: x^alpha - sum t^e T x^beta."""
        fam = universal_family(self.delta, self.delta, "groebner", self.order)
        out = {}
        for alpha, f in fam.items():
            g = f.substitute(self.substitution(f.variables()))
            if t_value is not None:
                g = g.substitute({}, t_value)
            out[alpha] = g
        return out


def build_deformation(delta: StandardSet, order: TermOrder) -> DeformationData:
    if order.n != delta.n:
        raise DeformationError("order dimension does not match the standard set")
    pairs = tuple(deformation_pairs(delta, order))
    weights = find_separating_weight(pairs, delta.n)
    return DeformationData(delta, order, tuple(weights), pairs)


@dataclass
class DeformedEquations:
    """Generators after the stratum kills (``base``) and after the substitution."""

    data: DeformationData
    base: EquationSet
    deformed: EquationSet
    t_weights: list[int] = field(default_factory=list)

    def rows(self):
        return zip(self.base.generators, self.deformed.generators, self.t_weights)

    def specialize(self, t_value) -> list[TPoly]:
        return [g.poly.substitute({}, t_value) for g in self.deformed.generators]

    def report(self) -> dict:
        return {
            "delta": self.data.delta.to_json(),
            "order": self.data.order.spec(),
            "weights": list(self.data.weights),
            "generators": [{"label": g.label, "provenance": [list(p) for p in g.provenance], "w": w}
                           for g, _, w in self.rows()],
        }


def _t_factor(original: TPoly, deformed: TPoly) -> int:
    """w with deformed = t^w * original, or raise."""
    degrees = deformed.t_degrees()
    if len(degrees) != 1:
        raise DeformationError(f"not weighted-homogeneous: t-degrees {sorted(degrees)} in {deformed}")
    (w,) = degrees
    if deformed != original * TPoly.t(w):
        raise DeformationError(f"deformation of {original} is not a power of t times it")
    return w


def apply_deformation(E: EquationSet, D: DeformationData) -> DeformedEquations:
    """Kill the stratum variables, then substitute and record w per generator.

    Generators that become zero after the kills (the kill equations
    themselves) are dropped from the result.
    """
    if E.delta != D.delta:
        raise DeformationError("equation set and deformation data are for different standard sets")
    kills = {v: TPoly() for v in E.killed_variables()}
    base, deformed, weights = [], [], []
    for g in E.generators:
        if g.label in ("STRATUM", "HOMOG"):
            continue
        poly = g.poly.substitute(kills) if kills else g.poly
        if not poly:
            continue
        sub = {}
        for v in poly.variables():
            e = D.exponent(v)
            if e <= 0:
                raise DeformationError(f"{v} survives the kills but has weight {e}")
            sub[v] = TPoly.t(e) * TPoly.var(v)
        image = poly.substitute(sub)
        weights.append(_t_factor(poly, image))
        base.append(Generator(g.label, g.provenance, poly))
        deformed.append(Generator(g.label, g.provenance, image))
    mk = lambda gens: EquationSet(E.delta, E.row_set, gens, E.mode, E.order, E.substitute)
    return DeformedEquations(D, mk(base), mk(deformed), weights)


def coefficient_law_holds(D: DeformationData) -> bool:
    """b_{alpha,beta} = t^(l(alpha)-l(beta)) a_{alpha,beta} on the whole border.

    a comes from extending the undeformed corner family, b from extending
    the deformed one; both extensions are computed independently.
    """
    delta, order = D.delta, D.order
    plain = MarkedFamily(universal_family(delta, delta, "groebner", order), delta, order)
    bent = MarkedFamily(D.corner_family(), delta, order)
    for alpha in delta.border:
        f, h = plain.extend(alpha), bent.extend(alpha)
        for beta in delta:
            a, b = f.coefficient(beta), h.coefficient(beta)
            e = _ell(D.weights, alpha) - _ell(D.weights, beta)
            if e < 0:
                if a or b:
                    return False
                continue
            if b != a * TPoly.t(e):
                return False
    return True


def monomial_limit(D: DeformationData) -> bool:
    """At t = 0 every deformed corner polynomial is the bare monomial x^alpha."""
    return all(g == Poly.monomial(alpha) for alpha, g in D.corner_family(Fraction(0)).items())
