"""Intersections of two charts, the gluing map between them, and strata seen
in a foreign chart.

Conventions.  On the delta-chart, T_{alpha,beta} is the coefficient with
x^alpha = sum_{beta in delta} T_{alpha,beta} x^beta in the quotient, so
T = -d for the border coefficients d.  The epsilon-chart uses U_{alpha,xi}
with xi in epsilon.  Rows run over W = delta u eps u border(delta u eps).

Since x^xi for xi in eps is itself sum_beta T_{xi,beta} x^beta, we get
T = U * Tbox with Tbox = (T_{xi,beta})_{xi in eps, beta in delta}.  On the
intersection Tbox is invertible and U = T * Ubox with Ubox = Tbox^-1.  The
gluing map is stored as polynomial numerators over the common denominator
det(Tbox) = det(T_{alpha,beta})_{alpha in eps-delta, beta in delta-eps}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .equations import EquationSet, gen_stratum
from .order import TermOrder
from .poly import TPoly, TVar
from .staircase import Exponent, StandardSet, canonical

Matrix = dict[Exponent, dict[Exponent, TPoly]]


class ChartError(ValueError):
    pass


def _check_sizes(delta: StandardSet, eps: StandardSet) -> None:
    if delta.n != eps.n:
        raise ChartError("standard sets of different dimensions")
    if len(delta) != len(eps):
        raise ChartError(f"charts need equal sizes, got {len(delta)} and {len(eps)}")


def joint_rows(delta: StandardSet, eps: StandardSet) -> tuple[Exponent, ...]:
    """delta u eps together with its border, in canonical order."""
    union = StandardSet(delta.n, tuple(delta.members | eps.members))
    return tuple(canonical(union.members | set(union.border)))


def _entry(alpha: Exponent, beta: Exponent, delta: StandardSet, name: str) -> TPoly:
    if alpha in delta:
        return TPoly.const(1 if alpha == beta else 0)
    return TPoly.var(TVar(alpha, beta, name))


def determinant(rows: Sequence[Exponent], cols: Sequence[Exponent], entry) -> TPoly:
    """Laplace expansion along the first row with memoized minors.

    ``entry(alpha, beta)`` gives the matrix entry; rows and columns are taken
    in the order given.  The empty determinant is 1.
    """
    if len(rows) != len(cols):
        raise ChartError("determinant of a non-square matrix")
    rows, cols = tuple(rows), tuple(cols)

    @lru_cache(maxsize=None)
    def minor(k: int, col_mask: int) -> TPoly:
        if k == len(rows):
            return TPoly.const(1)
        total = TPoly()
        sign = 1
        for j, beta in enumerate(cols):
            if col_mask >> j & 1:
                continue
            e = entry(rows[k], beta)
            if e:
                term = e * minor(k + 1, col_mask | 1 << j)
                total = total + term if sign > 0 else total - term
            sign = -sign
        return total

    return minor(0, 0)


@dataclass(frozen=True)
class ChartBlocks:
    """Block decomposition of the coordinate matrices of two charts.

    Rows are split into common = delta n eps, d_only = delta - eps,
    e_only = eps - delta and rho = the rest of the joint row set.
    """

    delta: StandardSet
    eps: StandardSet
    rows: tuple[Exponent, ...]
    common: tuple[Exponent, ...]
    d_only: tuple[Exponent, ...]
    e_only: tuple[Exponent, ...]
    rho: tuple[Exponent, ...]
    t_name: str = "T"
    u_name: str = "U"

    @classmethod
    def build(cls, delta: StandardSet, eps: StandardSet, t_name: str = "T", u_name: str = "U") -> "ChartBlocks":
        _check_sizes(delta, eps)
        rows = joint_rows(delta, eps)
        common = tuple(canonical(delta.members & eps.members))
        d_only = tuple(canonical(delta.members - eps.members))
        e_only = tuple(canonical(eps.members - delta.members))
        rho = tuple(a for a in rows if a not in delta and a not in eps)
        return cls(delta, eps, rows, common, d_only, e_only, rho, t_name, u_name)

    def T(self, alpha: Exponent, beta: Exponent) -> TPoly:
        return _entry(alpha, beta, self.delta, self.t_name)

    def U(self, alpha: Exponent, xi: Exponent) -> TPoly:
        return _entry(alpha, xi, self.eps, self.u_name)

    def T_matrix(self) -> Matrix:
        return {a: {b: self.T(a, b) for b in self.delta} for a in self.rows}

    def U_matrix(self) -> Matrix:
        return {a: {x: self.U(a, x) for x in self.eps} for a in self.rows}

    def T_box(self) -> Matrix:
        """Rows eps, columns delta: (E 0; T31 T32)."""
        return {a: {b: self.T(a, b) for b in self.delta} for a in self.eps}

    def U_box(self) -> Matrix:
        """Rows delta, columns eps: (E 0; U21 U22)."""
        return {a: {x: self.U(a, x) for x in self.eps} for a in self.delta}

    def block(self, which: str) -> Matrix:
        """Named blocks T31, T32, T41, T42, U21, U22, U41, U42."""
        row_sets = {"2": self.d_only, "3": self.e_only, "4": self.rho}
        if which[0] == "T":
            cols = {"1": self.common, "2": self.d_only}[which[2]]
            get = self.T
        else:
            cols = {"1": self.common, "2": self.e_only}[which[2]]
            get = self.U
        return {a: {b: get(a, b) for b in cols} for a in row_sets[which[1]]}


def intersection_det(delta: StandardSet, eps: StandardSet, name: str = "T") -> TPoly:
    """det(T_{alpha,beta}) for alpha in eps - delta, beta in delta - eps."""
    _check_sizes(delta, eps)
    rows = canonical(eps.members - delta.members)
    cols = canonical(delta.members - eps.members)
    return determinant(rows, cols, lambda a, b: _entry(a, b, delta, name))


@dataclass(frozen=True)
class GluingMap:
    """U_{alpha,xi} = numerators[(alpha, xi)] / denominator, in T-variables."""

    blocks: ChartBlocks
    numerators: dict[tuple[Exponent, Exponent], TPoly]
    denominator: TPoly
    u_box_numerators: dict[tuple[Exponent, Exponent], TPoly]

    def u_variables(self) -> list[TVar]:
        return [TVar(a, x, self.blocks.u_name) for (a, x) in self.numerators if a not in self.blocks.eps]

    def expression(self, alpha: Exponent, xi: Exponent) -> tuple[TPoly, TPoly]:
        return self.numerators[(alpha, xi)], self.denominator

    def is_identity(self) -> bool:
        return self.denominator == TPoly.const(1) and all(
            num == TPoly.var(TVar(a, x, self.blocks.t_name)) or (a in self.blocks.delta)
            for (a, x), num in self.numerators.items())

    def evaluate(self, values: Mapping[TVar, Fraction]) -> dict[TVar, Fraction]:
        """Push a point of the delta-chart to the eps-chart (needs det != 0)."""
        den = self.denominator.evaluate(values)
        if den == 0:
            raise ChartError("the point lies outside the chart intersection")
        return {TVar(a, x, self.blocks.u_name): num.evaluate(values) / den
                for (a, x), num in self.numerators.items() if a not in self.blocks.eps}

    def evaluate_u_box(self, values: Mapping[TVar, Fraction]) -> dict[tuple[Exponent, Exponent], Fraction]:
        den = self.denominator.evaluate(values)
        if den == 0:
            raise ChartError("the point lies outside the chart intersection")
        return {k: num.evaluate(values) / den for k, num in self.u_box_numerators.items()}

    def to_json(self) -> dict:
        entries = []
        for (a, x), num in sorted(self.numerators.items()):
            if a in self.blocks.eps:
                continue
            entries.append({"u_var": [list(a), list(x)], "expression": str(num)})
        return {"delta": self.blocks.delta.to_json(), "eps": self.blocks.eps.to_json(),
                "denominator": str(self.denominator), "substitution": entries}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


def gluing_map(delta: StandardSet, eps: StandardSet, t_name: str = "T", u_name: str = "U") -> GluingMap:
    """Express every U-variable of the eps-chart through the delta-chart.

    U = T * Ubox with Ubox = Tbox^-1 = adj(Tbox) / det(Tbox).  Because
    Tbox = (E 0; T31 T32) is block triangular, det(Tbox) = det(T32) and
    adj(Tbox) = (det*E 0; -adj(T32) T31, adj(T32)).
    """
    blocks = ChartBlocks.build(delta, eps, t_name, u_name)
    T = blocks.T
    det_rows, det_cols = blocks.e_only, blocks.d_only
    det = determinant(det_rows, det_cols, T)

    # adj(T32)[beta][xi] = (-1)^(i+j) * minor with row xi and column beta removed
    adj32: dict[Exponent, dict[Exponent, TPoly]] = {b: {} for b in det_cols}
    for i, xi in enumerate(det_rows):
        for j, beta in enumerate(det_cols):
            sub_rows = det_rows[:i] + det_rows[i + 1:]
            sub_cols = det_cols[:j] + det_cols[j + 1:]
            m = determinant(sub_rows, sub_cols, T)
            adj32[beta][xi] = m if (i + j) % 2 == 0 else -m

    # adjugate of Tbox: rows delta, columns eps
    adj: dict[Exponent, dict[Exponent, TPoly]] = {b: {} for b in delta}
    for b in blocks.common:
        for x in eps:
            adj[b][x] = det if x == b else TPoly()
    for b in det_cols:
        for x in blocks.common:
            total = TPoly()
            for xi in det_rows:
                total = total - adj32[b][xi] * T(xi, x)
            adj[b][x] = total
        for x in det_rows:
            adj[b][x] = adj32[b][x]

    numerators = {}
    for a in blocks.rows:
        for x in eps:
            total = TPoly()
            for b in delta:
                t = T(a, b)
                if t and adj[b][x]:
                    total = total + t * adj[b][x]
            numerators[(a, x)] = total
    u_box = {(b, x): adj[b][x] for b in delta for x in eps}
    return GluingMap(blocks, numerators, det, u_box)


@dataclass(frozen=True)
class StratumInChart:
    """The delta-stratum met with the eps-chart.

    ``delta_conditions`` are the vanishing conditions in delta-chart
    variables and ``delta_det`` must be invertible.  ``eps_conditions`` are
    the same conditions rewritten in eps-chart variables (numerators of the
    inverse gluing map), valid where ``eps_det`` is invertible.
    """

    delta: StandardSet
    eps: StandardSet
    order: TermOrder
    stratum: EquationSet
    delta_det: TPoly
    eps_conditions: tuple[TPoly, ...]
    eps_det: TPoly

    @property
    def delta_conditions(self) -> tuple[TPoly, ...]:
        return tuple(self.stratum.polys("STRATUM"))

    def killed(self) -> set[TVar]:
        return self.stratum.killed_variables()

    def is_empty(self) -> bool:
        """True when the conditions force the intersection determinant to vanish."""
        return self.delta_det.substitute({v: 0 for v in self.killed()}).is_zero()

    def holds_at(self, t_values: Mapping[TVar, Fraction]) -> bool:
        """Whether a delta-chart point satisfies the triangularity conditions."""
        return all(g.evaluate(t_values) == 0 for g in self.delta_conditions)


def stratum_in_chart(delta: StandardSet, eps: StandardSet, order: TermOrder) -> StratumInChart:
    """Triangularity conditions T_{alpha,beta} = 0 (alpha < beta) on the joint rows,
    plus the invertibility of the intersection determinant."""
    _check_sizes(delta, eps)
    N = StandardSet(delta.n, tuple(delta.members | eps.members))
    stratum = gen_stratum(delta, order, N=N, base=None)
    back = gluing_map(eps, delta, t_name="U", u_name="T")
    eps_conditions = []
    for g in stratum.generators:
        (v,) = g.poly.variables()
        eps_conditions.append(back.numerators[(v.row, v.col)])
    return StratumInChart(delta, eps, order, stratum, intersection_det(delta, eps),
                          tuple(eps_conditions), back.denominator)


__all__ = [
    "ChartBlocks", "ChartError", "GluingMap", "StratumInChart", "determinant",
    "gluing_map", "intersection_det", "joint_rows", "stratum_in_chart",
]
