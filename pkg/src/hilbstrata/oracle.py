"""Brute-force verification: Buchberger over Q, ideal equality, point ideals.

None of this shares code with the equation generators beyond the plain data
types; it recomputes things from the definitions.
"""

from __future__ import annotations

import heapq
import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

try:  # exact rationals in C; the pure-Python Fraction is the fallback
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

from .equations import gen_I2, gen_I3e, gen_stratum
from .order import InfeasibleWeightError, TermOrder, find_separating_weight
from .poly import Poly, TPoly, TVar
from .staircase import Exponent, StandardSet, shift


class OracleError(RuntimeError):
    """An independent check disagreed with the generated data."""


class BudgetExceeded(OracleError):
    """Buchberger ran out of its S-polynomial allowance before deciding."""


# ------------------------------------------------------------ keyed monomials
#
# Monomials are stored as the sort key of the term order itself.  All keys
# used here are injective linear images of the exponent vector, so products
# are componentwise sums of keys and comparisons are native tuple compares.

def _decoder(order: TermOrder):
    n, perm = order.n, order.perm
    if order.kind == "lex":
        def dec(key):
            e = [0] * n
            for k, p in enumerate(perm):
                e[p] = key[k]
            return tuple(e)
        return dec
    if order.kind == "grlex":
        def dec(key):
            e = [0] * n
            for k, p in enumerate(perm):
                e[p] = key[k + 1]
            return tuple(e)
        return dec
    if order.kind == "grevlex":
        rev = tuple(reversed(perm))

        def dec(key):
            e = [0] * n
            for k, p in enumerate(rev):
                e[p] = -key[k + 1]
            return tuple(e)
        return dec
    inner = _decoder(order.tiebreak)
    return lambda key: inner(key[1:])


class Ring:
    """Q[y_1..y_m] under a term order, with monomials stored as order keys."""

    def __init__(self, order: TermOrder):
        self.order = order
        self.m = order.n
        self.encode = order.key
        self.decode = _decoder(order)
        self.one = order.key((0,) * order.n)

    @staticmethod
    def mul(a, b):
        return tuple(x + y for x, y in zip(a, b))

    @staticmethod
    def div(a, b):
        return tuple(x - y for x, y in zip(a, b))

    def lcm(self, ea: Exponent, eb: Exponent):
        return self.encode(tuple(max(x, y) for x, y in zip(ea, eb)))

    def from_terms(self, terms: Mapping[Exponent, object]) -> dict:
        return {self.encode(tuple(e)): _Q(c) for e, c in terms.items() if c}

    def to_terms(self, p: dict) -> dict[Exponent, Fraction]:
        return {self.decode(k): Fraction(int(c.numerator), int(c.denominator)) for k, c in p.items()}


def _monic(p: dict) -> dict:
    lead = max(p)
    c = p[lead]
    if c == 1:
        return p
    inv = 1 / c
    return {k: v * inv for k, v in p.items()}


class _Basis:
    """Polynomials with cached leading key and leading exponent."""

    def __init__(self, ring: Ring):
        self.ring = ring
        self.polys: list[dict] = []
        self.leads: list[tuple] = []
        self.lead_exps: list[Exponent] = []
        self.tails: list[list] = []

    def add(self, p: dict) -> int:
        lead = max(p)
        self.polys.append(p)
        self.leads.append(lead)
        self.lead_exps.append(self.ring.decode(lead))
        self.tails.append([(k, c) for k, c in p.items() if k != lead])
        return len(self.polys) - 1

    def reducer(self, exp: Exponent, skip: int = -1) -> int:
        for i, le in enumerate(self.lead_exps):
            if i != skip and all(a <= b for a, b in zip(le, exp)):
                return i
        return -1


def _normal_form(p: dict, basis: _Basis, skip: int = -1, full: bool = True) -> dict:
    """Remainder of p modulo the basis elements (all monic)."""
    ring = basis.ring
    p = dict(p)
    rem = {}
    mul, div, decode = ring.mul, ring.div, ring.decode
    while p:
        m = max(p)
        c = p.pop(m)
        i = basis.reducer(decode(m), skip)
        if i < 0:
            if not full:
                rem[m] = c
                rem.update(p)
                return rem
            rem[m] = c
            continue
        q = div(m, basis.leads[i])
        for k, d in basis.tails[i]:
            mm = mul(q, k)
            v = p.get(mm, 0) - c * d
            if v:
                p[mm] = v
            else:
                p.pop(mm, None)
    return rem


def _spoly(ring: Ring, f: dict, lf, ef, g: dict, lg, eg) -> dict:
    lcm = ring.lcm(ef, eg)
    qf, qg = ring.div(lcm, lf), ring.div(lcm, lg)
    out = {}
    for k, c in f.items():
        if k != lf:
            out[ring.mul(qf, k)] = c
    for k, c in g.items():
        if k != lg:
            mm = ring.mul(qg, k)
            v = out.get(mm, 0) - c
            if v:
                out[mm] = v
            else:
                out.pop(mm, None)
    return out


@dataclass
class GBStats:
    pairs_total: int = 0
    pairs_coprime: int = 0
    pairs_chain: int = 0
    reductions_to_zero: int = 0
    spolys: int = 0


def buchberger(gens: Iterable[dict], ring: Ring, chain_criterion: bool = True,
               stats: GBStats | None = None, targets: Sequence[dict] | None = None,
               max_pairs: int | None = None):
    """Reduced Groebner basis of polynomials in internal (keyed) form.

    Normal selection strategy (smallest lcm first).  Pairs with coprime
    leading monomials are skipped (first criterion).  With ``chain_criterion``
    a pair (i, j) is also skipped when some other element's lead divides the
    lcm and the pairs (i, k), (j, k) are already settled.

    With ``targets`` the run answers a membership question instead: it
    returns True as soon as every target has been reduced to zero by
    elements already in the ideal (which proves membership), and False only
    after the basis is complete and some target has a nonzero normal form.

    ``max_pairs`` bounds the number of S-polynomials formed; exceeding it
    raises :class:`BudgetExceeded`.
    """
    stats = stats if stats is not None else GBStats()
    basis = _Basis(ring)
    pairs: set[tuple[int, int]] = set()
    queue: list[tuple] = []  # (lcm key, i, j), lcm computed once per pair

    def insert(p: dict):
        j = basis.add(_monic(p))
        ej = basis.lead_exps[j]
        for i in range(j):
            pairs.add((i, j))
            heapq.heappush(queue, (ring.lcm(basis.lead_exps[i], ej), i, j))
            stats.pairs_total += 1

    pending = [dict(t) for t in targets if t] if targets is not None else None

    def settled() -> bool:
        # keep partial remainders; each is congruent to its target mod the ideal
        pending[:] = [r for r in (_normal_form(t, basis) for t in pending) if r]
        return not pending

    work = [g for g in (dict(g) for g in gens) if g]
    work.sort(key=max)
    for g in work:
        r = _normal_form(g, basis)
        if r:
            insert(r)
    if pending is not None and settled():
        return True

    while queue:
        _, i, j = heapq.heappop(queue)
        pairs.discard((i, j))
        ei, ej = basis.lead_exps[i], basis.lead_exps[j]
        if all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            stats.pairs_coprime += 1
            continue
        if chain_criterion:
            lcm = tuple(max(a, b) for a, b in zip(ei, ej))
            chained = False
            for k in range(len(basis.polys)):
                if k in (i, j):
                    continue
                ek = basis.lead_exps[k]
                if all(a <= b for a, b in zip(ek, lcm)) \
                        and (min(i, k), max(i, k)) not in pairs \
                        and (min(j, k), max(j, k)) not in pairs:
                    chained = True
                    break
            if chained:
                stats.pairs_chain += 1
                continue
        stats.spolys += 1
        if max_pairs is not None and stats.spolys > max_pairs:
            raise BudgetExceeded(f"no answer within {max_pairs} S-polynomials ({len(basis.polys)} basis elements)")
        s = _spoly(ring, basis.polys[i], basis.leads[i], ei, basis.polys[j], basis.leads[j], ej)
        r = _normal_form(s, basis) if s else {}
        if r:
            insert(r)
            if pending is not None and settled():
                return True
        else:
            stats.reductions_to_zero += 1

    if pending is not None:
        return settled()
    return _interreduce(basis.polys, ring)


def _interreduce(polys: list[dict], ring: Ring) -> list[dict]:
    polys = [_monic(p) for p in polys]
    # drop elements whose leading monomial is divisible by another lead
    polys.sort(key=max)
    minimal: list[dict] = []
    for p in polys:
        ep = ring.decode(max(p))
        if not any(all(a <= b for a, b in zip(ring.decode(max(q)), ep)) for q in minimal):
            minimal.append(p)
    out = []
    for idx, p in enumerate(minimal):
        basis = _Basis(ring)
        for jdx, q in enumerate(minimal):
            if jdx != idx:
                basis.add(q)
        lead = max(p)
        tail = {k: c for k, c in p.items() if k != lead}
        r = _normal_form(tail, basis)
        r[lead] = p[lead]
        out.append(r)
    out.sort(key=max)
    return out


def reduce_to_zero(p: dict, gb: list[dict], ring: Ring) -> bool:
    basis = _Basis(ring)
    for g in gb:
        basis.add(g)
    return not _normal_form(p, basis, full=False)


# -------------------------------------------------------------- public API

def _as_rational_terms(f) -> dict[Exponent, Fraction]:
    if isinstance(f, Poly):
        return f.rational_terms()
    return {tuple(k): Fraction(v) for k, v in f.items()}


def groebner_basis(gens: Sequence[Poly], order: TermOrder, chain_criterion: bool = True) -> list[Poly]:
    """Reduced Groebner basis of rational polynomials, as monic Polys sorted by leading term."""
    ring = Ring(order)
    internal = [ring.from_terms(_as_rational_terms(g)) for g in gens]
    gb = buchberger(internal, ring, chain_criterion)
    return [Poly.from_rational(order.n, ring.to_terms(g)) for g in gb]


class TRing:
    """Interning of T-variables as indices 0..m-1 for Groebner computations in Q[T]."""

    def __init__(self, variables: Iterable[TVar], kind: str = "grevlex"):
        self.variables = sorted(set(variables), key=lambda v: v.key)
        self.index = {v: i for i, v in enumerate(self.variables)}
        m = max(len(self.variables), 1)
        self.order = TermOrder(kind, m)
        self.ring = Ring(self.order)

    def encode(self, p: TPoly) -> dict:
        m = self.order.n
        out = {}
        for (vars_, tdeg), c in p.items():
            if tdeg:
                raise OracleError("the deformation variable t cannot be interned; specialize it first")
            e = [0] * m
            for v, k in vars_:
                e[self.index[v]] += k
            out[self.ring.encode(tuple(e))] = _Q(c)
        return out

    def decode(self, p: dict) -> TPoly:
        terms = {}
        for key, c in p.items():
            e = self.ring.decode(key)
            mono = (tuple((self.variables[i], k) for i, k in enumerate(e) if k), 0)
            terms[mono] = Fraction(int(c.numerator), int(c.denominator))
        return TPoly(terms)


def tpoly_groebner(gens: Sequence[TPoly], kind: str = "grevlex", chain_criterion: bool = True,
                   stats: GBStats | None = None) -> tuple[TRing, list[dict]]:
    variables = set()
    for g in gens:
        variables |= g.variables()
    tr = TRing(variables, kind)
    return tr, buchberger([tr.encode(g) for g in gens], tr.ring, chain_criterion, stats)


def ideal_equal(A: Sequence, B: Sequence, order: TermOrder | None = None,
                chain_criterion: bool = True) -> bool:
    """Two-sided containment test.

    A and B are both lists of rational Polys (``order`` required) or both
    lists of TPolys, in which case the T-variables are ring variables under
    an internal grevlex order.
    """
    return contains(A, B, order, chain_criterion) and contains(B, A, order, chain_criterion)


def _multidegree(p: TPoly) -> set[tuple[int, ...]]:
    out = set()
    for (mono, _), _c in p.items():
        n = len(mono[0][0].row) if mono else 0
        deg = [0] * n
        for v, k in mono:
            for i in range(n):
                deg[i] += k * (v.row[i] - v.col[i])
        out.add(tuple(deg))
    return out


def _grading_family(variables: Sequence[TVar], box: int = 4) -> list[tuple[int, ...]]:
    """A few weight vectors l with l(row - col) > 0 for every variable.

    Each one bounds the search for monomials of a given multidegree; using
    several that point in different directions of the feasible cone prunes
    much harder than any single one.  Empty if no such l exists.
    """
    diffs = sorted({tuple(a - b for a, b in zip(v.row, v.col)) for v in variables})
    n = len(diffs[0])
    feasible = []
    while not feasible and box <= 16:
        feasible = [w for w in itertools.product(range(box + 1), repeat=n)
                    if all(sum(x * y for x, y in zip(w, d)) > 0 for d in diffs)]
        box *= 2
    if not feasible:
        try:
            return [find_separating_weight([(d, (0,) * n) for d in diffs], n)]
        except InfeasibleWeightError:
            return []
    picks = {min(feasible, key=lambda w: (sum(w), w))}
    for i in range(n):
        picks.add(min(feasible, key=lambda w: (Fraction(w[i], sum(w)), sum(w), w)))
        picks.add(max(feasible, key=lambda w: (Fraction(w[i], sum(w)), -sum(w), w)))
    return sorted(picks)


def _monomials_of_degree(variables: Sequence[TVar], ells: Sequence[Sequence[int]],
                         target: tuple[int, ...]):
    """All monomials in ``variables`` of multidegree ``target`` (deg T = row - col).

    Every variable has positive weight under each l in ``ells``, so the
    remaining weight l(target - chosen) bounds the search.  Monomials are
    returned as {variable index: exponent}.
    """
    degs = [tuple(a - b for a, b in zip(v.row, v.col)) for v in variables]
    wts = [tuple(sum(l * x for l, x in zip(ell, d)) for ell in ells) for d in degs]

    def rec(start: int, rest: tuple[int, ...], acc: list):
        if not any(rest):
            yield tuple(acc)
            return
        budget = [sum(l * x for l, x in zip(ell, rest)) for ell in ells]
        if min(budget) <= 0:
            return
        for i in range(start, len(variables)):
            if any(w > b for w, b in zip(wts[i], budget)):
                continue
            acc.append(i)
            yield from rec(i, tuple(x - y for x, y in zip(rest, degs[i])), acc)
            acc.pop()

    for combo in rec(0, tuple(target), []):
        mono = {}
        for i in combo:
            mono[i] = mono.get(i, 0) + 1
        yield mono


class _Echelon:
    """Incremental row echelon form over Q; rows are dicts keyed by sortable monomials."""

    def __init__(self):
        self.pivots: dict = {}

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        while row:
            lead = max(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            c = row[lead]
            for k, v in piv.items():
                x = row.get(k, 0) - c * v
                if x:
                    row[k] = x
                else:
                    row.pop(k, None)
        return row

    def add(self, row: dict) -> None:
        row = self.reduce(row)
        if row:
            lead = max(row)
            inv = 1 / row[lead]
            self.pivots[lead] = {k: v * inv for k, v in row.items()}


def _open_targets(A: Sequence, B: Sequence) -> list:
    """Nonzero elements of B that are not trivially members (a generator up to sign)."""
    given = set(A)
    return [t for t in B if t and t not in given and -t not in given]


def graded_contains(A: Sequence[TPoly], B: Sequence[TPoly]) -> bool | None:
    """Decide B in ideal(A) degree by degree, or None if no positive grading applies.

    Every generated equation is homogeneous for the multidegree
    deg T_{alpha,beta} = alpha - beta.  When a linear l makes all these
    degrees positive, the component of the ideal in multidegree D is spanned
    by the finitely many products m*g with deg m + deg g = D, so membership
    of a homogeneous target is a finite linear algebra question over Q.
    """
    A = [g for g in A if g]
    B = _open_targets(A, B)
    if not B:
        return True
    variables = set()
    for g in A + B:
        variables |= g.variables()
    if not variables:
        return None
    ells = _grading_family(list(variables))
    if not ells:
        return None
    gens = []
    for g in A:
        d = _multidegree(g)
        if len(d) != 1:
            return None
        gens.append((d.pop(), g))
    tr = TRing(variables)
    encoded = [(deg, tr.encode(g)) for deg, g in gens]
    by_degree: dict[tuple[int, ...], list[dict]] = {}
    for t in B:
        d = _multidegree(t)
        if len(d) != 1:
            return None
        by_degree.setdefault(d.pop(), []).append(tr.encode(t))
    for D, targets in by_degree.items():
        # products m*g by increasing deg m; members usually settle early,
        # a non-member needs the whole component
        layers: dict[int, list[dict]] = {}
        for deg, g in encoded:
            rest = tuple(x - y for x, y in zip(D, deg))
            if any(sum(l * x for l, x in zip(ell, rest)) < 0 for ell in ells):
                continue
            for mono in _monomials_of_degree(tr.variables, ells, rest):
                e = [0] * tr.order.n
                for i, k in mono.items():
                    e[i] = k
                q = tr.ring.encode(tuple(e))
                layers.setdefault(sum(e), []).append({tr.ring.mul(q, k): c for k, c in g.items()})
        ech = _Echelon()
        for k in sorted(layers):
            for row in layers[k]:
                ech.add(row)
            targets = [r for r in map(ech.reduce, targets) if r]
            if not targets:
                break
        if targets:
            return False
    return True


def refute_by_specialization(A: Sequence[TPoly], B: Sequence[TPoly], box: int = 2) -> bool:
    """Try to prove that B is not inside ideal(A).

    Setting variables to zero is a ring map phi, and t in ideal(A) forces
    phi(t) in ideal(phi(A)).  For each weight vector l >= 0 in a small box
    we kill every variable of non-positive l-weight; what is left is
    positively graded and decided exactly by :func:`graded_contains`.
    True means a certified non-member was found; False means no verdict.
    """
    A = [g for g in A if g]
    B = [g for g in B if g]
    variables = set()
    for g in A + B:
        variables |= g.variables()
    if not variables:
        return False
    n = len(next(iter(variables)).row)
    for ell in sorted(itertools.product(range(box + 1), repeat=n), key=lambda w: (sum(w), w)):
        if not any(ell):
            continue
        kill = {v: 0 for v in variables
                if sum(w * (a - b) for w, a, b in zip(ell, v.row, v.col)) <= 0}
        if not kill:
            continue
        targets = [t.substitute(kill) for t in B]
        if not any(targets):
            continue
        if graded_contains([g.substitute(kill) for g in A], targets) is False:
            return True
    return False


def refute_locally(A: Sequence[TPoly], B: Sequence[TPoly], k: int = 3) -> list[int]:
    """Indices of targets certified outside ideal(A) by truncation at the origin.

    Needs every generator to vanish at T = 0.  Then t in ideal(A) forces
    t in ideal(A) + m^k for the maximal ideal m of the origin, and within one
    multidegree that is a finite linear condition: t mod m^k must lie in the
    span of (m*g mod m^k) over monomials m of total degree < k.  No grading
    is needed, but the test can only refute, never prove, membership.
    """
    A = [g for g in A if g]
    if any(g.evaluate({v: 0 for v in g.variables()}) for g in A):
        raise OracleError("local refutation needs generators vanishing at the origin")
    variables = set()
    for g in A + [t for t in B if t]:
        variables |= g.variables()
    if not variables:
        return []
    tr = TRing(variables)
    degs = [tuple(a - b for a, b in zip(v.row, v.col)) for v in tr.variables]
    buckets: dict[tuple[int, ...], list] = {}
    for d in range(k):
        for combo in itertools.combinations_with_replacement(range(len(degs)), d):
            md = tuple(map(sum, zip(*(degs[i] for i in combo)))) if combo else (0,) * len(degs[0])
            buckets.setdefault(md, []).append(combo)
    # grevlex keys start with the total degree
    trunc = lambda p: {key: c for key, c in p.items() if key[0] < k}
    gens = []
    for g in A:
        d = _multidegree(g)
        if len(d) != 1:
            raise OracleError("local refutation needs multihomogeneous generators")
        gens.append((d.pop(), tr.encode(g)))
    spans: dict[tuple[int, ...], _Echelon] = {}
    refuted = []
    for idx, t in enumerate(B):
        if not t:
            continue
        d = _multidegree(t)
        if len(d) != 1:
            raise OracleError("local refutation needs multihomogeneous targets")
        D = d.pop()
        ech = spans.get(D)
        if ech is None:
            ech = spans[D] = _Echelon()
            for deg, g in gens:
                for combo in buckets.get(tuple(x - y for x, y in zip(D, deg)), ()):
                    e = [0] * tr.order.n
                    for i in combo:
                        e[i] += 1
                    q = tr.ring.encode(tuple(e))
                    row = trunc({tr.ring.mul(q, key): c for key, c in g.items()})
                    if row:
                        ech.add(row)
        if ech.reduce(trunc(tr.encode(t))):
            refuted.append(idx)
    return refuted


def contains(A: Sequence, B: Sequence, order: TermOrder | None = None,
             chain_criterion: bool = True, method: str = "auto", max_pairs: int | None = None) -> bool:
    """True iff every element of B lies in the ideal generated by A.

    ``method``:
      - "graded": homogeneous-component linear algebra (T-polynomials with a
        positive grading only; see :func:`graded_contains`);
      - "buchberger": Buchberger over A that stops as soon as every element
        of B has been reduced to zero by ideal elements, and answers False
        only once the basis is complete;
      - "reduced": full reduced basis of A first, then reduction of B;
      - "auto": "graded" when it applies; otherwise refutation attempts
        (:func:`refute_by_specialization`, :func:`refute_locally`) and then
        "buchberger".

    ``max_pairs`` is passed to :func:`buchberger`; when it runs out the
    question is left open and :class:`BudgetExceeded` propagates.
    """
    A, B = list(A), list(B)
    symbolic = all(isinstance(g, TPoly) for g in A + B)
    if symbolic:
        B = _open_targets(A, B)
        if not B:
            return True
    if method in ("auto", "graded") and symbolic:
        verdict = graded_contains(A, B)
        if verdict is not None:
            return verdict
        if method == "graded":
            raise OracleError("no positive grading makes these generators homogeneous")
        if refute_by_specialization(A, B):
            return False
        try:
            if refute_locally(A, B):
                return False
        except OracleError:
            pass
    if symbolic:
        variables = set()
        for g in A + B:
            variables |= g.variables()
        tr = TRing(variables)
        ring, gens, targets = tr.ring, [tr.encode(g) for g in A if g], [tr.encode(g) for g in B if g]
    else:
        if order is None:
            raise OracleError("an order is needed for polynomials in x")
        ring = Ring(order)
        gens = [ring.from_terms(_as_rational_terms(g)) for g in A]
        targets = [ring.from_terms(_as_rational_terms(g)) for g in B]
    targets = [t for t in targets if t]
    if method == "reduced":
        gb = buchberger(gens, ring, chain_criterion, max_pairs=max_pairs)
        return all(reduce_to_zero(t, gb, ring) for t in targets)
    return buchberger(gens, ring, chain_criterion, targets=targets, max_pairs=max_pairs)


# --------------------------------------------------------- point configurations

def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return Fraction(int(value[0]), int(value[1]))
    if isinstance(value, str):
        return Fraction(value)
    raise ValueError(f"cannot read {value!r} as an exact rational")


@dataclass(frozen=True)
class PointConfiguration:
    """r pairwise distinct points of Q^n."""

    points: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        pts = tuple(tuple(_to_fraction(c) for c in p) for p in self.points)
        if not pts:
            raise ValueError("a configuration needs at least one point")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise ValueError("points of different dimensions")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points[0])

    def __len__(self) -> int:
        return len(self.points)

    @classmethod
    def from_json(cls, text_or_data) -> "PointConfiguration":
        """Accepts [[[num, den], ...], ...] or decimal strings like "0.25"."""
        data = json.loads(text_or_data) if isinstance(text_or_data, str) else text_or_data
        return cls(tuple(tuple(_to_fraction(c) for c in p) for p in data))

    def to_json(self) -> list:
        return [[[c.numerator, c.denominator] for c in p] for p in self.points]

    @classmethod
    def random(cls, n: int, r: int, rng: random.Random, height: int = 5) -> "PointConfiguration":
        pts = set()
        while len(pts) < r:
            pts.add(tuple(Fraction(rng.randint(-height, height), rng.randint(1, height)) for _ in range(n)))
        return cls(tuple(sorted(pts)))

    @classmethod
    def grid(cls, eps: StandardSet, values: Sequence[Sequence[Fraction]] | None = None) -> "PointConfiguration":
        """Points (c_1(a_1), ..., c_n(a_n)) for a in eps, with injective coordinate maps c_i."""
        if values is None:
            values = [[Fraction(k * (i + 2) + 1, i + 1) for k in range(len(eps) + 1)] for i in range(eps.n)]
        return cls(tuple(tuple(Fraction(values[i][a[i]]) for i in range(eps.n)) for a in eps))


def _eval_monomial(point: Sequence[Fraction], alpha: Exponent) -> Fraction:
    v = Fraction(1)
    for p, e in zip(point, alpha):
        if e:
            v *= p ** e
    return v


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Exact Gauss-Jordan for a square system; None if singular."""
    size = len(matrix)
    a = [row[:] + [b] for row, b in zip(matrix, rhs)]
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(size):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][size] for r in range(size)]


def _staircase_of(points: Sequence[Sequence[Fraction]], order: TermOrder) -> list[Exponent]:
    """Greedy Buchberger-Moeller: standard monomials in increasing order."""
    n = len(points[0])
    r = len(points)
    delta: list[Exponent] = []
    members: set[Exponent] = set()
    # echelon rows: (pivot column, row vector) of evaluation vectors
    echelon: list[tuple[int, list[Fraction]]] = []
    candidates = {(0,) * n}
    rejected: set[Exponent] = set()
    while len(delta) < r:
        alpha = min(candidates, key=order.key)
        candidates.discard(alpha)
        v = [_eval_monomial(p, alpha) for p in points]
        for piv, row in echelon:
            if v[piv] != 0:
                f = v[piv] / row[piv]
                v = [x - f * y for x, y in zip(v, row)]
        piv = next((k for k, x in enumerate(v) if x != 0), None)
        if piv is None:
            rejected.add(alpha)
            continue
        echelon.append((piv, v))
        delta.append(alpha)
        members.add(alpha)
        for i in range(n):
            up = shift(alpha, i)
            if up in members or up in rejected:
                continue
            if all(up[j] == 0 or shift(up, j, -1) in members for j in range(n)):
                candidates.add(up)
    return delta


def point_ideal(P: PointConfiguration, order: TermOrder) -> tuple[StandardSet, dict[Exponent, dict[Exponent, Fraction]]]:
    """Standard set of the vanishing ideal and its border coefficients d.

    For alpha in the border, x^alpha + sum_beta d[alpha][beta] x^beta vanishes on P.
    """
    delta = StandardSet(P.n, tuple(_staircase_of(P.points, order)))
    return delta, chart_coefficients(P, delta, rows=delta.border, sign=-1)


def chart_coefficients(P: PointConfiguration, delta: StandardSet, rows: Iterable[Exponent] | None = None,
                       sign: int = 1) -> dict[Exponent, dict[Exponent, Fraction]] | None:
    """Coefficients a with x^alpha = sum_beta a[alpha][beta] x^beta on P (sign=+1).

    ``sign=-1`` returns d = -a instead.  None when the monomials x^delta do
    not form a basis of functions on P, i.e. P is outside the delta-chart.
    """
    if len(delta) != len(P):
        raise ValueError("standard set size differs from the number of points")
    basis = list(delta)
    # V[p][beta] = value of x^beta at p; solve V a_alpha = v_alpha
    V = [[_eval_monomial(p, b) for b in basis] for p in P.points]
    rows = list(delta.border) if rows is None else list(rows)
    out = {}
    for alpha in rows:
        rhs = [_eval_monomial(p, alpha) for p in P.points]
        sol = _solve(V, rhs)
        if sol is None:
            return None
        out[tuple(alpha)] = {b: sign * c for b, c in zip(basis, sol)}
    return out


def in_chart(P: PointConfiguration, delta: StandardSet) -> bool:
    V = [[_eval_monomial(p, b) for b in delta] for p in P.points]
    return _solve(V, [Fraction(0)] * len(V)) is not None


def chart_values(P: PointConfiguration, delta: StandardSet, rows: Iterable[Exponent] | None = None,
                 name: str = "T") -> dict[TVar, Fraction] | None:
    """The point of the delta-chart defined by P, as values of T_{alpha,beta}."""
    a = chart_coefficients(P, delta, rows)
    if a is None:
        return None
    return {TVar(alpha, beta, name): c for alpha, row in a.items() for beta, c in row.items()}


@dataclass(frozen=True)
class Classification:
    delta: StandardSet
    d: dict
    certified: bool
    failures: tuple[str, ...] = ()


def certify(P: PointConfiguration, delta: StandardSet, order: TermOrder) -> tuple[str, ...]:
    """Reasons why P fails to be a point of the stratum of delta (empty if it is one)."""
    values = chart_values(P, delta)
    if values is None:
        return ("x^delta is not a basis of functions on the points",)
    failures = []
    for g in gen_I2(delta).generators + gen_I3e(delta).generators:
        if g.poly.evaluate(values) != 0:
            failures.append(f"{g.label} {g.provenance}")
    for g in gen_stratum(delta, order, base=None).generators:
        if g.poly.evaluate(values) != 0:
            failures.append(f"STRATUM {g.provenance}")
    return tuple(failures)


def classify_stratum(P: PointConfiguration, order: TermOrder) -> Classification:
    """The unique stratum containing P, certified against the generated equations."""
    delta, d = point_ideal(P, order)
    a = chart_coefficients(P, delta)
    for alpha, row in d.items():
        for beta, c in row.items():
            if a[alpha][beta] != -c:
                raise OracleError("sign convention a = -d violated")
    failures = certify(P, delta, order)
    return Classification(delta, d, not failures, failures)


def border_polynomials(delta: StandardSet, d: Mapping[Exponent, Mapping[Exponent, Fraction]]) -> dict[Exponent, Poly]:
    return {alpha: Poly.from_rational(delta.n, {alpha: 1, **{b: c for b, c in row.items()}})
            for alpha, row in d.items()}


def random_configurations(n: int, r: int, count: int, seed: int, height: int = 5) -> list[PointConfiguration]:
    rng = random.Random(seed)
    return [PointConfiguration.random(n, r, rng, height) for _ in range(count)]
