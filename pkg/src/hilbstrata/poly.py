"""Exact sparse polynomials over Q and over the parameter ring Q[T, t].

Two layers:

* :class:`TPoly` is an element of Q[T_{alpha,beta}, t]; it is the coefficient
  ring of everything else and also the ring the generated equations live in.
* :class:`Poly` is an element of Q[T, t][x_1..x_n], a map from x-exponents to
  TPoly coefficients.  Rational polynomials are the special case where every
  coefficient is constant.

Terms are stored in plain dicts and only sorted (degree-lex, descending) when
printed, so the printed form does not depend on any user term order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

from .order import TermOrder
from .staircase import Exponent, StandardSet, deglex_key, shift

Scalar = Union[int, Fraction]


class PolyError(ValueError):
    pass


class MarkedFamilyError(PolyError):
    """A family member is not monic with tail inside the standard set."""


@dataclass(frozen=True)
class TVar:
    """The parameter T_{row,col}; ``name`` distinguishes chart variables (T vs U)."""

    row: Exponent
    col: Exponent
    name: str = "T"
    key: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "row", tuple(self.row))
        object.__setattr__(self, "col", tuple(self.col))
        object.__setattr__(self, "key", (self.name, deglex_key(self.row), deglex_key(self.col)))

    def __lt__(self, other: "TVar") -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        return f"{self.name}[{_fmt_exp(self.row)}|{_fmt_exp(self.col)}]"

    def cas_name(self) -> str:
        """Identifier form ``T_a1_a2__b1_b2``."""
        return (f"{self.name}_" + "_".join(map(str, self.row)) + "__"
                + "_".join(map(str, self.col)))


def _fmt_exp(alpha: Exponent) -> str:
    return "(" + ",".join(map(str, alpha)) + ")"


def _fmt_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# A T-monomial is (vars, tdeg) with vars a tuple of (TVar, exponent) sorted by TVar.key.
TMono = tuple[tuple[tuple[TVar, int], ...], int]
ONE_MONO: TMono = ((), 0)


def _mono_mul(a: TMono, b: TMono) -> TMono:
    if not a[0]:
        return (b[0], a[1] + b[1])
    if not b[0]:
        return (a[0], a[1] + b[1])
    merged = dict(a[0])
    for v, e in b[0]:
        merged[v] = merged.get(v, 0) + e
    return (tuple(sorted(merged.items(), key=lambda item: item[0].key)), a[1] + b[1])


def _mono_key(m: TMono) -> tuple:
    deg = sum(e for _, e in m[0])
    return (deg, tuple(v.key + (e,) for v, e in m[0]), m[1])


class TPoly:
    """Element of Q[T_{alpha,beta}, t] with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[TMono, Scalar] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[m] = c
        self._terms: dict[TMono, Fraction] = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "TPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors
    @classmethod
    def const(cls, c: Scalar) -> "TPoly":
        return cls({ONE_MONO: c})

    @classmethod
    def var(cls, v: TVar, power: int = 1) -> "TPoly":
        return cls({(((v, power),), 0): 1}) if power else cls.const(1)

    @classmethod
    def t(cls, power: int = 1) -> "TPoly":
        return cls({((), power): 1})

    @classmethod
    def coerce(cls, value) -> "TPoly":
        if isinstance(value, TPoly):
            return value
        if isinstance(value, TVar):
            return cls.var(value)
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to TPoly")

    # inspection
    @property
    def terms(self) -> dict[TMono, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(m == ONE_MONO for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise PolyError(f"{self} is not constant")
        return self._terms.get(ONE_MONO, Fraction(0))

    def variables(self) -> set[TVar]:
        return {v for m in self._terms for v, _ in m[0]}

    def t_degrees(self) -> set[int]:
        return {m[1] for m in self._terms}

    def total_degree(self) -> int:
        return max((sum(e for _, e in m[0]) for m in self._terms), default=-1)

    # arithmetic
    def __add__(self, other):
        try:
            other = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return TPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return TPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return TPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return TPoly()
            return TPoly._raw({m: c * other for m, c in self._terms.items()})
        try:
            other = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return TPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise PolyError("negative powers are not polynomials")
        result, base = TPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        try:
            other = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # substitution / evaluation
    def substitute(self, mapping: Mapping[TVar, "TPoly | Scalar"],
                   t_value: "TPoly | Scalar | None" = None) -> "TPoly":
        """Replace variables by polynomials; unmapped variables are kept."""
        mapping = {v: TPoly.coerce(p) for v, p in mapping.items()}
        tv = None if t_value is None else TPoly.coerce(t_value)
        out = TPoly()
        for (vars_, tdeg), c in self._terms.items():
            acc = TPoly.const(c)
            keep = []
            for v, e in vars_:
                if v in mapping:
                    acc = acc * (mapping[v] ** e)
                else:
                    keep.append((v, e))
            if tv is None:
                rest = TPoly._raw({(tuple(keep), tdeg): Fraction(1)})
            else:
                rest = TPoly._raw({(tuple(keep), 0): Fraction(1)}) * (tv ** tdeg)
            out = out + acc * rest
        return out

    def evaluate(self, values: Mapping[TVar, Scalar], t_value: Scalar | None = None) -> Fraction:
        """Evaluate to a rational; every variable (and t if present) must be assigned."""
        total = Fraction(0)
        for (vars_, tdeg), c in self._terms.items():
            term = c
            for v, e in vars_:
                if v not in values:
                    raise PolyError(f"no value supplied for {v}")
                term *= Fraction(values[v]) ** e
            if tdeg:
                if t_value is None:
                    raise PolyError("no value supplied for t")
                term *= Fraction(t_value) ** tdeg
            total += term
        return total

    def map_monomials(self, fn: Callable[[TMono], TMono]) -> "TPoly":
        out: dict = {}
        for m, c in self._terms.items():
            m2 = fn(m)
            s = out.get(m2, 0) + c
            if s:
                out[m2] = s
            else:
                out.pop(m2, None)
        return TPoly._raw(out)

    # printing
    def sorted_terms(self) -> list[tuple[TMono, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: _mono_key(mc[0]), reverse=True)

    def __str__(self) -> str:
        return format_terms([(None, m, c) for m, c in self.sorted_terms()])

    def __repr__(self) -> str:
        return f"TPoly({str(self)!r})"


def T(row: Iterable[int], col: Iterable[int], name: str = "T") -> TPoly:
    """Shorthand for the polynomial consisting of the single variable T_{row,col}."""
    return TPoly.var(TVar(tuple(row), tuple(col), name))


Coefficient = Union[Scalar, TPoly]


class Poly:
    """Element of Q[T, t][x_1..x_n]: a map from x-exponents to TPoly coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Exponent, Coefficient] | None = None):
        self.n = n
        clean: dict[Exponent, TPoly] = {}
        if terms:
            for alpha, c in terms.items():
                alpha = tuple(alpha)
                if len(alpha) != n:
                    raise PolyError(f"exponent {alpha} does not have length {n}")
                c = TPoly.coerce(c)
                if c:
                    clean[alpha] = clean[alpha] + c if alpha in clean else c
                    if not clean[alpha]:
                        del clean[alpha]
        self._terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "Poly":
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, alpha: Exponent, coeff: Coefficient = 1) -> "Poly":
        return cls(len(alpha), {tuple(alpha): coeff})

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls._raw(n, {})

    @classmethod
    def from_rational(cls, n: int, terms: Mapping[Exponent, Scalar]) -> "Poly":
        return cls(n, {a: TPoly.const(c) for a, c in terms.items()})

    @property
    def terms(self) -> dict[Exponent, TPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> set[Exponent]:
        return set(self._terms)

    def coefficient(self, alpha: Exponent) -> TPoly:
        return self._terms.get(tuple(alpha), TPoly())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_rational(self) -> bool:
        return all(c.is_constant() for c in self._terms.values())

    def rational_terms(self) -> dict[Exponent, Fraction]:
        return {a: c.constant_value() for a, c in self._terms.items()}

    def variables(self) -> set[TVar]:
        out = set()
        for c in self._terms.values():
            out |= c.variables()
        return out

    def _check(self, other: "Poly"):
        if self.n != other.n:
            raise PolyError(f"dimension mismatch {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction, TPoly)):
                other = Poly(self.n, {(0,) * self.n: other})
            else:
                return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for a, c in other._terms.items():
            s = out[a] + c if a in out else c
            if s:
                out[a] = s
            else:
                out.pop(a, None)
        return Poly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.n, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, TPoly)):
            other = Poly(self.n, {(0,) * self.n: other})
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Coefficient) -> "Poly":
        c = TPoly.coerce(c)
        if not c:
            return Poly.zero(self.n)
        out = {}
        for a, d in self._terms.items():
            p = d * c
            if p:
                out[a] = p
        return Poly._raw(self.n, out)

    def mul_monomial(self, alpha: Exponent, c: Coefficient = 1) -> "Poly":
        """Multiply by c * x^alpha."""
        shifted = Poly._raw(self.n, {tuple(x + y for x, y in zip(a, alpha)): d
                                     for a, d in self._terms.items()})
        return shifted if (isinstance(c, int) and c == 1) else shifted.scale(c)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, TPoly)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        out = Poly.zero(self.n)
        for a, c in other._terms.items():
            out = out + self.mul_monomial(a, c)
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly.monomial((0,) * self.n, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, TPoly)):
            other = Poly(self.n, {(0,) * self.n: other})
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def map_coefficients(self, fn: Callable[[TPoly], TPoly]) -> "Poly":
        return Poly(self.n, {a: fn(c) for a, c in self._terms.items()})

    def substitute(self, mapping: Mapping[TVar, Coefficient], t_value: Coefficient | None = None) -> "Poly":
        return self.map_coefficients(lambda c: c.substitute(mapping, t_value))

    def evaluate_params(self, values: Mapping[TVar, Scalar], t_value: Scalar | None = None) -> "Poly":
        """Specialize all parameters to rationals."""
        return Poly(self.n, {a: c.evaluate(values, t_value) for a, c in self._terms.items()})

    def evaluate_at(self, point: Iterable[Scalar]) -> TPoly:
        """Plug a rational point in for x; the result is a coefficient."""
        point = [Fraction(p) for p in point]
        total = TPoly()
        for a, c in self._terms.items():
            m = Fraction(1)
            for p, e in zip(point, a):
                if e:
                    m *= p ** e
            total = total + c * m
        return total

    def leading_data(self, order: TermOrder) -> "LeadingData":
        if not self._terms:
            raise PolyError("the zero polynomial has no leading term")
        if order.n != self.n:
            raise PolyError("order dimension does not match polynomial")
        le = order.max(self._terms)
        lc = self._terms[le]
        return LeadingData(le, lc, Poly.monomial(le), Poly.monomial(le, lc))

    def sorted_terms(self) -> list[tuple[Exponent, TPoly]]:
        return sorted(self._terms.items(), key=lambda ac: deglex_key(ac[0]), reverse=True)

    def __str__(self) -> str:
        rows = []
        for a, c in self.sorted_terms():
            for m, k in c.sorted_terms():
                rows.append((a, m, k))
        return format_terms(rows)

    def __repr__(self) -> str:
        return f"Poly({self.n}, {str(self)!r})"


@dataclass(frozen=True)
class LeadingData:
    le: Exponent
    lc: TPoly
    lm: Poly
    lt: Poly


def leading_data(f: Poly, order: TermOrder) -> LeadingData:
    return f.leading_data(order)


# ---------------------------------------------------------------- text grammar

def _format_factor(base: str, e: int) -> str:
    return base if e == 1 else f"{base}^{e}"


def format_terms(rows: list[tuple[Exponent | None, TMono, Fraction]]) -> str:
    if not rows:
        return "0"
    out = []
    for i, (alpha, (vars_, tdeg), c) in enumerate(rows):
        factors = []
        if alpha is not None:
            factors += [_format_factor(f"x{k + 1}", e) for k, e in enumerate(alpha) if e]
        factors += [_format_factor(str(v), e) for v, e in vars_]
        if tdeg:
            factors.append(_format_factor("t", tdeg))
        mag = abs(c)
        if not factors:
            body = _fmt_scalar(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _fmt_scalar(mag) + "*" + "*".join(factors)
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_FACTOR = re.compile(
    r"""^(?:
        (?P<num>\d+(?:/\d+)?)
      | x(?P<xi>\d+)(?:\^(?P<xe>\d+))?
      | (?P<vn>[A-Z])\[\((?P<row>[\d,\s]*)\)\|\((?P<col>[\d,\s]*)\)\](?:\^(?P<ve>\d+))?
      | t(?:\^(?P<te>\d+))?
    )$""",
    re.VERBOSE,
)


def _split_terms(text: str) -> list[tuple[int, str]]:
    text = text.replace(" ", "")
    if not text:
        raise PolyError("empty polynomial text")
    terms, depth, sign, cur = [], 0, 1, ""
    for i, ch in enumerate(text):
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch in "+-" and depth == 0:
            if cur:
                terms.append((sign, cur))
                cur = ""
                sign = 1
            elif i and text[i - 1] not in "+-":
                raise PolyError(f"malformed polynomial text {text!r}")
            if ch == "-":
                sign = -sign
            continue
        cur += ch
    if not cur:
        raise PolyError(f"dangling operator in {text!r}")
    terms.append((sign, cur))
    return terms


def _split_factors(term: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in term:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch == "*" and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return out


def _parse_term(term: str):
    coeff = Fraction(1)
    xs: dict[int, int] = {}
    vars_: dict[TVar, int] = {}
    tdeg = 0
    for factor in _split_factors(term):
        m = _FACTOR.match(factor)
        if not m:
            raise PolyError(f"cannot parse factor {factor!r}")
        if m.group("num"):
            coeff *= Fraction(m.group("num"))
        elif m.group("xi"):
            k = int(m.group("xi"))
            if k < 1:
                raise PolyError("variables are numbered from x1")
            xs[k - 1] = xs.get(k - 1, 0) + int(m.group("xe") or 1)
        elif m.group("vn"):
            row = tuple(int(s) for s in m.group("row").split(",") if s)
            col = tuple(int(s) for s in m.group("col").split(",") if s)
            v = TVar(row, col, m.group("vn"))
            vars_[v] = vars_.get(v, 0) + int(m.group("ve") or 1)
        else:
            tdeg += int(m.group("te") or 1)
    mono = (tuple(sorted(vars_.items(), key=lambda item: item[0].key)), tdeg)
    return coeff, xs, mono


def parse_tpoly(text: str) -> TPoly:
    """Parse the output of ``str(TPoly)``; x-variables are rejected."""
    out = TPoly()
    for sign, term in _split_terms(text):
        coeff, xs, mono = _parse_term(term)
        if xs:
            raise PolyError(f"unexpected x-variable in parameter polynomial {text!r}")
        out = out + TPoly({mono: sign * coeff})
    return out


def parse_poly(text: str, n: int) -> Poly:
    """Parse the output of ``str(Poly)`` in n variables x1..xn."""
    out = Poly.zero(n)
    for sign, term in _split_terms(text):
        coeff, xs, mono = _parse_term(term)
        if any(k >= n for k in xs):
            raise PolyError(f"variable index out of range for n={n} in {text!r}")
        alpha = tuple(xs.get(k, 0) for k in range(n))
        out = out + Poly(n, {alpha: TPoly({mono: sign * coeff})})
    return out


# --------------------------------------------------------------- marked families

def check_marked(alpha: Exponent, f: Poly, delta: StandardSet) -> None:
    """Raise unless f = x^alpha + (terms supported in delta) with alpha outside delta."""
    if alpha in delta:
        raise MarkedFamilyError(f"marked exponent {alpha} lies in the standard set")
    if f.coefficient(alpha) != 1:
        raise MarkedFamilyError(f"member for {alpha} is not monic at x^{alpha}")
    for beta in f.support():
        if beta != alpha and beta not in delta:
            raise MarkedFamilyError(f"member for {alpha} has tail exponent {beta} outside the standard set")


class MarkedFamily:
    """Marked polynomials f_alpha = x^alpha + tail (tail in delta) with a memo.

    The family may hold the corners only (then further members are produced
    by :meth:`extend`) or the whole border (then reduction works by border
    division even without a term order).  The memo is session-local.
    """

    def __init__(self, members: Mapping[Exponent, Poly], delta: StandardSet,
                 order: TermOrder | None = None):
        self.delta = delta
        self.members: dict[Exponent, Poly] = {}
        for alpha, f in members.items():
            alpha = tuple(alpha)
            check_marked(alpha, f, delta)
            self.members[alpha] = f
        self.order = order
        if order is not None:
            for alpha, f in self.members.items():
                if any(order.greater(b, alpha) for b in f.support()):
                    raise MarkedFamilyError(f"member for {alpha} has a tail term above x^{alpha} in {order.spec()}")
        self._border = frozenset(delta.border)
        self._memo: dict[Exponent, Poly] = dict(self.members)
        self._nf_memo: dict[Exponent, Poly] = {}
        self._active: set[Exponent] = set()

    def covers_border(self) -> bool:
        return all(a in self.members for a in self.delta.border)

    def extend(self, alpha: Exponent) -> Poly:
        """The unique f_alpha in the ideal with leading x^alpha and tail in delta."""
        alpha = tuple(alpha)
        if alpha in self.delta:
            raise PolyError(f"{alpha} lies in the standard set; no marked polynomial exists")
        if alpha in self._memo:
            return self._memo[alpha]
        if alpha in self._active:
            raise MarkedFamilyError("marking is not compatible with any term order; extension cycles")
        n = self.delta.n
        nu = next((i for i in range(n) if alpha[i] > 0 and shift(alpha, i, -1) not in self.delta), None)
        if nu is None:
            raise MarkedFamilyError(f"corner {alpha} is missing from the family")
        self._active.add(alpha)
        try:
            base = self.extend(shift(alpha, nu, -1))
            result = Poly.monomial(alpha)
            for gamma, c in base.items():
                if gamma == shift(alpha, nu, -1):
                    continue
                target = shift(gamma, nu)
                if target in self.delta:
                    result = result + Poly.monomial(target, c)
                else:
                    # c*x^target is congruent to c*(x^target - f_target)
                    result = result + (Poly.monomial(target) - self.extend(target)).scale(c)
        finally:
            self._active.discard(alpha)
        self._memo[alpha] = result
        return result

    def border_member(self, alpha: Exponent) -> Poly:
        if alpha in self.members:
            return self.members[alpha]
        return self.extend(alpha)

    def normal_form_of_monomial(self, alpha: Exponent) -> Poly:
        alpha = tuple(alpha)
        if alpha in self.delta:
            return Poly.monomial(alpha)
        if alpha in self._nf_memo:
            return self._nf_memo[alpha]
        if alpha in self.members or alpha in self._memo:
            f = self._memo[alpha]
            nf = Poly.monomial(alpha) - f
        elif alpha in self._border:
            nf = Poly.monomial(alpha) - self.border_member(alpha)
        else:
            # peel one variable off and push it through the normal form of the rest
            i = next(k for k in range(self.delta.n) if alpha[k] > 0)
            rest = self.normal_form_of_monomial(shift(alpha, i, -1))
            e_i = tuple(1 if k == i else 0 for k in range(self.delta.n))
            nf = self.reduce(rest.mul_monomial(e_i))
        self._nf_memo[alpha] = nf
        return nf

    def reduce(self, f: Poly) -> Poly:
        if f.n != self.delta.n:
            raise PolyError("dimension mismatch between polynomial and family")
        out = Poly.zero(f.n)
        for alpha, c in f.items():
            if alpha in self.delta:
                out = out + Poly.monomial(alpha, c)
            else:
                out = out + self.normal_form_of_monomial(alpha).scale(c)
        return out


def _as_family(family, delta: StandardSet, order: TermOrder | None) -> MarkedFamily:
    if isinstance(family, MarkedFamily):
        return family
    return MarkedFamily(family, delta, order)


def reduce(f: Poly, family: Mapping[Exponent, Poly] | MarkedFamily, delta: StandardSet,
           order: TermOrder | None = None) -> Poly:
    """Normal form of f modulo a marked family; the result is supported in delta."""
    return _as_family(family, delta, order).reduce(f)


def extend_family(corner_family: Mapping[Exponent, Poly] | MarkedFamily, alpha: Exponent,
                  delta: StandardSet, order: TermOrder | None = None) -> Poly:
    """f_alpha for alpha outside delta, built recursively from the corner members.

    Uses nu = smallest i with alpha - e_i outside delta and subtracts already
    known members.  A marking that is not compatible with any term order makes
    the recursion cycle, which is reported as MarkedFamilyError.
    """
    return _as_family(corner_family, delta, order).extend(alpha)
