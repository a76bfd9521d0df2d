"""Exact arithmetic kernel.

Everything downstream reduces to four kinds of values:

* ``Rat`` -- arbitrary-precision rationals (``fractions.Fraction``).
* ``MPoly`` -- sparse multivariate polynomials with integer coefficients.
* ``RatFunc`` -- quotients of two ``MPoly`` values carrying a rational
  content factor, compared by cross-multiplication (no polynomial GCDs).
* ``SurdExpr`` / ``ExtElem`` -- quadratic-surd values ``a + b*sqrt(r)``
  and elements of the biquadratic extension generated by two radicals,
  both with exact sign determination.

All values are immutable; every operation is a pure function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

Rat = Fraction

# Fixed precedence used when two polynomials over different variable
# tuples meet; keeps the graded-lex serialization deterministic.
_VAR_PRECEDENCE = ("i", "m", "n", "k", "u", "s", "t", "x", "y", "z")


def _var_key(name: str) -> tuple[int, str]:
    try:
        return (_VAR_PRECEDENCE.index(name), name)
    except ValueError:
        return (len(_VAR_PRECEDENCE), name)


def _merge_vars(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(sorted(set(a) | set(b), key=_var_key))


Scalar = Union[int, Fraction]


class MPoly:
    """Sparse multivariate polynomial over the integers.

    ``terms`` maps exponent vectors (tuples aligned with ``vars``) to
    nonzero integer coefficients.  Zero coefficients are never stored.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Iterable[str], terms: Mapping[tuple[int, ...], int]):
        vs = tuple(vars)
        clean: dict[tuple[int, ...], int] = {}
        for expo, coeff in terms.items():
            if coeff == 0:
                continue
            if len(expo) != len(vs):
                raise ValueError(f"exponent arity {len(expo)} != {len(vs)} variables")
            clean[tuple(expo)] = int(coeff)
        self.vars = vs
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(vars: Iterable[str] = ()) -> "MPoly":
        return MPoly(vars, {})

    @staticmethod
    def const(c: int, vars: Iterable[str] = ()) -> "MPoly":
        vs = tuple(vars)
        return MPoly(vs, {(0,) * len(vs): int(c)} if c else {})

    @staticmethod
    def var(name: str) -> "MPoly":
        return MPoly((name,), {(1,): 1})

    # -- structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0
        j = self.vars.index(name)
        return max((e[j] for e in self.terms), default=0)

    def coeff_content(self) -> int:
        """gcd of all coefficients (0 for the zero polynomial)."""
        return math.gcd(*self.terms.values()) if self.terms else 0

    def leading_coeff(self) -> int:
        """Coefficient of the graded-lex leading term (0 if zero)."""
        if not self.terms:
            return 0
        return self.terms[max(self.terms, key=lambda e: (sum(e), e))]

    def _aligned(self, vars: tuple[str, ...]) -> "MPoly":
        if vars == self.vars:
            return self
        pos = [vars.index(v) for v in self.vars]
        terms: dict[tuple[int, ...], int] = {}
        for expo, coeff in self.terms.items():
            new = [0] * len(vars)
            for p, e in zip(pos, expo):
                new[p] = e
            terms[tuple(new)] = coeff
        return MPoly(vars, terms)

    @staticmethod
    def _align(a: "MPoly", b: "MPoly") -> tuple["MPoly", "MPoly"]:
        if a.vars == b.vars:
            return a, b
        common = _merge_vars(a.vars, b.vars)
        return a._aligned(common), b._aligned(common)

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(other) -> "MPoly | None":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, int):
            return MPoly.const(other)
        return None

    def __add__(self, other) -> "MPoly":
        o = MPoly._coerce(other)
        if o is None:
            return NotImplemented
        a, b = MPoly._align(self, o)
        terms = dict(a.terms)
        for expo, coeff in b.terms.items():
            terms[expo] = terms.get(expo, 0) + coeff
        return MPoly(a.vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        o = MPoly._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "MPoly":
        return (-self) + other

    def __mul__(self, other) -> "MPoly":
        o = MPoly._coerce(other)
        if o is None:
            return NotImplemented
        a, b = MPoly._align(self, o)
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return MPoly(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other) -> "RatFunc":
        o = MPoly._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self, o)

    def __eq__(self, other) -> bool:
        o = MPoly._coerce(other)
        if o is None:
            return NotImplemented
        a, b = MPoly._align(self, o)
        return a.terms == b.terms

    def __hash__(self):
        a = self._aligned(_merge_vars(self.vars, ()))
        return hash((a.vars, frozenset(a.terms.items())))

    # -- evaluation / substitution -------------------------------------

    def eval(self, point: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a rational point assigning every variable."""
        missing = [v for v in self.vars if v not in point]
        if missing:
            raise ValueError(f"missing variable assignment: {missing}")
        vals = [Fraction(point[v]) for v in self.vars]
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            term = Fraction(coeff)
            for val, e in zip(vals, expo):
                if e:
                    term *= val**e
            total += term
        return total

    def subs(self, mapping: Mapping[str, "MPoly | int"]) -> "MPoly":
        """Substitute polynomials for variables (others pass through)."""
        images: dict[str, MPoly] = {}
        for v in self.vars:
            img = mapping.get(v, None)
            if img is None:
                images[v] = MPoly.var(v)
            elif isinstance(img, int):
                images[v] = MPoly.const(img)
            else:
                images[v] = img
        acc = MPoly.zero()
        for expo, coeff in self.terms.items():
            term = MPoly.const(coeff)
            for v, e in zip(self.vars, expo):
                if e:
                    term = term * images[v] ** e
            acc = acc + term
        return acc

    # -- serialization -------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in descending graded-lex order (leading term first)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_text(self) -> str:
        """Canonical text form: graded-lex sorted ``coeff*var^e`` terms."""
        if not self.terms:
            return "0"
        parts = []
        for expo, coeff in self.sorted_terms():
            factors = [str(coeff)]
            for v, e in zip(self.vars, expo):
                if e:
                    factors.append(f"{v}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"MPoly({self.to_text()!r})"


def parse_mpoly(text: str, vars: Iterable[str]) -> MPoly:
    """Parse the canonical text form produced by :meth:`MPoly.to_text`."""
    vs = tuple(vars)
    text = text.strip()
    if text == "0":
        return MPoly.zero(vs)
    terms: dict[tuple[int, ...], int] = {}
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError("empty term in polynomial text")
        factors = chunk.split("*")
        coeff = int(factors[0])
        expo = [0] * len(vs)
        for factor in factors[1:]:
            name, _, power = factor.partition("^")
            if name not in vs:
                raise ValueError(f"unknown variable {name!r}")
            expo[vs.index(name)] += int(power) if power else 1
        key = tuple(expo)
        terms[key] = terms.get(key, 0) + coeff
    return MPoly(vs, terms)


class RatFunc:
    """Quotient ``content * num / den`` of integer polynomials.

    ``den`` is never the zero polynomial.  Equality is decided by
    cross-multiplication; no normal form (and no polynomial GCD) is
    computed.  The rational ``content`` keeps both polynomials integral.
    """

    __slots__ = ("num", "den", "content")

    def __init__(self, num: MPoly, den: MPoly | int = 1, content: Scalar = 1):
        if isinstance(den, int):
            den = MPoly.const(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator polynomial")
        content = Fraction(content)
        if num.is_zero or content == 0:
            # canonical zero: 0/1 with content 1
            self.num = MPoly.zero()
            self.den = MPoly.const(1)
            self.content = Fraction(1)
            return
        gn = num.coeff_content()
        gd = den.coeff_content()
        if den.leading_coeff() < 0:
            gd = -gd
        if gn > 1 or gd != 1:
            num = MPoly(num.vars, {e: c // gn for e, c in num.terms.items()})
            den = MPoly(den.vars, {e: c // gd for e, c in den.terms.items()})
            content *= Fraction(gn, gd)
        self.num = num
        self.den = den
        self.content = content

    # -- constructors -------------------------------------------------

    @staticmethod
    def const(c: Scalar) -> "RatFunc":
        return RatFunc(MPoly.const(1), 1, Fraction(c))

    @staticmethod
    def var(name: str) -> "RatFunc":
        return RatFunc(MPoly.var(name))

    @staticmethod
    def _coerce(other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other)
        return None

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    # -- field operations ----------------------------------------------

    def __add__(self, other) -> "RatFunc":
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        pa, qa = self.content.numerator, self.content.denominator
        pb, qb = o.content.numerator, o.content.denominator
        num = (pa * qb) * self.num * o.den + (pb * qa) * o.num * self.den
        return RatFunc(num, self.den * o.den, Fraction(1, qa * qb))

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(self.num, self.den, -self.content)

    def __sub__(self, other) -> "RatFunc":
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den, self.content * o.content)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num, self.content / o.content)

    def __rtruediv__(self, other) -> "RatFunc":
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return RatFunc.const(1) / self ** (-n)
        return RatFunc(self.num**n, self.den**n, self.content**n)

    def __eq__(self, other) -> bool:
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        # content1 * n1/d1 == content2 * n2/d2  iff  p1 q2 n1 d2 == p2 q1 n2 d1
        p1, q1 = self.content.numerator, self.content.denominator
        p2, q2 = o.content.numerator, o.content.denominator
        return (p1 * q2) * self.num * o.den == (p2 * q1) * o.num * self.den

    def __hash__(self):
        raise TypeError("RatFunc is not hashable (no canonical form)")

    def eval(self, point: Mapping[str, Scalar]) -> Fraction:
        dv = self.den.eval(point)
        if dv == 0:
            raise ZeroDivisionError(f"denominator vanishes at {dict(point)}")
        return self.content * self.num.eval(point) / dv

    def __repr__(self):
        return f"RatFunc({self.content} * ({self.num.to_text()}) / ({self.den.to_text()}))"


def _sign(x: Fraction | int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class SurdExpr:
    """Exact value ``base + coeff * sqrt(radicand)`` with rational parts.

    ``radicand`` must be nonnegative.  The sign is decided exactly by
    comparing ``base**2`` against ``coeff**2 * radicand``, never by
    floating approximation.
    """

    base: Fraction
    coeff: Fraction = Fraction(0)
    radicand: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "base", Fraction(self.base))
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "radicand", Fraction(self.radicand))
        if self.radicand < 0:
            raise ValueError("negative radicand")
        if self.coeff == 0 or self.radicand == 0:
            # canonical rational: drop the surd part entirely
            object.__setattr__(self, "coeff", Fraction(0))
            object.__setattr__(self, "radicand", Fraction(0))

    @property
    def is_rational(self) -> bool:
        return self.coeff == 0

    def _compatible(self, other: "SurdExpr") -> Fraction:
        if self.coeff and other.coeff and self.radicand != other.radicand:
            raise ValueError("mixing distinct radicands; use ExtElem")
        return self.radicand if self.coeff else other.radicand

    def __add__(self, other) -> "SurdExpr":
        if isinstance(other, (int, Fraction)):
            return SurdExpr(self.base + other, self.coeff, self.radicand)
        if isinstance(other, SurdExpr):
            rad = self._compatible(other)
            return SurdExpr(self.base + other.base, self.coeff + other.coeff, rad)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "SurdExpr":
        return SurdExpr(-self.base, -self.coeff, self.radicand)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, SurdExpr)):
            return self + (-other if isinstance(other, SurdExpr) else -Fraction(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "SurdExpr":
        if isinstance(other, (int, Fraction)):
            return SurdExpr(self.base * other, self.coeff * other, self.radicand)
        if isinstance(other, SurdExpr):
            rad = self._compatible(other)
            return SurdExpr(
                self.base * other.base + self.coeff * other.coeff * rad,
                self.base * other.coeff + self.coeff * other.base,
                rad,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "SurdExpr":
        if n < 0:
            raise ValueError("negative power of SurdExpr")
        result = SurdExpr(Fraction(1))
        for _ in range(n):
            result = result * self
        return result

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}."""
        if self.coeff == 0:
            return _sign(self.base)
        sb, sc = _sign(self.base), _sign(self.coeff)
        if sb >= 0 and sc > 0:
            return 1
        if sb <= 0 and sc < 0:
            return -1
        # base and surd part have opposite signs: the larger square wins
        cmp = _sign(self.base**2 - self.coeff**2 * self.radicand)
        if cmp == 0:
            return 0
        return sb if cmp > 0 else sc

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def to_float(self) -> float:
        return float(self.base) + float(self.coeff) * math.sqrt(float(self.radicand))


def surd_sign(s: SurdExpr) -> int:
    return s.sign()


class ExtElem:
    """Element ``c00 + c10*D1 + c01*D2 + c11*D1*D2`` of the extension
    generated by two square roots ``D1 = sqrt(d1)``, ``D2 = sqrt(d2)``.

    Coordinates and the squared generators ``d1``, ``d2`` live in a common
    coefficient ring: ``Fraction`` for pointwise work, ``RatFunc`` for
    symbolic certificates.  Multiplication reduces every ``D1**2`` and
    ``D2**2`` through the defining relations.
    """

    __slots__ = ("c00", "c10", "c01", "c11", "d1", "d2")

    def __init__(self, c00, c10, c01, c11, d1, d2):
        self.c00 = c00
        self.c10 = c10
        self.c01 = c01
        self.c11 = c11
        self.d1 = d1
        self.d2 = d2

    # -- constructors -------------------------------------------------

    @staticmethod
    def scalar(value, d1, d2) -> "ExtElem":
        zero = value - value
        return ExtElem(value, zero, zero, zero, d1, d2)

    @staticmethod
    def delta1(d1, d2) -> "ExtElem":
        one = d1 / d1 if isinstance(d1, RatFunc) else Fraction(1)
        zero = one - one
        return ExtElem(zero, one, zero, zero, d1, d2)

    @staticmethod
    def delta2(d1, d2) -> "ExtElem":
        one = d1 / d1 if isinstance(d1, RatFunc) else Fraction(1)
        zero = one - one
        return ExtElem(zero, zero, one, zero, d1, d2)

    def _check(self, other: "ExtElem"):
        if not (self.d1 == other.d1 and self.d2 == other.d2):
            raise ValueError("extension moduli differ")

    def _wrap(self, other) -> "ExtElem | None":
        if isinstance(other, ExtElem):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(self.c00, RatFunc):
            return ExtElem.scalar(Fraction(other), self.d1, self.d2)
        if isinstance(other, (int, Fraction, MPoly, RatFunc)) and isinstance(self.c00, RatFunc):
            return ExtElem.scalar(RatFunc._coerce(other), self.d1, self.d2)
        return None

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return ExtElem(
            self.c00 + o.c00, self.c10 + o.c10, self.c01 + o.c01, self.c11 + o.c11,
            self.d1, self.d2,
        )

    __radd__ = __add__

    def __neg__(self):
        return ExtElem(-self.c00, -self.c10, -self.c01, -self.c11, self.d1, self.d2)

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.c00, self.c10, self.c01, self.c11
        e, f, g, h = o.c00, o.c10, o.c01, o.c11
        d1, d2 = self.d1, self.d2
        return ExtElem(
            a * e + b * f * d1 + c * g * d2 + d * h * d1 * d2,
            a * f + b * e + (c * h + d * g) * d2,
            a * g + c * e + (b * h + d * f) * d1,
            a * h + d * e + b * g + c * f,
            d1, d2,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ExtElem":
        if n < 0:
            raise ValueError("negative power of ExtElem")
        result = self._one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def _one(self) -> "ExtElem":
        if isinstance(self.c00, RatFunc):
            one = RatFunc.const(1)
            zero = RatFunc.const(0)
        else:
            one = Fraction(1)
            zero = Fraction(0)
        return ExtElem(one, zero, zero, zero, self.d1, self.d2)

    def __eq__(self, other) -> bool:
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return (
            self.c00 == o.c00 and self.c10 == o.c10
            and self.c01 == o.c01 and self.c11 == o.c11
        )

    def __hash__(self):
        raise TypeError("ExtElem is not hashable")

    # -- exact sign (numeric coordinates only) --------------------------

    def sign(self) -> int:
        """Exact sign of the real value for Fraction coordinates,
        taking the nonnegative square roots of ``d1`` and ``d2``."""
        if isinstance(self.c00, RatFunc):
            raise TypeError("sign is defined for numeric coordinates only")
        if self.d1 < 0 or self.d2 < 0:
            raise ValueError("negative squared generator")
        u = SurdExpr(self.c00, self.c10, self.d1)
        v = SurdExpr(self.c01, self.c11, self.d1)
        if self.d2 == 0:
            return u.sign()
        su, sv = u.sign(), v.sign()
        if sv == 0:
            return su
        if su == 0:
            return sv
        if su == sv:
            return su
        cmp = (u * u - v * v * self.d2).sign()
        if cmp == 0:
            return 0
        return su if cmp > 0 else sv

    def eval_coords(self, point: Mapping[str, Scalar]) -> "ExtElem":
        """Specialize RatFunc coordinates at a rational point."""
        if not isinstance(self.c00, RatFunc):
            raise TypeError("coordinates are already numeric")
        return ExtElem(
            self.c00.eval(point), self.c10.eval(point),
            self.c01.eval(point), self.c11.eval(point),
            self.d1.eval(point) if isinstance(self.d1, (RatFunc, MPoly)) else Fraction(self.d1),
            self.d2.eval(point) if isinstance(self.d2, (RatFunc, MPoly)) else Fraction(self.d2),
        )

    def __repr__(self):
        return (f"ExtElem({self.c00!r} + {self.c10!r}*D1 + {self.c01!r}*D2 "
                f"+ {self.c11!r}*D1*D2)")


def ext_reduce_mul(x: ExtElem, y: ExtElem) -> ExtElem:
    return x * y


def mpoly_eval(p: MPoly, point: Mapping[str, Scalar]) -> Fraction:
    return p.eval(point)


def mpoly_equal(p: MPoly, q: MPoly) -> bool:
    return p == q


def rat_to_str(x: Fraction | int) -> str:
    """Serialize a rational as ``num/den`` (denominator always present)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rat_from_str(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den) if den else 1)


def surd_to_obj(s: SurdExpr) -> dict:
    return {
        "base": rat_to_str(s.base),
        "coeff": rat_to_str(s.coeff),
        "radicand": rat_to_str(s.radicand),
    }


def univar_coeffs(p: MPoly, name: str) -> list[Fraction]:
    """Dense coefficient list (ascending degree) of a univariate poly."""
    for v in p.vars:
        if v != name and p.degree_in(v) > 0:
            raise ValueError(f"polynomial is not univariate in {name}: {v}")
    out = [Fraction(0)] * (p.degree_in(name) + 1)
    j = p.vars.index(name) if name in p.vars else None
    for expo, coeff in p.terms.items():
        out[expo[j] if j is not None else 0] += coeff
    return out


def divexact_univar(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    """Exact univariate division; raises if the remainder is nonzero."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    while num and num[-1] == 0:
        num.pop()
    if not num:
        return [Fraction(0)]
    if len(num) < len(den):
        raise ValueError("division is not exact (degree too small)")
    quot = [Fraction(0)] * (len(num) - len(den) + 1)
    rem = num[:]
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + len(den) - 1] / den[-1]
        quot[k] = c
        if c:
            for j, d in enumerate(den):
                rem[k + j] -= c * d
    if any(rem):
        raise ValueError("division is not exact (nonzero remainder)")
    return quot


def poly_from_coeffs(coeffs: Iterable[Fraction], name: str) -> tuple[MPoly, Fraction]:
    """Build ``(poly, content)`` with integer coefficients from rationals."""
    coeffs = [Fraction(c) for c in coeffs]
    denom = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    ints = [int(c * denom) for c in coeffs]
    g = math.gcd(*ints) if any(ints) else 1
    g = g or 1
    poly = MPoly((name,), {(d,): c // g for d, c in enumerate(ints) if c})
    return poly, Fraction(g, denom)
