"""Exact sparse multivariate polynomials over the rationals.

Two flavours share one class.  Indexed polynomials have a declared variable
count and variables ``0 .. nvars-1`` (printed ``X1 .. Xn``); they present
Weil algebras.  Named polynomials have ``nvars=None`` and string variables;
they carry symbolic parameters such as the coefficients of a generic point.
Mixing the two in one operation is an error.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from . import kernel
from .errors import ParseError, VariableCountMismatch

Monomial = tuple  # ((var, exp), ...) sorted by var, exp > 0
ONE: Monomial = ()


def as_rat(x) -> int | Fraction:
    """Exact rational from int, Fraction or a ``p/q`` string."""
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        try:
            f = Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {x!r}") from exc
        return f.numerator if f.denominator == 1 else f
    raise TypeError(f"not an exact rational: {x!r}")


def rat_str(c) -> str:
    return str(c)


# -- monomials ---------------------------------------------------------------


def mono(exps: Iterable[int]) -> Monomial:
    """Sparse monomial from a dense exponent vector."""
    return tuple((i, e) for i, e in enumerate(exps) if e)


def mono_exps(m: Monomial, nvars: int) -> tuple[int, ...]:
    out = [0] * nvars
    for v, e in m:
        out[v] = e
    return tuple(out)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return kernel.mono_mul(a, b)


def mono_divides(g: Monomial, m: Monomial) -> bool:
    return kernel.mono_divides(g, m)


def mono_exp(m: Monomial, var) -> int:
    for v, e in m:
        if v == var:
            return e
    return 0


def grlex_key(m: Monomial):
    """Graded order: degree first, then lexicographic with X1 > X2 > ..."""
    return (mono_degree(m), tuple((v, -e) for v, e in m))


def var_name(v) -> str:
    return f"X{v + 1}" if isinstance(v, int) else v


def mono_str(m: Monomial) -> str:
    if not m:
        return "1"
    return "*".join(var_name(v) if e == 1 else f"{var_name(v)}^{e}" for v, e in m)


def _check_mono(m, nvars):
    prev = None
    for v, e in m:
        if nvars is None:
            if not isinstance(v, str):
                raise TypeError(f"named polynomial needs string variables, got {v!r}")
        else:
            if not isinstance(v, int) or not 0 <= v < nvars:
                raise VariableCountMismatch(f"variable {v!r} outside 0..{nvars - 1}")
        if not isinstance(e, int) or e <= 0:
            raise ValueError(f"bad exponent {e!r}")
        if prev is not None and not prev < v:
            raise ValueError(f"monomial {m!r} is not sorted")
        prev = v


# -- polynomials -------------------------------------------------------------


class Polynomial:
    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Mapping | None = None, nvars: int | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            _check_mono(m, nvars)
            c = as_rat(c)
            if c != 0:
                clean[m] = c
        self._terms = clean
        self.nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p.nvars = nvars
        p._hash = None
        return p

    # constructors
    @classmethod
    def zero(cls, nvars=None) -> "Polynomial":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c, nvars=None) -> "Polynomial":
        c = as_rat(c)
        return cls._raw({ONE: c} if c else {}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise VariableCountMismatch(f"variable {i} outside 0..{nvars - 1}")
        return cls._raw({((i, 1),): 1}, nvars)

    @classmethod
    def symbol(cls, name: str) -> "Polynomial":
        return cls._raw({((name, 1),): 1}, None)

    @classmethod
    def from_monomial(cls, m: Monomial, c=1, nvars=None) -> "Polynomial":
        return cls({m: c}, nvars)

    # inspection
    @property
    def terms(self) -> dict:
        return self._terms

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE in self._terms)

    def constant_term(self):
        return self._terms.get(ONE, 0)

    def coefficient(self, m: Monomial):
        return self._terms.get(tuple(m), 0)

    def degree(self) -> int:
        return max((mono_degree(m) for m in self._terms), default=-1)

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]))

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise VariableCountMismatch(
                    f"variable counts differ: {self.nvars} vs {other.nvars}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(other, self.nvars)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial._raw(kernel.add_terms(self._terms, o._terms), self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial._raw(kernel.add_terms(self._terms, o._terms, -1), self.nvars)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return Polynomial._raw({}, self.nvars)
            return Polynomial._raw(kernel.add_terms({}, self._terms, other), self.nvars)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial._raw(kernel.mul_terms(self._terms, o._terms), self.nvars)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_trunc(self, other: "Polynomial", ideal: "MonomialIdeal") -> "Polynomial":
        """Product with every monomial of ``ideal`` discarded on the fly."""
        o = self._coerce(other)
        return Polynomial._raw(kernel.mul_terms(self._terms, o._terms, ideal.gens), self.nvars)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # calculus and substitution
    def diff(self, var) -> "Polynomial":
        out: dict = {}
        for m, c in self._terms.items():
            e = mono_exp(m, var)
            if not e:
                continue
            nm = tuple((v, x - 1) if v == var else (v, x) for v, x in m)
            nm = tuple(p for p in nm if p[1])
            out[nm] = out.get(nm, 0) + c * e
        return Polynomial._raw({m: c for m, c in out.items() if c}, self.nvars)

    def substitute(self, images: list, ideal: "MonomialIdeal | None" = None) -> "Polynomial":
        """Replace variable ``i`` by ``images[i]`` (indexed polynomials only).

        All images must share one variable count, which becomes the result's.
        With ``ideal`` the products are reduced as they are formed.
        """
        if self.nvars is None:
            raise TypeError("substitute() is for indexed polynomials; use evaluate()")
        if len(images) != self.nvars:
            raise VariableCountMismatch(f"need {self.nvars} images, got {len(images)}")
        counts = {p.nvars for p in images}
        if len(counts) > 1:
            raise VariableCountMismatch("images have different variable counts")
        tn = counts.pop() if counts else 0
        gens = ideal.gens if ideal is not None else ()
        one = {ONE: 1}
        powers: dict = {}
        out: dict = {}
        for m, c in self._terms.items():
            acc = one
            for v, e in m:
                key = (v, e)
                p = powers.get(key)
                if p is None:
                    p = (images[v] ** e)._terms
                    if gens:
                        p = kernel.reduce_terms(p, gens)
                    powers[key] = p
                acc = kernel.mul_terms(acc, p, gens)
                if not acc:
                    break
            for tm, tc in acc.items():
                out[tm] = out.get(tm, 0) + c * tc
        return Polynomial._raw({m: c for m, c in out.items() if c != 0}, tn)

    def evaluate(self, values: Mapping, zero=0):
        """Substitute ring elements for some variables.

        Variables absent from ``values`` stay symbolic and travel with the
        coefficient.  ``zero`` fixes the result ring when ``values`` is empty
        or holds non-polynomial elements.
        """
        polys = isinstance(zero, (int, Fraction, Polynomial)) and all(
            isinstance(x, (int, Fraction, Polynomial)) for x in values.values()
        )
        powers: dict = {}
        out: dict = {}
        acc = zero
        for m, c in self._terms.items():
            rest = []
            val = None
            for v, e in m:
                if v in values:
                    key = (v, e)
                    p = powers.get(key)
                    if p is None:
                        p = values[v] ** e
                        powers[key] = p
                    val = p if val is None else val * p
                else:
                    rest.append((v, e))
            coef = Polynomial._raw({tuple(rest): c}, self.nvars) if rest else c
            term = coef if val is None else coef * val
            if polys:
                if isinstance(term, Polynomial):
                    for tm, tc in term._terms.items():
                        out[tm] = out.get(tm, 0) + tc
                elif term:
                    out[ONE] = out.get(ONE, 0) + term
            else:
                acc = acc + term
        if polys:
            nv = self._result_nvars(values, zero)
            return Polynomial._raw(
                {m: (c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c)
                 for m, c in out.items() if c != 0},
                nv,
            )
        return acc

    def _result_nvars(self, values, zero):
        for x in list(values.values()) + [zero]:
            if isinstance(x, Polynomial):
                return x.nvars
        return self.nvars

    # text
    def __str__(self) -> str:
        return poly_str(self)

    def __repr__(self) -> str:
        return f"Polynomial({poly_str(self)!r}, nvars={self.nvars})"


def poly_str(p: Polynomial) -> str:
    if not p._terms:
        return "0"
    parts = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        if not m:
            body = rat_str(a)
        elif a == 1:
            body = mono_str(m)
        else:
            body = f"{rat_str(a)}*{mono_str(m)}"
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_XVAR = re.compile(r"X(\d+)\Z")
_NUM = re.compile(r"\d+(/\d+)?\Z")


def parse_poly(text: str, nvars: int | None = None) -> Polynomial:
    """Parse ``c*X1^a1*X2^a2 + ...``; the inverse of ``str``.

    With ``nvars`` the variables must be ``X1 .. Xn`` (or a bare ``X`` when
    ``nvars == 1``); without it any identifier is a named variable.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"([+-])([^+-]*)", s)
    if "".join(a + b for a, b in pieces) != s:
        raise ParseError(f"cannot parse {text!r}")
    out: dict = {}
    for sign, body in pieces:
        if not body:
            raise ParseError(f"empty term in {text!r}")
        coef: Fraction = Fraction(1)
        exps: dict = {}
        for factor in body.split("*"):
            if not factor:
                raise ParseError(f"empty factor in {text!r}")
            if _NUM.match(factor):
                try:
                    coef *= Fraction(factor)
                except ZeroDivisionError as exc:
                    raise ParseError(f"zero denominator in {text!r}") from exc
                continue
            name, _, power = factor.partition("^")
            if power and not power.isdigit():
                raise ParseError(f"bad exponent in {factor!r}")
            e = int(power) if power else 1
            if e == 0:
                continue
            if not _NAME.match(name):
                raise ParseError(f"bad variable {name!r}")
            if nvars is None:
                var = name
            else:
                mx = _XVAR.match(name)
                if mx:
                    var = int(mx.group(1)) - 1
                elif name == "X" and nvars == 1:
                    var = 0
                else:
                    raise ParseError(f"expected X1..X{nvars}, got {name!r}")
                if not 0 <= var < nvars:
                    raise VariableCountMismatch(f"{name} outside X1..X{nvars}")
            exps[var] = exps.get(var, 0) + e
        m = tuple(sorted(exps.items()))
        c = coef if sign == "+" else -coef
        out[m] = out.get(m, 0) + c
    return Polynomial({m: c for m, c in out.items() if c}, nvars)


# -- monomial ideals ---------------------------------------------------------


class MonomialIdeal:
    """An ideal spanned by monomials, kept as its minimal generating set."""

    __slots__ = ("gens", "nvars")

    def __init__(self, gens: Iterable[Monomial], nvars: int | None = None):
        gs = []
        for g in gens:
            g = tuple(g)
            _check_mono(g, nvars)
            gs.append(g)
        gs = sorted(set(gs), key=grlex_key)
        minimal = []
        for g in gs:
            if not any(mono_divides(h, g) for h in minimal):
                minimal.append(g)
        self.gens = tuple(minimal)
        self.nvars = nvars

    def contains(self, m: Monomial) -> bool:
        return kernel.in_ideal(tuple(m), self.gens)

    __contains__ = contains

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.nvars == other.nvars
            and set(self.gens) == set(other.gens)
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.gens)))

    def __repr__(self):
        return f"MonomialIdeal([{', '.join(mono_str(g) for g in self.gens)}])"


def normal_form(p: Polynomial, ideal: MonomialIdeal) -> Polynomial:
    """Remainder of ``p`` modulo a monomial ideal: delete terms in the ideal."""
    if p.nvars != ideal.nvars:
        raise VariableCountMismatch(f"polynomial has {p.nvars} variables, ideal {ideal.nvars}")
    return Polynomial._raw(kernel.reduce_terms(p._terms, ideal.gens), p.nvars)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def substitute(p: Polynomial, images: list, ideal: MonomialIdeal | None = None) -> Polynomial:
    return p.substitute(images, ideal)


def symbols(*names: str) -> list[Polynomial]:
    return [Polynomial.symbol(n) for n in names]
