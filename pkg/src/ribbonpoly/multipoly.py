"""Exact sparse multivariate polynomials over the integers.

The variable set is fixed to (x, y, z, w, L); ``L`` is the evaluation
variable of the Penrose polynomial.  Coefficients are arbitrary-precision
Python ints, exponents are small machine ints.  No floating point enters
any polynomial value.
"""

from __future__ import annotations

import re
from math import comb

VARS = ("x", "y", "z", "w", "L")
NVARS = len(VARS)
_VAR_INDEX = {name: i for i, name in enumerate(VARS)}

_ZERO_EXP = (0,) * NVARS


def _term_sort_key(exps):
    # Graded order, highest total degree first; ties broken reverse
    # lexicographically (the term whose last differing exponent is smaller
    # comes first), then lexicographically.
    return (-sum(exps), tuple(reversed(exps)), exps)


class MultiPoly:
    """Polynomial in Z[x, y, z, w, L] stored as {exponent tuple: coefficient}.

    Instances are immutable; all arithmetic returns new objects and never
    stores a zero coefficient, so equal polynomials compare equal as dicts
    and serialize to identical strings.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if not isinstance(coeff, int):
                    raise TypeError("coefficients must be int, got %r" % type(coeff))
                exps = tuple(exps)
                if len(exps) != NVARS or any((not isinstance(e, int)) or e < 0 for e in exps):
                    raise ValueError("bad exponent vector %r" % (exps,))
                if coeff:
                    clean[exps] = clean.get(exps, 0) + coeff
                    if not clean[exps]:
                        del clean[exps]
        object.__setattr__(self, "terms", clean)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def constant(cls, c):
        return cls({_ZERO_EXP: int(c)})

    @classmethod
    def variable(cls, name):
        i = _VAR_INDEX[name]
        exps = tuple(1 if j == i else 0 for j in range(NVARS))
        return cls({exps: 1})

    @classmethod
    def monomial(cls, coeff, **powers):
        exps = [0] * NVARS
        for name, e in powers.items():
            exps[_VAR_INDEX[name]] = int(e)
        return cls({tuple(exps): int(coeff)})

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms.get(exps, 0) + c
        return MultiPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self, name=None):
        """Total degree, or the degree in one variable.  Zero poly: -1."""
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        i = _VAR_INDEX[name]
        return max(e[i] for e in self.terms)

    def coefficient(self, **powers):
        exps = [0] * NVARS
        for name, e in powers.items():
            exps[_VAR_INDEX[name]] = int(e)
        return self.terms.get(tuple(exps), 0)

    def variables(self):
        """Names of variables that actually occur."""
        present = [False] * NVARS
        for e in self.terms:
            for i, v in enumerate(e):
                if v:
                    present[i] = True
        return tuple(VARS[i] for i in range(NVARS) if present[i])

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, **replacements):
        """Replace variables by polynomials (or ints), expanding exactly."""
        reps = {}
        for name, val in replacements.items():
            reps[_VAR_INDEX[name]] = _coerce(val)
        out = MultiPoly.zero()
        for exps, c in self.terms.items():
            factor = MultiPoly.constant(c)
            rest = list(exps)
            for i, rep in reps.items():
                if exps[i]:
                    factor = factor * rep ** exps[i]
                    rest[i] = 0
            out = out + factor * MultiPoly({tuple(rest): 1})
        return out

    def evaluate(self, **values):
        """Exact integer evaluation; every occurring variable must get a value."""
        vals = [None] * NVARS
        for name, v in values.items():
            vals[_VAR_INDEX[name]] = int(v)
        total = 0
        for exps, c in self.terms.items():
            term = c
            for i, e in enumerate(exps):
                if e:
                    if vals[i] is None:
                        raise ValueError("no value given for variable %s" % VARS[i])
                    term *= vals[i] ** e
            total += term
        return total

    # -- canonical text form -------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: _term_sort_key(item[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for idx, (exps, coeff) in enumerate(self.sorted_terms()):
            mag = abs(coeff)
            parts = []
            if mag != 1 or not any(exps):
                parts.append(str(mag))
            for i, e in enumerate(exps):
                if e == 1:
                    parts.append(VARS[i])
                elif e > 1:
                    parts.append("%s^%d" % (VARS[i], e))
            body = "*".join(parts)
            if idx == 0:
                pieces.append(("-" if coeff < 0 else "") + body)
            else:
                pieces.append((" - " if coeff < 0 else " + ") + body)
        return "".join(pieces)

    __repr__ = __str__


def _coerce(value):
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, int):
        return MultiPoly.constant(value)
    raise TypeError("cannot coerce %r to MultiPoly" % type(value))


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+\s-][^+\s]*(?:\s*\*\s*[^+\s-][^+\s]*)*)")
_FACTOR_RE = re.compile(r"^(?:(\d+)|([a-zA-Z])(?:\^(\d+))?)$")


def parse_poly(text):
    """Parse the canonical text form back into a MultiPoly.

    Accepts what ``str(poly)`` emits, with liberal whitespace.  Raises
    ValueError on malformed input or unknown variable names.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return MultiPoly.zero()
    result = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or not m.group(2):
            raise ValueError("cannot parse polynomial at %r" % s[pos:])
        sign, body = m.group(1), m.group(2)
        if first and sign is None:
            sign = "+"
        if sign is None:
            raise ValueError("missing sign before %r" % body)
        coeff = 1
        exps = [0] * NVARS
        for factor in (f.strip() for f in body.split("*")):
            fm = _FACTOR_RE.match(factor)
            if not fm:
                raise ValueError("bad factor %r" % factor)
            if fm.group(1) is not None:
                coeff *= int(fm.group(1))
            else:
                name = fm.group(2)
                if name not in _VAR_INDEX:
                    raise ValueError("unknown variable %r" % name)
                exps[_VAR_INDEX[name]] += int(fm.group(3) or 1)
        if sign == "-":
            coeff = -coeff
        key = tuple(exps)
        result[key] = result.get(key, 0) + coeff
        pos = m.end()
        first = False
    return MultiPoly(result)


def x_minus_one_power(k):
    """(x - 1)**k expanded, via binomial coefficients."""
    terms = {}
    for i in range(k + 1):
        exps = (i, 0, 0, 0, 0)
        terms[exps] = comb(k, i) * (-1) ** (k - i)
    return MultiPoly(terms)
