"""Exact polynomial arithmetic kernel.

Python ints carry all integer coefficients (arbitrary precision, so no
overflow is possible) and ``fractions.Fraction`` carries rationals
(always normalized, positive denominator), so every operation in this
module is exact.

Representations:

* ``IntPoly``: dense univariate polynomial over the integers; a tuple of
  coefficients in ascending degree with no trailing zeros.  The zero
  polynomial is the empty tuple and reports degree -1.
* ``BiPoly``: sparse bivariate polynomial over the integers; a dict
  mapping ``(deg_x, deg_y)`` to nonzero coefficients.
* ``PolySeries``: formal power series in ``z`` truncated at a fixed
  order; the coefficient of ``z^i`` is a univariate polynomial over
  Fraction stored as a trimmed tuple.  Ring operations discard every
  z-degree beyond the truncation order.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import BadConstantTerm, BadParams, NonIntegral, NotDivisible


class IntPoly:
    """Dense univariate integer polynomial, immutable.

    ``coeffs[i]`` is the coefficient of ``x^i``; trailing zeros are
    stripped on construction so equal polynomials compare equal.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls()

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, coeff: int, deg: int) -> "IntPoly":
        if deg < 0:
            raise BadParams("monomial degree must be >= 0")
        return cls((0,) * deg + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPoly(out)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    def scale(self, c: int) -> "IntPoly":
        if c == 0:
            return IntPoly()
        return IntPoly(tuple(c * a for a in self.coeffs))

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k (k >= 0)."""
        if k < 0:
            raise BadParams("shift wants k >= 0; use exact_div_monomial to lower")
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __pow__(self, k: int) -> "IntPoly":
        return poly_pow(self, k)

    def __call__(self, v):
        """Evaluate by Horner; exact for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            elif d == 1:
                body = "x" if mag == 1 else f"{mag}x"
            else:
                body = f"x^{d}" if mag == 1 else f"{mag}x^{d}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly({self.coeffs!r})"


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact product of two integer polynomials."""
    return a * b


def poly_pow(a: IntPoly, k: int) -> IntPoly:
    """a**k for integer k >= 0, by repeated squaring."""
    if k < 0:
        raise BadParams("negative polynomial power")
    result = IntPoly.one()
    base = a
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def exact_div_monomial(p: IntPoly, k: int) -> IntPoly:
    """Divide p by x^k, raising NotDivisible unless x^k | p exactly.

    The zero polynomial divides by anything.
    """
    if k < 0:
        raise BadParams("monomial divisor degree must be >= 0")
    if p.is_zero():
        return p
    if len(p.coeffs) <= k or any(c != 0 for c in p.coeffs[:k]):
        raise NotDivisible(f"x^{k} does not divide {p}")
    return IntPoly(p.coeffs[k:])


def falling_factorial(m: int) -> IntPoly:
    """x(x-1)...(x-m+1) as an IntPoly; the empty product (m=0) is 1."""
    if m < 0:
        raise BadParams("falling factorial wants m >= 0")
    out = IntPoly.one()
    for i in range(m):
        out = out * IntPoly((-i, 1))
    return out


class BiPoly:
    """Sparse bivariate integer polynomial in variables (x, y).

    ``terms`` maps (deg_x, deg_y) to a nonzero int coefficient.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for key, c in dict(terms).items():
                if c:
                    t[(int(key[0]), int(key[1]))] = c
        self.terms = t

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        res = BiPoly.__new__(BiPoly)
        res.terms = out
        return res

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        res = BiPoly.__new__(BiPoly)
        res.terms = out
        return res

    def swap_vars(self) -> "BiPoly":
        """p(y, x)."""
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def substitute(self, px: IntPoly, py: IntPoly) -> IntPoly:
        """p(px(z), py(z)) as a univariate polynomial, exactly."""
        xp = {0: IntPoly.one()}
        yp = {0: IntPoly.one()}

        def power(cache, base, k):
            if k not in cache:
                cache[k] = power(cache, base, k - 1) * base
            return cache[k]

        acc = IntPoly.zero()
        for (i, j), c in sorted(self.terms.items()):
            acc = acc + (power(xp, px, i) * power(yp, py, j)).scale(c)
        return acc

    def translate(self, cx: int, cy: int) -> "BiPoly":
        """p(x + cx, y + cy), expanded exactly."""
        out = {}
        for (i, j), c in self.terms.items():
            for s in range(i + 1):
                xi = comb(i, s) * cx ** (i - s)
                if xi == 0:
                    continue
                for t in range(j + 1):
                    w = c * xi * comb(j, t) * cy ** (j - t)
                    if w == 0:
                        continue
                    k = (s, t)
                    v = out.get(k, 0) + w
                    if v:
                        out[k] = v
                    elif k in out:
                        del out[k]
        res = BiPoly.__new__(BiPoly)
        res.terms = out
        return res

    def __call__(self, u, v):
        return eval_bipoly(self, u, v)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            mono = []
            if i:
                mono.append("x" if i == 1 else f"x^{i}")
            if j:
                mono.append("y" if j == 1 else f"y^{j}")
            body = "*".join(mono)
            mag = abs(c)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}{body}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BiPoly({self.terms!r})"


def eval_bipoly(p: BiPoly, u, v):
    """Evaluate p at (u, v); exact for int/Fraction arguments."""
    total = 0
    up = {0: 1}
    vp = {0: 1}

    def power(cache, base, k):
        if k not in cache:
            cache[k] = power(cache, base, k - 1) * base
        return cache[k]

    for (i, j), c in p.terms.items():
        total += c * power(up, u, i) * power(vp, v, j)
    return total


# Rational-coefficient helper polynomials ("qpoly"): trimmed tuples of
# Fraction in ascending degree, used as series coefficients.

_QZERO = ()


def _qp_trim(cs) -> tuple:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(Fraction(c) for c in cs)


def _qp_add(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _qp_trim(out)


def _qp_mul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return _QZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _qp_trim(out)


def _qp_scale(a: tuple, c) -> tuple:
    if not c:
        return _QZERO
    c = Fraction(c)
    return tuple(v * c for v in a)


def intpoly_from_rational_coeffs(qp) -> IntPoly:
    """Convert a rational-coefficient polynomial to IntPoly.

    Raises NonIntegral if any coefficient has a denominator other than 1.
    """
    out = []
    for c in qp:
        c = Fraction(c)
        if c.denominator != 1:
            raise NonIntegral(f"coefficient {c} is not an integer")
        out.append(c.numerator)
    return IntPoly(out)


class PolySeries:
    """Power series in z, truncated at a fixed order, with qpoly coefficients.

    ``coeffs[i]`` is the coefficient of ``z^i`` as a trimmed Fraction
    tuple; the tuple has length ``order + 1``.  Binary operations align
    at the smaller of the two orders.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if order < 0:
            raise BadParams("series order must be >= 0")
        cs = [_qp_trim(c) for c in coeffs]
        if len(cs) > order + 1:
            raise BadParams("more coefficients than the truncation order allows")
        cs.extend([_QZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> "PolySeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "PolySeries":
        return cls(order, [(1,)])

    def coeff(self, i: int) -> tuple:
        return self.coeffs[i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolySeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: "PolySeries") -> "PolySeries":
        order = min(self.order, other.order)
        return PolySeries(
            order,
            [_qp_add(self.coeffs[i], other.coeffs[i]) for i in range(order + 1)],
        )

    def __mul__(self, other: "PolySeries") -> "PolySeries":
        order = min(self.order, other.order)
        out = [_QZERO] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = _qp_add(out[i + j], _qp_mul(a, b))
        return PolySeries(order, out)

    def map_coeffs(self, f) -> "PolySeries":
        return PolySeries(self.order, [f(c) for c in self.coeffs])

    def __repr__(self) -> str:
        return f"PolySeries(order={self.order}, coeffs={self.coeffs!r})"


def series_log(s: PolySeries) -> PolySeries:
    """log of a series with constant term exactly 1.

    Uses the standard quotient-free recurrence obtained from
    g' = g * (log g)': writing g = sum g_i z^i and log g = sum l_i z^i,
        n*g_n = sum_{k=1..n} k * l_k * g_{n-k},
    solved for l_n term by term.
    """
    if s.coeffs[0] != (Fraction(1),):
        raise BadConstantTerm("series_log needs constant term 1")
    n = s.order
    l = [_QZERO] * (n + 1)
    for m in range(1, n + 1):
        acc = _qp_scale(s.coeffs[m], m)
        for k in range(1, m):
            g = s.coeffs[m - k]
            if l[k] and g:
                acc = _qp_add(acc, _qp_scale(_qp_mul(l[k], g), -k))
        l[m] = _qp_scale(acc, Fraction(1, m))
    return PolySeries(n, l)


def series_exp(s: PolySeries) -> PolySeries:
    """exp of a series with constant term exactly 0.

    Same style of recurrence from e' = h' * e for e = exp(h):
        n*e_n = sum_{k=1..n} k * h_k * e_{n-k}.
    """
    if s.coeffs[0] != _QZERO:
        raise BadConstantTerm("series_exp needs constant term 0")
    n = s.order
    e = [_QZERO] * (n + 1)
    e[0] = (Fraction(1),)
    for m in range(1, n + 1):
        acc = _QZERO
        for k in range(1, m + 1):
            h = s.coeffs[k]
            if h and e[m - k]:
                acc = _qp_add(acc, _qp_scale(_qp_mul(h, e[m - k]), k))
        e[m] = _qp_scale(acc, Fraction(1, m))
    return PolySeries(n, e)
