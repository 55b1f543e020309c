"""Sparse exact polynomials: bivariate in (x, y) and univariate in q."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"({c})"
    return str(int(c)) if isinstance(c, Fraction) else str(c)


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _render(terms) -> str:
    """``terms`` is a list of (coefficient, monomial string) in print order."""
    out = []
    for c, mono in terms:
        neg = c < 0
        a = -c if neg else c
        if mono and a == 1:
            body = mono
        elif mono:
            body = f"{_fmt_coeff(a)}*{mono}"
        else:
            body = _fmt_coeff(a)
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


class BivariatePolynomial:
    """Polynomial in x and y with exact coefficients, stored sparsely.

    ``coeffs`` maps exponent pairs ``(i, j)`` to the coefficient of
    ``x^i y^j``; zero coefficients are never stored, so equality of two
    polynomials is equality of their maps.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        c = {}
        for k, v in (coeffs or {}).items():
            if v:
                c[(int(k[0]), int(k[1]))] = _normalize(v)
        self._c = c

    @classmethod
    def constant(cls, value) -> "BivariatePolynomial":
        return cls({(0, 0): value})

    @classmethod
    def x(cls) -> "BivariatePolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePolynomial":
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "BivariatePolynomial":
        return cls({(i, j): c})

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self._c)

    def coefficient(self, i: int, j: int):
        return self._c.get((i, j), 0)

    def terms(self):
        return self._c.items()

    def is_zero(self) -> bool:
        return not self._c

    def degree_x(self) -> int:
        return max((i for i, _ in self._c), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self._c), default=-1)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, BivariatePolynomial):
            return self._c == other._c
        if isinstance(other, (int, Rational)):
            return self._c == BivariatePolynomial.constant(other)._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def _coerce(self, other):
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, (int, Rational)):
            return BivariatePolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return BivariatePolynomial(c)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c: dict[tuple[int, int], int] = {}
        for (i1, j1), a in self._c.items():
            for (i2, j2), b in other._c.items():
                k = (i1 + i2, j1 + j2)
                c[k] = c.get(k, 0) + a * b
        return BivariatePolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = BivariatePolynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, x0, y0):
        """Exact value at ``(x0, y0)``.

        Arguments may be ints, Fractions, or anything closed under ``+``,
        ``*`` and integer powers, such as :class:`UnivariatePolynomial`.
        """
        total = 0
        xp: dict[int, object] = {}
        yp: dict[int, object] = {}
        for (i, j), c in self._c.items():
            if i not in xp:
                xp[i] = x0**i if i else 1
            if j not in yp:
                yp[j] = y0**j if j else 1
            total = total + c * xp[i] * yp[j]
        if isinstance(total, Fraction):
            return _normalize(total)
        return total

    __call__ = evaluate

    def at_y(self, y0) -> "UnivariatePolynomial":
        """Univariate polynomial in x obtained by fixing ``y = y0``."""
        c: dict[int, object] = {}
        for (i, j), a in self._c.items():
            c[i] = c.get(i, 0) + a * (y0**j if j else 1)
        return UnivariatePolynomial.from_dict(c, var="x")

    def at_x(self, x0) -> "UnivariatePolynomial":
        """Univariate polynomial in y obtained by fixing ``x = x0``."""
        c: dict[int, object] = {}
        for (i, j), a in self._c.items():
            c[j] = c.get(j, 0) + a * (x0**i if i else 1)
        return UnivariatePolynomial.from_dict(c, var="y")

    def has_nonnegative_coefficients(self) -> bool:
        return all(v > 0 for v in self._c.values())

    def sorted_terms(self):
        """Terms by total degree descending, then x-exponent descending."""
        return sorted(self._c.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))

    def __str__(self):
        terms = []
        for (i, j), c in self.sorted_terms():
            mono = "*".join(p for p in (_power("x", i), _power("y", j)) if p)
            terms.append((c, mono))
        return _render(terms)

    def __repr__(self):
        return f"BivariatePolynomial({str(self)!r})"

    def to_json(self) -> list[list[int]]:
        """``[[i, j, c], ...]`` in print order."""
        return [[i, j, int(c) if not isinstance(c, Fraction) else str(c)] for (i, j), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[Iterable]) -> "BivariatePolynomial":
        return cls({(int(i), int(j)): Fraction(c) for i, j, c in data})


class UnivariatePolynomial:
    """Dense univariate polynomial with exact coefficients, lowest degree first."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "q"):
        c = [_normalize(a) for a in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)
        self.var = var

    @classmethod
    def from_dict(cls, d: Mapping[int, object], var: str = "q") -> "UnivariatePolynomial":
        if not d:
            return cls((), var)
        c = [0] * (max(d) + 1)
        for k, v in d.items():
            c[k] += v
        return cls(c, var)

    @classmethod
    def gen(cls, var: str = "q") -> "UnivariatePolynomial":
        return cls((0, 1), var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _coerce(self, other):
        if isinstance(other, UnivariatePolynomial):
            return other
        if isinstance(other, (int, Rational)):
            return UnivariatePolynomial((other,), self.var)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UnivariatePolynomial(
            [self.coefficient(k) + o.coefficient(k) for k in range(n)], self.var
        )

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePolynomial([-a for a in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UnivariatePolynomial((), self.var)
        c = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    c[i + j] += a * b
        return UnivariatePolynomial(c, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = UnivariatePolynomial((1,), self.var)
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, value):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * value + a
        return _normalize(acc) if isinstance(acc, Fraction) else acc

    def __str__(self):
        terms = [(c, _power(self.var, k)) for k, c in reversed(list(enumerate(self.coeffs))) if c]
        return _render(terms)

    def __repr__(self):
        return f"UnivariatePolynomial({str(self)!r})"
