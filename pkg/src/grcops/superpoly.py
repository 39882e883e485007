"""Exact super polynomial arithmetic in one even and one odd variable.

The ring is Q[x] (x) Lambda(xi): terms x^a xi^e with e in {0, 1} and
xi^2 = 0, over exact rationals.  Three coordinate flavors share one
implementation and differ in variable names and whether the odd variable
is allowed at all:

* ``line``     -- (x,)       no odd variable
* ``super``    -- (x, xi)    general (1|1) coordinates
* ``contact``  -- (t, theta) contact coordinates

All values are immutable after construction and safe to share.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Rational = Fraction

LINE = "line"
SUPER = "super"
CONTACT = "contact"
FLAVORS = (LINE, SUPER, CONTACT)

EVEN = "even"
ODD = "odd"
MIXED = "mixed"

_VARS = {LINE: ("x", None), SUPER: ("x", "xi"), CONTACT: ("t", "theta")}


def rat(value: int | str | Fraction) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot coerce {value!r} to a rational")


def parse_rational(text: str) -> Fraction:
    """Parse the wire format "p/q" or "p"."""
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            q = Fraction(int(num), int(den))
        else:
            q = Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc
    return q


def format_rational(q: Fraction) -> str:
    """Wire format: "p/q", or "p" when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class SuperPoly:
    """A polynomial sum(c * x^a * xi^e) with exact rational coefficients.

    ``terms`` maps (even_exponent, odd_exponent) -> nonzero coefficient.
    Treat instances as immutable; all operations return new objects.
    """

    __slots__ = ("flavor", "terms")

    def __init__(self, flavor: str, terms: Mapping[tuple[int, int], Fraction] | None = None):
        if flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {flavor!r}")
        clean: dict[tuple[int, int], Fraction] = {}
        for (a, e), c in (terms or {}).items():
            c = rat(c)
            if c == 0:
                continue
            if a < 0 or e not in (0, 1):
                raise ValueError(f"bad exponent pair ({a}, {e})")
            if e == 1 and flavor == LINE:
                raise ValueError("line flavor has no odd variable")
            clean[(a, e)] = c
        object.__setattr__(self, "flavor", flavor)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):  # pragma: no cover
        raise AttributeError("SuperPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, flavor: str) -> "SuperPoly":
        return cls(flavor, {})

    @classmethod
    def const(cls, flavor: str, c) -> "SuperPoly":
        return cls(flavor, {(0, 0): rat(c)})

    @classmethod
    def one(cls, flavor: str) -> "SuperPoly":
        return cls.const(flavor, 1)

    @classmethod
    def var_even(cls, flavor: str) -> "SuperPoly":
        return cls(flavor, {(1, 0): Fraction(1)})

    @classmethod
    def var_odd(cls, flavor: str) -> "SuperPoly":
        return cls(flavor, {(0, 1): Fraction(1)})

    @classmethod
    def monomial(cls, flavor: str, a: int, e: int, c=1) -> "SuperPoly":
        return cls(flavor, {(a, e): rat(c)})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, a: int, e: int = 0) -> Fraction:
        return self.terms.get((a, e), Fraction(0))

    def parity(self) -> str:
        """even / odd / mixed, by the odd-variable exponent of the terms."""
        if not self.terms:
            return EVEN
        pars = {e for (_, e) in self.terms}
        if pars == {0}:
            return EVEN
        if pars == {1}:
            return ODD
        return MIXED

    def is_homogeneous(self) -> bool:
        return self.parity() != MIXED

    def even_part(self) -> "SuperPoly":
        return SuperPoly(self.flavor, {k: c for k, c in self.terms.items() if k[1] == 0})

    def odd_part(self) -> "SuperPoly":
        return SuperPoly(self.flavor, {k: c for k, c in self.terms.items() if k[1] == 1})

    def degree(self) -> int:
        """Total degree max(a + e); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(a + e for (a, e) in self.terms)

    def homogeneous_parts(self) -> Iterator[tuple[int, "SuperPoly"]]:
        """Yield (parity_bit, part) for the nonzero parity components."""
        for bit, part in ((0, self.even_part()), (1, self.odd_part())):
            if not part.is_zero():
                yield bit, part

    # -- arithmetic --------------------------------------------------------

    def _require_same(self, other: "SuperPoly") -> None:
        if self.flavor != other.flavor:
            raise ValueError(f"flavor mismatch: {self.flavor} vs {other.flavor}")

    def __add__(self, other: "SuperPoly") -> "SuperPoly":
        self._require_same(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, Fraction(0)) + c
            if s == 0:
                terms.pop(k, None)
            else:
                terms[k] = s
        return SuperPoly(self.flavor, terms)

    def __neg__(self) -> "SuperPoly":
        return SuperPoly(self.flavor, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "SuperPoly") -> "SuperPoly":
        return self + (-other)

    def scale(self, c) -> "SuperPoly":
        c = rat(c)
        if c == 0:
            return SuperPoly.zero(self.flavor)
        return SuperPoly(self.flavor, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "SuperPoly") -> "SuperPoly":
        """Supercommutative product; xi*xi = 0.

        With a single odd generator no sign ever appears for normally
        ordered monomials; the sign rule surfaces through derivations.
        """
        self._require_same(other)
        acc: dict[tuple[int, int], Fraction] = {}
        for (a1, e1), c1 in self.terms.items():
            for (a2, e2), c2 in other.terms.items():
                if e1 and e2:
                    continue
                k = (a1 + a2, e1 + e2)
                s = acc.get(k, Fraction(0)) + c1 * c2
                if s == 0:
                    acc.pop(k, None)
                else:
                    acc[k] = s
        return SuperPoly(self.flavor, acc)

    def __rmul__(self, c) -> "SuperPoly":
        return self.scale(c)

    def derive(self, var: str) -> "SuperPoly":
        """d/dx for ``var="even"``; the left odd derivative for ``var="odd"``.

        The left derivative satisfies d_xi(f g) = d_xi(f) g + (-1)^p(f) f d_xi(g).
        """
        acc: dict[tuple[int, int], Fraction] = {}
        if var == EVEN:
            for (a, e), c in self.terms.items():
                if a > 0:
                    acc[(a - 1, e)] = c * a
        elif var == ODD:
            for (a, e), c in self.terms.items():
                if e == 1:
                    acc[(a, 0)] = c
        else:
            raise ValueError(f"unknown variable tag {var!r}")
        return SuperPoly(self.flavor, acc)

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SuperPoly)
            and self.flavor == other.flavor
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.flavor, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[tuple[int, int], Fraction]]:
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ev, od = _VARS[self.flavor]
        parts = []
        for (a, e), c in self.sorted_terms():
            factors = [format_rational(c)]
            if a > 0:
                factors.append(f"{ev}^{a}" if a > 1 else ev)
            if e == 1:
                factors.append(od)
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SuperPoly({self.flavor!r}, {self.terms!r})"

    @classmethod
    def parse(cls, flavor: str, text: str) -> "SuperPoly":
        """Parse the text form emitted by ``str``: sums of "c*x^a*xi^e"."""
        ev, od = _VARS[flavor]
        text = text.replace("-", "+-").replace("++-", "+-")
        acc = cls.zero(flavor)
        for chunk in text.split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            coeff = Fraction(1)
            a = 0
            e = 0
            for factor in chunk.split("*"):
                factor = factor.strip()
                if not factor:
                    continue
                if factor == ev:
                    a += 1
                elif od is not None and factor == od:
                    e += 1
                elif factor.startswith(f"{ev}^"):
                    a += int(factor[len(ev) + 1:])
                elif od is not None and factor.startswith(f"{od}^"):
                    e += int(factor[len(od) + 1:])
                elif factor == "-":
                    coeff = -coeff
                else:
                    if factor.startswith("-") and factor[1:] in (ev, od):
                        coeff = -coeff
                        if factor[1:] == ev:
                            a += 1
                        else:
                            e += 1
                    else:
                        coeff *= parse_rational(factor)
            if e > 1:
                return cls.zero(flavor)
            acc = acc + cls.monomial(flavor, a, e, coeff)
        return acc


def monomials_upto(flavor: str, degree_bound: int) -> Iterator[SuperPoly]:
    """All monomials x^a xi^e with a <= degree_bound (coefficient 1)."""
    odd_range = (0,) if flavor == LINE else (0, 1)
    for e in odd_range:
        for a in range(degree_bound + 1):
            yield SuperPoly.monomial(flavor, a, e)
