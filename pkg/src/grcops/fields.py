"""Vector fields, contact fields and Lie derivatives on weighted densities.

Covers the three geometric settings used by the classification machinery:

* the line with densities f(x) (dx)^w                       (``line-dx``)
* the (1|1) superstring with contact form alpha = dt + theta dtheta and
  densities F alpha^(mu/2)                                  (``contact-alpha``)
* the (1|1) superdomain with Berezinian densities f vol^a   (``super-vol``)

The contact-density action uses the rescaling L_{K_f}(alpha) = 2 dt(f) alpha,
so L_{K_f} on F alpha^(mu/2) acts on coefficients as K_f + mu * d_t(f).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .superpoly import (
    CONTACT,
    EVEN,
    LINE,
    MIXED,
    ODD,
    SUPER,
    Rational,
    SuperPoly,
    rat,
)

LINE_DX = "line-dx"
CONTACT_ALPHA = "contact-alpha"
SUPER_VOL = "super-vol"
CONVENTIONS = (LINE_DX, CONTACT_ALPHA, SUPER_VOL)

_CONVENTION_FLAVOR = {LINE_DX: LINE, CONTACT_ALPHA: CONTACT, SUPER_VOL: SUPER}


class VectorField:
    """First-order operator P*d_even + Q*d_odd of homogeneous parity.

    An even field has even P and odd Q; an odd field the reverse.
    ``contact_gen`` records the generating function when the field was
    produced by :func:`contact_field`.
    """

    __slots__ = ("flavor", "even_part", "odd_part", "parity", "contact_gen", "name")

    def __init__(
        self,
        even_part: SuperPoly,
        odd_part: SuperPoly,
        parity: int | None = None,
        contact_gen: SuperPoly | None = None,
        name: str = "",
    ):
        if even_part.flavor != odd_part.flavor:
            raise ValueError("component flavor mismatch")
        flavor = even_part.flavor
        if parity is None:
            parity = _infer_parity(even_part, odd_part)
        _check_homogeneous(even_part, odd_part, parity)
        object.__setattr__(self, "flavor", flavor)
        object.__setattr__(self, "even_part", even_part)
        object.__setattr__(self, "odd_part", odd_part)
        object.__setattr__(self, "parity", parity)
        object.__setattr__(self, "contact_gen", contact_gen)
        object.__setattr__(self, "name", name)

    def __setattr__(self, *_):  # pragma: no cover
        raise AttributeError("VectorField is immutable")

    def __call__(self, f: SuperPoly) -> SuperPoly:
        if f.flavor != self.flavor:
            raise ValueError("flavor mismatch")
        return self.even_part * f.derive(EVEN) + self.odd_part * f.derive(ODD)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VectorField)
            and self.even_part == other.even_part
            and self.odd_part == other.odd_part
        )

    def __hash__(self):
        return hash((self.even_part, self.odd_part))

    def __repr__(self) -> str:
        if self.name:
            return f"<field {self.name}>"
        return f"<field ({self.even_part})*d + ({self.odd_part})*delta>"


def _infer_parity(even_part: SuperPoly, odd_part: SuperPoly) -> int:
    for poly, shift in ((even_part, 0), (odd_part, 1)):
        p = poly.parity()
        if p == EVEN and not poly.is_zero():
            return (0 + shift) % 2
        if p == ODD:
            return (1 + shift) % 2
    return 0


def _check_homogeneous(even_part: SuperPoly, odd_part: SuperPoly, parity: int) -> None:
    want_even = EVEN if parity == 0 else ODD
    want_odd = ODD if parity == 0 else EVEN
    if not even_part.is_zero() and even_part.parity() != want_even:
        raise ValueError("inhomogeneous vector field (coefficient of d)")
    if not odd_part.is_zero() and odd_part.parity() != want_odd:
        raise ValueError("inhomogeneous vector field (coefficient of delta)")


@dataclass(frozen=True)
class WeightedDensity:
    """coeff * vol^weight, where vol is fixed by ``convention``."""

    coeff: SuperPoly
    weight: Fraction
    convention: str

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        if self.coeff.flavor != _CONVENTION_FLAVOR[self.convention]:
            raise ValueError("coefficient flavor does not match the convention")
        object.__setattr__(self, "weight", rat(self.weight))

    def __add__(self, other: "WeightedDensity") -> "WeightedDensity":
        if (self.weight, self.convention) != (other.weight, other.convention):
            raise ValueError("cannot add densities of different weight")
        return WeightedDensity(self.coeff + other.coeff, self.weight, self.convention)

    def scale(self, c) -> "WeightedDensity":
        return WeightedDensity(self.coeff.scale(c), self.weight, self.convention)

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def __str__(self) -> str:
        vol = {LINE_DX: "dx", CONTACT_ALPHA: "alpha^(w/2)", SUPER_VOL: "vol"}[self.convention]
        return f"({self.coeff}) * {vol}^({self.weight})"


def density(coeff: SuperPoly, weight, convention: str) -> WeightedDensity:
    return WeightedDensity(coeff, rat(weight), convention)


# ---------------------------------------------------------------------------
# divergence and Lie derivatives
# ---------------------------------------------------------------------------


def divergence(X: VectorField) -> SuperPoly:
    """Div(P d + Q delta) = dP/dx + (-1)^p(Q) dQ/dxi.

    The sign makes vol transform as the Berezinian: Div(xi delta) = -1.
    """
    if X.flavor == CONTACT:
        raise ValueError("divergence is defined for the line and super flavors")
    div = X.even_part.derive(EVEN)
    q = X.odd_part
    if not q.is_zero():
        sign = -1 if q.parity() == ODD else 1
        div = div + q.derive(ODD).scale(sign)
    return div


def lie_derivative(X: VectorField, d: WeightedDensity) -> WeightedDensity:
    """L_X (f vol^w) = (X(f) + w * s_X * f) vol^w.

    The scaling term s_X is Div(X) for the line and Berezinian conventions,
    and the alpha-rescaling coefficient 2 d_t(f_gen) -- folded with the
    exponent convention mu/2 into mu * d_t(f_gen) -- for contact densities.
    The scalar multiplies the coefficient from the left.
    """
    if X.flavor != d.coeff.flavor:
        raise ValueError("flavor mismatch between field and density")
    if d.convention == CONTACT_ALPHA:
        if X.contact_gen is None:
            raise ValueError("contact-alpha densities require a contact field")
        scaling = X.contact_gen.derive(EVEN)  # d_t of the generating function
        new_coeff = X(d.coeff) + (scaling * d.coeff).scale(d.weight)
    else:
        new_coeff = X(d.coeff) + (divergence(X) * d.coeff).scale(d.weight)
    return WeightedDensity(new_coeff, d.weight, d.convention)


# ---------------------------------------------------------------------------
# contact structure on the (1|1) superstring
# ---------------------------------------------------------------------------


def two_minus_theta_dtheta(f: SuperPoly) -> SuperPoly:
    theta = SuperPoly.var_odd(CONTACT)
    return f.scale(2) - theta * f.derive(ODD)


def d_theta(f: SuperPoly) -> SuperPoly:
    """D = d_theta - theta d_t; parity-reversing square root of d_t."""
    if f.flavor != CONTACT:
        raise ValueError("d_theta needs contact flavor")
    theta = SuperPoly.var_odd(CONTACT)
    return f.derive(ODD) - theta * f.derive(EVEN)


def contact_field(f: SuperPoly) -> VectorField:
    """K_f = (2 - theta d_theta)(f) d_t - (-1)^p(f) D(f) d_theta."""
    if f.flavor != CONTACT:
        raise ValueError("contact fields need contact flavor")
    p = f.parity()
    if p == MIXED:
        raise ValueError("generating function must have homogeneous parity")
    sign = -1 if p == EVEN else 1
    even_part = two_minus_theta_dtheta(f)
    odd_part = d_theta(f).scale(sign)
    return VectorField(even_part, odd_part, parity=0 if p == EVEN else 1, contact_gen=f)


def contact_bracket(f: SuperPoly, g: SuperPoly) -> SuperPoly:
    """{f,g} = (2-theta d_theta)(f) d_t(g) - d_t(f)(2-theta d_theta)(g)
    - (-1)^p(f) d_theta(f) d_theta(g)."""
    if f.flavor != CONTACT or g.flavor != CONTACT:
        raise ValueError("contact bracket needs contact flavor")
    if f.parity() == MIXED or g.parity() == MIXED:
        raise ValueError("contact bracket needs homogeneous parities")
    sign = -1 if f.parity() == EVEN else 1
    return (
        two_minus_theta_dtheta(f) * g.derive(EVEN)
        - f.derive(EVEN) * two_minus_theta_dtheta(g)
        + (f.derive(ODD) * g.derive(ODD)).scale(sign)
    )


def bracket(X: VectorField, Y: VectorField) -> VectorField:
    """Super commutator [X, Y] = X Y - (-1)^{p(X)p(Y)} Y X as a field."""
    if X.flavor != Y.flavor:
        raise ValueError("flavor mismatch")
    sign = -1 if (X.parity and Y.parity) else 1
    even_part = X(Y.even_part) - Y(X.even_part).scale(sign)
    odd_part = X(Y.odd_part) - Y(X.odd_part).scale(sign)
    return VectorField(even_part, odd_part, parity=(X.parity + Y.parity) % 2)


# ---------------------------------------------------------------------------
# generator sets
# ---------------------------------------------------------------------------


def pgl2_generators() -> list[VectorField]:
    """d, x d, x^2 d: the projective algebra on the line."""
    zero = SuperPoly.zero(LINE)
    x = SuperPoly.var_even(LINE)
    return [
        VectorField(SuperPoly.one(LINE), zero, name="d"),
        VectorField(x, zero, name="x*d"),
        VectorField(x * x, zero, name="x^2*d"),
    ]


def osp12_generators() -> list[VectorField]:
    """K_f for f in {1, theta, t, t*theta, t^2}: the osp(1|2) contact fields."""
    t = SuperPoly.var_even(CONTACT)
    th = SuperPoly.var_odd(CONTACT)
    gens = []
    for f, nm in ((SuperPoly.one(CONTACT), "K_1"), (th, "K_theta"), (t, "K_t"),
                  (t * th, "K_t*theta"), (t * t, "K_t^2")):
        K = contact_field(f)
        gens.append(VectorField(K.even_part, K.odd_part, K.parity, K.contact_gen, nm))
    return gens


def k11_generators(max_degree: int) -> list[VectorField]:
    """Contact fields K_{t^a theta^e} for all 2a+e <= max_degree."""
    t = SuperPoly.var_even(CONTACT)
    th = SuperPoly.var_odd(CONTACT)
    gens = []
    for a in range(max_degree + 1):
        for e in (0, 1):
            if 2 * a + e > max_degree:
                continue
            f = SuperPoly.monomial(CONTACT, a, e)
            K = contact_field(f)
            gens.append(VectorField(K.even_part, K.odd_part, K.parity, K.contact_gen,
                                    f"K_t^{a}theta^{e}"))
    return gens


def pgl21_field_generators() -> dict[str, VectorField]:
    """The (4|4)-dimensional projective subalgebra of vect(1|1).

    Basis: d, delta; X- = xi d, H1 = x d, H2 = xi delta, X+ = x delta;
    s_x = x E, s_xi = xi E with E = x d + xi delta.
    """
    zero = SuperPoly.zero(SUPER)
    one = SuperPoly.one(SUPER)
    x = SuperPoly.var_even(SUPER)
    xi = SuperPoly.var_odd(SUPER)
    return {
        "d": VectorField(one, zero, name="d"),
        "delta": VectorField(zero, one, name="delta"),
        "X-": VectorField(xi, zero, name="X-"),
        "H1": VectorField(x, zero, name="H1"),
        "H2": VectorField(zero, xi, name="H2"),
        "X+": VectorField(zero, x, name="X+"),
        "s_x": VectorField(x * x, x * xi, name="s_x"),
        "s_xi": VectorField(x * xi, zero, name="s_xi"),
    }
