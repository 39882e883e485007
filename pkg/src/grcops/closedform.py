"""Explicit operator families and case analysis for the three classifications.

Conventions
-----------
Operator tables take density-side weights (dx-exponent on the line, the mu
of alpha^(mu/2) on the contact string, the Berezinian exponent on the
superdomain).  Case-analysis functions take the weight parameters of the
dual induced modules; the map between the two is the calibrated weight
dictionary (negation on the line and contact string, -2w on the
superdomain).

All classification systems here are bidiagonal: n equations
alpha_i y_i + beta_i y_{i+1} = 0 for n+1 unknowns.  The null space has
dimension 2 exactly when some alpha_a = 0 and some beta_b = 0 with a <= b,
else 1.  The same-index subcases a = b carry the traditional labels
2a-2d; the strictly crossed case a < b is labelled 2x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .superpoly import Rational, rat
from .bidiff import OSP12, PGL2, PGL21, BiDiffOp, Key, nullspace

LINE_THEOREM = "line"
CONTACT_EVEN = "contact-even"
CONTACT_ODD = "contact-odd"
SUPERDOMAIN = "superdomain"

# density weight -> module parameter (verified by calibrate_weight_dictionary)
DICTIONARY_SCALE = {PGL2: Fraction(-1), OSP12: Fraction(-1), PGL21: Fraction(-2)}


@dataclass(frozen=True)
class CaseLabel:
    theorem: str
    case: str
    parameter_count: int

    def __str__(self) -> str:
        return f"{self.theorem}:{self.case}"


def binom_rat(mu, k: int) -> Fraction:
    """binom(mu, k) = mu (mu-1) ... (mu-k+1) / k! for rational mu."""
    if k < 0:
        return Fraction(0)
    mu = rat(mu)
    num = Fraction(1)
    for j in range(k):
        num *= mu - j
    return num / math.factorial(k)


# ---------------------------------------------------------------------------
# explicit operator families (density-side weights)
# ---------------------------------------------------------------------------


def rc_bracket(mu1, mu2, n: int) -> BiDiffOp:
    """The n-th Rankin-Cohen bracket as an operator on densities.

    In the density convention f (dx)^w the invariant coefficient family is
    the classical binomial pattern evaluated at the doubled weights; e.g.
    n = 3 at weights (-2/3, -2/3) is proportional to the Grozman operator.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    w1, w2 = rat(mu1), rat(mu2)
    M1, M2 = 2 * w1, 2 * w2
    coeffs: dict[Key, Fraction] = {}
    for r in range(n + 1):
        c = binom_rat(M1 + n - 1, n - r) * binom_rat(M2 + n - 1, r)
        if r % 2:
            c = -c
        coeffs[(r, 0, n - r, 0)] = c
    return BiDiffOp(PGL2, n, (w1, w2), 0, coeffs)


def grozman() -> BiDiffOp:
    """(f, g) -> 2 f g''' + 3 f' g'' - 3 f'' g' - 2 f''' g on weight -2/3."""
    w = Fraction(-2, 3)
    coeffs = {(0, 0, 3, 0): Fraction(2), (1, 0, 2, 0): Fraction(3),
              (2, 0, 1, 0): Fraction(-3), (3, 0, 0, 0): Fraction(-2)}
    return BiDiffOp(PGL2, 3, (w, w), 0, coeffs)


def order1_family(a, b) -> BiDiffOp:
    """a f'g + b fg' on weight-(0,0) densities; invariant under all of vect(1)."""
    a, b = rat(a), rat(b)
    if a == 0 and b == 0:
        raise ValueError("(a, b) must not be (0, 0)")
    coeffs = {(1, 0, 0, 0): a, (0, 0, 1, 0): b}
    return BiDiffOp(PGL2, 1, (Fraction(0), Fraction(0)), 0, coeffs)


def super_order1_family(a, b) -> BiDiffOp:
    """a D(f) g + b f D(g) on weight-(0,0) contact densities (odd operator).

    The second term applies the second-slot odd operator with the Koszul
    sign, i.e. realizes b (-1)^p(f) f D(g)."""
    a, b = rat(a), rat(b)
    if a == 0 and b == 0:
        raise ValueError("(a, b) must not be (0, 0)")
    coeffs = {(0, 1, 0, 0): a, (0, 0, 0, 1): b}
    return BiDiffOp(OSP12, 1, (Fraction(0), Fraction(0)), 1, coeffs)


def _cmz_half_integer(m1: Fraction, m2: Fraction, half_n: int) -> dict[Key, Fraction]:
    """Odd bracket of order 2*half_n + 1 (classical display, verified invariant)."""
    n = half_n
    coeffs: dict[Key, Fraction] = {}
    for a in range(n + 1):
        gamma = binom_rat(m1 + n, n - a) * binom_rat(m2 + n, a)
        if a % 2 == 0:
            gamma = -gamma
        coeffs[(a, 0, n - a, 1)] = gamma * (m1 + a)
        coeffs[(a, 1, n - a, 0)] = -gamma * (m2 + n - a)
    return coeffs


def _cmz_integer(m1: Fraction, m2: Fraction, n: int) -> dict[Key, Fraction]:
    """Even bracket of order 2n built from the exact coefficient chain.

    e_i = (-1)^(n-1-i) prod_{s=i}^{n-2} (m1+s+1) * prod_{s=0}^{i-1} (m2+n-1-s)
    with couplings C_i = (m1+i) e_i / (i!(n-i)!), C_n = -m2 e_{n-1}/n!,
    E_i = e_i / (i!(n-1-i)!).
    """
    e = []
    for i in range(n):
        v = Fraction(1)
        for s in range(i, n - 1):
            v *= m1 + s + 1
        for s in range(i):
            v *= m2 + n - 1 - s
        if (n - 1 - i) % 2:
            v = -v
        e.append(v)
    coeffs: dict[Key, Fraction] = {}
    for i in range(n):
        coeffs[(i, 1, n - 1 - i, 1)] = e[i] / (math.factorial(i) * math.factorial(n - 1 - i))
        coeffs[(i, 0, n - i, 0)] = (m1 + i) * e[i] / (math.factorial(i) * math.factorial(n - i))
    coeffs[(n, 0, 0, 0)] = -m2 * e[n - 1] / math.factorial(n)
    return coeffs


def cmz_bracket(mu1, mu2, k) -> BiDiffOp:
    """The order-2k invariant bracket on contact densities.

    k is a positive integer (even operator) or half-integer (odd operator);
    weights are the mu of alpha^(mu/2).  The half-integer family is the
    classical gamma-coefficient display; the integer family is built from
    the exact coefficient chain, which the classical display matches only
    up to a transcription of conventions (see cmz_bracket_paper).
    """
    k = rat(k)
    m1, m2 = rat(mu1), rat(mu2)
    two_k = 2 * k
    if two_k.denominator != 1 or k <= 0:
        raise ValueError("k must be a positive integer or half-integer")
    order = int(two_k)
    if order % 2 == 0:
        coeffs = _cmz_integer(m1, m2, order // 2)
        parity = 0
    else:
        coeffs = _cmz_half_integer(m1, m2, (order - 1) // 2)
        parity = 1
    return BiDiffOp(OSP12, order, (m1, m2), parity, coeffs)


def cmz_bracket_paper(mu1, mu2, k) -> BiDiffOp:
    """The even-k bracket exactly as classically displayed.

    gamma_{a,k} = (-1)^(a+1) binom(mu1+k, k-a) binom(mu2+k, a); the operator
    is sum gamma_{a,k-1} (-1)^p(f) D(f^(a)) D(g^(k-1-a))
    - sum gamma_{a,k} f^(a) g^(k-a).  Kept verbatim for diff reports; it
    fails invariance in the alpha^(mu/2) density convention.
    """
    k = rat(k)
    m1, m2 = rat(mu1), rat(mu2)
    if k.denominator != 1 or k <= 0:
        raise ValueError("the displayed form is for positive integer k")
    n = int(k)

    def gamma(a: int, kk: int) -> Fraction:
        g = binom_rat(m1 + kk, kk - a) * binom_rat(m2 + kk, a)
        return g if a % 2 else -g

    coeffs: dict[Key, Fraction] = {}
    for a in range(n):
        coeffs[(a, 1, n - 1 - a, 1)] = gamma(a, n - 1)
    for a in range(n + 1):
        coeffs[(a, 0, n - a, 0)] = coeffs.get((a, 0, n - a, 0), Fraction(0)) - gamma(a, n)
    return BiDiffOp(OSP12, 2 * n, (m1, m2), 0, coeffs)


# ---------------------------------------------------------------------------
# bidiagonal case machinery
# ---------------------------------------------------------------------------


def bidiagonal_nullbasis(alpha: Sequence[Fraction], beta: Sequence[Fraction]) -> list[list[Fraction]]:
    """Null basis of alpha_i y_i + beta_i y_{i+1} = 0, i = 0..n-1."""
    n = len(alpha)
    rows = []
    for i in range(n):
        row = [Fraction(0)] * (n + 1)
        row[i] = rat(alpha[i])
        row[i + 1] = rat(beta[i])
        rows.append(row)
    return nullspace(rows, n + 1)


def _zero_index(values: Sequence[Fraction]) -> int | None:
    for i, v in enumerate(values):
        if v == 0:
            return i
    return None


def bidiagonal_case(alpha: Sequence[Fraction], beta: Sequence[Fraction]) -> tuple[str, int]:
    """Case tag and null-space dimension of the bidiagonal system.

    Tags: "1" (no zero diagonal), "1a" (zero diagonal but rank still full),
    "2a" (n = 1 double zero), "2b"/"2c"/"2d" (matched zeros at the left end,
    right end, interior), "2x" (zeros at crossed indices a < b).
    """
    n = len(alpha)
    a = _zero_index(alpha)
    b = _zero_index(beta)
    if a is None:
        return "1", 1
    if b is None or b < a:
        return "1a", 1
    if a == b:
        if n == 1:
            return "2a", 2
        if a == 0:
            return "2b", 2
        if a == n - 1:
            return "2c", 2
        return "2d", 2
    return "2x", 2


# ---------------------------------------------------------------------------
# line classification (module-side parameters)
# ---------------------------------------------------------------------------


def line_system(mu1, mu2, n: int) -> tuple[list[Fraction], list[Fraction]]:
    """alpha_i = 2 mu2 - n + i + 1, beta_i = 2 mu1 - i over c_0..c_n."""
    m1, m2 = rat(mu1), rat(mu2)
    alpha = [2 * m2 - n + i + 1 for i in range(n)]
    beta = [2 * m1 - i for i in range(n)]
    return alpha, beta


def line_coeffs(mu1, mu2, n: int) -> tuple[CaseLabel, list[list[Fraction]]]:
    """Case label and chain-coefficient family (c_0..c_n) for order n.

    Inputs are module-side parameters (apply the weight dictionary first).
    In the degenerate cases the displayed product formulas reduce to
    constant chains (e.g. interior ratios equal to 1), matching the
    returned null basis.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    alpha, beta = line_system(mu1, mu2, n)
    case, _dim = bidiagonal_case(alpha, beta)
    basis = bidiagonal_nullbasis(alpha, beta)
    params = len(basis)
    return CaseLabel(LINE_THEOREM, case, params), basis


def line_resonant(mu1, mu2, n: int) -> bool:
    alpha, beta = line_system(mu1, mu2, n)
    _, dim = bidiagonal_case(alpha, beta)
    return dim == 2


def line_family_op(weights_density: tuple[Fraction, Fraction], n: int,
                   chain: Sequence[Fraction]) -> BiDiffOp:
    """Dualize a chain vector (c_0..c_n) to the operator with coefficients
    c_i/(i!(n-i)!) on f^(i) g^(n-i)."""
    coeffs: dict[Key, Fraction] = {}
    for i, c in enumerate(chain):
        if c != 0:
            coeffs[(i, 0, n - i, 0)] = rat(c) / (math.factorial(i) * math.factorial(n - i))
    return BiDiffOp(PGL2, n, weights_density, 0, coeffs)


# ---------------------------------------------------------------------------
# contact-string classification (module-side parameters)
# ---------------------------------------------------------------------------


def osp_even_system(mu1, mu2, n: int) -> tuple[list[Fraction], list[Fraction]]:
    """Corrected even-sector chain over e_0..e_{n-1}:
    (n-i-1 - mu2) e_i + (i+1 - mu1) e_{i+1} = 0, i = 0..n-2."""
    m1, m2 = rat(mu1), rat(mu2)
    alpha = [n - i - 1 - m2 for i in range(n - 1)]
    beta = [(i + 1) - m1 for i in range(n - 1)]
    return alpha, beta


def osp_even_coeffs(mu1, mu2, n: int) -> tuple[CaseLabel, list[list[Fraction]]]:
    """Even-sector case label and family over (e_0..e_{n-1}, c_0..c_n).

    c_i = ((mu1 - i)/2) e_i for i <= n-1 and c_n = (-mu2/2) e_{n-1}.
    Resonances sit at integer mu1, mu2 in [1, n-1] with mu1 + mu2 >= n
    (the classical published case list places them elsewhere; see
    osp_even_paper_claim and the diff reports).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m1, m2 = rat(mu1), rat(mu2)
    alpha, beta = osp_even_system(m1, m2, n)
    case, _dim = bidiagonal_case(alpha, beta)
    e_basis = bidiagonal_nullbasis(alpha, beta) if n >= 2 else [[Fraction(1)]]
    family = []
    for e in e_basis:
        c = [((m1 - i) / 2) * e[i] for i in range(n)] + [(-m2 / 2) * e[n - 1]]
        family.append(list(e) + c)
    return CaseLabel(CONTACT_EVEN, case, len(family)), family


def osp_even_resonant(mu1, mu2, n: int) -> bool:
    """True resonance predicate for order 2n (module-side parameters)."""
    m1, m2 = rat(mu1), rat(mu2)
    if m1.denominator != 1 or m2.denominator != 1:
        return False
    a, b = int(m1), int(m2)
    return 1 <= a <= n - 1 and 1 <= b <= n - 1 and a + b >= n


def osp_even_paper_claim(mu1, mu2, n: int) -> str | None:
    """Which published even-sector degenerate case fires, if any.

    The published system reads (3(n+i+1) - mu2) e_i + ((i+1) - mu1) e_{i+1} = 0
    over e_0..e_n; its degenerate loci are mu1 = j+1, mu2 = 3(n+j+1) for
    j = 0..n-1.  Kept for diff reports only.
    """
    m1, m2 = rat(mu1), rat(mu2)
    for j in range(n):
        if m1 == j + 1 and m2 == 3 * (n + j + 1):
            if n == 1:
                return "2(a)"
            if j == 0:
                return "2(b)"
            if j == n - 1:
                return "2(c)"
            return "2(d)"
    return None


def osp_odd_system(mu1, mu2, n: int) -> tuple[list[Fraction], list[Fraction]]:
    """Extended odd-sector chain over (b_0..b_n, a_n) for order 2n+1.

    Eliminating a_0..a_{n-1} leaves the bidiagonal system with diagonal
    ((n-i)(mu2-n+i) for i < n, then mu2) and superdiagonal
    ((i+1)(mu1-i) for i < n, then mu1-n).
    """
    m1, m2 = rat(mu1), rat(mu2)
    alpha = [(n - i) * (m2 - n + i) for i in range(n)] + [m2]
    beta = [(i + 1) * (m1 - i) for i in range(n)] + [m1 - n]
    return alpha, beta


def osp_odd_coeffs(mu1, mu2, n: int) -> tuple[CaseLabel, list[list[Fraction]]]:
    """Odd-sector case label and family over (a_0..a_n, b_0..b_n).

    The returned vectors list a_0..a_n then b_0..b_n, with
    a_i = (i+1) b_{i+1} / (n-i) for i <= n-1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    m1, m2 = rat(mu1), rat(mu2)
    alpha, beta = osp_odd_system(m1, m2, n)
    case, _dim = bidiagonal_case(alpha, beta)
    family = []
    for vec in bidiagonal_nullbasis(alpha, beta):
        b = vec[: n + 1]
        a_n = vec[n + 1]
        a = [Fraction(i + 1, n - i) * b[i + 1] for i in range(n)] + [a_n]
        family.append(a + b)
    return CaseLabel(CONTACT_ODD, case, len(family)), family


def osp_odd_resonant(mu1, mu2, n: int) -> bool:
    """True resonance predicate for order 2n+1 (module-side parameters)."""
    m1, m2 = rat(mu1), rat(mu2)
    if m1.denominator != 1 or m2.denominator != 1:
        return False
    a, b = int(m1), int(m2)
    return 0 <= a <= n and 0 <= b <= n and a + b >= n


def osp_odd_paper_case(mu1, mu2, n: int) -> str | None:
    """Which published odd-sector case fires (for diff reports)."""
    m1, m2 = rat(mu1), rat(mu2)
    k = None
    if m2.denominator == 1 and 0 <= n - int(m2) <= n - 1:
        k = n - int(m2)
    if k is None:
        return "odd-Case1" if m1 == n else None
    if m1.denominator == 1 and 0 <= int(m1) <= k - 1:
        return "odd-Case3"
    return "odd-Case2"


def osp_resonant_order(mu1, mu2, order: int) -> bool:
    if order % 2 == 0:
        return osp_even_resonant(mu1, mu2, order // 2)
    return osp_odd_resonant(mu1, mu2, (order - 1) // 2)


def osp_family_op(weights_density: tuple[Fraction, Fraction], order: int,
                  vec: Sequence[Fraction]) -> BiDiffOp:
    """Dualize a module-side family vector to an operator table.

    Even order 2n: vec = (e_0..e_{n-1}, c_0..c_n) with keys
    E_i = e_i/(i!(n-1-i)!) and C_i = -2 c_i/(i!(n-i)!).
    Odd order 2n+1: vec = (a_0..a_n, b_0..b_n) with keys a_i, b_i as-is.
    """
    coeffs: dict[Key, Fraction] = {}
    if order % 2 == 0:
        n = order // 2
        e = vec[:n]
        c = vec[n:]
        for i in range(n):
            coeffs[(i, 1, n - 1 - i, 1)] = rat(e[i]) / (
                math.factorial(i) * math.factorial(n - 1 - i))
        for i in range(n + 1):
            coeffs[(i, 0, n - i, 0)] = -2 * rat(c[i]) / (
                math.factorial(i) * math.factorial(n - i))
        parity = 0
    else:
        n = (order - 1) // 2
        a = vec[: n + 1]
        b = vec[n + 1:]
        for i in range(n + 1):
            coeffs[(i, 1, n - i, 0)] = rat(a[i])
            coeffs[(i, 0, n - i, 1)] = rat(b[i])
        parity = 1
    coeffs = {k: v for k, v in coeffs.items() if v != 0}
    return BiDiffOp(OSP12, order, weights_density, parity, coeffs)


# ---------------------------------------------------------------------------
# superdomain classification (module-side parameters)
# ---------------------------------------------------------------------------


def pgl21_even_locus(mu1, mu2, n: int) -> int | None:
    """The k with mu1 = 2k, mu2 = 2n - 4 - 2k, if the even sector is
    nonempty (mu1, mu2 non-negative even, mu1 + mu2 = 2n - 4)."""
    m1, m2 = rat(mu1), rat(mu2)
    if m1.denominator != 1 or m2.denominator != 1:
        return None
    a, b = int(m1), int(m2)
    if a < 0 or b < 0 or a % 2 or b % 2 or a + b != 2 * n - 4:
        return None
    k = a // 2
    return k if 0 <= k <= n - 2 else None


def pgl21_odd_system(mu1, mu2, n: int) -> tuple[list[Fraction], list[Fraction]]:
    """alpha_i = (n-i)(mu2 - 2(n-i-1)), beta_i = (i+1)(mu1 - 2i) over b_0..b_n."""
    m1, m2 = rat(mu1), rat(mu2)
    alpha = [(n - i) * (m2 - 2 * (n - i - 1)) for i in range(n)]
    beta = [(i + 1) * (m1 - 2 * i) for i in range(n)]
    return alpha, beta


def thmain_dims(mu1, mu2, n: int) -> tuple[int, int]:
    """(even, odd) dimensions of the order-n superdomain classification."""
    m1, m2 = rat(mu1), rat(mu2)
    de = 1 if pgl21_even_locus(m1, m2, n) is not None else 0
    if n == 0:
        return (1, 0)
    is_even_int = (
        m1.denominator == 1 and m2.denominator == 1
        and int(m1) % 2 == 0 and int(m2) % 2 == 0
    )
    if (is_even_int and 0 <= m1 <= 2 * n - 2 and 0 <= m2 <= 2 * n - 2
            and m1 + m2 >= 2 * n - 2):
        do = 2
    else:
        do = 1
    return de, do


def pgl21_case(mu1, mu2, n: int) -> str:
    de, do = thmain_dims(mu1, mu2, n)
    if de == 1 and do == 1:
        return "(i)"
    if do == 2:
        return "(ii)"
    return "(iii)"


def pgl21_coeffs(mu1, mu2, n: int) -> tuple[CaseLabel, list[list[Fraction]] | None,
                                            list[list[Fraction]]]:
    """(case, even family, odd family) for the order-n superdomain problem.

    The even family lists the single delta'delta''-sector vector
    (D_0..D_{n-2}) when the locus condition holds; the odd family lists
    vectors (b_0..b_n) for the delta-sector chain.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m1, m2 = rat(mu1), rat(mu2)
    case = pgl21_case(m1, m2, n)
    k = pgl21_even_locus(m1, m2, n)
    even_family = None
    if k is not None:
        vec = [Fraction(0)] * (n - 1)
        vec[k] = Fraction(1)
        even_family = [vec]
    alpha, beta = pgl21_odd_system(m1, m2, n)
    odd_family = bidiagonal_nullbasis(alpha, beta)
    params = (1 if even_family else 0) + len(odd_family)
    return CaseLabel(SUPERDOMAIN, case, params), even_family, odd_family


def pgl21_family_ops(weights_density: tuple[Fraction, Fraction], n: int,
                     even_family, odd_family) -> list[BiDiffOp]:
    """Dualize superdomain family vectors to operator tables.

    An even vector (D_0..D_{n-2}) gives keys (k, 1, n-k-2, 1).  An odd
    chain vector (b_0..b_n) expands over the graded kernel basis
    w_k = k (d1^{k-1} delta1 d2^{n-k}) + (n-k)(d1^k d2^{n-k-1} delta2).
    """
    ops = []
    for vec in even_family or []:
        coeffs = {(k, 1, n - k - 2, 1): rat(c) for k, c in enumerate(vec) if c != 0}
        ops.append(BiDiffOp(PGL21, n, weights_density, 0, coeffs))
    for vec in odd_family or []:
        coeffs: dict[Key, Fraction] = {}
        for k, c in enumerate(vec):
            c = rat(c)
            if c == 0:
                continue
            if k >= 1:
                key = (k - 1, 1, n - k, 0)
                coeffs[key] = coeffs.get(key, Fraction(0)) + k * c
            if k <= n - 1:
                key = (k, 0, n - k - 1, 1)
                coeffs[key] = coeffs.get(key, Fraction(0)) + (n - k) * c
        coeffs = {k: v for k, v in coeffs.items() if v != 0}
        ops.append(BiDiffOp(PGL21, n, weights_density, 1, coeffs))
    return ops


# ---------------------------------------------------------------------------
# case labels for oracle results (density-side weights in, label out)
# ---------------------------------------------------------------------------


def to_module_params(algebra: str, weights: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    s = DICTIONARY_SCALE[algebra]
    return (s * rat(weights[0]), s * rat(weights[1]))


def classify_case(algebra: str, order: int, weights: tuple[Fraction, Fraction],
                  dim_even: int, dim_odd: int) -> str:
    if order == 0:
        return "order-0"
    m1, m2 = to_module_params(algebra, weights)
    if algebra == PGL2:
        label, _ = line_coeffs(m1, m2, order)
        return label.case
    if algebra == OSP12:
        if order % 2 == 0:
            label, _ = osp_even_coeffs(m1, m2, order // 2)
        else:
            label, _ = osp_odd_coeffs(m1, m2, (order - 1) // 2)
        return label.case
    if algebra == PGL21:
        return pgl21_case(m1, m2, order)
    raise ValueError(algebra)


def resonant(algebra: str, order: int, mu1, mu2) -> bool:
    """Module-side resonance predicate (null space dimension exceeds the
    generic value) for the given order."""
    if order == 0:
        return False
    if algebra == PGL2:
        return line_resonant(mu1, mu2, order)
    if algebra == OSP12:
        return osp_resonant_order(mu1, mu2, order)
    if algebra == PGL21:
        de, do = thmain_dims(mu1, mu2, order)
        return de + do > 1
    raise ValueError(algebra)
