"""Exact arithmetic over Q(gamma), where gamma is the positive root of
L*g + S*g**2 == 1 for integer parameters L, S >= 1.

Numbers are stored as p + q*gamma with rational coefficients.  When the
discriminant L**2 + 4*S happens to be a perfect square, gamma itself is
rational and every value is normalised to q == 0 at construction, so
arithmetic and comparisons stay exact in both cases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering

_ZERO = Fraction(0)
_ONE = Fraction(1)

# Bits carried by the rational shadow of an irrational gamma.  The shadow
# error is below 2**-(_SHADOW_BITS + 1), which keeps float conversions
# correctly rounded for every coefficient size met in practice.
_SHADOW_BITS = 256


def squarefree_split(n: int) -> tuple[int, int]:
    """Factor n >= 1 as m*m*d with d squarefree; return (m, d)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    m = 1
    d = 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            m *= f ** (e // 2)
            if e % 2:
                d *= f
        f += 1 if f == 2 else 2
    if n > 1:
        d *= n
    return m, d


@dataclass(frozen=True)
class LSParams:
    """Parameters of a two-length splitting rule (L long, S short pieces).

    Instances are built through :func:`make_params`, which validates the
    inputs and fills in the derived constants.
    """

    L: int
    S: int
    base: int                       # L + S, digit base for index expansions
    disc: int                       # L*L + 4*S
    sqrt_mult: int                  # disc == sqrt_mult**2 * sqrt_free
    sqrt_free: int                  # squarefree part of disc
    gamma_exact: Fraction | None    # gamma itself when rational, else None
    gamma_near: Fraction            # approximation with error < 2**-257
    gamma_float: float              # gamma correctly rounded to binary64

    @property
    def rational(self) -> bool:
        return self.gamma_exact is not None

    def number(self, p=0, q=0) -> QuadNum:
        return QuadNum(p, q, self)

    def zero(self) -> QuadNum:
        return QuadNum(0, 0, self)

    def one(self) -> QuadNum:
        return QuadNum(1, 0, self)

    def gamma(self) -> QuadNum:
        return QuadNum(0, 1, self)

    def __repr__(self) -> str:
        return f"LSParams(L={self.L}, S={self.S})"


def make_params(L: int, S: int) -> LSParams:
    """Validate (L, S) and precompute the constants the other modules need.

    Raises ValueError unless both arguments are integers >= 1.
    """
    if not isinstance(L, int) or not isinstance(S, int):
        raise ValueError(f"L and S must be integers, got {L!r}, {S!r}")
    if L < 1 or S < 1:
        raise ValueError(f"need L >= 1 and S >= 1, got L={L}, S={S}")
    disc = L * L + 4 * S
    mult, free = squarefree_split(disc)
    if free == 1:
        # Perfect-square discriminant: gamma = (sqrt(disc) - L) / (2S) is
        # rational and the shadow is exact.
        gamma_exact: Fraction | None = Fraction(mult - L, 2 * S)
        gamma_near = gamma_exact
    else:
        gamma_exact = None
        root = math.isqrt(disc << (2 * _SHADOW_BITS))
        gamma_near = Fraction(root - (L << _SHADOW_BITS),
                              (2 * S) << _SHADOW_BITS)
    gamma_float = float(gamma_near)
    if not 0.0 < gamma_float < 1.0:
        raise AssertionError(f"splitting ratio out of range for {(L, S)}")
    return LSParams(L, S, L + S, disc, mult, free,
                    gamma_exact, gamma_near, gamma_float)


@total_ordering
class QuadNum:
    """p + q*gamma with exact rational coefficients.

    Supports +, -, *, ** with other QuadNum over the same parameters and
    with int/Fraction scalars.  Comparisons are exact: the sign of a value
    is decided by rationalising the square root, never through floats.
    """

    __slots__ = ("p", "q", "params")

    def __init__(self, p, q, params: LSParams) -> None:
        p = Fraction(p)
        q = Fraction(q)
        if q and params.gamma_exact is not None:
            p += q * params.gamma_exact
            q = _ZERO
        self.p = p
        self.q = q
        self.params = params

    @classmethod
    def _make(cls, p: Fraction, q: Fraction, params: LSParams) -> QuadNum:
        # Internal fast path: assumes already-normalised coefficients.
        x = object.__new__(cls)
        x.p = p
        x.q = q
        x.params = params
        return x

    def _lift(self, other):
        if isinstance(other, QuadNum):
            sp = self.params
            op = other.params
            if sp is not op and sp != op:
                raise ValueError("operands belong to different parameter sets")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNum._make(Fraction(other), _ZERO, self.params)
        return None

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadNum._make(self.p + o.p, self.q + o.q, self.params)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadNum._make(self.p - o.p, self.q - o.q, self.params)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadNum._make(o.p - self.p, o.q - self.q, self.params)

    def __neg__(self):
        return QuadNum._make(-self.p, -self.q, self.params)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        c = self.q * o.q
        if c:
            # gamma**2 == (1 - L*gamma) / S
            pr = self.params
            p = self.p * o.p + c / pr.S
            q = self.p * o.q + self.q * o.p - c * pr.L / pr.S
        else:
            p = self.p * o.p
            q = self.p * o.q + self.q * o.p
        return QuadNum._make(p, q, self.params)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = QuadNum._make(_ONE, _ZERO, self.params)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    # -- exact sign and order ---------------------------------------------

    def sign(self) -> int:
        """Exact sign of the value: -1, 0 or +1."""
        p, q = self.p, self.q
        if not q:
            return -1 if p < 0 else (1 if p > 0 else 0)
        sq = 1 if q > 0 else -1
        if not p:
            return sq
        sp = 1 if p > 0 else -1
        if sp == sq:
            return sp
        # Opposite coefficient signs.  Write the value over a common
        # denominator: 2*S*(p + q*gamma) == A + q*sqrt(disc) with
        # A = 2*S*p - L*q, then compare A**2 against q**2 * disc.
        pr = self.params
        a = 2 * pr.S * p - pr.L * q
        lhs = a * a
        rhs = q * q * pr.disc
        if lhs == rhs:
            return 0
        return sp if lhs > rhs else -sp

    def __eq__(self, other):
        if isinstance(other, QuadNum):
            sp = self.params
            op = other.params
            return (sp is op or sp == op) and self.p == other.p and self.q == other.q
        if isinstance(other, (int, Fraction)):
            return not self.q and self.p == other
        return NotImplemented

    def __hash__(self):
        if not self.q:
            # Rational values hash like their Fraction so x == y implies
            # hash(x) == hash(y) across types.
            return hash(self.p)
        return hash((self.p, self.q, self.params.L, self.params.S))

    def __lt__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- conversions --------------------------------------------------------

    def __float__(self) -> float:
        if not self.q:
            return float(self.p)
        return float(self.p + self.q * self.params.gamma_near)

    def to_sqrt_form(self) -> SqrtNum:
        """Rewrite p + q*gamma as a + b*sqrt(d) with d squarefree."""
        pr = self.params
        half = Fraction(1, 2 * pr.S)
        a = self.p - self.q * pr.L * half
        b = self.q * pr.sqrt_mult * half
        return SqrtNum(a, b, pr.sqrt_free)

    def __repr__(self) -> str:
        return (f"QuadNum({self.p} + {self.q}*g; "
                f"L={self.params.L}, S={self.params.S})")


def to_sqrt_form(x: QuadNum) -> SqrtNum:
    return x.to_sqrt_form()


@lru_cache(maxsize=None)
def _gamma_power(params: LSParams, k: int) -> QuadNum:
    if k == 0:
        return params.one()
    return _gamma_power(params, k - 1) * params.gamma()


def gamma_power(params: LSParams, k: int) -> QuadNum:
    """gamma**k as an exact QuadNum, cached per parameter set (k >= 0)."""
    if k < 0:
        raise ValueError("negative exponent")
    return _gamma_power(params, k)


def _as_sqrt(x) -> "SqrtNum | None":
    if isinstance(x, SqrtNum):
        return x
    if isinstance(x, (int, Fraction)):
        return SqrtNum(Fraction(x), _ZERO, 1)
    return None


@dataclass(frozen=True)
class SqrtNum:
    """a + b*sqrt(d) with rational a, b and squarefree integer d >= 1.

    The constructor canonicalises: square factors of d migrate into b, and
    values with b == 0 are stored with d == 1.  Equality is therefore plain
    field equality, valid even across numbers built from different
    parameter sets.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        a = Fraction(self.a)
        b = Fraction(self.b)
        d = self.d
        if not isinstance(d, int) or d < 1:
            raise ValueError(f"d must be an integer >= 1, got {d!r}")
        mult, free = squarefree_split(d)
        if mult != 1:
            b *= mult
            d = free
        if d == 1:
            a += b
            b = _ZERO
        elif not b:
            d = 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def _compatible(self, o: SqrtNum) -> int:
        # Common radicand for a binary operation, or raise.
        if self.d == o.d:
            return self.d
        if self.d == 1:
            return o.d
        if o.d == 1:
            return self.d
        raise ValueError(f"incompatible radicands {self.d} and {o.d}")

    def __add__(self, other):
        o = _as_sqrt(other)
        if o is None:
            return NotImplemented
        d = self._compatible(o)
        return SqrtNum(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_sqrt(other)
        if o is None:
            return NotImplemented
        d = self._compatible(o)
        return SqrtNum(self.a - o.a, self.b - o.b, d)

    def __rsub__(self, other):
        o = _as_sqrt(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return SqrtNum(-self.a, -self.b, self.d)

    def __mul__(self, other):
        o = _as_sqrt(other)
        if o is None:
            return NotImplemented
        d = self._compatible(o)
        return SqrtNum(self.a * o.a + self.b * o.b * d,
                       self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = SqrtNum(_ONE, _ZERO, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __float__(self) -> float:
        if not self.b:
            return float(self.a)
        root = Fraction(math.isqrt(self.d << (2 * _SHADOW_BITS)),
                        1 << _SHADOW_BITS)
        return float(self.a + self.b * root)

    def __repr__(self) -> str:
        if not self.b:
            return f"SqrtNum({self.a})"
        return f"SqrtNum({self.a} + {self.b}*sqrt({self.d}))"
