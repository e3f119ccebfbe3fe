"""Exact scalar arithmetic: rationals, quadratic extensions Q(sqrt(m)),
the biquadratic tower Q(i, sqrt(m)), and Hilbert-symbol norm tests.

All scalars are immutable and exact; there is no floating point anywhere.
Rationals are ``fractions.Fraction`` (arbitrary-precision, always reduced,
positive denominator).  ``QuadExt`` and ``TowerScalar`` fix a single
squarefree ``m`` per value; mixing different ``m`` is a usage error and
raises ``ValueError`` at the operation boundary.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

Rational = Fraction

#: Distinguished symbol for the archimedean (real) place.
REAL_PLACE = "real"


def rat(x) -> Fraction:
    """Coerce an int, string "p/q" or Fraction to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def _as_fraction(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return None


class QuadExt:
    """Element a + b*sqrt(m) of Q(sqrt(m)), m squarefree, m != 0, 1.

    conj negates sqrt(m); norm(x) = x * conj(x) = a^2 - m b^2.
    """

    __slots__ = ("a", "b", "m")

    def __init__(self, a, b=0, m=None):
        if m is None:
            raise ValueError("QuadExt requires the field parameter m")
        if m in (0, 1) or squarefree_part(m) != m:
            raise ValueError(f"m = {m} must be squarefree and not 0 or 1")
        object.__setattr__(self, "a", rat(a))
        object.__setattr__(self, "b", rat(b))
        object.__setattr__(self, "m", m)

    def __setattr__(self, *args):
        raise AttributeError("QuadExt values are immutable")

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.m != self.m:
                raise ValueError(
                    f"mixed quadratic fields: sqrt({self.m}) vs sqrt({other.m})")
            return other
        f = _as_fraction(other)
        if f is None:
            return None
        return QuadExt(f, 0, self.m)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.m)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.m)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.m)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a * o.a + self.m * self.b * o.b,
                       self.a * o.b + self.b * o.a, self.m)

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(m))")
        return QuadExt(self.a / n, -self.b / n, self.m)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadExt(1, 0, self.m)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self):
        return QuadExt(self.a, -self.b, self.m)

    def norm(self) -> Fraction:
        return self.a * self.a - self.m * self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.m == other.m and self.a == other.a and self.b == other.b
        f = _as_fraction(other)
        if f is not None:
            return self.b == 0 and self.a == f
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.m))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        if self.b == 0:
            return f"{self.a}"
        return f"({self.a} + {self.b}*sqrt({self.m}))"


class TowerScalar:
    """Element c0 + c1*i + c2*sqrt(m) + c3*i*sqrt(m) of Q(i, sqrt(m)).

    The two generators commute; i^2 = -1 and sqrt(m)^2 = m.  There are two
    commuting conjugations: ``conj_i`` negates i, ``conj_m`` negates sqrt(m).
    """

    __slots__ = ("c", "m")

    def __init__(self, c0, c1=0, c2=0, c3=0, m=None):
        if m is None:
            raise ValueError("TowerScalar requires the field parameter m")
        if m in (0, 1) or squarefree_part(m) != m:
            raise ValueError(f"m = {m} must be squarefree and not 0 or 1")
        object.__setattr__(self, "c", (rat(c0), rat(c1), rat(c2), rat(c3)))
        object.__setattr__(self, "m", m)

    def __setattr__(self, *args):
        raise AttributeError("TowerScalar values are immutable")

    @classmethod
    def from_gaussian(cls, x: QuadExt, m: int):
        """Lift an element of Q(i) (QuadExt with m = -1) into Q(i, sqrt(m))."""
        if x.m != -1:
            raise ValueError("from_gaussian expects a Q(i) element")
        return cls(x.a, x.b, 0, 0, m=m)

    @classmethod
    def from_quadext(cls, x: QuadExt):
        """Lift an element of Q(sqrt(m)) into Q(i, sqrt(m))."""
        return cls(x.a, 0, x.b, 0, m=x.m)

    def _coerce(self, other):
        if isinstance(other, TowerScalar):
            if other.m != self.m:
                raise ValueError("mixed tower fields")
            return other
        f = _as_fraction(other)
        if f is None:
            return None
        return TowerScalar(f, m=self.m)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TowerScalar(*(a + b for a, b in zip(self.c, o.c)), m=self.m)

    __radd__ = __add__

    def __neg__(self):
        return TowerScalar(*(-a for a in self.c), m=self.m)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TowerScalar(*(a - b for a, b in zip(self.c, o.c)), m=self.m)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = o.c
        m = self.m
        # basis products: 1, i, s, is with i^2 = -1, s^2 = m, (is)^2 = -m
        return TowerScalar(
            a0 * b0 - a1 * b1 + m * (a2 * b2 - a3 * b3),
            a0 * b1 + a1 * b0 + m * (a2 * b3 + a3 * b2),
            a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1,
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
            m=m,
        )

    __rmul__ = __mul__

    def conj_i(self):
        c0, c1, c2, c3 = self.c
        return TowerScalar(c0, -c1, c2, -c3, m=self.m)

    def conj_m(self):
        c0, c1, c2, c3 = self.c
        return TowerScalar(c0, c1, -c2, -c3, m=self.m)

    def inverse(self):
        t = self * self.conj_i()          # lands in Q(sqrt(m))
        n = t * t.conj_m()                # lands in Q
        if not n.is_rational() or n.c[0] == 0:
            if n.c[0] == 0 and n.is_rational():
                raise ZeroDivisionError("division by zero in Q(i, sqrt(m))")
            raise ArithmeticError("tower norm failed to be rational")
        r = n.c[0]
        num = self.conj_i() * t.conj_m()
        return TowerScalar(*(a / r for a in num.c), m=self.m)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def is_rational(self) -> bool:
        return self.c[1] == 0 and self.c[2] == 0 and self.c[3] == 0

    def __eq__(self, other):
        if isinstance(other, TowerScalar):
            return self.m == other.m and self.c == other.c
        f = _as_fraction(other)
        if f is not None:
            return self.is_rational() and self.c[0] == f
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.c[0])
        return hash((self.c, self.m))

    def __bool__(self):
        return any(a != 0 for a in self.c)

    def __repr__(self):
        return (f"({self.c[0]} + {self.c[1]}*i + {self.c[2]}*sqrt({self.m})"
                f" + {self.c[3]}*i*sqrt({self.m}))")


# ---------------------------------------------------------------------------
# elementary number theory (trial division is enough at desk scale)

def factorize(n: int) -> dict:
    """Prime factorization of |n| by trial division, as {prime: exponent}."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def squarefree_part(n: int) -> int:
    """The squarefree integer s with n = s * f^2, keeping the sign of n."""
    if n == 0:
        return 0
    s = -1 if n < 0 else 1
    for p, e in factorize(n).items():
        if e % 2 == 1:
            s *= p
    return s


def is_square(q: Fraction) -> bool:
    q = rat(q)
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for an odd prime p, in {-1, 0, +1}."""
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def _square_class_int(q: Fraction) -> int:
    # num/den and num*den differ by den^2, so they share all Hilbert symbols
    q = rat(q)
    return q.numerator * q.denominator


def hilbert_symbol(a, b, p) -> int:
    """Hilbert symbol (a, b)_p in {+1, -1} for rational a, b and a place p.

    Returns +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over Q_p
    (p a prime) or over R (p = REAL_PLACE).  Computed by the standard
    valuation/Legendre-symbol formulas; only the square classes of a and b
    matter, so rationals are reduced to integers first.
    """
    a, b = rat(a), rat(b)
    if a == 0 or b == 0:
        raise ValueError("hilbert_symbol requires nonzero arguments")
    if p == REAL_PLACE:
        return -1 if (a < 0 and b < 0) else 1
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p = {p!r} is not a prime or the real place")
    ai, bi = _square_class_int(a), _square_class_int(b)

    alpha = 0
    while ai % p == 0:
        ai //= p
        alpha += 1
    beta = 0
    while bi % p == 0:
        bi //= p
        beta += 1

    if p == 2:
        def eps(u):  # (u-1)/2 mod 2
            return ((u - 1) // 2) % 2

        def omega(u):  # (u^2-1)/8 mod 2
            return ((u * u - 1) // 8) % 2

        e = eps(ai) * eps(bi) + alpha * omega(bi) + beta * omega(ai)
        return -1 if e % 2 else 1

    e = alpha * beta * ((p - 1) // 2)
    sign = -1 if e % 2 else 1
    if beta % 2:
        sign *= legendre(ai, p)
    if alpha % 2:
        sign *= legendre(bi, p)
    return sign


def relevant_places(*qs):
    """The real place plus every prime dividing 2 and the given rationals."""
    primes = {2}
    for q in qs:
        q = rat(q)
        if q == 0:
            continue
        primes |= set(factorize(q.numerator))
        primes |= set(factorize(q.denominator))
    return [REAL_PLACE] + sorted(primes)


def is_norm(q, d) -> bool:
    """Whether q is a norm from the imaginary quadratic field Q(sqrt(-d)).

    q must be a nonzero rational and d a positive rational.  Norms from an
    imaginary quadratic field are totally positive, and by the Hasse norm
    theorem positivity plus local solvability of z^2 = q x^2 - d y^2 at the
    finitely many places dividing 2 d q decides membership.
    """
    q, d = rat(q), rat(d)
    if q == 0:
        raise ValueError("q must be nonzero")
    if d <= 0:
        raise ValueError("d must be positive")
    if q < 0:
        return False
    for p in relevant_places(q, d):
        if hilbert_symbol(q, -d, p) != 1:
            return False
    return True
