"""Exact scalar arithmetic: the rationals and prime fields GF(p).

Field objects bundle the scalar operations used by the linear algebra
layers.  Scalars themselves are plain Python objects (gmpy2.mpq or
fractions.Fraction for the rationals, ints in [0, p) for GF(p)), so
sparse containers stay lightweight.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is optional
    _mpq = None


class RationalField:
    """The field of rational numbers with exact arithmetic."""

    kind = "rational"

    def __init__(self):
        self.zero = self.coerce(0)
        self.one = self.coerce(1)

    def coerce(self, x):
        if _mpq is not None:
            return _mpq(x)
        if isinstance(x, Fraction):
            return x
        return Fraction(x)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return self.one / a

    def div(self, a, b):
        return a * self.inv(b)

    @staticmethod
    def is_zero(a):
        return not a

    @staticmethod
    def as_fraction(a):
        """Exact Fraction view, independent of the backing scalar type."""
        if isinstance(a, Fraction):
            return a
        return Fraction(a.numerator, a.denominator)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


def _is_prime(n):
    # deterministic Miller-Rabin; the witness set is exact below 3.3e24
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """GF(p) for a prime p; scalars are ints reduced into [0, p)."""

    kind = "prime"

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError("modulus %r is not prime" % (p,))
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        p = self.p
        if isinstance(x, int):
            return x % p
        if isinstance(x, str) and "/" in x:
            x = Fraction(x)
        if isinstance(x, Fraction) or (
            hasattr(x, "numerator") and hasattr(x, "denominator")
        ):
            den = int(x.denominator) % p
            if den == 0:
                raise ZeroDivisionError("denominator divisible by %d" % p)
            return int(x.numerator) * pow(den, -1, p) % p
        return int(x) % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    @staticmethod
    def is_zero(a):
        return a == 0

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = RationalField()


def GF(p):
    return PrimeField(p)


def field_from_name(name):
    """Parse a field name: "rational" or "gf:P" with P prime."""
    if name == "rational":
        return QQ
    if name.startswith("gf:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise ValueError("bad prime field name %r" % name) from None
        return PrimeField(p)
    raise ValueError("unknown field %r (expected 'rational' or 'gf:P')" % name)


def field_name(field):
    if field.kind == "rational":
        return "rational"
    return "gf:%d" % field.p
