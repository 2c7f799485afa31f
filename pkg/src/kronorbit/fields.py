"""Exact scalar arithmetic: the rationals and prime fields.

Every computation in the package runs over a single ``FieldSpec``.  Rational
scalars are ``fractions.Fraction`` values; prime-field scalars are plain ints
in ``[0, p)``.  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(n):
    # Deterministic Miller-Rabin, valid far beyond 2**31.
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


class FieldSpec:
    """Either the rationals or a prime field F_p with p < 2**31.

    Instances are immutable and interned: ``FieldSpec.rationals()`` always
    returns the same object, ``FieldSpec.prime(p)`` the same object per p.
    """

    _rational_instance = None
    _prime_instances = {}

    def __init__(self, p=None):
        self.p = p

    @classmethod
    def rationals(cls):
        if cls._rational_instance is None:
            cls._rational_instance = cls(None)
        return cls._rational_instance

    @classmethod
    def prime(cls, p):
        if p not in cls._prime_instances:
            if not (2 <= p < 2 ** 31):
                raise FieldError("prime field characteristic must be in [2, 2^31)")
            if not _is_prime(p):
                raise FieldError("%d is not prime" % p)
            cls._prime_instances[p] = cls(p)
        return cls._prime_instances[p]

    @property
    def is_rational(self):
        return self.p is None

    # -- scalar operations -------------------------------------------------

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def from_int(self, n):
        return Fraction(n) if self.p is None else n % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero field element")
        if self.p is None:
            return 1 / a
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def random(self, rng, bound=5):
        """A random scalar, small integers over Q, uniform over F_p."""
        if self.p is None:
            return Fraction(rng.randint(-bound, bound))
        return rng.randrange(self.p)

    # -- serialization (external interface) ---------------------------------

    def format_scalar(self, a):
        """Rationals print as "p/q" in lowest terms, prime-field as int."""
        if self.p is None:
            if a.denominator == 1:
                return str(a.numerator)
            return "%d/%d" % (a.numerator, a.denominator)
        return str(a)

    def parse_scalar(self, text):
        text = text.strip()
        if self.p is None:
            if "/" in text:
                num, den = text.split("/")
                return Fraction(int(num), int(den))
            return Fraction(int(text))
        value = int(text)
        if not 0 <= value < self.p:
            raise FieldError("prime-field scalar %d out of range [0,%d)" % (value, self.p))
        return value

    def format_spec(self):
        return "q" if self.p is None else "fp:%d" % self.p

    @classmethod
    def parse_spec(cls, text):
        text = text.strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls.rationals()
        if text.startswith("fp:"):
            return cls.prime(int(text[3:]))
        raise FieldError("unknown field spec %r (expected 'q' or 'fp:P')" % text)

    def __repr__(self):
        return "FieldSpec(%s)" % self.format_spec()

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.p == other.p

    def __hash__(self):
        return hash(("FieldSpec", self.p))


QQ = FieldSpec.rationals()


def GF(p):
    return FieldSpec.prime(p)
