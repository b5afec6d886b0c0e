"""Exact multivariate polynomial arithmetic over a prime field F_p.

Coefficients are plain int residues in [0, p); the modulus and the monomial
order live on the RingDescriptor. Monomials are exponent tuples. Polynomials
are immutable, canonically sorted term sequences, so equality and hashing are
structural.
"""

from __future__ import annotations

from .errors import ExponentOverflow, RingMismatch

# Exponents are checked against this instead of wrapping (bracket powers reach q = p^e).
EXPONENT_LIMIT = 2**31 - 1

ORDER_TAGS = ("lex", "grevlex", "block")


def is_prime(n: int) -> bool:
    """Deterministic trial division; moduli are at most 2^31."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """Return a/b as an exponent tuple, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


def mono_divides(a, b):
    """True when a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


class RingDescriptor:
    """Ambient polynomial ring F_p[variables] with a fixed monomial order.

    order is one of "lex", "grevlex" (default) or "block"; block orders take a
    partition of the variable list (left blocks dominate, grevlex inside each),
    which is what elimination uses.
    """

    __slots__ = ("p", "variables", "order", "blocks", "_index", "_slices")

    def __init__(self, p, variables, order="grevlex", blocks=None):
        if not is_prime(p):
            raise ValueError(f"modulus not prime: {p}")
        if p > EXPONENT_LIMIT:
            raise ValueError(f"modulus too large: {p}")
        variables = tuple(variables)
        if not variables:
            raise ValueError("ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable name")
        if order not in ORDER_TAGS:
            raise ValueError(f"unknown monomial order: {order}")
        if order == "block":
            if not blocks:
                raise ValueError("block order needs a block partition")
            blocks = tuple(tuple(b) for b in blocks)
            flat = tuple(v for b in blocks for v in b)
            if flat != variables:
                raise ValueError("blocks must partition the variable list in order")
        elif blocks is not None:
            raise ValueError("blocks only make sense with the block order")
        self.p = p
        self.variables = variables
        self.order = order
        self.blocks = blocks
        self._index = {v: i for i, v in enumerate(variables)}
        if order == "block":
            slices, start = [], 0
            for b in blocks:
                slices.append(slice(start, start + len(b)))
                start += len(b)
            self._slices = tuple(slices)
        else:
            self._slices = None

    @property
    def nvars(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name}") from None

    def key(self, m):
        """Sort key: ascending in the ring's monomial order."""
        if self.order == "grevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        if self.order == "lex":
            return m
        return tuple(_grevlex_key(m[s]) for s in self._slices)

    def negkey(self, m):
        """Sort key that inverts the order; lets a min-heap pop the largest monomial."""
        if self.order == "grevlex":
            return (-sum(m), m[::-1])
        if self.order == "lex":
            return tuple(-e for e in m)
        return tuple((-sum(m[s]), m[s][::-1]) for s in self._slices)

    def __eq__(self, other):
        return (
            isinstance(other, RingDescriptor)
            and self.p == other.p
            and self.variables == other.variables
            and self.order == other.order
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.p, self.variables, self.order, self.blocks))

    def __repr__(self):
        tag = "" if self.order == "grevlex" else f":{self.order}"
        return f"F{self.p}[{','.join(self.variables)}]{tag}"


def make_ring(p, variables, order="grevlex", blocks=None) -> RingDescriptor:
    """Construct a ring descriptor; rejects composite p and duplicate names."""
    return RingDescriptor(p, variables, order=order, blocks=blocks)


class Polynomial:
    """Canonical sorted term sequence over a RingDescriptor.

    terms is a tuple of (exponent_tuple, coeff) pairs, strictly descending in
    the ring's order, with no zero coefficients. The zero polynomial has no
    terms. Instances are immutable and hashable.
    """

    __slots__ = ("ring", "terms", "_h")

    def __init__(self, ring, terms=(), canonical=False):
        self.ring = ring
        if canonical:
            self.terms = tuple(terms)
        else:
            p = ring.p
            acc = {}
            for m, c in terms:
                c = (acc.get(m, 0) + c) % p
                if c:
                    acc[m] = c
                else:
                    acc.pop(m, None)
            key = ring.key
            self.terms = tuple(
                sorted(acc.items(), key=lambda t: key(t[0]), reverse=True)
            )
        self._h = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring):
        return cls(ring, (), canonical=True)

    @classmethod
    def constant(cls, ring, c):
        c %= ring.p
        if not c:
            return cls.zero(ring)
        return cls(ring, (((0,) * ring.nvars, c),), canonical=True)

    @classmethod
    def one(cls, ring):
        return cls.constant(ring, 1)

    @classmethod
    def variable(cls, ring, name):
        i = ring.index(name)
        m = tuple(1 if j == i else 0 for j in range(ring.nvars))
        return cls(ring, ((m, 1),), canonical=True)

    @classmethod
    def monomial(cls, ring, exponents, coeff=1):
        coeff %= ring.p
        exponents = tuple(exponents)
        if len(exponents) != ring.nvars:
            raise ValueError("exponent tuple has wrong length")
        if any(e < 0 for e in exponents):
            raise ValueError("negative exponent")
        if max(exponents) > EXPONENT_LIMIT:
            raise ExponentOverflow(f"exponent beyond {EXPONENT_LIMIT}")
        if not coeff:
            return cls.zero(ring)
        return cls(ring, ((exponents, coeff),), canonical=True)

    # -- structure ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    def is_monomial(self):
        return len(self.terms) == 1

    def lead_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def lead_coeff(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m, _ in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        d = sum(self.terms[0][0])
        return all(sum(m) == d for m, _ in self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.ring, other)
        self._check(other)
        return Polynomial(self.ring, self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(
            self.ring, tuple((m, p - c) for m, c in self.terms), canonical=True
        )

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.ring, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if not c:
                return Polynomial.zero(self.ring)
            p = self.ring.p
            return Polynomial(
                self.ring,
                tuple((m, (c0 * c) % p) for m, c0 in self.terms),
                canonical=True,
            )
        self._check(other)
        if not self.terms or not other.terms:
            return Polynomial.zero(self.ring)
        if self.degree() + other.degree() > EXPONENT_LIMIT:
            raise ExponentOverflow("product degree beyond checked exponent range")
        p = self.ring.p
        acc = {}
        small, big = self.terms, other.terms
        if len(small) > len(big):
            small, big = big, small
        for m1, c1 in small:
            for m2, c2 in big:
                m = tuple(x + y for x, y in zip(m1, m2))
                c = (acc.get(m, 0) + c1 * c2) % p
                if c:
                    acc[m] = c
                else:
                    del acc[m]
        key = self.ring.key
        return Polynomial(
            self.ring,
            tuple(sorted(acc.items(), key=lambda t: key(t[0]), reverse=True)),
            canonical=True,
        )

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        if n == 0:
            return Polynomial.one(self.ring)
        if self.terms and self.degree() * n > EXPONENT_LIMIT:
            raise ExponentOverflow("power degree beyond checked exponent range")
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def frobenius(self, e):
        """f^(p^e), computed term-wise through the Frobenius endomorphism."""
        if e < 1:
            raise ValueError("Frobenius exponent must be >= 1")
        p = self.ring.p
        q = p**e
        if self.terms and self.degree() * q > EXPONENT_LIMIT:
            raise ExponentOverflow("Frobenius power beyond checked exponent range")
        return Polynomial(
            self.ring,
            tuple(
                (tuple(x * q for x in m), pow(c, q, p)) for m, c in self.terms
            ),
            canonical=True,
        )

    def derivative(self, var):
        """Formal partial derivative; exponents reduce mod p and can kill terms."""
        i = self.ring.index(var)
        p = self.ring.p
        out = []
        for m, c in self.terms:
            a = m[i]
            if a == 0:
                continue
            c2 = (c * a) % p
            if not c2:
                continue
            out.append((m[:i] + (a - 1,) + m[i + 1 :], c2))
        return Polynomial(self.ring, tuple(out), canonical=True)

    def monic(self):
        if not self.terms:
            return self
        lc = self.terms[0][1]
        if lc == 1:
            return self
        p = self.ring.p
        inv = pow(lc, p - 2, p)
        return Polynomial(
            self.ring, tuple((m, (c * inv) % p) for m, c in self.terms), canonical=True
        )

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.ring, self.terms))
        return self._h

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"<{format_poly(self)} over {self.ring!r}>"


def format_poly(f: Polynomial) -> str:
    """Canonical text form; parse_poly inverts this exactly."""
    if not f.terms:
        return "0"
    names = f.ring.variables
    parts = []
    for m, c in f.terms:
        factors = []
        if c != 1 or not any(m):
            factors.append(str(c))
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        parts.append("*".join(factors))
    return " + ".join(parts)


def poly_arith(op, a, b):
    """Dispatcher over {add, sub, mul, pow}; pow takes an int second argument."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        return a**b
    raise ValueError(f"unknown operation {op}")


def frob_pow(f: Polynomial, e: int) -> Polynomial:
    """f^(p^e) via the Frobenius endomorphism; equals poly_arith pow at p^e."""
    return f.frobenius(e)


def partial_derivative(f: Polynomial, var: str) -> Polynomial:
    return f.derivative(var)
