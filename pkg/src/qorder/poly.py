"""Dense univariate polynomial arithmetic over a finite coefficient field.

A polynomial is an immutable tuple of coefficients, constant term first,
with no trailing zeros; the zero polynomial has an empty tuple and degree
-1.  Coefficients are integers in [0, q) encoding elements of the
coefficient field F_q (little-endian base-p digits, see qorder.fields).

Beyond ring arithmetic this module provides the monic reciprocal
f*(x) = f(0)^-1 x^deg(f) f(1/x), a Rabin irreducibility test, the complete
factorization of x^n - 1, the divisor lattice of a factored polynomial, and
the polynomial Euler totient phi_q.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import TYPE_CHECKING, Iterable, Iterator

from .errors import (
    FieldMismatchError,
    ParseError,
    SizeExceededError,
    ZeroConstantTermError,
)
from .integers import prime_factors

if TYPE_CHECKING:
    from .fields import BaseField

#: Divisor enumerations refuse to materialize more than this many divisors.
DEFAULT_DIVISOR_BOUND = 4096


class FqPoly:
    """Immutable dense polynomial over F_q.

    Construction canonicalizes: trailing zero coefficients are stripped, so
    two equal polynomials always compare and hash equal.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "BaseField", coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        q = field.size
        for c in cs:
            if not 0 <= c < q:
                raise ValueError(f"coefficient {c!r} outside [0, {q})")
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: "BaseField") -> "FqPoly":
        return cls(field)

    @classmethod
    def one(cls, field: "BaseField") -> "FqPoly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: "BaseField") -> "FqPoly":
        return cls(field, (0, 1))

    @classmethod
    def x_pow_minus_one(cls, field: "BaseField", n: int) -> "FqPoly":
        """The polynomial x^n - 1 (n >= 1)."""
        if n < 1:
            raise ValueError("exponent must be positive")
        cs = [0] * (n + 1)
        cs[0] = field.neg(1)
        cs[n] = 1
        return cls(field, cs)

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 stands for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def evaluate(self, a: int) -> int:
        """Value at the field point a (Horner)."""
        field = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = field.add(field.mul(acc, a), c)
        return acc

    # -- arithmetic --------------------------------------------------------

    def _check_field(self, other: "FqPoly") -> None:
        if self.field != other.field:
            raise FieldMismatchError("polynomials over different coefficient fields")

    def __add__(self, other: "FqPoly") -> "FqPoly":
        self._check_field(other)
        field = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = field.add(out[i], c)
        return FqPoly(field, out)

    def __neg__(self) -> "FqPoly":
        field = self.field
        return FqPoly(field, (field.neg(c) for c in self.coeffs))

    def __sub__(self, other: "FqPoly") -> "FqPoly":
        return self + (-other)

    def __mul__(self, other: "FqPoly") -> "FqPoly":
        self._check_field(other)
        if self.is_zero or other.is_zero:
            return FqPoly(self.field)
        field = self.field
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = field.add(out[i + j], field.mul(ai, bj))
        return FqPoly(field, out)

    def scale(self, c: int) -> "FqPoly":
        """Multiply by the scalar c."""
        field = self.field
        return FqPoly(field, (field.mul(c, a) for a in self.coeffs))

    def __divmod__(self, other: "FqPoly") -> tuple["FqPoly", "FqPoly"]:
        self._check_field(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        field = self.field
        db = other.degree
        if self.degree < db:
            return FqPoly(field), self
        inv_lead = field.inv(other.coeffs[-1])
        rem = list(self.coeffs)
        quo = [0] * (self.degree - db + 1)
        for i in range(self.degree - db, -1, -1):
            top = rem[i + db]
            if top:
                f = field.mul(top, inv_lead)
                quo[i] = f
                for j, bc in enumerate(other.coeffs):
                    rem[i + j] = field.sub(rem[i + j], field.mul(f, bc))
        return FqPoly(field, quo), FqPoly(field, rem[:db])

    def __floordiv__(self, other: "FqPoly") -> "FqPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FqPoly") -> "FqPoly":
        return divmod(self, other)[1]

    def divides(self, other: "FqPoly") -> bool:
        """True if self divides other exactly (self nonzero)."""
        return (other % self).is_zero

    def powmod(self, exponent: int, modulus: "FqPoly") -> "FqPoly":
        """self^exponent mod modulus, by binary exponentiation."""
        if exponent < 0:
            raise ValueError("negative exponent")
        result = FqPoly.one(self.field) % modulus
        base = self % modulus
        e = exponent
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def monic(self) -> "FqPoly":
        """The monic scalar multiple of a nonzero polynomial."""
        if self.is_zero:
            raise ValueError("the zero polynomial has no monic associate")
        if self.coeffs[-1] == 1:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    # -- ordering, hashing, rendering ---------------------------------------

    def lex_key(self) -> tuple:
        """Coefficient tuple key: constant term first, coefficients by base-p digits."""
        digits = self.field.digits
        return tuple(digits(c) for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FqPoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.s, self.coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                xk = "x" if k == 1 else f"x^{k}"
                terms.append(xk if c == 1 else f"{c}*{xk}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"FqPoly(q={self.field.size}, '{poly_tokens(self)}')"


def poly_sort_key(f: FqPoly) -> tuple:
    """Total order on polynomials: by degree, then lexicographic on coefficients."""
    return (f.degree, f.lex_key())


def poly_gcd(a: FqPoly, b: FqPoly) -> FqPoly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while not b.is_zero:
        a, b = b, a % b
    return a if a.is_zero else a.monic()


# -- text format -------------------------------------------------------------
#
# Comma-separated coefficient tokens, constant term first.  Each token is an
# integer in [0, q) whose base-p digits are the t-power basis coordinates of
# the F_q coefficient (for a prime field this is just a residue).  "1,1,0,1"
# over F_2 is 1 + x + x^3; "0" is the zero polynomial.


def parse_poly(field: "BaseField", text: str) -> FqPoly:
    """Parse the comma-separated coefficient format."""
    tokens = [t.strip() for t in text.split(",")]
    if not tokens or any(not t for t in tokens):
        raise ParseError(f"malformed polynomial text {text!r}")
    try:
        coeffs = [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"malformed polynomial text {text!r}") from exc
    for c in coeffs:
        if not 0 <= c < field.size:
            raise ParseError(f"coefficient {c} outside [0, {field.size})")
    return FqPoly(field, coeffs)


def poly_tokens(f: FqPoly) -> str:
    """Render the comma-separated coefficient format (inverse of parse_poly)."""
    if f.is_zero:
        return "0"
    return ",".join(str(c) for c in f.coeffs)


# -- reciprocal ---------------------------------------------------------------


def monic_reciprocal(f: FqPoly) -> FqPoly:
    """The monic reciprocal f*(x) = f(0)^-1 x^deg(f) f(1/x).

    Defined only when f(0) != 0; reverses the coefficient tuple and
    normalizes to monic, preserving the degree.
    """
    if f.is_zero or f.coeffs[0] == 0:
        raise ZeroConstantTermError(
            "monic reciprocal requires a nonzero constant term"
        )
    return FqPoly(f.field, tuple(reversed(f.coeffs))).monic()


def is_self_reciprocal(f: FqPoly) -> bool:
    """True if the monic polynomial f equals its monic reciprocal."""
    return monic_reciprocal(f) == f


# -- irreducibility ------------------------------------------------------------


def monic_polynomials(field: "BaseField", degree: int) -> Iterator[FqPoly]:
    """All monic polynomials of the given degree, in (constant-term-first) lex order."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if degree == 0:
        yield FqPoly.one(field)
        return
    order = field.lex_order()
    for lower in itertools.product(order, repeat=degree):
        yield FqPoly(field, (*lower, 1))


def is_irreducible(f: FqPoly) -> bool:
    """Rabin irreducibility test.

    f of degree d is irreducible over F_q iff x^(q^d) = x (mod f) and
    x^(q^(d/r)) - x is coprime to f for every prime r dividing d.
    """
    d = f.degree
    if d <= 0:
        return False
    if f.coeffs[0] == 0:
        # divisible by x: irreducible only if it IS (a scalar multiple of) x
        return d == 1
    field = f.field
    q = field.size
    x = FqPoly.x(field)
    checkpoints = {d // r for r in prime_factors(d)}
    saved = []
    frob = x % f
    for k in range(1, d + 1):
        frob = frob.powmod(q, f)
        if k in checkpoints:
            saved.append(frob)
    if frob != x % f:
        return False
    for h in saved:
        if poly_gcd(h - x, f).degree != 0:
            return False
    return True


# -- factorization of x^n - 1 ----------------------------------------------


@dataclass(frozen=True)
class FactoredPoly:
    """A factorization into monic irreducibles with multiplicities.

    Factors are pairwise distinct and canonically sorted by (degree, lex).
    """

    field: "BaseField"
    factors: tuple[tuple[FqPoly, int], ...]

    def expand(self) -> FqPoly:
        """Multiply the factorization back out."""
        return _expand_cached(self)

    @property
    def degree(self) -> int:
        return sum(g.degree * e for g, e in self.factors)

    def divisor_count(self) -> int:
        return prod(e + 1 for _, e in self.factors)


@lru_cache(maxsize=None)
def _expand_cached(fp: FactoredPoly) -> FqPoly:
    out = FqPoly.one(fp.field)
    for g, e in fp.factors:
        for _ in range(e):
            out = out * g
    return out


def _random_poly(field: "BaseField", degree_bound: int, rng: random.Random) -> FqPoly:
    """A uniformly random polynomial of degree in [1, degree_bound)."""
    while True:
        f = FqPoly(field, [rng.randrange(field.size) for _ in range(degree_bound)])
        if f.degree >= 1:
            return f


def _equal_degree_split(f: FqPoly, d: int, rng: random.Random) -> list[FqPoly]:
    """Split a monic squarefree product of degree-d irreducibles completely."""
    if f.degree == d:
        return [f]
    field = f.field
    q = field.size
    while True:
        r = _random_poly(field, f.degree, rng)
        g = poly_gcd(r, f)
        if not 0 < g.degree < f.degree:
            if field.p == 2:
                # F_2-trace map of r in F_{q^d}: sum of the s*d two-power conjugates
                w = FqPoly.zero(field)
                acc = r % f
                for _ in range(field.s * d):
                    w = w + acc
                    acc = acc.powmod(2, f)
                g = poly_gcd(w, f)
            else:
                w = r.powmod((q**d - 1) // 2, f)
                g = poly_gcd(w - FqPoly.one(field), f)
        if 0 < g.degree < f.degree:
            return _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng)


def _factor_squarefree(f: FqPoly, rng: random.Random) -> list[FqPoly]:
    """Irreducible factors of a monic squarefree f: distinct-degree, then equal-degree."""
    field = f.field
    q = field.size
    x = FqPoly.x(field)
    out: list[FqPoly] = []
    remaining = f
    frob = x % remaining
    d = 0
    while remaining.degree > 0 and 2 * (d + 1) <= remaining.degree:
        d += 1
        frob = frob.powmod(q, remaining)
        g = poly_gcd(frob - x, remaining)
        if g.degree > 0:
            out.extend(_equal_degree_split(g, d, rng))
            remaining = remaining // g
            frob = frob % remaining
    if remaining.degree > 0:
        out.append(remaining)
    return out


def factor_xn_minus_1(n: int, field: "BaseField", seed: int = 0) -> FactoredPoly:
    """Complete factorization of x^n - 1 over F_q.

    With n = p^u * v and gcd(v, p) = 1, the squarefree part x^v - 1 is
    factored by Cantor-Zassenhaus splitting and every multiplicity is p^u.
    The seed drives the internal splitting randomness only; the canonical
    sorting makes the result seed-independent.
    """
    if n < 1:
        raise ValueError("n must be positive")
    p = field.p
    u, v = 0, n
    while v % p == 0:
        v //= p
        u += 1
    squarefree = FqPoly.x_pow_minus_one(field, v)
    irreducibles = _factor_squarefree(squarefree, random.Random(seed))
    irreducibles.sort(key=poly_sort_key)
    return FactoredPoly(field, tuple((g, p**u) for g in irreducibles))


# -- divisor lattice ----------------------------------------------------------


@lru_cache(maxsize=None)
def _divisor_from_exponents(fp: FactoredPoly, exps: tuple[int, ...]) -> FqPoly:
    for i in range(len(exps) - 1, -1, -1):
        if exps[i]:
            parent = exps[:i] + (exps[i] - 1,) + exps[i + 1 :]
            return _divisor_from_exponents(fp, parent) * fp.factors[i][0]
    return FqPoly.one(fp.field)


def _exponent_vectors(fp: FactoredPoly) -> Iterator[tuple[int, ...]]:
    return itertools.product(*(range(e + 1) for _, e in fp.factors))


def _check_divisor_count(fp: FactoredPoly, max_divisors: int) -> None:
    count = fp.divisor_count()
    if count > max_divisors:
        raise SizeExceededError(
            f"{count} divisors exceed the configured bound {max_divisors}"
        )


@lru_cache(maxsize=None)
def divisors_of_xn_minus_1(
    fp: FactoredPoly, max_divisors: int = DEFAULT_DIVISOR_BOUND
) -> tuple[FqPoly, ...]:
    """All monic divisors, ordered by (degree, lex); count is prod(e_i + 1)."""
    _check_divisor_count(fp, max_divisors)
    divs = [_divisor_from_exponents(fp, exps) for exps in _exponent_vectors(fp)]
    divs.sort(key=poly_sort_key)
    return tuple(divs)


@lru_cache(maxsize=None)
def divisor_phi_table(
    fp: FactoredPoly, max_divisors: int = DEFAULT_DIVISOR_BOUND
) -> tuple[tuple[FqPoly, int], ...]:
    """(divisor, phi_q(divisor)) pairs in (degree, lex) order."""
    _check_divisor_count(fp, max_divisors)
    q = fp.field.size
    rows = []
    for exps in _exponent_vectors(fp):
        phi = 1
        for (g, _), e in zip(fp.factors, exps):
            if e:
                d = g.degree
                phi *= q ** ((e - 1) * d) * (q**d - 1)
        rows.append((_divisor_from_exponents(fp, exps), phi))
    rows.sort(key=lambda r: poly_sort_key(r[0]))
    return tuple(rows)


# -- polynomial Euler totient -------------------------------------------------


def _trial_factorization(f: FqPoly) -> FactoredPoly:
    """Factor a monic polynomial by exhaustive trial division (desk scale)."""
    field = f.field
    rem = f
    found: list[tuple[FqPoly, int]] = []
    d = 1
    while 2 * d <= rem.degree:
        for cand in monic_polynomials(field, d):
            if rem.degree < d:
                break
            e = 0
            while cand.divides(rem):
                rem = rem // cand
                e += 1
            if e:
                found.append((cand, e))
        d += 1
    if rem.degree > 0:
        found.append((rem, 1))
    found.sort(key=lambda pair: poly_sort_key(pair[0]))
    return FactoredPoly(field, tuple(found))


def phi_q(f: FqPoly | FactoredPoly) -> int:
    """The polynomial Euler totient: the number of units of F_q[x]/(f).

    Multiplicative over the factorization, with
    phi_q(P^e) = q^((e-1) deg P) * (q^deg P - 1) and phi_q(1) = 1.
    Accepts a factored polynomial directly; a plain polynomial is factored
    by trial division first (nonzero input is normalized to monic).
    """
    if isinstance(f, FactoredPoly):
        q = f.field.size
        out = 1
        for g, e in f.factors:
            d = g.degree
            out *= q ** ((e - 1) * d) * (q**d - 1)
        return out
    if f.is_zero:
        raise ValueError("phi_q is undefined for the zero polynomial")
    return phi_q(_trial_factorization(f.monic()))
