"""The extension tower F_p < F_q = F_p[t]/(g0) < F_{q^n} = F_q[u]/(h0).

Elements are encoded as integers.  An element of F_q is an int in [0, q)
whose little-endian base-p digits are its t-power coordinates; an element
of F_{q^n} is an int in [0, q^n) whose base-q digits are its F_q
coefficients in the u-power basis.  Consequently 0 and 1 are the integers
0 and 1, and the embedded copy of F_q is exactly the range [0, q).

Moduli are canonical: the lexicographically smallest monic irreducible of
the required degree, where coefficient tuples are compared constant term
first and each F_q coefficient by its base-p digit tuple.  This makes
every tower, and hence every report, reproducible across runs.

Fields up to 2^14 elements get discrete-log tables (multiplication,
inversion and Frobenius become table lookups); larger towers fall back to
schoolbook coefficient-vector arithmetic.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

from .errors import FieldMismatchError, NonPrimeError, ParseError, SizeExceededError
from .integers import is_prime, prime_factors
from .poly import FqPoly, is_irreducible

#: Exhaustive operations refuse fields larger than this unless overridden.
DEFAULT_SIZE_BOUND = 1 << 24

# Internal speed knobs; these never affect results, only how they are computed.
_EXP_LOG_BOUND = 1 << 14
_BASE_TABLE_BOUND = 128


class BaseField:
    """F_q = F_p[t]/(g0) with elements encoded as integers in [0, q).

    Instances are immutable after construction; use base_field() to get the
    canonical instance for given (p, s).
    """

    __slots__ = ("p", "s", "size", "modulus", "_mul_table", "_inv_table", "_lex")

    def __init__(self, p: int, s: int, modulus: tuple[int, ...]):
        self.p = p
        self.s = s
        self.size = p**s
        self.modulus = tuple(modulus)
        if len(self.modulus) != s + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree s")
        self._mul_table = None
        self._inv_table = None
        self._lex = None
        if self.size <= _BASE_TABLE_BOUND:
            q = self.size
            table = [self._mul_raw(a, b) for a in range(q) for b in range(q)]
            inv = [0] * q
            for a in range(1, q):
                for b in range(1, q):
                    if table[a * q + b] == 1:
                        inv[a] = b
                        break
            self._mul_table = table
            self._inv_table = inv

    # -- encoding ------------------------------------------------------------

    def digits(self, c: int) -> tuple[int, ...]:
        """Little-endian base-p digit tuple (t-power coordinates) of length s."""
        p = self.p
        out = []
        for _ in range(self.s):
            c, r = divmod(c, p)
            out.append(r)
        return tuple(out)

    def from_digits(self, digits) -> int:
        value = 0
        for d in reversed(digits):
            value = value * self.p + d
        return value

    def lex_order(self) -> tuple[int, ...]:
        """All q coefficients sorted by their base-p digit tuples."""
        if self._lex is None:
            self._lex = tuple(sorted(range(self.size), key=self.digits))
        return self._lex

    # -- arithmetic ------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.s == 1:
            return (a + b) % p
        return self.from_digits(
            [(x + y) % p for x, y in zip(self.digits(a), self.digits(b))]
        )

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.s == 1:
            return (-a) % p
        return self.from_digits([(-x) % p for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def _mul_raw(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        p, s = self.p, self.s
        if s == 1:
            return a * b % p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * s - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for i in range(2 * s - 2, s - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(s):
                    m = self.modulus[j]
                    if m:
                        prod[i - s + j] = (prod[i - s + j] - c * m) % p
        return self.from_digits(prod[:s])

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a * self.size + b]
        return self._mul_raw(a, b)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if e == 0 else 0
        e %= self.size - 1 or 1
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.size - 2)

    # -- identity ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BaseField)
            and self.p == other.p
            and self.s == other.s
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.s, self.modulus))

    def __repr__(self) -> str:
        return f"BaseField(p={self.p}, s={self.s})"


def smallest_irreducible(field: BaseField, degree: int) -> FqPoly:
    """Lexicographically smallest monic irreducible of the given degree."""
    if degree == 1:
        return FqPoly.x(field)  # x itself: constant 0 sorts first
    order = field.lex_order()
    # a zero constant term means divisibility by x, so skip that whole block
    for c0 in order[1:]:
        for rest in itertools.product(order, repeat=degree - 1):
            f = FqPoly(field, (c0, *rest, 1))
            if is_irreducible(f):
                return f
    raise AssertionError("irreducible polynomials exist for every degree")


@lru_cache(maxsize=None)
def base_field(p: int, s: int = 1) -> BaseField:
    """The canonical F_{p^s} (lex-smallest irreducible modulus; t itself for s=1)."""
    if not is_prime(p):
        raise NonPrimeError(f"{p} is not prime")
    if s < 1:
        raise ValueError("s must be positive")
    if s == 1:
        return BaseField(p, 1, (0, 1))
    prime = base_field(p, 1)
    return BaseField(p, s, smallest_irreducible(prime, s).coeffs)


class FieldTower:
    """F_{q^n} = F_q[u]/(h0) over a BaseField F_q; elements are ints in [0, q^n).

    Immutable after construction (internal lookup tables are filled lazily
    but hold values that never change).  All operations are pure.
    """

    __slots__ = (
        "p",
        "s",
        "n",
        "q",
        "size",
        "base",
        "top_modulus",
        "_mod_vec",
        "_exp",
        "_log",
        "_frob_tables",
        "_trace_basis_list",
        "_trace_table",
        "_action_cache",
    )

    def __init__(self, base: BaseField, top_modulus: FqPoly):
        if top_modulus.field != base or not top_modulus.is_monic:
            raise ValueError("top modulus must be monic over the base field")
        self.base = base
        self.p = base.p
        self.s = base.s
        self.q = base.size
        self.n = top_modulus.degree
        self.size = self.q**self.n
        self.top_modulus = top_modulus
        self._mod_vec = top_modulus.coeffs[:-1]
        self._exp = None
        self._log = None
        self._frob_tables = {}
        self._trace_basis_list = None
        self._trace_table = None
        self._action_cache = {}

    @property
    def base_modulus(self) -> tuple[int, ...]:
        """The degree-s modulus of F_q over F_p (coefficients mod p, constant first)."""
        return self.base.modulus

    # -- encoding ----------------------------------------------------------------

    def coeff_vec(self, x: int) -> list[int]:
        """Little-endian base-q digits: the F_q coefficients in the u-power basis."""
        q = self.q
        out = []
        for _ in range(self.n):
            x, r = divmod(x, q)
            out.append(r)
        return out

    def from_coeff_vec(self, vec) -> int:
        value = 0
        for c in reversed(vec):
            value = value * self.q + c
        return value

    def coords(self, x: int) -> tuple[tuple[int, ...], ...]:
        """Tower coordinates: n tuples of s residues mod p each."""
        digits = self.base.digits
        return tuple(digits(c) for c in self.coeff_vec(x))

    def element_lex_key(self, x: int) -> tuple[int, ...]:
        """Flattened digit tuple; sorting by it gives lexicographic coordinate order."""
        p = self.p
        out = []
        for _ in range(self.n * self.s):
            x, r = divmod(x, p)
            out.append(r)
        return tuple(out)

    def enumerate_values(self) -> Iterator[int]:
        """All q^n element encodings in lexicographic coordinate order."""
        p = self.p
        total = self.n * self.s
        weights = [p**t for t in range(total)]
        for flat in itertools.product(range(p), repeat=total):
            yield sum(d * w for d, w in zip(flat, weights))

    # -- arithmetic ----------------------------------------------------------------

    def add_i(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        base = self.base
        q = self.q
        value = 0
        mult = 1
        for _ in range(self.n):
            x, a = divmod(x, q)
            y, b = divmod(y, q)
            value += base.add(a, b) * mult
            mult *= q
        return value

    def neg_i(self, x: int) -> int:
        if self.p == 2:
            return x
        base = self.base
        return self.from_coeff_vec([base.neg(c) for c in self.coeff_vec(x)])

    def sub_i(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        return self.add_i(x, self.neg_i(y))

    def _mul_vec(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        base = self.base
        n = self.n
        if n == 1:
            return base.mul(x, y)
        a = self.coeff_vec(x)
        b = self.coeff_vec(y)
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] = base.add(prod[i + j], base.mul(ai, bj))
        for i in range(2 * n - 2, n - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j, m in enumerate(self._mod_vec):
                    if m:
                        prod[i - n + j] = base.sub(prod[i - n + j], base.mul(c, m))
        return self.from_coeff_vec(prod[:n])

    def mul_i(self, x: int, y: int) -> int:
        exp = self._exp
        if exp is not None:
            if x == 0 or y == 0:
                return 0
            log = self._log
            return exp[(log[x] + log[y]) % (self.size - 1)]
        return self._mul_vec(x, y)

    def pow_i(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if e == 0 else 0
        m = self.size - 1
        e %= m or 1
        if self._exp is not None:
            return self._exp[self._log[x] * e % m] if m else 1
        result = 1
        base = x
        while e:
            if e & 1:
                result = self.mul_i(result, base)
            base = self.mul_i(base, base)
            e >>= 1
        return result

    def inv_i(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        m = self.size - 1
        if self._exp is not None:
            return self._exp[(m - self._log[x]) % m] if m else 1
        return self.pow_i(x, m - 1)

    def frob_i(self, x: int, k: int = 1) -> int:
        """The k-fold q-power Frobenius x^(q^k)."""
        k %= self.n
        if k == 0 or x < 2:
            return x
        m = self.size - 1
        if self._exp is not None:
            return self._exp[self._log[x] * pow(self.q, k, m) % m]
        return self.pow_i(x, self.q**k)

    def frob_table(self, k: int):
        """Full Frobenius lookup list for small towers, else None."""
        k %= self.n
        if self.size > _EXP_LOG_BOUND:
            return None
        table = self._frob_tables.get(k)
        if table is None:
            table = [self.frob_i(x, k) for x in range(self.size)]
            self._frob_tables[k] = table
        return table

    # -- trace -----------------------------------------------------------------

    def _trace_basis(self) -> list[int]:
        basis = self._trace_basis_list
        if basis is None:
            p = self.p
            total = self.n * self.s
            basis = []
            for t in range(total):
                val = p**t
                acc = 0
                for _ in range(total):
                    acc = self.add_i(acc, val)
                    val = self.pow_i(val, p)
                basis.append(acc)  # lands in the prime field, i.e. in [0, p)
            self._trace_basis_list = basis
        return basis

    def trace_i(self, x: int) -> int:
        """Tr_{q^n/p}(x) = sum of the n*s p-power conjugates, as a residue mod p."""
        table = self._trace_table
        if table is None:
            p = self.p
            basis = self._trace_basis()
            if self.size > _EXP_LOG_BOUND:
                acc = 0
                for b in basis:
                    x, d = divmod(x, p)
                    if d and b:
                        acc += d * b
                return acc % p
            table = [0] * self.size
            for v in range(1, self.size):
                w, acc = v, 0
                for b in basis:
                    w, d = divmod(w, p)
                    if d and b:
                        acc += d * b
                table[v] = acc % p
            self._trace_table = table
        return table[x]

    # -- internal table construction ---------------------------------------------

    def build_log_tables(self) -> None:
        """Construct discrete-log tables over a scanned generator (idempotent)."""
        if self._exp is not None:
            return
        m = self.size - 1
        if m == 1:
            self._exp = [1]
            self._log = [0, 0]
            return
        primes = prime_factors(m)
        gen = None
        for cand in range(2, self.size):
            ok = True
            for r in primes:
                if self._pow_vec(cand, m // r) == 1:
                    ok = False
                    break
            if ok:
                gen = cand
                break
        assert gen is not None, "the multiplicative group is cyclic"
        exp = [1] * m
        log = [0] * self.size
        acc = 1
        for i in range(m):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_vec(acc, gen)
        self._exp = exp
        self._log = log

    def _pow_vec(self, x: int, e: int) -> int:
        result = 1
        base = x
        while e:
            if e & 1:
                result = self._mul_vec(result, base)
            base = self._mul_vec(base, base)
            e >>= 1
        return result

    # -- identity -------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, FieldTower)
            and self.base == other.base
            and self.top_modulus.coeffs == other.top_modulus.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.base, self.top_modulus.coeffs))

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, s={self.s}, n={self.n})"


class FFElement:
    """An element of F_{q^n}, bound to its tower.

    Supports field arithmetic through operators; ints in [0, q) mix in as
    embedded F_q scalars.  Instances are immutable, hashable, and compare
    equal exactly when their tower parameters and coordinates agree.
    """

    __slots__ = ("tower", "value")

    def __init__(self, tower: FieldTower, value: int):
        if not 0 <= value < tower.size:
            raise ValueError(f"value {value} outside [0, {tower.size})")
        self.tower = tower
        self.value = value

    @property
    def coords(self) -> tuple[tuple[int, ...], ...]:
        return self.tower.coords(self.value)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def _coerce(self, other) -> int:
        if isinstance(other, FFElement):
            if other.tower != self.tower:
                raise FieldMismatchError("elements of different towers")
            return other.value
        if isinstance(other, int):
            if not 0 <= other < self.tower.q:
                raise ValueError(f"scalar {other} outside the embedded base field")
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FFElement(self.tower, self.tower.add_i(self.value, v))

    __radd__ = __add__

    def __neg__(self):
        return FFElement(self.tower, self.tower.neg_i(self.value))

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FFElement(self.tower, self.tower.sub_i(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FFElement(self.tower, self.tower.sub_i(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FFElement(self.tower, self.tower.mul_i(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FFElement(self.tower, self.tower.mul_i(self.value, self.tower.inv_i(v)))

    def __pow__(self, e: int):
        return FFElement(self.tower, self.tower.pow_i(self.value, e))

    def frobenius(self, k: int = 1) -> "FFElement":
        return FFElement(self.tower, self.tower.frob_i(self.value, k))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FFElement)
            and self.value == other.value
            and self.tower == other.tower
        )

    def __hash__(self) -> int:
        return hash((self.tower.p, self.tower.s, self.tower.n, self.value))

    def __str__(self) -> str:
        return element_tokens(self)

    def __repr__(self) -> str:
        t = self.tower
        return f"FFElement(p={t.p}, s={t.s}, n={t.n}, '{element_tokens(self)}')"


# -- module-level operations ------------------------------------------------


def build_tower(
    p: int, s: int, n: int, *, size_bound: int = DEFAULT_SIZE_BOUND
) -> FieldTower:
    """Construct (or fetch the cached) canonical tower F_p < F_{p^s} < F_{p^(s*n)}.

    Deterministic across runs: both moduli are the lexicographically
    smallest monic irreducibles of their degree.
    """
    if not is_prime(p):
        raise NonPrimeError(f"{p} is not prime")
    if s < 1 or n < 1:
        raise ValueError("s and n must be positive")
    if p ** (s * n) > size_bound:
        raise SizeExceededError(
            f"field with {p}^{s * n} elements exceeds the size bound {size_bound}"
        )
    return _tower_cached(p, s, n)


@lru_cache(maxsize=None)
def _tower_cached(p: int, s: int, n: int) -> FieldTower:
    base = base_field(p, s)
    tower = FieldTower(base, smallest_irreducible(base, n))
    if tower.size <= _EXP_LOG_BOUND:
        tower.build_log_tables()
    return tower


def frobenius(x: FFElement, k: int = 1) -> FFElement:
    """x^(q^k); the identity for k = 0 and for k = n."""
    return x.frobenius(k)


def trace_to_prime(x: FFElement) -> int:
    """The F_p-trace of x, as an integer residue in [0, p)."""
    return x.tower.trace_i(x.value)


def embed_base(c: int, tower: FieldTower) -> FFElement:
    """The image of the F_q coefficient c under the inclusion F_q < F_{q^n}."""
    if not 0 <= c < tower.q:
        raise ValueError(f"coefficient {c} outside [0, {tower.q})")
    return FFElement(tower, c)


def enumerate_elements(
    tower: FieldTower, *, size_bound: int = DEFAULT_SIZE_BOUND
) -> Iterator[FFElement]:
    """All q^n elements, each exactly once, in lexicographic coordinate order."""
    if tower.size > size_bound:
        raise SizeExceededError(
            f"enumerating {tower.size} elements exceeds the size bound {size_bound}"
        )
    return (FFElement(tower, v) for v in tower.enumerate_values())


# -- element text format ---------------------------------------------------
#
# Same grammar as the polynomial format: comma-separated F_q coefficient
# tokens, constant (u^0) coordinate first.  Rendering always emits all n
# tokens; parsing accepts 1..n tokens and pads with zeros.


def parse_element(tower: FieldTower, text: str) -> FFElement:
    tokens = [t.strip() for t in text.split(",")]
    if not tokens or any(not t for t in tokens) or len(tokens) > tower.n:
        raise ParseError(f"malformed element text {text!r} for n={tower.n}")
    try:
        vec = [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"malformed element text {text!r}") from exc
    for c in vec:
        if not 0 <= c < tower.q:
            raise ParseError(f"coefficient {c} outside [0, {tower.q})")
    vec.extend([0] * (tower.n - len(vec)))
    return FFElement(tower, tower.from_coeff_vec(vec))


def element_tokens(x: FFElement) -> str:
    return ",".join(str(c) for c in x.tower.coeff_vec(x.value))
