"""Set-level results: order partitions, coincidence checks, and existence sweeps.

This module sweeps whole fields: it partitions elements and characters by
their orders, verifies that the two order notions coincide exactly on the
self-reciprocal orders, decides the Meyn criterion for a given (q, n), and
locates primitive normal elements by exhaustive lexicographic search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .action import fq_order
from .characters import AdditiveCharacter, char_order_bruteforce
from .errors import PrimitiveNormalNotFoundError, SizeExceededError, ZeroElementError
from .fields import DEFAULT_SIZE_BOUND, FFElement, FieldTower, base_field
from .integers import factorize, prime_factors, prime_power_decomposition
from .poly import (
    FactoredPoly,
    FqPoly,
    divisor_phi_table,
    divisors_of_xn_minus_1,
    factor_xn_minus_1,
    is_self_reciprocal,
    monic_reciprocal,
)

#: The standard desk-scale sweep: every (p, s, n) verified by the test suite
#: and by the CLI's --grid mode.
VERIFICATION_GRID: tuple[tuple[int, int, int], ...] = tuple(
    (p, s, n)
    for p, s, n_max in (
        (2, 1, 10),
        (3, 1, 6),
        (2, 2, 5),
        (5, 1, 4),
        (7, 1, 3),
        (2, 3, 3),
        (3, 2, 3),
    )
    for n in range(1, n_max + 1)
)

#: Prime powers and extension-degree range swept by the Meyn-criterion check.
MEYN_SWEEP_PRIME_POWERS: tuple[int, ...] = (2, 3, 4, 5, 7, 8, 9)
MEYN_SWEEP_MAX_N: int = 20


def _check_size(tower: FieldTower, size_bound: int) -> None:
    if tower.size > size_bound:
        raise SizeExceededError(
            f"sweeping {tower.size} elements exceeds the size bound {size_bound}"
        )


def elements_by_order(
    tower: FieldTower,
    fp: FactoredPoly,
    *,
    size_bound: int = DEFAULT_SIZE_BOUND,
) -> dict[FqPoly, set[FFElement]]:
    """Partition of F_{q^n} by element order, keyed by every monic divisor.

    Every divisor of x^n - 1 is realized, by phi_q(f) > 0 elements each.
    """
    _check_size(tower, size_bound)
    partition: dict[FqPoly, set[FFElement]] = {
        f: set() for f in divisors_of_xn_minus_1(fp)
    }
    for v in range(tower.size):
        x = FFElement(tower, v)
        partition[fq_order(x, fp)].add(x)
    return partition


def characters_by_order(
    tower: FieldTower,
    fp: FactoredPoly,
    *,
    mode: str = "fast",
    check: str = "basis",
    size_bound: int = DEFAULT_SIZE_BOUND,
) -> dict[FqPoly, set[AdditiveCharacter]]:
    """Partition of all q^n additive characters by character order.

    mode="oracle" computes each order by the definitional divisor scan;
    mode="fast" uses the reciprocal relation and groups the labels whose
    element order is the reciprocal of the requested divisor.
    """
    if mode not in ("oracle", "fast"):
        raise ValueError("mode must be 'oracle' or 'fast'")
    _check_size(tower, size_bound)
    if mode == "fast":
        by_element = elements_by_order(tower, fp, size_bound=size_bound)
        return {
            f: {AdditiveCharacter(a) for a in by_element[monic_reciprocal(f)]}
            for f in divisors_of_xn_minus_1(fp)
        }
    partition: dict[FqPoly, set[AdditiveCharacter]] = {
        f: set() for f in divisors_of_xn_minus_1(fp)
    }
    for v in range(tower.size):
        chi = AdditiveCharacter(FFElement(tower, v))
        partition[char_order_bruteforce(chi, fp, check=check)].add(chi)
    return partition


@dataclass(frozen=True)
class CoincidenceCheck:
    """Aggregate verdict of the order-coincidence biconditional.

    holds is True when, for every element, its order equals its character's
    order exactly when that order is self-reciprocal.  The first violating
    (element, element_order, character_order) triple is kept for debugging.
    """

    holds: bool
    counterexample: Optional[tuple[FFElement, FqPoly, FqPoly]]

    def __bool__(self) -> bool:
        return self.holds


def orders_coincide_iff_self_reciprocal(
    tower: FieldTower,
    fp: FactoredPoly,
    *,
    check: str = "basis",
    size_bound: int = DEFAULT_SIZE_BOUND,
) -> CoincidenceCheck:
    """Check that order coincidence happens exactly on self-reciprocal orders.

    The character order is computed by the definitional scan so the check
    does not assume the reciprocal relation it is probing.
    """
    _check_size(tower, size_bound)
    for v in range(tower.size):
        x = FFElement(tower, v)
        m = fq_order(x, fp)
        char_order = char_order_bruteforce(AdditiveCharacter(x), fp, check=check)
        if (char_order == m) != is_self_reciprocal(m):
            return CoincidenceCheck(holds=False, counterexample=(x, m, char_order))
    return CoincidenceCheck(holds=True, counterexample=None)


@dataclass(frozen=True)
class ReciprocalOrderSweep:
    """Per-field comparison of the two character-order routes.

    For each element a, the definitional (divisor scan) order of the
    character labeled a is compared against the monic reciprocal of the
    element order of a.
    """

    p: int
    s: int
    n: int
    total: int
    mismatches: tuple[tuple[FFElement, FqPoly, FqPoly], ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def reciprocal_order_sweep(
    tower: FieldTower,
    fp: FactoredPoly,
    *,
    check: str = "basis",
    size_bound: int = DEFAULT_SIZE_BOUND,
) -> ReciprocalOrderSweep:
    _check_size(tower, size_bound)
    mismatches = []
    for v in range(tower.size):
        x = FFElement(tower, v)
        scanned = char_order_bruteforce(AdditiveCharacter(x), fp, check=check)
        reversed_order = monic_reciprocal(fq_order(x, fp))
        if scanned != reversed_order:
            mismatches.append((x, scanned, reversed_order))
    return ReciprocalOrderSweep(
        p=tower.p,
        s=tower.s,
        n=tower.n,
        total=tower.size,
        mismatches=tuple(mismatches),
    )


@dataclass(frozen=True)
class MeynVerdict:
    """Both sides of the Meyn criterion for one (q, n).

    With n = p^u * v and gcd(v, p) = 1: criterion_holds records whether
    q^j = -1 (mod v) for some 1 <= j <= v (witness_j is the least such j),
    and all_divisors_self_reciprocal records whether every monic
    irreducible factor of x^n - 1 is self-reciprocal.  The two agree.
    """

    q: int
    n: int
    u: int
    v: int
    criterion_holds: bool
    witness_j: Optional[int]
    all_divisors_self_reciprocal: bool

    @property
    def consistent(self) -> bool:
        return self.criterion_holds == self.all_divisors_self_reciprocal


def meyn_criterion(q: int, n: int, *, seed: int = 0) -> MeynVerdict:
    """Decide whether every monic divisor of x^n - 1 over F_q is self-reciprocal.

    Both routes are computed independently: the modular search for
    q^j = -1 (mod v), and a factorization scan of x^n - 1.  For v = 1 the
    search succeeds at j = 1 since everything is 0 mod 1, matching the
    factorization side where (x - 1)^(p^u) has only self-reciprocal
    divisors.
    """
    if n < 1:
        raise ValueError("n must be positive")
    p, s = prime_power_decomposition(q)
    u, v = 0, n
    while v % p == 0:
        v //= p
        u += 1
    witness = None
    for j in range(1, v + 1):
        if pow(q, j, v) == (v - 1) % v:
            witness = j
            break
    fp = factor_xn_minus_1(n, base_field(p, s), seed)
    all_sr = all(is_self_reciprocal(g) for g, _ in fp.factors)
    return MeynVerdict(
        q=q,
        n=n,
        u=u,
        v=v,
        criterion_holds=witness is not None,
        witness_j=witness,
        all_divisors_self_reciprocal=all_sr,
    )


def multiplicative_order(x: FFElement) -> int:
    """The least k >= 1 with x^k = 1, for nonzero x."""
    if x.is_zero:
        raise ZeroElementError("the zero element has no multiplicative order")
    tower = x.tower
    order = tower.size - 1
    for r, _ in factorize(order):
        while order % r == 0 and tower.pow_i(x.value, order // r) == 1:
            order //= r
    return order


def is_primitive(x: FFElement) -> bool:
    """True iff x generates the multiplicative group."""
    if x.is_zero:
        return False
    tower = x.tower
    group = tower.size - 1
    return all(tower.pow_i(x.value, group // r) != 1 for r in prime_factors(group))


def find_primitive_normal(
    tower: FieldTower,
    fp: FactoredPoly,
    *,
    size_bound: int = DEFAULT_SIZE_BOUND,
) -> FFElement:
    """The lexicographically first element that is both primitive and normal.

    Existence is guaranteed for every finite extension; exhausting the
    field without a hit is therefore a loud arithmetic failure, not a
    normal outcome.
    """
    _check_size(tower, size_bound)
    full = fp.expand()
    group = tower.size - 1
    primes = prime_factors(group)
    for v in tower.enumerate_values():
        if v == 0:
            continue
        if any(tower.pow_i(v, group // r) == 1 for r in primes):
            continue
        x = FFElement(tower, v)
        if fq_order(x, fp) == full:
            return x
    raise PrimitiveNormalNotFoundError(
        f"no primitive normal element in F_{tower.q}^{tower.n}; arithmetic is broken"
    )


@dataclass(frozen=True)
class ClassificationRow:
    """Per-divisor row of a field classification."""

    divisor: FqPoly
    element_count: int
    phi: int
    char_count: int
    reciprocal: FqPoly
    self_reciprocal: bool

    @property
    def count_matches_phi(self) -> bool:
        return self.element_count == self.phi


@dataclass(frozen=True)
class ClassificationReport:
    """Full per-divisor classification of one field."""

    p: int
    s: int
    n: int
    rows: tuple[ClassificationRow, ...]


def classification_report(
    tower: FieldTower,
    fp: FactoredPoly,
    *,
    check: str = "basis",
    mode: str = "oracle",
    size_bound: int = DEFAULT_SIZE_BOUND,
) -> ClassificationReport:
    """Classify every divisor of x^n - 1: element counts, phi_q, character counts.

    By default character counts come from the definitional (oracle) order
    scan so the report stays independent of the reciprocal fast path;
    mode="fast" trades that independence for speed on large fields.
    """
    by_element = elements_by_order(tower, fp, size_bound=size_bound)
    by_char = characters_by_order(
        tower, fp, mode=mode, check=check, size_bound=size_bound
    )
    rows = []
    for f, phi in divisor_phi_table(fp):
        rows.append(
            ClassificationRow(
                divisor=f,
                element_count=len(by_element[f]),
                phi=phi,
                char_count=len(by_char[f]),
                reciprocal=monic_reciprocal(f),
                self_reciprocal=is_self_reciprocal(f),
            )
        )
    return ClassificationReport(p=tower.p, s=tower.s, n=tower.n, rows=tuple(rows))
