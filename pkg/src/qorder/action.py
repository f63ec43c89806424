"""The F_q[x]-module action on F_{q^n} and the orders it induces.

A polynomial g = sum a_i x^i acts on an element by g . x = sum a_i x^(q^i),
an F_q-linear map (the linearized form of g).  The annihilator of any x is
an ideal containing x^n - 1; its monic generator is the element's order,
and the elements of maximal order x^n - 1 are exactly the normal ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DegreeTooLargeError,
    FieldMismatchError,
    NotMonicError,
    ZeroConstantTermError,
)
from .fields import FFElement, FieldTower
from .poly import FactoredPoly, FqPoly, _divisor_from_exponents


def _check_coeff_field(g: FqPoly, tower: FieldTower) -> None:
    if g.field != tower.base:
        raise FieldMismatchError("polynomial is not over the tower's base field")


def _apply_i(tower: FieldTower, coeffs: tuple[int, ...], xv: int) -> int:
    """Integer-encoded action: sum of a_i * x^(q^i)."""
    acc = 0
    for i, a in enumerate(coeffs):
        if a:
            acc = tower.add_i(acc, tower.mul_i(a, tower.frob_i(xv, i)))
    return acc


def apply_action(g: FqPoly, x: FFElement) -> FFElement:
    """g . x = sum a_i x^(q^i), with coefficients embedded from F_q."""
    tower = x.tower
    _check_coeff_field(g, tower)
    return FFElement(tower, _apply_i(tower, g.coeffs, x.value))


def linearized_eval(g: FqPoly, x: FFElement) -> FFElement:
    """Evaluate the linearized polynomial of a monic g at x.

    For g = x^m + sum_{i<m} a_i x^i this is x^(q^m) + sum a_i x^(q^i),
    the same F_q-linear map as apply_action(g, x).
    """
    if not g.is_monic:
        raise NotMonicError("linearized evaluation requires a monic polynomial")
    tower = x.tower
    _check_coeff_field(g, tower)
    acc = tower.frob_i(x.value, g.degree)
    for i, a in enumerate(g.coeffs[:-1]):
        if a:
            acc = tower.add_i(acc, tower.mul_i(a, tower.frob_i(x.value, i)))
    return FFElement(tower, acc)


def adjoint_action(g: FqPoly, x: FFElement) -> FFElement:
    """The trace-adjoint of the action: sum_{t<=m} a_t * x^(q^(n-t)).

    Requires g monic with g(0) != 0 and deg g < n.  Two identities pin it
    down: Tr(a * (g . x)) = Tr(adjoint_action(g, a) * x) for all x, and
    adjoint_action(g, x)^(q^deg g) = g(0) * (monic_reciprocal(g) . x).
    """
    tower = x.tower
    _check_coeff_field(g, tower)
    if not g.is_monic:
        raise NotMonicError("adjoint action requires a monic polynomial")
    if g.coeffs[0] == 0:
        raise ZeroConstantTermError("adjoint action requires a nonzero constant term")
    n = tower.n
    if g.degree >= n:
        raise DegreeTooLargeError(f"degree {g.degree} must be below n={n}")
    acc = 0
    for t, a in enumerate(g.coeffs):
        if a:
            acc = tower.add_i(acc, tower.mul_i(a, tower.frob_i(x.value, (n - t) % n)))
    return FFElement(tower, acc)


def fq_order(x: FFElement, fp: FactoredPoly) -> FqPoly:
    """The monic polynomial of least degree annihilating x under the action.

    fp must be the factorization of x^n - 1 for the element's tower.  Starting
    from the full product, each irreducible factor is stripped while the
    quotient still annihilates x; the result is the unique monic divisor m
    with m . x = 0 and (m/P) . x != 0 for every irreducible P | m.
    """
    tower = x.tower
    _check_coeff_field(fp.expand(), tower)
    xv = x.value
    exps = [e for _, e in fp.factors]
    for idx in range(len(exps)):
        while exps[idx] > 0:
            exps[idx] -= 1
            cand = _divisor_from_exponents(fp, tuple(exps))
            if _apply_i(tower, cand.coeffs, xv) != 0:
                exps[idx] += 1
                break
    return _divisor_from_exponents(fp, tuple(exps))


def is_normal(x: FFElement, fp: FactoredPoly) -> bool:
    """True iff the order of x is the full x^n - 1.

    Equivalently, the conjugates x, x^q, ..., x^(q^(n-1)) form an F_q-basis.
    """
    return fq_order(x, fp) == fp.expand()


@dataclass(frozen=True)
class OrderRecord:
    """An element together with its computed order data."""

    element: FFElement
    order: FqPoly
    is_normal: bool


def order_record(x: FFElement, fp: FactoredPoly) -> OrderRecord:
    m = fq_order(x, fp)
    return OrderRecord(element=x, order=m, is_normal=m == fp.expand())
