"""Dual Littlewood specialisations and the Pochhammer evaluation at k = -1."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Optional, Union

from .dets import DetRoute, a_nk_via_det, matrix_djt
from .partitions import k_asymmetric_in_box
from .ring import ONE, LaurentPoly, evaluate, poly_det, poly_substitute, poly_sum
from .schur import schur_via_ssyt
from .tableaux import gf_tableaux

Value = Union[LaurentPoly, Fraction, int]

ASSERTED = "asserted"
INFORMATIONAL = "informational"


@dataclass
class CheckReport:
    name: str
    lhs: Value
    rhs: Value
    mid: Optional[Value] = None
    parameters: Dict[str, object] = field(default_factory=dict)
    status: str = ASSERTED

    @property
    def equal(self) -> bool:
        if self.lhs != self.rhs:
            return False
        return self.mid is None or self.mid == self.lhs

    @property
    def passed(self) -> bool:
        """Informational checks never fail."""
        return self.equal or self.status == INFORMATIONAL


def _x(i: int) -> LaurentPoly:
    return LaurentPoly.x(i)


def _prod(factors) -> LaurentPoly:
    out = ONE
    for f in factors:
        out = out * f
    return out


def _spec(poly: LaurentPoly, r=1, u=1, v=1, w=0) -> LaurentPoly:
    return poly_substitute(poly, {"r": r, "u": u, "v": v, "w": w})


def _pairs(n: int):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def littlewood_plus(n: int) -> CheckReport:
    """``A_{n,1}(x1..xn; 1,1,1,0)`` against the 1-asymmetric sum and product."""
    if n < 1:
        raise ValueError("n must be at least 1")
    lhs = ONE if n == 1 else _spec(gf_tableaux(n - 1, 1))
    mid = poly_sum(schur_via_ssyt(lam, n) for lam in k_asymmetric_in_box(n - 1, 1)) if n > 1 else ONE
    rhs = _prod(ONE + _x(i) * _x(j) for i, j in _pairs(n))
    return CheckReport("littlewood_plus", lhs, rhs, mid, {"n": n})


def littlewood_signed(n: int) -> CheckReport:
    """``A_{n+1,0}(x1..xn; 1,-1,1,0)`` against the signed self-conjugate sum."""
    if n < 1:
        raise ValueError("n must be at least 1")
    lhs = _spec(gf_tableaux(n, 0), u=-1)
    mid = poly_sum(
        schur_via_ssyt(lam, n) * (-1) ** ((lam.size + lam.durfee) // 2) for lam in k_asymmetric_in_box(n, 0)
    )
    rhs = _prod(ONE - _x(i) for i in range(1, n + 1)) * _prod(ONE - _x(i) * _x(j) for i, j in _pairs(n))
    return CheckReport("littlewood_signed", lhs, rhs, mid, {"n": n})


def littlewood_square(n: int) -> CheckReport:
    """Half of ``A_{n+2,-1}(x1..xn; 1,1,1,0)`` against the (-1)-asymmetric sum.

    The tableau route is the asserted left side; the determinant route is
    compared as well; if it disagrees it replaces ``mid`` so the report
    shows the failure.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    tab = _spec(gf_tableaux(n + 1, -1))
    det = _spec(a_nk_via_det(DetRoute.DJT, n + 1, -1, n))
    lhs = _halve(tab)
    shapes = poly_sum(schur_via_ssyt(lam, n) for lam in k_asymmetric_in_box(n + 1, -1))
    rhs = _prod(ONE + _x(i) * _x(i) for i in range(1, n + 1)) * _prod(ONE + _x(i) * _x(j) for i, j in _pairs(n))
    report = CheckReport("littlewood_square", lhs, rhs, shapes, {"n": n, "det_agrees": det == tab})
    if det != tab:
        report.mid = det if any(c % 2 for c in det.terms.values()) else _halve(det)
    return report


def _halve(p: LaurentPoly) -> LaurentPoly:
    if any(c % 2 for c in p.terms.values()):
        raise ArithmeticError("polynomial is not divisible by 2")
    return LaurentPoly({m: c // 2 for m, c in p.terms.items()})


def littlewood_u_minus_one(n: int) -> CheckReport:
    """``A_{n,1}(x1..xn; 1,-1,1,0)`` against the product of ``1 - xi xj``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    lhs = ONE if n == 1 else _spec(gf_tableaux(n - 1, 1), u=-1)
    rhs = _prod(ONE - _x(i) * _x(j) for i, j in _pairs(n))
    return CheckReport("littlewood_u_minus_one", lhs, rhs, None, {"n": n})


def littlewood_square_u_minus_one(n: int) -> CheckReport:
    """Exploratory: the (n,-1) case at ``u = -1``; direct substitution gives 0."""
    lhs = _spec(gf_tableaux(n + 1, -1), u=-1)
    rhs = _prod(ONE - _x(i) * _x(j) for i in range(1, n + 1) for j in range(i, n + 1))
    return CheckReport("littlewood_square_u_minus_one", lhs, rhs, None, {"n": n}, INFORMATIONAL)


# Pochhammer evaluation --------------------------------------------------------


def rising(x: Fraction, m: int) -> Fraction:
    """Pochhammer ``(x)_m``, taken as 1 for ``m <= 0``."""
    out = Fraction(1)
    for t in range(m):
        out *= x + t
    return out


def pochhammer_rhs(n: int) -> Fraction:
    if n < 2:
        raise ValueError("n must be at least 2")
    total = Fraction(2) ** ((n + 1) // 2 * ((n + 2) // 2) - n // 2)
    for i in range(1, (n + 1) // 2 + 1):
        total *= Fraction(factorial(i - 1), factorial(n - i))
    half = Fraction(1, 2)
    i = 0
    while True:
        idx = ((n - 4 * i - 1) // 2, (n - 4 * i - 2) // 2, (n - 4 * i) // 2, (n - 4 * i - 3) // 2)
        if all(m < 0 for m in idx):
            break
        total *= rising(Fraction(3 * i + 1), idx[0])
        total *= rising(Fraction(3 * i + 1), idx[1])
        total *= rising(2 * (n // 2) - i - half, idx[2])
        total *= rising(2 * ((n - 1) // 2) - i + half, idx[3])
        i += 1
    return total


def pochhammer_lhs(n: int, order: int | None = None) -> Fraction:
    """``A_{n,-1}`` by the dual Jacobi-Trudi route, evaluated with ``n-1`` ones.

    ``order`` is the matrix order (default ``n - 1``).  Entries are
    specialised before the determinant is taken, which is the same as
    specialising afterwards since substitution is a ring homomorphism.
    """
    order = n - 1 if order is None else order
    N = n - 1
    bindings = {"r": 1, "u": 1, "v": 1, "w": -1}
    bindings.update({f"x{i}": 1 for i in range(1, N + 1)})
    if order == 0:
        return Fraction(1)
    matrix = matrix_djt(order, -1, N)
    numeric = [[LaurentPoly.const(int(evaluate(e, bindings))) for e in row] for row in matrix]
    return Fraction(poly_det(numeric).constant_term())


def pochhammer_check(n: int, shifted: bool = False) -> CheckReport:
    """Compare the k = -1 evaluation with the Pochhammer product.

    Only ``n = 3`` is asserted; it is the case with a hand-checked value.
    Other ``n`` are recorded as informational because the display can be
    read with two different matrix orders (``shifted`` picks order ``n``).
    """
    order = n if shifted else n - 1
    status = ASSERTED if (n == 3 and not shifted) else INFORMATIONAL
    name = "pochhammer_shifted" if shifted else "pochhammer"
    return CheckReport(name, pochhammer_lhs(n, order), pochhammer_rhs(n), None, {"n": n, "order": order}, status)
