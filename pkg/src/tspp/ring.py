"""Sparse Laurent polynomials with integer coefficients.

Variables are ``r, u, v, w`` followed by ``x1, x2, ...``.  A monomial is a
dense exponent tuple in that order with trailing zeros stripped, so the unit
monomial is ``()``.  Negative exponents are only legal on ``u`` and ``w``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

Monomial = Tuple[int, ...]

PARAMS = ("r", "u", "v", "w")
_LAURENT_SLOTS = (1, 3)  # u, w
_NAME_RE = re.compile(r"^(?:([ruvw])|x([1-9][0-9]*))$")


class ZeroToNegativePower(ZeroDivisionError):
    """A variable carrying a negative exponent was bound to zero."""


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def var_index(name: str) -> int:
    """Slot of a variable name in the exponent tuple."""
    m = _NAME_RE.match(name)
    if m is None:
        raise ValueError(f"unknown variable {name!r}")
    if m.group(1):
        return PARAMS.index(m.group(1))
    return 3 + int(m.group(2))


def var_name(index: int) -> str:
    return PARAMS[index] if index < 4 else f"x{index - 3}"


def _strip(exps) -> Monomial:
    n = len(exps)
    while n and exps[n - 1] == 0:
        n -= 1
    return tuple(exps[:n])


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, e in enumerate(b):
        out[i] += e
    if len(b) == len(a):
        return _strip(out)
    return tuple(out)


def _check_monomial(m: Monomial) -> None:
    for i, e in enumerate(m):
        if e < 0 and i not in _LAURENT_SLOTS:
            raise ValueError(f"negative exponent on {var_name(i)} is not allowed")


class LaurentPoly:
    """Immutable sparse polynomial, Laurent in ``u`` and ``w``.

    Equal polynomials have identical term maps, so ``==`` and ``hash`` are
    structural.  Comparison against plain integers and fractions treats them
    as constants.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None):
        clean: Dict[Monomial, int] = {}
        if terms:
            for mono, c in terms.items():
                if not isinstance(c, int):
                    raise TypeError("coefficients must be integers")
                m = _strip(tuple(mono))
                _check_monomial(m)
                c = clean.get(m, 0) + c
                if c:
                    clean[m] = c
                else:
                    clean.pop(m, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, int]) -> "LaurentPoly":
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # constructors ---------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "LaurentPoly":
        i = var_index(name)
        m = [0] * (i + 1)
        m[i] = exp
        m = _strip(m)
        _check_monomial(m)
        return cls._raw({m: 1})

    @classmethod
    def x(cls, i: int, exp: int = 1) -> "LaurentPoly":
        return cls.var(f"x{i}", exp)

    @classmethod
    def monomial(cls, coeff: int = 1, **exps: int) -> "LaurentPoly":
        """``LaurentPoly.monomial(2, u=-1, w=1)`` is ``2*u^-1*w``."""
        if not coeff:
            return ZERO
        slots: Dict[int, int] = {var_index(k): e for k, e in exps.items() if e}
        m = [0] * (max(slots, default=-1) + 1)
        for i, e in slots.items():
            m[i] = e
        m = tuple(m)
        _check_monomial(m)
        return cls._raw({m: coeff})

    @classmethod
    def from_exponents(cls, exps: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        return cls({tuple(exps): coeff})

    # inspection -----------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {()}

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def nslots(self) -> int:
        return max((len(m) for m in self._terms), default=0)

    def variables(self) -> Tuple[str, ...]:
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return tuple(var_name(i) for i in sorted(used))

    def num_x(self) -> int:
        """Largest x index that occurs, 0 if none."""
        return max(self.nslots() - 4, 0)

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        for m, c in small.items():
            c = out.get(m, 0) + c
            if c:
                out[m] = c
            else:
                del out[m]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Monomial, int] = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = _mono_mul(ma, mb)
                out[m] = get(m, 0) + ca * cb
        return LaurentPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_monomial():
                raise ValueError("only monomials can be inverted")
            ((m, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            inv = tuple(-x for x in m)
            _check_monomial(inv)
            return LaurentPoly._raw({inv: c}) ** (-e)
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, Rational):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({canonical_string(self)!r})"

    def __str__(self):
        return canonical_string(self)

    # specialisation -------------------------------------------------------

    def substitute(self, bindings):
        return poly_substitute(self, bindings)


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({(): 1})

Scalar = Union[int, Fraction]
Binding = Union[Scalar, LaurentPoly]


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def poly_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    acc: Dict[Monomial, int] = {}
    for p in polys:
        for m, c in p._terms.items():
            acc[m] = acc.get(m, 0) + c
    return LaurentPoly._raw({m: c for m, c in acc.items() if c})


def poly_det(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Determinant by cofactor expansion along rows, memoised on column sets.

    Division-free, so it is exact over the integer Laurent ring.  The empty
    matrix has determinant 1.
    """
    n = len(matrix)
    rows = [list(r) for r in matrix]
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    rows = [[LaurentPoly._coerce(e) for e in r] for r in rows]
    memo: Dict[int, LaurentPoly] = {}

    def minor(row: int, cols: int) -> LaurentPoly:
        # cols: bitmask of the n - row columns still available
        if row == n:
            return ONE
        hit = memo.get(cols)
        if hit is not None:
            return hit
        parts = []
        sign = 1
        for j in range(n):
            if not cols >> j & 1:
                continue
            entry = rows[row][j]
            if entry:
                sub = minor(row + 1, cols & ~(1 << j))
                if sub:
                    term = entry * sub
                    parts.append(term if sign > 0 else -term)
            sign = -sign
        result = poly_sum(parts)
        memo[cols] = result
        return result

    return minor(0, (1 << n) - 1)


def matmul(a: Sequence[Sequence[LaurentPoly]], b: Sequence[Sequence[LaurentPoly]]):
    inner = len(b)
    if any(len(row) != inner for row in a):
        raise ValueError("shape mismatch")
    cols = len(b[0]) if inner else 0
    return [
        [poly_sum(a[i][t] * b[t][j] for t in range(inner) if a[i][t] and b[t][j]) for j in range(cols)]
        for i in range(len(a))
    ]


# substitution ---------------------------------------------------------------


def poly_substitute(p: LaurentPoly, bindings: Mapping[str, Binding]):
    """Apply the ring homomorphism sending each bound variable to its value.

    Values may be integers, fractions or polynomials.  The result is a
    ``LaurentPoly`` when all coefficients stay integral and a ``Fraction``
    when the result is a non-integral constant.
    """
    slots = {var_index(name): val for name, val in bindings.items()}
    acc: Dict[Monomial, Fraction] = {}
    power_cache: Dict[Tuple[int, int], object] = {}

    def power(i: int, e: int):
        key = (i, e)
        if key not in power_cache:
            val = slots[i]
            if isinstance(val, LaurentPoly):
                power_cache[key] = val ** e
            else:
                val = Fraction(val)
                if val == 0 and e < 0:
                    raise ZeroToNegativePower(f"{var_name(i)} bound to 0 under exponent {e}")
                power_cache[key] = val ** e
        return power_cache[key]

    for mono, c in p._terms.items():
        coeff = Fraction(c)
        rest = list(mono)
        polys = []
        for i, e in enumerate(mono):
            if e and i in slots:
                rest[i] = 0
                val = power(i, e)
                if isinstance(val, LaurentPoly):
                    polys.append(val)
                else:
                    coeff *= val
        if not coeff:
            # a zero scalar factor kills the term, but negative powers of zero
            # must still raise, which power() has already done
            continue
        factor = {_strip(rest): coeff}
        for q in polys:
            nxt: Dict[Monomial, Fraction] = {}
            for m1, c1 in factor.items():
                for m2, c2 in q._terms.items():
                    m = _mono_mul(m1, m2)
                    nxt[m] = nxt.get(m, 0) + c1 * c2
            factor = nxt
        for m, cc in factor.items():
            acc[m] = acc.get(m, 0) + cc

    acc = {m: c for m, c in acc.items() if c}
    if all(c.denominator == 1 for c in acc.values()):
        return LaurentPoly({m: int(c) for m, c in acc.items()})
    if set(acc) == {()}:
        return acc[()]
    raise ValueError("substitution produced non-integral coefficients")


def evaluate(p: LaurentPoly, bindings: Mapping[str, Scalar]) -> Fraction:
    """Fully numeric evaluation; every occurring variable must be bound."""
    missing = set(p.variables()) - set(bindings)
    if missing:
        raise ValueError(f"unbound variables: {sorted(missing)}")
    value = poly_substitute(p, bindings)
    if isinstance(value, LaurentPoly):
        return Fraction(value.constant_term())
    return value


def rename_x(p: LaurentPoly, perm: Mapping[int, int]) -> LaurentPoly:
    """Permute x variables: ``perm[i] = j`` sends ``x_i`` to ``x_j``."""
    out: Dict[Monomial, int] = {}
    for m, c in p._terms.items():
        new = list(m[:4]) + [0] * max(0, 4 - len(m))
        xs = m[4:]
        for t, e in enumerate(xs, start=1):
            if e:
                j = perm.get(t, t)
                while len(new) < j + 4:
                    new.append(0)
                new[j + 3] += e
        key = _strip(new)
        out[key] = out.get(key, 0) + c
    return LaurentPoly._raw({m: c for m, c in out.items() if c})


# canonical text -------------------------------------------------------------


def _order_key(mono: Monomial, width: int):
    # graded by x-degree, then lexicographic with the highest variable
    # (x_N, ..., x1, w, v, u, r) most significant
    padded = mono + (0,) * (width - len(mono))
    return (sum(mono[4:]), padded[::-1])


def _format_monomial(mono: Monomial) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(var_name(i))
        elif e:
            parts.append(f"{var_name(i)}^{e}")
    return "*".join(parts)


def sorted_terms(p: LaurentPoly):
    width = p.nslots()
    return sorted(p._terms.items(), key=lambda t: _order_key(t[0], width))


def canonical_string(p: LaurentPoly) -> str:
    if not p:
        return "0"
    out = []
    for idx, (mono, c) in enumerate(sorted_terms(p)):
        body = _format_monomial(mono)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if idx == 0:
            out.append(text if c > 0 else "-" + text)
        else:
            out.append((" + " if c > 0 else " - ") + text)
    return "".join(out)


poly_canonical_string = canonical_string


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([a-z][a-z0-9]*)|(\^)|(\*)|(\+)|(-))")


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of :func:`canonical_string`; also accepts any sum of products."""
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastindex
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append((0, "", len(text)))

    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def factor():
        kind, val, at = take()
        if kind == 1:
            return LaurentPoly.const(int(val))
        if kind == 2:
            try:
                idx = var_index(val)
            except ValueError:
                raise ParseError(f"unknown variable {val!r}", at) from None
            exp = 1
            if peek()[0] == 3:
                take()
                sign = 1
                if peek()[0] == 6:
                    take()
                    sign = -1
                k2, v2, a2 = take()
                if k2 != 1:
                    raise ParseError("expected integer exponent", a2)
                exp = sign * int(v2)
            m = [0] * (idx + 1)
            m[idx] = exp
            m = _strip(m)
            try:
                _check_monomial(m)
            except ValueError as exc:
                raise ParseError(str(exc), at) from None
            return LaurentPoly._raw({m: 1} if m or exp == 0 else {(): 1})
        raise ParseError("expected a number or variable", at)

    def term():
        acc = factor()
        while peek()[0] == 4:
            take()
            acc = acc * factor()
        return acc

    total = ZERO
    sign = 1
    if peek()[0] in (5, 6):
        sign = -1 if take()[0] == 6 else 1
    total = total + term() * sign
    while peek()[0] in (5, 6):
        sign = -1 if take()[0] == 6 else 1
        total = total + term() * sign
    kind, val, at = peek()
    if kind != 0:
        raise ParseError(f"unexpected token {val!r}", at)
    return total
