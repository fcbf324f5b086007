"""Exact arithmetic over F_p and the polynomial rings F_p[t] and F_p[y1..yn, X].

Only odd prime moduli are accepted: the weight machinery divides by 2 mod p,
and the (1 - t^2) / (1 + t^2) form tests rely on those two factors being
coprime, which fails at p = 2.  Coefficients are always kept as canonical
residues in {0, ..., p-1}.

The univariate variable t stands for the degree-2 polynomial generator of the
mod-p cohomology of the classifying space of an order-p cyclic group (with
nilpotents discarded), so cohomological degree is twice the t-exponent.

All values are immutable after construction and every operation is pure;
instances can be shared freely between concurrent workers.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping

__all__ = [
    "FpScalar",
    "UPoly",
    "MPoly",
    "check_odd_prime",
    "inv2",
    "chern_of_exponents",
    "pair_factor",
    "in_subring",
    "pm_factorization",
    "frobenius_image",
]


def check_odd_prime(p: int) -> None:
    """Raise ValueError unless p is an odd prime (p = 2 is rejected)."""
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        raise ValueError(f"modulus must be an odd prime, got {p!r}")
    if any(p % q == 0 for q in range(3, math.isqrt(p) + 1, 2)):
        raise ValueError(f"modulus must be an odd prime, got {p}")


def inv2(p: int) -> int:
    """The inverse of 2 mod p, i.e. (p + 1) / 2."""
    check_odd_prime(p)
    return (p + 1) // 2


class FpScalar:
    """Canonical residue modulo an odd prime."""

    __slots__ = ("p", "value")

    def __init__(self, p: int, value: int = 0):
        check_odd_prime(p)
        self.p = p
        self.value = int(value) % p

    def _coerce(self, other) -> "FpScalar":
        if isinstance(other, FpScalar):
            if other.p != self.p:
                raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
            return other
        if isinstance(other, int):
            return FpScalar(self.p, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpScalar(self.p, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpScalar(self.p, self.value - other.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpScalar(self.p, self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(self.p, -self.value)

    def __pow__(self, exponent: int):
        return FpScalar(self.p, pow(self.value, exponent, self.p))

    def inverse(self) -> "FpScalar":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return FpScalar(self.p, pow(self.value, -1, self.p))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.p
        return (
            isinstance(other, FpScalar)
            and self.p == other.p
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.p, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FpScalar({self.p}, {self.value})"


class UPoly:
    """Dense univariate polynomial over F_p in the variable t.

    Coefficients are canonical residues indexed by t-exponent with trailing
    zeros trimmed; the zero polynomial stores an empty tuple.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        check_odd_prime(p)
        cs = [int(c) % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, p: int) -> "UPoly":
        return cls(p)

    @classmethod
    def one(cls, p: int) -> "UPoly":
        return cls(p, (1,))

    @classmethod
    def monomial(cls, p: int, coeff: int, exponent: int) -> "UPoly":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls(p, (0,) * exponent + (coeff,))

    @property
    def degree(self) -> int:
        """t-degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def coefficient(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def _check_same(self, other: "UPoly") -> None:
        if not isinstance(other, UPoly):
            raise TypeError(f"expected UPoly, got {type(other).__name__}")
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other):
        self._check_same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(
            self.p,
            (self.coefficient(k) + other.coefficient(k) for k in range(n)),
        )

    def __sub__(self, other):
        self._check_same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(
            self.p,
            (self.coefficient(k) - other.coefficient(k) for k in range(n)),
        )

    def __neg__(self):
        return UPoly(self.p, (-c for c in self.coeffs))

    def __mul__(self, other):
        self._check_same(other)
        if self.is_zero or other.is_zero:
            return UPoly.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UPoly(self.p, out)

    def __pow__(self, exponent: int) -> "UPoly":
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = UPoly.one(self.p)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divexact(self, divisor: "UPoly") -> "UPoly | None":
        """Exact quotient self / divisor, or None when the division leaves a
        remainder.  Never returns a truncated quotient."""
        self._check_same(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return UPoly.zero(self.p)
        if self.degree < divisor.degree:
            return None
        p = self.p
        rem = list(self.coeffs)
        db = divisor.degree
        inv_lead = pow(divisor.coeffs[-1], -1, p)
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] % p
            if c == 0:
                continue
            f = (c * inv_lead) % p
            quot[k - db] = f
            for j, bc in enumerate(divisor.coeffs):
                rem[k - db + j] = (rem[k - db + j] - f * bc) % p
        if any(rem[:db]):
            return None
        return UPoly(p, quot)

    def evaluate(self, x: int) -> int:
        """Value at t = x, as a canonical residue."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, UPoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"UPoly(p={self.p}, {self.render()!r})"

    def render(self) -> str:
        """Canonical text form: terms in increasing t-exponent, coefficients
        in {0..p-1}, e.g. "1 + 2*t^18"."""
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                var = "t" if k == 1 else f"t^{k}"
                parts.append(var if c == 1 else f"{c}*{var}")
        return " + ".join(parts)


def chern_of_exponents(p: int, exponents: Iterable[int | FpScalar]) -> UPoly:
    """Total Chern class of a sum of line characters z^a: the exact product
    of (1 + a*t) over the given exponent multiset (empty product is 1)."""
    check_odd_prime(p)
    coeffs = [1]
    for a in exponents:
        a = int(a) % p
        if a == 0:
            continue  # the factor is exactly 1
        coeffs.append(0)
        for k in range(len(coeffs) - 2, -1, -1):
            coeffs[k + 1] = (coeffs[k + 1] + a * coeffs[k]) % p
    return UPoly(p, coeffs)


def pair_factor(p: int, ai: int | FpScalar, aj: int | FpScalar) -> UPoly:
    """Expansion of (1-(ai+aj)t)(1-(ai-aj)t)(1-(-ai+aj)t)(1-(-ai-aj)t), the
    contribution of one coordinate pair to the exterior-square Chern class."""
    a, b = int(ai), int(aj)
    exps = (a + b, a - b, -a + b, -a - b)
    return chern_of_exponents(p, (-e for e in exps))


def in_subring(a: UPoly, d: int) -> bool:
    """True iff every nonzero coefficient sits at a t-exponent divisible by d,
    i.e. the polynomial lies in F_p[t^d]."""
    if d < 1:
        raise ValueError("subring exponent must be >= 1")
    return all(c == 0 or k % d == 0 for k, c in enumerate(a.coeffs))


def pm_factorization(a: UPoly) -> "tuple[int, int] | None":
    """Write a = (1-t^2)^e_minus * (1+t^2)^e_plus by greedy repeated exact
    division (all 1-t^2 factors first, then 1+t^2, then the remainder must be
    exactly 1).  Returns (e_minus, e_plus), or None when a is not of that
    form.  The two factors are coprime for odd p, so the greedy order does not
    affect the answer."""
    p = a.p
    one_minus = UPoly(p, (1, 0, p - 1))
    one_plus = UPoly(p, (1, 0, 1))
    e_minus = 0
    current = a
    while (q := current.divexact(one_minus)) is not None:
        current = q
        e_minus += 1
    e_plus = 0
    while (q := current.divexact(one_plus)) is not None:
        current = q
        e_plus += 1
    if not current.is_one:
        return None
    return (e_minus, e_plus)


def frobenius_image(a: UPoly, times: int = 1) -> UPoly:
    """Image of a under t^k -> t^(p^times * k).  Over F_p this equals
    a^(p^times) because the coefficientwise p-th power is the identity."""
    if times < 0:
        raise ValueError("times must be nonnegative")
    stretch = a.p**times
    coeffs = [0] * (stretch * a.degree + 1) if not a.is_zero else []
    for k, c in enumerate(a.coeffs):
        if c:
            coeffs[stretch * k] = c
    return UPoly(a.p, coeffs)


class MPoly:
    """Sparse multivariate polynomial over F_p with a fixed variable arity.

    Terms map exponent tuples to nonzero canonical coefficients.  Variable
    order is positional; callers fix their own naming convention (the Dickson
    code uses y1, ..., yn with the auxiliary X in the last slot).
    """

    __slots__ = ("p", "arity", "terms")

    def __init__(self, p: int, arity: int, terms=()):
        check_odd_prime(p)
        if arity < 1:
            raise ValueError("arity must be >= 1")
        data: dict[tuple[int, ...], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            key = tuple(int(e) for e in key)
            if len(key) != arity:
                raise ValueError(
                    f"exponent vector {key} does not match arity {arity}"
                )
            if any(e < 0 for e in key):
                raise ValueError(f"negative exponent in {key}")
            c = (data.get(key, 0) + int(coeff)) % p
            if c:
                data[key] = c
            else:
                data.pop(key, None)
        self.p = p
        self.arity = arity
        self.terms = data

    @classmethod
    def zero(cls, p: int, arity: int) -> "MPoly":
        return cls(p, arity)

    @classmethod
    def constant(cls, p: int, arity: int, value: int) -> "MPoly":
        return cls(p, arity, {(0,) * arity: value})

    @classmethod
    def one(cls, p: int, arity: int) -> "MPoly":
        return cls.constant(p, arity, 1)

    @classmethod
    def variable(cls, p: int, arity: int, index: int) -> "MPoly":
        key = tuple(1 if i == index else 0 for i in range(arity))
        return cls(p, arity, {key: 1})

    @classmethod
    def monomial(cls, p: int, arity: int, exponents, coeff: int = 1) -> "MPoly":
        return cls(p, arity, {tuple(exponents): coeff})

    @classmethod
    def linear_form(cls, p: int, arity: int, coeffs) -> "MPoly":
        """sum_i coeffs[i] * variable_i (coeffs may be shorter than arity)."""
        terms = {}
        for i, c in enumerate(coeffs):
            if int(c) % p:
                key = tuple(1 if k == i else 0 for k in range(arity))
                terms[key] = int(c) % p
        return cls(p, arity, terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(k) for k in self.terms)

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return -1
        return max(k[var] for k in self.terms)

    def support_in_var(self, var: int) -> list[int]:
        return sorted({k[var] for k in self.terms})

    def _check_same(self, other: "MPoly") -> None:
        if not isinstance(other, MPoly):
            raise TypeError(f"expected MPoly, got {type(other).__name__}")
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        self._check_same(other)
        data = dict(self.terms)
        p = self.p
        for key, c in other.terms.items():
            v = (data.get(key, 0) + c) % p
            if v:
                data[key] = v
            else:
                data.pop(key, None)
        out = MPoly.zero(self.p, self.arity)
        out.terms = data
        return out

    def __neg__(self):
        out = MPoly.zero(self.p, self.arity)
        out.terms = {k: self.p - c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.p
            out = MPoly.zero(self.p, self.arity)
            if c:
                out.terms = {k: (v * c) % self.p for k, v in self.terms.items()}
                out.terms = {k: v for k, v in out.terms.items() if v}
            return out
        self._check_same(other)
        p = self.p
        data: dict[tuple[int, ...], int] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                v = (data.get(key, 0) + ca * cb) % p
                if v:
                    data[key] = v
                else:
                    data.pop(key, None)
        out = MPoly.zero(self.p, self.arity)
        out.terms = data
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MPoly":
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = MPoly.one(self.p, self.arity)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def coefficient_in_var(self, var: int, exponent: int) -> "MPoly":
        """Coefficient of variable var to the given power, as a polynomial in
        the remaining variables (arity drops by one)."""
        if self.arity < 2:
            raise ValueError("cannot drop the only variable")
        data = {}
        for key, c in self.terms.items():
            if key[var] == exponent:
                data[key[:var] + key[var + 1 :]] = c
        return MPoly(self.p, self.arity - 1, data)

    def substitute_linear(self, matrix) -> "MPoly":
        """Replace variable j by sum_i matrix[i][j] * variable_i for the
        leading len(matrix) variables; trailing variables are left fixed.

        len(matrix) must equal the arity, or arity - 1 when the last slot is
        an auxiliary variable that the change of coordinates does not touch.
        """
        n = len(matrix)
        if n not in (self.arity, self.arity - 1):
            raise ValueError(
                f"matrix size {n} does not match arity {self.arity}"
            )
        if any(len(row) != n for row in matrix):
            raise ValueError("matrix must be square")
        images = [
            MPoly.linear_form(
                self.p, self.arity, [matrix[i][j] for i in range(n)]
            )
            for j in range(n)
        ]
        pow_cache: dict[tuple[int, int], MPoly] = {}

        def image_power(j: int, e: int) -> MPoly:
            key = (j, e)
            if key not in pow_cache:
                pow_cache[key] = images[j] ** e
            return pow_cache[key]

        out = MPoly.zero(self.p, self.arity)
        for key, coeff in self.terms.items():
            term = MPoly.constant(self.p, self.arity, coeff)
            for j in range(n):
                if key[j]:
                    term = term * image_power(j, key[j])
            fixed = (0,) * n + key[n:]
            if any(fixed):
                term = term * MPoly.monomial(self.p, self.arity, fixed)
            out = out + term
        return out

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def __eq__(self, other):
        return (
            isinstance(other, MPoly)
            and self.p == other.p
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"MPoly(p={self.p}, arity={self.arity}, {len(self.terms)} terms)"

    def render(self, names: "tuple[str, ...] | None" = None) -> str:
        """Canonical text form with terms sorted by exponent vector."""
        if not self.terms:
            return "0"
        if names is None:
            names = tuple(f"y{i + 1}" for i in range(self.arity))
        if len(names) != self.arity:
            raise ValueError("names must match arity")
        parts = []
        for key, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, key):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)
