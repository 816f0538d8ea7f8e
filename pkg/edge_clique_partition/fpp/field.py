import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

# Largest field order gf_arith constructs.
MAX_FIELD_ORDER = 2**16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def prime_power_decomposition(N: int) -> Optional[Tuple[int, int]]:
    """Return (p, m) with N = p^m for a prime p, or None if N is not a prime
    power."""
    if N < 2:
        return None
    p = next(d for d in range(2, N + 1) if N % d == 0)
    m = 0
    while N % p == 0:
        N //= p
        m += 1
    return (p, m) if N == 1 else None


def _digits(x: int, p: int, m: int) -> List[int]:
    digits = []
    for _ in range(m):
        x, digit = divmod(x, p)
        digits.append(digit)
    return digits


def _number(digits: List[int], p: int) -> int:
    x = 0
    for digit in reversed(digits):
        x = x * p + digit
    return x


def _poly_rem(a: List[int], modulus: List[int], p: int) -> List[int]:
    """Remainder of a modulo a monic polynomial. Coefficients are stored
    lowest degree first."""
    a = list(a)
    degree = len(modulus) - 1
    for top in range(len(a) - 1, degree - 1, -1):
        factor = a[top]
        if factor == 0:
            continue
        shift = top - degree
        for i, c in enumerate(modulus):
            a[shift + i] = (a[shift + i] - factor * c) % p
    return (a + [0] * degree)[:degree]


def _is_irreducible(modulus: List[int], p: int) -> bool:
    degree = len(modulus) - 1
    for d in range(1, degree // 2 + 1):
        for code in range(p**d):
            divisor = _digits(code, p, d) + [1]
            if not any(_poly_rem(modulus, divisor, p)):
                return False
    return True


def find_irreducible(p: int, m: int) -> Tuple[int, ...]:
    """The lowest monic irreducible polynomial of degree m over GF(p), where
    the non-leading coefficients are read as a base-p number."""
    for code in range(p**m):
        modulus = _digits(code, p, m) + [1]
        if _is_irreducible(modulus, p):
            return tuple(modulus)
    raise RuntimeError(f"No irreducible polynomial of degree {m} over GF({p}) found")


@dataclass(frozen=True)
class GaloisField:
    """Arithmetic in GF(p^m).

    Elements are the integers 0..p^m-1. The base-p digits of an element,
    lowest first, are the coefficients of a polynomial in x modulo
    `modulus`, so the element p stands for x.
    """

    p: int
    m: int
    modulus: Tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.m

    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p, m = self.p, self.m
        return _number(
            [(x + y) % p for x, y in zip(_digits(a, p, m), _digits(b, p, m))], p
        )

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        return _number([-x % self.p for x in _digits(a, self.p, self.m)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        p, m = self.p, self.m
        x, y = _digits(a, p, m), _digits(b, p, m)
        product = [0] * (2 * m - 1)
        for i, c in enumerate(x):
            if c:
                for j, d in enumerate(y):
                    product[i + j] = (product[i + j] + c * d) % p
        return _number(_poly_rem(product, list(self.modulus), p), p)

    def pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("Zero has no multiplicative inverse")
        return self.pow(a, self.order - 2)


def gf_arith(p: int, m: int = 1) -> GaloisField:
    """Construct GF(p^m).

    p (int):
        The characteristic, must be prime.
    m (int):
        The extension degree, at least 1.
    RETURNS (GaloisField):
        The field. Extension fields use the lowest monic irreducible
        polynomial of degree m.
    """
    if not is_prime(p):
        raise ValueError(f"Field characteristic must be prime, got {p}")
    if m < 1:
        raise ValueError(f"Extension degree must be at least 1, got {m}")
    if p**m > MAX_FIELD_ORDER:
        raise ValueError(
            f"Field order {p}^{m} exceeds the largest supported order {MAX_FIELD_ORDER}"
        )
    modulus = (0, 1) if m == 1 else find_irreducible(p, m)
    return GaloisField(p, m, modulus)
