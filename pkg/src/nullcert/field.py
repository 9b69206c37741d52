"""Prime-field arithmetic and root-of-unity machinery.

Everything here works with canonical residues in [0, p).  Moduli are
deliberately small (trial-division primality, default cap 2**20), so clarity
wins over clever reduction tricks.  All values are immutable and every
operation is pure.
"""

from __future__ import annotations

PRIMALITY_CAP = 1 << 20
PRIME_SEARCH_CAP = 1 << 20


def is_prime(n: int, cap: int = PRIMALITY_CAP) -> bool:
    """Deterministic trial-division primality test for n <= cap."""
    if n > cap:
        raise ValueError(f"{n} exceeds the primality-test cap {cap}")
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {prime: multiplicity} by trial division."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def divisors(n: int) -> list[int]:
    """All positive divisors of n in increasing order."""
    divs = [1]
    for q, mult in factorize(n).items():
        divs = [d * q**e for d in divs for e in range(mult + 1)]
    return sorted(divs)


class PrimeField:
    """The field GF(p) of residues modulo a prime p >= 2."""

    __slots__ = ("p",)

    def __init__(self, p: int, cap: int = PRIMALITY_CAP):
        if not isinstance(p, int) or not is_prime(p, cap=cap):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def element(self, value) -> "FieldElement":
        """Coerce an int (reduced mod p) or an element of this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError(f"element of {value.field} is not in {self}")
            return value
        return FieldElement(int(value) % self.p, self)

    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    def one(self) -> "FieldElement":
        return FieldElement(1 % self.p, self)

    def elements(self):
        """All field elements, in residue order."""
        for v in range(self.p):
            yield FieldElement(v, self)

    def units(self):
        """All nonzero elements, in residue order."""
        for v in range(1, self.p):
            yield FieldElement(v, self)


class FieldElement:
    """A residue in [0, p) tied to its PrimeField.

    Arithmetic between elements of different fields is rejected rather than
    coerced.
    """

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        if not 0 <= value < field.p:
            raise ValueError(f"residue {value} out of range for {field}")
        self.value = value
        self.field = field

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(
                    f"field mismatch: {self.field} vs {other.field}"
                )
            return other
        if isinstance(other, int):
            return FieldElement(other % self.field.p, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement((self.value + other.value) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement((self.value - other.value) % self.field.p, self.field)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement((self.value * other.value) % self.field.p, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement((-self.value) % self.field.p, self.field)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0 and self.value == 0:
            raise ZeroDivisionError("negative power of 0")
        return FieldElement(pow(self.value, exponent, self.field.p), self.field)

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse; rejects 0."""
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.field}")
        return FieldElement(pow(self.value, -1, self.field.p), self.field)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and self.field == other.field
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value}"


def element_order(x: FieldElement) -> int:
    """Smallest k >= 1 with x**k = 1; divides p - 1.  Rejects x = 0."""
    if x.value == 0:
        raise ValueError("0 has no multiplicative order")
    p = x.field.p
    for d in divisors(p - 1):
        if pow(x.value, d, p) == 1:
            return d
    raise AssertionError("order search failed; field invariant broken")


def find_prime_with_subgroup(d: int, start: int = 3, cap: int = PRIME_SEARCH_CAP) -> PrimeField:
    """Smallest prime p >= max(start, 3) with p = 1 (mod d).

    Such a field carries a cyclic multiplicative subgroup of order d.
    Raises if the search passes `cap`.
    """
    if d < 1:
        raise ValueError("subgroup order must be >= 1")
    p = max(start, 3)
    while p <= cap:
        if p % d == 1 % d and is_prime(p, cap=cap):
            return PrimeField(p, cap=cap)
        p += 1
    raise ValueError(f"no prime = 1 (mod {d}) found in [{start}, {cap}]")


def primitive_root_of_unity(field: PrimeField, d: int) -> FieldElement:
    """The smallest residue whose multiplicative order is exactly d.

    Requires d | p - 1.  The smallest-residue tie-break keeps every
    construction built on top of this reproducible bit for bit.
    """
    p = field.p
    if d < 1 or (p - 1) % d != 0:
        raise ValueError(f"{d} does not divide {p - 1} = |GF({p})*|")
    prime_divs = list(factorize(d))
    for v in range(1, p):
        if pow(v, d, p) != 1:
            continue
        if all(pow(v, d // q, p) != 1 for q in prime_divs):
            return FieldElement(v, field)
    raise AssertionError(f"no element of order {d} in {field}; invariant broken")


def smallest_generator(field: PrimeField) -> FieldElement:
    """Smallest primitive root of GF(p)* (generator of the full unit group)."""
    return primitive_root_of_unity(field, field.p - 1)
