"""
Sparse multivector algebra for systems of N spin-1/2 particles.

An Element is a complex-weighted sum of Pauli strings, one letter from
{I, X, Y, Z} per particle.  Letters are packed two bits per particle into
an integer key:

    I = 0b00,  X = 0b01,  Y = 0b10,  Z = 0b11,    particle 1 in the low bits.

Generators of the same particle multiply by the Pauli rules (X*X = 1,
X*Y = iZ and cyclic); generators of different particles commute.  The
product of two strings is then the bitwise XOR of their keys, with the
phase accumulated from a 16-entry lookup table, so the multiplication is
exact at the phase level.  The imaginary unit of a coefficient doubles as
the unit pseudoscalar, which makes the reverse of a term plain complex
conjugation and the grade involution a conjugation plus a sign from the
number of non-identity letters.

Public code deals in letter strings like "IXZ"; the packed integers are an
internal detail.  Elements are immutable values: every operation returns a
new Element and never mutates its inputs, so they can be shared freely
between threads.
"""
from __future__ import annotations

import math
from typing import Iterable, Iterator, Mapping

MAX_PARTICLES = 16

# terms with |re| + |im| below this are dropped during canonicalization
ZERO_EPS = 1e-14

_LETTERS = "IXYZ"
_LETTER_CODE = {"I": 0, "X": 1, "Y": 2, "Z": 3}

# low bit of every 2-bit letter field, used to detect non-identity letters
_ODD_BITS = sum(1 << (2 * k) for k in range(MAX_PARTICLES))

# _PHASE[(a << 2) | b] for letter codes a, b in 1..3 (both non-identity):
# equal letters square to 1, cyclic pairs pick up +i, anticyclic -i.
_PHASE = [1.0 + 0j] * 16
for _a, _b, _p in ((1, 2, 1j), (2, 3, 1j), (3, 1, 1j),
                   (2, 1, -1j), (3, 2, -1j), (1, 3, -1j)):
    _PHASE[(_a << 2) | _b] = _p
_PHASE = tuple(_PHASE)


def _occupancy(key: int) -> int:
    """Bitmask with one bit per particle that carries a non-identity letter."""
    return (key | (key >> 1)) & _ODD_BITS


def _weight(key: int) -> int:
    return _occupancy(key).bit_count()


def pack_letters(letters: str) -> int:
    key = 0
    for pos, letter in enumerate(letters):
        try:
            code = _LETTER_CODE[letter]
        except KeyError:
            raise ValueError(f"invalid Pauli letter {letter!r} in {letters!r}") from None
        key |= code << (2 * pos)
    return key


def unpack_letters(key: int, n: int) -> str:
    return "".join(_LETTERS[(key >> (2 * m)) & 3] for m in range(n))


def _check_n(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_PARTICLES:
        raise ValueError(f"particle count must be in 1..{MAX_PARTICLES}, got {n}")


def _check_particle(particle: int, n: int) -> None:
    if not isinstance(particle, int) or not 1 <= particle <= n:
        raise ValueError(f"particle index {particle} out of range 1..{n}")


class Element:
    """A multivector: immutable sparse map from Pauli strings to complex weights."""

    __slots__ = ("n", "_t")

    def __init__(self, n: int, terms: Mapping[str, complex] | None = None):
        _check_n(n)
        packed: dict[int, complex] = {}
        if terms:
            for letters, coeff in terms.items():
                if len(letters) != n:
                    raise ValueError(
                        f"Pauli string {letters!r} has length {len(letters)}, expected {n}")
                c = complex(coeff)
                if abs(c.real) + abs(c.imag) >= ZERO_EPS:
                    packed[pack_letters(letters)] = packed.get(pack_letters(letters), 0) + c
        self.n = n
        self._t = {k: c for k, c in packed.items() if abs(c.real) + abs(c.imag) >= ZERO_EPS}

    # -- internal fast constructor -------------------------------------------------

    @classmethod
    def _raw(cls, n: int, packed: dict[int, complex]) -> "Element":
        el = object.__new__(cls)
        el.n = n
        el._t = {k: c for k, c in packed.items()
                 if abs(c.real) + abs(c.imag) >= ZERO_EPS}
        return el

    # -- constructors ---------------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Element":
        _check_n(n)
        return cls._raw(n, {})

    @classmethod
    def scalar(cls, n: int, value: complex) -> "Element":
        _check_n(n)
        return cls._raw(n, {0: complex(value)})

    @classmethod
    def one(cls, n: int) -> "Element":
        return cls.scalar(n, 1.0)

    # -- inspection -----------------------------------------------------------------

    def terms(self) -> dict[str, complex]:
        """Copy of the term map keyed by letter strings such as 'IXZ'."""
        return {unpack_letters(k, self.n): c for k, c in self._t.items()}

    def coefficient(self, letters: str) -> complex:
        if len(letters) != self.n:
            raise ValueError(f"Pauli string {letters!r} has wrong length for n={self.n}")
        return self._t.get(pack_letters(letters), 0j)

    def scalar_part(self) -> complex:
        """Coefficient of the identity string: real part is the scalar
        component, imaginary part the pseudoscalar component.  Equals
        trace of the matrix representation divided by 2**n."""
        return self._t.get(0, 0j)

    def n_terms(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def max_abs(self) -> float:
        """Largest coefficient magnitude (max norm)."""
        return max((abs(c) for c in self._t.values()), default=0.0)

    def one_norm(self) -> float:
        """Sum of coefficient magnitudes; submultiplicative for this product."""
        return sum(abs(c) for c in self._t.values())

    def __iter__(self) -> Iterator[tuple[str, complex]]:
        for k, c in self._t.items():
            yield unpack_letters(k, self.n), c

    def __len__(self) -> int:
        return len(self._t)

    def __repr__(self) -> str:
        if not self._t:
            return f"Element(n={self.n}, 0)"
        parts = [f"{unpack_letters(k, self.n)}: {c:.6g}"
                 for k, c in sorted(self._t.items(),
                                    key=lambda kv: unpack_letters(kv[0], self.n))]
        body = ", ".join(parts[:8]) + (", ..." if len(parts) > 8 else "")
        return f"Element(n={self.n}, {{{body}}})"

    # -- linear structure -------------------------------------------------------------

    def _check_same_n(self, other: "Element") -> None:
        if self.n != other.n:
            raise ValueError(f"particle count mismatch: {self.n} != {other.n}")

    def __add__(self, other):
        if isinstance(other, Element):
            self._check_same_n(other)
            out = dict(self._t)
            for k, c in other._t.items():
                out[k] = out.get(k, 0j) + c
            return Element._raw(self.n, out)
        if isinstance(other, (int, float, complex)):
            return self + Element.scalar(self.n, other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Element):
            self._check_same_n(other)
            out = dict(self._t)
            for k, c in other._t.items():
                out[k] = out.get(k, 0j) - c
            return Element._raw(self.n, out)
        if isinstance(other, (int, float, complex)):
            return self - Element.scalar(self.n, other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, float, complex)):
            return Element.scalar(self.n, other) - self
        return NotImplemented

    def __neg__(self):
        return Element._raw(self.n, {k: -c for k, c in self._t.items()})

    def scaled(self, factor: complex) -> "Element":
        f = complex(factor)
        return Element._raw(self.n, {k: f * c for k, c in self._t.items()})

    # -- geometric product ------------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check_same_n(other)
            out: dict[int, complex] = {}
            phase_tab = _PHASE
            for ka, ca in self._t.items():
                occ_a = _occupancy(ka)
                for kb, cb in other._t.items():
                    both = occ_a & _occupancy(kb)
                    c = ca * cb
                    while both:
                        low = both & -both
                        sh = low.bit_length() - 1
                        c *= phase_tab[(((ka >> sh) & 3) << 2) | ((kb >> sh) & 3)]
                        both ^= low
                    kc = ka ^ kb
                    out[kc] = out.get(kc, 0j) + c
            return Element._raw(self.n, out)
        if isinstance(other, (int, float, complex)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return self.scaled(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex)):
            return self.scaled(1.0 / other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Element.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- involutions and projections ----------------------------------------------------

    def reverse(self) -> "Element":
        """Order-reversing anti-automorphism; Hermitian conjugation of the
        matrix representation.  Pauli strings are self-reverse, so only the
        coefficient is conjugated."""
        return Element._raw(self.n, {k: c.conjugate() for k, c in self._t.items()})

    def grade_involution(self) -> "Element":
        """Automorphism negating every vector factor: a term picks up a sign
        from its letter count on top of coefficient conjugation."""
        return Element._raw(
            self.n,
            {k: (-c.conjugate() if _weight(k) & 1 else c.conjugate())
             for k, c in self._t.items()})

    def even_projection(self) -> "Element":
        """Projection onto the even subalgebra, (a + hat(a)) / 2.  Termwise:
        even-weight strings keep their real part, odd-weight strings their
        imaginary part."""
        out: dict[int, complex] = {}
        for k, c in self._t.items():
            if _weight(k) & 1:
                out[k] = complex(0.0, c.imag)
            else:
                out[k] = complex(c.real, 0.0)
        return Element._raw(self.n, out)


# -- module-level operations ------------------------------------------------------------


def sigma(axis: int, particle: int, n: int) -> Element:
    """Basis vector: the single Pauli letter `axis` (1=X, 2=Y, 3=Z) on one particle."""
    _check_n(n)
    _check_particle(particle, n)
    if axis not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {axis}")
    return Element._raw(n, {axis << (2 * (particle - 1)): 1.0 + 0j})


def geometric_product(a: Element, b: Element) -> Element:
    return a * b


def linear_combine(pairs: Iterable[tuple[complex, Element]]) -> Element:
    """Weighted sum of elements sharing one particle count."""
    pairs = list(pairs)
    if not pairs:
        raise ValueError("linear_combine needs at least one (weight, element) pair")
    n = pairs[0][1].n
    out: dict[int, complex] = {}
    for w, el in pairs:
        if el.n != n:
            raise ValueError(f"particle count mismatch: {el.n} != {n}")
        w = complex(w)
        for k, c in el._t.items():
            out[k] = out.get(k, 0j) + w * c
    return Element._raw(n, out)


def reverse(a: Element) -> Element:
    return a.reverse()


def grade_involution(a: Element) -> Element:
    return a.grade_involution()


def even_projection(a: Element) -> Element:
    return a.even_projection()


def scalar_part(a: Element) -> complex:
    return a.scalar_part()


def idempotent_e(sign: int, particle: int, n: int) -> Element:
    """(1 + sign * sigma3) / 2 on one particle: projector onto a spin basis state."""
    _check_n(n)
    _check_particle(particle, n)
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return Element._raw(n, {0: 0.5 + 0j, 3 << (2 * (particle - 1)): 0.5 * sign + 0j})


def correlated_idempotent(sign: int, p1: int, p2: int, n: int) -> Element:
    """(1 + sign * sigma3 sigma3) / 2: projector onto matched or mismatched pairs."""
    _check_n(n)
    _check_particle(p1, n)
    _check_particle(p2, n)
    if p1 == p2:
        raise ValueError(f"particle indices must differ, got {p1} and {p2}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    key = (3 << (2 * (p1 - 1))) | (3 << (2 * (p2 - 1)))
    return Element._raw(n, {0: 0.5 + 0j, key: 0.5 * sign + 0j})


def particle_interchange(p1: int, p2: int, n: int) -> Element:
    """Swap operator for two particle labels: (1 + sum_i sigma_i sigma_i) / 2.
    Squares to one; conjugation by it relabels the two particles."""
    _check_n(n)
    _check_particle(p1, n)
    _check_particle(p2, n)
    if p1 == p2:
        raise ValueError(f"particle indices must differ, got {p1} and {p2}")
    out: dict[int, complex] = {0: 0.5 + 0j}
    for axis in (1, 2, 3):
        out[(axis << (2 * (p1 - 1))) | (axis << (2 * (p2 - 1)))] = 0.5 + 0j
    return Element._raw(n, out)


def max_deviation(a: Element, b: Element) -> float:
    """Largest coefficient difference between two elements."""
    return (a - b).max_abs()


def commutator(a: Element, b: Element) -> Element:
    return a * b - b * a
