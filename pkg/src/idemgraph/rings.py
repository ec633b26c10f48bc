"""Finite commutative rings with unity, built from products of quotient rings.

A ring is described by a spec string such as ``"Z4 * Z2"`` or
``"Z3[x]/(x^2) * GF(4)"``.  Each factor is either Z_n or a univariate
quotient Z_n[x]/(f) with f monic, which covers every finite field GF(p^k)
(via a fixed irreducible polynomial table) and the local rings used in the
literature on idempotent graphs.  Elements are tuples of coefficient
vectors, one per factor, always kept in canonical reduced form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm

Coeffs = tuple[int, ...]
Element = tuple[Coeffs, ...]

DEFAULT_MAX_RING_SIZE = 4096


class RingSpecError(ValueError):
    """Raised on malformed ring spec text; carries the offending position."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class RingSizeError(ValueError):
    """Requested ring exceeds the configured element bound."""


# Fixed irreducible polynomials over Z_p used to desugar GF(p^k), k >= 2,
# for prime powers up to 64.  Coefficients ascending, leading 1 included.
IRREDUCIBLE_POLYS: dict[int, tuple[int, Coeffs]] = {
    4: (2, (1, 1, 1)),            # x^2 + x + 1
    8: (2, (1, 1, 0, 1)),         # x^3 + x + 1
    9: (3, (2, 2, 1)),            # x^2 + 2x + 2
    16: (2, (1, 1, 0, 0, 1)),     # x^4 + x + 1
    25: (5, (2, 4, 1)),           # x^2 + 4x + 2
    27: (3, (1, 2, 0, 1)),        # x^3 + 2x + 1
    32: (2, (1, 0, 1, 0, 0, 1)),  # x^5 + x^2 + 1
    49: (7, (3, 6, 1)),           # x^2 + 6x + 3
    64: (2, (1, 1, 0, 1, 1, 0, 1)),  # x^6 + x^4 + x^3 + x + 1
}


@dataclass(frozen=True)
class FactorSpec:
    """One factor: Z_n when poly is empty, else Z_n[x]/(poly), poly monic."""

    modulus: int
    poly: Coeffs = ()

    def __post_init__(self):
        if self.modulus < 2:
            raise RingSpecError(f"modulus must be >= 2, got {self.modulus}")
        if self.poly:
            if len(self.poly) < 2 or self.poly[-1] != 1:
                raise RingSpecError(
                    f"quotient polynomial must be monic of degree >= 1: {self.poly}"
                )
            if any(c != c % self.modulus for c in self.poly):
                raise RingSpecError("polynomial coefficients not reduced")

    @property
    def degree(self) -> int:
        return len(self.poly) - 1 if self.poly else 1

    @property
    def size(self) -> int:
        return self.modulus ** self.degree


@dataclass(frozen=True)
class RingSpec:
    factors: tuple[FactorSpec, ...]

    def __post_init__(self):
        if not self.factors:
            raise RingSpecError("ring spec needs at least one factor")

    @property
    def size(self) -> int:
        n = 1
        for f in self.factors:
            n *= f.size
        return n


def _poly_text(coeffs: Coeffs) -> str:
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        if power == 0:
            terms.append(str(c))
        else:
            xs = "x" if power == 1 else f"x^{power}"
            terms.append(xs if c == 1 else f"{c}{xs}")
    return " + ".join(terms) if terms else "0"


def format_ring_spec(spec: RingSpec) -> str:
    """Canonical text form; round-trips through parse_ring_spec."""
    parts = []
    for f in spec.factors:
        if f.poly:
            parts.append(f"Z{f.modulus}[x]/({_poly_text(f.poly)})")
        else:
            parts.append(f"Z{f.modulus}")
    return " * ".join(parts)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise RingSpecError(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, s: str):
        self.skip_ws()
        if not self.text.startswith(s, self.pos):
            self.error(f"expected {s!r}")
        self.pos += len(s)

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a number")
        return int(self.text[start:self.pos])

    def factor(self) -> FactorSpec:
        self.skip_ws()
        if self.text.startswith("GF", self.pos):
            self.pos += 2
            self.expect("(")
            q = self.nat()
            self.expect(")")
            return self.galois_factor(q)
        if self.peek() != "Z":
            self.error("expected a factor ('Z<n>', 'Z<n>[x]/(f)' or 'GF(q)')")
        self.pos += 1
        n = self.nat()
        if n < 2:
            self.error(f"modulus must be >= 2, got {n}")
        if self.peek() == "[":
            self.expect("[")
            self.expect("x")
            self.expect("]")
            self.expect("/")
            self.expect("(")
            coeffs = self.poly(n)
            self.expect(")")
            if len(coeffs) < 2 or coeffs[-1] != 1:
                self.error(
                    f"quotient polynomial must be monic of degree >= 1, got {_poly_text(coeffs)}"
                )
            return FactorSpec(n, coeffs)
        return FactorSpec(n)

    def galois_factor(self, q: int) -> FactorSpec:
        if q < 2:
            self.error(f"GF({q}): {q} is not a prime power")
        p = smallest_prime_factor(q)
        k = 0
        m = q
        while m % p == 0:
            m //= p
            k += 1
        if m != 1 or q < 2:
            self.error(f"GF({q}): {q} is not a prime power")
        if k == 1:
            return FactorSpec(p)
        if q not in IRREDUCIBLE_POLYS:
            self.error(f"GF({q}): no irreducible polynomial on file (table covers q <= 64)")
        p_, coeffs = IRREDUCIBLE_POLYS[q]
        return FactorSpec(p_, coeffs)

    def poly(self, n: int) -> Coeffs:
        coeffs: dict[int, int] = {}
        while True:
            coef, power = self.term()
            coeffs[power] = coeffs.get(power, 0) + coef
            self.skip_ws()
            if self.peek() == "+":
                self.expect("+")
            else:
                break
        degree = max((p for p, c in coeffs.items() if c % n != 0), default=0)
        return tuple(coeffs.get(i, 0) % n for i in range(degree + 1))

    def term(self) -> tuple[int, int]:
        self.skip_ws()
        coef = None
        if self.peek().isdigit():
            coef = self.nat()
        if self.peek() == "x":
            self.expect("x")
            power = 1
            if self.peek() == "^":
                self.expect("^")
                power = self.nat()
            return (1 if coef is None else coef), power
        if coef is None:
            self.error("expected a polynomial term")
        return coef, 0


def smallest_prime_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def parse_ring_spec(text: str) -> RingSpec:
    """Parse spec text like "Z4 * Z2" or "Z3[x]/(x^2) * GF(4)"."""
    p = _Parser(text)
    factors = [p.factor()]
    while True:
        p.skip_ws()
        if p.pos >= len(text):
            break
        if p.peek() in ("*", "×"):
            p.pos += 1
            factors.append(p.factor())
        else:
            p.error("expected '*' or '×' between factors")
    return RingSpec(tuple(factors))


def _poly_mul(a: Coeffs, b: Coeffs, f: Coeffs, n: int) -> Coeffs:
    # Schoolbook product, then reduction mod the monic polynomial f and mod n.
    d = len(f) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % n
    for i in range(len(res) - 1, d - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(d):
                res[i - d + j] = (res[i - d + j] - c * f[j]) % n
    out = res[:d]
    out += [0] * (d - len(out))
    return tuple(out)


class FiniteRing:
    """Enumerable finite commutative ring with unity.

    Immutable after construction; elements are tuples of coefficient
    vectors, enumerated in lexicographic, factor-major order.
    """

    def __init__(self, spec: RingSpec, max_size: int = DEFAULT_MAX_RING_SIZE):
        if spec.size > max_size:
            raise RingSizeError(
                f"ring has {spec.size} elements, exceeding the bound {max_size}"
            )
        self.spec = spec
        self.size = spec.size
        self.characteristic = lcm(*(f.modulus for f in spec.factors))
        factor_elements = [
            [tuple(c) for c in itertools.product(range(f.modulus), repeat=f.degree)]
            for f in spec.factors
        ]
        self.elements: tuple[Element, ...] = tuple(
            itertools.product(*factor_elements)
        )
        self.index: dict[Element, int] = {e: i for i, e in enumerate(self.elements)}
        self.zero: Element = tuple((0,) * f.degree for f in spec.factors)
        self.one: Element = tuple((1,) + (0,) * (f.degree - 1) for f in spec.factors)
        self._idempotents: frozenset[Element] | None = None

    def __repr__(self):
        return f"FiniteRing({format_ring_spec(self.spec)!r})"

    def add(self, x: Element, y: Element) -> Element:
        return tuple(
            tuple((a + b) % f.modulus for a, b in zip(xc, yc))
            for f, xc, yc in zip(self.spec.factors, x, y)
        )

    def neg(self, x: Element) -> Element:
        return tuple(
            tuple((-a) % f.modulus for a in xc)
            for f, xc in zip(self.spec.factors, x)
        )

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def mul(self, x: Element, y: Element) -> Element:
        out = []
        for f, xc, yc in zip(self.spec.factors, x, y):
            if f.poly:
                out.append(_poly_mul(xc, yc, f.poly, f.modulus))
            else:
                out.append(((xc[0] * yc[0]) % f.modulus,))
        return tuple(out)

    def label(self, x: Element) -> str:
        parts = []
        for f, xc in zip(self.spec.factors, x):
            if f.poly:
                parts.append(_poly_text(xc) if any(xc) else "0")
            else:
                parts.append(str(xc[0]))
        return parts[0] if len(parts) == 1 else "(" + ", ".join(parts) + ")"

    def additive_order(self, x: Element) -> int:
        k = 1
        acc = x
        while acc != self.zero:
            acc = self.add(acc, x)
            k += 1
        return k


def build_ring(spec: RingSpec | str, max_size: int = DEFAULT_MAX_RING_SIZE) -> FiniteRing:
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    return FiniteRing(spec, max_size=max_size)


def idempotents(ring: FiniteRing) -> frozenset[Element]:
    """All x with x*x == x, by exhaustive scan (cached on the ring)."""
    if ring._idempotents is None:
        ring._idempotents = frozenset(
            x for x in ring.elements if ring.mul(x, x) == x
        )
    return ring._idempotents


def is_local(ring: FiniteRing) -> bool:
    return idempotents(ring) == {ring.zero, ring.one}


def additive_closure(ring: FiniteRing, seed: set[Element] | frozenset[Element]) -> frozenset[Element]:
    """Smallest additive subgroup containing the seed set."""
    if not seed:
        raise ValueError("seed set must be nonempty")
    gens = set(seed) | {ring.neg(x) for x in seed}
    closed = {ring.zero} | gens
    frontier = list(closed)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                s = ring.add(a, g)
                if s not in closed:
                    closed.add(s)
                    nxt.append(s)
        frontier = nxt
    return frozenset(closed)


@dataclass(frozen=True)
class LocalFactorProfile:
    """Invariants of one local factor, read off a primitive idempotent e."""

    idempotent: Element
    factor_size: int
    factor_char: int
    generated_by_idempotents: bool
    is_z2: bool
    is_z3: bool


def primitive_idempotents(ring: FiniteRing) -> list[LocalFactorProfile]:
    """Atoms of the Boolean algebra of idempotents, with factor invariants.

    e <= f iff e*f == e; the atoms are the minimal nonzero idempotents and
    realize the local direct-product decomposition of the ring.
    """
    ids = idempotents(ring)
    atoms = []
    for e in ids:
        if e == ring.zero:
            continue
        minimal = True
        for f in ids:
            if f not in (ring.zero, e) and ring.mul(e, f) == f:
                minimal = False
                break
        if minimal:
            atoms.append(e)
    atoms.sort(key=ring.index.__getitem__)
    profiles = []
    for e in atoms:
        factor_size = len({ring.mul(x, e) for x in ring.elements})
        factor_char = ring.additive_order(e)
        profiles.append(
            LocalFactorProfile(
                idempotent=e,
                factor_size=factor_size,
                factor_char=factor_char,
                generated_by_idempotents=(factor_char == factor_size),
                is_z2=(factor_size == 2),
                is_z3=(factor_size == 3 and factor_char == 3),
            )
        )
    return profiles
