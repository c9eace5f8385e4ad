"""Graded building blocks for equivariant cohomology computations.

Everything here is exact.  Scalars are ``fractions.Fraction``; in the torus
setting they are replaced by :class:`~equicoh.mpoly.MPoly` values and all
the algebra below is agnostic to that choice.

``SurfaceClass`` models the cohomology of a closed oriented genus-g surface
in the ordered basis ``1, a_1..a_g, b_1..b_g, [S]`` with the intersection
pairing ``a_i . b_i = [S] = -b_i . a_i`` and all other products of
degree-one generators zero.  ``Laurent`` is a finitely supported sum of
integer powers of the equivariant parameter with coefficients in any of the
scalar or surface domains.  ``PoincareSeries`` is a rational function
``numerator / (1 - t^2)^m`` with integer numerator, which is the closed
form every Poincare series in this package takes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import InputError, InternalInconsistencyError
from .mpoly import MPoly

_SCALARS = (int, Fraction)


def _is_scalar(value) -> bool:
    return isinstance(value, _SCALARS) or isinstance(value, MPoly)


class SurfaceClass:
    """An element of H^*(surface of genus g) with coefficients in a scalar domain."""

    __slots__ = ("genus", "c0", "c1", "c2")

    def __init__(self, genus: int, c0=0, c1=(), c2=0):
        if genus < 0:
            raise InputError("genus must be nonnegative")
        c1 = tuple(c1) if c1 else tuple(Fraction(0) for _ in range(2 * genus))
        if len(c1) != 2 * genus:
            raise InputError(f"H^1 part must have {2 * genus} slots, got {len(c1)}")
        self.genus = genus
        self.c0 = Fraction(c0) if isinstance(c0, _SCALARS) else c0
        self.c1 = tuple(Fraction(x) if isinstance(x, _SCALARS) else x for x in c1)
        self.c2 = Fraction(c2) if isinstance(c2, _SCALARS) else c2

    @classmethod
    def unit(cls, genus: int) -> SurfaceClass:
        return cls(genus, c0=1)

    @classmethod
    def point_class(cls, genus: int) -> SurfaceClass:
        """The fundamental-class generator [S] of H^2."""
        return cls(genus, c2=1)

    def __bool__(self) -> bool:
        return bool(self.c0) or any(bool(x) for x in self.c1) or bool(self.c2)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SurfaceClass):
            return NotImplemented
        return (
            self.genus == other.genus
            and self.c0 == other.c0
            and all(x == y for x, y in zip(self.c1, other.c1))
            and self.c2 == other.c2
        )

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> SurfaceClass:
        return SurfaceClass(self.genus, -self.c0, tuple(-x for x in self.c1), -self.c2)

    def __add__(self, other) -> SurfaceClass:
        if not isinstance(other, SurfaceClass):
            return NotImplemented
        if other.genus != self.genus:
            raise InputError("cannot add classes on surfaces of different genus")
        return SurfaceClass(
            self.genus,
            self.c0 + other.c0,
            tuple(x + y for x, y in zip(self.c1, other.c1)),
            self.c2 + other.c2,
        )

    def __sub__(self, other) -> SurfaceClass:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SurfaceClass):
            return cup_surface(self, other)
        if _is_scalar(other):
            return SurfaceClass(
                self.genus,
                self.c0 * other,
                tuple(x * other for x in self.c1),
                self.c2 * other,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        g = self.genus
        bits = []
        if self.c0:
            bits.append(f"({self.c0})*1")
        for i, x in enumerate(self.c1):
            if x:
                name = f"a{i + 1}" if i < g else f"b{i - g + 1}"
                bits.append(f"({x})*{name}")
        if self.c2:
            bits.append(f"({self.c2})*[S]")
        return " + ".join(bits) if bits else "0"


def cup_surface(x: SurfaceClass, y: SurfaceClass) -> SurfaceClass:
    """Cup product on a genus-g surface; raises InputError on genus mismatch."""
    if not isinstance(x, SurfaceClass) or not isinstance(y, SurfaceClass):
        raise InputError("cup_surface expects two surface classes")
    if x.genus != y.genus:
        raise InputError(f"genus mismatch: {x.genus} vs {y.genus}")
    g = x.genus
    c0 = x.c0 * y.c0
    c1 = tuple(x.c0 * y.c1[i] + x.c1[i] * y.c0 for i in range(2 * g))
    pairing = sum(
        (x.c1[i] * y.c1[g + i] - x.c1[g + i] * y.c1[i] for i in range(g)),
        start=Fraction(0),
    )
    c2 = x.c0 * y.c2 + x.c2 * y.c0 + pairing
    return SurfaceClass(g, c0, c1, c2)


def integrate_surface(x: SurfaceClass):
    """Integration over the surface: the coefficient of [S]."""
    if not isinstance(x, SurfaceClass):
        raise InputError("integrate_surface expects a surface class")
    return x.c2


class Laurent:
    """A finite sum ``sum_k coeff_k * u^k`` with integer (possibly negative) k."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean: dict[int, object] = {}
        if terms:
            for power, coeff in terms.items():
                if isinstance(coeff, _SCALARS):
                    coeff = Fraction(coeff)
                if coeff:
                    clean[int(power)] = coeff
        self.terms = clean

    @classmethod
    def zero(cls) -> Laurent:
        return cls()

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Laurent):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> Laurent:
        return Laurent({k: -c for k, c in self.terms.items()})

    def __add__(self, other: Laurent) -> Laurent:
        if not isinstance(other, Laurent):
            return NotImplemented
        merged = dict(self.terms)
        for k, c in other.terms.items():
            merged[k] = merged[k] + c if k in merged else c
        return Laurent(merged)

    def __sub__(self, other: Laurent) -> Laurent:
        return self + (-other)

    def __mul__(self, other: Laurent) -> Laurent:
        if not isinstance(other, Laurent):
            return NotImplemented
        prod: dict[int, object] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                piece = c1 * c2
                prod[k] = prod[k] + piece if k in prod else piece
        return Laurent(prod)

    def coefficient(self, power: int):
        return self.terms.get(power, Fraction(0))

    def powers(self) -> list[int]:
        return sorted(self.terms)

    def is_polynomial(self) -> bool:
        return all(k >= 0 for k in self.terms)

    def negative_part(self) -> Laurent:
        return Laurent({k: c for k, c in self.terms.items() if k < 0})

    def map_coefficients(self, fn) -> Laurent:
        return Laurent({k: fn(c) for k, c in self.terms.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*u^{k}" for k, c in sorted(self.terms.items(), reverse=True))


def _coefficient_domain(x: Laurent) -> tuple[str, int | None]:
    """(kind, genus-or-nvars) of the coefficients; InputError when mixed."""
    kind = None
    detail: int | None = None
    for coeff in x.terms.values():
        if isinstance(coeff, SurfaceClass):
            this = ("surface", coeff.genus)
        elif isinstance(coeff, MPoly):
            this = ("poly", coeff.nvars)
        else:
            this = ("scalar", None)
        if kind is None:
            kind, detail = this
        elif (kind, detail) != this:
            raise InputError("mixed coefficient domains in one Laurent element")
    return (kind or "scalar", detail)


def laurent_mul(x: Laurent, y: Laurent) -> Laurent:
    """Product of Laurent elements over a common coefficient domain."""
    kx = _coefficient_domain(x)
    ky = _coefficient_domain(y)
    if x.terms and y.terms and kx != ky:
        raise InputError(f"coefficient domain mismatch: {kx} vs {ky}")
    return x * y


def _poly_mul_int(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(int(c) for c in coeffs)


@dataclass(frozen=True)
class PoincareSeries:
    """The rational function ``numerator(t) / (1 - t^2)^denominator_power``."""

    numerator: tuple[int, ...]
    denominator_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "numerator", _trim(self.numerator))
        if self.denominator_power < 0:
            raise InputError("denominator power must be nonnegative")

    def coefficient(self, k: int) -> int:
        """Series coefficient of t^k; negative results are invalid by contract."""
        if k < 0:
            return 0
        m = self.denominator_power
        if m == 0:
            value = self.numerator[k] if k < len(self.numerator) else 0
        else:
            value = 0
            for j in range(k // 2 + 1):
                idx = k - 2 * j
                if idx < len(self.numerator):
                    value += self.numerator[idx] * math.comb(m - 1 + j, m - 1)
        if value < 0:
            raise InternalInconsistencyError(
                f"negative series coefficient {value} at degree {k}"
            )
        return value

    def _scaled_numerator(self, extra: int) -> tuple[int, ...]:
        num = self.numerator
        for _ in range(extra):
            num = _poly_mul_int(num, (1, 0, -1))
        return num

    def __eq__(self, other) -> bool:
        if not isinstance(other, PoincareSeries):
            return NotImplemented
        m = max(self.denominator_power, other.denominator_power)
        return self._scaled_numerator(m - self.denominator_power) == other._scaled_numerator(
            m - other.denominator_power
        )

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: PoincareSeries) -> PoincareSeries:
        m = max(self.denominator_power, other.denominator_power)
        a = self._scaled_numerator(m - self.denominator_power)
        b = other._scaled_numerator(m - other.denominator_power)
        width = max(len(a), len(b))
        num = tuple(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(width)
        )
        return PoincareSeries(num, m)

    def __sub__(self, other: PoincareSeries) -> PoincareSeries:
        neg = PoincareSeries(tuple(-c for c in other.numerator), other.denominator_power)
        return self + neg

    def __mul__(self, other: PoincareSeries) -> PoincareSeries:
        return PoincareSeries(
            _poly_mul_int(self.numerator, other.numerator),
            self.denominator_power + other.denominator_power,
        )

    def __repr__(self) -> str:
        num = " + ".join(
            f"{c}*t^{i}" for i, c in enumerate(self.numerator) if c
        ) or "0"
        if self.denominator_power == 0:
            return num
        return f"({num}) / (1 - t^2)^{self.denominator_power}"


def series_coefficient(series: PoincareSeries, k: int) -> int:
    return series.coefficient(k)


def _zero_scalar(rank: int | None):
    return Fraction(0) if rank is None else MPoly.zero(rank)


def _check_scalar_entry(value, rank: int | None, hom_degree: int, where: str):
    if rank is None:
        if not isinstance(value, (Fraction, int)):
            raise InputError(f"{where}: expected a rational coefficient")
        return Fraction(value)
    if isinstance(value, (Fraction, int)) and not value:
        return MPoly.zero(rank)
    if not isinstance(value, MPoly) or value.nvars != rank:
        raise InputError(f"{where}: expected a polynomial in {rank} variables")
    if not value.is_homogeneous(hom_degree):
        raise InputError(f"{where}: polynomial must be homogeneous of degree {hom_degree}")
    return value


@dataclass
class ComponentClass:
    """Restriction of an equivariant class to one fixed component, by degree.

    For a point component the degree-k entry is the coefficient of u^{k/2}
    (rank None) or the full homogeneous polynomial of degree k/2 (rank n-1).
    For a surface component it is a SurfaceClass whose graded parts carry
    u^{k/2}, u^{(k-1)/2} and u^{(k-2)/2} respectively; parity forces the
    complementary parts to vanish and that is enforced here.
    """

    kind: str
    genus: int = 0
    entries: dict = field(default_factory=dict)
    rank: int | None = None

    def __post_init__(self):
        if self.kind not in ("point", "surface"):
            raise InputError(f"unknown component kind {self.kind!r}")
        if self.kind == "point" and self.genus:
            raise InputError("point components have no genus")
        clean: dict[int, object] = {}
        for degree, value in self.entries.items():
            degree = int(degree)
            if degree < 0:
                raise InputError("degrees must be nonnegative")
            where = f"degree {degree}"
            if self.kind == "point":
                if degree % 2:
                    raise InputError(f"{where}: a point carries no odd-degree classes")
                value = _check_scalar_entry(value, self.rank, degree // 2, where)
                if value:
                    clean[degree] = value
                continue
            if not isinstance(value, SurfaceClass):
                raise InputError(f"{where}: expected a surface class entry")
            if value.genus != self.genus:
                raise InputError(f"{where}: genus {value.genus} != component genus {self.genus}")
            even = degree % 2 == 0
            c0 = value.c0 if even else _zero_scalar(self.rank)
            c2 = value.c2 if even and degree >= 2 else _zero_scalar(self.rank)
            c1 = value.c1 if not even else tuple(_zero_scalar(self.rank) for _ in value.c1)
            if even and any(bool(x) for x in value.c1):
                raise InputError(f"{where}: H^1 part must vanish in even degree")
            if not even and (bool(value.c0) or bool(value.c2)):
                raise InputError(f"{where}: H^0 and H^2 parts must vanish in odd degree")
            if degree < 2 and bool(value.c2):
                raise InputError(f"{where}: H^2 part needs degree at least 2")
            if self.rank is not None:
                c0 = _check_scalar_entry(c0, self.rank, degree // 2, where) if even else c0
                if not even:
                    c1 = tuple(
                        _check_scalar_entry(x, self.rank, (degree - 1) // 2, where) for x in c1
                    )
                if even and degree >= 2:
                    c2 = _check_scalar_entry(c2, self.rank, (degree - 2) // 2, where)
            entry = SurfaceClass(self.genus, c0, c1, c2)
            if entry:
                clean[degree] = entry
        self.entries = clean

    def entry(self, degree: int):
        if degree in self.entries:
            return self.entries[degree]
        if self.kind == "point":
            return _zero_scalar(self.rank)
        zero = _zero_scalar(self.rank)
        return SurfaceClass(self.genus, zero, tuple(zero for _ in range(2 * self.genus)), zero)

    def degrees(self) -> list[int]:
        return sorted(self.entries)
