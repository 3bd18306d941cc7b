"""Exact sparse multivariate polynomials over the Gaussian integers.

This is the value domain of every holonomy computation: matrix entries and
trace polynomials live in Z[i][t1, ..., tn], one variable per pants curve.
No floating point ever enters; coefficients are arbitrary-precision.

Representation
--------------
A ``GaussPoly`` wraps a term dict mapping exponent tuples (one slot per
variable) to nonzero ``(re, im)`` integer pairs.  The dict is the canonical
form: two polynomials are equal iff their term dicts are equal.  The actual
add/mul loops live in an arithmetic kernel, either the compiled extension
``_poly_c`` or the pure-Python ``_poly_py`` fallback, selected at import
(override with ``PLUMBTRACE_KERNEL=pure|compiled`` or ``set_kernel``).

Monomial order
--------------
Graded lexicographic with t1 < t2 < ...: compare total degree first, then
exponent tuples reading the last variable as most significant.  Rendering
lists terms in descending order of this key.

Text grammar (stable; golden tests are byte-exact)
--------------------------------------------------
    poly    := "0" | term (" + " term | " - " term)*
    term    := coeff | coeff "*" mono | mono | "i" "*" mono | ...
    mono    := "t<k>" ["^" <e>] ("*" "t<k>" ["^" <e>])*   (k ascending, e >= 1)

Coefficients render as ``4``, ``i``, ``4i`` for pure real/imaginary values
(sign pulled out into the joining operator) and as a parenthesised pair
``(3+2i)``, ``(-3+2i)``, ``(3-i)`` for mixed values (sign kept inside).
A unit coefficient on a nonconstant term is dropped: ``t1``, ``-t1``,
``i*t1``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from . import _poly_py

try:  # compiled kernel is optional
    from . import _poly_c
except ImportError:  # pragma: no cover - depends on build
    _poly_c = None

_KERNELS = {"pure": _poly_py}
if _poly_c is not None:
    _KERNELS["compiled"] = _poly_c

_env = os.environ.get("PLUMBTRACE_KERNEL", "").strip().lower()
if _env in _KERNELS:
    _kernel = _KERNELS[_env]
else:
    _kernel = _KERNELS.get("compiled", _poly_py)


def kernel_name() -> str:
    """Name of the arithmetic kernel in use: 'compiled' or 'pure'."""
    return "compiled" if _kernel is _poly_c and _poly_c is not None else "pure"


def available_kernels() -> tuple[str, ...]:
    return tuple(sorted(_KERNELS))


def set_kernel(name: str) -> None:
    """Switch the arithmetic kernel (used by benchmarks and kernel tests)."""
    global _kernel
    if name not in _KERNELS:
        raise ValueError(f"unknown kernel {name!r}; available: {available_kernels()}")
    _kernel = _KERNELS[name]


@dataclass(frozen=True)
class GaussInt:
    """A Gaussian integer re + im*i with exact integer components."""

    re: int = 0
    im: int = 0

    def __add__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re + other.re, self.im + other.im)

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def __sub__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __str__(self) -> str:
        return _coeff_str((self.re, self.im), bare=True)


def grlex_key(mono: tuple[int, ...]) -> tuple:
    """Sort key realizing the graded-lex order with t1 < t2 < ...."""
    return (sum(mono), tuple(reversed(mono)))


def _coeff_str(c: tuple[int, int], bare: bool = False) -> str:
    """Render one Gaussian integer; `bare` keeps the sign inline (for GaussInt)."""
    r, i = c
    if i == 0:
        return str(r)
    if r == 0:
        if i == 1:
            return "i"
        if i == -1:
            return "-i"
        return f"{i}i"
    im = "+i" if i == 1 else ("-i" if i == -1 else f"{i:+d}i")
    s = f"{r}{im}"
    return s if bare else f"({s})"


def _mono_str(mono: tuple[int, ...]) -> str:
    parts = []
    for k, e in enumerate(mono):
        if e == 1:
            parts.append(f"t{k + 1}")
        elif e > 1:
            parts.append(f"t{k + 1}^{e}")
    return "*".join(parts)


class GaussPoly:
    """Immutable sparse polynomial over the Gaussian integers.

    Construct through the classmethods (``zero``, ``const``, ``var``,
    ``from_terms``); the raw constructor trusts its input dict to be
    canonical and takes ownership of it.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: dict):
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, *a):  # immutability guard
        raise AttributeError("GaussPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "GaussPoly":
        return cls(arity, {})

    @classmethod
    def const(cls, arity: int, re: int, im: int = 0) -> "GaussPoly":
        if re == 0 and im == 0:
            return cls(arity, {})
        return cls(arity, {(0,) * arity: (re, im)})

    @classmethod
    def var(cls, arity: int, index: int) -> "GaussPoly":
        """The variable t_{index+1} (index is 0-based)."""
        if not 0 <= index < arity:
            raise ValueError(f"variable index {index} out of range for arity {arity}")
        mono = tuple(1 if k == index else 0 for k in range(arity))
        return cls(arity, {mono: (1, 0)})

    @classmethod
    def from_terms(cls, arity: int, terms: dict) -> "GaussPoly":
        """Build from {exponent tuple: (re, im) or GaussInt}, pruning zeros."""
        out = {}
        for mono, c in terms.items():
            if isinstance(c, GaussInt):
                c = (c.re, c.im)
            elif isinstance(c, int):
                c = (c, 0)
            if len(mono) != arity:
                raise ValueError("monomial length does not match arity")
            if any(e < 0 for e in mono):
                raise ValueError("negative exponent")
            if c[0] or c[1]:
                out[tuple(mono)] = (int(c[0]), int(c[1]))
        return cls(arity, out)

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "GaussPoly") -> None:
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other: "GaussPoly") -> "GaussPoly":
        self._check(other)
        return GaussPoly(self.arity, _kernel.padd(self.terms, other.terms))

    def __sub__(self, other: "GaussPoly") -> "GaussPoly":
        self._check(other)
        return GaussPoly(self.arity, _kernel.padd(self.terms, _kernel.pneg(other.terms)))

    def __neg__(self) -> "GaussPoly":
        return GaussPoly(self.arity, _kernel.pneg(self.terms))

    def __mul__(self, other: "GaussPoly") -> "GaussPoly":
        self._check(other)
        return GaussPoly(self.arity, _kernel.pmul(self.terms, other.terms))

    def scale(self, re: int, im: int = 0) -> "GaussPoly":
        return GaussPoly(self.arity, _kernel.pscale(self.terms, (re, im)))

    def __pow__(self, n: int) -> "GaussPoly":
        if n < 0:
            raise ValueError("negative power")
        out = GaussPoly.const(self.arity, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GaussPoly)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self.terms.items())))

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: tuple[int, ...]) -> GaussInt:
        """Stored coefficient of `mono`, or zero if absent."""
        if len(mono) != self.arity:
            raise ValueError("monomial length does not match arity")
        c = self.terms.get(tuple(mono), (0, 0))
        return GaussInt(*c)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, index: int) -> int:
        """Degree in variable `index` (0-based); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(m[index] for m in self.terms)

    def leading_monomial(self) -> tuple[int, ...]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=grlex_key)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], GaussInt]]:
        """Terms in descending graded-lex order."""
        return [
            (m, GaussInt(*self.terms[m]))
            for m in sorted(self.terms, key=grlex_key, reverse=True)
        ]

    def shift_var(self, index: int, c: int) -> "GaussPoly":
        """Exact substitution t_{index+1} -> t_{index+1} + c (binomial expansion)."""
        out: dict = {}
        for mono, (r, i) in self.terms.items():
            n = mono[index]
            for j in range(n + 1):
                coeff = math.comb(n, j) * c ** (n - j)
                m = mono[:index] + (j,) + mono[index + 1 :]
                ar, ai = out.get(m, (0, 0))
                ar += r * coeff
                ai += i * coeff
                if ar or ai:
                    out[m] = (ar, ai)
                elif m in out:
                    del out[m]
        return GaussPoly(self.arity, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for mono, c in self.sorted_terms():
            r, i = c.re, c.im
            mixed = r != 0 and i != 0
            if mixed:
                neg = False
                body = _coeff_str((r, i))
            elif i == 0:
                neg = r < 0
                body = str(abs(r))
            else:
                neg = i < 0
                mag = abs(i)
                body = "i" if mag == 1 else f"{mag}i"
            ms = _mono_str(mono)
            if ms:
                body = ms if body == "1" else f"{body}*{ms}"
            if not chunks:
                chunks.append(f"-{body}" if neg else body)
            else:
                chunks.append(f" - {body}" if neg else f" + {body}")
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"GaussPoly({self})"


def canonical_sign(p: GaussPoly) -> GaussPoly:
    """Fix the overall +- ambiguity of a nonzero polynomial.

    Returns p or -p, whichever makes the coefficient of the graded-lex
    greatest monomial have re > 0, or re == 0 and im > 0.
    """
    if p.is_zero():
        raise ValueError("canonical_sign of the zero polynomial")
    r, i = p.terms[p.leading_monomial()]
    if r < 0 or (r == 0 and i < 0):
        return -p
    return p


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix over GaussPoly, row-major entries (a b; c d)."""

    a: GaussPoly
    b: GaussPoly
    c: GaussPoly
    d: GaussPoly

    def __post_init__(self):
        n = self.a.arity
        if not (self.b.arity == self.c.arity == self.d.arity == n):
            raise ValueError("arity mismatch between matrix entries")

    @property
    def arity(self) -> int:
        return self.a.arity

    @classmethod
    def identity(cls, arity: int) -> "Mat2":
        one = GaussPoly.const(arity, 1)
        zero = GaussPoly.zero(arity)
        return cls(one, zero, zero, one)

    @classmethod
    def of_ints(cls, arity: int, rows: tuple) -> "Mat2":
        """Constant matrix from ((a, b), (c, d)); entries are ints or (re, im)."""
        (a, b), (c, d) = rows

        def lift(v):
            if isinstance(v, tuple):
                return GaussPoly.const(arity, v[0], v[1])
            return GaussPoly.const(arity, v)

        return cls(lift(a), lift(b), lift(c), lift(d))

    def __matmul__(self, other: "Mat2") -> "Mat2":
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        a, b, c, d = _kernel.mat_mul(
            (self.a.terms, self.b.terms, self.c.terms, self.d.terms),
            (other.a.terms, other.b.terms, other.c.terms, other.d.terms),
        )
        n = self.arity
        return Mat2(GaussPoly(n, a), GaussPoly(n, b), GaussPoly(n, c), GaussPoly(n, d))

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def scale(self, re: int, im: int = 0) -> "Mat2":
        return Mat2(
            self.a.scale(re, im),
            self.b.scale(re, im),
            self.c.scale(re, im),
            self.d.scale(re, im),
        )

    def trace(self) -> GaussPoly:
        return self.a + self.d

    def det(self) -> GaussPoly:
        return self.a * self.d - self.b * self.c

    def adjugate(self) -> "Mat2":
        """(d -b; -c a); equals the inverse when det == 1."""
        return Mat2(self.d, -self.b, -self.c, self.a)

    def entries(self) -> tuple[GaussPoly, GaussPoly, GaussPoly, GaussPoly]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"
