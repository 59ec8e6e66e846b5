"""Fock space in the standard (Verma-class) basis and the raising operators.

A FockVector is a finite combination of partition basis vectors with
Laurent-polynomial coefficients in the grading variable v; exponents are
exact rationals.  Multiplication by v encodes a grading shift of 1/b, so
vectors model graded classes expanded in standard-module classes whose own
lowest degrees are the zero points of their v-exponents.

Operators:

* b_op(i, b, .)       multiplication by the power sum p_{i b},
* b_tau(tau, b, .)    multiplication by the plethysm s_tau[p_b],
* b_rep(U, b)         linear combination of b_tau over the irreducible
                      constituents of a virtual representation U,
* heis_modp           the graded operator sum_i (-1)^i v^{b p i}
                      b_{tau (x) Lambda^i} coming from a Koszul resolution
                      in characteristic p,
* heis_neg            the conjectural transposed-basis variant, gated
                      behind an explicit flag.

Multiplication by s_tau[p_b] is evaluated through the power-sum pivot
(border-strip chains weighted by characters); the agreement with the
iterated-Pieri product of symfunc is part of the test suite.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from functools import cache

from . import schar, young
from .errors import ConjecturalDisabled, InvalidInput
from .partitions import Partition, canonical_key, partitions_of, transpose


class ExponentDenominatorWarning(UserWarning):
    """A v-exponent fell outside the expected (1/(2b)) Z lattice."""


_ZERO = Fraction(0)


class LaurentScalar:
    """Sparse Laurent polynomial in v with rational exponents and coefficients."""

    __slots__ = ("_m",)

    def __init__(self, monomials=None):
        m = {}
        if monomials:
            for e, c in dict(monomials).items():
                e = Fraction(e)
                c = Fraction(c)
                if c:
                    m[e] = c
        self._m = m

    @classmethod
    def _raw(cls, m: dict) -> "LaurentScalar":
        # internal fast path: m holds nonzero Fractions keyed by Fractions
        self = object.__new__(cls)
        self._m = m
        return self

    @classmethod
    def zero(cls) -> "LaurentScalar":
        return cls()

    @classmethod
    def one(cls) -> "LaurentScalar":
        return cls({Fraction(0): Fraction(1)})

    @classmethod
    def from_rational(cls, c) -> "LaurentScalar":
        return cls({Fraction(0): Fraction(c)})

    @classmethod
    def v_power(cls, e, c=1) -> "LaurentScalar":
        return cls({Fraction(e): Fraction(c)})

    def monomials(self):
        """(exponent, coefficient) pairs sorted by exponent."""
        return sorted(self._m.items())

    def is_zero(self) -> bool:
        return not self._m

    def __bool__(self) -> bool:
        return bool(self._m)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentScalar):
            return self._m == other._m
        if isinstance(other, (int, Fraction)):
            return self == LaurentScalar.from_rational(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._m.items()))

    def __add__(self, other: "LaurentScalar") -> "LaurentScalar":
        acc = dict(self._m)
        for e, c in other._m.items():
            cur = acc.get(e)
            if cur is None:
                acc[e] = c
            else:
                cur = cur + c
                if cur:
                    acc[e] = cur
                else:
                    del acc[e]
        return LaurentScalar._raw(acc)

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar._raw({e: -c for e, c in self._m.items()})

    def __sub__(self, other: "LaurentScalar") -> "LaurentScalar":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentScalar._raw({})
            scalar = Fraction(other)
            return LaurentScalar._raw({e: c * scalar for e, c in self._m.items()})
        acc: dict[Fraction, Fraction] = {}
        for e1, c1 in self._m.items():
            for e2, c2 in other._m.items():
                e = e1 + e2
                cur = acc.get(e, _ZERO) + c1 * c2
                if cur:
                    acc[e] = cur
                elif e in acc:
                    del acc[e]
        return LaurentScalar._raw(acc)

    __rmul__ = __mul__

    def shift(self, e) -> "LaurentScalar":
        """Multiply by v^e."""
        e = Fraction(e)
        return LaurentScalar._raw({e0 + e: c for e0, c in self._m.items()})

    def at_one(self) -> Fraction:
        """Formal substitution v -> 1."""
        return sum(self._m.values(), Fraction(0))

    def min_exponent(self) -> Fraction | None:
        return min(self._m) if self._m else None

    def exponents_in_lattice(self, denominator: int) -> bool:
        """True iff every exponent is an integer multiple of 1/denominator."""
        return all((e * denominator).denominator == 1 for e in self._m)

    def __repr__(self) -> str:
        if not self._m:
            return "0"
        bits = []
        for e, c in self.monomials():
            if e == 0:
                bits.append(str(c))
            else:
                bits.append(f"{c}*v^{e}")
        return " + ".join(bits)

    def to_json(self) -> dict:
        return {
            "monomials": [
                {"vexp": str(e), "c": str(c)} for e, c in self.monomials()
            ]
        }

    @classmethod
    def from_json(cls, data) -> "LaurentScalar":
        try:
            return cls(
                {Fraction(m["vexp"]): Fraction(m["c"]) for m in data["monomials"]}
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed Laurent scalar JSON: {data!r}") from exc


class FockVector:
    """Finite combination of partition basis vectors with LaurentScalar coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        t: dict[Partition, LaurentScalar] = {}
        if terms:
            for eta, c in dict(terms).items():
                if isinstance(c, (int, Fraction)):
                    c = LaurentScalar.from_rational(c)
                if c:
                    t[Partition(eta)] = c
        self._terms = t

    @classmethod
    def _raw(cls, terms: dict) -> "FockVector":
        # internal fast path: Partition keys, nonzero LaurentScalar values
        self = object.__new__(cls)
        self._terms = terms
        return self

    @classmethod
    def zero(cls) -> "FockVector":
        return cls()

    @classmethod
    def vacuum(cls) -> "FockVector":
        return cls({Partition(): LaurentScalar.one()})

    @classmethod
    def basis(cls, eta, coeff=1) -> "FockVector":
        return cls({Partition(eta): coeff})

    def coefficient(self, eta) -> LaurentScalar:
        return self._terms.get(Partition(eta), LaurentScalar.zero())

    def terms(self):
        """(partition, coefficient) pairs in canonical partition order."""
        return sorted(self._terms.items(), key=lambda kv: canonical_key(kv[0]))

    def support(self):
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, FockVector) and self._terms == other._terms

    def __add__(self, other: "FockVector") -> "FockVector":
        acc = dict(self._terms)
        for eta, c in other._terms.items():
            cur = acc.get(eta)
            if cur is None:
                acc[eta] = c
            else:
                cur = cur + c
                if cur:
                    acc[eta] = cur
                else:
                    del acc[eta]
        return FockVector._raw(acc)

    def __neg__(self) -> "FockVector":
        return FockVector._raw({eta: -c for eta, c in self._terms.items()})

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def scale(self, scalar) -> "FockVector":
        if isinstance(scalar, (int, Fraction)) and not scalar:
            return FockVector._raw({})
        return FockVector._raw({eta: scalar * c for eta, c in self._terms.items()})

    def shift(self, e) -> "FockVector":
        """Multiply every coefficient by v^e."""
        return FockVector._raw({eta: c.shift(e) for eta, c in self._terms.items()})

    def at_v_one(self) -> "FockVector":
        """Formal substitution v -> 1 in every coefficient."""
        out = {}
        for eta, c in self._terms.items():
            value = c.at_one()
            if value:
                out[eta] = LaurentScalar._raw({_ZERO: value})
        return FockVector._raw(out)

    def map_basis(self, kernel) -> "FockVector":
        """Apply a linear map given on basis partitions by an integer kernel.

        kernel(parts tuple) must return ((parts tuple, int), ...).
        """
        acc: dict[Partition, LaurentScalar] = {}
        wrap = Partition._from_trusted
        for eta, c in self._terms.items():
            for mu, k in kernel(tuple(eta)):
                key = wrap(mu)
                add = c * k
                cur = acc.get(key)
                if cur is None:
                    acc[key] = add
                else:
                    cur = cur + add
                    if cur:
                        acc[key] = cur
                    else:
                        del acc[key]
        return FockVector._raw(acc)

    def transpose_basis(self) -> "FockVector":
        """The involution sending each basis partition to its transpose."""
        return FockVector._raw(
            {transpose(eta): c for eta, c in self._terms.items()}
        )

    def min_exponent(self) -> Fraction | None:
        exps = [c.min_exponent() for c in self._terms.values()]
        exps = [e for e in exps if e is not None]
        return min(exps) if exps else None

    def __repr__(self) -> str:
        if not self._terms:
            return "FockVector(0)"
        bits = [f"({c!r})*[{tuple(eta)}]" for eta, c in self.terms()]
        return "FockVector(" + " + ".join(bits) + ")"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"mu": list(eta), "coeff": c.to_json()} for eta, c in self.terms()
            ]
        }

    @classmethod
    def from_json(cls, data) -> "FockVector":
        try:
            return cls(
                {
                    Partition(t["mu"]): LaurentScalar.from_json(t["coeff"])
                    for t in data["terms"]
                }
            )
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed Fock vector JSON: {data!r}") from exc


def _warn_exponents(x: FockVector, b: int) -> None:
    # grading conventions place all exponents in (1/(2b)) Z; outliers are
    # suspicious but not fatal, so this only warns
    for _, c in x.terms():
        if not c.exponents_in_lattice(2 * b):
            warnings.warn(
                f"v-exponents outside (1/{2*b})Z detected",
                ExponentDenominatorWarning,
                stacklevel=3,
            )
            return


def b_op(i: int, b: int, x: FockVector) -> FockVector:
    """Raising operator: multiplication by the power sum p_{i b}."""
    if i < 1:
        raise InvalidInput(f"i must be a positive integer, got {i}")
    if b < 1:
        raise InvalidInput(f"b must be a positive integer, got {b}")
    r = i * b
    return x.map_basis(lambda eta: young.powersum_times_basis(r, eta))


@cache
def _plethysm_power_form(tau: tuple, b: int) -> tuple:
    """s_tau[p_b] in the power-sum basis: ((chain, numerator, denominator), ...).

    chain is b*rho sorted descending; the coefficient is chi_tau(rho)/z_rho.
    """
    d = sum(tau)
    out = []
    for rho in partitions_of(d):
        chi = young.mn_character(tau, tuple(rho))
        if chi:
            chain = tuple(sorted((b * x for x in rho), reverse=True))
            out.append((chain, chi, schar.centralizer_order(rho)))
    return tuple(out)


@cache
def _b_tau_on_basis(tau: tuple, b: int, eta: tuple) -> tuple:
    """Schur expansion of s_tau[p_b] * s_eta as ((mu, int), ...)."""
    acc: dict[tuple, Fraction] = {}
    for chain, num, den in _plethysm_power_form(tau, b):
        c = Fraction(num, den)
        for mu, k in young.powersum_chain_on_basis(chain, eta):
            acc[mu] = acc.get(mu, Fraction(0)) + c * k
    out = []
    for mu, c in acc.items():
        if c:
            if c.denominator != 1:
                raise ArithmeticError(
                    f"non-integer coefficient {c} in plethysm multiplication"
                )
            out.append((mu, int(c)))
    return tuple(out)


def b_tau(tau, b: int, x: FockVector) -> FockVector:
    """Raising operator: multiplication by the plethysm s_tau[p_b]."""
    tau = Partition(tau)
    if b < 1:
        raise InvalidInput(f"b must be a positive integer, got {b}")
    if not tau:
        return x
    return x.map_basis(lambda eta: _b_tau_on_basis(tuple(tau), b, eta))


def b_rep(U: schar.VirtualRep, b: int):
    """Operator sum_sigma mult_U(sigma) * b_tau(sigma, b, .)."""
    if b < 1:
        raise InvalidInput(f"b must be a positive integer, got {b}")
    terms = list(U.terms.items())

    def apply(x: FockVector) -> FockVector:
        acc = FockVector.zero()
        for sigma, mult in terms:
            acc = acc + b_tau(sigma, b, x).scale(mult)
        return acc

    return apply


@cache
def _koszul_layer(tau: tuple, i: int) -> "schar.VirtualRep":
    """Decomposition of tau (x) Lambda^i of the permutation representation."""
    d = sum(tau)
    return schar.kronecker_product(Partition(tau), schar.exterior_power_perm(d, i))


def heis_modp(tau, b: int, p: int, x: FockVector) -> FockVector:
    """Graded raising operator sum_i (-1)^i v^{b p i} b_{tau (x) Lambda^i C^d}.

    Here Lambda^i C^d is the i-th exterior power of the permutation
    representation of S_d, d = |tau| >= 1, and v^{b p} is the grading shift
    contributed by one Koszul step in characteristic p.
    """
    tau = Partition(tau)
    d = tau.size
    if d < 1:
        raise InvalidInput("tau must be a nonempty partition")
    if b < 1:
        raise InvalidInput(f"b must be a positive integer, got {b}")
    if p < 2:
        raise InvalidInput(f"p must be at least 2, got {p}")
    _warn_exponents(x, b)
    acc = FockVector.zero()
    for i in range(d + 1):
        U = _koszul_layer(tuple(tau), i)
        piece = b_rep(U, b)(x).shift(Fraction(b * p * i))
        acc = acc + piece if i % 2 == 0 else acc - piece
    return acc


def heis_neg(tau, b: int, p: int, x: FockVector, conjectural_flag: bool = False) -> FockVector:
    """Transposed-basis variant of heis_modp for negative parameters.

    The exact operator is only conjectural; this implements the conjugation
    omega . heis_modp(tau^t) . omega where omega transposes every basis
    partition.  Callers must opt in explicitly.
    """
    if not conjectural_flag:
        raise ConjecturalDisabled(
            "heis_neg implements a conjecture-level operator; "
            "pass conjectural_flag=True to enable it"
        )
    tau = Partition(tau)
    if tau.size < 1:
        raise InvalidInput("tau must be a nonempty partition")
    flipped = heis_modp(transpose(tau), b, p, x.transpose_basis())
    return flipped.transpose_basis()
