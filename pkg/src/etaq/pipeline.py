"""Symbolic coefficient pipelines.

A pipeline is a small expression tree: leaves produce coefficient series
(eta-quotients, Eisenstein series, the Hurwitz series, explicit closed
forms) and inner nodes apply operators or take linear combinations.
Evaluating to a bound back-propagates the truncation each leaf must reach,
so shrinking operators such as ``U`` and ``T_p`` never read past what was
computed.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterator, Optional

from .eisenstein import EisensteinSpec, e2_coeffs, eisenstein_coeffs
from .hurwitz import hurwitz_series
from .lvalues import CharacterSpec
from .operators import hecke_Tp, op_sieve, op_twist, op_U, op_V
from .qseries import CoeffSeries, EtaQuotientSpec, TruncationError, eta_fourier_series, eta_quotient_series


class Pipeline:
    """Base node.  Subclasses implement ``_eval`` and ``children``."""

    label = "?"

    def children(self) -> tuple[tuple["Pipeline", Callable[[int], int]], ...]:
        """Child nodes with the map from output bound to child bound."""
        return ()

    def evaluate(self, T: int, cache: Optional[dict] = None) -> CoeffSeries:
        cache = {} if cache is None else cache
        out = self._eval(T, cache)
        if out.truncation < T:
            raise TruncationError(f"{self.label} only reaches q^{out.truncation}, need q^{T}")
        return out.truncate(T)

    def _eval(self, T: int, cache: dict) -> CoeffSeries:
        raise NotImplementedError

    def requirements(self, T: int) -> Iterator[tuple[str, int]]:
        """``(leaf label, truncation)`` pairs needed to evaluate to ``T``."""
        kids = self.children()
        if not kids:
            yield self.label, T
        for child, bound in kids:
            yield from child.requirements(bound(T))

    def required_truncation(self, T: int) -> int:
        return max(t for _, t in self.requirements(T))

    # -- algebra ------------------------------------------------------------
    def __add__(self, other: "Pipeline") -> "Pipeline":
        return LinearCombination([(Fraction(1), self), (Fraction(1), other)])

    def __sub__(self, other: "Pipeline") -> "Pipeline":
        return LinearCombination([(Fraction(1), self), (Fraction(-1), other)])

    def __neg__(self) -> "Pipeline":
        return LinearCombination([(Fraction(-1), self)])

    def __rmul__(self, c) -> "Pipeline":
        return LinearCombination([(Fraction(c), self)])

    def U(self, ell: int) -> "Pipeline":
        return UNode(self, ell)

    def V(self, ell: int) -> "Pipeline":
        return VNode(self, ell)

    def sieve(self, M: int, m: int) -> "Pipeline":
        return SieveNode(self, M, m)

    def twist(self, chi: CharacterSpec) -> "Pipeline":
        return TwistNode(self, chi)

    def hecke(self, p: int, k: int, chi: CharacterSpec) -> "Pipeline":
        return HeckeNode(self, p, k, chi)

    def __str__(self) -> str:
        return self.label


class Leaf(Pipeline):
    """Leaf whose series depends only on its key; results are cached per call."""

    key: tuple = ()

    def _eval(self, T: int, cache: dict) -> CoeffSeries:
        hit = cache.get(self.key)
        if hit is not None and hit.truncation >= T:
            return hit.truncate(T)
        out = self.compute(T)
        cache[self.key] = out
        return out

    def compute(self, T: int) -> CoeffSeries:
        raise NotImplementedError


class Eta(Leaf):
    def __init__(self, spec: EtaQuotientSpec | str):
        self.spec = EtaQuotientSpec.parse(spec) if isinstance(spec, str) else spec
        self.key = ("eta", self.spec)
        self.label = f"eta[{self.spec}]"

    def compute(self, T: int) -> CoeffSeries:
        return eta_fourier_series(self.spec, T)


class EtaProduct(Leaf):
    """Product coefficients ``C(n)`` of an eta-quotient, without the ``q`` prefactor."""

    def __init__(self, spec: EtaQuotientSpec | str):
        self.spec = EtaQuotientSpec.parse(spec) if isinstance(spec, str) else spec
        self.key = ("etaprod", self.spec)
        self.label = f"C[{self.spec}]"

    def compute(self, T: int) -> CoeffSeries:
        return eta_quotient_series(self.spec, T)[1]


class Eisenstein(Leaf):
    def __init__(self, k: int, chi: int = 1, psi: int = 1):
        self.spec = EisensteinSpec(k, CharacterSpec(chi), CharacterSpec(psi))
        self.key = ("eis", self.spec)
        self.label = str(self.spec)

    def compute(self, T: int) -> CoeffSeries:
        return eisenstein_coeffs(self.spec, T)


class E2(Leaf):
    key = ("E2",)
    label = "E_2"

    def compute(self, T: int) -> CoeffSeries:
        return e2_coeffs(T)


class HurwitzGen(Leaf):
    key = ("H",)
    label = "H"

    def compute(self, T: int) -> CoeffSeries:
        return hurwitz_series(T)


class Coefficients(Leaf):
    """Closed-form coefficients ``n -> f(n)``."""

    def __init__(self, f: Callable[[int], object], label: str):
        self.f = f
        self.label = label
        self.key = ("fn", id(f), label)

    def compute(self, T: int) -> CoeffSeries:
        return CoeffSeries.from_function(self.f, T)


class Literal(Leaf):
    """A fixed, finite series; asking beyond its truncation is an error."""

    def __init__(self, series: CoeffSeries, label: str = "literal"):
        self.series = series
        self.label = label
        self.key = ("lit", id(series))

    def compute(self, T: int) -> CoeffSeries:
        if T > self.series.truncation:
            raise TruncationError(f"{self.label} is known only to q^{self.series.truncation}")
        return self.series.truncate(T)


class UNode(Pipeline):
    def __init__(self, child: Pipeline, ell: int):
        self.child, self.ell = child, ell
        self.label = f"{child.label}|U{ell}"

    def children(self):
        return ((self.child, lambda T: self.ell * T),)

    def _eval(self, T, cache):
        return op_U(self.child._eval(self.ell * T, cache), self.ell)


class VNode(Pipeline):
    def __init__(self, child: Pipeline, ell: int):
        self.child, self.ell = child, ell
        self.label = f"{child.label}|V{ell}"

    def children(self):
        return ((self.child, lambda T: T // self.ell),)

    def _eval(self, T, cache):
        return op_V(self.child._eval(T // self.ell, cache), self.ell, cap=T)


class SieveNode(Pipeline):
    def __init__(self, child: Pipeline, M: int, m: int):
        self.child, self.M, self.m = child, M, m
        self.label = f"{child.label}|S{M},{m}"

    def children(self):
        return ((self.child, lambda T: T),)

    def _eval(self, T, cache):
        return op_sieve(self.child._eval(T, cache), self.M, self.m)


class TwistNode(Pipeline):
    def __init__(self, child: Pipeline, chi: CharacterSpec):
        self.child, self.chi = child, chi
        self.label = f"{child.label}(x){chi}"

    def children(self):
        return ((self.child, lambda T: T),)

    def _eval(self, T, cache):
        return op_twist(self.child._eval(T, cache), self.chi)


class HeckeNode(Pipeline):
    def __init__(self, child: Pipeline, p: int, k: int, chi: CharacterSpec):
        self.child, self.p, self.k, self.chi = child, p, k, chi
        self.label = f"{child.label}|T{p}"

    def children(self):
        return ((self.child, lambda T: self.p * T),)

    def _eval(self, T, cache):
        return hecke_Tp(self.child._eval(self.p * T, cache), self.p, self.k, self.chi)


class LinearCombination(Pipeline):
    def __init__(self, terms: list[tuple[Fraction, Pipeline]]):
        flat: list[tuple[Fraction, Pipeline]] = []
        for c, node in terms:
            if isinstance(node, LinearCombination):
                flat.extend((c * c2, n2) for c2, n2 in node.terms)
            else:
                flat.append((Fraction(c), node))
        self.terms = flat
        self.label = " + ".join(f"({c})*{n.label}" for c, n in flat)

    def children(self):
        return tuple((n, lambda T: T) for _, n in self.terms)

    def _eval(self, T, cache):
        total = None
        for c, node in self.terms:
            part = node._eval(T, cache).truncate(T).scale(c)
            total = part if total is None else total + part
        return total
