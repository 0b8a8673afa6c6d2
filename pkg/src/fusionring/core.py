"""Core value types and the provider interface for fusion rings.

A fusion ring is presented here by a provider object: it names its
irreducibles, pairs each with its conjugate, and expands products of
irreducibles into nonnegative integer combinations of irreducibles.  All
arithmetic is exact; nothing in this module touches floating point.

Canonical label order, used everywhere a deterministic listing is needed,
is ``(dim, id)`` lexicographic.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import UnknownLabel, UnsupportedProvider

__all__ = [
    "IrrLabel",
    "Decomposition",
    "VirtualElement",
    "Budget",
    "FusionProvider",
    "canonical_key",
    "canonical_sort",
]


@dataclass(frozen=True, order=True)
class IrrLabel:
    """An irreducible, identified by a provider-unique id string.

    ``dim`` is the classical/quantum-independent integer dimension used by
    the ring-level machinery (restriction counts, dimension ideals).
    """

    id: str
    dim: int

    def __post_init__(self):
        if not self.id:
            raise ValueError("empty label id")
        if self.dim < 1:
            raise ValueError(f"label {self.id!r} has dim {self.dim} < 1")


def canonical_key(label: IrrLabel) -> tuple[int, str]:
    return (label.dim, label.id)


def canonical_sort(labels: Iterable[IrrLabel]) -> list[IrrLabel]:
    return sorted(labels, key=canonical_key)


class Decomposition:
    """A product of irreducibles expanded as ``sum mult * irreducible``.

    Immutable.  Entries are kept in canonical order and every multiplicity
    is a positive integer.
    """

    __slots__ = ("_entries", "_by_label")

    def __init__(self, counts: Mapping[IrrLabel, int]):
        items = []
        for lab, mult in counts.items():
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {lab.id}")
            if mult > 0:
                items.append((lab, int(mult)))
        items.sort(key=lambda it: canonical_key(it[0]))
        self._entries: tuple[tuple[IrrLabel, int], ...] = tuple(items)
        self._by_label = {lab: m for lab, m in items}

    @property
    def entries(self) -> tuple[tuple[IrrLabel, int], ...]:
        return self._entries

    def multiplicity(self, label: IrrLabel) -> int:
        return self._by_label.get(label, 0)

    def constituents(self) -> list[IrrLabel]:
        return [lab for lab, _ in self._entries]

    def total_dim(self) -> int:
        return sum(m * lab.dim for lab, m in self._entries)

    def __iter__(self) -> Iterator[tuple[IrrLabel, int]]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, label: IrrLabel) -> bool:
        return label in self._by_label

    def __eq__(self, other) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        body = " + ".join(
            (f"{m}*{lab.id}" if m != 1 else lab.id) for lab, m in self._entries
        )
        return f"<Decomposition {body or '0'}>"


class VirtualElement:
    """Integer combination of irreducibles; coefficients of any sign."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[IrrLabel, int] = ()):
        cleaned = {lab: int(c) for lab, c in dict(coeffs).items() if c != 0}
        self._coeffs = cleaned

    @classmethod
    def of(cls, label: IrrLabel, coeff: int = 1) -> "VirtualElement":
        return cls({label: coeff})

    @classmethod
    def from_decomposition(cls, dec: Decomposition) -> "VirtualElement":
        return cls(dict(dec.entries))

    @property
    def coeffs(self) -> dict[IrrLabel, int]:
        return dict(self._coeffs)

    def coeff(self, label: IrrLabel) -> int:
        return self._coeffs.get(label, 0)

    def support(self) -> list[IrrLabel]:
        return canonical_sort(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_effective(self) -> bool:
        """True when every coefficient is nonnegative."""
        return all(c >= 0 for c in self._coeffs.values())

    def __add__(self, other: "VirtualElement") -> "VirtualElement":
        out = dict(self._coeffs)
        for lab, c in other._coeffs.items():
            out[lab] = out.get(lab, 0) + c
        return VirtualElement(out)

    def __sub__(self, other: "VirtualElement") -> "VirtualElement":
        out = dict(self._coeffs)
        for lab, c in other._coeffs.items():
            out[lab] = out.get(lab, 0) - c
        return VirtualElement(out)

    def __mul__(self, scalar: int) -> "VirtualElement":
        return VirtualElement({lab: c * scalar for lab, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, VirtualElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(((canonical_key(l), c) for l, c in self._coeffs.items()))))

    def __repr__(self) -> str:
        parts = [f"{c}*{lab.id}" for lab, c in sorted(self._coeffs.items(), key=lambda it: canonical_key(it[0]))]
        return f"<VirtualElement {' + '.join(parts) or '0'}>"


@dataclass(frozen=True)
class Budget:
    """Caps for closure and scan computations.

    ``max_label_size`` is measured in each provider's own size unit (word
    length, highest weight, alternation blocks); see the provider docs.
    """

    max_irreducibles: int = 64
    max_rounds: int = 32
    max_label_size: int = 8

    def __post_init__(self):
        for name in ("max_irreducibles", "max_rounds", "max_label_size"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    def replace(self, **kw) -> "Budget":
        merged = {
            "max_irreducibles": self.max_irreducibles,
            "max_rounds": self.max_rounds,
            "max_label_size": self.max_label_size,
        }
        merged.update(kw)
        return Budget(**merged)


class FusionProvider(ABC):
    """Interface every ring backend implements.

    Contracts:

    * ``unit`` is self-conjugate and neutral for ``decompose``.
    * ``conj`` is a label-wise involution.
    * ``decompose(u, v)`` satisfies the dimension identity
      ``sum mult*dim == dim(u)*dim(v)``.
    * ``enumerate(n)`` lists the first ``n`` irreducibles in a canonical,
      provider-documented order; longer listings extend shorter ones.
    * ``order_oracle`` is implemented only by group-like backends, where
      every irreducible is invertible; everything else raises.

    ``decompose`` results are memoized on the instance, so backends
    implement ``_decompose`` and must treat labels as immutable.
    """

    name: str = "ring"

    def __init__(self):
        self._decompose_cache: dict[tuple[IrrLabel, IrrLabel], Decomposition] = {}

    @abstractmethod
    def unit(self) -> IrrLabel:
        ...

    @abstractmethod
    def conj(self, u: IrrLabel) -> IrrLabel:
        ...

    @abstractmethod
    def _decompose(self, u: IrrLabel, v: IrrLabel) -> Decomposition:
        ...

    @abstractmethod
    def enumerate(self, count: int) -> list[IrrLabel]:
        ...

    def decompose(self, u: IrrLabel, v: IrrLabel) -> Decomposition:
        key = (u, v)
        hit = self._decompose_cache.get(key)
        if hit is None:
            hit = self._decompose(u, v)
            self._decompose_cache[key] = hit
        return hit

    def multiplicity(self, w: IrrLabel, u: IrrLabel, v: IrrLabel) -> int:
        """Fusion coefficient of ``w`` in ``u (x) v``."""
        return self.decompose(u, v).multiplicity(w)

    def order_oracle(self, u: IrrLabel) -> int | float:
        """Tensor order of ``u``: positive int, or ``math.inf``.

        Only group-like backends can answer; the default refuses.
        """
        raise UnsupportedProvider(f"{self.name}: no order oracle")

    @property
    def num_irreducibles(self) -> int | float:
        """Total number of irreducibles, ``math.inf`` when infinite."""
        return math.inf

    def label_size(self, u: IrrLabel) -> int:
        """Size of a label in this provider's unit (see class docs)."""
        return 1

    def parse_label(self, text: str) -> IrrLabel:
        """Resolve an id string to a label; raises UnknownLabel."""
        for lab in self.enumerate(min(self._parse_window(), 10_000)):
            if lab.id == text:
                return lab
        raise UnknownLabel(f"{self.name}: no irreducible with id {text!r}")

    def _parse_window(self) -> int:
        n = self.num_irreducibles
        return n if isinstance(n, int) else 10_000

    # -- derived ring arithmetic ------------------------------------------

    def multiply_virtual(self, x: VirtualElement, y: VirtualElement) -> VirtualElement:
        """Bilinear extension of ``decompose`` to integer combinations."""
        acc: dict[IrrLabel, int] = {}
        for a, ca in x.coeffs.items():
            for b, cb in y.coeffs.items():
                for w, m in self.decompose(a, b):
                    acc[w] = acc.get(w, 0) + ca * cb * m
        return VirtualElement(acc)

    def product_element(self, labels: Iterable[IrrLabel]) -> VirtualElement:
        """Left-to-right product of a sequence of irreducibles."""
        out = VirtualElement.of(self.unit())
        for lab in labels:
            out = self.multiply_virtual(out, VirtualElement.of(lab))
        return out
