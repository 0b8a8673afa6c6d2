"""Fusion rings with one self-conjugate generator: SU_q(2) and its even part.

Labels carry a nonnegative integer level.  The full ring has one
irreducible ``u<n>`` of dimension ``n + 1`` per level, with the familiar
truncation-free product ladder; the even part relabels the even levels
as ``v<k>`` of dimension ``2k + 1`` and its ladder runs over every
intermediate level.
"""

from __future__ import annotations

import re

from ..core import Decomposition, FusionProvider, IrrLabel
from ..errors import UnknownLabel

__all__ = ["SU2Provider", "SO3Provider", "suq2_ring", "so3_ring"]


class SU2Provider(FusionProvider):
    """One irreducible per level n >= 0; u_m (x) u_n runs |m-n| .. m+n by 2."""

    name = "suq2"
    _id_re = re.compile(r"u(0|[1-9]\d*)$")

    def unit(self) -> IrrLabel:
        return self._at(0)

    def _at(self, n: int) -> IrrLabel:
        return IrrLabel(f"u{n}", n + 1)

    def level(self, u: IrrLabel) -> int:
        match = self._id_re.match(u.id)
        if not match or int(match.group(1)) + 1 != u.dim:
            raise UnknownLabel(f"{self.name}: foreign label {u.id!r}")
        return int(match.group(1))

    def conj(self, u: IrrLabel) -> IrrLabel:
        self.level(u)
        return u

    def _decompose(self, u: IrrLabel, v: IrrLabel) -> Decomposition:
        m, n = self.level(u), self.level(v)
        return Decomposition({self._at(k): 1 for k in range(abs(m - n), m + n + 1, 2)})

    def enumerate(self, count: int) -> list[IrrLabel]:
        return [self._at(n) for n in range(count)]

    def label_size(self, u: IrrLabel) -> int:
        return self.level(u)

    def parse_label(self, text: str) -> IrrLabel:
        match = self._id_re.match(text)
        if not match:
            raise UnknownLabel(f"{self.name}: no irreducible with id {text!r}")
        return self._at(int(match.group(1)))


class SO3Provider(FusionProvider):
    """Even-level part of the ladder ring, relabeled; v_j (x) v_k runs |j-k| .. j+k."""

    name = "so3"
    _id_re = re.compile(r"v(0|[1-9]\d*)$")

    def unit(self) -> IrrLabel:
        return self._at(0)

    def _at(self, k: int) -> IrrLabel:
        return IrrLabel(f"v{k}", 2 * k + 1)

    def level(self, u: IrrLabel) -> int:
        match = self._id_re.match(u.id)
        if not match or 2 * int(match.group(1)) + 1 != u.dim:
            raise UnknownLabel(f"{self.name}: foreign label {u.id!r}")
        return int(match.group(1))

    def conj(self, u: IrrLabel) -> IrrLabel:
        self.level(u)
        return u

    def _decompose(self, u: IrrLabel, v: IrrLabel) -> Decomposition:
        j, k = self.level(u), self.level(v)
        return Decomposition({self._at(i): 1 for i in range(abs(j - k), j + k + 1)})

    def enumerate(self, count: int) -> list[IrrLabel]:
        return [self._at(k) for k in range(count)]

    def label_size(self, u: IrrLabel) -> int:
        return self.level(u)

    def parse_label(self, text: str) -> IrrLabel:
        match = self._id_re.match(text)
        if not match:
            raise UnknownLabel(f"{self.name}: no irreducible with id {text!r}")
        return self._at(int(match.group(1)))


def suq2_ring() -> SU2Provider:
    return SU2Provider()


def so3_ring() -> SO3Provider:
    return SO3Provider()
