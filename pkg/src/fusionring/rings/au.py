"""Fusion ring on the free monoid over a generator and its conjugate.

Irreducibles are words over ``u`` and ``U`` (``U`` = conjugate
generator); the unit is the empty word ``e``.  Products concatenate,
plus a recursive cancellation term whenever the junction letters are a
conjugate pair:

    (x a) (x) (b y) = x a b y                      if a == b
    (x a) (x) (b y) = x a b y + x (x) y            if a != b

Conjugation reverses the word and swaps the letters.  Dimensions depend
on the generator dimension ``d`` through a second-order recursion along
the word: a repeated letter multiplies by ``d``, an alternation
multiplies by ``d`` and subtracts the dimension two steps back.  For
``d = 2`` the alternating words give 1, 2, 3, 4, ...
"""

from __future__ import annotations

import re
from itertools import product as _product

from ..core import Decomposition, FusionProvider, IrrLabel
from ..errors import BadParameter, UnknownLabel

__all__ = ["AuWordLabel", "AuProvider", "au_ring"]


_WORD_RE = re.compile(r"[uU]*$")


class AuWordLabel:
    """Validated word over {u, U}; empty word spelled ``e``."""

    __slots__ = ("word",)

    def __init__(self, word: str):
        if word != "" and not _WORD_RE.match(word):
            raise ValueError(f"bad word {word!r}")
        self.word = word

    @classmethod
    def from_id(cls, text: str) -> "AuWordLabel":
        return cls("" if text == "e" else text)

    @property
    def id(self) -> str:
        return self.word or "e"

    def blocks(self) -> int:
        """Number of maximal same-letter runs."""
        runs = 0
        prev = None
        for ch in self.word:
            if ch != prev:
                runs += 1
                prev = ch
        return runs

    def balanced(self) -> bool:
        return self.word.count("u") == self.word.count("U")


class AuProvider(FusionProvider):
    """See module docstring.

    ``enumerate`` orders words by length, then lexicographically with
    ``u`` before ``U``.  ``label_size`` counts alternation runs, not
    letters, so long same-letter blocks stay cheap under closure caps.
    """

    def __init__(self, d_gen: int = 2):
        super().__init__()
        if d_gen < 2:
            raise BadParameter(f"generator dimension must be >= 2, got {d_gen}")
        self.d_gen = d_gen
        self.name = "au" if d_gen == 2 else f"au:{d_gen}"
        self._dim_cache: dict[str, int] = {"": 1}

    def _dim(self, word: str) -> int:
        known = self._dim_cache.get(word)
        if known is not None:
            return known
        d = self.d_gen
        prev2, prev1 = 0, 1
        for k, ch in enumerate(word):
            cur = d * prev1 - (prev2 if k > 0 and word[k - 1] != ch else 0)
            prev2, prev1 = prev1, cur
        self._dim_cache[word] = prev1
        return prev1

    def _label(self, word: str) -> IrrLabel:
        return IrrLabel(word or "e", self._dim(word))

    def word_of(self, u: IrrLabel) -> str:
        try:
            word = AuWordLabel.from_id(u.id).word
        except ValueError:
            raise UnknownLabel(f"{self.name}: foreign label {u.id!r}") from None
        if self._dim(word) != u.dim:
            raise UnknownLabel(f"{self.name}: foreign label {u.id!r}")
        return word

    def unit(self) -> IrrLabel:
        return self._label("")

    def conj(self, u: IrrLabel) -> IrrLabel:
        word = self.word_of(u)
        swapped = word[::-1].swapcase()
        return self._label(swapped)

    def _decompose(self, u: IrrLabel, v: IrrLabel) -> Decomposition:
        counts: dict[IrrLabel, int] = {}

        def expand(w1: str, w2: str):
            if not w1 or not w2:
                lab = self._label(w1 + w2)
                counts[lab] = counts.get(lab, 0) + 1
                return
            lab = self._label(w1 + w2)
            counts[lab] = counts.get(lab, 0) + 1
            if w1[-1] != w2[0]:
                expand(w1[:-1], w2[1:])

        expand(self.word_of(u), self.word_of(v))
        return Decomposition(counts)

    def enumerate(self, count: int) -> list[IrrLabel]:
        out = [self._label("")]
        length = 1
        while len(out) < count:
            for letters in _product("uU", repeat=length):
                out.append(self._label("".join(letters)))
                if len(out) >= count:
                    break
            length += 1
        return out[:count]

    def label_size(self, u: IrrLabel) -> int:
        return max(1, AuWordLabel.from_id(u.id).blocks())

    def parse_label(self, text: str) -> IrrLabel:
        try:
            word = AuWordLabel.from_id(text).word
        except ValueError:
            raise UnknownLabel(f"{self.name}: no irreducible with id {text!r}") from None
        return self._label(word)

    def balanced_generator_family(self, d: int) -> list[IrrLabel]:
        """Generators U^r u^r for 1 <= r <= d (the canonical chain stages)."""
        if d < 0:
            raise BadParameter(f"stage must be >= 0, got {d}")
        return [self._label("U" * r + "u" * r) for r in range(1, d + 1)]


def au_ring(d_gen: int = 2) -> AuProvider:
    return AuProvider(d_gen)
