"""Group rings of free products of cyclic groups.

Elements are reduced words over one generator per factor: factor ``k``
contributes the letter ``chr(97 + k)``, with exponents normalized to
``1..m-1`` for a finite factor of order ``m`` and to nonzero integers for
an infinite factor.  Ids render exponents as ``a^2``, ``a^-1``; the
identity is ``e``.  Every basis element is invertible, so decompositions
are single labels and the tensor-order oracle is exact (cyclic
reduction).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import count as _count

from ..core import Decomposition, FusionProvider, IrrLabel
from ..errors import ParseError, UnknownLabel

__all__ = ["WordGroupSpec", "WordGroupProvider", "word_group"]

# A letter is (factor_index, exponent); a word is a tuple of letters with
# adjacent letters from distinct factors.
Letter = tuple[int, int]
Word = tuple[Letter, ...]

_LETTER_RE = re.compile(r"([a-z])(?:\^(-?\d+))?")


@dataclass(frozen=True)
class WordGroupSpec:
    """Factor orders of the free product; each is an int >= 2 or math.inf."""

    factors: tuple[int | float, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("need at least one factor")
        for m in self.factors:
            if m == math.inf:
                continue
            if not isinstance(m, int) or m < 2:
                raise ValueError(f"factor order must be an int >= 2 or inf, got {m!r}")
        if len(self.factors) > 26:
            raise ValueError("at most 26 factors (one letter each)")

    def describe(self) -> str:
        return "*".join("Z" if m == math.inf else f"Z{m}" for m in self.factors)


class WordGroupProvider(FusionProvider):
    """Fusion ring of the free product of cyclic groups in ``spec``.

    ``enumerate`` orders words by total weight (sum of letter weights,
    where a letter of exponent ``e`` weighs ``min(e, m-e)`` in a finite
    factor and ``|e|`` in an infinite one), then by word length, then
    lexicographically.  ``label_size`` is the same weight.
    """

    group_like = True

    def __init__(self, spec: WordGroupSpec):
        super().__init__()
        self.spec = spec
        self.name = f"word:{spec.describe()}"
        self._unit = IrrLabel("e", 1)

    # -- word arithmetic ---------------------------------------------------

    def _norm_exp(self, k: int, e: int) -> int:
        m = self.spec.factors[k]
        return e if m == math.inf else e % m

    def _mul_words(self, w1: Word, w2: Word) -> Word:
        out = list(w1)
        for letter in w2:
            if out and out[-1][0] == letter[0]:
                k = letter[0]
                e = self._norm_exp(k, out[-1][1] + letter[1])
                out.pop()
                if e:
                    out.append((k, e))
            else:
                out.append(letter)
        return tuple(out)

    def _inv_word(self, w: Word) -> Word:
        return tuple((k, self._norm_exp(k, -e)) for k, e in reversed(w))

    def _letter_weight(self, k: int, e: int) -> int:
        m = self.spec.factors[k]
        return abs(e) if m == math.inf else min(e, m - e)

    def _weight(self, w: Word) -> int:
        return sum(self._letter_weight(k, e) for k, e in w)

    @staticmethod
    def _exp_key(e: int) -> tuple[int, int]:
        return (abs(e), 0 if e > 0 else 1)

    def _word_key(self, w: Word):
        return (self._weight(w), len(w), tuple((k, *self._exp_key(e)) for k, e in w))

    def _render(self, w: Word) -> str:
        if not w:
            return "e"
        return "".join(
            chr(97 + k) + ("" if e == 1 else f"^{e}") for k, e in w
        )

    def _label(self, w: Word) -> IrrLabel:
        return IrrLabel(self._render(w), 1)

    def word_of(self, u: IrrLabel) -> Word:
        """Reduced word behind a label; validates the id."""
        if u.id == "e":
            return ()
        word: list[Letter] = []
        pos = 0
        for match in _LETTER_RE.finditer(u.id):
            if match.start() != pos:
                raise UnknownLabel(f"{self.name}: bad label {u.id!r}")
            pos = match.end()
            k = ord(match.group(1)) - 97
            if k >= len(self.spec.factors):
                raise UnknownLabel(f"{self.name}: no factor for letter {match.group(1)!r}")
            e = int(match.group(2) or 1)
            if self._norm_exp(k, e) != e or e == 0:
                raise UnknownLabel(f"{self.name}: exponent {e} not normalized in {u.id!r}")
            if word and word[-1][0] == k:
                raise UnknownLabel(f"{self.name}: word {u.id!r} is not reduced")
            word.append((k, e))
        if pos != len(u.id):
            raise UnknownLabel(f"{self.name}: bad label {u.id!r}")
        return tuple(word)

    # -- provider interface ------------------------------------------------

    def unit(self) -> IrrLabel:
        return self._unit

    def conj(self, u: IrrLabel) -> IrrLabel:
        return self._label(self._inv_word(self.word_of(u)))

    def _decompose(self, u: IrrLabel, v: IrrLabel) -> Decomposition:
        return Decomposition({self._label(self._mul_words(self.word_of(u), self.word_of(v))): 1})

    def _letters_of_weight(self, j: int) -> list[Letter]:
        letters = []
        for k, m in enumerate(self.spec.factors):
            if m == math.inf:
                letters.extend([(k, j), (k, -j)])
            else:
                if 1 <= j <= m // 2:
                    exps = {j, self._norm_exp(k, -j)}
                    letters.extend((k, e) for e in sorted(exps, key=self._exp_key))
        return letters

    def enumerate(self, count: int) -> list[IrrLabel]:
        finite_weights = [m // 2 for m in self.spec.factors if m != math.inf]
        # With only finite factors, letters weigh at most max_lw; once that
        # many consecutive layers are empty no heavier word can exist.
        max_lw = max(finite_weights, default=0)
        all_finite = len(finite_weights) == len(self.spec.factors)
        words: list[Word] = [()]
        by_weight: dict[int, list[Word]] = {0: [()]}
        for weight in _count(1):
            if len(words) >= count:
                break
            layer: list[Word] = []
            for j in range(1, weight + 1):
                for stem in by_weight.get(weight - j, ()):
                    for letter in self._letters_of_weight(j):
                        if stem and stem[-1][0] == letter[0]:
                            continue
                        layer.append(stem + (letter,))
            by_weight[weight] = layer
            words.extend(layer)
            if all_finite and all(
                not by_weight.get(weight - j) for j in range(max_lw)
            ):
                break
        words.sort(key=self._word_key)
        return [self._label(w) for w in words[:count]]

    @property
    def num_irreducibles(self) -> int | float:
        if len(self.spec.factors) == 1 and self.spec.factors[0] != math.inf:
            return int(self.spec.factors[0])
        return math.inf

    def label_size(self, u: IrrLabel) -> int:
        return self._weight(self.word_of(u))

    def parse_label(self, text: str) -> IrrLabel:
        if not text:
            raise UnknownLabel(f"{self.name}: empty label")
        word = self.word_of(IrrLabel(text, 1))
        return self._label(word)

    def order_oracle(self, u: IrrLabel) -> int | float:
        """Exact tensor order, by cyclic reduction.

        A cyclically reduced word of length >= 2 mixes factors and has
        infinite order; length 1 reduces to the cyclic factor; length 0
        is the identity.
        """
        w = list(self.word_of(u))
        while len(w) >= 2 and w[0][0] == w[-1][0]:
            k = w[0][0]
            e = self._norm_exp(k, w[-1][1] + w[0][1])
            w = w[1:-1]
            if e:
                w.append((k, e))
        if not w:
            return 1
        if len(w) == 1:
            k, e = w[0]
            m = self.spec.factors[k]
            if m == math.inf:
                return math.inf
            return m // math.gcd(e, m)
        return math.inf

    # -- hooks for the torsion-closure sequence ----------------------------

    def finite_factor_indices(self) -> list[int]:
        return [k for k, m in enumerate(self.spec.factors) if m != math.inf]

    def kill_finite_factors(self, u: IrrLabel) -> Word:
        """Image of a word under the quotient deleting all finite factors.

        Letters from finite factors drop out; what remains is freely
        reduced in the free product of the infinite factors.
        """
        out: list[Letter] = []
        for k, e in self.word_of(u):
            if self.spec.factors[k] != math.inf:
                continue
            if out and out[-1][0] == k:
                e2 = out[-1][1] + e
                out.pop()
                if e2:
                    out.append((k, e2))
            else:
                out.append((k, e))
        return tuple(out)

    def stage_one_contains(self, u: IrrLabel) -> bool:
        """Membership in the normal closure of all torsion elements.

        That closure is exactly the kernel of the kill-finite-factors
        quotient, which maps onto a free product of copies of Z.
        """
        return not self.kill_finite_factors(u)

    def power(self, u: IrrLabel, n: int) -> IrrLabel:
        w: Word = ()
        base = self.word_of(u)
        for _ in range(n):
            w = self._mul_words(w, base)
        return self._label(w)


def word_group(spec: WordGroupSpec | list | tuple) -> WordGroupProvider:
    """Build the group ring of a free product of cyclic groups.

    ``spec`` may be a WordGroupSpec or a plain sequence of factor orders
    (ints >= 2, or math.inf for an infinite cyclic factor).
    """
    if not isinstance(spec, WordGroupSpec):
        spec = WordGroupSpec(tuple(spec))
    return WordGroupProvider(spec)


def parse_word_group_spec(text: str, offset: int = 0) -> WordGroupSpec:
    """Parse ``Z2*Z2``-style factor lists; ``Z`` alone is the infinite factor."""
    factors: list[int | float] = []
    pos = offset
    for part in text.split("*"):
        if part == "Z":
            factors.append(math.inf)
        elif re.fullmatch(r"Z\d+", part):
            m = int(part[1:])
            if m < 2:
                raise ParseError(f"cyclic order must be >= 2, got {part!r}", pos)
            factors.append(m)
        else:
            raise ParseError(f"bad factor {part!r} (expected Z or Z<m>)", pos)
        pos += len(part) + 1
    try:
        return WordGroupSpec(tuple(factors))
    except ValueError as exc:
        raise ParseError(str(exc), offset) from None
