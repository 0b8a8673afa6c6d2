"""Free and direct products of fusion rings.

Free-product irreducibles are alternating words whose letters are
non-unit irreducibles of either factor; the product of two words
concatenates when the junction letters live in different factors, and
otherwise merges the junction through the factor's own decomposition,
with the unit coefficient recursing on the shortened words.  This rule
is exercised, not trusted: the axiom harness runs over every built
product ring.

Direct-product irreducibles are pairs, with componentwise structure.
"""

from __future__ import annotations

import math
import re

from ..core import Decomposition, FusionProvider, IrrLabel, VirtualElement
from ..errors import UnknownLabel, UnsupportedProvider

__all__ = ["FreeProductProvider", "DirectProductProvider", "free_product", "direct_product"]

# Letters are (factor_index, factor_label); words alternate factors.
FLetter = tuple[int, IrrLabel]
FWord = tuple[FLetter, ...]

_PREFIXED = re.compile(r"([01]):(.*)$", re.S)


class FreeProductProvider(FusionProvider):
    """Fusion ring of the free product of two rings.

    ``enumerate`` orders words by letter count, then lexicographically
    with letters keyed by (position in the own factor's enumeration,
    factor index); with an infinite factor the window therefore stays
    inside length-one words, and longer words enter only through
    decompositions.  ``label_size`` sums the letters' own sizes.
    """

    def __init__(self, left: FusionProvider, right: FusionProvider):
        super().__init__()
        self.factors: tuple[FusionProvider, FusionProvider] = (left, right)
        self.name = f"free({left.name},{right.name})"
        self._unit = IrrLabel("e", 1)
        self._words: dict[str, FWord] = {"e": ()}
        self._render_cache: dict[FLetter, str] = {}
        self._mul_cache: dict[tuple[FWord, FWord], dict[FWord, int]] = {}

    # -- rendering and parsing --------------------------------------------

    def _render_letter(self, letter: FLetter) -> str:
        cached = self._render_cache.get(letter)
        if cached is not None:
            return cached
        k, lab = letter
        try:
            self.factors[1 - k].parse_label(lab.id)
        except UnknownLabel:
            text = lab.id
        else:
            # Both factors know this id; keep the rendering unambiguous.
            text = f"{k}:{lab.id}"
        self._render_cache[letter] = text
        return text

    def _label(self, word: FWord) -> IrrLabel:
        if not word:
            return self._unit
        text = ".".join(self._render_letter(l) for l in word)
        dim = math.prod(lab.dim for _, lab in word)
        self._words[text] = word
        return IrrLabel(text, dim)

    def _parse_word(self, text: str) -> FWord:
        if text == "e":
            return ()
        word: list[FLetter] = []
        for piece in text.split("."):
            match = _PREFIXED.match(piece)
            if match:
                k = int(match.group(1))
                lab = self.factors[k].parse_label(match.group(2))
            else:
                hits = []
                for k, factor in enumerate(self.factors):
                    try:
                        hits.append((k, factor.parse_label(piece)))
                    except UnknownLabel:
                        pass
                if not hits:
                    raise UnknownLabel(f"{self.name}: unknown letter {piece!r}")
                if len(hits) > 1:
                    raise UnknownLabel(
                        f"{self.name}: letter {piece!r} is ambiguous, prefix it with 0: or 1:"
                    )
                k, lab = hits[0]
            if lab == self.factors[k].unit():
                raise UnknownLabel(f"{self.name}: unit letter {piece!r} cannot appear")
            if word and word[-1][0] == k:
                raise UnknownLabel(f"{self.name}: word {text!r} does not alternate factors")
            word.append((k, lab))
        return tuple(word)

    def word_of(self, u: IrrLabel) -> FWord:
        word = self._words.get(u.id)
        if word is None:
            word = self._parse_word(u.id)
            self._words[u.id] = word
        if math.prod(lab.dim for _, lab in word) != u.dim:
            raise UnknownLabel(f"{self.name}: foreign label {u.id!r}")
        return word

    # -- provider interface ------------------------------------------------

    def unit(self) -> IrrLabel:
        return self._unit

    def conj(self, u: IrrLabel) -> IrrLabel:
        word = self.word_of(u)
        return self._label(tuple((k, self.factors[k].conj(lab)) for k, lab in reversed(word)))

    def _mul_words(self, w1: FWord, w2: FWord) -> dict[FWord, int]:
        if not w1:
            return {w2: 1}
        if not w2:
            return {w1: 1}
        key = (w1, w2)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        (k1, la), (k2, lb) = w1[-1], w2[0]
        if k1 != k2:
            out = {w1 + w2: 1}
        else:
            factor = self.factors[k1]
            funit = factor.unit()
            out: dict[FWord, int] = {}
            for c, mult in factor.decompose(la, lb):
                if c != funit:
                    word = w1[:-1] + ((k1, c),) + w2[1:]
                    out[word] = out.get(word, 0) + mult
            unit_mult = factor.decompose(la, lb).multiplicity(funit)
            if unit_mult:
                for word, mult in self._mul_words(w1[:-1], w2[1:]).items():
                    out[word] = out.get(word, 0) + unit_mult * mult
        self._mul_cache[key] = out
        return out

    def _decompose(self, u: IrrLabel, v: IrrLabel) -> Decomposition:
        prod = self._mul_words(self.word_of(u), self.word_of(v))
        return Decomposition({self._label(w): m for w, m in prod.items()})

    def _letters(self, window: int) -> list[tuple[tuple[int, int], FLetter]]:
        """Letters keyed for enumeration order; window per factor."""
        out = []
        for k, factor in enumerate(self.factors):
            funit = factor.unit()
            for pos, lab in enumerate(factor.enumerate(window)):
                if lab != funit:
                    out.append(((pos, k), (k, lab)))
        out.sort(key=lambda item: item[0])
        return out

    def enumerate(self, count: int) -> list[IrrLabel]:
        out = [self._unit]
        letters = self._letters(count)
        current: list[tuple[tuple, FWord]] = [((), ())]
        length = 1
        while len(out) < count and current:
            layer: list[tuple[tuple, FWord]] = []
            for stem_key, stem in current:
                for lkey, letter in letters:
                    if stem and stem[-1][0] == letter[0]:
                        continue
                    layer.append((stem_key + (lkey,), stem + (letter,)))
            layer.sort(key=lambda item: item[0])
            for _, word in layer:
                out.append(self._label(word))
                if len(out) >= count:
                    break
            current = layer
            length += 1
        return out[:count]

    @property
    def num_irreducibles(self) -> int | float:
        counts = [f.num_irreducibles for f in self.factors]
        if counts[0] == 1:
            return counts[1]
        if counts[1] == 1:
            return counts[0]
        return math.inf

    def label_size(self, u: IrrLabel) -> int:
        word = self.word_of(u)
        return sum(max(1, self.factors[k].label_size(lab)) for k, lab in word)

    def parse_label(self, text: str) -> IrrLabel:
        return self._label(self._parse_word(text))

    # -- restriction to one factor ----------------------------------------

    def factor_restriction(self, u: IrrLabel, factor_index: int) -> VirtualElement:
        """Image of ``u`` in the chosen factor's ring.

        Letters from the other factor only contribute their dimension as
        a scalar; own letters multiply out in the factor ring.
        """
        if factor_index not in (0, 1):
            raise ValueError("factor_index must be 0 or 1")
        factor = self.factors[factor_index]
        scalar = 1
        out = VirtualElement.of(factor.unit())
        for k, lab in self.word_of(u):
            if k == factor_index:
                out = factor.multiply_virtual(out, VirtualElement.of(lab))
            else:
                scalar *= lab.dim
        return out * scalar


class DirectProductProvider(FusionProvider):
    """Componentwise product ring on label pairs ``(x,y)``.

    ``enumerate`` zig-zags the factor windows by (i + j, i) over factor
    enumeration indices.  ``label_size`` sums the component sizes.
    """

    def __init__(self, left: FusionProvider, right: FusionProvider):
        super().__init__()
        self.factors = (left, right)
        self.name = f"prod({left.name},{right.name})"
        self._pairs: dict[str, tuple[IrrLabel, IrrLabel]] = {}

    def _label(self, a: IrrLabel, b: IrrLabel) -> IrrLabel:
        text = f"({a.id},{b.id})"
        self._pairs[text] = (a, b)
        return IrrLabel(text, a.dim * b.dim)

    def pair_of(self, u: IrrLabel) -> tuple[IrrLabel, IrrLabel]:
        pair = self._pairs.get(u.id)
        if pair is None:
            pair = self._parse_pair(u.id)
            self._pairs[u.id] = pair
        if pair[0].dim * pair[1].dim != u.dim:
            raise UnknownLabel(f"{self.name}: foreign label {u.id!r}")
        return pair

    def _parse_pair(self, text: str) -> tuple[IrrLabel, IrrLabel]:
        if not (text.startswith("(") and text.endswith(")")):
            raise UnknownLabel(f"{self.name}: bad pair id {text!r}")
        body = text[1:-1]
        depth = 0
        for idx, ch in enumerate(body):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                return (
                    self.factors[0].parse_label(body[:idx]),
                    self.factors[1].parse_label(body[idx + 1 :]),
                )
        raise UnknownLabel(f"{self.name}: bad pair id {text!r}")

    def unit(self) -> IrrLabel:
        return self._label(self.factors[0].unit(), self.factors[1].unit())

    def conj(self, u: IrrLabel) -> IrrLabel:
        a, b = self.pair_of(u)
        return self._label(self.factors[0].conj(a), self.factors[1].conj(b))

    def _decompose(self, u: IrrLabel, v: IrrLabel) -> Decomposition:
        a1, b1 = self.pair_of(u)
        a2, b2 = self.pair_of(v)
        counts: dict[IrrLabel, int] = {}
        for wa, ma in self.factors[0].decompose(a1, a2):
            for wb, mb in self.factors[1].decompose(b1, b2):
                counts[self._label(wa, wb)] = ma * mb
        return Decomposition(counts)

    def enumerate(self, count: int) -> list[IrrLabel]:
        na = self.factors[0].num_irreducibles
        nb = self.factors[1].num_irreducibles
        wa = self.factors[0].enumerate(count if na == math.inf else min(count, na))
        wb = self.factors[1].enumerate(count if nb == math.inf else min(count, nb))
        out = []
        for total in range(len(wa) + len(wb) - 1):
            lo = max(0, total - len(wb) + 1)
            hi = min(total, len(wa) - 1)
            for i in range(lo, hi + 1):
                out.append(self._label(wa[i], wb[total - i]))
                if len(out) >= count:
                    return out
        return out

    @property
    def num_irreducibles(self) -> int | float:
        na = self.factors[0].num_irreducibles
        nb = self.factors[1].num_irreducibles
        return na * nb

    def label_size(self, u: IrrLabel) -> int:
        a, b = self.pair_of(u)
        return self.factors[0].label_size(a) + self.factors[1].label_size(b)

    def parse_label(self, text: str) -> IrrLabel:
        a, b = self._parse_pair(text)
        return self._label(a, b)

    def order_oracle(self, u: IrrLabel) -> int | float:
        a, b = self.pair_of(u)
        try:
            oa = self.factors[0].order_oracle(a)
            ob = self.factors[1].order_oracle(b)
        except UnsupportedProvider:
            raise UnsupportedProvider(f"{self.name}: a factor has no order oracle") from None
        if oa == math.inf or ob == math.inf:
            return math.inf
        return math.lcm(int(oa), int(ob))


def free_product(left: FusionProvider, right: FusionProvider) -> FreeProductProvider:
    return FreeProductProvider(left, right)


def direct_product(left: FusionProvider, right: FusionProvider) -> DirectProductProvider:
    return DirectProductProvider(left, right)
