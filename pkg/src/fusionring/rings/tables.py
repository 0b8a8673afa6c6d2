"""Finite fusion rings given by explicit tables.

Covers three sources: hand-written JSON files, multiplication tables of
finite groups (basis = group elements), and integer character tables
(basis = irreducible characters).  Everything is validated up front; the
JSON loader additionally runs the axiom harness and refuses rings that
fail it.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from pathlib import Path

from ..axioms import check_axioms
from ..core import Budget, Decomposition, FusionProvider, IrrLabel, canonical_sort
from ..errors import InvalidRing, NotAGroup, UnknownLabel

__all__ = [
    "FiniteTableProvider",
    "FiniteGroupProvider",
    "finite_group_ring",
    "character_ring",
    "load_ring_json",
    "dump_ring_json",
    "builtin_finite_rings",
]


class FiniteTableProvider(FusionProvider):
    """Fusion ring with an explicit, finite multiplication table.

    ``enumerate`` lists the unit first, then the rest in (dim, id) order.
    """

    def __init__(
        self,
        name: str,
        unit_id: str,
        dims: dict[str, int],
        conj: dict[str, str],
        table: dict[tuple[str, str], dict[str, int]],
    ):
        super().__init__()
        self.name = name
        if unit_id not in dims:
            raise InvalidRing(f"unit {unit_id!r} not among irreducibles")
        self._labels = {i: IrrLabel(i, d) for i, d in dims.items()}
        self._unit = self._labels[unit_id]
        for i, j in conj.items():
            if i not in dims or j not in dims:
                raise InvalidRing(f"conjugation mentions unknown id {i!r} or {j!r}")
            if conj.get(j) != i:
                raise InvalidRing(f"conjugation not an involution at {i!r}")
        if set(conj) != set(dims):
            raise InvalidRing("conjugation map must cover every irreducible")
        self._conj = conj
        pairs = {(a, b) for a in dims for b in dims}
        extra = set(table) - pairs
        if extra:
            raise InvalidRing(f"table mentions unknown pair {sorted(extra)[0]}")
        missing = pairs - set(table)
        if missing:
            raise InvalidRing(f"table is missing pair {sorted(missing)[0]}")
        for key, counts in table.items():
            for w, m in counts.items():
                if w not in dims:
                    raise InvalidRing(f"product {key} mentions unknown id {w!r}")
                if not isinstance(m, int) or m < 0:
                    raise InvalidRing(f"product {key} has bad multiplicity {m!r} for {w!r}")
        self._table = {
            key: Decomposition({self._labels[w]: m for w, m in counts.items()})
            for key, counts in table.items()
        }
        rest = canonical_sort(l for l in self._labels.values() if l != self._unit)
        self._order = [self._unit, *rest]

    def unit(self) -> IrrLabel:
        return self._unit

    def conj(self, u: IrrLabel) -> IrrLabel:
        self._check(u)
        return self._labels[self._conj[u.id]]

    def _decompose(self, u: IrrLabel, v: IrrLabel) -> Decomposition:
        self._check(u)
        self._check(v)
        return self._table[(u.id, v.id)]

    def enumerate(self, count: int) -> list[IrrLabel]:
        return self._order[:count]

    @property
    def num_irreducibles(self) -> int:
        return len(self._order)

    def parse_label(self, text: str) -> IrrLabel:
        lab = self._labels.get(text)
        if lab is None:
            raise UnknownLabel(f"{self.name}: no irreducible with id {text!r}")
        return lab

    def _check(self, u: IrrLabel):
        if self._labels.get(u.id) != u:
            raise UnknownLabel(f"{self.name}: foreign label {u.id!r}")


class FiniteGroupProvider(FiniteTableProvider):
    """Group ring of a finite group; every basis element is invertible."""

    group_like = True

    def __init__(self, name, unit_id, dims, conj, table, mul):
        super().__init__(name, unit_id, dims, conj, table)
        self._mul = mul

    def order_oracle(self, u: IrrLabel) -> int:
        self._check(u)
        seen = u.id
        order = 1
        while seen != self._unit.id:
            seen = self._mul[(seen, u.id)]
            order += 1
            if order > len(self._order):
                raise InvalidRing("powers never reach the identity")
        return order


def finite_group_ring(table: dict[tuple[str, str], str], name: str = "group") -> FiniteGroupProvider:
    """Group ring from a multiplication table ``(g, h) -> g*h``.

    Raises NotAGroup naming the first failed axiom: the table must be a
    total operation on one element set, with identity, inverses, and
    associativity.
    """
    elems = sorted({g for g, _ in table} | {h for _, h in table})
    if not elems:
        raise NotAGroup("empty table")
    for g in elems:
        for h in elems:
            prod = table.get((g, h))
            if prod is None:
                raise NotAGroup(f"product ({g!r}, {h!r}) missing")
            if prod not in elems:
                raise NotAGroup(f"product ({g!r}, {h!r}) = {prod!r} leaves the element set")
    unit = next((e for e in elems if all(table[(e, g)] == g and table[(g, e)] == g for g in elems)), None)
    if unit is None:
        raise NotAGroup("no two-sided identity")
    inv = {}
    for g in elems:
        gi = next((h for h in elems if table[(g, h)] == unit and table[(h, g)] == unit), None)
        if gi is None:
            raise NotAGroup(f"{g!r} has no inverse")
        inv[g] = gi
    for a in elems:
        for b in elems:
            ab = table[(a, b)]
            for c in elems:
                if table[(ab, c)] != table[(a, table[(b, c)])]:
                    raise NotAGroup(f"associativity fails at ({a!r}, {b!r}, {c!r})")
    dims = {g: 1 for g in elems}
    fusion = {(g, h): {table[(g, h)]: 1} for g in elems for h in elems}
    return FiniteGroupProvider(name, unit, dims, inv, fusion, dict(table))


def character_ring(source: str | Path | dict, name: str | None = None) -> FiniteTableProvider:
    """Fusion ring of a finite group from an integer character table.

    ``source`` is a JSON file or an already-parsed dict with keys
    ``class_sizes`` (identity class first, size 1) and ``characters``
    mapping irreducible ids to integer character value lists.  Only
    integer-valued tables are supported; fusion coefficients come from
    the usual inner products and must land in nonnegative integers.
    """
    if isinstance(source, (str, Path)):
        with open(source) as fh:
            data = json.load(fh)
        if name is None:
            name = f"characters:{Path(source).name}"
    else:
        data = source
    name = name or data.get("name", "characters")
    try:
        sizes = [int(s) for s in data["class_sizes"]]
        chars = {str(k): [int(x) for x in v] for k, v in data["characters"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidRing(f"malformed character table: {exc}") from None
    if not sizes or sizes[0] != 1:
        raise InvalidRing("first class must be the identity class of size 1")
    order = sum(sizes)
    k = len(sizes)
    if len(chars) != k or any(len(v) != k for v in chars.values()):
        raise InvalidRing("character count must match class count")

    def inner(x, y):
        return Fraction(sum(s * a * b for s, a, b in zip(sizes, x, y)), order)

    ids = sorted(chars)
    for i in ids:
        for j in ids:
            val = inner(chars[i], chars[j])
            want = 1 if i == j else 0
            if val != want:
                raise InvalidRing(f"characters {i!r},{j!r} have inner product {val}, not {want}")
    unit = next((i for i in ids if all(x == 1 for x in chars[i])), None)
    if unit is None:
        raise InvalidRing("no trivial character")
    dims = {i: chars[i][0] for i in ids}
    if any(d < 1 for d in dims.values()):
        raise InvalidRing("character degree below 1")
    # Integer-valued characters are self-conjugate.
    conj = {i: i for i in ids}
    fusion = {}
    for i in ids:
        for j in ids:
            prod = [a * b for a, b in zip(chars[i], chars[j])]
            counts = {}
            for w in ids:
                m = inner(prod, chars[w])
                if m.denominator != 1 or m < 0:
                    raise InvalidRing(f"{i!r} (x) {j!r} has coefficient {m} at {w!r}")
                if m:
                    counts[w] = int(m)
            fusion[(i, j)] = counts
    return FiniteTableProvider(name, unit, dims, conj, fusion)


_SCHEMA_VERSION = "1"


def load_ring_json(source: str | Path | dict, budget: Budget | None = None) -> FiniteTableProvider:
    """Load a finite fusion ring from its JSON table and validate it.

    Format: ``{"unit": id, "irreducibles": [{"id", "dim", "conj"}...],
    "fusion": [{"left", "right", "result": {id: mult}}...]}`` with every
    ordered pair present exactly once.  Structural problems and axiom
    violations both raise InvalidRing; the violations ride on the error.
    """
    if isinstance(source, (str, Path)):
        with open(source) as fh:
            data = json.load(fh)
        name = f"json:{source}"
    else:
        data = source
        name = data.get("name", "json-ring")
    try:
        unit = data["unit"]
        irr = data["irreducibles"]
        rows = data["fusion"]
    except (KeyError, TypeError) as exc:
        raise InvalidRing(f"malformed ring file: missing {exc}") from None
    dims, conj = {}, {}
    for entry in irr:
        try:
            i, d, c = entry["id"], int(entry["dim"]), entry["conj"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidRing(f"malformed irreducible entry {entry!r}: {exc}") from None
        if i in dims:
            raise InvalidRing(f"duplicate irreducible id {i!r}")
        dims[i], conj[i] = d, c
    table = {}
    for row in rows:
        try:
            key = (row["left"], row["right"])
            result = {str(w): int(m) for w, m in row["result"].items()}
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise InvalidRing(f"malformed fusion row {row!r}: {exc}") from None
        if key in table:
            raise InvalidRing(f"pair {key} listed twice")
        table[key] = result
    provider = FiniteTableProvider(name, unit, dims, conj, table)
    window = provider.num_irreducibles
    report = check_axioms(provider, (budget or Budget()).replace(max_irreducibles=window))
    if not report.ok:
        raise InvalidRing(
            f"{name}: {len(report.violations)} axiom violation(s), first: "
            f"{report.violations[0].detail}",
            violations=report.violations,
        )
    return provider


def dump_ring_json(provider: FusionProvider, path: str | Path | None = None) -> dict:
    """Serialize a finite ring to the JSON table format, deterministically."""
    n = provider.num_irreducibles
    if not isinstance(n, int) or n == math.inf:
        raise InvalidRing("only finite rings can be dumped")
    window = provider.enumerate(n)
    data = {
        "unit": provider.unit().id,
        "irreducibles": [
            {"id": u.id, "dim": u.dim, "conj": provider.conj(u).id} for u in window
        ],
        "fusion": [
            {
                "left": u.id,
                "right": v.id,
                "result": {w.id: m for w, m in provider.decompose(u, v)},
            }
            for u in window
            for v in window
        ],
    }
    if path is not None:
        with open(path, "w") as fh:
            json.dump(data, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return data


def _cyclic_table(m: int) -> dict[tuple[str, str], str]:
    names = [f"g{k}" for k in range(m)]
    return {(names[a], names[b]): names[(a + b) % m] for a in range(m) for b in range(m)}


def _klein_table() -> dict[tuple[str, str], str]:
    names = ["e", "x", "y", "xy"]
    bits = {"e": (0, 0), "x": (1, 0), "y": (0, 1), "xy": (1, 1)}
    back = {v: k for k, v in bits.items()}
    return {
        (a, b): back[((bits[a][0] + bits[b][0]) % 2, (bits[a][1] + bits[b][1]) % 2)]
        for a in names
        for b in names
    }


def _s3_table() -> dict[tuple[str, str], str]:
    import itertools

    perms = list(itertools.permutations((0, 1, 2)))
    name = {p: "p" + "".join(map(str, p)) for p in perms}
    table = {}
    for a in perms:
        for b in perms:
            comp = tuple(a[b[i]] for i in range(3))
            table[(name[a], name[b])] = name[comp]
    return table


S3_CHARACTER_TABLE = {
    "name": "characters:S3",
    "class_sizes": [1, 3, 2],
    "characters": {"triv": [1, 1, 1], "sgn": [1, -1, 1], "std": [2, 0, -1]},
}


def builtin_finite_rings() -> list[FiniteTableProvider]:
    """Small rings used as regression targets; all have <= 8 irreducibles."""
    return [
        finite_group_ring(_cyclic_table(2), "group:Z2"),
        finite_group_ring(_cyclic_table(3), "group:Z3"),
        finite_group_ring(_cyclic_table(4), "group:Z4"),
        finite_group_ring(_klein_table(), "group:V4"),
        finite_group_ring(_s3_table(), "group:S3"),
        character_ring(S3_CHARACTER_TABLE),
    ]
