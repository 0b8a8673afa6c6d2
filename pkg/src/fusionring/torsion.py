"""Torsion analysis: closures, per-label verdicts, chain and ideal probes.

Everything here works over a budgeted window of the ring and reports its
own truncation honestly: a closure is only ``saturated`` after a final
re-verification pass, and per-label torsion verdicts degrade to
``unknown`` rather than guessing when the budget runs out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import Budget, FusionProvider, IrrLabel, VirtualElement, canonical_sort
from .errors import NotFinite, NotSaturated, UnsupportedProvider
from .lattice import IntegerLattice
from .rings.tables import FiniteGroupProvider
from .rings.words import WordGroupProvider

__all__ = [
    "Subcategory",
    "TorsionVerdict",
    "TorsionScanReport",
    "NormalityViolation",
    "NSequenceReport",
    "ChainStage",
    "ChainProbeReport",
    "DimensionIdealReport",
    "generated_subring",
    "central_closure",
    "normal_forcing_closure",
    "normality_consistency",
    "is_torsion",
    "torsion_subcategory",
    "n_sequence_cocommutative",
    "ascending_chain_probe",
    "dimension_ideal_recover",
    "enumerate_saturated_subrings",
    "EXPONENT_BOUND",
]

EXPONENT_BOUND = 64

SATURATED = "saturated"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class Subcategory:
    """A conj-closed label set with its closure kind and truncation status.

    ``frontier`` lists labels that were reached but not admitted (size or
    count cap) or found to escape during the final verification pass;
    it is empty exactly when the status is ``saturated``.
    """

    kind: str
    labels: tuple[IrrLabel, ...]
    status: str
    frontier: tuple[IrrLabel, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(canonical_sort(self.labels)))
        object.__setattr__(self, "frontier", tuple(canonical_sort(self.frontier)))

    def __contains__(self, label: IrrLabel) -> bool:
        return label in set(self.labels)

    @property
    def label_ids(self) -> list[str]:
        return [l.id for l in self.labels]

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "labels": self.label_ids,
            "status": self.status,
        }
        if self.frontier:
            out["frontier"] = [l.id for l in self.frontier]
        return out


def _close(
    provider: FusionProvider,
    kind: str,
    generators,
    budget: Budget,
    extra_candidates=None,
) -> Subcategory:
    """Shared closure loop: conj + products, plus an optional rule.

    ``extra_candidates(members)`` yields further labels to adjoin.  The
    loop is monotone and deterministic; the returned status comes from a
    final verification pass over the finished set.
    """
    members: dict[IrrLabel, None] = {}
    overflow: set[IrrLabel] = set()

    def admit(lab: IrrLabel):
        if lab in members or lab in overflow:
            return
        if provider.label_size(lab) > budget.max_label_size:
            overflow.add(lab)
        elif len(members) >= budget.max_irreducibles:
            overflow.add(lab)
        else:
            members[lab] = None

    admit(provider.unit())
    for g in generators:
        admit(g)

    exhausted_rounds = True
    for _ in range(budget.max_rounds):
        before = len(members)
        current = list(members)
        for u in current:
            admit(provider.conj(u))
        for a in current:
            for b in current:
                for w, _m in provider.decompose(a, b):
                    admit(w)
        if extra_candidates is not None:
            for lab in extra_candidates(list(members)):
                admit(lab)
        if len(members) == before:
            exhausted_rounds = False
            break

    # Final pass: trust nothing from the loop bookkeeping.
    escaped: set[IrrLabel] = set()
    final = list(members)
    inside = set(final)
    for u in final:
        c = provider.conj(u)
        if c not in inside:
            escaped.add(c)
    for a in final:
        for b in final:
            for w, _m in provider.decompose(a, b):
                if w not in inside:
                    escaped.add(w)
    if extra_candidates is not None:
        for lab in extra_candidates(final):
            if lab not in inside:
                escaped.add(lab)

    frontier = overflow | escaped
    status = SATURATED if not frontier and not exhausted_rounds else BUDGET_EXCEEDED
    return Subcategory(kind=kind, labels=tuple(members), status=status, frontier=tuple(frontier))


def generated_subring(
    provider: FusionProvider, generators, budget: Budget | None = None
) -> Subcategory:
    """Smallest conj- and product-closed label set containing the generators.

    An empty generator list yields the unit subcategory.  Monotone in
    both the generators and the budget; idempotent on its own output.
    """
    return _close(provider, "tensor_generated", generators, budget or Budget())


def central_closure(
    provider: FusionProvider, generators, budget: Budget | None = None
) -> Subcategory:
    """Closure that also adjoins every constituent of ubar (x) v (x) u.

    Conjugating elements u run over the enumeration window, so the result
    is a budgeted lower approximation of the smallest normal subcategory
    containing the generators; it always contains the plain generated
    subring of the same generators at the same budget.
    """
    budget = budget or Budget()
    window = provider.enumerate(budget.max_irreducibles)

    def rule(members):
        for v in members:
            for u in window:
                ubar = provider.conj(u)
                prod = provider.multiply_virtual(
                    provider.multiply_virtual(VirtualElement.of(ubar), VirtualElement.of(v)),
                    VirtualElement.of(u),
                )
                for lab in canonical_sort(prod.support()):
                    yield lab

    return _close(provider, "central_closure", generators, budget, rule)


def normal_forcing_closure(
    provider: FusionProvider, generators, budget: Budget | None = None
) -> Subcategory:
    """Closure adjoining ubar (x) v (x) u only when it is one irreducible.

    Sound even without normality: a product that collapses to a single
    irreducible must belong to any conj-stable subring containing v.  In
    a group-like ring every such product is a single irreducible, so the
    closure is the group normal closure of the generators.
    """
    budget = budget or Budget()
    window = provider.enumerate(budget.max_irreducibles)

    def rule(members):
        for v in members:
            for u in window:
                ubar = provider.conj(u)
                prod = provider.multiply_virtual(
                    provider.multiply_virtual(VirtualElement.of(ubar), VirtualElement.of(v)),
                    VirtualElement.of(u),
                )
                coeffs = prod.coeffs
                if len(coeffs) == 1:
                    (lab, mult), = coeffs.items()
                    if mult == 1:
                        yield lab

    return _close(provider, "normal_forcing_closure", generators, budget, rule)


@dataclass(frozen=True)
class NormalityViolation:
    member: IrrLabel
    conjugator: IrrLabel
    product_ids: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "member": self.member.id,
            "conjugator": self.conjugator.id,
            "product": list(self.product_ids),
        }


def normality_consistency(
    provider: FusionProvider, s_labels, bound: int
) -> list[NormalityViolation]:
    """Pairs (v in S, u in window) where ubar (x) v (x) u misses S entirely.

    An empty list is a budgeted consistency certificate for S being
    stable under conjugation by the window.
    """
    s_set = set(s_labels)
    window = provider.enumerate(bound)
    violations = []
    for v in canonical_sort(s_set):
        for u in window:
            ubar = provider.conj(u)
            prod = provider.multiply_virtual(
                provider.multiply_virtual(VirtualElement.of(ubar), VirtualElement.of(v)),
                VirtualElement.of(u),
            )
            support = prod.support()
            if not any(w in s_set for w in support):
                violations.append(
                    NormalityViolation(v, u, tuple(w.id for w in support))
                )
    return violations


TORSION = "torsion"
NON_TORSION = "non_torsion"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class TorsionVerdict:
    label: IrrLabel
    verdict: str
    closure: Subcategory | None = None
    reason: str = ""

    def to_dict(self) -> dict:
        out = {"label": self.label.id, "verdict": self.verdict, "reason": self.reason}
        if self.closure is not None:
            out["closure"] = self.closure.to_dict()
        return out


def is_torsion(
    provider: FusionProvider, u: IrrLabel, budget: Budget | None = None
) -> TorsionVerdict:
    """Decide whether the subcategory generated by u stays finite.

    Group-like rings answer through the exact order oracle; everywhere
    else a saturated generated subring certifies torsion and a truncated
    one leaves the question open.
    """
    budget = budget or Budget()
    closure = generated_subring(provider, [u], budget)
    try:
        order = provider.order_oracle(u)
    except UnsupportedProvider:
        order = None
    if order is not None:
        if order == math.inf:
            return TorsionVerdict(u, NON_TORSION, closure, "order oracle: infinite tensor order")
        return TorsionVerdict(u, TORSION, closure, f"order oracle: order {int(order)}")
    if closure.status == SATURATED:
        return TorsionVerdict(u, TORSION, closure, f"generated subring saturated at {len(closure.labels)} labels")
    return TorsionVerdict(u, UNKNOWN, closure, "generated subring exceeded budget")


@dataclass
class TorsionScanReport:
    provider: str
    budget: Budget
    verdicts: list[TorsionVerdict]
    subcategory: Subcategory

    @property
    def certified(self) -> list[IrrLabel]:
        return [v.label for v in self.verdicts if v.verdict == TORSION]

    @property
    def unknowns(self) -> list[IrrLabel]:
        return [v.label for v in self.verdicts if v.verdict == UNKNOWN]

    @property
    def non_torsion(self) -> list[IrrLabel]:
        return [v.label for v in self.verdicts if v.verdict == NON_TORSION]

    def to_dict(self) -> dict:
        return {
            "provider": self.provider,
            "window": len(self.verdicts),
            "certified": [l.id for l in self.certified],
            "subcategory": self.subcategory.to_dict(),
            "unknown": [l.id for l in self.unknowns],
            "non_torsion": [l.id for l in self.non_torsion],
            "verdicts": [v.to_dict() for v in self.verdicts],
        }


def torsion_subcategory(provider: FusionProvider, budget: Budget | None = None) -> TorsionScanReport:
    """Scan the window label-by-label and collect the certified torsion set.

    The set's status is decided by re-verifying closure of the certified
    labels alone; unknown verdicts are reported but do not poison it.
    """
    budget = budget or Budget()
    window = provider.enumerate(budget.max_irreducibles)
    verdicts = [is_torsion(provider, u, budget) for u in window]
    certified = [v.label for v in verdicts if v.verdict == TORSION]
    inside = set(certified)
    escaped: set[IrrLabel] = set()
    for a in certified:
        c = provider.conj(a)
        if c not in inside:
            escaped.add(c)
        for b in certified:
            for w, _m in provider.decompose(a, b):
                if w not in inside:
                    escaped.add(w)
    sub = Subcategory(
        kind="torsion_set",
        labels=tuple(certified),
        status=SATURATED if not escaped else BUDGET_EXCEEDED,
        frontier=tuple(escaped),
    )
    return TorsionScanReport(provider.name, budget, verdicts, sub)


@dataclass
class NSequenceReport:
    provider: str
    degree: int | None
    stabilized: bool
    connected: bool
    totally_disconnected: bool
    stages: list[Subcategory]
    quotient_note: str
    scanned: int
    exponent_bound: int
    counterexample: str | None = None

    def to_dict(self) -> dict:
        return {
            "provider": self.provider,
            "degree": self.degree,
            "stabilized": self.stabilized,
            "connected": self.connected,
            "totally_disconnected": self.totally_disconnected,
            "stages": [s.to_dict() for s in self.stages],
            "quotient": self.quotient_note,
            "scanned": self.scanned,
            "exponent_bound": self.exponent_bound,
            "counterexample": self.counterexample,
        }


def n_sequence_cocommutative(
    provider: FusionProvider,
    budget: Budget | None = None,
    exponent_bound: int = EXPONENT_BOUND,
) -> NSequenceReport:
    """Stage sets of the iterated torsion-closure sequence for group rings.

    Stage one is the normal closure of all torsion elements; stage r+1
    adjoins roots of stage r.  Stabilization at stage one is never
    assumed: every window element g with g^n in stage one for some
    n <= exponent_bound must itself lie in stage one, and any
    counterexample is reported instead of a degree.

    Raises UnsupportedProvider for rings that are not group-like.
    """
    budget = budget or Budget()
    if isinstance(provider, WordGroupProvider):
        return _n_sequence_words(provider, budget, exponent_bound)
    if isinstance(provider, FiniteGroupProvider):
        return _n_sequence_finite(provider, budget, exponent_bound)
    raise UnsupportedProvider(
        f"{provider.name}: torsion-closure sequence needs a cocommutative (group) ring"
    )


def _n_sequence_words(provider: WordGroupProvider, budget: Budget, exponent_bound: int) -> NSequenceReport:
    window = provider.enumerate(budget.max_irreducibles)
    finite_factors = provider.finite_factor_indices()
    infinite_count = len(provider.spec.factors) - len(finite_factors)
    connected = not finite_factors
    totally_disconnected = infinite_count == 0

    counterexample = None
    for g in window:
        if provider.stage_one_contains(g):
            continue
        for n in range(2, exponent_bound + 1):
            if provider.stage_one_contains(provider.power(g, n)):
                counterexample = f"{g.id}^{n}"
                break
        if counterexample:
            break

    stage_labels = [u for u in window if provider.stage_one_contains(u)]
    stage_finite = connected or (len(provider.spec.factors) == 1 and not infinite_count)
    stage = Subcategory(
        kind="normal_forcing_closure",
        labels=tuple(stage_labels),
        status=SATURATED if stage_finite else BUDGET_EXCEEDED,
    )
    if connected:
        degree: int | None = 0
        stages: list[Subcategory] = []
    elif counterexample is None:
        degree = 1
        stages = [stage]
    else:
        degree = None
        stages = [stage]
    quotient = (
        "trivial quotient"
        if totally_disconnected
        else f"free product of {infinite_count} infinite cyclic factor(s)"
    )
    return NSequenceReport(
        provider=provider.name,
        degree=degree,
        stabilized=counterexample is None,
        connected=connected,
        totally_disconnected=totally_disconnected,
        stages=stages,
        quotient_note=quotient,
        scanned=len(window),
        exponent_bound=exponent_bound,
        counterexample=counterexample,
    )


def _n_sequence_finite(provider: FiniteGroupProvider, budget: Budget, exponent_bound: int) -> NSequenceReport:
    window = provider.enumerate(provider.num_irreducibles)
    # Every element has finite order, so stage one is the whole group.
    stage = Subcategory(
        kind="normal_forcing_closure", labels=tuple(window), status=SATURATED
    )
    trivial = len(window) == 1
    return NSequenceReport(
        provider=provider.name,
        degree=0 if trivial else 1,
        stabilized=True,
        connected=trivial,
        totally_disconnected=True,
        stages=[] if trivial else [stage],
        quotient_note="trivial quotient",
        scanned=len(window),
        exponent_bound=exponent_bound,
    )


@dataclass
class ChainStage:
    d: int
    generators: tuple[str, ...]
    subcategory: Subcategory
    witnesses: tuple[str, ...]
    strict: bool

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "generators": list(self.generators),
            "subcategory": self.subcategory.to_dict(),
            "witnesses": list(self.witnesses),
            "strict": self.strict,
        }


@dataclass
class ChainProbeReport:
    provider: str
    stages: list[ChainStage]
    strictly_increasing_up_to: int

    def to_dict(self) -> dict:
        return {
            "provider": self.provider,
            "stages": [s.to_dict() for s in self.stages],
            "strictly_increasing_up_to": self.strictly_increasing_up_to,
        }


def ascending_chain_probe(
    provider: FusionProvider,
    d_max: int,
    generators_for,
    budget: Budget | None = None,
    size_cap_for=None,
) -> ChainProbeReport:
    """Track the chain of generated subrings for a growing generator family.

    ``generators_for(d)`` gives stage d's generators (expected to grow
    with d); ``size_cap_for(d)`` optionally overrides the label-size cap
    per stage.  Stage d counts as strictly above stage d-1 when its new
    generators land in its own closure but are absent from the previous
    stage's closure; those generators are the recorded witnesses.  With
    infinite rings the closures are necessarily truncated (the stage
    status says so), which makes this a bounded certificate: absence is
    checked against the explored part of the previous stage.
    """
    budget = budget or Budget()
    prev_closure: set[IrrLabel] = {provider.unit()}
    prev_gens: set[IrrLabel] = set()
    stages: list[ChainStage] = []
    increasing_up_to = 0
    still = True
    for d in range(1, d_max + 1):
        gens = list(generators_for(d))
        stage_budget = (
            budget.replace(max_label_size=size_cap_for(d)) if size_cap_for else budget
        )
        sub = generated_subring(provider, gens, stage_budget)
        inside = set(sub.labels)
        new_gens = canonical_sort(set(gens) - prev_gens)
        strict = bool(new_gens) and all(
            g in inside and g not in prev_closure for g in new_gens
        )
        if still and strict:
            increasing_up_to = d
        else:
            still = False
        stages.append(
            ChainStage(
                d=d,
                generators=tuple(g.id for g in gens),
                subcategory=sub,
                witnesses=tuple(g.id for g in new_gens),
                strict=strict,
            )
        )
        prev_closure = inside
        prev_gens = set(gens)
    return ChainProbeReport(provider.name, stages, increasing_up_to)


@dataclass
class DimensionIdealReport:
    provider: str
    given: tuple[str, ...]
    recovered: tuple[str, ...]
    lattice_rank: int

    @property
    def exact(self) -> bool:
        return self.given == self.recovered

    def to_dict(self) -> dict:
        return {
            "provider": self.provider,
            "given": list(self.given),
            "recovered": list(self.recovered),
            "lattice_rank": self.lattice_rank,
            "exact": self.exact,
        }


def dimension_ideal_recover(provider: FusionProvider, a_labels) -> DimensionIdealReport:
    """Recover a saturated subring from its dimension ideal.

    Builds the ideal generated by ``a - dim(a) * unit`` over the whole
    ring as an integer lattice and returns every irreducible u with
    ``u - dim(u) * unit`` in it.  Exact arithmetic throughout.

    Raises NotFinite for infinite rings and NotSaturated when the given
    labels are not a conj- and product-closed set containing the unit.
    """
    total = provider.num_irreducibles
    if not isinstance(total, int) or total == math.inf:
        raise NotFinite(f"{provider.name}: dimension-ideal recovery needs a finite ring")
    all_irr = provider.enumerate(total)
    index = {lab: i for i, lab in enumerate(all_irr)}
    unit = provider.unit()
    a_set = set(a_labels)
    if unit not in a_set:
        raise NotSaturated("the subset must contain the unit")
    for a in a_set:
        if a not in index:
            raise NotSaturated(f"label {a.id!r} is not an irreducible of {provider.name}")
        if provider.conj(a) not in a_set:
            raise NotSaturated(f"subset not closed under conjugation at {a.id!r}")
    for a in a_set:
        for b in a_set:
            for w, _m in provider.decompose(a, b):
                if w not in a_set:
                    raise NotSaturated(
                        f"subset not closed under products: {a.id} (x) {b.id} contains {w.id}"
                    )

    lattice = IntegerLattice(total)
    for r in all_irr:
        for a in canonical_sort(a_set):
            if a == unit:
                continue
            vec = [0] * total
            for w, m in provider.decompose(r, a):
                vec[index[w]] += m
            vec[index[r]] -= a.dim
            lattice.add(vec)

    recovered = []
    for u in all_irr:
        vec = [0] * total
        vec[index[u]] += 1
        vec[index[unit]] -= u.dim
        if lattice.contains(vec):
            recovered.append(u)
    return DimensionIdealReport(
        provider=provider.name,
        given=tuple(l.id for l in canonical_sort(a_set)),
        recovered=tuple(l.id for l in canonical_sort(recovered)),
        lattice_rank=lattice.rank,
    )


def enumerate_saturated_subrings(provider: FusionProvider, limit: int = 16) -> list[tuple[IrrLabel, ...]]:
    """All conj- and product-closed subsets containing the unit.

    Brute force over subsets; only sensible for small finite rings, so
    rings larger than ``limit`` are refused.
    """
    total = provider.num_irreducibles
    if not isinstance(total, int) or total == math.inf:
        raise NotFinite(f"{provider.name}: subring enumeration needs a finite ring")
    if total > limit:
        raise NotFinite(f"{provider.name}: {total} irreducibles exceeds the limit {limit}")
    all_irr = provider.enumerate(total)
    unit = provider.unit()
    rest = [l for l in all_irr if l != unit]
    out = []
    for mask in range(1 << len(rest)):
        subset = {unit} | {l for i, l in enumerate(rest) if mask >> i & 1}
        ok = all(provider.conj(a) in subset for a in subset) and all(
            w in subset
            for a in subset
            for b in subset
            for w, _m in provider.decompose(a, b)
        )
        if ok:
            out.append(tuple(canonical_sort(subset)))
    out.sort(key=lambda subs: (len(subs), [l.id for l in subs]))
    return out
