"""Numerical models for the sign-graded double ladder ring at real q < 0.

Matrices realize the usual ladder operators E, F and the group-like K on
an (n+1)-dimensional space; the deformation parameter enters through
q-integers, and a fourth root of unity w twists all three generators at
once.  For q < 0 the square root t of q is imaginary, which is exactly
what pushes these representations out of the compact star structure
(E* = F) and into the other real form (E* = -F), where a diagonal change
of basis makes them star-preserving.

Everything is double precision with a pinned residual tolerance; rank
decisions use a hard relative singular-value gap and refuse to answer
without one.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import BadParameter, IllConditioned

__all__ = [
    "RESIDUAL_TOL",
    "SV_GAP",
    "QInt",
    "q_int",
    "RepMatrices",
    "build_pi",
    "build_u",
    "check_star",
    "StarReport",
    "unitarizability_witness",
    "UnitarizabilityWitness",
    "tensor_rep",
    "intertwiner_space",
    "IntertwinerSpace",
    "verify_conjugate_equations",
    "ConjugateEquationsReport",
    "verify_permutation_intertwiner",
    "PermutationReport",
    "fusion_crosscheck",
    "FusionCrosscheckReport",
    "full_verification",
    "UqVerifyReport",
]

RESIDUAL_TOL = 1e-9
SV_GAP = 1e3


def q_int(k: int, q):
    """The balanced q-integer (q^k - q^-k) / (q - q^-1); exact for rational q."""
    if isinstance(q, Rational):
        q = Fraction(q)
    if q == 0 or q == 1 or q == -1:
        raise BadParameter(f"q must avoid 0 and +-1, got {q}")
    if k == 0:
        return q * 0
    return (q**k - q**-k) / (q - 1 / q)


@dataclass(frozen=True)
class QInt:
    """A q-integer with its evaluation point remembered."""

    k: int
    value: object

    @classmethod
    def at(cls, k: int, q) -> "QInt":
        return cls(k, q_int(k, q))


def _validate_q(q) -> float:
    if isinstance(q, complex):
        raise BadParameter(f"q must be real, got {q!r}")
    try:
        qf = float(q)
    except (TypeError, ValueError):
        raise BadParameter(f"q must be a real number, got {q!r}") from None
    if qf == 0.0 or qf == 1.0 or qf == -1.0:
        raise BadParameter(f"q must avoid 0 and +-1, got {q}")
    return qf


def _validate_w(w) -> complex:
    wc = complex(w)
    if abs(wc**4 - 1) > 1e-12:
        raise BadParameter(f"w must be a fourth root of unity, got {w!r}")
    return wc


def _t_value(q: float, t_branch: str) -> complex:
    if t_branch not in ("principal", "conjugate"):
        raise BadParameter(f"t_branch must be principal or conjugate, got {t_branch!r}")
    t = cmath.sqrt(q)
    return t if t_branch == "principal" else -t


@dataclass
class RepMatrices:
    """Matrices of one representation (or a tensor product of them).

    ``n`` is the highest weight (dimension minus one) for the irreducible
    builders and None for tensor products.  ``form_tag`` records which
    star form the matrices are meant for: "sl2" (none), "su2", "su11".
    """

    n: int | None
    E: np.ndarray
    F: np.ndarray
    K: np.ndarray
    K_inv: np.ndarray
    q: float
    w: complex
    form_tag: str
    t_branch: str = "principal"

    @property
    def dim(self) -> int:
        return self.E.shape[0]

    def relation_residuals(self) -> dict[str, float]:
        q = self.q
        eye = np.eye(self.dim)
        comm = self.E @ self.F - self.F @ self.E
        casimir_rhs = (self.K @ self.K - self.K_inv @ self.K_inv) / (q - 1 / q)
        return {
            "KE=qEK": _maxabs(self.K @ self.E - q * self.E @ self.K),
            "KF=q^-1FK": _maxabs(self.K @ self.F - self.F @ self.K / q),
            "[E,F]": _maxabs(comm - casimir_rhs),
            "KK^-1=1": _maxabs(self.K @ self.K_inv - eye),
        }

    def max_relation_residual(self) -> float:
        return max(self.relation_residuals().values())


def _maxabs(m: np.ndarray) -> float:
    return float(np.max(np.abs(m))) if m.size else 0.0


def build_pi(w, n: int, q, *, t_branch: str = "principal") -> RepMatrices:
    """The (n+1)-dimensional ladder representation twisted by w.

    E lowers the basis index with coefficient w [r], F raises it with
    coefficient w [n-r], and K is diagonal w t^(n-2r) for t = sqrt(q).
    Relations: K E K^-1 = q E, K F K^-1 = q^-1 F,
    [E, F] = (K^2 - K^-2) / (q - q^-1).
    """
    if not isinstance(n, int) or n < 0:
        raise BadParameter(f"n must be a nonnegative integer, got {n!r}")
    qf = _validate_q(q)
    wc = _validate_w(w)
    t = _t_value(qf, t_branch)
    qx = Fraction(q) if isinstance(q, Rational) else qf
    ints = [complex(q_int(k, qx)) for k in range(n + 1)]
    dim = n + 1
    E = np.zeros((dim, dim), dtype=complex)
    F = np.zeros((dim, dim), dtype=complex)
    K = np.zeros((dim, dim), dtype=complex)
    for r in range(1, dim):
        E[r - 1, r] = wc * ints[r]
    for r in range(dim - 1):
        F[r + 1, r] = wc * ints[n - r]
    for r in range(dim):
        K[r, r] = wc * t ** (n - 2 * r)
    K_inv = np.diag(1 / np.diag(K))
    return RepMatrices(n=n, E=E, F=F, K=K, K_inv=K_inv, q=qf, w=wc, form_tag="sl2", t_branch=t_branch)


def _phase_ratio(w: complex) -> complex:
    # conj(w)/w; +1 for real w, -1 for imaginary w
    return w.conjugate() / w


def _unitarizer(w: complex, n: int, q, sign_flip: bool):
    """Diagonal scaling making the twisted ladder star-preserving.

    Solves tau_j^2 = (+-) (conj(w)/w) [j]/[n-j+1] tau_{j-1}^2 with the
    minus for the noncompact form.  Returns None when some step has no
    real solution; that absence is the unitarizability obstruction.
    """
    qx = Fraction(q) if isinstance(q, Rational) else float(q)
    ratio = _phase_ratio(w)
    if abs(ratio.imag) > 1e-12:
        return None
    sgn = -1.0 if sign_flip else 1.0
    taus = [1.0]
    for j in range(1, n + 1):
        num = float(q_int(j, qx))
        den = float(q_int(n - j + 1, qx))
        step = sgn * ratio.real * num / den
        if step <= 0:
            return None
        taus.append(taus[-1] * step**0.5)
    return np.diag(taus)


def build_u(sign: int, n: int, q, *, t_branch: str = "principal") -> RepMatrices:
    """Star-preserving model for the irreducible (sign, n) at q < 0.

    The twist is sign * i^n; for q < 0 that is precisely when K comes
    out real, and a diagonal rescaling then realizes E* = -F.  (sign, 0)
    gives the two one-dimensional representations, with K = sign.
    """
    if sign not in (1, -1):
        raise BadParameter(f"sign must be +-1, got {sign!r}")
    qf = _validate_q(q)
    if qf >= 0:
        raise BadParameter(f"these models need q < 0, got {q}")
    w = sign * (1j if n % 2 else 1 + 0j)
    base = build_pi(w, n, q, t_branch=t_branch)
    T = _unitarizer(w, n, q, sign_flip=True)
    if T is None:
        raise BadParameter(f"no star-preserving model at (sign={sign}, n={n}, q={q})")
    T_inv = np.diag(1 / np.diag(T))
    return RepMatrices(
        n=n,
        E=T @ base.E @ T_inv,
        F=T @ base.F @ T_inv,
        K=base.K,
        K_inv=base.K_inv,
        q=qf,
        w=w,
        form_tag="su11",
        t_branch=t_branch,
    )


@dataclass
class StarReport:
    form: str
    residual: float
    ok: bool

    def to_dict(self) -> dict:
        return {"form": self.form, "residual": self.residual, "ok": self.ok}


def check_star(rep: RepMatrices, form: str | None = None, tol: float = RESIDUAL_TOL) -> StarReport:
    """Residual of the star relations for the chosen form.

    su2:  E* = F,  K* = K.   su11:  E* = -F,  K* = K.
    """
    form = form or rep.form_tag
    if form == "su2":
        residual = max(_maxabs(rep.E.conj().T - rep.F), _maxabs(rep.K.conj().T - rep.K))
    elif form == "su11":
        residual = max(_maxabs(rep.E.conj().T + rep.F), _maxabs(rep.K.conj().T - rep.K))
    else:
        raise BadParameter(f"no star structure for form {form!r}")
    return StarReport(form=form, residual=residual, ok=residual <= tol)


@dataclass
class UnitarizabilityWitness:
    verdict: str  # "unitarizable" | "obstruction"
    form: str
    T: np.ndarray | None
    evidence: dict

    @property
    def unitarizable(self) -> bool:
        return self.verdict == "unitarizable"

    def to_dict(self) -> dict:
        out = {"verdict": self.verdict, "form": self.form, "evidence": dict(self.evidence)}
        if self.T is not None:
            out["T"] = [float(x) for x in np.diag(self.T).real]
        return out


def unitarizability_witness(w, n: int, q, form: str = "su11", *, t_branch: str = "principal") -> UnitarizabilityWitness:
    """Either a diagonal unitarizer for the twisted ladder, or why none exists.

    Obstructions come in two kinds: a non-real K spectrum (the twist has
    the wrong parity for any star form with K self-adjoint), and a
    definiteness failure visible in the spectrum of E F, which must be
    negative semidefinite for su11 (E F = -E E*) and positive
    semidefinite for su2.
    """
    if form not in ("su2", "su11"):
        raise BadParameter(f"form must be su2 or su11, got {form!r}")
    base = build_pi(w, n, q, t_branch=t_branch)
    kdiag = np.diag(base.K)
    if float(np.max(np.abs(kdiag.imag))) > RESIDUAL_TOL:
        return UnitarizabilityWitness(
            verdict="obstruction",
            form=form,
            T=None,
            evidence={
                "kind": "k_spectrum",
                "detail": "K has non-real eigenvalues, so K* = K is impossible",
                "k_diagonal": [complex(x) for x in kdiag],
            },
        )
    T = _unitarizer(base.w, n, q, sign_flip=(form == "su11"))
    if T is not None:
        return UnitarizabilityWitness(
            verdict="unitarizable", form=form, T=T, evidence={"kind": "diagonal_unitarizer"}
        )
    ef = np.diag(base.E @ base.F)
    want = -1 if form == "su2" else 1
    # su2 needs EF >= 0, su11 needs EF <= 0; report the worst offender.
    offenders = [(r, x.real) for r, x in enumerate(ef) if want * x.real > RESIDUAL_TOL]
    r, val = max(offenders, key=lambda it: abs(it[1]))
    return UnitarizabilityWitness(
        verdict="obstruction",
        form=form,
        T=None,
        evidence={
            "kind": "ef_spectrum",
            "detail": (
                f"eigenvalue {val:.6g} of E F at basis index {r} has the wrong sign "
                f"for {form} (needs {'>= 0' if form == 'su2' else '<= 0'})"
            ),
            "index": r,
            "eigenvalue": val,
        },
    )


def tensor_rep(a: RepMatrices, b: RepMatrices) -> RepMatrices:
    """Tensor product along the coproduct D(E) = E (x) K^-1 + K (x) E,
    D(F) = F (x) K^-1 + K (x) F, D(K) = K (x) K."""
    if abs(a.q - b.q) > 0 or a.t_branch != b.t_branch:
        raise BadParameter("tensor factors must share q and t_branch")
    E = np.kron(a.E, b.K_inv) + np.kron(a.K, b.E)
    F = np.kron(a.F, b.K_inv) + np.kron(a.K, b.F)
    K = np.kron(a.K, b.K)
    K_inv = np.kron(a.K_inv, b.K_inv)
    form = a.form_tag if a.form_tag == b.form_tag else "mixed"
    return RepMatrices(
        n=None, E=E, F=F, K=K, K_inv=K_inv, q=a.q, w=a.w * b.w, form_tag=form, t_branch=a.t_branch
    )


@dataclass
class IntertwinerSpace:
    dim: int
    basis: list[np.ndarray]
    singular_values: np.ndarray

    def to_dict(self) -> dict:
        return {"dim": self.dim, "singular_values": [float(s) for s in self.singular_values]}


def _nullity_at(s: np.ndarray, tol: float, scale: float) -> int:
    return int(np.sum(s <= tol * scale))


def intertwiner_space(a: RepMatrices, b: RepMatrices, tol: float = RESIDUAL_TOL) -> IntertwinerSpace:
    """Solutions T of T a(X) = b(X) T for X in {E, F, K}, by SVD nullspace.

    The rank decision demands a relative gap of SV_GAP between the kept
    and discarded singular values and must not move when the tolerance
    shifts a decade either way; otherwise IllConditioned.
    """
    da, db = a.dim, b.dim
    Ia, Ib = np.eye(da), np.eye(db)
    blocks = []
    for rep_a, rep_b in ((a.E, b.E), (a.F, b.F), (a.K, b.K)):
        blocks.append(np.kron(Ib, rep_a.T) - np.kron(rep_b, Ia))
    M = np.vstack(blocks)
    _, s, vh = np.linalg.svd(M)  # M is tall, so len(s) == db * da
    scale = s[0] if s.size and s[0] > 0 else 1.0
    nullity = _nullity_at(s, tol, scale)
    for other in (tol / 10, tol * 10):
        if _nullity_at(s, other, scale) != nullity:
            raise IllConditioned(
                f"nullity flips between tolerances {tol / 10:g} and {tol * 10:g}"
            )
    total = db * da
    if 0 < nullity < total:
        smallest_kept = s[total - nullity - 1]
        largest_null = s[total - nullity]
        if largest_null > 0 and smallest_kept / largest_null < SV_GAP:
            raise IllConditioned(
                f"singular-value gap {smallest_kept / largest_null:.3g} below {SV_GAP:g}"
            )
    # null vectors are columns of V, i.e. conjugated rows of vh
    basis = [vh[row].conj().reshape(db, da) for row in range(total - nullity, total)]
    return IntertwinerSpace(dim=nullity, basis=basis, singular_values=s)


@dataclass
class ConjugateEquationsReport:
    q: float
    c: complex
    norm_sq: float
    invariance_residual: float
    snake_residual: float
    ok: bool

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "c": [self.c.real, self.c.imag],
            "norm_sq": self.norm_sq,
            "invariance_residual": self.invariance_residual,
            "snake_residual": self.snake_residual,
            "ok": self.ok,
        }


def verify_conjugate_equations(q, *, t_branch: str = "principal", tol: float = RESIDUAL_TOL) -> ConjugateEquationsReport:
    """Check the duality pair for the level-1 irreducible.

    R = psi_0 (x) psi_1 - |q| psi_1 (x) psi_0 is invariant in both
    conjugate (x) u and u (x) conjugate, and both snake compositions come
    out as the same scalar c = -|q| (the pair is normalized by the
    vector, not the scalar, so c is reported rather than forced to 1).
    """
    qf = _validate_q(q)
    if qf >= 0:
        raise BadParameter(f"needs q < 0, got {q}")
    u = build_u(1, 1, q, t_branch=t_branch)
    ubar = build_u(-1, 1, q, t_branch=t_branch)
    aq = abs(qf)
    R = np.zeros((4, 1), dtype=complex)
    R[1, 0] = 1.0
    R[2, 0] = -aq
    Rbar = R.copy()

    inv_res = 0.0
    for rep, vec in ((tensor_rep(ubar, u), R), (tensor_rep(u, ubar), Rbar)):
        inv_res = max(
            inv_res,
            _maxabs(rep.E @ vec),
            _maxabs(rep.F @ vec),
            _maxabs(rep.K @ vec - vec),
        )

    I2 = np.eye(2)
    snake1 = np.kron(Rbar.conj().T, I2) @ np.kron(I2, R)
    snake2 = np.kron(R.conj().T, I2) @ np.kron(I2, Rbar)
    c = complex(snake1[0, 0])
    snake_res = max(
        _maxabs(snake1 - c * I2),
        _maxabs(snake2 - c * I2),
    )
    norm_sq = float((R.conj().T @ R).real[0, 0])
    ok = (
        inv_res <= tol
        and snake_res <= tol
        and abs(c - (-aq)) <= tol
        and abs(norm_sq - (1 + qf * qf)) <= tol
    )
    return ConjugateEquationsReport(
        q=qf, c=c, norm_sq=norm_sq, invariance_residual=inv_res, snake_residual=snake_res, ok=ok
    )


@dataclass
class PermutationReport:
    n: int
    q: float
    residual: float
    hom_dim: int
    ok: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "residual": self.residual,
            "hom_dim": self.hom_dim,
            "ok": self.ok,
        }


def verify_permutation_intertwiner(n: int, q, *, t_branch: str = "principal", tol: float = RESIDUAL_TOL) -> PermutationReport:
    """The flip intertwines (-,0) (x) (+,n) with (+,n) (x) (-,0).

    Both orders act on the same (n+1)-dimensional space and the flip is
    the identity matrix there; the residual measures how far the two
    tensor actions are from agreeing, and the hom dimension is
    cross-checked through the SVD route.
    """
    iota_minus = build_u(-1, 0, q, t_branch=t_branch)
    u = build_u(1, n, q, t_branch=t_branch)
    a = tensor_rep(iota_minus, u)
    b = tensor_rep(u, iota_minus)
    residual = max(_maxabs(a.E - b.E), _maxabs(a.F - b.F), _maxabs(a.K - b.K))
    space = intertwiner_space(a, b)
    return PermutationReport(
        n=n, q=float(q), residual=residual, hom_dim=space.dim, ok=residual <= tol and space.dim == 1
    )


@dataclass
class FusionCrosscheckReport:
    q: float
    n_max: int
    pairs_checked: int
    mismatches: list[str]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n_max": self.n_max,
            "pairs_checked": self.pairs_checked,
            "mismatches": list(self.mismatches),
            "ok": self.ok,
        }


def fusion_crosscheck(n_max: int, q, *, t_branch: str = "principal") -> FusionCrosscheckReport:
    """Tensor-product multiplicities, measured numerically, against the ring.

    For every ordered pair of irreducibles up to level n_max, decompose
    the matrix tensor product by counting intertwiners from each
    candidate irreducible, and compare with the symbolic decomposition.
    """
    from .rings.su11 import uq_su11_ring

    ring = uq_su11_ring()
    reps: dict[tuple[int, int], RepMatrices] = {}

    def rep(sign, n):
        key = (sign, n)
        if key not in reps:
            reps[key] = build_u(sign, n, q, t_branch=t_branch)
        return reps[key]

    mismatches = []
    pairs = 0
    signs = (1, -1)
    for n in range(n_max + 1):
        for m in range(n_max + 1):
            for eps in signs:
                for delta in signs:
                    pairs += 1
                    a = ring.parse_label(f"u{'+' if eps == 1 else '-'}{n}")
                    b = ring.parse_label(f"u{'+' if delta == 1 else '-'}{m}")
                    symbolic = {
                        w.id: mult for w, mult in ring.decompose(a, b)
                    }
                    big = tensor_rep(rep(eps, n), rep(delta, m))
                    numeric: dict[str, int] = {}
                    for k in range(n + m + 1):
                        for sigma in signs:
                            cand = rep(sigma, k)
                            d = intertwiner_space(cand, big).dim
                            if d:
                                numeric[f"u{'+' if sigma == 1 else '-'}{k}"] = d
                    if numeric != symbolic:
                        mismatches.append(
                            f"({a.id}) (x) ({b.id}): numeric {numeric} vs symbolic {symbolic}"
                        )
    return FusionCrosscheckReport(q=float(q), n_max=n_max, pairs_checked=pairs, mismatches=mismatches)


@dataclass
class UqVerifyReport:
    q: float
    n_max: int
    checks: list[tuple[str, bool, str]]

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n_max": self.n_max,
            "ok": self.ok,
            "checks": [
                {"name": name, "ok": ok, "detail": detail} for name, ok, detail in self.checks
            ],
        }


def full_verification(q, n_max: int = 6, *, t_branch: str = "principal") -> UqVerifyReport:
    """Run the whole numerical battery at one q; every line is pinned to
    the module tolerances."""
    qf = _validate_q(q)
    checks: list[tuple[str, bool, str]] = []

    worst_rel = 0.0
    worst_star = 0.0
    for n in range(n_max + 1):
        for sign in (1, -1):
            rep = build_u(sign, n, q, t_branch=t_branch)
            worst_rel = max(worst_rel, rep.max_relation_residual())
            worst_star = max(worst_star, check_star(rep).residual)
    checks.append(
        ("relations", worst_rel <= RESIDUAL_TOL, f"max residual {worst_rel:.3e} over n <= {n_max}")
    )
    checks.append(
        ("star", worst_star <= RESIDUAL_TOL, f"max residual {worst_star:.3e} over n <= {n_max}")
    )

    all_obstructed = True
    detail = ""
    for n in range(1, min(n_max, 6) + 1):
        w = 1j if n % 2 else 1
        witness = unitarizability_witness(w, n, q, form="su2", t_branch=t_branch)
        if witness.unitarizable:
            all_obstructed = False
            detail = f"n={n} unexpectedly unitarizable in the compact form"
            break
    checks.append(
        (
            "compact-form obstruction",
            all_obstructed,
            detail or f"every n in 1..{min(n_max, 6)} obstructed",
        )
    )

    conj = verify_conjugate_equations(q, t_branch=t_branch)
    checks.append(
        (
            "conjugate equations",
            conj.ok,
            f"c = {conj.c.real:.6g}{conj.c.imag:+.2g}i, target {-abs(qf):.6g}",
        )
    )

    perm_ok = True
    perm_detail = ""
    for n in range(min(n_max, 4) + 1):
        report = verify_permutation_intertwiner(n, q, t_branch=t_branch)
        if not report.ok:
            perm_ok = False
            perm_detail = f"n={n}: residual {report.residual:.3e}, hom dim {report.hom_dim}"
            break
    checks.append(
        ("permutation intertwiner", perm_ok, perm_detail or f"n <= {min(n_max, 4)} all exact")
    )

    cross = fusion_crosscheck(min(n_max, 3), q, t_branch=t_branch)
    checks.append(
        (
            "fusion crosscheck",
            cross.ok,
            f"{cross.pairs_checked} pairs, {len(cross.mismatches)} mismatches",
        )
    )

    return UqVerifyReport(q=qf, n_max=n_max, checks=checks)
