"""Seeded randomized property suites, one per verified statement.

Each suite draws every trial from its own generator, derived from the master
seed, the suite name and the trial index (see :func:`bcx.sampling.trial_rng`),
so a report depends only on the :class:`SuiteConfig`.

Violations are dimensionless.  Identities report the relative gap
``|lhs - rhs| / max(|lhs|, |rhs|)``, inequalities the relative excess
``max(0, lhs - rhs) / max(|lhs|, |rhs|)``, predicate agreement suites the
number of disagreements.  A suite passes when its largest violation does not
exceed its threshold.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import algebra as alg
from .algebra import E1, Bicomplex, Hyperbolic, Tolerance
from .duality import check_dual_isometries
from .errors import InvalidConfigError, UnknownSuiteError
from .hardy import (
    BCPowerSeries,
    WeightSequence,
    compose,
    compose_maps,
    composition_matrix,
    evaluate,
    hardy_norm,
    littlewood_bound,
    mobius_norm_bound,
    mobius_series,
    mobius_truncation_bound,
    seq_embed,
    seq_norm,
)
from .linalg import (
    BCMatrix,
    adjoint,
    cartesian_normal_check,
    componentwise_normal,
    dnorm_vec,
    euclid_vec,
    inner_product,
    is_normal,
    is_positive,
    is_self_adjoint,
    is_unitary,
    is_zero_operator,
    op_dnorm,
)
from .sampling import (
    cgauss,
    random_bicomplex,
    random_blaschke_self_map,
    random_discus_point,
    random_matrix,
    random_normal_matrix,
    random_series,
    random_submodule,
    random_unitary,
    random_vector,
    trial_rng,
)

MAX_DIM = 16
MAX_DEGREE = 128
UINT64_MAX = 2**64 - 1


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    trials: int = 200
    dim: int = 6
    degree: int = 32
    tol: Tolerance = Tolerance(rel=1e-8)
    suites: tuple[str, ...] = ()

    def __post_init__(self):
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or not 0 <= self.seed <= UINT64_MAX:
            raise InvalidConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        if self.trials < 1:
            raise InvalidConfigError(f"trials must be positive, got {self.trials}")
        if not 1 <= self.dim <= MAX_DIM:
            raise InvalidConfigError(f"dim must lie in [1, {MAX_DIM}], got {self.dim}")
        if not 1 <= self.degree <= MAX_DEGREE:
            raise InvalidConfigError(f"degree must lie in [1, {MAX_DEGREE}], got {self.degree}")
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise UnknownSuiteError(f"unknown suite(s): {', '.join(unknown)}")

    @property
    def selected(self) -> list[str]:
        return sorted(set(self.suites)) if self.suites else sorted(SUITES)

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "dim": self.dim,
            "degree": self.degree,
            "tol": {"rel": self.tol.rel, "abs": self.tol.abs},
            "suites": self.selected,
        }


@dataclass
class SuiteResult:
    name: str
    passed: bool
    trials: int
    max_violation: float | Hyperbolic
    threshold: float
    wall_time: float = 0.0

    def to_json(self, timing: bool = False) -> dict:
        mv = self.max_violation
        out = {
            "name": self.name,
            "passed": self.passed,
            "trials": self.trials,
            "max_violation": [mv.x1, mv.x2] if isinstance(mv, Hyperbolic) else mv,
            "threshold": self.threshold,
        }
        if timing:
            out["wall_time"] = self.wall_time
        return out


@dataclass
class Report:
    config: SuiteConfig
    results: list[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self, timing: bool = False) -> dict:
        return {
            "config": self.config.to_json(),
            "suites": [r.to_json(timing) for r in sorted(self.results, key=lambda r: r.name)],
            "passed": self.passed,
        }


class _Worst:
    """Running maximum of violations, real or per idempotent component."""

    def __init__(self, hyperbolic: bool = False):
        self.hyperbolic = hyperbolic
        self.v = [0.0, 0.0] if hyperbolic else [0.0]

    def add(self, v, component: int | None = None):
        v = float(v)
        if math.isnan(v):
            v = math.inf
        if component is None:
            self.v = [max(x, v) for x in self.v]
        else:
            self.v[component] = max(self.v[component], v)

    def add_h(self, h: Hyperbolic):
        self.add(h.x1, 0)
        self.add(h.x2, 1)

    @property
    def value(self):
        return Hyperbolic(*self.v) if self.hyperbolic else self.v[0]

    @property
    def max(self) -> float:
        return max(self.v)


def rel_gap(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    return abs(a - b) / scale if scale > 0 else 0.0


def rel_excess(lhs: float, rhs: float) -> float:
    scale = max(abs(lhs), abs(rhs))
    return max(0.0, lhs - rhs) / scale if scale > 0 else 0.0


def _cgap(a: complex, b: complex, scale: float) -> float:
    return abs(a - b) / scale if scale > 0 else abs(a - b)


def _bgap(A: Bicomplex, B: Bicomplex, scale: float) -> float:
    """Largest idempotent-component gap relative to ``scale``."""
    return max(_cgap(A.z1, B.z1, scale), _cgap(A.z2, B.z2, scale))


def _hgap(a: Hyperbolic, b: Hyperbolic) -> Hyperbolic:
    return Hyperbolic(rel_gap(a.x1, b.x1), rel_gap(a.x2, b.x2))


def _mag(*zs: Bicomplex) -> float:
    return max(max(abs(z.z1), abs(z.z2)) for z in zs)


def _cart_mul(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    z, w = a.to_cartesian()
    u, v = b.to_cartesian()
    return Bicomplex.from_cartesian(z * u - w * v, w * u + z * v)


# --- scalar algebra ---------------------------------------------------------


def _suite_algebra(cfg: SuiteConfig) -> SuiteResult:
    worst = _Worst()
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, "algebra", t)
        a, b, c = (random_bicomplex(rng) for _ in range(3))
        s = _mag(a, b, c)
        # round trip
        worst.add(_bgap(Bicomplex.from_cartesian(*a.to_cartesian()), a, _mag(a)))
        # ring laws, scaled by the size of the products involved
        worst.add(_bgap(a + b, b + a, s))
        worst.add(_bgap((a + b) + c, a + (b + c), s))
        worst.add(_bgap(a * b, b * a, s * s))
        worst.add(_bgap((a * b) * c, a * (b * c), s ** 3))
        worst.add(_bgap(a * (b + c), a * b + a * c, s * s))
        worst.add(_bgap(a * b, _cart_mul(a, b), s * s))
        # conjugation table against the cartesian definitions
        z, w = a.to_cartesian()
        zc, wc = z.conjugate(), w.conjugate()
        worst.add(_bgap(a.conj1(), Bicomplex.from_cartesian(zc, wc), s))
        worst.add(_bgap(a.conj2(), Bicomplex.from_cartesian(z, -w), s))
        worst.add(_bgap(a.conj3(), Bicomplex.from_cartesian(zc, -wc), s))
        for conj in (alg.conj1, alg.conj2, alg.conj3):
            worst.add(_bgap(conj(conj(a)), a, s))
        worst.add(_bgap(alg.conj1(alg.conj2(a)), alg.conj3(a), s))
        # modulus consistency and multiplicativity
        sq = a * a.conj3()
        mk = alg.modulus_k(a)
        worst.add(max(abs(sq.z1.imag), abs(sq.z2.imag)) / (s * s))
        worst.add(rel_gap(sq.z1.real, mk.x1 ** 2))
        worst.add(rel_gap(sq.z2.real, mk.x2 ** 2))
        prod = alg.modulus_k(a * b)
        ref = alg.hyp_mul(alg.modulus_k(a), alg.modulus_k(b))
        worst.add(rel_gap(prod.x1, ref.x1))
        worst.add(rel_gap(prod.x2, ref.x2))
        # Euclidean norm: cartesian formula and bridge to the hyperbolic modulus
        x0, x1, x2, x3 = a.to_real4()
        worst.add(rel_gap(alg.euclid_norm(a), math.sqrt(x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3)))
        worst.add(rel_gap(alg.euclid_norm(a), mk.magnitude))
        # |ab| <= sqrt(2) |a| |b|
        worst.add(rel_excess(alg.euclid_norm(a * b), math.sqrt(2) * alg.euclid_norm(a) * alg.euclid_norm(b)))
    # equality case of submultiplicativity
    worst.add(rel_gap(alg.euclid_norm(E1 * E1), math.sqrt(2) * alg.euclid_norm(E1) ** 2))
    return _result("algebra", cfg.trials, worst, cfg.tol.rel)


# --- operators on bicomplex Hilbert modules ----------------------------------


def _dim(rng: np.random.Generator, cfg: SuiteConfig) -> int:
    return int(rng.integers(1, cfg.dim + 1))


def _suite_parallelogram(cfg: SuiteConfig) -> SuiteResult:
    worst = _Worst(hyperbolic=True)
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, "parallelogram", t)
        n = _dim(rng, cfg)
        x, y = random_vector(rng, n), random_vector(rng, n)
        lhs = dnorm_vec(x + y) * dnorm_vec(x + y) + dnorm_vec(x - y) * dnorm_vec(x - y)
        rhs = 2 * (dnorm_vec(x) * dnorm_vec(x) + dnorm_vec(y) * dnorm_vec(y))
        worst.add_h(_hgap(lhs, rhs))
        lhs_e = euclid_vec(x + y) ** 2 + euclid_vec(x - y) ** 2
        rhs_e = 2 * (euclid_vec(x) ** 2 + euclid_vec(y) ** 2)
        worst.add(rel_gap(lhs_e, rhs_e))
    return _result("parallelogram", cfg.trials, worst, cfg.tol.rel)


def _suite_normal_characterization(cfg: SuiteConfig) -> SuiteResult:
    disagreements = _Worst()
    count = 0
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, "normal_characterization", t)
        n = _dim(rng, cfg)
        A = random_normal_matrix(rng, n) if t % 2 == 0 else random_matrix(rng, n)
        direct = is_normal(A)
        split = all(componentwise_normal(A))
        B, C = A.to_cartesian()
        cart = cartesian_normal_check(B, C)
        if t % 2 == 0 and not direct:
            count += 1  # a constructed normal matrix must be recognised
        if not (direct == split == cart):
            count += 1
        disagreements.add(count)
    return _result("normal_characterization", cfg.trials, disagreements, 0.0)


def _suite_normal_norms(cfg: SuiteConfig) -> SuiteResult:
    worst = _Worst(hyperbolic=True)
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, "normal_norms", t)
        n = _dim(rng, cfg)
        A = random_normal_matrix(rng, n)
        As = adjoint(A)
        for _ in range(4):
            x = random_vector(rng, n)
            worst.add_h(_hgap(dnorm_vec(A @ x), dnorm_vec(As @ x)))
            worst.add(rel_gap(euclid_vec(A @ x), euclid_vec(As @ x)))
    return _result("normal_norms", cfg.trials, worst, cfg.tol.rel)


def _suite_adjoint_norms(cfg: SuiteConfig) -> SuiteResult:
    worst = _Worst(hyperbolic=True)
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, "adjoint_norms", t)
        n = _dim(rng, cfg)
        A = random_matrix(rng, n)
        nA = op_dnorm(A).dnorm
        worst.add_h(_hgap(op_dnorm(adjoint(A)).dnorm, nA))
        worst.add_h(_hgap(op_dnorm(adjoint(A) @ A).dnorm, nA * nA))
    return _result("adjoint_norms", cfg.trials, worst, cfg.tol.rel)


def _cstar_window(A: BCMatrix, worst: _Worst):
    e = op_dnorm(A).euclid
    ess = op_dnorm(adjoint(A) @ A).euclid
    worst.add(rel_excess(e * e, ess))
    worst.add(rel_excess(ess, math.sqrt(2) * e * e))


def _suite_cstar_inequality(cfg: SuiteConfig) -> SuiteResult:
    worst = _Worst()
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, "cstar_inequality", t)
        n = _dim(rng, cfg)
        A = random_matrix(rng, n)
        if rng.uniform() < 0.25:
            # lopsided components probe both ends of the window
            A = BCMatrix(A.A1 * 10 ** rng.uniform(-3, 3), A.A2)
        _cstar_window(A, worst)
    return _result("cstar_inequality", cfg.trials, worst, cfg.tol.rel)


def _suite_normal_power(cfg: SuiteConfig) -> SuiteResult:
    worst = _Worst(hyperbolic=True)
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, "normal_power", t)
        n = _dim(rng, cfg)
        A = random_normal_matrix(rng, n)
        nA = op_dnorm(A)
        nA2 = op_dnorm(A @ A)
        worst.add_h(_hgap(nA2.dnorm, nA.dnorm * nA.dnorm))
        worst.add(rel_excess(nA.euclid ** 2, nA2.euclid))
        worst.add(rel_excess(nA2.euclid, math.sqrt(2) * nA.euclid ** 2))
    return _result("normal_power", cfg.trials, worst, cfg.tol.rel)


def _suite_operator_predicates(cfg: SuiteConfig) -> SuiteResult:
    """Self-adjoint, unitary, positive and zero predicates against componentwise facts."""
    worst = _Worst()
    bad = 0
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, "operator_predicates", t)
        n = _dim(rng, cfg)
        G = random_matrix(rng, n)
        H = G + adjoint(G)
        U = BCMatrix(random_unitary(rng, n), random_unitary(rng, n))
        P = adjoint(G) @ G
        checks = [
            is_self_adjoint(H),
            is_unitary(U),
            is_positive(P),
            is_positive(G @ adjoint(G)),
            not is_self_adjoint(G),
            not is_unitary(G),
            not is_positive(-P),
            is_zero_operator(BCMatrix.zeros(n)),
            not is_zero_operator(G),
        ]
        # <Hx, x> is hyperbolic for self-adjoint H, and not for a generic matrix
        x = random_vector(rng, n)
        checks.append(inner_product(H @ x, x).is_hyperbolic(Tolerance(rel=1e-9)))
        bad += checks.count(False)
        worst.add(bad)
    return _result("operator_predicates", cfg.trials, worst, 0.0)


def _suite_involution(cfg: SuiteConfig) -> SuiteResult:
    worst = _Worst()
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, "involution", t)
        n = _dim(rng, cfg)
        A, B = random_matrix(rng, n), random_matrix(rng, n)
        alpha = random_bicomplex(rng, 1.0)
        s = max(np.abs(A.A1).max(), np.abs(A.A2).max(), np.abs(B.A1).max(), np.abs(B.A2).max())
        worst.add(_mgap(adjoint(adjoint(A)), A, s))
        worst.add(_mgap(adjoint(A @ B), adjoint(B) @ adjoint(A), n * s * s))
        worst.add(_mgap(adjoint(alpha * A + B), alpha.conj3() * adjoint(A) + adjoint(B), 2 * s))
        eA, eB = op_dnorm(A).euclid, op_dnorm(B).euclid
        worst.add(rel_excess(op_dnorm(A @ B).euclid, math.sqrt(2) * eA * eB))
        _cstar_window(A, worst)
    return _result("involution", cfg.trials, worst, cfg.tol.rel)


def _mgap(X: BCMatrix, Y: BCMatrix, scale: float) -> float:
    d = max(np.abs(X.A1 - Y.A1).max(), np.abs(X.A2 - Y.A2).max())
    return d / scale if scale > 0 else d


# --- duality ----------------------------------------------------------------


def _suite_dual_isometries(cfg: SuiteConfig) -> SuiteResult:
    worst = _Worst(hyperbolic=True)
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, "dual_isometries", t)
        n = _dim(rng, cfg)
        M = random_submodule(rng, n)
        rep = check_dual_isometries(M, trials=2, seed=int(rng.integers(2**63)))
        worst.add_h(rep.max_violation_a)
        worst.add_h(rep.max_violation_b)
    return _result("dual_isometries", cfg.trials, worst, cfg.tol.rel)


# --- Hardy space and composition operators ----------------------------------


def _random_weights(rng: np.random.Generator, N: int) -> WeightSequence:
    b = np.exp(rng.uniform(-1, 1, size=(2, N + 1)))
    b[:, 0] = 1.0
    return WeightSequence(b[0], b[1])


def _suite_weighted_isometry(cfg: SuiteConfig) -> SuiteResult:
    worst = _Worst(hyperbolic=True)
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, "weighted_isometry", t)
        N = int(rng.integers(0, cfg.degree + 1))
        f = random_series(rng, N)
        beta = _random_weights(rng, N)
        worst.add_h(_hgap(seq_norm(seq_embed(f), beta), hardy_norm(f, beta)))
        worst.add_h(_hgap(seq_norm(seq_embed(f)), hardy_norm(f)))
    return _result("weighted_isometry", cfg.trials, worst, cfg.tol.rel)


SUBORDINATION_THRESHOLD = 1e-12


def _suite_subordination(cfg: SuiteConfig) -> SuiteResult:
    worst = _Worst(hyperbolic=True)
    N = cfg.degree
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, "subordination", t)
        phi = random_blaschke_self_map(rng, N)
        for _ in range(4):
            f = random_series(rng, N)
            lhs, rhs = hardy_norm(compose(f, phi, N)), hardy_norm(f)
            worst.add(max(0.0, lhs.x1 - rhs.x1) / rhs.x1, 0)
            worst.add(max(0.0, lhs.x2 - rhs.x2) / rhs.x2, 1)
    return _result("subordination", cfg.trials, worst, SUBORDINATION_THRESHOLD)


BOUND_SLACK = 1e-6


def _suite_mobius_bound(cfg: SuiteConfig) -> SuiteResult:
    worst = _Worst(hyperbolic=True)
    N = cfg.degree
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, "mobius_bound", t)
        a = random_discus_point(rng, 0.9)
        T = mobius_series(a, N)
        norm = op_dnorm(composition_matrix(T, N)).dnorm
        worst.add_h(_excess_h(norm, mobius_norm_bound(a)))
    return _result("mobius_bound", cfg.trials, worst, BOUND_SLACK)


def _excess_h(norm: Hyperbolic, bound: Hyperbolic) -> Hyperbolic:
    return Hyperbolic(max(0.0, norm.x1 - bound.x1), max(0.0, norm.x2 - bound.x2))


def _suite_littlewood(cfg: SuiteConfig) -> SuiteResult:
    """``Phi = T_a o Psi`` with ``Psi(0) = 0``; truncated norm below the bound and monotone in N."""
    worst = _Worst(hyperbolic=True)
    N = cfg.degree
    half = max(N // 2, 1)
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, "littlewood", t)
        a = random_discus_point(rng, 0.9)
        psi = random_blaschke_self_map(rng, N)
        phi = compose_maps(mobius_series(a, N), psi, N)
        bound = littlewood_bound(phi)
        full = op_dnorm(composition_matrix(phi, N)).dnorm
        part = op_dnorm(composition_matrix(phi, half)).dnorm
        worst.add_h(_excess_h(full, bound))
        worst.add_h(_excess_h(part, full))
    return _result("littlewood", cfg.trials, worst, BOUND_SLACK)


def _suite_mobius_identities(cfg: SuiteConfig) -> SuiteResult:
    """``T_a(0) = a``, ``T_a(a) = 0`` and ``T_a o T_a = id``; violation is error beyond the truncation bound."""
    worst = _Worst(hyperbolic=True)
    N = cfg.degree
    r = 0.5
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, "mobius_identities", t)
        a = random_discus_point(rng, 0.9)
        T = mobius_series(a, N)
        bound = mobius_truncation_bound(a, N, r)
        TT = compose(T.series, T, N)
        checks = [(evaluate(T.series, 0), a), (evaluate(T.series, a), Bicomplex(0, 0))]
        for _ in range(4):
            Z = random_discus_point(rng, r)
            checks.append((evaluate(TT, Z), Z))
        for got, want in checks:
            err = Hyperbolic(abs(got.z1 - want.z1), abs(got.z2 - want.z2))
            worst.add_h(_excess_h(err, bound))
    return _result("mobius_identities", cfg.trials, worst, 1e-12)


def _suite_composition_decomposition(cfg: SuiteConfig) -> SuiteResult:
    """``compose(f, Phi)(Z) = f(Phi(Z))`` up to the dropped tail.

    With ``Phi(0) = 0`` and ``|Phi| <= 1``, ``|f o Phi| <= sum |a_n| <= sqrt(N+1) |f|`` on the
    disk, so by Cauchy's estimate the tail at ``|z| <= r`` is below
    ``sqrt(N+1) |f| r^(N+1) / (1 - r)``.
    """
    worst = _Worst(hyperbolic=True)
    N = cfg.degree
    r = 0.5
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, "composition_decomposition", t)
        phi = random_blaschke_self_map(rng, N, max_modulus=0.5)
        f = random_series(rng, N)
        fphi = compose(f, phi, N)
        nf = hardy_norm(f)
        for _ in range(4):
            Z = random_discus_point(rng, r)
            got, want = evaluate(fphi, Z), evaluate(f, evaluate(phi.series, Z))
            tail = nf * (math.sqrt(N + 1) * r ** (N + 1) / (1 - r))
            err = Hyperbolic(abs(got.z1 - want.z1), abs(got.z2 - want.z2))
            worst.add_h(_excess_h(err, tail + 1e-12 * (nf.x1 + nf.x2)))
    return _result("composition_decomposition", cfg.trials, worst, 0.0)


def _result(name: str, trials: int, worst: _Worst, threshold: float) -> SuiteResult:
    return SuiteResult(name, worst.max <= threshold, trials, worst.value, threshold)


SUITES: dict[str, Callable[[SuiteConfig], SuiteResult]] = {
    "algebra": _suite_algebra,
    "parallelogram": _suite_parallelogram,
    "normal_characterization": _suite_normal_characterization,
    "normal_norms": _suite_normal_norms,
    "adjoint_norms": _suite_adjoint_norms,
    "cstar_inequality": _suite_cstar_inequality,
    "normal_power": _suite_normal_power,
    "operator_predicates": _suite_operator_predicates,
    "involution": _suite_involution,
    "dual_isometries": _suite_dual_isometries,
    "weighted_isometry": _suite_weighted_isometry,
    "subordination": _suite_subordination,
    "mobius_bound": _suite_mobius_bound,
    "littlewood": _suite_littlewood,
    "mobius_identities": _suite_mobius_identities,
    "composition_decomposition": _suite_composition_decomposition,
}


def run_suite(name: str, cfg: SuiteConfig) -> SuiteResult:
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite: {name}")
    start = time.perf_counter()
    result = SUITES[name](cfg)
    result.wall_time = time.perf_counter() - start
    return result


def verify(cfg: SuiteConfig) -> Report:
    report = Report(cfg)
    for name in cfg.selected:
        report.results.append(run_suite(name, cfg))
    return report
