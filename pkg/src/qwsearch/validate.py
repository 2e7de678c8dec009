"""Cross-validation harness: runs every oracle identity and reports deviations.

Hard checks decide the exit status. Soft checks (agreement of the closed-form
pairwise concurrence sum with brute force, asymptotic complementarity) are
reported with a threshold but only warn.
"""

from __future__ import annotations

import itertools
import json
import math
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from . import closedform, fullsim, noise, resources
from .model import InitialState, angles, initial_amplitudes, make_instance
from .series import extremal_set

SWEEP_SIZES = (2, 4, 8, 16)
SWEEP_STEPS = 60


@dataclass
class CheckResult:
    name: str
    hard: bool
    passed: bool
    measured: float
    threshold: float
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def status(self) -> str:
        if self.passed:
            return "PASS"
        return "FAIL" if self.hard else "WARN"


def sweep_instances(sizes=SWEEP_SIZES):
    for n1, n2 in itertools.product(sizes, repeat=2):
        for k in range(1, n1):
            for init in InitialState:
                yield make_instance(n1, n2, k, init)


def _pure_coherence(amps) -> float:
    v = np.asarray(amps, dtype=float)
    return resources.l1_coherence(np.outer(v, v))


def check_unitarity() -> CheckResult:
    worst = 0.0
    fixed_point = 0.0
    for n1, n2, k in [(2, 1, 1), (2, 3, 1), (4, 4, 1), (4, 8, 3), (8, 4, 2), (8, 8, 5)]:
        inst = make_instance(n1, n2, k, "sigma")
        u = fullsim.build_step_operator(inst).dense()
        worst = max(worst, float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0])))))
        walk = fullsim.StepOperator(inst, oracle="none")
        sigma = fullsim.initial_arc_state(inst)
        fixed_point = max(fixed_point, float(np.max(np.abs(walk.apply(sigma) - sigma))))
    measured = max(worst, fixed_point)
    return CheckResult("unitarity", True, measured <= 1e-12, measured, 1e-12,
                       {"max |U^+U - I|": worst, "max |W sigma - sigma|": fixed_point})


def check_oracle_agreement(oracle: str = "tail", sizes=SWEEP_SIZES, t_max: int = SWEEP_STEPS) -> list[CheckResult]:
    """Closed forms against the projected arc-space evolution."""
    min_overlap = 1.0
    max_residual = 0.0
    max_prob = 0.0
    max_coh = 0.0
    by_size: dict[int, float] = {}
    for inst in sweep_instances(sizes):
        basis = fullsim.subspace_basis(inst)
        op = fullsim.StepOperator(inst, oracle)
        size_dev = by_size.get(inst.n1 * inst.n2, 0.0)
        for t, state in enumerate(fullsim.iter_evolution(inst, t_max, op)):
            amps, residual = fullsim.project_to_subspace(state, basis)
            closed = closedform.state_at(inst, t)
            overlap = abs(float(np.dot(closed, amps)))
            min_overlap = min(min_overlap, overlap)
            max_residual = max(max_residual, residual)
            size_dev = max(size_dev, 1 - overlap)
            p_full = fullsim.success_probability_full(state, inst)
            max_prob = max(max_prob, abs(p_full - amps.m_ab**2), abs(p_full - closedform.success_probability(inst, t)))
            max_coh = max(max_coh, abs(closedform.coherence_at(inst, t) - _pure_coherence(closed)))
        by_size[inst.n1 * inst.n2] = size_dev
    deviation = {str(k): v for k, v in sorted(by_size.items())}
    return [
        CheckResult("closed_vs_full", True, min_overlap >= 1 - 1e-8, 1 - min_overlap, 1e-8,
                    {"min overlap": min_overlap, "max 1-overlap by n1*n2": deviation}),
        CheckResult("subspace_invariance", True, max_residual < 1e-10, max_residual, 1e-10),
        CheckResult("success_probability_full", True, max_prob <= 1e-10, max_prob, 1e-10),
        CheckResult("coherence_identity", True, max_coh <= 1e-10, max_coh, 1e-10),
    ]


def check_subspace_operator() -> CheckResult:
    worst = 0.0
    for n1, n2, k, init in [(4, 4, 1, "s"), (16, 16, 6, "s"), (8, 2, 3, "sigma"), (2, 16, 1, "s")]:
        inst = make_instance(n1, n2, k, init)
        m = fullsim.extract_subspace_operator(inst)
        worst = max(worst, float(np.max(np.abs(m.T @ m - np.eye(4)))))
        v = np.array(initial_amplitudes(inst))
        for t in range(SWEEP_STEPS + 1):
            worst = max(worst, float(np.max(np.abs(v - np.array(closedform.state_at(inst, t))))))
            v = m @ v
    return CheckResult("subspace_operator", True, worst <= 1e-10, worst, 1e-10)


def _bell() -> np.ndarray:
    return np.array([1, 0, 0, 1]) / math.sqrt(2)


def check_wootters() -> CheckResult:
    errors = []
    bell = _bell()
    errors.append(abs(resources.wootters_concurrence(np.outer(bell, bell)) - 1))
    for a, b in [(0.3, 1.1), (0.0, 0.0), (1.2, -0.4)]:
        q1 = np.array([math.cos(a), math.sin(a)])
        q2 = np.array([math.cos(b), 1j * math.sin(b)])
        prod = np.kron(q1, q2)
        errors.append(resources.wootters_concurrence(np.outer(prod, prod.conj())))
    for p in np.linspace(0, 1, 21):
        rho = p * np.outer(bell, bell) + (1 - p) * np.eye(4) / 4
        errors.append(abs(resources.wootters_concurrence(rho) - max(0.0, (3 * p - 1) / 2)))
    worst = float(max(errors))
    return CheckResult("wootters_concurrence", True, worst <= 1e-8, worst, 1e-8)


def check_multipartite() -> CheckResult:
    ghz = np.zeros(8)
    ghz[0] = ghz[7] = 1 / math.sqrt(2)
    product = np.kron(np.kron([1, 0], [0.6, 0.8]), [0.8, 0.6])
    errors = [
        abs(resources.multipartite_concurrence(product)),
        abs(resources.multipartite_concurrence(_bell()) - 1),
        abs(resources.multipartite_concurrence(ghz) - 2 * math.sqrt(3 / 8)),
    ]
    psi = resources.encode_subspace_state(closedform.state_at(make_instance(8, 8, 1), 3), resources.EncodingParams(4))
    errors.append(abs(resources.multipartite_concurrence(psi, True) - resources.multipartite_concurrence(psi, False)))
    worst = float(max(errors))
    return CheckResult("multipartite_concurrence", True, worst <= 1e-10, worst, 1e-10)


def pairwise_sum_comparison(n: int, t_max: int = 40) -> dict:
    """Brute-force pairwise concurrence sum next to the closed form, both parities."""
    p = resources.EncodingParams(n)
    inst = make_instance(p.partition_size, p.partition_size, 1)
    out = {}
    for parity in ("even", "odd"):
        steps = resources.parity_steps(t_max, parity)
        brute, closed, flag_pair = [], [], []
        worst_pairs = None
        worst_gap = -1.0
        for t in steps:
            amps = closedform.state_at(inst, t)
            pairs = resources.pairwise_concurrences(resources.encode_subspace_state(amps, p))
            b = math.fsum(pairs.values())
            c = resources.sC_closed_form(amps, n)
            brute.append(b)
            closed.append(c)
            flag_pair.append(pairs[(0, n)])
            if abs(b - c) > worst_gap:
                worst_gap = abs(b - c)
                worst_pairs = {"t": t, "pairs": {f"{i}-{j}": v for (i, j), v in pairs.items() if v > 1e-12}}
        out[parity] = {
            "steps": steps,
            "brute": brute,
            "closed": closed,
            "flag_pair": flag_pair,
            "max_gap": max(abs(b - c) for b, c in zip(brute, closed)),
            "worst": worst_pairs,
        }
    return out


def minimizers_coincide(steps, a, b, tol: float = 1e-6) -> bool:
    return bool(set(extremal_set(steps, a, "min", tol)) & set(extremal_set(steps, b, "min", tol)))


def check_pairwise_sum(tol: float = 1e-8) -> list[CheckResult]:
    argmin_ok = True
    gap = 0.0
    detail = {}
    for n in (3, 4):
        comp = pairwise_sum_comparison(n)
        for parity, d in comp.items():
            same = minimizers_coincide(d["steps"], d["brute"], d["closed"])
            argmin_ok &= same
            gap = max(gap, d["max_gap"])
            detail[f"n={n} {parity}"] = {
                "argmin brute": extremal_set(d["steps"], d["brute"], "min", 1e-6),
                "argmin closed": extremal_set(d["steps"], d["closed"], "min", 1e-6),
                "max |brute - closed|": d["max_gap"],
                "max |C(flag pair) - 2*closed|": max(
                    abs(f - 2 * c) for f, c in zip(d["flag_pair"], d["closed"]) if c > 0
                ),
                "worst step pair concurrences": d["worst"],
            }
    return [
        CheckResult("pairwise_sum_argmin", True, argmin_ok, float(not argmin_ok), 0.0, detail),
        CheckResult("pairwise_sum_agreement", False, gap <= tol, gap, tol),
    ]


def check_noise() -> list[CheckResult]:
    inst = make_instance(4, 4, 1)
    walk = fullsim.extract_subspace_operator(inst)
    recursion = law_q = law_c = 0.0
    for alpha in (0.0, 0.25, 0.5, 0.9, 1.0):
        cfg = noise.NoiseConfig(alpha)
        for t, rho in enumerate(noise.noisy_evolution(inst, cfg, 200, walk)):
            recursion = max(recursion, float(np.max(np.abs(rho - noise.noisy_state_closed_form(inst, cfg, t, walk)))))
            law_q = max(law_q, abs(float(np.real(rho[0, 0])) - noise.noisy_success_probability(inst, cfg, t)))
            law_c = max(law_c, abs(resources.l1_coherence(rho) - noise.noisy_coherence(inst, cfg, t)))
    half = noise.NoiseConfig(0.5)
    rhos = noise.noisy_evolution(inst, half, 60, walk)
    settle = max(abs(float(np.real(rhos[t][0, 0])) - 0.25) for t in range(50, 61))
    fade = resources.l1_coherence(rhos[20])
    return [
        CheckResult("noise_recursion", True, recursion <= 1e-12, recursion, 1e-12),
        CheckResult("noise_success_law", True, law_q <= 1e-12, law_q, 1e-12),
        CheckResult("noise_coherence_law", True, law_c <= 1e-10, law_c, 1e-10),
        CheckResult("noise_settles", True, settle < 1e-3 and fade < 1e-5, settle, 1e-3,
                    {"max |Q_t - 1/4|, t in [50,60]": settle, "C_noisy(20)": fade}),
    ]


def coherence_trend() -> dict[str, list[float]]:
    """|P_0 + C(0) - target| at growing n1 = n2, one marked vertex."""
    out = {}
    for init in InitialState:
        out[init.value] = [abs(closedform.complementarity_residual(make_instance(2**e, 2**e, 1, init), 0))
                           for e in range(4, 21, 2)]
    return out


def entanglement_complementarity(n: int) -> float:
    """max over one period of even steps of |P + sC_closed - cos^2 theta|."""
    size = 2 ** (n - 1)
    inst = make_instance(size, size, 1)
    theta, _, phi = angles(inst)
    period = math.ceil(math.pi / phi)
    worst = 0.0
    for t in range(0, period + 1, 2):
        amps = closedform.state_at(inst, t)
        value = closedform.success_probability(inst, t) + resources.sC_closed_form(amps, n)
        worst = max(worst, abs(value - math.cos(theta) ** 2))
    return worst


def check_asymptotics(threshold: float = 0.02) -> list[CheckResult]:
    trend = coherence_trend()
    decreasing = all(all(b <= a for a, b in zip(v, v[1:])) for v in trend.values())
    last = max(v[-1] for v in trend.values())
    ent = {n: entanglement_complementarity(n) for n in (10, 11, 12, 13)}
    return [
        CheckResult("coherence_complementarity_trend", False, decreasing and last < 0.01, last, 0.01,
                    {"residual at n1=n2=4^e, e=2..10": trend}),
        CheckResult("entanglement_complementarity", False, ent[13] <= threshold, ent[13], threshold,
                    {f"n={n}": v for n, v in ent.items()}),
    ]


def run_validation(oracle: str = "tail", tol: float = 1e-8) -> list[CheckResult]:
    """Run every check in order; ``oracle`` swaps the arc-space oracle for self-tests."""
    steps = [
        check_unitarity,
        lambda: check_oracle_agreement(oracle),
        check_subspace_operator,
        check_wootters,
        check_multipartite,
        lambda: check_pairwise_sum(tol),
        check_noise,
        check_asymptotics,
    ]
    results = []
    for step in steps:
        start = time.perf_counter()
        out = step()
        elapsed = time.perf_counter() - start
        out = out if isinstance(out, list) else [out]
        for r in out:
            r.seconds = elapsed / len(out)
        results.extend(out)
    return results


def all_hard_passed(results: list[CheckResult]) -> bool:
    return all(r.passed for r in results if r.hard)


def _detail_lines(detail: dict, indent: str = "       ") -> list[str]:
    lines = []
    for key, value in detail.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_detail_lines(value, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {value}")
    return lines


def format_text(results: list[CheckResult], verbose: bool = False) -> str:
    lines = []
    for r in results:
        kind = "hard" if r.hard else "soft"
        lines.append(f"[{r.status}] {r.name:<34} {kind}  measured={r.measured:.3e}  threshold={r.threshold:.1e}")
        if verbose or not r.passed or r.name == "pairwise_sum_argmin":
            lines.extend(_detail_lines(r.detail))
    lines.append(f"overall: {'PASS' if all_hard_passed(results) else 'FAIL'}")
    return "\n".join(lines) + "\n"


def format_json(results: list[CheckResult]) -> str:
    payload = {
        "passed": all_hard_passed(results),
        "checks": [dict(asdict(r), status=r.status) for r in results],
    }
    return json.dumps(payload, indent=2, sort_keys=True, default=float) + "\n"
