"""Exit criteria, one test per criterion; each prints a PASS/FAIL line."""

import math
import time
from pathlib import Path

import numpy as np
import pytest

from qwsearch import closedform, fullsim, make_instance, normalized_coherence, resources, validate
from qwsearch.cli import main
from qwsearch.noise import NoiseConfig, noisy_evolution, noisy_success_probability, noisy_coherence
from qwsearch.series import ResourceSeries, extremal_set, extrema_coincide

from .conftest import ACCEPTANCE_LINES

GOLDEN = Path(__file__).parent / "golden" / "mc_n4_odd.csv"


def report(number: int, title: str, parts: dict[str, bool], note: str = "") -> bool:
    ok = all(parts.values())
    failed = [name for name, passed in parts.items() if not passed]
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}"
    if failed:
        line += f" -- failing: {', '.join(failed)}"
    if note:
        line += f" ({note})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def test_criterion_1_oracle_agreement():
    start = time.perf_counter()
    checks = {r.name: r for r in validate.check_oracle_agreement(sizes=(2, 4, 8, 16), t_max=60)}
    elapsed = time.perf_counter() - start
    overlap = checks["closed_vs_full"]
    residual = checks["subspace_invariance"]
    ok = report(1, "closed form vs full arc-space evolution", {
        "overlap >= 1-1e-8": 1 - overlap.measured >= 1 - 1e-8,
        "residual < 1e-10": residual.measured < 1e-10,
        "runtime < 60 s": elapsed < 60,
    }, f"max 1-overlap {overlap.measured:.2e}, max residual {residual.measured:.2e}, {elapsed:.1f} s")
    assert ok


def _even_series(inst, t_max):
    steps = list(range(0, t_max + 1, 2))
    p = [closedform.success_probability(inst, t) for t in steps]
    c = [normalized_coherence(closedform.coherence_at(inst, t)) for t in steps]
    return steps, p, c


def test_criterion_2_k44():
    inst = make_instance(4, 4, 1, "s")
    steps, p, c = _even_series(inst, 30)
    argmax_p = extremal_set(steps, p, "max")
    total = [a + b for a, b in zip(p, c)]
    ok = report(2, "K_{4,4} success probability and normalized coherence", {
        "P(2) = 0.5": abs(closedform.success_probability(inst, 2) - 0.5) <= 1e-10,
        "peak 0.5 at argmax": argmax_p[0] == 2 and abs(max(p) - 0.5) <= 1e-10,
        "period 6": all(abs(closedform.success_probability(inst, t) - closedform.success_probability(inst, t + 6)) <= 1e-10
                        for t in range(0, 31, 2)),
        "argmax P = argmin C_norm": extrema_coincide(steps, p, c),
        "P + C_norm in [0.9, 1.2]": all(0.9 <= s <= 1.2 for s in total),
    }, f"P + C_norm ranges over [{min(total):.4f}, {max(total):.4f}]")
    assert ok


def test_criterion_3_extrema_alignment():
    parts = {}
    notes = []
    for k in (6, 13):
        steps, p, c = _even_series(make_instance(16, 16, k, "s"), 60)
        parts[f"k={k} argmax P = argmin C_norm"] = extrema_coincide(steps, p, c)
        notes.append(f"k={k}: argmax P {extremal_set(steps, p, 'max')}, argmin C_norm {extremal_set(steps, c, 'min')}")
    assert report(3, "K_{16,16} extrema alignment", parts, "; ".join(notes))


def test_criterion_4_pairwise_sum():
    parts = {}
    gaps = []
    for n in (3, 4):
        comp = validate.pairwise_sum_comparison(n, t_max=40)
        for parity, d in comp.items():
            parts[f"n={n} {parity} argmin coincide"] = validate.minimizers_coincide(d["steps"], d["brute"], d["closed"])
            agrees = d["max_gap"] <= 1e-8
            gaps.append(d["max_gap"])
            # documented discrepancy: the per-pair diagnostic must be present
            parts[f"n={n} {parity} agreement or diagnostic"] = agrees or bool(d["worst"]["pairs"])
    assert report(4, "closed-form pairwise concurrence sum vs brute force", parts,
                  f"max |brute - closed| = {max(gaps):.3f}; brute force taken as ground truth")


def test_criterion_5_entanglement_complementarity():
    start = time.perf_counter()
    worst = validate.entanglement_complementarity(13)
    elapsed = time.perf_counter() - start
    assert report(5, "P + sC ~ 1/2 at n = 13", {
        "max deviation <= 0.02": worst <= 0.02,
        "runtime < 1 s": elapsed < 1,
    }, f"max |P + sC - 1/2| = {worst:.4f}")


def test_criterion_6_noise():
    inst = make_instance(4, 4, 1, "s")
    walk = fullsim.extract_subspace_operator(inst)
    q_err = c_err = 0.0
    for alpha in (0.0, 0.25, 0.5, 0.9, 1.0):
        cfg = NoiseConfig(alpha)
        for t, rho in enumerate(noisy_evolution(inst, cfg, 200, walk)):
            p_t = closedform.success_probability(inst, t)
            q_err = max(q_err, abs(rho[0, 0].real - ((1 - alpha**t) / 4 + alpha**t * p_t)))
            c_err = max(c_err, abs(resources.l1_coherence(rho) - alpha**t * closedform.coherence_at(inst, t)))
            assert noisy_success_probability(inst, cfg, t) == pytest.approx(rho[0, 0].real, abs=1e-12)
            assert noisy_coherence(inst, cfg, t) == pytest.approx(resources.l1_coherence(rho), abs=1e-10)
    rhos = noisy_evolution(inst, NoiseConfig(0.5), 60, walk)
    settle = max(abs(rhos[t][0, 0].real - 0.25) for t in range(50, 61))
    fade = resources.l1_coherence(rhos[20])
    assert report(6, "depolarizing-noise laws", {
        "Q law to 1e-12": q_err <= 1e-12,
        "coherence law to 1e-10": c_err <= 1e-10,
        "|Q - 1/4| < 1e-3 on [50, 60]": settle < 1e-3,
        "C_noisy(20) < 1e-5": fade < 1e-5,
    }, f"Q err {q_err:.1e}, C err {c_err:.1e}")


def test_criterion_7_measures():
    bell = np.array([1, 0, 0, 1]) / math.sqrt(2)
    rng = np.random.default_rng(2024)
    products = []
    for _ in range(50):
        a = rng.normal(size=2) + 1j * rng.normal(size=2)
        b = rng.normal(size=2) + 1j * rng.normal(size=2)
        v = np.kron(a / np.linalg.norm(a), b / np.linalg.norm(b))
        products.append(v)
    iso = max(
        abs(resources.wootters_concurrence(p * np.outer(bell, bell) + (1 - p) * np.eye(4) / 4) - max(0, (3 * p - 1) / 2))
        for p in np.linspace(0, 1, 101)
    )
    ghz = np.zeros(8)
    ghz[[0, 7]] = 1 / math.sqrt(2)
    coh = 0.0
    for _ in range(10_000):
        d = int(rng.integers(2, 17))
        v = rng.normal(size=d) + 1j * rng.normal(size=d)
        v /= np.linalg.norm(v)
        coh = max(coh, abs(resources.l1_coherence(np.outer(v, v.conj())) - (np.abs(v).sum() ** 2 - 1)))
    assert report(7, "measure correctness", {
        "Wootters Bell = 1": abs(resources.wootters_concurrence(np.outer(bell, bell)) - 1) <= 1e-8,
        "Wootters products = 0": all(resources.wootters_concurrence(np.outer(v, v.conj())) <= 1e-8 for v in products),
        "Wootters isotropic": iso <= 1e-8,
        "MC products = 0": all(resources.multipartite_concurrence(v) <= 1e-10 for v in products),
        "MC Bell = 1": abs(resources.multipartite_concurrence(bell) - 1) <= 1e-10,
        "MC GHZ3": abs(resources.multipartite_concurrence(ghz) - 2 * math.sqrt(3 / 8)) <= 1e-10,
        "pure l1 coherence on 1e4 states": coh <= 1e-10,
    }, f"isotropic err {iso:.1e}, coherence err {coh:.1e}")


def test_criterion_8_mc_golden(tmp_path, capsys):
    start = time.perf_counter()
    out = tmp_path / "mc.csv"
    code = main(["entangle", "--n-qubits", "4", "--parity", "odd", "--steps", "60", "--out", str(out)])
    elapsed = time.perf_counter() - start
    series = ResourceSeries.read(out)
    mc = series.column("MC")
    assert report(8, "n=4 multipartite concurrence, golden CSV", {
        "exit 0": code == 0,
        "odd t <= 60": series.column("t") == list(range(1, 61, 2)),
        "MC in [0, 2]": all(v is not None and 0 <= v <= 2 for v in mc),
        "byte-identical to golden": out.read_bytes() == GOLDEN.read_bytes(),
        "runtime < 120 s": elapsed < 120,
    }, f"{elapsed:.2f} s")
