"""Regenerate the data and SVG charts for the standard parameter sets.

    python scripts/reproduce_series.py [outdir]

Each set gets a CSV (via the qwsearch CLI) and one or more SVG charts.
"""

import sys
from pathlib import Path

from qwsearch.cli import main

SERIES = [
    ("k44_even", ["evolve", "--n1", "4", "--n2", "4", "--k", "1", "--parity", "even", "--steps", "30"], ["P,C_norm"]),
    ("k44_odd", ["evolve", "--n1", "4", "--n2", "4", "--k", "1", "--parity", "odd", "--steps", "30"], ["P,C_norm"]),
    ("k16_marked6", ["evolve", "--n1", "16", "--n2", "16", "--k", "6", "--parity", "even", "--steps", "60"], ["P,C_norm"]),
    ("k16_marked13", ["evolve", "--n1", "16", "--n2", "16", "--k", "13", "--parity", "even", "--steps", "60"], ["P,C_norm"]),
    ("entangle_n10_even", ["entangle", "--n-qubits", "10", "--parity", "even", "--steps", "100"], ["P,sC_closed"]),
    ("entangle_n10_odd", ["entangle", "--n-qubits", "10", "--parity", "odd", "--steps", "100"], ["P,sC_closed"]),
    ("entangle_n13_even", ["entangle", "--n-qubits", "13", "--parity", "even", "--steps", "100"], ["P,sC_closed"]),
    ("entangle_n13_odd", ["entangle", "--n-qubits", "13", "--parity", "odd", "--steps", "100"], ["P,sC_closed"]),
    ("mc_n4_odd", ["entangle", "--n-qubits", "4", "--parity", "odd", "--steps", "60"], ["P,MC", "sC_closed,sC_brute"]),
    ("noise_k44", ["noise", "--n1", "4", "--n2", "4", "--k", "1", "--alpha", "0.5", "--parity", "even", "--steps", "30"],
     ["P,Q_noisy", "C_l1,C_l1_noisy"]),
]


def run(outdir: Path) -> int:
    outdir.mkdir(parents=True, exist_ok=True)
    for name, argv, charts in SERIES:
        csv_path = outdir / f"{name}.csv"
        code = main(argv + ["--out", str(csv_path)])
        if code:
            return code
        for i, columns in enumerate(charts):
            svg_path = outdir / (f"{name}.svg" if i == 0 else f"{name}_{i}.svg")
            code = main(["plot", str(csv_path), "--columns", columns, "--title", name, "--out", str(svg_path)])
            if code:
                return code
        print(f"wrote {csv_path.name} + {len(charts)} chart(s)")
    return 0


if __name__ == "__main__":
    sys.exit(run(Path(sys.argv[1] if len(sys.argv) > 1 else "out")))
