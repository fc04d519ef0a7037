"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Prints one row per kernel with the best-of-N wall time for each backend and
the speed-up. Results from both backends are also compared for agreement.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from trabound import _kernels_py

try:
    from trabound import _kernels as _kernels_c
except ImportError:  # pragma: no cover - depends on the build
    _kernels_c = None


def _cases(rng: np.random.Generator) -> dict:
    n = 60
    d = rng.normal(size=n)
    e = rng.normal(size=n - 1)
    m = 200
    r = rng.normal(size=m)
    s = -np.abs(rng.normal(size=m - 1)) - 0.1
    t = -np.abs(rng.normal(size=m - 1)) - 0.1
    x = np.linspace(1e-3, 30.0, 200_001)
    h = x[1] - x[0]
    q = 2.0 * (-1.0 / x + 0.3)
    g = 12.0 / (1.0 - h * h * q / 12.0) - 10.0
    return {
        "sturm_count (n=60)": lambda k: k.sturm_count(d.tolist(), (e * e).tolist(), 0.1),
        "tridiag_eigvalsh (n=60)": lambda k: k.tridiag_eigvalsh(d.tolist(), e.tolist()),
        "tridiag_eigval_index (n=60)": lambda k: k.tridiag_eigval_index(d.tolist(), e.tolist(), 7),
        "recursion_scaled (n=200)": lambda k: k.recursion_scaled(r.tolist(), s.tolist(), t.tolist(), 0.3),
        "numerov_count (2e5 pts)": lambda k: k.numerov_count(g, 1, 0.0, 1.0),
        "numerov_fill (2e5 pts)": lambda k: k.numerov_fill(g, 1, 0.0, 1.0),
    }


def _agree(a, b) -> bool:
    if isinstance(a, tuple):
        return all(_agree(x, y) for x, y in zip(a, b))
    return bool(np.allclose(np.asarray(a, dtype=float), np.asarray(b, dtype=float), rtol=1e-12, atol=0.0))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    cases = _cases(np.random.default_rng(args.seed))
    print(f"{'kernel':30s} {'python [ms]':>12s} {'cython [ms]':>12s} {'speed-up':>9s}  agree")
    for name, fn in cases.items():
        t_py = min(timeit.repeat(lambda: fn(_kernels_py), number=1, repeat=args.repeat))
        if _kernels_c is None:
            print(f"{name:30s} {t_py * 1e3:12.3f} {'n/a':>12s} {'':>9s}")
            continue
        t_c = min(timeit.repeat(lambda: fn(_kernels_c), number=1, repeat=args.repeat))
        same = _agree(fn(_kernels_py), fn(_kernels_c))
        print(f"{name:30s} {t_py * 1e3:12.3f} {t_c * 1e3:12.3f} {t_py / t_c:8.1f}x  {same}")


if __name__ == "__main__":
    main()
