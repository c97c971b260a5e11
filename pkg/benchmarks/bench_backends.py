"""Wall-clock comparison of the numba and numpy kernel backends.

Runs each hot kernel on large arrays, then the full quadrature oracle sweep
(7 parameter sets x 64 frequencies), once per backend.  JIT compilation is
triggered before timing.  Without numba only the numpy rows are printed.

    python benchmarks/bench_backends.py [--repeat 5]
"""
import argparse
import statistics
import time

import numpy as np

from genlogistic import _kernels
from genlogistic.model import SigmoidParams
from genlogistic.quadrature import fourier_numeric


def timed(fn, repeat):
    fn()
    samples = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return statistics.mean(samples), statistics.pstdev(samples)


def workloads():
    rng = np.random.default_rng(0)
    z = rng.uniform(-20, 20, 1_000_000) + 1j * rng.uniform(-100, 100, 1_000_000)
    t = np.linspace(-200, 200, 2_000_000)
    s = np.linspace(-40, 40, 2_000_000)
    w = np.linspace(-30, 30, 1_000_000)

    def oracle_sweep():
        for nu in (1, 4, 8, 12, 1 / 4, 1 / 8, 1 / 12):
            p = SigmoidParams(1, 2, nu)
            for omega in np.linspace(-20, 20, 64):
                fourier_numeric(p, omega)

    return {
        "gamma (1e6 complex)": lambda k: k.gamma(z),
        "pulse_fourier (2e6)": lambda k: k.pulse_fourier(t, 1.0, 2.0, 0.25, 3.0),
        "log_u_integrand (2e6)": lambda k: k.log_u_integrand(s, 1.5, 2.0, 4.0, 3.0),
        "closed_form (1e6)": lambda k: k.closed_form(w, 1.0, 2.0, 1 / 12),
        "oracle sweep (448 integrals)": lambda k: oracle_sweep(),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = [_kernels.numpy_kernels]
    if _kernels.numba_kernels is not None:
        backends.append(_kernels.numba_kernels)
    else:
        print("numba not installed; timing the numpy path only")

    saved = _kernels.ACTIVE
    results = {}
    try:
        for name, work in workloads().items():
            for kern in backends:
                _kernels.ACTIVE = kern
                results[name, kern.name] = timed(lambda: work(kern), args.repeat)
    finally:
        _kernels.ACTIVE = saved

    print(f"{'workload':<30} {'backend':<7} {'mean [ms]':>10} {'std [ms]':>9} {'speedup':>8}")
    for name in workloads():
        base = results[name, "numpy"][0]
        for kern in backends:
            mean, std = results[name, kern.name]
            print(f"{name:<30} {kern.name:<7} {mean * 1e3:>10.1f} {std * 1e3:>9.1f} {base / mean:>7.2f}x")


if __name__ == "__main__":
    main()
