"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Part one times the term-level kernel calls directly on both modules.  Part
two runs a whole workload (symbolic jet checks) once per backend, in a
subprocess so that ``WEILJET_PURE`` takes effect at import.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit
from fractions import Fraction

from weiljet import _pykernel

try:
    from weiljet import _ckernel
except ImportError:
    _ckernel = None

WORKLOAD = """
import time
from weiljet.kernel import BACKEND
from weiljet.identities import run_suites
from weiljet.jets import SECOND, SectionJet, check_second_tangential, from_section_jet, psi
start = time.perf_counter()
for m, e in [(1, 1), (2, 1), (1, 2), (2, 2)]:
    c = from_section_jet(SectionJet.symbolic(m, e, 3), SECOND, 3)
    check_second_tangential(c)
    psi(c)
run_suites(None, 4)
print(BACKEND, time.perf_counter() - start)
"""


def dense(nvars: int, degree: int, seed: int) -> dict:
    """All monomials of total degree <= ``degree`` with small rational coefficients."""
    terms = {(): 1}
    frontier = [()]
    for _ in range(degree):
        nxt = []
        for mo in frontier:
            for v in range(nvars):
                exps = dict(mo)
                exps[v] = exps.get(v, 0) + 1
                new = tuple(sorted(exps.items()))
                if new not in terms:
                    terms[new] = Fraction((len(terms) * seed) % 7 + 1, (len(terms) % 3) + 1)
                    nxt.append(new)
        frontier = nxt
    return terms


def kernel_cases():
    a, b = dense(3, 4, 3), dense(3, 4, 5)
    cube_gens = tuple(((v, 2),) for v in range(3))
    return [
        ("mul_terms, 3 vars, degree 4 x 4", lambda k: k.mul_terms(a, b)),
        ("mul_terms truncated by X_i^2", lambda k: k.mul_terms(a, b, cube_gens)),
        ("add_terms", lambda k: k.add_terms(a, b, 3)),
        ("reduce_terms by X_i^2", lambda k: k.reduce_terms(a, cube_gens)),
    ]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=200)
    args = parser.parse_args(argv)

    cases = kernel_cases()
    print(f"{'kernel call':36} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for label, call in cases:
        py = timeit.timeit(lambda: call(_pykernel), number=args.repeat) / args.repeat * 1e3
        if _ckernel is None:
            print(f"{label:36} {py:10.3f} {'n/a':>10}")
            continue
        assert call(_ckernel) == call(_pykernel)
        cy = timeit.timeit(lambda: call(_ckernel), number=args.repeat) / args.repeat * 1e3
        print(f"{label:36} {py:10.3f} {cy:10.3f} {py / cy:7.2f}x")

    print()
    print("workload: jet checks and psi at n=3, identity suites at n=4")
    for pure in ("1", "0"):
        env = dict(os.environ, WEILJET_PURE=pure)
        out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True,
                             text=True, check=True).stdout.split()
        print(f"  {out[0]:8} {float(out[1]):.3f} s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
