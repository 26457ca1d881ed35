#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernels on engine workloads.

Runs the same exact computations twice, once per backend (selected through
the WREATHDUNKL_PURE environment variable in a subprocess), and prints the
wall-clock ratio.  Workloads mirror the hot paths: sparse polynomial
products over a cyclotomic field, and a full Dunkl-commutator zero check.
"""

import json
import os
import subprocess
import sys
import textwrap

WORKLOAD = textwrap.dedent(
    """
    import json, time
    from fractions import Fraction
    from wreathdunkl import _kernels
    from wreathdunkl.cyclotomic import CycloScalar
    from wreathdunkl.polyalg import LaurentPoly
    from wreathdunkl.dunkl import ModelParams, build_dunkl, build_charge
    from wreathdunkl.opalg import op_commutator

    results = {"backend": _kernels.BACKEND_NAME}

    # dense-ish bivariate products over Q(zeta_12)
    z = CycloScalar.root_of_unity(12)
    p = LaurentPoly.zero(2, 12)
    for a in range(6):
        for b in range(6):
            p = p + LaurentPoly.monomial(2, (a, b), z ** ((a + b) % 12) * Fraction(1, a + b + 1), 12)
    t0 = time.perf_counter()
    acc = p
    for _ in range(6):
        acc = acc * p
    results["poly_products_s"] = time.perf_counter() - t0

    # commutator of two dihedral Dunkl operators, exact zero test
    params = ModelParams("dihedral", 2, 3, Fraction(1), Fraction(1), Fraction(1, 2))
    t0 = time.perf_counter()
    c = op_commutator(build_dunkl(params, 1), build_dunkl(params, 2))
    assert c.is_zero()
    results["dunkl_commutator_s"] = time.perf_counter() - t0

    # quadratic charge of the odd dihedral model
    t0 = time.perf_counter()
    build_charge(params, 2)
    results["charge_s"] = time.perf_counter() - t0

    print(json.dumps(results))
    """
)


def run(pure: bool) -> dict:
    env = dict(os.environ)
    env["WREATHDUNKL_PURE"] = "1" if pure else "0"
    out = subprocess.run(
        [sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True
    )
    if out.returncode != 0:
        raise RuntimeError(out.stderr)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    compiled = run(pure=False)
    pure = run(pure=True)
    print(f"{'workload':<22}{compiled['backend']:>12}{pure['backend']:>12}{'speedup':>10}")
    for key in ("poly_products_s", "dunkl_commutator_s", "charge_s"):
        c, p = compiled[key], pure[key]
        print(f"{key:<22}{c:>11.3f}s{p:>11.3f}s{p / c:>9.2f}x")
    if compiled["backend"] == pure["backend"]:
        print("note: extension not built, both runs used the pure backend")


if __name__ == "__main__":
    main()
