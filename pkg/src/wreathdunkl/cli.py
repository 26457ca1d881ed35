"""Command-line front end: verification suites, lattices, spectra, exports.

Exit codes form a stable contract: 0 when every check passes, 1 when a
mathematical identity fails, 2 on configuration errors.  Reports are JSON
with the seed, the configuration and the engine version embedded, so runs
are reproducible byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from .dunkl import (
    ModelParams,
    build_charge,
    build_dunkl,
    build_hamiltonian,
    build_reflection_dunkl,
    build_symmetric_dunkl,
    charge_commutation_check,
    check_hecke_relations,
    check_recursion,
    hamiltonian_check,
    hamiltonian_x_display,
    reduction_check,
    rotation_average_check,
)
from .groups import GroupSpec, corrupted_compose, enumerate_subgroup, relation_suite
from .reports import CheckSuite
from .spinrep import (
    SpinRepData,
    brute_force_eigvals,
    build_projector,
    char_poly_exact,
    charpoly_residual,
    diagonalize_hermitian,
    frozen_spin_matrix,
    global_rotation_element,
    projector_check,
    spin_matrix_of_element,
    spin_representation_check,
    substitute_spin,
    twisted_translation_element,
    verify_agreement,
)
from .static import (
    LATTICE_LABELS,
    build_frozen_hamiltonian,
    build_lattice,
    build_static_hamiltonian,
    equidistant_lattice,
    freezing_identity_check,
    lattice_table_check,
    merge_chain_terms,
    scan_equidistant,
    static_display_check,
)


class ConfigError(ValueError):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"not a rational number: {text!r}") from exc


def _write_report(report: dict, path: str | None):
    text = json.dumps(report, indent=2, default=str)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _params_from_args(args) -> ModelParams:
    return ModelParams(
        args.family,
        args.N,
        args.m,
        _fraction(args.lam),
        _fraction(args.mu),
        _fraction(args.rho),
    )


# -- verify ---------------------------------------------------------------------


def _group_suite(spec: GroupSpec, corrupt: str | None) -> CheckSuite:
    compose_fn = corrupted_compose if corrupt == "braid" else None
    rep = relation_suite(spec, compose_fn) if compose_fn else relation_suite(spec)
    suite = CheckSuite(f"group-relations[{spec.family} N={spec.size} m={spec.order}]")
    for c in rep.checks:
        suite.add(c.name, c.indices, c.passed, c.witness)
    els = enumerate_subgroup(spec, cap=10**6)
    suite.add(
        "enumerated order equals the family cardinality",
        {"family": spec.family, "N": spec.size, "m": spec.order, "p": spec.p},
        len(els) == spec.cardinality(),
    )
    return suite


def _verify_case(params: ModelParams, args, corrupt: str | None) -> CheckSuite:
    suite = CheckSuite(f"verify[{params.family} N={params.size} m={params.order}]")
    suite.extend(_group_suite(params.group_spec, corrupt))
    suite.extend(check_hecke_relations(params, corrupt=corrupt))
    suite.extend(check_recursion(params, corrupt=corrupt == "recursion"))
    suite.extend(rotation_average_check(params))
    suite.extend(reduction_check(params))
    suite.extend(hamiltonian_check(params))
    suite.extend(charge_commutation_check(params, kmax=args.kmax))
    if params.family == "cyclic":
        suite.extend(freezing_identity_check(params))
    suite.extend(static_display_check(params))
    if args.n:
        rep = SpinRepData(args.n, params.order, params.size)
        suite.extend(spin_representation_check(rep, seed=args.seed))
        suite.extend(projector_check(params, rep))
        ks = (1, 2) if params.family == "cyclic" else (2,)
        for k in ks:
            suite.extend(verify_agreement(params, rep, k))
    return suite


DEFAULT_GRID = {
    "cyclic": {
        "cases": [(2, 2), (2, 3), (3, 2)],
        "couplings": [("0", "0", "0"), ("1", "0", "0"), ("1/2", "0", "0")],
    },
    "dihedral": {
        "cases": [(2, 2), (2, 3)],
        "couplings": [
            ("0", "0", "0"),
            ("1", "1", "0"),
            ("1/2", "1", "1/2"),
        ],
    },
}


def cmd_verify(args) -> int:
    corrupt = args.corrupt
    if corrupt and corrupt not in ("drels", "recursion", "braid"):
        raise ConfigError(f"unknown corruption target {corrupt!r}")
    suite = CheckSuite("verify")
    if args.family:
        params = _params_from_args(args)
        suite.extend(_verify_case(params, args, corrupt))
    else:
        for family, grid in DEFAULT_GRID.items():
            for (N, m) in grid["cases"]:
                for (lam, mu, rho) in grid["couplings"]:
                    params = ModelParams(
                        family, N, m, _fraction(lam), _fraction(mu), _fraction(rho)
                    )
                    case_args = argparse.Namespace(
                        n=None, kmax=args.kmax, seed=args.seed
                    )
                    suite.extend(_verify_case(params, case_args, corrupt))
        rep = SpinRepData(2, 2, 2)
        cyc = ModelParams("cyclic", 2, 2, Fraction(1, 2))
        dih = ModelParams("dihedral", 2, 2, Fraction(1), Fraction(1), Fraction(1, 2))
        suite.extend(spin_representation_check(rep, seed=args.seed))
        suite.extend(projector_check(cyc, rep))
        suite.extend(projector_check(dih, rep))
        for k in (1, 2, 3):
            suite.extend(verify_agreement(cyc, rep, k))
        suite.extend(verify_agreement(dih, rep, 2))
    report = {
        "command": "verify",
        "version": __version__,
        "seed": args.seed,
        "config": vars(args),
        "pass": suite.passed,
        "suite": [i.to_json() for i in suite.items],
    }
    _write_report(report, args.output)
    return 0 if suite.passed else 1


# -- lattice ---------------------------------------------------------------------


def cmd_lattice(args) -> int:
    report = {
        "command": "lattice",
        "version": __version__,
        "seed": args.seed,
        "config": vars(args),
    }
    if args.scan:
        lmax = args.Lmax or 40
        lo = max(2, args.m)
        records = scan_equidistant(args.family, args.N, args.m, range(lo, lmax + 1))
        report["scan"] = records[:50]
        report["min_residual"] = records[0]["residual"] if records else None
        report["pass"] = True
        _write_report(report, args.output)
        return 0
    if args.family == "dihedral-even":
        raise ConfigError(
            "no exact lattice rows exist for even m; run with --scan instead"
        )
    label = args.label or "auto"
    lat = build_lattice(args.family, args.N, args.m, label)
    report["lattice"] = lat.to_json()
    rmax = lat.residual_max()
    passed = rmax == "0"
    report["pass"] = passed
    _write_report(report, args.output)
    return 0 if passed else 1


# -- spectrum ---------------------------------------------------------------------


def _chain_for(args):
    if args.family == "cyclic":
        lat = build_lattice("cyclic", args.N, args.m)
    elif args.family == "dihedral-odd":
        lat = build_lattice("dihedral-odd", args.N, args.m, args.label or "L2Nm")
    elif args.family == "dihedral-even":
        if not args.L:
            raise ConfigError("dihedral-even chains need --L (numeric lattice)")
        lat = equidistant_lattice(
            "dihedral-even", args.N, args.m, args.L,
            couplings={"mu2": _fraction(args.mu2 or "1/4")},
        )
    else:
        raise ConfigError(f"unknown chain family {args.family!r}")
    return build_frozen_hamiltonian(lat)


def cmd_spectrum(args) -> int:
    dim = args.n**args.N
    if dim > 4096:
        raise ConfigError(f"spin space dimension {dim} exceeds the dense cap 4096")
    frozen = _chain_for(args)
    rep = SpinRepData(args.n, args.m, args.N)
    terms = merge_chain_terms(frozen.terms)
    backend = args.backend
    if backend == "exact" and dim > 64:
        backend = "numeric"
    if backend == "exact" and frozen.lattice.exact:
        Hx = frozen_spin_matrix(rep, terms, "exact")
        H = Hx.to_numpy()
    else:
        Hx = None
        H = frozen_spin_matrix(rep, terms, "numeric")
    herm = float(np.max(np.abs(H - H.conj().T)))
    if herm > 1e-10:
        raise ArithmeticError(f"frozen chain is not Hermitian: residual {herm}")
    vals, degs = diagonalize_hermitian(H)
    oracle = brute_force_eigvals(H) if dim <= 64 else None
    report = {
        "command": "spectrum",
        "version": __version__,
        "seed": args.seed,
        "config": vars(args),
        "params": {"family": args.family, "N": args.N, "m": args.m, "n": args.n},
        "lattice": frozen.lattice.to_json(),
        "hermiticity_residual": herm,
        "eigenvalues": [float(v) for v in vals],
        "degeneracies": [{"value": v, "multiplicity": k} for v, k in degs],
        "warning": frozen.warning,
    }
    checks = {}
    if oracle is not None:
        checks["oracle_max_deviation"] = float(np.max(np.abs(vals - oracle)))
    if Hx is not None and dim <= 16:
        checks["charpoly_residual"] = charpoly_residual(char_poly_exact(Hx), vals)
    if args.family == "cyclic":
        U = spin_matrix_of_element(
            rep, twisted_translation_element(args.N, args.m)
        ).to_numpy()
        R = spin_matrix_of_element(
            rep, global_rotation_element(args.N, args.m)
        ).to_numpy()
        checks["commutant"] = {
            "twisted_translation": float(np.max(np.abs(H @ U - U @ H))),
            "global_rotation": float(np.max(np.abs(H @ R - R @ H))),
        }
    else:
        comms = {}
        for name, g in _dihedral_symmetry_candidates(args.N, args.m).items():
            M = spin_matrix_of_element(rep, g).to_numpy()
            comms[name] = float(np.max(np.abs(H @ M - M @ H)))
        checks["commutant_report"] = comms
    report["checks"] = checks
    if args.x_display:
        report["coupling_display"] = _sin2_display(frozen)
    passed = True
    if "oracle_max_deviation" in checks:
        passed = passed and checks["oracle_max_deviation"] < 1e-8
    if args.family == "cyclic":
        passed = passed and all(v < 1e-10 for v in checks["commutant"].values())
    report["pass"] = passed
    _write_report(report, args.output)
    return 0 if passed else 1


def _dihedral_symmetry_candidates(N: int, m: int) -> dict:
    from .dunkl import boundary_element, exchange_element

    out = {"global_rotation": global_rotation_element(N, m)}
    out["exchange_P12"] = exchange_element(N, m, 1, 2, 0)
    out["reflection_K1"] = boundary_element(N, m, 1, 0)
    return out


def _sin2_display(frozen) -> list:
    """Couplings in inverse-square-sine form (rendering only)."""
    out = []
    for c, g in merge_chain_terms(frozen.terms):
        value = c.to_complex() if hasattr(c, "to_complex") else complex(c)
        entry = {"group": g.to_json(), "coupling": [value.real, value.imag]}
        entry["minus_quarter_inv_sin2"] = -4.0 * value.real
        out.append(entry)
    return out


# -- export ---------------------------------------------------------------------


def cmd_export(args) -> int:
    name = args.object
    params = _params_from_args(args) if args.family else None
    payload: dict
    if name.startswith("d") and name[1:].isdigit():
        op = build_dunkl(params, int(name[1:]))
        payload = {"operator": op.to_json()}
    elif name.startswith("Z") and name[1:].isdigit():
        op = build_symmetric_dunkl(params, int(name[1:]))
        payload = {"operator": op.to_json()}
    elif name.startswith("Y") and name[1:].isdigit():
        op = build_reflection_dunkl(params, int(name[1:]))
        payload = {"operator": op.to_json()}
    elif name.startswith("DD") and name[2:].isdigit():
        op = build_dunkl(params, int(name[2:]), form="image")
        payload = {"operator": op.to_json()}
    elif name.startswith("I") and name[1:].isdigit():
        payload = {"operator": build_charge(params, int(name[1:])).to_json()}
    elif name.startswith("J") and name[1:].isdigit():
        payload = {"operator": build_charge(params, int(name[1:])).to_json()}
    elif name == "H":
        payload = {"operator": build_hamiltonian(params).to_json()}
    elif name == "H_xdisplay":
        payload = {"display": hamiltonian_x_display(params)}
    elif name == "Hbar":
        payload = {"operator": build_static_hamiltonian(params).to_json()}
    elif name in ("Lambda", "Lambda_b"):
        if not args.n:
            raise ConfigError(f"{name} needs --n (local spin dimension)")
        rep = SpinRepData(args.n, args.m, args.N)
        which = "exchange" if name == "Lambda" else "boundary"
        fam = "cyclic" if name == "Lambda" else "dihedral"
        p = params or ModelParams(fam, args.N, args.m)
        payload = {"operator": build_projector(p, rep, which).to_json()}
    elif name == "Hbar_spin":
        if not args.n:
            raise ConfigError("Hbar_spin needs --n")
        rep = SpinRepData(args.n, args.m, args.N)
        lat = build_lattice("cyclic", args.N, args.m)
        frozen = build_frozen_hamiltonian(lat)
        M = frozen_spin_matrix(rep, merge_chain_terms(frozen.terms), "exact")
        payload = {
            "lattice": lat.to_json(),
            "matrix": M.entries_json(),
        }
    elif name == "qk_lattice":
        lat = build_lattice("cyclic", args.N, args.m)
        payload = {"lattice": lat.to_json()}
    else:
        raise ConfigError(f"unknown export object {name!r}")
    report = {
        "command": "export",
        "version": __version__,
        "seed": args.seed,
        "config": vars(args),
        "object": name,
        **payload,
    }
    _write_report(report, args.output)
    return 0


# -- argument parsing ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="wreathdunkl",
        description=(
            "Exact verification engine for rotation- and reflection-image "
            "Sutherland models: wreath groups, Dunkl operators, commuting "
            "charges, physical-state projectors and frozen spin chains."
        ),
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, family_choices=("cyclic", "dihedral")):
        p.add_argument("--family", choices=family_choices, default=None)
        p.add_argument("--N", type=int, default=2)
        p.add_argument("--m", type=int, default=2)
        p.add_argument("--lambda", dest="lam", default="1")
        p.add_argument("--mu", default="0")
        p.add_argument("--rho", default="0")
        p.add_argument("--n", type=int, default=None, help="local spin dimension")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--output", default=None, help="write the JSON report here")

    pv = sub.add_parser("verify", help="run the exact identity suites")
    common(pv)
    pv.add_argument("--kmax", type=int, default=2, help="highest charge checked")
    pv.add_argument("--corrupt", default=None, help="negative control: drels|recursion|braid")
    pv.set_defaults(fn=cmd_verify)

    pl = sub.add_parser("lattice", help="check or scan frozen-site configurations")
    common(pl, family_choices=("cyclic", "dihedral-odd", "dihedral-even"))
    pl.add_argument("--label", choices=LATTICE_LABELS, default=None)
    pl.add_argument("--scan", action="store_true")
    pl.add_argument("--Lmax", type=int, default=None)
    pl.set_defaults(fn=cmd_lattice)

    ps = sub.add_parser("spectrum", help="diagonalize a frozen spin chain")
    common(ps, family_choices=("cyclic", "dihedral-odd", "dihedral-even"))
    ps.add_argument("--label", choices=LATTICE_LABELS, default=None)
    ps.add_argument("--L", type=int, default=None)
    ps.add_argument("--mu2", default=None)
    ps.add_argument("--backend", choices=("exact", "numeric"), default="exact")
    ps.add_argument("--x-display", dest="x_display", action="store_true")
    ps.set_defaults(fn=cmd_spectrum)

    pe = sub.add_parser("export", help="dump named operators and lattices as JSON")
    common(pe)
    pe.add_argument("--object", required=True)
    pe.set_defaults(fn=cmd_export)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "spectrum" and args.n is None:
        args.n = 2
    if args.command == "spectrum" and args.family is None:
        args.family = "cyclic"
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
