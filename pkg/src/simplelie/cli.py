"""Command-line front door.

Subcommands mirror the library modules; output goes to stdout as JSON by
default (sorted keys, byte-stable) with a derived text rendering behind
--format text.  Exit codes: 0 success, 1 validation error or bad usage,
2 when verify-all finds a mismatch against the golden fixtures.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import chevalley as chev
from . import cohomology as coh
from . import kac, numfield, symspace
from .roots import LieError, SimpleType, build_root_system, exponents

GOLDEN_DIR = Path(__file__).parent / "data" / "golden"

RANK8_TYPES = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(3, 9)]
    + [f"D{n}" for n in range(3, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _parse_type(args) -> SimpleType:
    text = args.type
    if len(text) == 1 and text.isalpha():
        if getattr(args, "rank", None) is None:
            raise LieError(f"series {text} needs --rank")
        return SimpleType(text.upper(), args.rank)
    return SimpleType.parse(text)


def _parse_ints(text: str):
    return tuple(int(x) for x in text.split(",") if x.strip() != "")


def _emit(data, fmt: str, text_renderer=None):
    if fmt == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        print(text_renderer(data) if text_renderer else _plain_text(data))


def _plain_text(data, indent=0):
    pad = "  " * indent
    if isinstance(data, dict):
        return "\n".join(
            f"{pad}{key}: " + (
                "\n" + _plain_text(val, indent + 1)
                if isinstance(val, (dict, list))
                else str(val)
            )
            for key, val in data.items()
        )
    if isinstance(data, list):
        return "\n".join(
            _plain_text(item, indent) if isinstance(item, (dict, list)) else f"{pad}{item}"
            for item in data
        )
    return f"{pad}{data}"


# -- subcommand handlers --------------------------------------------------------


def _cmd_roots(args) -> int:
    rs = build_root_system(_parse_type(args))
    data = json.loads(rs.to_json())
    data["exponents"] = list(exponents(rs.stype))
    _emit(data, args.format)
    return 0


def _cmd_chevalley(args) -> int:
    rs = build_root_system(_parse_type(args))
    sc = chev.structure_constants(rs)
    if args.verify:
        report = chev.verify_structure_constants(sc)
        if args.format == "json":
            data = {
                "type": report.stype_name,
                "backend": report.backend,
                "ok": report.ok,
                "checks": {c.name: c.passed for c in report.checks},
            }
            print(json.dumps(data, sort_keys=True))
        else:
            print(report)
        return 0 if report.ok else 1
    print(chev.n_table_json(sc))
    return 0


def _cmd_kac_classify(args) -> int:
    coords = kac.kac_coordinates(_parse_type(args), args.k, _parse_ints(args.s))
    auto = kac.kac_automorphism(coords, _sc(coords.diagram.base))
    levi = kac.fixed_subalgebra(coords)
    dims = kac.eigenspace_dimensions(auto)
    data = {
        "type": coords.diagram.base.name,
        "coords": coords.describe(),
        "order": coords.m,
        "fixed_subalgebra": {
            "center_dim": levi.center_dim,
            "simple_factors": list(levi.factor_names()),
        },
        "eigenspace_dims": {str(t): d for t, d in dims.items()},
    }
    _emit(data, args.format)
    return 0


def _sc(stype):
    from .symspace import _sc_for

    return _sc_for(stype)


def _cmd_symspace_or(args) -> int:
    coords = kac.kac_coordinates(_parse_type(args), args.k, _parse_ints(args.coords))
    inv = symspace.involution(coords)
    verdict = symspace.condition_or(inv)
    kind = symspace.hermitian_tube_classify(inv)
    data = {
        "type": inv.stype.name,
        "coords": coords.describe(),
        "dim_x_sigma": inv.dim_u0,
        "dim_x_sigma_theta": inv.dim_u1,
        "hermitian_kind": kind.value,
        "or_satisfied": verdict.satisfied,
        "shortcut": verdict.shortcut,
        "witnesses": [
            {"eps": list(w.eps), "det": w.det} for w in verdict.witnesses
        ],
    }
    _emit(data, args.format)
    return 0


def _cmd_symspace_tables(args) -> int:
    print(symspace.emit_tables(args.which, args.max_rank, args.format))
    return 0


def _cmd_cohom_poincare(args) -> int:
    rs = build_root_system(_parse_type(args))
    subset = _parse_ints(args.levi) if args.levi else ()
    poly = coh.poincare_levi(rs, subset)
    sub = coh.levi_subset(rs, subset)
    data = {
        "type": rs.stype.name,
        "levi": list(sub.phi_prime),
        "dim_nilradical": sub.dim_nilradical,
        "factors": [f.name for f in sub.levi_factors],
        "coefficients": list(poly.coeffs),
    }
    _emit(data, args.format)
    return 0


def _cmd_cohom_support(args) -> int:
    rs = build_root_system(_parse_type(args))
    res = coh.coefficient_support(rs, args.degree)
    data = {
        "type": rs.stype.name,
        "degree": res.degree,
        "subsets": [list(s) for s in res.subsets],
        "includes_trivial": res.includes_trivial,
    }
    _emit(data, args.format)
    return 0


def _cmd_cohom_cycle_support(args) -> int:
    rs = build_root_system(_parse_type(args))
    rep = coh.cycle_support_report(rs)
    data = _cycle_support_data(rep)
    _emit(data, args.format)
    return 0


def _cycle_support_data(rep):
    return {
        "type": rep.stype_name,
        "note": rep.note,
        "degrees": [
            {
                "degree": row.degree,
                "dual_degree": row.dual_degree,
                "subsets": [list(s) for s in row.subsets],
                "includes_trivial": row.includes_trivial,
                "dual_matches": row.dual_matches,
            }
            for row in rep.degrees
        ],
    }


def _cmd_numfield(args) -> int:
    params = _parse_ints(args.params)
    if len(params) < 1:
        raise LieError("--params needs at least the quadratic parameter k")
    cert = numfield.two_nonreal_certificate(args.degree, params[0], params[1:])
    data = {
        "degree": args.degree,
        "h": cert.h.pretty(),
        "h_coefficients": [str(c) for c in cert.h.coeffs],
        "q": cert.q,
        "epsilon_bound": str(cert.epsilon_bound),
        "real_roots": cert.real_roots,
        "eisenstein_at_2": cert.eisenstein_at_2,
    }
    _emit(data, args.format)
    return 0


# -- golden fixtures and verify-all ---------------------------------------------


def build_sections(max_rank: int = 12):
    """Everything verify-all checks, as one JSON-able dict per section."""
    sections = {}

    sections["exponents"] = {
        name: list(exponents(SimpleType.parse(name))) for name in RANK8_TYPES
    } | {f"{s}12": list(exponents(SimpleType(s, 12))) for s in "ABCD"}

    roots_data = {}
    for name in RANK8_TYPES:
        rs = build_root_system(SimpleType.parse(name))
        roots_data[name] = {
            "n_pos": rs.n_pos,
            "dim": rs.stype.dimension,
            "highest_root": list(rs.highest_root.coeffs),
        }
    sections["roots"] = roots_data

    chev_data = {}
    for name in RANK8_TYPES:
        sc = _sc(SimpleType.parse(name))
        rep = chev.verify_structure_constants(sc)
        chev_data[name] = {c.name: c.passed for c in rep.checks}
    sections["chevalley"] = chev_data

    sections["tables_or"] = json.loads(symspace.emit_tables("or", max_rank, "json"))
    sections["tables_dims"] = json.loads(symspace.emit_tables("dims", max_rank, "json"))

    fixed_data = {}
    for stype in symspace.table_types(max_rank):
        sc = _sc(stype)
        for coords in symspace.involution_classes(stype):
            levi = kac.fixed_subalgebra(coords)
            dims = kac.eigenspace_dimensions(kac.kac_automorphism(coords, sc))
            fixed_data[f"{stype.name} {coords.describe()}"] = {
                "center_dim": levi.center_dim,
                "factors": list(levi.factor_names()),
                "eigen_dims": [dims[0], dims[1]],
                "oracle_equal": dims[0] == levi.dim,
            }
    sections["fixed_subalgebras"] = fixed_data

    poincare_data = {}
    for name in ["A4", "A7", "B4", "B6", "C4", "C6", "D5", "D7", "E6", "E7", "E8", "F4", "G2"]:
        rs = build_root_system(SimpleType.parse(name))
        entry = {}
        for j in range(1, rs.rank + 1):
            entry[str(j)] = list(coh.poincare_levi(rs, (j,)).coeffs)
        entry["full"] = list(coh.poincare_levi(rs, range(1, rs.rank + 1)).coeffs)
        poincare_data[name] = entry
    sections["poincare"] = poincare_data

    cycle_support_data = {}
    for name in (
        ["A2", "F4", "G2", "B4"]
        + [f"C{n}" for n in range(6, max_rank + 1)]
        + [f"D{n}" for n in range(5, max_rank + 1)]
    ):
        cycle_support_data[name] = _cycle_support_data(coh.cycle_support_report(build_root_system(SimpleType.parse(name))))
    sections["cycle_supports"] = cycle_support_data

    fold_data = {}
    for base, k in [
        ("A2", 2), ("A4", 2), ("A6", 2), ("A3", 2), ("A5", 2), ("A7", 2),
        ("D4", 2), ("D5", 2), ("D6", 2), ("E6", 2), ("D4", 3),
    ]:
        rep = kac.verify_fold(SimpleType.parse(base), k)
        fold_data[f"{base}^({k})"] = {
            "delta_residue": rep["delta_residue"],
            "det_a": rep["det_a"],
            "a_matrix": [list(r) for r in rep["a_matrix"]],
            "generation": {
                str(a): {
                    "dim": g["dim"],
                    "lowest_count": g["lowest_count"],
                    "generated_full": g["generated_full"],
                }
                for a, g in rep["eigenspace_generation"].items()
            },
            "weights_equal_12": rep["weights_equal_12"],
        }
    sections["folds"] = fold_data

    identity_data = {
        "automorphism_invariance": {},
        "degree_identity": {},
        "odd_product_gaps": {},
    }
    for name in [f"A{n}" for n in range(2, 8)] + [f"D{n}" for n in range(4, 8)] + ["E6"]:
        r = coh.check_automorphism_invariance(SimpleType.parse(name))
        identity_data["automorphism_invariance"][name] = {
            "automorphisms": r["automorphisms"],
            "ok": not r["failures"],
        }
    for name in RANK8_TYPES:
        r = coh.check_degree_identity(SimpleType.parse(name))
        identity_data["degree_identity"][name] = not r["failures"]
    for l in range(1, 21):
        identity_data["odd_product_gaps"][str(l)] = coh.check_odd_product_gaps(l)["ok"]
    sections["polynomial_identities"] = identity_data

    nf_data = {}
    for n in range(2, 11):
        k0 = 4 if n == 2 else 2
        ks = tuple(range(2, 2 * (n - 1), 2))
        cert = numfield.two_nonreal_certificate(n, k0, ks)
        nf_data[str(n)] = {
            "params": [k0, *ks],
            "q": cert.q,
            "h": [str(c) for c in cert.h.coeffs],
            "real_roots": cert.real_roots,
            "eisenstein_at_2": cert.eisenstein_at_2,
        }
    sections["numfield"] = nf_data

    return sections


def _cmd_fixtures(args) -> int:
    directory = Path(args.dir) if args.dir else GOLDEN_DIR
    directory.mkdir(parents=True, exist_ok=True)
    sections = build_sections()
    for name, data in sections.items():
        path = directory / f"{name}.json"
        path.write_text(json.dumps(data, sort_keys=True, indent=1) + "\n")
        print(f"wrote {path}", file=sys.stderr)
    return 0


def _cmd_verify_all(args) -> int:
    directory = Path(args.fixtures) if args.fixtures else GOLDEN_DIR
    sections = build_sections()
    bad = 0
    for name, data in sections.items():
        path = directory / f"{name}.json"
        if not path.exists():
            print(f"verify-all: {name}: missing fixture {path}", file=sys.stderr)
            bad += 1
            continue
        golden = json.loads(path.read_text())
        regenerated = json.loads(json.dumps(data, sort_keys=True))
        if regenerated == golden:
            print(f"verify-all: {name}: ok")
        else:
            bad += 1
            print(f"verify-all: {name}: MISMATCH", file=sys.stderr)
            _diff_summary(name, golden, regenerated)
    if bad:
        print(f"verify-all: {bad} section(s) failed", file=sys.stderr)
        return 2
    print("verify-all: all sections match the golden fixtures")
    return 0


def _diff_summary(name, golden, regenerated, limit=5):
    if isinstance(golden, dict) and isinstance(regenerated, dict):
        keys = sorted(set(golden) | set(regenerated))
        shown = 0
        for key in keys:
            if golden.get(key) != regenerated.get(key):
                print(
                    f"  {name}.{key}: fixture={golden.get(key)!r} regenerated={regenerated.get(key)!r}",
                    file=sys.stderr,
                )
                shown += 1
                if shown >= limit:
                    print("  ...", file=sys.stderr)
                    break
    else:
        print(f"  {name}: structural mismatch", file=sys.stderr)


# -- parser ----------------------------------------------------------------------


def _add_type_args(p, rank=True):
    p.add_argument("--type", required=True, help="simple type, e.g. E6, or a series letter with --rank")
    if rank:
        p.add_argument("--rank", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")


def make_parser() -> _Parser:
    parser = _Parser(prog="simplelie", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="enumerate a root system")
    _add_type_args(p)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("chevalley", help="structure constants and their verification")
    _add_type_args(p)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_chevalley)

    p = sub.add_parser("kac", help="finite-order automorphisms")
    ksub = p.add_subparsers(dest="kac_command", required=True)
    pc = ksub.add_parser("classify", help="order, fixed subalgebra, eigenspace dims")
    _add_type_args(pc)
    pc.add_argument("--k", type=int, default=1, choices=(1, 2, 3))
    pc.add_argument("--s", required=True, help="comma-separated Kac coordinates s_0,...,s_n")
    pc.set_defaults(func=_cmd_kac_classify)

    p = sub.add_parser("symspace", help="involutions and the orientation tables")
    ssub = p.add_subparsers(dest="symspace_command", required=True)
    po = ssub.add_parser("or", help="orientation condition for one involution class")
    _add_type_args(po)
    po.add_argument("--k", type=int, default=1, choices=(1, 2))
    po.add_argument("--coords", required=True, help="comma-separated s_0,...,s_n")
    po.set_defaults(func=_cmd_symspace_or)
    pt = ssub.add_parser("tables", help="regenerate the involution tables")
    pt.add_argument("--which", choices=("or", "dims"), default="or")
    pt.add_argument("--format", choices=("json", "text"), default="json")
    pt.add_argument("--max-rank", type=int, default=12)
    pt.set_defaults(func=_cmd_symspace_tables)

    p = sub.add_parser("cohom", help="Poincare polynomials and supports")
    csub = p.add_subparsers(dest="cohom_command", required=True)
    pp = csub.add_parser("poincare", help="P(S, t) for a subset of simple roots")
    _add_type_args(pp)
    pp.add_argument("--levi", default="", help="comma-separated 1-based simple-root labels")
    pp.set_defaults(func=_cmd_cohom_poincare)
    ps = csub.add_parser("support", help="subsets with a nonzero coefficient in one degree")
    _add_type_args(ps)
    ps.add_argument("--degree", type=int, required=True)
    ps.set_defaults(func=_cmd_cohom_support)
    pt2 = csub.add_parser("th2", help="support report over the geometric-cycle degrees")
    _add_type_args(pt2)
    pt2.set_defaults(func=_cmd_cohom_cycle_support)

    p = sub.add_parser("numfield", help="rational number-field helpers")
    nsub = p.add_subparsers(dest="numfield_command", required=True)
    pn = nsub.add_parser("two-nonreal", help="degree-n polynomial with exactly two non-real roots")
    pn.add_argument("--degree", type=int, required=True)
    pn.add_argument("--params", required=True, help="k,k_1,...,k_{n-2} (positive even)")
    pn.add_argument("--format", choices=("json", "text"), default="json")
    pn.set_defaults(func=_cmd_numfield)

    p = sub.add_parser("tables", help="alias of `symspace tables`")
    p.add_argument("--which", choices=("or", "dims"), default="or")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--max-rank", type=int, default=12)
    p.set_defaults(func=_cmd_symspace_tables)

    p = sub.add_parser("verify-all", help="regenerate everything and compare to golden fixtures")
    p.add_argument("--fixtures", default=None, help="fixture directory override")
    p.set_defaults(func=_cmd_verify_all)

    p = sub.add_parser("fixtures", help="(maintainers) rewrite the golden fixtures")
    p.add_argument("--write", action="store_true", required=True)
    p.add_argument("--dir", default=None)
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except LieError as exc:
        print(f"simplelie: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1


if __name__ == "__main__":
    raise SystemExit(main())
