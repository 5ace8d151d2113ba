"""Command-line driver emitting deterministic JSON reports.

Subcommands: config, hilbert, unexpected, bihom, companion, image,
duality, golden.  Exit codes: 0 success, 2 verdict-negative (a requested
property does not hold), 1 error.  All numbers in reports are decimal
strings; reports embed the field specs, seeds, and tool version.
"""

import argparse
import json
import os
import sys
from fractions import Fraction
from importlib import resources

from . import __version__
from .configs import catalog, config_from_json, config_requirements
from .field import Field, FieldError, FieldSpec, default_field_specs, make_field
from .ideals import h_vector_points, hilbert_function, ideal_piece
from .poly import BihomForm, parse_poly, poly_to_text
from .unexpected import (BihomSolveError, DisagreementError, bmss_report,
                         cone_property, field_specs_for, is_unexpected,
                         solve_bihom)
from .companion import (RationalMapDescriptor, StabilizationError,
                        catalog_map, decompose, image_report,
                        map_field_specs, map_requirements,
                        reference_decompose_basis, support_decompose_basis)
from .linalg import rank as row_rank

DEFAULT_SEEDS = (0, 1, 2)

_ERROR_CODES = (
    (BihomSolveError, "bihom-no-solution"),
    (DisagreementError, "prime-disagreement"),
    (StabilizationError, "not-stabilized"),
    (FieldError, "field-error"),
    (json.JSONDecodeError, "bad-json"),
    (ValueError, "invalid-argument"),
    (OSError, "io-error"),
)


def stringify(obj):
    """Numbers to decimal strings, recursively; booleans stay booleans."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return str(obj)
    if isinstance(obj, float):
        raise ValueError(f"refusing to serialize a float: {obj!r}")
    if isinstance(obj, dict):
        return {str(k): stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [stringify(v) for v in obj]
    return str(obj)


def _seeds(args) -> tuple:
    if getattr(args, "seeds", None):
        return tuple(int(s) for s in args.seeds.split(","))
    env = os.environ.get("UXH_SEED")
    if env:
        return tuple(int(s) for s in env.split(","))
    return DEFAULT_SEEDS


def _field_spec(args):
    if getattr(args, "field", None):
        return FieldSpec.from_json(json.loads(args.field))
    return None


def _partner_specs(spec: FieldSpec) -> list:
    """The user's spec plus one default partner prime with the same
    structure, for cross-prime agreement checks."""
    pool = default_field_specs(golden=spec.extension == "golden",
                               zeta_order=(spec.zeta_order
                                           if spec.extension == "zeta"
                                           else None),
                               count=3)
    partners = [s for s in pool if s.p != spec.p]
    return [spec] + partners[:1]


def _resolve_config(args):
    """(configuration, agreement field specs) from --config/--m/--field."""
    ref = args.config
    user = _field_spec(args)
    m = getattr(args, "m", None)
    if os.path.exists(ref) or ref.endswith(".json"):
        with open(ref, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
        spec = user or (FieldSpec.from_json(obj["field"]) if "field" in obj
                        else default_field_specs()[0])
        cfg = config_from_json(obj, make_field(spec))
        return cfg, _partner_specs(spec)
    base, _, tail = ref.partition(":")
    if m is None and tail:
        try:
            m = int(tail)
        except ValueError:
            raise FieldError(f"bad family parameter in {ref!r}")
    req = config_requirements(base, m=m)
    if user is not None:
        cfg = catalog(base, make_field(user), m=m)
        return cfg, _partner_specs(user)
    specs = default_field_specs(golden=req["golden"], zeta_order=req["zeta"])
    return catalog(base, make_field(specs[0]), m=m), specs


def _resolve_map(args) -> RationalMapDescriptor:
    ref = args.map
    user = _field_spec(args)
    m = getattr(args, "m", None)
    if ref.startswith("catalog:"):
        name = ref.partition(":")[2]
        if user is not None:
            return catalog_map(name, make_field(user), m=m)
        req = map_requirements(name, m=m)
        spec = default_field_specs(golden=req["golden"],
                                   zeta_order=req["zeta"])[0]
        return catalog_map(name, make_field(spec), m=m)
    with open(ref, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    spec = user or (FieldSpec.from_json(obj["field"]) if "field" in obj
                    else default_field_specs()[0])
    fld = make_field(spec)
    nvars = int(obj["nvars"])
    forms = [parse_poly(fld, t, nvars=nvars) for t in obj["forms"]]
    base = None
    if "base_points" in obj:
        base = [([fld.parse(str(c)) for c in e["point"]], int(e["mult"]))
                for e in obj["base_points"]]
    return RationalMapDescriptor(obj.get("name", "custom"), fld, nvars,
                                 forms, base_points=base)


# -- subcommand payloads ---------------------------------------------------

def _cmd_config(args):
    cfg, specs = _resolve_config(args)
    payload = {"name": cfg.name, "N": cfg.N, "npoints": len(cfg.points)}
    if args.emit_points:
        payload["points"] = [[cfg.field.fmt(c) for c in p]
                             for p in cfg.points]
    return payload, specs, 0


def _cmd_hilbert(args):
    cfg, specs = _resolve_config(args)
    hf = hilbert_function(cfg, d_max=args.dmax)
    hv = h_vector_points(cfg)
    payload = {"hf": hf, "h": list(hv.entries), "sigma": hv.sigma,
               "acm_plausible": hv.acm_plausible}
    return payload, specs, 0


def _cmd_unexpected(args):
    cfg, specs = _resolve_config(args)
    mults = [int(s) for s in args.mults.split(",")]
    rep = is_unexpected(cfg, args.degree, mults, seeds=_seeds(args),
                        specs=specs)
    return rep.to_json(), specs, (0 if rep.verdict == "unexpected" else 2)


def _cmd_bihom(args):
    cfg, specs = _resolve_config(args)
    res = solve_bihom(cfg, args.degree, args.mult, t_max=args.tmax)
    payload = res.to_json()
    payload["checks"] = res.specialization_checks(count=args.checks,
                                                  seed=_seeds(args)[0])
    return payload, specs, 0


def _pick_basis(kind: str, cfg, form):
    """(resolved kind, basis); "auto" prefers the reference list."""
    if kind == "reference":
        basis = reference_decompose_basis(cfg, form.bidegree[1])
        if basis is None:
            raise FieldError(
                f"no reference generator list on record for {cfg.name} in "
                f"degree {form.bidegree[1]}; use --basis support")
        return "reference", basis
    if kind == "support":
        return "support", support_decompose_basis(form)
    basis = reference_decompose_basis(cfg, form.bidegree[1])
    if basis is not None:
        return "reference", basis
    return "support", support_decompose_basis(form)


def _cmd_companion(args):
    cfg, specs = _resolve_config(args)
    res = solve_bihom(cfg, args.degree, args.mult, t_max=args.tmax)
    kind, basis = _pick_basis(args.basis, cfg, res.form)
    hs = decompose(res.form, basis)
    fld = cfg.field
    recon = BihomForm.from_pairs(fld, cfg.nvars, list(zip(hs, basis)))
    t = res.bidegree[0]
    payload = {
        "bidegree": list(res.bidegree),
        "basis": kind,
        "generators": [poly_to_text(g) for g in basis],
        "coefficients": [poly_to_text(h) for h in hs],
        "reconstruction_exact": recon == res.form,
        "g_span_dim": row_rank(
            fld, [g.coeff_vector(res.bidegree[1]) for g in basis]),
        "h_span_dim": row_rank(fld, [h.coeff_vector(t) for h in hs]),
    }
    return payload, specs, 0


def _cmd_image(args):
    mp = _resolve_map(args)
    specs = (_partner_specs(mp.field.spec) if getattr(args, "field", None)
             else map_field_specs(mp))
    ideal_ks = tuple(int(s) for s in args.ideal_ks.split(",")) \
        if args.ideal_ks else (1, 2, 3)
    rep = image_report(mp, ideal_ks=ideal_ks, specs=specs,
                       seed=_seeds(args)[0], max_k=args.max_k,
                       jacobian_trials=args.jacobian_trials)
    payload = rep.to_json()
    payload["forms"] = [poly_to_text(f) for f in mp.forms]
    return payload, specs, 0


def _cmd_duality(args):
    cfg, specs = _resolve_config(args)
    res = solve_bihom(cfg, args.degree, args.mult, t_max=args.tmax)
    payload = bmss_report(res, trials=args.trials, seed=_seeds(args)[0])
    return payload, specs, 0


def _command_payload(args):
    handler = {
        "config": _cmd_config,
        "hilbert": _cmd_hilbert,
        "unexpected": _cmd_unexpected,
        "bihom": _cmd_bihom,
        "companion": _cmd_companion,
        "image": _cmd_image,
        "duality": _cmd_duality,
    }[args.command]
    payload, specs, code = handler(args)
    report = {
        "tool": "uxh",
        "version": __version__,
        "command": args.command,
        "field_specs": [s.to_json() for s in specs],
        "seeds": list(_seeds(args)),
        "result": payload,
    }
    return report, code


# -- golden manifest -------------------------------------------------------

def _subset_match(expected, got, path, mismatches):
    if isinstance(expected, dict):
        if not isinstance(got, dict):
            mismatches.append(f"{path}: expected object, got {got!r}")
            return
        for k, v in expected.items():
            if k not in got:
                mismatches.append(f"{path}.{k}: missing")
            else:
                _subset_match(v, got[k], f"{path}.{k}", mismatches)
        return
    if expected != got:
        mismatches.append(f"{path}: expected {expected!r}, got {got!r}")


def _cmd_golden(args):
    if args.manifest:
        with open(args.manifest, "r", encoding="utf-8") as fh:
            manifest = json.load(fh)
    else:
        text = (resources.files("uxh") / "data" /
                "golden_manifest.json").read_text(encoding="utf-8")
        manifest = json.loads(text)
    entries = []
    failed = 0
    parser = _build_parser()
    for entry in manifest["entries"]:
        sub = parser.parse_args(entry["command"])
        try:
            report, code = _command_payload(sub)
        except Exception as exc:  # noqa: BLE001 - recorded per entry
            entries.append({"name": entry["name"], "ok": False,
                            "mismatches": [f"error: {exc}"]})
            failed += 1
            continue
        mism = []
        _subset_match(entry["expect"], stringify(report), "$", mism)
        if code != int(entry.get("exit", 0)):
            mism.append(f"$exit: expected {entry.get('exit', 0)}, "
                        f"got {code}")
        entries.append({"name": entry["name"], "ok": not mism,
                        "mismatches": mism})
        failed += bool(mism)
    report = {
        "tool": "uxh",
        "version": __version__,
        "command": "golden",
        "passed": len(entries) - failed,
        "failed": failed,
        "entries": entries,
    }
    return report, (0 if failed == 0 else 2)


# -- argument parsing ------------------------------------------------------

def _add_common(sub, config=True):
    if config:
        sub.add_argument("--config", required=True,
                         help="catalog name or configuration JSON file")
        sub.add_argument("--m", type=int, default=None,
                         help="family parameter for fermat configurations")
    sub.add_argument("--field", default=None,
                     help='field spec JSON, e.g. {"p": 10009, '
                          '"extension": "golden"}')
    sub.add_argument("--seeds", default=None,
                     help="comma-separated probe seeds (default 0,1,2)")
    sub.add_argument("--out", default=None, help="report path (default "
                                                 "stdout)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uxh",
        description="exact computations around unexpected hypersurfaces "
                    "and their companion maps")
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("config", help="describe a point configuration")
    _add_common(s)
    s.add_argument("--emit-points", action="store_true",
                   help="include the coordinate list")

    s = subs.add_parser("hilbert", help="Hilbert function and h-vector")
    _add_common(s)
    s.add_argument("--dmax", type=int, default=None)

    s = subs.add_parser("unexpected", help="unexpectedness verdict")
    _add_common(s)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--mults", required=True,
                   help="comma-separated general-point multiplicities")

    s = subs.add_parser("bihom", help="solve for the bihomogeneous form")
    _add_common(s)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--mult", type=int, required=True)
    s.add_argument("--tmax", type=int, default=None)
    s.add_argument("--checks", type=int, default=10,
                   help="number of specialization spot checks")

    s = subs.add_parser("companion",
                        help="decompose the form into companion data")
    _add_common(s)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--mult", type=int, required=True)
    s.add_argument("--tmax", type=int, default=None)
    s.add_argument("--basis", choices=("auto", "reference", "support"),
                   default="auto")

    s = subs.add_parser("image", help="invariants of a map image")
    s.add_argument("--map", required=True,
                   help="catalog:<id> or a map JSON file")
    s.add_argument("--m", type=int, default=None)
    _add_common(s, config=False)
    s.add_argument("--max-k", type=int, default=16, dest="max_k")
    s.add_argument("--ideal-ks", default=None, dest="ideal_ks",
                   help="degrees for ideal dimensions (default 1,2,3)")
    s.add_argument("--jacobian-trials", type=int, default=25,
                   dest="jacobian_trials")

    s = subs.add_parser("duality", help="tangent-cone duality observations")
    _add_common(s)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--mult", type=int, required=True)
    s.add_argument("--tmax", type=int, default=None)
    s.add_argument("--trials", type=int, default=5)

    s = subs.add_parser("golden", help="run the golden manifest")
    s.add_argument("--manifest", default=None,
                   help="manifest path (default: packaged manifest)")
    s.add_argument("--out", default=None)
    s.add_argument("--seeds", default=None)
    return parser


def _emit(report: dict, out_path) -> None:
    text = json.dumps(stringify(report), indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        if args.command == "golden":
            report, code = _cmd_golden(args)
        else:
            report, code = _command_payload(args)
    except Exception as exc:  # noqa: BLE001 - mapped to report + exit 1
        code_name = "internal-error"
        for etype, name in _ERROR_CODES:
            if isinstance(exc, etype):
                code_name = name
                break
        _emit({"tool": "uxh", "version": __version__,
               "command": getattr(args, "command", None),
               "error": {"code": code_name, "message": str(exc)}},
              getattr(args, "out", None))
        return 1
    _emit(report, getattr(args, "out", None))
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
