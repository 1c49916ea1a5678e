"""Command line surface.

Four subcommands drive the library: ``algebra`` prints root data,
``symlevels`` decomposes the symmetric-algebra levels S(ad)_n, ``certify``
runs the irreducibility certificate for Ind(M)_kappa, and ``crossvalidate``
builds the truncated module and checks the resonance bookkeeping against the
brute-force oracles.  All output is deterministic; ``--format json`` emits a
stable schema with every scalar as an exact string.

Exit codes: 0 success (or certified), 1 usage or precondition error,
2 mathematically valid but inconclusive certificate.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import affine_numerics as an
from . import explicit_module as em
from .finite_rep import casimir_on_irrep, weyl_dimension
from .graded_sym import sym_ad_graded, weyl_level_decomposition
from .rational import format_fraction, format_scalar, parse_scalar, scalar_im, scalar_re
from .root_system import build_algebra, norm_sq

_FORMATS = ("text", "json")


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract reserves 2 for
    inconclusive certificates, so remap usage errors to 1."""

    def error(self, message):
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


class JobConfig:
    """A fully parsed CLI job; round-trips through the JSON emitter."""

    __slots__ = ("command", "series", "rank", "weights", "kappa", "n_max", "fmt")

    def __init__(self, command, series, rank, weights=(), kappa=None, n_max=None,
                 fmt="text"):
        self.command = command
        self.series = series
        self.rank = rank
        self.weights = tuple(tuple(Fraction(c) for c in w) for w in weights)
        self.kappa = kappa
        self.n_max = n_max
        self.fmt = fmt

    def __eq__(self, other):
        if not isinstance(other, JobConfig):
            return NotImplemented
        return self.to_json_dict() == other.to_json_dict()

    def __repr__(self):
        return "JobConfig(%r)" % (self.to_json_dict(),)

    def to_json_dict(self) -> dict:
        return {
            "command": self.command,
            "algebra": {"series": self.series, "rank": self.rank},
            "weights": [[format_fraction(c) for c in w] for w in self.weights],
            "kappa": None if self.kappa is None else format_scalar(self.kappa),
            "n_max": self.n_max,
            "format": self.fmt,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "JobConfig":
        kappa = data.get("kappa")
        return cls(
            command=data["command"],
            series=data["algebra"]["series"],
            rank=data["algebra"]["rank"],
            weights=[[Fraction(c) for c in w] for w in data.get("weights", [])],
            kappa=None if kappa is None else parse_scalar(kappa),
            n_max=data.get("n_max"),
            fmt=data.get("format", "text"),
        )


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="weylmod", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def common(sp):
        sp.add_argument("series", help="algebra series letter, e.g. A")
        sp.add_argument("rank", type=int, help="algebra rank")
        sp.add_argument("--format", choices=_FORMATS, default="text",
                        dest="fmt", help="output format")

    sp = sub.add_parser("algebra", help="print root data of a simple algebra")
    common(sp)

    sp = sub.add_parser("symlevels",
                        help="decompose the levels of the symmetric algebra of g")
    common(sp)
    sp.add_argument("--n", type=int, required=True, help="largest level")

    sp = sub.add_parser("certify",
                        help="irreducibility certificate for Ind(M)_kappa")
    common(sp)
    sp.add_argument("--hw", nargs="+", required=True,
                    help="highest weight of M, fundamental coordinates")
    sp.add_argument("--kappa", required=True, help='central parameter, e.g. "-3/2"')

    sp = sub.add_parser("crossvalidate",
                        help="brute-force oracle checks on the truncated module")
    common(sp)
    sp.add_argument("--hw", nargs="+", required=True,
                    help="highest weight of M, fundamental coordinates")
    sp.add_argument("--kappa", required=True, help="central parameter")
    sp.add_argument("--depth", type=int, required=True, help="truncation depth")
    sp.add_argument("--dump", metavar="FILE",
                    help="also write the module basis/actions as JSON")
    return p


def _config_from_args(args) -> JobConfig:
    weights = []
    if getattr(args, "hw", None) is not None:
        weights.append([Fraction(c) for c in args.hw])
    kappa = None
    if getattr(args, "kappa", None) is not None:
        kappa = parse_scalar(args.kappa)
    n_max = getattr(args, "n", None)
    if n_max is None:
        n_max = getattr(args, "depth", None)
    return JobConfig(args.command, args.series, args.rank,
                     weights=weights, kappa=kappa, n_max=n_max, fmt=args.fmt)


def _emit(report: dict, lines, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(report, sort_keys=True, indent=2))
        out.write("\n")
    else:
        for line in lines:
            out.write(line + "\n")


def _hw_weight(algebra, config: JobConfig):
    if not config.weights:
        raise ValueError("a highest weight is required")
    coords = config.weights[0]
    if len(coords) != algebra.rank:
        raise ValueError(
            "highest weight needs %d coordinates, got %d"
            % (algebra.rank, len(coords))
        )
    return algebra.weight(coords)


def cmd_algebra(config: JobConfig, out) -> int:
    algebra = build_algebra(config.series, config.rank)
    rho = algebra.rho
    report = {
        "config": config.to_json_dict(),
        "algebra": {
            "series": algebra.series,
            "rank": algebra.rank,
            "dimension": algebra.dim,
            "dual_coxeter": format_fraction(algebra.dual_coxeter),
            "cartan_matrix": [[int(x) for x in row] for row in algebra.cartan],
            "symmetrizers": [format_fraction(x) for x in algebra.d],
            "gram_simple_roots": [
                [format_fraction(x) for x in row] for row in algebra.gram_root
            ],
            "rho": [format_fraction(c) for c in rho.coords],
            "rho_norm_sq": format_fraction(norm_sq(rho)),
            "positive_roots": [list(map(int, r)) for r in algebra.positive_roots],
            "highest_root": list(map(int, algebra.highest_root)),
        },
    }
    a = report["algebra"]
    lines = [
        "algebra %s%d: dimension %d" % (algebra.series, algebra.rank, algebra.dim),
        "dual Coxeter number: %s" % a["dual_coxeter"],
        "cartan matrix: %s" % (a["cartan_matrix"],),
        "symmetrizers d_i: %s" % ", ".join(a["symmetrizers"]),
        "gram (alpha_i, alpha_j): %s" % (a["gram_simple_roots"],),
        "rho: (%s)   |rho|^2 = %s" % (", ".join(a["rho"]), a["rho_norm_sq"]),
        "positive roots (root coordinates): %s"
        % "; ".join("(%s)" % ", ".join(map(str, r)) for r in a["positive_roots"]),
        "highest root: (%s)" % ", ".join(map(str, a["highest_root"])),
    ]
    _emit(report, lines, config.fmt, out)
    return 0


def _decomposition_json(dec) -> list:
    return [
        {
            "hw": [format_fraction(c) for c in w.coords],
            "multiplicity": m,
            "dimension": weyl_dimension(dec.algebra, w),
        }
        for w, m in dec.items()
    ]


def _decomposition_text(dec) -> str:
    parts = []
    for w, m in dec.items():
        label = "L(%s)" % ", ".join(format_fraction(c) for c in w.coords)
        parts.append(label if m == 1 else "%d %s" % (m, label))
    return " + ".join(parts) if parts else "0"


def cmd_symlevels(config: JobConfig, out) -> int:
    algebra = build_algebra(config.series, config.rank)
    n_max = config.n_max
    if n_max is None or n_max < 0:
        raise ValueError("--n must be >= 0")
    graded = sym_ad_graded(algebra, n_max)
    trivial = algebra.weight([0] * algebra.rank)
    levels = []
    lines = ["S(ad) levels for %s%d" % (algebra.series, algebra.rank)]
    for n in range(n_max + 1):
        dec = weyl_level_decomposition(algebra, trivial, n)
        dim = graded.level(n).dimension()
        assert dim == dec.dimension()
        levels.append(
            {
                "degree": n,
                "dimension": dim,
                "length": dec.length(),
                "constituents": _decomposition_json(dec),
            }
        )
        lines.append("level %d: dim %d = %s" % (n, dim, _decomposition_text(dec)))
    report = {"config": config.to_json_dict(), "levels": levels}
    _emit(report, lines, config.fmt, out)
    return 0


def _candidate_json(pair) -> dict:
    return {
        "mu": [int(c) for c in pair.mu.coords],
        "n": pair.n,
        "xi": format_scalar(pair.xi),
    }


def cmd_certify(config: JobConfig, out) -> int:
    algebra = build_algebra(config.series, config.rank)
    hw = _hw_weight(algebra, config)
    kappa = config.kappa
    if kappa is None:
        raise ValueError("--kappa is required")
    verdict = an.irreducibility_certificate(hw, kappa)
    lam = hw + algebra.rho
    c_bound = an.kostant_bound_C(lam)
    bound = an.exhaustive_level_bound(lam, kappa)
    delta = an.delta_upper_bound(hw, kappa, bound)
    report = {
        "config": config.to_json_dict(),
        "status": verdict.status,
        "reason": verdict.reason,
        "candidates": [_candidate_json(p) for p in verdict.candidates],
        "kostant_bound_C": format_fraction(c_bound),
        "exhaustive_level_bound": bound,
        "in_X_lambda": an.in_X_lambda(kappa, lam),
        "in_Y_lambda": an.in_Y_lambda(kappa, lam),
        "delta_upper_bound": {"value": delta.value, "complete": delta.complete},
        "top_l0_eigenvalue": format_scalar(
            an.top_l0_eigenvalue(casimir_on_irrep(algebra, hw), kappa)
        ),
    }
    lines = [
        "Ind(M)_kappa with M = L(%s), kappa = %s"
        % (", ".join(format_fraction(c) for c in hw.coords), format_scalar(kappa)),
        "status: %s%s"
        % (verdict.status, "" if verdict.reason is None else " (%s)" % verdict.reason),
        "Kostant bound C = %s, exhaustive level bound %d"
        % (report["kostant_bound_C"], bound),
        "kappa in X_lambda: %s; kappa in Y_lambda: %s"
        % (report["in_X_lambda"], report["in_Y_lambda"]),
        "delta length bound: %d (complete: %s)" % (delta.value, delta.complete),
    ]
    if verdict.candidates:
        lines.append("unexcluded candidates (mu root coords, degree, L0 eigenvalue):")
        for p in verdict.candidates:
            lines.append(
                "  mu=(%s) n=%d xi=%s"
                % (", ".join(str(int(c)) for c in p.mu.coords), p.n,
                   format_scalar(p.xi))
            )
    _emit(report, lines, config.fmt, out)
    return 0 if verdict.certified else 2


def cmd_crossvalidate(config: JobConfig, out, dump=None) -> int:
    algebra = build_algebra(config.series, config.rank)
    hw = _hw_weight(algebra, config)
    kappa = config.kappa
    depth = config.n_max
    if kappa is None or depth is None:
        raise ValueError("--kappa and --depth are required")
    module = em.build_truncated(algebra, hw, kappa, depth)

    dims = [module.degree_dim(n) for n in range(depth + 1)]
    expected_dims = [
        d * module.rep.dim for d in sym_ad_graded(algebra, depth).dims()
    ]
    graded_ok = dims == expected_dims

    l0 = em.sugawara_l0(module)
    l0_ok = l0.is_scalar_by_degree()
    eigenvalues = [format_scalar(l0.eigenvalue(n)) for n in range(depth + 1)]

    virasoro_ok = em.virasoro_commutation_check(module)

    kappa_in_scope = scalar_im(kappa) != 0 or scalar_re(kappa) < 0
    findings = []
    finding_degrees = set()
    for n in range(1, depth + 1):
        for r in em.singular_vectors(module, n):
            finding_degrees.add(n)
            findings.append(
                {
                    "degree": n,
                    "weight": [format_fraction(c) for c in r.weight.coords],
                    "dimension": len(r.basis_of_solutions),
                    "matched_candidate": None
                    if r.matched_candidate is None
                    else _candidate_json(r.matched_candidate),
                }
            )
    necessity = None
    candidates = []
    certificate_consistent = None
    if kappa_in_scope:
        lam = hw + algebra.rho
        pairs = an.candidate_pairs(lam, kappa, depth)
        candidates = [_candidate_json(p) for p in pairs]
        candidate_degrees = {p.n for p in pairs}
        necessity = finding_degrees <= candidate_degrees
        verdict = an.irreducibility_certificate(hw, kappa)
        certificate_consistent = not (verdict.certified and findings)

    kl = []
    kl_ok = True
    for order in (1, 2):
        if depth >= order:
            ok, diag = em.check_kl_exact_sequence(module, order)
            kl_ok = kl_ok and ok
            kl.append({"order": order, "ok": ok, "diagnostics": diag})

    checks = {
        "graded_dims": graded_ok,
        "l0_scalar": l0_ok,
        "virasoro": virasoro_ok,
        "singular_necessity": necessity,
        "certificate_consistent": certificate_consistent,
        "kl_exact": kl_ok,
    }
    ok_all = all(v in (True, None) for v in checks.values())
    report = {
        "config": config.to_json_dict(),
        "dims": dims,
        "l0_eigenvalues": eigenvalues,
        "singular_findings": findings,
        "candidates": candidates,
        "kl": kl,
        "checks": checks,
        "ok": ok_all,
    }
    lines = [
        "crossvalidate %s%d, M = L(%s), kappa = %s, depth %d"
        % (algebra.series, algebra.rank,
           ", ".join(format_fraction(c) for c in hw.coords),
           format_scalar(kappa), depth),
        "graded dims: %s (match S(ad) (x) M: %s)" % (dims, graded_ok),
        "L0 eigenvalues by degree: %s (scalar blocks: %s)"
        % (", ".join(eigenvalues), l0_ok),
        "virasoro [L0, x eps^m] = -m x eps^m: %s" % virasoro_ok,
    ]
    if findings:
        lines.append("singular vectors found:")
        for fnd in findings:
            matched = fnd["matched_candidate"]
            lines.append(
                "  degree %d weight (%s) dim %d matched %s"
                % (fnd["degree"], ", ".join(fnd["weight"]), fnd["dimension"],
                   "none" if matched is None
                   else "mu=(%s) n=%d" % (
                       ", ".join(map(str, matched["mu"])), matched["n"]))
            )
    else:
        lines.append("singular vectors found: none")
    lines.append(
        "candidate degrees cover findings: %s"
        % ("not applicable" if necessity is None else necessity)
    )
    for entry in kl:
        lines.append(
            "KL exactness at order %d: %s" % (entry["order"], entry["ok"])
        )
    lines.append("all checks passed: %s" % ok_all)
    _emit(report, lines, config.fmt, out)
    if dump is not None:
        with open(dump, "w") as fh:
            json.dump(em.module_json_dict(module), fh, sort_keys=True, indent=2)
            fh.write("\n")
    return 0 if ok_all else 1


_COMMANDS = {
    "algebra": cmd_algebra,
    "symlevels": cmd_symlevels,
    "certify": cmd_certify,
    "crossvalidate": cmd_crossvalidate,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        config = _config_from_args(args)
        if args.command == "crossvalidate":
            return cmd_crossvalidate(config, sys.stdout,
                                     dump=getattr(args, "dump", None))
        return _COMMANDS[args.command](config, sys.stdout)
    except (ValueError, ZeroDivisionError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
