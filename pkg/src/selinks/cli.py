"""Command line driver and catalog serialization.

The only module with side effects.  Subcommands map onto the library:
``invariants``, ``cover``, ``certify``, ``moduli``, ``scan`` and
``ingest``.  Exit codes distinguish failure classes: 0 success, 1 usage
error, 2 integrity error (an exact invariant came out impossible), 3 I/O
error.  Catalog output is deterministic: byte-identical across runs and
across thread budgets, and the JSON form round-trips losslessly.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .errors import IntegrityError, UsageError
from .ke_cert import KeCertificate, bp_sufficient_ke, certify_cover
from .links import (
    WeightSystem,
    branched_cover,
    classify_case,
    normalize_cover,
    quasi_smooth_generic,
    torsion_hypothesis,
)
from .moduli import ModuliCount, moduli_count
from .survey import (
    EuclideanRow,
    FamilyRecord,
    IngestResult,
    ScanConfig,
    generate_mixed_canonical,
    generate_theorem2_family,
    ingest_weight_list,
    scan_euclidean_classification,
    scan_fermat_cy,
    scan_hyperbolic,
)
from .topology import TorsionOrder, genus, milnor_orlik_betti, torsion_order

__all__ = [
    "Invocation",
    "parse_invocation",
    "render_catalog",
    "parse_catalog_json",
    "run",
    "main",
]

CATALOG_SCHEMA = "selinks.catalog/1"

_SCAN_FAMILIES = ("euclidean", "theorem2", "fermat-cy", "hyperbolic", "mixed-canonical")

CSV_HEADER = (
    "family",
    "m",
    "k",
    "l_or_d",
    "weights",
    "degree",
    "link_dimension",
    "torsion",
    "genus",
    "moduli_complex",
    "moduli_real",
    "h0_degree",
    "h0_weights_sum",
    "fano",
    "necessary_klt",
    "bp_applicable",
    "bp_sufficient",
    "gc_assumed",
    "left_value",
    "right_bound",
    "limiting_witness",
    "paper_min_k",
    "literal_min_k",
)


@dataclass(frozen=True)
class Invocation:
    """One validated command line invocation."""

    subcommand: str
    options: dict
    output_format: str
    output_path: Optional[str]


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on errors; route them through the
    # usage-error channel (exit 1) instead
    def error(self, message: str):  # noqa: A003 - argparse API
        raise UsageError(message)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _int_range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected a range like 3..8, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed range bounds in {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"range must be ascending, got {text!r}")
    return lo, hi


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _default_threads() -> int:
    env = os.environ.get("SELINKS_THREADS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"SELINKS_THREADS must be an integer, got {env!r}")
    return os.cpu_count() or 1


def _build_parser() -> _Parser:
    parser = _Parser(prog="selinks", description=__doc__)
    parser.add_argument("--version", action="version", version=f"selinks {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_output_flags(p: _Parser, formats=("table", "json")) -> None:
        p.add_argument("--format", choices=formats, default="table")
        p.add_argument("--out", default=None, help="write output to a file")

    def add_system_flags(p: _Parser) -> None:
        p.add_argument("--weights", type=_int_list, required=True)
        p.add_argument("--degree", type=_positive_int, required=True)

    p = sub.add_parser("invariants", help="invariants of a base link")
    add_system_flags(p)
    add_output_flags(p)

    p = sub.add_parser("cover", help="branched-cover data")
    p.add_argument("--k", type=int, required=True)
    add_system_flags(p)
    add_output_flags(p)

    p = sub.add_parser("certify", help="sufficiency test on exponents")
    p.add_argument("--exponents", type=_int_list, required=True)
    add_output_flags(p)

    p = sub.add_parser("moduli", help="parameter count of a cover system")
    add_system_flags(p)
    add_output_flags(p)

    p = sub.add_parser("scan", help="generate a family catalog")
    p.add_argument("family", choices=_SCAN_FAMILIES)
    p.add_argument("--weight-bound", type=_positive_int, default=60)
    p.add_argument("--k-bound", type=_positive_int, default=60)
    p.add_argument("--m", type=_int_range, default=(3, 8), metavar="A..B")
    p.add_argument("--threads", type=_positive_int, default=None)
    p.add_argument("--expand-torsion", action="store_true")
    add_output_flags(p, formats=("table", "json", "csv"))

    p = sub.add_parser("ingest", help="certify a user-supplied weight list")
    p.add_argument("file")
    p.add_argument("--k-range", type=_int_range, default=(2, 60), metavar="A..B")
    p.add_argument("--threads", type=_positive_int, default=None)
    p.add_argument("--expand-torsion", action="store_true")
    add_output_flags(p, formats=("table", "json", "csv"))

    return parser


def parse_invocation(argv: Sequence[str]) -> Invocation:
    """Parse and validate argv into an Invocation; UsageError on any defect."""
    ns = _build_parser().parse_args(list(argv))
    options = vars(ns).copy()
    command = options.pop("command")
    if command == "cover" and ns.k < 2:
        raise UsageError(f"branch order k must be at least 2, got {ns.k}")
    return Invocation(
        subcommand=command,
        options=options,
        output_format=options.get("format", "table"),
        output_path=options.get("out"),
    )


# ---------------------------------------------------------------------------
# serialization


def _frac_json(value: Fraction) -> dict:
    return {"num": value.numerator, "den": value.denominator}


def _frac_from_json(obj: dict) -> Fraction:
    return Fraction(obj["num"], obj["den"])


def _frac_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def record_to_json(rec: FamilyRecord, expand_torsion: bool = False) -> dict:
    torsion: dict = {"base": rec.torsion.base, "exponent": rec.torsion.exponent}
    if expand_torsion:
        torsion["decimal"] = str(rec.torsion.order())
    cert = rec.certificate
    return {
        "family": rec.family_tag,
        "m": rec.m,
        "k": rec.k,
        "l_or_d": rec.l_or_d,
        "base": {"weights": list(rec.base.weights), "degree": rec.base.degree},
        "link_dimension": rec.link_dimension,
        "torsion": torsion,
        "genus": rec.genus,
        "moduli": {
            "complex": rec.moduli.complex_dim,
            "real": rec.moduli.real_dim,
            "h0_degree": rec.moduli.h0_degree,
            "h0_weights_sum": rec.moduli.h0_weights_sum,
        },
        "certificate": {
            "fano": cert.fano,
            "necessary_klt": cert.necessary_klt,
            "bp_applicable": cert.bp_applicable,
            "bp_sufficient": cert.bp_sufficient,
            "gc_assumed": cert.gc_assumed,
            "left_value": _frac_json(cert.left_value),
            "right_bound": _frac_json(cert.right_bound),
            "limiting_witness": cert.limiting_witness,
        },
        "paper_min_k": rec.paper_min_k,
        "literal_min_k": rec.literal_min_k,
    }


def record_from_json(obj: dict) -> FamilyRecord:
    cert = obj["certificate"]
    moduli = obj["moduli"]
    return FamilyRecord(
        family_tag=obj["family"],
        m=obj["m"],
        k=obj["k"],
        l_or_d=obj["l_or_d"],
        base=WeightSystem(tuple(obj["base"]["weights"]), obj["base"]["degree"]),
        link_dimension=obj["link_dimension"],
        torsion=TorsionOrder(obj["torsion"]["base"], obj["torsion"]["exponent"]),
        genus=obj["genus"],
        moduli=ModuliCount(
            complex_dim=moduli["complex"],
            real_dim=moduli["real"],
            h0_degree=moduli["h0_degree"],
            h0_weights_sum=moduli["h0_weights_sum"],
        ),
        certificate=KeCertificate(
            fano=cert["fano"],
            necessary_klt=cert["necessary_klt"],
            bp_applicable=cert["bp_applicable"],
            bp_sufficient=cert["bp_sufficient"],
            gc_assumed=cert["gc_assumed"],
            left_value=_frac_from_json(cert["left_value"]),
            right_bound=_frac_from_json(cert["right_bound"]),
            limiting_witness=cert["limiting_witness"],
        ),
        paper_min_k=obj["paper_min_k"],
        literal_min_k=obj["literal_min_k"],
    )


def _catalog_meta(cfg: Optional[ScanConfig], expand_torsion: bool, count: int) -> dict:
    meta = {
        "schema": CATALOG_SCHEMA,
        "tool": {"name": "selinks", "version": __version__},
        "assumptions": [
            "genericity condition on perturbations assumed, not verified",
            "sufficiency verdicts follow the literal displayed inequality",
        ],
        "expand_torsion": expand_torsion,
        "count": count,
    }
    if cfg is not None:
        meta["bounds"] = {
            "weight_bound": cfg.weight_bound,
            "k_bound": cfg.k_bound,
            "m_range": list(cfg.m_range),
            "k_min": cfg.k_min,
        }
    return meta


def render_catalog(
    records: Sequence[FamilyRecord],
    fmt: str = "json",
    cfg: Optional[ScanConfig] = None,
    expand_torsion: bool = False,
) -> str:
    """Serialize records (already in canonical order) to table, csv or json."""
    if fmt == "json":
        payload = {
            "meta": _catalog_meta(cfg, expand_torsion, len(records)),
            "records": [record_to_json(r, expand_torsion) for r in records],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for rec in records:
            cert = rec.certificate
            torsion = str(rec.torsion.order()) if expand_torsion else str(rec.torsion)
            writer.writerow(
                (
                    rec.family_tag,
                    rec.m,
                    rec.k,
                    rec.l_or_d,
                    " ".join(str(w) for w in rec.base.weights),
                    rec.base.degree,
                    rec.link_dimension,
                    torsion,
                    "" if rec.genus is None else rec.genus,
                    rec.moduli.complex_dim,
                    rec.moduli.real_dim,
                    rec.moduli.h0_degree,
                    rec.moduli.h0_weights_sum,
                    cert.fano,
                    cert.necessary_klt,
                    cert.bp_applicable,
                    cert.bp_sufficient,
                    cert.gc_assumed,
                    _frac_str(cert.left_value),
                    _frac_str(cert.right_bound),
                    cert.limiting_witness,
                    "" if rec.paper_min_k is None else rec.paper_min_k,
                    "" if rec.literal_min_k is None else rec.literal_min_k,
                )
            )
        return buf.getvalue()
    if fmt == "table":
        head = (
            f"{'family':<16}{'dim':>4}{'m':>3}{'d/l':>5}{'k':>4}  "
            f"{'base':<18}{'torsion':<12}{'g':>3}{'mu':>5}{'real':>5}  "
            f"{'fano':<5}{'klt':<5}{'bp':<5}{'cert':<5}{'k_paper':>8}{'k_lit':>6}"
        )
        lines = [head, "-" * len(head)]
        for rec in records:
            cert = rec.certificate
            torsion = str(rec.torsion.order()) if expand_torsion else str(rec.torsion)
            lines.append(
                f"{rec.family_tag:<16}{rec.link_dimension:>4}{rec.m:>3}"
                f"{rec.l_or_d:>5}{rec.k:>4}  {str(rec.base):<18}{torsion:<12}"
                f"{'-' if rec.genus is None else rec.genus:>3}"
                f"{rec.moduli.complex_dim:>5}{rec.moduli.real_dim:>5}  "
                f"{str(cert.fano):<5}{str(cert.necessary_klt):<5}"
                f"{str(cert.bp_applicable):<5}{str(cert.bp_sufficient):<5}"
                f"{'-' if rec.paper_min_k is None else rec.paper_min_k:>8}"
                f"{'-' if rec.literal_min_k is None else rec.literal_min_k:>6}"
            )
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown catalog format {fmt!r}")


def parse_catalog_json(text: str) -> tuple[dict, list[FamilyRecord]]:
    """Inverse of the JSON rendering: (meta, records), exact."""
    payload = json.loads(text)
    return payload["meta"], [record_from_json(obj) for obj in payload["records"]]


def render_euclidean_rows(rows: Sequence[EuclideanRow], fmt: str) -> str:
    if fmt == "json":
        payload = {
            "meta": {"schema": "selinks.euclidean/1", "count": len(rows)},
            "rows": [
                {
                    "weights": list(row.system.weights),
                    "degree": row.system.degree,
                    "monomials": row.monomials,
                }
                for row in rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("weights", "degree", "monomials"))
        for row in rows:
            writer.writerow(
                (" ".join(str(w) for w in row.system.weights), row.system.degree, row.monomials)
            )
        return buf.getvalue()
    if fmt == "table":
        lines = [f"{'weights':<12}{'d':>4}{'n':>4}"]
        for row in rows:
            lines.append(
                f"{','.join(str(w) for w in row.system.weights):<12}"
                f"{row.system.degree:>4}{row.monomials:>4}"
            )
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# subcommand handlers


def _render_scalar(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    width = max(len(key) for key in payload)
    return "\n".join(f"{key:<{width}}  {value}" for key, value in payload.items()) + "\n"


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _run_invariants(inv: Invocation) -> str:
    ws = WeightSystem(inv.options["weights"], inv.options["degree"])
    if not quasi_smooth_generic(ws):
        raise IntegrityError(
            f"{ws} has no quasi-smooth member; invariants are not defined "
            "for this weight class"
        )
    payload = {
        "system": str(ws),
        "case": classify_case(ws).value,
        "quasi_smooth": True,
        "betti": milnor_orlik_betti(ws),
    }
    if ws.m == 3:
        payload["genus"] = genus(ws)
    return _render_scalar(payload, inv.output_format)


def _run_cover(inv: Invocation) -> str:
    k = inv.options["k"]
    base = WeightSystem(inv.options["weights"], inv.options["degree"])
    cov = branched_cover(k, base)
    payload = {
        "base": str(base),
        "k": k,
        "cover": str(cov.cover),
        "coprime": cov.coprime,
        "bp_exponents": (
            None if cov.bp_exponents is None else ",".join(map(str, cov.bp_exponents))
        ),
        "torsion_hypothesis": torsion_hypothesis(k, base),
    }
    if payload["torsion_hypothesis"]:
        payload["torsion"] = str(torsion_order(k, base))
        if not cov.coprime:
            _, reduced = normalize_cover(k, base)
            payload["normalized_base"] = str(reduced)
    return _render_scalar(payload, inv.output_format)


def _run_certify(inv: Invocation) -> str:
    result = bp_sufficient_ke(inv.options["exponents"])
    data = result.data
    payload = {
        "exponents": ",".join(map(str, data.exponents)),
        "reciprocal_sum": _frac_str(data.reciprocal_sum),
        "bound": _frac_str(result.bound),
        "cofactor_lcms": ",".join(map(str, data.cofactor_lcms)),
        "gcds": ",".join(map(str, data.gcds)),
        "limiting_witness": result.limiting_witness,
        "verdict": result.verdict,
    }
    return _render_scalar(payload, inv.output_format)


def _run_moduli(inv: Invocation) -> str:
    ws = WeightSystem(inv.options["weights"], inv.options["degree"])
    mc = moduli_count(ws)
    payload = {
        "system": str(ws),
        "h0_degree": mc.h0_degree,
        "h0_weights_sum": mc.h0_weights_sum,
        "complex_dim": mc.complex_dim,
        "real_dim": mc.real_dim,
    }
    return _render_scalar(payload, inv.output_format)


def _scan_config(options: dict) -> ScanConfig:
    threads = options.get("threads")
    if threads is None:
        threads = _default_threads()
    k_range = options.get("k_range")
    k_min, k_bound = (2, options.get("k_bound", 60))
    if k_range is not None:
        k_min, k_bound = k_range
        if k_min < 2:
            raise UsageError(f"k range must start at 2 or above, got {k_min}")
    return ScanConfig(
        weight_bound=options.get("weight_bound", 60),
        k_bound=k_bound,
        m_range=options.get("m", (3, 8)),
        k_min=k_min,
        thread_budget=threads,
    )


def _run_scan(inv: Invocation) -> str:
    cfg = _scan_config(inv.options)
    family = inv.options["family"]
    if family == "euclidean":
        rows = scan_euclidean_classification(cfg)
        return render_euclidean_rows(rows, inv.output_format)
    generator = {
        "theorem2": generate_theorem2_family,
        "fermat-cy": scan_fermat_cy,
        "hyperbolic": scan_hyperbolic,
        "mixed-canonical": generate_mixed_canonical,
    }[family]
    records = generator(cfg)
    return render_catalog(
        records, inv.output_format, cfg, inv.options.get("expand_torsion", False)
    )


def _run_ingest(inv: Invocation) -> str:
    with open(inv.options["file"], "r", encoding="utf-8") as fh:
        lines = fh.readlines()
    cfg = _scan_config(inv.options)
    result: IngestResult = ingest_weight_list(lines, cfg)
    for message in result.errors:
        print(f"ingest: {message}", file=sys.stderr)
    return render_catalog(
        result.records, inv.output_format, cfg, inv.options.get("expand_torsion", False)
    )


_HANDLERS = {
    "invariants": _run_invariants,
    "cover": _run_cover,
    "certify": _run_certify,
    "moduli": _run_moduli,
    "scan": _run_scan,
    "ingest": _run_ingest,
}


def run(invocation: Invocation) -> int:
    """Dispatch a validated invocation; raises on failure (see `main`)."""
    text = _HANDLERS[invocation.subcommand](invocation)
    _write_output(text, invocation.output_path)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Console entry point mapping the error taxonomy onto exit codes."""
    if argv is None:
        argv = sys.argv[1:]
    try:
        return run(parse_invocation(argv))
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except IntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
