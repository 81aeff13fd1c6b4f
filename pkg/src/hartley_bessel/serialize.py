"""File formats: sampled/spectral CSV, certification reports, solver reports.

Sampled-function CSV starts with a header line
``# alpha=<a> radius=<R> n=<N> scheme=<s>`` (plus ``kind=spectral`` for
transform output) followed by ``x,value`` rows matching the grid nodes
exactly.  All numbers are written with 17 significant digits so doubles
round-trip; fixed inputs therefore produce byte-identical files.
"""

import io
import json
import math

import numpy as np

from .errors import GridMismatch, InvalidConfig


def _fmt(x):
    if x is None:
        return ""
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return f"{x:.17g}"


def format_sampled(f, kind="sampled"):
    """Render a sampled or spectral function as CSV text."""
    grid = f.grid if hasattr(f, "grid") else f.freq_grid
    header = (
        f"# alpha={_fmt(grid.alpha)} radius={_fmt(grid.radius)} "
        f"n={grid.size} scheme={grid.scheme}"
    )
    if kind == "spectral":
        header += " kind=spectral"
    lines = [header]
    for x, v in zip(grid.nodes, f.values):
        lines.append(f"{_fmt(x)},{_fmt(v)}")
    return "\n".join(lines) + "\n"


def write_sampled(path, f, kind="sampled"):
    with open(path, "w") as fh:
        fh.write(format_sampled(f, kind=kind))


def parse_sampled(text):
    """Parse sampled-function CSV into (header dict, nodes, values)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise InvalidConfig("missing header line starting with '#'")
    header = {}
    for token in lines[0][1:].split():
        if "=" not in token:
            raise InvalidConfig(f"malformed header token {token!r}")
        key, val = token.split("=", 1)
        header[key] = val
    for required in ("alpha", "radius", "n", "scheme"):
        if required not in header:
            raise InvalidConfig(f"header is missing field {required!r}")
    xs, vs = [], []
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != 2:
            raise InvalidConfig(f"malformed data row {ln!r}")
        xs.append(float(parts[0]))
        vs.append(float(parts[1]))
    if len(xs) != int(header["n"]):
        raise InvalidConfig(
            f"header declares n={header['n']} but file has {len(xs)} rows"
        )
    return header, np.asarray(xs), np.asarray(vs)


def read_sampled(path, grid):
    """Read a sampled function bound to an existing grid.

    The node column must match the grid exactly (17-digit output makes the
    comparison bitwise); anything else is rejected.
    """
    from .quadrature import SampledFunction

    with open(path) as fh:
        header, xs, vs = parse_sampled(fh.read())
    if xs.size != grid.size or not np.array_equal(xs, grid.nodes):
        raise GridMismatch("file nodes do not match the target grid")
    return SampledFunction(grid, vs), header


REPORT_COLUMNS = (
    "trial", "p", "q", "r", "constant", "lhs", "rhs",
    "ratio", "prior_ratio", "witness_ids", "pass",
)


def format_report_csv(rows):
    """Certification CSV: one row per trial plus a max-ratio summary row."""
    out = io.StringIO()
    out.write(",".join(REPORT_COLUMNS) + "\n")
    max_ratio = 0.0
    for i, rep in enumerate(rows):
        max_ratio = max(max_ratio, rep.ratio)
        out.write(
            ",".join(
                [
                    str(i),
                    _fmt(rep.p),
                    _fmt(rep.q),
                    _fmt(rep.r),
                    _fmt(rep.constant),
                    _fmt(rep.lhs),
                    _fmt(rep.rhs),
                    _fmt(rep.ratio),
                    _fmt(rep.prior_ratio),
                    ";".join(rep.witness_ids),
                    "1" if rep.passed else "0",
                ]
            )
            + "\n"
        )
    out.write(f"summary,,,,,,,{_fmt(max_ratio)},,,"
              f"{'1' if all(r.passed for r in rows) else '0'}\n")
    return out.getvalue()


def report_to_dict(rep):
    return {
        "p": rep.p,
        "q": rep.q,
        "r": rep.r,
        "constant": rep.constant,
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "ratio": rep.ratio,
        "prior_ratio": rep.prior_ratio,
        "witness_ids": list(rep.witness_ids),
        "pass": rep.passed,
    }


def format_report_json(rows, metadata):
    """JSON mirror of the certification CSV with run metadata."""
    doc = {
        "metadata": metadata,
        "trials": [report_to_dict(r) for r in rows],
        "max_ratio": max((r.ratio for r in rows), default=0.0),
        "all_pass": all(r.passed for r in rows),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def solver_report_to_dict(report, metadata=None):
    doc = {
        "solvable": report.solvable,
        "min_denominator": report.min_denominator,
        "denom_threshold": report.denom_threshold,
        "near_singular_warning": report.near_singular_warning,
        "residual_l1": report.residual_l1,
        "bound_lhs": report.bound_lhs,
        "bound_rhs": report.bound_rhs,
        "bound_checks": dict(report.bound_checks),
    }
    if metadata is not None:
        doc["metadata"] = metadata
    return doc


def format_solver_report_json(report, metadata=None):
    return json.dumps(
        solver_report_to_dict(report, metadata), indent=2, sort_keys=True
    ) + "\n"
