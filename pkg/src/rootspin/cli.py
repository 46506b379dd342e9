"""Command-line interface: roots, analyze, count, certify, oracle, table.

All JSON goes to stdout with sorted keys so that repeated runs are
byte-identical apart from the ``timings`` block; diagnostics go to stderr.
Exit codes: 0 success, 1 internal invariant violation, 2 invalid input,
3 resource limit.
"""

from __future__ import annotations

import json
import sys
import time

import click

from . import _kernels, certs, sigsum
from .errors import InternalCheckError, InvalidRankError, ResourceLimitError
from .rootsys import FamilyRank, format_root_list, positive_roots
from .spinor import invariant_dimension

EXIT_INTERNAL = 1
EXIT_INVALID = 2
EXIT_RESOURCE = 3

_AUTO_BRUTE_MAX = 20  # auto method: brute force below, meet-in-the-middle above

TABLE_IDS = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 7)]
    + [("C", n) for n in range(3, 9)]
    + [("D", n) for n in range(4, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


def _family_rank(family: str, rank: int) -> FamilyRank:
    try:
        return FamilyRank(family.strip().upper(), rank)
    except InvalidRankError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)


def _emit(obj) -> None:
    click.echo(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _threads_option(fn):
    def _apply(ctx, param, value):
        if value is not None:
            if value < 1:
                raise click.BadParameter("must be a positive integer")
            _kernels.set_threads(value)
        return value

    return click.option(
        "--threads",
        type=int,
        default=None,
        envvar="ROOTSPIN_THREADS",
        callback=_apply,
        expose_value=False,
        help="Worker threads for the kernels; never changes any output value.",
    )(fn)


def _certificate_json(cert: certs.CertificateFamily | None):
    if cert is None:
        return {"available": False}
    return {
        "available": True,
        "block_count": len(cert.blocks),
        "lower_bound": cert.lower_bound,
        "blocks": [
            [{"root_index": i, "sign": s} for i, s in block] for block in cert.blocks
        ],
    }


def _count_exact(system, method: str, max_r: int, explicit_max: bool) -> sigsum.CountResult:
    if method == "brute":
        limit = max_r if explicit_max else min(max_r, sigsum.DEFAULT_BRUTE_LIMIT)
        return sigsum.count_bruteforce(system, limit_r=limit)
    if method == "mitm":
        return sigsum.count_mitm(system, limit_r=max_r)
    if system.r <= min(_AUTO_BRUTE_MAX, max_r):
        return sigsum.count_bruteforce(system, limit_r=max_r)
    return sigsum.count_mitm(system, limit_r=max_r)


def build_report(fr: FamilyRank, method: str = "auto", max_r: int = 48,
                 explicit_max: bool = False) -> tuple[dict, int]:
    """Assemble the analysis report; returns (report, exit_code)."""
    t_start = time.perf_counter()
    system = positive_roots(fr)
    obstruction = sigsum.obstruction_2L(system)
    cert = certs.certificate(fr)

    # Existence must be doubly certified; a mismatch is a hard error.
    if obstruction.passed and cert is None:
        raise InternalCheckError(f"{fr}: obstruction passed but no certificate exists")
    if not obstruction.passed and cert is not None:
        raise InternalCheckError(f"{fr}: certificate exists but the obstruction failed")
    exists = cert is not None

    report = {
        "family": fr.family,
        "rank": fr.rank,
        "r": system.r,
        "ambient_dim": system.ambient_dim,
        "denominator": system.denominator,
        "exists": exists,
        "obstruction": "pass" if obstruction.passed else "fail",
        "certificate": _certificate_json(cert),
    }
    timings: dict[str, float] = {}
    exit_code = 0

    if not exists:
        report["count"] = {"zero": True}
        report["method"] = sigsum.METHOD_OBSTRUCTION
    else:
        bound = certs.lower_bound(fr)
        wants_exact = method != "auto" or system.r <= max_r
        result = None
        if wants_exact:
            try:
                result = _count_exact(system, method, max_r, explicit_max)
            except ResourceLimitError as exc:
                click.echo(f"resource limit: {exc}", err=True)
                exit_code = EXIT_RESOURCE
        if result is not None:
            if result.value < bound or result.value == 0:
                raise InternalCheckError(
                    f"{fr}: exact count {result.value} contradicts lower bound {bound}"
                )
            report["count"] = {"exact": result.value}
            report["method"] = result.method
            timings["count_ms"] = result.elapsed * 1000.0
        else:
            # Partial report: existence plus the published bound only.
            report["count"] = {"lower_bound": bound}
            report["method"] = sigsum.METHOD_CERTIFICATE

    timings["total_ms"] = (time.perf_counter() - t_start) * 1000.0
    report["timings"] = {k: round(v, 3) for k, v in sorted(timings.items())}
    return report, exit_code


def _print_report_text(report: dict) -> None:
    count = report["count"]
    if "exact" in count:
        shown = f"exact {count['exact']}"
    elif "lower_bound" in count:
        shown = f"at least {count['lower_bound']}"
    else:
        shown = "0"
    click.echo(f"system       {report['family']}{report['rank']}")
    click.echo(f"roots        {report['r']} in dimension {report['ambient_dim']}"
               f" (denominator {report['denominator']})")
    click.echo(f"obstruction  {report['obstruction']}")
    click.echo(f"exists       {'yes' if report['exists'] else 'no'}")
    click.echo(f"count        {shown}")
    click.echo(f"method       {report['method']}")
    click.echo(f"time         {report['timings']['total_ms']} ms")


@click.group()
@click.version_option(package_name="rootspin")
def main() -> None:
    """Exact invariant-spinor dimensions from positive root combinatorics."""


@main.command("roots")
@click.argument("family")
@click.argument("rank", type=int)
def cmd_roots(family: str, rank: int) -> None:
    """Print the ordered root list in the plain text interchange format."""
    fr = _family_rank(family, rank)
    click.echo(format_root_list(positive_roots(fr)), nl=False)


@main.command("analyze")
@click.argument("family")
@click.argument("rank", type=int)
@click.option("--method", type=click.Choice(["auto", "brute", "mitm"]), default="auto")
@click.option("--max-r", "max_r", type=int, default=None,
              help="Largest r for which exact counting is attempted (default 48).")
@click.option("--json", "as_json", is_flag=True)
@_threads_option
def cmd_analyze(family: str, rank: int, method: str, max_r: int | None, as_json: bool) -> None:
    """Full existence/count/certificate report for one system."""
    fr = _family_rank(family, rank)
    try:
        report, exit_code = build_report(
            fr, method=method, max_r=max_r or 48, explicit_max=max_r is not None
        )
    except InternalCheckError as exc:
        click.echo(f"internal error: {exc}", err=True)
        sys.exit(EXIT_INTERNAL)
    if as_json:
        _emit(report)
    else:
        _print_report_text(report)
    sys.exit(exit_code)


@main.command("count")
@click.argument("family")
@click.argument("rank", type=int)
@click.option("--method", type=click.Choice(["auto", "brute", "mitm"]), default="auto")
@click.option("--max-r", "max_r", type=int, default=None)
@click.option("--json", "as_json", is_flag=True)
@_threads_option
def cmd_count(family: str, rank: int, method: str, max_r: int | None, as_json: bool) -> None:
    """Exact count of zero signed sums (no existence shortcuts)."""
    fr = _family_rank(family, rank)
    system = positive_roots(fr)
    try:
        result = _count_exact(system, method, max_r or 48, max_r is not None)
    except ResourceLimitError as exc:
        click.echo(f"resource limit: {exc}", err=True)
        sys.exit(EXIT_RESOURCE)
    if as_json:
        _emit({
            "family": fr.family,
            "rank": fr.rank,
            "r": system.r,
            "count": {"exact": result.value},
            "method": result.method,
            "timings": {"count_ms": round(result.elapsed * 1000.0, 3)},
        })
    else:
        click.echo(f"count({fr}) = {result.value} [{result.method}, "
                   f"{result.elapsed * 1000.0:.3f} ms]")


@main.command("certify")
@click.argument("family")
@click.argument("rank", type=int)
def cmd_certify(family: str, rank: int) -> None:
    """Emit the verified block certificate, or available:false."""
    fr = _family_rank(family, rank)
    try:
        cert = certs.certificate(fr)
    except InternalCheckError as exc:
        click.echo(f"internal error: {exc}", err=True)
        sys.exit(EXIT_INTERNAL)
    _emit(_certificate_json(cert))


@main.command("oracle")
@click.argument("family")
@click.argument("rank", type=int)
@click.option("--max-r", "max_r", type=int, default=14)
@_threads_option
def cmd_oracle(family: str, rank: int, max_r: int) -> None:
    """Invariant dimension through the exterior-algebra model."""
    fr = _family_rank(family, rank)
    system = positive_roots(fr)
    try:
        dim = invariant_dimension(system, limit_r=max_r)
    except ResourceLimitError as exc:
        click.echo(f"resource limit: {exc}", err=True)
        sys.exit(EXIT_RESOURCE)
    _emit({"dimension": dim})


@main.command("table")
@click.option("--max-r", "max_r", type=int, default=None)
@click.option("--json", "as_json", is_flag=True)
@_threads_option
def cmd_table(max_r: int | None, as_json: bool) -> None:
    """Reports for the whole catalogue of systems."""
    reports = []
    worst_exit = 0
    for family, rank in TABLE_IDS:
        fr = FamilyRank(family, rank)
        try:
            report, exit_code = build_report(
                fr, max_r=max_r or 48, explicit_max=max_r is not None
            )
        except InternalCheckError as exc:
            click.echo(f"internal error: {exc}", err=True)
            sys.exit(EXIT_INTERNAL)
        worst_exit = max(worst_exit, exit_code)
        reports.append(report)
    if as_json:
        _emit(reports)
    else:
        header = f"{'system':<8}{'r':>5}  {'exists':<8}{'obstruction':<13}{'count':<22}method"
        click.echo(header)
        click.echo("-" * len(header))
        for rep in reports:
            count = rep["count"]
            if "exact" in count:
                shown = f"= {count['exact']}"
            elif "lower_bound" in count:
                shown = f">= {count['lower_bound']}"
            else:
                shown = "0"
            click.echo(
                f"{rep['family'] + str(rep['rank']):<8}{rep['r']:>5}  "
                f"{'yes' if rep['exists'] else 'no':<8}{rep['obstruction']:<13}"
                f"{shown:<22}{rep['method']}"
            )
    sys.exit(worst_exit)


if __name__ == "__main__":
    main()
