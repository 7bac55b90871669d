"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 verification failure, 3 cap
exceeded.
"""

from __future__ import annotations

import json
import os
import sys

import click

from .affine import ClosureCapExceeded
from .coset import CosetLimitExceeded
from .exchange import ExchangeMatrix, InvalidMatrixError, diagram_view, mutate
from .manifold import (
    manifold_invariants,
    report_to_dict,
    certificate_to_dict,
    verify_torsion_free,
)
from .mutation_class import (
    AffineType,
    FiniteType,
    MutationInfinite,
    OtherMutationFinite,
    classify_mutation_type,
    mutation_class,
)
from .presentation import build_presentation, emit_presentation, parse_presentation

EXIT_INVALID = 1
EXIT_VERIFICATION = 2
EXIT_CAP = 3


def _caps() -> dict[str, int]:
    """Overrides from COXMUT_CAPS, e.g. 'max_class=50000,max_cosets=2000000'."""
    out = {}
    raw = os.environ.get("COXMUT_CAPS", "")
    for piece in raw.split(","):
        if "=" in piece:
            key, _, val = piece.partition("=")
            try:
                out[key.strip()] = int(val)
            except ValueError:
                pass
    return out


def _load_matrix(path: str) -> ExchangeMatrix:
    try:
        with open(path) as fh:
            return ExchangeMatrix.from_json(fh.read())
    except (OSError, InvalidMatrixError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)


@click.group()
def main():
    """Mutation toolkit for diagrams, Coxeter presentations and the
    associated hyperbolic/euclidean quotient invariants."""


@main.command(name="mutate")
@click.option("-i", "input_path", required=True, type=click.Path())
@click.option("-k", "vertex", required=True, type=int)
@click.option("-o", "output_path", type=click.Path(), default=None)
def mutate_cmd(input_path, vertex, output_path):
    """Mutate the matrix at vertex K (0-based)."""
    m = _load_matrix(input_path)
    try:
        out = mutate(m, vertex)
    except IndexError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)
    text = out.to_json()
    if output_path:
        with open(output_path, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


@main.command(name="class")
@click.option("-i", "input_path", required=True, type=click.Path())
@click.option("--max", "max_size", type=int, default=None)
def class_cmd(input_path, max_size):
    """Enumerate the mutation class (canonical representatives)."""
    m = _load_matrix(input_path)
    cap = max_size or _caps().get("max_class", 100_000)
    enum = mutation_class(m, max_size=cap, max_weight=None)
    for member in enum.members:
        click.echo(json.dumps({"witness": list(member.witness), "b": [list(r) for r in member.matrix.b]}))
    if enum.exceeded is not None:
        click.echo(f"error: cap exceeded ({enum.exceeded.cap})", err=True)
        sys.exit(EXIT_CAP)


@main.command()
@click.option("-i", "input_path", required=True, type=click.Path())
def classify(input_path):
    """Mutation-type classification."""
    m = _load_matrix(input_path)
    try:
        t = classify_mutation_type(m, max_size=_caps().get("max_class", 100_000))
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)
    if isinstance(t, FiniteType):
        click.echo(f"FiniteType {t.label} witness {list(t.witness)}")
    elif isinstance(t, AffineType):
        click.echo(f"AffineType {t.label} witness {list(t.witness)}")
    elif isinstance(t, OtherMutationFinite):
        click.echo(f"OtherMutationFinite class_size {t.class_size}")
    elif isinstance(t, MutationInfinite):
        click.echo(f"MutationInfinite certificate {t.certificate.cap} witness {list(t.certificate.witness)}")


@main.command()
@click.option("-i", "input_path", required=True, type=click.Path())
@click.option("--extra", "extra_path", type=click.Path(), default=None)
def present(input_path, extra_path):
    """Emit the presentation in the text grammar."""
    m = _load_matrix(input_path)
    extras = ()
    if extra_path:
        with open(extra_path) as fh:
            parsed = parse_presentation(fh.read())
        extras = parsed.extra_relators
    try:
        pres = build_presentation(diagram_view(m), extra=extras)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)
    click.echo(emit_presentation(pres), nl=False)


@main.command()
@click.option("-i", "input_path", required=True, type=click.Path())
@click.option("--json", "as_json", is_flag=True, default=False)
def analyze(input_path, as_json):
    """Full manifold report."""
    m = _load_matrix(input_path)
    try:
        report = manifold_invariants(m)
    except (CosetLimitExceeded, ClosureCapExceeded) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CAP)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)
    payload = report_to_dict(report)
    if as_json:
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        click.echo(f"geometric type: {payload['geometric_type']} (dimension {payload['dimension']})")
        click.echo(f"Weyl group: {payload['weyl_label']} of order {payload['group_order']}")
        click.echo(f"chi_orb: {report.chi_orb}  chi: {payload['chi']}")
        if payload["cusps"] is not None:
            click.echo(f"cusps: {payload['cusps']['total']}  compact: {payload['compact']}")
        if payload["volume"] is not None:
            v = payload["volume"]
            click.echo(f"volume: {v['coeff_num']}/{v['coeff_den']} * pi^{v['pi_power']}")
        click.echo(f"torsion_free: {payload['torsion']['torsion_free']}")


@main.command()
@click.option("-i", "input_path", required=True, type=click.Path())
def verify(input_path):
    """Torsion certificate; exit 0 iff torsion-free."""
    m = _load_matrix(input_path)
    try:
        cert = verify_torsion_free(m)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)
    click.echo(json.dumps(certificate_to_dict(cert), sort_keys=True))
    if cert.torsion_free is not True:
        sys.exit(EXIT_VERIFICATION)


@main.command()
@click.option("--check", "which", required=True, type=click.Choice(["1", "2"]))
def tables(which):
    """Run the Table 1 or Table 2 acceptance suite."""
    from .tables import run_table

    results = run_table(int(which))
    failed = False
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        row = res.row
        extras = "" if res.ok else "  [" + "; ".join(res.failures) + "]"
        click.echo(
            f"{status} {row.label}: dim {row.dimension}, |W| {row.order}, "
            f"cusps {res.report.cusps.total if res.report.cusps else 'compact'}, chi {res.report.chi}{extras}"
        )
        failed = failed or not res.ok
    if failed:
        sys.exit(EXIT_VERIFICATION)


@main.command()
@click.option("--port", type=int, default=8000)
def serve(port):
    """Start the HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host="127.0.0.1", port=port)


if __name__ == "__main__":
    main()
