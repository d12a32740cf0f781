"""Command-line interface.

Exit codes: 0 success, 1 verification failed, 2 bad input, 3 negative verdict
on a witness request, 4 exactness refusal.
"""

import csv
import io
import sys
from pathlib import Path

import click

from . import documents as docs
from .errors import AdRealError, ExactnessRefusal, NoWitness, ParseError
from .partitions import ATLAS_HEADER, DEFAULT_BOUND, atlas_rows
from .reality import classify
from .scalars import parse_scalar
from .spectral import jordan_form
from .witness import FLAG_NAMES, build_witness, verify

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_INPUT, EXIT_NEGATIVE, EXIT_EXACTNESS = 0, 1, 2, 3, 4


def _read(source):
    if source == "-":
        return docs.load_text(sys.stdin.read())
    if source.lstrip().startswith("{"):
        return docs.load_text(source)
    try:
        return docs.load_text(Path(source).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc}") from exc


def _hints(text):
    if not text:
        return None
    return [parse_scalar(h, "C") for h in text.split(",") if h.strip()]


def _fail(code, message):
    click.echo(message, err=True)
    sys.exit(code)


def _guard(fn):
    """Map library errors to exit codes."""
    try:
        return fn()
    except NoWitness as exc:
        click.echo(docs.dumps({"reason": str(exc.reason), "message": str(exc)}), nl=False)
        sys.exit(EXIT_NEGATIVE)
    except ExactnessRefusal as exc:
        _fail(EXIT_EXACTNESS, f"exactness refusal: {exc}")
    except AdRealError as exc:
        _fail(EXIT_INPUT, f"error: {exc}")


def _jordan(doc, field, hint):
    X, jd = docs.load_input(doc, field)
    return X, jd or jordan_form(X, hint)


def _report_table(report):
    lines = [f"field         {report.field}",
             f"n             {report.n}",
             f"real          {str(report.real).lower()}",
             f"stronglyReal  {str(report.strongly_real).lower()}",
             f"reason        {report.reason}"]
    for s in report.spectrum:
        parts = ",".join(f"{d}^{t}" if t > 1 else str(d) for d, t in s["partition"])
        lines.append(f"  {s['lambda']:>10}  m={s['m']}  [{parts}]")
    return "\n".join(lines) + "\n"


@click.group()
def main():
    """Classify and certify Ad-reality in sl(n, C) and sl(n, H)."""


@main.command("classify")
@click.argument("source", required=False)
@click.option("--field", type=click.Choice(["C", "H"]), default=None)
@click.option("--hint", default=None, help="comma-separated eigenvalues to try first")
@click.option("--batch", "batch", type=click.Path(exists=True, file_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="json")
@click.option("--gl-mode", is_flag=True, help="skip the trace-zero gate")
def classify_cmd(source, field, hint, batch, fmt, gl_mode):
    """Report whether the input is real / strongly real."""
    if batch:
        results = []
        for path in sorted(Path(batch).glob("*.json")):
            try:
                _, jd = _jordan(_read(str(path)), field, _hints(hint))
                results.append({"file": path.name, "report": classify(jd, gl_mode).to_json()})
            except AdRealError as exc:
                results.append({"file": path.name, "error": f"{type(exc).__name__}: {exc}"})
        click.echo(docs.dumps(results), nl=False)
        return
    if source is None:
        raise click.UsageError("SOURCE is required unless --batch is given")

    def run():
        _, jd = _jordan(_read(source), field, _hints(hint))
        return classify(jd, gl_mode)

    report = _guard(run)
    click.echo(docs.dumps(report.to_json()) if fmt == "json" else _report_table(report), nl=False)


@main.command("witness")
@click.argument("source")
@click.option("--field", type=click.Choice(["C", "H"]), default=None)
@click.option("--strong", is_flag=True, help="require an involutive certificate")
@click.option("--hint", default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="json")
@click.option("--gl-mode", is_flag=True)
def witness_cmd(source, field, strong, hint, fmt, gl_mode):
    """Build a certificate g with g X g^-1 = -X and det g = 1."""
    def run():
        X, jd = _jordan(_read(source), field, _hints(hint))
        report = classify(jd, gl_mode)
        if not (report.strongly_real if strong else report.real):
            return None, report
        return build_witness(X, strong, jd), report

    cert, report = _guard(run)
    if cert is None:
        click.echo(docs.dumps({"reason": str(report.reason), "real": report.real,
                               "stronglyReal": report.strongly_real}), nl=False)
        sys.exit(EXIT_NEGATIVE)
    if fmt == "json":
        click.echo(docs.dumps(docs.certificate_to_json(cert)), nl=False)
    else:
        click.echo(f"g =\n{cert.g}\n" + "".join(f"{k}: {str(v).lower()}\n" for k, v in cert.flags.items()),
                   nl=False)


@main.command("verify")
@click.argument("source")
@click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="json")
def verify_cmd(source, fmt):
    """Check a certificate; exit 0 iff every claimed flag holds."""
    def run():
        g, X, claimed = docs.certificate_from_json(_read(source))
        return verify(g, X), claimed

    cert, claimed = _guard(run)
    ok = all(cert.flags[k] for k in claimed if k in FLAG_NAMES)
    if fmt == "json":
        click.echo(docs.dumps({"flags": cert.flags, "claimed": claimed, "verified": ok,
                               "transcript": cert.transcript}), nl=False)
    else:
        click.echo("".join(f"{k}: {str(v).lower()}\n" for k, v in cert.flags.items()), nl=False)
    sys.exit(EXIT_OK if ok else EXIT_VERIFY_FAILED)


@main.command("atlas")
@click.option("--bound", type=int, default=DEFAULT_BOUND, show_default=True)
def atlas_cmd(bound):
    """Partition census as CSV, one row per n = 1..bound."""
    rows = _guard(lambda: atlas_rows(bound))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(ATLAS_HEADER)
    writer.writerows(rows)
    click.echo(buf.getvalue(), nl=False)


if __name__ == "__main__":
    main()
