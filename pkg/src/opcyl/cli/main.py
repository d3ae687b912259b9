import sys
from contextlib import contextmanager
from typing import Optional

import click
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.syntax import Syntax
from rich.table import Table

from .. import __version__
from ..catalog.registry import CYLINDER_PREFIX, build, default_catalog
from ..config import EngineSettings, get_settings
from ..core.errors import NotLinearError, OperadError
from ..core.semantic.evaluator import parse_element
from ..core.terms.element import Element
from ..core.terms.render import render_element
from ..cylinder.linear import DoubleCylinderPresentation, doubling_map, reversing_map
from ..cylinder.presentation import CylinderPresentation
from ..export.formats.json_format import JsonExporter
from ..export.formats.latex_format import LatexExporter
from ..presentation.loader import build_presentation, load_document
from ..presentation.presentation import Presentation
from ..presentation.validator import Validator
from ..utils.logging_setup import configure_logging
from ..verification.base import VerificationOptions
from ..verification.engine import VerificationEngine
from ..verification.suites import SUITE_NAMES, default_suites

EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_NOT_LINEAR = 3

FORMATS = ["text", "json", "latex"]

console = Console()


@contextmanager
def reported_errors():
    """Turn library refusals into exit codes"""
    try:
        yield
    except NotLinearError as exc:
        console.print(f"[bold red]Not linear:[/bold red] {escape(str(exc))}")
        sys.exit(EXIT_NOT_LINEAR)
    except OperadError as exc:
        console.print(f"[bold red]Error:[/bold red] {escape(str(exc))}")
        sys.exit(EXIT_USAGE)


def settings_of(ctx: click.Context) -> EngineSettings:
    return ctx.obj["settings"]


def cylinder_name(name: str) -> str:
    return name if name.startswith(CYLINDER_PREFIX) else f"{CYLINDER_PREFIX}{name}"


def gen_label(text: str) -> str:
    """``"sigma mu_3"`` and ``"sigma:mu_3"`` name the same generator"""
    return ":".join(text.split())


def read_element(presentation: Presentation, expr: Optional[str], gen: Optional[str]) -> Element:
    if (expr is None) == (gen is None):
        raise click.UsageError("Give exactly one of --expr and --gen")
    if gen is not None:
        return Element.generator(presentation.resolve(gen_label(gen)))
    return parse_element(presentation, expr)


def emit(element: Element, fmt: str, name: str = "e") -> None:
    if fmt == "json":
        text = JsonExporter().render(element, name).rstrip("\n")
    elif fmt == "latex":
        text = LatexExporter().render(element, name).rstrip("\n")
    else:
        text = render_element(element)
    console.print(text, markup=False, highlight=False, soft_wrap=True)


def element_options(func):
    """Options shared by the verbs that read one element"""
    func = click.option("--format", "-f", "fmt", type=click.Choice(FORMATS), default="text",
                        help="Output format")(func)
    func = click.option("--gen", "-g", help='Generator label, e.g. "sigma mu_3"')(func)
    func = click.option("--expr", "-e", help='Element expression, e.g. "mu_2 o1 mu_2"')(func)
    func = click.option("--suspended", is_flag=True, help="Apply the operadic suspension to the innermost presentation")(func)
    func = click.option("--presentation", "-p", required=True, help="Presentation name or file")(func)
    return func


@click.group()
@click.version_option(version=__version__)
@click.option("--verbose", "-v", count=True, help="-v for info, -vv for debug logging")
@click.option("--cache", type=int, default=None, help="Homotopy memo budget, 0 for unbounded")
@click.pass_context
def main(ctx, verbose, cache):
    """opcyl - canonical strong cylinders of pseudo-cellular DG-operads"""
    configure_logging(verbose)
    with reported_errors():
        settings = get_settings()
    if cache is not None:
        if cache < 0:
            raise click.BadParameter("must be >= 0", param_hint="--cache")
        settings = settings.model_copy(update={"cache_size": cache})
    ctx.obj = {"settings": settings}


@main.command()
@element_options
@click.pass_context
def diff(ctx, presentation, suspended, expr, gen, fmt):
    """Print the differential of an element"""
    with reported_errors():
        target = build(presentation, suspended, settings_of(ctx))
        element = read_element(target, expr, gen)
        emit(target.differential(element), fmt, "d")


@main.command("cyl-diff")
@element_options
@click.pass_context
def cyl_diff(ctx, presentation, suspended, expr, gen, fmt):
    """Print the differential of the cylinder on a generator or element"""
    with reported_errors():
        cylinder = build(cylinder_name(presentation), suspended, settings_of(ctx))
        if gen is not None and expr is None:
            g = cylinder.resolve(gen_label(gen))
            emit(cylinder.cylinder_differential(g), fmt, "d")
        else:
            emit(cylinder.differential(read_element(cylinder, expr, gen)), fmt, "d")


@main.command()
@element_options
@click.option("--stage", type=int, default=None, help="Evaluate at this stage instead of each term's minimal stage")
@click.pass_context
def homotopy(ctx, presentation, suspended, expr, gen, fmt, stage):
    """Print the canonical homotopy h of an element of the cylinder"""
    with reported_errors():
        cylinder = build(cylinder_name(presentation), suspended, settings_of(ctx))
        element = read_element(cylinder, expr, gen)
        if stage is None:
            result = cylinder.homotopy(element)
        else:
            result = cylinder.cylinder_homotopy(stage, element)
        emit(result, fmt, "h")


@main.command()
@element_options
@click.pass_context
def double(ctx, presentation, suspended, expr, gen, fmt):
    """Apply the doubling map of a linear presentation's cylinder"""
    with reported_errors():
        cylinder = build(cylinder_name(presentation), suspended, settings_of(ctx))
        if not isinstance(cylinder, CylinderPresentation):
            raise click.UsageError(f"{presentation} does not name a cylinder")
        element = read_element(cylinder, expr, gen)
        nu = doubling_map(cylinder, DoubleCylinderPresentation(cylinder.source))
        emit(nu(element), fmt, "nu")


@main.command()
@element_options
@click.pass_context
def reverse(ctx, presentation, suspended, expr, gen, fmt):
    """Apply the reversing map of a linear presentation's cylinder"""
    with reported_errors():
        cylinder = build(cylinder_name(presentation), suspended, settings_of(ctx))
        if not isinstance(cylinder, CylinderPresentation):
            raise click.UsageError(f"{presentation} does not name a cylinder")
        element = read_element(cylinder, expr, gen)
        iota = reversing_map(cylinder)
        emit(iota(element), fmt, "iota")


@main.command()
@click.option("--presentation", "-p", required=True, help="Presentation name or file")
@click.option("--suspended", is_flag=True, help="Apply the operadic suspension to the innermost presentation")
@click.option("--expr", "-e", help="Element expression")
@click.option("--gen", "-g", help="Generator label")
@click.option("--format", "-f", "fmt", type=click.Choice(["json", "latex"]), default="json", help="Output format")
@click.option("--name", default="e", help="Element name, used by LaTeX")
@click.option("--trees/--no-trees", default=True, help="Draw small monomials as labeled trees (LaTeX)")
@click.option("--standalone", is_flag=True, help="Wrap LaTeX in a compilable document")
@click.option("--output", "-o", type=click.Path(dir_okay=False, writable=True), help="Output file, stdout if omitted")
@click.option("--read", "read_path", type=click.Path(exists=True, dir_okay=False),
              help="Element JSON to read instead of --expr/--gen")
@click.pass_context
def export(ctx, presentation, suspended, expr, gen, fmt, name, trees, standalone, output, read_path):
    """Export an element as JSON or LaTeX"""
    with reported_errors():
        target = build(presentation, suspended, settings_of(ctx))
        if read_path is not None:
            with open(read_path) as f:
                element = JsonExporter().load(f.read(), target)
        else:
            element = read_element(target, expr, gen)

        exporter = JsonExporter() if fmt == "json" else LatexExporter()
        options = {"trees": trees, "standalone": standalone} if fmt == "latex" else {}
        if output:
            exporter.export(element, output, name, **options)
            console.print(f"[bold green]Wrote {escape(output)}[/bold green]")
        else:
            console.print(exporter.render(element, name, **options).rstrip("\n"),
                          markup=False, highlight=False, soft_wrap=True)


@main.command()
@click.argument("suites", nargs=-1, required=True)
@click.option("--presentation", "-p", help="Presentation to check; each suite has a default")
@click.option("--suspended", is_flag=True, help="Apply the operadic suspension to the innermost presentation")
@click.option("--max-arity", type=int, default=None, help="Largest arity to check")
@click.option("--max-vertices", type=int, default=3, show_default=True, help="Largest tree size to enumerate")
@click.option("--seed", type=int, default=None, help="Seed for the randomized checks")
@click.option("--samples", type=int, default=200, show_default=True, help="Random samples per randomized check")
@click.pass_context
def verify(ctx, suites, presentation, suspended, max_arity, max_vertices, seed, samples):
    """Run verification suites; 'all' runs every suite"""
    settings = settings_of(ctx)
    names = list(SUITE_NAMES) if "all" in suites else list(suites)
    unknown = [name for name in names if name not in SUITE_NAMES]
    if unknown:
        raise click.BadParameter(f"unknown suite '{unknown[0]}' (choose from {', '.join(SUITE_NAMES)}, all)",
                                 param_hint="SUITES")

    options = VerificationOptions(
        presentation=presentation,
        suspended=suspended,
        max_arity=settings.default_max_arity if max_arity is None else max_arity,
        max_vertices=max_vertices,
        seed=settings.default_seed if seed is None else seed,
        samples=samples,
    )
    console.print(f"Verifying [bold]{', '.join(names)}[/bold] "
                  f"(max arity {options.max_arity}, max vertices {options.max_vertices}, seed {options.seed})")

    engine = VerificationEngine(default_suites(), settings)
    with reported_errors():
        result = engine.verify(names, options)

    table = Table(title="Verification")
    table.add_column("Suite", style="cyan")
    table.add_column("Result")
    table.add_column("Checked", style="green", justify="right")
    table.add_column("Time (ms)", style="yellow", justify="right")
    for report in result.reports:
        table.add_row(report.suite, "[green]pass[/green]" if report.success else "[red]FAIL[/red]",
                      str(report.checked), f"{report.time_ms:.1f}")
    console.print(table)

    for error in result.errors:
        console.print(f"[red]Error: {escape(error)}[/red]")
    failed = next((r for r in result.reports if not r.success), None)
    if failed is not None:
        console.print(f"[bold red]{escape(failed.suite)} failed:[/bold red] {escape(failed.message)}")
        if failed.counterexample:
            console.print(failed.counterexample, markup=False, highlight=False, soft_wrap=True)
    if not result.success:
        sys.exit(EXIT_FAILED)
    console.print("[bold green]All checks passed![/bold green]")


@main.command()
@click.argument("presentation_file", type=click.Path(exists=True, readable=True, dir_okay=False))
@click.option("--max-arity", type=int, default=None, help="Largest arity for the d^2 check")
@click.pass_context
def validate(ctx, presentation_file, max_arity):
    """Validate a presentation file and check d^2 = 0"""
    console.print(f"Validating presentation file: [bold]{escape(presentation_file)}[/bold]")
    with reported_errors():
        document = load_document(presentation_file)

    errors = Validator().validate(document)
    if errors:
        console.print("[bold yellow]Validation found issues:[/bold yellow]")
        for error in errors:
            color = "red" if error.severity == "error" else "yellow"
            console.print(f"[{color}]{error.severity.upper()} at line {error.line}, column {error.column}: "
                          f"{escape(error.message)}[/{color}]")
        if any(error.severity == "error" for error in errors):
            console.print("[bold red]Validation failed with errors![/bold red]")
            sys.exit(EXIT_FAILED)

    with reported_errors():
        presentation = build_presentation(document)
        bound = max_arity
        if bound is None:
            bound = max((spec.arity for spec in document.generators), default=settings_of(ctx).default_max_arity)
        report = presentation.check_d_squared(bound)
    if not report.success:
        console.print(f"[bold red]{escape(report.message)}[/bold red]")
        if report.residue:
            console.print(report.residue, markup=False, highlight=False, soft_wrap=True)
        sys.exit(EXIT_FAILED)
    console.print(f"[bold green]Validation successful![/bold green] {escape(report.message)}")


@main.command()
@click.option("--presentation", "-p", help="Presentation name or file; lists the built-in names if omitted")
@click.option("--suspended", is_flag=True, help="Apply the operadic suspension to the innermost presentation")
@click.option("--max-arity", type=int, default=None, help="Largest arity to list")
@click.option("--source", is_flag=True, help="Show the presentation file instead of the generator table")
@click.pass_context
def show(ctx, presentation, suspended, max_arity, source):
    """Show the generators of a presentation"""
    if presentation is None:
        table = Table(title="Presentations")
        table.add_column("Name", style="cyan")
        table.add_column("Description", style="green")
        for name, description in default_catalog.describe():
            table.add_row(escape(name), escape(description))
        console.print(table)
        return

    if source:
        with reported_errors():
            document = load_document(presentation)
        with open(presentation) as f:
            content = f.read()
        lexer = "json" if presentation.endswith(".json") else "yaml"
        console.print(Panel(Syntax(content, lexer, theme="monokai", line_numbers=True),
                            title=escape(document.name), expand=False))
        return

    bound = settings_of(ctx).default_max_arity if max_arity is None else max_arity
    with reported_errors():
        target = build(presentation, suspended, settings_of(ctx))
        table = Table(title=f"{target.name} (arity <= {bound})")
        table.add_column("Label", style="cyan")
        table.add_column("Arity", justify="right")
        table.add_column("Degree", justify="right")
        table.add_column("Stage", justify="right")
        table.add_column("Boundary", style="green")
        for g in target.generators(bound):
            table.add_row(escape(g.label), str(g.arity), str(g.degree), str(g.stage),
                          escape(render_element(target.boundary(g))))
    console.print(table)
    if isinstance(target, (CylinderPresentation, DoubleCylinderPresentation)):
        console.print(f"[dim]{escape(target.name)} wraps {escape(target.source.name)}[/dim]")


if __name__ == "__main__":
    main()
