"""
Kommandoradsgränssnitt för Torelli-laboratoriet

Varje underkommando skriver ett JSON-dokument till stdout och en kort
sammanfattning till stderr. Slutkoder: 0 godkänt, 1 misslyckad kontroll,
2 ogiltig indata.
"""
import functools
import logging
import sys
import time
from math import comb
from typing import Optional

import click

from app.config import CLAIMED_GENERATOR_COUNT, DEFAULT_MAX_DIM, LOG_FORMAT, RelationName, SpanTarget, Verdict
from app.exceptions import InputError
from app.models.chain import ChainNotation
from app.models.homology import basis_labels
from app.models.report import RunReport
from app.services.bcj_sigma import sigma_chainmap, sigma_relation_defect, sigma_word
from app.services.chains import conjugate_by_b, conjugate_by_twist, enumerate_generators, expand_subchain, relation_words
from app.services.johnson_tau import tau_chainmap, tau_relation_defect, tau_word
from app.services.span_lab import (
    closure_for_size,
    d_min_search,
    disjointness_graph,
    expected_sigma_dim,
    expected_tau_dim,
    is_connected,
    span_dim_F2,
    span_dim_Q,
    vertex_classes,
)
from app.services.surface import build_surface
from app.services.verification import VerificationService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


class InputFailure(click.ClickException):
    """Ogiltig indata ger slutkod 2"""
    exit_code = EXIT_INPUT


def _output_options(command):
    command = click.option("--json-indent", type=int, default=None, help="Indrag för JSON-utdata")(command)
    command = click.option("--max-dim", type=int, default=DEFAULT_MAX_DIM, show_default=True,
                           help="Största tillåtna dimension för ⋀³")(command)
    command = click.option("--timing", is_flag=True, help="Ta med elapsed_ms i JSON-utdata")(command)
    return command


def _surface_options(command):
    command = click.option("--boundaries", type=click.IntRange(1, 2), default=2, show_default=True)(command)
    command = click.option("--genus", type=int, required=True)(command)
    return command


def _reporting(name: str):
    """Kör kommandot, mäter tid, skriver rapporten och sätter slutkoden"""
    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, json_indent: Optional[int], max_dim: int, timing: bool, **kwargs):
            started = time.perf_counter()
            try:
                genus, boundaries = kwargs.get("genus"), kwargs.get("boundaries", 2)
                if genus is not None:
                    _guard_dimension(genus, boundaries, max_dim)
                outputs, verdict, summary = func(*args, **kwargs)
            except ValueError as exc:
                raise InputFailure(str(exc)) from exc
            report = RunReport(
                command=name,
                inputs={k: v for k, v in kwargs.items() if v is not None},
                outputs=outputs,
                verdict=verdict,
                elapsed_ms=int((time.perf_counter() - started) * 1000),
            )
            click.echo(report.to_json(json_indent, timing))
            click.echo(f"{name}: {summary} [{verdict.value}, {report.elapsed_ms} ms]", err=True)
            click.get_current_context().exit(EXIT_FAILED if verdict == Verdict.FAIL else EXIT_OK)
        return wrapper
    return decorator


def _guard_dimension(genus: int, boundaries: int, max_dim: int) -> None:
    if genus < 1:
        raise InputError(f"genus must be at least 1, got {genus}")
    rank = 2 * genus + (2 if boundaries == 2 else 0)
    if comb(rank, 3) > max_dim:
        raise InputError(f"⋀³ dimension {comb(rank, 3)} exceeds --max-dim {max_dim}")


def _verdict(ok: bool) -> Verdict:
    return Verdict.PASS if ok else Verdict.FAIL


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Logga på INFO-nivå")
def cli(verbose: bool):
    """Torelli-laboratoriet: τ, σ, kedjeavbildningar och spannberäkningar"""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format=LOG_FORMAT, stream=sys.stderr)


@cli.command()
@_surface_options
@_output_options
@_reporting("table")
def table(genus: int, boundaries: int):
    """Kurvtabellen som koordinater"""
    model = build_surface(genus, boundaries)
    curves = {name: list(v.coords) for name, v in model.curve_table.items()}
    outputs = {"labels": basis_labels(model.rank), "curves": curves}
    return outputs, Verdict.REPORT_ONLY, f"{len(curves)} curves in rank {model.rank}"


@cli.command(name="enumerate")
@_surface_options
@_output_options
@_reporting("enumerate")
def enumerate_command(genus: int, boundaries: int):
    """Uppräkning av genererande kedjeavbildningar"""
    model = build_surface(genus, boundaries)
    generators = enumerate_generators(genus, boundaries)
    entries = []
    for n in generators:
        chain = expand_subchain(n, model)
        entries.append({
            "notation": str(n),
            "beta": n.beta,
            "genus_of_map": chain.genus,
            "boundary_class": list(chain.boundary_class.coords),
        })
    outputs = {
        "count": len(entries),
        "beta_chains": sum(1 for n in generators if n.beta),
        "claimed": CLAIMED_GENERATOR_COUNT,
        "generators": entries,
    }
    return outputs, Verdict.REPORT_ONLY, f"{len(entries)} generators"


@cli.command()
@_surface_options
@click.option("--twist", required=True, help="Vridningsindex j för c_j, eller 'b'")
@click.option("--sign", type=click.Choice(["1", "-1", "+1"]), default="1", show_default=True)
@click.option("--chain", required=True)
@_output_options
@_reporting("rewrite")
def rewrite(genus: int, boundaries: int, twist: str, sign: str, chain: str):
    """T^sign * kedja uttryckt som ord i kedjeavbildningar"""
    model = build_surface(genus, boundaries)
    notation = ChainNotation.parse(chain)
    expand_subchain(notation, model)
    if twist.lower() == "b":
        word = conjugate_by_b(int(sign), notation)
    elif twist.isdigit():
        word = conjugate_by_twist(int(twist), int(sign), notation, model.max_index)
    else:
        raise InputError(f"twist must be an index or 'b', got {twist!r}")
    outputs = {"word": str(word), "tokens": [str(t) for t in word]}
    return outputs, Verdict.REPORT_ONLY, str(word)


@cli.command()
@_surface_options
@click.option("--chain", required=True)
@_output_options
@_reporting("tau")
def tau(genus: int, boundaries: int, chain: str):
    """τ av en kedjeavbildning"""
    model = build_surface(genus, boundaries)
    value = expand_subchain(ChainNotation.parse(chain), model)
    result = tau_chainmap(value)
    outputs = {"triples": result.labelled(), "boundary_class": list(value.boundary_class.coords)}
    return outputs, Verdict.REPORT_ONLY, f"{len(result.terms)} triples"


@cli.command()
@_surface_options
@click.option("--chain", required=True)
@_output_options
@_reporting("sigma")
def sigma(genus: int, boundaries: int, chain: str):
    """σ av en kedjeavbildning"""
    model = build_surface(genus, boundaries)
    result = sigma_chainmap(expand_subchain(ChainNotation.parse(chain), model))
    return {"monomials": result.labelled()}, Verdict.REPORT_ONLY, f"{len(result.monomials)} monomials"


@cli.command()
@_surface_options
@click.option("--relation", type=click.Choice([r.value for r in RelationName]), required=True)
@click.option("--k", "k", type=int, default=3, show_default=True)
@_output_options
@_reporting("verify")
def verify(genus: int, boundaries: int, relation: str, k: int):
    """Kontrollera att en relation håller under τ och σ"""
    model = build_surface(genus, boundaries)
    lhs, rhs = relation_words(relation, k, model)
    tau_defect = tau_relation_defect(relation, k, model)
    sigma_defect = sigma_relation_defect(relation, k, model)
    outputs = {
        "lhs": str(lhs),
        "rhs": str(rhs),
        "tau_lhs": tau_word(lhs, model).labelled(),
        "sigma_lhs": sigma_word(lhs, model).labelled(),
        "tau_defect": tau_defect.labelled(),
        "sigma_defect": sigma_defect.labelled(),
    }
    ok = tau_defect.is_zero() and sigma_defect.is_zero()
    return outputs, _verdict(ok), f"{relation} k={k}"


def _generator_spans(genus: int, boundaries: int) -> tuple[int, int]:
    model = build_surface(genus, boundaries)
    chains = [expand_subchain(n, model) for n in enumerate_generators(genus, boundaries)]
    return span_dim_Q(tau_chainmap(c) for c in chains), span_dim_F2(sigma_chainmap(c) for c in chains)


@cli.command()
@_surface_options
@_output_options
@_reporting("rank")
def rank(genus: int, boundaries: int):
    """Rangen av abelianiseringen jämfört med Σ_{i≤3} C(d, i)"""
    tau_dim, sigma_dim = _generator_spans(genus, boundaries)
    expected = expected_sigma_dim(genus, boundaries)
    expected_tau = expected_tau_dim(genus, boundaries)
    outputs = {
        "expected": expected,
        "computed": sigma_dim,
        "tau": {"expected": expected_tau, "computed": tau_dim},
    }
    return outputs, _verdict(sigma_dim == expected and tau_dim == expected_tau), f"{sigma_dim}/{expected}"


@cli.command()
@_surface_options
@click.option("--what", type=click.Choice([t.value for t in SpanTarget]), default=SpanTarget.TAU.value, show_default=True)
@_output_options
@_reporting("span")
def span(genus: int, boundaries: int, what: str):
    """Spanndimension för τ, σ eller minsta frögrad d"""
    target = SpanTarget(what)
    if target == SpanTarget.DMIN:
        if boundaries != 2:
            raise InputError("the d_min search runs in the two-boundary model")
        d = d_min_search(genus)
        closures = {str(size): closure_for_size(genus, size)[0] for size in range(1, d + 1)}
        outputs = {"dimension": d, "expected": 2, "match": d == 2, "closures": closures,
                   "target": expected_tau_dim(genus)}
        return outputs, _verdict(d == 2), f"d_min = {d}"
    tau_dim, sigma_dim = _generator_spans(genus, boundaries)
    if target == SpanTarget.TAU:
        dimension, expected = tau_dim, expected_tau_dim(genus, boundaries)
    else:
        dimension, expected = sigma_dim, expected_sigma_dim(genus, boundaries)
    outputs = {"dimension": dimension, "expected": expected, "match": dimension == expected}
    return outputs, _verdict(dimension == expected), f"{what} span {dimension}/{expected}"


@cli.command()
@click.option("--genus", type=int, required=True)
@click.option("--m", "m", type=int, default=2, show_default=True)
@_output_options
@_reporting("graph")
def graph(genus: int, m: int):
    """Disjunkthetsgrafen på m-delmängder av {1..g+1}"""
    model = disjointness_graph(genus, m)
    connected = is_connected(model)
    bound_applies = 2 * m + 1 <= genus
    outputs = {
        "model": "disjointness graph on index sets",
        "vertices": [v.label for v in model.vertices],
        "edges": [list(e) for e in model.edges],
        "connected": connected,
        "bound_applies": bound_applies,
        "classes": vertex_classes(model, genus),
    }
    verdict = _verdict(connected) if bound_applies else Verdict.REPORT_ONLY
    return outputs, verdict, f"{len(model.vertices)} vertices, connected={connected}"


@cli.command(name="all-checks")
@click.option("--genus", type=int, default=3, show_default=True)
@_output_options
@_reporting("all-checks")
def all_checks(genus: int):
    """Hela acceptanssviten vid givet genus"""
    results = VerificationService(genus).run_all()
    outputs = {"checks": [r.to_dict() for r in results]}
    failed = [r.name for r in results if not r.passed]
    summary = f"{len(results) - len(failed)}/{len(results)} checks passed"
    return outputs, _verdict(not failed), summary


def run(argv: Optional[list[str]] = None) -> int:
    """Kör CLI:t och returnera slutkoden i stället för att avsluta processen"""
    try:
        result = cli.main(args=argv, prog_name="torelli", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        return EXIT_INPUT
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    sys.exit(run())
