"""
Command-line interface for threec
"""

import functools
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List

import click
from colorama import Fore, init

from ..catalog import build_lattice, build_names, niemeier, q_group, r_group, sample_niemeier
from ..exactla import to_fraction
from ..glue import (
    DiscriminantGroup, GlueError, glue_of_overlattice, glue_overlattice, is_even_glue,
    is_totally_singular, load_glue, random_valid_glue, save_glue,
)
from ..lattice import Lattice, LatticeError, load_lattice, save_lattice
from ..permgrp import SearchBudgetExceeded
from ..reporter import ReportGenerator
from ..shortvec import EnumerationBudgetError, format_root_type, root_system_type, short_vectors
from ..verifier import (
    ConfigError, UnknownLemmaError, VerificationResult, Verifier, all_passed, cache_dir, get_lemma,
    json_safe, lemma_ids, load_config,
)

# Initialize colorama for cross-platform colored output
init(autoreset=True)

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

STATUS_COLORS = {'pass': Fore.GREEN, 'fail': Fore.RED, 'unresolved': Fore.YELLOW}


def handle_errors(func):
    """Map library errors to exit codes: budget 3, usage/config/input 2, anything else 1"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except click.exceptions.Exit:
            raise
        except click.ClickException:
            raise
        except (SearchBudgetExceeded, EnumerationBudgetError) as e:
            click.echo(f"{Fore.RED}Error: resource budget exceeded: {e}", err=True)
            sys.exit(EXIT_BUDGET)
        except (UnknownLemmaError, ConfigError, LatticeError, GlueError, FileNotFoundError,
                json.JSONDecodeError) as e:
            message = e.args[0] if isinstance(e, KeyError) and e.args else e
            click.echo(f"{Fore.RED}Error: {message}", err=True)
            sys.exit(EXIT_USAGE)
        except Exception as e:
            click.echo(f"{Fore.RED}Error: {str(e)}", err=True)
            logging.getLogger(__name__).debug("unhandled error", exc_info=True)
            sys.exit(EXIT_FAIL)
    return wrapper


def banner(title: str, width: int = 60) -> None:
    click.echo(f"\n{Fore.CYAN}{'=' * width}")
    click.echo(f"{Fore.CYAN}{title}")
    click.echo(f"{Fore.CYAN}{'=' * width}")


def emit_json(data: Any) -> None:
    click.echo(json.dumps(json_safe(data), indent=2))


def _slug(name: str) -> str:
    return name.lower().replace(":", "-").replace("^", "_")


def resolve_lattice(ref: str, obj: Dict[str, Any]) -> Lattice:
    """A lattice file path, or a build name cached under the cache directory"""
    path = Path(ref)
    if path.suffix == ".json" or path.exists():
        return load_lattice(path)
    if ref.lower() not in build_names() and not ref.lower().startswith("niemeier:"):
        raise click.BadParameter(f"{ref!r} is neither a lattice file nor a build name "
                                 f"({', '.join(build_names())})")
    cached = cache_dir(obj['config']) / f"{_slug(ref)}-seed{obj['seed']}.json"
    if cached.exists():
        return load_lattice(cached)
    lattice = build_lattice(ref, obj['seed'])
    save_lattice(lattice, cached)
    return lattice


@click.group()
@click.version_option(version="1.0.0")
@click.option('--config', '-c', default='config/config.yaml', help='Configuration file path')
@click.option('--seed', type=int, default=None, help='Seed for randomized constructions')
@click.option('--budget-seconds', type=float, default=None, help='Time budget for isometry searches')
@click.option('--lattice-dir', type=click.Path(file_okay=False), default=None,
              help='Directory for lattice files written by build')
@click.option('--json', 'as_json', is_flag=True, help='Machine-readable output')
@click.option('--verbose', '-v', count=True, help='Log progress (-v info, -vv debug)')
@click.pass_context
def cli(ctx, config, seed, budget_seconds, lattice_dir, as_json, verbose):
    """threec: exact lattice computations for the 3C construction"""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(asctime)s %(name)s %(levelname)s %(message)s")
    try:
        config_data = load_config(config)
    except ConfigError as e:
        click.echo(f"{Fore.RED}Error: {str(e)}", err=True)
        sys.exit(EXIT_USAGE)
    paths = config_data.get('paths', {})
    ctx.obj = {
        'config': config_data,
        'seed': seed if seed is not None else int(config_data.get('verification', {}).get('seed', 0)),
        'budget_seconds': budget_seconds,
        'lattice_dir': Path(lattice_dir or paths.get('lattice_dir', 'lattices')),
        'json': as_json,
        'progress': verbose > 0,
    }


def _verifier(obj: Dict[str, Any], settings: Dict[str, Any] = None) -> Verifier:
    return Verifier(config=obj['config'], seed=obj['seed'], budget_seconds=obj['budget_seconds'],
                    progress=obj['progress'], settings=settings)


def _select(lemma_id: str, fast: bool) -> List[str]:
    if lemma_id == 'all':
        return [i for i in lemma_ids() if not (fast and get_lemma(i).slow)]
    get_lemma(lemma_id)
    return [lemma_id]


def _echo_result(result: VerificationResult) -> None:
    color = STATUS_COLORS.get(result.status, '')
    seed = f" (seed {result.seed})" if result.seed is not None else ""
    click.echo(f"{color}{result.status.upper():<10}{Fore.RESET} {result.lemma_id}"
               f"  {result.runtime_ms} ms{seed}")
    for key, value in result.metrics.items():
        click.echo(f"    {key}: {json.dumps(value)}")
    if result.status == 'fail' and result.witness is not None:
        click.echo(f"{Fore.RED}    witness: {json.dumps(result.witness)}")


@cli.command()
@click.argument('lemma_id')
@click.option('--n', 'sizes', type=int, multiple=True, help='Sizes for lie-identities (repeatable)')
@click.option('--fast', is_flag=True, help="With 'all', skip the rank-24 verifications")
@click.pass_obj
@handle_errors
def verify(obj, lemma_id, sizes, fast):
    """Verify one lemma id, or 'all'"""
    ids = _select(lemma_id, fast)
    verifier = _verifier(obj, {'lie_sizes': list(sizes)} if sizes else None)
    if not obj['json']:
        banner(f"VERIFY {lemma_id}")
    results = []
    for i in ids:
        result = verifier.run(i)
        results.append(result)
        if not obj['json']:
            _echo_result(result)
    if obj['json']:
        emit_json(results[0].to_dict() if len(results) == 1 else [r.to_dict() for r in results])
    sys.exit(0 if all_passed(results) else EXIT_FAIL)


@cli.command(name='lemmas')
@click.pass_obj
def list_lemmas(obj):
    """List the registered lemma ids"""
    ids = lemma_ids()
    if obj['json']:
        emit_json(ids)
        return
    for i in ids:
        entry = get_lemma(i)
        flags = ", ".join(f for f, on in (("randomized", entry.randomized), ("slow", entry.slow)) if on)
        click.echo(f"{i}" + (f"  {Fore.YELLOW}[{flags}]" if flags else ""))


@cli.command()
@click.argument('lemma_ids_arg', nargs=-1)
@click.option('--format', 'fmt', type=click.Choice(['text', 'json', 'html']), default='text',
              help='Report format')
@click.option('--output', '-o', type=click.Path(file_okay=False), default=None,
              help='Directory for json/html reports')
@click.option('--from', 'source', type=click.Path(exists=True, dir_okay=False), default=None,
              help='Render an existing JSON report instead of verifying')
@click.option('--fast', is_flag=True, help='Skip the rank-24 verifications')
@click.pass_obj
@handle_errors
def report(obj, lemma_ids_arg, fmt, output, source, fast):
    """Verify a subset of lemma ids (default all) and write a report"""
    reporter = ReportGenerator(output or obj['config'].get('paths', {}).get('report_dir', 'reports'))
    if source:
        results = reporter.load_json_report(source)
    else:
        ids = [i for lid in (lemma_ids_arg or ('all',)) for i in _select(lid, fast)]
        results = _verifier(obj).run_all(ids)
    if fmt == 'text':
        click.echo(reporter.render_text(results))
    elif fmt == 'json':
        path = reporter.generate_json_report(results)
        click.echo(f"{Fore.GREEN}JSON report: {path}")
    else:
        path = reporter.generate_report(results)
        click.echo(f"{Fore.GREEN}HTML report: {path}")
    sys.exit(0 if all_passed(results) else EXIT_FAIL)


@cli.command()
@click.argument('name')
@click.option('--output', '-o', type=click.Path(dir_okay=False), default=None, help='Lattice file to write')
@click.pass_obj
@handle_errors
def build(obj, name, output):
    """Build a named lattice and write it as JSON"""
    try:
        lattice = build_lattice(name, obj['seed'])
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint='NAME')
    path = save_lattice(lattice, output or obj['lattice_dir'] / f"{_slug(name)}.json")
    info = {'name': lattice.name, 'rank': lattice.rank, 'determinant': lattice.determinant,
            'even': lattice.is_even, 'path': str(path)}
    if obj['json']:
        emit_json(info)
    else:
        click.echo(f"{Fore.GREEN}✓ {lattice.name}: rank {lattice.rank}, det {lattice.determinant} -> {path}")


@cli.command()
@click.argument('lattice_ref')
@click.option('--bound', '-b', default='2', help='Norm bound (integer or p/q)')
@click.option('--root-type', is_flag=True, help='Also classify the root system')
@click.pass_obj
@handle_errors
def shortvec(obj, lattice_ref, bound, root_type):
    """Count vectors of norm at most BOUND in a lattice file or named build"""
    lattice = resolve_lattice(lattice_ref, obj)
    settings = obj['config'].get('shortvec', {})
    try:
        bound_value = to_fraction(bound)
    except ValueError:
        raise click.BadParameter(f"{bound!r} is not a rational number", param_hint='--bound')
    delta = to_fraction(obj['config'].get('lattice', {}).get('lll_delta', '99/100'))
    found = short_vectors(lattice, bound_value, workers=int(settings.get('workers', 1)),
                          progress=obj['progress'], margin=float(settings.get('float_margin', 1e-6)),
                          delta=delta)
    info: Dict[str, Any] = {'lattice': lattice.name, 'bound': found.bound, 'count': found.count,
                            'norm_counts': found.norm_counts()}
    if root_type:
        info['root_type'] = format_root_type(root_system_type(lattice))
    if obj['json']:
        emit_json(info)
        return
    click.echo(f"{Fore.CYAN}{lattice.name}: {found.count} vectors of norm <= {bound}")
    for norm, count in info['norm_counts'].items():
        click.echo(f"  norm {norm}: {count}")
    if root_type:
        click.echo(f"  root system: {info['root_type']}")


@cli.group()
def glue():
    """Glue maps between Q = A2⊗E8 and R = √3E8"""


def _glue_groups(obj, source, target):
    first = resolve_lattice(source, obj) if source else None
    second = resolve_lattice(target, obj) if target else None
    dq = q_group() if first is None else DiscriminantGroup(first)
    dr = r_group() if second is None else DiscriminantGroup(second)
    return dq, dr


def _glue_info(g) -> Dict[str, Any]:
    return {'order': g.order, 'full': g.is_full(), 'even': is_even_glue(g),
            'totally_singular': is_totally_singular(g)}


@glue.command(name='sample')
@click.option('--output', '-o', type=click.Path(dir_okay=False), required=True, help='Glue file to write')
@click.pass_obj
@handle_errors
def glue_sample(obj, output):
    """Write a random even full glue Q → R (seeded)"""
    g = random_valid_glue(q_group(), r_group(), obj['seed'])
    path = save_glue(g, output)
    info = dict(_glue_info(g), seed=obj['seed'], path=str(path))
    if obj['json']:
        emit_json(info)
    else:
        click.echo(f"{Fore.GREEN}✓ glue of order {g.order} (seed {obj['seed']}) -> {path}")


@glue.command(name='read')
@click.argument('glue_file', type=click.Path(exists=True, dir_okay=False))
@click.option('--source', default=None, help='Source lattice (file or build name; default Q)')
@click.option('--target', default=None, help='Target lattice (file or build name; default R)')
@click.pass_obj
@handle_errors
def glue_read(obj, glue_file, source, target):
    """Load a glue file and report its order and parity"""
    g = load_glue(glue_file, *_glue_groups(obj, source, target))
    info = _glue_info(g)
    if obj['json']:
        emit_json(info)
    else:
        for key, value in info.items():
            click.echo(f"  {key}: {value}")


@glue.command(name='apply')
@click.argument('glue_file', type=click.Path(exists=True, dir_okay=False))
@click.option('--source', default=None, help='Source lattice (file or build name; default Q)')
@click.option('--target', default=None, help='Target lattice (file or build name; default R)')
@click.option('--output', '-o', type=click.Path(dir_okay=False), required=True, help='Lattice file to write')
@click.pass_obj
@handle_errors
def glue_apply(obj, glue_file, source, target, output):
    """Build the overlattice of a glue file and write it"""
    dq, dr = _glue_groups(obj, source, target)
    g = load_glue(glue_file, dq, dr)
    lattice = glue_overlattice(dq.lattice, dr.lattice, g)
    path = save_lattice(lattice, output)
    info = {'rank': lattice.rank, 'determinant': lattice.determinant, 'even': lattice.is_even,
            'path': str(path)}
    if obj['json']:
        emit_json(info)
    else:
        click.echo(f"{Fore.GREEN}✓ {lattice.name}: rank {lattice.rank}, det {lattice.determinant} -> {path}")


@glue.command(name='of')
@click.argument('niemeier_type')
@click.option('--output', '-o', type=click.Path(dir_okay=False), default=None, help='Glue file to write')
@click.pass_obj
@handle_errors
def glue_of(obj, niemeier_type, output):
    """Read the glue of Q ⊥ R off a named Niemeier embedding"""
    try:
        emb = niemeier(niemeier_type, obj['seed'])
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint='NIEMEIER_TYPE')
    g = glue_of_overlattice(emb.niemeier, emb.q_handle, emb.r_handle)
    info = _glue_info(g)
    if output:
        info['path'] = str(save_glue(g, output))
    if obj['json']:
        emit_json(info)
    else:
        for key, value in info.items():
            click.echo(f"  {key}: {value}")


@cli.command()
@click.option('--report', 'full', is_flag=True, help='Print every field of the report')
@click.pass_obj
@handle_errors
def stabilizer(obj, full):
    """Common stabilizer of the glues α and β in O(Q) × O(R)"""
    data = _verifier(obj).context.stabilizer_report().to_dict()
    if not full:
        data = {k: data[k] for k in ('order', 'derived_subgroup_order', 'point_stabilizer_order',
                                     'orbit_lengths')}
    if obj['json']:
        emit_json(data)
        return
    banner("COMMON STABILIZER OF α AND β")
    for key, value in data.items():
        click.echo(f"  {key}: {value}")


@cli.command(name='sample-niemeier')
@click.option('--count', '-n', type=int, default=None, help='Number of random glues')
@click.option('--plot', is_flag=True, help='Write a bar chart of the root-system types')
@click.option('--output', '-o', type=click.Path(file_okay=False), default=None, help='Directory for the plot')
@click.pass_obj
@handle_errors
def sample_niemeier_cmd(obj, count, plot, output):
    """Classify overlattices of Q ⊥ R for random even full glues"""
    count = count or int(obj['config'].get('verification', {}).get('niemeier_samples', 200))
    samples = sample_niemeier(count, obj['seed'], progress=obj['progress'])
    reporter = ReportGenerator(output or obj['config'].get('paths', {}).get('report_dir', 'reports'))
    frame = reporter.sample_frame(samples)
    histogram = frame['root_type'].value_counts().sort_index().to_dict()
    ok = bool(frame['in_table'].all() and frame['even_unimodular'].all())
    plot_path = reporter.plot_niemeier_histogram(samples) if plot else None
    if obj['json']:
        emit_json({'count': count, 'seed': obj['seed'], 'histogram': histogram,
                   'all_in_table': ok, 'plot': plot_path})
    else:
        banner(f"NIEMEIER SAMPLES ({count}, seed {obj['seed']})")
        for name, n in histogram.items():
            click.echo(f"  {name:<8} {n}")
        color = Fore.GREEN if ok else Fore.RED
        click.echo(f"{color}all types in the table: {ok}")
        if plot_path:
            click.echo(f"{Fore.GREEN}plot: {plot_path}")
    sys.exit(0 if ok else EXIT_FAIL)


def main():
    """Entry point for CLI"""
    cli()


if __name__ == '__main__':
    main()
