import logging

import click

from cavity_tangle.config import RunConfig
from cavity_tangle.csv_output import write_scan
from cavity_tangle.options import run_options
from cavity_tangle.runner import run, runs
from cavity_tangle.trajectories import entanglement_context, initial_spec
from modules.scan import WorkerPool, density_scan

logger = logging.getLogger(__name__)


@runs("scan")
def run_scan(config: RunConfig):
    grid = density_scan(
        config.kappa,
        config.model,
        (config.j_min, config.j_max, config.j_steps),
        (config.t_max, config.t_steps),
        initial_spec(config),
        layers=config.layers,
        convention=config.pair_sum,
        pool=WorkerPool(config.threads),
        context=entanglement_context(config),
    )
    write_scan(config.out_path, grid)


@click.command()
@run_options
@click.pass_context
def scan(ctx, **options):
    """Purity (and concurrence) density over Ising coupling and time."""
    ctx.exit(run(RunConfig.from_options("scan", options)))
