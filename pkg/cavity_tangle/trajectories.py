import logging
import math

import click

from cavity_tangle.config import RunConfig
from cavity_tangle.csv_output import write_envelope, write_trajectory
from cavity_tangle.options import run_options
from cavity_tangle.runner import run, runs
from modules.cavity_model import InitialStateSpec, homogeneous_params
from modules.entanglement.entanglement_context import EntanglementContext
from modules.scan import HamiltonianModel, cp_trajectory, envelope_check, red_curve

logger = logging.getLogger(__name__)

# reference curves are sampled on their own grid, fine enough to resolve every purity bin
REFERENCE_STEPS_PER_UNIT_TIME = 200


def entanglement_context(config: RunConfig):
    if config.measure == "upper_bound":
        return EntanglementContext.for_name(
            "upper_bound", restarts=config.restarts, iterations=config.iterations, seed=config.seed
        )
    return EntanglementContext.for_name("quasi_pure")


def initial_spec(config: RunConfig):
    return InitialStateSpec(config.family, config.alpha, config.n)


def model_params(config: RunConfig):
    return HamiltonianModel(config.model).params(config.kappa, config.ising, config.pair_sum)


@runs("trajectory")
def run_trajectory(config: RunConfig):
    points = cp_trajectory(
        model_params(config), initial_spec(config), config.t_max, config.t_steps,
        context=entanglement_context(config),
    )
    write_trajectory(config.out_path, points)


@runs("redcurve")
def run_redcurve(config: RunConfig):
    points = red_curve(config.n, config.t_max, config.t_steps, context=entanglement_context(config))
    write_trajectory(config.out_path, points)


@runs("envelope")
def run_envelope(config: RunConfig):
    context = entanglement_context(config)
    spec = initial_spec(config)
    reference_steps = max(config.t_steps, math.ceil(config.t_max * REFERENCE_STEPS_PER_UNIT_TIME) + 1)
    points = cp_trajectory(model_params(config), spec, config.t_max, config.t_steps, context=context)

    if config.lower:
        mode = "lower"
        reference = cp_trajectory(homogeneous_params(0.0, 0.0), spec, config.t_max, reference_steps, context=context)
    else:
        mode = "upper"
        reference = red_curve(config.n, config.t_max, reference_steps, context=context)

    report = envelope_check(points, reference, mode=mode)
    logger.info("%s envelope: max excess %.3e, %d uncovered points", mode, report.max_excess, report.uncovered)
    write_envelope(config.out_path, mode, report)


@click.command()
@run_options
@click.pass_context
def trajectory(ctx, **options):
    """Concurrence-purity trajectory of one initial state."""
    ctx.exit(run(RunConfig.from_options("trajectory", options)))


@click.command()
@run_options
@click.pass_context
def redcurve(ctx, **options):
    """Reference trajectory: non-interacting atoms started in the W state."""
    ctx.exit(run(RunConfig.from_options("redcurve", options)))


@click.command()
@run_options
@click.pass_context
def envelope(ctx, **options):
    """Compare a trajectory with the red-curve (or decoupled) envelope."""
    ctx.exit(run(RunConfig.from_options("envelope", options)))
