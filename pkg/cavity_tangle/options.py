import click

from cavity_tangle.config import DEFAULTS
from modules.scan.worker_pool import THREADS_ENV


def run_options(command):
    """Options shared by every subcommand; config-file values arrive as their defaults."""
    decorators = [
        click.option("--model", type=click.Choice(["homogeneous", "quasi_homogeneous"]), default=DEFAULTS["model"], show_default=True),
        click.option("--kappa", type=float, default=DEFAULTS["kappa"], show_default=True, help="Dipole-dipole coupling."),
        click.option("--ising", type=float, default=DEFAULTS["ising"], show_default=True, help="Ising coupling J."),
        click.option("--family", type=click.Choice(["phi", "psi"]), default=DEFAULTS["family"], show_default=True),
        click.option("--alpha", type=float, default=DEFAULTS["alpha"], help="Family angle (default arctan(sqrt 2))."),
        click.option("--n", "n", type=int, default=DEFAULTS["n"], show_default=True, help="Excitation number."),
        click.option("--t-max", type=float, default=DEFAULTS["t_max"], show_default=True),
        click.option("--t-steps", type=int, default=DEFAULTS["t_steps"], show_default=True),
        click.option("--j-min", type=float, default=DEFAULTS["j_min"], show_default=True),
        click.option("--j-max", type=float, default=DEFAULTS["j_max"], show_default=True),
        click.option("--j-steps", type=int, default=DEFAULTS["j_steps"], show_default=True),
        click.option("--layers", default=DEFAULTS["layers"], show_default=True, help="Comma list of purity, concurrence."),
        click.option("--pair-sum", type=click.Choice(["ordered", "unordered"]), default=DEFAULTS["pair_sum"], show_default=True),
        click.option("--measure", type=click.Choice(["quasi_pure", "upper_bound"]), default=DEFAULTS["measure"], show_default=True),
        click.option("--restarts", type=int, default=DEFAULTS["restarts"], show_default=True),
        click.option("--iterations", type=int, default=DEFAULTS["iterations"], show_default=True),
        click.option("--seed", type=int, default=DEFAULTS["seed"], show_default=True),
        click.option("--threads", type=int, default=None, envvar=THREADS_ENV, help=f"Worker threads for scans (env {THREADS_ENV})."),
        click.option("--lower", is_flag=True, default=False, help="envelope: compare against the decoupled lower bound."),
        click.option("--out", required=True, help="Output CSV path."),
    ]
    for decorator in reversed(decorators):
        command = decorator(command)
    return command
