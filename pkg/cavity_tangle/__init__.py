import logging

import click

from cavity_tangle.config import COMMANDS, RunConfig, load_config_file
from cavity_tangle.errors import EXIT_CODES_HELP, EXIT_OK, EXIT_USAGE
from cavity_tangle.runner import run
from cavity_tangle.scans import scan
from cavity_tangle.trajectories import envelope, redcurve, trajectory

logger = logging.getLogger(__name__)


def _load_config(ctx, param, path):
    if path is None:
        return None
    try:
        values = load_config_file(path)
    except OSError as e:
        raise click.BadParameter(f"cannot read {path}: {e}", ctx=ctx, param=param)
    ctx.default_map = {command: dict(values) for command in COMMANDS}
    return path


def _setup_logging(ctx, param, verbose):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    return verbose


def create_cli():
    @click.group(no_args_is_help=False, epilog=EXIT_CODES_HELP)
    @click.option("--config", "config_path", type=click.Path(dir_okay=False), is_eager=True,
                  expose_value=False, callback=_load_config, help="Flat key=value settings file.")
    @click.option("--verbose", "-v", is_flag=True, is_eager=True, expose_value=False,
                  callback=_setup_logging, help="Debug logging.")
    def cli():
        """Entanglement dynamics of three atoms in a cavity."""

    cli.add_command(trajectory)
    cli.add_command(redcurve)
    cli.add_command(scan)
    cli.add_command(envelope)
    return cli


def parse_config(argv):
    """Parse arguments (and any ``--config`` file) into a RunConfig without running it."""
    cli = create_cli()
    with cli.make_context("cavity-tangle", list(argv)) as ctx:
        args = [*ctx.protected_args, *ctx.args]
        if not args:
            raise click.UsageError("missing command", ctx=ctx)
        name, rest = args[0], args[1:]
        command = cli.get_command(ctx, name)
        if command is None:
            raise click.UsageError(f"no such command {name!r}", ctx=ctx)
        with command.make_context(name, rest, parent=ctx) as sub_ctx:
            return RunConfig.from_options(name, sub_ctx.params)


def main(argv=None):
    cli = create_cli()
    try:
        status = cli.main(args=argv, prog_name="cavity-tangle", standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return e.exit_code
    return EXIT_OK if status is None else status

