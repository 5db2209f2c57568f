import logging

from cavity_tangle.config import RunConfig
from cavity_tangle.errors import EXIT_IO, EXIT_OK, EXIT_PHYSICS, CavityTangleError

logger = logging.getLogger(__name__)

_RUNNERS = {}


def runs(command):
    """Register the function that carries out ``command``."""
    def register(fn):
        _RUNNERS[command] = fn
        return fn
    return register


def run(config: RunConfig):
    """Carry out one configured run and return its exit status."""
    try:
        _RUNNERS[config.command](config)
    except OSError as e:
        logger.error("cannot write %s: %s", config.out_path, e)
        return EXIT_IO
    except CavityTangleError as e:
        logger.error("%s failed: %s", config.command, e)
        return EXIT_PHYSICS
    return EXIT_OK
