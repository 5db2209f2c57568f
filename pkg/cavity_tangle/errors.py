from click import UsageError

from modules.errors import CavityTangleError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_PHYSICS = 4

EXIT_CODES_HELP = (
    "Exit status: 0 success, 2 usage error, 3 output file error, 4 physics error."
)

__all__ = ["CavityTangleError", "UsageError", "EXIT_OK", "EXIT_USAGE", "EXIT_IO", "EXIT_PHYSICS", "EXIT_CODES_HELP"]
