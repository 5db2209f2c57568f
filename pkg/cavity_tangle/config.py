import logging
import math
from dataclasses import dataclass, field

from cavity_tangle.errors import UsageError

from modules.cavity_model import ALPHA_W

logger = logging.getLogger(__name__)

COMMANDS = ("trajectory", "redcurve", "scan", "envelope")
LAYERS = ("purity", "concurrence")

# key -> default; every key is also a command-line option
DEFAULTS = {
    "model": "homogeneous",
    "kappa": 0.0,
    "ising": 0.0,
    "family": "psi",
    "alpha": ALPHA_W,
    "n": 1,
    "t_max": 20.0,
    "t_steps": 401,
    "j_min": 0.0,
    "j_max": 2.0,
    "j_steps": 201,
    "layers": "purity",
    "pair_sum": "ordered",
    "measure": "quasi_pure",
    "restarts": 8,
    "iterations": 200,
    "seed": 0,
    "threads": None,
    "out": None,
    "lower": False,
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    out_path: str
    model: str = DEFAULTS["model"]
    kappa: float = DEFAULTS["kappa"]
    ising: float = DEFAULTS["ising"]
    family: str = DEFAULTS["family"]
    alpha: float = DEFAULTS["alpha"]
    n: int = DEFAULTS["n"]
    t_max: float = DEFAULTS["t_max"]
    t_steps: int = DEFAULTS["t_steps"]
    j_min: float = DEFAULTS["j_min"]
    j_max: float = DEFAULTS["j_max"]
    j_steps: int = DEFAULTS["j_steps"]
    layers: frozenset = field(default_factory=lambda: frozenset({"purity"}))
    pair_sum: str = DEFAULTS["pair_sum"]
    measure: str = DEFAULTS["measure"]
    restarts: int = DEFAULTS["restarts"]
    iterations: int = DEFAULTS["iterations"]
    seed: int = DEFAULTS["seed"]
    threads: int = None
    lower: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        for name in ("kappa", "ising", "alpha", "t_max", "j_min", "j_max"):
            if not math.isfinite(getattr(self, name)):
                raise UsageError(f"{name} must be finite")
        for name in ("t_steps", "j_steps"):
            if getattr(self, name) < 2:
                raise UsageError(f"{name} must be at least 2")
        if not self.out_path:
            raise UsageError("an output path is required (--out)")
        unknown = set(self.layers) - set(LAYERS)
        if unknown:
            raise UsageError(f"unknown layers: {', '.join(sorted(unknown))}")

    @classmethod
    def from_options(cls, command, options):
        values = dict(options)
        values["out_path"] = values.pop("out")
        values["layers"] = parse_layers(values["layers"])
        return cls(command=command, **values)


def parse_layers(text):
    return frozenset(part.strip() for part in str(text).split(",") if part.strip())


def normalize_key(key):
    return key.strip().lower().replace("-", "_")


def load_config_file(path):
    """Flat ``key=value`` lines; ``#`` starts a comment. Unknown keys are rejected."""
    values = {}
    with open(path, encoding="utf-8") as handle:
        for number, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{number}: expected key=value, got {line!r}")
            key, value = line.split("=", 1)
            key = normalize_key(key)
            if key not in DEFAULTS:
                raise UsageError(f"{path}:{number}: unknown key {key!r}")
            values[key] = value.strip()
    logger.debug("loaded %d settings from %s", len(values), path)
    return values
