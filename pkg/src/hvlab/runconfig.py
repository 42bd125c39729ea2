"""Run configuration: defaults, flat key=value config files, CLI overrides.

Config file format (every option is a scalar, so the format is flat):

    # comment
    generators = "1"          # comma separated rationals
    variant = "full"          # full | centerless
    mixed_cocycle = "paper"   # paper | standard
    radius = 4
    seed = 42
    format = "text"           # text | json

Values may be quoted or bare.  Command line flags override file values,
which override the defaults.
"""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraConfig
from .errors import UsageError
from .gamma import GroupSpec
from .rationals import format_rational, parse_rational

_KEYS = {"generators", "variant", "mixed_cocycle", "radius", "seed", "format"}


@dataclass
class RunConfig:
    group: GroupSpec
    variant: str = "full"
    mixed_cocycle: str = "paper"
    radius: int = 4
    seed: int = 0
    fmt: str = "text"

    def __post_init__(self):
        if self.variant not in ("full", "centerless"):
            raise UsageError(f"unknown variant {self.variant!r}")
        if self.mixed_cocycle not in ("paper", "standard"):
            raise UsageError(f"unknown mixed_cocycle {self.mixed_cocycle!r}")
        if self.fmt not in ("text", "json"):
            raise UsageError(f"unknown output format {self.fmt!r}")
        if self.radius < 0:
            raise UsageError("radius must be nonnegative")

    def algebra_config(self):
        return AlgebraConfig(self.group, self.variant, self.mixed_cocycle)

    def to_dict(self):
        return {
            "generators": [format_rational(g) for g in self.group.generators],
            "variant": self.variant,
            "mixed_cocycle": self.mixed_cocycle,
            "radius": self.radius,
            "seed": self.seed,
            "format": self.fmt,
        }


def _unquote(value):
    value = value.strip()
    if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
        return value[1:-1]
    return value


def load_config_file(path):
    """Parse a flat key=value config file into a raw string mapping."""
    raw = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.split("#", 1)[0].strip()
            if not stripped:
                continue
            if "=" not in stripped:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, value = stripped.split("=", 1)
            key = key.strip()
            if key not in _KEYS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            raw[key] = _unquote(value)
    return raw


def parse_generators(text):
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise UsageError("generators must list at least one rational")
    return GroupSpec(tuple(parse_rational(p) for p in parts))


def make_runconfig(config_path=None, **overrides):
    """Defaults, overlaid with the config file, overlaid with CLI flags."""
    values = {
        "generators": "1",
        "variant": "full",
        "mixed_cocycle": "paper",
        "radius": "4",
        "seed": "0",
        "format": "text",
    }
    if config_path is not None:
        values.update(load_config_file(config_path))
    for key, value in overrides.items():
        if value is not None:
            values[key] = str(value)
    try:
        radius = int(values["radius"])
        seed = int(values["seed"])
    except ValueError as exc:
        raise UsageError(f"radius and seed must be integers: {exc}") from exc
    return RunConfig(
        group=parse_generators(values["generators"]),
        variant=values["variant"],
        mixed_cocycle=values["mixed_cocycle"],
        radius=radius,
        seed=seed,
        fmt=values["format"],
    )


def algebra_config_to_dict(config):
    return {
        "generators": [format_rational(g) for g in config.group.generators],
        "variant": config.variant,
        "mixed_cocycle": config.mixed_cocycle,
    }


def algebra_config_from_dict(data):
    gens = tuple(
        g if isinstance(g, Fraction) else parse_rational(str(g))
        for g in data["generators"]
    )
    return AlgebraConfig(
        GroupSpec(gens),
        data.get("variant", "full"),
        data.get("mixed_cocycle", "paper"),
    )
