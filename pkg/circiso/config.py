from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class SearchConfig:
    max_order: Optional[int] = None
    oracle_bound: Optional[int] = None
    spectrum_tolerance: Optional[float] = None
    min_size: Optional[int] = None
    residual_jumps: Optional[int] = None
    exhaustive: Optional[bool] = None
    workers: Optional[int] = None

    def update(
        self, other: Optional["SearchConfig"] = None, **kwargs
    ) -> "SearchConfig":
        own_dict = self.__dict__
        other_dict = other.__dict__ if isinstance(other, SearchConfig) else kwargs
        return self.__class__(
            **{
                k: other_dict.get(k) if other_dict.get(k) is not None else own_dict[k]
                for k in set(own_dict.keys()) | set(other_dict.keys())
            }
        )


# Scan restricted to sets with exactly m jumps not divisible by m
SCOPED_CONFIG = SearchConfig().update(
    max_order=2**20,
    oracle_bound=16,
    spectrum_tolerance=1e-9,
    min_size=3,
    exhaustive=False,
    workers=1,
)
EXHAUSTIVE_CONFIG = SearchConfig().update(SCOPED_CONFIG).update(exhaustive=True)
PARALLEL_CONFIG = SearchConfig().update(EXHAUSTIVE_CONFIG).update(workers=4)
CONFIGS = [SCOPED_CONFIG, EXHAUSTIVE_CONFIG, PARALLEL_CONFIG]

DEFAULT_CONFIG = SearchConfig().update(SCOPED_CONFIG)

ARGPARSE_ARGS = {
    "max_order": {
        "type": int,
        "help": "Largest graph order accepted by any command.",
    },
    "oracle_bound": {
        "type": int,
        "help": "Largest order for which the brute-force isomorphism search is run.",
    },
    "spectrum_tolerance": {
        "type": float,
        "help": "Absolute tolerance used when comparing spectra.",
    },
    "min_size": {
        "type": int,
        "help": "Minimum number of jumps of a scanned connection set.",
    },
    "residual_jumps": {
        "type": int,
        "help": "Number of jumps not divisible by m a scanned set must have. Defaults to m.",
    },
    "exhaustive": {
        "help": "Scan every connection set instead of only those with the residual jump count.",
    },
    "workers": {
        "type": int,
        "help": "Number of worker processes used by the scan.",
    },
}
for k in ARGPARSE_ARGS:
    assert k in DEFAULT_CONFIG.__dict__, f"Key {k} not found in SearchConfig.__dict__"


def config_from_args(args, base: SearchConfig = DEFAULT_CONFIG) -> SearchConfig:
    """Overrides the base configuration with every option given on the command line"""
    return base.update(**{k: getattr(args, k, None) for k in ARGPARSE_ARGS})
