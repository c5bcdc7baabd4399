import logging
from dataclasses import dataclass

from .config_paths import BUILDER_CAP_ENV, ENUM_CAP_ENV, SHARDS_ENV, get_int_setting

# Enumeration is never allowed past this order, opt-in or not.
ENUMERATION_HARD_CAP = 16

CONVENTIONS = ("simple", "loop", "both")


@dataclass
class LabConfig:
    """Configuration class for ringlab."""

    builder_cap: int = 4096
    enumeration_cap: int = 8
    allow_large_enumeration: bool = False
    shards: int = 1
    deterministic: bool = True
    convention: str = "both"
    progress: bool = True
    log_level: int = logging.INFO
    log_dir: str = "logs"

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise ValueError(
                f"convention must be one of {', '.join(CONVENTIONS)}, got {self.convention!r}"
            )
        if self.shards < 1:
            raise ValueError(f"shards must be positive, got {self.shards}")

    @property
    def effective_enumeration_cap(self) -> int:
        if self.allow_large_enumeration:
            return ENUMERATION_HARD_CAP
        return min(self.enumeration_cap, ENUMERATION_HARD_CAP)

    @property
    def conventions(self) -> tuple[str, ...]:
        """Edge-count conventions selected by ``convention``."""
        if self.convention == "both":
            return ("simple", "loop")
        return (self.convention,)

    @classmethod
    def from_env(cls, **overrides) -> "LabConfig":
        """Build a config from defaults, the user ``.env`` file and the process environment.

        Explicit keyword overrides win over the environment.
        """
        defaults = cls()
        values = {
            "builder_cap": get_int_setting(BUILDER_CAP_ENV, defaults.builder_cap),
            "enumeration_cap": get_int_setting(
                ENUM_CAP_ENV, defaults.enumeration_cap, load_env=False
            ),
            "shards": get_int_setting(SHARDS_ENV, defaults.shards, load_env=False),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
