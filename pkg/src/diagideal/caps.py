"""Resource limits.

Every cap is configuration, not a constant: the CLI accepts a key-value caps
file and the library functions accept a ``Caps`` instance.  Exceeding a cap
raises ``ResourceLimitError`` instead of producing a partial answer.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace

from .errors import FormatError


@dataclass(frozen=True)
class Caps:
    max_minor_rows: int = 6
    max_product_gens: int = 5000
    max_oracle_gens: int = 12
    max_lcm_candidates: int = 4096
    max_koszul_faces: int = 1 << 20
    max_spairs: int = 200_000
    max_conjecture_rows: int = 3
    max_conjecture_cols: int = 6
    max_conjecture_factors: int = 2


DEFAULT_CAPS = Caps()

_CAP_NAMES = {f.name for f in fields(Caps)}

# Non-cap keys a caps file may set as run defaults (CLI flags still win).
_EXTRA_KEYS = {"format", "seed", "char"}


def parse_caps_text(text: str) -> tuple[Caps, dict]:
    """Parse ``key = value`` lines into (Caps, extra run defaults)."""
    values = {}
    extras = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise FormatError(f"caps line {lineno}: expected 'key = value', got {raw!r}")
        key, _, val = line.partition("=")
        key = key.strip()
        val = val.strip()
        if key in _CAP_NAMES:
            try:
                values[key] = int(val)
            except ValueError:
                raise FormatError(f"caps line {lineno}: {key} needs an integer, got {val!r}") from None
        elif key in _EXTRA_KEYS:
            extras[key] = val
        else:
            raise FormatError(f"caps line {lineno}: unknown key {key!r}")
    for key, num in values.items():
        if num < 1:
            raise FormatError(f"cap {key} must be positive, got {num}")
    return replace(DEFAULT_CAPS, **values), extras


def load_caps_file(path: str) -> tuple[Caps, dict]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise FormatError(f"cannot read caps file {path}: {exc}") from None
    return parse_caps_text(text)
