import os

from ..misc.errors import ResourceGuardError, ValidationError

DEFAULT_MAX_CELLS = 2**24


def max_cells() -> int:
    raw = os.environ.get("PAA_MAX_STATES")
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        limit = int(raw)
    except ValueError:
        raise ValidationError(f"PAA_MAX_STATES must be an integer, got {raw!r}")
    if limit < 1:
        raise ValidationError("PAA_MAX_STATES must be positive")
    return limit


def guard_cells(cells: int, what: str) -> None:
    limit = max_cells()
    if cells > limit:
        raise ResourceGuardError(
            f"{what} needs {cells} cells, above the limit of {limit} "
            "(raise PAA_MAX_STATES to allow it)"
        )
