"""Long path and long cycle on unit disk graphs.

Points are (x, y) centers of unit-radius disks; two disks are adjacent when
their centers are at distance at most 2.
"""

from ._udgpath import (
    ContractViolation,
    InputError,
    RefusalError,
    SolveReport,
    SolveStats,
    generate,
    longest_cycle,
    longest_path,
    read_instance,
    render_svg,
    solve,
    summary,
    unit_disk_edges,
    write_instance,
)

__all__ = [
    "ContractViolation",
    "InputError",
    "RefusalError",
    "SolveReport",
    "SolveStats",
    "generate",
    "longest_cycle",
    "longest_path",
    "read_instance",
    "render_svg",
    "solve",
    "summary",
    "unit_disk_edges",
    "write_instance",
]
