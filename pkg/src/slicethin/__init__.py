"""Sequential slice-based thinning of k-dimensional binary patterns."""

from .baselines import gh_thin, zs_thin
from .formats import (
    export_voxels_csv,
    read_ndbin,
    read_pbm,
    write_ndbin,
    write_pbm,
)
from .metrics import MetricsReport, evaluate, measure_mt, size_ratio
from .pattern import (
    as_pattern,
    connected_components,
    component_count,
    neighborhood,
    non_unit_width_pixels,
)
from .shapes import RuggedSpec, ShapeSpec, generate, ruggedize
from .thinning import (
    Schedule,
    contour_deletable,
    extract_runs,
    is_endpoint,
    thin,
    thin_subcycle,
)

__all__ = [
    "MetricsReport",
    "RuggedSpec",
    "Schedule",
    "ShapeSpec",
    "as_pattern",
    "component_count",
    "connected_components",
    "contour_deletable",
    "evaluate",
    "export_voxels_csv",
    "extract_runs",
    "generate",
    "gh_thin",
    "is_endpoint",
    "measure_mt",
    "neighborhood",
    "non_unit_width_pixels",
    "read_ndbin",
    "read_pbm",
    "ruggedize",
    "size_ratio",
    "thin",
    "thin_subcycle",
    "write_ndbin",
    "write_pbm",
    "zs_thin",
]

__version__ = "0.1.0"
