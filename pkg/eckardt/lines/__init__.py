from .config import TrackerConfig
from .system import cubic_tensor, line_system, random_chart, LineSystem
from .geometry import (
    projective_distance, projective_distance_matrix, normalize_point, ComplexLine, EckardtCluster, eckardt_numeric
)
from .tracker import PathResult, start_solutions, track_paths, track_all
from .crossval import CrossValidationReport, cross_validate
