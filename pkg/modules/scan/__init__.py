from modules.scan.density_scan import (
    HamiltonianModel,
    ScanGrid,
    concurrence_purity_correlation,
    critical_j,
    critical_region_extent,
    density_scan,
)
from modules.scan.envelope import EnvelopeReport, envelope_check
from modules.scan.trajectory import (
    CONCURRENCE,
    PURITY,
    TrajectoryPoint,
    cp_trajectory,
    red_curve,
    time_grid,
    trajectory_layers,
)
from modules.scan.worker_pool import WorkerPool
