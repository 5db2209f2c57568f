from modules.entanglement.concurrence import (
    PureQubitState,
    RhoSpectrum,
    concurrence_family_phi,
    concurrence_family_psi,
    concurrence_pure,
    concurrence_quasipure,
    decomposition_average,
    rho_spectrum,
    subset_purity,
)
from modules.entanglement.entanglement_context import EntanglementContext
from modules.entanglement.models.convex_roof_optimizer import ConvexRoofOptimizer, concurrence_upper_bound
from modules.entanglement.random_ensembles import (
    random_density_matrix,
    random_local_unitary,
    random_pure_state,
    random_unitary,
)
