from modules.cavity_model.hamiltonian import (
    HermitianMatrix,
    build_full_hamiltonian,
    build_hamiltonian,
    build_number_operator,
    build_rotation_operator,
    build_symmetry_projectors,
    sector_embedding,
)
from modules.cavity_model.initial_states import (
    ALPHA_W,
    Family,
    InitialStateSpec,
    SectorVector,
    build_initial_state,
)
from modules.cavity_model.model_params import (
    Layout,
    ModelParams,
    PairSumConvention,
    configuration_params,
    homogeneous_params,
    quasi_homogeneous_params,
)
from modules.cavity_model.sector_basis import (
    QUBIT_ORDER,
    ExcitationSector,
    SectorBasis,
    build_sector_basis,
)
