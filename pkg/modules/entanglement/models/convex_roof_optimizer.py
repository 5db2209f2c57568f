import logging

import torch

from modules.entanglement.concurrence import decomposition_average, rho_spectrum
from modules.entanglement.subsets import proper_subsets, qubit_count
from modules.errors import InvalidParameterError

logger = logging.getLogger(__name__)

SQRT_EPS = 1e-18


class ConvexRoofOptimizer:
    """Upper bound on the convex-roof concurrence by searching over decompositions.

    An ensemble ``psi~_k = sum_i U_ki chi_i`` is built from the subnormalized
    eigenvectors ``chi_i`` and the first ``rank`` columns of a unitary
    ``U = exp(X - X^+)``. Every such ensemble realizes the state, so the mean
    concurrence of any of them bounds the convex roof from above. Restart 0
    starts from the spectral ensemble.
    """

    def __init__(self, restarts=8, iterations=200, extra_members=2, learning_rate=0.05, seed=0, device="cpu"):
        if restarts <= 0 or iterations <= 0:
            raise InvalidParameterError(
                f"restarts and iterations must be positive, got {restarts} and {iterations}"
            )
        if extra_members < 0:
            raise InvalidParameterError(f"extra_members must be nonnegative, got {extra_members}")
        self.restarts = int(restarts)
        self.iterations = int(iterations)
        self.extra_members = int(extra_members)
        self.learning_rate = learning_rate
        self.seed = seed
        self.device = torch.device(device)

    def _mixing(self, generator_real, generator_imag, rank):
        generator = torch.complex(generator_real, generator_imag)
        return torch.linalg.matrix_exp(generator - generator.mH)[..., :rank]

    def _loss(self, members, n_qubits):
        """Decomposition average per restart; ``members`` is (restarts, size, 2**N), subnormalized."""
        lead = members.shape[:2]
        norms = (members.abs() ** 2).sum(dim=-1)
        deficit = (2 ** n_qubits - 2) * norms ** 2
        tensor = members.reshape(lead + (2,) * n_qubits)
        for axes in proper_subsets(n_qubits):
            rest = tuple(q for q in range(n_qubits) if q not in axes)
            block = tensor.permute((0, 1) + tuple(2 + q for q in axes + rest))
            block = block.reshape(lead + (2 ** len(axes), 2 ** len(rest)))
            rho = block @ block.mH
            deficit = deficit - (rho.abs() ** 2).sum(dim=(-2, -1))
        scale = 2.0 ** (1.0 - n_qubits / 2.0)
        return scale * torch.sqrt(deficit.clamp(min=0.0) + SQRT_EPS).sum(dim=-1)

    def _exact(self, mixing, chi):
        members = (mixing @ chi).detach().cpu().numpy()
        return decomposition_average(members)

    def _starts(self, size):
        rng = torch.Generator(device="cpu").manual_seed(self.seed)
        start = torch.zeros(self.restarts, 2, size, size, dtype=torch.float64)
        for restart in range(1, self.restarts):
            start[restart] = torch.randn(2, size, size, dtype=torch.float64, generator=rng)
        return start.to(self.device)

    def minimize(self, rho):
        spectrum = rho_spectrum(rho)
        rank = spectrum.rank
        size = rank + self.extra_members
        n_qubits = qubit_count(spectrum.vectors)
        chi = torch.as_tensor(spectrum.subnormalized, dtype=torch.complex128, device=self.device)

        # restarts share one batch; each loss depends only on its own generators
        start = self._starts(size)
        generator_real = start[:, 0].clone().requires_grad_(True)
        generator_imag = start[:, 1].clone().requires_grad_(True)
        optimizer = torch.optim.Adam([generator_real, generator_imag], lr=self.learning_rate)

        best_loss = torch.full((self.restarts,), float("inf"), dtype=torch.float64, device=self.device)
        with torch.no_grad():
            best_mixing = self._mixing(generator_real, generator_imag, rank)
        for _ in range(self.iterations):
            optimizer.zero_grad()
            mixing = self._mixing(generator_real, generator_imag, rank)
            losses = self._loss(mixing @ chi, n_qubits)
            with torch.no_grad():
                improved = losses < best_loss
                best_loss = torch.where(improved, losses, best_loss)
                best_mixing = torch.where(improved[:, None, None], mixing, best_mixing)
            losses.sum().backward()
            optimizer.step()

        with torch.no_grad():
            final_mixing = self._mixing(generator_real, generator_imag, rank)
        best = float("inf")
        for restart in range(self.restarts):
            value = min(self._exact(final_mixing[restart], chi), self._exact(best_mixing[restart], chi))
            logger.debug("restart %d: decomposition average %.12g", restart, value)
            best = min(best, value)
        return best


def concurrence_upper_bound(rho, restarts, iterations, seed=0, extra_members=2):
    optimizer = ConvexRoofOptimizer(
        restarts=restarts, iterations=iterations, extra_members=extra_members, seed=seed
    )
    return optimizer.minimize(rho)
