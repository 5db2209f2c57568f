"""Subset reductions of multi-qubit states.

Every quantity here reduces to reshaping a state so that the qubits of a
subset ``S`` form the row index, which turns the SWAP_S identity
``tr rho_S^2 = <psi psi|SWAP_S|psi psi>`` into small matrix products.
"""
import itertools
import math

import numpy as np

from modules.errors import InvalidInputError


def qubit_count(state):
    n_qubits = int(round(math.log2(state.shape[-1])))
    if 2 ** n_qubits != state.shape[-1] or n_qubits < 1:
        raise InvalidInputError(f"state length {state.shape[-1]} is not a power of two")
    return n_qubits


def proper_subsets(n_qubits):
    """Nonempty proper subsets of qubit axes (0-based), in bitmask order."""
    return [
        tuple(q for q in range(n_qubits) if mask >> (n_qubits - 1 - q) & 1)
        for mask in range(1, 2 ** n_qubits - 1)
    ]


def check_subset(subset, n_qubits):
    """Validate a 1-based subset and return it as sorted 0-based axes."""
    axes = tuple(sorted({int(q) - 1 for q in subset}))
    if not axes or len(axes) >= n_qubits:
        raise InvalidInputError(f"subset {tuple(subset)} must be nonempty and proper")
    if axes[0] < 0 or axes[-1] >= n_qubits:
        raise InvalidInputError(f"subset {tuple(subset)} names qubits outside 1..{n_qubits}")
    return axes


def split(states, axes, n_qubits):
    """Reshape (..., 2**N) states to (..., 2**|S|, 2**(N-|S|)) with ``axes`` as rows."""
    lead = states.shape[:-1]
    rest = tuple(q for q in range(n_qubits) if q not in axes)
    tensor = states.reshape(lead + (2,) * n_qubits)
    offset = len(lead)
    order = tuple(range(offset)) + tuple(offset + q for q in axes + rest)
    return tensor.transpose(order).reshape(lead + (2 ** len(axes), 2 ** len(rest)))


def reduced_purity(state, axes, n_qubits):
    block = split(state, axes, n_qubits)
    rho = block @ block.conj().T
    return float(np.real(np.vdot(rho, rho)))


def reduced_linear_entropy(state, axes, n_qubits):
    """``1 - tr rho_S^2`` as a sum of squared 2x2 minors of the split state.

    Unlike subtracting the purity from one, this keeps full relative accuracy
    for nearly separable states.
    """
    block = split(state, axes, n_qubits)
    minors = np.einsum("ab,cd->acbd", block, block) - np.einsum("ad,cb->acbd", block, block)
    norm = np.real(np.vdot(block, block))
    return float(0.5 * np.sum(np.abs(minors) ** 2) / norm ** 2)


def linear_entropy_sum(state, n_qubits):
    return sum(reduced_linear_entropy(state, axes, n_qubits) for axes in proper_subsets(n_qubits))


def operator_weight(n_qubits):
    return 2.0 ** (2 - n_qubits)


def concurrence_operator_rows(anchor, vectors, n_qubits):
    """``<anchor anchor| A |v_j v_k>`` for all j, k, as a complex symmetric matrix.

    ``A = 2^(2-N) sum_S (1 - SWAP_S)`` is applied through exchange contractions:
    ``<a b|SWAP_S|c d> = tr(C_S A_S^+ D_S B_S^+)``.
    """
    overlaps = vectors @ anchor.conj()
    total = len(proper_subsets(n_qubits)) * np.outer(overlaps, overlaps)
    for axes in proper_subsets(n_qubits):
        anchor_block = split(anchor, axes, n_qubits)
        blocks = split(vectors, axes, n_qubits)
        products = np.einsum("jsr,tr->jst", blocks, anchor_block.conj())
        total = total - np.einsum("jst,kts->jk", products, products)
    return operator_weight(n_qubits) * total


def concurrence_operator_element(bra_a, bra_b, ket_c, ket_d):
    """``<a b| A |c d>`` for single states, by the same exchange contractions."""
    n_qubits = qubit_count(ket_c)
    subsets = proper_subsets(n_qubits)
    value = len(subsets) * np.vdot(bra_a, ket_c) * np.vdot(bra_b, ket_d)
    for axes in subsets:
        a, b, c, d = (split(v, axes, n_qubits) for v in (bra_a, bra_b, ket_c, ket_d))
        value -= np.trace(c @ a.conj().T @ d @ b.conj().T)
    return operator_weight(n_qubits) * value
