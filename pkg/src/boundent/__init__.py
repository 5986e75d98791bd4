"""Time evolution of bound entangled two-qutrit states.

Submodules:

``linalg``      Jacobi eigenvalues, singular values and trace norms.
``model``       spin-1 operators, the bilinear-biquadratic propagator, initial states.
``criteria``    partial transpose, realignment, negativity, classification.
``analytic``    closed forms for the swap-evolved Horodecki family.
``validation``  numeric-versus-closed-form agreement suite.
``cli``         ``sweep`` / ``analyze`` / ``validate`` command line.
"""
from .analytic import (abc_coefficients, n1_vanishing_threshold, negativity_closed,
                       pt_spectrum_closed, realign_norm_closed, realign_singulars_closed,
                       t0_norms_closed)
from .criteria import (Classification, CriteriaReport, classify, concurrence_lower_bound,
                       negativity, partial_transpose, realign, realignment_measure, report)
from .errors import (AlphaOutOfRange, BoundEntError, DimensionMismatch, InvalidState,
                     NoConvergence, NotHermitian)
from .linalg import conjugate_transpose, hermitian_eigenvalues, kron, singular_values, trace_norm
from .model import (DensityMatrix, ModelParams, UnitaryOperator, evolution_operator, evolve,
                    hamiltonian, horodecki_state, max_entangled_projector, singlet_projector,
                    spin1_operators, swap_operator, upb_pyramid_state, upb_tiles_state)

__version__ = "0.1.0"
