"""Number variance of dilated integer sequences, in exact 128-bit arithmetic.

Subpackages by topic: points (sequences, dilation, continued fractions),
variance (the two exact V(N,S) routes), dyadic (plateau decomposition of the
tent kernel), arithmetic (representation numbers, energies, divisor and gcd
sums), baselines (random and Kronecker references), cli (scans and output).
"""

from .arithmetic import (BudgetExceeded, DifferenceSet, RepTable,
                         additive_energy, congruence_solution_count,
                         difference_set, divisibility_bound_check,
                         divisor_lists, energy_direct, energy_window,
                         gcd_average, gcd_sum, normalize_polynomial,
                         rep_quadratic_divisor, rep_table, sparse_u2_mass,
                         tau_moment_sum, tau_sieve)
from .baselines import (BridgePath, RandomSample, bridge_functional,
                        bridge_path, kronecker_experiment,
                        prop2_exceedance_scan, random_variance_experiment,
                        sample_uniform)
from .cli import (ExperimentConfig, ScanResult, config_hash, emit,
                  estimate_pairs, main, parse, parse_config, run_scan)
from .dyadic import (DyadicExpansion, PlateauKernel, decompose, plateau_eval,
                     plateau_fourier, plateau_mean, verify_decomposition,
                     y_statistic)
from .points import (GRID_BITS, GRID_ONE, Alpha, PointSet, SequenceSpec,
                     continued_fraction_convergents, dilate_mod1,
                     generate_terms)
from .variance import (TentKernel, VarianceRecord, WindowAccumulator,
                       as_dyadic, counting_function, periodized_tent,
                       variance_for_alpha, variance_pairwise, variance_sweep)

__version__ = "0.1.0"
