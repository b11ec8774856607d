"""Distinct-parts partitions of n with largest part at most t*sqrt(n).

Exact counts, the asymptotic formula A_n(t) n^{-3/4} e^{B(t) sqrt n}, the
Boltzmann model behind it, and numerical checks of the supporting lemmas.
"""
from .asymptotics import (AsymptoticEstimate, compare_sweep, estimate_dt,
                          hardy_ramanujan_d, limit_shape, prop1_defect,
                          saddle_eval)
from .beta_solver import (BetaSolution, a_n, amplitude, beta_prime, big_B,
                          solve_beta)
from .boltzmann import (BoltzmannModel, build_model, prob_N_exact, sample,
                        variance_asymptotic)
from .errors import BudgetExceeded, ConvergenceError, DomainError
from .exact_count import (CountTable, Partition, build_table, d_t,
                          d_unrestricted, log_D)
from .local_limit import (char_fn, clt_pointwise_error, fourier_invert,
                          gaussian_domination_profile, tail_smallness)
from .lemmas import f_x, lemma1_max_ratio, lemma2_min, weyl_sum
from .special_functions import frac_part, li2

__version__ = "0.1.0"
