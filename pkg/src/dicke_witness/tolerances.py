"""Numerical tolerance constants, centralized in one frozen record."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # state validity
    state_norm: float = 1e-10
    hermiticity: float = 1e-10
    trace: float = 1e-10
    psd_min_eigenvalue: float = -1e-8
    family_weight_sum: float = 1e-12

    # criterion evaluation
    detection: float = 1e-9          # value above this counts as "detected"
    negative_diagonal: float = -1e-10  # diagonals below this are a numerical-validity error
    report_consistency: float = 1e-12

    # cross-checks and oracles
    oracle_match: float = 1e-10
    element_reconstruction: float = 1e-12
    lemma_slack: float = 1e-10
    decomposition_match: float = 1e-10

    # thresholds
    bisection: float = 1e-8
    threshold_agreement: float = 1e-6

    # witness
    witness_margin: float = 1e-9


TOL = Tolerances()
