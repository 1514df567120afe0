"""Exact partition statistics, q-series tables and identity sweeps."""

from ._partlab import (
    M_ell,
    M_ell_enum,
    MP_ell,
    MP_ell_enum,
    Q,
    a_k,
    a_kp,
    a_kp_enum,
    b_k,
    b_k_enum,
    c,
    c_k,
    c_subset_oracle,
    euler_product,
    find_bad_exponent_counterexample,
    gaussian_binomial,
    overpartition_counts,
    p,
    partitions,
    pentagonal_series,
    run_cli,
    theta_truncated,
    verify_all,
)

__all__ = [
    "M_ell",
    "M_ell_enum",
    "MP_ell",
    "MP_ell_enum",
    "Q",
    "a_k",
    "a_kp",
    "a_kp_enum",
    "b_k",
    "b_k_enum",
    "c",
    "c_k",
    "c_subset_oracle",
    "euler_product",
    "find_bad_exponent_counterexample",
    "gaussian_binomial",
    "overpartition_counts",
    "p",
    "partitions",
    "pentagonal_series",
    "run_cli",
    "theta_truncated",
    "verify_all",
]
