"""Truncated q-series arithmetic, MacMahon-type series and identity checks."""

from ._core import (
    DomainError,
    DslError,
    QSeriesError,
    Series,
    bounds_quin,
    bounds_sept,
    cor_quin_coefficients,
    cor_sept_coefficients,
    eval,
    first_mismatch,
    identities,
    invert,
    m_oracle,
    modd_oracle,
    pochhammer,
    shift,
    theta6,
    verify,
)

__all__ = [
    "DomainError",
    "DslError",
    "QSeriesError",
    "Series",
    "bounds_quin",
    "bounds_sept",
    "cor_quin_coefficients",
    "cor_sept_coefficients",
    "eval",
    "first_mismatch",
    "identities",
    "invert",
    "m_oracle",
    "modd_oracle",
    "pochhammer",
    "shift",
    "theta6",
    "verify",
]
