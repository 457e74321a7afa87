"""Riesz-Hilbert, fractional and monogenic transforms of quaternion-valued fields.

Fields are numpy arrays. An array of shape ``dims`` is a scalar field; a
trailing axis of length 4 holds the coefficients of 1, i, j, k. Results are
complex arrays of shape ``dims + (4,)``.
"""

from ._qriesz import (
    DomainError,
    FormatError,
    SingularParameterError,
    dft,
    frac_hilbert,
    frac_monogenic,
    hardy_project,
    hilbert,
    idft,
    inner,
    local_features,
    monogenic,
    qfrac_hilbert,
    qfrac_monogenic,
    reconstruct,
    riesz_symbol,
    strip_self_conjugate,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "FormatError",
    "SingularParameterError",
    "dft",
    "frac_hilbert",
    "frac_monogenic",
    "hardy_project",
    "hilbert",
    "idft",
    "inner",
    "local_features",
    "monogenic",
    "qfrac_hilbert",
    "qfrac_monogenic",
    "reconstruct",
    "riesz_symbol",
    "strip_self_conjugate",
]
