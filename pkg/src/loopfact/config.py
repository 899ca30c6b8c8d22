"""Shared numerical configuration.

All truncation sizes and tolerances used by the factorization routines live
in one record so that every verification run is reproducible from pinned
defaults.  CLI flags may override individual fields.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class RunConfig:
    #: block Toeplitz truncation size (number of nonnegative degrees kept)
    n_toeplitz: int = 64
    #: number of unit-circle samples for pointwise decompositions / DFT
    samples: int = 256
    #: tolerance for exact-degree Laurent-polynomial algebra
    tol_exact: float = 1e-10
    #: tolerance for Toeplitz-truncation comparisons
    tol_trunc: float = 1e-6

    def with_overrides(self, **kw) -> "RunConfig":
        kw = {k: v for k, v in kw.items() if v is not None}
        return replace(self, **kw) if kw else self


DEFAULTS = RunConfig()
