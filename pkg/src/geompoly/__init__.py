"""Exact computation and verification for geometric polynomials and p-Bernoulli numbers."""

from .bernoulli import bernoulli, pbernoulli_explicit, pbernoulli_via_stirling1, tangent_check
from .exactnum import (
    Rational,
    ResidueModQ,
    binomial,
    is_prime,
    pochhammer,
    rational_residue,
    stirling1,
    stirling1r,
    stirling2,
    stirling2r,
)
from .geomfamily import (
    exp_poly,
    geom_number,
    geom_poly,
    geom_poly_explicit,
    geom_two_var,
    rbell_poly,
)
from .polyalg import BiPoly, TruncSeries, UniPoly, egf_reference, gamma_moment, integrate_unit, poly_eval

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memoised table and polynomial (useful for cold timings)."""
    from importlib import import_module

    # the package namespace shadows the bernoulli module with the function
    _b, _e, _g, _i = (import_module(f"{__name__}.{m}")
                      for m in ("bernoulli", "exactnum", "geomfamily", "identities"))

    with _e._tables_lock:
        _e._tables.clear()
    _b._cache = _b.BernoulliCache()
    for fn in (_g.exp_poly, _g.rbell_poly, _g.geom_poly, _g.geom_poly_explicit, _g.geom_two_var,
               _b.pbernoulli_explicit, _b.pbernoulli_via_stirling1, _i._egf_values):
        fn.cache_clear()
