"""Geodesic growth series of right-angled Coxeter and Artin groups."""
from .algebra import (
    NotAPowerSeries,
    Polynomial,
    RationalFunction,
    SingularSystemError,
    poly_gcd,
    ratfunc_normalize,
    series_coefficients,
    solve_linear_system,
)
from .formulas import (
    GroupKind,
    SystemBundle,
    build_and_solve_system,
    closed_formula_raag,
    closed_formula_racg,
    example_family_formula,
    p_delta,
    p_e,
    p_v,
    triangle_free_formula,
)
from .geodesics import (
    BudgetExceeded,
    CensusReport,
    CliqueAutomaton,
    Word,
    automaton_census,
    brute_census,
    build_automaton,
    is_geodesic,
    normal_form,
    raag_census_via_double,
)
from .graph import (
    LinkRegularParams,
    SimplicialGraph,
    check_link_regular,
    double,
    enumerate_cliques,
    f_polynomial,
    generate_family,
    link,
    star,
)
from .graphfile import parse_graph_file, write_graph_file

__version__ = "0.1.0"
