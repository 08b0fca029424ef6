from ._core import (
    Delta,
    E,
    Functional,
    FloorTooShallow,
    H,
    H0,
    NoSolutionInBasis,
    ParseError,
    Poly,
    Toda,
    bernoulli,
    e,
    g0,
    g1,
    gelfand_dickii,
    hamiltonian_vf,
    kdv_flow,
    nabla,
    pee,
    poisson_bracket,
    run_suite,
    schouten_bracket,
    shift,
    solve_g,
    suite_names,
)

__all__ = [
    "Delta",
    "E",
    "Functional",
    "FloorTooShallow",
    "H",
    "H0",
    "NoSolutionInBasis",
    "ParseError",
    "Poly",
    "Toda",
    "bernoulli",
    "e",
    "g0",
    "g1",
    "gelfand_dickii",
    "hamiltonian_vf",
    "kdv_flow",
    "nabla",
    "pee",
    "poisson_bracket",
    "run_suite",
    "schouten_bracket",
    "shift",
    "solve_g",
    "suite_names",
]
