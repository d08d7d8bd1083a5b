"""Signless Laplacian spectra, S_alpha bounds and conjecture checks."""

from ._core import (
    BoundReport,
    CounterexampleReport,
    Graph,
    Spectrum,
    __version__,
    bipartite_bound,
    complete,
    complete_bipartite,
    components,
    connectivity_bound,
    cycle,
    delete_edge,
    disjoint_union,
    exhaustive_verify,
    f_profile,
    find_counterexample_conj1,
    find_counterexample_conj2,
    from_graph6,
    g_profile,
    join,
    join_split,
    p_coefficient,
    path,
    quotient_eigenvalues,
    run_cli,
    s_alpha,
    spectrum_complete,
    spectrum_complete_bipartite,
    spectrum_join_split,
    spectrum_of,
    to_graph6,
    verify_conjecture1,
    vertex_connectivity,
    zeta,
)
