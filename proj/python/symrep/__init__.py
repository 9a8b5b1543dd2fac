"""Representativeness invariants and invariant transversals of finite graphs.

Thin Python face of the C++ core: graphs, permutation actions, subgraph
occurrence families, exact hitting sets, automorphism groups, the
transversal-symmetrization construction, and the executable theorem checks.
"""

from symrep._core import (  # noqa: F401
    AutResult,
    CheckReport,
    Graph,
    GraphKind,
    HittingResult,
    HoneycombTorus,
    InvariantHittingResult,
    Lemma1Class,
    Mode,
    OccurrenceFamily,
    OrbitPartition,
    Perm,
    PermAction,
    Prop1Case,
    Prop1Params,
    RepResult,
    SetFamily,
    StarOrientation,
    SymmetrizeResult,
    SymrepError,
    __version__,
    act_on_set,
    automorphisms,
    chained_copies,
    chair,
    check_2k2_example,
    check_corollary1,
    check_disconnected_bound,
    check_lemma1_exhaustive,
    check_proposition1,
    check_theorem1,
    check_theorem2,
    circulant,
    complete,
    complete_bipartite,
    components,
    contains_subgraph,
    cube_q3,
    cycle,
    disjoint_copies,
    disjoint_union,
    enumerate_occurrences,
    find_lemma1_graph,
    honeycomb_torus,
    induced_subgraph,
    is_edge_transitive,
    is_invariant_family,
    is_vertex_transitive,
    isomorphic,
    joined_stars,
    lemma1_classify,
    load_graph_file,
    make_graph,
    mars_demo,
    min_hitting_set,
    min_invariant_hitting,
    neumann_sum,
    orbits,
    parse_graph,
    path,
    petersen,
    predicate_family,
    representativeness,
    save_graph_file,
    serialize_graph,
    star,
    symmetrize,
    verify_transversal,
    vt_completion,
)
