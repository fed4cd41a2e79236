"""Desk-scale workbench for independent-vertex-cut characterizations.

Bitmask graph kernel, exact connectivity via unit-capacity flow,
independent-set/matching enumeration, isomorph-free generation with
canonical forms and graph6 interchange, and certificate-producing
checkers swept exhaustively over all small graphs.
"""

from .graphs import (Graph, GraphError, DistanceProfile, bits, build_graph, components,
                     delete_vertices, deletion_map, distance_profile, is_connected,
                     is_independent_set, is_vertex_cut, mask_of)
from .connectivity import (CutWitness, edge_connectivity, is_k_connected,
                           is_k_edge_connected, local_vertex_connectivity,
                           min_vertex_cut, vertex_connectivity)
from .subsets import (Matching, find_induced_claw, independence_number,
                      independent_sets_of_size, line_graph, matching_number,
                      matchings_of_size, remove_edges)
from .constructions import (complete, complete_bipartite, cycle, kss_minus_pm, path,
                            random_connected, standard)
from .enumeration import (CanonicalForm, GenFilter, Graph6Error, are_isomorphic,
                          canonical_form, canonical_graph, clear_generation_cache,
                          generate_all,
                          generation_forms, graph6_decode, graph6_encode, permute,
                          read_graph6_stream)
from .verdicts import (Certificate, SweepReport, check_conjecture3, check_corollary2,
                       check_pair_cut_characterization, check_theorem1_conditions,
                       hunt_special_periphery, recheck_certificate, sweep,
                       theorem1_sweep, verify_observation4)

__version__ = "0.1.0"
