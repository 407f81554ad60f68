#!/usr/bin/env python3

""" Analyses of codes: Kerdock structure, designs, association schemes and
i-components. """

from kerdocklab.analysis.structure import (
    PropertyVerdict,
    check_coset_union,
    check_rm_weight_class,
    check_coset_distances,
    check_rm_in_kernel,
    check_half_distance_closure,
    kerdock_self_check,
)
from kerdocklab.analysis.design import (
    DesignReport,
    design_strength,
    magic_identity,
    assmus_mattson_strength,
    krawtchouk,
    macwilliams_transform,
    macwilliams_polynomial,
)
from kerdocklab.analysis.scheme import (
    IntersectionTensor,
    SchemeChecker,
    restriction_scheme_check,
    predicted_kerdock_deltas,
    doubly_shortened_kerdock,
    extension_relation_check,
)
from kerdocklab.analysis.components import (
    ComponentReport,
    ComponentSweep,
    ComponentAnalyzer,
    DisjointSet,
    i_components,
    bfs_component_count,
    linear_span_components,
    parity_classification_check,
    parity_classification_sweep,
    switching_check,
    min_weight_neighbor_check,
    min_weight_span_rank,
)
