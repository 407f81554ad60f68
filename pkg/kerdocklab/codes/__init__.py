#!/usr/bin/env python3

""" Codes and their constructions.

* :class:`~kerdocklab.codes.Code`: immutable, canonically sorted set of
  bit-packed codewords with cached weights and minimum distance.
* Families: :func:`build_rm1`, :func:`build_kerdock`, :func:`build_bch_c13`,
  :func:`build_trace_dual`.
* Operators: :func:`puncture`, :func:`shorten`, :func:`translate`,
  :func:`extend_complement`, :func:`distance_set`, :func:`kernel`.
* Storage: :func:`write_code`, :func:`read_code`.
"""

from kerdocklab.codes.code import Code, Codeword, WeightDistribution
from kerdocklab.codes.families import (
    build_rm1,
    build_kerdock,
    build_bch_c13,
    build_trace_dual,
    cached_family,
    coset_keys,
    gold_exponent,
    kerdock_parameters,
    ParityCheckCode,
)
from kerdocklab.codes.operators import (
    puncture,
    shorten,
    translate,
    extend_complement,
    complement_precondition,
    ComplementExtension,
    weight_distribution,
    distance_set,
    kernel,
    kernel_contains,
    is_linear,
    as_linear,
)
from kerdocklab.codes.storage import write_code, read_code
