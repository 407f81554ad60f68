#!/usr/bin/env python3

""" The claims checked by :class:`~kerdocklab.verify.VerificationHarness`.

Every checker has the signature ``checker(factory, **params)`` and returns
``(computed, mode)``; a claim passes iff ``computed`` equals its expected
value. Checkers are module level functions so that claims can be sent to
worker processes.
"""

# std
from typing import Dict, List

# 3rd party
import numpy as np

# ours
from kerdocklab.analysis.components import (
    ComponentAnalyzer,
    GRAPH,
    SPAN,
    bfs_component_count,
    i_components,
    linear_span_components,
    min_weight_neighbor_check,
    min_weight_span_rank,
    parity_classification_sweep,
    switching_check,
)
from kerdocklab.analysis.design import (
    design_strength,
    macwilliams_polynomial,
    macwilliams_transform,
    magic_identity,
    assmus_mattson_strength,
)
from kerdocklab.analysis.scheme import (
    FULL as FULL_MODE,
    SAMPLED as SAMPLED_MODE,
    doubly_shortened_kerdock,
    extension_relation_check,
    kerdock_base_deltas,
    kerdock_extension_deltas,
    predicted_kerdock_deltas,
    restriction_scheme_check,
)
from kerdocklab.analysis.structure import (
    EXHAUSTIVE,
    SAMPLED,
    check_coset_distances,
    check_coset_union,
    check_half_distance_closure,
    check_rm_in_kernel,
    check_rm_weight_class,
)
from kerdocklab.codes.code import Code
from kerdocklab.codes.families import build_rm1, kerdock_parameters
from kerdocklab.codes.operators import extend_complement, shorten
from kerdocklab.codes.storage import decode_code, encode_code
from kerdocklab.verify.claim import Claim, FULL, QUICK

# ******************************************************************************
# Closed forms
# ******************************************************************************


def kerdock_weight_formula(m: int) -> Dict[int, int]:
    n, d = kerdock_parameters(m)
    return {0: 1, d: n * (n - 2) // 2, n // 2: 2 * n - 2, n - d: n * (n - 2) // 2, n: 1}


def bch_dual_weight_formula(m: int) -> Dict[int, int]:
    """ Weights of the dual of C_{1,3} of length ``2^m - 1``, ``m`` odd. """
    n = 2 ** m
    root_2n = 2 ** ((m + 1) // 2)
    root_n_8 = 2 ** ((m - 3) // 2)
    d = (n - root_2n) // 2
    return {
        0: 1,
        d: (n - 1) * (n // 4 + root_n_8),
        n // 2: (n - 1) * (n // 2 + 1),
        n - d: (n - 1) * (n // 4 - root_n_8),
    }


def _str_keys(d: dict) -> dict:
    return {str(k): v for k, v in d.items()}


# ******************************************************************************
# Checkers
# ******************************************************************************


def check_weights(factory, family: str, m: int, e: int = 3):
    code = factory.get(family, m, e)
    return code.weight_distribution().to_dict(), EXHAUSTIVE


def check_kerdock_structure(
    factory, family: str, m: int, mode: str, pairs: int = 10 ** 5, seed: int = 0
):
    code = factory.get(family, m)
    n, d = kerdock_parameters(m)
    verdicts = [
        check_coset_union(code, m),
        check_rm_weight_class(code, m),
        check_coset_distances(code, m, mode=mode, pairs=pairs, seed=seed),
        check_rm_in_kernel(code, m),
        check_half_distance_closure(code, m, mode=mode, pairs=pairs, seed=seed),
    ]
    computed = {v.name: v.holds for v in verdicts}
    weights = set(int(w) for w in np.unique(code.weights()))
    computed["weights"] = weights <= {0, d, n // 2, n - d, n}
    return computed, mode


def _dual_min_distance(wd) -> int:
    dual = macwilliams_transform(wd)
    return min(w for w in dual if w > 0)


def check_weight_class_designs(factory, family: str, m: int, max_t: int):
    code = factory.get(family, m)
    wd = code.weight_distribution()
    prediction = assmus_mattson_strength(wd, _dual_min_distance(wd))
    s_bar = len(wd.nontrivial_weights())
    computed = {"nontrivial_weight_count": s_bar}
    strengths = []
    for w in wd.nontrivial_weights():
        report = design_strength(
            code.with_weight(w), max_t=max_t, nontrivial_weight_count=s_bar
        )
        computed[str(w)] = {"strength": report.strength, "lambdas": report.lambdas}
        strengths.append(report.strength)
    computed["prediction"] = prediction
    computed["meets_prediction"] = all(s >= prediction for s in strengths)
    return computed, EXHAUSTIVE


def _shortened(factory, family: str, m: int, times: int, e: int = 3) -> Code:
    """ The code shortened ``times`` (0, 1 or 2) times in its last
    coordinates. """
    code = factory.get(family, m, e)
    if times == 2:
        return doubly_shortened_kerdock(m, code)
    if times == 1:
        return shorten(code, code.n - 1)
    if times == 0:
        return code
    raise ValueError("Can shorten 0, 1 or 2 times, not {}.".format(times))


def check_scheme(
    factory,
    family: str,
    m: int,
    e: int = 3,
    shortenings: int = 2,
    mode: str = FULL_MODE,
    seed=None,
    trials=10 ** 5,
):
    tensor = restriction_scheme_check(
        _shortened(factory, family, m, shortenings, e),
        mode=mode,
        seed=seed,
        trials=trials,
    )
    computed = {
        "consistent": tensor.consistent,
        "symmetric": tensor.is_symmetric(),
        "relations": tensor.relations,
    }
    if mode == FULL_MODE:
        computed["row_sums"] = tensor.row_sum_property()
    return computed, mode


def check_kerdock_deltas(factory, family: str, m: int):
    n, d = kerdock_parameters(m)
    base_code = _shortened(factory, family, m, 2)
    base = restriction_scheme_check(base_code, mode=FULL_MODE)
    extension = extend_complement(base_code)
    labelled = not extension.precondition_holds
    ext = restriction_scheme_check(
        extension.code,
        mode=FULL_MODE,
        classes=extension.classes if labelled else None,
    )
    computed = {
        "predicted": list(predicted_kerdock_deltas(n, d)),
        "base": list(kerdock_base_deltas(base, n, d)),
        "extension": list(kerdock_extension_deltas(ext, n, d)),
        "identities": extension_relation_check(base, ext),
        "labelled": labelled,
    }
    return computed, FULL_MODE


def check_punctured_components(factory, family: str, m: int, positions=None):
    code = factory.get(family, m)
    if positions is None:
        positions = range(code.n)
    reports = []
    for p in positions:
        reports.extend(parity_classification_sweep(code, p))
    computed = {
        "pairs": len(reports),
        "counts": sorted(set(r.component_count for r in reports)),
        "sizes": sorted(set(tuple(r.component_sizes) for r in reports)),
        "classified": all(r.classification_verdict for r in reports),
    }
    return computed, EXHAUSTIVE


def check_single_component(factory, family: str, m: int):
    code = factory.get(family, m)
    analyzer = ComponentAnalyzer()
    analyzer.set_method(GRAPH)
    sweep = analyzer.run(code)
    computed = {
        "coordinates": len(sweep.reports),
        "counts": sorted(set(sweep.counts)),
    }
    return computed, EXHAUSTIVE


def check_self_duality(factory, family: str, m: int):
    code = factory.get(family, m)
    wd = code.weight_distribution()
    transform = macwilliams_transform(wd, size=code.size)
    computed = {
        "transform": transform.to_dict(),
        "fixed_point": transform == wd,
        "polynomial_agrees": macwilliams_polynomial(wd, size=code.size)
        == transform,
    }
    return computed, EXHAUSTIVE


def check_span_components(
    factory, family: str, m: int, e: int = 3, coordinates=None, cross_validate=False
):
    code = factory.get(family, m, e)
    analyzer = ComponentAnalyzer()
    analyzer.set_method(SPAN)
    analyzer.set_coordinates(coordinates)
    sweep = analyzer.run(code)
    computed = {
        "coordinates": len(sweep.reports),
        "counts": sorted(set(sweep.counts)),
        "ranks": sorted(set(r.rank for r in sweep.reports)),
        "assumed_distance": any(r.assumed_distance for r in sweep.reports),
    }
    if cross_validate:
        analyzer.set_method(GRAPH)
        computed["graph_agrees"] = analyzer.run(code).counts == sweep.counts
    return computed, SPAN


def check_magic_identity(factory, sources, instances: int = 1000, seed: int = 0):
    rng = np.random.default_rng(seed)
    pairs = []
    for family, m in sources:
        code = factory.get(family, m)
        for w in code.weight_distribution().nontrivial_weights():
            pairs.append((code.ints(), code.with_weight(w)))
    nonzero = 0
    for k in range(instances):
        words, blocks = pairs[k % len(pairs)]
        x = words[int(rng.integers(0, len(words)))]
        if not magic_identity(x, blocks):
            nonzero += 1
    return {"instances": instances, "nonzero_residuals": nonzero}, SAMPLED


def check_min_weight_neighbors(factory, family: str, m: int):
    verdict = min_weight_neighbor_check(factory.get(family, m))
    computed = {
        "covered": verdict.holds,
        "uncovered": verdict.details["uncovered"],
    }
    return computed, EXHAUSTIVE


def check_min_weight_span(factory, family: str, m: int):
    code = factory.get(family, m)
    computed = {
        "span_rank": min_weight_span_rank(code),
        "dimension": code.size.bit_length() - 1,
    }
    return computed, EXHAUSTIVE


def check_switching(factory, family: str, m: int, random_pairs: int = 10, seed: int = 0):
    code = factory.get(family, m)
    n = code.n
    rng = np.random.default_rng(seed)
    pairs = [(n - 2, n - 1)]
    for _ in range(random_pairs):
        p, q = rng.choice(n, size=2, replace=False)
        pairs.append((int(p), int(q)))
    results = [switching_check(code, p, q) for p, q in pairs]
    computed = {
        "checked": len(results),
        "all_hold": all(r.holds for r in results),
        "parameters_equal": all(r.parameters[0] == r.parameters[1] for r in results),
    }
    return computed, EXHAUSTIVE


def _random_code(rng) -> Code:
    n = int(rng.integers(3, 13))
    size = int(rng.integers(2, min(64, 2 ** n) + 1))
    values = rng.choice(2 ** n, size=size, replace=False)
    return Code.from_ints([int(v) for v in values], n=n)


def _even_weight_code(n: int) -> Code:
    values = [v for v in range(2 ** n) if bin(v).count("1") % 2 == 0]
    return Code.from_ints(values, n=n, linear=True)


def check_oracles(factory, random_codes: int = 100, seed: int = 0):
    rng = np.random.default_rng(seed)

    graph_equals_bfs = True
    for _ in range(random_codes):
        code = _random_code(rng)
        for i in range(code.n):
            if i_components(code, i).component_count != bfs_component_count(code, i):
                graph_equals_bfs = False

    span_equals_graph = True
    for code in (_even_weight_code(3), build_rm1(4), factory.get("bch13-dual", 5)):
        for i in range(code.n):
            span = linear_span_components(code, i).component_count
            if span != i_components(code, i).component_count:
                span_equals_graph = False

    counterexample = Code.from_strings(["0000", "1100", "1010", "0111"])
    tensor = restriction_scheme_check(counterexample)

    kerdock = factory.get("kerdock", 4)
    data = encode_code(kerdock)
    decoded = decode_code(data)
    roundtrip = decoded == kerdock and encode_code(decoded) == data

    involution = True
    for family, m in (("kerdock", 4), ("bch13-dual", 5)):
        code = factory.get(family, m)
        wd = code.weight_distribution()
        dual = macwilliams_transform(wd, size=code.size)
        back = macwilliams_transform(dual, size=2 ** code.n // code.size)
        involution = involution and back == wd

    computed = {
        "graph_equals_bfs": graph_equals_bfs,
        "span_equals_graph": span_equals_graph,
        "counterexample_witness": (not tensor.consistent)
        and tensor.witness is not None,
        "roundtrip": roundtrip,
        "macwilliams_involution": involution,
    }
    return computed, EXHAUSTIVE


# ******************************************************************************
# Registry
# ******************************************************************************


def _structure_expected() -> dict:
    return {
        "rm-coset-union": True,
        "rm-weight-class": True,
        "coset-distances": True,
        "rm-in-kernel": True,
        "half-distance-closure": True,
        "weights": True,
    }


def default_claims() -> List[Claim]:
    """ All registered claims, in the order they are run. """
    claims = []

    # Kerdock codes
    for m, effort in ((4, QUICK), (6, FULL)):
        claims.append(
            Claim(
                "kerdock-weights-m{}".format(m),
                "Kerdock weight table",
                "n(n-2)/2",
                {"family": "kerdock", "m": m},
                check_weights,
                _str_keys(kerdock_weight_formula(m)),
                effort,
            )
        )
    claims.append(
        Claim(
            "kerdock-structure-m4",
            "Kerdock code properties",
            r"is a union of $n/2$ cosets of RM$(1,m)$",
            {"family": "kerdock", "m": 4, "mode": EXHAUSTIVE},
            check_kerdock_structure,
            _structure_expected(),
        )
    )
    claims.append(
        Claim(
            "kerdock-structure-m6",
            "Kerdock code properties",
            r"RM$(1,m) \subseteq Ker(K)$",
            {"family": "kerdock", "m": 6, "mode": SAMPLED, "pairs": 10 ** 5, "seed": 0},
            check_kerdock_structure,
            _structure_expected(),
            FULL,
        )
    )
    claims.append(
        Claim(
            "kerdock-designs-m4",
            "Kerdock designs",
            r"$K_d$, $K_{n/2}$, $K_{n-d}$ are 3-designs",
            {"family": "kerdock", "m": 4, "max_t": 3},
            check_weight_class_designs,
            {
                "nontrivial_weight_count": 3,
                "6": {"strength": 3, "lambdas": [42, 14, 4]},
                "8": {"strength": 3, "lambdas": [15, 7, 3]},
                "10": {"strength": 3, "lambdas": [70, 42, 24]},
                "prediction": 3,
                "meets_prediction": True,
            },
        )
    )
    claims.append(
        Claim(
            "kerdock-self-dual-m4",
            "Conclusion",
            "self-dual Nordstrom-Robinson code",
            {"family": "kerdock", "m": 4},
            check_self_duality,
            {
                "transform": _str_keys(kerdock_weight_formula(4)),
                "fixed_point": True,
                "polynomial_agrees": True,
            },
        )
    )
    for m, effort in ((4, QUICK), (6, FULL)):
        n, d = kerdock_parameters(m)
        claims.append(
            Claim(
                "kerdock-scheme-m{}".format(m),
                "Doubly shortened Kerdock scheme",
                r"The restriction of the Hamming scheme to a doubly shortened "
                r"Kerdock code $K^{\prime\prime}$ is an association scheme",
                {"family": "kerdock", "m": m, "mode": FULL_MODE},
                check_scheme,
                {
                    "consistent": True,
                    "symmetric": True,
                    "relations": [0, d, n // 2, n - d],
                    "row_sums": True,
                },
                effort,
            )
        )
    claims.append(
        Claim(
            "kerdock-scheme-m8",
            "Doubly shortened Kerdock scheme",
            r"The restriction of the Hamming scheme to a doubly shortened "
            r"Kerdock code $K^{\prime\prime}$ is an association scheme",
            {"family": "kerdock", "m": 8, "mode": FULL_MODE},
            check_scheme,
            {"consistent": True},
            FULL,
            skip_reason="full enumeration of 2^16 words is beyond desk scale",
        )
    )
    for shortenings, relations in ((0, [0, 6, 8, 10, 16]), (1, [0, 6, 8, 10])):
        claims.append(
            Claim(
                "kerdock-scheme-{}-m4".format(
                    "unshortened" if shortenings == 0 else "shortened"
                ),
                "Kerdock-related schemes",
                "a Kerdock and a shortened Kerdock codes produce association "
                "schemes",
                {
                    "family": "kerdock",
                    "m": 4,
                    "shortenings": shortenings,
                    "mode": FULL_MODE,
                },
                check_scheme,
                {
                    "consistent": True,
                    "symmetric": True,
                    "relations": relations,
                    "row_sums": True,
                },
            )
        )
    for m, effort, labelled in ((4, QUICK, True), (6, FULL, False)):
        n, d = kerdock_parameters(m)
        deltas = list(predicted_kerdock_deltas(n, d))
        claims.append(
            Claim(
                "kerdock-deltas-m{}".format(m),
                "Extension by the complement",
                r"the code ${\overline C}=C\bigcup({\bf 1}^{n'}+C)$ is an "
                r"association scheme",
                {"family": "kerdock", "m": m},
                check_kerdock_deltas,
                {
                    "predicted": deltas,
                    "base": deltas,
                    "extension": deltas,
                    "identities": True,
                    "labelled": labelled,
                },
                effort,
            )
        )
    claims.append(
        Claim(
            "kerdock-punctured-components-m4",
            "Punctured Kerdock components",
            r"The code $K^*$ consists of two $i$-components",
            {"family": "kerdock", "m": 4},
            check_punctured_components,
            {"pairs": 240, "counts": [2], "sizes": [[128, 128]], "classified": True},
        )
    )
    claims.append(
        Claim(
            "kerdock-punctured-components-m6",
            "Punctured Kerdock components",
            r"The code $K^*$ consists of two $i$-components",
            {"family": "kerdock", "m": 6, "positions": [63]},
            check_punctured_components,
            {"pairs": 63, "counts": [2], "sizes": [[2048, 2048]], "classified": True},
            FULL,
        )
    )
    for m, effort in ((4, QUICK), (6, FULL)):
        claims.append(
            Claim(
                "kerdock-single-component-m{}".format(m),
                "Kerdock components",
                r"the $i$-components of a Kerdock code coincide with the "
                r"Kerdock code",
                {"family": "kerdock", "m": m},
                check_single_component,
                {"coordinates": 2 ** m, "counts": [1]},
                effort,
            )
        )
    claims.append(
        Claim(
            "kerdock-switching-m4",
            "Switching",
            r"permuting $(n-1)$th and $n$th coordinate positions",
            {"family": "kerdock", "m": 4, "random_pairs": 10, "seed": 0},
            check_switching,
            {"checked": 11, "all_hold": True, "parameters_equal": True},
        )
    )

    # BCH codes and their duals
    for m, effort in ((5, QUICK), (7, FULL), (9, FULL)):
        claims.append(
            Claim(
                "bch13-dual-weights-m{}".format(m),
                "BCH dual weight table",
                r"The minimum distance of the code $C^{\perp}_{1,3}$ is "
                r"$d=\frac{n-\sqrt{2n}}{2}$",
                {"family": "bch13-dual", "m": m},
                check_weights,
                _str_keys(bch_dual_weight_formula(m)),
                effort,
            )
        )
    claims.append(
        Claim(
            "bch13-dual-designs-m5",
            "BCH dual designs",
            r"Fixed weight codewords of $C^{\perp}_{1,3}$ form a 2-design",
            {"family": "bch13-dual", "m": 5, "max_t": 2},
            check_weight_class_designs,
            {
                "nontrivial_weight_count": 3,
                "12": {"strength": 2, "lambdas": [120, 44]},
                "16": {"strength": 2, "lambdas": [272, 136]},
                "20": {"strength": 2, "lambdas": [120, 76]},
                "prediction": 2,
                "meets_prediction": True,
            },
        )
    )
    claims.append(
        Claim(
            "bch13-dual-scheme-m5",
            "BCH dual scheme",
            r"The restriction of the Hamming scheme to $C^{\perp}_{1,3}$ is an "
            r"association scheme",
            {
                "family": "bch13-dual",
                "m": 5,
                "shortenings": 0,
                "mode": SAMPLED_MODE,
                "seed": 1,
                "trials": 10 ** 5,
            },
            check_scheme,
            {"consistent": True, "symmetric": True, "relations": [0, 12, 16, 20]},
        )
    )
    claims.append(
        Claim(
            "bch13-dual-neighbors-m5",
            "Punctured BCH dual neighbors",
            r"any codeword of weight $d$ is at distance $d-1$ from at least "
            r"one codeword of weight $d-1$",
            {"family": "bch13-dual", "m": 5},
            check_min_weight_neighbors,
            {"covered": True, "uncovered": 0},
        )
    )
    claims.append(
        Claim(
            "bch13-dual-span-m5",
            "BCH dual span",
            r"The minimum weight codewords of $C^{\perp}_{1,3}$ span the code",
            {"family": "bch13-dual", "m": 5},
            check_min_weight_span,
            {"span_rank": 10, "dimension": 10},
        )
    )
    claims.append(
        Claim(
            "bch13-dual-components-m5",
            "BCH dual components",
            r"consists of one $i$-component for any coordinate position $i$",
            {"family": "bch13-dual", "m": 5, "cross_validate": True},
            check_span_components,
            {
                "coordinates": 31,
                "counts": [1],
                "ranks": [10],
                "assumed_distance": False,
                "graph_agrees": True,
            },
        )
    )
    claims.append(
        Claim(
            "gold-dual-components-m5",
            "Gold duals",
            r"$C_{1,2^j +1}^{\perp}$, $(j,m)=1$ corresponding to the Gold "
            r"function",
            {"family": "gold-dual", "m": 5, "e": 5},
            check_span_components,
            {"coordinates": 31, "counts": [1], "ranks": [10], "assumed_distance": False},
        )
    )
    for m in (7, 9, 6, 8, 10):
        if m % 2:
            citation = "BCH dual components"
            quote = r"consists of one $i$-component for any coordinate position $i$"
        else:
            citation = "Conclusion"
            quote = (
                r"$C_{1,3}^{\perp}$ of length $2^m-1$ is an $i$-component for "
                r"any $i$ for even $m$ also for $m=6, 8, 10$"
            )
        claims.append(
            Claim(
                "bch13-dual-components-m{}".format(m),
                citation,
                quote,
                {"family": "bch13-dual", "m": m},
                check_span_components,
                {
                    "coordinates": 2 ** m - 1,
                    "counts": [1],
                    "ranks": [2 * m],
                    "assumed_distance": False,
                },
                FULL,
            )
        )
    bch_quote = (
        r"the BCH code $C_{1,3}$ consists of two $i$-components for any "
        r"coordinate position $i$ for any $m$: $5\leq m\leq 8$"
    )
    claims.append(
        Claim(
            "bch13-components-m5",
            "Conclusion",
            bch_quote,
            {"family": "bch13", "m": 5},
            check_span_components,
            {"coordinates": 31, "counts": [2], "ranks": [20], "assumed_distance": False},
        )
    )
    claims.append(
        Claim(
            "bch13-components-m6",
            "Conclusion",
            bch_quote,
            {"family": "bch13", "m": 6},
            check_span_components,
            {"coordinates": 63, "counts": [2], "ranks": [50], "assumed_distance": True},
            FULL,
        )
    )
    for m in (7, 8):
        n = 2 ** m - 1
        claims.append(
            Claim(
                "bch13-components-m{}".format(m),
                "Conclusion",
                bch_quote,
                {"family": "bch13", "m": m, "coordinates": [0, n // 2, n - 1]},
                check_span_components,
                {
                    "coordinates": 3,
                    "counts": [2],
                    "ranks": [n - 2 * m - 1],
                    "assumed_distance": True,
                },
                FULL,
            )
        )
        claims.append(
            Claim(
                "bch13-components-m{}-all".format(m),
                "Conclusion",
                bch_quote,
                {"family": "bch13", "m": m},
                check_span_components,
                {
                    "coordinates": n,
                    "counts": [2],
                    "ranks": [n - 2 * m - 1],
                    "assumed_distance": True,
                },
                FULL,
                skip_reason="span ranks at all {} coordinates are beyond desk "
                "scale".format(n),
            )
        )

    # Identities and oracles
    claims.append(
        Claim(
            "magic-identity",
            "Double counting identity",
            r"\sum_{l= 1}^{s}\delta^{k_l}\cdot \frac{i+j-k_l}{2}=i\lambda_1",
            {"sources": [["kerdock", 4], ["bch13-dual", 5]], "instances": 1000, "seed": 0},
            check_magic_identity,
            {"instances": 1000, "nonzero_residuals": 0},
        )
    )
    claims.append(
        Claim(
            "oracles",
            "Component graph",
            r"\{(x,y):d(x,y)=d, x_i\neq y_i\}",
            {"random_codes": 100, "seed": 0},
            check_oracles,
            {
                "graph_equals_bfs": True,
                "span_equals_graph": True,
                "counterexample_witness": True,
                "roundtrip": True,
                "macwilliams_involution": True,
            },
        )
    )
    ids = [c.id for c in claims]
    assert len(ids) == len(set(ids)), "claim ids must be unique"
    return claims
