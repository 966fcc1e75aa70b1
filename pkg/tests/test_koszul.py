"""Quotient bases, regular sequences, the odd-basis search, Tor tables,
endpoint bounds, and the duality pairing."""

import random
from fractions import Fraction

import pytest

from hilali import (Element, IndeterminateError, Model, ModelError,
                    NotFiniteLengthError, SModuleStructure, duality_pairing,
                    halperin_basis, is_regular_sequence,
                    parse_expression, quotient_basis,
                    tor_bounds_check, tor_table,
                    tor_via_model_cross_check, universe)
from hilali.koszul import _binomial, koszul_differential_rows


def ring2():
    return universe([("x1", 2), ("x2", 6)])


def pe(text, uni):
    return parse_expression(text, uni)


def test_single_variable_square():
    ring = universe([("x", 2)])
    module = quotient_basis(ring, [pe("x^2", ring)])
    assert module.length == 2
    assert module.socle_degree == 2
    names = [ring.format_monomial(m) for m in module.standard_basis]
    assert names == ["1", "x"]


def test_squarefree_lengths():
    for n in range(1, 5):
        ring = universe([(f"x{i}", 2) for i in range(1, n + 1)])
        rels = [pe(f"x{i}^2", ring) for i in range(1, n + 1)]
        module = quotient_basis(ring, rels)
        assert module.length == 2 ** n


def test_mixed_powers_pairs():
    # Of the three pairwise combinations of the bundled mixed-powers images,
    # exactly the highest-degree pair fails to be regular: those two share
    # the branch x2 = -x1^3.  The other two pairs have Bezout-sized quotients.
    ring = ring2()
    P1 = pe("x1^6 + x2^2", ring)
    P2 = pe("x1^9 + x2^3", ring)
    P3 = pe("x1^4*x2 + x1*x2^2", ring)
    assert quotient_basis(ring, [P1, P2]).length == 12 * 18 // 12
    assert quotient_basis(ring, [P1, P3]).length == 12 * 14 // 12
    with pytest.raises(NotFiniteLengthError):
        quotient_basis(ring, [P2, P3])
    assert is_regular_sequence(ring, [P1, P2])
    assert is_regular_sequence(ring, [P1, P3])
    assert not is_regular_sequence(ring, [P2, P3])


def test_not_finite_when_variable_escapes():
    ring = universe([("x1", 2), ("x2", 2)])
    with pytest.raises(NotFiniteLengthError):
        quotient_basis(ring, [pe("x1^2", ring), pe("x1*x2", ring)])
    assert not is_regular_sequence(ring, [pe("x1^2", ring), pe("x1*x2", ring)])


def test_too_few_relations_is_definite():
    ring = universe([("x1", 2), ("x2", 2)])
    with pytest.raises(NotFiniteLengthError):
        quotient_basis(ring, [pe("x1^2", ring)])


def test_probe_exhaustion_is_indeterminate():
    ring = ring2()
    with pytest.raises(IndeterminateError):
        quotient_basis(ring, [pe("x1^6 + x2^2", ring), pe("x1^9 + x2^3", ring)],
                       max_probe=6)


def test_regular_sequence_requires_count_match():
    ring = ring2()
    with pytest.raises(ModelError):
        is_regular_sequence(ring, [pe("x1^2", ring)])


def test_quotient_invariant_under_relation_shuffle():
    rng = random.Random(41)
    ring = universe([("x1", 2), ("x2", 2)])
    rels = [pe("x1^2 + x1*x2", ring), pe("x2^3 + x1^2*x2", ring)]
    base = quotient_basis(ring, rels)
    per_degree = {d: len(v) for d, v in base.basis_by_degree().items()}
    for _ in range(6):
        shuffled = rels[:]
        rng.shuffle(shuffled)
        # invertible rational recombination
        a = Fraction(rng.randint(1, 3))
        b = Fraction(rng.randint(0, 2))
        recombined = [shuffled[0].scale(a) + shuffled[1].scale(b), shuffled[1]]
        again = quotient_basis(ring, recombined)
        assert again.length == base.length
        assert {d: len(v) for d, v in again.basis_by_degree().items()} == per_degree


def test_reduction_is_multiplicative_closure():
    ring = universe([("x", 2)])
    module = quotient_basis(ring, [pe("x^2 + x", ring)])
    assert module.length == 2
    x = Element.generator(ring, "x")
    coords = module.reduce(x * x)
    assert coords == {ring.monomial({"x": 1}): Fraction(-1)}


def test_tor_of_augmentation_is_binomial():
    ring = universe([])
    module = quotient_basis(ring, [])
    for r in range(6):
        s = SModuleStructure(module, [Element.zero(ring)] * r)
        table = tor_table(module, s)
        assert table.dims == {k: _binomial(r, k) for k in range(r + 1)}
        assert table.total == 2 ** r


def test_tor_r0_is_module_length():
    ring = universe([("x1", 2), ("x2", 2)])
    module = quotient_basis(ring, [pe("x1^2", ring), pe("x2^2", ring)])
    table = tor_table(module, SModuleStructure(module, []))
    assert table.dims == {0: module.length}


def test_tor_n1r1():
    ring = universe([("x", 2)])
    module = quotient_basis(ring, [pe("x^2", ring)])
    s = SModuleStructure(module, [pe("x^3", ring)])
    table = tor_table(module, s)
    assert table.dims == {0: 2, 1: 2}
    assert table.total == 4


def test_koszul_differential_squares_to_zero():
    ring = universe([("x1", 2), ("x2", 2)])
    module = quotient_basis(ring, [pe("x1^2", ring), pe("x2^2", ring)])
    s = SModuleStructure(module, [pe("x1*x2", ring), pe("x1^2 + x2^2", ring)])
    assert s.actions_commute()
    rows2 = koszul_differential_rows(s, 2)
    rows1 = koszul_differential_rows(s, 1)
    # compose: image of each degree-2 chain basis vector, pushed through d1
    dim0 = module.length
    for row in rows2:
        out = {}
        for col, c in row.items():
            for col2, c2 in rows1[col].items():
                out[col2] = out.get(col2, Fraction(0)) + c * c2
        assert all(v == 0 for v in out.values())


def test_alternating_sums_match_chain_level():
    ring = universe([("x", 2)])
    module = quotient_basis(ring, [pe("x^3", ring)])
    s = SModuleStructure(module, [pe("x^2", ring)])
    table = tor_table(module, s)
    r = s.parameter_count
    chain = sum((-1) ** k * module.length * _binomial(r, k) for k in range(r + 1))
    homology = sum((-1) ** k * table[k] for k in range(r + 1))
    assert chain == homology


def test_tor_bounds_examples():
    ring = universe([("x", 2)])
    module = quotient_basis(ring, [pe("x^2", ring)])
    s = SModuleStructure(module, [pe("x^3", ring)])
    report = tor_bounds_check(module, s)
    assert report.passes and report.tor_bottom == 2 and report.tor_top == 2

    ring2v = universe([("x1", 2), ("x2", 2)])
    module2 = quotient_basis(ring2v, [pe("x1^2", ring2v), pe("x2^2", ring2v)])
    report = tor_bounds_check(module2, SModuleStructure(module2, []))
    assert report.passes and report.length == 4 >= 2 * 2

    empty = universe([])
    one = quotient_basis(empty, [])
    report = tor_bounds_check(one, SModuleStructure(one, []))
    assert report.passes and report.tor_bottom == 1


def test_duality_single_variable():
    ring = universe([("x", 2)])
    module = quotient_basis(ring, [pe("x^2", ring)])
    report = duality_pairing(module)
    assert report.perfect and report.mode == "graded" and report.socle_dimension == 1


def test_duality_squarefree_two_variables():
    ring = universe([("x1", 2), ("x2", 2)])
    module = quotient_basis(ring, [pe("x1^2", ring), pe("x2^2", ring)])
    report = duality_pairing(module)
    assert report.perfect


def test_duality_requires_complete_intersection():
    ring = universe([("x1", 2), ("x2", 2)])
    module = quotient_basis(
        ring, [pe("x1^2", ring), pe("x1*x2", ring), pe("x2^2", ring)])
    with pytest.raises(ModelError):
        duality_pairing(module)


def test_duality_functional_on_inhomogeneous():
    ring = universe([("x", 2)])
    module = quotient_basis(ring, [pe("x^2 + x", ring)])
    report = duality_pairing(module)
    assert report.perfect and report.mode == "functional"


def test_halperin_identity_when_first_block_regular(corpus_models):
    basis = halperin_basis(corpus_models["pure-n2r1-diag"])
    assert basis.strategy == "identity"
    assert basis.module.length == 4


def test_halperin_single_variable():
    uni = universe([("x", 2), ("y1", 3), ("y2", 5)])
    m = Model(uni, {"y1": pe("x^2", uni), "y2": pe("x^3", uni)})
    basis = halperin_basis(m)
    assert basis.strategy == "identity"
    assert basis.module.length == 2


def test_halperin_requires_pure_elliptic(corpus_models):
    with pytest.raises(ModelError):
        halperin_basis(corpus_models["hyper-nonpure-n3r4"])
    with pytest.raises(ModelError):
        halperin_basis(corpus_models["nonelliptic-pair"])


def test_halperin_permutation_on_quadrics(corpus_models):
    basis = halperin_basis(corpus_models["all-quadrics-n3r3"])
    assert basis.strategy in ("identity", "permutation", "random")
    ring = basis.module.ring
    assert is_regular_sequence(ring, basis.images[:3])
    # the combinations stay inside the odd generators (lower grading 1)
    for z in basis.combinations:
        assert all(len(mono.odds) == 1 and sum(mono.exps) == 0
                   for mono in z.terms)


def test_halperin_random_stage_certificate():
    rng = random.Random(3)
    uni = universe([("x1", 2), ("x2", 2), ("y1", 3), ("y2", 3), ("y3", 3)])
    # no single pair of these images is regular, forcing combinations
    m = Model(uni, {"y1": pe("x1^2", uni), "y2": pe("x1*x2", uni),
                    "y3": pe("x2^2 + x1*x2", uni)})
    from hilali import certify_elliptic, classify
    assert classify(m).is_pure
    assert certify_elliptic(m).elliptic
    basis = halperin_basis(m, seed=5)
    ring = basis.module.ring
    assert is_regular_sequence(ring, basis.images[:2])


def test_cross_check_on_pure_corpus(corpus_models):
    for name in ("sphere-s3", "squarefree-n2", "n1r1-powers"):
        report = tor_via_model_cross_check(corpus_models[name])
        assert report.passes
        assert report.total_cohomology == report.total_tor


def test_halperin_random_stage_on_entangled_pairs(corpus_models):
    # no pair of the given images is regular, so subsets cannot work and the
    # search must take random invertible combinations
    basis = halperin_basis(corpus_models["entangled-pairs-n2r1"], seed=0)
    assert basis.strategy == "random"
    assert is_regular_sequence(basis.module.ring, basis.images[:2])


def _ci_hilbert_series(relation_degrees, variable_degrees, top):
    """Coefficients of prod (1 - t^d_i) / prod (1 - t^a_j), truncated; the
    exact graded dimensions of a complete-intersection quotient."""
    coeffs = [0] * (top + 1)
    coeffs[0] = 1
    for a in variable_degrees:
        for i in range(a, top + 1):
            coeffs[i] += coeffs[i - a]
    for d in relation_degrees:
        for i in range(top, d - 1, -1):
            coeffs[i] -= coeffs[i - d]
    return coeffs


def test_graded_quotient_matches_hilbert_series():
    rng = random.Random(77)
    for _ in range(12):
        n = rng.randint(1, 3)
        var_degs = sorted(rng.choice([2, 2, 4]) for _ in range(n))
        ring = universe([(f"x{i+1}", d) for i, d in enumerate(var_degs)])
        relations = []
        rel_degs = []
        for i, g in enumerate(ring.evens):
            power = rng.randint(2, 3)
            rel = parse_expression(f"{g.name}^{power}", ring)
            degree = power * g.degree
            # mix in a random same-degree disturbance, keeping regularity
            extras = [m for m in ring.basis(degree)]
            for _ in range(rng.randint(0, 2)):
                coeff = Fraction(rng.randint(-2, 2))
                if coeff:
                    pick = extras[rng.randrange(len(extras))]
                    rel = rel + Element.from_monomial(ring, pick, coeff)
            relations.append(rel)
            rel_degs.append(degree)
        try:
            module = quotient_basis(ring, relations)
        except NotFiniteLengthError:
            continue  # the disturbance killed regularity; not this test's target
        socle = sum(rel_degs) - sum(var_degs)
        series = _ci_hilbert_series(rel_degs, var_degs, socle)
        per_degree = {d: len(v) for d, v in module.basis_by_degree().items()}
        assert module.length == sum(series)
        for d, expected in enumerate(series):
            assert per_degree.get(d, 0) == expected


def test_filtered_length_invariant_under_degree_mixing():
    # recombining relations across degrees changes nothing about the ideal;
    # the filtered staircase must report the same length as the graded one
    rng = random.Random(78)
    ring = universe([("x1", 2), ("x2", 2)])
    base = [parse_expression("x1^2 + x1*x2", ring),
            parse_expression("x2^3 + x1^2*x2", ring)]
    graded_module = quotient_basis(ring, base)
    for _ in range(8):
        a = Fraction(rng.randint(1, 3))
        b = Fraction(rng.randint(-2, 2))
        mixed = [base[0].scale(a) + base[1].scale(b), base[1]]
        rng.shuffle(mixed)
        module = quotient_basis(ring, mixed)
        assert module.length == graded_module.length


def test_cross_check_on_random_pure_models():
    from hilali import certify_elliptic, check_minimal, classify
    from modelgen import random_hyperelliptic_model
    rng = random.Random(909)
    checked = 0
    while checked < 6:
        m = random_hyperelliptic_model(rng, n_max=2, r_max=2)
        if not classify(m).is_pure or not check_minimal(m):
            continue
        if not certify_elliptic(m).elliptic:
            continue
        report = tor_via_model_cross_check(m, seed=0)
        assert report.passes, m.name
        checked += 1
