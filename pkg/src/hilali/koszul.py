"""Finite-length quotients of a polynomial ring, regular sequences, the
odd-basis search for pure models, Koszul homology and the Tor table, and the
complete-intersection duality pairing.

The central primitive is :func:`quotient_basis`: a degree-truncated linear
algebra construction of ``R/(P_1..P_k)`` with a certified monomial basis.  It
avoids Groebner machinery; finiteness is certified by a vanishing window of
quotient dimensions plus a multiplicative closure check (every ``x_j * b``
reduces back into the basis span).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .algebra import Element, GeneratorUniverse, Monomial
from .errors import (ContradictionError, EngineError, IndeterminateError,
                     ModelError, NotFiniteLengthError)
from .linalg import Rref, intify, rank_of_rows
from .model import Model, classify


def _binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


class _MonomialIndex:
    """Stable global index over ring monomials, extended degree by degree.

    Columns are negated so that the elimination pivot (the smallest column)
    is the *leading* monomial: highest degree, then highest canonical key.
    Standard monomial bases below the staircase then stabilize as the
    truncation degree grows, also for inhomogeneous ideals.
    """

    def __init__(self, ring: GeneratorUniverse):
        self.ring = ring
        self.by_monomial: dict[Monomial, int] = {}
        self.monomials: list[Monomial] = []
        self.degree_extent = -1

    def extend_to(self, degree: int) -> None:
        while self.degree_extent < degree:
            self.degree_extent += 1
            for m in self.ring.basis(self.degree_extent):
                self.by_monomial[m] = len(self.monomials)
                self.monomials.append(m)

    def col(self, m: Monomial) -> int:
        return -(self.by_monomial[m] + 1)

    def monomial_of(self, col: int) -> Monomial:
        return self.monomials[-col - 1]

    def vector(self, e: Element) -> dict[int, Fraction]:
        top = e.top_degree()
        if top is not None:
            self.extend_to(top)
        return {self.col(m): c for m, c in e.terms.items()}


class QuotientModule:
    """``R/(P_1..P_k)`` with a certified monomial basis.

    ``graded`` instances use the weighted grading of homogeneous relations
    (per-degree spans are then exactly the ideal's graded pieces, so length
    and socle degree are exact).  ``filtered`` instances use the total-degree
    filtration for inhomogeneous relations; the closure certificate bounds
    the length and the stabilization window makes it exact in practice.
    """

    def __init__(self, ring: GeneratorUniverse, relations: list[Element],
                 graded: bool, index: _MonomialIndex, rref: Rref,
                 basis: list[Monomial], span_extent: int, max_probe: int):
        self.ring = ring
        self.relations = relations
        self.graded = graded
        self._index = index
        self._rref = rref
        self._span_extent = span_extent
        self._max_probe = max_probe
        # inhomogeneous staircases need covering combinations from a few
        # stages above the degree being reduced
        self._slack = 0 if graded else max(
            (r.top_degree() or 0 for r in relations), default=0)
        self.standard_basis = basis
        self.basis_positions = {m: i for i, m in enumerate(basis)}
        self.length = len(basis)
        degrees = [ring.degree_of(m) for m in basis]
        self.socle_degree = max(degrees) if degrees else 0

    def basis_by_degree(self) -> dict[int, list[Monomial]]:
        table: dict[int, list[Monomial]] = {}
        for m in self.standard_basis:
            table.setdefault(self.ring.degree_of(m), []).append(m)
        return table

    def _extend_spans(self, degree: int) -> None:
        while self._span_extent < degree:
            self._span_extent += 1
            for row in _relation_rows(self.ring, self.relations, self._index,
                                      self._span_extent, self.graded):
                pivot = self._rref.add(row)
                if pivot is not None and \
                        self._index.monomial_of(pivot) in self.basis_positions:
                    raise IndeterminateError(
                        "a certified basis monomial became a leading term at "
                        f"degree {self._span_extent}; the probe "
                        f"(max degree {self._max_probe}) was too small")

    def reduce(self, e: Element) -> dict[Monomial, Fraction]:
        """Coordinates of the class of ``e`` over the standard basis."""
        if e.universe != self.ring:
            raise ModelError("element lives over a different ring")
        top = e.top_degree()
        if top is None:
            return {}
        self._extend_spans(top + self._slack)
        reduced = self._rref.reduce(self._index.vector(e))
        out: dict[Monomial, Fraction] = {}
        for j, c in reduced.items():
            m = self._index.monomial_of(j)
            if m not in self.basis_positions:
                raise IndeterminateError(
                    "reduction left the certified basis span; the probe "
                    f"(max degree {self._max_probe}) was too small")
            out[m] = c
        return out

    def reduce_vector(self, e: Element) -> dict[int, Fraction]:
        return {self.basis_positions[m]: c for m, c in self.reduce(e).items()}

    def multiplication_matrix(self, poly: Element) -> list[dict[int, Fraction]]:
        """Columns of multiplication by ``poly`` on the standard basis."""
        cols = []
        for b in self.standard_basis:
            prod = Element.from_monomial(self.ring, b) * poly
            cols.append(self.reduce_vector(prod))
        return cols


def _relation_rows(ring, relations, index, degree, graded):
    """Vectors of all multiples m * P_i whose (top) degree equals ``degree``."""
    rows = []
    for rel in relations:
        top = rel.top_degree()
        if top is None:
            continue
        mult_degree = degree - top
        if mult_degree < 0:
            continue
        for m in ring.basis(mult_degree):
            prod = Element.from_monomial(ring, m) * rel
            if not prod.is_zero:
                rows.append(index.vector(prod))
    return rows


def _socle_prediction(ring: GeneratorUniverse, relations: list[Element]) -> int | None:
    """Top degree of the quotient when the relations are a homogeneous
    complete intersection; a heuristic upper bound otherwise."""
    if not ring.evens:
        return 0
    degs = sorted((rel.top_degree() for rel in relations), reverse=True)
    n = len(ring.evens)
    if len(degs) < n:
        return None
    return sum(degs[:n]) - sum(g.degree for g in ring.evens)


def quotient_basis(ring: GeneratorUniverse, relations: list[Element],
                   max_probe: int | None = None) -> QuotientModule:
    """Construct ``R/(P_1..P_k)`` with a certified finite monomial basis.

    Raises :class:`NotFiniteLengthError` when infinite length is proven
    (fewer relations than variables, or a homogeneous complete intersection
    with a class above its predicted socle degree), and
    :class:`IndeterminateError` when the probe budget runs out undecided.
    """
    if ring.odds:
        raise EngineError("quotient rings are built over even generators only")
    relations = [r for r in relations if not r.is_zero]
    for r in relations:
        if r.universe != ring:
            raise ModelError("relation lives over a different ring")
    n = len(ring.evens)
    if len(relations) < n:
        raise NotFiniteLengthError(
            f"{len(relations)} relations cannot cut {n} variables down to "
            "finite length")
    graded = all(r.is_homogeneous for r in relations)
    prediction = _socle_prediction(ring, relations)
    is_ci = len(relations) == n
    window = max((g.degree for g in ring.evens), default=1) + 1
    if max_probe is None:
        top = max((r.top_degree() or 0 for r in relations), default=0)
        max_probe = (prediction if prediction is not None else 0) + 2 * top + window

    index = _MonomialIndex(ring)
    rref = Rref()
    span_extent = -1

    def extend_spans(to_degree: int) -> None:
        nonlocal span_extent
        while span_extent < to_degree:
            span_extent += 1
            for row in _relation_rows(ring, relations, index, span_extent, graded):
                rref.add(row)

    def nonpivot_upto(top: int) -> list[Monomial]:
        index.extend_to(top)
        piv = rref.pivot_columns()
        return [m for m in index.monomials
                if ring.degree_of(m) <= top and index.col(m) not in piv]

    wait_past = prediction if (is_ci and prediction is not None) else -1
    if graded:
        # Homogeneous relations: the degree-D span is exactly the ideal's
        # degree-D piece, so per-degree quotient dimensions are exact.
        degree = 0
        stable_run = 0
        while degree <= max_probe:
            extend_spans(degree)
            index.extend_to(degree)
            piv = rref.pivot_columns()
            q = sum(1 for m in ring.basis(degree) if index.col(m) not in piv)
            if is_ci and prediction is not None and degree > prediction and q > 0:
                raise NotFiniteLengthError(
                    f"nonzero class in degree {degree} above the predicted socle "
                    f"degree {prediction}; the relations are not a regular sequence")
            stable_run = stable_run + 1 if q == 0 else 0
            if stable_run >= window and degree > wait_past:
                break
            degree += 1
        else:
            raise IndeterminateError(
                f"quotient dimensions did not stabilize by degree {max_probe} "
                "(not finite length, or probe too small)")
        basis = nonpivot_upto(degree)
    else:
        # Inhomogeneous relations: leading-term cancellations materialize a
        # few stages after the degrees they correct, so the top slice of the
        # staircase is always provisional.  Judge stabilization on the
        # standard-monomial set below a trailing cut, then validate the
        # candidate by the closure certificate; on failure keep probing.
        degree = 0
        stable_run = 0
        previous: list[Monomial] | None = None
        module = None
        while degree <= max_probe:
            extend_spans(degree)
            current = nonpivot_upto(max(degree - window, -1))
            if previous is not None and current == previous:
                stable_run += 1
            else:
                stable_run = 0
            previous = current
            if stable_run >= window and degree > wait_past and current:
                candidate = QuotientModule(ring, relations, graded, index,
                                           rref, current, span_extent,
                                           max_probe)
                try:
                    _closure_certificate(candidate)
                except IndeterminateError:
                    stable_run = 0
                    span_extent = candidate._span_extent
                else:
                    span_extent = candidate._span_extent
                    module = candidate
                    break
            degree += 1
        if module is None:
            raise IndeterminateError(
                f"the standard monomial set did not stabilize by degree "
                f"{max_probe} (not finite length, or probe too small)")
        return module
    module = QuotientModule(ring, relations, graded, index, rref, basis,
                            span_extent, max_probe)
    _closure_certificate(module)
    return module


def _closure_certificate(module: QuotientModule) -> None:
    """Check x_j * b reduces into the basis span for every basis element b.

    Together with the vanishing window this certifies that the basis spans
    the quotient: span(B) + I is stable under every multiplication, contains
    1, hence equals R.
    """
    ring = module.ring
    for g in ring.evens:
        x = Element.generator(ring, g.name)
        for b in module.standard_basis:
            module.reduce(Element.from_monomial(ring, b) * x)


def is_regular_sequence(ring: GeneratorUniverse, relations: list[Element],
                        max_probe: int | None = None) -> bool:
    """Finite-length criterion: for k relations in k variables, regularity is
    equivalent to the quotient having finite length."""
    relations = [r for r in relations if not r.is_zero]
    if len(relations) != len(ring.evens):
        raise ModelError("regular-sequence test requires as many relations as variables")
    try:
        quotient_basis(ring, relations, max_probe=max_probe)
        return True
    except NotFiniteLengthError:
        return False


# -- the S-module structure and Tor ------------------------------------------


class SModuleStructure:
    """Module structure over Q[lambda_1..lambda_r]: lambda_i acts on the
    quotient as multiplication by a ring polynomial."""

    def __init__(self, module: QuotientModule, action_polys: list[Element]):
        self.module = module
        self.action_polys = list(action_polys)
        self._matrices: list[list[dict[int, Fraction]]] | None = None

    @property
    def parameter_count(self) -> int:
        return len(self.action_polys)

    def matrices(self) -> list[list[dict[int, Fraction]]]:
        if self._matrices is None:
            self._matrices = [self.module.multiplication_matrix(p)
                              for p in self.action_polys]
        return self._matrices

    def actions_commute(self) -> bool:
        mats = self.matrices()
        dim = self.module.length
        for a, b in combinations(range(len(mats)), 2):
            if _compose(mats[a], mats[b], dim) != _compose(mats[b], mats[a], dim):
                return False
        return True


def _compose(m1, m2, dim):
    # columns of m1 after m2 (both column lists over basis indices)
    out = []
    for j in range(dim):
        col: dict[int, Fraction] = {}
        for k, c in m2[j].items():
            for i, d in m1[k].items():
                s = col.get(i, Fraction(0)) + c * d
                if s:
                    col[i] = s
                elif i in col:
                    del col[i]
        out.append(col)
    return out


@dataclass(frozen=True)
class TorTable:
    dims: dict[int, int]
    total: int

    def __getitem__(self, k: int) -> int:
        return self.dims.get(k, 0)


def koszul_chain_basis(length: int, r: int, k: int) -> list[tuple[int, tuple[int, ...]]]:
    """Basis of M tensor Lambda^k W: pairs (basis position, ascending subset)."""
    return [(i, subset) for subset in combinations(range(r), k)
            for i in range(length)]


def koszul_differential_rows(s: SModuleStructure, k: int):
    """Rows of d_k : M (x) Lambda^k W -> M (x) Lambda^{k-1} W.

    d(m (x) w_{i_1}...w_{i_k}) = sum_l (-1)^{l-1} (lambda_{i_l} m) (x) (drop i_l).
    """
    module = s.module
    r = s.parameter_count
    mats = s.matrices()
    dim = module.length
    source = koszul_chain_basis(dim, r, k)
    target_index = {key: pos for pos, key in
                    enumerate(koszul_chain_basis(dim, r, k - 1))}
    rows = []
    for i, subset in source:
        row: dict[int, Fraction] = {}
        for l, lam in enumerate(subset):
            rest = subset[:l] + subset[l + 1:]
            sign = -1 if l % 2 else 1
            for tgt, c in mats[lam][i].items():
                col = target_index[(tgt, rest)]
                v = row.get(col, Fraction(0)) + sign * c
                if v:
                    row[col] = v
                elif col in row:
                    del row[col]
        rows.append(row)
    return rows


def tor_table(module: QuotientModule, s: SModuleStructure) -> TorTable:
    """Homology dimensions of the Koszul complex M (x) Lambda^* W.

    ``dims[k] = dim Tor^k`` for k in [0, r]; everything is exact linear
    algebra over the rationals on the standard basis.
    """
    if s.module is not module:
        raise EngineError("the S-structure was built over a different module")
    r = s.parameter_count
    dim = module.length
    ranks = {}
    for k in range(1, r + 1):
        rows = [intify(row)[0] for row in koszul_differential_rows(s, k)]
        ranks[k] = rank_of_rows(rows)
    dims = {}
    for k in range(r + 1):
        chain_dim = dim * _binomial(r, k)
        dims[k] = chain_dim - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return TorTable(dims, sum(dims.values()))


@dataclass(frozen=True)
class TorBoundsReport:
    n: int
    r: int
    tor_bottom: int
    tor_top: int
    length: int
    bottom_ok: bool
    top_ok: bool
    length_ok: bool   # r = 0 only: length >= 2n
    passes: bool


def tor_bounds_check(module: QuotientModule, s: SModuleStructure) -> TorBoundsReport:
    """Endpoint bounds: dim Tor^0 >= n+1 and dim Tor^r >= n+1; for r = 0 the
    quadratic-count bound length >= 2n."""
    n = len(module.ring.evens)
    r = s.parameter_count
    table = tor_table(module, s)
    bottom_ok = table[0] >= n + 1
    top_ok = table[r] >= n + 1
    length_ok = module.length >= 2 * n if r == 0 else True
    passes = bottom_ok and top_ok and length_ok
    if not passes:
        raise ContradictionError(
            f"Tor endpoint bounds failed: Tor^0={table[0]}, Tor^{r}={table[r]}, "
            f"n={n}, length={module.length}")
    return TorBoundsReport(n, r, table[0], table[r], module.length,
                           bottom_ok, top_ok, length_ok, passes)


# -- duality pairing ----------------------------------------------------------


@dataclass(frozen=True)
class PairingReport:
    perfect: bool
    mode: str                 # "graded" or "functional"
    socle_dimension: int
    detail: str = ""


def duality_pairing(module: QuotientModule, seed: int = 0,
                    attempts: int = 8) -> PairingReport:
    """Certify the multiplication pairing of a complete-intersection quotient.

    Graded quotients: the top degree must be one-dimensional and each block
    ``M_a x M_{s-a} -> M_s`` nondegenerate.  Filtered quotients (relations of
    mixed degrees): sample linear functionals and certify that some Gram
    matrix ``phi(b_i b_j)`` is nonsingular.
    """
    if len(module.relations) != len(module.ring.evens):
        raise ModelError("duality pairing requires a complete intersection "
                         "(as many relations as variables)")
    if module.length == 0:
        return PairingReport(False, "graded", 0, "zero module")
    if module.graded:
        return _graded_pairing(module)
    return _functional_pairing(module, seed, attempts)


def _graded_pairing(module: QuotientModule) -> PairingReport:
    table = module.basis_by_degree()
    socle = module.socle_degree
    top = table.get(socle, [])
    if len(top) != 1:
        return PairingReport(False, "graded", len(top),
                             f"top degree {socle} has dimension {len(top)}")
    socle_monomial = top[0]
    for a in sorted(table):
        b = socle - a
        left = table.get(a, [])
        right = table.get(b, [])
        if len(left) != len(right):
            return PairingReport(False, "graded", 1,
                                 f"dim M_{a}={len(left)} != dim M_{b}={len(right)}")
        rows = []
        for u in left:
            row = {}
            for j, v in enumerate(right):
                prod = Element.from_monomial(module.ring, u) * \
                    Element.from_monomial(module.ring, v)
                coeff = module.reduce(prod).get(socle_monomial, Fraction(0))
                if coeff:
                    row[j] = coeff
            rows.append(row)
        if rank_of_rows([intify(r)[0] for r in rows]) != len(left):
            return PairingReport(False, "graded", 1,
                                 f"degenerate block at degree {a}")
    return PairingReport(True, "graded", 1,
                         f"socle degree {socle}, all blocks nondegenerate")


def _functional_pairing(module: QuotientModule, seed: int, attempts: int) -> PairingReport:
    dim = module.length
    socle_dim = _socle_dimension(module)
    products: list[list[dict[int, Fraction]]] = []
    for i, u in enumerate(module.standard_basis):
        row = []
        for v in module.standard_basis:
            prod = Element.from_monomial(module.ring, u) * \
                Element.from_monomial(module.ring, v)
            row.append(module.reduce_vector(prod))
        products.append(row)
    rng = random.Random(seed)
    for attempt in range(attempts):
        phi = [rng.randint(-9, 9) for _ in range(dim)]
        rows = []
        for i in range(dim):
            row = {}
            for j in range(dim):
                val = sum(c * phi[k] for k, c in products[i][j].items())
                if val:
                    row[j] = val
            rows.append(intify({j: Fraction(v) for j, v in row.items()})[0])
        if rank_of_rows(rows) == dim:
            return PairingReport(True, "functional", socle_dim,
                                 f"nonsingular Gram matrix at attempt {attempt}")
    return PairingReport(False, "functional", socle_dim,
                         f"no certifying functional in {attempts} attempts")


def _socle_dimension(module: QuotientModule) -> int:
    """Dimension of the common kernel of all variable multiplications."""
    from .linalg import kernel_of_rows
    dim = module.length
    if not module.ring.evens:
        return dim
    mats = [module.multiplication_matrix(Element.generator(module.ring, g.name))
            for g in module.ring.evens]
    rows = []
    for i in range(dim):
        combined: dict[int, Fraction] = {}
        for j, mat in enumerate(mats):
            for k, c in mat[i].items():
                combined[j * dim + k] = c
        rows.append(combined)
    return len(kernel_of_rows(rows, dim * len(module.ring.evens)))


# -- odd-basis search for pure models -----------------------------------------


@dataclass
class HalperinBasis:
    """Odd-generator combinations whose first n images cut a finite quotient."""

    combinations: list[Element]     # z_j as combinations of the odd generators
    images: list[Element]           # d z_j, elements of the even subring
    module: QuotientModule          # the finite-length certificate for the first n
    attempts: int
    strategy: str
    matrix: list[list[Fraction]] = field(repr=False, default_factory=list)


def even_subring(model: Model) -> GeneratorUniverse:
    from .algebra import universe as _universe
    return _universe([(g.name, g.degree) for g in model.universe.evens])


def _image_in_subring(model: Model, ring: GeneratorUniverse, e: Element) -> Element:
    from .algebra import restrict_element
    return restrict_element(e, ring)


def halperin_basis(model: Model, seed: int = 0, budget: int = 64,
                   max_probe: int | None = None) -> HalperinBasis:
    """Find a basis z_1..z_{n+r} of the odd generators (rational-coefficient
    combinations, lower grading preserved) whose first n differential images
    form a regular sequence in the even subring.

    Search order: the identity, then permutations induced by regular
    n-subsets of the given images, then random invertible integer matrices
    with entries in [-3, 3].  Deterministic for a fixed seed.
    """
    cls = classify(model)
    if not cls.is_pure:
        raise ModelError("the odd-basis search requires a pure model")
    from .cohomology import certify_elliptic
    cert = certify_elliptic(model)
    if not cert.elliptic:
        raise ModelError("the model is not certified elliptic; no such basis exists")
    ring = even_subring(model)
    uni = model.universe
    n = len(uni.evens)
    odd = list(uni.odds)
    images = [_image_in_subring(model, ring, model.d.of_generator(g.name)) for g in odd]
    attempts = 0

    def test(first_n: list[Element]):
        nonlocal attempts
        attempts += 1
        if any(p.is_zero for p in first_n):
            return None
        try:
            return quotient_basis(ring, first_n, max_probe=max_probe)
        except (NotFiniteLengthError, IndeterminateError):
            return None

    # Stage 1: subsets of the given images, identity order first.
    for subset in combinations(range(len(odd)), n):
        module = test([images[i] for i in subset])
        if module is not None:
            order = list(subset) + [i for i in range(len(odd)) if i not in subset]
            matrix = [[Fraction(1) if j == order[i] else Fraction(0)
                       for j in range(len(odd))] for i in range(len(odd))]
            return _assemble(model, ring, matrix, module, attempts,
                             "permutation" if list(subset) != list(range(n)) else "identity")

    # Stage 2: random invertible integer matrices.
    rng = random.Random(seed)
    size = len(odd)
    while attempts < budget:
        matrix = [[Fraction(rng.randint(-3, 3)) for _ in range(size)]
                  for _ in range(size)]
        if _det_rank(matrix) != size:
            attempts += 1
            continue
        first_n = []
        for i in range(n):
            combo = Element.zero(ring)
            for j in range(size):
                if matrix[i][j]:
                    combo = combo + images[j].scale(matrix[i][j])
            first_n.append(combo)
        module = test(first_n)
        if module is not None:
            return _assemble(model, ring, matrix, module, attempts, "random")
    raise IndeterminateError(
        f"no regular odd basis found within {budget} attempts (seed {seed})")


def _det_rank(matrix: list[list[Fraction]]) -> int:
    rows = []
    for row in matrix:
        rows.append(intify({j: c for j, c in enumerate(row) if c != 0})[0])
    return rank_of_rows(rows)


def _assemble(model: Model, ring: GeneratorUniverse, matrix, module,
              attempts: int, strategy: str) -> HalperinBasis:
    uni = model.universe
    odd = list(uni.odds)
    combos = []
    images = []
    for i in range(len(odd)):
        z = Element.zero(uni)
        for j, g in enumerate(odd):
            if matrix[i][j]:
                z = z + Element.generator(uni, g.name).scale(matrix[i][j])
        combos.append(z)
        images.append(_image_in_subring(model, ring, model.apply(z)))
    return HalperinBasis(combos, images, module, attempts, strategy, matrix)


def s_structure_from_halperin(basis: HalperinBasis) -> SModuleStructure:
    n = len(basis.module.ring.evens)
    return SModuleStructure(basis.module, basis.images[n:])


@dataclass(frozen=True)
class CrossCheckReport:
    total_cohomology: int
    total_tor: int
    by_odd_count: tuple[tuple[int, int, int], ...]  # (q, dim H_q, dim Tor^q)
    strategy: str
    passes: bool


def tor_via_model_cross_check(model: Model, seed: int = 0,
                              budget: int = 64) -> CrossCheckReport:
    """Run the full pipeline (odd-basis search, quotient, Tor) and compare
    against the directly computed cohomology, totals and per odd count.

    A mismatch contradicts the structural isomorphism between the cohomology
    of a pure elliptic model and the Tor table of its quotient module, so it
    raises :class:`ContradictionError`.
    """
    from .cohomology import betti_complete, betti_by_odd_count, certify_elliptic
    basis = halperin_basis(model, seed=seed, budget=budget)
    s = s_structure_from_halperin(basis)
    table = tor_table(basis.module, s)
    cert = certify_elliptic(model)
    betti = betti_complete(model, cert)
    per_q = betti_by_odd_count(model, cert)
    r = s.parameter_count
    rows = []
    ok = betti.total_dim == table.total
    for q in range(max(r, max(per_q, default=0)) + 1):
        hq = per_q.get(q, 0)
        tq = table[q]
        rows.append((q, hq, tq))
        ok = ok and hq == tq
    if not ok:
        raise ContradictionError(
            f"cohomology/Tor mismatch: total H = {betti.total_dim}, total Tor = "
            f"{table.total}, by odd count {rows}")
    return CrossCheckReport(betti.total_dim, table.total, tuple(rows),
                            basis.strategy, True)
