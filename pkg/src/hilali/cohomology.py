"""Degreewise exact cohomology of a model: Betti tables, Euler
characteristics, ellipticity certification, explicit cocycle and coboundary
bases, and the dimension-inequality verdict."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element
from .errors import (ContradictionError, EngineError, IndeterminateError,
                     ModelError, NotFiniteLengthError)
from .linalg import Rref, intify, kernel_of_rows, rank_of_rows
from .koszul import even_subring, quotient_basis
from .model import Model, check_differential, check_minimal, classify, pure_part


@dataclass(frozen=True)
class BettiTable:
    dims: dict[int, int]
    max_degree_computed: int
    total_dim: int
    complete: bool

    def __getitem__(self, degree: int) -> int:
        return self.dims.get(degree, 0)


class ChainComplex:
    """Per-degree bases and differential ranks of one model; cached."""

    def __init__(self, model: Model):
        self.model = model
        self._ranks: dict[int, int] = {}

    def basis(self, degree: int):
        return self.model.universe.basis(degree)

    def rows(self, degree: int) -> list[dict[int, Fraction]]:
        """Images of the degree-p basis as vectors over the (p+1)-basis."""
        target = {m: i for i, m in enumerate(self.basis(degree + 1))}
        rows = []
        for m in self.basis(degree):
            img = self.model.d.apply_monomial(m)
            rows.append({target[t]: c for t, c in img.terms.items()})
        return rows

    def rank(self, degree: int) -> int:
        if degree < 0:
            return 0
        if degree not in self._ranks:
            rows = [intify(row)[0] for row in self.rows(degree)]
            self._ranks[degree] = rank_of_rows(rows)
        return self._ranks[degree]

    def chain_dim(self, degree: int) -> int:
        return len(self.basis(degree))

    def betti_number(self, degree: int) -> int:
        if degree < 0:
            return 0
        return self.chain_dim(degree) - self.rank(degree) - self.rank(degree - 1)


def betti(model: Model, max_degree: int,
          chain_complex: ChainComplex | None = None) -> BettiTable:
    """Cohomology dimensions for degrees 0..max_degree.

    dims[p] = dim ker(d_p) - rank(d_{p-1}), by exact row reduction over the
    canonical monomial bases.  The table is not marked complete; see
    :func:`betti_complete` for certified truncations.
    """
    if max_degree < 0:
        raise EngineError("max_degree must be non-negative")
    cx = chain_complex if chain_complex is not None else ChainComplex(model)
    dims = {}
    for p in range(max_degree + 1):
        b = cx.betti_number(p)
        if b:
            dims[p] = b
    return BettiTable(dims, max_degree, sum(dims.values()), False)


@dataclass(frozen=True)
class EllipticityCertificate:
    elliptic: bool
    formal_dimension_bound: int
    evidence: str
    length: int | None = None
    socle_degree: int | None = None


def formal_dimension_bound(model: Model) -> int:
    """Truncation degree sum(deg y) - sum(deg x - 1); cohomology of an
    elliptic model vanishes above it."""
    uni = model.universe
    return sum(g.degree for g in uni.odds) - sum(g.degree - 1 for g in uni.evens)


def certify_elliptic(model: Model, max_probe: int | None = None) -> EllipticityCertificate:
    """Certify finite-dimensional cohomology of a hyperelliptic model.

    Criterion: the quotient of the even polynomial subring by every
    zero-odd-factor component of the differential images has finite length.
    Failures of the probe are reported as "not certified" rather than proven
    non-elliptic, except where infinite length is definite.
    """
    cls = classify(model)
    if not cls.is_hyperelliptic:
        raise ModelError("ellipticity certification requires a hyperelliptic model")
    bound = formal_dimension_bound(model)
    ring = even_subring(model)
    pure = pure_part(model)
    relations = []
    for g in model.universe.odds:
        img = pure.d.of_generator(g.name)
        if not img.is_zero:
            from .algebra import restrict_element
            relations.append(restrict_element(img, ring))
    try:
        module = quotient_basis(ring, relations, max_probe=max_probe)
    except NotFiniteLengthError as exc:
        return EllipticityCertificate(False, bound, f"not elliptic: {exc}")
    except IndeterminateError as exc:
        return EllipticityCertificate(False, bound, f"not certified: {exc}")
    return EllipticityCertificate(
        True, bound,
        f"pure-part quotient has finite length {module.length} "
        f"(socle degree {module.socle_degree})",
        module.length, module.socle_degree)


def betti_complete(model: Model, certificate: EllipticityCertificate,
                   chain_complex: ChainComplex | None = None) -> BettiTable:
    """Betti table through the formal dimension bound, certified complete by
    an explicit vanishing window of one maximal generator degree above it."""
    if not certificate.elliptic:
        raise ModelError("a complete table requires an ellipticity certificate")
    bound = max(certificate.formal_dimension_bound, 0)
    window = max(g.degree for g in model.universe.generators)
    table = betti(model, bound + window, chain_complex)
    for p in range(bound + 1, bound + window + 1):
        if table[p] != 0:
            raise ContradictionError(
                f"nonzero cohomology in degree {p} above the formal dimension "
                f"bound {bound} of a certified-elliptic model")
    dims = {p: d for p, d in table.dims.items() if p <= bound}
    return BettiTable(dims, bound, sum(dims.values()), True)


def euler_characteristics(model: Model, table: BettiTable) -> tuple[int, int]:
    """chi = alternating sum of the Betti numbers (complete tables only);
    chi_pi = (number of even generators) - (number of odd generators)."""
    if not table.complete:
        raise EngineError("Euler characteristic needs a complete Betti table")
    chi = sum((-1 if p % 2 else 1) * d for p, d in table.dims.items())
    uni = model.universe
    return chi, len(uni.evens) - len(uni.odds)


def cocycle_basis(model: Model, degree: int) -> list[Element]:
    """Echelonized basis of ker(d) in one degree."""
    cx = ChainComplex(model)
    basis = cx.basis(degree)
    vectors = kernel_of_rows(cx.rows(degree), len(cx.basis(degree + 1)))
    out = []
    for vec in vectors:
        e = Element.zero(model.universe)
        for j, c in vec.items():
            e.terms[basis[j]] = Fraction(c)
        out.append(e)
    return out


def coboundary_basis(model: Model, degree: int) -> list[Element]:
    """Echelonized basis of im(d) in one degree."""
    if degree == 0:
        return []
    cx = ChainComplex(model)
    basis = cx.basis(degree)
    rref = Rref()
    for row in cx.rows(degree - 1):
        rref.add(row)
    out = []
    for col in sorted(rref.pivots):
        e = Element.zero(model.universe)
        for j, c in rref.pivots[col].items():
            e.terms[basis[j]] = Fraction(c)
        out.append(e)
    return out


def is_exact(model: Model, e: Element) -> bool:
    """Does a homogeneous cocycle bound?  Checks membership in im(d)."""
    degree = e.degree()
    if degree is None:
        return True
    cx = ChainComplex(model)
    index = {m: i for i, m in enumerate(cx.basis(degree))}
    rref = Rref()
    for row in cx.rows(degree - 1):
        rref.add(row)
    residue = rref.reduce({index[m]: c for m, c in e.terms.items()})
    return not residue


def betti_by_odd_count(model: Model, certificate: EllipticityCertificate) -> dict[int, int]:
    """Total cohomology dimension split by the lower grading (odd factor
    count).  Requires a pure model, where d maps each piece q to q-1 and the
    complex splits."""
    cls = classify(model)
    if not cls.is_pure:
        raise ModelError("the lower-grading split of cohomology needs a pure model")
    if not certificate.elliptic:
        raise ModelError("requires an ellipticity certificate")
    bound = max(certificate.formal_dimension_bound, 0)
    window = max(g.degree for g in model.universe.generators)
    top = bound + window
    uni = model.universe
    # bases split by (degree, odd count)
    split: dict[tuple[int, int], list] = {}
    for p in range(top + 2):
        for m in uni.basis(p):
            split.setdefault((p, len(m.odds)), []).append(m)
    ranks: dict[tuple[int, int], int] = {}

    def rank(p: int, q: int) -> int:
        if (p, q) not in ranks:
            source = split.get((p, q), [])
            target = {m: i for i, m in enumerate(split.get((p + 1, q - 1), []))}
            rows = []
            for m in source:
                img = model.d.apply_monomial(m)
                rows.append(intify({target[t]: c for t, c in img.terms.items()})[0])
            ranks[(p, q)] = rank_of_rows(rows)
        return ranks[(p, q)]

    totals: dict[int, int] = {}
    max_q = len(uni.odds)
    for q in range(max_q + 1):
        total = 0
        for p in range(top + 1):
            dim_pq = len(split.get((p, q), []))
            if dim_pq == 0:
                continue
            total += dim_pq - rank(p, q) - rank(p - 1, q + 1)
        if total:
            totals[q] = total
    return totals


@dataclass(frozen=True)
class Verdict:
    dim_v: int
    dim_h: int
    holds: bool
    chi: int
    chi_pi: int
    signs_ok: bool          # chi >= 0, chi_pi <= 0, and (chi_pi < 0 iff chi = 0)
    assumed_elliptic: bool
    table: BettiTable
    certificate: EllipticityCertificate | None


def hilali_verdict(model: Model, *, assume_elliptic: bool = False,
                   max_degree: int | None = None,
                   max_probe: int | None = None) -> Verdict:
    """Compare dim V against the total cohomology dimension.

    Requires a minimal model certified elliptic (or an explicit truncation
    degree under ``assume_elliptic``).  Also evaluates the Euler
    characteristic sign constraints of elliptic models.
    """
    report = check_differential(model)
    if not report.passed:
        raise ModelError("the differential fails validation; run check_differential")
    if not check_minimal(model):
        raise ModelError("the verdict is defined for minimal models only")
    if assume_elliptic:
        if max_degree is None:
            raise ModelError("assume_elliptic requires an explicit max_degree")
        raw = betti(model, max_degree)
        table = BettiTable(raw.dims, raw.max_degree_computed, raw.total_dim, True)
        certificate = None
    else:
        certificate = certify_elliptic(model, max_probe=max_probe)
        if not certificate.elliptic:
            raise ModelError(f"not certified elliptic: {certificate.evidence}")
        table = betti_complete(model, certificate)
    chi, chi_pi = euler_characteristics(model, table)
    signs_ok = chi >= 0 and chi_pi <= 0 and ((chi_pi < 0) == (chi == 0))
    dim_v = len(model.universe.generators)
    return Verdict(dim_v, table.total_dim, dim_v <= table.total_dim,
                   chi, chi_pi, signs_ok, assume_elliptic, table, certificate)
