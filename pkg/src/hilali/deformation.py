"""One-parameter families of quotient modules and perturbed differentials.

Two pipelines live here.  Quotient-module families ``(P_i + t Q_i)`` support
fiber evaluation at exact rational parameters, the constant-length flatness
test, and Tor semicontinuity sampling.  Differential perturbations adjoin a
contractible odd line, verify the cancellation and doubling identities at
random parameters, and drive the stepwise reduction to the all-odd model,
producing the 2^r lower bound on total cohomology.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Element
from .cohomology import (BettiTable, betti, certify_elliptic,
                         formal_dimension_bound)
from .errors import ContradictionError, IndeterminateError, ModelError
from .koszul import (QuotientModule, SModuleStructure, _binomial,
                     halperin_basis, quotient_basis, tor_table)
from .model import (Derivation, Model, check_differential, classify,
                    restrict_model, tensor_with_odd_line)


def random_rational(rng: random.Random, bound: int = 10**6) -> Fraction:
    """A nonzero rational with numerator and denominator up to ``bound``."""
    num = rng.randint(1, bound) * rng.choice((1, -1))
    den = rng.randint(1, bound)
    return Fraction(num, den)


# -- families of quotient modules ---------------------------------------------


class ModuleFamily:
    """Relations ``P_i + t Q_i`` over an even polynomial ring, one parameter.

    The parameter is never adjoined to the ring: fibers are evaluated at
    exact rational values and cached.
    """

    def __init__(self, ring, base_relations: list[Element],
                 perturbations: list[Element], max_probe: int | None = None):
        if len(base_relations) != len(perturbations):
            raise ModelError("each relation needs a perturbation (possibly zero)")
        self.ring = ring
        self.base_relations = list(base_relations)
        self.perturbations = list(perturbations)
        self.max_probe = max_probe
        self.fiber_cache: dict[Fraction, QuotientModule] = {}

    def relations_at(self, xi) -> list[Element]:
        xi = Fraction(xi)
        return [p + q.scale(xi) for p, q in
                zip(self.base_relations, self.perturbations)]

    def fiber(self, xi) -> QuotientModule:
        """Quotient by the relations evaluated at ``t = xi``."""
        xi = Fraction(xi)
        if xi not in self.fiber_cache:
            self.fiber_cache[xi] = quotient_basis(
                self.ring, self.relations_at(xi), max_probe=self.max_probe)
        return self.fiber_cache[xi]


def standard_family(model: Model, seed: int = 0, budget: int = 64):
    """The family ``(P_i + t x_i)`` attached to a pure elliptic model.

    The P's come from the odd-basis search; the remaining images act as the
    module parameters.  Returns ``(family, action_polys)``.
    """
    basis = halperin_basis(model, seed=seed, budget=budget)
    ring = basis.module.ring
    n = len(ring.evens)
    perturbations = [Element.generator(ring, g.name) for g in ring.evens]
    family = ModuleFamily(ring, basis.images[:n], perturbations)
    return family, basis.images[n:]


@dataclass(frozen=True)
class FlatnessReport:
    verdict: str                     # "flat" | "not flat" | "indeterminate"
    lengths: tuple[tuple[Fraction, int | None], ...]
    common_length: int | None
    seed: int

    @property
    def flat(self) -> bool:
        return self.verdict == "flat"


def flatness_check(family: ModuleFamily, samples: int = 5, seed: int = 0,
                   numden_bound: int = 10**6) -> FlatnessReport:
    """Flatness as constant fiber length: compare t = 0 against random
    nonzero rational parameters."""
    if samples < 2:
        raise ModelError("flatness sampling needs at least two fibers")
    rng = random.Random(seed)
    points = [Fraction(0)]
    while len(points) < samples + 1:
        xi = random_rational(rng, numden_bound)
        if xi not in points:
            points.append(xi)
    lengths: list[tuple[Fraction, int | None]] = []
    indeterminate = False
    for xi in points:
        try:
            lengths.append((xi, family.fiber(xi).length))
        except IndeterminateError:
            lengths.append((xi, None))
            indeterminate = True
    if indeterminate:
        return FlatnessReport("indeterminate", tuple(lengths), None, seed)
    values = {length for _, length in lengths}
    if len(values) == 1:
        return FlatnessReport("flat", tuple(lengths), values.pop(), seed)
    return FlatnessReport("not flat", tuple(lengths), None, seed)


@dataclass(frozen=True)
class SemicontinuitySample:
    xi: Fraction
    dims: dict[int, int]
    dominated: bool          # dims[k] <= base dims[k] for every k
    binomial_pattern: bool   # dims equal binom(r, k): the split-fiber shape


@dataclass(frozen=True)
class SemicontinuityReport:
    base_dims: dict[int, int]
    samples: tuple[SemicontinuitySample, ...]
    passes: bool
    seed: int


def tor_semicontinuity_check(family: ModuleFamily, action_polys: list[Element],
                             samples: int = 5, seed: int = 0,
                             numden_bound: int = 10**6) -> SemicontinuityReport:
    """Check dim Tor^k(fiber at xi) <= dim Tor^k(fiber at 0) for sampled xi.

    A violated inequality contradicts semicontinuity over a flat family, so
    it raises :class:`ContradictionError`.  The report also records whether
    each sampled fiber shows the generic binomial pattern.
    """
    base = family.fiber(0)
    base_table = tor_table(base, SModuleStructure(base, action_polys))
    r = len(action_polys)
    rng = random.Random(seed)
    out = []
    seen = {Fraction(0)}
    for _ in range(samples):
        xi = random_rational(rng, numden_bound)
        while xi in seen:
            xi = random_rational(rng, numden_bound)
        seen.add(xi)
        fiber = family.fiber(xi)
        table = tor_table(fiber, SModuleStructure(fiber, action_polys))
        dominated = all(table[k] <= base_table[k] for k in range(r + 1))
        if not dominated:
            raise ContradictionError(
                f"Tor semicontinuity violated at xi = {xi}: "
                f"{table.dims} exceeds {base_table.dims}")
        pattern = all(table[k] == _binomial(r, k) for k in range(r + 1))
        out.append(SemicontinuitySample(xi, dict(table.dims), dominated, pattern))
    return SemicontinuityReport(dict(base_table.dims), tuple(out), True, seed)


# -- perturbed differentials ---------------------------------------------------


class PerturbedModel:
    """A model extended by one odd generator ybar with d(ybar) = 0, plus the
    derivation sending ybar to a chosen closed even generator.

    ``at_parameter(xi)`` realizes the perturbed differential d + xi * delta;
    its square vanishes for every xi because the target generator is closed
    and no image mentions ybar.
    """

    def __init__(self, base: Model, x_name: str):
        gen = base.universe.by_name.get(x_name)
        if gen is None or gen.is_odd:
            raise ModelError(f"{x_name!r} is not an even generator")
        if not base.d.of_generator(x_name).is_zero:
            raise ModelError(f"{x_name!r} must be closed to admit the pairing")
        self.base = base
        self.x_name = x_name
        name = "ybar"
        k = 1
        while name in base.universe.by_name:
            name = f"ybar{k}"
            k += 1
        self.ybar_name = name
        self.w_model = tensor_with_odd_line(base, name, gen.degree - 1)
        self.delta = Derivation(self.w_model.universe, {
            name: Element.generator(self.w_model.universe, x_name)})

    def at_parameter(self, xi) -> Model:
        images = dict(self.w_model.d.images)
        images[self.ybar_name] = Element.generator(
            self.w_model.universe, self.x_name).scale(Fraction(xi))
        return Model(self.w_model.universe, images, name=self.w_model.name,
                     allow_degree_one=True)

    def anticommutator_report(self) -> dict[str, bool]:
        """Which composition identity the two derivations satisfy on
        generators: each one-sided composite, and the graded anticommutator
        (the identity equivalent to the perturbed square vanishing)."""
        d = self.w_model.d
        delta = self.delta
        d_delta = True
        delta_d = True
        anti = True
        for g in self.w_model.universe.generators:
            img = Element.generator(self.w_model.universe, g.name)
            dd = d(delta(img))
            sd = delta(d(img))
            d_delta = d_delta and dd.is_zero
            delta_d = delta_d and sd.is_zero
            anti = anti and (dd + sd).is_zero
        return {"d_after_delta_zero": d_delta, "delta_after_d_zero": delta_d,
                "graded_anticommute": anti}


def _verified_total(model: Model, bound: int, window: int) -> tuple[int, BettiTable]:
    """Total cohomology dimension with an explicit vanishing tail above the
    expected bound; a dirty tail means the truncation cannot be trusted."""
    bound = max(bound, 0)
    table = betti(model, bound + window)
    for p in range(bound + 1, bound + window + 1):
        if table[p]:
            raise ContradictionError(
                f"nonzero cohomology in degree {p}, above the expected bound "
                f"{bound}, while reducing {model.name or model.universe}")
    return table.total_dim, table


@dataclass(frozen=True)
class ReductionSample:
    xi: Fraction
    dim_w_xi: int
    collapse_ok: bool      # dim H(W, d_xi) equals dim H of the quotient model
    dominated: bool        # dim H(W, d_xi) <= dim H(W, d_0)


@dataclass(frozen=True)
class ReductionStep:
    x_name: str
    ybar_degree: int
    dim_current: int
    dim_w_zero: int
    doubling_ok: bool
    dim_next: int
    samples: tuple[ReductionSample, ...]
    anticommutator: dict[str, bool] = field(default_factory=dict)


@dataclass(frozen=True)
class ReductionReport:
    steps: tuple[ReductionStep, ...]
    n: int
    r: int
    dim_h: int
    terminal_dim: int        # 2^(n+r), verified on the all-odd model
    chain_ok: bool           # 2^n * dim_h >= 2^(n+r)
    lower_bound_ok: bool     # dim_h >= 2^r
    seed: int

    @property
    def passes(self) -> bool:
        return self.chain_ok and self.lower_bound_ok


def perturb_and_reduce(model: Model, samples: int = 2, seed: int = 0,
                       numden_bound: int = 10**6,
                       max_retries: int = 3) -> ReductionReport:
    """Cancel the even generators one at a time against perturbed odd lines.

    Each step verifies, at ``samples`` random nonzero rationals: the
    cancellation equality ``dim H(W, d_xi) = dim H(quotient)`` and the
    semicontinuity inequality ``dim H(W, d_xi) <= dim H(W, d_0)``, plus the
    exact doubling ``dim H(W, d_0) = 2 dim H(current)``.  The terminal model
    is all-odd with zero differential and total dimension ``2^(n+r)``,
    yielding ``2^n dim H >= 2^(n+r)`` and the lower bound ``dim H >= 2^r``.
    """
    cls = classify(model)
    if not cls.is_hyperelliptic:
        raise ModelError("the reduction pipeline requires a hyperelliptic model")
    cert = certify_elliptic(model)
    if not cert.elliptic:
        raise ModelError(f"not certified elliptic: {cert.evidence}")
    rng = random.Random(seed)
    window = max(g.degree for g in model.universe.generators)
    dim_h, _ = _verified_total(model, formal_dimension_bound(model), window)
    n = cls.n
    r = cls.r
    current = model
    dim_current = dim_h
    steps = []
    while any(not g.is_odd for g in current.universe.generators):
        target = min((g for g in current.universe.generators if not g.is_odd),
                     key=lambda g: (g.degree, g.index))
        pm = PerturbedModel(current, target.name)
        quotient = restrict_model(current, {target.name})
        bound_w = formal_dimension_bound(pm.w_model)
        window_w = max(g.degree for g in pm.w_model.universe.generators)
        dim_w0, _ = _verified_total(pm.w_model, bound_w, window_w)
        doubling_ok = dim_w0 == 2 * dim_current
        if not doubling_ok:
            raise ContradictionError(
                f"doubling failed at {target.name}: dim H(W) = {dim_w0} != "
                f"2 * {dim_current}")
        dim_next, _ = _verified_total(quotient, bound_w, window_w)
        taken: list[ReductionSample] = []
        seen: set[Fraction] = set()
        retries = 0
        while len(taken) < samples:
            xi = random_rational(rng, numden_bound)
            if xi in seen:
                continue
            seen.add(xi)
            perturbed = pm.at_parameter(xi)
            if not check_differential(perturbed).passed:
                raise ContradictionError(
                    f"(d + xi delta)^2 != 0 at xi = {xi}")
            dim_wxi, _ = _verified_total(perturbed, bound_w, window_w)
            collapse_ok = dim_wxi == dim_next
            dominated = dim_wxi <= dim_w0
            if not collapse_ok:
                raise ContradictionError(
                    f"cancellation equality failed at {target.name}, xi = {xi}: "
                    f"dim H(W, d_xi) = {dim_wxi} != {dim_next}")
            if not dominated:
                retries += 1
                if retries > max_retries:
                    raise ContradictionError(
                        f"semicontinuity failed at {target.name} for every "
                        f"retry (last xi = {xi}): {dim_wxi} > {dim_w0}")
                continue
            taken.append(ReductionSample(xi, dim_wxi, collapse_ok, dominated))
        steps.append(ReductionStep(
            target.name, pm.w_model.universe.by_name[pm.ybar_name].degree,
            dim_current, dim_w0, doubling_ok, dim_next, tuple(taken),
            pm.anticommutator_report()))
        current = quotient
        dim_current = dim_next
    # terminal all-odd model: differential must vanish, total dim is 2^odd
    if any(not img.is_zero for img in current.d.images.values()):
        raise ContradictionError("terminal all-odd model has nonzero differential")
    terminal_expected = 2 ** len(current.universe.odds)
    if dim_current != terminal_expected:
        raise ContradictionError(
            f"terminal dimension {dim_current} != 2^{len(current.universe.odds)}")
    chain_ok = (2 ** n) * dim_h >= terminal_expected
    lower_bound_ok = dim_h >= 2 ** r
    if not (chain_ok and lower_bound_ok):
        raise ContradictionError(
            f"reduction chain failed: 2^{n} * {dim_h} vs 2^{n + r}")
    return ReductionReport(tuple(steps), n, r, dim_h, terminal_expected,
                           chain_ok, lower_bound_ok, seed)
