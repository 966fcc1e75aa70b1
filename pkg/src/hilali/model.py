"""Differential-graded structure on a free graded-commutative algebra.

A :class:`Model` couples a generator universe with images of the generators
under a degree +1 derivation.  Validation (degree bookkeeping, square zero),
minimality, the pure/hyperelliptic classification, the pure part, and the
lower grading all live here, together with the versioned model file format.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .algebra import (Element, GeneratorUniverse, Monomial, _mul_monomials,
                      format_element, universe)
from .errors import EngineError, InhomogeneousError, ModelError
from .parsing import parse_expression

MODEL_FORMAT = "hilali-model/1"


class Derivation:
    """A graded derivation of odd degree, determined by generator images.

    Extends by the signed Leibniz rule ``D(ab) = D(a) b + (-1)^{deg a} a D(b)``.
    Image lookups are by generator name; missing names mean image zero.
    """

    def __init__(self, uni: GeneratorUniverse, images: dict[str, Element]):
        for name, img in images.items():
            if name not in uni.by_name:
                raise ModelError(f"image given for unknown generator {name!r}")
            if img.universe != uni:
                raise ModelError(f"image of {name!r} lives over a different universe")
        self.universe = uni
        self.images = {name: img for name, img in images.items() if not img.is_zero}
        self._mono_cache: dict[Monomial, Element] = {}

    def of_generator(self, name: str) -> Element:
        img = self.images.get(name)
        return img if img is not None else Element.zero(self.universe)

    def __call__(self, e: Element) -> Element:
        if e.universe != self.universe:
            raise ModelError("element lives over a different universe")
        out = Element.zero(self.universe)
        for m, c in e.terms.items():
            out = out + self.apply_monomial(m).scale(c)
        return out

    def apply_monomial(self, m: Monomial) -> Element:
        cached = self._mono_cache.get(m)
        if cached is not None:
            return cached
        uni = self.universe
        out: dict[Monomial, Fraction] = {}

        def accumulate(factor: int, left: Monomial, img: Element, right: Monomial):
            for mi, ci in img.terms.items():
                p1 = _mul_monomials(left, mi)
                if p1 is None:
                    continue
                s1, m1 = p1
                p2 = _mul_monomials(m1, right)
                if p2 is None:
                    continue
                s2, m2 = p2
                c = ci * (factor * s1 * s2)
                s = out.get(m2, 0) + c
                if s:
                    out[m2] = s
                elif m2 in out:
                    del out[m2]

        # Even factors: the prefix has even degree, so no sign appears and
        # d(x^e) = e x^{e-1} dx may be inserted in place.
        zero_exps = (0,) * len(uni.evens)
        odd_tail = Monomial(zero_exps, m.odds)
        for i, (e, g) in enumerate(zip(m.exps, uni.evens)):
            if e == 0:
                continue
            img = self.images.get(g.name)
            if img is None:
                continue
            reduced = Monomial(m.exps[:i] + (e - 1,) + m.exps[i + 1:], ())
            accumulate(e, reduced, img, odd_tail)
        # Odd factors: the k-th odd factor sits past k odd factors of the
        # prefix, contributing (-1)^k.
        for k, pos in enumerate(m.odds):
            g = uni.odds[pos]
            img = self.images.get(g.name)
            if img is None:
                continue
            prefix = Monomial(m.exps, m.odds[:k])
            suffix = Monomial(zero_exps, m.odds[k + 1:])
            accumulate(-1 if k % 2 else 1, prefix, img, suffix)
        result = Element._raw(uni, out)
        self._mono_cache[m] = result
        return result


class Model:
    """A presentation ``(universe, d)``; immutable once constructed.

    Light structural checks happen here; the full degree and square-zero
    report comes from :func:`check_differential`.
    """

    def __init__(self, uni: GeneratorUniverse, differential: dict[str, Element],
                 name: str = "", allow_degree_one: bool = False):
        if not allow_degree_one:
            for g in uni.generators:
                if g.degree < 2:
                    raise ModelError(
                        f"generator {g.name} has degree {g.degree}; the model is "
                        "not simply-connected")
        self.universe = uni
        self.name = name
        self.d = Derivation(uni, differential)

    @property
    def differential(self) -> dict[str, Element]:
        return dict(self.d.images)

    def apply(self, e: Element) -> Element:
        """Extend d over a general element by linearity and Leibniz."""
        return self.d(e)

    def __repr__(self) -> str:
        return f"Model({self.name or self.universe!r})"


@dataclass(frozen=True)
class GeneratorCheck:
    name: str
    degree_ok: bool
    square_ok: bool
    message: str = ""


@dataclass(frozen=True)
class ValidationReport:
    entries: tuple[GeneratorCheck, ...]
    passed: bool

    def failures(self) -> list[GeneratorCheck]:
        return [e for e in self.entries if not (e.degree_ok and e.square_ok)]


def check_differential(model: Model) -> ValidationReport:
    """Per generator: image homogeneous of degree +1 and d(d g) = 0."""
    entries = []
    ok = True
    for g in model.universe.generators:
        img = model.d.of_generator(g.name)
        message = ""
        if img.is_zero:
            degree_ok = True
            square_ok = True
        else:
            try:
                degree_ok = img.degree() == g.degree + 1
                if not degree_ok:
                    message = f"deg d({g.name}) = {img.degree()} != {g.degree + 1}"
            except InhomogeneousError:
                degree_ok = False
                message = f"d({g.name}) is not homogeneous"
            square = model.d(img)
            square_ok = square.is_zero
            if not square_ok:
                message = (message + "; " if message else "") + \
                    f"d(d({g.name})) = {format_element(square)} != 0"
        entries.append(GeneratorCheck(g.name, degree_ok, square_ok, message))
        ok = ok and degree_ok and square_ok
    return ValidationReport(tuple(entries), ok)


def check_minimal(model: Model) -> bool:
    """True iff every differential image has all monomials of word length >= 2."""
    for img in model.d.images.values():
        for m in img.terms:
            if m.word_length < 2:
                return False
    return True


@dataclass(frozen=True)
class Classification:
    is_minimal: bool
    is_pure: bool
    is_hyperelliptic: bool
    n: int          # even generators
    n_plus_r: int   # odd generators
    r: int          # n_plus_r - n; negative values flag non-elliptic inputs


def classify(model: Model) -> Classification:
    """Syntactic classification from the differential images.

    Pure: d = 0 on evens and the odd images use even generators only.
    Hyperelliptic: d = 0 on evens and every monomial of every odd image
    contains at least one even factor.
    """
    uni = model.universe
    evens_closed = all(model.d.of_generator(g.name).is_zero for g in uni.evens)
    pure = evens_closed
    hyper = evens_closed
    for g in uni.odds:
        img = model.d.of_generator(g.name)
        for m in img.terms:
            if m.odds:
                pure = False
            if sum(m.exps) == 0:
                hyper = False
    n = len(uni.evens)
    n_plus_r = len(uni.odds)
    return Classification(
        is_minimal=check_minimal(model),
        is_pure=pure and hyper,
        is_hyperelliptic=hyper,
        n=n,
        n_plus_r=n_plus_r,
        r=n_plus_r - n,
    )


def lower_grading(e: Element) -> dict[int, Element]:
    """Split an element by its number of odd factors; parts sum back to it."""
    return e.split_by_odd_count()


def pure_part(model: Model) -> Model:
    """Replace each odd image by its zero-odd-factor component.

    Only defined for hyperelliptic models; the result is pure.
    """
    cls = classify(model)
    if not cls.is_hyperelliptic:
        raise ModelError("pure part is defined for hyperelliptic models only")
    images = {}
    for g in model.universe.odds:
        img = model.d.of_generator(g.name)
        part = lower_grading(img).get(0)
        if part is not None and not part.is_zero:
            images[g.name] = part
    return Model(model.universe, images, name=model.name + ".pure" if model.name else "",
                 allow_degree_one=True)


# -- model files -------------------------------------------------------------


def model_to_dict(model: Model) -> dict:
    return {
        "format": MODEL_FORMAT,
        "name": model.name,
        "generators": [{"name": g.name, "degree": g.degree}
                       for g in model.universe.generators],
        "differential": {name: format_element(img)
                         for name, img in sorted(model.d.images.items())},
    }


def model_from_dict(doc: dict, *, source: str = "<dict>") -> Model:
    if not isinstance(doc, dict) or doc.get("format") != MODEL_FORMAT:
        raise ModelError(f"{source}: expected a {MODEL_FORMAT!r} document")
    gens = doc.get("generators")
    if not isinstance(gens, list) or not gens:
        raise ModelError(f"{source}: missing generator list")
    specs = []
    for entry in gens:
        try:
            specs.append((str(entry["name"]), int(entry["degree"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise ModelError(f"{source}: bad generator entry {entry!r}") from exc
    try:
        uni = universe(specs)
    except EngineError as exc:
        raise ModelError(f"{source}: {exc}") from exc
    diff = {}
    for name, text in (doc.get("differential") or {}).items():
        if name not in uni.by_name:
            raise ModelError(f"{source}: differential given for unknown generator {name!r}")
        diff[name] = parse_expression(str(text), uni)
    try:
        model = Model(uni, diff, name=str(doc.get("name", "")))
    except ModelError as exc:
        raise ModelError(f"{source}: {exc}") from exc
    report = check_differential(model)
    if not report.passed:
        bad = ", ".join(e.name for e in report.failures())
        details = "; ".join(e.message for e in report.failures() if e.message)
        raise ModelError(f"{source}: differential fails validation on {bad}: {details}")
    return model


def load_model(path: str | Path) -> Model:
    """Load and fully validate a model file (degree +1, homogeneous, d^2 = 0)."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ModelError(f"{path}: {exc}") from exc
    return model_from_dict(doc, source=str(path))


def save_model(model: Model, path: str | Path) -> None:
    Path(path).write_text(json.dumps(model_to_dict(model), indent=2) + "\n")


def tensor_with_odd_line(model: Model, name: str, degree: int) -> Model:
    """Extend by one odd generator with zero differential (degree may be 1)."""
    if degree % 2 != 1:
        raise ModelError("the appended generator must have odd degree")
    if name in model.universe.by_name:
        raise ModelError(f"generator name {name!r} already used")
    specs = [(g.name, g.degree) for g in model.universe.generators] + [(name, degree)]
    uni = universe(specs)
    images = {}
    for gname, img in model.d.images.items():
        images[gname] = _transport(img, uni)
    return Model(uni, images, name=model.name, allow_degree_one=True)


def restrict_model(model: Model, dropped: set[str]) -> Model:
    """Quotient by the ideal of the dropped generators: keep the others and
    set the dropped ones to zero inside every differential image."""
    from .algebra import restrict_element
    specs = [(g.name, g.degree) for g in model.universe.generators
             if g.name not in dropped]
    uni = universe(specs)
    images = {}
    for gname, img in model.d.images.items():
        if gname in dropped:
            continue
        restricted = restrict_element(img, uni)
        if not restricted.is_zero:
            images[gname] = restricted
    return Model(uni, images, name=model.name, allow_degree_one=True)


def _transport(e: Element, target: GeneratorUniverse) -> Element:
    """Re-express an element over a universe extending its own."""
    out = Element.zero(target)
    src = e.universe
    for m, c in e.terms.items():
        powers = {g.name: exp for exp, g in zip(m.exps, src.evens) if exp}
        odd_names = tuple(src.odds[k].name for k in m.odds)
        out.terms[target.monomial(powers, odd_names)] = Fraction(c)
    return out
