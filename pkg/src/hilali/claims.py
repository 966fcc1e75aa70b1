"""Registry of the verified claims: what each one states, which operation
tests it, and which bundled corpus entries exercise it.

Corpus manifests reference these identifiers in their ``claim`` fields, so
coverage can be recovered by scanning a corpus directory.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class Claim:
    ident: str
    statement: str
    operation: str
    command: str


_CLAIMS = [
    Claim("power-exactness",
          "In the bundled two-even-generator model, explicit odd potentials "
          "make twice a power of each even generator exact.",
          "Model.apply", "hilali validate / library test"),
    Claim("nonregular-pairs",
          "No pair of differential images of the two-even-generator model is "
          "a regular sequence; each pair sub-model fails ellipticity.",
          "is_regular_sequence / certify_elliptic", "hilali regseq"),
    Claim("regular-basis-existence",
          "A pure elliptic model admits an odd-generator basis whose first n "
          "differential images form a regular sequence.",
          "halperin_basis", "hilali tor"),
    Claim("tor-isomorphism",
          "Total cohomology of a pure elliptic model equals the total Tor "
          "dimension of its quotient module, matching the lower grading to "
          "the homological index.",
          "tor_via_model_cross_check", "hilali tor --cross-check"),
    Claim("tor-endpoint-bounds",
          "The bottom and top Tor dimensions are each at least n+1.",
          "tor_bounds_check", "hilali tor"),
    Claim("socle-pairing",
          "A finite-length complete-intersection quotient carries a perfect "
          "multiplication pairing into its one-dimensional socle.",
          "duality_pairing", "hilali tor"),
    Claim("binomial-tor",
          "The Tor table of the one-point module over r parameters is the "
          "row of binomial coefficients binom(r, k).",
          "tor_table", "hilali tor"),
    Claim("quadratic-count",
          "For r = 0 the quotient length is at least 2n, by counting the "
          "surviving quadratic monomials.",
          "tor_bounds_check", "hilali tor"),
    Claim("flat-family-constant-length",
          "A one-parameter family of finite-length quotients is flat exactly "
          "when the fiber length is constant.",
          "flatness_check", "hilali deform"),
    Claim("tor-semicontinuity",
          "In a flat family, each Tor dimension of the special fiber "
          "dominates that of a generic fiber.",
          "tor_semicontinuity_check", "hilali deform"),
    Claim("generic-fiber-binomials",
          "For the family P_i + t x_i, a generic fiber splits into reduced "
          "points and its Tor table equals the binomial row.",
          "tor_semicontinuity_check", "hilali deform"),
    Claim("homology-semicontinuity",
          "Perturbing the differential can only drop the total cohomology "
          "dimension at a generic parameter.",
          "perturb_and_reduce", "hilali reduce"),
    Claim("ks-collapse",
          "At a nonzero parameter the adjoined pair (x, ybar) becomes "
          "contractible: the perturbed total cohomology equals that of the "
          "model with the pair removed.",
          "perturb_and_reduce", "hilali reduce"),
    Claim("doubling",
          "Tensoring with a free odd line exactly doubles total cohomology.",
          "perturb_and_reduce", "hilali reduce"),
    Claim("exp-r-lower-bound",
          "Iterating the cancellation over all n even generators yields "
          "2^n dim H >= 2^(n+r), hence dim H >= 2^r.",
          "perturb_and_reduce", "hilali reduce"),
    Claim("euler-signs",
          "For a certified-elliptic model, chi >= 0, chi_pi <= 0, and "
          "chi_pi < 0 exactly when chi = 0.",
          "euler_characteristics", "hilali cohomology"),
    Claim("branch-inequality",
          "The hyperelliptic verdict follows arithmetically when either "
          "1 + n + binom(n+1, 2) - (n+r) >= n + r/2 or 2^r >= 2n + r.",
          "hilali_verdict", "hilali hilali"),
    Claim("endgame-model",
          "In the all-quadrics model with three degree-2 generators, two "
          "explicit degree-8 cocycles exist, at most one bounds, and the "
          "total cohomology is at least 10 >= 9 = dim V.",
          "cocycle_basis / hilali_verdict", "hilali hilali"),
    Claim("verdict",
          "dim V <= dim H for every minimal certified-elliptic model.",
          "hilali_verdict", "hilali hilali"),
]

CLAIMS = {c.ident: c for c in _CLAIMS}


def corpus_coverage(corpus_dir: str | Path) -> dict[str, list[str]]:
    """Map claim identifier -> manifest names referencing it."""
    coverage: dict[str, list[str]] = {}
    directory = Path(corpus_dir)
    if not directory.is_dir():
        return coverage
    for path in sorted(directory.glob("*.manifest.json")):
        try:
            doc = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError):
            continue
        for exp in doc.get("expectations", []):
            ident = exp.get("claim")
            if ident:
                entries = coverage.setdefault(ident, [])
                if path.stem not in entries:
                    entries.append(path.stem)
    return coverage


def explain(ident: str, corpus_dir: str | Path | None = None) -> str:
    """Human-readable description of one claim; raises KeyError when the
    identifier is unknown."""
    claim = CLAIMS[ident]
    lines = [f"claim:     {claim.ident}",
             f"statement: {claim.statement}",
             f"operation: {claim.operation}",
             f"command:   {claim.command}"]
    if corpus_dir is not None:
        covered = corpus_coverage(corpus_dir).get(ident, [])
        if covered:
            lines.append("corpus:    " + ", ".join(covered))
        else:
            lines.append("corpus:    (no bundled entry references this claim)")
    return "\n".join(lines)
