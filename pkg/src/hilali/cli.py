"""Command-line interface: validation, classification, cohomology and Tor
reports, deformation checks, the dimension-inequality verdict, corpus
execution, and claim lookup.

Exit codes: 0 success (or verdict holds), 1 a verified claim failed, 2 input
error, 3 indeterminate (a probe or search budget ran out).  Reports go to
stdout and are byte-stable for a fixed seed; diagnostics and timing go to
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from pathlib import Path

from . import __version__
from .claims import CLAIMS, explain
from .cohomology import (ChainComplex, betti, betti_complete,
                         certify_elliptic, euler_characteristics,
                         hilali_verdict)
from .deformation import (flatness_check, perturb_and_reduce, standard_family,
                          tor_semicontinuity_check)
from .errors import (ContradictionError, EngineError, IndeterminateError,
                     ModelError, NotFiniteLengthError, ParseError)
from .koszul import (duality_pairing, halperin_basis, is_regular_sequence,
                     s_structure_from_halperin, tor_bounds_check, tor_table,
                     tor_via_model_cross_check)
from .model import (check_differential, check_minimal, classify, load_model,
                    pure_part)

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_INPUT = 2
EXIT_INDETERMINATE = 3

CORPUS_FORMAT = "hilali-corpus/1"


def _binom2(n: int) -> int:
    return n * (n + 1) // 2


def _verdict_branch(cls) -> tuple[str, bool, bool]:
    """Which arithmetic branch already certifies the inequality for a
    hyperelliptic model: the quadratic-count bound, the 2^r bound, or
    neither (full computation).  Exact integer comparisons throughout."""
    n, r = cls.n, cls.r
    quadratic_count = 2 * (1 + n + _binom2(n) - (n + r)) >= 2 * n + r
    power_bound = 2 ** r >= 2 * n + r if r >= 0 else False
    if cls.is_hyperelliptic and r >= 0 and quadratic_count:
        return "quadratic-count", quadratic_count, power_bound
    if cls.is_hyperelliptic and r >= 0 and power_bound:
        return "power-bound", quadratic_count, power_bound
    return "full-computation", quadratic_count, power_bound


# -- report plumbing -----------------------------------------------------------


def _report(command: str, target: str, seed: int | None, results: dict) -> dict:
    doc = {"command": command, "target": target,
           "engine": {"name": "hilali", "version": __version__}}
    if seed is not None:
        doc["seed"] = seed
    doc["results"] = results
    return doc


def _emit(doc: dict, text_lines: list[str], fmt: str) -> None:
    if fmt == "machine":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


# -- individual commands --------------------------------------------------------


def _cmd_validate(args) -> int:
    model = load_model_lenient(args.model)
    report = check_differential(model)
    minimal = check_minimal(model) if report.passed else False
    results = {
        "passed": report.passed,
        "minimal": minimal,
        "entries": [asdict(e) for e in report.entries],
    }
    lines = [f"model: {model.name or args.model}"]
    for e in report.entries:
        status = "ok" if e.degree_ok and e.square_ok else "FAIL"
        suffix = f"  [{e.message}]" if e.message else ""
        lines.append(f"  {e.name:>8}  {status}{suffix}")
    lines.append(f"differential: {'valid' if report.passed else 'INVALID'}")
    if report.passed:
        lines.append(f"minimal: {'yes' if minimal else 'no'}")
    _emit(_report("validate", args.model, None, results), lines, args.format)
    if not report.passed:
        _diag("validation failed on: " +
              ", ".join(e.name for e in report.failures()))
        return EXIT_INPUT
    return EXIT_OK


def load_model_lenient(path: str):
    """Load a model file without rejecting an invalid differential, so that
    ``validate`` can report the failure rather than crash."""
    from .model import MODEL_FORMAT, Model
    try:
        return load_model(path)
    except ModelError:
        # reload structurally and let check_differential report the details
        import json as _json
        from .algebra import universe
        from .parsing import parse_expression
        doc = _json.loads(Path(path).read_text())
        if doc.get("format") != MODEL_FORMAT:
            raise
        uni = universe([(g["name"], int(g["degree"])) for g in doc["generators"]])
        diff = {name: parse_expression(text, uni)
                for name, text in (doc.get("differential") or {}).items()}
        return Model(uni, diff, name=str(doc.get("name", "")))


def _cmd_classify(args) -> int:
    model = load_model(args.model)
    cls = classify(model)
    results = asdict(cls)
    lines = [f"model: {model.name or args.model}",
             f"  minimal:        {cls.is_minimal}",
             f"  pure:           {cls.is_pure}",
             f"  hyperelliptic:  {cls.is_hyperelliptic}",
             f"  even gens (n):  {cls.n}",
             f"  odd gens (n+r): {cls.n_plus_r}",
             f"  r:              {cls.r}"]
    if cls.r < 0:
        lines.append("  note: r < 0 is incompatible with an elliptic model")
    _emit(_report("classify", args.model, None, results), lines, args.format)
    return EXIT_OK


def _cohomology_results(model, max_degree: int | None, assume: bool,
                        max_probe: int | None = None):
    cx = ChainComplex(model)
    if assume:
        if max_degree is None:
            raise ModelError("--assume-elliptic requires --max-degree")
        cert = None
        table = betti(model, max_degree, cx)
        complete = False
    else:
        cert = certify_elliptic(model, max_probe=max_probe)
        if not cert.elliptic:
            raise ModelError(f"not certified elliptic: {cert.evidence}; "
                             "rerun with --assume-elliptic --max-degree N")
        table = betti_complete(model, cert, cx)
        complete = True
    rows = []
    for p in range(table.max_degree_computed + 1):
        rows.append({"degree": p, "chain_dim": cx.chain_dim(p),
                     "rank_d": cx.rank(p), "betti": table[p]})
    results = {
        "dims": {str(p): d for p, d in sorted(table.dims.items())},
        "total": table.total_dim,
        "max_degree": table.max_degree_computed,
        "complete": complete,
        "rows": rows,
    }
    if complete:
        chi, chi_pi = euler_characteristics(model, table)
        results["chi"] = chi
        results["chi_pi"] = chi_pi
        # informational only: the dimension table of an elliptic model tends
        # to be palindromic, but nothing downstream relies on it
        bound = table.max_degree_computed
        results["poincare_symmetric"] = all(
            table[p] == table[bound - p] for p in range(bound + 1))
    if cert is not None:
        results["certificate"] = {
            "elliptic": cert.elliptic,
            "formal_dimension_bound": cert.formal_dimension_bound,
            "length": cert.length,
            "socle_degree": cert.socle_degree,
            "evidence": cert.evidence,
        }
    return results


def _cmd_cohomology(args) -> int:
    model = load_model(args.model)
    results = _cohomology_results(model, args.max_degree, args.assume_elliptic,
                                  args.max_probe)
    lines = [f"model: {model.name or args.model}",
             f"{'degree':>6} {'chain':>7} {'rank d':>7} {'betti':>6}"]
    for row in results["rows"]:
        if row["chain_dim"] == 0 and row["betti"] == 0:
            continue
        lines.append(f"{row['degree']:>6} {row['chain_dim']:>7} "
                     f"{row['rank_d']:>7} {row['betti']:>6}")
    lines.append(f"total dim H = {results['total']}"
                 + ("" if results["complete"] else " (truncated, not certified)"))
    if "chi" in results:
        lines.append(f"chi = {results['chi']}, chi_pi = {results['chi_pi']}")
    if "certificate" in results:
        lines.append("certificate: " + results["certificate"]["evidence"])
    _emit(_report("cohomology", args.model, None, results), lines, args.format)
    return EXIT_OK


def _cmd_hilali(args) -> int:
    model = load_model(args.model)
    verdict = hilali_verdict(model, assume_elliptic=args.assume_elliptic,
                             max_degree=args.max_degree,
                             max_probe=args.max_probe)
    cls = classify(model)
    branch, quadratic_count, power_bound = _verdict_branch(cls)
    results = {
        "dim_v": verdict.dim_v,
        "dim_h": verdict.dim_h,
        "holds": verdict.holds,
        "chi": verdict.chi,
        "chi_pi": verdict.chi_pi,
        "signs_ok": verdict.signs_ok,
        "assumed_elliptic": verdict.assumed_elliptic,
        "branch": branch,
        "branch_tests": {"quadratic_count": quadratic_count,
                         "power_bound": power_bound},
        "dims": {str(p): d for p, d in sorted(verdict.table.dims.items())},
    }
    lines = [f"model: {model.name or args.model}",
             f"dim V = {verdict.dim_v}",
             f"dim H = {verdict.dim_h}",
             f"chi = {verdict.chi}, chi_pi = {verdict.chi_pi} "
             f"(sign constraints {'ok' if verdict.signs_ok else 'VIOLATED'})",
             f"certifying branch: {branch}",
             f"verdict: dim V <= dim H {'HOLDS' if verdict.holds else 'FAILS'}"]
    _emit(_report("hilali", args.model, None, results), lines, args.format)
    if not verdict.holds or not verdict.signs_ok:
        return EXIT_CLAIM_FAILED
    return EXIT_OK


def _cmd_tor(args) -> int:
    model = load_model(args.model)
    basis = halperin_basis(model, seed=args.seed, budget=args.budget,
                           max_probe=args.max_probe)
    s = s_structure_from_halperin(basis)
    table = tor_table(basis.module, s)
    bounds = tor_bounds_check(basis.module, s)
    pairing = duality_pairing(basis.module, seed=args.seed)
    results = {
        "strategy": basis.strategy,
        "attempts": basis.attempts,
        "length": basis.module.length,
        "socle_degree": basis.module.socle_degree,
        "dims": {str(k): d for k, d in sorted(table.dims.items())},
        "total": table.total,
        "bounds": {"tor_bottom": bounds.tor_bottom, "tor_top": bounds.tor_top,
                   "n": bounds.n, "r": bounds.r, "passes": bounds.passes},
        "duality": {"perfect": pairing.perfect, "mode": pairing.mode,
                    "socle_dimension": pairing.socle_dimension},
    }
    lines = [f"model: {model.name or args.model}",
             f"odd basis: {basis.strategy} (attempt {basis.attempts})",
             f"quotient length {basis.module.length}, socle degree "
             f"{basis.module.socle_degree}",
             "Tor dims: " + ", ".join(f"{k}: {d}" for k, d in sorted(table.dims.items())),
             f"total Tor = {table.total}",
             f"endpoint bounds >= n+1: {'ok' if bounds.passes else 'FAIL'}",
             f"duality pairing: {'perfect' if pairing.perfect else 'NOT certified'} "
             f"({pairing.mode})"]
    if args.cross_check:
        check = tor_via_model_cross_check(model, seed=args.seed, budget=args.budget)
        results["cross_check"] = {
            "passes": check.passes,
            "total_cohomology": check.total_cohomology,
            "total_tor": check.total_tor,
            "by_odd_count": [list(row) for row in check.by_odd_count],
        }
        lines.append(f"cross-check: total H = {check.total_cohomology} = "
                     f"total Tor = {check.total_tor} "
                     f"({'ok' if check.passes else 'FAIL'})")
    _emit(_report("tor", args.model, args.seed, results), lines, args.format)
    return EXIT_OK


def _cmd_regseq(args) -> int:
    model = load_model(args.model)
    from .algebra import restrict_element
    from .koszul import even_subring
    ring = even_subring(model)
    n = len(ring.evens)
    odds = model.universe.odds
    if len(odds) < n:
        raise ModelError("fewer odd generators than even ones; no candidate sequence")
    pure = pure_part(model)
    relations = [restrict_element(pure.d.of_generator(g.name), ring)
                 for g in odds[:n]]
    regular = is_regular_sequence(ring, relations, max_probe=args.max_probe)
    results = {"regular": regular,
               "relations": [str(i) for i in range(n)]}
    lines = [f"model: {model.name or args.model}",
             f"first {n} pure-part images regular: {regular}"]
    _emit(_report("regseq", args.model, None, results), lines, args.format)
    return EXIT_OK


def _cmd_deform(args) -> int:
    model = load_model(args.model)
    family, action_polys = standard_family(model, seed=args.seed)
    flat = flatness_check(family, samples=args.samples, seed=args.seed)
    results = {
        "flatness": {
            "verdict": flat.verdict,
            "common_length": flat.common_length,
            "lengths": [[str(xi), n] for xi, n in flat.lengths],
        }
    }
    lines = [f"model: {model.name or args.model}",
             f"family: n relations perturbed by t * x_i",
             f"flatness: {flat.verdict}"
             + (f" (length {flat.common_length})" if flat.flat else "")]
    code = EXIT_OK
    if flat.verdict == "indeterminate":
        code = EXIT_INDETERMINATE
    elif flat.flat:
        semi = tor_semicontinuity_check(family, action_polys,
                                        samples=args.samples, seed=args.seed)
        all_binomial = all(s.binomial_pattern for s in semi.samples)
        results["semicontinuity"] = {
            "passes": semi.passes,
            "base_dims": {str(k): d for k, d in sorted(semi.base_dims.items())},
            "samples": [{"xi": str(s.xi),
                         "dims": {str(k): d for k, d in sorted(s.dims.items())},
                         "binomial_pattern": s.binomial_pattern}
                        for s in semi.samples],
            "all_binomial": all_binomial,
        }
        lines.append("base Tor dims: " +
                     ", ".join(f"{k}: {d}" for k, d in sorted(semi.base_dims.items())))
        lines.append(f"semicontinuity over {len(semi.samples)} samples: "
                     f"{'ok' if semi.passes else 'FAIL'}")
        lines.append(f"generic binomial pattern: "
                     f"{'yes' if all_binomial else 'no'}")
    _emit(_report("deform", args.model, args.seed, results), lines, args.format)
    return code


def _cmd_reduce(args) -> int:
    model = load_model(args.model)
    report = perturb_and_reduce(model, samples=args.samples, seed=args.seed)
    results = {
        "n": report.n,
        "r": report.r,
        "dim_h": report.dim_h,
        "terminal_dim": report.terminal_dim,
        "chain_ok": report.chain_ok,
        "lower_bound_ok": report.lower_bound_ok,
        "passes": report.passes,
        "steps": [{
            "cancelled": s.x_name,
            "ybar_degree": s.ybar_degree,
            "dim_current": s.dim_current,
            "dim_w_zero": s.dim_w_zero,
            "dim_next": s.dim_next,
            "doubling_ok": s.doubling_ok,
            "anticommutator": s.anticommutator,
            "samples": [{"xi": str(t.xi), "dim_w_xi": t.dim_w_xi,
                         "collapse_ok": t.collapse_ok,
                         "dominated": t.dominated} for t in s.samples],
        } for s in report.steps],
    }
    lines = [f"model: {model.name or args.model}",
             f"dim H = {report.dim_h}, n = {report.n}, r = {report.r}"]
    for s in report.steps:
        xis = ", ".join(str(t.xi) for t in s.samples)
        lines.append(f"  cancel {s.x_name}: "
                     f"2*{s.dim_current} = {s.dim_w_zero} >= dim H(W, d_xi) = "
                     f"{s.samples[0].dim_w_xi} = dim H(next)  [xi: {xis}]")
    lines.append(f"terminal all-odd dimension: {report.terminal_dim}")
    lines.append(f"chain: 2^{report.n} * {report.dim_h} >= 2^{report.n + report.r}"
                 f" {'HOLDS' if report.chain_ok else 'FAILS'}")
    lines.append(f"lower bound: dim H >= 2^{report.r} "
                 f"{'HOLDS' if report.lower_bound_ok else 'FAILS'}")
    _emit(_report("reduce", args.model, args.seed, results), lines, args.format)
    return EXIT_OK if report.passes else EXIT_CLAIM_FAILED


def _cmd_explain(args) -> int:
    ident = args.claim
    if ident not in CLAIMS:
        available = ", ".join(sorted(CLAIMS))
        _diag(f"unknown claim {ident!r}; available: {available}")
        return EXIT_INPUT
    corpus_dir = args.corpus if args.corpus else _default_corpus_dir()
    text = explain(ident, corpus_dir)
    results = {"claim": ident, "text": text}
    _emit(_report("explain", ident, None, results), [text], args.format)
    return EXIT_OK


def _default_corpus_dir() -> str | None:
    candidate = Path.cwd() / "corpus"
    return str(candidate) if candidate.is_dir() else None


# -- corpus runner ---------------------------------------------------------------


def run_manifest(path: str, seed: int) -> dict:
    """Execute one manifest: every expectation, compared exactly."""
    manifest_path = Path(path)
    try:
        doc = json.loads(manifest_path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        return {"manifest": manifest_path.stem, "error": str(exc),
                "results": []}
    if doc.get("format") != CORPUS_FORMAT:
        return {"manifest": manifest_path.stem,
                "error": f"expected format {CORPUS_FORMAT!r}", "results": []}
    model_path = manifest_path.parent / doc["model"]
    runner = _EntryRunner(model_path, seed)
    results = []
    for exp in doc.get("expectations", []):
        op = exp.get("operation", "")
        check = exp.get("check", "")
        expect = exp.get("expect")
        claim = exp.get("claim", "")
        try:
            actual = runner.extract(op, check, exp.get("params"))
            ok = actual == expect
        except EngineError as exc:
            actual = f"error: {exc}"
            ok = False
        results.append({"operation": op, "check": check, "claim": claim,
                        "expect": expect, "actual": actual, "ok": ok})
    return {"manifest": manifest_path.stem, "model": doc["model"],
            "results": results}


class _EntryRunner:
    """Per-manifest operation cache; each operation runs at most once."""

    def __init__(self, model_path: Path, seed: int):
        self.model_path = model_path
        self.seed = seed
        self._model = None
        self._cache: dict[str, dict] = {}

    @property
    def model(self):
        if self._model is None:
            self._model = load_model(self.model_path)
        return self._model

    def extract(self, op: str, check: str, params: dict | None = None):
        result = self.result(op, params)
        value = result
        for key in check.split("."):
            if not key:
                raise ModelError(f"empty check path for operation {op!r}")
            if not isinstance(value, dict) or key not in value:
                raise ModelError(f"unknown check {check!r} for operation {op!r}")
            value = value[key]
        return value

    def result(self, op: str, params: dict | None = None) -> dict:
        key = op if not params else op + json.dumps(params, sort_keys=True)
        if key not in self._cache:
            handler = getattr(self, "_op_" + op, None)
            if handler is None:
                raise ModelError(f"unknown operation {op!r}")
            self._cache[key] = handler(**(params or {}))
        return self._cache[key]

    def _op_apply(self, element: str = "0") -> dict:
        from .algebra import format_element
        from .parsing import parse_expression
        parsed = parse_expression(element, self.model.universe)
        return {"image": format_element(self.model.apply(parsed))}

    def _op_validate(self) -> dict:
        model = load_model_lenient(str(self.model_path))
        report = check_differential(model)
        return {"passed": report.passed,
                "minimal": check_minimal(model) if report.passed else False}

    def _op_classify(self) -> dict:
        return asdict(classify(self.model))

    def _op_certify_elliptic(self) -> dict:
        cert = certify_elliptic(self.model)
        return {"elliptic": cert.elliptic,
                "formal_dimension_bound": cert.formal_dimension_bound,
                "length": cert.length, "socle_degree": cert.socle_degree}

    def _op_cohomology(self) -> dict:
        return _cohomology_results(self.model, None, False)

    def _op_hilali_verdict(self) -> dict:
        verdict = hilali_verdict(self.model)
        branch, _, _ = _verdict_branch(classify(self.model))
        return {"dim_v": verdict.dim_v, "dim_h": verdict.dim_h,
                "holds": verdict.holds, "chi": verdict.chi,
                "chi_pi": verdict.chi_pi, "signs_ok": verdict.signs_ok,
                "branch": branch}

    def _op_tor(self) -> dict:
        basis = halperin_basis(self.model, seed=self.seed)
        s = s_structure_from_halperin(basis)
        table = tor_table(basis.module, s)
        return {"dims": {str(k): d for k, d in sorted(table.dims.items())},
                "total": table.total, "length": basis.module.length,
                "socle_degree": basis.module.socle_degree}

    def _op_tor_bounds(self) -> dict:
        basis = halperin_basis(self.model, seed=self.seed)
        s = s_structure_from_halperin(basis)
        bounds = tor_bounds_check(basis.module, s)
        return {"passes": bounds.passes, "tor_bottom": bounds.tor_bottom,
                "tor_top": bounds.tor_top, "length": bounds.length}

    def _op_duality(self) -> dict:
        basis = halperin_basis(self.model, seed=self.seed)
        pairing = duality_pairing(basis.module, seed=self.seed)
        return {"perfect": pairing.perfect, "mode": pairing.mode,
                "socle_dimension": pairing.socle_dimension}

    def _op_cross_check(self) -> dict:
        check = tor_via_model_cross_check(self.model, seed=self.seed)
        return {"passes": check.passes,
                "total_cohomology": check.total_cohomology,
                "total_tor": check.total_tor}

    def _op_flatness(self) -> dict:
        family, _ = standard_family(self.model, seed=self.seed)
        flat = flatness_check(family, seed=self.seed)
        return {"verdict": flat.verdict, "common_length": flat.common_length}

    def _op_semicontinuity(self) -> dict:
        family, action_polys = standard_family(self.model, seed=self.seed)
        semi = tor_semicontinuity_check(family, action_polys, seed=self.seed)
        return {"passes": semi.passes,
                "base_dims": {str(k): d for k, d in sorted(semi.base_dims.items())},
                "all_binomial": all(s.binomial_pattern for s in semi.samples)}

    def _op_reduce(self) -> dict:
        report = perturb_and_reduce(self.model, seed=self.seed)
        return {"passes": report.passes, "dim_h": report.dim_h,
                "terminal_dim": report.terminal_dim,
                "n": report.n, "r": report.r,
                "all_collapse_ok": all(t.collapse_ok for s_ in report.steps
                                       for t in s_.samples),
                "all_dominated": all(t.dominated for s_ in report.steps
                                     for t in s_.samples),
                "all_doubling_ok": all(s_.doubling_ok for s_ in report.steps)}

    def _op_regseq(self) -> dict:
        from .algebra import restrict_element
        from .koszul import even_subring
        ring = even_subring(self.model)
        n = len(ring.evens)
        pure = pure_part(self.model)
        relations = [restrict_element(pure.d.of_generator(g.name), ring)
                     for g in self.model.universe.odds[:n]]
        try:
            regular = is_regular_sequence(ring, relations)
        except NotFiniteLengthError:
            regular = False
        return {"regular": regular}


def _cmd_corpus(args) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        _diag(f"{directory} is not a directory")
        return EXIT_INPUT
    manifests = sorted(directory.glob("*.manifest.json"))
    if not manifests:
        _diag("warning: 0 expectations (no manifests found)")
        _emit(_report("corpus", str(directory), args.seed,
                      {"entries": [], "total": 0, "failed": 0}),
              ["0 expectations"], args.format)
        return EXIT_OK
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            entries = list(pool.map(run_manifest, [str(p) for p in manifests],
                                    [args.seed] * len(manifests)))
    else:
        entries = [run_manifest(str(p), args.seed) for p in manifests]
    total = 0
    failed = 0
    lines = []
    claims_seen = set()
    for entry in entries:
        if entry.get("error"):
            failed += 1
            lines.append(f"{entry['manifest']}: ERROR {entry['error']}")
            continue
        for res in entry["results"]:
            total += 1
            if res["claim"]:
                claims_seen.add(res["claim"])
            if res["ok"]:
                lines.append(f"ok   {entry['manifest']}: {res['operation']}."
                             f"{res['check']} = {res['expect']}")
            else:
                failed += 1
                lines.append(f"FAIL {entry['manifest']}: {res['operation']}."
                             f"{res['check']} expected {res['expect']!r}, got "
                             f"{res['actual']!r}  [claim: {res['claim'] or '-'}]")
    lines.append(f"expectations: {total}, failed: {failed}")
    if total == 0:
        _diag("warning: 0 expectations")
    lines.append("claims exercised: " +
                 (", ".join(sorted(claims_seen)) if claims_seen else "(none)"))
    results = {"entries": entries, "total": total, "failed": failed,
               "claims": sorted(claims_seen)}
    _emit(_report("corpus", str(directory), args.seed, results), lines, args.format)
    return EXIT_OK if failed == 0 else EXIT_CLAIM_FAILED


# -- entry point ------------------------------------------------------------------


def _diag(message: str) -> None:
    sys.stderr.write(message + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilali",
        description="Exact computations with rational differential graded "
                    "models: cohomology, Tor tables, deformations, verdicts.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, model=True, seed=False, samples=False, probe=False):
        if model:
            p.add_argument("model", help="model file (hilali-model/1 JSON)")
        p.add_argument("--format", choices=("text", "machine"), default="text")
        if seed:
            p.add_argument("--seed", type=int, default=0)
        if samples:
            p.add_argument("--samples", type=int, default=5)
        if probe:
            p.add_argument("--max-probe", type=int, default=None,
                           help="truncation ceiling for quotient probes")
        return p

    common(sub.add_parser("validate", help="check the differential"))
    common(sub.add_parser("classify", help="minimal / pure / hyperelliptic flags"))
    p = common(sub.add_parser("cohomology", help="Betti table report"), probe=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--assume-elliptic", action="store_true")
    p = common(sub.add_parser("hilali", help="dimension-inequality verdict"),
               probe=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--assume-elliptic", action="store_true")
    p = common(sub.add_parser("tor", help="Tor table via the quotient module"),
               seed=True, probe=True)
    p.add_argument("--budget", type=int, default=64)
    p.add_argument("--cross-check", action="store_true")
    common(sub.add_parser("regseq", help="regular-sequence test"), probe=True)
    common(sub.add_parser("deform", help="flatness and Tor semicontinuity"),
           seed=True, samples=True, probe=True)
    p = common(sub.add_parser("reduce", help="perturb and cancel even generators"),
               seed=True)
    p.add_argument("--samples", type=int, default=2)
    p = common(sub.add_parser("corpus", help="run a corpus directory"),
               model=False, seed=True)
    p.add_argument("directory")
    p.add_argument("--jobs", type=int, default=1)
    p = common(sub.add_parser("explain", help="describe a verified claim"),
               model=False)
    p.add_argument("claim")
    p.add_argument("--corpus", default=None)
    return parser


_HANDLERS = {
    "validate": _cmd_validate,
    "classify": _cmd_classify,
    "cohomology": _cmd_cohomology,
    "hilali": _cmd_hilali,
    "tor": _cmd_tor,
    "regseq": _cmd_regseq,
    "deform": _cmd_deform,
    "reduce": _cmd_reduce,
    "corpus": _cmd_corpus,
    "explain": _cmd_explain,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = _HANDLERS[args.command]
    start = time.monotonic()
    try:
        code = handler(args)
    except (ModelError, ParseError, NotFiniteLengthError, OSError) as exc:
        _diag(f"error: {exc}")
        code = EXIT_INPUT
    except IndeterminateError as exc:
        _diag(f"indeterminate: {exc}")
        code = EXIT_INDETERMINATE
    except ContradictionError as exc:
        _diag(f"CONTRADICTION: {exc}")
        code = EXIT_CLAIM_FAILED
    _diag(f"# wall time: {time.monotonic() - start:.3f}s")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
