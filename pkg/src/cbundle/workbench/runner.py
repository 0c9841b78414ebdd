"""Command dispatch: config in, structured report out."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone

import numpy as np

from .. import __version__
from ..cohomology import (H1, HOLOMORPHIC, euler_apply, hilbert_series_cone, kahler_obstruction,
                          picard_report, random_laurent_poly, solve_cohomological_equation,
                          vanishing_sets)
from ..errors import CbundleError, ConfigurationError, HypothesisError
from ..flow import (FlowSpec, check_freeness, divergence_check, epsilon_sweep, flow_spec,
                    orbit_experiment, random_nonzero_z, rows_to_csv, summarize_rows)
from ..gaussian import ZERO, GaussianRational
from ..hyperbolicity import block_hyperbolicity, is_weakly_hyperbolic, make_lambda
from ..merofield import (build_monomial_lattice, image_rank, kernel_generic, kernel_specific,
                         transcendence_degree, verify_kernel, weight_matrix)
from ..realization import Realization, realization_for, sample_cone_point
from ..rootdata import ParabolicData, RootSystem, build_root_system, parabolic_from_weight, weight_system
from ..standardize import (ExponentMatrix, StandardTorusData, check_exponent_matrix,
                           exponent_matrix_of, extend_to_standard)
from .config import COMMANDS, FactorSpec, RunConfig


@dataclass
class Factor:
    """One factor ``L_i``: either a flag variety cone or ``C^n - 0`` with a matrix action."""

    spec: FactorSpec
    rs: RootSystem | None = None
    std: StandardTorusData | None = None
    parab: ParabolicData | None = None
    real: Realization | None = None
    matrix: ExponentMatrix | None = None

    @classmethod
    def build(cls, spec: FactorSpec) -> "Factor":
        if not spec.is_flag:
            return cls(spec, matrix=ExponentMatrix.from_rows(spec.exponent_matrix))
        rs = build_root_system(spec.series, spec.rank)
        ws = weight_system(rs, spec.omega)
        return cls(spec, rs, extend_to_standard(rs, spec.omega, ws),
                   parabolic_from_weight(rs, spec.omega), realization_for(rs, spec.omega))

    @property
    def is_flag(self) -> bool:
        return self.rs is not None

    @property
    def n(self) -> int:
        return self.std.n if self.is_flag else self.matrix.shape[1]

    def exponent_rows(self) -> list[tuple[int, ...]]:
        """One row per basis vector, in the order used by the flow."""
        if not self.is_flag:
            return list(self.matrix.entries)
        basis = self.real.basis_weights if self.real else self.std.weights.expanded()
        return [self.std.row(mu) for mu in basis]

    @property
    def generator(self) -> bool:
        """The dual bundle generates Pic(X) (omega is a fundamental weight)."""
        return sorted(self.spec.omega) == [0] * (len(self.spec.omega) - 1) + [1]

    def describe(self) -> str:
        if not self.is_flag:
            return f"C^{self.matrix.shape[0]} - 0 with exponent matrix {self.matrix.tolist()}"
        return f"{self.spec.series}{self.spec.rank} omega={list(self.spec.omega)}"


def _require_flag(factors, cmd: str) -> None:
    for i, f in enumerate(factors, start=1):
        if not f.is_flag:
            raise ConfigurationError(f"{cmd}: factor {i} is not a flag variety")


def _spectrum_values(factors, lam) -> list[list[GaussianRational]]:
    out = []
    offset = 0
    for f in factors:
        block = lam[offset: offset + f.n]
        offset += f.n
        vals = []
        for row in f.exponent_rows():
            total = ZERO
            for lj, d in zip(block, row):
                total = total + lj * d
            vals.append(total)
        out.append(vals)
    return out


def _hyp(verified=(), assumed=()) -> dict:
    return {"verified": list(verified), "assumed": list(assumed)}


class _Run:
    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.factors = [Factor.build(cfg.factor1), Factor.build(cfg.factor2)]
        self.csv_rows = None
        lam = cfg.lam
        self.lam_param = None
        if lam.semisimple is not None:
            terms = [(u.block - 1, u.root, u.coeff) for u in lam.unipotent]
            self.lam_param = make_lambda(lam.semisimple, (self.factors[0].n, self.factors[1].n), terms,
                                         [f.rs for f in self.factors])

    # -- helpers -------------------------------------------------------
    def _lambda_values(self, cmd: str):
        if self.lam_param is None:
            raise ConfigurationError(f"{cmd}: needs lambda.semisimple values")
        return self.lam_param.semisimple

    def _require_hyperbolic(self, cmd: str):
        lam = self._lambda_values(cmd)
        rep = is_weakly_hyperbolic(lam, self.factors[0].n, self.factors[1].n)
        if not rep.holds:
            raise HypothesisError(f"{cmd}: lambda_s is not weakly hyperbolic ({rep.reason})")
        return lam

    def _flow_spec(self) -> FlowSpec:
        f1, f2 = self.factors
        if f1.is_flag and f2.is_flag:
            return flow_spec(f1.std, f2.std, self.lam_param, f1.real, f2.real)
        if self.lam_param.unipotent:
            raise ConfigurationError("unipotent terms need flag-variety factors")
        v1, v2 = _spectrum_values(self.factors, self.lam_param.semisimple)
        return FlowSpec.diagonal(v1, v2)

    def _sample_block(self, f: Factor, rng: np.random.Generator) -> np.ndarray:
        if f.real is not None:
            return sample_cone_point(f.real, self.cfg.experiment.scale, rng).coords
        r = len(f.exponent_rows())
        return rng.normal(size=r) + 1j * rng.normal(size=r)

    def _sample_points(self, n: int, stream: int) -> list[np.ndarray]:
        seeds = np.random.SeedSequence([self.cfg.experiment.seed, stream]).spawn(n)
        pts = []
        for ss in seeds:
            rng = np.random.default_rng(ss)
            pts.append(np.concatenate([self._sample_block(f, rng) for f in self.factors]))
        return pts

    # -- commands ------------------------------------------------------
    def check_standard(self):
        out = []
        for i, f in enumerate(self.factors, start=1):
            if f.is_flag:
                rep = check_exponent_matrix(exponent_matrix_of(f.std))
                out.append({"factor": i, "describe": f.describe(), "d_prime": f.std.d_prime,
                            "d": f.std.d, "report": rep.as_dict(),
                            "table": [{"weight": list(mu), "row": list(f.std.row(mu)),
                                       "multiplicity": f.std.weights.multiplicity(mu)}
                                      for mu in f.std.weights.weights]})
            else:
                rep = check_exponent_matrix(f.matrix)
                out.append({"factor": i, "describe": f.describe(), "report": rep.as_dict()})
        ok = all(r["report"]["is_d_standard"] for r in out)
        return {"factors": out, "all_standard": ok}, _hyp(["integer exponent matrices"]), ok

    def check_hyperbolic(self):
        lam = self._lambda_values("check-hyperbolic")
        rep = is_weakly_hyperbolic(lam, self.factors[0].n, self.factors[1].n)
        res = {"lambda_s": [str(x) for x in lam], "report": rep.as_dict(),
               "unipotent": [t.as_dict() for t in self.lam_param.unipotent],
               "unipotent_commutes": True}
        return res, _hyp(["exact Gaussian-rational arithmetic",
                          "each unipotent root vanishes on lambda_s"]), rep.holds

    def spectrum(self):
        self._require_hyperbolic("spectrum")
        v1, v2 = _spectrum_values(self.factors, self.lam_param.semisimple)
        rep = block_hyperbolicity(v1, v2)
        res = {"blocks": [[str(x) for x in v1], [str(x) for x in v2]],
               "induced_hyperbolicity": rep.as_dict()}
        return res, _hyp(["lambda_s weakly hyperbolic", "induced values computed exactly"]), rep.holds

    def vanishing(self):
        _require_flag(self.factors, "vanishing")
        dims = [f.parab.dim_x for f in self.factors]
        rep = vanishing_sets(*dims)
        return rep.as_dict(), _hyp(["X_i = G_i/P_i flag varieties", "dual bundles negative ample"]), True

    def picard(self):
        _require_flag(self.factors, "picard")
        dims = [f.parab.dim_x for f in self.factors]
        maximal = [f.parab.is_maximal(f.rs.rank) for f in self.factors]
        gens = [f.generator for f in self.factors]
        rep = picard_report(dims, maximal, gens)
        res = {**rep.as_dict(), "maximal": maximal, "generator": gens}
        return res, _hyp(rep.trace), not rep.violations

    def kahler(self):
        f1 = self.factors[0]
        if not f1.is_flag:
            v = kahler_obstruction(False, False)
            return {**v.as_dict(), "note": "factor 1 is not a flag variety; hypotheses not verified"}, \
                _hyp(), True
        v = kahler_obstruction(True, True)
        return v.as_dict(), _hyp(["H^1(G/P; R) = 0 (G/P simply connected)",
                                  "c_1 of a negative ample bundle is nonzero"]), True

    def solve_eq9(self):
        self._require_hyperbolic("solve-eq9")
        v1, v2 = _spectrum_values(self.factors, self.lam_param.semisimple)
        b = v1 + v2
        sizes = (len(v1), len(v2))
        rng = np.random.default_rng(np.random.SeedSequence([self.cfg.experiment.seed, 9]))
        modes = [HOLOMORPHIC] + ([H1] if len(v1) == 2 else [])
        out = {"b": [str(x) for x in b], "type": list(sizes), "modes": {}}
        for mode in modes:
            f = random_laurent_poly(rng, len(b), self.cfg.experiment.eq9_terms, mode)
            phi = solve_cohomological_equation(f, b, sizes)
            out["modes"][mode] = {"f": f.to_list(), "phi": phi.to_list(),
                                  "residual_zero": (euler_apply(phi, b) - f).is_zero()}
        if H1 not in modes:
            out["note"] = "H^1 mode needs factor 1 = P^1 with its defining representation"
        ok = all(m["residual_zero"] for m in out["modes"].values())
        return out, _hyp(["b weakly hyperbolic of type (r1, r2)", "f has no constant term"]), ok

    def trdeg(self):
        _require_flag(self.factors, "trdeg")
        f1, f2 = self.factors
        lattice = build_monomial_lattice(f1.parab, f2.parab, f1.std.weights, f2.std.weights, f1.rs, f2.rs)
        hom = weight_matrix(lattice, f1.std, f2.std)
        verified = ["generator weights lie in the weight systems"]
        if self.cfg.lam.mode == "generic" or self.lam_param is None:
            kernel = kernel_generic(hom)
            lam = None
            extra = {}
        else:
            lam = self._require_hyperbolic("trdeg")
            kernel = kernel_specific(hom, lam)
            extra = {"image_rank": image_rank(hom.generator_weights(lam))}
            verified.append("lambda_s weakly hyperbolic")
        if not verify_kernel(hom, kernel, lam):
            raise CbundleError("kernel basis failed exact re-evaluation")
        verified.append("kernel basis re-evaluated exactly")
        maximal = [f.parab.is_maximal(f.rs.rank) for f in self.factors]
        gens = [f.generator for f in self.factors]
        unip_zero = self.lam_param is None or all(t.coeff.is_zero() for t in self.lam_param.unipotent)
        rep = transcendence_degree(kernel, lattice.dims, maximal, gens, unip_zero)
        res = {"dims": list(lattice.dims), "monomial_rank": lattice.rank,
               "weight_matrix": [list(r) for r in hom.D],
               "kernel": kernel.as_dict(lattice.labels), **extra, **rep.as_dict()}
        return res, _hyp(verified + list(rep.trace)), True

    def simulate_orbits(self):
        self._require_hyperbolic("simulate-orbits")
        exp = self.cfg.experiment
        spec = self._flow_spec()
        hyper = spec.hyperbolicity()
        if not hyper.holds:
            raise HypothesisError("induced spectrum is not weakly hyperbolic")
        base = spec.with_nilpotent(np.zeros_like(spec.nilpotent))
        pts = self._sample_points(exp.samples, 1)
        rows = orbit_experiment(spec, pts, range(exp.samples), exp.tolerances)
        self.csv_rows = rows
        summary = summarize_rows(rows)
        frng = np.random.default_rng(np.random.SeedSequence([exp.seed, 2]))
        fpts = self._sample_points(exp.freeness_pairs, 3)
        free = check_freeness(spec, fpts, random_nonzero_z(frng, exp.freeness_pairs))
        div = divergence_check(spec, pts[0], [2 * np.pi * k / 8 for k in range(8)])
        res = {"sampling": ["cone" if f.real is not None or not f.is_flag else "ambient"
                            for f in self.factors],
               "orbits": summary, "freeness": free.as_dict(), "divergence": div.as_dict()}
        if np.any(spec.nilpotent):
            sweep = epsilon_sweep(base, self._unipotent_terms(spec),
                                  pts[: min(len(pts), 50)], exp.epsilons, exp.tolerances)
            res["epsilon_sweep"] = sweep.as_dict()
        ok = summary["success_rate"] == 1.0 and not free.suspect and div.proper
        return res, _hyp(["lambda_s weakly hyperbolic (exact)", "induced spectrum weakly hyperbolic"],
                         ["uniqueness measured by multi-start agreement, not proven"]), ok

    def _unipotent_terms(self, spec: FlowSpec):
        """Per-root nilpotent matrices with their heights, for epsilon scaling."""
        terms = []
        r1 = spec.blocks[0]
        for t in self.lam_param.unipotent:
            f = self.factors[t.block]
            m = np.zeros_like(spec.nilpotent)
            blk = complex(t.coeff) * f.real.op_X[t.root]
            if t.block == 0:
                m[:r1, :r1] = blk
            else:
                m[r1:, r1:] = blk
            terms.append((m, f.rs.height(t.root)))
        return terms

    def hilbert(self):
        _require_flag(self.factors, "hilbert")
        k = self.cfg.experiment.hilbert_kmax
        res = {"k_max": k, "factors": [hilbert_series_cone(f.rs, f.spec.omega, k) for f in self.factors]}
        return res, _hyp(["omega dominant and nonzero"]), True


_DISPATCH = {
    "check-standard": _Run.check_standard,
    "check-hyperbolic": _Run.check_hyperbolic,
    "spectrum": _Run.spectrum,
    "vanishing": _Run.vanishing,
    "picard": _Run.picard,
    "kahler": _Run.kahler,
    "solve-eq9": _Run.solve_eq9,
    "trdeg": _Run.trdeg,
    "simulate-orbits": _Run.simulate_orbits,
    "hilbert": _Run.hilbert,
}

STATUS_OK = "ok"
STATUS_HYPOTHESIS = "hypothesis-violation"
STATUS_ERROR = "error"


@dataclass
class Report:
    meta: dict
    config: dict
    results: list = field(default_factory=list)
    status: str = STATUS_OK
    csv_rows: list | None = None

    def to_dict(self, with_timestamp: bool = True) -> dict:
        meta = dict(self.meta)
        if not with_timestamp:
            meta.pop("generated_at", None)
        return {"meta": meta, "config": self.config, "status": self.status, "results": self.results}

    def to_json(self, with_timestamp: bool = True) -> str:
        return json.dumps(self.to_dict(with_timestamp), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"cbundle {self.meta['version']}  seed={self.meta['seed']}  status={self.status}"]
        for r in self.results:
            flag = {"ok": "PASS", "hypothesis-violation": "HYPOTHESIS", "error": "ERROR"}[r["status"]]
            lines.append(f"  [{flag:10}] {r['command']}: {_headline(r)}")
        return "\n".join(lines) + "\n"

    def exit_code(self) -> int:
        return {STATUS_OK: 0, STATUS_HYPOTHESIS: 2, STATUS_ERROR: 1}[self.status]


def _headline(r: dict) -> str:
    if "error" in r:
        return r["error"]
    res, cmd = r["result"], r["command"]
    if cmd == "check-standard":
        return "all d-standard" if res["all_standard"] else "not standard"
    if cmd in ("check-hyperbolic",):
        return "weakly hyperbolic" if res["report"]["holds"] else res["report"]["reason"]
    if cmd == "spectrum":
        return "induced spectrum " + ("hyperbolic" if res["induced_hyperbolicity"]["holds"] else "not hyperbolic")
    if cmd == "vanishing":
        return f"allowed q on S: {res['allowed_q_S']}"
    if cmd == "picard":
        return f"Pic0 = {res['pic0']}, Pic = {res['pic'] or 'undetermined'}"
    if cmd == "kahler":
        return res["verdict"] or "no verdict"
    if cmd == "solve-eq9":
        return "zero residual in modes " + ", ".join(res["modes"])
    if cmd == "trdeg":
        return f"tr.deg = {res['trdeg']} (bound {res['bound_dim_L_minus_2']})"
    if cmd == "simulate-orbits":
        o = res["orbits"]
        return f"{o['samples']} samples, success {100 * o['success_rate']:.1f}%"
    if cmd == "hilbert":
        return f"dims {res['factors']}"
    return ""


def ordered_commands(commands) -> list[str]:
    wanted = set(commands)
    return [c for c in COMMANDS if c in wanted]


def run(cfg: RunConfig) -> Report:
    """Execute the configured commands in canonical order; stop at the first failure."""
    meta = {"tool": "cbundle", "version": __version__, "seed": cfg.experiment.seed,
            "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds")}
    report = Report(meta, cfg.to_dict())
    try:
        state = _Run(cfg)
    except CbundleError as exc:
        report.status = STATUS_ERROR
        report.results.append({"command": "setup", "status": STATUS_ERROR, "error": str(exc)})
        return report
    for cmd in ordered_commands(cfg.commands):
        try:
            res, hyp, ok = _DISPATCH[cmd](state)
        except HypothesisError as exc:
            report.results.append({"command": cmd, "status": STATUS_HYPOTHESIS, "error": str(exc)})
            report.status = STATUS_HYPOTHESIS
            break
        except CbundleError as exc:
            report.results.append({"command": cmd, "status": STATUS_ERROR,
                                   "error": f"{type(exc).__name__}: {exc}"})
            report.status = STATUS_ERROR
            break
        entry = {"command": cmd, "status": STATUS_OK if ok else STATUS_HYPOTHESIS,
                 "hypotheses": hyp, "result": res}
        report.results.append(entry)
        if not ok and report.status == STATUS_OK:
            report.status = STATUS_HYPOTHESIS
    report.csv_rows = state.csv_rows
    return report


def report_csv(report: Report) -> str | None:
    return None if report.csv_rows is None else rows_to_csv(report.csv_rows)
