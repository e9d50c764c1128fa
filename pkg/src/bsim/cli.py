"""Command-line experiment runner.

Every protocol is exposed as a named experiment with explicit numeric
parameters and a 64-bit seed.  Results split into an ``exact`` section
(seed-independent quantities: probability tables, matrices, fidelities) and a
``sampled`` section (seeded trial statistics); re-running the same experiment,
parameters, and seed reproduces the JSON byte for byte apart from the runtime
field.

    bsim run <experiment> [--theta X] [--phi X] [--r X] [--s X]
                          [--alpha re,im] [--beta re,im] [--trials N]
                          [--seed N] [--cutoff N] [--config PATH]
                          [--out PATH] [--format json|table]

A flat ``key = value`` config file can preset any flag; explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Mapping

import numpy as np

from . import dv, gaussian, measurement
from .fock import BsParams, FockState, Mode, apply_beamsplitter, coherent_state

DEFAULT_THETA = math.pi / 4
DEFAULT_PHI = math.pi / 2
DEFAULT_SEED = 42
DEFAULT_CUTOFF = 6


class ValidationError(ValueError):
    pass


# --------------------------------------------------------------------------
# serialization
# --------------------------------------------------------------------------


def _jsonable(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, Mapping) or isinstance(value, dict):
        return {_key(k): _jsonable(v) for k, v in value.items()}
    return value


def _key(key: Any) -> str:
    if isinstance(key, Enum):
        return str(key.value)
    if isinstance(key, tuple):
        return ",".join(str(k) for k in key)
    return str(key)


def _amplitudes(state: FockState) -> dict[str, list[float]]:
    return {_key(occ): [amp.real, amp.imag] for occ, amp in sorted(state.terms.items())}


def emit(result: dict[str, Any], fmt: str) -> str:
    """Render an experiment result as JSON (lossless) or a table (lossy)."""
    if fmt == "json":
        return json.dumps(result, sort_keys=True, indent=2)
    lines = []
    lines.append(f"experiment : {result['experiment']}")
    lines.append(f"seed       : {result['seed']}")
    params = " ".join(f"{k}={v}" for k, v in result["params"].items())
    lines.append(f"params     : {params or '(none)'}")
    for section in ("exact", "sampled"):
        body = result.get(section) or {}
        lines.append(f"{section}:")
        if not body:
            lines.append("  (empty)")
            continue
        for k in sorted(body):
            lines.append(f"  {k} = {_table_cell(body[k])}")
    lines.append(f"runtime_ms : {result['runtime_ms']:.3f}")
    return "\n".join(lines)


def _table_cell(value: Any) -> str:
    if isinstance(value, dict):
        return " ".join(f"{k}:{_table_cell(v)}" for k, v in sorted(value.items()))
    if isinstance(value, list):
        return "[" + ", ".join(_table_cell(v) for v in value) + "]"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


# --------------------------------------------------------------------------
# experiment implementations: each returns (exact, sampled)
# --------------------------------------------------------------------------


def _per_trial_seeds(seed: int, trials: int) -> range:
    return range(seed, seed + trials)


def _run_hom(p: dict, seed: int, cutoff: int):
    st = FockState((Mode(0), Mode(1)), {(1, 1): 1.0}, cutoff)
    st = apply_beamsplitter(st, Mode(0), Mode(1), BsParams(p["theta"], p["phi"]))
    dist = measurement.photon_distribution(st, st.modes)
    exact = {
        "coincidence_probability": dist.get((1, 1), 0.0),
        "distribution": dist,
    }
    sampled = {}
    if p.get("trials"):
        counts: dict[tuple, int] = {}
        for s in _per_trial_seeds(seed, p["trials"]):
            k = measurement.sample_counts(st, st.modes, s)
            counts[k] = counts.get(k, 0) + 1
        sampled = {
            "counts": counts,
            "coincidence_rate": counts.get((1, 1), 0) / p["trials"],
        }
    return exact, sampled


def _run_bell_measure(p: dict, seed: int, cutoff: int):
    confusion = {}
    signatures = {}
    for kind in dv.BellKind:
        dist, class_probs = dv.bell_analysis(dv.bell_state(kind, cutoff=cutoff))
        confusion[kind.value] = {c.value: prob for c, prob in class_probs.items()}
        signatures[kind.value] = dist
    exact = {
        "detector_order": list(dv.DETECTORS),
        "confusion_matrix": confusion,
        "signature_probs": signatures,
    }
    sampled = {}
    if p.get("trials"):
        tallies = {}
        base = seed
        for kind in dv.BellKind:
            tally: dict[str, int] = {}
            st = dv.bell_state(kind, cutoff=cutoff)
            for s in _per_trial_seeds(base, p["trials"]):
                cls = dv.bell_measure(st, seed=s).outcome.classification
                tally[cls.value] = tally.get(cls.value, 0) + 1
            tallies[kind.value] = tally
            base += p["trials"]
        sampled = {"classification_counts": tallies}
    return exact, sampled


def _run_teleport_dv(p: dict, seed: int, cutoff: int):
    alpha, beta = p["alpha"], p["beta"]
    branches = dv.teleport_branches(alpha, beta, cutoff)
    success_probability = sum(
        b.probability for b in branches if b.classification is not dv.BellClass.AMBIGUOUS
    )
    exact = {
        "success_probability": success_probability,
        "branch_fidelities": {
            ",".join(map(str, b.signature)): b.fidelity
            for b in branches
            if b.classification is not dv.BellClass.AMBIGUOUS
        },
    }
    sampled = {}
    if p.get("trials"):
        successes = 0
        fid_sum = 0.0
        for s in _per_trial_seeds(seed, p["trials"]):
            res = dv.teleport_dv(alpha, beta, seed=s, cutoff=cutoff)
            if res.success:
                successes += 1
                fid_sum += res.fidelity
        sampled = {
            "success_rate": successes / p["trials"],
            "mean_success_fidelity": (fid_sum / successes) if successes else None,
        }
    return exact, sampled


def _run_qkd_dv(p: dict, seed: int, cutoff: int):
    branches = dv.qkd_branches(cutoff)
    sift = sum(prob for rec, prob in branches if rec.kept)
    agree = sum(prob for rec, prob in branches if rec.kept and rec.alice_bit == rec.bob_bit)
    exact = {
        "sift_probability": sift,
        "kept_bit_agreement": agree / sift if sift else None,
        "qber": 1.0 - agree / sift if sift else None,
    }
    sampled = {}
    if p.get("trials"):
        alice_bits = []
        bob_bits = []
        kept = 0
        for s in _per_trial_seeds(seed, p["trials"]):
            rec = dv.qkd_round(s, cutoff)
            if rec.kept:
                kept += 1
                alice_bits.append(str(rec.alice_bit))
                bob_bits.append(str(rec.bob_bit))
        errors = sum(a != b for a, b in zip(alice_bits, bob_bits))
        sampled = {
            "sift_rate": kept / p["trials"],
            "qber": errors / kept if kept else None,
            "alice_key": "".join(alice_bits),
            "bob_key": "".join(bob_bits),
        }
    return exact, sampled


def _run_mdi_qkd(p: dict, seed: int, cutoff: int):
    table = {f"{basis}/{cls.value}": rel for (basis, cls), rel in dv.MDI_BIT_RELATION.items()}
    kept_prob = {}
    for basis in (dv.RECTILINEAR, dv.DIAGONAL):
        for label, bits in (("parallel", (0, 0)), ("anti", (0, 1))):
            st = dv.tensor(
                dv.polarization_qubit(0, basis, bits[0], cutoff),
                dv.polarization_qubit(1, basis, bits[1], cutoff),
            )
            _, class_probs = dv.bell_analysis(st)
            kept_prob[f"{basis}/{label}"] = (
                class_probs[dv.BellClass.PHI_MINUS] + class_probs[dv.BellClass.PHI_PLUS]
            )
    exact = {"bit_relation_table": table, "kept_probability_by_preparation": kept_prob}
    sampled = {}
    if p.get("trials"):
        rng = np.random.default_rng(seed)
        kept = 0
        agreements = 0
        for i in range(p["trials"]):
            basis_a = dv.RECTILINEAR if rng.integers(0, 2) == 0 else dv.DIAGONAL
            basis_b = dv.RECTILINEAR if rng.integers(0, 2) == 0 else dv.DIAGONAL
            bits = rng.integers(0, 2, size=2)
            rec = dv.mdi_qkd_round(
                (basis_a, int(bits[0])), (basis_b, int(bits[1])), seed=seed + 1 + i, cutoff=cutoff
            )
            if rec.kept:
                kept += 1
                agreements += rec.alice_bit == rec.bob_bit
        sampled = {
            "sift_rate": kept / p["trials"],
            "kept_agreement_rate": agreements / kept if kept else None,
        }
    return exact, sampled


def _run_photon_subtract(p: dict, seed: int, cutoff: int):
    s = 1.0 / math.sqrt(2.0)
    psi = FockState((Mode(0),), {(1,): s, (2,): s}, cutoff)
    cond, prob = dv.photon_subtract(psi, p["theta"])
    target = dv.subtracted_reference(psi)
    exact = {
        "input_amplitudes": _amplitudes(psi),
        "herald_probability": prob,
        "conditional_amplitudes": _amplitudes(cond),
        "infidelity_vs_annihilation": 1.0 - dv.fidelity(cond, target),
    }
    return exact, {}


def _run_hadamard(p: dict, seed: int, cutoff: int):
    cols = []
    for amp in ((1.0, 0.0), (0.0, 1.0)):
        q = dv.dual_rail(amp[0], amp[1], cutoff=cutoff)
        cols.append(dv.hadamard_dualrail(q).amplitudes())
    matrix = np.array(cols).T
    target = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)
    exact = {
        "matrix": matrix,
        "max_deviation_from_hadamard": float(np.max(np.abs(matrix - target))),
    }
    return exact, {}


def _cnot_matrix(cutoff: int) -> np.ndarray:
    basis = [(0, 0), (0, 1), (1, 0), (1, 1)]
    cols = []
    for c_bit, t_bit in basis:
        control = dv.dual_rail(1 - c_bit, c_bit, arms=(0, 1), cutoff=cutoff)
        target = dv.dual_rail(1 - t_bit, t_bit, arms=(2, 3), cutoff=cutoff)
        out = dv.cnot_dualrail(control, target)
        col = []
        for cb, tb in basis:
            occ = (1 - cb, cb, 1 - tb, tb)
            col.append(out.amplitude(occ))
        cols.append(col)
    return np.array(cols).T


def _run_cnot(p: dict, seed: int, cutoff: int):
    matrix = _cnot_matrix(cutoff)
    target = np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    )
    flat = matrix.flatten()
    phase = flat[np.argmax(np.abs(flat))]
    phase /= abs(phase)
    exact = {
        "matrix": matrix,
        "max_deviation_from_cnot_up_to_phase": float(np.max(np.abs(matrix / phase - target))),
        "global_phase": complex(phase),
    }
    return exact, {}


def _run_mzi(p: dict, seed: int, cutoff: int):
    st = dv.mzi(p["theta"], cutoff)
    exact = {
        "amplitudes": _amplitudes(st),
        "probabilities": measurement.photon_distribution(st, st.modes),
    }
    return exact, {}


def _run_rng(p: dict, seed: int, cutoff: int):
    exact = {"distribution": {"0": 0.5, "1": 0.5}}
    sampled = {}
    if p.get("trials"):
        bits = [dv.rng_bit(s) for s in _per_trial_seeds(seed, p["trials"])]
        ones = sum(bits)
        sampled = {
            "bits": "".join(map(str, bits[:256])),
            "frequency_of_one": ones / p["trials"],
        }
    return exact, sampled


def _run_g2(p: dict, seed: int, cutoff: int):
    st = coherent_state(p["alpha"], cutoff)
    exact = {
        "g2": measurement.g2_zero(st),
        "mean_photon_number": measurement.expect_number(st, st.modes[0]),
    }
    return exact, {}


def _run_homodyne(p: dict, seed: int, cutoff: int):
    st = coherent_state(p["alpha"], cutoff)
    exact = {
        "mean_current": measurement.homodyne_mean(st, p["phi"]),
        "mean_current_x_readout": measurement.homodyne_mean(st, -math.pi / 2),
        "mean_current_y_readout": measurement.homodyne_mean(st, 0.0),
    }
    return exact, {}


def _run_teleport_cv(p: dict, seed: int, cutoff: int):
    r = p["r"]
    sigma_in = 0.5 * np.eye(2)
    sigma_out = gaussian.cv_teleport_cov(sigma_in, gaussian.tmsv(r))
    exact = {
        "sigma_out": sigma_out,
        "added_noise": sigma_out - sigma_in,
        "expected_added_noise": math.exp(-2 * r),
    }
    sampled = {}
    if p.get("trials"):
        stats = gaussian.cv_teleport_mc(0.5, -0.3, r, trials=p["trials"], seed=seed)
        sampled = {
            "mean_x": stats.mean_x,
            "mean_p": stats.mean_p,
            "var_x": stats.var_x,
            "var_p": stats.var_p,
        }
    return exact, sampled


def _run_qkd_cv(p: dict, seed: int, cutoff: int):
    r, s = p["r"], p["s"]
    channel = gaussian.squeeze_channel(gaussian.tmsv(r), s)
    cond_x = gaussian.homodyne_condition(channel, 0, gaussian.Quadrature.X)
    cond_p = gaussian.homodyne_condition(channel, 0, gaussian.Quadrature.P)
    a_blk, b_blk, c_blk = channel.cov[:2, :2], channel.cov[2:, 2:], channel.cov[:2, 2:]
    exact = {
        "conditional_cov_after_x": cond_x.cov,
        "conditional_cov_after_p": cond_p.cov,
        "x_pair_correlation": float(c_blk[0, 0] / math.sqrt(a_blk[0, 0] * b_blk[0, 0])),
        "p_pair_correlation": float(c_blk[1, 1] / math.sqrt(a_blk[1, 1] * b_blk[1, 1])),
    }
    sampled = {}
    if p.get("trials"):
        kept_x, kept_p = [], []
        kept = 0
        for sd in _per_trial_seeds(seed, p["trials"]):
            rec = gaussian.cv_qkd_round(r, s, seed=sd)
            if rec.kept:
                kept += 1
                if rec.alice_quad is gaussian.Quadrature.X:
                    kept_x.append((rec.alice_value, rec.bob_value))
                else:
                    kept_p.append((rec.alice_value, rec.bob_value))
        sampled = {
            "kept_fraction": kept / p["trials"],
            "empirical_x_correlation": _corr(kept_x),
            "empirical_p_correlation": _corr(kept_p),
        }
    return exact, sampled


def _corr(pairs: list[tuple[float, float]]) -> float | None:
    if len(pairs) < 2:
        return None
    arr = np.array(pairs)
    return float(np.corrcoef(arr[:, 0], arr[:, 1])[0, 1])


def _run_physicality(p: dict, seed: int, cutoff: int):
    r, s = p["r"], p["s"]
    cases = {
        "vacuum": gaussian.vacuum_state(1).cov,
        "tmsv": gaussian.tmsv(r).cov,
        "squeezed_channel": gaussian.squeeze_channel(gaussian.tmsv(r), s).cov,
        "scaled_vacuum_0.1": 0.1 * np.eye(2),
    }
    exact = {}
    for name, cov in cases.items():
        ok, min_eig = gaussian.is_physical(cov)
        exact[name] = {"physical": bool(ok), "min_eigenvalue": min_eig}
    return exact, {}


# --------------------------------------------------------------------------
# registry, validation, dispatch
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Experiment:
    run: Callable[[dict, int, int], tuple[dict, dict]]
    allowed: frozenset[str]
    defaults: Mapping[str, Any]


EXPERIMENTS: dict[str, Experiment] = {
    "hom": Experiment(_run_hom, frozenset({"theta", "phi", "trials"}),
                      {"theta": DEFAULT_THETA, "phi": DEFAULT_PHI}),
    "bell-measure": Experiment(_run_bell_measure, frozenset({"trials"}), {}),
    "teleport-dv": Experiment(_run_teleport_dv, frozenset({"alpha", "beta", "trials"}),
                              {"alpha": 1.0 + 0j, "beta": 0j}),
    "qkd-dv": Experiment(_run_qkd_dv, frozenset({"trials"}), {}),
    "mdi-qkd": Experiment(_run_mdi_qkd, frozenset({"trials"}), {}),
    "photon-subtract": Experiment(_run_photon_subtract, frozenset({"theta"}),
                                  {"theta": 0.1}),
    "hadamard": Experiment(_run_hadamard, frozenset(), {}),
    "cnot": Experiment(_run_cnot, frozenset(), {}),
    "mzi": Experiment(_run_mzi, frozenset({"theta"}), {"theta": DEFAULT_THETA}),
    "rng": Experiment(_run_rng, frozenset({"trials"}), {"trials": 1000}),
    "g2": Experiment(_run_g2, frozenset({"alpha"}), {"alpha": 1.0 + 0j}),
    "homodyne": Experiment(_run_homodyne, frozenset({"alpha", "phi"}),
                           {"alpha": 1.0 + 0j, "phi": -math.pi / 2}),
    "teleport-cv": Experiment(_run_teleport_cv, frozenset({"r", "trials"}), {"r": 1.0}),
    "qkd-cv": Experiment(_run_qkd_cv, frozenset({"r", "s", "trials"}),
                         {"r": 1.0, "s": 0.0}),
    "physicality": Experiment(_run_physicality, frozenset({"r", "s"}),
                              {"r": 1.0, "s": 0.0}),
}

_PARAM_PARSERS: dict[str, Callable[[str], Any]] = {
    "theta": float,
    "phi": float,
    "r": float,
    "s": float,
    "alpha": lambda s: _parse_complex(s, "alpha"),
    "beta": lambda s: _parse_complex(s, "beta"),
    "trials": int,
    "seed": int,
    "cutoff": int,
}
_CONFIG_KEYS = set(_PARAM_PARSERS) | {"format", "out"}


def _parse_complex(text: str, name: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ValidationError(f"{name} must be 're' or 're,im', got {text!r}")


def _read_config(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for line_no, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValidationError(f"{path}:{line_no}: expected 'key = value'")
                key, value = (part.strip() for part in line.split("=", 1))
                if key not in _CONFIG_KEYS:
                    raise ValidationError(f"{path}:{line_no}: unknown key {key!r}")
                out[key] = value
    except OSError as exc:
        raise ValidationError(f"cannot read config file: {exc}") from exc
    return out


def _validate(name: str, params: dict[str, Any], trials_given: bool) -> None:
    exp = EXPERIMENTS[name]
    if "trials" in params and params["trials"] is not None and params["trials"] < 1:
        raise ValidationError("trials must be a positive integer")
    if "cutoff" in params and params["cutoff"] < 1:
        raise ValidationError("cutoff must be a positive integer")
    if name == "photon-subtract" and not 0.0 < params.get("theta", 0.1) < math.pi / 2:
        raise ValidationError("photon-subtract needs 0 < theta < pi/2")
    if name == "mzi" and not 0.0 <= params.get("theta", 0.0) <= math.pi / 2:
        raise ValidationError("mzi needs 0 <= theta <= pi/2")
    if name in ("teleport-cv", "qkd-cv", "physicality") and params.get("r", 0.0) < 0.0:
        raise ValidationError("r must be non-negative")
    if name == "teleport-dv":
        norm = abs(params["alpha"]) ** 2 + abs(params["beta"]) ** 2
        if abs(norm - 1.0) > 1e-6:
            raise ValidationError("alpha, beta must satisfy |alpha|^2 + |beta|^2 = 1")
        scale = math.sqrt(norm)
        params["alpha"] /= scale
        params["beta"] /= scale
    if name == "g2":
        if abs(params["alpha"]) == 0.0:
            raise ValidationError("g2 of the vacuum is undefined; need |alpha| > 0")


def run_experiment(name: str, params: dict[str, Any], seed: int, cutoff: int) -> dict[str, Any]:
    exp = EXPERIMENTS[name]
    start = time.perf_counter()
    exact, sampled = exp.run(params, seed, cutoff)
    runtime_ms = (time.perf_counter() - start) * 1000.0
    echo = dict(params)
    echo["cutoff"] = cutoff
    return {
        "experiment": name,
        "params": _jsonable(echo),
        "seed": seed,
        "exact": _jsonable(exact),
        "sampled": _jsonable(sampled),
        "runtime_ms": runtime_ms,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bsim", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run a named experiment")
    run.add_argument("experiment", choices=sorted(EXPERIMENTS))
    for flag in ("theta", "phi", "r", "s"):
        run.add_argument(f"--{flag}", type=str, default=None)
    run.add_argument("--alpha", type=str, default=None, metavar="RE,IM")
    run.add_argument("--beta", type=str, default=None, metavar="RE,IM")
    run.add_argument("--trials", type=str, default=None)
    run.add_argument("--seed", type=str, default=None)
    run.add_argument("--cutoff", type=str, default=None)
    run.add_argument("--config", type=str, default=None, help="flat key = value preset file")
    run.add_argument("--out", type=str, default=None, help="write the JSON result to this path")
    run.add_argument("--format", choices=("json", "table"), default=None)
    return parser


def _assemble(args: argparse.Namespace) -> tuple[str, dict[str, Any], int, int, str, str | None]:
    name = args.experiment
    exp = EXPERIMENTS[name]

    raw: dict[str, str] = {}
    if args.config:
        raw.update(_read_config(args.config))
    for flag in _PARAM_PARSERS:
        value = getattr(args, flag, None)
        if value is not None:
            raw[flag] = value
    fmt = args.format or raw.pop("format", None) or "table"
    if fmt not in ("json", "table"):
        raise ValidationError(f"format must be json or table, got {fmt!r}")
    out = args.out or raw.pop("out", None)

    parsed: dict[str, Any] = {}
    for key, text in raw.items():
        try:
            parsed[key] = _PARAM_PARSERS[key](str(text))
        except ValidationError:
            raise
        except (TypeError, ValueError):
            raise ValidationError(f"cannot parse parameter {key}={text!r}") from None

    seed = parsed.pop("seed", DEFAULT_SEED)
    cutoff = parsed.pop("cutoff", DEFAULT_CUTOFF)

    unknown = set(parsed) - exp.allowed
    if unknown:
        raise ValidationError(
            f"experiment {name!r} does not accept parameter(s): {', '.join(sorted(unknown))}"
        )
    params = dict(exp.defaults)
    params.update(parsed)
    trials_given = "trials" in parsed
    _validate(name, params, trials_given)
    return name, params, seed, cutoff, fmt, out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        name, params, seed, cutoff, fmt, out = _assemble(args)
    except ValidationError as exc:
        print(json.dumps({"error": {"code": "validation", "message": str(exc)}}), file=sys.stderr)
        return 2
    try:
        result = run_experiment(name, params, seed, cutoff)
    except ValidationError as exc:
        print(json.dumps({"error": {"code": "validation", "message": str(exc)}}), file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - internal failure path
        print(json.dumps({"error": {"code": "internal", "message": str(exc)}}), file=sys.stderr)
        return 1
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(result, sort_keys=True, indent=2) + "\n")
        if fmt == "table":
            print(emit(result, "table"))
    else:
        print(emit(result, fmt))
    return 0


if __name__ == "__main__":
    sys.exit(main())
