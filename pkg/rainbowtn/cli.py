"""
Command-line front end.

    rainbowtn verify --model motzkin --n 3 --colors 2 --t 3/2
    rainbowtn entropy --colors 2 --t-grid 0.25,0.5,1,2,4,10 --n 6 --cut half

Exit status: 0 on success, 1 on invalid input or a failed verification,
2 when a resource cap is hit.
"""

import argparse
import json
import logging
import platform
import sys
from typing import Any, Callable, Dict, List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from .core import constants
from .core.config import RuntimeLimits, get_limits, set_limits
from .core.exceptions import (
    InvalidParameterError,
    ModelMismatchError,
    RainbowError,
    ResourceCapError,
)
from .core.hamiltonian import build_hamiltonian, export_coordinates
from .core.network import contract, contract_to_mps, walk_to_tiling
from .core.observables import (
    correlation_records,
    entropy_sweep,
    sweep_grid,
    truncated_state,
    truncation_fidelity,
    write_sweep_csv,
)
from .core.rendering import render
from .core.schemas import ArithmeticMode, ChainModel, JobConfig
from .core.states import GroundState, build_ground_state, norm_sq
from .core.utils import atomic_write, format_number
from .core.walks import count_walks, enumerate_walks, format_walk, parse_walk

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CAP = 2


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; that status means a cap here."""

    def error(self, message):
        raise InvalidParameterError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="rainbowtn",
        description="Exact rainbow tensor networks for colored Motzkin and Fredkin chains.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="DEBUG logging")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    common = _ArgumentParser(add_help=False)
    common.add_argument("--model", default="motzkin", help="motzkin or fredkin")
    common.add_argument("--n", type=int, default=2, help="half chain length")
    common.add_argument("--colors", type=int, default=1, help="number of colors j")
    common.add_argument("--t", default=None, help='deformation, "p/q" (exact) or decimal')
    common.add_argument("--mode", default=None, help="exact or float (inferred from --t)")
    common.add_argument("--out", default=None, help="output path (stdout if omitted)")
    common.add_argument("--cap-dim", type=int, default=None, help="max dense dimension")
    common.add_argument("--cap-walks", type=int, default=None, help="max enumerated walks")
    common.add_argument(
        "--provenance", action="store_true", help="add a provenance block to JSON output"
    )

    walks = subparsers.add_parser("walks", parents=[common], help="count or list walks")
    walks.add_argument("--count", action="store_true", help="print the number of walks")
    subparsers.add_parser("state", parents=[common], help="ground state by enumeration")
    subparsers.add_parser("contract", parents=[common], help="ground state by contraction")
    subparsers.add_parser(
        "verify", parents=[common], help="contraction equals enumeration"
    )
    subparsers.add_parser(
        "hamiltonian", parents=[common], help="export H in coordinate format"
    )
    entropy = subparsers.add_parser("entropy", parents=[common], help="entropy sweep as CSV")
    entropy.add_argument("--t-grid", default=None, help="comma-separated t values")
    entropy.add_argument("--cut", default="half", help="half or all")
    entropy.add_argument("--bits", action="store_true", help="report entropy in bits")
    subparsers.add_parser("correlate", parents=[common], help="color correlations as JSON")
    truncate = subparsers.add_parser(
        "truncate", parents=[common], help="truncated approximant and its fidelity"
    )
    truncate.add_argument("--window", default="small_t", help="small_t or large_t")
    render_parser = subparsers.add_parser("render", parents=[common], help="SVG figures")
    render_parser.add_argument("--target", default="walk", help="walk, arcs or tiling")
    render_parser.add_argument("--walk", default=None, help='walk text, e.g. "U1 F F D1"')
    render_parser.add_argument(
        "--snapshot", default=None, help="also write the tiling snapshot JSON here"
    )
    return parser


def job_config(args: argparse.Namespace) -> JobConfig:
    return JobConfig(
        subcommand=args.subcommand,
        model=args.model,
        n=args.n,
        j=args.colors,
        t=args.t,
        t_grid=getattr(args, "t_grid", None),
        cut=getattr(args, "cut", "half"),
        mode=args.mode,
        window=getattr(args, "window", "small_t"),
        target=getattr(args, "target", "walk"),
        walk=getattr(args, "walk", None),
        out=args.out,
        snapshot=getattr(args, "snapshot", None),
        max_dimension=args.cap_dim,
        max_walks=args.cap_walks,
        count=getattr(args, "count", False),
        bits=getattr(args, "bits", False),
        provenance=args.provenance,
    )


def _emit(config: JobConfig, text: str) -> None:
    if config.out:
        atomic_write(config.out, text)
        logging.info(f"Wrote {config.out}")
    else:
        sys.stdout.write(text)


def _json_text(config: JobConfig, payload: Dict[str, Any], argv: List[str]) -> str:
    document = {"schema": constants.JSON_SCHEMA_VERSION}
    document.update(payload)
    if config.provenance:
        from . import __version__

        document["provenance"] = {
            "version": __version__,
            "python": platform.python_version(),
            "argv": list(argv),
        }
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def _chain_header(config: JobConfig, mode: Optional[ArithmeticMode] = None) -> Dict[str, Any]:
    header = {
        "model": config.model.value,
        "n": config.n,
        "colors": config.j,
        "t": format_number(config.t) if config.t is not None else None,
    }
    if mode is not None:
        header["mode"] = mode.value
    return header


def _amplitude_text(state: GroundState, walk) -> str:
    if state.is_exact:
        return str(state.amplitude(walk))
    return format_number(state.value(walk))


def _state_payload(config: JobConfig, state: GroundState) -> Dict[str, Any]:
    payload = _chain_header(config, state.params.mode)
    if state.is_exact:
        payload["norm_sq"] = format_number(state.norm_sq())
    else:
        payload["log_norm_sq"] = format_number(state.log_norm_sq())
    payload["amplitudes"] = [
        {"walk": format_walk(w), "amplitude": _amplitude_text(state, w)}
        for w in state.walks()
    ]
    return payload


def _run_walks(config: JobConfig, argv: List[str]) -> int:
    if config.count:
        _emit(config, f"{count_walks(config.n, config.j, config.model)}\n")
        return EXIT_OK
    lines = [format_walk(w) for w in enumerate_walks(config.n, config.j, config.model)]
    _emit(config, "".join(f"{line}\n" for line in lines))
    return EXIT_OK


def _run_state(config: JobConfig, argv: List[str]) -> int:
    state = build_ground_state(config.n, config.j, config.model, config.t, mode=config.mode)
    _emit(config, _json_text(config, _state_payload(config, state), argv))
    return EXIT_OK


def _run_contract(config: JobConfig, argv: List[str]) -> int:
    state = contract(config.n, config.j, config.model, config.t, mode=config.mode)
    payload = _state_payload(config, state)
    mps = contract_to_mps(config.n, config.j, config.model, config.t, mode=config.mode)
    payload["bond_dimensions"] = mps.bond_dimensions
    _emit(config, _json_text(config, payload, argv))
    return EXIT_OK


def _verification_failures(enumerated: GroundState, contracted: GroundState) -> List[str]:
    failures = []
    if {w.steps for w in enumerated.amplitudes} != {w.steps for w in contracted.amplitudes}:
        failures.append(
            f"supports differ: {len(enumerated)} enumerated, {len(contracted)} contracted"
        )
    elif enumerated.is_exact:
        if not enumerated.same_amplitudes(contracted):
            failures.append("amplitudes differ")
        if enumerated.t is not None:
            p = enumerated.params
            if norm_sq(p.n, p.j, p.model, p.t, p.mode) != enumerated.norm_sq():
                failures.append("transfer norm differs from the enumerated norm")
    else:
        a, b = enumerated.normalize(), contracted.normalize()
        worst = max((abs(a.value(w) - b.value(w)) for w in a.walks()), default=0.0)
        if worst > constants.NORMALIZATION_TOLERANCE:
            failures.append(f"normalized amplitudes differ by up to {worst:.3e}")
    return failures


def _run_verify(config: JobConfig, argv: List[str]) -> int:
    enumerated = build_ground_state(
        config.n, config.j, config.model, config.t, mode=config.mode
    )
    contracted = contract(config.n, config.j, config.model, config.t, mode=config.mode)
    failures = _verification_failures(enumerated, contracted)
    if failures:
        for failure in failures:
            logging.error(f"verify: {failure}")
        _emit(config, "FAIL\n")
        return EXIT_INVALID
    _emit(config, "PASS\n")
    return EXIT_OK


def _run_hamiltonian(config: JobConfig, argv: List[str]) -> int:
    if config.model != ChainModel.motzkin:
        raise ModelMismatchError("the Hamiltonian is defined for the Motzkin chain only")
    if config.t is None:
        raise InvalidParameterError("hamiltonian needs --t")
    h = build_hamiltonian(config.n, config.j, config.t)
    _emit(config, export_coordinates(h))
    return EXIT_OK


def _run_entropy(config: JobConfig, argv: List[str]) -> int:
    mode = config.mode or ArithmeticMode.float
    points = sweep_grid([config.model], [config.n], [config.j], config.t_values(), mode)
    rows = entropy_sweep(points, config.cut, bits=config.bits)
    _emit(config, write_sweep_csv(rows))
    return EXIT_OK


def _run_correlate(config: JobConfig, argv: List[str]) -> int:
    records = correlation_records(config.n, config.j, config.model, config.t, config.mode)
    payload = _chain_header(config)
    payload["records"] = [
        {
            "x1": r.x1,
            "x2": r.x2,
            "value": format_number(r.value),
            "matched_probability": format_number(r.matched_probability),
            "area_deficit": None if r.area_deficit is None else int(r.area_deficit),
        }
        for r in records
    ]
    _emit(config, _json_text(config, payload, argv))
    return EXIT_OK


def _run_truncate(config: JobConfig, argv: List[str]) -> int:
    state = truncated_state(
        config.n, config.j, config.model, config.t, config.window, mode=config.mode
    )
    fidelity = truncation_fidelity(config.n, config.j, config.t, config.window, mode=config.mode)
    payload = _chain_header(config, state.params.mode)
    payload["window"] = config.window.value
    payload["fidelity"] = format_number(fidelity)
    payload["walks"] = [format_walk(w) for w in state.walks()]
    _emit(config, _json_text(config, payload, argv))
    return EXIT_OK


def _run_render(config: JobConfig, argv: List[str]) -> int:
    if not config.walk:
        raise InvalidParameterError("render needs --walk")
    walk = parse_walk(config.walk, config.model, config.j)
    if config.target == "tiling":
        tiling = walk_to_tiling(walk)
        if config.snapshot:
            atomic_write(
                config.snapshot,
                json.dumps(tiling.snapshot(), indent=2, ensure_ascii=False) + "\n",
            )
        _emit(config, render("tiling", tiling))
    else:
        _emit(config, render(config.target, walk))
    return EXIT_OK


_HANDLERS: Dict[str, Callable[[JobConfig, List[str]], int]] = {
    "walks": _run_walks,
    "state": _run_state,
    "contract": _run_contract,
    "verify": _run_verify,
    "hamiltonian": _run_hamiltonian,
    "entropy": _run_entropy,
    "correlate": _run_correlate,
    "truncate": _run_truncate,
    "render": _run_render,
}


def run(argv: List[str]) -> int:
    """Parse, validate and dispatch one job; returns the exit status."""
    previous = get_limits()
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(
            level=logging.DEBUG if args.verbose else logging.WARNING,
            format="%(levelname)s %(name)s: %(message)s",
        )
        config = job_config(args)
        limits = RuntimeLimits.from_env()
        overrides = {
            name: value
            for name, value in (
                ("max_dimension", config.max_dimension),
                ("max_walks", config.max_walks),
            )
            if value is not None
        }
        if overrides:
            limits = limits.model_copy(update=overrides)
        set_limits(limits)
        return _HANDLERS[config.subcommand](config, argv)
    except ResourceCapError as e:
        logging.error(f"Resource cap exceeded: {str(e)}")
        return EXIT_CAP
    except (ValidationError, RainbowError, ValueError, OSError) as e:
        logging.error(f"Invalid job: {str(e)}")
        return EXIT_INVALID
    finally:
        set_limits(previous)


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    return run(sys.argv[1:] if argv is None else list(argv))


if __name__ == "__main__":
    sys.exit(main())
