"""Command-line entry point.

Every subcommand writes one JSON document (schema 1, sorted keys, the seed echoed) to stdout or ``--out``; log records
go to stderr. Exit codes: 0 success, 2 verification failure, 3 invalid input or undefined computation, 4 numeric
failure.
"""
__all__ = ("RunConfig", "build_parser", "cmd_invariants", "cmd_sing_verify", "cmd_eckardt", "cmd_moduli",
           "cmd_lines", "main")
import argparse
import logging
import sys
import typing
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from . import __version__
from .arith.rat import Rat, format_rat
from .exceptions import (
    ComputationException, DegenerateFormException, InputParseException, InvalidConfigException,
    InvalidInputException, NumericException, OutputWriteException, TrackingFailureException, VerificationFailure
)
from .invariants import (
    READING_NOTES, Q_POINT, base_locus_forward, i100, inverse_map, maps_to_q, salmon_invariants, salmon_values,
    sigma_values, sigma_vector, weighted_equal
)
from .lines import TrackerConfig, cross_validate, eckardt_numeric, track_all
from .models import CubicForm3, EckardtMode, ModuliDirection, ModuliPoint, SylvesterPoint
from .pentahedron import classify_family, surface_report, to_cubic_p3
from .singular import verification_certificate
from .utils import dump_document, read_input

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILURE = 2
EXIT_INVALID_INPUT = 3
EXIT_NUMERIC_FAILURE = 4

Document = Dict[str, Any]


class RunConfig:
    """One command-line run, as parsed.

    Attributes:
        subcommand (:class:`str`): ``invariants``, ``sing``, ``eckardt``, ``moduli`` or ``lines``.
        input (Optional[:class:`str`]): Inline comma-separated rationals, or a path to a JSON file.
        seed (:class:`int`): Seed of all randomness; echoed in the output.
        tol (:class:`float`): Clustering and matching tolerance of the numeric Eckardt detector.
        tracker (:class:`~.TrackerConfig`): Path tracker settings built from ``--paths``, ``--initial-step``,
            ``--min-step`` and the seed.
        out (Optional[:class:`str`]): Output file; stdout when ``None``.
        mode (:class:`~.EckardtMode`): Counting mode of the ``eckardt`` subcommand.
        direction (:class:`~.ModuliDirection`): Map direction of the ``moduli`` subcommand.
        sample_multiplicities (:class:`bool`): Whether ``sing verify`` also samples multiplicities.
        samples (:class:`int`): Number of smoothness samples of ``sing verify``.
    """
    __slots__ = ("subcommand", "input", "seed", "tol", "tracker", "out", "mode", "direction",
                 "sample_multiplicities", "samples")

    SEED_BOUND: typing.ClassVar[int] = 2 ** 64
    """Seeds are unsigned 64-bit integers."""

    def __init__(self, subcommand: str, *, input: Optional[str] = None, seed: int = 0, tol: float = 1e-6,
                 tracker: Optional[TrackerConfig] = None, out: Optional[str] = None,
                 mode: EckardtMode = EckardtMode.EXACT, direction: ModuliDirection = ModuliDirection.FORWARD,
                 sample_multiplicities: bool = False, samples: int = 100):
        if not 0 <= seed < RunConfig.SEED_BOUND:
            raise InvalidConfigException(f"The seed must be an unsigned 64-bit integer, got {seed}.")
        if not tol > 0:
            raise InvalidConfigException(f"The tolerance must be positive, got {tol}.")
        if samples < 1:
            raise InvalidConfigException(f"The sample count must be positive, got {samples}.")
        self.subcommand = subcommand
        self.input = input
        self.seed = seed
        self.tol = tol
        self.tracker = TrackerConfig(seed=seed) if tracker is None else tracker
        self.out = out
        self.mode = mode
        self.direction = direction
        self.sample_multiplicities = sample_multiplicities
        self.samples = samples

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> "RunConfig":
        tracker = TrackerConfig(paths=ns.paths, seed=ns.seed, initial_step=ns.initial_step, min_step=ns.min_step)
        if getattr(ns, "inverse", False):
            direction = ModuliDirection.INVERSE
        elif getattr(ns, "roundtrip", False):
            direction = ModuliDirection.ROUNDTRIP
        else:
            direction = ModuliDirection.FORWARD
        return cls(
            ns.command,
            input=getattr(ns, "input", None),
            seed=ns.seed,
            tol=ns.tol,
            tracker=tracker,
            out=ns.out,
            mode=EckardtMode._from_json_data(getattr(ns, "mode", EckardtMode.EXACT.value)),
            direction=direction,
            sample_multiplicities=getattr(ns, "sample_multiplicities", False),
            samples=getattr(ns, "samples", 100),
        )

    def __repr__(self):
        return f"<RunConfig {self.subcommand} input={self.input!r} seed={self.seed}>"


def _sylvester(arg: str) -> SylvesterPoint:
    data = read_input(arg)
    if isinstance(data, Mapping):
        return SylvesterPoint._from_json_data(data)
    return SylvesterPoint(data)


def _surface(arg: str) -> Tuple[CubicForm3, Optional[SylvesterPoint]]:
    """A cubic surface from 5 Sylvester coefficients, 20 cubic coefficients, or a JSON file holding either."""
    data = read_input(arg)
    if isinstance(data, Mapping):
        if "cubic" in data:
            return CubicForm3._from_json_data(data), None
        s = SylvesterPoint._from_json_data(data)
        return to_cubic_p3(s), s
    if len(data) == len(CubicForm3.MONOMIALS):
        return CubicForm3.from_coefficients(data), None
    if len(data) == SylvesterPoint.SIZE:
        s = SylvesterPoint(data)
        return to_cubic_p3(s), s
    raise InputParseException(f"Expected 5 Sylvester or 20 cubic coefficients, got {len(data)}.")


def _moduli_point(arg: str) -> ModuliPoint:
    data = read_input(arg)
    if isinstance(data, Mapping):
        return ModuliPoint._from_json_data(data)
    return ModuliPoint(data)


def _rats(values: Sequence[Rat]) -> List[str]:
    return [format_rat(v) for v in values]


def cmd_invariants(cfg: RunConfig) -> Document:
    """Salmon invariants, :math:`I_{100}` and the base-locus flags of one Sylvester point."""
    s = _sylvester(cfg.input or "")
    in_base_locus = base_locus_forward(s)
    value = i100(s)
    return {
        "point": s.to_json_data(),
        "sigma": _rats(sigma_values(s)),
        "invariants": _rats(salmon_values(s)),
        "i100": format_rat(value),
        "on_eckardt_hypersurface": value == 0,
        "base_locus": in_base_locus,
        "weighted_equal_to_q": maps_to_q(s),
        "reading_notes": READING_NOTES,
    }


def cmd_sing_verify(cfg: RunConfig) -> Document:
    """The singular-locus certificate; raises :exc:`VerificationFailure` on the first failing check."""
    certificate = verification_certificate(cfg.seed, samples=cfg.samples,
                                           sample_multiplicities=cfg.sample_multiplicities)
    return {**certificate, "reading_notes": READING_NOTES}


def _numeric_eckardt(cubic: CubicForm3, cfg: RunConfig) -> Document:
    lines = track_all(cubic, cfg.tracker)
    clusters = eckardt_numeric(lines, cfg.tol, cubic)
    return {"count": len(clusters), "clusters": [c.to_json_data() for c in clusters], "tol": cfg.tol}


def cmd_eckardt(cfg: RunConfig) -> Document:
    """Eckardt points of one surface, by the vertex criterion, the tracked lines, or both."""
    if cfg.mode is EckardtMode.NUMERIC:
        cubic, s = _surface(cfg.input or "")
        doc: Document = {"mode": cfg.mode.value, "surface": (s or cubic).to_json_data(),
                         **_numeric_eckardt(cubic, cfg), "tracker": cfg.tracker.to_json_data()}
        if s is not None:
            doc["family"] = classify_family(s).to_json_data()
        return doc

    s = _sylvester(cfg.input or "")
    if s.is_degenerate:
        raise DegenerateFormException(
            f"{s} is a degenerate Sylvester form: the vertex criterion does not apply; use eckardt --mode numeric."
        )
    doc = {"mode": cfg.mode.value, "surface": s.to_json_data(), **surface_report(s)}
    if cfg.mode is EckardtMode.CROSS:
        report = cross_validate(s, cfg.tracker, cfg.tol)
        doc["cross"] = report.to_json_data()
        doc["tracker"] = cfg.tracker.to_json_data()
        doc["ok"] = report.ok
    return doc


def cmd_moduli(cfg: RunConfig) -> Document:
    """The moduli map forward, its inverse, or the round trip through both."""
    if cfg.direction is ModuliDirection.INVERSE:
        p = _moduli_point(cfg.input or "")
        return {"direction": cfg.direction.value, "invariants": p.to_json_data(),
                "sigma": inverse_map(p).to_json_data(), "reading_notes": READING_NOTES}

    s = _sylvester(cfg.input or "")
    s4, s5 = sigma_values(s)[3:]
    doc: Document = {
        "direction": cfg.direction.value,
        "point": s.to_json_data(),
        "sigma4": format_rat(s4),
        "sigma5": format_rat(s5),
        "base_locus": base_locus_forward(s),
        "reading_notes": READING_NOTES,
    }
    if doc["base_locus"]:
        return doc
    image = salmon_invariants(s)
    doc["invariants"] = image.to_json_data()
    doc["weighted_equal_to_q"] = weighted_equal(image, Q_POINT)
    if cfg.direction is ModuliDirection.ROUNDTRIP:
        back = inverse_map(image)
        doc["sigma"] = sigma_vector(s).to_json_data()
        doc["inverse"] = back.to_json_data()
        doc["weighted_equal"] = weighted_equal(back, sigma_vector(s))
    return doc


def cmd_lines(cfg: RunConfig) -> Document:
    """The 27 lines of a smooth cubic surface."""
    cubic, s = _surface(cfg.input or "")
    lines = track_all(cubic, cfg.tracker)
    return {"surface": (s or cubic).to_json_data(), "count": len(lines),
            "lines": [line.to_json_data() for line in lines], "tracker": cfg.tracker.to_json_data()}


_COMMANDS = {
    "invariants": cmd_invariants,
    "sing": cmd_sing_verify,
    "eckardt": cmd_eckardt,
    "moduli": cmd_moduli,
    "lines": cmd_lines,
}


def build_parser() -> argparse.ArgumentParser:
    formatter = argparse.ArgumentDefaultsHelpFormatter
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed of all random choices (echoed in the output)")
    common.add_argument("--tol", type=float, default=1e-6, help="numeric Eckardt clustering tolerance")
    common.add_argument("--paths", type=int, default=TrackerConfig.TOTAL_DEGREE, help="homotopy paths to track")
    common.add_argument("--initial-step", type=float, default=0.05, help="first and largest tracker step")
    common.add_argument("--min-step", type=float, default=1e-7, help="smallest tracker step")
    common.add_argument("--out", default=None, help="output file (default: stdout)")
    common.add_argument("-v", "--verbose", action="store_true", help="log debug records to stderr")

    parser = argparse.ArgumentParser(prog="eckardt", formatter_class=formatter,
                                     description="Exact and numeric computations on the Eckardt hypersurface.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], formatter_class=formatter,
                       help="Salmon invariants and I100 of a Sylvester point")
    p.add_argument("input", help="5 comma-separated rationals, or a JSON file")

    p = sub.add_parser("sing", parents=[common], formatter_class=formatter,
                       help="singular locus of the Eckardt hypersurface")
    p.add_argument("action", choices=["verify"], help="what to do")
    p.add_argument("--sample-multiplicities", action="store_true", help="also sample multiplicities per family")
    p.add_argument("--samples", type=int, default=100, help="smoothness samples off the components")

    p = sub.add_parser("eckardt", parents=[common], formatter_class=formatter, help="count Eckardt points")
    p.add_argument("input", help="5 Sylvester (or, in numeric mode, 20 cubic) coefficients, or a JSON file")
    p.add_argument("--mode", choices=[m.value for m in EckardtMode], default=EckardtMode.EXACT.value,
                   help="vertex criterion, tracked lines, or both")

    p = sub.add_parser("moduli", parents=[common], formatter_class=formatter, help="the moduli map and its inverse")
    p.add_argument("input", help="5 rationals (Sylvester point, or invariants with --inverse), or a JSON file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--inverse", action="store_true", help="read (I8:I16:I24:I32:I40) and invert")
    group.add_argument("--roundtrip", action="store_true", help="forward, inverse, and compare")

    p = sub.add_parser("lines", parents=[common], formatter_class=formatter, help="the 27 lines of a cubic surface")
    p.add_argument("input", help="5 Sylvester or 20 cubic coefficients, or a JSON file")
    return parser


def _write(doc: Document, cfg: RunConfig) -> None:
    if cfg.out is None:
        dump_document(doc, sys.stdout, seed=cfg.seed)
        return
    try:
        with open(cfg.out, "w", encoding="utf-8") as f:
            dump_document(doc, f, seed=cfg.seed)
    except OSError as e:
        raise OutputWriteException(f"Cannot write {cfg.out!r}: {e.strerror or e}") from e
    logger.info("Wrote %s.", cfg.out)


def main(argv: Optional[Sequence[str]] = None) -> int:
    ns = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if ns.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = RunConfig.from_namespace(ns)
        doc = _COMMANDS[cfg.subcommand](cfg)
        _write(doc, cfg)
    except VerificationFailure as e:
        logger.error("verification failed at %s: %s", e.item or "?", e)
        return EXIT_VERIFICATION_FAILURE
    except (InvalidInputException, ComputationException) as e:
        logger.error("%s", e)
        return EXIT_INVALID_INPUT
    except TrackingFailureException as e:
        logger.error("%s", e)
        for record in e.diagnostics:
            logger.debug("%s", record)
        return EXIT_NUMERIC_FAILURE
    except NumericException as e:
        logger.error("%s", e)
        return EXIT_NUMERIC_FAILURE
    if doc.get("ok") is False:
        return EXIT_VERIFICATION_FAILURE
    return EXIT_OK
