"""argparse 기반 명령행 진입점"""
import argparse
import dataclasses
import logging
import sys
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from src.cli.formats import emit_complex, parse_classes, parse_complex
from src.complex.base import FilteredComplex
from src.complex.novikov import novikov_lift
from src.complex.operations import dualize, tensor, tensor_class, validate
from src.config import _parse_window
from src.homology.homology import homology
from src.spectral.invariants import (
    METHODS,
    action_spectrum,
    cohomological_invariant,
    novikov_spectral_invariant,
    spectral_invariant,
)
from src.spectral.oracle import brute_force_invariant
from src.utils.errors import ValidationFailedError, classify_error, exit_code_for
from src.utils.logging import setup_logging, track_performance
from src.utils.rationals import format_rational, parse_rational

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """명령 출력 (stdout 전용 텍스트)과 종료 코드"""
    output: str
    exit_code: int = 0


def _window(text: Optional[str]):
    if text is None:
        return None
    window = _parse_window(text)
    if window is None:
        raise ValueError(f"잘못된 윈도우 (k_min:k_max): {text!r}")
    return window


def load_complex(args, key: str = "complex") -> FilteredComplex:
    path = getattr(args, key)
    if path is None:
        raise ValueError(f"--{key.replace('_', '-')} 가 필요합니다")
    c = parse_complex(path, args.ring_override)
    window = _window(args.window)
    if window is not None and c.ring.is_novikov:
        c = dataclasses.replace(c, window=window)
    return c


def _values(lines: Dict[str, str]) -> str:
    """클래스가 하나면 값만, 여러 개면 '이름: 값' 줄들"""
    if len(lines) == 1:
        return next(iter(lines.values()))
    return "\n".join(f"{name}: {value}" for name, value in lines.items())


def _require(args, *keys: str):
    missing = [k for k in keys if getattr(args, k) is None]
    if missing:
        raise ValueError("필수 옵션 누락: " + ", ".join("--" + k.replace("_", "-") for k in missing))


# ---------------------------------------------------------------------------
# 하위 명령
# ---------------------------------------------------------------------------

def cmd_validate(args) -> CommandResult:
    _require(args, "complex")
    c = parse_complex(args.complex, args.ring_override, check=False)
    report = validate(c)
    if not report.ok:
        raise ValidationFailedError(report, f"{args.complex}: 복합체 검증 실패")
    return CommandResult("ok")


def cmd_homology(args) -> CommandResult:
    c = load_complex(args)
    if args.degree is not None:
        degrees = [args.degree]
    else:
        degrees = sorted({g.degree for g in c.generators})
    lines = []
    for d in degrees:
        basis = homology(c, d)
        torsion = ",".join(str(order) for order in basis.torsion_orders)
        lines.append(f"H_{d}: rank={basis.rank} torsion=[{torsion}]")
    return CommandResult("\n".join(lines))


def cmd_spectrum(args) -> CommandResult:
    c = load_complex(args)
    return CommandResult(" ".join(format_rational(v) for v in action_spectrum(c)))


def cmd_spectral(args) -> CommandResult:
    _require(args, "class_path")
    c = load_complex(args)
    classes = parse_classes(args.class_path, c)
    values = {}
    for name, alpha in classes.items():
        if c.ring.is_novikov:
            value, doublings = novikov_spectral_invariant(c, alpha, c.window, args.method)
            logger.debug(f"{name}: 윈도우 확장 {doublings}회")
        else:
            value = spectral_invariant(c, alpha, args.method)
        values[name] = value.format()
    return CommandResult(_values(values))


def cmd_dualize(args) -> CommandResult:
    c = load_complex(args)
    dual = dualize(c)
    if args.class_path is None:
        return CommandResult(emit_complex(dual).rstrip("\n"))
    # --class 는 dualize(c) 의 생성원 이름으로 쓴 코사이클
    cocycles = parse_classes(args.class_path, dual)
    values = {name: cohomological_invariant(c, cocycle, args.method).format()
              for name, cocycle in cocycles.items()}
    return CommandResult(_values(values))


def cmd_tensor(args) -> CommandResult:
    _require(args, "complex2")
    c1 = load_complex(args)
    c2 = load_complex(args, "complex2")
    product = tensor(c1, c2)
    if args.class_path is None and args.class2 is None:
        return CommandResult(emit_complex(product).rstrip("\n"))
    _require(args, "class_path", "class2")
    values = {}
    for n1, a1 in parse_classes(args.class_path, c1).items():
        for n2, a2 in parse_classes(args.class2, c2).items():
            alpha = tensor_class(a1, a2, product)
            values[f"({n1},{n2})"] = spectral_invariant(product, alpha, args.method).format()
    return CommandResult(_values(values))


def cmd_lift(args) -> CommandResult:
    _require(args, "period_degree", "period_action")
    base = load_complex(args)
    lifted = novikov_lift(base, args.period_degree, parse_rational(args.period_action), _window(args.window))
    return CommandResult(emit_complex(lifted).rstrip("\n"))


def cmd_oracle(args) -> CommandResult:
    _require(args, "class_path")
    c = load_complex(args)
    values = {name: brute_force_invariant(c, alpha, args.cap).format()
              for name, alpha in parse_classes(args.class_path, c).items()}
    return CommandResult(_values(values))


def cmd_verify(args) -> CommandResult:
    from src.cli.manifest import load_manifest, run_manifest
    from src.props.runner import run_property_suite

    if args.manifest:
        outcome = run_manifest(load_manifest(args.manifest))
        return CommandResult(outcome.format(), outcome.exit_code)
    if args.random:
        with track_performance("verify_random", {"seed": args.seed}):
            reports = run_property_suite(seed=args.seed, instances=args.instances)
        failed = any(not r.ok for r in reports)
        return CommandResult("\n".join(r.format() for r in reports), 1 if failed else 0)
    raise ValueError("verify 에는 --manifest 또는 --random 이 필요합니다")


COMMANDS: Dict[str, Callable[[argparse.Namespace], CommandResult]] = {
    "validate": cmd_validate,
    "homology": cmd_homology,
    "spectrum": cmd_spectrum,
    "spectral": cmd_spectral,
    "dualize": cmd_dualize,
    "tensor": cmd_tensor,
    "lift": cmd_lift,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="filtraspec", description="필터 체인 복합체 스펙트럼 불변량 계산기")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--complex")
        p.add_argument("--class", dest="class_path")
        p.add_argument("--complex2")
        p.add_argument("--class2")
        p.add_argument("--degree", type=int)
        p.add_argument("--ring-override")
        p.add_argument("--window", help="Novikov 단항식 윈도우 k_min:k_max (음수는 --window=-1:1)")
        p.add_argument("--method", choices=METHODS, default="auto")
        p.add_argument("--period-degree", type=int)
        p.add_argument("--period-action")
        p.add_argument("--cap", type=int)
        p.add_argument("--seed", type=int)
        p.add_argument("--instances", type=int)
        p.add_argument("--manifest")
        p.add_argument("--random", action="store_true")
    return parser


def dispatch(args: argparse.Namespace) -> CommandResult:
    return COMMANDS[args.command](args)


def run(argv: Optional[List[str]] = None) -> CommandResult:
    """
    인자를 파싱해 명령 실행 (예외는 종료 코드로 변환)

    argparse 사용법 오류도 종료 코드 2 로 돌려준다.
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return CommandResult("", 0 if e.code == 0 else 2)
    try:
        return dispatch(args)
    except Exception as e:
        code = exit_code_for(e)
        logger.error(f"{args.command} 실패: {e}", exc_info=classify_error(e) == "unknown")
        print(f"error: {e}", file=sys.stderr)
        return CommandResult("", code)


def main(argv: Optional[List[str]] = None) -> int:
    """CLI 메인 (종료 코드 반환)"""
    setup_logging()
    result = run(argv)
    if result.output:
        print(result.output)
    return result.exit_code
