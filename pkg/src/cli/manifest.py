"""
verify 매니페스트: 파일 한 줄 = 작업 하나

    <command> key=value ... [expect=<정확한 출력>] [exit=<종료 코드>]
    check <property> key=value ...

경로 값(complex, class, map, htpy, product ...)은 매니페스트 파일 기준 상대 경로.
작업은 스레드 풀에서 실행되고 결과는 매니페스트 순서대로 출력된다.
"""
import logging
import shlex
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from src.cli.formats import parse_classes, parse_complex, parse_homotopy, parse_map, parse_product
from src.complex.base import ChainClass, ChainHomotopy, FilteredComplex
from src.complex.operations import dualize
from src.props import checks
from src.props.report import PropertyReport, aggregate
from src.props.runner import NOVIKOV_POWERS, basis_classes
from src.utils.errors import EngineError, ParseError
from src.utils.logging import log_with_extra, track_performance
from src.utils.rationals import parse_rational

logger = logging.getLogger(__name__)

COMMAND_NAMES = ("validate", "homology", "spectrum", "spectral", "dualize", "tensor", "lift", "oracle")
PATH_KEYS = ("complex", "class", "complex2", "class2", "map", "map2", "htpy", "htpy2", "product")
META_KEYS = ("expect", "exit")
STATUS_LABELS = {"ok": "ok", "fail": "FAIL", "error": "ERROR"}


@dataclass(frozen=True)
class ManifestJob:
    line: int
    raw: str
    command: str
    params: Dict[str, str]
    prop: Optional[str] = None


@dataclass(frozen=True)
class Manifest:
    path: Optional[str]
    jobs: Tuple[ManifestJob, ...]


@dataclass
class JobResult:
    job: ManifestJob
    status: str  # ok | fail | error
    detail: str = ""
    report: Optional[PropertyReport] = None


@dataclass
class ManifestOutcome:
    results: List[JobResult] = field(default_factory=list)

    @property
    def reports(self) -> List[PropertyReport]:
        return aggregate(r.report for r in self.results if r.report is not None)

    @property
    def exit_code(self) -> int:
        statuses = {r.status for r in self.results}
        if "error" in statuses:
            return 2
        return 1 if "fail" in statuses else 0

    def format(self) -> str:
        lines = []
        for r in self.results:
            lines.append(f"[{STATUS_LABELS[r.status]}] {r.job.line}: {r.job.raw}")
            if r.detail:
                lines.extend(f"    {d}" for d in r.detail.splitlines())
        lines.append("---")
        lines.extend(report.format() for report in self.reports)
        counts = {s: sum(1 for r in self.results if r.status == s) for s in ("ok", "fail", "error")}
        lines.append(f"summary: jobs={len(self.results)} ok={counts['ok']} "
                     f"fail={counts['fail']} error={counts['error']}")
        return "\n".join(lines)


def load_manifest_text(text: str, base_dir: Path, path: Optional[str] = None) -> Manifest:
    """
    매니페스트 파싱

    알 수 없는 명령/성질, 잘못된 key=value, 없는 경로는 줄 번호가 붙은 ParseError.
    """
    jobs = []
    for number, raw in enumerate(text.splitlines(), start=1):
        try:
            tokens = shlex.split(raw, comments=True)
        except ValueError as e:
            raise ParseError(str(e), number, path=path) from None
        if not tokens:
            continue

        command, rest = tokens[0], tokens[1:]
        prop = None
        if command == "check":
            if not rest or rest[0] not in CHECKS:
                raise ParseError(f"알 수 없는 성질: {rest[0] if rest else ''!r}", number, path=path)
            prop, rest = rest[0], rest[1:]
        elif command not in COMMAND_NAMES:
            raise ParseError(f"알 수 없는 명령: {command!r}", number, path=path)

        params: Dict[str, str] = {}
        for token in rest:
            key, sep, value = token.partition("=")
            if not sep or not key:
                raise ParseError(f"key=value 형식이 아닙니다: {token!r}", number, path=path)
            if key in PATH_KEYS:
                resolved = (base_dir / value).resolve()
                if not resolved.exists():
                    raise ParseError(f"파일이 없습니다: {value}", number, path=path)
                value = str(resolved)
            params[key] = value
        jobs.append(ManifestJob(number, raw.strip(), command, params, prop))
    return Manifest(path, tuple(jobs))


def load_manifest(path) -> Manifest:
    path = Path(path)
    return load_manifest_text(path.read_text(encoding="utf-8"), path.parent, str(path))


# ---------------------------------------------------------------------------
# 명령 작업
# ---------------------------------------------------------------------------

def _run_command(job: ManifestJob) -> JobResult:
    from src.cli.commands import run

    argv = [job.command]
    for key, value in job.params.items():
        if key in META_KEYS:
            continue
        argv.append(f"--{key}={value}")
    result = run(argv)

    expected_exit = int(job.params.get("exit", "0"))
    report = PropertyReport("manifest-expect")
    if result.exit_code != expected_exit:
        status = "error" if result.exit_code == 2 else "fail"
        report.record(False, job.raw, f"exit={result.exit_code}", f"exit={expected_exit}")
        return JobResult(job, status, f"exit code {result.exit_code} (expected {expected_exit})", report)
    if "expect" in job.params and result.output != job.params["expect"]:
        report.record(False, job.raw, result.output, job.params["expect"])
        return JobResult(job, "fail", f"expected {job.params['expect']!r}, got {result.output!r}", report)
    report.record(True, job.raw, result.output, job.params.get("expect", ""))
    return JobResult(job, "ok", "", report)


# ---------------------------------------------------------------------------
# 성질 작업
# ---------------------------------------------------------------------------

def _complex(params: Dict[str, str], key: str = "complex") -> FilteredComplex:
    if key not in params:
        raise ValueError(f"{key}= 가 필요합니다")
    return parse_complex(params[key], params.get("ring-override"))


def _classes(params: Dict[str, str], c: FilteredComplex, key: str = "class") -> List[ChainClass]:
    if key in params:
        return list(parse_classes(params[key], c).values())
    return basis_classes(c)


def _homotopy(params: Dict[str, str], key: str, c: FilteredComplex) -> ChainHomotopy:
    return parse_homotopy(params[key], c) if key in params else ChainHomotopy(c)


def _pairs(first: List[ChainClass], second: List[ChainClass]):
    return [(a, b) for a in first for b in second]


def _simple(check: Callable) -> Callable[[Dict[str, str]], PropertyReport]:
    def run(params):
        c = _complex(params)
        return check(c, _classes(params, c))
    return run


def _check_shift(params):
    c = _complex(params)
    return checks.check_shift(c, _classes(params, c), parse_rational(params.get("s", "1")))


def _check_ground_ring_action(params):
    c = _complex(params)
    scalars = [c.ring.parse(s) for s in params.get("scalars", "-1,2").split(",")]
    return checks.check_ground_ring_action(c, _classes(params, c), scalars)


def _check_order_independence(params):
    from src.config import RANDOM_SEED

    c = _complex(params)
    rng = np.random.default_rng(int(params.get("seed", RANDOM_SEED)))
    return checks.check_order_independence(c, _classes(params, c), rng, int(params.get("shuffles", "20")))


def _check_diagonal(params):
    return checks.check_diagonal(_complex(params))


def _check_duality(params):
    c = _complex(params)
    return checks.check_duality(c, _classes(params, dualize(c)))


def _check_novikov_action(params):
    c = _complex(params)
    if "powers" in params:
        powers = [int(k) for k in params["powers"].split(",")]
    else:
        powers = list(NOVIKOV_POWERS)
    return checks.check_novikov_action(c, _classes(params, c), powers)


def _check_tensor(params):
    c1, c2 = _complex(params), _complex(params, "complex2")
    return checks.check_tensor(c1, c2, _pairs(_classes(params, c1), _classes(params, c2, "class2")))


def _check_continuation(params):
    source, target = _complex(params), _complex(params, "complex2")
    f = parse_map(params["map"], source, target)
    return checks.check_continuation(f, _classes(params, source))


def _check_conjugation_stability(params):
    source, target = _complex(params), _complex(params, "complex2")
    f = parse_map(params["map"], source, target)
    g = parse_map(params["map2"], target, source)
    return checks.check_conjugation_stability(
        f, g, _homotopy(params, "htpy", source), _homotopy(params, "htpy2", target), _classes(params, source))


def _product(params, module: bool = False):
    factor1 = _complex(params)
    factor2 = _complex(params, "complex2") if "complex2" in params else None
    return parse_product(params["product"], factor1, factor2, module=module)


def _check_triangle(params):
    p = _product(params)
    return checks.check_triangle(p, _pairs(_classes(params, p.factor1), _classes(params, p.factor2, "class2")))


def _check_unit_corollaries(params):
    p = _product(params)
    return checks.check_unit_corollaries(p, _classes(params, p.factor2, "class2"))


def _check_module_structure(params):
    m = _product(params, module=True)
    return checks.check_module_structure(m, _pairs(_classes(params, m.factor1), _classes(params, m.factor2, "class2")))


CHECKS: Dict[str, Callable[[Dict[str, str]], PropertyReport]] = {
    "finiteness": _simple(checks.check_finiteness),
    "spectrality": _simple(checks.check_spectrality),
    "action-bounds": _simple(checks.check_action_bounds),
    "shift": _check_shift,
    "ground-ring-action": _check_ground_ring_action,
    "continuation": _check_continuation,
    "triangle": _check_triangle,
    "module-structure": _check_module_structure,
    "unit-corollaries": _check_unit_corollaries,
    "duality": _check_duality,
    "novikov-action": _check_novikov_action,
    "tensor": _check_tensor,
    "diagonal": _check_diagonal,
    "conjugation-stability": _check_conjugation_stability,
    "order-independence": _check_order_independence,
    "oracle": _simple(checks.check_oracle),
    "method-agreement": _simple(checks.check_method_agreement),
    "valuation": _simple(checks.check_valuation),
}


def _run_check(job: ManifestJob) -> JobResult:
    try:
        report = CHECKS[job.prop](job.params)
    except (EngineError, OSError, ValueError, KeyError) as e:
        logger.error(f"매니페스트 {job.line}행 입력 오류: {e}")
        return JobResult(job, "error", f"input error: {e}")
    if report.ok:
        return JobResult(job, "ok", "", report)
    details = "\n".join(f"{v.inputs}: lhs={v.lhs} rhs={v.rhs}" for v in report.violations)
    return JobResult(job, "fail", details, report)


def run_job(job: ManifestJob) -> JobResult:
    if job.command == "check":
        return _run_check(job)
    return _run_command(job)


def run_manifest(manifest: Manifest, max_workers: Optional[int] = None) -> ManifestOutcome:
    """
    매니페스트 작업 병렬 실행

    결과(출력 버퍼)는 완료 순서와 무관하게 매니페스트 순서를 따른다.

    Args:
        manifest: load_manifest 결과
        max_workers: 스레드 수 (None이면 VERIFY_MAX_WORKERS)

    Returns:
        ManifestOutcome (exit_code: 입력 오류 2 > 위반 1 > 성공 0)
    """
    from src.config import VERIFY_MAX_WORKERS

    with track_performance("run_manifest", {"jobs": len(manifest.jobs)}):
        with ThreadPoolExecutor(max_workers=max_workers or VERIFY_MAX_WORKERS) as executor:
            results = list(executor.map(run_job, manifest.jobs))

    outcome = ManifestOutcome(results)
    log_with_extra(logger, logging.INFO, "매니페스트 실행 완료",
                   {"manifest": manifest.path, "jobs": len(results), "exit_code": outcome.exit_code})
    return outcome
