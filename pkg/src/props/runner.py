"""성질 검증 러너: 코퍼스 모델 + 랜덤 체 복합체를 병렬로 검증"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional

import numpy as np

from src.coeff.rings import IntegerRing, PrimeField, RationalField
from src.complex.base import ChainClass, ChainHomotopy, FilteredComplex, FilteredMap, scale_class
from src.complex.novikov import lift_class
from src.complex.operations import dualize, perturb_actions, shift_actions
from src.homology.homology import homology
from src.models.floer import floer_model, periodic_orbit_model, zero_hamiltonian_model
from src.models.morse import (
    interval_model,
    interval_retraction,
    morse_circle,
    morse_rp2,
    morse_sphere,
    morse_torus,
    point_complex,
)
from src.models.products import diagonal_self_action, torus_intersection_product, unit_module_action
from src.models.random_complexes import random_cycle, random_field_complex, random_perturbation
from src.props import checks
from src.props.report import PropertyReport, aggregate
from src.utils.errors import PropertyViolation
from src.utils.logging import log_with_extra, track_performance

logger = logging.getLogger(__name__)

NOVIKOV_PERIODS = ((2, Fraction(1)), (2, Fraction(3, 2)), (4, Fraction(2)))
NOVIKOV_POWERS = (-2, -1, 0, 1, 2)


@dataclass
class CheckJob:
    """독립적으로 실행할 검증 한 건"""
    label: str
    run: Callable[[], PropertyReport]


def run_jobs(jobs: List[CheckJob], max_workers: Optional[int] = None) -> List[PropertyReport]:
    """
    검증 작업을 스레드 풀에서 실행하고 입력 순서대로 리포트를 모음

    완료 순서와 무관하게 결과는 jobs 순서를 따른다.
    """
    from src.config import VERIFY_MAX_WORKERS

    workers = max_workers or VERIFY_MAX_WORKERS

    def execute(job: CheckJob) -> PropertyReport:
        report = job.run()
        if not report.ok:
            log_with_extra(logger, logging.WARNING, "성질 위반 발견",
                           {"job": job.label, "property": report.name, "violations": len(report.violations)})
        return report

    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(execute, jobs))


def basis_classes(c: FilteredComplex) -> List[ChainClass]:
    """모든 차수의 호몰로지 기저 대표"""
    degrees = sorted({g.degree for g in c.generators})
    return [cls for d in degrees for cls in homology(c, d).classes()]


def _common_jobs(label: str, c: FilteredComplex, classes: List[ChainClass],
                 rng: np.random.Generator, shuffles: int) -> List[CheckJob]:
    """모든 기본환 복합체에 적용하는 검증"""
    jobs = [
        CheckJob(label, lambda: checks.check_finiteness(c, classes)),
        CheckJob(label, lambda: checks.check_spectrality(c, classes)),
        CheckJob(label, lambda: checks.check_action_bounds(c, classes)),
        CheckJob(label, lambda: checks.check_shift(c, classes, Fraction(3))),
        CheckJob(label, lambda: checks.check_shift(c, classes, Fraction(-1, 2))),
        CheckJob(label, lambda: checks.check_diagonal(c)),
        CheckJob(label, lambda: checks.check_order_independence(c, classes, rng, shuffles)),
    ]
    dual = dualize(c)
    cocycles = basis_classes(dual)
    jobs.append(CheckJob(label, lambda: checks.check_duality(c, cocycles)))
    if c.ring.is_field:
        jobs.append(CheckJob(label, lambda: checks.check_method_agreement(c, classes)))
    if isinstance(c.ring, PrimeField):
        jobs.append(CheckJob(label, lambda: checks.check_oracle(c, classes)))
    else:
        jobs.append(CheckJob(label, lambda: checks.check_ground_ring_action(c, classes, [-1, 2])))
    return jobs


def _stability_jobs(label: str, c: FilteredComplex, classes: List[ChainClass],
                    rng: np.random.Generator) -> List[CheckJob]:
    """섭동 쌍과 이동 쌍에 대한 연속성/켤레 안정성"""
    delta, epsilon = random_perturbation(rng, c)
    perturbed = perturb_actions(c, delta, epsilon)
    forward = FilteredMap.identity(c, perturbed, shift=epsilon)
    backward = FilteredMap.identity(perturbed, c, shift=epsilon)

    s = Fraction(int(rng.integers(1, 5)), 2)
    moved = shift_actions(c, s)
    up = FilteredMap.identity(c, moved, shift=s)
    down = FilteredMap.identity(moved, c, shift=Fraction(0))

    return [
        CheckJob(label, lambda: checks.check_continuation(forward, classes)),
        CheckJob(label, lambda: checks.check_conjugation_stability(
            forward, backward, ChainHomotopy(c), ChainHomotopy(perturbed), classes)),
        CheckJob(label, lambda: checks.check_conjugation_stability(
            up, down, ChainHomotopy(c), ChainHomotopy(moved), classes)),
    ]


def corpus_complexes() -> List[tuple]:
    """(이름, 복합체) 골든 코퍼스 모델"""
    cases = []
    for ring in (IntegerRing(), PrimeField(2), PrimeField(3), RationalField()):
        tag = ring.descriptor()
        cases.append((f"circle/{tag}", morse_circle(0, 1, ring)))
        cases.append((f"sphere/{tag}", morse_sphere(0, 1, ring)))
        cases.append((f"torus/{tag}", morse_torus(0, 1, 1, 2, ring)))
        cases.append((f"interval/{tag}", interval_model(ring)))
        cases.append((f"point/{tag}", point_complex(ring)))
    cases.append(("rp2/Z", morse_rp2(0, 1, 2, IntegerRing())))
    cases.append(("rp2/F2", morse_rp2(0, 1, 2, PrimeField(2))))
    return cases


def corpus_jobs(seed: int) -> List[CheckJob]:
    """골든 코퍼스 검증 작업"""
    jobs: List[CheckJob] = []
    for index, (label, c) in enumerate(corpus_complexes()):
        rng = np.random.default_rng([seed, 10_000 + index])
        classes = basis_classes(c)
        if label == "rp2/Z":
            torsion = homology(c, 1).torsion_part[0][0]
            classes = classes + [scale_class(torsion, 2)]
        jobs.extend(_common_jobs(label, c, classes, rng, shuffles=20))
        jobs.extend(_stability_jobs(label, c, classes, rng))

    # 항등 사상이 아닌 호모토피 동치 (구간 → 점 수축)
    for ring in (IntegerRing(), PrimeField(2), PrimeField(3), RationalField()):
        for point_action in (Fraction(0), Fraction(1, 2), Fraction(-1, 2)):
            f, g, h, h_point = interval_retraction(ring, point_action)
            classes = basis_classes(f.source)
            jobs.append(CheckJob("retraction", lambda f=f, g=g, h=h, hp=h_point, cl=classes:
                                 checks.check_conjugation_stability(f, g, h, hp, cl)))

    # 곱 구조
    for ring in (IntegerRing(), PrimeField(2), RationalField()):
        torus = morse_torus(0, 1, 1, 2, ring)
        product = torus_intersection_product(torus)
        torus_classes = basis_classes(torus)
        pairs = [(a, b) for a in torus_classes for b in torus_classes]
        jobs.append(CheckJob("torus-product", lambda p=product, pr=pairs: checks.check_triangle(p, pr)))
        jobs.append(CheckJob("torus-product",
                             lambda p=product, cl=torus_classes: checks.check_unit_corollaries(p, cl)))

        circle = morse_circle(0, 1, ring)
        ambient = periodic_orbit_model(circle)
        for action in (unit_module_action(ambient, circle), diagonal_self_action(ambient)):
            ambient_classes = basis_classes(action.ambient)
            module_classes = basis_classes(action.module)
            pairs = [(a, b) for a in ambient_classes for b in module_classes]
            jobs.append(CheckJob("module-action", lambda m=action, pr=pairs: checks.check_module_structure(m, pr)))

    # 텐서곱
    for ring in (IntegerRing(), PrimeField(2), PrimeField(3), RationalField()):
        factors = [
            (morse_circle(0, 1, ring), morse_circle(0, 1, ring)),
            (morse_circle(0, 1, ring), point_complex(ring)),
            (interval_model(ring), interval_model(ring)),
            (morse_sphere(0, 2, ring), morse_circle(-1, 1, ring)),
        ]
        if isinstance(ring, (IntegerRing, PrimeField)) and ring.characteristic in (0, 2):
            factors.append((morse_rp2(0, 1, 2, ring), morse_circle(0, 1, ring)))
        for c1, c2 in factors:
            pairs = [(a, b) for a in basis_classes(c1) for b in basis_classes(c2)]
            jobs.append(CheckJob("tensor", lambda x=c1, y=c2, pr=pairs: checks.check_tensor(x, y, pr)))

    # Novikov 작용과 값매김
    for base_ring in (PrimeField(2), IntegerRing()):
        bases = [morse_circle(0, 1, base_ring), morse_sphere(0, 1, base_ring), morse_torus(0, 1, 1, 2, base_ring)]
        for base in bases:
            for period_degree, period_action in NOVIKOV_PERIODS:
                lifted = floer_model(base, period_degree, period_action)
                lifted_classes = [lift_class(lifted, cls) for cls in basis_classes(base)]
                jobs.append(CheckJob("novikov", lambda c=lifted, cl=lifted_classes:
                                     checks.check_novikov_action(c, cl, NOVIKOV_POWERS)))
                jobs.append(CheckJob("novikov", lambda c=lifted, cl=lifted_classes:
                                     checks.check_spectrality(c, cl)))
                zero = zero_hamiltonian_model(base, period_degree, period_action)
                zero_classes = [lift_class(zero, cls) for cls in basis_classes(base)]
                jobs.append(CheckJob("valuation", lambda c=zero, cl=zero_classes: checks.check_valuation(c, cl)))
    return jobs


def random_jobs(seed: int, instances: int, max_generators: int) -> List[CheckJob]:
    """시드 고정 랜덤 체 복합체 검증 작업 (F2, F3, Q 순환)"""
    rings = (PrimeField(2), PrimeField(3), RationalField())
    jobs: List[CheckJob] = []
    for i in range(instances):
        rng = np.random.default_rng([seed, i])
        ring = rings[i % len(rings)]
        c = random_field_complex(rng, ring, max_generators)
        label = f"random#{i}/{ring.descriptor()}"
        degrees = sorted({g.degree for g in c.generators})
        classes = basis_classes(c) + [random_cycle(rng, c, d) for d in degrees]
        jobs.extend(_common_jobs(label, c, classes, rng, shuffles=2))
        jobs.extend(_stability_jobs(label, c, classes, rng))
        if i % 5 == 0:
            other = random_field_complex(rng, ring, max(2, max_generators // 2))
            pairs = [(a, b) for a in basis_classes(c) for b in basis_classes(other)]
            jobs.append(CheckJob(label, lambda x=c, y=other, pr=pairs: checks.check_tensor(x, y, pr)))
    return jobs


def run_property_suite(seed: Optional[int] = None, instances: Optional[int] = None,
                       include_corpus: bool = True, max_workers: Optional[int] = None) -> List[PropertyReport]:
    """
    코퍼스 + 랜덤 인스턴스 전체 성질 검증

    Args:
        seed: 랜덤 시드 (None이면 RANDOM_SEED)
        instances: 랜덤 인스턴스 수 (None이면 RANDOM_INSTANCES)
        include_corpus: 골든 코퍼스 모델 포함 여부
        max_workers: 스레드 수

    Returns:
        성질별로 합친 리포트 (처음 등장 순서)
    """
    from src.config import RANDOM_INSTANCES, RANDOM_MAX_GENERATORS, RANDOM_SEED

    seed = RANDOM_SEED if seed is None else seed
    instances = RANDOM_INSTANCES if instances is None else instances

    jobs: List[CheckJob] = []
    with track_performance("build_property_jobs", {"seed": seed, "instances": instances}):
        if include_corpus:
            jobs.extend(corpus_jobs(seed))
        jobs.extend(random_jobs(seed, instances, RANDOM_MAX_GENERATORS))

    with track_performance("run_property_jobs", {"jobs": len(jobs)}):
        reports = aggregate(run_jobs(jobs, max_workers))

    log_with_extra(logger, logging.INFO, "성질 검증 완료",
                   {"jobs": len(jobs), "properties": len(reports),
                    "violations": sum(len(r.violations) for r in reports)})
    return reports


def require_clean(reports: Iterable[PropertyReport]):
    """위반이 있으면 PropertyViolation"""
    failed = [r for r in reports if not r.ok]
    if failed:
        raise PropertyViolation(failed)
