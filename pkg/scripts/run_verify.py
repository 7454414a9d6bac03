#!/usr/bin/env python3
"""골든 코퍼스 매니페스트 + 랜덤 성질 검증 실행 스크립트"""
import sys
import traceback
from pathlib import Path

# 프로젝트 루트를 경로에 추가 (어디서 실행해도 동작하도록)
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from src.cli.manifest import load_manifest, run_manifest
from src.config import validate_config, CORPUS_DIR, RANDOM_SEED, RANDOM_INSTANCES
from src.props.runner import run_property_suite
from src.utils.errors import exit_code_for
from src.utils.logging import setup_logging, track_performance, PerformanceTracker


def main():
    """메인 실행 함수"""
    try:
        # 1. 로깅 초기화 및 설정 검증
        setup_logging()
        validate_config()
        print(f"[CORPUS_DIR]={CORPUS_DIR}")
        print(f"[RANDOM_SEED]={RANDOM_SEED} [RANDOM_INSTANCES]={RANDOM_INSTANCES}")

        # 2. 코퍼스 매니페스트
        with track_performance("corpus_manifest"):
            outcome = run_manifest(load_manifest(CORPUS_DIR / "corpus.mf"))
        print(outcome.format())

        # 3. 코퍼스 모델 + 랜덤 인스턴스 성질 검증
        with track_performance("property_suite"):
            reports = run_property_suite()
        for report in reports:
            print(report.format())

        # 4. 성능 요약 출력
        print(PerformanceTracker().get_summary())

        exit_code = outcome.exit_code
        if exit_code == 0 and any(not r.ok for r in reports):
            exit_code = 1
        if exit_code == 0:
            print("✓ 전체 성질 검증 통과")
        else:
            print(f"✗ 검증 실패 (exit code: {exit_code})")
        sys.exit(exit_code)

    except Exception as e:
        print(f"성질 검증 중 오류 발생: {e}\n{traceback.format_exc()}")
        sys.exit(exit_code_for(e))


if __name__ == "__main__":
    main()
