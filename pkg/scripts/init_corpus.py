#!/usr/bin/env python3
"""골든 코퍼스 복합체 파일을 모델 생성기로부터 다시 쓰는 스크립트"""
import sys
from pathlib import Path

# 프로젝트 루트를 경로에 추가 (어디서 실행해도 동작하도록)
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from src.cli.formats import emit_complex
from src.coeff.rings import IntegerRing, PrimeField, RationalField
from src.config import CORPUS_DIR
from src.models.floer import floer_model
from src.models.morse import interval_model, morse_circle, morse_rp2, morse_sphere, morse_torus, point_complex


def corpus_files():
    """파일 이름 → 복합체"""
    return {
        "circle_z.fc": morse_circle(0, 1, IntegerRing()),
        "circle_f2.fc": morse_circle(0, 1, PrimeField(2)),
        "sphere_q.fc": morse_sphere(0, 1, RationalField()),
        "torus_f2.fc": morse_torus(0, 1, 1, 2, PrimeField(2)),
        "torus_z.fc": morse_torus(0, 1, 1, 2, IntegerRing()),
        "rp2_z.fc": morse_rp2(0, 1, 2, IntegerRing()),
        "rp2_f2.fc": morse_rp2(0, 1, 2, PrimeField(2)),
        "interval_q.fc": interval_model(RationalField()),
        "point_z.fc": point_complex(IntegerRing()),
        "circle_novikov_f2.fc": floer_model(morse_circle(0, 1, PrimeField(2)), 2, 1, (-1, 1)),
    }


def main():
    """코퍼스 초기화"""
    try:
        CORPUS_DIR.mkdir(parents=True, exist_ok=True)
        for name, c in corpus_files().items():
            (CORPUS_DIR / name).write_text(emit_complex(c), encoding="utf-8")
            print(f"  - {name}")
        print("✓ 코퍼스 초기화 완료")
    except Exception as e:
        print(f"✗ 코퍼스 초기화 실패: {e}")
        sys.exit(1)


if __name__ == "__main__":
    main()
