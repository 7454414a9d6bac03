"""설정 관리 모듈"""
import os
import logging
from pathlib import Path
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

# .env 파일 로드
env_path = Path(__file__).parent.parent / ".env"
load_dotenv(env_path)

# 로깅 설정
LOG_FORMAT = os.getenv("LOG_FORMAT", "text").lower()  # "text" | "json"
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()


def _env_int(name: str, default: int) -> int:
    """정수 환경변수 (파싱 실패 시 경고 후 기본값)"""
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"잘못된 {name} 값: {raw}, {default}로 fallback")
        return default


# 브루트포스 오라클 열거 상한 (기본 3^12 ≈ 5·10^5)
ORACLE_ENUMERATION_CAP = _env_int("ORACLE_ENUMERATION_CAP", 3 ** 12)


def _parse_window(raw: str):
    """'k_min:k_max' 형식의 Novikov 윈도우 파싱"""
    try:
        lo, hi = raw.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError:
        return None
    if lo > hi:
        return None
    return (lo, hi)


# Novikov 단항식 윈도우 (기본: -1..1)
_novikov_window_raw = os.getenv("NOVIKOV_DEFAULT_WINDOW", "-1:1").strip()
NOVIKOV_DEFAULT_WINDOW = _parse_window(_novikov_window_raw)
if NOVIKOV_DEFAULT_WINDOW is None:
    logger.warning(f"잘못된 NOVIKOV_DEFAULT_WINDOW 값: {_novikov_window_raw}, '-1:1'로 fallback")
    NOVIKOV_DEFAULT_WINDOW = (-1, 1)

# 윈도우 확장 최대 횟수 (초과 시 NovikovWindowError)
NOVIKOV_MAX_DOUBLINGS = _env_int("NOVIKOV_MAX_DOUBLINGS", 8)

# 랜덤 성질 검증 설정
RANDOM_SEED = _env_int("RANDOM_SEED", 20240517)
RANDOM_INSTANCES = _env_int("RANDOM_INSTANCES", 500)
RANDOM_MAX_GENERATORS = _env_int("RANDOM_MAX_GENERATORS", 10)

# 병렬 실행 워커 수 (manifest / 성질 검증 러너)
VERIFY_MAX_WORKERS = _env_int("VERIFY_MAX_WORKERS", 4)

# 골든 코퍼스 경로
CORPUS_DIR = Path(os.getenv("CORPUS_DIR", "").strip() or Path(__file__).parent.parent / "corpus")


def validate_config():
    """설정 검증"""
    errors = []

    if LOG_FORMAT not in ("text", "json"):
        errors.append(f"LOG_FORMAT은 text 또는 json이어야 합니다 (현재: {LOG_FORMAT})")

    if ORACLE_ENUMERATION_CAP <= 0:
        errors.append("ORACLE_ENUMERATION_CAP은 0보다 커야 합니다")

    if NOVIKOV_MAX_DOUBLINGS < 1:
        errors.append("NOVIKOV_MAX_DOUBLINGS는 1 이상이어야 합니다")

    if RANDOM_INSTANCES < 0:
        errors.append("RANDOM_INSTANCES는 음수일 수 없습니다")

    if RANDOM_MAX_GENERATORS < 1:
        errors.append("RANDOM_MAX_GENERATORS는 1 이상이어야 합니다")

    if VERIFY_MAX_WORKERS < 1:
        errors.append("VERIFY_MAX_WORKERS는 1 이상이어야 합니다")

    if errors:
        raise ValueError("설정 오류:\n" + "\n".join(f"  - {e}" for e in errors))

    return True
