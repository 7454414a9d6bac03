"""공통 유틸리티 (에러 분류, 유리수, 설정, 로깅) 테스트"""
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

import pytest

# 프로젝트 루트를 경로에 추가
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from src import config
from src.props.report import PropertyReport
from src.spectral.values import NEG_INF, SpectralValue
from src.utils.errors import (
    NotACycleError,
    ParseError,
    PropertyViolation,
    classify_error,
    exit_code_for,
)
from src.utils.logging import JsonFormatter, PerformanceTracker, track_performance
from src.utils.rationals import format_rational, parse_rational, to_rational


class TestErrorClassification:
    """예외 → 종료 코드"""

    def test_violation(self):
        error = PropertyViolation([PropertyReport("shift")])
        assert classify_error(error) == "violation"
        assert exit_code_for(error) == 1
        assert "shift" in str(error)

    @pytest.mark.parametrize("error", [
        NotACycleError("x"),
        ParseError("x", 1, 2),
        FileNotFoundError("x"),
        ValueError("x"),
    ])
    def test_input_errors(self, error):
        assert classify_error(error) == "input"
        assert exit_code_for(error) == 2

    def test_unknown(self):
        assert classify_error(RuntimeError("x")) == "unknown"
        assert exit_code_for(RuntimeError("x")) == 2

    def test_parse_error_location(self):
        error = ParseError("잘못된 토큰", 3, 7, "a.fc")
        assert str(error) == "a.fc:3:7: 잘못된 토큰"
        assert str(ParseError("빈 파일")) == "빈 파일"


class TestRationals:
    def test_parse(self):
        assert parse_rational(" -3/4 ") == Fraction(-3, 4)
        assert parse_rational("+5") == 5

    @pytest.mark.parametrize("text", ["0.5", "1e3", "1/", "", "a", "1/0", "-3/00"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    def test_to_rational_rejects_float_and_bool(self):
        with pytest.raises(TypeError):
            to_rational(0.5)
        with pytest.raises(TypeError):
            to_rational(True)

    def test_format(self):
        assert format_rational(Fraction(6, 3)) == "2"
        assert format_rational(Fraction(-1, 2)) == "-1/2"


class TestConfig:
    """환경 변수 기반 설정"""

    def test_defaults_validate(self):
        assert config.validate_config()

    def test_window_parsing(self):
        assert config._parse_window("-2:3") == (-2, 3)
        assert config._parse_window("3:-2") is None
        assert config._parse_window("1") is None

    def test_non_numeric_integer_falls_back(self, monkeypatch, caplog):
        monkeypatch.setenv("VERIFY_MAX_WORKERS", "many")
        with caplog.at_level(logging.WARNING, logger="src.config"):
            assert config._env_int("VERIFY_MAX_WORKERS", 4) == 4
        assert "VERIFY_MAX_WORKERS" in caplog.text
        monkeypatch.setenv("VERIFY_MAX_WORKERS", " 6 ")
        assert config._env_int("VERIFY_MAX_WORKERS", 4) == 6
        monkeypatch.delenv("VERIFY_MAX_WORKERS")
        assert config._env_int("VERIFY_MAX_WORKERS", 4) == 4

    def test_invalid_values_reported(self, monkeypatch):
        monkeypatch.setattr(config, "VERIFY_MAX_WORKERS", 0)
        monkeypatch.setattr(config, "LOG_FORMAT", "xml")
        with pytest.raises(ValueError) as exc_info:
            config.validate_config()
        message = str(exc_info.value)
        assert "VERIFY_MAX_WORKERS" in message
        assert "LOG_FORMAT" in message


class TestLogging:
    def test_json_formatter_stringifies_extra(self):
        record = logging.LogRecord("engine", logging.INFO, __file__, 1, "완료", None, None)
        record.extra_data = {"value": Fraction(1, 2), "jobs": 3}
        payload = json.loads(JsonFormatter().format(record))
        assert payload["message"] == "완료"
        assert payload["value"] == "1/2"
        assert payload["jobs"] == 3

    def test_json_formatter_uses_spectral_notation(self):
        record = logging.LogRecord("engine", logging.DEBUG, __file__, 1, "값", None, None)
        record.extra_data = {"value": NEG_INF, "finite": SpectralValue.finite(Fraction(3, 2))}
        payload = json.loads(JsonFormatter().format(record))
        assert payload["value"] == "-inf"
        assert payload["finite"] == "3/2"

    def test_track_performance_records_metric(self):
        tracker = PerformanceTracker()
        tracker.reset()
        with track_performance("unit-test", {"seed": 1}):
            pass
        assert tracker.metrics[-1]["component"] == "unit-test"
        assert tracker.metrics[-1]["seed"] == 1
        with track_performance("unit-test", {"jobs": 4}):
            pass
        assert "unit-test" in tracker.get_summary()
        assert "2회, jobs=4)" in tracker.get_summary()
        tracker.reset()
        assert tracker.get_summary() == "측정된 성능 지표가 없습니다."
