"""텍스트 입력 포맷 파서/출력기 테스트"""
import sys
from fractions import Fraction
from pathlib import Path

import pytest

# 프로젝트 루트를 경로에 추가
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from src.cli.formats import (
    emit_class,
    emit_complex,
    emit_map,
    emit_product,
    parse_class,
    parse_classes,
    parse_classes_text,
    parse_complex,
    parse_complex_text,
    parse_homotopy_text,
    parse_map,
    parse_map_text,
    parse_product,
)
from src.complex.operations import validate
from src.models.products import ModuleActionData
from src.utils.errors import ParseError, ValidationFailedError


class TestParseComplex:
    """복합체 파일"""

    def test_corpus_circle(self, corpus_dir):
        c = parse_complex(corpus_dir / "circle_z.fc")
        assert c.ring.descriptor() == "Z"
        assert c.tags == ("morse", "circle")
        assert c.names == ["min", "max"]
        assert c.action_of("max") == 1

    def test_novikov_header_and_window(self, corpus_dir):
        c = parse_complex(corpus_dir / "circle_novikov_f2.fc")
        assert c.ring.is_novikov
        assert c.ring.period_degree == 2
        assert c.ring.period_action == 1
        assert c.window == (-1, 1)

    def test_emit_parse_round_trip(self, corpus_dir):
        for name in ("rp2_z.fc", "circle_novikov_f2.fc"):
            c = parse_complex(corpus_dir / name)
            assert parse_complex_text(emit_complex(c)) == c

    def test_ring_override(self, corpus_dir):
        c = parse_complex(corpus_dir / "rp2_z.fc", ring_override="F2")
        assert c.ring.descriptor() == "F2"
        assert c.differential["c2"] == {}

    def test_rational_actions(self):
        c = parse_complex_text("ring Q\ngen a deg=0 action=-3/2  # 주석\n")
        assert c.action_of("a") == Fraction(-3, 2)

    def test_validation_failure(self, corpus_dir):
        with pytest.raises(ValidationFailedError) as exc_info:
            parse_complex(corpus_dir / "bad_action.fc")
        assert exc_info.value.report.kinds() == ["action"]

    def test_unchecked_parse(self, corpus_dir):
        c = parse_complex(corpus_dir / "bad_action.fc", check=False)
        assert not validate(c).ok


class TestParseErrors:
    """줄/열 번호가 붙은 ParseError"""

    def test_ring_mismatch_location(self, corpus_dir):
        with pytest.raises(ParseError) as exc_info:
            parse_complex(corpus_dir / "bad_ring.fc")
        error = exc_info.value
        assert error.line == 5
        assert error.column == 9
        assert error.path.endswith("bad_ring.fc")

    def test_duplicate_generator(self):
        text = "ring Z\ngen a deg=0 action=0\ngen a deg=1 action=1\n"
        with pytest.raises(ParseError) as exc_info:
            parse_complex_text(text)
        assert (exc_info.value.line, exc_info.value.column) == (3, 5)

    def test_float_action(self):
        with pytest.raises(ParseError) as exc_info:
            parse_complex_text("ring Z\ngen a deg=0 action=0.5\n")
        assert exc_info.value.column == 13

    def test_zero_denominator_action(self):
        with pytest.raises(ParseError) as exc_info:
            parse_complex_text("ring Q\ngen a deg=0 action=1/0\n")
        assert (exc_info.value.line, exc_info.value.column) == (2, 13)

    def test_zero_denominator_coefficient(self):
        text = "ring Q\ngen a deg=1 action=1\ngen b deg=0 action=0\nbnd a b 1/0\n"
        with pytest.raises(ParseError) as exc_info:
            parse_complex_text(text)
        assert exc_info.value.line == 4

    def test_missing_key(self):
        with pytest.raises(ParseError, match="deg"):
            parse_complex_text("ring Z\ngen a action=0\n")

    def test_boundary_before_ring(self):
        with pytest.raises(ParseError) as exc_info:
            parse_complex_text("gen a deg=1 action=1\ngen b deg=0 action=0\nbnd a b 1\n")
        assert exc_info.value.line == 3

    def test_unknown_generator_in_boundary(self):
        with pytest.raises(ParseError):
            parse_complex_text("ring Z\ngen a deg=1 action=1\nbnd a c 1\n")

    def test_unknown_keyword(self):
        with pytest.raises(ParseError) as exc_info:
            parse_complex_text("ring Z\nvertex a\n")
        assert (exc_info.value.line, exc_info.value.column) == (2, 1)

    def test_unsupported_ring(self):
        with pytest.raises(ParseError):
            parse_complex_text("ring R\n")

    def test_missing_ring(self):
        with pytest.raises(ParseError):
            parse_complex_text("gen a deg=0 action=0\n")


class TestClassFiles:
    def test_named_classes_keep_order(self, corpus_dir):
        rp2 = parse_complex(corpus_dir / "rp2_z.fc")
        classes = parse_classes(corpus_dir / "rp2_classes.cl", rp2)
        assert list(classes) == ["c0", "c1", "twice_c1"]
        assert classes["twice_c1"].as_chain() == {"c1": 2}

    def test_parse_single_class(self, corpus_dir):
        rp2 = parse_complex(corpus_dir / "rp2_z.fc")
        assert parse_class(corpus_dir / "rp2_classes.cl", rp2, "c1").degree == 1
        with pytest.raises(ParseError):
            parse_class(corpus_dir / "rp2_classes.cl", rp2, "c7")

    def test_emit_class(self, corpus_dir):
        rp2 = parse_complex(corpus_dir / "rp2_z.fc")
        alpha = parse_class(corpus_dir / "rp2_classes.cl", rp2, "twice_c1")
        assert emit_class(alpha, "twice_c1") == "cls twice_c1 deg=1\nterm c1 2\n"

    def test_term_needs_class(self, circle_z):
        with pytest.raises(ParseError):
            parse_classes_text("term max 1\n", circle_z)

    def test_unknown_generator(self, circle_z):
        with pytest.raises(ParseError) as exc_info:
            parse_classes_text("cls x deg=1\nterm saddle 1\n", circle_z)
        assert exc_info.value.line == 2

    def test_zero_denominator_term(self, interval_q):
        with pytest.raises(ParseError) as exc_info:
            parse_classes_text("cls x deg=0\nterm b 1/0\n", interval_q)
        assert exc_info.value.line == 2

    def test_novikov_coefficient(self, corpus_dir):
        c = parse_complex(corpus_dir / "circle_novikov_f2.fc")
        alpha = parse_class(corpus_dir / "novikov_t_max.cl", c)
        assert alpha.degree == -1
        assert alpha.as_chain() == {"max": c.ring.monomial(1, 1)}


class TestMapsAndProducts:
    """사상 / 호모토피 / 곱 파일"""

    def test_map_file(self, corpus_dir):
        source = parse_complex(corpus_dir / "circle_z.fc")
        target = parse_complex(corpus_dir / "circle_z_shift.fc")
        f = parse_map(corpus_dir / "shift_up.map", source, target)
        assert f.shift == Fraction(1, 2)
        assert f.validate().ok
        assert emit_map(f) == "map\nshift 1/2\nent min min 1\nent max max 1\n"

    def test_map_requires_shift(self, circle_z):
        with pytest.raises(ParseError):
            parse_map_text("map\nent min min 1\n", circle_z, circle_z)

    def test_map_header_required(self, circle_z):
        with pytest.raises(ParseError):
            parse_map_text("shift 0\n", circle_z, circle_z)

    def test_homotopy_rejects_shift(self, circle_z):
        with pytest.raises(ParseError):
            parse_homotopy_text("htpy\nshift 0\n", circle_z)

    def test_homotopy_entries(self, interval_q):
        h = parse_homotopy_text("htpy\nent b a 1/2\n", interval_q)
        assert h.apply({"b": Fraction(1)}) == {"a": Fraction(1, 2)}

    def test_product_file(self, corpus_dir):
        circle = parse_complex(corpus_dir / "circle_z.fc")
        p = parse_product(corpus_dir / "circle_unit.prod", circle, module=True)
        assert isinstance(p, ModuleActionData)
        assert p.unit == "max"
        assert p.degree_shift == -1
        assert p.verify().ok
        assert emit_product(p) == "prod max min min 1\nprod max max max -1\nslack 0\nunit max\ndshift -1\n"

    def test_torus_product_file(self, corpus_dir):
        torus = parse_complex(corpus_dir / "torus_z.fc")
        assert parse_product(corpus_dir / "torus.prod", torus).verify().ok
