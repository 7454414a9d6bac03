"""명령행 인터페이스: 파일 포맷, 매니페스트, 하위 명령"""
from src.cli.formats import (
    parse_complex,
    parse_complex_text,
    emit_complex,
    parse_classes,
    parse_class,
    emit_class,
    parse_map,
    emit_map,
    parse_homotopy,
    parse_product,
    emit_product,
)
from src.cli.commands import main, run, build_parser

__all__ = [
    'parse_complex',
    'parse_complex_text',
    'emit_complex',
    'parse_classes',
    'parse_class',
    'emit_class',
    'parse_map',
    'emit_map',
    'parse_homotopy',
    'parse_product',
    'emit_product',
    'main',
    'run',
    'build_parser',
]
