from src.utils.errors import classify_error, exit_code_for
from src.utils.rationals import parse_rational, to_rational, format_rational

__all__ = [
    'classify_error',
    'exit_code_for',
    'parse_rational',
    'to_rational',
    'format_rational',
]
