"""
텍스트 입력 포맷 파서/출력기

한 줄에 선언 하나, '#' 이후는 주석.

    ring <descriptor>
    gen <name> deg=<int> action=<rational>
    bnd <src> <dst> <coeff>
    tag <string>
    window <k_min>:<k_max>

클래스 파일은 'cls <name> deg=<int>' 다음 'term <gen> <coeff>' 줄들,
사상 파일은 'map' / 'shift' / 'ent', 호모토피 파일은 'htpy' / 'ent',
곱 파일은 'prod' / 'slack' / 'unit' / 'dshift'.
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from src.coeff.base import Ring
from src.coeff.rings import get_ring
from src.complex.base import (
    BoundaryEntry,
    ChainClass,
    ChainHomotopy,
    FilteredComplex,
    FilteredMap,
    Generator,
    make_chain_class,
)
from src.complex.operations import validate
from src.config import _parse_window
from src.models.products import ModuleActionData, ProductData
from src.utils.errors import ParseError, RingMismatchError, ValidationFailedError
from src.utils.rationals import format_rational, parse_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Token:
    text: str
    column: int


@dataclass(frozen=True)
class Line:
    """주석을 제거하고 토큰으로 나눈 한 줄"""
    number: int
    tokens: Tuple[Token, ...]

    @property
    def keyword(self) -> str:
        return self.tokens[0].text

    @property
    def args(self) -> Tuple[Token, ...]:
        return self.tokens[1:]


def _tokenize(text: str) -> Iterator[Line]:
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = []
        column = 0
        for part in content.split():
            column = content.index(part, column)
            tokens.append(Token(part, column + 1))
            column += len(part)
        if tokens:
            yield Line(number, tuple(tokens))


class _Reader:
    """줄 단위 파싱 도우미 (에러에 경로/줄/열을 붙임)"""

    def __init__(self, text: str, path: Optional[str] = None):
        self.path = path
        self.lines = list(_tokenize(text))

    def error(self, message: str, line: Optional[Line] = None, token: Optional[Token] = None) -> ParseError:
        column = token.column if token else (line.tokens[0].column if line else None)
        return ParseError(message, line.number if line else None, column, self.path)

    def expect_args(self, line: Line, count: int):
        if len(line.args) != count:
            raise self.error(f"'{line.keyword}' 는 인자 {count}개가 필요합니다 (받은 개수: {len(line.args)})", line)

    def key_values(self, line: Line, tokens: Sequence[Token], allowed: Sequence[str]) -> Dict[str, Tuple[str, Token]]:
        values: Dict[str, Tuple[str, Token]] = {}
        for token in tokens:
            key, sep, value = token.text.partition("=")
            if not sep or key not in allowed:
                raise self.error(f"알 수 없는 키: {token.text!r}", line, token)
            if key in values:
                raise self.error(f"중복 키: {key}", line, token)
            values[key] = (value, token)
        missing = [k for k in allowed if k not in values]
        if missing:
            raise self.error(f"필수 키 누락: {', '.join(missing)}", line)
        return values

    def integer(self, line: Line, value: str, token: Token) -> int:
        try:
            return int(value)
        except ValueError:
            raise self.error(f"잘못된 정수: {value!r}", line, token) from None

    def rational(self, line: Line, value: str, token: Token):
        try:
            return parse_rational(value)
        except ValueError:
            raise self.error(f"잘못된 유리수: {value!r}", line, token) from None

    def coefficient(self, ring: Ring, line: Line, token: Token) -> Any:
        try:
            return ring.parse(token.text)
        except RingMismatchError as e:
            raise self.error(f"계수환 불일치 ({ring.descriptor()}): {e}", line, token) from None
        except ValueError as e:
            raise self.error(str(e), line, token) from None


def _read(path) -> str:
    return Path(path).read_text(encoding="utf-8")


# ---------------------------------------------------------------------------
# 복합체
# ---------------------------------------------------------------------------

def parse_complex_text(text: str, path: Optional[str] = None, ring_override: Optional[str] = None,
                       check: bool = True) -> FilteredComplex:
    """
    복합체 텍스트 파싱

    Args:
        text: 파일 내용
        path: 에러 메시지용 경로
        ring_override: 파일의 ring 선언 대신 쓸 환 표기
        check: True면 validate 후 실패 시 ValidationFailedError

    Returns:
        FilteredComplex
    """
    reader = _Reader(text, path)
    ring: Optional[Ring] = None
    generators: List[Generator] = []
    seen = set()
    entries: List[BoundaryEntry] = []
    tags: List[str] = []
    window = None

    for line in reader.lines:
        keyword = line.keyword
        if keyword == "ring":
            if ring is not None:
                raise reader.error("ring 선언이 두 번 나왔습니다", line)
            descriptor = ring_override or " ".join(t.text for t in line.args)
            try:
                ring = get_ring(descriptor)
            except ValueError as e:
                raise reader.error(str(e), line, line.args[0] if line.args else None) from None
        elif keyword == "gen":
            if not line.args:
                raise reader.error("gen 에 이름이 없습니다", line)
            name_token = line.args[0]
            values = reader.key_values(line, line.args[1:], ("deg", "action"))
            if name_token.text in seen:
                raise reader.error(f"중복 생성원: {name_token.text}", line, name_token)
            seen.add(name_token.text)
            generators.append(Generator(
                name_token.text,
                reader.integer(line, *values["deg"]),
                reader.rational(line, *values["action"]),
            ))
        elif keyword == "bnd":
            if ring is None:
                raise reader.error("bnd 보다 ring 선언이 먼저 와야 합니다", line)
            reader.expect_args(line, 3)
            source, target, coeff = line.args
            for token in (source, target):
                if token.text not in seen:
                    raise reader.error(f"선언되지 않은 생성원: {token.text}", line, token)
            entries.append(BoundaryEntry(source.text, target.text, reader.coefficient(ring, line, coeff)))
        elif keyword == "tag":
            reader.expect_args(line, 1)
            tags.append(line.args[0].text)
        elif keyword == "window":
            reader.expect_args(line, 1)
            window = _parse_window(line.args[0].text)
            if window is None:
                raise reader.error(f"잘못된 윈도우: {line.args[0].text!r}", line, line.args[0])
        else:
            raise reader.error(f"알 수 없는 키워드: {keyword!r}", line, line.tokens[0])

    if ring is None:
        if ring_override is None:
            raise ParseError("ring 선언이 없습니다", path=path)
        ring = get_ring(ring_override)

    c = FilteredComplex(ring, tuple(generators), tuple(entries), tuple(tags), window)
    if check:
        report = validate(c)
        if not report.ok:
            raise ValidationFailedError(report, f"{path or '<text>'}: 복합체 검증 실패")
    logger.debug(f"복합체 파싱 완료: {path or '<text>'} ({len(generators)} generators)")
    return c


def parse_complex(path, ring_override: Optional[str] = None, check: bool = True) -> FilteredComplex:
    """복합체 파일 파싱 (parse_complex_text 참고)"""
    return parse_complex_text(_read(path), str(path), ring_override, check)


def emit_complex(c: FilteredComplex) -> str:
    """정규형 텍스트 (parse_complex_text 의 역)"""
    lines = [f"ring {c.ring.descriptor()}"]
    lines.extend(f"tag {tag}" for tag in c.tags)
    if c.window is not None:
        lines.append(f"window {c.window[0]}:{c.window[1]}")
    lines.extend(f"gen {g.name} deg={g.degree} action={format_rational(g.action)}" for g in c.generators)
    lines.extend(f"bnd {e.source} {e.target} {c.ring.format(e.coeff)}" for e in c.boundary)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# 클래스
# ---------------------------------------------------------------------------

def parse_classes_text(text: str, c: FilteredComplex, path: Optional[str] = None) -> Dict[str, ChainClass]:
    """
    클래스 파일 파싱

    Returns:
        이름 → ChainClass (파일 순서 유지)
    """
    reader = _Reader(text, path)
    pending: List[Tuple[Line, str, int, List[Tuple[str, Any]]]] = []

    for line in reader.lines:
        if line.keyword == "cls":
            if not line.args:
                raise reader.error("cls 에 이름이 없습니다", line)
            values = reader.key_values(line, line.args[1:], ("deg",))
            name = line.args[0].text
            if any(name == p[1] for p in pending):
                raise reader.error(f"중복 클래스: {name}", line, line.args[0])
            pending.append((line, name, reader.integer(line, *values["deg"]), []))
        elif line.keyword == "term":
            if not pending:
                raise reader.error("term 앞에 cls 선언이 필요합니다", line)
            reader.expect_args(line, 2)
            gen, coeff = line.args
            if gen.text not in c.by_name:
                raise reader.error(f"복합체에 없는 생성원: {gen.text}", line, gen)
            pending[-1][3].append((gen.text, reader.coefficient(c.ring, line, coeff)))
        else:
            raise reader.error(f"알 수 없는 키워드: {line.keyword!r}", line, line.tokens[0])

    return {name: make_chain_class(c, support, degree) for _, name, degree, support in pending}


def parse_classes(path, c: FilteredComplex) -> Dict[str, ChainClass]:
    return parse_classes_text(_read(path), c, str(path))


def parse_class(path, c: FilteredComplex, name: Optional[str] = None) -> ChainClass:
    """파일의 (이름이 주어지면 해당) 첫 클래스"""
    classes = parse_classes(path, c)
    if not classes:
        raise ParseError("클래스 선언이 없습니다", path=str(path))
    if name is None:
        return next(iter(classes.values()))
    if name not in classes:
        raise ParseError(f"클래스 {name!r} 가 없습니다", path=str(path))
    return classes[name]


def emit_class(alpha: ChainClass, name: str = "alpha") -> str:
    ring = alpha.complex.ring
    lines = [f"cls {name} deg={alpha.degree}"]
    lines.extend(f"term {gen} {ring.format(coeff)}" for gen, coeff in alpha.support)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# 사상 / 호모토피
# ---------------------------------------------------------------------------

def _parse_entries(reader: _Reader, header: str, ring: Ring, sources: FilteredComplex,
                   targets: FilteredComplex, allow_shift: bool):
    shift = None
    entries: List[BoundaryEntry] = []
    lines = reader.lines
    if not lines or lines[0].keyword != header:
        raise reader.error(f"첫 줄은 '{header}' 여야 합니다", lines[0] if lines else None)
    for line in lines[1:]:
        if line.keyword == "shift" and allow_shift:
            reader.expect_args(line, 1)
            if shift is not None:
                raise reader.error("shift 가 두 번 나왔습니다", line)
            shift = reader.rational(line, line.args[0].text, line.args[0])
        elif line.keyword == "ent":
            reader.expect_args(line, 3)
            source, target, coeff = line.args
            if source.text not in sources.by_name:
                raise reader.error(f"정의역에 없는 생성원: {source.text}", line, source)
            if target.text not in targets.by_name:
                raise reader.error(f"공역에 없는 생성원: {target.text}", line, target)
            entries.append(BoundaryEntry(source.text, target.text, reader.coefficient(ring, line, coeff)))
        else:
            raise reader.error(f"알 수 없는 키워드: {line.keyword!r}", line, line.tokens[0])
    return shift, entries


def parse_map_text(text: str, source: FilteredComplex, target: FilteredComplex,
                   path: Optional[str] = None) -> FilteredMap:
    """사상 파일 파싱 (shift 필수)"""
    reader = _Reader(text, path)
    shift, entries = _parse_entries(reader, "map", target.ring, source, target, allow_shift=True)
    if shift is None:
        raise ParseError("shift 선언이 없습니다", path=path)
    return FilteredMap(source, target, tuple(entries), shift)


def parse_map(path, source: FilteredComplex, target: FilteredComplex) -> FilteredMap:
    return parse_map_text(_read(path), source, target, str(path))


def emit_map(f: FilteredMap) -> str:
    ring = f.target.ring
    lines = ["map", f"shift {format_rational(f.shift)}"]
    lines.extend(f"ent {e.source} {e.target} {ring.format(ring.normalize(e.coeff))}" for e in f.entries)
    return "\n".join(lines) + "\n"


def parse_homotopy_text(text: str, c: FilteredComplex, path: Optional[str] = None) -> ChainHomotopy:
    reader = _Reader(text, path)
    _, entries = _parse_entries(reader, "htpy", c.ring, c, c, allow_shift=False)
    return ChainHomotopy(c, tuple(entries))


def parse_homotopy(path, c: FilteredComplex) -> ChainHomotopy:
    return parse_homotopy_text(_read(path), c, str(path))


# ---------------------------------------------------------------------------
# 곱 데이터
# ---------------------------------------------------------------------------

def parse_product_text(text: str, factor1: FilteredComplex, factor2: Optional[FilteredComplex] = None,
                       target: Optional[FilteredComplex] = None, path: Optional[str] = None,
                       module: bool = False) -> ProductData:
    """
    곱 파일 파싱

    factor2, target 을 생략하면 factor1 과 같은 복합체 (자기 곱).
    module=True 면 ModuleActionData (factor1 = 주변, factor2 = 가군).
    """
    factor2 = factor2 or factor1
    target = target or factor2
    reader = _Reader(text, path)
    entries = []
    slack = 0
    unit = None
    degree_shift = 0

    names = {"factor1": factor1, "factor2": factor2, "target": target}
    for line in reader.lines:
        if line.keyword == "prod":
            reader.expect_args(line, 4)
            g1, g2, out, coeff = line.args
            for token, (label, c) in zip((g1, g2, out), names.items()):
                if token.text not in c.by_name:
                    raise reader.error(f"{label} 에 없는 생성원: {token.text}", line, token)
            entries.append((g1.text, g2.text, out.text, reader.coefficient(target.ring, line, coeff)))
        elif line.keyword == "slack":
            reader.expect_args(line, 1)
            slack = reader.rational(line, line.args[0].text, line.args[0])
        elif line.keyword == "unit":
            reader.expect_args(line, 1)
            if line.args[0].text not in factor1.by_name:
                raise reader.error(f"factor1 에 없는 단위 생성원: {line.args[0].text}", line, line.args[0])
            unit = line.args[0].text
        elif line.keyword == "dshift":
            reader.expect_args(line, 1)
            degree_shift = reader.integer(line, line.args[0].text, line.args[0])
        else:
            raise reader.error(f"알 수 없는 키워드: {line.keyword!r}", line, line.tokens[0])

    cls = ModuleActionData if module else ProductData
    return cls(factor1, factor2, target, tuple(entries), slack, degree_shift, unit)


def parse_product(path, factor1: FilteredComplex, factor2: Optional[FilteredComplex] = None,
                  target: Optional[FilteredComplex] = None, module: bool = False) -> ProductData:
    return parse_product_text(_read(path), factor1, factor2, target, str(path), module)


def emit_product(p: ProductData) -> str:
    ring = p.ring
    lines = [f"prod {g1} {g2} {out} {ring.format(ring.normalize(coeff))}" for g1, g2, out, coeff in p.entries]
    lines.append(f"slack {format_rational(p.slack)}")
    if p.unit is not None:
        lines.append(f"unit {p.unit}")
    lines.append(f"dshift {p.degree_shift}")
    return "\n".join(lines) + "\n"
