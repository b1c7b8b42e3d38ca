"""graph6 records: short form only (n <= 62), checked byte by byte before networkx decodes them"""

from typing import Iterable, Iterator, Optional

import networkx as nx

from tokenlap.errors import Graph6ParseError, GraphValidationError
from tokenlap.graphs.core import MAX_BASE_ORDER, Graph, from_networkx, to_networkx

GRAPH6_HEADER = ">>graph6<<"
OFFSET = 63


def _validate(record: str, shift: int, line: Optional[int]) -> None:
    if not record:
        raise Graph6ParseError("empty record", offset=shift, line=line)
    for position, char in enumerate(record):
        if not 63 <= ord(char) <= 126:
            raise Graph6ParseError(
                f"character {char!r} outside the graph6 range 63..126",
                offset=shift + position,
                line=line,
            )
    n = ord(record[0]) - OFFSET
    if n == 63:
        raise Graph6ParseError(
            f"long-form header, graphs with more than {MAX_BASE_ORDER} vertices are not supported",
            offset=shift,
            line=line,
        )
    if not 1 <= n <= MAX_BASE_ORDER:
        raise Graph6ParseError(f"vertex count {n} out of range 1..{MAX_BASE_ORDER}", offset=shift, line=line)
    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    body = record[1:]
    if len(body) != expected:
        raise Graph6ParseError(
            f"expected {expected} data bytes for n={n}, found {len(body)}",
            offset=shift + 1 + min(len(body), expected),
            line=line,
        )
    padding = 6 * expected - bit_count
    if body and (ord(body[-1]) - OFFSET) & ((1 << padding) - 1):
        raise Graph6ParseError("nonzero padding bits", offset=shift + len(record) - 1, line=line)


def parse_graph6(text: str, line: Optional[int] = None) -> Graph:
    record = text.strip()
    shift = 0
    if record.startswith(GRAPH6_HEADER):
        record = record[len(GRAPH6_HEADER):]
        shift = len(GRAPH6_HEADER)
    _validate(record, shift, line)
    try:
        decoded = nx.from_graph6_bytes(record.encode("ascii"))
    except (ValueError, nx.NetworkXError) as error:
        raise Graph6ParseError(str(error), offset=shift, line=line) from error
    return from_networkx(decoded)


def write_graph6(g: Graph) -> str:
    if g.n > MAX_BASE_ORDER:
        raise GraphValidationError(
            f"graph6 short form holds at most {MAX_BASE_ORDER} vertices, got {g.n}"
        )
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple]:
    """(line number, Graph) for each non-blank record, line numbers are 1-based"""
    for number, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        yield number, parse_graph6(raw, line=number)
