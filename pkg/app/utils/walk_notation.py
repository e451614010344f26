"""
Walk notation - compressed ("13576421") and separated ("11,3,5") vertex walks
"""
from typing import Iterable, List, Tuple

from app.core.exceptions import InvalidWalkError
from app.models.cycle import PerfectCycle


def parse_walk(text: str) -> Tuple[int, ...]:
    """
    Parse a closed walk

    Comma- or whitespace-separated labels are read as given; a bare digit
    string is read one digit per vertex, so labels of 10 and above need the
    separated form.

    Raises:
        InvalidWalkError: On empty input or non-numeric labels
    """
    body = text.strip()
    if not body:
        raise InvalidWalkError("Empty walk")
    if "," in body or any(ch.isspace() for ch in body):
        fields = [f for f in body.replace(",", " ").split() if f]
    else:
        fields = list(body)
    if not all(f.isdigit() for f in fields):
        raise InvalidWalkError("Walk labels must be positive integers", details={"walk": text})
    return tuple(int(f) for f in fields)


def parse_perfect_cycle(text: str) -> PerfectCycle:
    return PerfectCycle(parse_walk(text))


def edge_pairs(edges: Iterable[Tuple[int, int]]) -> List[List[int]]:
    return [[u, v] for u, v in sorted(edges)]
