"""
Line-oriented instance files.

    NAME <string>
    CLASS <alpha>;<beta>;<gamma>;<delta>
    CAPACITY <number>
    DEPOT <x> <y> <a0> <b0>
    CUSTOMERS <N>
    <id> <x> <y> <demand> <unload> <a> <b> <has_window>

Numbers are written with repr() so that reading a file and writing it back
reproduces it byte for byte.
"""

from __future__ import annotations

from collections.abc import Callable
from pathlib import Path
from typing import TextIO, TypeVar

from vrpstw.errors import InputError, ParseError
from vrpstw.instances.spec import format_spec, parse_spec
from vrpstw.model.instance import Customer, Depot, Instance

T = TypeVar("T")


def _num(value: float) -> str:
    return repr(float(value))


def format_instance(instance: Instance) -> str:
    depot = instance.depot
    lines = [
        f"NAME {instance.name}",
        f"CLASS {format_spec(instance.classification)}",
        f"CAPACITY {_num(instance.capacity)}",
        f"DEPOT {_num(depot.x)} {_num(depot.y)} {_num(depot.a0)} {_num(depot.b0)}",
        f"CUSTOMERS {instance.size}",
    ]
    for c in instance.customers:
        lines.append(
            " ".join(
                (
                    str(c.id),
                    _num(c.x),
                    _num(c.y),
                    _num(c.demand),
                    _num(c.unload),
                    _num(c.window_lo),
                    _num(c.window_hi),
                    "1" if c.has_window else "0",
                )
            )
        )
    return "\n".join(lines) + "\n"


def write_instance(instance: Instance, sink: TextIO) -> None:
    sink.write(format_instance(instance))


def _convert(text: str, kind: Callable[[str], T], what: str, line: int) -> T:
    try:
        return kind(text)
    except ValueError:
        raise ParseError(f"{what} {text!r} is not a valid number", line=line) from None


def parse_instance(text: str) -> Instance:
    """
    Parse the text of an instance file.

    Raises:
        ParseError: with the 1-based line number of the offending line, or
            naming the section that is missing from a truncated file.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()

    def section(index: int, keyword: str, fields: int) -> list[str]:
        if index >= len(lines):
            raise ParseError(f"missing {keyword} section", line=index + 1)
        tokens = lines[index].split(maxsplit=fields if keyword == "NAME" else -1)
        if not tokens or tokens[0] != keyword:
            raise ParseError(f"expected {keyword} section", line=index + 1)
        if len(tokens) != fields + 1:
            raise ParseError(
                f"{keyword} expects {fields} field(s), got {len(tokens) - 1}",
                line=index + 1,
            )
        return tokens[1:]

    (name,) = section(0, "NAME", 1)
    (class_text,) = section(1, "CLASS", 1)
    try:
        classification = parse_spec(class_text)
    except ParseError as exc:
        raise ParseError(f"bad classification: {exc}", line=2) from None
    (capacity_text,) = section(2, "CAPACITY", 1)
    capacity = _convert(capacity_text, float, "capacity", 3)
    depot_fields = [
        _convert(token, float, "depot field", 4) for token in section(3, "DEPOT", 4)
    ]
    (count_text,) = section(4, "CUSTOMERS", 1)
    count = _convert(count_text, int, "customer count", 5)

    customers: list[Customer] = []
    for offset in range(count):
        index = 5 + offset
        line_no = index + 1
        if index >= len(lines):
            raise ParseError(
                f"missing customer record {offset + 1} of {count}", line=line_no
            )
        tokens = lines[index].split()
        if len(tokens) != 8:
            raise ParseError(
                f"customer record needs 8 fields, got {len(tokens)}", line=line_no
            )
        flag = tokens[7]
        if flag not in ("0", "1"):
            raise ParseError(f"has_window must be 0 or 1, got {flag!r}", line=line_no)
        x, y, demand, unload, lo, hi = (
            _convert(token, float, "customer field", line_no) for token in tokens[1:7]
        )
        customers.append(
            Customer(
                id=_convert(tokens[0], int, "customer id", line_no),
                x=x,
                y=y,
                demand=demand,
                unload=unload,
                window_lo=lo,
                window_hi=hi,
                has_window=flag == "1",
            )
        )

    if len(lines) > 5 + count:
        raise ParseError("unexpected content after customer records", line=6 + count)

    a0_x, a0_y, a0, b0 = depot_fields
    try:
        return Instance(
            name=name,
            classification=classification,
            capacity=capacity,
            depot=Depot(x=a0_x, y=a0_y, a0=a0, b0=b0),
            customers=tuple(customers),
        )
    except InputError as exc:
        raise ParseError(f"invalid instance: {exc}") from None


def read_instance(source: TextIO) -> Instance:
    return parse_instance(source.read())


def save_instance(instance: Instance, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_instance(instance), encoding="utf-8")


def load_instance(path: Path) -> Instance:
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8 text: {exc.reason}") from None
    return parse_instance(text)
