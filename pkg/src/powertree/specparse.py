"""Parser for the group-spec grammar used on the command line.

    cyclic:N  dihedral:N  quaternion:N  elemabelian:P^K  sym:M  alt:M
    semidirect:P:Q  product:(SPEC)x(SPEC)  perm:D:CYCLES;CYCLES

Cycle notation is 1-based and whitespace-insensitive, e.g. "(1 2 3)(4 5)".
GroupSpec.render() produces canonical text that parses back to an equal spec.
"""

from __future__ import annotations

from .errors import ParseError
from .groups import KINDS, GroupSpec


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.peek() != ch:
            raise ParseError(
                f"found {self.peek()!r}" if self.peek() else "input ended",
                self.pos,
                repr(ch),
            )
        self.pos += 1

    def read_ident(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if self.pos == start:
            raise ParseError("missing group kind", start, "one of " + ", ".join(KINDS))
        return self.text[start : self.pos]

    def read_int(self, what: str) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(f"missing {what}", start, "an integer")
        return int(self.text[start : self.pos])


def _cycles_to_perm(scanner: _Scanner, degree: int) -> tuple[int, ...]:
    """Read one generator: a run of parenthesized cycles, applied in order."""
    perm = list(range(degree))
    saw_cycle = False
    while True:
        scanner.skip_ws()
        if scanner.peek() != "(":
            break
        scanner.pos += 1
        entries: list[int] = []
        while True:
            scanner.skip_ws()
            if scanner.peek() == ")":
                scanner.pos += 1
                break
            pos_before = scanner.pos
            value = scanner.read_int("cycle entry")
            if not 1 <= value <= degree:
                raise ParseError(
                    f"cycle entry {value} outside 1..{degree}", pos_before
                )
            if value in entries:
                raise ParseError(
                    f"repeated entry {value} in one cycle", pos_before
                )
            entries.append(value)
        saw_cycle = True
        if len(entries) > 1:
            mapping = list(range(degree))
            for a, b in zip(entries, entries[1:] + entries[:1]):
                mapping[a - 1] = b - 1
            perm = [mapping[x] for x in perm]
    if not saw_cycle:
        raise ParseError("found no cycle", scanner.pos, "'('")
    return tuple(perm)


def _parse_spec(scanner: _Scanner) -> GroupSpec:
    kind = scanner.read_ident()
    if kind not in KINDS:
        raise ParseError(
            f"unknown group kind {kind!r}",
            scanner.pos - len(kind),
            "one of " + ", ".join(KINDS),
        )
    scanner.expect(":")
    if kind in ("cyclic", "dihedral", "quaternion", "sym", "alt"):
        return GroupSpec(kind, (scanner.read_int("parameter"),))
    if kind == "elemabelian":
        p = scanner.read_int("prime base")
        scanner.expect("^")
        k = scanner.read_int("exponent")
        return GroupSpec(kind, (p, k))
    if kind == "semidirect":
        p = scanner.read_int("first prime")
        scanner.expect(":")
        q = scanner.read_int("second prime")
        return GroupSpec(kind, (p, q))
    if kind == "product":
        scanner.expect("(")
        left = _parse_spec(scanner)
        scanner.expect(")")
        scanner.expect("x")
        scanner.expect("(")
        right = _parse_spec(scanner)
        scanner.expect(")")
        return GroupSpec(kind, factors=(left, right))
    # perm:D:CYCLES;CYCLES
    degree = scanner.read_int("degree")
    scanner.expect(":")
    generators = [_cycles_to_perm(scanner, degree)]
    while True:
        scanner.skip_ws()
        if scanner.peek() != ";":
            break
        scanner.pos += 1
        generators.append(_cycles_to_perm(scanner, degree))
    return GroupSpec("perm", (degree,), generators=tuple(generators))


def parse_group_spec(text: str) -> GroupSpec:
    """Parse group-spec text; raises ParseError with position and expectation."""
    scanner = _Scanner(text)
    spec = _parse_spec(scanner)
    scanner.skip_ws()
    if scanner.pos != len(scanner.text):
        raise ParseError(
            f"unexpected trailing text {scanner.text[scanner.pos:]!r}",
            scanner.pos,
            "end of input",
        )
    return spec
