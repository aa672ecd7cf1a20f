"""Plain-text file formats shared by the CLI and the tests.

Every file starts with a ``domain:`` line.  Comment lines start with ``#``;
blank lines are skipped.  Parse errors carry the 1-based line number.
"""

from __future__ import annotations

from .errors import FormatError
from .model import Dimplication, Domain, Implication, ItemSet


def _logical_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_domain_line(line: str, lineno: int = 1) -> Domain:
    if not line.startswith("domain:"):
        raise FormatError("expected a 'domain: <label> ...' line", lineno)
    labels = line[len("domain:"):].split()
    if not labels:
        raise FormatError("domain line lists no items", lineno)
    try:
        return Domain(tuple(labels))
    except FormatError as exc:
        raise FormatError(str(exc), lineno) from None


def serialize_domain_line(domain: Domain) -> str:
    return "domain: " + " ".join(domain.items)


def _split_header(text: str):
    lines = list(_logical_lines(text))
    if not lines:
        raise FormatError("empty file", 1)
    lineno, first = lines[0]
    return parse_domain_line(first, lineno), lines[1:]


def _labels_to_set(domain: Domain, labels, lineno) -> ItemSet:
    try:
        return ItemSet.from_labels(domain, labels)
    except FormatError as exc:
        raise FormatError(str(exc), lineno) from None


def _parse_pair_line(domain: Domain, line: str, arrow: str, lineno: int):
    parts = line.split(arrow)
    if len(parts) != 2:
        raise FormatError(f"expected exactly one {arrow!r}", lineno)
    premise = _labels_to_set(domain, parts[0].split(), lineno)
    conclusion = _labels_to_set(domain, parts[1].split(), lineno)
    # Overlapping conclusion items are vacuous under the satisfaction
    # semantics; normalize them away instead of erroring.
    conclusion = conclusion - premise
    if not conclusion:
        raise FormatError("conclusion empty (or entirely inside the premise)", lineno)
    return premise, conclusion


def parse_dimplications(text: str) -> tuple[Domain, list[Dimplication]]:
    domain, body = _split_header(text)
    out = []
    for lineno, line in body:
        premise, conclusion = _parse_pair_line(domain, line, "~>", lineno)
        if not premise:
            raise FormatError("dimplication premise must be nonempty", lineno)
        out.append(Dimplication(premise, conclusion))
    return domain, out


def serialize_dimplications(domain: Domain, dimps) -> str:
    lines = [serialize_domain_line(domain)]
    lines.extend(str(d) for d in dimps)
    return "\n".join(lines) + "\n"


def parse_implications(text: str) -> tuple[Domain, list[Implication]]:
    domain, body = _split_header(text)
    out = []
    for lineno, line in body:
        premise, conclusion = _parse_pair_line(domain, line, "->", lineno)
        out.append(Implication(premise, conclusion))
    return domain, out


def serialize_implications(domain: Domain, imps) -> str:
    lines = [serialize_domain_line(domain)]
    lines.extend(str(i) for i in imps)
    return "\n".join(lines) + "\n"


def parse_sets(text: str) -> tuple[Domain, list[ItemSet], dict[ItemSet, int]]:
    """Parse a base file: one set per line, optional ``@ <color>`` annotation.

    The empty set is written ``-``.  Returns (domain, sets, colors); colors
    maps annotated sets to the item index of their color and may be empty.
    """
    domain, body = _split_header(text)
    sets, colors = [], {}
    for lineno, line in body:
        color = None
        if "@" in line:
            line, _, tail = line.partition("@")
            tail = tail.split()
            if len(tail) != 1:
                raise FormatError("expected a single color label after '@'", lineno)
            try:
                color = domain.index(tail[0])
            except FormatError as exc:
                raise FormatError(str(exc), lineno) from None
        labels = line.split()
        if labels == ["-"]:
            s = ItemSet.empty(domain)
        else:
            s = _labels_to_set(domain, labels, lineno)
        sets.append(s)
        if color is not None:
            colors[s] = color
    return domain, sets, colors


def serialize_sets(domain: Domain, sets, colors=None) -> str:
    lines = [serialize_domain_line(domain)]
    for s in sets:
        line = " ".join(s.labels()) if s else "-"
        if colors is not None and s in colors:
            line += " @ " + domain.label(colors[s])
        lines.append(line)
    return "\n".join(lines) + "\n"


def parse_rooted_sets(text: str):
    """Parse ``<labels> @ <root>`` lines into RootedSet values."""
    from .model import RootedSet

    domain, body = _split_header(text)
    out = []
    for lineno, line in body:
        head, sep, tail = line.partition("@")
        if not sep:
            raise FormatError("expected '<labels> @ <root>'", lineno)
        carrier = _labels_to_set(domain, head.split(), lineno)
        roots = tail.split()
        if len(roots) != 1:
            raise FormatError("expected a single root label after '@'", lineno)
        try:
            out.append(RootedSet(carrier, domain.index(roots[0])))
        except (FormatError, ValueError) as exc:
            raise FormatError(str(exc), lineno) from None
    return domain, out


def serialize_rooted_sets(domain: Domain, rooted) -> str:
    lines = [serialize_domain_line(domain)]
    lines.extend(str(r) for r in rooted)
    return "\n".join(lines) + "\n"
