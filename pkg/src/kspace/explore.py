"""Expert-query exploration: carve a space out of the powerset query by query.

A query (A, q) asks "does every state disjoint from A avoid q?".  A yes
removes the chunk {S : A∩S=∅, q∈S} from the current family; a no is only
recorded.  Candidates are enumerated by ascending premise size with
already-settled queries skipped, so with a_max = w−1 against a truthful
oracle the final family equals the hidden space exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .basetools import BaseFamily, base_from_rows, is_learning_space
from .eengine import remove_chunk
from .errors import KspaceError
from .model import Dimplication, Domain, ItemSet
from .rows import RowFamily, restrict_rows


class StaleQueryError(KspaceError):
    """An answer arrived for a query that is not the pending one."""


def oracle_answer(hidden: BaseFamily, a: ItemSet, q: int) -> bool:
    """True iff A⇝{q} holds in the space generated by the hidden base.

    Every state containing q includes a base set containing q, so validity
    reduces to: each hidden base set containing q meets A.
    """
    if a.has_index(q):
        raise KspaceError("query item must lie outside the premise")
    return all(p.mask & a.mask for p in hidden.sets if p.mask >> q & 1)


def _candidate_stream(domain: Domain, a_max: int):
    w = domain.w
    for size in range(1, a_max + 1):
        for combo in itertools.combinations(range(w), size):
            mask = sum(1 << i for i in combo)
            for q in range(w):
                if not mask >> q & 1:
                    yield mask, q


@dataclass
class ExplorationSession:
    """Live state of one exploration run.

    The rows always denote K(accepted); the base is recomputed from the
    rows after every acceptance; rejected queries are never re-asked and
    the denoted family only shrinks.
    """

    session_id: str
    domain: Domain
    mode: str = "human"  # "oracle" sessions additionally carry hidden_base
    hidden_base: BaseFamily | None = None
    a_max: int | None = None
    rows: RowFamily = None
    base: BaseFamily = None
    accepted: list[Dimplication] = field(default_factory=list)
    rejected: list[tuple[int, int]] = field(default_factory=list)
    pending: tuple[int, int] | None = None
    status: str = "running"
    ls_warning: bool = False

    def __post_init__(self):
        if self.mode not in ("oracle", "human"):
            raise KspaceError(f"bad session mode {self.mode!r}")
        if self.mode == "oracle" and self.hidden_base is None:
            raise KspaceError("oracle mode needs a hidden base")
        if self.a_max is None:
            self.a_max = self.domain.w - 1
        if self.rows is None:
            self.rows = RowFamily.powerset(self.domain)
        if self.base is None:
            self.base = base_from_rows(self.rows)
        self._cursor = _candidate_stream(self.domain, self.a_max)
        self._replay()

    def _replay(self):
        """Fast-forward the candidate cursor past queries already settled."""
        if self.pending is None:
            return
        target = self.pending
        self.pending = None
        for mask, q in self._cursor:
            if (mask, q) == target:
                self.pending = target
                return
        raise KspaceError("snapshot pending query not in candidate order")

    def stats(self) -> dict:
        return {
            "states": str(self.rows.count()),
            "rows": len(self.rows.rows),
            "base": len(self.base.sets),
            "accepted": len(self.accepted),
        }

    def _informative(self, mask: int, q: int) -> bool:
        """A query is informative iff its chunk D is nonempty right now."""
        contain = ItemSet.from_indices(self.domain, [q])
        avoid = ItemSet(self.domain, mask)
        return restrict_rows(self.rows, contain, avoid).count() > 0

    def next_query(self) -> tuple[ItemSet, int] | None:
        """The pending query, advancing past settled candidates; None when done."""
        if self.status != "running":
            return None
        if self.pending is None:
            rejected = set(self.rejected)
            for mask, q in self._cursor:
                if (mask, q) in rejected:
                    continue
                if not self._informative(mask, q):
                    continue
                self.pending = (mask, q)
                break
            else:
                self.status = "finished"
                return None
        mask, q = self.pending
        return ItemSet(self.domain, mask), q

    def whatif(self, a: ItemSet, q: int) -> int:
        """State count if (a, q) were accepted; the session is untouched."""
        return remove_chunk(self.rows, a, q).count()

    def apply_answer(self, a: ItemSet, q: int, accept: bool) -> dict:
        if self.pending is None or self.pending != (a.mask, q):
            raise StaleQueryError(
                f"answer for ({a}, {self.domain.label(q)}) does not match the pending query"
            )
        self.pending = None
        if accept:
            self.rows = remove_chunk(self.rows, a, q)
            self.accepted.append(
                Dimplication(a, ItemSet.from_indices(self.domain, [q]))
            )
            self.base = base_from_rows(self.rows)
            ok, _ = is_learning_space(self.base)
            self.ls_warning = not ok
        else:
            self.rejected.append((a.mask, q))
        return self.stats()


def run_exploration(
    hidden: BaseFamily,
    a_max: int | None = None,
    max_rows: int = 200_000,
) -> ExplorationSession:
    """Drive a full oracle-mode session until no candidates remain.

    When the row family outgrows `max_rows` the session is aborted with
    status "aborted" and returned as a flagged partial result.
    """
    session = ExplorationSession(
        session_id="local",
        domain=hidden.domain,
        mode="oracle",
        hidden_base=hidden,
        a_max=a_max,
    )
    while True:
        nq = session.next_query()
        if nq is None:
            break
        a, q = nq
        session.apply_answer(a, q, oracle_answer(hidden, a, q))
        if len(session.rows.rows) > max_rows:
            session.status = "aborted"
            break
    return session


# --- plain-text snapshot -------------------------------------------------

def snapshot_text(session: ExplorationSession) -> str:
    lines = ["domain: " + " ".join(session.domain.items)]
    lines.append(f"id: {session.session_id}")
    lines.append(f"mode: {session.mode}")
    lines.append(f"a_max: {session.a_max}")
    lines.append(f"status: {session.status}")
    if session.pending is not None:
        mask, q = session.pending
        pend = ItemSet(session.domain, mask)
        lines.append(
            "pending: " + " ".join(pend.labels()) + " ~> " + session.domain.label(q)
        )
    for row in session.rows.rows:
        lines.append("row: " + str(row))
    for d in session.accepted:
        lines.append("accepted: " + str(d))
    for mask, q in session.rejected:
        rej = ItemSet(session.domain, mask)
        lines.append(
            "rejected: " + " ".join(rej.labels()) + " ~> " + session.domain.label(q)
        )
    if session.hidden_base is not None:
        for s in session.hidden_base.sets:
            lines.append("hidden: " + " ".join(s.labels()))
    return "\n".join(lines) + "\n"


def snapshot_load(text: str) -> ExplorationSession:
    from .fileio import parse_domain_line
    from .rows import E_MODE, SymbolRow, _GROUP_BASE

    fields: dict[str, str] = {}
    rows, accepted_lines, rejected_lines, hidden_lines = [], [], [], []
    domain = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if key == "domain":
            domain = parse_domain_line(line, lineno)
        elif key == "row":
            rows.append(value)
        elif key == "accepted":
            accepted_lines.append(value)
        elif key == "rejected":
            rejected_lines.append(value)
        elif key == "hidden":
            hidden_lines.append(value)
        else:
            fields[key] = value
    if domain is None:
        raise KspaceError("snapshot missing its domain line")

    def parse_row(tokens: str) -> SymbolRow:
        cells = []
        for tok in tokens.split():
            if tok in ("0", "1", "2"):
                cells.append(int(tok))
            else:
                cells.append(_GROUP_BASE + int(tok[1:]) - 1)
        return SymbolRow.make(E_MODE, cells)

    def parse_query(line: str) -> tuple[int, int]:
        left, _, right = line.partition("~>")
        a = ItemSet.from_labels(domain, left.split())
        return a.mask, domain.index(right.strip())

    hidden = None
    if hidden_lines:
        hidden = BaseFamily(
            domain,
            tuple(ItemSet.from_labels(domain, l.split()) for l in hidden_lines),
        )
    accepted = []
    for line in accepted_lines:
        mask, q = parse_query(line)
        accepted.append(
            Dimplication(ItemSet(domain, mask), ItemSet.from_indices(domain, [q]))
        )
    pending = parse_query(fields["pending"]) if "pending" in fields else None
    session = ExplorationSession(
        session_id=fields.get("id", "restored"),
        domain=domain,
        mode=fields.get("mode", "human"),
        hidden_base=hidden,
        a_max=int(fields["a_max"]),
        rows=RowFamily(domain, E_MODE, tuple(parse_row(r) for r in rows)),
        accepted=accepted,
        rejected=[parse_query(l) for l in rejected_lines],
        pending=pending,
        status=fields.get("status", "running"),
    )
    return session
