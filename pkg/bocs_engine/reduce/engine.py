from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import ClassVar

import pandas as pd

from bocs_engine.config import MAX_ARROWS, MAX_STEPS, PLAN_NODES
from bocs_engine.dbq import DifferentialBiquiver
from bocs_engine.errors import MoveError
from bocs_engine.logger import logger
from bocs_engine.reduce.moves import (
    Superfluous,
    eliminable_match,
    eliminate_relation_arrow,
    find_superfluous,
    free_loop,
    live_solid_arrows,
    minimal_edge_reduce,
    reducible,
    regularise,
    superfluous_match,
)

REGULARISE = "regularise"
MINIMAL_EDGE = "reduce"
ELIMINATE = "eliminate"
AUTO = "auto"

# Script keyword -> move kind
MOVE_KINDS = {
    "regularise": REGULARISE,
    "regularize": REGULARISE,
    "reduce": MINIMAL_EDGE,
    "eliminate": ELIMINATE,
    "auto": AUTO,
}


@dataclass(frozen=True)
class ReductionMove:
    """One step of a reduction run, or a script directive.

    Attributes:
        kind: One of ``regularise``, ``reduce``, ``eliminate`` or ``auto``.
        arrow: The arrow the move acts on. ``*`` with ``regularise`` means "while possible";
            ``auto`` takes no arrow.
        counts: The (vertices, arrows) expected after the move. Before a move with
            counts, a replay inserts the regularisations that make the counts come out.
    """

    kind: str
    arrow: str = ""
    counts: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        # Check that a valid move has been requested
        if self.kind not in MOVE_KINDS.values():
            raise ValueError(f"Unknown move '{self.kind}'. Use one of {sorted(set(MOVE_KINDS))}")
        if self.kind != AUTO and not self.arrow:
            raise ValueError(f"The move '{self.kind}' needs an arrow")
        if self.counts is not None and (self.kind == AUTO or min(self.counts) < 0):
            raise ValueError(f"Cannot expect the counts {self.counts} after '{self.kind}'")

    @classmethod
    def from_line(cls, line: str) -> ReductionMove:
        """Read ``reduce a``, ``regularise b_52``, ``regularise *``, ``eliminate d_45`` or ``auto``.

        A move may end with ``@ VERTICES ARROWS``, as in ``reduce c @ 8 85``.
        """
        move, _, expected = line.partition("@")
        words = move.split()
        if not words or words[0] not in MOVE_KINDS:
            raise ValueError(f"Cannot read the move '{line.strip()}'")
        kind = MOVE_KINDS[words[0]]
        counts = None
        if expected:
            numbers = expected.split()
            if len(numbers) != 2 or not all(n.isdigit() for n in numbers):
                raise ValueError(f"Expected '@ VERTICES ARROWS', got '@{expected}'")
            counts = (int(numbers[0]), int(numbers[1]))
        if kind == AUTO:
            if len(words) != 1:
                raise ValueError("'auto' takes no arrow")
            return cls(AUTO, counts=counts)
        if len(words) != 2:
            raise ValueError(f"'{words[0]}' takes exactly one arrow")
        return cls(kind, words[1], counts)

    def describe(self) -> str:
        if self.kind == REGULARISE:
            return f"regularisation at {self.arrow}"
        if self.kind == MINIMAL_EDGE:
            return f"minimal edge reduction at {self.arrow}"
        if self.kind == ELIMINATE:
            return f"removing {self.arrow}"
        return "default strategy"

    def __str__(self) -> str:
        text = f"{self.kind} {self.arrow}".strip()
        if self.counts is not None:
            text += f" @ {self.counts[0]} {self.counts[1]}"
        return text


# ------------------------------ Log ------------------------------ #


@dataclass(frozen=True)
class LogRow:
    step: int
    move: str
    vertices: int
    arrows: int


@dataclass
class ReductionLog:
    """Vertex and arrow counts after every move, starting with the initial bocs."""

    rows: list[LogRow] = field(default_factory=list)

    @classmethod
    def start(cls, dbq: DifferentialBiquiver) -> ReductionLog:
        log = cls()
        log.record("start", dbq)
        return log

    def record(self, move: str, dbq: DifferentialBiquiver) -> None:
        vertices, arrows = dbq.counts()
        self.rows.append(LogRow(len(self.rows), move, vertices, arrows))

    @property
    def final(self) -> LogRow | None:
        return self.rows[-1] if self.rows else None

    def __len__(self) -> int:
        return len(self.rows)

    def grouped(self) -> ReductionLog:
        """Collapse every run of consecutive regularisations into one row."""
        grouped = ReductionLog()
        run: list[LogRow] = []

        def _flush() -> None:
            if not run:
                return
            move = run[0].move if len(run) == 1 else "regularisations"
            grouped.rows.append(LogRow(len(grouped.rows), move, run[-1].vertices, run[-1].arrows))
            run.clear()

        for row in self.rows:
            if row.move.startswith("regularisation at"):
                run.append(row)
                continue
            _flush()
            grouped.rows.append(LogRow(len(grouped.rows), row.move, row.vertices, row.arrows))
        _flush()
        return grouped

    def to_records(self) -> list[dict]:
        return [
            {"step": r.step, "move": r.move, "vertices": r.vertices, "arrows": r.arrows}
            for r in self.rows
        ]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            self.to_records(), columns=["step", "move", "vertices", "arrows"]
        ).set_index("step")


# ------------------------------ Provenance ------------------------------ #


@dataclass
class VertexProvenance:
    """The multiset of original vertices behind every vertex of a reduced bocs.

    Reducing ``a: i -> j`` gives the new vertex the union of the supports of i and j.
    For a bocs of Delta-filtered modules a vertex with support {j: m, ...} stands for an
    indecomposable with m subfactors Delta(j).
    """

    originals: list[str]
    support: dict[str, Counter] = field(default_factory=dict)

    @classmethod
    def initial(cls, vertices: list[str]) -> VertexProvenance:
        return cls(list(vertices), {v: Counter({v: 1}) for v in vertices})

    def merge(self, fresh: str, source: str, target: str) -> None:
        self.support[fresh] = self.support[source] + self.support[target]

    def multiplicities(self, vertex: str) -> tuple[int, ...]:
        """The support of ``vertex`` as a vector over the original vertices."""
        counts = self.support[vertex]
        return tuple(counts.get(v, 0) for v in self.originals)

    def label(self, vertex: str) -> str:
        counts = self.support[vertex]
        return "{" + ",".join(
            v if counts[v] == 1 else f"{v}^{counts[v]}" for v in self.originals if counts[v]
        ) + "}"


# ------------------------------ Verdicts ------------------------------ #


@dataclass
class Verdict:
    """How a reduction run ended, with the bocs it ended on."""

    dbq: DifferentialBiquiver
    reason: str = ""

    kind: ClassVar[str] = "verdict"

    def __str__(self) -> str:
        vertices, arrows = self.dbq.counts()
        text = f"{self.kind}: {vertices} vertices, {arrows} arrows"
        return f"{text} ({self.reason})" if self.reason else text


class Terminal(Verdict):
    """No solid arrows outside the ideal remain; vertices are the indecomposables."""

    kind = "terminal"


class LoopEncountered(Verdict):
    """Only solid loops or obstructed arrows remain, or a free loop was found."""

    kind = "loop"


class LimitExceeded(Verdict):
    kind = "limit"


class Stopped(Verdict):
    """A script ended before the bocs became terminal."""

    kind = "stopped"


def classify(dbq: DifferentialBiquiver) -> Verdict:
    """Terminal when no live solid arrows remain, otherwise Stopped."""
    live = live_solid_arrows(dbq)
    if not live:
        return Terminal(dbq)
    return Stopped(dbq, f"live solid arrows remain: {', '.join(live)}")


# ------------------------------ Strategy ------------------------------ #


def step_strategy(dbq: DifferentialBiquiver) -> ReductionMove | Verdict:
    """The next move of the default strategy, or a verdict when none applies.

    Elimination comes first, then regularisation, then minimal edge reduction of the
    solid arrow with zero differential that is least in (source, target, name).
    """
    match = eliminable_match(dbq)
    if match is not None:
        return ReductionMove(ELIMINATE, match.arrow)

    superfluous = find_superfluous(dbq)
    if superfluous is not None:
        return ReductionMove(REGULARISE, superfluous.arrow)

    loop = free_loop(dbq)
    if loop is not None:
        return LoopEncountered(dbq, f"the solid loop {loop} carries a one-parameter family")

    quiver = dbq.biquiver
    candidates = sorted(
        (a for a in quiver.solid_arrows if a.source != a.target and dbq.d(a.name).is_zero()),
        key=lambda a: (quiver.position(a.source), quiver.position(a.target), a.name),
    )
    for arrow in candidates:
        if reducible(dbq, arrow.name):
            return ReductionMove(MINIMAL_EDGE, arrow.name)

    live = live_solid_arrows(dbq)
    if not live:
        return Terminal(dbq)
    return LoopEncountered(dbq, f"no reducible solid arrow among {', '.join(live)}")


def apply_move(
    dbq: DifferentialBiquiver, move: ReductionMove, provenance: VertexProvenance | None = None
) -> DifferentialBiquiver:
    """Apply one move, updating ``provenance`` for a minimal edge reduction.

    Raises:
        MoveError: if the move does not apply to ``dbq``.
    """
    if not dbq.biquiver.has_arrow(move.arrow):
        raise MoveError(f"There is no arrow '{move.arrow}'")

    if move.kind == REGULARISE:
        match = superfluous_match(dbq, move.arrow)
        if match is None:
            raise MoveError(f"{move.arrow} is regular: d({move.arrow}) = {dbq.d(move.arrow)}")
        return regularise(dbq, match)

    if move.kind == ELIMINATE:
        match = eliminable_match(dbq, move.arrow)
        if match is None:
            raise MoveError(f"No relation expresses {move.arrow} through other arrows")
        return eliminate_relation_arrow(dbq, match)

    if move.kind == MINIMAL_EDGE:
        if not reducible(dbq, move.arrow):
            raise MoveError(
                f"{move.arrow} is not a solid non-loop with zero differential outside the ideal"
            )
        result = minimal_edge_reduce(dbq, move.arrow)
        if provenance is not None:
            provenance.merge(result.fresh, result.source, result.target)
        return result.dbq

    raise MoveError(f"'{move}' is not a single move")


# ------------------------------ Planning ------------------------------ #


def _weight(dbq: DifferentialBiquiver, move: ReductionMove, name: str) -> int:
    """How many arrows ``name`` becomes after ``move``."""
    if move.kind != MINIMAL_EDGE:
        return 1
    reduced = dbq.biquiver.arrow(move.arrow)
    ends = {reduced.source, reduced.target}
    arrow = dbq.biquiver.arrow(name)
    return 2 ** ((arrow.source in ends) + (arrow.target in ends))


def predicted_counts(dbq: DifferentialBiquiver, move: ReductionMove) -> tuple[int, int]:
    """The (vertices, arrows) of ``apply_move(dbq, move)``, read off the arrow endpoints.

    A minimal edge reduction of a: i -> j adds one vertex, turns every other arrow with
    k endpoints in {i, j} into 2^k arrows and adds the two dashed arrows of the splitting.
    """
    vertices, arrows = dbq.counts()
    if move.kind == REGULARISE:
        return vertices, arrows - 2
    if move.kind == ELIMINATE:
        return vertices, arrows - 1
    if move.kind == MINIMAL_EDGE:
        kept = (a.name for a in dbq.biquiver.arrows if a.name != move.arrow)
        return vertices + 1, 2 + sum(_weight(dbq, move, name) for name in kept)
    raise MoveError(f"'{move}' is not a single move")


class _Budget:
    def __init__(self, nodes: int):
        self.nodes = nodes

    def spend(self) -> None:
        if self.nodes <= 0:
            raise MoveError("Gave up planning the regularisations: too many intermediate bocses")
        self.nodes -= 1


def _fitting_regularisations(dbq: DifferentialBiquiver, move: ReductionMove, budget: _Budget):
    """Every set of regularisations after which ``move`` gives ``move.counts``.

    Yields (regularisations, result of the move). Regularisation keeps all other arrows,
    so each one lowers the predicted arrow count by the weight of its two arrows and the
    search only follows those that do not overshoot.
    """
    if not dbq.biquiver.has_arrow(move.arrow):
        return
    vertices, arrows = move.counts
    seen: set[frozenset[str]] = set()
    # (bocs, regularisations so far, regularisation still to apply)
    stack: list[tuple[DifferentialBiquiver, list[ReductionMove], Superfluous | None]] = [(dbq, [], None)]
    while stack:
        budget.spend()
        current, regularisations, pending = stack.pop()
        if pending is not None:
            current = regularise(current, pending)
        predicted = predicted_counts(current, move)
        if predicted[0] != vertices:
            return
        surplus = predicted[1] - arrows
        if surplus == 0:
            try:
                yield regularisations, apply_move(current, move)
            except MoveError:
                pass
            continue

        names = frozenset(a.name for a in current.biquiver.arrows)
        children = []
        for arrow in current.biquiver.solid_arrows:
            match = superfluous_match(current, arrow.name) if arrow.name != move.arrow else None
            if match is None:
                continue
            if _weight(current, move, match.arrow) + _weight(current, move, match.dashed) > surplus:
                continue
            key = names - {match.arrow, match.dashed}
            if key not in seen:
                seen.add(key)
                step = ReductionMove(REGULARISE, match.arrow)
                children.append((current, regularisations + [step], match))
        stack.extend(reversed(children))


def plan_script(
    dbq: DifferentialBiquiver, moves: list[ReductionMove], max_nodes: int = PLAN_NODES
) -> list[ReductionMove]:
    """Insert regularisations before the moves that carry counts so that a replay
    reproduces them, as in a published table that only lists the reductions.

    Later moves are taken into account: a choice of regularisations that leaves a later
    move without a fit is undone. Planning stops at ``auto``.

    Raises:
        MoveError: if a move without counts is inapplicable, or no choice of
            regularisations fits the counts within ``max_nodes`` intermediate bocses.
    """
    budget = _Budget(max_nodes)

    def _plan(current: DifferentialBiquiver, k: int):
        if k == len(moves) or moves[k].kind == AUTO:
            yield list(moves[k:])
            return
        move = moves[k]
        if move.kind == REGULARISE and move.arrow == "*":
            expanded = []
            while (match := find_superfluous(current)) is not None:
                expanded.append(ReductionMove(REGULARISE, match.arrow))
                current = regularise(current, match)
            if move.counts is not None and current.counts() != move.counts:
                return
            for rest in _plan(current, k + 1):
                yield expanded + [ReductionMove(REGULARISE, "*", move.counts)] + rest
            return
        if move.counts is None:
            after = apply_move(current, move)
            for rest in _plan(after, k + 1):
                yield [move] + rest
            return
        for regularisations, after in _fitting_regularisations(current, move, budget):
            for rest in _plan(after, k + 1):
                yield regularisations + [move] + rest

    for plan in _plan(dbq, 0):
        inserted = len(plan) - len(moves)
        logger.debug(f"{dbq.name}: planned {inserted} regularisations")
        return plan
    raise MoveError(f"No regularisations reproduce the counts of the script for {dbq.name}")


# ------------------------------ Runs ------------------------------ #


@dataclass
class ReductionRun:
    """Verdict, step log and provenance of one run. Unpacks as a triple."""

    verdict: Verdict
    log: ReductionLog
    provenance: VertexProvenance

    def __iter__(self):
        return iter((self.verdict, self.log, self.provenance))


class _Runner:
    def __init__(self, dbq: DifferentialBiquiver, max_steps: int, max_arrows: int):
        self.dbq = dbq
        self.max_steps = max_steps
        self.max_arrows = max_arrows
        self.steps = 0
        self.log = ReductionLog.start(dbq)
        self.provenance = VertexProvenance.initial(dbq.vertices)

    def limit(self) -> Verdict | None:
        if self.steps >= self.max_steps:
            return LimitExceeded(self.dbq, f"reached {self.max_steps} steps")
        arrows = self.dbq.counts()[1]
        if arrows > self.max_arrows:
            return LimitExceeded(self.dbq, f"{arrows} arrows exceed {self.max_arrows}")
        return None

    def apply(self, move: ReductionMove) -> None:
        self.dbq = apply_move(self.dbq, move, self.provenance)
        self.steps += 1
        self.log.record(move.describe(), self.dbq)
        vertices, arrows = self.dbq.counts()
        logger.debug(f"{self.dbq.name} step {self.steps}: {move.describe()} -> ({vertices}, {arrows})")
        self.check_counts(move)

    def check_counts(self, move: ReductionMove) -> None:
        if move.counts is not None and self.dbq.counts() != move.counts:
            raise MoveError(f"{move.describe()} gives {self.dbq.counts()}, expected {move.counts}")

    def auto(self) -> Verdict:
        while True:
            decision = step_strategy(self.dbq)
            if isinstance(decision, Verdict):
                return decision
            limited = self.limit()
            if limited is not None:
                return limited
            self.apply(decision)

    def regularise_all(self) -> Verdict | None:
        while (match := find_superfluous(self.dbq)) is not None:
            limited = self.limit()
            if limited is not None:
                return limited
            self.apply(ReductionMove(REGULARISE, match.arrow))
        return None

    def script(self, moves: list[ReductionMove]) -> Verdict:
        for k, move in enumerate(moves, start=1):
            if move.kind == AUTO:
                return self.auto()
            if move.kind == REGULARISE and move.arrow == "*":
                limited = self.regularise_all()
                if limited is not None:
                    return limited
                self.check_counts(move)
                continue
            limited = self.limit()
            if limited is not None:
                return limited
            try:
                self.apply(move)
            except MoveError as error:
                raise MoveError(f"Script move inapplicable at step {k} ({move}): {error}") from error
        return classify(self.dbq)


def run(
    dbq: DifferentialBiquiver,
    max_steps: int = MAX_STEPS,
    max_arrows: int = MAX_ARROWS,
    script: list[ReductionMove] | None = None,
) -> ReductionRun:
    """Reduce ``dbq`` until a verdict, or replay ``script``.

    Args:
        dbq: The differential biquiver to reduce.
        max_steps: The most moves to apply.
        max_arrows: The most arrows any intermediate bocs may have.
        script: Moves to replay in order. An ``auto`` directive hands over to the
            default strategy; without one the run ends with the last move.
            Moves with counts get the regularisations that reproduce them, see
            ``plan_script``.

    Returns:
        The verdict, the step log and the vertex provenance.

    Raises:
        MoveError: if a scripted move is inapplicable, or its counts cannot be met.
    """
    if script is not None and any(move.counts is not None for move in script):
        script = plan_script(dbq, script)
    runner = _Runner(dbq, max_steps, max_arrows)
    verdict = runner.script(script) if script is not None else runner.auto()
    logger.info(f"{dbq.name}: {verdict} after {runner.steps} moves")
    return ReductionRun(verdict, runner.log, runner.provenance)
