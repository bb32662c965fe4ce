"""Binary division schemes with declared ratio equalities.

A tree file describes a chain of binary splits: at each step one species
is kept (the division continues through it) and one is dropped.  A logos
line declares that the drop/keep ratio at one step equals the ratio at a
later step; all declarations must agree on the step distance, which is
the implied period of the chain.

File format (UTF-8, LF, ``#`` starts a comment, blank lines ignored)::

    tree <Name>
    root <label>
    step <n> keep <Id> <label...>
    step <n> drop <Id> <label...>
    logos <DropId>/<KeepId> = <DropId>/<KeepId>

Steps are consecutive from 1, two lines each; ids are unique tokens of
word characters.  Parsing is total: any input either yields a tree or a
TreeParseError carrying the offending line number.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class TreeParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


_ID_RE = re.compile(r"^\w+$")
_LOGOS_RE = re.compile(r"^(\w+)/(\w+)=(\w+)/(\w+)$")


@dataclass(frozen=True)
class DivisionNode:
    id: str
    label: str
    step: int
    side: str  # "keep" or "drop"


@dataclass(frozen=True)
class LogosDecl:
    """Equality of the drop/keep ratio at two steps."""

    lhs_drop: str
    lhs_keep: str
    rhs_drop: str
    rhs_keep: str

    def __str__(self) -> str:
        return f"{self.lhs_drop}/{self.lhs_keep} = {self.rhs_drop}/{self.rhs_keep}"


@dataclass(frozen=True)
class DivisionTree:
    name: str
    root_label: str
    nodes: tuple[DivisionNode, ...]
    logoi: tuple[LogosDecl, ...]

    @property
    def step_count(self) -> int:
        return len(self.nodes) // 2

    def node(self, node_id: str) -> DivisionNode:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise KeyError(node_id)


def parse_tree(text: str) -> DivisionTree:
    """Parse the line-based tree format; never raises anything but
    TreeParseError, whatever the input bytes."""
    name: str | None = None
    root: str | None = None
    nodes: dict[str, tuple[DivisionNode, int]] = {}
    logoi: list[tuple[LogosDecl, int]] = []
    by_step: dict[int, dict[str, int]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword, rest = tokens[0], tokens[1:]

        if keyword == "tree":
            if name is not None:
                raise TreeParseError(lineno, "duplicate tree line")
            if not rest:
                raise TreeParseError(lineno, "tree line needs a name")
            name = " ".join(rest)
        elif keyword == "root":
            if name is None:
                raise TreeParseError(lineno, "root before tree line")
            if root is not None:
                raise TreeParseError(lineno, "duplicate root line")
            if not rest:
                raise TreeParseError(lineno, "root line needs a label")
            root = " ".join(rest)
        elif keyword == "step":
            if len(rest) < 3:
                raise TreeParseError(lineno, "step line needs: number, side, id, label")
            try:
                step = int(rest[0])
            except ValueError:
                raise TreeParseError(lineno, f"bad step number {rest[0]!r}") from None
            if step < 1:
                raise TreeParseError(lineno, f"bad step number {step}")
            side = rest[1]
            if side not in ("keep", "drop"):
                raise TreeParseError(lineno, f"side must be keep or drop, got {side!r}")
            node_id = rest[2]
            if not _ID_RE.match(node_id):
                raise TreeParseError(lineno, f"bad node id {node_id!r}")
            if node_id in nodes:
                raise TreeParseError(lineno, f"duplicate id {node_id}")
            label = " ".join(rest[3:])
            sides = by_step.setdefault(step, {})
            if side in sides:
                raise TreeParseError(lineno, f"step {step} already has a {side} node")
            sides[side] = lineno
            nodes[node_id] = (DivisionNode(node_id, label, step, side), lineno)
        elif keyword == "logos":
            compact = "".join(rest)
            m = _LOGOS_RE.match(compact)
            if not m:
                raise TreeParseError(
                    lineno, "malformed logos line (want DropId/KeepId = DropId/KeepId)"
                )
            logoi.append((LogosDecl(*m.groups()), lineno))
        else:
            raise TreeParseError(lineno, f"unknown directive {keyword!r}")

    if name is None:
        raise TreeParseError(1, "missing tree line")
    if root is None:
        raise TreeParseError(1, "missing root line")

    steps = sorted(by_step)
    if steps != list(range(1, len(steps) + 1)):
        missing = next(i for i in range(1, len(steps) + 2) if i not in by_step)
        witness = min(
            lineno for s in by_step if s > missing for lineno in by_step[s].values()
        )
        raise TreeParseError(
            witness, f"steps are not consecutive: step {missing} missing"
        )
    for step, sides in by_step.items():
        for side in ("keep", "drop"):
            if side not in sides:
                other = next(iter(sides.values()))
                raise TreeParseError(other, f"step {step} is missing its {side} node")

    for decl, lineno in logoi:
        for node_id in (decl.lhs_drop, decl.lhs_keep, decl.rhs_drop, decl.rhs_keep):
            if node_id not in nodes:
                raise TreeParseError(lineno, f"unknown node {node_id}")

    ordered = sorted(
        (node for node, _ in nodes.values()),
        key=lambda n: (n.step, n.side != "keep"),
    )
    return DivisionTree(name, root, tuple(ordered), tuple(d for d, _ in logoi))


def render_tree(tree: DivisionTree) -> str:
    """Canonical text for a tree; parse_tree(render_tree(t)) == t."""
    lines = [f"tree {tree.name}", f"root {tree.root_label}"]
    for node in tree.nodes:
        label = f" {node.label}" if node.label else ""
        lines.append(f"step {node.step} {node.side} {node.id}{label}")
    for decl in tree.logoi:
        lines.append(
            f"logos {decl.lhs_drop}/{decl.lhs_keep} = {decl.rhs_drop}/{decl.rhs_keep}"
        )
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DeclCheck:
    lhs: str
    rhs: str
    lhs_step: int
    rhs_step: int
    period: int
    sibling_ok: bool


@dataclass(frozen=True)
class LogosReport:
    """Outcome of checking a tree's declarations.

    ``period`` is the common step distance of the declarations (None if
    there are none, or if they disagree).  ``dialectic_number`` counts
    the ratio classes of the whole chain: declarations merge their two
    steps into one class, undeclared steps stand alone, plus one.
    """

    valid: bool
    period: int | None
    declarations: tuple[DeclCheck, ...]
    covered_steps: tuple[int, ...]
    dialectic_number: int
    errors: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "period": self.period,
            "declarations": [
                {
                    "lhs": d.lhs,
                    "rhs": d.rhs,
                    "lhs_step": d.lhs_step,
                    "rhs_step": d.rhs_step,
                    "period": d.period,
                    "sibling_ok": d.sibling_ok,
                }
                for d in self.declarations
            ],
            "covered_steps": list(self.covered_steps),
            "dialectic_number": self.dialectic_number,
            "errors": list(self.errors),
        }


def check_logos(tree: DivisionTree) -> LogosReport:
    """Validate the declared ratio equalities of a tree.

    Each declaration must pair a drop node with its keep sibling on both
    sides, with the left step strictly earlier; all declarations must
    imply one common period.  Never raises on parse_tree output;
    problems are returned in the report.
    """
    errors: list[str] = []
    checks: list[DeclCheck] = []
    merged: dict[int, int] = {}

    def find(step: int) -> int:
        while merged.get(step, step) != step:
            step = merged[step]
        return step

    for decl in tree.logoi:
        sibling_ok = True
        steps = []
        for drop_id, keep_id in ((decl.lhs_drop, decl.lhs_keep), (decl.rhs_drop, decl.rhs_keep)):
            drop, keep = tree.node(drop_id), tree.node(keep_id)
            if drop.step != keep.step:
                errors.append(f"{decl}: {drop_id} and {keep_id} are not at one step")
                sibling_ok = False
            if drop.side != "drop" or keep.side != "keep":
                errors.append(f"{decl}: {drop_id}/{keep_id} is not a drop/keep pair")
                sibling_ok = False
            steps.append(drop.step)
        lhs_step, rhs_step = steps
        if sibling_ok and lhs_step >= rhs_step:
            errors.append(f"{decl}: left step {lhs_step} not before right step {rhs_step}")
            sibling_ok = False
        checks.append(
            DeclCheck(
                f"{decl.lhs_drop}/{decl.lhs_keep}",
                f"{decl.rhs_drop}/{decl.rhs_keep}",
                lhs_step,
                rhs_step,
                rhs_step - lhs_step,
                sibling_ok,
            )
        )
        if sibling_ok:
            merged[find(rhs_step)] = find(lhs_step)

    periods = {c.period for c in checks if c.sibling_ok}
    period: int | None = None
    if len(periods) == 1:
        period = periods.pop()
    elif len(periods) > 1:
        listed = ", ".join(map(str, sorted(periods)))
        errors.append(f"inconsistent periods across declarations: {listed}")

    covered = sorted({s for c in checks for s in (c.lhs_step, c.rhs_step)})
    classes = {find(step) for step in range(1, tree.step_count + 1)}
    return LogosReport(
        valid=not errors,
        period=period,
        declarations=tuple(checks),
        covered_steps=tuple(covered),
        dialectic_number=len(classes) + 1,
        errors=tuple(errors),
    )
