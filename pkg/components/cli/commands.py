"""
Command implementations behind main.py.

Each command returns a CommandResult: the plain-text rendering, the JSON
mirror and the exit code. Nothing here prints.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from services.coxeter_system import (
    CoxeterError, CoxeterMatrixError, GroupSpec, GroupSpecError, from_named_type, is_known_finite,
    load_group_spec
)
from services.descent_calculus import DescentCalculus, MaskParseError, format_mask, parse_mask
from services.element_engine import CapExceededError, CoxeterGroup, NormalFormError, WordParseError
from services.hasse import hasse_diagram
from services.oracle_models import UnsupportedTypeError, oracle_check
from services.root_geometry import DegenerateSignError
from services.theorem_suite import (
    STATEMENT_ALIASES, STATEMENTS, Status, TheoremSuite, resolve_statement, summarize
)
from utils.config import settings

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_NUMERIC = 4


class UsageError(CoxeterError):
    """Command-line arguments are inconsistent"""
    pass


def exit_code_for(error: Exception) -> int:
    """Map a domain exception onto the CLI exit-code contract"""
    if isinstance(error, UnsupportedTypeError):
        return EXIT_UNSUPPORTED
    if isinstance(error, (DegenerateSignError, CapExceededError, NormalFormError)):
        return EXIT_NUMERIC
    if isinstance(error, (WordParseError, MaskParseError, GroupSpecError, CoxeterMatrixError, UsageError)):
        return EXIT_USAGE
    return EXIT_USAGE


@dataclass
class CommandResult:
    text: str
    payload: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = EXIT_OK


@dataclass
class GroupContext:
    """A resolved group together with the cap the user asked for"""
    spec: GroupSpec
    group: CoxeterGroup
    calculus: DescentCalculus
    cap: int
    explicit_cap: bool

    @property
    def finite(self) -> bool:
        return is_known_finite(self.spec.matrix)

    def require_enumerable(self) -> None:
        """Enumeration of a group not known to be finite needs an explicit cap"""
        if not self.finite and not self.explicit_cap:
            raise UsageError(
                f"{self.group.name} is not known to be finite; pass --cap to bound the enumeration")

    def envelope(self, command: str, **payload: Any) -> Dict[str, Any]:
        document = {"schema": SCHEMA_VERSION, "command": command, "group": self.group.name}
        document.update(payload)
        return document


def resolve_group(type_name: Optional[str], group_file: Optional[str], cap: Optional[int]) -> GroupContext:
    """
    Build the group for one invocation.

    The normal-form cap is raised to 2·cap+1 so conjugates of ball elements
    never hit it.
    """
    if bool(type_name) == bool(group_file):
        raise UsageError("exactly one of --type and --group-file is required")
    spec = GroupSpec(from_named_type(type_name)) if type_name else load_group_spec(group_file)
    return context_for_spec(spec, cap)


def context_for_spec(spec: GroupSpec, cap: Optional[int] = None) -> GroupContext:
    explicit = cap is not None or spec.cap is not None
    length_cap = cap if cap is not None else spec.cap if spec.cap is not None else settings.length_cap
    group = CoxeterGroup(spec.matrix, length_cap=max(settings.normalize_cap, 2 * length_cap + 1))
    logger.info(f"Resolved {group.name} with length cap {length_cap}")
    return GroupContext(spec, group, DescentCalculus(group), length_cap, explicit)


# -- element queries --------------------------------------------------------

def cmd_nf(context: GroupContext, word: str) -> CommandResult:
    group = context.group
    w = group.parse_element(word)
    text = f"{group.format_element(w)}, length {w.length}"
    return CommandResult(text, context.envelope(
        "nf", input=word, normal_form=group.format_element(w), word=list(w.word), length=w.length))


def cmd_descents(context: GroupContext, word: str) -> CommandResult:
    group = context.group
    w = group.parse_element(word)
    right = [group.matrix.labels[s] for s in sorted(group.right_descents(w))]
    left = [group.matrix.labels[s] for s in sorted(group.left_descents(w))]
    text = f"right: {{{', '.join(right)}}}\nleft: {{{', '.join(left)}}}"
    return CommandResult(text, context.envelope(
        "descents", element=group.format_element(w), right=right, left=left))


def cmd_inversions(context: GroupContext, word: str, side: str = "left") -> CommandResult:
    group, calculus = context.group, context.calculus
    w = group.parse_element(word)
    if side == "left":
        reflections = calculus.left_inversions(w)
    elif side == "right":
        reflections = calculus.right_inversions(w)
    else:
        raise UsageError(f"side must be 'left' or 'right', got {side!r}")
    lines = [group.format_element(t) for t in reflections]
    return CommandResult("\n".join(lines), context.envelope(
        "inversions", element=group.format_element(w), side=side, reflections=lines))


def cmd_project(context: GroupContext, word: str, mask_text: str) -> CommandResult:
    group, calculus = context.group, context.calculus
    w = group.parse_element(word)
    mask = parse_mask(mask_text, group.matrix)
    factorization = calculus.project(w, mask)
    quotient, parabolic = factorization.quotient_part, factorization.parabolic_part
    text = (f"w^J = {group.format_element(quotient)} (length {quotient.length})\n"
            f"w_J = {group.format_element(parabolic)} (length {parabolic.length})")
    return CommandResult(text, context.envelope(
        "project", element=group.format_element(w), mask=format_mask(mask, group.matrix),
        quotient=group.format_element(quotient), parabolic=group.format_element(parabolic),
        quotient_length=quotient.length, parabolic_length=parabolic.length))


# -- sweeps and exports -----------------------------------------------------

def cmd_enumerate(context: GroupContext) -> CommandResult:
    context.require_enumerable()
    group = context.group
    universe = context.calculus.enumerate(context.cap)
    lines = [f"{w.length}\t{group.format_element(w)}" for w in universe]
    if universe.truncated:
        lines.append(f"# truncated at length {universe.cap}")
    return CommandResult("\n".join(lines), context.envelope(
        "enumerate", cap=universe.cap, truncated=universe.truncated,
        elements=[group.format_element(w) for w in universe]))


def cmd_verify(context: GroupContext, statement: str, scope: Optional[str] = None,
               seed: Optional[int] = None, samples: Optional[int] = None) -> CommandResult:
    try:
        statement = resolve_statement(statement)
    except ValueError:
        known = list(STATEMENTS) + list(STATEMENT_ALIASES)
        raise UsageError(f"unknown statement '{statement}'; choose from {', '.join(known)} or all")
    context.require_enumerable()
    universe = context.calculus.enumerate(context.cap)
    suite = TheoremSuite(context.calculus, context.cap)
    reports = suite.sweep(statement, universe, scope=scope, seed=seed, samples=samples)
    summary = summarize(reports)

    lines = [f"{name}: pass={counts['pass']} skip={counts['skip']} fail={counts['fail']}"
             for name, counts in summary.items()]
    failures = [r for r in reports if r.status is Status.FAIL]
    lines.extend(r.to_text() for r in failures)
    if universe.truncated:
        lines.append(f"# universe truncated at length {universe.cap}")
    code = EXIT_VERIFICATION_FAILED if failures else EXIT_OK
    return CommandResult("\n".join(lines), context.envelope(
        "verify", statement=statement, universe_size=len(universe), truncated=universe.truncated,
        summary=summary, reports=[r.to_dict() for r in reports]), code)


def cmd_hasse(context: GroupContext, order: str) -> CommandResult:
    context.require_enumerable()
    universe = context.calculus.enumerate(context.cap)
    dot = hasse_diagram(context.calculus, universe, order)
    return CommandResult(dot.rstrip("\n"), context.envelope(
        "hasse", order=order, nodes=len(universe), truncated=universe.truncated, dot=dot))


def cmd_oracle_check(context: GroupContext, samples: str = "exhaustive",
                     seed: Optional[int] = None) -> CommandResult:
    if samples != "exhaustive":
        try:
            count = int(samples)
        except ValueError:
            raise UsageError(f"--samples takes 'exhaustive' or a count, got {samples!r}")
        if count <= 0:
            raise UsageError("--samples must be positive")
        samples = count
    result = oracle_check(context.calculus, samples, seed)
    status = "pass" if result.passed else "fail"
    lines = [f"oracle-check {result.group}: {status} "
             f"({result.elements} elements, {result.pairs} pairs)"]
    lines.extend(result.mismatches)
    code = EXIT_OK if result.passed else EXIT_VERIFICATION_FAILED
    return CommandResult("\n".join(lines), context.envelope("oracle-check", **result.to_dict()), code)
