"""
Executable verifiers for the identities relating inversion sets, descents
and parabolic quotients, plus the sweep drivers that run them over finite
groups (or length-capped balls).

Each verifier checks its identity directly from the calculus; none of them
derives its answer from another identity of this module.
"""
import inspect
import itertools
import logging
import random
from collections import Counter, OrderedDict
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from services.coxeter_system import CoxeterError, ParabolicMask
from services.descent_calculus import DescentCalculus, ReflectionSet, Universe
from services.element_engine import GroupElement, NormalFormError
from utils.config import settings

logger = logging.getLogger(__name__)


class PreconditionError(CoxeterError):
    """An instance does not satisfy the hypothesis of the statement"""

    def __init__(self, hypothesis: str, message: str, instance: Optional["Instance"] = None):
        super().__init__(f"{hypothesis}: {message}")
        self.hypothesis = hypothesis
        self.instance = instance


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


@dataclass(frozen=True)
class VerificationReport:
    statement_id: str
    instance: Tuple[Tuple[str, str], ...]
    holds: Optional[bool]
    witness: Optional[str] = None
    skipped: Optional[str] = None
    sort_key: Tuple[Any, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.holds is False and not self.witness:
            raise ValueError(f"failed report for {self.statement_id} needs a witness")
        if self.holds is None and not self.skipped:
            raise ValueError(f"skipped report for {self.statement_id} needs the violated hypothesis")

    @property
    def status(self) -> Status:
        if self.holds is None:
            return Status.SKIP
        return Status.PASS if self.holds else Status.FAIL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "statement_id": self.statement_id,
            "instance": OrderedDict(self.instance),
            "status": self.status.value,
            "holds": self.holds,
            "witness": self.witness,
            "skipped": self.skipped,
        }

    def to_text(self) -> str:
        parts = " ".join(f"{name}=[{value}]" for name, value in self.instance)
        line = f"{self.statement_id} {self.status.value} {parts}"
        if self.witness:
            line += f" witness: {self.witness}"
        if self.skipped:
            line += f" skipped: {self.skipped}"
        return line


STATEMENTS: "OrderedDict[str, str]" = OrderedDict([
    ("thm-2.1", "T_L(v) = T_L(u) ∪ ⋃_{J∈E} T_L(v^J) when ∩E = S∖D_R(u⁻¹v)"),
    ("cor-2.2", "T_L(v) = T_L(u) ∪ ⋃_{s∈D_R(u⁻¹v)} T_L(v^{S∖{s}})"),
    ("cor-2.3", "w is the weak-order join of {w^{S∖{s}} : s ∈ D_R(w)}"),
    ("cor-2.4", "T_L(w) = ⋃_i T_L((s1…s_{k-i})^{S∖{s_{k-i}}}) for a reduced word"),
    ("cor-2.5", "equal maximal projections over D_R(u⁻¹v) force v ≤_R w"),
    ("prop-2.6", "{T_L(w^{K∪J}) : J ⊆ D_R(w)} is a Boolean lattice"),
    ("minimal-union", "wsw⁻¹ lies only in the s-th maximal quotient inversion set"),
    ("eq0", "T_L(xy) = T_L(x) Δ x·T_L(y)·x⁻¹"),
    ("parabolic-disjointness", "T_R(v^J) ∩ W_J = ∅"),
    ("factorization-union", "T_L(v) = T_L(v^J) ⊎ v^J·T_L(v_J)·(v^J)⁻¹"),
    ("quotient-difference", "T_L(v^J) = T_L(v) ∖ v·W_J·v⁻¹"),
    ("conjugated-quotient", "u·T_L((u⁻¹v)^J)·u⁻¹ ⊆ T_L(v^J) when u ≤_R v"),
    ("projection-composition", "P^J ∘ P^I = P^J when I ⊆ J"),
    ("bruhat-monotonicity", "u ≤ v implies P^J(u) ≤ P^J(v)"),
    ("deodhar-criterion", "u ≤ v iff P^(s)(u) ≤ P^(s)(v) for all s ∈ D_R(u)"),
    ("inversion-count", "|T_L(w)| = ℓ(w) and T_L(w) consists of reflections"),
    ("weak-criteria", "prefix criterion ≡ inversion-set containment for ≤_R"),
    ("projection-injectivity", "w ↦ {w^{S∖{s}} : s ∈ D_R(w)} is injective"),
])

# descriptive names accepted wherever a statement id is
STATEMENT_ALIASES: Dict[str, str] = {
    "descent-union": "thm-2.1",
    "finest-union": "cor-2.2",
    "join-decomposition": "cor-2.3",
    "reduced-word-union": "cor-2.4",
    "quotient-compatibility": "cor-2.5",
    "boolean-poset": "prop-2.6",
    "symmetric-difference": "eq0",
}


def resolve_statement(statement_id: str) -> str:
    """Canonical id for a statement id or alias; "all" passes through"""
    if statement_id == "all" or statement_id in STATEMENTS:
        return statement_id
    if statement_id in STATEMENT_ALIASES:
        return STATEMENT_ALIASES[statement_id]
    raise ValueError(f"unknown statement '{statement_id}'")


Instance = Sequence[Tuple[str, Any]]

# verifier parameter -> name used in report instances
_INSTANCE_NAMES = {"family": "E", "mask": "J", "inner": "I", "outer": "J"}


def summarize(reports: Iterable[VerificationReport]) -> "OrderedDict[str, Dict[str, int]]":
    """Pass/fail/skip counts per statement, in statement order"""
    counts: Dict[str, Counter] = {}
    for report in reports:
        counts.setdefault(report.statement_id, Counter())[report.status.value] += 1
    ordered = OrderedDict()
    for statement_id in sorted(counts, key=lambda s: list(STATEMENTS).index(s) if s in STATEMENTS else len(STATEMENTS)):
        tally = counts[statement_id]
        ordered[statement_id] = {status.value: tally.get(status.value, 0) for status in Status}
    return ordered


class TheoremSuite:
    """Verifiers bound to one DescentCalculus"""

    def __init__(self, calculus: DescentCalculus, cap: Optional[int] = None):
        self.calculus = calculus
        self.group = calculus.group
        self.cap = settings.length_cap if cap is None else cap

    # -- report plumbing ----------------------------------------------------

    def _format(self, value: Any) -> str:
        if isinstance(value, GroupElement):
            return self.group.format_element(value)
        if isinstance(value, ParabolicMask):
            return value.label()
        if isinstance(value, tuple) and all(isinstance(s, int) for s in value):
            return self.group.format_word(value)
        if isinstance(value, (list, tuple)):
            return "; ".join(self._format(item) for item in value)
        return str(value)

    def _key(self, value: Any) -> Tuple[Any, ...]:
        if isinstance(value, GroupElement):
            return value.shortlex_key()
        if isinstance(value, ParabolicMask):
            return value.sort_key()
        if isinstance(value, tuple) and all(isinstance(s, int) for s in value):
            return (len(value), value)
        if isinstance(value, (list, tuple)):
            return tuple(self._key(item) for item in value)
        return (str(value),)

    def _report(self, statement_id: str, instance: Instance, holds: Optional[bool],
                witness: Optional[str] = None, skipped: Optional[str] = None) -> VerificationReport:
        report = VerificationReport(
            statement_id=statement_id,
            instance=tuple((name, self._format(value)) for name, value in instance),
            holds=holds,
            witness=witness,
            skipped=skipped,
            sort_key=tuple(self._key(value) for _, value in instance),
        )
        if holds is False:
            logger.error(f"{statement_id} failed on {report.instance}: {witness}")
        return report

    def _compare_sets(self, statement_id: str, instance: Instance,
                      lhs: ReflectionSet, rhs: ReflectionSet) -> VerificationReport:
        """Equality of two reflection sets, both inclusions checked separately"""
        missing = lhs.difference(rhs)
        extra = rhs.difference(lhs)
        if missing:
            return self._report(statement_id, instance, False,
                                f"{self._format(missing.members[0])} only on the left-hand side")
        if extra:
            return self._report(statement_id, instance, False,
                                f"{self._format(extra.members[0])} only on the right-hand side")
        return self._report(statement_id, instance, True)

    def _require_weak(self, u: GroupElement, v: GroupElement, instance: Optional[Instance] = None) -> None:
        if not self.calculus.weak_leq(u, v):
            raise PreconditionError(
                "u ≤_R v", f"{self._format(u)} is not below {self._format(v)} in the weak order", instance)

    def _quotient_inversions(self, w: GroupElement, mask: Iterable[int]) -> ReflectionSet:
        return self.calculus.left_inversions(self.calculus.quotient(w, mask))

    def _in_parabolic(self, x: GroupElement, mask: ParabolicMask) -> bool:
        """Membership in W_J; uses the enumerated subgroup when it is complete"""
        subgroup = self.calculus.parabolic_subgroup(mask, self.cap)
        if not subgroup.truncated:
            return x in subgroup
        return set(x.word) <= mask.members

    # -- descent unions -----------------------------------------------------

    def _descent_union(self, statement_id: str, u: GroupElement, v: GroupElement,
                       family: Sequence[ParabolicMask]) -> VerificationReport:
        instance = [("u", u), ("v", v), ("E", sorted(family, key=ParabolicMask.sort_key))]
        self._require_weak(u, v, instance)
        calculus = self.calculus
        difference = self.group.multiply(self.group.inverse(u), v)
        target = calculus.full_mask().members - self.group.right_descents(difference)
        intersection = calculus.full_mask().members
        for mask in family:
            intersection = intersection & mask.members
        if intersection != target:
            raise PreconditionError(
                "∩E = S∖D_R(u⁻¹v)",
                f"family intersects to {ParabolicMask(intersection).label()}, "
                f"expected {ParabolicMask(target).label()}", instance)

        lhs = calculus.left_inversions(v)
        rhs = calculus.left_inversions(u).union(*(self._quotient_inversions(v, J) for J in family))
        return self._compare_sets(statement_id, instance, lhs, rhs)

    def verify_theorem(self, u: GroupElement, v: GroupElement,
                       family: Iterable[Union[ParabolicMask, Iterable[int]]]) -> VerificationReport:
        """
        T_L(v) = T_L(u) ∪ ⋃_{J∈E} T_L(v^J) for u ≤_R v and ∩E = S∖D_R(u⁻¹v).

        Raises:
            PreconditionError: u ≰_R v, or the family has the wrong intersection
        """
        masks = [J if isinstance(J, ParabolicMask) else ParabolicMask.of(J) for J in family]
        return self._descent_union("thm-2.1", u, v, masks)

    def finest_family(self, u: GroupElement, v: GroupElement) -> List[ParabolicMask]:
        difference = self.group.multiply(self.group.inverse(u), v)
        return [self.calculus.maximal_mask(s) for s in sorted(self.group.right_descents(difference))]

    def verify_finest_corollary(self, u: GroupElement, v: GroupElement) -> VerificationReport:
        """The descent union with E = {S∖{s} : s ∈ D_R(u⁻¹v)}"""
        return self._descent_union("cor-2.2", u, v, self.finest_family(u, v))

    def verify_join_decomposition(self, w: GroupElement, universe: Universe) -> VerificationReport:
        """w equals the brute-force join of its maximal-quotient projections"""
        if w not in universe:
            raise PreconditionError("w ∈ universe", f"{self._format(w)} was not enumerated")
        parts = [self.calculus.maximal_quotient(w, s) for s in sorted(self.group.right_descents(w))]
        join = self.calculus.weak_join(parts, universe)
        instance = [("w", w)]
        if join != w:
            return self._report("cor-2.3", instance, False, f"join is {self._format(join)}")
        return self._report("cor-2.3", instance, True)

    def verify_reduced_word_union(self, word: Sequence[int]) -> VerificationReport:
        """
        T_L(w) = ⋃_{i=0}^{k-1} T_L((s1…s_{k-i})^{S∖{s_{k-i}}}) for a reduced word.

        Raises:
            PreconditionError: the word is not reduced
        """
        word = tuple(word)
        w = self.group.normalize(word)
        if w.length != len(word):
            raise PreconditionError("reduced word", f"{self._format(word)} is not reduced")
        parts = []
        for i in range(len(word)):
            prefix = word[:len(word) - i]
            parts.append(self._quotient_inversions(self.group.normalize(prefix),
                                                   self.calculus.maximal_mask(prefix[-1])))
        rhs = ReflectionSet().union(*parts)
        return self._compare_sets("cor-2.4", [("word", word)],
                                  self.calculus.left_inversions(w), rhs)

    def verify_quotient_compatibility(self, u: GroupElement, v: GroupElement,
                                      w: GroupElement) -> VerificationReport:
        """
        u ≤_R v, u ≤_R w and P^(s)(v) = P^(s)(w) for all s ∈ D_R(u⁻¹v) imply v ≤_R w.

        Raises:
            PreconditionError: any hypothesis fails
        """
        calculus = self.calculus
        self._require_weak(u, v)
        if not calculus.weak_leq(u, w):
            raise PreconditionError(
                "u ≤_R w", f"{self._format(u)} is not below {self._format(w)} in the weak order")
        difference = self.group.multiply(self.group.inverse(u), v)
        for s in sorted(self.group.right_descents(difference)):
            if calculus.maximal_quotient(v, s) != calculus.maximal_quotient(w, s):
                raise PreconditionError(
                    "P^(s)(v) = P^(s)(w)", f"maximal projections differ at s{s}")
        instance = [("u", u), ("v", v), ("w", w)]
        if not calculus.weak_leq(v, w):
            return self._report("cor-2.5", instance, False,
                                f"{self._format(v)} is not below {self._format(w)}")
        return self._report("cor-2.5", instance, True)

    def verify_boolean_poset(self, w: GroupElement,
                             mask: Union[ParabolicMask, Iterable[int]]) -> VerificationReport:
        """
        {T_L(w^{K∪J}) : J ⊆ D_R(w)} has 2^|D_R(w)| members and
        T_L(w^{K∪I}) ⊆ T_L(w^{K∪J}) iff J ⊆ I.

        Raises:
            PreconditionError: K meets D_R(w)
        """
        K = mask if isinstance(mask, ParabolicMask) else ParabolicMask.of(mask)
        descents = sorted(self.group.right_descents(w))
        if K.members & set(descents):
            raise PreconditionError(
                "K ⊆ S∖D_R(w)", f"{K.label()} meets the right descents", [("w", w), ("K", K)])
        subsets = [frozenset(J) for size in range(len(descents) + 1)
                   for J in itertools.combinations(descents, size)]
        family = {J: self._quotient_inversions(w, K.members | J) for J in subsets}
        instance = [("w", w), ("K", K)]

        for I, J in itertools.combinations(subsets, 2):
            if family[I] == family[J]:
                return self._report("prop-2.6", instance, False,
                                    f"J={ParabolicMask(I).label()} and J={ParabolicMask(J).label()} "
                                    f"give the same inversion set")
        for I in subsets:
            for J in subsets:
                contained = family[I].issubset(family[J])
                if contained != (J <= I):
                    return self._report("prop-2.6", instance, False,
                                        f"containment for I={ParabolicMask(I).label()}, "
                                        f"J={ParabolicMask(J).label()} is {contained}")
        return self._report("prop-2.6", instance, True)

    def verify_minimal_union(self, w: GroupElement) -> VerificationReport:
        """wsw⁻¹ ∈ T_L(w^{S∖{s}}) and ∉ T_L(w^{S∖{r}}) for r ∈ D_R(w)∖{s}"""
        descents = sorted(self.group.right_descents(w))
        quotients = {s: self._quotient_inversions(w, self.calculus.maximal_mask(s)) for s in descents}
        instance = [("w", w)]
        for s in descents:
            t = self.group.conjugate(w, self.group.generator(s))
            if t not in quotients[s]:
                return self._report("minimal-union", instance, False,
                                    f"{self._format(t)} missing from the s{s} quotient set")
            for r in descents:
                if r != s and t in quotients[r]:
                    return self._report("minimal-union", instance, False,
                                        f"{self._format(t)} also in the s{r} quotient set")
        return self._report("minimal-union", instance, True)

    # -- supporting identities ----------------------------------------------

    def verify_symmetric_difference(self, x: GroupElement, y: GroupElement) -> VerificationReport:
        """T_L(xy) = T_L(x) Δ x·T_L(y)·x⁻¹"""
        calculus = self.calculus
        lhs = calculus.left_inversions(self.group.multiply(x, y))
        rhs = calculus.left_inversions(x).symmetric_difference(
            calculus.conjugate_set(x, calculus.left_inversions(y)))
        return self._compare_sets("eq0", [("x", x), ("y", y)], lhs, rhs)

    def verify_parabolic_disjointness(self, v: GroupElement, mask: ParabolicMask) -> VerificationReport:
        """T_R(v^J) ∩ W_J = ∅"""
        quotient = self.calculus.quotient(v, mask)
        instance = [("v", v), ("J", mask)]
        for t in self.calculus.right_inversions(quotient):
            if self._in_parabolic(t, mask):
                return self._report("parabolic-disjointness", instance, False,
                                    f"{self._format(t)} is a right inversion of v^J inside W_J")
        return self._report("parabolic-disjointness", instance, True)

    def verify_factorization_union(self, v: GroupElement, mask: ParabolicMask) -> VerificationReport:
        """T_L(v) is the disjoint union of T_L(v^J) and v^J·T_L(v_J)·(v^J)⁻¹"""
        calculus = self.calculus
        factorization = calculus.project(v, mask)
        quotient_part = calculus.left_inversions(factorization.quotient_part)
        parabolic_part = calculus.conjugate_set(
            factorization.quotient_part, calculus.left_inversions(factorization.parabolic_part))
        instance = [("v", v), ("J", mask)]
        overlap = quotient_part.intersection(parabolic_part)
        if overlap:
            return self._report("factorization-union", instance, False,
                                f"{self._format(overlap.members[0])} lies in both parts")
        return self._compare_sets("factorization-union", instance,
                                  calculus.left_inversions(v), quotient_part.union(parabolic_part))

    def verify_quotient_difference(self, v: GroupElement, mask: ParabolicMask) -> VerificationReport:
        """T_L(v^J) = T_L(v) ∖ v·W_J·v⁻¹"""
        calculus = self.calculus
        v_inverse = self.group.inverse(v)
        kept = [t for t in calculus.left_inversions(v)
                if not self._in_parabolic(self.group.conjugate(v_inverse, t), mask)]
        return self._compare_sets("quotient-difference", [("v", v), ("J", mask)],
                                  self._quotient_inversions(v, mask.members), ReflectionSet.of(kept))

    def verify_conjugated_quotient(self, u: GroupElement, v: GroupElement,
                                   mask: ParabolicMask) -> VerificationReport:
        """u·T_L((u⁻¹v)^J)·u⁻¹ ⊆ T_L(v^J) for u ≤_R v"""
        self._require_weak(u, v)
        calculus = self.calculus
        difference = self.group.multiply(self.group.inverse(u), v)
        lhs = calculus.conjugate_set(u, self._quotient_inversions(difference, mask.members))
        rhs = self._quotient_inversions(v, mask.members)
        instance = [("u", u), ("v", v), ("J", mask)]
        outside = lhs.difference(rhs)
        if outside:
            return self._report("conjugated-quotient", instance, False,
                                f"{self._format(outside.members[0])} not in T_L(v^J)")
        return self._report("conjugated-quotient", instance, True)

    def verify_projection_composition(self, w: GroupElement, inner: ParabolicMask,
                                      outer: ParabolicMask) -> VerificationReport:
        """P^J(P^I(w)) = P^J(w) for I ⊆ J"""
        if not inner.members <= outer.members:
            raise PreconditionError("I ⊆ J", f"{inner.label()} is not inside {outer.label()}")
        calculus = self.calculus
        composed = calculus.quotient(calculus.quotient(w, inner.members), outer.members)
        direct = calculus.quotient(w, outer.members)
        instance = [("w", w), ("I", inner), ("J", outer)]
        if composed != direct:
            return self._report("projection-composition", instance, False,
                                f"composition gives {self._format(composed)}, direct {self._format(direct)}")
        return self._report("projection-composition", instance, True)

    def verify_bruhat_monotonicity(self, u: GroupElement, v: GroupElement,
                                   mask: ParabolicMask) -> VerificationReport:
        """u ≤ v implies P^J(u) ≤ P^J(v)"""
        calculus = self.calculus
        if not calculus.bruhat_leq(u, v):
            raise PreconditionError("u ≤ v", f"{self._format(u)} is not below {self._format(v)}")
        pu, pv = calculus.quotient(u, mask.members), calculus.quotient(v, mask.members)
        instance = [("u", u), ("v", v), ("J", mask)]
        if not calculus.bruhat_leq(pu, pv):
            return self._report("bruhat-monotonicity", instance, False,
                                f"{self._format(pu)} is not below {self._format(pv)}")
        return self._report("bruhat-monotonicity", instance, True)

    def verify_deodhar(self, u: GroupElement, v: GroupElement) -> VerificationReport:
        """The maximal-quotient criterion agrees with the Bruhat recursion"""
        recursion = self.calculus.bruhat_leq(u, v)
        criterion = self.calculus.deodhar_check(u, v)
        instance = [("u", u), ("v", v)]
        if recursion != criterion:
            return self._report("deodhar-criterion", instance, False,
                                f"recursion says {recursion}, criterion says {criterion}")
        return self._report("deodhar-criterion", instance, True)

    def verify_inversion_count(self, w: GroupElement) -> VerificationReport:
        """|T_L(w)| = ℓ(w); every member is an involution of odd length"""
        instance = [("w", w)]
        try:
            inversions = self.calculus.left_inversions(w)
        except NormalFormError as e:
            return self._report("inversion-count", instance, False, str(e))
        if len(inversions) != w.length:
            return self._report("inversion-count", instance, False,
                                f"{len(inversions)} inversions for length {w.length}")
        for t in inversions:
            if t.length % 2 == 0 or self.group.inverse(t) != t:
                return self._report("inversion-count", instance, False,
                                    f"{self._format(t)} is not a reflection")
        return self._report("inversion-count", instance, True)

    def verify_weak_criteria(self, u: GroupElement, v: GroupElement) -> VerificationReport:
        """Prefix criterion and inversion containment agree"""
        prefix = self.calculus.weak_leq(u, v)
        containment = self.calculus.weak_leq_by_inversions(u, v)
        instance = [("u", u), ("v", v)]
        if prefix != containment:
            return self._report("weak-criteria", instance, False,
                                f"prefix says {prefix}, containment says {containment}")
        return self._report("weak-criteria", instance, True)

    def verify_projection_injectivity(self, universe: Universe) -> VerificationReport:
        """Distinct elements have distinct sets of maximal-quotient projections"""
        seen: Dict[frozenset, GroupElement] = {}
        instance = [("universe", f"{len(universe)} elements, cap {universe.cap}")]
        for w in universe:
            signature = frozenset(self.calculus.maximal_quotient(w, s)
                                  for s in self.group.right_descents(w))
            if signature in seen:
                return self._report("projection-injectivity", instance, False,
                                    f"{self._format(seen[signature])} and {self._format(w)} "
                                    f"share their projections")
            seen[signature] = w
        return self._report("projection-injectivity", instance, True)

    # -- sweeps -------------------------------------------------------------

    def weak_lower_interval(self, v: GroupElement) -> List[GroupElement]:
        """All u ≤_R v, by stripping right descents"""
        seen = {v}
        frontier = [v]
        while frontier:
            following = []
            for w in frontier:
                for s in self.group.right_descents(w):
                    u = self.group.multiply(w, self.group.generator(s))
                    if u not in seen:
                        seen.add(u)
                        following.append(u)
            frontier = following
        return sorted(seen, key=GroupElement.shortlex_key)

    def weak_upper_interval(self, u: GroupElement, universe: Universe) -> List[GroupElement]:
        """All v ≥_R u inside the universe, by adding right ascents"""
        seen = {u}
        frontier = [u]
        while frontier:
            following = []
            for w in frontier:
                descents = self.group.right_descents(w)
                for s in range(self.group.rank):
                    if s in descents:
                        continue
                    v = self.group.multiply(w, self.group.generator(s))
                    if v in universe and v not in seen:
                        seen.add(v)
                        following.append(v)
            frontier = following
        return sorted(seen, key=GroupElement.shortlex_key)

    def _all_masks(self) -> List[ParabolicMask]:
        rank = self.group.rank
        return [ParabolicMask(frozenset(c)) for size in range(rank + 1)
                for c in itertools.combinations(range(rank), size)]

    def _instances(self, statement_id: str, universe: Universe, exhaustive: bool,
                   rng: random.Random, samples: int) -> Iterator[Tuple[Callable[..., VerificationReport], tuple]]:
        elements = list(universe)
        masks = self._all_masks()

        def pick_elements() -> List[GroupElement]:
            if exhaustive:
                return elements
            return [rng.choice(elements) for _ in range(samples)]

        def weak_pairs() -> Iterator[Tuple[GroupElement, GroupElement]]:
            if exhaustive:
                for v in elements:
                    for u in self.weak_lower_interval(v):
                        yield u, v
            else:
                for _ in range(samples):
                    v = rng.choice(elements)
                    yield rng.choice(self.weak_lower_interval(v)), v

        def all_pairs() -> Iterator[Tuple[GroupElement, GroupElement]]:
            if exhaustive:
                yield from itertools.product(elements, repeat=2)
            else:
                for _ in range(samples):
                    yield rng.choice(elements), rng.choice(elements)

        def element_masks() -> Iterator[Tuple[GroupElement, ParabolicMask]]:
            if exhaustive:
                yield from itertools.product(elements, masks)
            else:
                for _ in range(samples):
                    yield rng.choice(elements), rng.choice(masks)

        if statement_id == "thm-2.1":
            for u, v in weak_pairs():
                difference = self.group.multiply(self.group.inverse(u), v)
                descents = sorted(self.group.right_descents(difference))
                full = self.calculus.full_mask()
                yield self.verify_theorem, (u, v, [ParabolicMask(full.members - set(descents))])
                if len(descents) >= 2:
                    half = len(descents) // 2
                    split = [ParabolicMask(full.members - set(descents[:half])),
                             ParabolicMask(full.members - set(descents[half:]))]
                    yield self.verify_theorem, (u, v, split)
        elif statement_id == "cor-2.2":
            for u, v in weak_pairs():
                yield self.verify_finest_corollary, (u, v)
        elif statement_id == "cor-2.3":
            for w in pick_elements():
                yield self.verify_join_decomposition, (w, universe)
        elif statement_id == "cor-2.4":
            longest = max(w.length for w in elements)
            if exhaustive:
                for w in elements:
                    yield self.verify_reduced_word_union, (w.word,)
            else:
                for _ in range(samples):
                    word = self.group.random_reduced_word(rng, rng.randint(0, longest))
                    yield self.verify_reduced_word_union, (word,)
        elif statement_id == "cor-2.5":
            if exhaustive:
                for u in elements:
                    above = self.weak_upper_interval(u, universe)
                    for v, w in itertools.product(above, repeat=2):
                        yield self.verify_quotient_compatibility, (u, v, w)
            else:
                for _ in range(samples):
                    u = rng.choice(elements)
                    above = self.weak_upper_interval(u, universe)
                    yield self.verify_quotient_compatibility, (u, rng.choice(above), rng.choice(above))
        elif statement_id == "prop-2.6":
            for w in pick_elements():
                free = sorted(set(range(self.group.rank)) - self.group.right_descents(w))
                if exhaustive:
                    for size in range(len(free) + 1):
                        for K in itertools.combinations(free, size):
                            yield self.verify_boolean_poset, (w, ParabolicMask.of(K))
                else:
                    yield self.verify_boolean_poset, (w, ParabolicMask.of(free))
        elif statement_id == "minimal-union":
            for w in pick_elements():
                yield self.verify_minimal_union, (w,)
        elif statement_id == "eq0":
            for x, y in all_pairs():
                yield self.verify_symmetric_difference, (x, y)
        elif statement_id in ("parabolic-disjointness", "factorization-union", "quotient-difference"):
            verifier = {
                "parabolic-disjointness": self.verify_parabolic_disjointness,
                "factorization-union": self.verify_factorization_union,
                "quotient-difference": self.verify_quotient_difference,
            }[statement_id]
            for v, J in element_masks():
                yield verifier, (v, J)
        elif statement_id == "conjugated-quotient":
            for u, v in weak_pairs():
                for J in (masks if exhaustive else [rng.choice(masks)]):
                    yield self.verify_conjugated_quotient, (u, v, J)
        elif statement_id == "projection-composition":
            nested = [(I, J) for J in masks for I in masks if I.members <= J.members]
            if exhaustive:
                for w in elements:
                    for I, J in nested:
                        yield self.verify_projection_composition, (w, I, J)
            else:
                for _ in range(samples):
                    I, J = rng.choice(nested)
                    yield self.verify_projection_composition, (rng.choice(elements), I, J)
        elif statement_id == "bruhat-monotonicity":
            for u, v in all_pairs():
                for J in (masks if exhaustive else [rng.choice(masks)]):
                    yield self.verify_bruhat_monotonicity, (u, v, J)
        elif statement_id == "deodhar-criterion":
            for u, v in all_pairs():
                yield self.verify_deodhar, (u, v)
        elif statement_id == "inversion-count":
            for w in pick_elements():
                yield self.verify_inversion_count, (w,)
        elif statement_id == "weak-criteria":
            for u, v in all_pairs():
                yield self.verify_weak_criteria, (u, v)
        elif statement_id == "projection-injectivity":
            yield self.verify_projection_injectivity, (universe,)
        else:
            raise ValueError(f"unknown statement '{statement_id}'")

    def sweep(self, statement_id: str, universe: Universe, scope: Optional[str] = None,
              seed: Optional[int] = None, samples: Optional[int] = None) -> List[VerificationReport]:
        """
        Run a statement over the universe.

        Args:
            statement_id: a key of STATEMENTS, an alias, or "all"
            universe: enumerated group or ball
            scope: "exhaustive", "sample", or None to decide by universe size
            seed: random seed for sampling (defaults to the configured seed)
            samples: instances to draw in sample mode

        Returns:
            List[VerificationReport]: sorted by statement then canonical instance key;
            instances violating a hypothesis come back as skip reports
        """
        statement_id = resolve_statement(statement_id)
        if statement_id == "all":
            reports: List[VerificationReport] = []
            for each in STATEMENTS:
                reports.extend(self.sweep(each, universe, scope, seed, samples))
            return reports
        if scope not in (None, "exhaustive", "sample"):
            raise ValueError(f"scope must be 'exhaustive' or 'sample', got {scope!r}")

        exhaustive = len(universe) <= settings.exhaustive_limit if scope is None else scope == "exhaustive"
        rng = random.Random(settings.seed if seed is None else seed)
        samples = settings.sample_size if samples is None else samples

        reports = []
        for verifier, arguments in self._instances(statement_id, universe, exhaustive, rng, samples):
            try:
                reports.append(verifier(*arguments))
            except PreconditionError as e:
                instance = e.instance if e.instance is not None else self._skip_instance(verifier, arguments)
                reports.append(self._report(statement_id, instance, None, skipped=e.hypothesis))
        reports.sort(key=lambda r: r.sort_key)
        tally = Counter(r.status.value for r in reports)
        logger.info(f"Sweep {statement_id} on {self.group.name}: {dict(tally)}")
        return reports

    def _skip_instance(self, verifier: Callable[..., VerificationReport], arguments: tuple) -> Instance:
        """Instance for a skipped call, named the way the verifier names its reports"""
        names = list(inspect.signature(verifier).parameters)
        instance = []
        for name, value in zip(names, arguments):
            if isinstance(value, Universe):
                continue
            instance.append((_INSTANCE_NAMES.get(name, name), value))
        return instance
