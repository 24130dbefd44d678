"""
Inversion sets, parabolic projections, weak and Bruhat order, joins in the
right weak order, and breadth-first enumeration of (balls in) W.
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from services.coxeter_system import CoxeterError, CoxeterMatrix, ParabolicMask
from services.element_engine import CoxeterGroup, GroupElement, NormalFormError
from services.root_geometry import negative_columns
from utils.cache import ComputationCache
from utils.config import settings

logger = logging.getLogger(__name__)


class NoUpperBoundError(CoxeterError):
    """No (least) upper bound exists inside the enumerated universe"""
    pass


class MaskParseError(CoxeterError):
    """Textual parabolic mask could not be parsed"""
    pass


@dataclass(frozen=True)
class ReflectionSet:
    """Finite set of reflections, kept in ShortLex order of their normal forms"""
    members: Tuple[GroupElement, ...] = ()
    _lookup: FrozenSet[GroupElement] = field(default=frozenset(), compare=False, repr=False)

    @classmethod
    def of(cls, elements: Iterable[GroupElement]) -> "ReflectionSet":
        unique = frozenset(elements)
        return cls(tuple(sorted(unique, key=GroupElement.shortlex_key)), unique)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, t: object) -> bool:
        return t in self._lookup

    def union(self, *others: "ReflectionSet") -> "ReflectionSet":
        merged = set(self._lookup)
        for other in others:
            merged |= other._lookup
        return ReflectionSet.of(merged)

    def intersection(self, other: "ReflectionSet") -> "ReflectionSet":
        return ReflectionSet.of(self._lookup & other._lookup)

    def difference(self, other: "ReflectionSet") -> "ReflectionSet":
        return ReflectionSet.of(self._lookup - other._lookup)

    def symmetric_difference(self, other: "ReflectionSet") -> "ReflectionSet":
        return ReflectionSet.of(self._lookup ^ other._lookup)

    def issubset(self, other: "ReflectionSet") -> bool:
        return self._lookup <= other._lookup

    def isdisjoint(self, other: "ReflectionSet") -> bool:
        return self._lookup.isdisjoint(other._lookup)

    def words(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(t.word for t in self.members)


@dataclass(frozen=True)
class ParabolicFactorization:
    """w = quotient_part · parabolic_part with w^J ∈ W^J and w_J ∈ W_J"""
    quotient_part: GroupElement
    parabolic_part: GroupElement


@dataclass(frozen=True)
class Universe:
    """
    Breadth-first ball {w : ℓ(w) ≤ cap}, in ShortLex order.

    `truncated` is set when some element at the cap still has a right
    ascent, i.e. the ball is a proper subset of W.
    """
    elements: Tuple[GroupElement, ...]
    cap: int
    truncated: bool
    _index: Dict[GroupElement, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        self._index.update({w: i for i, w in enumerate(self.elements)})

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, w: object) -> bool:
        return w in self._index

    def __getitem__(self, i: int) -> GroupElement:
        return self.elements[i]

    def index(self, w: GroupElement) -> int:
        return self._index[w]


def parse_mask(text: str, matrix: CoxeterMatrix) -> ParabolicMask:
    """
    Parse "s0,s1" (listed members), "~s3" or "~s0,s3" (complement in S),
    "" (empty set) or "S" (all generators).

    Raises:
        MaskParseError: unknown label or malformed text
    """
    stripped = text.strip()
    complement = stripped.startswith("~")
    if complement:
        stripped = stripped[1:].strip()
    if stripped == "S":
        members = frozenset(range(matrix.rank))
    elif stripped == "":
        members = frozenset()
    else:
        index = {label: i for i, label in enumerate(matrix.labels)}
        chosen = set()
        for token in stripped.split(","):
            token = token.strip()
            if token not in index:
                raise MaskParseError(f"unknown generator '{token}' in mask '{text}'")
            chosen.add(index[token])
        members = frozenset(chosen)
    mask = ParabolicMask(members)
    return mask.complement(matrix.rank) if complement else mask


def format_mask(mask: ParabolicMask, matrix: CoxeterMatrix) -> str:
    return ",".join(matrix.labels[s] for s in mask)


class DescentCalculus:
    """Inversion sets, projections, orders and joins over one CoxeterGroup"""

    def __init__(self, group: CoxeterGroup, cache_size: Optional[int] = None):
        self.group = group
        size = cache_size or settings.cache_size
        self._inversions = ComputationCache("left-inversions", size)
        self._projections = ComputationCache("projections", size)
        self._universes = ComputationCache("universes", 16)

    @property
    def rank(self) -> int:
        return self.group.rank

    def full_mask(self) -> ParabolicMask:
        return ParabolicMask.full(self.rank)

    def maximal_mask(self, s: int) -> ParabolicMask:
        """S∖{s}"""
        return self.full_mask().without(s)

    # -- inversion sets -----------------------------------------------------

    def left_inversions(self, w: GroupElement) -> ReflectionSet:
        """
        T_L(w) from the prefix conjugates s1…si…s1 of the normal form.

        Raises:
            NormalFormError: if two prefix conjugates coincide
        """
        cached = self._inversions.get(w)
        if cached is not None:
            return cached
        word = w.word
        conjugates = [self.group.normalize(word[:i] + word[:i - 1][::-1]) for i in range(1, len(word) + 1)]
        result = ReflectionSet.of(conjugates)
        if len(result) != len(word):
            raise NormalFormError(
                f"prefix conjugates of {self.group.format_element(w)} are not pairwise distinct")
        return self._inversions.put(w, result)

    def right_inversions(self, w: GroupElement) -> ReflectionSet:
        """T_R(w) = T_L(w⁻¹)"""
        return self.left_inversions(self.group.inverse(w))

    def conjugate_set(self, x: GroupElement, reflections: Iterable[GroupElement]) -> ReflectionSet:
        """x·T·x⁻¹"""
        return ReflectionSet.of(self.group.conjugate(x, t) for t in reflections)

    # -- projections --------------------------------------------------------

    def project(self, w: GroupElement, mask: Iterable[int], choose: str = "smallest") -> ParabolicFactorization:
        """
        Factor w = w^J·w_J by stripping right descents that lie in J.

        Args:
            w: element to factor
            mask: the set J
            choose: "smallest" or "largest" eligible descent at each step
        """
        members = frozenset(mask)
        key = (w, members, choose)
        cached = self._projections.get(key)
        if cached is not None:
            return cached
        if choose not in ("smallest", "largest"):
            raise ValueError(f"choose must be 'smallest' or 'largest', got {choose!r}")
        pick = min if choose == "smallest" else max

        group = self.group
        current = w
        while True:
            eligible = group.right_descents(current) & members
            if not eligible:
                break
            current = group.multiply(current, group.generator(pick(eligible)))
        factorization = ParabolicFactorization(current, group.multiply(group.inverse(current), w))
        return self._projections.put(key, factorization)

    def quotient(self, w: GroupElement, mask: Iterable[int]) -> GroupElement:
        """P^J(w) = w^J"""
        return self.project(w, mask).quotient_part

    def maximal_quotient(self, w: GroupElement, s: int) -> GroupElement:
        """P^(s)(w) = w^{S∖{s}}"""
        return self.quotient(w, self.maximal_mask(s))

    # -- orders -------------------------------------------------------------

    def weak_leq(self, u: GroupElement, v: GroupElement) -> bool:
        """u ≤_R v by the prefix criterion ℓ(u) + ℓ(u⁻¹v) = ℓ(v)"""
        if u.length > v.length:
            return False
        quotient = self.group.multiply(self.group.inverse(u), v)
        return u.length + quotient.length == v.length

    def weak_leq_by_inversions(self, u: GroupElement, v: GroupElement) -> bool:
        """u ≤_R v iff T_L(u) ⊆ T_L(v)"""
        return self.left_inversions(u).issubset(self.left_inversions(v))

    def bruhat_leq(self, u: GroupElement, v: GroupElement) -> bool:
        """
        Bruhat order by the lifting recursion: for s ∈ D_R(v),
        u ≤ v iff us ≤ vs when s ∈ D_R(u), and u ≤ vs otherwise.

        Runs on element matrices; no normal forms are built.
        """
        if u.length > v.length:
            return False
        group = self.group
        u_matrix = group.element_matrix(u)
        v_matrix = group.element_matrix(v)
        u_length, v_length = u.length, v.length
        while v_length > 0:
            if u_length > v_length:
                return False
            v_descents = negative_columns(v_matrix, group.epsilon)
            if not v_descents:
                raise NormalFormError(f"element of length {v_length} has no right descent")
            s = min(v_descents)
            if s in negative_columns(u_matrix, group.epsilon):
                u_matrix = u_matrix @ group.reflections[s]
                u_length -= 1
            v_matrix = v_matrix @ group.reflections[s]
            v_length -= 1
        return u_length == 0

    def bruhat_interval(self, v: GroupElement) -> FrozenSet[GroupElement]:
        """
        Lower interval [e, v] as the set of products of subwords of nf(v).
        """
        reachable: Set[GroupElement] = {self.group.identity}
        for s in v.word:
            generator = self.group.generator(s)
            reachable |= {self.group.multiply(x, generator) for x in reachable}
        return frozenset(reachable)

    def deodhar_check(self, u: GroupElement, v: GroupElement) -> bool:
        """u ≤ v iff P^(s)(u) ≤ P^(s)(v) for every s ∈ D_R(u)"""
        return all(
            self.bruhat_leq(self.maximal_quotient(u, s), self.maximal_quotient(v, s))
            for s in sorted(self.group.right_descents(u))
        )

    # -- joins --------------------------------------------------------------

    def weak_join(self, xs: Iterable[GroupElement], universe: Universe,
                  leq: Optional[Callable[[GroupElement, GroupElement], bool]] = None) -> GroupElement:
        """
        Least upper bound of xs in the right weak order, by brute force over
        the universe.

        Args:
            xs: elements to join
            universe: enumerated group or ball containing an upper bound
            leq: weak-order predicate; defaults to inversion-set containment

        Raises:
            NoUpperBoundError: no upper bound, or no least one, in the universe
        """
        leq = leq or self.weak_leq_by_inversions
        targets = sorted(set(xs), key=GroupElement.shortlex_key)
        bounds = [z for z in universe if all(leq(x, z) for x in targets)]
        if not bounds:
            raise NoUpperBoundError(
                f"no upper bound for {len(targets)} elements within length {universe.cap}")
        shortest = min(z.length for z in bounds)
        for z in bounds:
            if z.length != shortest:
                break
            if all(leq(z, other) for other in bounds):
                return z
        raise NoUpperBoundError(
            f"upper bounds of {len(targets)} elements have no minimum within length {universe.cap}")

    # -- enumeration --------------------------------------------------------

    def enumerate(self, cap: Optional[int] = None, generators: Optional[Iterable[int]] = None) -> Universe:
        """
        Breadth-first closure of {e} under right multiplication by generators,
        deduplicated by normal form, up to length cap.

        Args:
            cap: length bound (defaults to the configured length cap)
            generators: restrict to these generators (parabolic subgroup)
        """
        cap = settings.length_cap if cap is None else cap
        letters = tuple(sorted(set(range(self.rank)) if generators is None else set(generators)))
        key = (cap, letters)
        cached = self._universes.get(key)
        if cached is not None:
            return cached

        group = self.group
        layers: List[List[GroupElement]] = [[group.identity]]
        truncated = False
        while layers[-1]:
            layer = layers[-1]
            length = len(layers) - 1
            successors: Set[GroupElement] = set()
            for w in layer:
                ascents = [s for s in letters if s not in group.right_descents(w)]
                if length == cap:
                    truncated = truncated or bool(ascents)
                    continue
                for s in ascents:
                    successors.add(group.multiply(w, group.generator(s)))
            if length == cap:
                break
            layers.append(sorted(successors, key=GroupElement.shortlex_key))

        elements = tuple(w for layer in layers for w in layer)
        universe = Universe(elements, cap, truncated)
        if truncated:
            logger.warning(f"Enumeration of {group.name} truncated at length {cap} ({len(elements)} elements)")
        else:
            logger.info(f"Enumerated {len(elements)} elements of {group.name} (cap {cap})")
        return self._universes.put(key, universe)

    def parabolic_subgroup(self, mask: Iterable[int], cap: Optional[int] = None) -> Universe:
        """The enumerated subgroup W_J"""
        return self.enumerate(cap, generators=mask)

    def reflections(self, universe: Universe) -> ReflectionSet:
        """Every reflection lying inside the universe (each t is in T_L(t))"""
        found = set()
        for w in universe:
            found.update(t for t in self.left_inversions(w) if t in universe)
        return ReflectionSet.of(found)

    def weak_covers(self, universe: Universe) -> List[Tuple[GroupElement, GroupElement]]:
        """Pairs u ⋖_R us with ℓ(us) = ℓ(u) + 1, both inside the universe"""
        covers = []
        for u in universe:
            descents = self.group.right_descents(u)
            for s in range(self.rank):
                if s in descents:
                    continue
                v = self.group.multiply(u, self.group.generator(s))
                if v in universe:
                    covers.append((u, v))
        return covers

    def bruhat_covers(self, universe: Universe) -> List[Tuple[GroupElement, GroupElement]]:
        """
        Pairs u ⋖ v with u⁻¹v a reflection and ℓ(v) = ℓ(u) + 1.

        Lower covers of v are among v·t for t ∈ T_R(v), so balls need no
        reflections beyond their own inversion sets.
        """
        covers = []
        for v in universe:
            lower = {self.group.multiply(v, t) for t in self.right_inversions(v)}
            covers.extend((u, v) for u in lower if u.length == v.length - 1)
        covers.sort(key=lambda pair: (universe.index(pair[0]), universe.index(pair[1])))
        return covers

    def cache_stats(self) -> dict:
        stats = self.group.cache_stats()
        stats.update({
            "left_inversions": self._inversions.get_stats(),
            "projections": self._projections.get_stats(),
            "universes": self._universes.get_stats(),
        })
        return stats
