"""
Permutation models of types A and B, used as ground truth for the engine.

Conventions, fixed once for the whole repository:

- A_n acts on {1..n+1}; s_i is the transposition of i+1 and i+2, so right
  multiplication by s_i swaps the entries at positions i+1 and i+2.
- B_n acts on {±1..±n}; s0 negates the entry at position 1 and s_i (i ≥ 1)
  swaps the entries at positions i and i+1.
- Composition is (p∘q)(j) = p(q(j)); a word maps to the composite of its
  letters from left to right.

>>> oracle_compose(Permutation((2, 1, 3)), Permutation((1, 3, 2)))
Permutation(images=(2, 3, 1))
"""
import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple, Union

from services.coxeter_system import CoxeterError, identify_catalog_type
from services.descent_calculus import DescentCalculus
from services.element_engine import CoxeterGroup, DescentSet, GroupElement
from utils.config import settings

logger = logging.getLogger(__name__)


class UnsupportedTypeError(CoxeterError):
    """No permutation model exists for this Coxeter system"""
    pass


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} in one-line notation (p(1), …, p(n))"""
    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]


@dataclass(frozen=True)
class SignedPermutation:
    """
    A bijection of {±1..±n} commuting with negation, stored by its window
    (w(1), …, w(n)).
    """
    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        if 0 in self.images or sorted(abs(x) for x in self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a signed permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1] if i > 0 else -self.images[-i - 1]

    def unfold(self) -> Permutation:
        """
        The permutation of [±n] = {-n < … < -1 < 1 < … < n}, relabelled
        monotonically onto {1..2n}.
        """
        n = self.n

        def position(x: int) -> int:
            return x + n + 1 if x < 0 else x + n

        domain = list(range(-n, 0)) + list(range(1, n + 1))
        return Permutation(tuple(position(self(x)) for x in domain))


OracleElement = Union[Permutation, SignedPermutation]


# -- group operations -------------------------------------------------------

def oracle_compose(p: OracleElement, q: OracleElement) -> OracleElement:
    """(p∘q)(j) = p(q(j))"""
    if type(p) is not type(q) or p.n != q.n:
        raise ValueError("cannot compose elements of different models")
    return type(p)(tuple(p(q(j)) for j in range(1, p.n + 1)))


def oracle_inverse(p: OracleElement) -> OracleElement:
    images = [0] * p.n
    for j in range(1, p.n + 1):
        value = p(j)
        images[abs(value) - 1] = j if value > 0 else -j
    return type(p)(tuple(images))


def _inversions(images: Tuple[int, ...]) -> int:
    return sum(1 for a, b in itertools.combinations(images, 2) if a > b)


def oracle_length(p: OracleElement) -> int:
    """
    Type A: number of inversions. Type B: inv(w) − Σ_{w(j)<0} w(j).

    >>> oracle_length(SignedPermutation((-4, 3, 2, 1)))
    7
    """
    if isinstance(p, SignedPermutation):
        return _inversions(p.images) - sum(x for x in p.images if x < 0)
    return _inversions(p.images)


def oracle_descents(p: OracleElement) -> DescentSet:
    """Right descents as generator indices"""
    if isinstance(p, SignedPermutation):
        descents = {i for i in range(1, p.n) if p(i) > p(i + 1)}
        if p(1) < 0:
            descents.add(0)
        return frozenset(descents)
    return frozenset(i for i in range(p.n - 1) if p(i + 1) > p(i + 2))


def oracle_left_descents(p: OracleElement) -> DescentSet:
    return oracle_descents(oracle_inverse(p))


Transposition = Tuple[int, int]


def oracle_right_inversions(p: Permutation) -> FrozenSet[Transposition]:
    """Transpositions (a b), a < b, with p(a) > p(b)"""
    if not isinstance(p, Permutation):
        raise UnsupportedTypeError("transposition inversions are defined for type A only")
    return frozenset((a, b) for a, b in itertools.combinations(range(1, p.n + 1), 2) if p(a) > p(b))


def oracle_left_inversions(p: Permutation) -> FrozenSet[Transposition]:
    """The conjugates p·(a b)·p⁻¹ of the right inversions"""
    return frozenset(tuple(sorted((p(a), p(b)))) for a, b in oracle_right_inversions(p))


def transposition_of(p: Permutation) -> Optional[Transposition]:
    """(a, b) if p is the transposition of a < b, else None"""
    moved = [j for j in range(1, p.n + 1) if p(j) != j]
    if len(moved) == 2 and p(moved[0]) == moved[1]:
        return moved[0], moved[1]
    return None


def _rank_table(p: Permutation) -> List[List[int]]:
    # table[i][j] = #{a ≤ i : p(a) ≥ j}
    n = p.n
    table = [[0] * (n + 2) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            table[i][j] = table[i - 1][j] + (1 if p(i) >= j else 0)
    return table


def oracle_bruhat_leq(u: OracleElement, v: OracleElement) -> bool:
    """
    Rank-matrix criterion: u ≤ v iff u[i,j] ≤ v[i,j] for all i, j. Signed
    permutations are compared through their unfolding to [±n].
    """
    if isinstance(u, SignedPermutation):
        u, v = u.unfold(), v.unfold()
    if u.n != v.n:
        raise ValueError("cannot compare elements of different models")
    u_table, v_table = _rank_table(u), _rank_table(v)
    return all(u_table[i][j] <= v_table[i][j] for i in range(1, u.n + 1) for j in range(1, u.n + 1))


# -- engine bridge ----------------------------------------------------------

@dataclass(frozen=True)
class OracleModel:
    """Generator images for one catalog group of type A or B"""
    family: str
    n: int
    generators: Tuple[OracleElement, ...] = field(repr=False)

    @classmethod
    def for_group(cls, group: CoxeterGroup) -> "OracleModel":
        """
        Raises:
            UnsupportedTypeError: the group is not A_n or B_n
        """
        name = identify_catalog_type(group.matrix)
        if name is None or name[0] not in "AB" or not name[1:].isdigit():
            raise UnsupportedTypeError(f"no permutation model for {group.name}")
        rank = group.rank
        if name[0] == "A":
            size = rank + 1
            generators = []
            for i in range(rank):
                images = list(range(1, size + 1))
                images[i], images[i + 1] = images[i + 1], images[i]
                generators.append(Permutation(tuple(images)))
            return cls("A", size, tuple(generators))

        generators = [SignedPermutation((-1,) + tuple(range(2, rank + 1)))]
        for i in range(1, rank):
            images = list(range(1, rank + 1))
            images[i - 1], images[i] = images[i], images[i - 1]
            generators.append(SignedPermutation(tuple(images)))
        return cls("B", rank, tuple(generators))

    def identity(self) -> OracleElement:
        if self.family == "A":
            return Permutation.identity(self.n)
        return SignedPermutation.identity(self.n)

    def map(self, w: GroupElement) -> OracleElement:
        result = self.identity()
        for s in w.word:
            result = oracle_compose(result, self.generators[s])
        return result

    @property
    def longest_length(self) -> int:
        if self.family == "A":
            return self.n * (self.n - 1) // 2
        return self.n * self.n


def oracle_map(group: CoxeterGroup, w: GroupElement) -> OracleElement:
    """
    Image of w in the permutation model of its group.

    >>> from services.coxeter_system import from_named_type
    >>> group = CoxeterGroup(from_named_type("A2"))
    >>> oracle_map(group, group.element((0, 1)))
    Permutation(images=(2, 3, 1))
    """
    return OracleModel.for_group(group).map(w)


@dataclass
class OracleCheckResult:
    group: str
    exhaustive: bool
    elements: int = 0
    pairs: int = 0
    mismatches: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "exhaustive": self.exhaustive,
            "elements": self.elements,
            "pairs": self.pairs,
            "passed": self.passed,
            "mismatches": list(self.mismatches),
        }


def oracle_check(calculus: DescentCalculus, samples: Union[int, str, None] = "exhaustive",
                 seed: Optional[int] = None) -> OracleCheckResult:
    """
    Compare the engine against the permutation model.

    Per element: length, D_R, D_L and |T_R|, and injectivity of the map.
    Per pair: products and Bruhat order.

    Args:
        calculus: calculus over an A_n or B_n group
        samples: "exhaustive" for the whole group, or a number of seeded
            random elements (pairs are drawn in the same number)
        seed: random seed for sampling

    Raises:
        UnsupportedTypeError: the group has no permutation model
    """
    group = calculus.group
    model = OracleModel.for_group(group)
    exhaustive = samples in (None, "exhaustive")
    result = OracleCheckResult(group.name, exhaustive)

    def mismatch(message: str) -> None:
        logger.error(f"Oracle mismatch in {group.name}: {message}")
        result.mismatches.append(message)

    if exhaustive:
        elements = list(calculus.enumerate(model.longest_length))
        pairs = list(itertools.product(elements, repeat=2))
    else:
        rng = random.Random(settings.seed if seed is None else seed)
        count = int(samples)
        elements = [group.random_element(rng, model.longest_length) for _ in range(count)]
        pairs = [(group.random_element(rng, model.longest_length),
                  group.random_element(rng, model.longest_length)) for _ in range(count)]

    images = {}
    for w in elements:
        p = model.map(w)
        text = group.format_element(w)
        if oracle_length(p) != w.length:
            mismatch(f"length of {text}: engine {w.length}, model {oracle_length(p)}")
        if oracle_descents(p) != group.right_descents(w):
            mismatch(f"right descents of {text} differ")
        if oracle_left_descents(p) != group.left_descents(w):
            mismatch(f"left descents of {text} differ")
        if isinstance(p, Permutation):
            if len(oracle_right_inversions(p)) != len(calculus.right_inversions(w)):
                mismatch(f"right inversion count of {text} differs")
        elif oracle_length(p) != len(calculus.right_inversions(w)):
            mismatch(f"right inversion count of {text} differs")
        previous = images.setdefault(p, w)
        if previous != w:
            mismatch(f"{group.format_element(previous)} and {text} share the image {p.images}")
    result.elements = len(elements)

    for a, b in pairs:
        pa, pb = model.map(a), model.map(b)
        if model.map(group.multiply(a, b)) != oracle_compose(pa, pb):
            mismatch(f"product of {group.format_element(a)} and {group.format_element(b)} differs")
        if calculus.bruhat_leq(a, b) != oracle_bruhat_leq(pa, pb):
            mismatch(f"Bruhat comparison of {group.format_element(a)} and {group.format_element(b)} differs")
    result.pairs = len(pairs)

    logger.info(f"Oracle check on {group.name}: {result.elements} elements, "
                f"{result.pairs} pairs, {len(result.mismatches)} mismatches")
    return result
