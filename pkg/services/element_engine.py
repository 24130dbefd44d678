"""
Element arithmetic for a Coxeter group.

Elements are identified by their ShortLex-minimal reduced word. Every
descent decision is a sign test on root images, computed with the
reflection matrices of the geometric representation.
"""
import logging
import random
import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from services.coxeter_system import CoxeterError, CoxeterMatrix, bilinear_form, validate
from services.root_geometry import (
    SignClass, act, negative_columns, reflection_matrix, sign_of, simple_root, word_matrix
)
from utils.cache import ComputationCache
from utils.config import settings

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
DescentSet = FrozenSet[int]


class CapExceededError(CoxeterError):
    """A normal form would be longer than the configured length cap"""
    pass


class WordParseError(CoxeterError):
    """Textual word could not be parsed"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NormalFormError(CoxeterError):
    """Internal consistency check failed; signals a normal-form bug"""
    pass


@dataclass(frozen=True)
class GroupElement:
    """An element, stored as its canonical (ShortLex-minimal reduced) word"""
    word: Word = ()

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word

    def shortlex_key(self) -> Tuple[int, Word]:
        return (len(self.word), self.word)

    def __lt__(self, other: "GroupElement") -> bool:
        return self.shortlex_key() < other.shortlex_key()


_TOKEN = re.compile(r"[^\s.]+")


class CoxeterGroup:
    """
    The group W of a Coxeter system, with memoised normal forms.

    Elements from one group must not be mixed with another group's.
    """

    def __init__(self, matrix: CoxeterMatrix, length_cap: Optional[int] = None,
                 epsilon: Optional[float] = None, cache_size: Optional[int] = None):
        self.matrix = validate(matrix)
        self.rank = self.matrix.rank
        self.form = bilinear_form(self.matrix)
        self.length_cap = length_cap if length_cap is not None else settings.normalize_cap
        self.epsilon = epsilon if epsilon is not None else settings.epsilon
        self.reflections = tuple(reflection_matrix(s, self.form) for s in range(self.rank))
        size = cache_size or settings.cache_size
        self._normal_forms = ComputationCache("normal-forms", size)
        self._matrices = ComputationCache("element-matrices", size)
        self.identity = GroupElement(())

    def __repr__(self) -> str:
        return f"CoxeterGroup({self.matrix.describe()})"

    @property
    def name(self) -> str:
        return self.matrix.describe()

    def generator(self, s: int) -> GroupElement:
        self._check_letters((s,))
        return GroupElement((s,))

    @property
    def generators(self) -> Tuple[GroupElement, ...]:
        return tuple(GroupElement((s,)) for s in range(self.rank))

    def _check_letters(self, word: Iterable[int]) -> None:
        for s in word:
            if isinstance(s, bool) or not isinstance(s, (int, np.integer)) or not 0 <= s < self.rank:
                raise ValueError(f"letter {s!r} is not a generator of {self.name}")

    # -- geometry -----------------------------------------------------------

    def word_matrix(self, word: Sequence[int]) -> np.ndarray:
        return word_matrix(word, self.reflections)

    def element_matrix(self, w: GroupElement) -> np.ndarray:
        """Matrix of σ_w; column s is w(α_s)"""
        cached = self._matrices.get(w.word)
        if cached is not None:
            return cached
        matrix = self.word_matrix(w.word)
        matrix.setflags(write=False)
        return self._matrices.put(w.word, matrix)

    # -- descents -----------------------------------------------------------

    def is_right_descent(self, w: GroupElement, s: int) -> bool:
        """ℓ(ws) < ℓ(w), decided by the sign of w(α_s)"""
        self._check_letters((s,))
        image = act(w.word, simple_root(s, self.rank), self.form)
        return sign_of(image, self.epsilon) is SignClass.NEGATIVE

    def right_descents(self, w: GroupElement) -> DescentSet:
        return negative_columns(self.element_matrix(w), self.epsilon)

    def left_descents(self, w: GroupElement) -> DescentSet:
        """{s : ℓ(sw) < ℓ(w)} = D_R(w⁻¹)"""
        return negative_columns(self.word_matrix(w.word[::-1]), self.epsilon)

    # -- normal forms -------------------------------------------------------

    def normalize(self, raw: Sequence[int]) -> GroupElement:
        """
        Greedy ShortLex normal form of an arbitrary word.

        nf(w) = s·nf(s·w) with s the smallest left descent of w.

        Raises:
            CapExceededError: the element is longer than the length cap
            NormalFormError: the reduction did not shorten to a reduced word
        """
        raw = tuple(int(s) for s in raw)
        cached = self._normal_forms.get(raw)
        if cached is not None:
            return cached
        self._check_letters(raw)

        # columns of the matrix of (current)⁻¹ are (current)⁻¹(α_s)
        inverse_matrix = self.word_matrix(raw[::-1])
        letters: List[int] = []
        while True:
            descents = negative_columns(inverse_matrix, self.epsilon)
            if not descents:
                break
            s = min(descents)
            letters.append(s)
            if len(letters) > len(raw):
                raise NormalFormError(f"word {raw} reduced to more than {len(raw)} letters")
            if len(letters) > self.length_cap:
                raise CapExceededError(
                    f"element of {self.name} exceeds the length cap {self.length_cap}")
            inverse_matrix = inverse_matrix @ self.reflections[s]

        element = GroupElement(tuple(letters))
        return self._normal_forms.put(raw, element)

    def element(self, word: Sequence[int]) -> GroupElement:
        return self.normalize(word)

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self.normalize(a.word + b.word)

    def inverse(self, w: GroupElement) -> GroupElement:
        return self.normalize(w.word[::-1])

    def length(self, w: GroupElement) -> int:
        return len(w.word)

    def is_reduced(self, word: Sequence[int]) -> bool:
        return self.normalize(word).length == len(word)

    def conjugate(self, x: GroupElement, t: GroupElement) -> GroupElement:
        """x·t·x⁻¹"""
        return self.normalize(x.word + t.word + x.word[::-1])

    # -- text syntax --------------------------------------------------------

    def parse_word(self, text: str) -> Word:
        """
        Parse whitespace- or dot-separated generator labels ("s2 s3 s2",
        "s2.s3.s2"); "e" and the empty string denote the identity.

        Raises:
            WordParseError: unknown label, with its character position
        """
        stripped = text.strip()
        if stripped in ("", "e"):
            return ()
        letters = []
        index = {label: i for i, label in enumerate(self.matrix.labels)}
        for match in _TOKEN.finditer(text):
            token = match.group(0)
            if token == "e":
                continue
            if token not in index:
                raise WordParseError(f"unknown generator '{token}' for {self.name}", match.start())
            letters.append(index[token])
        return tuple(letters)

    def parse_element(self, text: str) -> GroupElement:
        return self.normalize(self.parse_word(text))

    def format_word(self, word: Sequence[int]) -> str:
        if not word:
            return "e"
        return " ".join(self.matrix.labels[s] for s in word)

    def format_element(self, w: GroupElement) -> str:
        return self.format_word(w.word)

    # -- sampling -----------------------------------------------------------

    def random_reduced_word(self, rng: random.Random, length: int) -> Word:
        """
        A reduced word built by appending random right ascents; stops early
        at an element without ascents (the longest element).
        """
        word: List[int] = []
        matrix = np.eye(self.rank)
        for _ in range(length):
            ascents = sorted(set(range(self.rank)) - negative_columns(matrix, self.epsilon))
            if not ascents:
                break
            s = rng.choice(ascents)
            word.append(s)
            matrix = matrix @ self.reflections[s]
        return tuple(word)

    def random_element(self, rng: random.Random, max_length: int) -> GroupElement:
        return self.normalize(self.random_reduced_word(rng, rng.randint(0, max_length)))

    def cache_stats(self) -> dict:
        return {
            "normal_forms": self._normal_forms.get_stats(),
            "element_matrices": self._matrices.get_stats(),
        }
