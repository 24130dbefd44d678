"""
Standard geometric representation: simple roots, reflections σ_s acting on
root vectors, and the sign test behind every descent decision.

Action convention: a word s1…sk acts as σ_s1(σ_s2(…σ_sk(v)…)), so
w(α_s) is negative exactly when s is a right descent of w.
"""
import logging
from enum import Enum
from functools import reduce
from typing import FrozenSet, Optional, Sequence

import numpy as np

from services.coxeter_system import CoxeterError
from utils.config import settings

logger = logging.getLogger(__name__)


class SignClass(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


class DegenerateSignError(CoxeterError):
    """A root vector is numerically zero or has coordinates of both signs"""
    pass


def _tolerance(epsilon: Optional[float]) -> float:
    return settings.epsilon if epsilon is None else epsilon


def simple_root(s: int, rank: int) -> np.ndarray:
    """Basis vector α_s in coordinates over the simple roots"""
    if not 0 <= s < rank:
        raise ValueError(f"generator s{s} outside rank {rank}")
    root = np.zeros(rank, dtype=float)
    root[s] = 1.0
    return root


def form_product(u: np.ndarray, v: np.ndarray, form: np.ndarray) -> float:
    """(u|v) for the bilinear form"""
    return float(u @ form @ v)


def reflect(s: int, v: np.ndarray, form: np.ndarray) -> np.ndarray:
    """σ_s(v) = v - 2(α_s|v)α_s"""
    result = np.array(v, dtype=float)
    result[s] -= 2.0 * float(form[s] @ v)
    return result


def act(word: Sequence[int], v: np.ndarray, form: np.ndarray) -> np.ndarray:
    """Left action of a word: the last letter is applied first"""
    result = np.array(v, dtype=float)
    for s in reversed(word):
        result = reflect(s, result, form)
    return result


def reflection_matrix(s: int, form: np.ndarray) -> np.ndarray:
    """Matrix of σ_s, i.e. I - 2 e_s (α_s|·)"""
    rank = form.shape[0]
    matrix = np.eye(rank)
    matrix[s, :] -= 2.0 * form[s, :]
    matrix.setflags(write=False)
    return matrix


def word_matrix(word: Sequence[int], reflections: Sequence[np.ndarray]) -> np.ndarray:
    """Matrix of σ_w = σ_s1 ⋯ σ_sk"""
    rank = reflections[0].shape[0] if reflections else 0
    return reduce(np.matmul, (reflections[s] for s in word), np.eye(rank))


def sign_of(v: np.ndarray, epsilon: Optional[float] = None) -> SignClass:
    """
    Classify a vector of the root orbit as positive or negative.

    The coordinate of largest magnitude decides the sign.

    Raises:
        DegenerateSignError: all coordinates within ε of zero, or coordinates
            of both signs beyond ε
    """
    eps = _tolerance(epsilon)
    v = np.asarray(v, dtype=float)
    high, low = float(v.max()), float(v.min())
    if high <= eps and low >= -eps:
        raise DegenerateSignError(f"vector {v.tolist()} is within {eps} of zero")
    if high > eps and low < -eps:
        raise DegenerateSignError(f"vector {v.tolist()} has coordinates of both signs")
    return SignClass.POSITIVE if high >= -low else SignClass.NEGATIVE


def negative_columns(matrix: np.ndarray, epsilon: Optional[float] = None) -> FrozenSet[int]:
    """
    Indices s whose column (the image of α_s) classifies as negative.

    Same tolerance rules as sign_of, evaluated column-wise.
    """
    eps = _tolerance(epsilon)
    highs = matrix.max(axis=0)
    lows = matrix.min(axis=0)
    degenerate = ((highs <= eps) & (lows >= -eps)) | ((highs > eps) & (lows < -eps))
    if degenerate.any():
        column = int(np.flatnonzero(degenerate)[0])
        logger.error(f"Degenerate root image in column {column}: {matrix[:, column].tolist()}")
        raise DegenerateSignError(
            f"image of α_s{column} {matrix[:, column].tolist()} cannot be classified at ε={eps}")
    return frozenset(int(s) for s in np.flatnonzero(lows < -eps))
