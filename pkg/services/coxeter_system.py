"""
Coxeter systems (W, S): bond matrices, the named-type catalog, the bilinear
form of the geometric representation and the group-spec file format.
"""
import json
import math
import re
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

logger = logging.getLogger(__name__)

# Sentinel for m(s,t) = ∞; a float, so it never collides with an integer bond
INFINITY = math.inf

Bond = Union[int, float]


class CoxeterError(Exception):
    """Base class for every error raised by the Coxeter kernel"""
    pass


class CoxeterMatrixError(CoxeterError):
    """A candidate matrix violates a Coxeter matrix invariant"""

    def __init__(self, message: str, pair: Optional[Tuple[int, int]] = None):
        super().__init__(message if pair is None else f"{message} at (s{pair[0]}, s{pair[1]})")
        self.pair = pair


class GroupSpecError(CoxeterError):
    """Unknown catalog name, bad parameter or malformed group-spec document"""
    pass


@dataclass(frozen=True)
class GeneratorId:
    index: int
    label: str


@dataclass(frozen=True)
class CoxeterMatrix:
    """Validated symmetric bond matrix; `name` is the catalog name when known"""
    bonds: Tuple[Tuple[Bond, ...], ...]
    name: Optional[str] = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.bonds)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(f"s{i}" for i in range(self.rank))

    @property
    def generators(self) -> Tuple[GeneratorId, ...]:
        return tuple(GeneratorId(i, label) for i, label in enumerate(self.labels))

    def bond(self, s: int, t: int) -> Bond:
        return self.bonds[s][t]

    def has_infinite_bond(self) -> bool:
        return any(m == INFINITY for row in self.bonds for m in row)

    def describe(self) -> str:
        return self.name or f"custom rank {self.rank}"


@dataclass(frozen=True)
class ParabolicMask:
    """A subset J of the generator indices"""
    members: FrozenSet[int] = frozenset()

    @classmethod
    def of(cls, members: Iterable[int]) -> "ParabolicMask":
        return cls(frozenset(members))

    @classmethod
    def full(cls, rank: int) -> "ParabolicMask":
        return cls(frozenset(range(rank)))

    def complement(self, rank: int) -> "ParabolicMask":
        return ParabolicMask(frozenset(range(rank)) - self.members)

    def union(self, other: Iterable[int]) -> "ParabolicMask":
        return ParabolicMask(self.members | frozenset(other))

    def without(self, s: int) -> "ParabolicMask":
        return ParabolicMask(self.members - {s})

    def __contains__(self, s: object) -> bool:
        return s in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (len(self.members), tuple(sorted(self.members)))

    def label(self) -> str:
        return "{" + ",".join(f"s{i}" for i in self) + "}"


def _is_bond_value(m: Any) -> bool:
    if m == INFINITY:
        return True
    return isinstance(m, (int, np.integer)) and not isinstance(m, bool)


def validate(candidate: Union[CoxeterMatrix, Sequence[Sequence[Bond]]],
             name: Optional[str] = None) -> CoxeterMatrix:
    """
    Check every Coxeter matrix invariant and return the frozen matrix.

    Args:
        candidate: CoxeterMatrix or square nested sequence of bonds
        name: optional catalog name carried by the result

    Returns:
        CoxeterMatrix: the validated matrix

    Raises:
        CoxeterMatrixError: first violated invariant with the offending pair
    """
    if isinstance(candidate, CoxeterMatrix):
        name = name or candidate.name
        rows = candidate.bonds
    else:
        rows = candidate
    rank = len(rows)
    if rank == 0:
        raise CoxeterMatrixError("rank must be positive")
    for i, row in enumerate(rows):
        if len(row) != rank:
            raise CoxeterMatrixError(f"row {i} has {len(row)} entries, expected {rank}")

    for s in range(rank):
        for t in range(rank):
            m = rows[s][t]
            if not _is_bond_value(m):
                raise CoxeterMatrixError(f"bond {m!r} is neither an integer nor infinity", (s, t))
            if s == t:
                if m != 1:
                    raise CoxeterMatrixError(f"bad diagonal: m = {m}, expected 1", (s, t))
                continue
            if m == 1:
                raise CoxeterMatrixError("diagonal-only ones violated", (s, t))
            if m < 2:
                raise CoxeterMatrixError(f"off-diagonal bond {m} < 2", (s, t))
            if rows[t][s] != m:
                raise CoxeterMatrixError(f"asymmetry: m(s,t) = {m}, m(t,s) = {rows[t][s]}", (s, t))

    bonds = tuple(tuple(m if m == INFINITY else int(m) for m in row) for row in rows)
    return CoxeterMatrix(bonds=bonds, name=name)


def _from_bonds(rank: int, bonds: Iterable[Tuple[int, int, Bond]], name: Optional[str]) -> CoxeterMatrix:
    rows: List[List[Bond]] = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
    for i, j, m in bonds:
        rows[i][j] = m
        rows[j][i] = m
    return validate(rows, name=name)


def _chain(start: int, stop: int) -> List[Tuple[int, int, Bond]]:
    return [(i, i + 1, 3) for i in range(start, stop - 1)]


_NAME_PATTERN = re.compile(r"^(A|B|D|H|F|E)_?(\d+)$")
_DIHEDRAL_PATTERN = re.compile(r"^I_?2\((\d+|inf|∞)\)$")


def from_named_type(name: str) -> CoxeterMatrix:
    """
    Standard bond matrix for a catalog type.

    Accepted names: A_n (n≥1), B_n (n≥2), D_n (n≥4), I2(m) (m≥3 or inf),
    H3, H4, F4, E6; the underscore is optional ("B4" == "B_4").
    B_n carries the 4-bond at (s0, s1) followed by the chain s1–s2–…

    Raises:
        GroupSpecError: unknown name or parameter out of range
    """
    text = name.strip()
    dihedral = _DIHEDRAL_PATTERN.match(text)
    if dihedral:
        raw = dihedral.group(1)
        m: Bond = INFINITY if raw in ("inf", "∞") else int(raw)
        if m != INFINITY and m < 3:
            raise GroupSpecError(f"I2(m) needs m >= 3 or inf, got {m}")
        label = "inf" if m == INFINITY else str(m)
        return _from_bonds(2, [(0, 1, m)], f"I2({label})")

    match = _NAME_PATTERN.match(text)
    if not match:
        raise GroupSpecError(f"Unknown Coxeter type '{name}'")
    family, n = match.group(1), int(match.group(2))
    canonical = f"{family}{n}"

    if family == "A":
        if n < 1:
            raise GroupSpecError("A_n needs n >= 1")
        return _from_bonds(n, _chain(0, n), canonical)
    if family == "B":
        if n < 2:
            raise GroupSpecError("B_n needs n >= 2")
        return _from_bonds(n, [(0, 1, 4)] + _chain(1, n), canonical)
    if family == "D":
        if n < 4:
            raise GroupSpecError("D_n needs n >= 4")
        return _from_bonds(n, [(0, 2, 3), (1, 2, 3)] + _chain(2, n), canonical)

    exceptional = {
        "H3": [(0, 1, 5), (1, 2, 3)],
        "H4": [(0, 1, 5), (1, 2, 3), (2, 3, 3)],
        "F4": [(0, 1, 3), (1, 2, 4), (2, 3, 3)],
        "E6": [(0, 2, 3), (2, 3, 3), (3, 4, 3), (4, 5, 3), (1, 3, 3)],
    }
    if canonical not in exceptional:
        raise GroupSpecError(f"Unknown Coxeter type '{name}'")
    return _from_bonds(n, exceptional[canonical], canonical)


def catalog_names(rank: int) -> List[str]:
    """Catalog entries of a given rank (dihedral types excluded)"""
    names = [f"A{rank}"]
    if rank >= 2:
        names.append(f"B{rank}")
    if rank >= 4:
        names.append(f"D{rank}")
    names += [n for n in ("H3", "H4", "F4", "E6") if int(n[1]) == rank]
    return names


def identify_catalog_type(matrix: CoxeterMatrix) -> Optional[str]:
    """Name of the catalog type with exactly this matrix, or None"""
    if matrix.rank == 2:
        m = matrix.bond(0, 1)
        if m == INFINITY:
            return "I2(inf)"
        if m == 3:
            return "A2"
        if m == 4:
            return "B2"
        if m >= 3:
            return f"I2({m})"
        return None
    for name in catalog_names(matrix.rank):
        if from_named_type(name) == matrix:
            return name
    return None


def is_known_finite(matrix: CoxeterMatrix) -> bool:
    """True when the matrix is a catalog type other than I2(inf)"""
    name = identify_catalog_type(matrix)
    return name is not None and name != "I2(inf)"


def bilinear_form(matrix: CoxeterMatrix) -> np.ndarray:
    """
    Matrix of (α_s|α_t) = -cos(π/m(s,t)); ∞ bonds give exactly -1.

    The returned array is read-only.
    """
    rank = matrix.rank
    form = np.empty((rank, rank), dtype=float)
    for s in range(rank):
        for t in range(rank):
            m = matrix.bond(s, t)
            form[s, t] = -1.0 if m == INFINITY else -math.cos(math.pi / m)
    form.setflags(write=False)
    return form


@dataclass(frozen=True)
class GroupSpec:
    matrix: CoxeterMatrix
    cap: Optional[int] = None


def _parse_bond(value: Any) -> Bond:
    if isinstance(value, str):
        if value.strip().lower() in ("inf", "∞"):
            return INFINITY
        try:
            return int(value)
        except ValueError:
            raise GroupSpecError(f"bond value {value!r} is not an integer or 'inf'")
    if isinstance(value, bool) or not isinstance(value, int):
        raise GroupSpecError(f"bond value {value!r} is not an integer or 'inf'")
    return value


def group_spec_from_dict(document: Dict[str, Any]) -> GroupSpec:
    """Resolve a decoded group-spec document into a validated GroupSpec"""
    if not isinstance(document, dict):
        raise GroupSpecError("group spec must be a JSON object")
    cap = document.get("cap")
    if cap is not None and (isinstance(cap, bool) or not isinstance(cap, int) or cap < 0):
        raise GroupSpecError(f"cap must be a non-negative integer, got {cap!r}")

    type_name = document.get("type")
    if type_name is not None and type_name != "custom":
        return GroupSpec(from_named_type(str(type_name)), cap)

    if "rank" not in document:
        raise GroupSpecError("group spec needs either 'type' or 'rank'")
    rank = document["rank"]
    if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
        raise GroupSpecError(f"rank must be a positive integer, got {rank!r}")
    triples = []
    for entry in document.get("bonds", []):
        if not isinstance(entry, (list, tuple)) or len(entry) != 3:
            raise GroupSpecError(f"bond entry {entry!r} is not a triple [i, j, m]")
        i, j, m = entry
        if not all(isinstance(x, int) and not isinstance(x, bool) and 0 <= x < rank for x in (i, j)):
            raise GroupSpecError(f"bond entry {entry!r} names a generator outside 0..{rank - 1}")
        if i == j:
            raise GroupSpecError(f"bond entry {entry!r} sits on the diagonal")
        triples.append((i, j, _parse_bond(m)))
    try:
        matrix = _from_bonds(rank, triples, None)
    except CoxeterMatrixError as e:
        raise GroupSpecError(f"invalid bonds: {e}")
    name = identify_catalog_type(matrix)
    return GroupSpec(CoxeterMatrix(matrix.bonds, name=name), cap)


def parse_group_spec(text: str) -> GroupSpec:
    """Parse a JSON group-spec document"""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise GroupSpecError(f"group spec is not valid JSON: {e}")
    return group_spec_from_dict(document)


def serialize_group_spec(spec: GroupSpec) -> str:
    """
    Canonical text for a GroupSpec: rank plus the non-2 bonds [i, j, m] with
    i < j in row-major order, ∞ written as "inf", sorted keys.
    """
    matrix = spec.matrix
    bonds = []
    for i in range(matrix.rank):
        for j in range(i + 1, matrix.rank):
            m = matrix.bond(i, j)
            if m != 2:
                bonds.append([i, j, "inf" if m == INFINITY else m])
    document: Dict[str, Any] = {"rank": matrix.rank, "bonds": bonds}
    if spec.cap is not None:
        document["cap"] = spec.cap
    return json.dumps(document, sort_keys=True)


def load_group_spec(path: str) -> GroupSpec:
    """Read and parse a group-spec file"""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as e:
        raise GroupSpecError(f"cannot read group spec '{path}': {e}")
    spec = parse_group_spec(text)
    logger.info(f"Loaded group spec {spec.matrix.describe()} from {path}")
    return spec
