"""The 28 invertible symmetric 3x3 binary matrices and their classification.

The classes are

* the identity,
* ``D``: the 15 non-identity matrices with eigenvalue 1 (D1, D2, D3 are
  involutions with a 2-dimensional eigenspace, the rest have a
  1-dimensional one),
* ``U`` and ``V``: two classes of 6 matrices each without eigenvalues;
  together with 0 and the identity each class forms a field with 8
  elements.

The index assignment inside each class is data, not derivable: the
explicit double-six isomorphism depends on it.  The tables below are the
canonical atlas; construction re-derives everything and fails loudly on
any mismatch.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cache
from typing import Mapping

from gqlab.gf2 import (
    MAT_IDENTITY,
    SYM_IDENTITY,
    eigenspace_dim,
    inverse3,
    is_symmetric,
    mat_mul,
    mat_to_sym,
    row_times_mat,
    sym_det,
    sym_to_mat,
)
from gqlab.reports import CheckReport, make_report


class AtlasError(RuntimeError):
    """The hard-coded tables disagree with the recomputed classification."""


class NotInvertibleError(ValueError):
    """A singular matrix was passed where an invertible one is required."""


class WrongClassError(ValueError):
    """A matrix of the wrong class was passed to a class-specific operation."""


class MatrixClass(enum.Enum):
    IDENTITY = "identity"
    D = "D"
    U = "U"
    V = "V"


_D_BITS = tuple(
    int(s, 2)
    for s in (
        "001100", "100010", "010001", "001101", "011011",
        "011110", "010101", "100011", "100110", "101100",
        "101111", "110001", "110111", "111010", "111101",
    )
)
_U_BITS = tuple(int(s, 2) for s in ("111100", "101011", "011001", "001110", "010111", "110010"))
_V_BITS = tuple(int(s, 2) for s in ("010011", "011100", "110110", "111001", "101010", "001111"))

_CLASS_ORDER = {"D": 0, "U": 1, "V": 2}


def label_key(label: str) -> tuple[int, int]:
    """Sort key placing D1..D15 before U1..U6 before V1..V6."""
    return (_CLASS_ORDER[label[0]], int(label[1:]))


@dataclass(frozen=True)
class Atlas:
    """Verified lookup tables for the 27 non-identity invertible matrices."""

    d: tuple[int, ...]
    u: tuple[int, ...]
    v: tuple[int, ...]
    points: tuple[int, ...]
    labels: Mapping[int, str]
    by_label: Mapping[str, int]


@dataclass(frozen=True)
class FanoAction:
    """Permutation induced on the 7 nonzero row vectors by v -> v*x."""

    images: tuple[int, ...]
    fixed_points: tuple[int, ...]

    def image_of(self, point: int) -> int:
        return self.images[point - 1]

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        seen: set[int] = set()
        out = []
        for start in range(1, 8):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.image_of(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.image_of(nxt)
            out.append(tuple(cyc))
        return tuple(out)


def enumerate_invertible_symmetric() -> tuple[int, ...]:
    """All 28 invertible packed SymMat3 values, in ascending packed order."""
    return tuple(s for s in range(64) if sym_det(s) == 1)


def _powers(x: int) -> frozenset[int]:
    seen = set()
    m = sym_to_mat(x)
    acc = m
    while True:
        seen.add(mat_to_sym(acc))
        if acc == MAT_IDENTITY:
            return frozenset(seen)
        acc = mat_mul(acc, m)


@cache
def atlas() -> Atlas:
    """Build and cross-verify the canonical atlas; raises AtlasError on mismatch."""
    listed = {SYM_IDENTITY, *_D_BITS, *_U_BITS, *_V_BITS}
    if len(listed) != 28:
        raise AtlasError("atlas tables contain duplicates")
    if listed != set(enumerate_invertible_symmetric()):
        raise AtlasError("atlas tables disagree with the invertible enumeration")
    for x in _D_BITS:
        if sym_det(x ^ SYM_IDENTITY) != 0:
            raise AtlasError(f"{x:06b} listed in D has no eigenvalue 1")
    for x in _U_BITS + _V_BITS:
        if sym_det(x ^ SYM_IDENTITY) != 1:
            raise AtlasError(f"{x:06b} listed in U/V has eigenvalue 1")
    if _powers(_U_BITS[0]) != frozenset((SYM_IDENTITY, *_U_BITS)):
        raise AtlasError("U is not the multiplicative closure of U1")
    if _powers(_V_BITS[0]) != frozenset((SYM_IDENTITY, *_V_BITS)):
        raise AtlasError("V is not the multiplicative closure of V1")
    for i, x in enumerate(_D_BITS):
        want = 2 if i < 3 else 1
        if eigenspace_dim(sym_to_mat(x)) != want:
            raise AtlasError(f"D{i + 1} has eigenspace dimension != {want}")

    labels: dict[int, str] = {}
    for i, x in enumerate(_D_BITS):
        labels[x] = f"D{i + 1}"
    for i, x in enumerate(_U_BITS):
        labels[x] = f"U{i + 1}"
    for i, x in enumerate(_V_BITS):
        labels[x] = f"V{i + 1}"
    by_label = {lab: x for x, lab in labels.items()}
    return Atlas(
        d=_D_BITS,
        u=_U_BITS,
        v=_V_BITS,
        points=_D_BITS + _U_BITS + _V_BITS,
        labels=labels,
        by_label=by_label,
    )


def classify(x: int) -> MatrixClass:
    """Class of an invertible SymMat3; raises NotInvertibleError on det 0."""
    if sym_det(x) != 1:
        raise NotInvertibleError(f"matrix {x:06b} has determinant 0")
    if x == SYM_IDENTITY:
        return MatrixClass.IDENTITY
    if sym_det(x ^ SYM_IDENTITY) == 0:
        return MatrixClass.D
    return MatrixClass.U if x in atlas().u else MatrixClass.V


def label_of(x: int) -> str:
    """Canonical label D1..V6 of a point, or "1" for the identity."""
    if x == SYM_IDENTITY:
        return "1"
    return atlas().labels[x]


def matrix_of(label: str) -> int:
    if label == "1":
        return SYM_IDENTITY
    return atlas().by_label[label]


def multiplicative_closure(x: int) -> frozenset[int]:
    """The powers {x, x^2, ..., 1}; defined for the eigenvalue-free classes."""
    if classify(x) not in (MatrixClass.U, MatrixClass.V):
        raise WrongClassError(f"matrix {x:06b} has an eigenvalue; no GF(8) closure")
    return _powers(x)


def fano_action(x: int) -> FanoAction:
    """Permutation of the 7 points of the Fano plane induced from the right."""
    if sym_det(x) != 1:
        raise NotInvertibleError(f"matrix {x:06b} has determinant 0")
    m = sym_to_mat(x)
    images = tuple(row_times_mat(v, m) for v in range(1, 8))
    fixed = tuple(v for v in range(1, 8) if images[v - 1] == v)
    return FanoAction(images=images, fixed_points=fixed)


def jordan_closure_check() -> CheckReport:
    """Inverses of invertible symmetric matrices and all products A*B*A stay symmetric."""
    bad = []
    for a in enumerate_invertible_symmetric():
        am = sym_to_mat(a)
        if not is_symmetric(inverse3(am)):
            bad.append(f"inverse({a:06b})")
        for b in range(64):
            if not is_symmetric(mat_mul(mat_mul(am, sym_to_mat(b)), am)):
                bad.append(f"{a:06b}*{b:06b}*{a:06b}")
    actual = "closed for all 28x64 pairs" if not bad else f"violations: {bad[:3]}"
    return make_report(
        "sec3.jordan-closure",
        "inverse and (A,B) -> ABA stay inside the symmetric matrices",
        "closed for all 28x64 pairs",
        actual,
    )


__all__ = [
    "Atlas",
    "AtlasError",
    "FanoAction",
    "MatrixClass",
    "NotInvertibleError",
    "WrongClassError",
    "atlas",
    "classify",
    "enumerate_invertible_symmetric",
    "fano_action",
    "jordan_closure_check",
    "label_key",
    "label_of",
    "matrix_of",
    "multiplicative_closure",
]
