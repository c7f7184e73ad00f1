"""Closed-form determinant of a split graph.

With ``k = |K| >= 2`` and ``r = R^t 1`` (independent-vertex degrees),

    det A(Sp) = (-1)^(k-1) (k-1) det(R^t R - r r^t / (k-1)),

from the Schur complement of the ``J - I`` block, whose inverse is
``J/(k-1) - I``.  When ``R`` has
trivial kernel, ``R^t R`` is invertible and the matrix determinant lemma gives
``det(R^t R - r r^t/(k-1)) = (1 - r^t (R^t R)^{-1} r / (k-1)) det(R^t R)``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, TheoremViolation
from .linalg import QMatrix, Rational, _det_int, det_bareiss, dot, inverse, q, rank
from .split import SplitGraph

__all__ = [
    "degree_vector",
    "schur_core",
    "det_split_schur",
    "det_split_lemma",
    "singularity_form",
    "singularity_criterion",
]


def degree_vector(sp: SplitGraph) -> tuple:
    """``r = R^t 1``: number of clique neighbours of each independent vertex."""
    return tuple(sum(col) for col in zip(*sp.R.tolist())) if sp.k else (0,) * sp.s


def _gram(sp: SplitGraph) -> QMatrix:
    return sp.R.T @ sp.R


def schur_core(sp: SplitGraph) -> QMatrix:
    """``R^t R - r r^t / (k-1)``."""
    k = sp.k
    if k < 2:
        raise DomainError("determinant formula requires |K| >= 2")
    r = degree_vector(sp)
    c = Fraction(1, k - 1)
    G = _gram(sp)
    s = sp.s
    return QMatrix._wrap(
        tuple(tuple(q(G[i, j] - c * r[i] * r[j]) for j in range(s)) for i in range(s)),
        s,
        s,
    )


def det_split_lemma(sp: SplitGraph) -> Rational:
    """``(-1)^(k-1)(k-1)(1 - r^t (R^t R)^{-1} r/(k-1)) det(R^t R)``; needs ``nul(R) = 0``."""
    k = sp.k
    if k < 2:
        raise DomainError("determinant formula requires |K| >= 2")
    if rank(sp.R) != sp.s:
        raise DomainError("matrix determinant lemma form requires nul(R) = 0")
    G = _gram(sp)
    r = degree_vector(sp)
    quad = dot(r, inverse(G) @ r)
    core = q((1 - Fraction(quad) / (k - 1)) * det_bareiss(G))
    return q((-1) ** (k - 1) * (k - 1) * core)


def det_split_schur(sp: SplitGraph) -> Rational:
    """Determinant of ``A(Sp)`` from the Schur-complement formula.

    When ``nul(R) = 0`` the matrix-determinant-lemma form is evaluated too and
    the two must agree exactly.
    """
    k = sp.k
    if k < 2:
        raise DomainError("determinant formula requires |K| >= 2")
    # det(G - r r^t/(k-1)) = det((k-1) G - r r^t) / (k-1)^s keeps the work integral
    r = degree_vector(sp)
    G = _gram(sp)._data
    scaled = [[(k - 1) * G[i][j] - r[i] * r[j] for j in range(sp.s)] for i in range(sp.s)]
    core = Fraction(_det_int(scaled), (k - 1) ** sp.s)
    value = q((-1) ** (k - 1) * (k - 1) * core)
    if rank(sp.R) == sp.s and det_split_lemma(sp) != value:
        raise TheoremViolation("Schur and determinant-lemma forms disagree")
    return value


def singularity_form(sp: SplitGraph) -> Rational:
    """``1^t R (R^t R)^{-1} R^t 1``; needs ``|K| >= 2`` and ``nul(R) = 0``."""
    if sp.k < 2:
        raise DomainError("singularity criterion requires |K| >= 2")
    if rank(sp.R) != sp.s:
        raise DomainError("singularity criterion requires nul(R) = 0")
    r = degree_vector(sp)
    return dot(r, inverse(_gram(sp)) @ r)


def singularity_criterion(sp: SplitGraph) -> bool:
    """True iff ``Sp`` is singular, decided by ``1^t R (R^t R)^{-1} R^t 1 == |K| - 1``."""
    return singularity_form(sp) == sp.k - 1
