"""Exact numerics for Weyl modules over an affine algebra at non-critical level.

Everything here works with a finite-dimensional irreducible M of highest
weight ``m_hw`` and the shifted weight ``lambda = m_hw + rho``.  The induced
module Ind(M) at central parameter kappa (the generator K acts by
kappa - h_dual, so kappa = 0 is the critical value) is epsilon-graded, and the
Sugawara operator L0 acts on the degree-n layer by the scalar

    a / (2 kappa) + n,        a = Casimir scalar of M.

A proper graded submodule must contain a singular vector, and a singular
vector of weight ``m_hw + mu`` at degree n forces the exact resonance

    q(mu) := |mu|^2 + 2 (lambda, mu) = 2 kappa n,   mu in the root lattice.

This module enumerates the solutions of that equation (candidate pairs),
derives the Kostant-style lower bound C = min q, and turns the two into
irreducibility certificates and composition-length bounds.  All arithmetic is
exact: rational kappa stays in Fraction, non-real kappa in ComplexRational.
"""

from __future__ import annotations

from fractions import Fraction

from .finite_rep import length_of
from .graded_sym import weyl_level_decomposition
from .rational import ComplexRational, scalar_im, scalar_re
from .root_system import (
    RootVector,
    Weight,
    enumerate_root_lattice_ball,
    norm_sq,
    pair_weight_root,
    root_norm_sq,
)

__all__ = [
    "CandidatePair",
    "ComplexRational",
    "DeltaBound",
    "IrreducibilityVerdict",
    "candidate_pairs",
    "delta_upper_bound",
    "exhaustive_level_bound",
    "in_X_lambda",
    "in_Y_lambda",
    "irreducibility_certificate",
    "kostant_bound_C",
    "resonance_value",
    "top_l0_eigenvalue",
]

CERTIFIED = "CertifiedIrreducible"
INCONCLUSIVE = "Inconclusive"
REASON_KOSTANT = "KostantBound"
REASON_OUTSIDE_X = "OutsideXLambda"


class CandidatePair:
    """A solution (mu, n) of q(mu) = 2 kappa n with 0 <= n.

    ``xi`` is the L0 eigenvalue (|lambda|^2 - |rho|^2) / (2 kappa) + n of the
    degree-n layer that a singular vector of weight lambda - rho + mu would
    inhabit.
    """

    __slots__ = ("mu", "n", "xi")

    def __init__(self, mu: RootVector, n: int, xi):
        self.mu = mu
        self.n = n
        self.xi = xi

    def __eq__(self, other):
        if not isinstance(other, CandidatePair):
            return NotImplemented
        return (self.mu, self.n, self.xi) == (other.mu, other.n, other.xi)

    def __hash__(self):
        return hash((self.mu, self.n, self.xi))

    def __repr__(self):
        return "CandidatePair(mu=%r, n=%d, xi=%r)" % (self.mu, self.n, self.xi)


class IrreducibilityVerdict:
    """Outcome of the certificate check.

    status is CERTIFIED or INCONCLUSIVE; reason is REASON_KOSTANT,
    REASON_OUTSIDE_X or None; candidates holds the unexcluded nonzero-degree
    candidate pairs (empty when certified).
    """

    __slots__ = ("status", "reason", "candidates")

    def __init__(self, status: str, reason, candidates=()):
        self.status = status
        self.reason = reason
        self.candidates = tuple(candidates)

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED

    def __repr__(self):
        return "IrreducibilityVerdict(status=%r, reason=%r, candidates=%r)" % (
            self.status,
            self.reason,
            self.candidates,
        )


def _check_kappa(kappa) -> None:
    """Reject kappa in R_{>=0}; there the Sugawara normalisation degenerates
    (kappa = 0) or the module is in the integrable regime we do not treat."""
    if scalar_im(kappa) == 0 and scalar_re(kappa) >= 0:
        raise ValueError("kappa must lie outside the nonnegative real axis")


def top_l0_eigenvalue(a, kappa):
    """L0 scalar a / (2 kappa) on the degree-0 layer, a = Casimir of M."""
    if scalar_im(kappa) == 0:
        return Fraction(a) / (2 * scalar_re(kappa))
    return Fraction(a) / (2 * kappa)


def resonance_value(lam: Weight, mu: RootVector):
    """q(mu) = |mu|^2 + 2 (lambda, mu), exact."""
    return root_norm_sq(mu) + 2 * pair_weight_root(lam, mu)


def kostant_bound_C(lam: Weight) -> Fraction:
    """min over the root lattice of q(mu); always <= 0 because q(0) = 0.

    Since q(mu) = |mu + lambda|^2 - |lambda|^2 the minimum is attained inside
    the ball |mu + lambda|^2 <= |lambda|^2, which is finite.
    """
    algebra = lam.algebra
    best = Fraction(0)
    for mu in enumerate_root_lattice_ball(algebra, lam, norm_sq(lam)):
        q = resonance_value(lam, mu)
        if q < best:
            best = q
    return best


def exhaustive_level_bound(lam: Weight, kappa) -> int:
    """Largest degree n that can carry a resonance for this lambda, kappa.

    For non-real kappa only n = 0 can occur.  For real negative kappa,
    2 kappa n = q(mu) >= C forces n <= C / (2 kappa).
    """
    _check_kappa(kappa)
    if scalar_im(kappa) != 0:
        return 0
    c = kostant_bound_C(lam)
    ratio = c / (2 * scalar_re(kappa))
    return ratio.numerator // ratio.denominator


def candidate_pairs(lam: Weight, kappa, n_max: int):
    """All (mu, n) with q(mu) = 2 kappa n and 0 <= n <= n_max.

    Returned sorted by (n, lexicographic mu).  mu = 0, n = 0 is always
    present.  Raises for kappa on the nonnegative real axis.
    """
    _check_kappa(kappa)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    algebra = lam.algebra
    xi0 = top_l0_eigenvalue(norm_sq(lam) - norm_sq(algebra.rho), kappa)
    real = scalar_im(kappa) == 0
    pairs = []
    # q(mu) = 2 kappa n <= 0 for every admissible n, so the ball q <= 0
    # already contains every solution regardless of n.
    for mu in enumerate_root_lattice_ball(algebra, lam, norm_sq(lam)):
        q = resonance_value(lam, mu)
        if q > 0:
            continue
        if real:
            n = q / (2 * scalar_re(kappa))
            if n.denominator != 1 or n > n_max:
                continue
            n = int(n)
        else:
            if q != 0:
                continue
            n = 0
        pairs.append(CandidatePair(mu, n, xi0 + n))
    pairs.sort(key=lambda p: (p.n, p.mu.coords))
    return pairs


def in_X_lambda(kappa, lam: Weight) -> bool:
    """Whether kappa lies in X_lambda = {q(mu) / 2n : mu in Q, n >= 1}."""
    _check_kappa(kappa)
    if scalar_im(kappa) != 0:
        return False
    bound = exhaustive_level_bound(lam, kappa)
    if bound < 1:
        return False
    return any(p.n >= 1 for p in candidate_pairs(lam, kappa, bound))


def in_Y_lambda(kappa, lam: Weight) -> bool:
    """Whether kappa lies in Y_lambda; for our rational lambda this is exactly
    the rationality of kappa."""
    return scalar_im(kappa) == 0


class DeltaBound:
    """Upper bound for the composition length of Ind(M)."""

    __slots__ = ("value", "complete")

    def __init__(self, value: int, complete: bool):
        self.value = value
        self.complete = complete

    def __iter__(self):
        return iter((self.value, self.complete))

    def __eq__(self, other):
        if isinstance(other, DeltaBound):
            return (self.value, self.complete) == (other.value, other.complete)
        if isinstance(other, tuple):
            return (self.value, self.complete) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.complete))

    def __repr__(self):
        return "DeltaBound(value=%d, complete=%r)" % (self.value, self.complete)


def delta_upper_bound(m_hw: Weight, kappa, n_max: int) -> DeltaBound:
    """Bound the length of Ind(M) by the lengths of the resonant layers.

    Every subquotient is generated by a singular vector sitting in some
    candidate degree n, and the degree-n layer is the finite g-module
    S(ad)_n tensor M.  Summing length_of over the distinct candidate degrees
    n <= n_max therefore bounds the composition length from above.  The bound
    is complete when the candidate scan up to n_max is exhaustive (degree 0,
    i.e. M itself, is always a candidate via mu = 0).
    """
    _check_kappa(kappa)
    algebra = m_hw.algebra
    lam = m_hw + algebra.rho
    full = exhaustive_level_bound(lam, kappa)
    levels = sorted({p.n for p in candidate_pairs(lam, kappa, n_max)})
    total = 0
    for n in levels:
        total += length_of(weyl_level_decomposition(algebra, m_hw, n))
    return DeltaBound(total, full <= n_max)


def irreducibility_certificate(m_hw: Weight, kappa) -> IrreducibilityVerdict:
    """Certify Ind(M) irreducible, or report the surviving candidates.

    Certification happens in two informative flavours.  KostantBound: kappa is
    real with re(kappa) < C/2 < 0, so 2 kappa n < C for every n >= 1 and no
    resonance can occur.  OutsideXLambda: kappa avoids the set X_lambda of
    resonance ratios (automatic for non-real kappa, where only degree 0 could
    resonate).  Either way no positive-degree candidate exists, hence no
    singular vector and no proper graded submodule.  Otherwise the verdict is
    Inconclusive and carries the nonzero-degree candidates.
    """
    _check_kappa(kappa)
    algebra = m_hw.algebra
    lam = m_hw + algebra.rho
    c = kostant_bound_C(lam)
    if scalar_im(kappa) == 0 and c < 0 and scalar_re(kappa) < c / 2:
        return IrreducibilityVerdict(CERTIFIED, REASON_KOSTANT)
    if not in_X_lambda(kappa, lam):
        return IrreducibilityVerdict(CERTIFIED, REASON_OUTSIDE_X)
    bound = exhaustive_level_bound(lam, kappa)
    positive = [p for p in candidate_pairs(lam, kappa, bound) if p.n >= 1]
    assert positive, "inconclusive verdict requires a surviving candidate"
    return IrreducibilityVerdict(INCONCLUSIVE, None, positive)
