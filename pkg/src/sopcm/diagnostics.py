"""Multiplicity defect profiles along a sop, and the early-CM probe.

For each prefix quotient the Hilbert series is read off the Groebner initial
ideal; the kernel series of the i-th multiplication map is then forced by

    Hilb_i(t) = (1 - t^{a_i}) Hilb_{i-1}(t) + Hilb_{K_i}(t),

so no colon ideals are ever computed.  A sop is a regular sequence exactly
when every kernel vanishes, and the defect decomposition

    length = a_1...a_d e(R) + sum over full-dimensional kernels

is checked as an exact integer identity on every profile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .exceptions import NotASopError, PipelineInvariantError
from .field import PrimeField
from .groebner import FieldPolynomial, buchberger, initial_ideal
from .hilbert import HilbertSeries, divide_by_one_minus_t, hilbert_series, poly_mul, poly_sub


@dataclass(frozen=True)
class DefectStep:
    """Data of one sop element: the quotient series after it, and the kernel
    it has on the previous quotient (dimension -1 when the kernel is zero)."""

    degree: int
    hilb_quotient: HilbertSeries
    kernel_numerator: tuple
    kernel_pole: int
    dim_kernel: int
    e_kernel: int

    @property
    def is_obstruction(self) -> bool:
        return self.dim_kernel >= 0

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "quotient_numerator": list(self.hilb_quotient.numerator),
            "quotient_dim": self.hilb_quotient.pole_order,
            "kernel_numerator": list(self.kernel_numerator),
            "kernel_pole": self.kernel_pole,
            "dim_kernel": self.dim_kernel,
            "e_kernel": self.e_kernel,
        }


@dataclass(frozen=True)
class DefectProfile:
    base: HilbertSeries
    steps: tuple
    field_char: int

    @property
    def d(self) -> int:
        return self.base.pole_order

    @property
    def degrees(self) -> tuple:
        return tuple(s.degree for s in self.steps)

    @property
    def length(self) -> int:
        """Length of the final artinian quotient."""
        return self.steps[-1].hilb_quotient.multiplicity if self.steps else self.base.multiplicity

    @property
    def degree_product(self) -> int:
        return math.prod(self.degrees)

    @property
    def total_defect(self) -> int:
        return self.length - self.degree_product * self.base.multiplicity

    @property
    def is_regular_sequence(self) -> bool:
        return all(not s.is_obstruction for s in self.steps)

    def to_json(self) -> dict:
        return {
            "p": self.field_char,
            "base_numerator": list(self.base.numerator),
            "d": self.d,
            "e": self.base.multiplicity,
            "degrees": list(self.degrees),
            "length": self.length,
            "degree_product": self.degree_product,
            "total_defect": self.total_defect,
            "cm": self.total_defect == 0,
            "steps": [s.to_json() for s in self.steps],
        }


def _series_of(gens: Sequence[FieldPolynomial]) -> HilbertSeries:
    return hilbert_series(initial_ideal(buchberger(gens)))


def _nonnegative_expansion(numerator: tuple, pole: int, upto: int) -> bool:
    coeffs = list(numerator) + [0] * max(0, upto + 1 - len(numerator))
    coeffs = coeffs[: upto + 1]
    for _ in range(pole):
        acc = 0
        for i, c in enumerate(coeffs):
            acc += c
            coeffs[i] = acc
    return all(c >= 0 for c in coeffs)


def defect_profile(
    gens: Sequence[FieldPolynomial],
    sop: Sequence[FieldPolynomial],
    field: PrimeField,
    truncation: Optional[int] = None,
) -> DefectProfile:
    """Per-step Hilbert data of the quotients R/(f_1..f_i) with derived
    kernel series; rejects form sequences that fail to reach dimension zero."""
    gens = [g for g in gens if not g.is_zero]
    sop = list(sop)
    if not all(g.is_homogeneous for g in list(gens) + sop):
        raise NotASopError("defect profiles need homogeneous data")
    if any(f.is_zero for f in sop):
        raise NotASopError("zero form in the sop")
    if gens:
        base = _series_of(gens)
    elif sop:
        base = HilbertSeries((1,), sop[0].n)  # the free ring
    else:
        raise NotASopError("nothing to profile")
    d = base.pole_order
    if len(sop) != d:
        raise NotASopError(f"{len(sop)} forms against dimension {d}")
    if truncation is None:
        max_deg = max([g.degree for g in gens] + [f.degree for f in sop], default=1)
        truncation = 2 * max_deg + d
    series = [base]
    for i in range(1, d + 1):
        series.append(_series_of(list(gens) + sop[:i]))
        if series[i].pole_order != d - i:
            raise NotASopError(
                f"dimension after {i} forms is {series[i].pole_order}, expected {d - i}"
            )
    steps = []
    for i in range(1, d + 1):
        a_i = sop[i - 1].degree
        # both sides share the pole (1-t)^(d-i) after clearing one factor
        sigma = [1] * a_i
        lhs = list(series[i].numerator)
        rhs = poly_mul(list(series[i - 1].numerator), sigma)
        kernel_num = poly_sub(lhs, rhs)
        if not kernel_num:
            steps.append(DefectStep(a_i, series[i], (), -1, -1, 0))
            continue
        pole = d - i
        reduced = kernel_num
        while reduced and sum(reduced) == 0:
            reduced = divide_by_one_minus_t(reduced)
            pole -= 1
        if pole < 0 or sum(reduced) <= 0:
            raise PipelineInvariantError("kernel series is not the series of a module")
        if pole > d - i:
            raise PipelineInvariantError(f"kernel dimension {pole} above bound {d - i}")
        if not _nonnegative_expansion(tuple(reduced), pole, truncation):
            raise PipelineInvariantError("kernel series has a negative coefficient")
        steps.append(DefectStep(a_i, series[i], tuple(reduced), pole, pole, sum(reduced)))
    profile = DefectProfile(base, tuple(steps), field.p)
    _check_defect_identity(profile)
    return profile


def _check_defect_identity(profile: DefectProfile):
    degrees = profile.degrees
    d = profile.d
    total = profile.degree_product * profile.base.multiplicity
    for i, step in enumerate(profile.steps, start=1):
        if step.dim_kernel == d - i:
            total += math.prod(degrees[i:]) * step.e_kernel
    if total != profile.length:
        raise PipelineInvariantError(
            f"defect identity failed: decomposition {total} != length {profile.length}"
        )


@dataclass(frozen=True)
class SurprisingProbe:
    r: int
    hypotheses_met: bool
    conclusion_verified: Optional[bool]

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "hypotheses_met": self.hypotheses_met,
            "conclusion_verified": self.conclusion_verified,
        }


def surprising_probe(profile: DefectProfile, r: int) -> SurprisingProbe:
    """Early-CM probe: small kernels through step r plus Cohen-Macaulayness of
    the r-th quotient force the whole ring Cohen-Macaulay with zero kernels."""
    d = profile.d
    if not 1 <= r < d:
        raise NotASopError(f"probe index r={r} must satisfy 1 <= r < d={d}")
    small_kernels = all(profile.steps[i].dim_kernel < d - (i + 1) for i in range(r))
    remaining = math.prod(profile.degrees[r:])
    e_r = profile.steps[r - 1].hilb_quotient.multiplicity
    partial_cm = profile.length == remaining * e_r
    met = small_kernels and partial_cm
    if not met:
        return SurprisingProbe(r, False, None)
    full_cm = profile.total_defect == 0
    kernels_vanish = all(s.dim_kernel == -1 for s in profile.steps)
    return SurprisingProbe(r, True, full_cm and kernels_vanish)
