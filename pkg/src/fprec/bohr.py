"""Leveled Bohr-recurrence certification.

A set's deficiency level is the least codimension k at which some subgroup
of F_p^n has empty intersection with it; if no subgroup up to codimension
k_max avoids the set, the set is certified recurrent up to level k_max.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .fpgroup import (
    DualVec,
    FpMatrix,
    ResourceGuardError,
    Subgroup,
    enum_codim_subgroups,
    kernel_basis,
)
from .setops import VecSet

_BATCH = 4096


@dataclass(frozen=True)
class DeficiencyReport:
    """Outcome of scanning codimensions 1..k_max for an avoiding subgroup."""

    set_id: str
    p: int
    n: int
    k_max: int
    outcome: str  # "deficient" or "recurrent"
    deficient_at: int | None
    witness: Subgroup | None
    recurrent_up_to: int | None
    checked_per_level: dict[int, int] = field(default_factory=dict)
    wall_time_s: float = 0.0

    def to_dict(self, include_timing: bool = True) -> dict:
        d = {
            "set_id": self.set_id,
            "p": self.p,
            "n": self.n,
            "k_max": self.k_max,
            "outcome": self.outcome,
            "deficient_at": self.deficient_at,
            "witness_annihilator": (
                [list(row) for row in self.witness.annihilator.entries]
                if self.witness is not None
                else None
            ),
            "recurrent_up_to": self.recurrent_up_to,
            "checked_per_level": {str(k): v for k, v in self.checked_per_level.items()},
        }
        if include_timing:
            d["wall_time_s"] = self.wall_time_s
        return d


def bohr_deficiency(S: VecSet, k_max: int, set_id: str = "") -> DeficiencyReport:
    """Scan codimensions 1..k_max in order for the first avoiding subgroup.

    The witness, when one exists, is the lexicographically least avoiding
    subgroup at the least deficient codimension.
    """
    import time

    if k_max > S.n:
        raise ValueError(f"k_max={k_max} exceeds ambient dimension {S.n}")
    t0 = time.perf_counter()
    counts: dict[int, int] = {}
    S_arr = np.array([v.coords for v in S.elements], dtype=np.int64) if len(S) else None
    for k in range(1, k_max + 1):
        witness, checked = _scan_level(S, S_arr, k)
        counts[k] = checked
        if witness is not None:
            return DeficiencyReport(
                set_id, S.p, S.n, k_max, "deficient", k, witness, None, counts,
                time.perf_counter() - t0,
            )
    return DeficiencyReport(
        set_id, S.p, S.n, k_max, "recurrent", None, None, k_max, counts,
        time.perf_counter() - t0,
    )


def _scan_level(S: VecSet, S_arr, k: int) -> tuple[Subgroup | None, int]:
    """First codim-k subgroup avoiding S (enumeration order), plus count checked."""
    checked = 0
    batch: list[Subgroup] = []
    for H in enum_codim_subgroups(S.p, S.n, k):
        if S_arr is None:
            # Empty set: every subgroup avoids it.
            return H, checked + 1
        batch.append(H)
        if len(batch) == _BATCH:
            hit = _first_avoiding(batch, S_arr, S.p)
            if hit is not None:
                return batch[hit], checked + hit + 1
            checked += len(batch)
            batch = []
    if batch:
        hit = _first_avoiding(batch, S_arr, S.p)
        if hit is not None:
            return batch[hit], checked + hit + 1
        checked += len(batch)
    return None, checked


def _first_avoiding(batch: list[Subgroup], S_arr: np.ndarray, p: int) -> int | None:
    anns = np.array([H.annihilator.entries for H in batch], dtype=np.int64)
    # prods[b, r, s] = row r of annihilator b applied to element s of S
    prods = np.tensordot(anns, S_arr.T, axes=([2], [0])) % p
    meets = (prods == 0).all(axis=1).any(axis=1)
    misses = np.nonzero(~meets)[0]
    return int(misses[0]) if misses.size else None


def meets_all_subgroups_oracle(S: VecSet, k: int) -> bool:
    """Independent oracle: materialize every codim-k subgroup as an element list.

    Uses kernel bases and explicit spans rather than annihilator products, so
    it shares no verdict-relevant code path with bohr_deficiency.
    """
    if k > S.n:
        raise ValueError(f"k={k} exceeds ambient dimension {S.n}")
    if S.p ** S.n > 2**14:
        raise ResourceGuardError("oracle requires p^n <= 2^14 for exhaustive listing")
    S_set = S.coord_tuples()
    for H in enum_codim_subgroups(S.p, S.n, k):
        if not any(x.coords in S_set for x in H.elements()):
            return False
    return True


@lru_cache(maxsize=None)
def character_value_distances(p: int) -> tuple[float, ...]:
    """Distances |e(r) - 1| for residues r = 1..p-1, rounded outward (down).

    e(r) = exp(2 pi i r / p); rounding down keeps the threshold comparisons
    from excluding a character value that sits exactly on the bound.
    """
    out = []
    for r in range(1, p):
        d = 2.0 * math.sin(math.pi * r / p)
        out.append(math.nextafter(d, -math.inf))
    return tuple(out)


def bohr_set_from_characters(xis: list[DualVec], epsilon: float, *, p: int | None = None,
                             n: int | None = None) -> Subgroup:
    """The finite Bohr set {s : max_j |chi_j(s) - 1| < eps} as a canonical Subgroup.

    Characters with some nontrivial value inside the bound cannot constrain the
    set to a subgroup and are dropped; with no binding characters the whole
    group (a codim-0 Subgroup) is returned.
    """
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    if not xis:
        if p is None or n is None:
            raise ValueError("empty character list needs declared p and n")
        return Subgroup.whole_group(p, n)
    head = xis[0]
    for xi in xis:
        head._check_compat(xi)
    dists = character_value_distances(head.p)
    binding = [xi for xi in xis if not xi.is_zero() and min(dists) >= epsilon]
    return Subgroup.from_dual_vectors(binding, p=head.p, n=head.n)
