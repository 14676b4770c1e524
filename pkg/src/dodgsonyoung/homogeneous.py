"""Fishburn-limit ("starred") Dodgson and Young scores via exact linear programs.

The starred score of a candidate is lim_{q->inf} score(qV)/q.  For Dodgson
this is the value of a linear program over per-voter lift fractions; for
Young, over per-voter keep weights.  Strict majority constraints are closed
to weak inequalities: under q-fold replication the integer threshold exceeds
the weak one by at most 1/2 vote, a gap whose per-q share vanishes in the
limit, so the closed programs attain the limit exactly.  Consequently a
starred score is 0 (Dodgson) or n (Young) precisely on weak Condorcet
winners, where ties are allowed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exact
from .errors import CapExceededError
from .lp import LinearProgram, linear_program, solve_lp
from .profiles import CandidateId, Profile, replicate


@dataclass(frozen=True)
class DodgsonStarProgram:
    """LP over lift fractions x[i,j]: share of voter i's replicas lifting the
    candidate j positions (j=0 is the materialized stay-put share)."""

    candidate: CandidateId
    lp: LinearProgram


@dataclass(frozen=True)
class YoungStarProgram:
    """LP over keep weights y[i] in [0,1], maximizing the total kept weight."""

    candidate: CandidateId
    lp: LinearProgram


def dodgson_star_program(profile: Profile, c: CandidateId) -> DodgsonStarProgram:
    enc = exact.gain_matrix(profile, c)
    n = enc.total
    half = Fraction(n, 2)
    variables = []
    objective = []
    meta = []  # (expanded voter 0-based, lift)
    for i, lifts in enumerate(enc.passed):
        for j in range(len(lifts) + 1):
            variables.append((f"x[{i + 1},{j}]", 0, 1))
            objective.append(j)
            meta.append((i, j))
    constraints = []
    for i in range(n):
        coeffs = [1 if vi == i else 0 for vi, _ in meta]
        constraints.append((coeffs, "=", 1))
    for k in enc.rivals:
        coeffs = [
            1 if j >= 1 and k in enc.passed[vi][j - 1] else 0 for vi, j in meta
        ]
        constraints.append((coeffs, ">=", half - enc.baseline[k]))
    return DodgsonStarProgram(c, linear_program("min", variables, objective, constraints))


def dodgson_star_score(profile: Profile, c: CandidateId) -> Fraction:
    """Value of the lift-fraction LP; equals lim dodgson_score(qV)/q."""
    sol = solve_lp(dodgson_star_program(profile, c).lp)
    if sol.status != "optimal":  # pragma: no cover - lifting everything is feasible
        raise RuntimeError("internal: Dodgson* program must be feasible")
    return sol.objective_value


def young_star_program(profile: Profile, c: CandidateId) -> YoungStarProgram:
    exact._require_candidate(profile, c)
    exact._require_voters(profile)
    orders = profile.expanded()
    rivals = tuple(name for name in profile.candidates if name != c)
    variables = [(f"y[{i + 1}]", 0, 1) for i in range(len(orders))]
    objective = [1] * len(orders)
    constraints = []
    for k in rivals:
        coeffs = [1 if order.index(c) < order.index(k) else -1 for order in orders]
        constraints.append((coeffs, ">=", 0))
    return YoungStarProgram(c, linear_program("max", variables, objective, constraints))


def young_star_score(profile: Profile, c: CandidateId) -> Fraction:
    """Value of the keep-weight LP; equals lim young_score(qV)/q."""
    sol = solve_lp(young_star_program(profile, c).lp)
    if sol.status != "optimal":  # pragma: no cover - zero weights are feasible
        raise RuntimeError("internal: Young* program must be feasible")
    return sol.objective_value


def dodgson_star_scores(profile: Profile) -> dict[CandidateId, Fraction]:
    return {c: dodgson_star_score(profile, c) for c in profile.candidates}


def young_star_scores(profile: Profile) -> dict[CandidateId, Fraction]:
    return {c: young_star_score(profile, c) for c in profile.candidates}


def dodgson_star_winner(profile: Profile, c: CandidateId) -> bool:
    exact._require_candidate(profile, c)
    scores = dodgson_star_scores(profile)
    return scores[c] <= min(scores.values())


def dodgson_star_ranking(profile: Profile, c: CandidateId, d: CandidateId) -> bool:
    exact._require_candidate(profile, c)
    exact._require_candidate(profile, d)
    return dodgson_star_score(profile, c) <= dodgson_star_score(profile, d)


def young_star_winner(profile: Profile, c: CandidateId) -> bool:
    exact._require_candidate(profile, c)
    scores = young_star_scores(profile)
    return scores[c] >= max(scores.values())


def young_star_ranking(profile: Profile, c: CandidateId, d: CandidateId) -> bool:
    exact._require_candidate(profile, c)
    exact._require_candidate(profile, d)
    return young_star_score(profile, c) >= young_star_score(profile, d)


def dodgson_star_winners(profile: Profile) -> tuple[CandidateId, ...]:
    scores = dodgson_star_scores(profile)
    best = min(scores.values())
    return tuple(c for c in profile.candidates if scores[c] == best)


def young_star_winners(profile: Profile) -> tuple[CandidateId, ...]:
    scores = young_star_scores(profile)
    best = max(scores.values())
    return tuple(c for c in profile.candidates if scores[c] == best)


SCHEMES = ("dodgson", "young", "dodgson-star", "young-star")

_WINNER_SETS = {
    "dodgson": exact.dodgson_winners,
    "young": exact.young_winners,
    "dodgson-star": dodgson_star_winners,
    "young-star": young_star_winners,
}


def winner_set(profile: Profile, scheme: str) -> tuple[CandidateId, ...]:
    """All winners of the given scheme, in candidate display order."""
    try:
        fn = _WINNER_SETS[scheme]
    except KeyError:
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {', '.join(SCHEMES)}") from None
    return fn(profile)


def homogeneity_check(scheme: str, profile: Profile, q: int, *, max_expanded: int = 64) -> bool:
    """Does the scheme elect the same winner set on the q-fold replicated profile?

    True is guaranteed for the starred schemes (their scores scale exactly by
    q); for the exact schemes this is a reporting tool, since Dodgson and
    Young are known not to be homogeneous in general.
    """
    if scheme not in _WINNER_SETS:
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {', '.join(SCHEMES)}")
    if not isinstance(q, int) or q < 1:
        raise ValueError(f"replication factor must be a positive integer, got {q!r}")
    if scheme in ("dodgson", "young") and profile.num_voters * q > max_expanded:
        raise CapExceededError(
            f"exact-scheme homogeneity check capped at {max_expanded} expanded voters"
        )
    return winner_set(profile, scheme) == winner_set(replicate(profile, q), scheme)
