"""Exact Dodgson and Young scores, their decision problems, and independent
brute-force oracles.

The ILP routes group identical voters into one bounded integer variable per
(order, lift) pair; with all multiplicities 1 this is exactly a 0/1 variable
per voter.  The oracle routes never touch the ILP machinery: Dodgson is a
shortest-path search over the literal adjacent-swap graph, Young an
exhaustive subset enumeration.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import CapExceededError
from .lp import IntegerProgram, linear_program, solve_ilp
from .profiles import CandidateId, PreferenceOrder, Profile, condorcet_winner, restrict, tally


def _require_candidate(profile: Profile, c: CandidateId) -> None:
    if c not in profile.candidates:
        raise ValueError(f"unknown candidate {c!r}")


def _require_voters(profile: Profile) -> None:
    if profile.num_voters == 0:
        raise ValueError("scores are undefined on an empty electorate")


def majority_threshold(n: int) -> int:
    """Smallest integer vote count that is a strict majority of n."""
    return n // 2 + 1


@dataclass(frozen=True)
class DodgsonMoveEncoding:
    """Per-voter lift effects for a designated candidate.

    ``passed[i][j-1]`` is the set of rivals overtaken when the candidate is
    lifted j positions in expanded voter i's order (0-based i); it grows
    monotonically with j.  ``baseline[k]`` counts voters already preferring
    the candidate over rival k.
    """

    candidate: CandidateId
    rivals: tuple[CandidateId, ...]
    total: int
    passed: tuple[tuple[frozenset[CandidateId], ...], ...]
    baseline: dict[CandidateId, int]

    def gains(self, voter: int, lift: int) -> frozenset[CandidateId]:
        return self.passed[voter][lift - 1]


def gain_matrix(profile: Profile, c: CandidateId) -> DodgsonMoveEncoding:
    _require_candidate(profile, c)
    _require_voters(profile)
    t = tally(profile)
    rivals = tuple(name for name in profile.candidates if name != c)
    passed = []
    for order in profile.expanded():
        idx = order.index(c)
        passed.append(tuple(frozenset(order[idx - j : idx]) for j in range(1, idx + 1)))
    baseline = {k: t.count(c, k) for k in rivals}
    return DodgsonMoveEncoding(c, rivals, profile.num_voters, tuple(passed), baseline)


def _voter_groups(profile: Profile) -> list[tuple[PreferenceOrder, int, list[int]]]:
    """Distinct orders with multiplicity and their expanded 1-based indices."""
    groups: dict[PreferenceOrder, list] = {}
    pos = 0
    order_list = []
    for order, mult in profile.voters:
        if order not in groups:
            groups[order] = [0, []]
            order_list.append(order)
        groups[order][0] += mult
        groups[order][1].extend(range(pos + 1, pos + mult + 1))
        pos += mult
    return [(order, groups[order][0], groups[order][1]) for order in order_list]


def _dodgson_ip(profile: Profile, c: CandidateId):
    enc = gain_matrix(profile, c)
    n = enc.total
    thr = majority_threshold(n)
    groups = _voter_groups(profile)
    variables = []
    objective = []
    var_meta = []  # (group index, lift)
    for g, (order, mult, _) in enumerate(groups):
        idx = order.index(c)
        for j in range(1, idx + 1):
            variables.append((f"m[{g},{j}]", 0, mult))
            objective.append(j)
            var_meta.append((g, j))
    constraints = []
    for g, (order, mult, _) in enumerate(groups):
        coeffs = [1 if meta[0] == g else 0 for meta in var_meta]
        if any(coeffs):
            constraints.append((coeffs, "<=", mult))
    gains_by_group = []
    for order, _, _ in groups:
        idx = order.index(c)
        gains_by_group.append(tuple(frozenset(order[idx - j : idx]) for j in range(1, idx + 1)))
    for k in enc.rivals:
        need = thr - enc.baseline[k]
        if need <= 0:
            continue
        coeffs = [1 if k in gains_by_group[g][j - 1] else 0 for g, j in var_meta]
        constraints.append((coeffs, ">=", need))
    lp = linear_program("min", variables, objective, constraints)
    ip = IntegerProgram(lp, frozenset(name for name, _, _ in variables))
    return ip, groups, var_meta


def dodgson_score(profile: Profile, c: CandidateId) -> int:
    """Minimum number of adjacent swaps making c the Condorcet winner."""
    score, _ = dodgson_score_with_moves(profile, c)
    return score


def dodgson_score_with_moves(profile: Profile, c: CandidateId):
    """Score plus a witness: a list of (1-based voter index, lift distance)."""
    ip, groups, var_meta = _dodgson_ip(profile, c)
    sol = solve_ilp(ip)
    if sol.status != "optimal":  # pragma: no cover - always feasible for n >= 1
        raise RuntimeError("internal: Dodgson program must be feasible")
    moves = []
    used = {g: 0 for g in range(len(groups))}
    for (g, j), var in zip(var_meta, ip.base.variables):
        count = int(sol.assignment[var.name])
        for _ in range(count):
            voter_idx = groups[g][2][used[g]]
            used[g] += 1
            moves.append((voter_idx, j))
    moves.sort()
    return int(sol.objective_value), tuple(moves)


def apply_moves(profile: Profile, c: CandidateId, moves) -> Profile:
    """Lift c by the given distances in the given voters (at most one lift each)."""
    _require_candidate(profile, c)
    orders = list(profile.expanded())
    seen = set()
    for voter_idx, j in moves:
        if voter_idx in seen:
            raise ValueError(f"voter {voter_idx} lifted twice")
        seen.add(voter_idx)
        order = list(orders[voter_idx - 1])
        idx = order.index(c)
        if j < 1 or j > idx:
            raise ValueError(f"lift {j} out of range for voter {voter_idx}")
        del order[idx]
        order.insert(idx - j, c)
        orders[voter_idx - 1] = tuple(order)
    return Profile(profile.candidates, tuple((order, 1) for order in orders))


def validate_dodgson_witness(profile: Profile, c: CandidateId, score: int, moves) -> bool:
    """Replay the move list: cost must match and c must end up Condorcet winner."""
    if sum(j for _, j in moves) != score:
        return False
    return condorcet_winner(apply_moves(profile, c, moves)) == c


def dodgson_score_bruteforce(
    profile: Profile,
    c: CandidateId,
    *,
    max_voters: int = 5,
    max_candidates: int = 5,
    heuristic: bool = True,
) -> int:
    """Shortest-path search over profiles reachable by single adjacent swaps.

    Swap moves are applied to every voter and every adjacent pair, so the
    search follows the definition directly.  States are canonicalized by
    sorting the expanded orders (voters are interchangeable) and the search
    may be guided by an admissible lower bound: each swap changes exactly one
    head-to-head count involving the swapped pair by one, so the summed
    majority deficits of c never drop by more than one per swap.
    """
    _require_candidate(profile, c)
    _require_voters(profile)
    n = profile.num_voters
    if n > max_voters or len(profile.candidates) > max_candidates:
        raise CapExceededError(
            f"swap search capped at {max_voters} voters / {max_candidates} candidates"
        )
    thr = majority_threshold(n)
    rivals = tuple(name for name in profile.candidates if name != c)

    beats_cache: dict[PreferenceOrder, tuple[int, ...]] = {}

    def beats(order: PreferenceOrder) -> tuple[int, ...]:
        cached = beats_cache.get(order)
        if cached is None:
            pos = order.index(c)
            cached = tuple(1 if order.index(k) > pos else 0 for k in rivals)
            beats_cache[order] = cached
        return cached

    def deficit(state) -> int:
        totals = [0] * len(rivals)
        for order in state:
            row = beats(order)
            for i, b in enumerate(row):
                totals[i] += b
        return sum(max(0, thr - tot) for tot in totals)

    h = deficit if heuristic else (lambda state: 0)

    start = tuple(sorted(profile.expanded()))
    dist = {start: 0}
    counter = 0
    heap = [(h(start), 0, counter, start)]
    while heap:
        f, g, _, state = heapq.heappop(heap)
        if dist.get(state, -1) != g:
            continue
        if deficit(state) == 0:
            return g
        width = len(state[0])
        for vi in range(len(state)):
            order = state[vi]
            for s in range(width - 1):
                swapped = order[:s] + (order[s + 1], order[s]) + order[s + 2 :]
                nxt = list(state)
                nxt[vi] = swapped
                nxt_state = tuple(sorted(nxt))
                nd = g + 1
                if nd < dist.get(nxt_state, nd + 1):
                    dist[nxt_state] = nd
                    counter += 1
                    heapq.heappush(heap, (nd + h(nxt_state), nd, counter, nxt_state))
    raise RuntimeError("internal: swap graph search exhausted")  # pragma: no cover


def _young_ip(profile: Profile, c: CandidateId):
    _require_candidate(profile, c)
    _require_voters(profile)
    groups = _voter_groups(profile)
    rivals = tuple(name for name in profile.candidates if name != c)
    variables = [(f"y[{g}]", 0, mult) for g, (_, mult, _) in enumerate(groups)]
    objective = [1] * len(groups)
    constraints = []
    for k in rivals:
        coeffs = []
        for order, _, _ in groups:
            coeffs.append(1 if order.index(c) < order.index(k) else -1)
        # strict majority among kept voters: 2*(votes for c) >= T + 1
        constraints.append((coeffs, ">=", 1))
    lp = linear_program("max", variables, objective, constraints)
    return IntegerProgram(lp, frozenset(name for name, _, _ in variables)), groups


def young_score(profile: Profile, c: CandidateId) -> int:
    """Size of a largest voter subset for which c is the Condorcet winner."""
    score, _ = young_score_with_subset(profile, c)
    return score


def young_score_with_subset(profile: Profile, c: CandidateId):
    """Score plus a witness: the kept expanded voter indices (1-based)."""
    ip, groups = _young_ip(profile, c)
    sol = solve_ilp(ip)
    if sol.status == "infeasible":
        return 0, ()
    kept = []
    for g, (_, _, indices) in enumerate(groups):
        count = int(sol.assignment[f"y[{g}]"])
        kept.extend(indices[:count])
    kept.sort()
    return int(sol.objective_value), tuple(kept)


def validate_young_witness(profile: Profile, c: CandidateId, score: int, kept) -> bool:
    if len(kept) != score:
        return False
    if score == 0:
        return True
    return condorcet_winner(restrict(profile, kept)) == c


def young_score_bruteforce(profile: Profile, c: CandidateId, *, max_voters: int = 22) -> int:
    """Exhaustive subset enumeration, largest cardinality first."""
    _require_candidate(profile, c)
    _require_voters(profile)
    n = profile.num_voters
    if n > max_voters:
        raise CapExceededError(f"subset enumeration capped at {max_voters} voters")
    orders = profile.expanded()
    rivals = [name for name in profile.candidates if name != c]
    masks = []
    for k in rivals:
        mask = 0
        for i, order in enumerate(orders):
            if order.index(c) < order.index(k):
                mask |= 1 << i
        masks.append(mask)
    # check the scarcest head-to-head supporters first
    masks.sort(key=lambda m: m.bit_count())
    # a subset of size T needs more than T/2 supporters against every rival
    limit = min([n] + [2 * m.bit_count() - 1 for m in masks])
    for size in range(limit, 0, -1):
        need = size + 1
        for combo in combinations(range(n), size):
            w = 0
            for i in combo:
                w |= 1 << i
            if all(2 * (w & m).bit_count() >= need for m in masks):
                return size
    return 0


# -- decision problems ----------------------------------------------------


def dodgson_scores(profile: Profile) -> dict[CandidateId, int]:
    return {c: dodgson_score(profile, c) for c in profile.candidates}


def young_scores(profile: Profile) -> dict[CandidateId, int]:
    return {c: young_score(profile, c) for c in profile.candidates}


def dodgson_winner(profile: Profile, c: CandidateId) -> bool:
    """Is c's Dodgson score minimal over all candidates?"""
    _require_candidate(profile, c)
    scores = dodgson_scores(profile)
    return scores[c] <= min(scores.values())


def dodgson_ranking(profile: Profile, c: CandidateId, d: CandidateId) -> bool:
    """Does c tie-or-defeat d, i.e. DodgsonScore(c) <= DodgsonScore(d)?"""
    _require_candidate(profile, c)
    _require_candidate(profile, d)
    return dodgson_score(profile, c) <= dodgson_score(profile, d)


def young_winner(profile: Profile, c: CandidateId) -> bool:
    """Is c's Young score maximal over all candidates?"""
    _require_candidate(profile, c)
    scores = young_scores(profile)
    return scores[c] >= max(scores.values())


def young_ranking(profile: Profile, c: CandidateId, d: CandidateId) -> bool:
    """Does c tie-or-defeat d, i.e. YoungScore(c) >= YoungScore(d)?"""
    _require_candidate(profile, c)
    _require_candidate(profile, d)
    return young_score(profile, c) >= young_score(profile, d)


def dodgson_winners(profile: Profile) -> tuple[CandidateId, ...]:
    scores = dodgson_scores(profile)
    best = min(scores.values())
    return tuple(c for c in profile.candidates if scores[c] == best)


def young_winners(profile: Profile) -> tuple[CandidateId, ...]:
    scores = young_scores(profile)
    best = max(scores.values())
    return tuple(c for c in profile.candidates if scores[c] == best)


@dataclass(frozen=True)
class ScoreReport:
    """Scores for a set of candidates under one scheme, in display order."""

    scheme: str
    scores: tuple[tuple[CandidateId, int | Fraction], ...]
    witnesses: tuple[tuple[CandidateId, tuple], ...] | None = None


def dodgson_report(profile: Profile, *, with_witnesses: bool = False) -> ScoreReport:
    """Full-candidate Dodgson report; witnesses are optimal move lists."""
    if not with_witnesses:
        return ScoreReport("dodgson", tuple(dodgson_scores(profile).items()))
    results = [(c, dodgson_score_with_moves(profile, c)) for c in profile.candidates]
    return ScoreReport(
        "dodgson",
        tuple((c, score) for c, (score, _) in results),
        tuple((c, moves) for c, (_, moves) in results),
    )


def young_report(profile: Profile, *, with_witnesses: bool = False) -> ScoreReport:
    """Full-candidate Young report; witnesses are kept-voter index subsets."""
    if not with_witnesses:
        return ScoreReport("young", tuple(young_scores(profile).items()))
    results = [(c, young_score_with_subset(profile, c)) for c in profile.candidates]
    return ScoreReport(
        "young",
        tuple((c, score) for c, (score, _) in results),
        tuple((c, kept) for c, (_, kept) in results),
    )
