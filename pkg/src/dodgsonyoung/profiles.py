"""Election profiles: data model, file format, and majority-rule primitives.

A profile is a candidate set together with a multiset of strict total
preference orders.  Identical orders may be stored compressed as
(order, multiplicity) entries; per-voter operations use expanded voter
indices 1..n in file order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import ParseError

CandidateId = str
PreferenceOrder = tuple[CandidateId, ...]


def _check_name(name: str, line: int | None = None) -> None:
    if not name or ">" in name or any(ch.isspace() for ch in name):
        raise ParseError(f"invalid candidate name {name!r}", line)


@dataclass(frozen=True)
class Profile:
    """Candidates plus voters, each voter a (preference order, multiplicity) entry.

    Every order must be a permutation of the full candidate set.  A profile
    with zero voters is permitted only as an intermediate value of
    :func:`restrict`; the file format requires at least one voter line.
    """

    candidates: tuple[CandidateId, ...]
    voters: tuple[tuple[PreferenceOrder, int], ...]

    def __post_init__(self) -> None:
        if not self.candidates:
            raise ValueError("profile needs at least one candidate")
        seen = set()
        for name in self.candidates:
            _check_name(name)
            if name in seen:
                raise ValueError(f"duplicate candidate {name!r}")
            seen.add(name)
        for order, mult in self.voters:
            if not isinstance(mult, int) or mult < 1:
                raise ValueError(f"voter multiplicity must be a positive integer, got {mult!r}")
            if len(order) != len(self.candidates) or set(order) != seen:
                raise ValueError(f"order {order!r} is not a permutation of the candidate set")

    @property
    def num_voters(self) -> int:
        return sum(mult for _, mult in self.voters)

    def expanded(self) -> tuple[PreferenceOrder, ...]:
        """Orders of the individual voters 1..n, in file order."""
        return tuple(order for order, mult in self.voters for _ in range(mult))


@dataclass(frozen=True)
class PairwiseTally:
    """Head-to-head counts: how many voters rank u above v, for every pair."""

    candidates: tuple[CandidateId, ...]
    total: int
    matrix: tuple[tuple[int, ...], ...]

    def count(self, u: CandidateId, v: CandidateId) -> int:
        i, j = self.candidates.index(u), self.candidates.index(v)
        if i == j:
            raise ValueError("pairwise count requires two distinct candidates")
        return self.matrix[i][j]

    def as_dict(self) -> dict[tuple[CandidateId, CandidateId], int]:
        return {
            (u, v): self.matrix[i][j]
            for i, u in enumerate(self.candidates)
            for j, v in enumerate(self.candidates)
            if i != j
        }


def parse_profile(text: str) -> Profile:
    """Parse the line-oriented profile format.

    Comment lines (starting with ``#``) and blank lines are ignored.  The
    first payload line is ``candidates: a b c``; every following line is
    ``voter[ N]: a > b > c`` with multiplicity N defaulting to 1.
    """
    candidates: tuple[str, ...] | None = None
    cand_set: set[str] = set()
    voters: list[tuple[PreferenceOrder, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError("expected 'candidates:' or 'voter:' line", lineno)
        head = head.strip()
        rest = rest.strip()
        if candidates is None:
            if head != "candidates":
                raise ParseError("first non-comment line must be 'candidates: ...'", lineno)
            names = rest.split()
            if not names:
                raise ParseError("empty candidate list", lineno)
            for name in names:
                _check_name(name, lineno)
                if name in cand_set:
                    raise ParseError(f"duplicate candidate {name!r}", lineno)
                cand_set.add(name)
            candidates = tuple(names)
            continue
        words = head.split()
        if not words or words[0] != "voter" or len(words) > 2:
            raise ParseError(f"expected 'voter[ N]:' line, got {head!r}", lineno)
        mult = 1
        if len(words) == 2:
            try:
                mult = int(words[1])
            except ValueError:
                raise ParseError(f"bad multiplicity {words[1]!r}", lineno) from None
            if mult < 1:
                raise ParseError(f"multiplicity must be positive, got {mult}", lineno)
        tokens = [tok.strip() for tok in rest.split(">")]
        order: list[str] = []
        for tok in tokens:
            if not tok or len(tok.split()) != 1:
                raise ParseError(f"malformed preference order {rest!r}", lineno)
            if tok not in cand_set:
                raise ParseError(f"unknown candidate {tok!r}", lineno)
            if tok in order:
                raise ParseError(f"duplicate candidate {tok!r} in order", lineno)
            order.append(tok)
        if len(order) != len(candidates):
            missing = sorted(cand_set - set(order))
            raise ParseError(f"order omits candidate(s): {' '.join(missing)}", lineno)
        voters.append((tuple(order), mult))
    if candidates is None:
        raise ParseError("no candidates line")
    if not voters:
        raise ParseError("no voter lines")
    return Profile(candidates, tuple(voters))


def serialize_profile(profile: Profile) -> str:
    """Render a profile in the file format; inverse of :func:`parse_profile`."""
    lines = ["candidates: " + " ".join(profile.candidates)]
    for order, mult in profile.voters:
        prefix = "voter" if mult == 1 else f"voter {mult}"
        lines.append(f"{prefix}: " + " > ".join(order))
    return "\n".join(lines) + "\n"


def tally(profile: Profile) -> PairwiseTally:
    """Count, for every ordered pair (u, v), the voters ranking u above v."""
    cands = profile.candidates
    k = len(cands)
    matrix = [[0] * k for _ in range(k)]
    for order, mult in profile.voters:
        rank = {name: pos for pos, name in enumerate(order)}
        for i, u in enumerate(cands):
            ru = rank[u]
            row = matrix[i]
            for j, v in enumerate(cands):
                if i != j and ru < rank[v]:
                    row[j] += mult
    return PairwiseTally(cands, profile.num_voters, tuple(tuple(row) for row in matrix))


def condorcet_winner(profile: Profile) -> Optional[CandidateId]:
    """The candidate beating every rival by a strict majority, if one exists.

    With an empty electorate no candidate wins (0 > 0 fails).  Uniqueness is
    automatic: two candidates cannot both hold strict majorities against each
    other.
    """
    n = profile.num_voters
    if n == 0:
        return None
    t = tally(profile)
    k = len(profile.candidates)
    for i, c in enumerate(profile.candidates):
        if all(2 * t.matrix[i][j] > n for j in range(k) if j != i):
            return c
    return None


def replicate(profile: Profile, q: int) -> Profile:
    """The profile with every voter replicated q times."""
    if not isinstance(q, int) or q < 1:
        raise ValueError(f"replication factor must be a positive integer, got {q!r}")
    return Profile(profile.candidates, tuple((order, mult * q) for order, mult in profile.voters))


def restrict(profile: Profile, keep: Iterable[int]) -> Profile:
    """The sub-profile containing exactly the expanded voters with indices in `keep`.

    Indices are 1-based in file order.  The result may have zero voters.
    """
    keep_set = set(keep)
    n = profile.num_voters
    for idx in keep_set:
        if not isinstance(idx, int) or idx < 1 or idx > n:
            raise ValueError(f"voter index {idx!r} out of range 1..{n}")
    entries = []
    pos = 0
    for order, mult in profile.voters:
        kept = sum(1 for i in range(pos + 1, pos + mult + 1) if i in keep_set)
        if kept:
            entries.append((order, kept))
        pos += mult
    return Profile(profile.candidates, tuple(entries))
