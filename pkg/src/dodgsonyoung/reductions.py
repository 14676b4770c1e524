"""Reduction chain as executable instance generators, with exhaustive oracles.

The chain: comparing graph independence numbers reduces to comparing maximum
set packings (vertex -> set of incident edges), which reduces to Young
Ranking through a profile built from six voter shapes around two designated
candidates, and Young Ranking reduces to Young Winner by replicating every
non-designated candidate into a rotated block per voter.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import CapExceededError, ParseError
from .exact import young_score_with_subset, validate_young_witness
from .profiles import CandidateId, Profile


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; vertex and edge order follow the input."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex")
        index = {v: i for i, v in enumerate(self.vertices)}
        seen = set()
        for u, v in self.edges:
            if u not in index or v not in index:
                raise ValueError(f"edge ({u!r}, {v!r}) uses an unknown vertex")
            if u == v:
                raise ValueError(f"loop at {u!r} is not allowed in a simple graph")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({u!r}, {v!r})")
            seen.add(key)


def graph(vertices, edges) -> Graph:
    """Build a Graph, normalizing each edge's endpoints to vertex order."""
    verts = tuple(vertices)
    index = {v: i for i, v in enumerate(verts)}
    normalized = []
    for u, v in edges:
        if u in index and v in index and index[u] > index[v]:
            u, v = v, u
        normalized.append((u, v))
    return Graph(verts, tuple(normalized))


@dataclass(frozen=True)
class SetFamilyInstance:
    """Ordered ground set plus a family of nonempty member sets."""

    base: tuple[str, ...]
    family: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        if len(set(self.base)) != len(self.base):
            raise ValueError("duplicate ground-set element")
        index = {e: i for i, e in enumerate(self.base)}
        for member in self.family:
            if not member:
                raise ValueError("member sets must be nonempty")
            if len(set(member)) != len(member):
                raise ValueError(f"duplicate element in member set {member!r}")
            for e in member:
                if e not in index:
                    raise ValueError(f"member set element {e!r} is not in the ground set")


def set_family(base, family) -> SetFamilyInstance:
    """Build a SetFamilyInstance, sorting each member set by ground-set order."""
    base_t = tuple(base)
    index = {e: i for i, e in enumerate(base_t)}
    members = tuple(tuple(sorted(member, key=lambda e: index.get(e, -1))) for member in family)
    return SetFamilyInstance(base_t, members)


@dataclass(frozen=True)
class MSPCInstance:
    first: SetFamilyInstance
    second: SetFamilyInstance


def alpha(g: Graph, *, max_vertices: int = 16) -> int:
    """Independence number by exhaustive search."""
    n = len(g.vertices)
    if n > max_vertices:
        raise CapExceededError(f"independence search capped at {max_vertices} vertices")
    index = {v: i for i, v in enumerate(g.vertices)}
    adj = [0] * n
    for u, v in g.edges:
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]
    best = 0
    for mask in range(1 << n):
        if mask.bit_count() <= best:
            continue
        rest = mask
        ok = True
        while rest:
            low = rest & -rest
            if adj[low.bit_length() - 1] & mask:
                ok = False
                break
            rest ^= low
        if ok:
            best = mask.bit_count()
    return best


def kappa(s: SetFamilyInstance, *, max_sets: int = 16) -> int:
    """Maximum number of pairwise disjoint member sets, by exhaustive search."""
    f = len(s.family)
    if f > max_sets:
        raise CapExceededError(f"set-packing search capped at {max_sets} sets")
    index = {e: i for i, e in enumerate(s.base)}
    masks = []
    for member in s.family:
        m = 0
        for e in member:
            m |= 1 << index[e]
        masks.append(m)
    best = 0
    for choice in range(1 << f):
        if choice.bit_count() <= best:
            continue
        union = 0
        ok = True
        rest = choice
        while rest:
            low = rest & -rest
            m = masks[low.bit_length() - 1]
            if union & m:
                ok = False
                break
            union |= m
            rest ^= low
        if ok:
            best = choice.bit_count()
    return best


def _incident_edge_family(g: Graph) -> SetFamilyInstance:
    incident: dict[str, list[str]] = {v: [] for v in g.vertices}
    tokens = []
    for u, v in g.edges:
        token = f"{u}-{v}"
        tokens.append(token)
        incident[u].append(token)
        incident[v].append(token)
    if len(set(tokens)) != len(tokens):
        raise ValueError("edge token collision; avoid '-' inside vertex names")
    isolated = [v for v in g.vertices if not incident[v]]
    if isolated:
        raise ValueError(f"isolated vertex {isolated[0]!r}: every member set must be nonempty")
    return SetFamilyInstance(tuple(tokens), tuple(tuple(incident[v]) for v in g.vertices))


def inc_to_mspc(g1: Graph, g2: Graph) -> MSPCInstance:
    """Independence-number comparison as a set-packing comparison.

    Each graph's ground set is its edge set and each vertex contributes the
    set of its incident edges, so alpha(G_i) = kappa of the i-th family.
    Isolated vertices are rejected: they would produce empty member sets.
    """
    return MSPCInstance(_incident_edge_family(g1), _incident_edge_family(g2))


@dataclass(frozen=True)
class YoungReductionOutput:
    """Profile of 2|S1|+2|S2|+2 voters over {c,d,a,b} and the renamed ground sets.

    ``form_of_voter[i-1]`` gives the shape (1..6) of expanded voter i;
    ``set_voters_first[t]`` is the voter index representing the t-th member
    set of the first family (``set_voters_second`` likewise).
    """

    profile: Profile
    c: CandidateId
    d: CandidateId
    a: CandidateId
    b: CandidateId
    first_elements: tuple[tuple[str, CandidateId], ...]
    second_elements: tuple[tuple[str, CandidateId], ...]
    set_voters_first: tuple[int, ...]
    set_voters_second: tuple[int, ...]
    form_of_voter: tuple[int, ...]


def mspc_to_young_ranking(inst: MSPCInstance) -> YoungReductionOutput:
    """Build the Young Ranking profile whose designated scores are 2*kappa+1.

    Requires kappa > 2 on both families.  Ground-set elements are renamed
    x1..xm / y1..yn in ground-set order; enumeration inside every voter
    segment follows ground-set order.  The second family's complements are
    taken within its own ground set.
    """
    s1, s2 = inst.first, inst.second
    if not s1.family or not s2.family:
        raise ValueError("both families must be nonempty")
    k1 = kappa(s1)
    k2 = kappa(s2)
    if k1 <= 2 or k2 <= 2:
        raise ValueError(f"maximum packing must exceed 2 on both sides (got {k1} and {k2})")
    x = {e: f"x{i + 1}" for i, e in enumerate(s1.base)}
    y = {e: f"y{i + 1}" for i, e in enumerate(s2.base)}
    b1_vec = tuple(x[e] for e in s1.base)
    b2_vec = tuple(y[e] for e in s2.base)
    candidates = ("c", "d", "a", "b") + b1_vec + b2_vec

    entries: list[tuple[tuple[str, ...], int]] = []
    form_of: list[int] = []
    set_voters_first: list[int] = []
    set_voters_second: list[int] = []

    for member in s1.family:
        chosen = set(member)
        e_vec = tuple(x[e] for e in s1.base if e in chosen)
        e_bar = tuple(x[e] for e in s1.base if e not in chosen)
        entries.append(((*e_vec, "a", "c", *e_bar, *b2_vec, "b", "d"), 1))
        set_voters_first.append(len(form_of) + 1)
        form_of.append(1)
    entries.append((("c", *b1_vec, "a", *b2_vec, "b", "d"), 2))
    form_of.extend([2, 2])
    entries.append(((*b1_vec, "c", "a", *b2_vec, "b", "d"), len(s1.family) - 1))
    form_of.extend([3] * (len(s1.family) - 1))

    for member in s2.family:
        chosen = set(member)
        f_vec = tuple(y[e] for e in s2.base if e in chosen)
        f_bar = tuple(y[e] for e in s2.base if e not in chosen)
        entries.append(((*f_vec, "b", "d", *f_bar, *b1_vec, "a", "c"), 1))
        set_voters_second.append(len(form_of) + 1)
        form_of.append(4)
    entries.append((("d", *b2_vec, "b", *b1_vec, "a", "c"), 2))
    form_of.extend([5, 5])
    entries.append(((*b2_vec, "d", "b", *b1_vec, "a", "c"), len(s2.family) - 1))
    form_of.extend([6] * (len(s2.family) - 1))

    profile = Profile(candidates, tuple(entries))
    return YoungReductionOutput(
        profile=profile,
        c="c",
        d="d",
        a="a",
        b="b",
        first_elements=tuple((e, x[e]) for e in s1.base),
        second_elements=tuple((e, y[e]) for e in s2.base),
        set_voters_first=tuple(set_voters_first),
        set_voters_second=tuple(set_voters_second),
        form_of_voter=tuple(form_of),
    )


def amplify_for_winner(
    profile: Profile, c: CandidateId, d: CandidateId, *, allow_single_voter: bool = False
) -> Profile:
    """Replace every non-designated candidate by a per-voter rotated block.

    Candidate g becomes g^0..g^{n-1}; expanded voter i (0-based) sees the
    block starting at g^{i mod n}.  This preserves the Young scores of c and
    d while capping every replacement candidate's score at 1.
    """
    if c not in profile.candidates:
        raise ValueError(f"unknown candidate {c!r}")
    if d not in profile.candidates:
        raise ValueError(f"unknown candidate {d!r}")
    if c == d:
        raise ValueError("designated candidates must be distinct")
    n = profile.num_voters
    if n == 0:
        raise ValueError("cannot amplify an empty electorate")
    if n == 1 and not allow_single_voter:
        raise ValueError(
            "single-voter rotation is degenerate; pass allow_single_voter=True to force it"
        )
    others = [g for g in profile.candidates if g not in (c, d)]
    if not others:
        return profile
    new_candidates: list[str] = []
    for g in profile.candidates:
        if g in (c, d):
            new_candidates.append(g)
        else:
            new_candidates.extend(f"{g}^{t}" for t in range(n))
    if len(set(new_candidates)) != len(new_candidates):
        raise ValueError("candidate name collision while amplifying; rename candidates")
    entries = []
    for i, order in enumerate(profile.expanded()):
        new_order: list[str] = []
        for g in order:
            if g in (c, d):
                new_order.append(g)
            else:
                new_order.extend(f"{g}^{(i + t) % n}" for t in range(n))
        entries.append((tuple(new_order), 1))
    return Profile(tuple(new_candidates), tuple(entries))


def young_scores_bruteforce_all(profile: Profile) -> dict[CandidateId, int]:
    """Young score of every candidate by subset enumeration (small n only)."""
    n = profile.num_voters
    orders = profile.expanded()
    out = {}
    for c in profile.candidates:
        rivals = [k for k in profile.candidates if k != c]
        masks = []
        for k in rivals:
            mask = 0
            for i, order in enumerate(orders):
                if order.index(c) < order.index(k):
                    mask |= 1 << i
            masks.append(mask)
        masks.sort(key=lambda m: m.bit_count())
        limit = min([n] + [2 * m.bit_count() - 1 for m in masks])
        score = 0
        for size in range(limit, 0, -1):
            need = size + 1
            found = False
            for combo in combinations(range(n), size):
                w = 0
                for i in combo:
                    w |= 1 << i
                if all(2 * (w & m).bit_count() >= need for m in masks):
                    found = True
                    break
            if found:
                score = size
                break
        out[c] = score
    return out


@dataclass(frozen=True)
class ChainReport:
    """Stage-by-stage answers of one reduction-chain run."""

    alpha1: int
    alpha2: int
    kappa1: int
    kappa2: int
    young_c: int
    young_d: int
    alpha_compare: bool
    kappa_compare: bool
    ranking_answer: bool
    equations_hold: bool
    winner_checked: bool
    winner_answer: bool | None
    consistent: bool


def verify_reduction_chain(g1: Graph, g2: Graph, *, winner_work_cap: int = 4_000_000) -> ChainReport:
    """Run every stage of the chain and report whether all answers agree.

    The Young Winner stage on the amplified profile is brute-forced only when
    candidates * 2^voters stays within `winner_work_cap`; otherwise it is
    skipped and reported as unchecked.
    """
    a1 = alpha(g1)
    a2 = alpha(g2)
    inst = inc_to_mspc(g1, g2)
    k1 = kappa(inst.first)
    k2 = kappa(inst.second)
    red = mspc_to_young_ranking(inst)
    yc, wit_c = young_score_with_subset(red.profile, red.c)
    yd, wit_d = young_score_with_subset(red.profile, red.d)
    if not validate_young_witness(red.profile, red.c, yc, wit_c):  # pragma: no cover
        raise RuntimeError("internal: invalid Young witness for c")
    if not validate_young_witness(red.profile, red.d, yd, wit_d):  # pragma: no cover
        raise RuntimeError("internal: invalid Young witness for d")
    equations_hold = yc == 2 * k1 + 1 and yd == 2 * k2 + 1
    alpha_compare = a1 >= a2
    kappa_compare = k1 >= k2
    ranking_answer = yc >= yd

    amplified = amplify_for_winner(red.profile, red.c, red.d)
    work = len(amplified.candidates) * (1 << amplified.num_voters)
    winner_checked = work <= winner_work_cap
    winner_answer = None
    if winner_checked:
        all_scores = young_scores_bruteforce_all(amplified)
        winner_answer = all_scores[red.c] >= max(all_scores.values())

    consistent = (
        a1 == k1
        and a2 == k2
        and equations_hold
        and alpha_compare == kappa_compare == ranking_answer
        and (winner_answer is None or winner_answer == ranking_answer)
    )
    return ChainReport(
        alpha1=a1,
        alpha2=a2,
        kappa1=k1,
        kappa2=k2,
        young_c=yc,
        young_d=yd,
        alpha_compare=alpha_compare,
        kappa_compare=kappa_compare,
        ranking_answer=ranking_answer,
        equations_hold=equations_hold,
        winner_checked=winner_checked,
        winner_answer=winner_answer,
        consistent=consistent,
    )


# -- file formats -----------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format: 'vertices: ...' then 'edge: u v' lines."""
    vertices: tuple[str, ...] | None = None
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError("expected 'vertices:' or 'edge:' line", lineno)
        head = head.strip()
        rest = rest.strip()
        if vertices is None:
            if head != "vertices":
                raise ParseError("first non-comment line must be 'vertices: ...'", lineno)
            names = rest.split()
            if not names:
                raise ParseError("empty vertex list", lineno)
            if len(set(names)) != len(names):
                raise ParseError("duplicate vertex", lineno)
            vertices = tuple(names)
            continue
        if head != "edge":
            raise ParseError(f"expected 'edge:' line, got {head!r}", lineno)
        endpoints = rest.split()
        if len(endpoints) != 2:
            raise ParseError(f"edge needs exactly two endpoints, got {rest!r}", lineno)
        u, v = endpoints
        if u not in vertices or v not in vertices:
            raise ParseError(f"edge ({u!r}, {v!r}) uses an unknown vertex", lineno)
        if u == v:
            raise ParseError(f"loop at {u!r} is not allowed in a simple graph", lineno)
        if any(frozenset((u, v)) == frozenset(e) for e in edges):
            raise ParseError(f"duplicate edge ({u!r}, {v!r})", lineno)
        edges.append((u, v))
    if vertices is None:
        raise ParseError("no vertices line")
    return graph(vertices, edges)


def parse_set_family(text: str) -> SetFamilyInstance:
    """Parse the set-family format: 'base: ...' then 'set: ...' lines."""
    base: tuple[str, ...] | None = None
    family: list[tuple[str, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError("expected 'base:' or 'set:' line", lineno)
        head = head.strip()
        rest = rest.strip()
        if base is None:
            if head != "base":
                raise ParseError("first non-comment line must be 'base: ...'", lineno)
            names = rest.split()
            if not names:
                raise ParseError("empty ground set", lineno)
            if len(set(names)) != len(names):
                raise ParseError("duplicate ground-set element", lineno)
            base = tuple(names)
            continue
        if head != "set":
            raise ParseError(f"expected 'set:' line, got {head!r}", lineno)
        elements = rest.split()
        try:
            family.append(tuple(set_family(base, [elements]).family[0]))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    if base is None:
        raise ParseError("no base line")
    return SetFamilyInstance(base, tuple(family))


def serialize_set_family(s: SetFamilyInstance) -> str:
    lines = ["base: " + " ".join(s.base)]
    for member in s.family:
        lines.append("set: " + " ".join(member))
    return "\n".join(lines) + "\n"


def serialize_mspc(inst: MSPCInstance) -> str:
    return serialize_set_family(inst.first) + "\n" + serialize_set_family(inst.second)
