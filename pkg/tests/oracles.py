"""Shared generators and independent oracles for the test suite."""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from dodgsonyoung import Graph, Profile, graph, set_family
from dodgsonyoung.lp import IntegerProgram, LinearProgram, linear_program

CANDIDATE_POOL = ("a", "b", "c", "d", "e", "f")


def random_profile(rng: random.Random, max_candidates: int, max_voters: int,
                   min_candidates: int = 2, min_voters: int = 1) -> Profile:
    k = rng.randint(min_candidates, max_candidates)
    n = rng.randint(min_voters, max_voters)
    candidates = CANDIDATE_POOL[:k]
    entries = []
    for _ in range(n):
        order = list(candidates)
        rng.shuffle(order)
        entries.append((tuple(order), 1))
    return Profile(candidates, tuple(entries))


def random_graph(rng: random.Random, max_vertices: int = 8) -> Graph:
    n = rng.randint(2, max_vertices)
    vertices = [f"v{i}" for i in range(n)]
    edges = set()
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                edges.add((i, j))
    # attach every isolated vertex somewhere
    for i in range(n):
        if not any(i in e for e in edges):
            j = (i + 1) % n
            edges.add((min(i, j), max(i, j)))
    return graph(vertices, [(vertices[i], vertices[j]) for i, j in sorted(edges)])


def random_packing_family(rng: random.Random, kappa_target: int, max_base: int = 8,
                          max_sets: int = 4):
    """Family over <= max_base elements with maximum packing exactly kappa_target.

    kappa_target chunks partition the ground set, so any extra set intersects
    some chunk and cannot enlarge the packing.
    """
    assert kappa_target <= max_sets
    base_size = rng.randint(kappa_target, max_base)
    base = [f"e{i}" for i in range(base_size)]
    shuffled = base[:]
    rng.shuffle(shuffled)
    cuts = sorted(rng.sample(range(1, base_size), kappa_target - 1)) if kappa_target > 1 else []
    chunks = []
    prev = 0
    for cut in cuts + [base_size]:
        chunks.append(shuffled[prev:cut])
        prev = cut
    family = [sorted(chunk) for chunk in chunks]
    for _ in range(rng.randint(0, max_sets - kappa_target)):
        size = rng.randint(1, base_size)
        family.append(sorted(rng.sample(base, size)))
    rng.shuffle(family)
    return set_family(base, family)


def grid_solve_ilp(ip: IntegerProgram):
    """Exhaustive grid enumeration over the integral lattice; None if infeasible.

    Only valid when every variable is integral with finite bounds.
    """
    lp = ip.base
    ranges = []
    for var in lp.variables:
        lo = var.lower
        hi = var.upper
        lo_int = -(-lo.numerator // lo.denominator)  # ceil
        hi_int = hi.numerator // hi.denominator  # floor
        if lo_int > hi_int:
            return None
        ranges.append(range(lo_int, hi_int + 1))
    best = None
    maximize = lp.direction == "max"
    for point in product(*ranges):
        ok = True
        for con in lp.constraints:
            lhs = sum(a * x for a, x in zip(con.coeffs, point))
            if con.relation == "<=" and not lhs <= con.rhs:
                ok = False
            elif con.relation == ">=" and not lhs >= con.rhs:
                ok = False
            elif con.relation == "=" and not lhs == con.rhs:
                ok = False
            if not ok:
                break
        if not ok:
            continue
        value = sum(c * x for c, x in zip(lp.objective, point))
        if best is None or (value > best if maximize else value < best):
            best = value
    return best


def random_bounded_ilp(rng: random.Random, max_vars: int = 12, max_range: int = 6,
                       max_grid: int = 4096) -> IntegerProgram:
    nv = rng.randint(1, max_vars)
    ranges = []
    budget = max_grid
    for _ in range(nv):
        cap = max_range
        while cap > 0 and (cap + 1) > budget:
            cap -= 1
        size = rng.randint(0, cap)
        budget //= size + 1
        lo = rng.randint(-3, 2)
        ranges.append((lo, lo + size))
    variables = [(f"v{i}", lo, hi) for i, (lo, hi) in enumerate(ranges)]
    objective = [rng.randint(-5, 5) for _ in range(nv)]
    anchor = [rng.randint(lo, hi) for lo, hi in ranges]
    constraints = []
    for _ in range(rng.randint(1, 4)):
        coeffs = [rng.choice((0, 0, 1, -1, 2, -2, 3, -3, 4, -4)) for _ in range(nv)]
        rel = rng.choice(("<=", ">=", "="))
        rhs = sum(a * x for a, x in zip(coeffs, anchor)) + rng.randint(-3, 3)
        constraints.append((coeffs, rel, rhs))
    lp = linear_program(rng.choice(("min", "max")), variables, objective, constraints)
    return IntegerProgram(lp, frozenset(name for name, _, _ in variables))


def random_lp(rng: random.Random, max_vars: int = 5) -> LinearProgram:
    nv = rng.randint(1, max_vars)
    variables = []
    for i in range(nv):
        lo = rng.randint(-4, 1)
        hi = lo + rng.randint(0, 7)
        variables.append((f"v{i}", lo, hi))
    objective = [rng.randint(-5, 5) for _ in range(nv)]
    constraints = []
    for _ in range(rng.randint(0, 4)):
        coeffs = [rng.randint(-4, 4) for _ in range(nv)]
        rel = rng.choice(("<=", ">=", "="))
        rhs = rng.randint(-8, 8)
        constraints.append((coeffs, rel, rhs))
    return linear_program(rng.choice(("min", "max")), variables, objective, constraints)


def parse_frac(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(text))
