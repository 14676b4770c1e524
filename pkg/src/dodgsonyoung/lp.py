"""Exact linear and integer programming over rationals.

Primal simplex with Bland's pivoting rule on a bounded-variable standard
form, plus a depth-first branch-and-bound wrapper for integer programs.
Every coefficient is a Fraction, so feasibility and optimality hold exactly;
there is no tolerance anywhere.  Floats are rejected at construction time.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)
RELATIONS = ("<=", "=", ">=")


def frac(value) -> Fraction:
    """Coerce an int or Fraction; floats would break exactness and are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def _bound(value) -> Fraction | None:
    return None if value is None else frac(value)


@dataclass(frozen=True)
class Variable:
    name: str
    lower: Fraction | None = _ZERO
    upper: Fraction | None = None


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction


@dataclass(frozen=True)
class LinearProgram:
    direction: str
    variables: tuple[Variable, ...]
    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...] = ()

    def __post_init__(self) -> None:
        if self.direction not in ("min", "max"):
            raise ValueError(f"direction must be 'min' or 'max', got {self.direction!r}")
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        if len(self.objective) != len(self.variables):
            raise ValueError("objective length does not match variable count")
        for con in self.constraints:
            if con.relation not in RELATIONS:
                raise ValueError(f"bad relation {con.relation!r}")
            if len(con.coeffs) != len(self.variables):
                raise ValueError("constraint length does not match variable count")


def linear_program(direction, variables, objective, constraints=()) -> LinearProgram:
    """Convenience constructor coercing ints; variables given as (name, lower, upper)."""
    var_tuple = tuple(Variable(name, _bound(lo), _bound(hi)) for name, lo, hi in variables)
    cons = tuple(
        Constraint(tuple(frac(a) for a in coeffs), rel, frac(rhs))
        for coeffs, rel, rhs in constraints
    )
    return LinearProgram(direction, var_tuple, tuple(frac(c) for c in objective), cons)


@dataclass(frozen=True)
class IntegerProgram:
    base: LinearProgram
    integral: frozenset[str]

    def __post_init__(self) -> None:
        by_name = {v.name: v for v in self.base.variables}
        for name in self.integral:
            var = by_name.get(name)
            if var is None:
                raise ValueError(f"integral variable {name!r} is not in the program")
            if var.lower is None or var.upper is None:
                raise ValueError(f"integral variable {name!r} must have finite bounds")


@dataclass(frozen=True)
class LPSolution:
    status: str  # 'optimal' | 'infeasible' | 'unbounded'
    assignment: dict[str, Fraction] = field(default_factory=dict)
    objective_value: Fraction | None = None

    def __getitem__(self, name: str) -> Fraction:
        return self.assignment[name]


def format_program(lp: LinearProgram) -> str:
    """Human-readable dump for debugging."""

    def term(coeff, name):
        if coeff == 1:
            return f"+ {name}"
        if coeff == -1:
            return f"- {name}"
        sign = "-" if coeff < 0 else "+"
        return f"{sign} {abs(coeff)}*{name}"

    names = [v.name for v in lp.variables]
    lines = [lp.direction + " " + " ".join(term(c, n) for c, n in zip(lp.objective, names) if c != 0)]
    for con in lp.constraints:
        body = " ".join(term(c, n) for c, n in zip(con.coeffs, names) if c != 0) or "0"
        lines.append(f"  {body} {con.relation} {con.rhs}")
    for v in lp.variables:
        lo = "-inf" if v.lower is None else str(v.lower)
        hi = "+inf" if v.upper is None else str(v.upper)
        lines.append(f"  {lo} <= {v.name} <= {hi}")
    return "\n".join(lines) + "\n"


class _Standardized:
    """Shifted/split column form: min c.x over columns with bounds [0, u]."""

    def __init__(self, lp: LinearProgram):
        self.lp = lp
        self.recipes: list[tuple] = []
        self.col_upper: list[Fraction | None] = []
        self.bound_infeasible = False
        for var in lp.variables:
            lo, hi = var.lower, var.upper
            if lo is not None and hi is not None and hi < lo:
                self.bound_infeasible = True
            if lo is not None and hi is not None and hi == lo:
                self.recipes.append(("const", lo))
            elif lo is not None:
                col = self._new_col(None if hi is None else hi - lo)
                self.recipes.append(("shift", col, lo))
            elif hi is not None:
                col = self._new_col(None)
                self.recipes.append(("flip", col, hi))  # x = hi - col
            else:
                self.recipes.append(("split", self._new_col(None), self._new_col(None)))

    def _new_col(self, upper) -> int:
        self.col_upper.append(upper)
        return len(self.col_upper) - 1

    @property
    def num_cols(self) -> int:
        return len(self.col_upper)

    def to_columns(self, coeffs) -> tuple[list[Fraction], Fraction]:
        """Rewrite a row over original variables as (column coefficients, constant)."""
        cols = [_ZERO] * self.num_cols
        const = _ZERO
        for a, recipe in zip(coeffs, self.recipes):
            if a == 0:
                continue
            kind = recipe[0]
            if kind == "const":
                const += a * recipe[1]
            elif kind == "shift":
                cols[recipe[1]] += a
                const += a * recipe[2]
            elif kind == "flip":
                cols[recipe[1]] -= a
                const += a * recipe[2]
            else:
                cols[recipe[1]] += a
                cols[recipe[2]] -= a
        return cols, const

    def assignment_from(self, col_values) -> dict[str, Fraction]:
        out = {}
        for var, recipe in zip(self.lp.variables, self.recipes):
            kind = recipe[0]
            if kind == "const":
                out[var.name] = recipe[1]
            elif kind == "shift":
                out[var.name] = recipe[2] + col_values[recipe[1]]
            elif kind == "flip":
                out[var.name] = recipe[2] - col_values[recipe[1]]
            else:
                out[var.name] = col_values[recipe[1]] - col_values[recipe[2]]
        return out


class _Simplex:
    """Bounded-variable primal simplex on equality rows with columns in [0, u].

    Nonbasic columns sit at one of their bounds (`at_upper` flags the upper
    one); `beta` holds the current value of each basic column.  Bland's rule
    picks the smallest-index eligible entering column and, among the ties of
    the ratio test, the smallest-index leaving variable, which guarantees
    termination even on degenerate instances.
    """

    def __init__(self, rows, rhs, col_upper):
        # Normalize rhs >= 0 so artificial starts are feasible.
        self.rows = [list(r) for r in rows]
        self.rhs = list(rhs)
        for r in range(len(self.rows)):
            if self.rhs[r] < 0:
                self.rows[r] = [-a for a in self.rows[r]]
                self.rhs[r] = -self.rhs[r]
        self.upper: list[Fraction | None] = list(col_upper)
        self.m = len(self.rows)
        self.struct_cols = len(col_upper)
        self.basis: list[int] = []
        self.art_start = self.struct_cols
        # One artificial column per row (identity block) as the initial basis.
        for r in range(self.m):
            for rr in range(self.m):
                self.rows[rr].append(_ONE if rr == r else _ZERO)
            self.upper.append(None)
            self.basis.append(self.struct_cols + r)
        self.ncols = self.struct_cols + self.m
        self.beta = list(self.rhs)
        self.at_upper = [False] * self.ncols
        self.in_basis = [False] * self.ncols
        for col in self.basis:
            self.in_basis[col] = True
        self.blocked = [False] * self.ncols

    # -- helpers ---------------------------------------------------------

    def _reduced_costs(self, costs) -> list[Fraction]:
        z = list(costs)
        for r in range(self.m):
            cb = costs[self.basis[r]]
            if cb != 0:
                row = self.rows[r]
                z = [zj - cb * row[j] for j, zj in enumerate(z)]
        return z

    def column_value(self, col: int) -> Fraction:
        if self.in_basis[col]:
            return self.beta[self.basis.index(col)]
        if self.at_upper[col]:
            return self.upper[col]
        return _ZERO

    def _pivot(self, r: int, col: int, z: list[Fraction]) -> None:
        row = self.rows[r]
        piv = row[col]
        if piv != 1:
            row = [a / piv for a in row]
            self.rows[r] = row
        for rr in range(self.m):
            if rr == r:
                continue
            f = self.rows[rr][col]
            if f != 0:
                self.rows[rr] = [a - f * b for a, b in zip(self.rows[rr], row)]
        f = z[col]
        if f != 0:
            z[:] = [a - f * b for a, b in zip(z, row)]

    # -- core loop -------------------------------------------------------

    def iterate(self, z: list[Fraction]) -> str:
        while True:
            enter = -1
            direction = 0
            for j in range(self.ncols):
                if self.in_basis[j] or self.blocked[j]:
                    continue
                zj = z[j]
                if not self.at_upper[j] and zj < 0:
                    enter, direction = j, 1
                    break
                if self.at_upper[j] and zj > 0:
                    enter, direction = j, -1
                    break
            if enter < 0:
                return "optimal"
            column = [self.rows[r][enter] for r in range(self.m)]
            best_t = None
            best_var = -1
            best_row = -1
            best_kind = ""
            own = self.upper[enter]
            if own is not None:
                best_t, best_var, best_row, best_kind = own, enter, -1, "flip"
            for r, yr in enumerate(column):
                if yr == 0:
                    continue
                delta = yr if direction == 1 else -yr
                bvar = self.basis[r]
                if delta > 0:
                    t = self.beta[r] / delta
                    kind = "lower"
                else:
                    ub = self.upper[bvar]
                    if ub is None:
                        continue
                    t = (ub - self.beta[r]) / (-delta)
                    kind = "upper"
                if best_t is None or t < best_t or (t == best_t and bvar < best_var):
                    best_t, best_var, best_row, best_kind = t, bvar, r, kind
            if best_t is None:
                return "unbounded"
            t = best_t
            if t != 0:
                for r, yr in enumerate(column):
                    if yr != 0:
                        self.beta[r] -= t * yr if direction == 1 else -t * yr
            if best_kind == "flip":
                self.at_upper[enter] = not self.at_upper[enter]
                continue
            r = best_row
            leave = self.basis[r]
            self.in_basis[leave] = False
            self.at_upper[leave] = best_kind == "upper"
            value = t if direction == 1 else self.upper[enter] - t
            self.at_upper[enter] = False
            self.in_basis[enter] = True
            self.basis[r] = enter
            self.beta[r] = value
            self._pivot(r, enter, z)

    # -- phases ----------------------------------------------------------

    def phase_one(self) -> bool:
        if self.m == 0:
            return True
        costs = [_ZERO] * self.ncols
        for col in range(self.art_start, self.ncols):
            costs[col] = _ONE
        z = self._reduced_costs(costs)
        status = self.iterate(z)
        if status != "optimal":  # pragma: no cover - phase 1 is bounded below
            raise RuntimeError("internal: phase 1 cannot be unbounded")
        total = sum(
            (self.beta[r] for r in range(self.m) if self.basis[r] >= self.art_start),
            _ZERO,
        )
        if total != 0:
            return False
        # Drive artificials out of the basis where possible; rows whose
        # artificial cannot leave are dependent and stay inert at zero.
        for r in range(self.m):
            if self.basis[r] < self.art_start:
                continue
            row = self.rows[r]
            col = next(
                (j for j in range(self.art_start) if not self.in_basis[j] and row[j] != 0),
                None,
            )
            if col is None:
                continue
            art = self.basis[r]
            self.in_basis[art] = False
            self.at_upper[art] = False
            value = self.column_value(col)
            self.at_upper[col] = False
            self.in_basis[col] = True
            self.basis[r] = col
            self.beta[r] = value
            dummy = [_ZERO] * self.ncols
            self._pivot(r, col, dummy)
        for col in range(self.art_start, self.ncols):
            self.blocked[col] = True
        return True

    def phase_two(self, struct_costs) -> str:
        costs = list(struct_costs) + [_ZERO] * (self.ncols - len(struct_costs))
        z = self._reduced_costs(costs)
        return self.iterate(z)

    def column_values(self) -> list[Fraction]:
        values = []
        for col in range(self.struct_cols):
            values.append(self.column_value(col))
        return values


def _verify_solution(lp: LinearProgram, assignment: dict[str, Fraction]) -> None:
    for var in lp.variables:
        val = assignment[var.name]
        if var.lower is not None and val < var.lower:
            raise RuntimeError(f"internal: bound violation on {var.name}")
        if var.upper is not None and val > var.upper:
            raise RuntimeError(f"internal: bound violation on {var.name}")
    values = [assignment[v.name] for v in lp.variables]
    for con in lp.constraints:
        lhs = sum((a * x for a, x in zip(con.coeffs, values) if a != 0), _ZERO)
        ok = (
            lhs <= con.rhs
            if con.relation == "<="
            else lhs >= con.rhs if con.relation == ">=" else lhs == con.rhs
        )
        if not ok:
            raise RuntimeError("internal: constraint violation in reported solution")


def solve_lp(lp: LinearProgram) -> LPSolution:
    """Solve exactly; an optimal solution is re-verified by substitution."""
    std = _Standardized(lp)
    if std.bound_infeasible:
        return LPSolution("infeasible")

    sense = 1 if lp.direction == "min" else -1
    obj_cols, _ = std.to_columns([sense * c for c in lp.objective])

    if std.num_cols == 0:
        # All variables fixed by their bounds; just check the constraints.
        assignment = std.assignment_from([])
        try:
            _verify_solution(lp, assignment)
        except RuntimeError:
            return LPSolution("infeasible")
        value = sum(
            (c * assignment[v.name] for c, v in zip(lp.objective, lp.variables)), _ZERO
        )
        return LPSolution("optimal", assignment, value)

    rows = []
    rhs = []
    needs_slack = []  # per row: inequality rows get one slack column each
    for con in lp.constraints:
        cols, const = std.to_columns(con.coeffs)
        b = con.rhs - const
        rel = con.relation
        if rel == ">=":
            cols = [-a for a in cols]
            b = -b
            rel = "<="
        rows.append(cols)
        rhs.append(b)
        needs_slack.append(rel == "<=")
    col_upper = list(std.col_upper)
    for r, slack in enumerate(needs_slack):
        if not slack:
            continue
        col_upper.append(None)
        for rr in range(len(rows)):
            rows[rr].append(_ONE if rr == r else _ZERO)

    simplex = _Simplex(rows, rhs, col_upper)
    if not simplex.phase_one():
        return LPSolution("infeasible")
    status = simplex.phase_two(obj_cols + [_ZERO] * (len(col_upper) - len(obj_cols)))
    if status == "unbounded":
        return LPSolution("unbounded")
    col_values = simplex.column_values()[: std.num_cols]
    assignment = std.assignment_from(col_values)
    _verify_solution(lp, assignment)
    value = sum((c * assignment[v.name] for c, v in zip(lp.objective, lp.variables)), _ZERO)
    return LPSolution("optimal", assignment, value)


def _with_bounds(lp: LinearProgram, overrides: dict[int, tuple[Fraction, Fraction]]) -> LinearProgram:
    if not overrides:
        return lp
    new_vars = list(lp.variables)
    for idx, (lo, hi) in overrides.items():
        new_vars[idx] = Variable(new_vars[idx].name, lo, hi)
    return LinearProgram(lp.direction, tuple(new_vars), lp.objective, lp.constraints)


def solve_ilp(ip: IntegerProgram) -> LPSolution:
    """Depth-first branch and bound over LP relaxations.

    Branches on the fractional integral variable whose value has the largest
    denominator (ties to the smallest index), explores the nearer integer
    side first, and prunes against the best incumbent.  When the objective is
    supported on integral variables with integer coefficients, relaxation
    bounds are rounded before pruning.
    """
    maximize = ip.base.direction == "max"
    lp = ip.base
    if maximize:
        lp = LinearProgram("min", lp.variables, tuple(-c for c in lp.objective), lp.constraints)
    int_idx = [i for i, v in enumerate(lp.variables) if v.name in ip.integral]
    int_set = set(int_idx)
    can_round = all(
        lp.objective[i] == 0 or (i in int_set and lp.objective[i].denominator == 1)
        for i in range(len(lp.variables))
    )

    best_value: Fraction | None = None
    best_assignment: dict[str, Fraction] | None = None
    stack: list[dict[int, tuple[Fraction, Fraction]]] = [{}]
    while stack:
        overrides = stack.pop()
        sol = solve_lp(_with_bounds(lp, overrides))
        if sol.status == "infeasible":
            continue
        if sol.status == "unbounded":
            return LPSolution("unbounded")
        value = sol.objective_value
        if best_value is not None:
            bound = Fraction(math.ceil(value)) if can_round else value
            if bound >= best_value:
                continue
        fractional = [
            (i, sol.assignment[lp.variables[i].name])
            for i in int_idx
            if sol.assignment[lp.variables[i].name].denominator != 1
        ]
        if not fractional:
            best_value = value
            best_assignment = sol.assignment
            continue
        idx, val = max(fractional, key=lambda item: (item[1].denominator, -item[0]))
        var = lp.variables[idx]
        lo, hi = overrides.get(idx, (var.lower, var.upper))
        floor_val = Fraction(math.floor(val))
        down = dict(overrides)
        down[idx] = (lo, floor_val)
        up = dict(overrides)
        up[idx] = (floor_val + 1, hi)
        if val - floor_val <= Fraction(1, 2):
            stack.append(up)
            stack.append(down)  # nearer side explored first (LIFO)
        else:
            stack.append(down)
            stack.append(up)
    if best_value is None:
        return LPSolution("infeasible")
    if maximize:
        best_value = -best_value
    return LPSolution("optimal", best_assignment, best_value)
