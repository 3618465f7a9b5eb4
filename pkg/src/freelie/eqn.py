"""Equation systems over a free Lie algebra.

* :class:`EquationSystem` -- a conjunction of term equalities with named
  variables, and :func:`check_system` to verify an assignment.
* :func:`truncated_kernel` / :func:`solve_affine` -- exact solution spaces of
  systems that are linear in their variables, restricted to assignments of
  bounded degree.
* :func:`compile_poly_system` -- translation of polynomial equations over
  ``K[t]`` into Lie equations, through the codes in :mod:`freelie.interp`.
"""

from __future__ import annotations

import re
from collections import defaultdict
from collections.abc import Mapping
from dataclasses import dataclass, field

from . import linalg
from .hall import generate_basis
from .interp import encode_poly, otimes_witness, psi_witness
from .lie import FreeLieAlgebra, LieElement
from .scalars import Field, Polynomial, field_from_spec, parse_polynomial
from .terms import (
    Bracket,
    Const,
    LieTerm,
    NonlinearTermError,
    Scale,
    Sum,
    UnboundVariableError,
    Var,
    evaluate,
    format_term,
    parse_term,
    variable_degree,
    variables_of,
)

__all__ = [
    "EquationSystem",
    "SystemReport",
    "SubspaceBasis",
    "check_system",
    "truncated_kernel",
    "truncated_solutions",
    "solve_affine",
    "project",
    "span",
    "phi_system",
    "PolySystem",
    "ConstAtom",
    "AddAtom",
    "MulAtom",
    "CompiledSystem",
    "compile_poly_system",
    "map_solution",
]


# -- systems -----------------------------------------------------------------------


@dataclass
class EquationSystem:
    algebra: FreeLieAlgebra
    equations: list[tuple[LieTerm, LieTerm]]
    variables: list[str] = field(default_factory=list)

    def __post_init__(self):
        seen = list(self.variables)
        for lhs, rhs in self.equations:
            for v in variables_of(lhs) + variables_of(rhs):
                if v not in seen:
                    seen.append(v)
        self.variables = seen

    @classmethod
    def parse(cls, algebra: FreeLieAlgebra, equations, variables=()) -> EquationSystem:
        """Build from strings ``"lhs = rhs"`` (or ``(lhs, rhs)`` pairs)."""
        eqs = []
        for item in equations:
            if isinstance(item, str):
                if item.count("=") != 1:
                    raise ValueError(f"expected exactly one '=' in {item!r}")
                lhs, rhs = item.split("=")
            else:
                lhs, rhs = item
            eqs.append((parse_term(lhs, algebra), parse_term(rhs, algebra)))
        return cls(algebra, eqs, list(variables))

    def residual(self, i: int) -> LieTerm:
        lhs, rhs = self.equations[i]
        return Sum((lhs, Scale(self.algebra.field(-1), rhs)))

    def __len__(self):
        return len(self.equations)

    def to_json(self) -> dict:
        return {
            "rank": self.algebra.rank,
            "field": self.algebra.field.spec(),
            "variables": list(self.variables),
            "equations": [
                {"lhs": format_term(lhs), "rhs": format_term(rhs)} for lhs, rhs in self.equations
            ],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> EquationSystem:
        L = FreeLieAlgebra(int(doc["rank"]), field_from_spec(doc.get("field", "q")))
        eqs = [(e["lhs"], e["rhs"]) if isinstance(e, Mapping) else e for e in doc["equations"]]
        return cls.parse(L, eqs, doc.get("variables", ()))


@dataclass
class SystemReport:
    residuals: list[LieElement]

    @property
    def passed(self) -> bool:
        return all(not r for r in self.residuals)

    @property
    def failures(self) -> list[int]:
        return [i for i, r in enumerate(self.residuals) if r]

    def __bool__(self):
        return self.passed


def _missing(S: EquationSystem, assignment) -> list[str]:
    return [v for v in S.variables if v not in assignment]


def check_system(S: EquationSystem, assignment: Mapping[str, LieElement]) -> SystemReport:
    """Evaluate every equation; residual ``lhs - rhs`` is kept per equation."""
    missing = _missing(S, assignment)
    if missing:
        raise UnboundVariableError(", ".join(missing))
    return SystemReport([evaluate(S.residual(i), assignment) for i in range(len(S))])


def phi_system(L: FreeLieAlgebra) -> EquationSystem:
    """``[x,c]+[y,b] = [z,a]``, ``[x,b] = [z1,a]``, ``[y,c] = [z2,a]``."""
    if L.rank < 3:
        raise ValueError("the membership system needs rank >= 3")
    return EquationSystem.parse(
        L,
        ["[x,c] + [y,b] = [z,a]", "[x,b] = [z1,a]", "[y,c] = [z2,a]"],
        ["x", "y", "z", "z1", "z2"],
    )


def _substitute(t: LieTerm, values: Mapping[str, LieElement]) -> LieTerm:
    if isinstance(t, Var):
        return Const(values[t.name]) if t.name in values else t
    if isinstance(t, Bracket):
        return Bracket(_substitute(t.left, values), _substitute(t.right, values))
    if isinstance(t, Sum):
        return Sum(tuple(_substitute(s, values) for s in t.terms))
    if isinstance(t, Scale):
        return Scale(t.scalar, _substitute(t.term, values))
    return t


# -- truncated linear solving ---------------------------------------------------------


@dataclass
class SubspaceBasis:
    """A subspace of assignments ``variables -> elements of degree <= degree``.

    Each vector maps ``(variable, hall_monomial)`` to a nonzero coefficient.
    """

    algebra: FreeLieAlgebra
    variables: list[str]
    degree: int
    vectors: list[dict]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def assignments(self) -> list[dict[str, LieElement]]:
        out = []
        for vec in self.vectors:
            parts: dict[str, dict] = {v: {} for v in self.variables}
            for (var, m), c in vec.items():
                parts[var][m] = c
            out.append({v: self.algebra.element(t) for v, t in parts.items()})
        return out

    def _index(self, extra=()):
        keys = {k for vec in self.vectors for k in vec} | set(extra)
        order = {v: i for i, v in enumerate(self.variables)}
        ordered = sorted(keys, key=lambda k: (order[k[0]], k[1].key))
        return {k: i for i, k in enumerate(ordered)}

    def _echelon(self, index) -> linalg.Echelon:
        ech = linalg.Echelon()
        for vec in self.vectors:
            ech.add({index[k]: c for k, c in vec.items()})
        return ech

    def contains(self, assignment: Mapping[str, LieElement]) -> bool:
        vec = _as_vector(assignment, self.variables)
        if any(k[1].degree > self.degree for k in vec):
            return False
        index = self._index(vec)
        return self._echelon(index).contains({index[k]: c for k, c in vec.items()})

    def issubspace(self, other: SubspaceBasis) -> bool:
        return all(other.contains(a) for a in self.assignments())

    def __eq__(self, other):
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return (
            set(self.variables) == set(other.variables)
            and self.dim == other.dim
            and self.issubspace(other)
        )


def _as_vector(assignment: Mapping[str, LieElement], variables) -> dict:
    vec = {}
    for v in variables:
        u = assignment.get(v)
        if u is None:
            continue
        for m, c in u.terms.items():
            vec[(v, m)] = c
    return vec


def span(algebra: FreeLieAlgebra, variables, assignments, degree: int | None = None) -> SubspaceBasis:
    """Reduced basis of the span of the given assignments."""
    vecs = [_as_vector(a, variables) for a in assignments]
    if degree is None:
        degree = max((k[1].degree for vec in vecs for k in vec), default=0)
    raw = SubspaceBasis(algebra, list(variables), degree, vecs)
    return _reduced(raw)


def _reduced(B: SubspaceBasis) -> SubspaceBasis:
    index = B._index()
    keys = {i: k for k, i in index.items()}
    ech = B._echelon(index)
    vecs = [{keys[i]: c for i, c in row.items()} for _, row in sorted(ech.pivots.items())]
    return SubspaceBasis(B.algebra, B.variables, B.degree, vecs)


def project(B: SubspaceBasis, variables) -> SubspaceBasis:
    """Coordinate projection of ``B`` onto ``variables``."""
    variables = list(variables)
    unknown = [v for v in variables if v not in B.variables]
    if unknown:
        raise KeyError(f"unknown variables {unknown}")
    keep = set(variables)
    vecs = []
    for vec in B.vectors:
        part = {k: c for k, c in vec.items() if k[0] in keep}
        if part:
            vecs.append(part)
    return _reduced(SubspaceBasis(B.algebra, variables, B.degree, vecs))


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def _linear_columns(S: EquationSystem, variables, degree: int):
    """Residual of every equation for each unit assignment ``var -> monomial``.

    Returns ``(columns, constants)``: ``columns`` is a list of
    ``((var, monomial), {(eq, monomial): coeff})`` and ``constants`` the
    residual coordinates at the zero assignment.
    """
    L = S.algebra
    residuals = []
    for i in range(len(S)):
        r = S.residual(i)
        if variable_degree(r) > 1:
            raise NonlinearTermError(f"equation {i} brackets two variable-bearing subterms")
        residuals.append(r)
    zero = {v: L.zero() for v in variables}
    constants = {}
    base = []
    for i, r in enumerate(residuals):
        c0 = evaluate(r, zero)
        base.append(c0)
        for m, c in c0.terms.items():
            constants[(i, m)] = c
    basis = generate_basis(L.rank, degree)
    occurs = [set(variables_of(r)) for r in residuals]
    columns = []
    for v in variables:
        for h in basis:
            assign = dict(zero)
            assign[v] = L.monomial(h)
            col = {}
            for i, r in enumerate(residuals):
                if v not in occurs[i]:
                    continue
                out = evaluate(r, assign) - base[i]
                for m, c in out.terms.items():
                    col[(i, m)] = c
            columns.append(((v, h), col))
    return columns, constants


def truncated_solutions(
    S: EquationSystem, degree: int, fixed: Mapping[str, LieElement] | None = None
) -> tuple[dict[str, LieElement] | None, SubspaceBasis]:
    """Solutions of a variable-linear system with every unknown of degree <= ``degree``.

    Variables in ``fixed`` are replaced by the given values first.  Returns
    ``(particular, kernel)``: one solution (free coordinates zero) or None if
    there is none, and a basis of the homogeneous solution space.
    """
    L = S.algebra
    fixed = dict(fixed or {})
    if fixed:
        S = EquationSystem(
            L,
            [(_substitute(lhs, fixed), _substitute(rhs, fixed)) for lhs, rhs in S.equations],
            [v for v in S.variables if v not in fixed],
        )
    variables = list(S.variables)
    columns, constants = _linear_columns(S, variables, degree)

    # independent blocks: columns linked through shared residual coordinates
    uf = _UnionFind()
    owner: dict = {}
    for j, (_, col) in enumerate(columns):
        uf.find(("c", j))
        for key in col:
            if key in owner:
                uf.union(("c", j), ("c", owner[key]))
            else:
                owner[key] = j
    blocks: dict = defaultdict(list)
    for j in range(len(columns)):
        blocks[uf.find(("c", j))].append(j)

    one = L.field.one
    kernel_vectors = []
    particular: dict = {}
    consistent = True
    covered = set()
    for cols in blocks.values():
        rows: dict = defaultdict(dict)
        for j in cols:
            for key, c in columns[j][1].items():
                rows[key][j] = c
        covered.update(rows)
        for vec in linalg.nullspace(rows.values(), cols, one):
            kernel_vectors.append({columns[j][0]: c for j, c in vec.items()})
        if consistent:
            sol = linalg.solve((row, -constants.get(key, 0)) for key, row in rows.items())
            if sol is None:
                consistent = False
            else:
                particular.update({columns[j][0]: c for j, c in sol.items() if c})
    if any(c for key, c in constants.items() if key not in covered):
        consistent = False

    kernel = SubspaceBasis(L, variables, degree, kernel_vectors)
    if not consistent:
        return None, kernel
    parts: dict[str, dict] = {v: {} for v in variables}
    for (v, m), c in particular.items():
        parts[v][m] = c
    solution = {v: L.element(t) for v, t in parts.items()}
    solution.update(fixed)
    return solution, kernel


def truncated_kernel(S: EquationSystem, degree: int) -> SubspaceBasis:
    """Exact basis of the solutions with every variable of degree <= ``degree``.

    The system must be linear and homogeneous in its variables.
    """
    zero = {v: S.algebra.zero() for v in S.variables}
    if not check_system(S, zero).passed:
        raise ValueError("system has constant terms; use truncated_solutions")
    return truncated_solutions(S, degree)[1]


def solve_affine(
    S: EquationSystem, degree: int, fixed: Mapping[str, LieElement] | None = None
) -> dict[str, LieElement] | None:
    """One solution of bounded degree, or None."""
    return truncated_solutions(S, degree, fixed)[0]


# -- polynomial systems over K[t] ---------------------------------------------------------


@dataclass(frozen=True)
class ConstAtom:
    """``var = value``."""

    var: str
    value: Polynomial

    def holds(self, s) -> bool:
        return s[self.var] == self.value

    def __str__(self):
        return f"{self.var} = {self.value}"


@dataclass(frozen=True)
class AddAtom:
    """``var = left + right``."""

    var: str
    left: str
    right: str

    def holds(self, s) -> bool:
        return s[self.var] == s[self.left] + s[self.right]

    def __str__(self):
        return f"{self.var} = {self.left} + {self.right}"


@dataclass(frozen=True)
class MulAtom:
    """``var = left * right``."""

    var: str
    left: str
    right: str

    def holds(self, s) -> bool:
        return s[self.var] == s[self.left] * s[self.right]

    def __str__(self):
        return f"{self.var} = {self.left} * {self.right}"


_PTOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|([-+*^()=]))")


class PolySystem:
    """Polynomial equations over ``K[t]`` in flattened form.

    Each atom is ``v = k`` (``k`` in ``K[t]``), ``v = u + w`` or ``v = u * w``.
    :meth:`parse` flattens arbitrary equations, introducing fresh variables
    named ``_1, _2, ...``.
    """

    def __init__(self, atoms, field: Field, variables=()):
        self.atoms = list(atoms)
        self.field = field
        names = list(variables)
        for atom in self.atoms:
            for v in _atom_vars(atom):
                if v not in names:
                    names.append(v)
        self.variables = names

    def __len__(self):
        return len(self.atoms)

    def __str__(self):
        return "; ".join(str(a) for a in self.atoms)

    def is_solution(self, assignment: Mapping[str, Polynomial]) -> bool:
        return all(atom.holds(assignment) for atom in self.atoms)

    @classmethod
    def parse(cls, equations, field: Field) -> PolySystem:
        flat = _Flattener(field)
        for text in equations:
            flat.equation(text)
        return cls(flat.atoms, field, flat.user_vars)

    def to_json(self) -> dict:
        return {
            "field": self.field.spec(),
            "variables": list(self.variables),
            "equations": [str(a) for a in self.atoms],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> PolySystem:
        parsed = cls.parse(doc["equations"], field_from_spec(doc.get("field", "q")))
        return cls(parsed.atoms, parsed.field, doc.get("variables", parsed.variables))


def _atom_vars(atom) -> list[str]:
    if isinstance(atom, ConstAtom):
        return [atom.var]
    return [atom.var, atom.left, atom.right]


class _Flattener:
    def __init__(self, field: Field):
        self.field = field
        self.atoms: list = []
        self.user_vars: list[str] = []
        self.count = 0

    def fresh(self) -> str:
        self.count += 1
        while f"_{self.count}" in self.user_vars:
            self.count += 1
        return f"_{self.count}"

    def equation(self, text: str) -> None:
        if text.count("=") != 1:
            raise ValueError(f"expected one '=' in {text!r}")
        lhs, rhs = (self.parse_expr(side) for side in text.split("="))
        # direct atoms: var = const | var = x op y
        for target, other in ((lhs, rhs), (rhs, lhs)):
            if target[0] == "var":
                self.define(target[1], other)
                return
        left = self.atomize(lhs)
        self.define(left, rhs)

    def define(self, var: str, expr) -> None:
        kind = expr[0]
        if kind == "const":
            self.atoms.append(ConstAtom(var, expr[1]))
        elif kind == "var":
            zero = self.fresh()
            self.atoms.append(ConstAtom(zero, Polynomial([], self.field)))
            self.atoms.append(AddAtom(var, expr[1], zero))
        elif kind in ("+", "*"):
            x, y = self.atomize(expr[1]), self.atomize(expr[2])
            atom = AddAtom if kind == "+" else MulAtom
            self.atoms.append(atom(var, x, y))
        elif kind == "-":
            # var = x - y  <=>  x = var + y
            x, y = self.atomize(expr[1]), self.atomize(expr[2])
            self.atoms.append(AddAtom(x, var, y))
        else:
            raise ValueError(f"unexpected expression {expr!r}")

    def atomize(self, expr) -> str:
        if expr[0] == "var":
            return expr[1]
        v = self.fresh()
        self.define(v, expr)
        return v

    def parse_expr(self, text: str):
        tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _PTOKEN.match(text, pos)
            if not m:
                raise ValueError(f"bad polynomial-equation syntax at {text[pos:]!r}")
            pos = m.end()
            tokens.append(next(g for g in m.groups() if g is not None))
        tokens.append(None)
        i = 0
        F = self.field

        def peek():
            return tokens[i]

        def take():
            nonlocal i
            i += 1
            return tokens[i - 1]

        def combine(op, x, y):
            if x[0] == "const" and y[0] == "const":
                value = {"+": x[1] + y[1], "-": x[1] - y[1], "*": x[1] * y[1]}[op]
                return ("const", value)
            return (op, x, y)

        def expr():
            if peek() == "-":
                take()
                result = combine("-", ("const", Polynomial([], F)), term())
            else:
                result = term()
            while peek() in ("+", "-"):
                op = take()
                result = combine(op, result, term())
            return result

        def term():
            result = power()
            while peek() == "*":
                take()
                result = combine("*", result, power())
            return result

        def power():
            base = atom()
            if peek() == "^":
                take()
                n = int(take())
                if n < 1:
                    return ("const", Polynomial([1], F))
                result = base
                for _ in range(n - 1):
                    result = combine("*", result, base)
                return result
            return base

        def atom():
            tok = take()
            if tok is None:
                raise ValueError(f"unexpected end of {text!r}")
            if tok == "(":
                inner = expr()
                if take() != ")":
                    raise ValueError(f"unbalanced parentheses in {text!r}")
                return inner
            if tok == "t":
                return ("const", Polynomial([0, 1], F))
            if tok[0].isdigit():
                return ("const", Polynomial([F.parse(tok)], F))
            if tok[0].isalpha() or tok[0] == "_":
                if tok not in self.user_vars:
                    self.user_vars.append(tok)
                return ("var", tok)
            raise ValueError(f"unexpected {tok!r} in {text!r}")

        result = expr()
        if peek() is not None:
            raise ValueError(f"trailing input in {text!r}")
        return result


# -- compilation ------------------------------------------------------------------------------

_ROLES = ("x", "y", "z", "z1", "z2")


@dataclass
class CompiledSystem:
    """Lie equations equivalent to a :class:`PolySystem`.

    ``roles[v]`` names the Lie variables attached to polynomial variable
    ``v``: its code ``x``, the paired ``y`` and the membership auxiliaries
    ``z, z1, z2``.  ``products`` lists ``(atom, s)`` for every
    multiplication atom with its congruence auxiliary ``s``.
    """

    system: EquationSystem
    poly: PolySystem
    roles: dict[str, dict[str, str]]
    products: list[tuple[MulAtom, str]]

    def map_solution(self, assignment: Mapping[str, Polynomial]) -> dict[str, LieElement]:
        return map_solution(self, assignment)

    def to_json(self) -> dict:
        doc = self.system.to_json()
        doc["poly"] = self.poly.to_json()
        return doc

    @classmethod
    def from_json(cls, doc: Mapping) -> CompiledSystem:
        L = FreeLieAlgebra(int(doc["rank"]), field_from_spec(doc.get("field", "q")))
        return compile_poly_system(PolySystem.from_json(doc["poly"]), L)


def compile_poly_system(P: PolySystem, algebra: FreeLieAlgebra | None = None) -> CompiledSystem:
    """Translate ``P`` into Lie equations over ``algebra`` (default: rank 3 over P's field)."""
    L = algebra or FreeLieAlgebra(3, P.field)
    if L.rank < 3:
        raise ValueError("compilation needs rank >= 3")
    if L.field != P.field:
        raise ValueError(f"field mismatch: {P.field!r} vs {L.field!r}")
    a, c = Const(L.gen(0)), Const(L.gen(2))
    b = Const(L.gen(1))
    minus = L.field(-1)
    equations: list[tuple[LieTerm, LieTerm]] = []
    roles: dict[str, dict[str, str]] = {}
    variables: list[str] = []
    zero = Const(L.zero())

    for v in P.variables:
        names = {r: f"{r}_{v}" for r in _ROLES}
        roles[v] = names
        variables.extend(names.values())
        x, y, z, z1, z2 = (Var(names[r]) for r in _ROLES)
        equations += [
            (Sum((Bracket(x, c), Bracket(y, b))), Bracket(z, a)),
            (Bracket(x, b), Bracket(z1, a)),
            (Bracket(y, c), Bracket(z2, a)),
        ]

    products = []
    for k, atom in enumerate(P.atoms):
        xv = Var(roles[atom.var]["x"])
        if isinstance(atom, ConstAtom):
            pin = Const(encode_poly(L, atom.value))
            equations.append((Bracket(Sum((xv, Scale(minus, pin))), a), zero))
        elif isinstance(atom, AddAtom):
            xu, xw = Var(roles[atom.left]["x"]), Var(roles[atom.right]["x"])
            equations.append((Bracket(Sum((xu, xw, Scale(minus, xv))), a), zero))
        elif isinstance(atom, MulAtom):
            s = f"s_{k}"
            variables.append(s)
            products.append((atom, s))
            xu, yw = Var(roles[atom.left]["x"]), Var(roles[atom.right]["y"])
            equations.append(
                (Bracket(xu, yw), Sum((Bracket(xv, c), Bracket(Var(s), a))))
            )
        else:
            raise TypeError(f"unflattened atom {atom!r}")
    return CompiledSystem(EquationSystem(L, equations, variables), P, roles, products)


def map_solution(
    compiled: CompiledSystem, assignment: Mapping[str, Polynomial]
) -> dict[str, LieElement]:
    """Lie assignment for a polynomial assignment, auxiliaries included.

    Correct solutions of the polynomial system map to solutions of the
    compiled system; for anything else the auxiliaries are built by the same
    recipe and some equation fails.
    """
    L = compiled.system.algebra
    P = compiled.poly
    missing = [v for v in P.variables if v not in assignment]
    if missing:
        raise KeyError(f"unassigned polynomial variables {missing}")
    out: dict[str, LieElement] = {}
    values = {v: _as_poly(assignment[v], L.field) for v in P.variables}
    for v, names in compiled.roles.items():
        x, y, z, z1, z2 = psi_witness(L, values[v])
        for role, elt in zip(_ROLES, (x, y, z, z1, z2)):
            out[names[role]] = elt
    for atom, s in compiled.products:
        out[s] = otimes_witness(L, values[atom.left], values[atom.right])
    return out


def _as_poly(value, field: Field) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return parse_polynomial(str(value), field)

