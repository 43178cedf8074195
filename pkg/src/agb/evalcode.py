"""Concrete one-point evaluation codes from tabulated function values.

An :class:`EvaluationTable` holds, for every pole order up to n+2g-1, the
values of one function with that pole order at n fixed points.  Truncating the
table at a budget m yields the generator matrix of the code at m; measuring
ranks along the way recovers the jump set empirically, with no curve machinery
at runtime.  Built-in constructor: Hermitian curves for q0 = 2, 3.
"""

import json
from typing import NamedTuple

import numpy as np

from . import bounds
from .errors import (BudgetOutOfRange, DeltaOutOfRange, InvariantViolation,
                     NotIsometryDual, SchemaError, UnsupportedParameter,
                     ZeroPivot)
from .gf import FieldMatrix, FiniteField, field
from .hstar import HStar
from .semigroup import NumericalSemigroup


class FunctionRow(NamedTuple):
    pole_order: int
    values: np.ndarray


class EvaluationTable:
    """Ordered function-value rows over a fixed point set.

    Invariants (checked on construction): pole orders strictly increasing and
    equal to the semigroup members up to n+2g-1; the pole-order-0 row is the
    all-ones vector; every value lies in the field.
    """

    __slots__ = ("field", "points", "functions", "semigroup")

    def __init__(self, fld: FiniteField, points, functions,
                 semigroup: NumericalSemigroup):
        self.field = fld
        self.points = tuple(str(p) for p in points)
        self.functions = tuple(
            FunctionRow(int(po), np.array(vals, dtype=np.int32))
            for po, vals in functions
        )
        self.semigroup = semigroup
        self._check()

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def genus(self) -> int:
        return self.semigroup.genus

    @property
    def top_order(self) -> int:
        return self.n + 2 * self.genus - 1

    def _check(self) -> None:
        n = self.n
        poles = [f.pole_order for f in self.functions]
        if poles != sorted(set(poles)):
            raise InvariantViolation("pole orders must be strictly increasing")
        expected = self.semigroup.elements_up_to(self.top_order)
        if poles != expected:
            raise InvariantViolation(
                "pole orders must be exactly the semigroup members up to n+2g-1"
            )
        for f in self.functions:
            if f.values.shape != (n,):
                raise InvariantViolation(
                    f"row of pole order {f.pole_order} has wrong length"
                )
            if f.values.size and (f.values.min() < 0
                                  or f.values.max() >= self.field.q):
                raise InvariantViolation("values outside the field")
        if not np.array_equal(self.functions[0].values, np.ones(n, dtype=np.int32)):
            raise InvariantViolation("the pole-order-0 row must be all ones")

    def rows_up_to(self, m: int) -> np.ndarray:
        """Stacked value rows for all pole orders <= m."""
        rows = [f.values for f in self.functions if f.pole_order <= m]
        if not rows:
            return np.zeros((0, self.n), dtype=np.int32)
        return np.stack(rows)

    def row_for_pole(self, pole: int) -> np.ndarray:
        for f in self.functions:
            if f.pole_order == pole:
                return f.values
        raise KeyError(f"no function with pole order {pole}")


class OnePointCode(NamedTuple):
    table: EvaluationTable
    m: int
    matrix: FieldMatrix
    dimension: int


def hermitian_table(q0: int) -> EvaluationTable:
    """Evaluation table of the Hermitian curve y^q0 + y = x^(q0+1) over GF(q0^2).

    Points are the q0^3 affine solutions in lexicographic (x, y) order;
    functions are the monomials x^a y^b with 0 <= b < q0, one per pole order
    a*q0 + b*(q0+1) in the semigroup generated by q0 and q0+1.
    """
    if q0 not in (2, 3):
        raise UnsupportedParameter(f"q0 must be 2 or 3, got {q0}")
    fld = field(q0, 2)
    pts = []
    for x in fld.elements():
        rhs = fld.pow(x, q0 + 1)
        for y in fld.elements():
            if fld.add(fld.pow(y, q0), y) == rhs:
                pts.append((x, y))
    S = NumericalSemigroup.from_generators((q0, q0 + 1))
    n = len(pts)
    top = n + 2 * S.genus - 1
    functions = []
    for pole in S.elements_up_to(top):
        b = pole % q0
        a = (pole - b * (q0 + 1)) // q0
        row = [fld.mul(fld.pow(x, a), fld.pow(y, b)) for x, y in pts]
        functions.append((pole, row))
    labels = [f"({x},{y})" for x, y in pts]
    return EvaluationTable(fld, labels, functions, S)


def code(table: EvaluationTable, m: int) -> OnePointCode:
    """Code at pole-order budget m: rows with pole order <= m, plus its rank."""
    if not 0 <= m <= table.top_order:
        raise BudgetOutOfRange(
            f"budget {m} outside [0, {table.top_order}]"
        )
    mat = FieldMatrix(table.field, table.rows_up_to(m))
    dim = _incremental_ranks(table.field, mat.data)[-1] if mat.nrows else 0
    return OnePointCode(table, m, mat, dim)


def _incremental_ranks(fld: FiniteField, rows: np.ndarray) -> list[int]:
    """Rank after each prefix of rows, via one shared echelon pass."""
    echelon = []  # (pivot column, normalized row)
    ranks = []
    rank = 0
    for row in rows:
        v = row.astype(np.int32).copy()
        for pc, er in echelon:
            if v[pc]:
                v = fld.add_arrays(v, fld.scale_array(fld.neg(int(v[pc])), er))
        nz = np.nonzero(v)[0]
        if nz.size:
            pc = int(nz[0])
            v = fld.scale_array(fld.inv(int(v[pc])), v)
            echelon.append((pc, v))
            rank += 1
        ranks.append(rank)
    return ranks


def measured_dimensions(table: EvaluationTable) -> list[int]:
    """Measured code dimension at every budget m = 0 .. n+2g-1."""
    rows = np.stack([f.values for f in table.functions])
    ranks = _incremental_ranks(table.field, rows)
    poles = [f.pole_order for f in table.functions]
    dims = []
    j = -1
    for m in range(table.top_order + 1):
        while j + 1 < len(poles) and poles[j + 1] <= m:
            j += 1
        dims.append(ranks[j] if j >= 0 else 0)
    return dims


def empirical_hstar(table: EvaluationTable) -> HStar:
    """Jump set read off the measured dimension chain."""
    return HStar.from_dimension_chain(measured_dimensions(table), table.semigroup)


def chain_matrix(table: EvaluationTable) -> FieldMatrix:
    """The n rows at the empirical jump pole orders, in chain order."""
    hs = empirical_hstar(table)
    rows = [table.row_for_pole(m) for m in hs.members]
    return FieldMatrix(table.field, np.stack(rows))


def improved_generators(table: EvaluationTable, delta: int,
                        adjust=None) -> FieldMatrix:
    """Generator matrix of the improved code with designed distance delta.

    Rows are the chain rows at indices whose profile count reaches delta.
    When ``adjust`` is an isometry witness vector, the rows first undergo the
    biorthogonal adjustment and the same indices are selected from the result.
    """
    hs = empirical_hstar(table)
    if not 1 <= delta <= hs.n:
        raise DeltaOutOfRange(f"delta {delta} outside 1..{hs.n}")
    profile = bounds.lambda_profile(hs)
    chain = (biorthogonal_adjust(table, adjust) if adjust is not None
             else chain_matrix(table))
    keep = [i - 1 for i in range(1, hs.n + 1) if profile.count(i) >= delta]
    return FieldMatrix(table.field, chain.data[keep])


def biorthogonal_adjust(table: EvaluationTable, x) -> FieldMatrix:
    """Replace each chain row so it pairs nonzero only with its mirror index.

    Given an isometry witness x, returns rows w'_1..w'_n with the same
    triangular span such that (x * w'_i) . w_j vanishes unless j = n-i+1.
    Built inductively: each new row subtracts the already-adjusted rows,
    scaled to cancel the offending pairings.
    """
    fld = table.field
    hs = empirical_hstar(table)
    if not hs.is_isometry_dual():
        raise NotIsometryDual("the measured chain is not isometry-dual")
    x = np.asarray(x, dtype=np.int32)
    n = hs.n
    if x.shape != (n,) or not (x != 0).all():
        raise NotIsometryDual("witness must have n nonzero coordinates")
    w = chain_matrix(table).data
    adj = np.zeros_like(w)
    adj[0] = w[0]
    pairings = []  # (x * adj[i]) . w[n-1-i], fixed once row i is final
    pairings.append(fld.dot(fld.star(x, adj[0]), w[n - 1]))
    if pairings[0] == 0:
        raise ZeroPivot("mirror pairing vanished at row 1; invalid witness")
    for s in range(1, n):
        v = w[s].copy()
        for i in range(s):
            a_i = fld.dot(fld.star(x, w[s]), w[n - 1 - i])
            if a_i == 0:
                continue
            coef = fld.neg(fld.div(a_i, pairings[i]))
            v = fld.add_arrays(v, fld.scale_array(coef, adj[i]))
        adj[s] = v
        d = fld.dot(fld.star(x, v), w[n - 1 - s])
        if d == 0:
            raise ZeroPivot(
                f"mirror pairing vanished at row {s + 1}; invalid witness"
            )
        pairings.append(d)
    # post-condition: pairings vanish exactly off the antidiagonal
    gram = fld.matmul(fld.mul_arrays(adj, x[None, :]), w.T)
    off = np.ones((n, n), dtype=bool)
    off[np.arange(n), np.arange(n)[::-1]] = False
    if gram[off].any() or (gram[~off] == 0).any():
        raise ZeroPivot("adjusted rows violate the biorthogonality pattern")
    return FieldMatrix(fld, adj)


def save_table(table: EvaluationTable, path) -> None:
    obj = {
        "field": {"p": table.field.p, "k": table.field.k},
        "n": table.n,
        "genus": table.genus,
        "semigroup_generators": list(table.semigroup.generators),
        "points": list(table.points),
        "functions": [
            {"pole_order": f.pole_order, "values": [int(v) for v in f.values]}
            for f in table.functions
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh)


def load_table(path) -> EvaluationTable:
    """Read and fully validate a table file; see save_table for the schema."""
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    try:
        fld = field(int(obj["field"]["p"]), int(obj["field"]["k"]))
        n = int(obj["n"])
        genus = int(obj["genus"])
        gens = [int(g) for g in obj["semigroup_generators"]]
        points = [str(p) for p in obj["points"]]
        functions = [(int(f["pole_order"]), [int(v) for v in f["values"]])
                     for f in obj["functions"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed table file: {exc}") from exc
    S = NumericalSemigroup.from_generators(gens)
    if len(points) != n:
        raise SchemaError(f"point count {len(points)} does not match n={n}")
    if S.genus != genus:
        raise SchemaError(
            f"declared genus {genus} does not match the semigroup ({S.genus})"
        )
    return EvaluationTable(fld, points, functions, S)


def code_chain(table: EvaluationTable):
    """Code chain over the empirical jump rows; see :mod:`agb.generic_bound`."""
    from .generic_bound import CodeChain
    return CodeChain(table.field, chain_matrix(table).data)
