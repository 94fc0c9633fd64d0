"""Integer-program formulation of k-quasiperfect domination, with LP export.

For the 0/1 adjacency matrix N and binary column vector X, a set is a valid
code exactly when N*X >= 1 - X (every excluded vertex is dominated) and
N*X <= k*1 + (n-k-1)*X (no excluded vertex sees more than k chosen
neighbors; rows of chosen vertices are slack). The writer emits CPLEX-style
LP text and the reader parses that same dialect back, so models round-trip.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, iter_bits


class LpFormatError(ValueError):
    """LP text that the built-in reader cannot interpret."""


@dataclass(frozen=True)
class IlpModel:
    n: int
    k: int
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not 1 <= self.k:
            raise ValueError("k must be at least 1")
        if len(self.matrix) != self.n:
            raise ValueError("matrix size does not match n")
        for i, row in enumerate(self.matrix):
            if len(row) != self.n or row[i] != 0:
                raise ValueError("matrix must be square with zero diagonal")
            for j, val in enumerate(row):
                if val not in (0, 1) or val != self.matrix[j][i]:
                    raise ValueError("matrix must be symmetric 0/1")


@dataclass(frozen=True)
class IlpEvaluation:
    feasible: bool
    objective: int
    violations: tuple[str, ...]


def ilp_model(g: Graph, k: int) -> IlpModel:
    if not 1 <= k <= g.max_degree:
        raise ValueError(f"k must be in 1..{g.max_degree}, got {k}")
    matrix = tuple(
        tuple(1 if g.adj[i] >> j & 1 else 0 for j in range(g.n)) for i in range(g.n)
    )
    return IlpModel(g.n, k, matrix)


def _terms(coeffs: list[tuple[int, int]]) -> str:
    """Render coefficient/variable pairs as LP-format linear expression text."""
    parts: list[str] = []
    for coeff, var in coeffs:
        if coeff == 0:
            continue
        name = f"x{var + 1}"
        if not parts:
            if coeff == 1:
                parts.append(name)
            elif coeff == -1:
                parts.append(f"- {name}")
            else:
                parts.append(f"{coeff} {name}" if coeff > 0 else f"- {-coeff} {name}")
        else:
            sign = "+" if coeff > 0 else "-"
            mag = abs(coeff)
            parts.append(f"{sign} {name}" if mag == 1 else f"{sign} {mag} {name}")
    return " ".join(parts) if parts else "0 x1"


def write_lp(model: IlpModel) -> str:
    """Serialize to LP format with binary variable declarations."""
    n, k = model.n, model.k
    lines = [f"\\ minimum {k}-quasiperfect dominating set, n={n}", "Minimize"]
    lines.append(" obj: " + " + ".join(f"x{i + 1}" for i in range(n)))
    lines.append("Subject To")
    for i in range(n):
        row = [(1, j) for j in range(n) if model.matrix[i][j]]
        lines.append(f" dominate_{i + 1}: " + _terms(row + [(1, i)]) + " >= 1")
    slack = n - k - 1
    for i in range(n):
        row = [(1, j) for j in range(n) if model.matrix[i][j]]
        lines.append(f" capacity_{i + 1}: " + _terms(row + [(-slack, i)]) + f" <= {k}")
    lines.append("Binary")
    lines.append(" " + " ".join(f"x{i + 1}" for i in range(n)))
    lines.append("End")
    return "\n".join(lines) + "\n"


def _parse_expression(text: str) -> dict[int, int]:
    """Parse ``3 x1 + x2 - 2 x4`` into {var_index: coefficient}."""
    tokens = text.replace("+", " + ").replace("-", " - ").split()
    coeffs: dict[int, int] = {}
    sign = 1
    pending: int | None = None
    for tok in tokens:
        if tok == "+":
            sign = 1
        elif tok == "-":
            sign = -1
        elif tok.startswith("x"):
            try:
                var = int(tok[1:]) - 1
            except ValueError:
                raise LpFormatError(f"bad variable {tok!r}") from None
            coeff = sign * (1 if pending is None else pending)
            coeffs[var] = coeffs.get(var, 0) + coeff
            sign = 1
            pending = None
        else:
            try:
                pending = int(tok)
            except ValueError:
                raise LpFormatError(f"unexpected token {tok!r}") from None
    if pending is not None:
        raise LpFormatError("dangling coefficient")
    return coeffs


def read_lp(text: str) -> IlpModel:
    """Parse LP text produced by :func:`write_lp` back into a model."""
    section = None
    dominate: dict[int, dict[int, int]] = {}
    capacity_rhs: set[int] = set()
    capacity: dict[int, dict[int, int]] = {}
    variables: set[int] = set()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("\\"):
            continue
        low = line.lower()
        if low == "minimize":
            section = "objective"
            continue
        if low == "subject to":
            section = "constraints"
            continue
        if low in ("binary", "binaries", "bin"):
            section = "binary"
            continue
        if low == "end":
            break
        if section == "constraints":
            name, _, rest = line.partition(":")
            name = name.strip()
            if ">=" in rest:
                lhs, _, rhs = rest.partition(">=")
                kind = "ge"
            elif "<=" in rest:
                lhs, _, rhs = rest.partition("<=")
                kind = "le"
            else:
                raise LpFormatError(f"constraint without comparator: {line!r}")
            coeffs = _parse_expression(lhs.strip())
            bound = int(rhs.strip())
            if name.startswith("dominate_") and kind == "ge" and bound == 1:
                dominate[int(name.split("_")[1]) - 1] = coeffs
            elif name.startswith("capacity_") and kind == "le":
                capacity[int(name.split("_")[1]) - 1] = coeffs
                capacity_rhs.add(bound)
            else:
                raise LpFormatError(f"unrecognized constraint {name!r}")
        elif section == "binary":
            for tok in line.split():
                if not tok.startswith("x"):
                    raise LpFormatError(f"non-binary token {tok!r}")
                variables.add(int(tok[1:]) - 1)
    if not variables:
        raise LpFormatError("no binary variables declared")
    n = len(variables)
    if variables != set(range(n)):
        raise LpFormatError("variable indices are not dense")
    if len(capacity_rhs) != 1:
        raise LpFormatError("inconsistent capacity right-hand sides")
    k = capacity_rhs.pop()
    if set(dominate) != set(range(n)) or set(capacity) != set(range(n)):
        raise LpFormatError("missing constraint rows")
    rows = []
    for i in range(n):
        coeffs = dict(dominate[i])
        own = coeffs.pop(i, 0)
        if own != 1:
            raise LpFormatError(f"dominate_{i + 1} must carry its own variable")
        row = tuple(1 if coeffs.get(j, 0) else 0 for j in range(n))
        cap = dict(capacity[i])
        cap_own = cap.pop(i, 0)
        if cap_own != -(n - k - 1):
            raise LpFormatError(f"capacity_{i + 1} has wrong own-variable slack")
        if tuple(1 if cap.get(j, 0) else 0 for j in range(n)) != row:
            raise LpFormatError(f"constraint rows for vertex {i + 1} disagree")
        rows.append(row)
    return IlpModel(n, k, tuple(rows))


def evaluate(model: IlpModel, x: Sequence[int]) -> IlpEvaluation:
    """Check a candidate 0/1 vector against every constraint."""
    if len(x) != model.n:
        raise ValueError("solution vector length does not match n")
    if any(v not in (0, 1) for v in x):
        raise ValueError("solution vector must be 0/1")
    n, k = model.n, model.k
    violations: list[str] = []
    for i in range(n):
        row_sum = sum(model.matrix[i][j] * x[j] for j in range(n))
        if row_sum < 1 - x[i]:
            violations.append(f"dominate_{i + 1}: {row_sum} < {1 - x[i]}")
        if row_sum > k + (n - k - 1) * x[i]:
            violations.append(f"capacity_{i + 1}: {row_sum} > {k + (n - k - 1) * x[i]}")
    return IlpEvaluation(not violations, sum(x), tuple(violations))


def vector_of(g: Graph, mask: int) -> list[int]:
    """Characteristic 0/1 vector of a vertex mask."""
    x = [0] * g.n
    for v in iter_bits(mask):
        x[v] = 1
    return x


__all__ = [
    "IlpEvaluation",
    "IlpModel",
    "LpFormatError",
    "evaluate",
    "ilp_model",
    "read_lp",
    "vector_of",
    "write_lp",
]
