"""Parameterized graph families and constructions with known domination profiles.

Each family has a text spec (``"cycle:9"``, ``"biclique:2,4"``,
``"clawfreeA:2,3,6"``, ``"join:star:4,path:3"``, ``"spider:1,1,4"``), a builder
returning a concrete graph, and, where a closed form is known, the expected
(gamma11, gamma12, gamma) profile. Pendants and auxiliary vertices are always
attached in ascending vertex id order so builds are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domination import solve
from .graph import Graph, join

_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "star": 1,
    "biclique": 2,
    "wheel": 1,
    "bull": 0,
    "corona_complete": 1,
    "pn2_join": 1,
    "fig2e": 2,
    "clawfreeA": 3,
    "clawfreeB": 3,
}


class FamilySpecError(ValueError):
    """Unparseable or invalid family specification."""


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()
    subspecs: tuple["FamilySpec", ...] = ()

    def __str__(self) -> str:
        if self.name == "join":
            return f"join:{self.subspecs[0]},{self.subspecs[1]}"
        if self.params:
            return f"{self.name}:{','.join(str(p) for p in self.params)}"
        return self.name


@dataclass(frozen=True)
class ExpectedProfile:
    """Closed-form parameter values; None marks an unknown entry."""

    gamma11: int | None = None
    gamma12: int | None = None
    gamma: int | None = None

    @property
    def is_known(self) -> bool:
        return any(v is not None for v in (self.gamma11, self.gamma12, self.gamma))


def parse_spec(text: str) -> FamilySpec:
    text = text.strip()
    if not text:
        raise FamilySpecError("empty family spec")
    if text == "join" or text.startswith("join:"):
        rest = text[5:]
        for i, ch in enumerate(rest):
            if ch != ",":
                continue
            try:
                left = parse_spec(rest[:i])
                right = parse_spec(rest[i + 1 :])
            except FamilySpecError:
                continue
            return FamilySpec("join", (), (left, right))
        raise FamilySpecError(f"cannot split join spec {text!r} into two parts")
    name, _, tail = text.partition(":")
    if tail:
        try:
            params = tuple(int(x) for x in tail.split(","))
        except ValueError:
            raise FamilySpecError(f"non-integer parameter in {text!r}") from None
    else:
        params = ()
    if name == "spider":
        if not params:
            raise FamilySpecError("spider needs at least one leg length")
        return FamilySpec("spider", params)
    if name not in _ARITY:
        raise FamilySpecError(f"unknown family {name!r}")
    if len(params) != _ARITY[name]:
        raise FamilySpecError(
            f"{name} takes {_ARITY[name]} parameter(s), got {len(params)}"
        )
    return FamilySpec(name, params)


# -- basic families ------------------------------------------------------------


def _path(n: int) -> Graph:
    if n < 1:
        raise FamilySpecError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    if n < 3:
        raise FamilySpecError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n: int) -> Graph:
    if n < 1:
        raise FamilySpecError("complete needs n >= 1")
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j)])


def _star(n: int) -> Graph:
    if n < 2:
        raise FamilySpecError("star needs n >= 2")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def _biclique(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise FamilySpecError("biclique needs both parts non-empty")
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def _wheel(n: int) -> Graph:
    # hub 0 joined to a rim cycle; n=3 degenerates to the triangle
    if n < 3:
        raise FamilySpecError("wheel needs n >= 3")
    if n == 3:
        return _complete(3)
    edges = [(0, i) for i in range(1, n)]
    edges += [(i, i + 1) for i in range(1, n - 1)]
    edges.append((n - 1, 1))
    return Graph.from_edges(n, edges)


def _bull() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])


def _corona_complete(m: int) -> Graph:
    if m < 1:
        raise FamilySpecError("corona_complete needs m >= 1")
    edges = [(i, j) for j in range(m) for i in range(j)]
    edges += [(i, m + i) for i in range(m)]
    return Graph.from_edges(2 * m, edges)


def _spider(legs: tuple[int, ...]) -> Graph:
    if any(leg < 1 for leg in legs):
        raise FamilySpecError("spider legs must be positive")
    edges = []
    nxt = 1
    for leg in legs:
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


# -- constructions -----------------------------------------------------------------


def _pn2_join(n: int) -> Graph:
    """Path on n-2 vertices joined with two non-adjacent extra vertices."""
    if n < 4:
        raise FamilySpecError("pn2_join needs n >= 4")
    return join(_path(n - 2), Graph(2, (0, 0)))


def _fig2e(n: int, k: int) -> Graph:
    """The intermediate construction for maximum degree n-2: a path on k-2
    vertices joined with the non-adjacent pair {a, b}, plus n-k pendants on a.

    Vertex a (id k-2) ends with degree n-2; {a, b} is a dominating pair and
    the k join vertices form the unique perfect dominating code. The four
    target parameters are re-verified on every build.
    """
    if k < 4:
        raise FamilySpecError("fig2e needs k >= 4")
    if n - k < 2:
        raise FamilySpecError("fig2e needs n - k >= 2")
    a = k - 2
    edges = [(i, i + 1) for i in range(k - 3)]  # path 0..k-3
    edges += [(i, a) for i in range(k - 2)]
    edges += [(i, k - 1) for i in range(k - 2)]
    edges += [(a, v) for v in range(k, n)]
    g = Graph.from_edges(n, edges)
    checks = {
        "max degree": (g.max_degree, n - 2),
        "gamma": (solve(g, g.max_degree).value, 2),
        "gamma12": (solve(g, 2).value, 2),
        "gamma11": (solve(g, 1).value, k),
    }
    for label, (got, want) in checks.items():
        if got != want:
            raise AssertionError(f"fig2e({n},{k}) drifted: {label}={got}, expected {want}")
    return g


def _clawfreeA(h: int, k: int, n: int) -> Graph:
    """Two cliques of orders r=n-(h+k)+2 and k sharing one vertex, with h-1
    pendants hanging from distinct non-shared vertices of the k-clique."""
    if not 2 <= h <= k:
        raise FamilySpecError("clawfreeA needs 2 <= h <= k")
    if h + k > n:
        raise FamilySpecError("clawfreeA needs h + k <= n")
    r = n - (h + k) + 2
    shared = 0
    kr = [shared] + list(range(1, r))
    kk = [shared] + list(range(r, r + k - 1))
    edges = [(u, v) for i, u in enumerate(kr) for v in kr[i + 1 :]]
    edges += [(u, v) for i, u in enumerate(kk) for v in kk[i + 1 :]]
    pend_base = r + k - 1
    for i in range(h - 1):
        edges.append((kk[1 + i], pend_base + i))
    g = Graph.from_edges(n, edges)
    if not g.is_claw_free():
        raise AssertionError(f"clawfreeA({h},{k},{n}) is not claw-free")
    return g


def _clawfreeB(h: int, k: int, n: int) -> Graph:
    """A clique of order r=n-h carrying s=n-k pendant leaves plus h-s degree-2
    vertices, each attached to its own pair of clique vertices."""
    if not 2 <= h <= k <= n:
        raise FamilySpecError("clawfreeB needs 2 <= h <= k <= n")
    if h + k <= n:
        raise FamilySpecError("clawfreeB needs h + k > n")
    if 3 * h + k + 1 > 2 * n:
        raise FamilySpecError("clawfreeB needs 3h + k + 1 <= 2n")
    r = n - h
    s = n - k
    t = h - s
    edges = [(i, j) for j in range(r) for i in range(j)]
    for i in range(s):  # leaf on u_i
        edges.append((i, r + i))
    for i in range(t):  # x_i adjacent to v_i and w_i
        x = r + s + i
        edges.append((s + i, x))
        edges.append((s + t + i, x))
    g = Graph.from_edges(n, edges)
    if not g.is_claw_free():
        raise AssertionError(f"clawfreeB({h},{k},{n}) is not claw-free")
    return g


def build(spec: FamilySpec) -> Graph:
    """Materialize a family spec as a concrete graph."""
    name, p = spec.name, spec.params
    if name == "path":
        return _path(p[0])
    if name == "cycle":
        return _cycle(p[0])
    if name == "complete":
        return _complete(p[0])
    if name == "star":
        return _star(p[0])
    if name == "biclique":
        return _biclique(p[0], p[1])
    if name == "wheel":
        return _wheel(p[0])
    if name == "bull":
        return _bull()
    if name == "corona_complete":
        return _corona_complete(p[0])
    if name == "pn2_join":
        return _pn2_join(p[0])
    if name == "fig2e":
        return _fig2e(p[0], p[1])
    if name == "clawfreeA":
        return _clawfreeA(p[0], p[1], p[2])
    if name == "clawfreeB":
        return _clawfreeB(p[0], p[1], p[2])
    if name == "spider":
        return _spider(p)
    if name == "join":
        return join(build(spec.subspecs[0]), build(spec.subspecs[1]))
    raise FamilySpecError(f"unknown family {name!r}")


# -- closed-form profiles --------------------------------------------------------------


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _universal_profile(n: int) -> ExpectedProfile:
    if n == 1:
        return ExpectedProfile(None, None, 1)
    if n == 2:
        return ExpectedProfile(1, None, 1)
    return ExpectedProfile(1, 1, 1)


def expected_profile(spec: FamilySpec) -> ExpectedProfile:
    """Known (gamma11, gamma12, gamma) values, or an all-unknown marker."""
    name, p = spec.name, spec.params
    if name == "path":
        n = p[0]
        if n <= 2:
            return ExpectedProfile(1, None, 1)
        c = _ceil_div(n, 3)
        return ExpectedProfile(c, c, c)
    if name == "cycle":
        n = p[0]
        c = _ceil_div(n, 3)
        return ExpectedProfile(_ceil_div(2 * n, 3) - n // 3, c, c)
    if name in ("complete", "star", "wheel"):
        return _universal_profile(p[0])
    if name == "biclique":
        lo, hi = min(p), max(p)
        if lo == 1:
            return _universal_profile(1 + hi)
        return ExpectedProfile(2, 2, 2)
    if name == "bull":
        return ExpectedProfile(3, 2, 2)
    if name == "corona_complete":
        m = p[0]
        if m == 1:
            return ExpectedProfile(1, None, 1)
        return ExpectedProfile(m, m, m)
    if name == "pn2_join":
        n = p[0]
        if n == 4:
            return ExpectedProfile(2, 2, 2)  # degenerates to the 4-cycle
        if n == 5:
            return _universal_profile(5)  # middle path vertex is universal
        return ExpectedProfile(n, 2, 2)
    if name == "fig2e":
        return ExpectedProfile(p[1], 2, 2)
    if name in ("clawfreeA", "clawfreeB"):
        h, k = p[0], p[1]
        return ExpectedProfile(k, h, h)
    if name == "join":
        g1 = build(spec.subspecs[0])
        g2 = build(spec.subspecs[1])
        n = g1.n + g2.n
        if g1.has_universal_vertex() or g2.has_universal_vertex():
            return _universal_profile(n)
        if g1.has_isolated_vertex() and g2.has_isolated_vertex():
            return ExpectedProfile(2, 2, 2)
        return ExpectedProfile(n, 2, 2)
    return ExpectedProfile()


__all__ = [
    "ExpectedProfile",
    "FamilySpec",
    "FamilySpecError",
    "build",
    "expected_profile",
    "parse_spec",
]
