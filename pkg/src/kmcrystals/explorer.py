"""Crystal graph generation and analysis, plus independent finite-type oracles.

Generation is a breadth-first closure of a seed set under every e_k and
f_k, up to an optional depth bound; nodes left unexpanded are frontier
nodes.  Analyses (highest-weight scan, decomposition, characters,
isomorphism) are read-only passes over a generated graph.

The oracles at the bottom (positive-root enumeration, the product formula
for dimensions, the multiplicity recursion) are classical finite-type
representation theory, computed in exact integer arithmetic with no crystal
machinery at all.  They exist to cross-check the crystal graphs against an
independent route.
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass, field

from .crystal_core import (
    CrystalElement,
    CrystalGraph,
    GraphNode,
    check_strict_morphism,
    is_neg_inf,
)
from .quiver_model import model_highest_weight
from .root_datum import RootDatum, Weight
from .tensor import TensorElement

DEFAULT_NODE_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """Raised when generation would exceed the node budget; carries the partial graph."""

    def __init__(self, budget: int, partial: CrystalGraph):
        super().__init__(f"node budget {budget} exceeded")
        self.budget = budget
        self.partial = partial


def generate(
    rd: RootDatum,
    seeds,
    depth: int | None = None,
    node_budget: int | None = None,
) -> CrystalGraph:
    """Explore the closure of ``seeds`` under all e_k and f_k.

    ``depth`` bounds the number of operator applications from the seed set;
    None means full expansion (the crystal had better be finite).  Nodes at
    the depth bound stay marked as frontier.  Node identity is the
    canonical serialization, so exploration order never changes the result.
    """
    if depth is not None and depth < 0:
        raise ValueError("depth must be >= 0")
    if node_budget is None:
        node_budget = int(os.environ.get("CRYSTAL_NODE_BUDGET", DEFAULT_NODE_BUDGET))
    g = CrystalGraph(rd=rd, depth_bound=depth)
    queue: deque[str] = deque()

    def admit(element: CrystalElement, d: int) -> str:
        key = element.key()
        if key not in g.nodes:
            if len(g.nodes) >= node_budget:
                raise BudgetExceeded(node_budget, g)
            g.nodes[key] = GraphNode(
                element=element,
                weight=element.weight(rd),
                eps=element.eps_vector(rd),
                phi=element.phi_vector(rd),
                depth=d,
                frontier=True,
            )
            queue.append(key)
        return key

    g.generators = tuple(admit(s, 0) for s in seeds)
    while queue:
        key = queue.popleft()
        nd = g.nodes[key]
        if depth is not None and nd.depth >= depth:
            continue  # stays frontier
        nd.frontier = False
        for k in rd.vertices():
            down = nd.element.f(rd, k)
            if down is not None:
                g.edges.add((key, k, admit(down, nd.depth + 1)))
            up = nd.element.e(rd, k)
            if up is not None:
                g.edges.add((admit(up, nd.depth + 1), k, key))
    return g


def generate_highest_weight_crystal(rd: RootDatum, lam, depth=None, node_budget=None):
    """Generate B(lam) from the profile-model source element."""
    return generate(rd, [model_highest_weight(rd, lam)], depth=depth, node_budget=node_budget)


def closed_family_instance(rd: RootDatum, lam, mu, depth: int | None = None):
    """Compare the component of b_lam (x) b_mu inside B(lam) (x) B(mu) with
    B(lam + mu); returns the is_isomorphic triple.

    With a depth bound both sides are generated to the same truncation and
    compared frontier-aware.
    """
    pair = TensorElement((model_highest_weight(rd, lam), model_highest_weight(rd, mu)))
    component = generate(rd, [pair], depth=depth)
    total = tuple(a + b for a, b in zip(lam, mu))
    target = generate_highest_weight_crystal(rd, total, depth=depth)
    return is_isomorphic(component, target)


def highest_weight_elements(g: CrystalGraph) -> list[str]:
    """Keys of nodes killed by every e_k (eps_k = 0, or -inf where nothing acts)."""
    out = []
    for key in g.sorted_keys():
        nd = g.nodes[key]
        if all(is_neg_inf(x) or x == 0 for x in nd.eps):
            out.append(key)
    return out


def character(g: CrystalGraph) -> dict[Weight, int]:
    """Weight multiset of the explored nodes (exact on frontier-free graphs)."""
    counts: dict[Weight, int] = {}
    for nd in g.nodes.values():
        counts[nd.weight] = counts.get(nd.weight, 0) + 1
    return counts


def tensor_product_graph(
    rd: RootDatum, graphs: list[CrystalGraph], depth: int | None = None
) -> CrystalGraph:
    """Materialize the tensor product of explored crystals.

    With ``depth`` None the factors must be frontier-free and the result is
    the complete product crystal (the product set is already closed under
    the operators, so generation only fills in edges).  With a depth bound,
    truncated factors are allowed and the result is itself a truncation.
    """
    if depth is None:
        for g in graphs:
            if g.has_frontier():
                raise ValueError(
                    "tensor_product_graph needs completely explored factors "
                    "unless a depth bound is given"
                )
    pools = [[g.nodes[key].element for key in g.sorted_keys()] for g in graphs]
    seeds = [TensorElement(combo) for combo in itertools.product(*pools)]
    return generate(rd, seeds, depth=depth)


@dataclass
class DecompositionTable:
    """Highest weights with multiplicities found in an explored crystal."""

    entries: dict[Weight, int]
    complete: bool
    depth: int | None
    flagged: list[str] = field(default_factory=list)
    component_sizes: dict[str, int] = field(default_factory=dict)

    def multiplicity(self, wt: Weight) -> int:
        return self.entries.get(wt, 0)

    def sorted_entries(self) -> list[tuple[Weight, int]]:
        return sorted(self.entries.items(), key=lambda kv: (kv[0].lambda_part, kv[0].root_part))

    def to_tsv(self) -> str:
        lines = ["lambda\troot\tmultiplicity"]
        for wt, mult in self.sorted_entries():
            lam = ",".join(str(x) for x in wt.lambda_part)
            root = ",".join(str(x) for x in wt.root_part)
            lines.append(f"{lam}\t{root}\t{mult}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "entries": [
                {"weight": wt.serialize(), "multiplicity": mult}
                for wt, mult in self.sorted_entries()
            ],
            "complete": self.complete,
            "depth": self.depth,
            "flagged": sorted(self.flagged),
        }


def decompose(g: CrystalGraph) -> DecompositionTable:
    """One entry per highest-weight element whose component is fully explored.

    Components that touch the frontier are reported in ``flagged`` and never
    counted, so truncated graphs cannot produce phantom multiplicities.
    """
    neighbours: dict[str, set[str]] = {key: set() for key in g.nodes}
    for (a, _, b) in g.edges:
        neighbours[a].add(b)
        neighbours[b].add(a)
    entries: dict[Weight, int] = {}
    flagged: list[str] = []
    sizes: dict[str, int] = {}
    for hw in highest_weight_elements(g):
        seen = {hw}
        stack = [hw]
        touches_frontier = False
        while stack:
            cur = stack.pop()
            if g.nodes[cur].frontier:
                touches_frontier = True
            for nxt in neighbours[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if touches_frontier:
            flagged.append(hw)
            continue
        wt = g.nodes[hw].weight
        entries[wt] = entries.get(wt, 0) + 1
        sizes[hw] = len(seen)
    return DecompositionTable(
        entries=entries,
        complete=not g.has_frontier(),
        depth=g.depth_bound,
        flagged=flagged,
        component_sizes=sizes,
    )


def is_isomorphic(g1: CrystalGraph, g2: CrystalGraph):
    """Decide isomorphism of two highest-weight crystal graphs.

    Both graphs must contain exactly one highest-weight element.  Matching
    is a parallel walk down the colored f-edges from the two sources;
    highest-weight crystal isomorphisms are unique, so the first mismatch
    settles the question.  Frontier pairs are not expanded, which makes
    equal-depth truncations comparable.  On success the witness map is
    re-validated as a strict morphism.

    Returns (answer, witness_map_or_None, reason).
    """
    hw1 = highest_weight_elements(g1)
    hw2 = highest_weight_elements(g2)
    if len(hw1) != 1 or len(hw2) != 1:
        raise ValueError(
            f"is_isomorphic needs unique highest-weight elements, got {len(hw1)} and {len(hw2)}"
        )
    out1 = {(a, k): b for (a, k, b) in g1.edges}
    out2 = {(a, k): b for (a, k, b) in g2.edges}
    mapping = {hw1[0]: hw2[0]}
    queue = deque([(hw1[0], hw2[0])])
    while queue:
        a, b = queue.popleft()
        na, nb = g1.nodes[a], g2.nodes[b]
        if na.weight != nb.weight:
            return False, None, f"weight mismatch at {a}"
        if na.eps != nb.eps or na.phi != nb.phi:
            return False, None, f"statistics mismatch at {a}"
        if na.frontier or nb.frontier:
            continue
        for k in g1.rd.vertices():
            fa = out1.get((a, k))
            fb = out2.get((b, k))
            if (fa is None) != (fb is None):
                return False, None, f"f_{k} defined on one side only at {a}"
            if fa is None:
                continue
            if fa in mapping:
                if mapping[fa] != fb:
                    return False, None, f"edge clash at {fa}"
                continue
            mapping[fa] = fb
            queue.append((fa, fb))
    report = check_strict_morphism(g1, g2, mapping)
    if not report.ok():
        return False, None, "witness failed strict-morphism check: " + report.violations[0]
    return True, mapping, ""


# ---------------------------------------------------------------------------
# Independent finite-type oracles (no crystal machinery below this line).


def _det_int(rows) -> int:
    """Bareiss fraction-free determinant of a small integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            for r in range(i + 1, n):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
        prev = m[i][i]
    return sign * m[-1][-1]


def finite_type_check(rd: RootDatum) -> bool:
    """True iff the Cartan matrix is positive definite (all leading minors > 0)."""
    for r in range(1, rd.n + 1):
        minor = [row[:r] for row in rd.cartan[:r]]
        if _det_int(minor) <= 0:
            return False
    return True


def positive_roots(rd: RootDatum) -> list[tuple[int, ...]]:
    """All positive roots as simple-root coefficient vectors, by height closure.

    Simply-laced only (which is all this library handles): a root string
    through beta in a simple direction has length at most one, so
    beta + alpha_k is a root iff (beta, alpha_k) < (1 if beta - alpha_k is
    a root else 0) + 1.
    """
    if not finite_type_check(rd):
        raise ValueError("positive root enumeration needs a finite-type root datum")
    n = rd.n
    simple = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    level = list(simple)
    while level:
        nxt = []
        for beta in level:
            for k in range(n):
                pair = sum(beta[l] * rd.cartan[k][l] for l in range(n))
                lowered = list(beta)
                lowered[k] -= 1
                p = 1 if tuple(lowered) in roots else 0
                if p - pair >= 1:
                    raised = list(beta)
                    raised[k] += 1
                    gamma = tuple(raised)
                    if gamma not in roots:
                        roots.add(gamma)
                        nxt.append(gamma)
        level = nxt
    return sorted(roots)


def weyl_dim(rd: RootDatum, lam: Weight) -> int:
    """dim V(lam) by the product formula over positive roots; exact integers."""
    if not rd.is_dominant(lam):
        raise ValueError("weyl_dim needs a dominant weight")
    shifted = [rd.pairing(k, lam) + 1 for k in rd.vertices()]  # <h_k, lam + rho>
    num = den = 1
    for coeffs in positive_roots(rd):
        num *= sum(c * s for c, s in zip(coeffs, shifted))
        den *= sum(coeffs)
    if num % den != 0:
        raise AssertionError("dimension product did not divide evenly")
    return num // den


def freudenthal_multiplicities(rd: RootDatum, lam: Weight) -> dict[Weight, int]:
    """Weight multiplicities of V(lam) by the classical recursion.

    Works level by level below lam; every quantity in the recursion is an
    integer because the numerator pairs weights against root-lattice
    elements only.  Weights are returned in the same exact coordinate
    representation the crystal graphs use, so characters compare directly.
    """
    if not rd.is_dominant(lam):
        raise ValueError("freudenthal_multiplicities needs a dominant weight")
    proots = positive_roots(rd)
    mult: dict[Weight, int] = {lam: 1}
    lam_shifted = [rd.pairing(k, lam) + 1 for k in rd.vertices()]
    level = [lam]
    while level:
        candidates = sorted(
            {mu.subtract_alpha(k) for mu in level for k in rd.vertices()},
            key=lambda w: w.root_part,
        )
        nxt = []
        for mu in candidates:
            rhs = 0
            for coeffs in proots:
                j = 1
                while True:
                    nu = Weight(
                        mu.lambda_part,
                        tuple(r - j * c for r, c in zip(mu.root_part, coeffs)),
                    )
                    m = mult.get(nu)
                    if m is None:
                        break  # weight strings are unbroken; nothing further up
                    rhs += m * sum(c * rd.pairing(k, nu) for c, k in zip(coeffs, rd.vertices()))
                    j += 1
            if rhs == 0:
                continue
            beta = tuple(m - l for m, l in zip(mu.root_part, lam.root_part))
            two_lam_rho_beta = 2 * sum(b * s for b, s in zip(beta, lam_shifted))
            beta_norm = sum(
                beta[i] * sum(rd.cartan[i][j] * beta[j] for j in range(rd.n))
                for i in range(rd.n)
            )
            denom = two_lam_rho_beta - beta_norm
            if denom <= 0 or (2 * rhs) % denom != 0:
                raise AssertionError("multiplicity recursion produced a non-integer")
            m = (2 * rhs) // denom
            if m > 0:
                mult[mu] = m
                nxt.append(mu)
        level = nxt
    return mult
