"""Functional graphs of self-maps on finite sets.

A functional graph is stored as a multiset of components; each component is
a directed cycle together with the rooted trees hanging at its cycle nodes,
recorded in cyclic order.  Canonical codes make equality coincide with graph
isomorphism: a component code is ``C<len>[...]`` around the lexicographically
minimal rotation of the hanging-tree codes, and a graph code joins the sorted
component codes with ``;``.

The one trusted primitive is :func:`brute_graph`, which decomposes an
explicit successor map into cycles and hanging trees.  Tensor products are
computed by materializing both operands as successor maps and decomposing
the product map, never through algebraic identities.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence

from .trees import LEAF, RootedTree

__all__ = [
    "Component",
    "FunctionalGraph",
    "GraphSizeError",
    "DEFAULT_MAX_NODES",
    "canonical_code",
    "cyc",
    "extended_tree",
    "disjoint_sum",
    "brute_graph",
    "decompose_successors",
    "materialize",
    "tensor",
    "restricted_tensor",
    "to_dot",
]

DEFAULT_MAX_NODES = 10**6


class GraphSizeError(ValueError):
    """Raised when a brute-force construction would exceed the node cap."""


def _min_rotation(codes: Sequence[str]) -> int:
    """Index of the lexicographically minimal rotation of a code sequence."""
    m = len(codes)
    if m == 1 or len(set(codes)) == 1:
        return 0
    doubled = list(codes) + list(codes)
    return min(range(m), key=lambda r: doubled[r:r + m])


class Component:
    """One connected component: a cycle with hanging trees in cyclic order."""

    __slots__ = ("cycle_len", "hanging", "code", "node_count")

    def __init__(self, cycle_len: int, hanging: Sequence[RootedTree]):
        if cycle_len < 1:
            raise ValueError("cycle length must be positive")
        if len(hanging) != cycle_len:
            raise ValueError("need one hanging tree per cycle node")
        r = _min_rotation([t.code for t in hanging])
        self.cycle_len = cycle_len
        self.hanging = tuple(hanging[r:]) + tuple(hanging[:r])
        self.code = "C%d[%s]" % (cycle_len, ",".join(t.code for t in self.hanging))
        self.node_count = sum(t.node_count for t in self.hanging)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Component) and self.code == other.code

    def __hash__(self) -> int:
        return hash(self.code)

    def __repr__(self) -> str:
        return f"Component({self.code!r})"


class FunctionalGraph:
    """Multiset of components; equality is graph isomorphism."""

    __slots__ = ("components", "code", "node_count")

    def __init__(self, components: Iterable[Component] = ()):
        comps = tuple(sorted(components, key=lambda c: c.code))
        self.components = comps
        self.code = ";".join(c.code for c in comps)
        self.node_count = sum(c.node_count for c in comps)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FunctionalGraph) and self.code == other.code

    def __hash__(self) -> int:
        return hash(self.code)

    def __repr__(self) -> str:
        return f"FunctionalGraph({self.code!r})"


def canonical_code(obj: RootedTree | Component | FunctionalGraph) -> str:
    """Text encoding under which equality is exactly isomorphism."""
    if isinstance(obj, (RootedTree, Component, FunctionalGraph)):
        return obj.code
    raise TypeError(f"no canonical code for {type(obj).__name__}")


def cyc(m: int, tree: RootedTree = LEAF) -> FunctionalGraph:
    """Cycle of length m with a copy of `tree` hanging at every cycle node."""
    return FunctionalGraph([Component(m, (tree,) * m)])


def extended_tree(tree: RootedTree) -> FunctionalGraph:
    """The extended tree {T}: a loop at the root of T."""
    return cyc(1, tree)


def disjoint_sum(graphs: Iterable[FunctionalGraph]) -> FunctionalGraph:
    comps: list[Component] = []
    for g in graphs:
        comps.extend(g.components)
    return FunctionalGraph(comps)


def decompose_successors(succ: Sequence[int]) -> list[tuple[list[int], list[RootedTree]]]:
    """Split a successor map into (cycle nodes, hanging trees) per component.

    The i-th hanging tree is rooted at the i-th cycle node; cycle nodes are
    listed in cycle order.
    """
    n = len(succ)
    state = bytearray(n)  # 0 unseen, 1 on current walk, 2 finished
    on_cycle = bytearray(n)
    cycles: list[list[int]] = []
    for start in range(n):
        if state[start]:
            continue
        path = []
        v = start
        while state[v] == 0:
            state[v] = 1
            path.append(v)
            v = succ[v]
        if state[v] == 1:
            cycle = path[path.index(v):]
            cycles.append(cycle)
            for u in cycle:
                on_cycle[u] = 1
        for u in path:
            state[u] = 2

    children: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        if not on_cycle[v]:
            children[succ[v]].append(v)

    def tree_at(root: int) -> RootedTree:
        order = [root]
        i = 0
        while i < len(order):
            order.extend(children[order[i]])
            i += 1
        built: dict[int, RootedTree] = {}
        for v in reversed(order):
            kids = children[v]
            built[v] = RootedTree(built[c] for c in kids) if kids else LEAF
        return built[root]

    return [(cycle, [tree_at(c) for c in cycle]) for cycle in cycles]


def brute_graph(size: int, successor: Callable[[int], int] | Sequence[int],
                max_nodes: int = DEFAULT_MAX_NODES) -> FunctionalGraph:
    """Functional graph of an arbitrary self-map on {0, ..., size-1}."""
    if size < 0:
        raise ValueError("size must be nonnegative")
    if size > max_nodes:
        raise GraphSizeError(f"{size} nodes exceeds the cap of {max_nodes}")
    if callable(successor):
        succ = [successor(i) for i in range(size)]
    else:
        succ = list(successor[:size])
    for i, s in enumerate(succ):
        if not 0 <= s < size:
            raise ValueError(f"successor({i}) = {s} out of range")
    comps = [Component(len(cycle), trees)
             for cycle, trees in decompose_successors(succ)]
    return FunctionalGraph(comps)


def materialize(graph: FunctionalGraph) -> list[int]:
    """Successor map realizing the graph, numbered by canonical traversal.

    Components are laid out in sorted code order; within a component the
    cycle nodes come first (in canonical rotation order), then each cycle
    node's tree in depth-first order with children in canonical order.
    """
    succ: list[int] = []
    for comp in graph.components:
        base = len(succ)
        m = comp.cycle_len
        for i in range(m):
            succ.append(base + (i + 1) % m)
        for i, tree in enumerate(comp.hanging):
            stack = [(child, base + i) for child in reversed(tree.children)]
            while stack:
                sub, parent = stack.pop()
                node_id = len(succ)
                succ.append(parent)
                stack.extend((child, node_id) for child in reversed(sub.children))
    return succ


def tensor(g1: FunctionalGraph, g2: FunctionalGraph,
           max_nodes: int = DEFAULT_MAX_NODES) -> FunctionalGraph:
    """Functional graph of the product map, built by brute enumeration."""
    s1, s2 = materialize(g1), materialize(g2)
    n1, n2 = len(s1), len(s2)
    if n1 * n2 > max_nodes:
        raise GraphSizeError(f"product would have {n1 * n2} nodes (cap {max_nodes})")
    succ = [0] * (n1 * n2)
    for i in range(n1):
        row = i * n2
        ti = s1[i] * n2
        for j in range(n2):
            succ[row + j] = ti + s2[j]
    return brute_graph(n1 * n2, succ, max_nodes=max_nodes)


def _tree_successors(arg: RootedTree | FunctionalGraph) -> tuple[list[int | None], int]:
    """Partial successor map of a tree (root unmapped) or extended tree {T}.

    Returns (succ, root) with node 0 the root; succ[root] is None for a bare
    tree and root itself for an extended tree.
    """
    if isinstance(arg, RootedTree):
        tree, looped = arg, False
    elif isinstance(arg, FunctionalGraph):
        if len(arg.components) != 1 or arg.components[0].cycle_len != 1:
            raise ValueError("extended-tree argument must be a single Cyc(1, T)")
        tree, looped = arg.components[0].hanging[0], True
    else:
        raise TypeError("expected a RootedTree or an extended tree")
    succ: list[int | None] = [0 if looped else None]
    stack = [(child, 0) for child in reversed(tree.children)]
    while stack:
        sub, parent = stack.pop()
        node_id = len(succ)
        succ.append(parent)
        stack.extend((child, node_id) for child in reversed(sub.children))
    return succ, 0


def restricted_tensor(arg1: RootedTree | FunctionalGraph,
                      arg2: RootedTree | FunctionalGraph,
                      max_nodes: int = DEFAULT_MAX_NODES) -> RootedTree:
    """Hanging tree at the pair of roots in the tensor of two (extended) trees.

    Each argument is either a rooted tree or an extended tree {T}; the result
    is the connected component of the root pair, as a tree rooted there.
    """
    s1, r1 = _tree_successors(arg1)
    s2, r2 = _tree_successors(arg2)
    n1, n2 = len(s1), len(s2)
    if n1 * n2 > max_nodes:
        raise GraphSizeError(f"product would have {n1 * n2} nodes (cap {max_nodes})")
    pre1: list[list[int]] = [[] for _ in range(n1)]
    pre2: list[list[int]] = [[] for _ in range(n2)]
    for v, s in enumerate(s1):
        if s is not None:
            pre1[s].append(v)
    for v, s in enumerate(s2):
        if s is not None:
            pre2[s].append(v)
    # reverse BFS from the root pair; skip the self-loop when both are extended
    root = (r1, r2)
    order = [root]
    children: dict[tuple[int, int], list[tuple[int, int]]] = {root: []}
    i = 0
    while i < len(order):
        x, y = order[i]
        kids = [(u, v) for u in pre1[x] for v in pre2[y] if (u, v) != (x, y)]
        children[(x, y)] = kids
        order.extend(kids)
        i += 1
    built: dict[tuple[int, int], RootedTree] = {}
    for pair in reversed(order):
        kids = children[pair]
        built[pair] = RootedTree(built[c] for c in kids) if kids else LEAF
    return built[root]


def to_dot(graph: FunctionalGraph, name: str = "G") -> str:
    """DOT source with one edge per node; numbering follows materialize()."""
    succ = materialize(graph)
    lines = [f"digraph {name} {{"]
    lines.extend(f"  n{i};" for i in range(len(succ)))
    lines.extend(f"  n{i} -> n{s};" for i, s in enumerate(succ))
    lines.append("}")
    return "\n".join(lines)
