"""Dynamics of multiplication maps x -> a*x on finite quotient rings.

Given a domain, a nonzero element a and a nonzero ideal n, the functional
graph of the multiplication map on D/n is predicted from the structure
theorem: split n = n0*n1 by the a-decomposition, attach the elementary tree
of the nu-series of n0 to every cycle node, and read the cycle lengths off
the divisors of n1.  The brute-force construction enumerates all residues
and is the independent oracle the prediction is verified against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .base import Domain
from .graphs import (DEFAULT_MAX_NODES, Component, FunctionalGraph, GraphSizeError,
                     brute_graph, cyc, disjoint_sum)
from .trees import LEAF, RootedTree, elementary_tree

__all__ = ["nu_series", "predicted_graph", "brute_amap_graph", "verify",
           "Prediction", "Report"]


def nu_series(dom: Domain, a, n0) -> tuple[int, ...]:
    """Norm sequence of the gcd chain of n0 against <a>.

    Requires every prime of n0 to divide <a>; the unit ideal gives the
    empty sequence.  The result is non-increasing and its product is the
    norm of n0.
    """
    if dom.is_zero(a):
        raise ValueError("nu-series requires a nonzero element")
    if dom.a_decomposition(a, n0)[1] != dom.unit_ideal:
        raise ValueError("some prime of the ideal does not divide the element")
    a_ideal = dom.principal(a)
    max_steps = sum(e for _, e in dom.factor(n0))
    norms: list[int] = []
    rem = n0
    while rem != dom.unit_ideal:
        g = dom.ideal_gcd(rem, a_ideal)
        norms.append(dom.norm(g))
        rem = dom.ideal_div(rem, g)
        if len(norms) > max_steps:
            raise RuntimeError("nu-series failed to terminate")
    assert all(norms[i] >= norms[i + 1] for i in range(len(norms) - 1))
    return tuple(norms)


@dataclass(frozen=True)
class Prediction:
    """Predicted graph together with its cycle summands and hanging tree."""

    graph: FunctionalGraph
    tree: RootedTree
    summands: tuple[dict, ...]  # {"divisor", "cycle_len", "multiplicity"}


def predicted_graph(dom: Domain, a, n) -> Prediction:
    """Structure-theorem graph of x -> a*x on D/n."""
    if dom.is_zero(a):
        raise ValueError("the prediction requires a nonzero element")
    n0, n1 = dom.a_decomposition(a, n)
    if n0 == dom.unit_ideal:
        tree = LEAF
    else:
        tree = elementary_tree(nu_series(dom, a, n0))
    parts = []
    summands = []
    for m in dom.divisors(n1):
        phi = dom.euler_phi(m)
        r = dom.mult_order(a, m)
        if phi % r:
            raise RuntimeError("Euler phi not divisible by the order")
        mult = phi // r
        summands.append({"divisor": dom.describe_ideal(m),
                         "cycle_len": r, "multiplicity": mult})
        parts.extend([cyc(r, tree)] * mult)
    graph = disjoint_sum(parts)
    assert graph.node_count == dom.norm(n), "predicted node count mismatch"
    return Prediction(graph=graph, tree=tree, summands=tuple(summands))


def brute_amap_graph(dom: Domain, a, n,
                     max_nodes: int = DEFAULT_MAX_NODES) -> FunctionalGraph:
    """Functional graph of x -> a*x on D/n by full enumeration."""
    size = dom.norm(n)
    if size > max_nodes:
        raise GraphSizeError(f"{size} residues exceed the cap of {max_nodes}")
    residues = dom.residues(n)
    index = {r: i for i, r in enumerate(residues)}
    ar = dom.reduce(a, n)
    succ = [index[dom.mul_mod(r, ar, n)] for r in residues]
    return brute_graph(size, succ, max_nodes=max_nodes)


@dataclass
class Report:
    """Outcome of checking a prediction against the brute-force graph."""

    domain: dict
    a: object
    n: object
    isomorphic: bool
    predicted_code: str
    brute_code: str
    node_count: int
    summands: list = field(default_factory=list)
    params: dict | None = None

    def as_dict(self) -> dict:
        out = {
            "domain": self.domain,
            "a": self.a,
            "n": self.n,
            "isomorphic": self.isomorphic,
            "predicted_code": self.predicted_code,
            "brute_code": self.brute_code,
            "node_count": self.node_count,
            "summands": self.summands,
        }
        if self.params is not None:
            out["params"] = self.params
        return out

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.as_dict(), indent=indent)


def _corrupt(graph: FunctionalGraph) -> FunctionalGraph:
    """Perturb the first component's cycle length by one (negative control)."""
    comps = list(graph.components)
    first = comps[0]
    longer = Component(first.cycle_len + 1,
                       tuple(first.hanging) + (first.hanging[0],))
    return FunctionalGraph([longer] + comps[1:])


def verify(dom: Domain, a, n, max_nodes: int = DEFAULT_MAX_NODES,
           corrupt_cycle: bool = False) -> Report:
    """Compare the predicted graph with the brute-force graph.

    `corrupt_cycle` deliberately damages the prediction before comparing;
    it exists so the failure path can be exercised end to end.
    """
    prediction = predicted_graph(dom, a, n)
    predicted = prediction.graph
    if corrupt_cycle:
        predicted = _corrupt(predicted)
    brute = brute_amap_graph(dom, a, n, max_nodes=max_nodes)
    return Report(
        domain=dom.domain_json(),
        a=dom.describe_element(a),
        n=dom.describe_ideal(n),
        isomorphic=predicted.code == brute.code,
        predicted_code=predicted.code,
        brute_code=brute.code,
        node_count=brute.node_count,
        summands=list(prediction.summands),
    )
