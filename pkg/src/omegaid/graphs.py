"""Strongly connected components of small explicit graphs."""

from __future__ import annotations

from typing import Callable, Hashable, Iterable


def strong_components(nodes: Iterable[Hashable], successors: Callable) -> list:
    """Tarjan's algorithm, iterative.  Returns a list of lists of nodes.

    ``successors(n)`` may yield nodes outside ``nodes``; those are ignored.
    """
    nodes = list(nodes)
    inside = set(nodes)
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    out: list = []
    counter = 0

    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(successors(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in inside:
                    continue
                if nxt not in index:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(successors(nxt))))
                    advanced = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    x = stack.pop()
                    on_stack.discard(x)
                    comp.append(x)
                    if x == node:
                        break
                out.append(comp)
    return out


def nontrivial_components(nodes: Iterable[Hashable], successors: Callable) -> list:
    """Components that contain a cycle: two or more nodes, or a self-loop."""
    out = []
    for comp in strong_components(nodes, successors):
        if len(comp) > 1 or comp[0] in set(successors(comp[0])):
            out.append(comp)
    return out


def reachable(start: Iterable[Hashable], successors: Callable) -> list:
    """Nodes reachable from ``start``, in breadth-first order."""
    order = list(dict.fromkeys(start))
    seen = set(order)
    i = 0
    while i < len(order):
        for nxt in successors(order[i]):
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
        i += 1
    return order
