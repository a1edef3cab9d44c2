"""Independent oracles used to cross-check the library.

Everything here is deliberately implemented from scratch with different data
structures and algorithms than the package under test: elements are value
maps on ``{±1, ..., ±n}``, lengths come from breadth-first search over the
Cayley graph, order relations come from brute-force word enumeration.  Slow
and dumb on purpose.
"""

from __future__ import annotations

import functools
import itertools
from collections import deque

# Generator letter codes, mirroring the library convention: 0 is the sign
# change, i >= 1 is the adjacent swap at positions i, i+1.


def oracle_generator_map(n: int, g: int) -> dict[int, int]:
    """Generator as a value map on {±1..±n}, built independently."""
    m = {i: i for i in range(1, n + 1)}
    m.update({-i: -i for i in range(1, n + 1)})
    if g == 0:
        m[1], m[-1] = -1, 1
    else:
        m[g], m[g + 1] = g + 1, g
        m[-g], m[-(g + 1)] = -(g + 1), -g
    return m


def oracle_compose(f: dict[int, int], g: dict[int, int]) -> dict[int, int]:
    """(f ∘ g)(x) = f(g(x))."""
    return {x: f[gx] for x, gx in g.items()}


def oracle_window(m: dict[int, int]) -> tuple[int, ...]:
    n = len(m) // 2
    return tuple(m[i] for i in range(1, n + 1))


def oracle_from_window(w: tuple[int, ...]) -> dict[int, int]:
    m = {}
    for i, x in enumerate(w, start=1):
        m[i] = x
        m[-i] = -x
    return m


def oracle_eval_word(n: int, word: tuple[int, ...]) -> tuple[int, ...]:
    """Evaluate a letter word left-to-right by value-map composition."""
    m = {i: i for i in range(-n, n + 1) if i != 0}
    for g in word:
        m = oracle_compose(m, oracle_generator_map(n, g))
    return oracle_window(m)


@functools.lru_cache(maxsize=None)
def bfs_lengths(n: int) -> dict[tuple[int, ...], int]:
    """Cayley-graph distance from the identity for every element (BFS)."""
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    queue = deque([start])
    gens = [oracle_generator_map(n, g) for g in range(n)]
    while queue:
        w = queue.popleft()
        wm = oracle_from_window(w)
        for gm in gens:
            nxt = oracle_window(oracle_compose(wm, gm))
            if nxt not in dist:
                dist[nxt] = dist[w] + 1
                queue.append(nxt)
    return dist


@functools.lru_cache(maxsize=None)
def reduced_words(n: int, w: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """All reduced words of ``w``, by peeling BFS-certified right descents."""
    dist = bfs_lengths(n)
    if dist[w] == 0:
        return frozenset({()})
    out = set()
    wm = oracle_from_window(w)
    for g in range(n):
        shorter = oracle_window(oracle_compose(wm, oracle_generator_map(n, g)))
        if dist[shorter] < dist[w]:
            for word in reduced_words(n, shorter):
                out.add(word + (g,))
    return frozenset(out)


def oracle_is_suffix(n: int, y: tuple[int, ...], w: tuple[int, ...]) -> bool:
    """Trailing-segment search over all reduced words (exponential; tiny n)."""
    ys = reduced_words(n, y)
    k = bfs_lengths(n)[y]
    return any(word[len(word) - k :] in ys for word in reduced_words(n, w))


def oracle_bruhat_leq(n: int, y: tuple[int, ...], w: tuple[int, ...]) -> bool:
    """Subword criterion against one fixed reduced word of ``w``."""
    dist = bfs_lengths(n)
    word = min(reduced_words(n, w))  # any fixed reduced word works
    reachable = set()
    for r in range(len(word) + 1):
        for positions in itertools.combinations(range(len(word)), r):
            sub = tuple(word[p] for p in positions)
            el = oracle_eval_word(n, sub)
            if dist[el] == len(sub):
                reachable.add(el)
    return y in reachable


def oracle_knuth_closure(
    windows: list[tuple[int, ...]],
    neighbors,
) -> dict[tuple[int, ...], int]:
    """Connected components of an undirected move relation, by plain BFS.

    ``neighbors(w)`` returns the adjacent windows.  Returns a dense component
    id per window, numbered by first appearance in ``windows`` order.
    """
    comp: dict[tuple[int, ...], int] = {}
    next_id = 0
    for w in windows:
        if w in comp:
            continue
        comp[w] = next_id
        queue = deque([w])
        while queue:
            cur = queue.popleft()
            for nxt in neighbors(cur):
                if nxt not in comp:
                    comp[nxt] = next_id
                    queue.append(nxt)
        next_id += 1
    return comp
