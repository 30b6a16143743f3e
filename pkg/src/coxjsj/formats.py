"""DOT output and reproducible random systems."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Mapping, Sequence

from .core import INF, CoxeterSystem, new_system
from .jsj import GraphOfGroups

DEFAULT_LABELS = (2, 3, 4, 5)


def _label(R) -> str:
    return ",".join(R) if R else "{}"


def emit_dot(obj) -> str:
    """DOT text for a system (edges labelled by order) or a decomposition tree."""
    if isinstance(obj, GraphOfGroups):
        lines = ["graph jsj {"]
        for i, R in enumerate(obj.vertices):
            lines.append(f'  v{i} [label="{_label(R)}"];')
        for i, j, T in obj.edges:
            lines.append(f'  v{i} -- v{j} [label="{_label(T)}"];')
    elif isinstance(obj, CoxeterSystem):
        lines = ["graph P {"]
        for s in obj.generators:
            lines.append(f'  "{s}";')
        for s, t, m in obj.edges:
            lines.append(f'  "{s}" -- "{t}" [label="{m}"];')
    else:
        raise TypeError(f"cannot render {type(obj).__name__}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def generator_names(rank: int) -> list:
    if rank <= 26:
        return [chr(ord("a") + i) for i in range(rank)]
    width = len(str(rank - 1))
    return [f"g{i:0{width}d}" for i in range(rank)]


def random_system(rank: int, p: float = 0.5, labels: Sequence | Mapping = DEFAULT_LABELS,
                  seed: int = 0) -> CoxeterSystem:
    """Each pair gets a finite label with probability ``p``, else infinity.

    ``labels`` is either a sequence (uniform) or a ``{label: weight}`` mapping;
    ``INF`` is allowed as a label.
    """
    if rank < 1:
        raise ValueError("rank must be >= 1")
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    if isinstance(labels, Mapping):
        values, weights = list(labels), list(labels.values())
    else:
        values, weights = list(labels), None
    rng = random.Random(seed)
    gens = generator_names(rank)
    orders = []
    for s, t in combinations(gens, 2):
        if rng.random() < p:
            m = rng.choices(values, weights)[0]
            if m != INF:
                orders.append((s, t, m))
    return new_system(gens, orders)


def random_corpus(count: int, max_rank: int, seed: int = 0,
                  probabilities=(0.2, 0.3, 0.4, 0.5, 0.7),
                  labels: Sequence | Mapping = DEFAULT_LABELS) -> list:
    """A fixed list of random systems with ranks ``1..max_rank``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        rank = rng.randint(1, max_rank)
        p = rng.choice(probabilities)
        out.append(random_system(rank, p, labels, rng.randrange(2**32)))
    return out
