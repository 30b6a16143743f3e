"""Small named systems used in tests and demos."""

from itertools import combinations

from .core import CoxeterSystem, new_system


def figure1(label: int = 3) -> CoxeterSystem:
    """Five generators; triangles ``bce`` and ``bde`` plus the pendant edge ``ab``."""
    pairs = ["ab", "be", "bc", "bd", "ce", "de"]
    return new_system("abcde", [(p[0], p[1], label) for p in pairs])


def figure2() -> CoxeterSystem:
    return new_system("abcde", [("a", "b", 3), ("b", "c", 3), ("b", "d", 2),
                                ("c", "d", 3), ("c", "e", 2), ("d", "e", 2)])


def figure3() -> CoxeterSystem:
    """The twisted system, with the conjugate of ``e`` named ``e'``."""
    return new_system(["a", "b", "c", "d", "e'"],
                      [("a", "b", 3), ("b", "c", 3), ("b", "d", 2),
                       ("c", "d", 3), ("b", "e'", 2), ("c", "e'", 2)])


def complete(n: int, label: int = 3) -> CoxeterSystem:
    gens = [chr(ord("a") + i) for i in range(n)]
    return new_system(gens, [(s, t, label) for s, t in combinations(gens, 2)])


def free_product(n: int) -> CoxeterSystem:
    """``n`` generators with every pair of infinite order."""
    return new_system([chr(ord("a") + i) for i in range(n)])


def cycle(n: int, label: int = 3) -> CoxeterSystem:
    gens = [chr(ord("a") + i) for i in range(n)]
    return new_system(gens, [(gens[i], gens[(i + 1) % n], label) for i in range(n)])


def path(n: int, label: int = 3) -> CoxeterSystem:
    gens = [chr(ord("a") + i) for i in range(n)]
    return new_system(gens, [(gens[i], gens[i + 1], label) for i in range(n - 1)])
