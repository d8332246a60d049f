"""
Order complexes, face posets and Euler characteristics.
"""

from fspace.linalg import char_poly, determinant, rank_bar
from fspace.models.complex import SimplicialComplex
from fspace.models.polynomial import IntPolynomial
from fspace.models.poset import Poset
from fspace.order import covers, extremal_points, linear_extension


def maximal_chains(p: Poset) -> list[tuple[int, ...]]:
    """Every maximal chain, as a path of covers from a minimal to a maximal point."""
    above: dict[int, list[int]] = {i: [] for i in range(p.n)}
    for i, j in covers(p):
        above[i].append(j)
    chains: list[tuple[int, ...]] = []

    def walk(path: list[int]) -> None:
        successors = above[path[-1]]
        if not successors:
            chains.append(tuple(path))
            return
        for j in successors:
            path.append(j)
            walk(path)
            path.pop()

    for start in extremal_points(p).minimal:
        walk([start])
    return sorted(chains)


def order_complex(p: Poset) -> SimplicialComplex:
    """Simplices are the nonempty chains; facets are the maximal chains."""
    return SimplicialComplex(p.labels, tuple(maximal_chains(p)))


def face_poset(k: SimplicialComplex) -> Poset:
    """Simplices ordered by inclusion, in (dimension, lexicographic) order.

    Point labels spell the vertex set, e.g. ``{a,b}``.
    """
    simplices = k.simplices
    sets = [set(s) for s in simplices]
    n = len(simplices)
    relations = [
        (i, j) for i in range(n) for j in range(n) if i != j and sets[i] <= sets[j]
    ]
    return Poset.from_relations(n, relations, [k.name_of(s) for s in simplices])


def euler(k: SimplicialComplex) -> int:
    return sum((-1) ** d * count for d, count in enumerate(k.f_vector()))


def reduced_euler(k: SimplicialComplex) -> int:
    return euler(k) - 1


def det_of_complex(k: SimplicialComplex) -> int:
    return abs(determinant(face_poset(k)))


def rankbar_of_complex(k: SimplicialComplex) -> int:
    return rank_bar(face_poset(k))


def char_poly_of_complex(k: SimplicialComplex) -> IntPolynomial:
    return char_poly(face_poset(k))


def chain_counts(p: Poset) -> list[int]:
    """c_1, c_2, ...: the number of k-point chains, over the strict order.

    ``ending[i][l]`` counts the l-point chains whose top is point i.
    """
    ending: dict[int, list[int]] = {}
    for i in linear_extension(p):
        counts = [0, 1]
        for j in range(p.n):
            if j != i and p.leq[j, i]:
                below = ending[j]
                counts.extend([0] * (len(below) + 1 - len(counts)))
                for length in range(1, len(below)):
                    counts[length + 1] += below[length]
        ending[i] = counts
    longest = max(len(c) for c in ending.values())
    totals = [0] * longest
    for counts in ending.values():
        for length, value in enumerate(counts):
            totals[length] += value
    return totals[1:]


def reduced_euler_of_poset(p: Poset) -> int:
    """χ̃ of the order complex: Σ (−1)^(k−1) c_k − 1, by chain counting."""
    return sum((-1) ** k * c for k, c in enumerate(chain_counts(p))) - 1
