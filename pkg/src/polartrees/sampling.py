"""Seeded random instances: ideals, forests, and depolarizations.

The generators are meant to be sound rather than uniform.  Forest candidates
are grown by attaching facets inside an existing facet and then verified by
the exhaustive subcollection check; attachment alone does not guarantee a
forest (three facets glued into a common simplex can already be leafless),
so rejection sampling does the last mile.

A depolarization of a forest merges vertices into slot lists subject to a
prefix condition, which keeps the polarized ideal isomorphic to the facet
ideal of the forest while allowing genuine exponents.
"""

from __future__ import annotations

import random

from .monomials import Monomial, MonomialIdeal, Ring, minimalize
from .simplicial import SimplicialComplex, is_connected, is_forest


def random_monomial(rng: random.Random, ring: Ring, max_degree: int = 4) -> Monomial:
    degree = rng.randint(1, max_degree)
    exps = [0] * len(ring)
    for _ in range(degree):
        exps[rng.randrange(len(ring))] += 1
    return Monomial(ring, tuple(exps))


def random_ideal(
    rng: random.Random,
    ring: Ring,
    max_generators: int = 6,
    max_degree: int = 4,
) -> MonomialIdeal:
    count = rng.randint(1, max_generators)
    gens = [random_monomial(rng, ring, max_degree) for _ in range(count)]
    result = minimalize(gens, ring)
    assert isinstance(result, MonomialIdeal)
    return result


def random_ring(rng: random.Random, max_variables: int = 5) -> Ring:
    n = rng.randint(2, max_variables)
    return Ring(tuple(f"x{i}" for i in range(1, n + 1)))


def random_squarefree_ideal(
    rng: random.Random,
    ring: Ring,
    max_generators: int = 5,
    max_support: int = 3,
) -> MonomialIdeal:
    count = rng.randint(1, max_generators)
    gens = []
    for _ in range(count):
        size = rng.randint(1, min(max_support, len(ring)))
        support = rng.sample(list(ring.names), size)
        gens.append(Monomial(ring, tuple(1 if n in support else 0 for n in ring.names)))
    result = minimalize(gens, ring)
    assert isinstance(result, MonomialIdeal)
    return result


def random_forest_complex(
    rng: random.Random,
    max_facets: int = 7,
    max_facet_size: int = 4,
    connected: bool = False,
    max_vertices: int | None = None,
    max_attempts: int = 500,
) -> SimplicialComplex:
    """A verified simplicial forest with fresh vertices v1, v2, ...

    Each new facet overlaps the existing complex inside a proper subset of
    one facet (possibly empty when disconnected components are allowed) and
    always brings at least one fresh vertex.  Candidates failing the
    exhaustive forest check are rejected and regrown.
    """
    for _ in range(max_attempts):
        target = rng.randint(1, max_facets)
        counter = 0

        def fresh(k: int) -> list[str]:
            nonlocal counter
            out = [f"v{counter + i + 1}" for i in range(k)]
            counter += k
            return out

        facets: list[frozenset[str]] = [
            frozenset(fresh(rng.randint(1, max_facet_size)))
        ]
        while len(facets) < target:
            overlap: list[str] = []
            if connected or rng.random() < 0.8:
                host = sorted(rng.choice(facets))
                most = min(len(host) - 1, max_facet_size - 1)
                if most >= 1:
                    overlap = rng.sample(host, rng.randint(1, most))
            new_count = rng.randint(1, max_facet_size - len(overlap))
            facets.append(frozenset(overlap + fresh(new_count)))
        if max_vertices is not None and counter > max_vertices:
            continue
        vertices = tuple(f"v{i + 1}" for i in range(counter))
        candidate = SimplicialComplex(vertices, tuple(facets))
        if candidate.facet_count() != len(facets):
            continue  # an overlap swallowed a facet; regrow
        if connected and not is_connected(candidate):
            continue
        if is_forest(candidate):
            return candidate
    raise RuntimeError("failed to grow a forest; loosen the parameters")


def random_depolarization(
    rng: random.Random,
    complex_: SimplicialComplex,
    merge_tries: int | None = None,
) -> MonomialIdeal:
    """A random ideal whose polarization is the facet ideal of the complex.

    Vertices are merged into ordered slot groups.  Group j may be appended
    to group i only when every facet meeting group j contains all of group
    i; then each facet meets every group in a prefix, so replacing a group
    by a single variable raised to the prefix length polarizes back to the
    original facets.
    """
    if complex_.is_void:
        raise ValueError("cannot depolarize the void complex")
    vertices = [v for v in complex_.vertices if v not in complex_.isolated_vertices]
    facets = [set(f) for f in complex_.facets]
    groups: list[list[str]] = [[v] for v in vertices]
    if merge_tries is None:
        merge_tries = 2 * len(vertices)

    def can_merge(host: list[str], tail: list[str]) -> bool:
        host_set, tail_set = set(host), set(tail)
        for facet in facets:
            if facet & tail_set and not host_set <= facet:
                return False
        return True

    for _ in range(merge_tries):
        if len(groups) < 2:
            break
        i, j = rng.sample(range(len(groups)), 2)
        if can_merge(groups[i], groups[j]):
            groups[i] = groups[i] + groups[j]
            groups.pop(j)

    order = {v: k for k, v in enumerate(complex_.vertices)}
    groups.sort(key=lambda g: order[g[0]])
    ring = Ring(tuple(f"x{k + 1}" for k in range(len(groups))))
    gens = []
    for facet in facets:
        exps = tuple(len(facet & set(g)) for g in groups)
        gens.append(Monomial(ring, exps))
    return MonomialIdeal(ring, tuple(gens))


def random_forest_ideal(
    rng: random.Random,
    max_facets: int = 7,
    max_facet_size: int = 4,
    connected: bool = False,
    max_vertices: int | None = None,
) -> MonomialIdeal:
    """A random monomial ideal whose polarization is a simplicial forest."""
    forest = random_forest_complex(
        rng,
        max_facets=max_facets,
        max_facet_size=max_facet_size,
        connected=connected,
        max_vertices=max_vertices,
    )
    return random_depolarization(rng, forest)
