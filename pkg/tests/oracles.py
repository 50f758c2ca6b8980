"""Independent brute-force oracles used to cross-check the library.

These deliberately avoid the library's own algorithms: membership sweeps
over bounded exponent boxes, itertools subset scans for covers and
non-faces, and a pair-by-pair substitution that undoes a polarization
without counting slots.
"""

from __future__ import annotations

import itertools

from polartrees import (
    Monomial,
    MonomialIdeal,
    PolarRing,
    Prime,
    Ring,
    SimplicialComplex,
    minimalize,
    polarization_sequence,
)


def box_members(ideal: MonomialIdeal, bound: tuple[int, ...]) -> set[tuple[int, ...]]:
    """Exponent tuples inside the box that the ideal contains."""
    gens = [g.exps for g in ideal.gens]
    out = set()
    for exps in itertools.product(*(range(b + 1) for b in bound)):
        if any(all(a <= b for a, b in zip(g, exps)) for g in gens):
            out.add(exps)
    return out


def equal_by_membership(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """Ideal equality decided by comparing membership on a bounding box.

    The box tops out at the componentwise max of both generator lcms, which
    is enough: every generator of either ideal lies inside it.
    """
    assert a.ring == b.ring
    bound = tuple(
        max(x, y) for x, y in zip(a.max_exponents(), b.max_exponents())
    )
    return box_members(a, bound) == box_members(b, bound)


def contained_by_membership(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """a inside b, decided on the joint bounding box."""
    assert a.ring == b.ring
    bound = tuple(
        max(x, y) for x, y in zip(a.max_exponents(), b.max_exponents())
    )
    return box_members(a, bound) <= box_members(b, bound)


def primes_cut_out_ideal(primes, ideal: MonomialIdeal) -> bool:
    """Whether the intersection of the primes equals the square-free ideal.

    Membership sweep over all square-free monomials of the ring: a monomial
    sits in every prime exactly when it should sit in the ideal.
    """
    ring = ideal.ring
    n = len(ring)
    gen_masks = [
        sum(1 << i for i, e in enumerate(g.exps) if e) for g in ideal.gens
    ]
    prime_masks = [
        sum(1 << ring.index(v) for v in p.variables) for p in primes
    ]
    for mask in range(1 << n):
        in_all = all(mask & pm for pm in prime_masks)
        in_ideal = any(mask & gm == gm for gm in gen_masks)
        if in_all != in_ideal:
            return False
    return True


def brute_minimal_covers(complex_: SimplicialComplex) -> set[frozenset]:
    """All minimal vertex covers by scanning every vertex subset."""
    vertices = complex_.vertices
    covers = []
    for size in range(0, len(vertices) + 1):
        for combo in itertools.combinations(vertices, size):
            chosen = frozenset(combo)
            if all(chosen & f for f in complex_.facets):
                covers.append(chosen)
    return {c for c in covers if not any(o < c for o in covers)}


def brute_minimal_nonfaces(complex_: SimplicialComplex) -> set[frozenset]:
    vertices = complex_.vertices
    nonfaces = []
    for size in range(1, len(vertices) + 1):
        for combo in itertools.combinations(vertices, size):
            chosen = frozenset(combo)
            if not any(chosen <= f for f in complex_.facets):
                nonfaces.append(chosen)
    return {s for s in nonfaces if not any(o < s for o in nonfaces)}


def sequence_substitution(polar: MonomialIdeal) -> MonomialIdeal:
    """Undo a polarization by applying the pair substitutions one by one.

    Every pair (head, tail) of the polarizing sequence stands for the
    identification tail -> head; exponents pile up on the head slot and the
    slot-one variables are then renamed to the base variables.  This is an
    independent route to the same answer as slot counting.
    """
    ring = polar.ring
    assert isinstance(ring, PolarRing)
    base = ring.base
    images = []
    for g in polar.gens:
        exps = list(g.exps)
        for head, tail in polarization_sequence(ring):
            h, t = ring.index(head), ring.index(tail)
            exps[h] += exps[t]
            exps[t] = 0
        base_exps = [0] * len(base)
        for name, e in zip(ring.names, exps):
            if e:
                i, slot = ring.structure_of(name)
                assert slot == 1
                base_exps[i] = e
        images.append(Monomial(base, tuple(base_exps)))
    result = minimalize(images, base)
    assert isinstance(result, MonomialIdeal)
    return result


def power_ideal(ring: Ring, variables: tuple[str, ...], power: int) -> MonomialIdeal:
    """The power of the prime on the given variables, minimally generated."""
    indices = [ring.index(v) for v in variables]
    gens = []
    for combo in itertools.combinations_with_replacement(indices, power):
        exps = [0] * len(ring)
        for i in combo:
            exps[i] += 1
        gens.append(Monomial(ring, tuple(exps)))
    result = minimalize(gens, ring)
    assert isinstance(result, MonomialIdeal)
    return result


def covering_primes(ideal: MonomialIdeal) -> list[Prime]:
    """Every variable-subset prime containing the ideal, by subset scan."""
    names = ideal.ring.names
    supports = [frozenset(g.support) for g in ideal.gens]
    out = []
    for size in range(1, len(names) + 1):
        for combo in itertools.combinations(names, size):
            chosen = frozenset(combo)
            if all(chosen & s for s in supports):
                out.append(Prime(ideal.ring, combo))
    return out
