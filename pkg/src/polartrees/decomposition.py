"""Irreducible decomposition, minimal and associated primes, height.

The decomposition uses generator splitting: pick a generator that factors
into two coprime nonconstant parts u, v, and recurse on I+(u) and I+(v);
an ideal whose generators are all pure variable powers is irreducible.
Duplicate branches are merged and the final list is pruned to an irredundant
set, so the result is the unique irredundant irreducible decomposition.

Associated primes come in two independent flavours: radicals of the
irreducible components, and colon witnesses (primes of the form (I : u) for
a monomial u).  Tests play the two against each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .monomials import (
    Monomial,
    MonomialIdeal,
    Prime,
    Ring,
    RingMismatchError,
    intersect_all,
    minimalize,
    sort_primes,
)


@dataclass(frozen=True)
class IrreducibleComponent:
    """A pure-power ideal (x_i^a, ..., x_j^b); exponent 0 means absent."""

    ring: Ring
    exps: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.exps, tuple):
            object.__setattr__(self, "exps", tuple(self.exps))
        if len(self.exps) != len(self.ring):
            raise ValueError("one exponent per ring variable required")
        if not any(self.exps):
            raise ValueError("a component needs nonempty support")

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(n for n, e in zip(self.ring.names, self.exps) if e)

    @property
    def height(self) -> int:
        return sum(1 for e in self.exps if e)

    def radical(self) -> Prime:
        return Prime(self.ring, self.support)

    def as_ideal(self) -> MonomialIdeal:
        gens = []
        for i, e in enumerate(self.exps):
            if e:
                exps = [0] * len(self.ring)
                exps[i] = e
                gens.append(Monomial(self.ring, tuple(exps)))
        return MonomialIdeal(self.ring, tuple(gens))

    def __str__(self) -> str:
        parts = []
        for name, e in zip(self.ring.names, self.exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "(" + ", ".join(parts) + ")"


def _component_contains(outer: IrreducibleComponent, inner: IrreducibleComponent) -> bool:
    # inner ⊆ outer: every pure power of inner must lie in outer.
    for i, e in enumerate(inner.exps):
        if e and not (outer.exps[i] and outer.exps[i] <= e):
            return False
    return True


def _as_component(ideal: MonomialIdeal) -> IrreducibleComponent:
    exps = [0] * len(ideal.ring)
    for g in ideal.gens:
        (idx,) = (i for i, e in enumerate(g.exps) if e)
        exps[idx] = g.exps[idx]
    return IrreducibleComponent(ideal.ring, tuple(exps))


@lru_cache(maxsize=None)
def irreducible_decomposition(ideal: MonomialIdeal) -> tuple[IrreducibleComponent, ...]:
    """The unique irredundant irreducible decomposition, canonically sorted."""
    seen: set[MonomialIdeal] = set()
    components: set[IrreducibleComponent] = set()
    stack = [ideal]
    while stack:
        j = stack.pop()
        if j in seen:
            continue
        seen.add(j)
        mixed = next((g for g in j.gens if len(g.support) >= 2), None)
        if mixed is None:
            components.add(_as_component(j))
            continue
        first = j.ring.index(mixed.support[0])
        u_exps = [0] * len(j.ring)
        u_exps[first] = mixed.exps[first]
        u = Monomial(j.ring, tuple(u_exps))
        v = Monomial(j.ring, tuple(e - u for e, u in zip(mixed.exps, u_exps)))
        for extra in (u, v):
            bigger = minimalize(j.gens + (extra,), j.ring)
            assert isinstance(bigger, MonomialIdeal)
            stack.append(bigger)
    ordered = sorted(components, key=lambda c: c.exps)
    return _prune_irredundant(ordered, ideal)


def _prune_irredundant(
    components: list[IrreducibleComponent], ideal: MonomialIdeal
) -> tuple[IrreducibleComponent, ...]:
    # Inclusion pre-prune: a component containing another is always redundant.
    kept = [
        c
        for c in components
        if not any(o is not c and _component_contains(c, o) for o in components)
    ]
    if all(max(c.exps) <= 1 for c in kept):
        # All components prime: inclusion-minimal is already irredundant.
        return tuple(kept)
    i = 0
    while i < len(kept):
        rest = kept[:i] + kept[i + 1 :]
        if rest and intersect_all(c.as_ideal() for c in rest) == ideal:
            kept.pop(i)
        else:
            i += 1
    return tuple(kept)


def minimal_primes(ideal: MonomialIdeal) -> tuple[Prime, ...]:
    """Radicals of the components, minimalized under inclusion, sorted."""
    radicals = {c.radical() for c in irreducible_decomposition(ideal)}
    kept = [
        p
        for p in radicals
        if not any(q is not p and set(q.variables) < set(p.variables) for q in radicals)
    ]
    return sort_primes(kept)


def associated_primes(ideal: MonomialIdeal) -> frozenset[Prime]:
    """Radicals of all components of the irredundant decomposition."""
    return frozenset(c.radical() for c in irreducible_decomposition(ideal))


def height(ideal: MonomialIdeal) -> int:
    """Smallest number of variables in a minimal prime over the ideal."""
    return min(p.height for p in minimal_primes(ideal))


def is_unmixed_ideal(ideal: MonomialIdeal) -> bool:
    """True when every associated prime has the same height."""
    heights = {p.height for p in associated_primes(ideal)}
    return len(heights) == 1


def _prime_of_colon(
    gen_exps: list[tuple[int, ...]], u_exps: tuple[int, ...], ring: Ring
) -> Prime | None:
    """The prime (I : u) if the colon is prime, else None (or None on unit)."""
    quotients = []
    for g in gen_exps:
        q = tuple(a - b if a > b else 0 for a, b in zip(g, u_exps))
        if not any(q):
            return None  # u in I, colon is the unit ideal
        quotients.append(q)
    singles = set()
    for q in quotients:
        if sum(q) == 1:
            singles.add(q.index(1))
    if not singles:
        return None
    for q in quotients:
        if not any(q[i] for i in singles):
            return None
    return Prime(ring, tuple(ring.names[i] for i in sorted(singles)))


def quotient_associated_prime_witnesses(
    ideal: MonomialIdeal, module: MonomialIdeal | None = None
) -> dict[Prime, Monomial]:
    """Associated primes of module/ideal with one colon witness per prime.

    ``module`` defaults to the whole ring, giving the associated primes of
    the quotient by the ideal.  A prime p is associated exactly when
    p = (ideal : u) for some monomial u in the module; it suffices to search
    monomials dividing the lcm of all generators involved, because capping
    exponents there changes neither membership in the module nor the colon.
    """
    ring_ = ideal.ring
    if module is not None:
        if module.ring != ring_:
            raise RingMismatchError(f"{ideal} and {module} live in different rings")
        if not module.contains_ideal(ideal):
            raise ValueError("the ideal must sit inside the module")
        bound_gens = ideal.gens + module.gens
    else:
        bound_gens = ideal.gens
    bound = tuple(
        max(g.exps[i] for g in bound_gens) for i in range(len(ring_))
    )
    gen_exps = [g.exps for g in ideal.gens]
    module_exps = None if module is None else [g.exps for g in module.gens]
    witnesses: dict[Prime, Monomial] = {}
    for u in itertools.product(*(range(e + 1) for e in bound)):
        if module_exps is not None and not any(
            all(a <= b for a, b in zip(g, u)) for g in module_exps
        ):
            continue
        p = _prime_of_colon(gen_exps, u, ring_)
        if p is not None and p not in witnesses:
            witnesses[p] = Monomial(ring_, u)
    return witnesses


def quotient_associated_primes(
    ideal: MonomialIdeal, module: MonomialIdeal | None = None
) -> frozenset[Prime]:
    """Associated primes of module/ideal via exhaustive colon witnesses."""
    return frozenset(quotient_associated_prime_witnesses(ideal, module))
