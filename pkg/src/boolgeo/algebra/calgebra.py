# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Module for Boolean algebras with named constants.

The subalgebra C generated by the constants is described by its atoms, the
non-zero minterms of the generators. C is exactly the set of joins of those
atoms, so the atoms give both the materialised C of a finite algebra and a
membership test for the finite-cofinite algebra.
"""

from __future__ import annotations

__all__ = [
    "CAlgebra",
    "Minterm",
    "generate_subalgebra",
    "subalgebra_minterms",
]

import dataclasses
import functools
import itertools
import logging
from typing import TYPE_CHECKING, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from boolgeo.common import UnknownConstantError, UnsupportedAlgebraError
from boolgeo.common.config import DEFAULT_MATERIALISE_LIMIT, DEFAULT_TERM_DEPTH_BOUND

from .boolean_algebra import BooleanAlgebra, FiniteCofiniteAlgebra, format_element
from .elements import Element, FiniteCofiniteElement
from .families import ConstantFamily

if TYPE_CHECKING:
    from boolgeo.syntax.terms import Term


@dataclasses.dataclass(frozen=True)
class Minterm:
    """A non-zero meet of every generator or its complement.

    :ivar element: the value of the minterm, an atom of C.
    :vartype element: Element
    :ivar signs: for each generator, ``True`` if the generator itself (not its
        complement) takes part in the meet.
    :vartype signs: Tuple[bool, ...]
    """

    element: Element
    signs: Tuple[bool, ...]


def subalgebra_minterms(constants: Sequence[Element], one: Element) -> List[Minterm]:
    """Get the atoms of the subalgebra generated by ``constants``.

    The atoms are refined one generator at a time, so the work is bounded by
    the number of atoms rather than ``2**len(constants)``.

    :param constants: the generators.
    :param one: the top element of the algebra the generators live in.
    """
    minterms = [Minterm(element=one, signs=())]
    for constant in constants:
        refined: List[Minterm] = []
        for minterm in minterms:
            for sign, part in ((True, minterm.element & constant), (False, minterm.element & ~constant)):
                if not part.is_zero:
                    refined.append(Minterm(element=part, signs=minterm.signs + (sign,)))
        minterms = refined
    return minterms


def generate_subalgebra(
    constants: Sequence[Element],
    algebra: BooleanAlgebra,
    limit: int = DEFAULT_MATERIALISE_LIMIT,
) -> FrozenSet[Element]:
    """Get every element of the subalgebra generated by ``constants``.

    The result is the least set containing the constants, 0 and 1 that is
    closed under meet, join and complement: the set of all joins of the
    generated atoms.

    :param constants: the generators, all elements of ``algebra``.
    :param algebra: the algebra the generators belong to.
    :param limit: the largest number of elements that will be materialised.
    :raises UnsupportedAlgebraError: if the subalgebra has more than
        ``limit`` elements.
    """
    algebra.check_owns(*constants)
    atoms = [m.element for m in subalgebra_minterms(constants, algebra.one())]
    if 1 << len(atoms) > limit:
        raise UnsupportedAlgebraError(f"generated subalgebra has 2**{len(atoms)} elements, more than {limit}")

    elements = {algebra.zero()}
    for atom in atoms:
        elements |= {x | atom for x in elements}
    return frozenset(elements)


class CAlgebra:
    """A Boolean algebra together with named constants.

    Constants are either declared one by one or through schematic families
    (finite-cofinite algebra only). Instances are immutable after
    construction.
    """

    def __init__(
        self: CAlgebra,
        algebra: BooleanAlgebra,
        constants: Mapping[str, Element] | None = None,
        families: Sequence[ConstantFamily] = (),
        name: str = "",
        term_depth_bound: int = DEFAULT_TERM_DEPTH_BOUND,
        materialise_limit: int = DEFAULT_MATERIALISE_LIMIT,
        logger: logging.Logger | None = None,
    ) -> None:
        """Create the C-algebra.

        :param algebra: the host algebra B.
        :param constants: the declared constants, by name.
        :param families: schematic constant families.
        :param name: a label used in reports, e.g. the file or built-in name.
        :param term_depth_bound: the least number of family members used when
            deciding membership in a schematic C.
        :param materialise_limit: the largest C that is materialised.
        :param logger: the logger to use, defaults to this module's logger.
        """
        self.algebra = algebra
        self._constants: Dict[str, Element] = dict(constants or {})
        self.families: Tuple[ConstantFamily, ...] = tuple(families)
        self.name = name or algebra.carrier
        self.term_depth_bound = term_depth_bound
        self.materialise_limit = materialise_limit
        self.logger = logger or logging.getLogger(__name__)

        algebra.check_owns(*self._constants.values())
        if self.families and not isinstance(algebra, FiniteCofiniteAlgebra):
            raise UnsupportedAlgebraError("constant families need the finite-cofinite algebra")
        for constant_name in self._constants:
            for family in self.families:
                assert (
                    family.index_of(constant_name) is None
                ), f"constant '{constant_name}' clashes with {family.describe()}"

    def __repr__(self: CAlgebra) -> str:
        constants = sorted(self._constants)
        return f"CAlgebra(name={self.name!r}, algebra={self.algebra.carrier}, constants={constants})"

    @property
    def constants(self: CAlgebra) -> Dict[str, Element]:
        """Get a copy of the declared constants, excluding family members."""
        return {**self._constants}

    @property
    def is_schematic(self: CAlgebra) -> bool:
        """Check if an infinite family contributes constants."""
        return any(f.is_infinite for f in self.families)

    def has_constant(self: CAlgebra, name: str) -> bool:
        """Check if a constant name resolves in this algebra."""
        return name in self._constants or any(f.index_of(name) is not None for f in self.families)

    def resolve(self: CAlgebra, name: str) -> Element:
        """Get the element a constant name stands for.

        :raises UnknownConstantError: if the name is neither declared nor a
            member of a family.
        """
        if name in self._constants:
            return self._constants[name]
        for family in self.families:
            n = family.index_of(name)
            if n is not None:
                return family.member(n)
        raise UnknownConstantError(f"unknown constant '{name}' in algebra {self.name}")

    def family_of(self: CAlgebra, name: str) -> Optional[Tuple[ConstantFamily, int]]:
        """Get the family and index of a family constant name, if any."""
        for family in self.families:
            n = family.index_of(name)
            if n is not None:
                return family, n
        return None

    def generators(self: CAlgebra, prefix: int | None = None) -> List[Tuple[str, Element]]:
        """Get the named generators of C.

        :param prefix: the number of members taken from each infinite family;
            defaults to the term-depth bound.
        """
        count = self.term_depth_bound if prefix is None else prefix
        generators = list(self._constants.items())
        for family in self.families:
            indices = family.indices(None if not family.is_infinite else count)
            generators.extend((family.name(n), family.member(n)) for n in indices)
        return generators

    def _prefix_for(self: CAlgebra, xs: Iterable[Element]) -> int:
        payloads = [x.members for x in xs if isinstance(x, FiniteCofiniteElement) and x.members]
        largest = max((max(members) for members in payloads), default=0)
        return max(self.term_depth_bound, largest + 2)

    def minterms(self: CAlgebra, xs: Iterable[Element] = ()) -> Tuple[List[str], List[Minterm]]:
        """Get the generator names and the atoms of C relevant for the given elements.

        For a schematic C the family prefix is long enough to separate every
        natural listed by ``xs``.
        """
        prefix = self._prefix_for(xs) if self.is_schematic else None
        return self._minterms(prefix)

    @functools.lru_cache(maxsize=32)
    def _minterms(self: CAlgebra, prefix: int | None) -> Tuple[List[str], List[Minterm]]:
        generators = self.generators(prefix)
        self.logger.debug(f"computing atoms of C for {self.name} from {len(generators)} generators")
        names = [name for name, _ in generators]
        return names, subalgebra_minterms([g for _, g in generators], self.algebra.one())

    @property
    def c_size(self: CAlgebra) -> Optional[int]:
        """Get ``|C|``, or ``None`` when C is infinite."""
        if self.is_schematic:
            return None
        _, minterms = self._minterms(None)
        return 1 << len(minterms)

    @functools.cached_property
    def generated_c(self: CAlgebra) -> FrozenSet[Element]:
        """Get the materialised subalgebra C.

        :raises UnsupportedAlgebraError: if C is infinite or larger than the
            materialisation limit.
        """
        if self.is_schematic:
            raise UnsupportedAlgebraError(f"C of {self.name} is infinite and cannot be materialised")
        generators = [g for _, g in self.generators()]
        return generate_subalgebra(generators, self.algebra, limit=self.materialise_limit)

    def c_atoms(self: CAlgebra) -> List[Element]:
        """Get the atoms of a finite C."""
        if self.is_schematic:
            raise UnsupportedAlgebraError(f"C of {self.name} is infinite and has no finite atom list")
        _, minterms = self._minterms(None)
        return [m.element for m in minterms]

    def contains(self: CAlgebra, x: Element) -> bool:
        """Check if an element of B belongs to C.

        An element is in C iff it does not split any atom of C. For a schematic
        C the atoms come from a family prefix covering the element's payload.
        """
        if not self.algebra.owns(x):
            return False
        _, minterms = self.minterms([x])
        return all((x & m.element).is_zero or (x & m.element) == m.element for m in minterms)

    def express(self: CAlgebra, x: Element) -> Term:
        """Write an element of C as a join of constant minterms.

        :raises ValueError: if the element is not in C.
        """
        # the syntax package depends on this one
        from boolgeo.syntax.terms import Const, Join, Meet, Not, One, Term, Zero

        self.algebra.check_owns(x)
        if x.is_zero:
            return Zero()
        if x.is_one:
            return One()
        if not self.contains(x):
            raise ValueError(f"{format_element(x)} is not an element of C in {self.name}")

        names, minterms = self.minterms([x])
        terms: List[Term] = []
        for minterm in minterms:
            if not minterm.element <= x:
                continue
            literals: List[Term] = [
                Const(name) if sign else Not(Const(name)) for name, sign in zip(names, minterm.signs)
            ]
            terms.append(functools.reduce(Meet, literals[1:], literals[0]))
        return functools.reduce(Join, terms[1:], terms[0])

    def chain_evidence(self: CAlgebra, length: int) -> List[Element]:
        """Get a strictly increasing chain of ``length`` elements of C.

        The chain is the running join of the atoms generated by the first
        members of the infinite families.
        """
        assert self.is_schematic, "only an infinite C has arbitrarily long chains"
        _, minterms = self._minterms(length + 2)
        finite_atoms = [
            m.element
            for m in minterms
            if isinstance(m.element, FiniteCofiniteElement) and not m.element.cofinite
        ]
        atoms = sorted(finite_atoms, key=lambda e: e.sort_key)
        assert len(atoms) >= length, f"only {len(atoms)} finite atoms found for a chain of {length}"
        chain = list(itertools.accumulate(atoms[:length], lambda acc, a: acc | a))
        assert all(a.leq(b) and a != b for a, b in zip(chain, chain[1:])), "chain is not strictly increasing"
        return chain
