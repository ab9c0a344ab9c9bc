"""
Normal Form Groups
Compositional normal forms for the constructors the Cayley oracle supports
"""

from abc import ABC, abstractmethod
from typing import Hashable, List, Sequence, Tuple

from ..errors import UnsupportedConstructor
from ..free.words import letter_name
from ..groups.expr import (
    DirectProduct, FiniteCyclic, FiniteTable, Free, FreeProduct, GroupExpr, Int, Surface, Trivial,
)
from ..groups.normalize import normalize

Token = Hashable


class NormalFormGroup(ABC):
    """
    A group with canonical element tokens and a generating set closed under
    inverses; generator i has inverse generator inverse(i).
    """

    identity: Token = None
    generators: Tuple[str, ...] = ()

    @abstractmethod
    def inverse(self, generator: int) -> int:
        pass

    @abstractmethod
    def act(self, element: Token, generator: int) -> Token:
        """Right multiplication by a generator"""
        pass

    def show(self, element: Token) -> str:
        return str(element)

    def neighbors(self, element: Token) -> List[Tuple[int, Token]]:
        return [(g, self.act(element, g)) for g in range(len(self.generators))]


class TrivialNF(NormalFormGroup):
    identity = 0
    generators = ()

    def inverse(self, generator: int) -> int:
        raise IndexError("the trivial group has no generators")

    def act(self, element, generator):
        raise IndexError("the trivial group has no generators")


class CyclicNF(NormalFormGroup):
    """Z/n with generators 1 and -1 (a single involution when n = 2)"""

    identity = 0

    def __init__(self, n: int):
        self.n = n
        self.generators = ("c",) if n == 2 else ("c", "C")

    def inverse(self, generator: int) -> int:
        return generator if self.n == 2 else 1 - generator

    def act(self, element: int, generator: int) -> int:
        step = 1 if generator == 0 else -1
        return (element + step) % self.n


class TableNF(NormalFormGroup):
    """A finite table group generated by all its non-identity elements"""

    def __init__(self, group: FiniteTable):
        self.group = group
        self.members = tuple(e for e in range(group.order) if e != group.identity)
        self.generators = tuple(group.elements[e] for e in self.members)

    @property
    def identity(self) -> int:
        return self.group.identity

    def inverse(self, generator: int) -> int:
        return self.members.index(self.group.inverse(self.members[generator]))

    def act(self, element: int, generator: int) -> int:
        return self.group.multiply(element, self.members[generator])

    def show(self, element: int) -> str:
        return self.group.elements[element]


class IntNF(NormalFormGroup):
    identity = 0
    generators = ("t", "T")

    def inverse(self, generator: int) -> int:
        return 1 - generator

    def act(self, element: int, generator: int) -> int:
        return element + (1 if generator == 0 else -1)


class FreeNF(NormalFormGroup):
    """Reduced words as tuples of signed letters"""

    identity = ()

    def __init__(self, rank: int):
        self.rank = rank
        self.letters = tuple(s * i for i in range(1, rank + 1) for s in (1, -1))
        self.generators = tuple(letter_name(x) for x in self.letters)

    def inverse(self, generator: int) -> int:
        return generator ^ 1

    def act(self, element: Tuple[int, ...], generator: int) -> Tuple[int, ...]:
        letter = self.letters[generator]
        if element and element[-1] == -letter:
            return element[:-1]
        return element + (letter,)

    def show(self, element: Tuple[int, ...]) -> str:
        return "".join(letter_name(x) for x in element) or "1"


class _Composite(NormalFormGroup):
    def __init__(self, factors: Sequence[NormalFormGroup]):
        self.factors = tuple(factors)
        self.owner: List[Tuple[int, int]] = []
        names = []
        for position, factor in enumerate(self.factors):
            for g, name in enumerate(factor.generators):
                self.owner.append((position, g))
                names.append(f"{name}{position}" if len(self.factors) > 1 else name)
        self.generators = tuple(names)

    def inverse(self, generator: int) -> int:
        position, g = self.owner[generator]
        return self.owner.index((position, self.factors[position].inverse(g)))


class ProductNF(_Composite):
    """Tuples of factor tokens"""

    @property
    def identity(self) -> Tuple:
        return tuple(f.identity for f in self.factors)

    def act(self, element: Tuple, generator: int) -> Tuple:
        position, g = self.owner[generator]
        moved = self.factors[position].act(element[position], g)
        return element[:position] + (moved,) + element[position + 1:]

    def show(self, element: Tuple) -> str:
        return "(" + ", ".join(f.show(e) for f, e in zip(self.factors, element)) + ")"


class FreeProductNF(_Composite):
    """Alternating syllables (factor, non-identity token)"""

    identity = ()

    def act(self, element: Tuple, generator: int) -> Tuple:
        position, g = self.owner[generator]
        factor = self.factors[position]
        if element and element[-1][0] == position:
            merged = factor.act(element[-1][1], g)
            if merged == factor.identity:
                return element[:-1]
            return element[:-1] + ((position, merged),)
        return element + ((position, factor.act(factor.identity, g)),)

    def show(self, element: Tuple) -> str:
        return "*".join(f"{self.factors[p].show(t)}" for p, t in element) or "1"


def realize(expr: GroupExpr) -> NormalFormGroup:
    """
    Normal form group of an expression.

    Args:
        expr: Built from Trivial, Zn, finite tables, Z, Fn, Sg(1), products and free products

    Returns:
        NormalFormGroup generated by the union of the factor generators

    Raises:
        UnsupportedConstructor: any other constructor occurs
    """
    expr = normalize(expr)
    if isinstance(expr, Trivial):
        return TrivialNF()
    if isinstance(expr, FiniteCyclic):
        return CyclicNF(expr.n)
    if isinstance(expr, FiniteTable):
        return TableNF(expr)
    if isinstance(expr, Int):
        return IntNF()
    if isinstance(expr, Free):
        return FreeNF(expr.rank)
    if isinstance(expr, Surface) and expr.genus == 1 and expr.orientable:
        return ProductNF([IntNF(), IntNF()])
    if isinstance(expr, DirectProduct):
        return ProductNF([realize(f) for f in expr.factors])
    if isinstance(expr, FreeProduct):
        return FreeProductNF([realize(f) for f in expr.factors])
    raise UnsupportedConstructor(type(expr).__name__)
