"""
Free Group Words and Homomorphisms
Generators are indexed 1..r; a letter is a signed index, -i is the inverse of i.
"""

import re
import string
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..errors import InputError, LetterOutOfRange, RankMismatch

_INDEXED = re.compile(r"^([gG])(\d+)$")


def letter_name(letter: int) -> str:
    """a, b, c, ... for generators; capitals for inverses; g27/G27 past z"""
    index = abs(letter)
    if index <= 26:
        name = string.ascii_lowercase[index - 1]
        return name if letter > 0 else name.upper()
    return f"g{index}" if letter > 0 else f"G{index}"


def _letters_of(token: str) -> List[int]:
    match = _INDEXED.match(token)
    if match:
        index = int(match.group(2))
        return [index if match.group(1) == "g" else -index]
    letters = []
    for char in token:
        if char not in string.ascii_letters:
            raise InputError(f"not a generator letter: {char!r}")
        index = string.ascii_lowercase.index(char.lower()) + 1
        letters.append(index if char.islower() else -index)
    return letters


def reduce_letters(letters: Iterable[int]) -> Tuple[int, ...]:
    """Free reduction by a single stack pass"""
    stack: List[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    """Reduced word in the free group of the given rank"""
    rank: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.rank:
                raise LetterOutOfRange(letter, self.rank)
        for left, right in zip(self.letters, self.letters[1:]):
            if left == -right:
                raise ValueError("FreeWord letters must be freely reduced; use reduce()")

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank)

    @classmethod
    def generator(cls, rank: int, index: int) -> "FreeWord":
        return reduce(rank, [index])

    @classmethod
    def parse(cls, rank: int, text: str) -> "FreeWord":
        """Reads "a b A", "abA" or "g27 G3"; "1" and "" are the identity"""
        letters: List[int] = []
        for token in text.split():
            if token != "1":
                letters.extend(_letters_of(token))
        return reduce(rank, letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if other.rank != self.rank:
            raise RankMismatch(f"cannot multiply words of ranks {self.rank} and {other.rank}")
        return reduce(self.rank, self.letters + other.letters)

    def __invert__(self) -> "FreeWord":
        return FreeWord(self.rank, tuple(-letter for letter in reversed(self.letters)))

    def __pow__(self, n: int) -> "FreeWord":
        base = self if n >= 0 else ~self
        return reduce(self.rank, base.letters * abs(n))

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self) -> str:
        return " ".join(letter_name(letter) for letter in self.letters) or "1"


def reduce(rank: int, letters: Sequence[int]) -> FreeWord:
    """
    Freely reduce a raw letter sequence.

    Raises:
        LetterOutOfRange: a letter is 0 or exceeds the rank
    """
    for letter in letters:
        if letter == 0 or abs(letter) > rank:
            raise LetterOutOfRange(letter, rank)
    return FreeWord(rank, reduce_letters(letters))


@dataclass(frozen=True)
class FreeHom:
    """Homomorphism F(source_rank) -> F(target_rank) given on the basis"""
    source_rank: int
    target_rank: int
    images: Tuple[FreeWord, ...]

    def __post_init__(self):
        if len(self.images) != self.source_rank:
            raise RankMismatch(f"{self.source_rank} generators but {len(self.images)} images")
        for image in self.images:
            if image.rank != self.target_rank:
                raise RankMismatch(f"image {image} does not live in rank {self.target_rank}")

    @classmethod
    def identity(cls, rank: int) -> "FreeHom":
        return cls(rank, rank, tuple(FreeWord.generator(rank, i) for i in range(1, rank + 1)))

    @classmethod
    def trivial(cls, source_rank: int, target_rank: int) -> "FreeHom":
        return cls(source_rank, target_rank, (FreeWord.identity(target_rank),) * source_rank)

    @classmethod
    def projection(cls, source_rank: int, target_rank: int) -> "FreeHom":
        """Keeps the first target_rank generators and kills the rest"""
        if target_rank > source_rank:
            raise RankMismatch("a projection cannot increase the rank")
        images = [FreeWord.generator(target_rank, i) if i <= target_rank else FreeWord.identity(target_rank)
                  for i in range(1, source_rank + 1)]
        return cls(source_rank, target_rank, tuple(images))

    @classmethod
    def inclusion(cls, source_rank: int, target_rank: int) -> "FreeHom":
        if target_rank < source_rank:
            raise RankMismatch("an inclusion cannot decrease the rank")
        return cls(source_rank, target_rank,
                   tuple(FreeWord.generator(target_rank, i) for i in range(1, source_rank + 1)))

    @classmethod
    def from_texts(cls, source_rank: int, target_rank: int, texts: Sequence[str]) -> "FreeHom":
        return cls(source_rank, target_rank, tuple(FreeWord.parse(target_rank, t) for t in texts))

    def apply(self, word: FreeWord) -> FreeWord:
        if word.rank != self.source_rank:
            raise RankMismatch(f"word of rank {word.rank} given to a map from rank {self.source_rank}")
        letters: List[int] = []
        for letter in word.letters:
            image = self.images[abs(letter) - 1]
            letters.extend(image.letters if letter > 0 else (~image).letters)
        return FreeWord(self.target_rank, reduce_letters(letters))

    __call__ = apply

    @property
    def is_trivial(self) -> bool:
        return all(image.is_identity for image in self.images)

    def __str__(self) -> str:
        return ", ".join(f"{letter_name(i + 1)}->{image}" for i, image in enumerate(self.images))


def compose(f: FreeHom, g: FreeHom) -> FreeHom:
    """
    f after g.

    Args:
        f: Applied second
        g: Applied first; its target rank must equal f's source rank

    Returns:
        Map from g's source to f's target
    """
    if g.target_rank != f.source_rank:
        raise RankMismatch(f"cannot compose: g lands in rank {g.target_rank}, f starts at rank {f.source_rank}")
    return FreeHom(g.source_rank, f.target_rank, tuple(f.apply(image) for image in g.images))
